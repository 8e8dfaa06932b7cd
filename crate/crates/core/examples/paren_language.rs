//! Generate the parenthesis counting language, select a deeply nested span
//! and check that every match is nested just as deeply.
//!
//! cargo run -p statescope --release --example paren_language

use statescope::engine::{run_match, MatchParams, SelectionSpec};
use statescope::synth::{gen_paren, level_spans, oracle_states, MAX_LEVEL};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = gen_paren(42, 10_000)?;
    let levels = corpus.level_values();
    println!("first tokens: {}", corpus.tokens.window(0, 39).join(" "));

    let states = oracle_states(&levels, 20, 42)?;
    let spans = level_spans(&levels, MAX_LEVEL);
    let (a, b) = spans[0];
    println!("{} spans at level {MAX_LEVEL}; selecting [{a},{b}]", spans.len());

    let out = run_match(&states, &SelectionSpec::new("states", a, b, 0.5), &MatchParams::default())?;
    let deep = out
        .results
        .iter()
        .filter(|r| (r.range.start..=r.range.end).all(|t| levels[t] >= MAX_LEVEL))
        .count();
    println!("S1 = {}; {} candidates scored", out.s1, out.candidates);
    println!("{deep} of {} matches stay at level >= {MAX_LEVEL}", out.results.len());
    for r in out.results.iter().take(5) {
        println!("  [{},{}] {}", r.range.start, r.range.end, corpus.tokens.window(r.range.start, r.range.end).join(" "));
    }
    Ok(())
}
