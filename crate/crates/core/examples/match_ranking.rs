//! Rank ranges whose hidden states resemble a selection.
//!
//! cargo run -p statescope --example match_ranking

use statescope::engine::{match_heatmap, run_match, MatchParams, MinOverlap, SelectionSpec};
use statescope::StateMatrix;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let states = StateMatrix::from_columns(
        "h",
        &[
            vec![0.9, 0.9, 0.1, 0.1, 0.9, 0.9, 0.1, 0.1],
            vec![0.9, 0.9, 0.1, 0.1, 0.9, 0.1, 0.1, 0.1],
        ],
    )?;
    let spec = SelectionSpec::new("h", 0, 1, 0.5);

    for include_query in [false, true] {
        let params = MatchParams { min_overlap: Some(MinOverlap::Count(1)), include_query, ..Default::default() };
        let out = run_match(&states, &spec, &params)?;
        println!("S1 = {}, effective params {:?}", out.s1, out.params);
        println!("  rank  range   overlap union  heatmap");
        for (i, r) in out.results.iter().enumerate() {
            let heat = match_heatmap(&states, &out.s1, r.range, spec.threshold);
            println!(
                "  {:<5} [{},{}]   {:<7} {:<6} {heat:?}",
                i + 1,
                r.range.start,
                r.range.end,
                r.overlap,
                r.union
            );
        }
    }
    Ok(())
}
