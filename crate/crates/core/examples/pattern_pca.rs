//! Turn labelled ranges into binary on/off patterns and project them with
//! PCA, printing the CSV a plotting tool would read.
//!
//! cargo run -p statescope --example pattern_pca

use statescope::analysis::{collect_patterns, pca_project, LabeledRange};
use statescope::synth::{gen_paren, level_spans, oracle_states};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = gen_paren(11, 3_000)?;
    let levels = corpus.level_values();
    let states = oracle_states(&levels, 10, 11)?;

    // maximal spans at levels 1 to 3, labelled by level; at threshold 0 the
    // noise states add scatter within each class
    let mut ranges = Vec::new();
    for level in 1u8..=3 {
        for (a, b) in level_spans(&levels, level).into_iter().take(6) {
            ranges.push(LabeledRange::new(a, b, format!("L{level}")));
        }
    }
    let patterns = collect_patterns(&states, &ranges, 0.0)?;
    let proj = pca_project(&patterns, 2)?;
    println!("explained variance ratio: {:?}", proj.explained_variance_ratio);
    print!("{}", proj.to_csv());
    Ok(())
}
