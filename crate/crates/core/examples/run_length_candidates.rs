//! Run-length encode each selected state and list the candidate ranges the
//! ranker will score, showing how few of all ranges survive.
//!
//! cargo run -p statescope --example run_length_candidates

use statescope::engine::{candidate_count, candidate_ranges, state_runs, StateSet};
use statescope::StateMatrix;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let states = StateMatrix::from_columns(
        "h",
        &[vec![0.9, 0.9, 0.9, 0.1], vec![0.1, 0.9, 0.9, 0.9]],
    )?;
    for c in 0..states.num_states() {
        let runs: Vec<String> = state_runs(&states, c, 0.5).iter().map(|r| format!("[{},{}]", r.start, r.end)).collect();
        println!("state {c} runs: {}", runs.join(" "));
    }

    let s1 = StateSet::from(vec![0, 1]);
    for min_overlap in [2, 1] {
        let ranges: Vec<String> = candidate_ranges(&states, &s1, 0.5, min_overlap, 4)?
            .iter()
            .map(|r| format!("[{},{}]", r.start, r.end))
            .collect();
        println!("min_overlap={min_overlap}: {}", ranges.join(" "));
    }

    // a sparse long sequence: one state on in short bursts
    let t: usize = 100_000;
    let column: Vec<f32> = (0..t).map(|i| if i % 1000 < 5 { 1.0 } else { 0.0 }).collect();
    let sparse = StateMatrix::from_columns("h", &[column])?;
    let n = candidate_count(&sparse, &StateSet::from(vec![0]), 0.5, 1, 12)?;
    println!("T={t}: {n} candidates out of {} ranges", t * (t + 1) / 2);
    Ok(())
}
