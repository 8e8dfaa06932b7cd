//! Select the hidden states that stay on across a range, with and without
//! the pattern-plot limits.
//!
//! cargo run -p statescope --example select_states

use statescope::engine::{on_count, select_states, SelectionSpec};
use statescope::StateMatrix;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let states = StateMatrix::from_columns(
        "layer1",
        &[
            vec![0.1, 0.9, 0.8, 0.2],
            vec![0.7, 0.9, 0.6, 0.7],
            vec![0.1, 0.2, 0.3, 0.1],
        ],
    )?;

    let spec = SelectionSpec::new("layer1", 1, 2, 0.5);
    let open = select_states(&states, &spec)?;
    println!("on throughout [1,2] at 0.5: {open}");

    // state 1 is already on at t=0, so a left limit drops it
    let limited = select_states(&states, &spec.clone().with_limits(true, false))?;
    println!("with left limit:           {limited}");

    let higher = select_states(&states, &SelectionSpec { threshold: 0.85, ..spec })?;
    println!("threshold raised to 0.85:  {higher}");

    println!("selected states on per step: {:?}", on_count(&states, &open, 0.5));
    Ok(())
}
