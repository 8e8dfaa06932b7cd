//! Import a whitespace text matrix, write the native container and read it
//! back bit for bit.
//!
//! cargo run -p statescope --example native_format

use statescope::dataset::format::{decode_header, HEADER_LEN};
use statescope::dataset::{load_state_matrix, parse_text_matrix, save_state_matrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = parse_text_matrix("cell", "0.5 -1.0 0.25\n2.0 0.0 -0.125\n", 2, 3)?;
    let dir = tempfile::tempdir()?;
    let path = dir.path().join("cell.bin");
    save_state_matrix(&m, &path)?;

    let bytes = std::fs::read(&path)?;
    let header = decode_header(&path, &bytes[..HEADER_LEN])?;
    println!("{} bytes, header {header:?}", bytes.len());

    let back = load_state_matrix(&path)?;
    let identical = back.values().iter().zip(m.values()).all(|(a, b)| a.to_bits() == b.to_bits());
    println!("reloaded {}x{}, bitwise identical: {identical}", back.num_timesteps(), back.num_states());

    match parse_text_matrix("cell", "0.5 x\n", 1, 2) {
        Err(e) => println!("malformed input: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
