//! Write a dataset directory, load it through its YAML config and show how
//! validation reports problems without stopping at the first one.
//!
//! cargo run -p statescope --example dataset_config

use std::fs;

use statescope::dataset::{discover_configs, load_dataset, save_dataset, validate_dataset, DatasetConfig};
use statescope::synth::paren_dataset;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let root = tempfile::tempdir()?;
    let cfg = save_dataset(&paren_dataset(7, 300, 6)?, root.path().join("paren"))?;
    println!("{}", fs::read_to_string(&cfg)?);

    let ds = load_dataset(&cfg)?;
    println!(
        "loaded {:?}: T={}, sources={:?}, tracks={:?}",
        ds.name(),
        ds.num_timesteps(),
        ds.sources().iter().map(|s| (s.source_id(), s.num_states())).collect::<Vec<_>>(),
        ds.tracks().iter().map(|t| t.name()).collect::<Vec<_>>()
    );

    // an unknown key is a warning; a truncated token file is an error
    let mut config = DatasetConfig::from_file(&cfg)?;
    config.name = "broken".into();
    config.words = "words_short.txt".into();
    let mut yaml = config.to_yaml();
    yaml.push_str("maintainer: someone\n");
    let broken = root.path().join("paren").join("broken.yaml");
    fs::write(&broken, yaml)?;
    let dir = root.path().join("paren");
    let text = fs::read_to_string(dir.join("words.txt"))?;
    fs::write(dir.join("words_short.txt"), text.lines().take(299).collect::<Vec<_>>().join("\n"))?;

    for path in discover_configs(root.path())? {
        let report = validate_dataset(&path);
        println!("{}: valid={}", path.strip_prefix(root.path())?.display(), report.is_valid());
        for e in &report.entries {
            println!("  {:?} {}: {}", e.severity, e.kind, e.message);
        }
    }
    Ok(())
}
