//! Declarative YAML dataset configuration.
//!
//! ```yaml
//! name: parens
//! description: synthetic counting language
//! states:
//!   - source_id: cell
//!     path: states.bin
//! words: words.txt
//! dict: dict.txt
//! annotations:
//!   - name: level
//!     path: level.bin
//!     labels: level_labels.txt
//! ```
//!
//! Relative paths resolve against the directory holding the config file.
//! Unknown keys are kept so validation can warn about them.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::error::{DatasetError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateSourceConfig {
    pub source_id: String,
    pub path: PathBuf,
    #[serde(flatten, skip_serializing)]
    pub extra: BTreeMap<String, serde_yaml::Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnnotationConfig {
    pub name: String,
    pub path: PathBuf,
    /// Label map file. Without it the track is scalar.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<PathBuf>,
    #[serde(flatten, skip_serializing)]
    pub extra: BTreeMap<String, serde_yaml::Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetConfig {
    pub name: String,
    #[serde(default)]
    pub description: String,
    pub states: Vec<StateSourceConfig>,
    pub words: PathBuf,
    pub dict: PathBuf,
    #[serde(default)]
    pub annotations: Vec<AnnotationConfig>,
    #[serde(flatten, skip_serializing)]
    pub extra: BTreeMap<String, serde_yaml::Value>,
}

impl DatasetConfig {
    pub fn parse(path: &Path, text: &str) -> Result<Self> {
        serde_yaml::from_str(text).map_err(|e| DatasetError::Config {
            path: path.to_owned(),
            message: e.to_string(),
        })
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| DatasetError::io(path, e))?;
        Self::parse(path, &text)
    }

    pub fn to_yaml(&self) -> String {
        serde_yaml::to_string(self).expect("config serializes")
    }

    /// Dotted paths of keys this version does not understand.
    pub fn unknown_keys(&self) -> Vec<String> {
        let mut keys: Vec<String> = self.extra.keys().cloned().collect();
        for (i, s) in self.states.iter().enumerate() {
            keys.extend(s.extra.keys().map(|k| format!("states[{i}].{k}")));
        }
        for (i, a) in self.annotations.iter().enumerate() {
            keys.extend(a.extra.keys().map(|k| format!("annotations[{i}].{k}")));
        }
        keys
    }
}

pub(crate) fn resolve(base: &Path, path: &Path) -> PathBuf {
    if path.is_absolute() {
        path.to_owned()
    } else {
        base.join(path)
    }
}
