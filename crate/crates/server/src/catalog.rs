use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::Serialize;
use statescope::dataset::{
    discover_configs, load_dataset, validate_dataset, Severity, TrackKind, ValidationEntry,
};
use statescope::{Dataset, DatasetError};

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("data root {root} is unreadable: {source}")]
    UnreadableRoot {
        root: PathBuf,
        #[source]
        source: DatasetError,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Issue {
    pub kind: String,
    pub message: String,
}

impl From<&ValidationEntry> for Issue {
    fn from(e: &ValidationEntry) -> Self {
        Self { kind: e.kind.clone(), message: e.message.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SourceInfo {
    pub source_id: String,
    pub states: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrackInfo {
    pub name: String,
    pub kind: &'static str,
    pub labels: BTreeMap<i32, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DatasetInfo {
    pub name: String,
    pub description: String,
    pub config: String,
    pub timesteps: usize,
    pub sources: Vec<SourceInfo>,
    pub tracks: Vec<TrackInfo>,
    pub warnings: Vec<Issue>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvalidConfig {
    pub config: String,
    pub errors: Vec<Issue>,
}

/// Every config under a data root, loaded once and shared read-only.
#[derive(Debug, Default)]
pub struct Catalog {
    root: PathBuf,
    datasets: BTreeMap<String, Arc<Dataset>>,
    info: Vec<DatasetInfo>,
    invalid: Vec<InvalidConfig>,
}

fn display_path(root: &Path, path: &Path) -> String {
    path.strip_prefix(root).unwrap_or(path).display().to_string()
}

fn describe(ds: &Dataset, config: String, warnings: Vec<Issue>) -> DatasetInfo {
    DatasetInfo {
        name: ds.name().to_string(),
        description: ds.description().to_string(),
        config,
        timesteps: ds.num_timesteps(),
        sources: ds
            .sources()
            .iter()
            .map(|s| SourceInfo { source_id: s.source_id().to_string(), states: s.num_states() })
            .collect(),
        tracks: ds
            .tracks()
            .iter()
            .map(|t| TrackInfo {
                name: t.name().to_string(),
                kind: match t.kind() {
                    TrackKind::Categorical => "categorical",
                    TrackKind::Scalar => "scalar",
                },
                labels: t.labels().clone(),
            })
            .collect(),
        warnings,
    }
}

impl Catalog {
    /// Discovers and loads every config under `root`. Broken configs are
    /// recorded with their validation errors rather than failing the load.
    pub fn load(root: impl AsRef<Path>) -> Result<Self, CatalogError> {
        let root = root.as_ref();
        let configs = discover_configs(root)
            .map_err(|source| CatalogError::UnreadableRoot { root: root.to_path_buf(), source })?;
        let mut catalog = Catalog { root: root.to_path_buf(), ..Default::default() };
        for path in configs {
            let shown = display_path(root, &path);
            let report = validate_dataset(&path);
            let warnings: Vec<Issue> = report.warnings().map(Issue::from).collect();
            if !report.is_valid() {
                let errors = report.entries.iter().filter(|e| e.severity == Severity::Error).map(Issue::from).collect();
                catalog.invalid.push(InvalidConfig { config: shown, errors });
                continue;
            }
            match load_dataset(&path) {
                Ok(ds) => catalog.insert(ds, shown, warnings),
                Err(e) => catalog.invalid.push(InvalidConfig {
                    config: shown,
                    errors: vec![Issue { kind: e.kind().to_string(), message: e.to_string() }],
                }),
            }
        }
        Ok(catalog)
    }

    /// A catalog over in-memory datasets, for embedding and tests.
    pub fn from_datasets(datasets: impl IntoIterator<Item = Dataset>) -> Self {
        let mut catalog = Catalog::default();
        for ds in datasets {
            let name = ds.name().to_string();
            catalog.insert(ds, name, Vec::new());
        }
        catalog
    }

    fn insert(&mut self, ds: Dataset, config: String, warnings: Vec<Issue>) {
        if self.datasets.contains_key(ds.name()) {
            self.invalid.push(InvalidConfig {
                config,
                errors: vec![Issue {
                    kind: "DuplicateDataset".into(),
                    message: format!("dataset name {:?} is already taken", ds.name()),
                }],
            });
            return;
        }
        self.info.push(describe(&ds, config, warnings));
        self.datasets.insert(ds.name().to_string(), Arc::new(ds));
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn get(&self, name: &str) -> Option<&Arc<Dataset>> {
        self.datasets.get(name)
    }

    pub fn datasets(&self) -> &[DatasetInfo] {
        &self.info
    }

    pub fn invalid(&self) -> &[InvalidConfig] {
        &self.invalid
    }
}
