use std::collections::HashSet;
use std::path::{Path, PathBuf};

use walkdir::WalkDir;

use super::config::{resolve, AnnotationConfig, DatasetConfig, StateSourceConfig};
use super::error::{DatasetError, Result};
use super::format::{load_state_matrix, load_track_ids, save_state_matrix, save_track_ids};
use super::matrix::StateMatrix;
use super::tokens::{load_tokens, load_vocabulary, save_tokens, TokenSequence};
use super::track::{load_labels, save_labels, AnnotationTrack, TrackKind};

/// A fully validated dataset: every source, the tokens and every track share
/// the same number of timesteps.
#[derive(Debug, Clone)]
pub struct Dataset {
    name: String,
    description: String,
    sources: Vec<StateMatrix>,
    tokens: TokenSequence,
    tracks: Vec<AnnotationTrack>,
}

impl Dataset {
    pub fn new(
        name: impl Into<String>,
        description: impl Into<String>,
        tokens: TokenSequence,
        sources: Vec<StateMatrix>,
        tracks: Vec<AnnotationTrack>,
    ) -> Result<Self> {
        let errors = cross_validate(&tokens, &sources, &tracks);
        if let Some(e) = errors.into_iter().next() {
            return Err(e);
        }
        Ok(Self {
            name: name.into(),
            description: description.into(),
            sources,
            tokens,
            tracks,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn num_timesteps(&self) -> usize {
        self.tokens.len()
    }

    pub fn tokens(&self) -> &TokenSequence {
        &self.tokens
    }

    pub fn sources(&self) -> &[StateMatrix] {
        &self.sources
    }

    pub fn source(&self, source_id: &str) -> Option<&StateMatrix> {
        self.sources.iter().find(|s| s.source_id() == source_id)
    }

    pub fn tracks(&self) -> &[AnnotationTrack] {
        &self.tracks
    }

    pub fn track(&self, name: &str) -> Option<&AnnotationTrack> {
        self.tracks.iter().find(|t| t.name() == name)
    }
}

fn cross_validate(
    tokens: &TokenSequence,
    sources: &[StateMatrix],
    tracks: &[AnnotationTrack],
) -> Vec<DatasetError> {
    let mut errors = Vec::new();
    let t = tokens.len();
    if t == 0 {
        errors.push(DatasetError::InvalidShape { rows: 0, cols: 1 });
    }
    let mut ids = HashSet::new();
    for s in sources {
        if !ids.insert(s.source_id()) {
            errors.push(DatasetError::DuplicateSourceId(s.source_id().to_owned()));
        }
        if s.num_timesteps() != t {
            errors.push(DatasetError::LengthMismatch {
                what: format!("state source {:?}", s.source_id()),
                expected: t,
                actual: s.num_timesteps(),
            });
        }
    }
    let mut names = HashSet::new();
    for tr in tracks {
        if !names.insert(tr.name()) {
            errors.push(DatasetError::DuplicateTrack(tr.name().to_owned()));
        }
        if tr.len() != t {
            errors.push(DatasetError::LengthMismatch {
                what: format!("annotation track {:?}", tr.name()),
                expected: t,
                actual: tr.len(),
            });
        }
    }
    errors
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationEntry {
    pub severity: Severity,
    /// Error variant name (see [`DatasetError::kind`]) or `UnknownKey`.
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub config: PathBuf,
    pub entries: Vec<ValidationEntry>,
}

impl ValidationReport {
    pub fn errors(&self) -> impl Iterator<Item = &ValidationEntry> {
        self.entries.iter().filter(|e| e.severity == Severity::Error)
    }

    pub fn warnings(&self) -> impl Iterator<Item = &ValidationEntry> {
        self.entries.iter().filter(|e| e.severity == Severity::Warning)
    }

    pub fn is_valid(&self) -> bool {
        self.errors().next().is_none()
    }
}

/// Runs every check instead of stopping at the first failure. Load and
/// validate share this path, so a clean report implies a successful load.
fn load_collecting(config_path: &Path) -> (Option<Dataset>, Vec<DatasetError>, Vec<String>) {
    let config = match DatasetConfig::from_file(config_path) {
        Ok(c) => c,
        Err(e) => return (None, vec![e], Vec::new()),
    };
    let warnings = config.unknown_keys();
    let base = config_path.parent().unwrap_or(Path::new("."));
    let mut errors = Vec::new();

    if config.states.is_empty() {
        errors.push(DatasetError::Config {
            path: config_path.to_owned(),
            message: "no state sources listed".into(),
        });
    }

    let tokens = load_vocabulary(resolve(base, &config.dict))
        .and_then(|vocab| load_tokens(resolve(base, &config.words), vocab));
    let tokens = match tokens {
        Ok(t) => Some(t),
        Err(e) => {
            errors.push(e);
            None
        }
    };

    let mut sources = Vec::new();
    for StateSourceConfig { source_id, path, .. } in &config.states {
        match load_state_matrix(resolve(base, path)) {
            Ok(mut m) => {
                m.set_source_id(source_id.clone());
                sources.push(m);
            }
            Err(e) => errors.push(e),
        }
    }

    let mut tracks = Vec::new();
    for AnnotationConfig { name, path, labels, .. } in &config.annotations {
        let track = load_track_ids(resolve(base, path)).and_then(|ids| match labels {
            Some(l) => load_labels(resolve(base, l))
                .and_then(|labels| AnnotationTrack::categorical(name.clone(), ids, labels)),
            None => Ok(AnnotationTrack::scalar(name.clone(), ids)),
        });
        match track {
            Ok(t) => tracks.push(t),
            Err(e) => errors.push(e),
        }
    }

    // Duplicate ids are config-level errors even when files failed to load.
    let mut ids = HashSet::new();
    for s in &config.states {
        if !ids.insert(&s.source_id) {
            errors.push(DatasetError::DuplicateSourceId(s.source_id.clone()));
        }
    }
    let mut names = HashSet::new();
    for a in &config.annotations {
        if !names.insert(&a.name) {
            errors.push(DatasetError::DuplicateTrack(a.name.clone()));
        }
    }

    let Some(tokens) = tokens else {
        return (None, errors, warnings);
    };
    errors.extend(
        cross_validate(&tokens, &sources, &tracks)
            .into_iter()
            .filter(|e| !matches!(e, DatasetError::DuplicateSourceId(_) | DatasetError::DuplicateTrack(_))),
    );
    if !errors.is_empty() {
        return (None, errors, warnings);
    }
    let dataset = Dataset {
        name: config.name,
        description: config.description,
        sources,
        tokens,
        tracks,
    };
    (Some(dataset), errors, warnings)
}

pub fn load_dataset(config_path: impl AsRef<Path>) -> Result<Dataset> {
    let (dataset, errors, _) = load_collecting(config_path.as_ref());
    match dataset {
        Some(d) => Ok(d),
        None => Err(errors.into_iter().next().expect("failed load records an error")),
    }
}

pub fn validate_dataset(config_path: impl AsRef<Path>) -> ValidationReport {
    let config_path = config_path.as_ref();
    let (_, errors, warnings) = load_collecting(config_path);
    let mut entries: Vec<ValidationEntry> = errors
        .iter()
        .map(|e| ValidationEntry {
            severity: Severity::Error,
            kind: e.kind().to_owned(),
            message: e.to_string(),
        })
        .collect();
    entries.extend(warnings.into_iter().map(|k| ValidationEntry {
        severity: Severity::Warning,
        kind: "UnknownKey".to_owned(),
        message: format!("unknown config key {k:?} ignored"),
    }));
    ValidationReport {
        config: config_path.to_owned(),
        entries,
    }
}

/// Finds `*.yaml` / `*.yml` configs in `root` and its immediate
/// subdirectories, sorted by path.
pub fn discover_configs(root: impl AsRef<Path>) -> Result<Vec<PathBuf>> {
    let root = root.as_ref();
    std::fs::read_dir(root).map_err(|e| DatasetError::io(root, e))?;
    let mut found = Vec::new();
    for entry in WalkDir::new(root).min_depth(1).max_depth(2).sort_by_file_name() {
        let entry = entry.map_err(|e| {
            let path = e.path().unwrap_or(root).to_owned();
            DatasetError::io(path, e.into())
        })?;
        let is_yaml = entry
            .path()
            .extension()
            .is_some_and(|ext| ext == "yaml" || ext == "yml");
        if entry.file_type().is_file() && is_yaml {
            found.push(entry.into_path());
        }
    }
    found.sort();
    Ok(found)
}

/// Writes `dataset` under `dir` with a `config.yaml`, using fixed file
/// names. Returns the config path.
pub fn save_dataset(dataset: &Dataset, dir: impl AsRef<Path>) -> Result<PathBuf> {
    let dir = dir.as_ref();
    std::fs::create_dir_all(dir).map_err(|e| DatasetError::io(dir, e))?;
    save_tokens(dataset.tokens(), dir.join("words.txt"), dir.join("dict.txt"))?;

    let mut states = Vec::new();
    for s in dataset.sources() {
        let file = format!("states_{}.bin", sanitize(s.source_id()));
        save_state_matrix(s, dir.join(&file))?;
        states.push(StateSourceConfig {
            source_id: s.source_id().to_owned(),
            path: file.into(),
            extra: Default::default(),
        });
    }

    let mut annotations = Vec::new();
    for t in dataset.tracks() {
        let stem = format!("track_{}", sanitize(t.name()));
        save_track_ids(t.ids(), dir.join(format!("{stem}.bin")))?;
        let labels = match t.kind() {
            TrackKind::Categorical => {
                let file = format!("{stem}_labels.txt");
                save_labels(t.labels(), dir.join(&file))?;
                Some(file.into())
            }
            TrackKind::Scalar => None,
        };
        annotations.push(AnnotationConfig {
            name: t.name().to_owned(),
            path: format!("{stem}.bin").into(),
            labels,
            extra: Default::default(),
        });
    }

    let config = DatasetConfig {
        name: dataset.name().to_owned(),
        description: dataset.description().to_owned(),
        states,
        words: "words.txt".into(),
        dict: "dict.txt".into(),
        annotations,
        extra: Default::default(),
    };
    let path = dir.join("config.yaml");
    std::fs::write(&path, config.to_yaml()).map_err(|e| DatasetError::io(&path, e))?;
    Ok(path)
}

fn sanitize(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
        .collect()
}
