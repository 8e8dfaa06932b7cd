use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use super::error::{DatasetError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrackKind {
    Categorical,
    Scalar,
}

/// An annotation sequence aligned to timesteps (POS tags, nesting level, ...).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotationTrack {
    name: String,
    ids: Vec<i32>,
    labels: BTreeMap<i32, String>,
    kind: TrackKind,
}

impl AnnotationTrack {
    /// Categorical track; every id must have a label.
    pub fn categorical(
        name: impl Into<String>,
        ids: Vec<i32>,
        labels: BTreeMap<i32, String>,
    ) -> Result<Self> {
        let name = name.into();
        if let Some((position, &id)) = ids.iter().enumerate().find(|(_, id)| !labels.contains_key(id)) {
            return Err(DatasetError::MissingLabel {
                track: name,
                id,
                position,
            });
        }
        Ok(Self {
            name,
            ids,
            labels,
            kind: TrackKind::Categorical,
        })
    }

    /// Scalar track: ids are the values themselves.
    pub fn scalar(name: impl Into<String>, ids: Vec<i32>) -> Self {
        Self {
            name: name.into(),
            ids,
            labels: BTreeMap::new(),
            kind: TrackKind::Scalar,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ids(&self) -> &[i32] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn kind(&self) -> TrackKind {
        self.kind
    }

    pub fn labels(&self) -> &BTreeMap<i32, String> {
        &self.labels
    }

    /// Display label at `t`. Scalar tracks render the raw value.
    pub fn label_at(&self, t: usize) -> String {
        let id = self.ids[t];
        match self.kind {
            TrackKind::Categorical => self.labels[&id].clone(),
            TrackKind::Scalar => id.to_string(),
        }
    }
}

/// Parses `id<TAB>label` lines. Blank lines are skipped.
pub fn parse_labels(path: &Path, text: &str) -> Result<BTreeMap<i32, String>> {
    let mut labels = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let bad = |reason: &str| DatasetError::BadLabelLine {
            path: path.to_owned(),
            line: i + 1,
            reason: reason.to_owned(),
        };
        let (id, label) = line.split_once('\t').ok_or_else(|| bad("missing tab separator"))?;
        let id: i32 = id.trim().parse().map_err(|_| bad("id is not an integer"))?;
        if labels.insert(id, label.to_owned()).is_some() {
            return Err(bad("duplicate id"));
        }
    }
    Ok(labels)
}

pub fn load_labels(path: impl AsRef<Path>) -> Result<BTreeMap<i32, String>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| DatasetError::io(path, e))?;
    parse_labels(path, &text)
}

pub fn save_labels(labels: &BTreeMap<i32, String>, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let text: String = labels.iter().map(|(id, l)| format!("{id}\t{l}\n")).collect();
    fs::write(path, text).map_err(|e| DatasetError::io(path, e))
}
