use std::collections::HashMap;
use std::fs;
use std::path::Path;

use super::error::{DatasetError, Result};

/// Bijection between token ids and strings. Id = line number in the
/// dictionary file, starting at 0.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Vocabulary {
    words: Vec<String>,
    ids: HashMap<String, u32>,
}

impl Vocabulary {
    pub fn new<I, S>(words: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut vocab = Self::default();
        for (line, word) in words.into_iter().enumerate() {
            let word = word.into();
            if vocab.ids.contains_key(&word) {
                return Err(DatasetError::DuplicateVocabulary { line: line + 1, token: word });
            }
            vocab.ids.insert(word.clone(), line as u32);
            vocab.words.push(word);
        }
        Ok(vocab)
    }

    pub fn id(&self, word: &str) -> Option<u32> {
        self.ids.get(word).copied()
    }

    pub fn word(&self, id: u32) -> Option<&str> {
        self.words.get(id as usize).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }
}

/// Input sequence `w_1..w_T`, stored as vocabulary ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenSequence {
    ids: Vec<u32>,
    vocabulary: Vocabulary,
}

impl TokenSequence {
    pub fn new(ids: Vec<u32>, vocabulary: Vocabulary) -> Result<Self> {
        if let Some((position, &id)) = ids
            .iter()
            .enumerate()
            .find(|(_, &id)| id as usize >= vocabulary.len())
        {
            return Err(DatasetError::UnknownToken {
                position,
                token: format!("#{id}"),
            });
        }
        Ok(Self { ids, vocabulary })
    }

    /// Resolves string tokens through `vocabulary`.
    pub fn from_tokens<S: AsRef<str>>(tokens: &[S], vocabulary: Vocabulary) -> Result<Self> {
        let ids = tokens
            .iter()
            .enumerate()
            .map(|(position, tok)| {
                vocabulary
                    .id(tok.as_ref())
                    .ok_or_else(|| DatasetError::UnknownToken {
                        position,
                        token: tok.as_ref().to_owned(),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { ids, vocabulary })
    }

    /// Builds the vocabulary in first-occurrence order.
    pub fn from_words<S: AsRef<str>>(tokens: &[S]) -> Self {
        let mut seen = Vec::new();
        let mut index = HashMap::new();
        let ids = tokens
            .iter()
            .map(|t| {
                let t = t.as_ref();
                *index.entry(t.to_owned()).or_insert_with(|| {
                    seen.push(t.to_owned());
                    (seen.len() - 1) as u32
                })
            })
            .collect();
        let vocabulary = Vocabulary::new(seen).expect("first-occurrence vocabulary is unique");
        Self { ids, vocabulary }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[u32] {
        &self.ids
    }

    pub fn vocabulary(&self) -> &Vocabulary {
        &self.vocabulary
    }

    pub fn token(&self, t: usize) -> &str {
        self.vocabulary
            .word(self.ids[t])
            .expect("ids validated at construction")
    }

    pub fn tokens(&self) -> impl Iterator<Item = &str> + '_ {
        (0..self.len()).map(move |t| self.token(t))
    }

    pub fn window(&self, start: usize, end_inclusive: usize) -> Vec<String> {
        (start..=end_inclusive).map(|t| self.token(t).to_owned()).collect()
    }
}

pub(crate) fn read_lines(path: &Path) -> Result<Vec<String>> {
    let text = fs::read_to_string(path).map_err(|e| DatasetError::io(path, e))?;
    Ok(text.lines().map(str::to_owned).collect())
}

pub fn load_vocabulary(path: impl AsRef<Path>) -> Result<Vocabulary> {
    Vocabulary::new(read_lines(path.as_ref())?)
}

/// Loads a one-token-per-line words file against a vocabulary.
pub fn load_tokens(words: impl AsRef<Path>, vocabulary: Vocabulary) -> Result<TokenSequence> {
    let lines = read_lines(words.as_ref())?;
    TokenSequence::from_tokens(&lines, vocabulary)
}

pub fn write_lines<S: AsRef<str>>(path: impl AsRef<Path>, lines: &[S]) -> Result<()> {
    let path = path.as_ref();
    let mut text = String::new();
    for l in lines {
        text.push_str(l.as_ref());
        text.push('\n');
    }
    fs::write(path, text).map_err(|e| DatasetError::io(path, e))
}

/// Writes the words and dict files for `tokens`.
pub fn save_tokens(tokens: &TokenSequence, words: impl AsRef<Path>, dict: impl AsRef<Path>) -> Result<()> {
    write_lines(words, &tokens.tokens().collect::<Vec<_>>())?;
    write_lines(dict, tokens.vocabulary().words())
}
