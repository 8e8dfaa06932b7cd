//! Synthetic parenthesis counting language with oracle hidden states.
//!
//! Tokens are `(`, `)` and the digits `0`-`4`. Parentheses are balanced,
//! nesting never exceeds [`MAX_LEVEL`], and every digit spells the nesting
//! level at its position. The oracle states encode the level directly so the
//! whole select/match pipeline can be checked without a trained model.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::dataset::{AnnotationTrack, Dataset, StateMatrix, TokenSequence, Vocabulary};

pub const MAX_LEVEL: u8 = 4;
pub const ALPHABET: [&str; 7] = ["(", ")", "0", "1", "2", "3", "4"];
/// Leading states that indicate `level >= c + 1`.
pub const INDICATOR_STATES: usize = MAX_LEVEL as usize;
pub const LEVEL_TRACK: &str = "level";
pub const SOURCE_ID: &str = "states";

const OPEN_WEIGHT: f64 = 0.25;
const CLOSE_WEIGHT: f64 = 0.25;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthError {
    #[error("corpus length must be at least 2, got {0}")]
    TooShort(usize),
    #[error("unbalanced sequence: level leaves [0, {MAX_LEVEL}] at position {position}")]
    UnbalancedSequence { position: usize },
    #[error("token {token:?} at position {position} is not in the parenthesis alphabet")]
    InvalidToken { position: usize, token: String },
    #[error("oracle needs at least {min} states, got {dims}")]
    DTooSmall { dims: usize, min: usize },
}

#[derive(Debug, Clone)]
pub struct ParenCorpus {
    pub tokens: TokenSequence,
    /// Nesting level after reading each token.
    pub levels: AnnotationTrack,
}

impl ParenCorpus {
    pub fn level_values(&self) -> Vec<u8> {
        self.levels.ids().iter().map(|&l| l as u8).collect()
    }
}

pub fn paren_vocabulary() -> Vocabulary {
    Vocabulary::new(ALPHABET).expect("alphabet is unique")
}

fn level_labels() -> BTreeMap<i32, String> {
    (0..=MAX_LEVEL as i32).map(|l| (l, l.to_string())).collect()
}

/// Generates `length` tokens ending at level 0. Deterministic per seed.
pub fn gen_paren(seed: u64, length: usize) -> Result<ParenCorpus, SynthError> {
    if length < 2 {
        return Err(SynthError::TooShort(length));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tokens = Vec::with_capacity(length);
    let mut levels = Vec::with_capacity(length);
    let mut level: u8 = 0;
    for step in 0..length {
        let remaining = length - step - 1;
        // Opening must leave room to close back to zero; when the remaining
        // budget equals the level only closings are possible.
        let can_open = level < MAX_LEVEL && remaining > level as usize;
        let can_close = level > 0;
        let can_digit = remaining >= level as usize;
        let w_open = if can_open { OPEN_WEIGHT } else { 0.0 };
        let w_close = if can_close { CLOSE_WEIGHT } else { 0.0 };
        let w_digit = if can_digit { 1.0 - OPEN_WEIGHT - CLOSE_WEIGHT } else { 0.0 };
        let total = w_open + w_close + w_digit;
        let u = rng.gen::<f64>() * total;
        let token = if u < w_open {
            level += 1;
            "("
        } else if u < w_open + w_close {
            level -= 1;
            ")"
        } else {
            ALPHABET[2 + level as usize]
        };
        tokens.push(token);
        levels.push(level as i32);
    }
    debug_assert_eq!(level, 0);
    let tokens = TokenSequence::from_tokens(&tokens, paren_vocabulary()).expect("alphabet tokens");
    let levels = AnnotationTrack::categorical(LEVEL_TRACK, levels, level_labels()).expect("levels labelled");
    Ok(ParenCorpus { tokens, levels })
}

/// Nesting level after each token.
pub fn level_of<S: AsRef<str>>(tokens: &[S]) -> Result<Vec<u8>, SynthError> {
    let mut level: i32 = 0;
    tokens
        .iter()
        .enumerate()
        .map(|(position, tok)| {
            match tok.as_ref() {
                "(" => level += 1,
                ")" => level -= 1,
                d if ALPHABET[2..].contains(&d) => {}
                other => {
                    return Err(SynthError::InvalidToken {
                        position,
                        token: other.to_owned(),
                    })
                }
            }
            if !(0..=MAX_LEVEL as i32).contains(&level) {
                return Err(SynthError::UnbalancedSequence { position });
            }
            Ok(level as u8)
        })
        .collect()
}

/// Oracle hidden states: states `0..4` are `+1` when `level >= c + 1` and
/// `-1` otherwise; the rest are seeded noise in `(-0.5, 0.5)`.
pub fn oracle_states(levels: &[u8], dims: usize, seed: u64) -> Result<StateMatrix, SynthError> {
    let min = INDICATOR_STATES + 1;
    if dims < min {
        return Err(SynthError::DTooSmall { dims, min });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values = Vec::with_capacity(levels.len() * dims);
    for &level in levels {
        for c in 0..INDICATOR_STATES {
            values.push(if level as usize > c { 1.0 } else { -1.0 });
        }
        for _ in INDICATOR_STATES..dims {
            let v = loop {
                let v: f32 = rng.gen_range(-0.5..0.5);
                if v > -0.5 {
                    break v;
                }
            };
            values.push(v);
        }
    }
    Ok(StateMatrix::new(SOURCE_ID, levels.len(), dims, values).expect("oracle values are finite"))
}

/// Corpus plus oracle states bundled as a loadable dataset.
pub fn paren_dataset(seed: u64, length: usize, dims: usize) -> Result<Dataset, SynthError> {
    let corpus = gen_paren(seed, length)?;
    let states = oracle_states(&corpus.level_values(), dims, seed)?;
    Ok(Dataset::new(
        format!("paren-{seed}"),
        format!("parenthesis counting language, seed {seed}, {length} tokens, {dims} oracle states"),
        corpus.tokens,
        vec![states],
        vec![corpus.levels],
    )
    .expect("synthetic parts are aligned"))
}

/// Maximal spans where the level equals `level`, as inclusive `(start, end)`.
pub fn level_spans(levels: &[u8], level: u8) -> Vec<(usize, usize)> {
    let mut spans = Vec::new();
    let mut t = 0;
    while t < levels.len() {
        if levels[t] != level {
            t += 1;
            continue;
        }
        let start = t;
        while t < levels.len() && levels[t] == level {
            t += 1;
        }
        spans.push((start, t - 1));
    }
    spans
}
