use crate::dataset::TokenSequence;

/// Start positions where `query` occurs verbatim, ascending.
pub fn search_phrase<S: AsRef<str>>(tokens: &TokenSequence, query: &[S]) -> Vec<usize> {
    if query.is_empty() || query.len() > tokens.len() {
        return Vec::new();
    }
    let vocab = tokens.vocabulary();
    let Some(needle) = query
        .iter()
        .map(|w| vocab.id(w.as_ref()))
        .collect::<Option<Vec<u32>>>()
    else {
        return Vec::new();
    };
    tokens
        .ids()
        .windows(needle.len())
        .enumerate()
        .filter(|(_, w)| *w == needle.as_slice())
        .map(|(t, _)| t)
        .collect()
}
