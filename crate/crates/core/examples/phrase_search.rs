//! Find exact phrase occurrences, the usual way to jump to a position
//! before selecting.
//!
//! cargo run -p statescope --example phrase_search

use statescope::engine::search_phrase;
use statescope::TokenSequence;

fn main() {
    let text = "a little prince is a little prince";
    let words: Vec<&str> = text.split_whitespace().collect();
    let tokens = TokenSequence::from_words(&words);
    for query in ["a little", "little prince is", "prince", "the fox", ""] {
        let q: Vec<&str> = query.split_whitespace().collect();
        println!("{query:?} -> {:?}", search_phrase(&tokens, &q));
    }
}
