//! Shared inputs for the benchmarks.

use symadapt_core::{Configuration, OrbitBasis, StateAlphabet};

/// Configurations benchmarked, smallest first.
pub const WORDS: [&str; 5] = ["aabc", "abcd", "aabbc", "abcde", "aabbcc"];

pub fn orbit(word: &str) -> OrbitBasis {
    let alphabet = StateAlphabet::inferred_from(word).expect("benchmark word is valid");
    let config = Configuration::parse(word, &alphabet).expect("benchmark word is valid");
    OrbitBasis::orbit(&alphabet, &config).expect("benchmark word is valid")
}
