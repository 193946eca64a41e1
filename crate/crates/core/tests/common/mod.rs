#![allow(dead_code)]

use num_bigint::BigInt;
use symadapt_core::{resolve, CGTable, Configuration, OrbitBasis, StateAlphabet};

pub fn basis(word: &str) -> OrbitBasis {
    let alphabet = StateAlphabet::inferred_from(word).unwrap();
    let config = Configuration::parse(word, &alphabet).unwrap();
    OrbitBasis::orbit(&alphabet, &config).unwrap()
}

pub fn table(word: &str) -> CGTable {
    resolve(&basis(word), &[]).unwrap()
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// One representative word per multiplicity pattern (a partition of `n`),
/// for every `n` up to `max_degree` whose orbit has at most `max_dim` kets.
pub fn orbit_words(max_degree: usize, max_dim: usize) -> Vec<String> {
    let mut out = Vec::new();
    for n in 1..=max_degree {
        for shape in symadapt_core::tableau::partitions(n) {
            let word: String = shape
                .iter()
                .enumerate()
                .flat_map(|(i, &m)| std::iter::repeat_n((b'a' + i as u8) as char, m))
                .collect();
            let dim = multinomial(&shape);
            if dim <= max_dim {
                out.push(word);
            }
        }
    }
    out
}

fn multinomial(parts: &[usize]) -> usize {
    let fact = |n: usize| (1..=n).product::<usize>();
    fact(parts.iter().sum()) / parts.iter().map(|&m| fact(m)).product::<usize>()
}
