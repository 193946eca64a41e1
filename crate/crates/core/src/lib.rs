//! Exact symmetry-adapted bases for permutation modules of the symmetric group.
//!
//! A configuration such as `aab` spans a permutation module of `S_n` over its
//! particle-permutation orbit. The joint eigenvectors of the nested class
//! operators `C(n), C(n-1), …, C(2)` (sums of transpositions of `S_k`),
//! refined where needed by state-permutation operators, give a basis adapted
//! to the subgroup chain. Its coefficients are the coupling coefficients,
//! computed here in exact arithmetic and reported as `c/√N`.
//!
//! ```
//! use symadapt_core::{resolve, Configuration, OrbitBasis, StateAlphabet};
//!
//! let alphabet = StateAlphabet::from_text("ab").unwrap();
//! let config = Configuration::parse("aab", &alphabet).unwrap();
//! let basis = OrbitBasis::orbit(&alphabet, &config).unwrap();
//! let table = resolve(&basis, &[]).unwrap();
//! assert_eq!(table.vectors.len(), 3);
//! assert!(table.complete);
//! ```

pub mod config;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod operators;
pub mod perm;
pub mod solver;
pub mod tableau;
pub mod verify;

pub use config::{Configuration, OrbitBasis, StateAlphabet, MAX_DEGREE};
pub use error::{Error, Result};
pub use linalg::{
    candidate_eigenvalues, column_span, eigenspace, spectral_projector, Rational, RationalMatrix, Subspace,
};
pub use operators::{
    class_operator, commutes, matrix_of_elements, state_operator, IntegerMatrix, PermutationSum, StateOperator,
};
pub use perm::{subgroup_transpositions, Permutation};
pub use solver::{class_spectrum, normalize, resolve, resolve_direct, CGTable, LabelChain, LabeledVector};
pub use tableau::{tableau_from_chain, StandardTableau};
pub use verify::{verify_table, CheckStatus, Report};
