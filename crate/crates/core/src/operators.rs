//! Integer matrices of group-algebra elements on an orbit basis.
//!
//! Entry `(i, j)` of the matrix of `Σ g` counts the summands `g` with
//! `g·φ_j = φ_i`, so column `j` holds the image of the ket `φ_j`.

use std::fmt;
use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::config::{OrbitBasis, StateAlphabet};
use crate::error::{Error, Result};
use crate::perm::{parse_cycle_groups, subgroup_transpositions, Permutation};

/// Dense square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl IntegerMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Ok(Self { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t.entries[j * self.dim + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// `self - λ·I`.
    pub fn shifted(&self, lambda: i64) -> Self {
        let mut m = self.clone();
        for i in 0..self.dim {
            m.entries[i * self.dim + i] -= lambda;
        }
        m
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product over arbitrary-precision integers.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim, "vector length must match matrix dimension");
        (0..self.dim)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| **a != 0)
                    .fold(BigInt::zero(), |acc, (a, x)| acc + x * *a)
            })
            .collect()
    }

    /// Text dump: a `dim=<d> label=<name>` header, then one line of
    /// space-separated integers per row.
    pub fn dump(&self, label: &str) -> String {
        let mut out = format!("dim={} label={}\n", self.dim, label);
        for i in 0..self.dim {
            let row: Vec<String> = self.row(i).iter().map(i64::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the output of [`IntegerMatrix::dump`], returning the label too.
    pub fn parse_dump(text: &str) -> Result<(String, Self)> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty matrix dump".into()))?;
        let bad_header = || Error::Parse(format!("bad matrix dump header '{header}'"));
        let rest = header.trim().strip_prefix("dim=").ok_or_else(bad_header)?;
        let (dim, label) = rest.split_once(" label=").ok_or_else(bad_header)?;
        let dim: usize = dim.parse().map_err(|_| bad_header())?;
        let rows = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|x| {
                        x.parse::<i64>()
                            .map_err(|_| Error::Parse(format!("bad matrix entry '{x}'")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: rows.len(),
            });
        }
        Ok((label.to_owned(), Self::from_rows(&rows)?))
    }
}

impl Mul for &IntegerMatrix {
    type Output = IntegerMatrix;

    fn mul(self, rhs: Self) -> IntegerMatrix {
        self.checked_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl Sub for &IntegerMatrix {
    type Output = IntegerMatrix;

    fn sub(self, rhs: Self) -> IntegerMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions must agree");
        IntegerMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump("debug"))
    }
}

/// Sparse form of a sum of permutation operators on an orbit basis.
///
/// `sources[t][i]` is the index of `g_t⁻¹·φ_i`, so that
/// `(Σ_t g_t · v)_i = Σ_t v[sources[t][i]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationSum {
    dim: usize,
    sources: Vec<Vec<usize>>,
}

impl PermutationSum {
    /// `Σ perms` under the particle action.
    pub fn particle(perms: &[Permutation], basis: &OrbitBasis) -> Result<Self> {
        let sources = perms
            .iter()
            .map(|g| {
                if g.degree() != basis.degree() {
                    return Err(Error::DegreeMismatch {
                        expected: basis.degree(),
                        found: g.degree(),
                    });
                }
                basis.particle_image(&g.inverse())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            dim: basis.len(),
            sources,
        })
    }

    /// Class operator `C(k)`.
    pub fn class(k: usize, basis: &OrbitBasis) -> Result<Self> {
        Self::particle(&subgroup_transpositions(k, basis.degree())?, basis)
    }

    /// A state operator. Every term must exchange states of equal
    /// multiplicity, otherwise it maps kets outside the orbit.
    pub fn state(op: &StateOperator, basis: &OrbitBasis) -> Result<Self> {
        let alphabet = basis.alphabet();
        let counts = basis.multiplicities();
        let mut sources = Vec::with_capacity(op.len());
        for s in op.terms() {
            if s.degree() != alphabet.len() {
                return Err(Error::DegreeMismatch {
                    expected: alphabet.len(),
                    found: s.degree(),
                });
            }
            for cycle in s.cycles() {
                let (a, b) = (cycle[0] - 1, cycle[cycle.len() - 1] - 1);
                if cycle.iter().any(|&p| counts[p - 1] != counts[a]) {
                    return Err(Error::StateOperatorEscapesOrbit {
                        a: alphabet.label(a).to_owned(),
                        b: alphabet.label(b).to_owned(),
                        count_a: counts[a],
                        count_b: counts[b],
                    });
                }
            }
            let inv = s.inverse();
            let src = basis
                .configs()
                .iter()
                .map(|c| {
                    basis
                        .index_of(&c.act_state(&inv)?)
                        .ok_or_else(|| Error::Internal("state image left the orbit".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            sources.push(src);
        }
        Ok(Self {
            dim: basis.len(),
            sources,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub(crate) fn sources(&self) -> &[Vec<usize>] {
        &self.sources
    }

    /// Number of summed permutations.
    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sources.is_empty()
    }

    pub fn apply_integer(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim, "vector length must match operator dimension");
        (0..self.dim)
            .map(|i| self.sources.iter().map(|src| &v[src[i]]).sum())
            .collect()
    }

    /// Matrix of the product `self · other`, formed term by term.
    pub fn product_matrix(&self, other: &Self) -> Result<IntegerMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let n = self.dim;
        let mut m = IntegerMatrix::zeros(n);
        for a in &self.sources {
            for b in &other.sources {
                for (i, &j) in a.iter().enumerate() {
                    m.entries[i * n + b[j]] += 1;
                }
            }
        }
        Ok(m)
    }

    /// Whether `self · other = other · self`.
    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.product_matrix(other)? == other.product_matrix(self)?)
    }

    pub fn to_matrix(&self) -> IntegerMatrix {
        let n = self.dim;
        let mut m = IntegerMatrix::zeros(n);
        for src in &self.sources {
            for (i, &j) in src.iter().enumerate() {
                m.entries[i * n + j] += 1;
            }
        }
        m
    }
}

/// Matrix of `Σ perms` acting on the orbit basis.
pub fn matrix_of_elements(perms: &[Permutation], basis: &OrbitBasis) -> Result<IntegerMatrix> {
    Ok(PermutationSum::particle(perms, basis)?.to_matrix())
}

/// Class operator `C(k)`: the sum of all transpositions of the embedded `S_k`.
pub fn class_operator(k: usize, basis: &OrbitBasis) -> Result<IntegerMatrix> {
    matrix_of_elements(&subgroup_transpositions(k, basis.degree())?, basis)
}

/// A sum of state transpositions, e.g. `(a b)` or `(a b)+(a c)+(b c)`.
///
/// Each term is a permutation of alphabet indices (point `s + 1` is state `s`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateOperator {
    terms: Vec<Permutation>,
}

impl StateOperator {
    pub fn new(terms: Vec<Permutation>) -> Self {
        Self { terms }
    }

    /// Sum of transpositions of states given by alphabet indices.
    pub fn from_pairs(pairs: &[(usize, usize)], alphabet: &StateAlphabet) -> Result<Self> {
        let n = alphabet.len();
        let terms = pairs
            .iter()
            .map(|&(a, b)| Permutation::transposition(a.min(b) + 1, a.max(b) + 1, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { terms })
    }

    /// Parses `"(a b)"` or `"(a b)+(b c)"` over the alphabet's labels.
    pub fn parse(text: &str, alphabet: &StateAlphabet) -> Result<Self> {
        let mut pairs = Vec::new();
        for term in text.split('+') {
            let groups = parse_cycle_groups(term)?;
            let [group] = groups.as_slice() else {
                return Err(Error::Parse(format!(
                    "state operator term '{}' must be a single transposition",
                    term.trim()
                )));
            };
            let [a, b] = group.as_slice() else {
                return Err(Error::Parse(format!(
                    "state operator term '{}' must be a transposition",
                    term.trim()
                )));
            };
            pairs.push((alphabet.index_of(a)?, alphabet.index_of(b)?));
        }
        Self::from_pairs(&pairs, alphabet)
    }

    /// Parses a list of operators separated by `;`.
    pub fn parse_list(text: &str, alphabet: &StateAlphabet) -> Result<Vec<Self>> {
        text.split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| Self::parse(s, alphabet))
            .collect()
    }

    pub fn terms(&self) -> &[Permutation] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Renders with state labels, e.g. `(a b)+(a c)`.
    pub fn render(&self, alphabet: &StateAlphabet) -> String {
        if self.terms.is_empty() {
            return "0".to_owned();
        }
        self.terms
            .iter()
            .map(|t| {
                let cycles: Vec<String> = t
                    .cycles()
                    .iter()
                    .map(|c| {
                        let names: Vec<&str> = c.iter().map(|&p| alphabet.label(p - 1)).collect();
                        format!("({})", names.join(" "))
                    })
                    .collect();
                if cycles.is_empty() {
                    "()".to_owned()
                } else {
                    cycles.concat()
                }
            })
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// Matrix of a state operator on the orbit basis. Every term must exchange
/// states of equal multiplicity, otherwise it maps kets outside the orbit.
pub fn state_operator(op: &StateOperator, basis: &OrbitBasis) -> Result<IntegerMatrix> {
    Ok(PermutationSum::state(op, basis)?.to_matrix())
}

/// Whether `AB = BA` exactly.
pub fn commutes(a: &IntegerMatrix, b: &IntegerMatrix) -> Result<bool> {
    Ok(a.checked_mul(b)? == b.checked_mul(a)?)
}
