//! Simultaneous eigenspace refinement along the class operator chain
//! `C(2) ⊂ … ⊂ C(n)`, then by state operators, producing the labelled and
//! normalized basis.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::config::OrbitBasis;
use crate::error::{Error, Result};
use crate::linalg::{candidate_eigenvalues, rational_eigenspace, restrict, LinearOperator, Rational, Subspace};
use crate::operators::{class_operator, PermutationSum, StateOperator};
use crate::tableau::{tableau_from_chain, StandardTableau};

/// Joint eigenvalues labelling one basis vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelChain {
    /// `(ν_n, ν_{n−1}, …, ν_2)`, the eigenvalues of `C(n), …, C(2)`.
    pub nu: Vec<i64>,
    /// Eigenvalues of the applied state operators, in application order.
    pub state_labels: Vec<i64>,
}

impl LabelChain {
    /// Degree `n` of the group the chain belongs to.
    pub fn degree(&self) -> usize {
        self.nu.len() + 1
    }

    /// `ν_j` for `1 ≤ j ≤ n`, with `ν_1 = 0`.
    pub fn nu_at(&self, j: usize) -> i64 {
        let n = self.degree();
        assert!((1..=n).contains(&j), "chain index {j} outside 1..={n}");
        if j == 1 {
            0
        } else {
            self.nu[n - j]
        }
    }
}

impl fmt::Display for LabelChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nu: Vec<String> = self.nu.iter().map(i64::to_string).collect();
        write!(f, "nu=({})", nu.join(", "))?;
        let st: Vec<String> = self.state_labels.iter().map(i64::to_string).collect();
        write!(f, " state=({})", st.join(", "))
    }
}

/// One symmetry-adapted basis vector: coefficient `i` is
/// `coeffs[i] / √norm_sq`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledVector {
    pub chain: LabelChain,
    pub tableau: StandardTableau,
    /// `None` when the chain alone determines the vector. `Some(i)` marks the
    /// `i`-th vector of an arbitrary orthogonal basis of a joint eigenspace
    /// that the available operators could not split.
    pub residue_index: Option<usize>,
    pub coeffs: Vec<BigInt>,
    pub norm_sq: BigInt,
}

impl LabeledVector {
    pub fn is_labeled(&self) -> bool {
        self.residue_index.is_none()
    }
}

/// The resolved basis of one orbit.
#[derive(Debug, Clone)]
pub struct CGTable {
    pub basis: OrbitBasis,
    /// State operators actually applied, in order.
    pub state_operators: Vec<StateOperator>,
    pub vectors: Vec<LabeledVector>,
    /// False when some joint eigenspace stayed degenerate.
    pub complete: bool,
}

#[derive(Debug, Clone)]
struct Piece {
    nu: Vec<i64>,
    state_labels: Vec<i64>,
    space: Subspace,
}

enum Stage {
    Class(usize),
    State(String),
}

/// Splits every piece into eigenspaces of `op`, trying `candidates` in order.
fn refine<M: LinearOperator>(pieces: Vec<Piece>, op: &M, candidates: &[i64], stage: &Stage) -> Result<Vec<Piece>> {
    let mut out = Vec::with_capacity(pieces.len());
    for piece in pieces {
        let d = piece.space.dim();
        let restricted = restrict(op, &piece.space).map_err(|e| match (e, stage) {
            (Error::NotInvariant { .. }, Stage::State(name)) => Error::IncompatibleStateOperator(name.clone()),
            (Error::NotInvariant { witness }, Stage::Class(k)) => Error::Internal(format!(
                "joint eigenspace not invariant under C({k}) (basis vector {witness})"
            )),
            (e, _) => e,
        })?;
        let mut covered = 0;
        let mut split = Vec::new();
        if d == 1 {
            let value = restricted.get(0, 0);
            let nu = value
                .is_integer()
                .then(|| value.to_integer().to_i64())
                .flatten()
                .filter(|v| candidates.contains(v));
            if let Some(nu) = nu {
                split.push((nu, piece.space.clone()));
                covered = 1;
            }
        } else {
            for &nu in candidates {
                let coords = rational_eigenspace(&restricted, nu);
                if coords.is_zero() {
                    continue;
                }
                covered += coords.dim();
                let lifted = coords.basis().iter().map(|x| piece.space.combine(x)).collect();
                split.push((nu, Subspace::span(piece.space.ambient_dim(), lifted)?));
                if covered == d {
                    break;
                }
            }
        }
        if covered != d {
            return Err(match stage {
                Stage::Class(k) => Error::Internal(format!("eigenvalues of C({k}) not covered by content sums")),
                Stage::State(name) => Error::NonIntegralSpectrum(name.clone()),
            });
        }
        for (value, space) in split {
            let mut next = Piece {
                nu: piece.nu.clone(),
                state_labels: piece.state_labels.clone(),
                space,
            };
            match stage {
                Stage::Class(_) => next.nu.push(value),
                Stage::State(..) => next.state_labels.push(value),
            }
            out.push(next);
        }
    }
    Ok(out)
}

fn apply_state_operator(pieces: Vec<Piece>, op: &StateOperator, basis: &OrbitBasis) -> Result<Vec<Piece>> {
    let matrix = PermutationSum::state(op, basis)?;
    let t = op.len() as i64;
    let candidates: Vec<i64> = (-t..=t).rev().collect();
    let name = op.render(basis.alphabet());
    refine(pieces, &matrix, &candidates, &Stage::State(name))
}

/// Default state operators: for each set of states sharing a multiplicity
/// (ordered by first state), the transposition class sums of its growing
/// prefixes `{s1, s2}`, `{s1, s2, s3}`, ….
pub fn default_state_operators(basis: &OrbitBasis) -> Vec<StateOperator> {
    let counts = basis.multiplicities();
    let mut seen_counts = Vec::new();
    let mut ops = Vec::new();
    for (s, &m) in counts.iter().enumerate() {
        if m == 0 || seen_counts.contains(&m) {
            continue;
        }
        seen_counts.push(m);
        let group: Vec<usize> = (s..counts.len()).filter(|&t| counts[t] == m).collect();
        for j in 2..=group.len() {
            let mut pairs = Vec::new();
            for a in 0..j {
                for b in a + 1..j {
                    pairs.push((group[a], group[b]));
                }
            }
            ops.push(StateOperator::from_pairs(&pairs, basis.alphabet()).expect("distinct alphabet indices"));
        }
    }
    ops
}

/// Joint eigenspaces of `C(2), …, C(k)` inside the span of `indices`, a set
/// of kets that agree on positions `k+1..n`. Chains are stored as
/// `(ν_2, …, ν_k)`.
///
/// Kets grouped by their state at position `k` span `S_{k−1}`-invariant
/// spaces, so each group is resolved one level down. Pieces with equal chains
/// are merged across groups and then split by `C(k)`.
fn chain_pieces(basis: &OrbitBasis, class_ops: &[PermutationSum], indices: &[usize], k: usize) -> Result<Vec<Piece>> {
    let dim = basis.len();
    if k <= 1 {
        return indices
            .iter()
            .map(|&i| {
                let mut e = vec![Rational::zero(); dim];
                e[i] = Rational::one();
                Ok(Piece {
                    nu: Vec::new(),
                    state_labels: Vec::new(),
                    space: Subspace::span(dim, vec![e])?,
                })
            })
            .collect();
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &i in indices {
        groups.entry(basis.get(i).word()[k - 1]).or_default().push(i);
    }
    let mut merged: BTreeMap<Vec<i64>, Vec<Vec<Rational>>> = BTreeMap::new();
    for group in groups.values() {
        for piece in chain_pieces(basis, class_ops, group, k - 1)? {
            merged
                .entry(piece.nu)
                .or_default()
                .extend(piece.space.basis().iter().cloned());
        }
    }
    let pieces = merged
        .into_iter()
        .map(|(nu, rows)| {
            Ok(Piece {
                nu,
                state_labels: Vec::new(),
                space: Subspace::span(dim, rows)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let candidates: Vec<i64> = candidate_eigenvalues(k)?.into_iter().rev().collect();
    refine(pieces, &class_ops[k - 2], &candidates, &Stage::Class(k))
}

/// Resolves the orbit space into simultaneous eigenvectors of the class
/// operator chain and the state operators.
///
/// Explicit `state_ops` are applied to every joint eigenspace in the given
/// order. With none given, [`default_state_operators`] are tried one at a
/// time while degeneracy remains; an operator that splits nothing is dropped.
///
/// Vectors are ordered by `(ν_n, …, ν_2)` descending, then by state labels
/// descending.
pub fn resolve(basis: &OrbitBasis, state_ops: &[StateOperator]) -> Result<CGTable> {
    let n = basis.degree();
    let class_ops = (2..=n)
        .map(|k| PermutationSum::class(k, basis))
        .collect::<Result<Vec<_>>>()?;
    let all: Vec<usize> = (0..basis.len()).collect();
    let mut pieces = chain_pieces(basis, &class_ops, &all, n)?;
    for p in &mut pieces {
        p.nu.reverse();
    }
    pieces.sort_by(|a, b| b.nu.cmp(&a.nu));
    finish(basis, pieces, state_ops)
}

/// Eigenvalues of `C(k)` on the orbit space with their multiplicities.
///
/// Kets sharing positions `k+1..n` span `S_k`-invariant spaces, each resolved
/// by the same branching recursion as [`resolve`].
pub fn class_spectrum(basis: &OrbitBasis, k: usize) -> Result<BTreeMap<i64, usize>> {
    let n = basis.degree();
    if !(2..=n).contains(&k) {
        return Err(Error::InvalidSubgroup { k, n });
    }
    let class_ops = (2..=k)
        .map(|j| PermutationSum::class(j, basis))
        .collect::<Result<Vec<_>>>()?;
    let mut groups: BTreeMap<&[usize], Vec<usize>> = BTreeMap::new();
    for (i, c) in basis.configs().iter().enumerate() {
        groups.entry(&c.word()[k..]).or_default().push(i);
    }
    let mut out = BTreeMap::new();
    for indices in groups.values() {
        for piece in chain_pieces(basis, &class_ops, indices, k)? {
            *out.entry(piece.nu[k - 2]).or_insert(0) += piece.space.dim();
        }
    }
    Ok(out)
}

/// Reference form of [`resolve`]: refines the whole orbit space by dense
/// `C(n), C(n−1), …, C(2)` in turn. Slower, but independent of the branching
/// recursion; the two agree exactly.
pub fn resolve_direct(basis: &OrbitBasis, state_ops: &[StateOperator]) -> Result<CGTable> {
    let n = basis.degree();
    let mut pieces = vec![Piece {
        nu: Vec::new(),
        state_labels: Vec::new(),
        space: Subspace::full(basis.len()),
    }];
    for k in (2..=n).rev() {
        let op = class_operator(k, basis)?;
        let candidates: Vec<i64> = candidate_eigenvalues(k)?.into_iter().rev().collect();
        pieces = refine(pieces, &op, &candidates, &Stage::Class(k))?;
    }
    finish(basis, pieces, state_ops)
}

fn finish(basis: &OrbitBasis, mut pieces: Vec<Piece>, state_ops: &[StateOperator]) -> Result<CGTable> {
    let degenerate = |pieces: &[Piece]| pieces.iter().any(|p| p.space.dim() > 1);
    let mut applied = Vec::new();
    if state_ops.is_empty() {
        for op in default_state_operators(basis) {
            if !degenerate(&pieces) {
                break;
            }
            let before = pieces.len();
            let refined = apply_state_operator(pieces.clone(), &op, basis)?;
            if refined.len() > before {
                pieces = refined;
                applied.push(op);
            }
        }
    } else {
        for op in state_ops {
            pieces = apply_state_operator(pieces, op, basis)?;
            applied.push(op.clone());
        }
    }

    let complete = !degenerate(&pieces);
    let mut vectors = Vec::with_capacity(basis.len());
    for piece in pieces {
        let chain = LabelChain {
            nu: piece.nu,
            state_labels: piece.state_labels,
        };
        let tableau = tableau_from_chain(&chain)?;
        if piece.space.dim() == 1 {
            let (coeffs, norm_sq) = normalize(&piece.space.basis()[0])?;
            vectors.push(LabeledVector {
                chain,
                tableau,
                residue_index: None,
                coeffs,
                norm_sq,
            });
        } else {
            for (i, v) in gram_schmidt(piece.space.basis()).iter().enumerate() {
                let (coeffs, norm_sq) = normalize(v)?;
                vectors.push(LabeledVector {
                    chain: chain.clone(),
                    tableau: tableau.clone(),
                    residue_index: Some(i),
                    coeffs,
                    norm_sq,
                });
            }
        }
    }
    Ok(CGTable {
        basis: basis.clone(),
        state_operators: applied,
        vectors,
        complete,
    })
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

fn gram_schmidt(rows: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = Vec::with_capacity(rows.len());
    for v in rows {
        let mut u = v.clone();
        for w in &out {
            let coef = dot(v, w) / dot(w, w);
            if coef.is_zero() {
                continue;
            }
            for (x, y) in u.iter_mut().zip(w) {
                *x -= &coef * y;
            }
        }
        out.push(u);
    }
    out
}

/// Scales a rational vector to a primitive integer vector whose first nonzero
/// entry is positive, and returns it with its squared norm.
pub fn normalize(v: &[Rational]) -> Result<(Vec<BigInt>, BigInt)> {
    let Some(first) = v.iter().find(|x| !x.is_zero()) else {
        return Err(Error::ZeroVector);
    };
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = if first.is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let scale = gcd * sign;
    for x in ints.iter_mut() {
        *x = &*x / &scale;
    }
    let norm_sq = ints.iter().map(|x| x * x).sum();
    Ok((ints, norm_sq))
}
