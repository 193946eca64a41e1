//! Exact rational linear algebra: row reduction, kernels, integer eigenspaces,
//! restriction to invariant subspaces and subspace intersection.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::operators::{IntegerMatrix, PermutationSum};
use crate::tableau::{content_sum, partitions};

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = BigRational;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m.data[i * dim + i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    left: c,
                    right: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self { rows: r, cols: c, data })
    }

    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// `self - λ·I`; requires a square matrix.
    pub fn shifted(&self, lambda: &Rational) -> Self {
        assert_eq!(self.rows, self.cols, "shift needs a square matrix");
        let mut m = self.clone();
        for i in 0..self.rows {
            m.data[i * self.cols + i] -= lambda;
        }
        m
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                left: self.cols,
                right: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                left: self.rows * self.cols,
                right: other.rows * other.cols,
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl From<&IntegerMatrix> for RationalMatrix {
    fn from(m: &IntegerMatrix) -> Self {
        let n = m.dim();
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let x = m.get(i, j);
                if x != 0 {
                    out.data[i * n + j] = rat(x);
                }
            }
        }
        out
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A square operator that can act on rational column vectors.
pub trait LinearOperator {
    fn dim(&self) -> usize;
    fn apply_rational(&self, v: &[Rational]) -> Vec<Rational>;
}

impl LinearOperator for IntegerMatrix {
    fn dim(&self) -> usize {
        IntegerMatrix::dim(self)
    }

    fn apply_rational(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.dim())
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if *a != 0 && !x.is_zero() {
                        acc += x * rat(*a);
                    }
                }
                acc
            })
            .collect()
    }
}

impl LinearOperator for PermutationSum {
    fn dim(&self) -> usize {
        PermutationSum::dim(self)
    }

    fn apply_rational(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, o) in out.iter_mut().enumerate() {
            for src in self.sources() {
                let x = &v[src[i]];
                if !x.is_zero() {
                    *o += x;
                }
            }
        }
        out
    }
}

impl LinearOperator for RationalMatrix {
    fn dim(&self) -> usize {
        assert_eq!(self.rows, self.cols, "operator must be square");
        self.rows
    }

    fn apply_rational(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }
}

/// Reduces `rows` to reduced row echelon form in place, dropping zero rows.
/// Pivot choice is the first nonzero entry in column order. Returns the pivot
/// columns.
fn rref_rows(rows: &mut Vec<Vec<Rational>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, tail) = tail.split_first_mut().expect("pivot row exists");
        for other in head.iter_mut().chain(tail.iter_mut()) {
            if other[c].is_zero() {
                continue;
            }
            let factor = other[c].clone();
            for (x, y) in other[c..].iter_mut().zip(&pivot_row[c..]) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Reduced row echelon form and rank.
pub fn rref(m: &RationalMatrix) -> (RationalMatrix, usize) {
    let mut rows = m.to_rows();
    let pivots = rref_rows(&mut rows, m.cols);
    let rank = pivots.len();
    rows.resize(m.rows, vec![Rational::zero(); m.cols]);
    let out = RationalMatrix {
        rows: m.rows,
        cols: m.cols,
        data: rows.into_iter().flatten().collect(),
    };
    (out, rank)
}

/// A subspace of `Q^d`, stored as the nonzero rows of its RREF basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let rows = RationalMatrix::identity(ambient_dim).to_rows();
        Self {
            ambient_dim,
            rows,
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn span(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                left: ambient_dim,
                right: v.len(),
            });
        }
        let mut rows = vectors;
        let pivots = rref_rows(&mut rows, ambient_dim);
        Ok(Self {
            ambient_dim,
            rows,
            pivots,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// RREF basis rows.
    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        // In RREF, the coordinate along row i is the entry at its pivot.
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let rebuilt = self.combine(&coords);
        (rebuilt.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    /// `Σ coords[i] · basis[i]`.
    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.ambient_dim];
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }

    /// Orthogonal complement under the standard dot product.
    pub fn orthogonal_complement(&self) -> Self {
        if self.rows.is_empty() {
            return Self::full(self.ambient_dim);
        }
        kernel_of_rref(&self.rows, &self.pivots, self.ambient_dim)
    }

    /// Whether `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.rows.iter().all(|r| other.contains(r))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Subspace(dim {} in Q^{})", self.dim(), self.ambient_dim)?;
        for row in &self.rows {
            let row: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn kernel_of_rref(rows: &[Vec<Rational>], pivots: &[usize], cols: usize) -> Subspace {
    let mut is_pivot = vec![None; cols];
    for (r, &p) in pivots.iter().enumerate() {
        is_pivot[p] = Some(r);
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| is_pivot[c].is_none()) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -rows[r][free].clone();
        }
        basis.push(v);
    }
    Subspace::span(cols, basis).expect("kernel vectors have ambient length")
}

/// Null space `{x : M x = 0}`.
pub fn kernel(m: &RationalMatrix) -> Subspace {
    let mut rows = m.to_rows();
    let pivots = rref_rows(&mut rows, m.cols);
    kernel_of_rref(&rows, &pivots, m.cols)
}

/// Kernel of `M - νI`; the zero subspace when `ν` is not an eigenvalue.
pub fn eigenspace(m: &IntegerMatrix, nu: i64) -> Subspace {
    kernel(&RationalMatrix::from(&m.shifted(nu)))
}

/// Eigenspace of a rational operator for an integer eigenvalue candidate.
pub fn rational_eigenspace(m: &RationalMatrix, nu: i64) -> Subspace {
    kernel(&m.shifted(&rat(nu)))
}

/// Lagrange projector `Π_{μ ≠ ν} (M − μI)/(ν − μ)` over `spectrum`. When `M`
/// is diagonalizable with eigenvalues in `spectrum`, this is the projection
/// onto the `ν`-eigenspace along the others.
pub fn spectral_projector(m: &RationalMatrix, nu: i64, spectrum: &BTreeSet<i64>) -> Result<RationalMatrix> {
    let mut p = RationalMatrix::identity(m.nrows());
    for &mu in spectrum.iter().filter(|&&mu| mu != nu) {
        let factor = m
            .shifted(&rat(mu))
            .scaled(&Rational::new(BigInt::one(), BigInt::from(nu - mu)));
        p = p.checked_mul(&factor)?;
    }
    Ok(p)
}

/// Span of the columns of `m`.
pub fn column_span(m: &RationalMatrix) -> Result<Subspace> {
    Subspace::span(m.nrows(), m.transpose().to_rows())
}

/// Content sums of all partitions of `k`: every eigenvalue the class sum of
/// transpositions of `S_k` can take on an `S_k`-module.
pub fn candidate_eigenvalues(k: usize) -> Result<BTreeSet<i64>> {
    if k < 2 {
        return Err(Error::InvalidSubgroup { k, n: k });
    }
    Ok(partitions(k).iter().map(|p| content_sum(p)).collect())
}

/// Matrix of `M` on the invariant subspace `S`, in the coordinates of `S`'s
/// RREF basis: column `i` holds the coordinates of `M·basis[i]`.
pub fn restrict<M: LinearOperator + ?Sized>(m: &M, s: &Subspace) -> Result<RationalMatrix> {
    if m.dim() != s.ambient_dim() {
        return Err(Error::DimensionMismatch {
            left: m.dim(),
            right: s.ambient_dim(),
        });
    }
    let d = s.dim();
    let mut out = RationalMatrix::zeros(d, d);
    for (i, b) in s.basis().iter().enumerate() {
        let image = m.apply_rational(b);
        let coords = s.coordinates(&image).ok_or(Error::NotInvariant { witness: i })?;
        for (j, c) in coords.into_iter().enumerate() {
            out.set(j, i, c);
        }
    }
    Ok(out)
}

/// Exact intersection of two subspaces.
pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch {
            left: a.ambient_dim(),
            right: b.ambient_dim(),
        });
    }
    let n = a.ambient_dim();
    if a.is_zero() || b.is_zero() {
        return Ok(Subspace::zero(n));
    }
    // v = Σ x_i a_i lies in b iff it is orthogonal to b's complement.
    let annihilator = b.orthogonal_complement();
    if annihilator.is_zero() {
        return Ok(a.clone());
    }
    let mut system = RationalMatrix::zeros(annihilator.dim(), a.dim());
    for (r, w) in annihilator.basis().iter().enumerate() {
        for (c, v) in a.basis().iter().enumerate() {
            let dot = w
                .iter()
                .zip(v)
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .fold(Rational::zero(), |acc, (x, y)| acc + x * y);
            system.set(r, c, dot);
        }
    }
    let coords = kernel(&system);
    let vectors = coords.basis().iter().map(|x| a.combine(x)).collect();
    Subspace::span(n, vectors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        rat(n)
    }

    fn qv(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| q(x)).collect()
    }

    fn ones3() -> IntegerMatrix {
        IntegerMatrix::from_rows(&[vec![1; 3], vec![1; 3], vec![1; 3]]).unwrap()
    }

    #[test]
    fn rref_examples() {
        let id = RationalMatrix::identity(4);
        assert_eq!(rref(&id), (id.clone(), 4));
        let (r, rank) = rref(&RationalMatrix::from(&ones3()));
        assert_eq!(rank, 1);
        assert_eq!(r.row(0), qv(&[1, 1, 1]).as_slice());
        assert!(r.row(1).iter().all(Zero::is_zero));
        assert_eq!(rref(&RationalMatrix::zeros(3, 3)).1, 0);
    }

    #[test]
    fn rref_is_idempotent() {
        let m = RationalMatrix::from_integer_rows(&[vec![2, 4, -2, 1], vec![1, 2, 0, 3], vec![3, 6, -2, 4]]).unwrap();
        let (once, rank) = rref(&m);
        assert_eq!(rank, 2);
        assert_eq!(rref(&once), (once.clone(), 2));
    }

    #[test]
    fn eigenspace_examples() {
        let m = ones3();
        let e3 = eigenspace(&m, 3);
        assert_eq!(e3.dim(), 1);
        assert_eq!(e3.basis()[0], qv(&[1, 1, 1]));
        let e0 = eigenspace(&m, 0);
        assert_eq!(e0.dim(), 2);
        for row in e0.basis() {
            assert!(row.iter().fold(Rational::zero(), |a, x| a + x).is_zero());
        }
        assert!(eigenspace(&m, 5).is_zero());
    }

    #[test]
    fn spectral_projector_of_all_ones() {
        let m = RationalMatrix::from(&ones3());
        let spectrum = BTreeSet::from([0, 3]);
        let p3 = spectral_projector(&m, 3, &spectrum).unwrap();
        assert_eq!(p3.row(0), vec![Rational::new(1.into(), 3.into()); 3].as_slice());
        assert_eq!(column_span(&p3).unwrap(), eigenspace(&ones3(), 3));
        let p0 = spectral_projector(&m, 0, &spectrum).unwrap();
        assert_eq!(p0.checked_add(&p3).unwrap(), RationalMatrix::identity(3));
        assert_eq!(column_span(&p0).unwrap(), eigenspace(&ones3(), 0));
    }

    #[test]
    fn candidate_eigenvalue_examples() {
        assert_eq!(candidate_eigenvalues(2).unwrap(), BTreeSet::from([1, -1]));
        assert_eq!(candidate_eigenvalues(3).unwrap(), BTreeSet::from([3, 0, -3]));
        assert_eq!(candidate_eigenvalues(4).unwrap(), BTreeSet::from([6, 2, 0, -2, -6]));
        assert!(candidate_eigenvalues(1).is_err());
    }

    #[test]
    fn restrict_examples() {
        let m = ones3();
        let full = Subspace::full(3);
        assert_eq!(restrict(&m, &full).unwrap(), RationalMatrix::from(&m));

        let e0 = eigenspace(&m, 0);
        assert_eq!(restrict(&m, &e0).unwrap(), RationalMatrix::zeros(2, 2));

        // (12) on aab swaps φ2, φ3; on the ν = 0 space it has eigenvalues ±1.
        let c2 = IntegerMatrix::from_rows(&[vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]).unwrap();
        let r = restrict(&c2, &e0).unwrap();
        assert_eq!(rational_eigenspace(&r, 1).dim(), 1);
        assert_eq!(rational_eigenspace(&r, -1).dim(), 1);

        let line = Subspace::span(3, vec![qv(&[1, 0, 0])]).unwrap();
        let swap = IntegerMatrix::from_rows(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(restrict(&swap, &line).unwrap_err(), Error::NotInvariant { witness: 0 });
    }

    #[test]
    fn intersect_examples() {
        let c3 = ones3();
        let c2 = IntegerMatrix::from_rows(&[vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]).unwrap();
        let s = intersect(&eigenspace(&c3, 0), &eigenspace(&c2, -1)).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis()[0], qv(&[0, 1, -1]));

        let e0 = eigenspace(&c3, 0);
        assert_eq!(intersect(&e0, &Subspace::full(3)).unwrap(), e0);
        assert!(intersect(&e0, &e0.orthogonal_complement()).unwrap().is_zero());
        assert!(intersect(&e0, &Subspace::full(4)).is_err());
    }

    #[test]
    fn coordinates_detect_membership() {
        let s = Subspace::span(3, vec![qv(&[1, 2, 0]), qv(&[0, 1, 1])]).unwrap();
        assert!(s.contains(&qv(&[1, 3, 1])));
        assert!(!s.contains(&qv(&[0, 0, 1])));
        let c = s.coordinates(&qv(&[2, 5, 1])).unwrap();
        assert_eq!(s.combine(&c), qv(&[2, 5, 1]));
    }

    #[test]
    fn fractions_stay_exact() {
        let m = RationalMatrix::from_integer_rows(&[vec![3, 1], vec![1, 3]]).unwrap();
        let inv_ish = m.scaled(&Rational::new(BigInt::from(1), BigInt::from(3)));
        assert_eq!(inv_ish.get(0, 1), &Rational::new(BigInt::from(1), BigInt::from(3)));
        let (r, rank) = rref(&inv_ish);
        assert_eq!(rank, 2);
        assert_eq!(r, RationalMatrix::identity(2));
    }
}
