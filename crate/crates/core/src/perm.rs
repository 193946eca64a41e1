//! Permutations of `{1..n}` and the transposition sets that make up class sums.
//!
//! Points are 1-based throughout the public API so that cycle notation reads
//! the same as it does in handwritten notation. Composition follows the "right factor acts
//! first" convention: `p.compose(&q)` maps `x` to `p(q(x))`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images; images[i] is the image of point i + 1, minus one.
    images: Vec<usize>,
}

impl Permutation {
    /// The identity of `S_n`.
    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDegree(n));
        }
        Ok(Self {
            images: (0..n).collect(),
        })
    }

    /// Builds a permutation from its 1-based image list.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidDegree(0));
        }
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(Error::NotABijection(images.to_vec()));
            }
            seen[img - 1] = true;
            zero_based.push(img - 1);
        }
        Ok(Self { images: zero_based })
    }

    /// The 2-cycle `(i j)` in `S_n`.
    pub fn transposition(i: usize, j: usize, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDegree(n));
        }
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return Err(Error::InvalidTransposition { i, j, n });
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, j - 1);
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based `point`.
    ///
    /// Panics if `point` is outside `1..=degree`.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] + 1
    }

    /// 0-based image lookup, for internal index arithmetic.
    pub(crate) fn image0(&self, index: usize) -> usize {
        self.images[index]
    }

    /// The 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(Self {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Largest point moved, or `None` for the identity. A permutation whose
    /// largest moved point is `m` lies in the embedded subgroup `S_m`.
    pub fn support_max(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .rev()
            .find(|(i, &x)| *i != x)
            .map(|(i, _)| i + 1)
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest point,
    /// ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Parses cycle notation such as `"(1 2)(3 4)"` into a permutation of
    /// degree `n`. The empty string and `"()"` denote the identity.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDegree(0));
        }
        let cycles = parse_cycle_groups(text)?;
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            let points = cycle
                .iter()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("'{tok}' is not a point")))
                })
                .collect::<Result<Vec<_>>>()?;
            for &p in &points {
                if p == 0 || p > n {
                    return Err(Error::Parse(format!("point {p} out of range 1..={n}")));
                }
                if touched[p - 1] {
                    return Err(Error::Parse(format!("point {p} repeated across cycles")));
                }
                touched[p - 1] = true;
            }
            for (k, &p) in points.iter().enumerate() {
                let next = points[(k + 1) % points.len()];
                images[p - 1] = next - 1;
            }
        }
        Ok(Self { images })
    }
}

/// Splits `"(a b)(c d e)"` into token groups. Whitespace between groups is
/// allowed; an empty group `()` contributes nothing.
pub(crate) fn parse_cycle_groups(text: &str) -> Result<Vec<Vec<String>>> {
    let mut groups = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(after_open) = rest.strip_prefix('(') else {
            return Err(Error::Parse(format!("expected '(' in cycle notation '{text}'")));
        };
        let Some(close) = after_open.find(')') else {
            return Err(Error::Parse(format!("unclosed cycle in '{text}'")));
        };
        let body = &after_open[..close];
        if body.contains('(') {
            return Err(Error::Parse(format!("nested '(' in '{text}'")));
        }
        let tokens: Vec<String> = body.split_whitespace().map(str::to_owned).collect();
        if tokens.len() == 1 {
            return Err(Error::Parse(format!("singleton cycle '({body})'")));
        }
        if !tokens.is_empty() {
            groups.push(tokens);
        }
        rest = after_open[close + 1..].trim_start();
    }
    Ok(groups)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in S_{}", self.degree())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses cycle notation, taking the degree to be the largest point named.
    fn from_str(s: &str) -> Result<Self> {
        let groups = parse_cycle_groups(s)?;
        let n = groups
            .iter()
            .flatten()
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(1);
        Self::parse_cycles(s, n)
    }
}

/// All transpositions `(i j)` with `1 ≤ i < j ≤ k`, embedded in `S_n`.
///
/// Their sum is the class operator of the subgroup `S_k`.
pub fn subgroup_transpositions(k: usize, n: usize) -> Result<Vec<Permutation>> {
    if k < 2 || k > n {
        return Err(Error::InvalidSubgroup { k, n });
    }
    let mut out = Vec::with_capacity(k * (k - 1) / 2);
    for i in 1..=k {
        for j in i + 1..=k {
            out.push(Permutation::transposition(i, j, n)?);
        }
    }
    Ok(out)
}

/// Every element of `S_n` in lexicographic order of image lists.
pub fn all_permutations(n: usize) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(Error::InvalidDegree(0));
    }
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation {
        images: current.clone(),
    }];
    // Standard next-permutation step.
    while let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) {
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
        out.push(Permutation {
            images: current.clone(),
        });
    }
    Ok(out)
}
