//! Partitions, box contents and standard Young tableaux.

use std::fmt;

use crate::error::{Error, Result};
use crate::solver::LabelChain;

/// All partitions of `n`, largest first in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Sum of `column - row` over all boxes of the shape.
pub fn content_sum(shape: &[usize]) -> i64 {
    shape
        .iter()
        .enumerate()
        .map(|(r, &len)| (0..len).map(|c| c as i64 - r as i64).sum::<i64>())
        .sum()
}

/// Number of standard tableaux of a shape, by the hook length formula.
pub fn count_standard_tableaux(shape: &[usize]) -> u64 {
    let n: usize = shape.iter().sum();
    let mut numer: u128 = (1..=n as u128).product();
    let mut hooks: u128 = 1;
    for (r, &len) in shape.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = shape[r + 1..].iter().filter(|&&l| l > c).count();
            hooks *= (arm + leg + 1) as u128;
        }
    }
    numer /= hooks;
    numer as u64
}

/// A standard Young tableau: entries `1..n`, increasing along rows and down
/// columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let invalid = |why: &str| Error::Parse(format!("not a standard tableau ({why}): {rows:?}"));
        if rows.is_empty() || rows.iter().any(Vec::is_empty) {
            return Err(invalid("empty row"));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(invalid("shape is not a partition"));
        }
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for (r, row) in rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                    return Err(invalid("entries must be 1..n once each"));
                }
                if c > 0 && row[c - 1] >= x {
                    return Err(invalid("row not increasing"));
                }
                if r > 0 && rows[r - 1][c] >= x {
                    return Err(invalid("column not increasing"));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Content (`column - row`) of the box holding `entry`.
    pub fn content_of(&self, entry: usize) -> Option<i64> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&x| x == entry).map(|c| c as i64 - r as i64))
    }
}

impl fmt::Display for StandardTableau {
    /// Bracket style, one row per line: `[1 2]` / `[3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str("\n")?;
            }
            let entries: Vec<String> = row.iter().map(usize::to_string).collect();
            write!(f, "[{}]", entries.join(" "))?;
        }
        Ok(())
    }
}

/// Builds the tableau whose box `j` has content `ν_j − ν_{j−1}` (`ν_1 = 0`)
/// from class-operator eigenvalues listed as `(ν_n, ν_{n−1}, …, ν_2)`.
pub fn tableau_from_nu(nu: &[i64]) -> Result<StandardTableau> {
    let n = nu.len() + 1;
    // nu_at[j] = ν_j for j = 1..=n
    let mut nu_at = vec![0i64; n + 1];
    for (i, &v) in nu.iter().enumerate() {
        nu_at[n - i] = v;
    }
    let mut rows: Vec<Vec<usize>> = vec![vec![1]];
    for j in 2..=n {
        let content = nu_at[j] - nu_at[j - 1];
        // Addable corners: end of each row where the row above is longer, or a new row.
        let mut placed = false;
        for r in 0..=rows.len() {
            let len = rows.get(r).map_or(0, Vec::len);
            let addable = r == 0 || rows[r - 1].len() > len;
            if addable && len as i64 - r as i64 == content {
                if r == rows.len() {
                    rows.push(Vec::new());
                }
                rows[r].push(j);
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(Error::InvalidChain(nu.to_vec()));
        }
    }
    StandardTableau::new(rows)
}

/// The standard tableau labelled by a chain's class-operator eigenvalues.
pub fn tableau_from_chain(chain: &LabelChain) -> Result<StandardTableau> {
    tableau_from_nu(&chain.nu)
}
