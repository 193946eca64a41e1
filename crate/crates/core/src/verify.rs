//! Exact self-verification of a resolved table.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Result;
use crate::linalg::candidate_eigenvalues;
use crate::operators::PermutationSum;
use crate::solver::CGTable;
use crate::tableau::tableau_from_chain;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Warn,
    Fail,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Warn => "WARN",
            CheckStatus::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

/// Outcome of a list of named checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, name: &str, status: CheckStatus, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_owned(),
            status,
            detail: detail.into(),
        });
    }

    /// Records `Pass` when `failures` is empty, otherwise `Fail` with the
    /// first few failures.
    pub fn record(&mut self, name: &str, ok_detail: impl Into<String>, failures: Vec<String>) {
        if failures.is_empty() {
            self.push(name, CheckStatus::Pass, ok_detail);
        } else {
            let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
            let more = failures.len().saturating_sub(3);
            let mut detail = shown.join("; ");
            if more > 0 {
                detail.push_str(&format!("; and {more} more"));
            }
            self.push(name, CheckStatus::Fail, detail);
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// True when no check failed; warnings do not count as failures.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn status_of(&self, name: &str) -> Option<CheckStatus> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.status)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}: {}", c.status, c.name, c.detail)?;
        }
        Ok(())
    }
}

fn scaled(v: &[BigInt], s: i64) -> Vec<BigInt> {
    v.iter().map(|x| x * s).collect()
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Machine-word copies of coefficient vectors, when every entry is below
/// 2^31 in magnitude so that dot products are exact in `i128`.
pub(crate) fn small_coeffs<'a>(vectors: impl IntoIterator<Item = &'a [BigInt]>) -> Option<Vec<Vec<i64>>> {
    const LIMIT: i64 = 1 << 31;
    vectors
        .into_iter()
        .map(|v| {
            v.iter()
                .map(|x| i64::try_from(x).ok().filter(|x| x.abs() < LIMIT))
                .collect()
        })
        .collect()
}

pub(crate) fn small_dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| i128::from(x) * i128::from(y)).sum()
}

/// Checks a table exactly: unit norms, pairwise orthogonality, every
/// eigen-equation of every chain, Jucys–Murphy consistency of the chain with
/// its tableau, and completeness.
pub fn verify_table(t: &CGTable) -> Result<Report> {
    let basis = &t.basis;
    let n = basis.degree();
    let dim = basis.len();
    let mut report = Report::default();

    let mut failures = Vec::new();
    for (a, v) in t.vectors.iter().enumerate() {
        if v.coeffs.len() != dim {
            failures.push(format!(
                "vector {}: {} coefficients for {dim} kets",
                a + 1,
                v.coeffs.len()
            ));
        } else if v.norm_sq <= BigInt::zero() || dot(&v.coeffs, &v.coeffs) != v.norm_sq {
            failures.push(format!("vector {}: Σc² ≠ norm_sq {}", a + 1, v.norm_sq));
        }
    }
    report.record("unit_norm", format!("{} vectors", t.vectors.len()), failures);

    let mut failures = Vec::new();
    let count = t.vectors.len();
    let small = small_coeffs(t.vectors.iter().map(|v| v.coeffs.as_slice()));
    for a in 0..count {
        for b in a + 1..count {
            let orthogonal = match &small {
                Some(s) => small_dot(&s[a], &s[b]) == 0,
                None => dot(&t.vectors[a].coeffs, &t.vectors[b].coeffs).is_zero(),
            };
            if !orthogonal {
                failures.push(format!("vectors {} and {}", a + 1, b + 1));
            }
        }
    }
    report.record("orthogonality", "all pairs orthogonal", failures);

    let class_ops = (2..=n)
        .map(|k| PermutationSum::class(k, basis))
        .collect::<Result<Vec<_>>>()?;
    let state_ops = t
        .state_operators
        .iter()
        .map(|op| PermutationSum::state(op, basis))
        .collect::<Result<Vec<_>>>()?;
    let candidates = (2..=n).map(candidate_eigenvalues).collect::<Result<Vec<_>>>()?;

    let mut failures = Vec::new();
    let mut chain_failures = Vec::new();
    let mut jm_failures = Vec::new();
    for (a, v) in t.vectors.iter().enumerate() {
        if v.chain.nu.len() + 1 != n || v.chain.state_labels.len() != state_ops.len() {
            chain_failures.push(format!("vector {}: chain length", a + 1));
            continue;
        }
        // C(1) = 0 anchors the Jucys–Murphy differences X_j = C(j) − C(j−1).
        let mut previous = vec![BigInt::zero(); v.coeffs.len()];
        for k in 2..=n {
            let nu = v.chain.nu_at(k);
            if !candidates[k - 2].contains(&nu) {
                chain_failures.push(format!("vector {}: ν_{k} = {nu} is not a content sum", a + 1));
            }
            let image = class_ops[k - 2].apply_integer(&v.coeffs);
            if image != scaled(&v.coeffs, nu) {
                failures.push(format!("vector {}: C({k})v ≠ {nu}v", a + 1));
            }
            let step = nu - v.chain.nu_at(k - 1);
            let jm: Vec<BigInt> = image.iter().zip(&previous).map(|(x, y)| x - y).collect();
            if jm != scaled(&v.coeffs, step) {
                jm_failures.push(format!("vector {}: X_{k}v ≠ {step}v", a + 1));
            }
            if v.tableau.content_of(k) != Some(step) {
                jm_failures.push(format!("vector {}: box {k} content ≠ {step}", a + 1));
            }
            previous = image;
        }
        for (s, (op, &label)) in state_ops.iter().zip(&v.chain.state_labels).enumerate() {
            if op.apply_integer(&v.coeffs) != scaled(&v.coeffs, label) {
                failures.push(format!("vector {}: state operator {}: Sv ≠ {label}v", a + 1, s + 1));
            }
        }
        match tableau_from_chain(&v.chain) {
            Ok(expected) if expected == v.tableau => {}
            _ => jm_failures.push(format!("vector {}: tableau does not match chain", a + 1)),
        }
    }
    report.record("chain_validity", "every ν_k is a content sum", chain_failures);
    report.record("eigen_equations", "every chain eigen-equation holds", failures);
    report.record("jucys_murphy", "contents match chain increments", jm_failures);

    let residue = t.vectors.iter().filter(|v| !v.is_labeled()).count();
    if count != dim {
        report.push(
            "completeness",
            CheckStatus::Fail,
            format!("{count} vectors for orbit size {dim}"),
        );
    } else if t.complete != (residue == 0) {
        report.push(
            "completeness",
            CheckStatus::Fail,
            format!("complete flag {} with {residue} unlabeled vectors", t.complete),
        );
    } else if !t.complete {
        report.push(
            "completeness",
            CheckStatus::Warn,
            format!("{count} vectors; residual degeneracy flagged on {residue} unlabeled vectors"),
        );
    } else {
        report.push(
            "completeness",
            CheckStatus::Pass,
            format!("{count} vectors, all labeled"),
        );
    }
    Ok(report)
}
