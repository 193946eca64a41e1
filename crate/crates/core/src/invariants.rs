//! Structural invariants of the operators and of a resolved table, run by the
//! `verify` command alongside [`crate::verify::verify_table`].

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::OrbitBasis;
use crate::error::Result;
use crate::linalg::{candidate_eigenvalues, eigenspace};
use crate::operators::PermutationSum;
use crate::perm::{all_permutations, Permutation};
use crate::solver::CGTable;
use crate::tableau::count_standard_tableaux;
use crate::verify::{small_coeffs, small_dot, Report};

/// Seed for every sampled group element, so reports are reproducible.
pub const SAMPLE_SEED: u64 = 0x5eed_c0de;

/// Number of sampled elements when `S_n` is too large to enumerate.
pub const SAMPLE_SIZE: usize = 10;

/// Largest degree for which the block-structure check runs over all of `S_n`.
pub const EXHAUSTIVE_DEGREE: usize = 4;

/// Largest orbit on which spectrum coverage is recomputed by direct kernels.
pub const DIRECT_SPECTRUM_DIM: usize = 60;

/// Largest orbit on which block structure is checked entry by entry; larger
/// orbits use the equivalent completeness of each block (Parseval).
pub const PAIRWISE_BLOCK_DIM: usize = 200;

fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::from_images(&images).expect("shuffle of 1..n is a bijection")
}

/// Group elements used by sampled checks: all of `S_n` for small `n`,
/// otherwise [`SAMPLE_SIZE`] seeded random elements.
pub fn sample_elements(n: usize) -> Result<Vec<Permutation>> {
    if n <= EXHAUSTIVE_DEGREE {
        return all_permutations(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    Ok((0..SAMPLE_SIZE).map(|_| random_permutation(n, &mut rng)).collect())
}

/// Operator-level invariants on an orbit basis.
pub fn check_operator_invariants(basis: &OrbitBasis, table: &CGTable) -> Result<Report> {
    let n = basis.degree();
    let dim = basis.len();
    let mut report = Report::default();

    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut failures = Vec::new();
    for _ in 0..SAMPLE_SIZE {
        let p = random_permutation(n, &mut rng);
        let q = random_permutation(n, &mut rng);
        let mp = basis.particle_image(&p)?;
        let mq = basis.particle_image(&q)?;
        let mpq = basis.particle_image(&p.compose(&q)?)?;
        if mq.iter().map(|&i| mp[i]).collect::<Vec<_>>() != mpq {
            failures.push(format!("M({p})M({q}) ≠ M({p}∘{q})"));
        }
    }
    report.record(
        "representation_property",
        format!("{SAMPLE_SIZE} sampled pairs"),
        failures,
    );

    let class_ops = (2..=n)
        .map(|k| PermutationSum::class(k, basis))
        .collect::<Result<Vec<_>>>()?;
    let mut failures = Vec::new();
    for (i, a) in class_ops.iter().enumerate() {
        if !a.to_matrix().is_symmetric() {
            failures.push(format!("C({}) not symmetric", i + 2));
        }
        for (j, b) in class_ops.iter().enumerate().skip(i + 1) {
            if !a.commutes_with(b)? {
                failures.push(format!("C({}) and C({}) do not commute", i + 2, j + 2));
            }
        }
    }
    report.record("class_operators_commute", "chain is commuting and symmetric", failures);

    let generators = (1..n)
        .map(|i| PermutationSum::particle(&[Permutation::transposition(i, i + 1, n)?], basis))
        .collect::<Result<Vec<_>>>()?;
    let state_ops = table
        .state_operators
        .iter()
        .map(|op| PermutationSum::state(op, basis))
        .collect::<Result<Vec<_>>>()?;
    let mut failures = Vec::new();
    for (s, op) in state_ops.iter().enumerate() {
        for (g, m) in generators.iter().enumerate() {
            if !op.commutes_with(m)? {
                failures.push(format!("state operator {} vs ({} {})", s + 1, g + 1, g + 2));
            }
        }
        for other in &state_ops[s + 1..] {
            if !op.commutes_with(other)? {
                failures.push(format!("state operator {} vs a later state operator", s + 1));
            }
        }
    }
    report.record(
        "state_operators_commute",
        format!("{} state operators against the particle action", state_ops.len()),
        failures,
    );

    // Every C(k) must be diagonalizable over the content sums. Small orbits
    // are checked by direct kernels, larger ones through the resolved table.
    let mut failures = Vec::new();
    for (idx, op) in class_ops.iter().enumerate() {
        let k = idx + 2;
        let candidates = candidate_eigenvalues(k)?;
        if dim <= DIRECT_SPECTRUM_DIM {
            let dense = op.to_matrix();
            let total: usize = candidates.iter().map(|&nu| eigenspace(&dense, nu).dim()).sum();
            if total != dim {
                failures.push(format!("C({k}): eigenspace dimensions sum to {total}, not {dim}"));
            }
        } else if table.vectors.len() != dim || table.vectors.iter().any(|v| !candidates.contains(&v.chain.nu_at(k))) {
            failures.push(format!("C({k}): table does not cover the orbit with content sums"));
        }
    }
    report.record(
        "spectrum_coverage",
        "content sums exhaust every C(k) spectrum",
        failures,
    );

    Ok(report)
}

/// Table-level invariants: block structure of the particle action in the
/// resolved basis and the multiplicity pattern of tableaux.
pub fn check_table_invariants(table: &CGTable) -> Result<Report> {
    let basis = &table.basis;
    let n = basis.degree();
    let mut report = Report::default();

    // For g in S_m, C(j) with j ≥ m and every state operator commute with g, so
    // ⟨v_a, g v_b⟩ vanishes unless the chains agree on ν_n … ν_m and on the
    // state labels.
    let elements = sample_elements(n)?;
    let pairwise = basis.len() <= PAIRWISE_BLOCK_DIM;
    let failures = block_structure_failures(table, &elements, pairwise)?;
    let method = if pairwise { "entrywise" } else { "by block norm" };
    report.record(
        "block_structure",
        format!("{} group elements, {method}", elements.len()),
        failures,
    );

    // Each realized shape shows all of its standard tableaux, equally often.
    let mut by_shape: BTreeMap<Vec<usize>, BTreeMap<String, usize>> = BTreeMap::new();
    for v in &table.vectors {
        *by_shape
            .entry(v.tableau.shape())
            .or_default()
            .entry(v.tableau.to_string())
            .or_default() += 1;
    }
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for (shape, counts) in &by_shape {
        let expected = count_standard_tableaux(shape) as usize;
        let mult: Vec<usize> = counts.values().copied().collect();
        if counts.len() != expected {
            failures.push(format!("shape {shape:?}: {} of {expected} tableaux", counts.len()));
        } else if mult.windows(2).any(|w| w[0] != w[1]) {
            failures.push(format!("shape {shape:?}: unequal multiplicities {mult:?}"));
        } else {
            summary.push(format!("{shape:?}×{}", mult[0]));
        }
    }
    report.record("multiplicity_structure", summary.join(" "), failures);
    Ok(report)
}

/// Off-block entries `⟨v_a, g v_b⟩` that fail to vanish, found entrywise or
/// through the block norm of each `g v_b`.
fn block_structure_failures(table: &CGTable, elements: &[Permutation], pairwise: bool) -> Result<Vec<String>> {
    let basis = &table.basis;
    let n = basis.degree();
    let count = table.vectors.len();
    let small = small_coeffs(table.vectors.iter().map(|v| v.coeffs.as_slice()));
    // Permuting a vector keeps its entries, so the small form is permuted too.
    let inner = |a: usize, moved: &[BigInt], moved_small: Option<&[i64]>| -> BigInt {
        match (&small, moved_small) {
            (Some(s), Some(m)) => BigInt::from(small_dot(&s[a], m)),
            _ => table.vectors[a].coeffs.iter().zip(moved).map(|(x, y)| x * y).sum(),
        }
    };
    let mut failures = Vec::new();
    for g in elements {
        let m = g.support_max().unwrap_or(1).max(2);
        let images = basis.particle_image(g)?;
        let same_block = |a: usize, b: usize| {
            let (va, vb) = (&table.vectors[a].chain, &table.vectors[b].chain);
            (m..=n).all(|j| va.nu_at(j) == vb.nu_at(j)) && va.state_labels == vb.state_labels
        };
        for b in 0..count {
            let vb = &table.vectors[b];
            let mut moved = vec![BigInt::zero(); vb.coeffs.len()];
            let mut moved_small = small.as_ref().map(|_| vec![0i64; vb.coeffs.len()]);
            for (j, &i) in images.iter().enumerate() {
                moved[i] = vb.coeffs[j].clone();
                if let (Some(ms), Some(s)) = (moved_small.as_mut(), &small) {
                    ms[i] = s[b][j];
                }
            }
            let moved_small = moved_small.as_deref();
            if pairwise {
                for a in (0..count).filter(|&a| !same_block(a, b)) {
                    let entry = inner(a, &moved, moved_small);
                    if !entry.is_zero() {
                        failures.push(format!("{g}: entry ({}, {}) = {entry}", a + 1, b + 1));
                    }
                }
            } else {
                // g·v_b keeps its norm, so it stays inside its block exactly
                // when the block captures all of that norm.
                let captured: BigRational = (0..count)
                    .filter(|&a| same_block(a, b))
                    .map(|a| {
                        let e = inner(a, &moved, moved_small);
                        BigRational::new(&e * &e, table.vectors[a].norm_sq.clone())
                    })
                    .sum();
                if captured != BigRational::from_integer(vb.norm_sq.clone()) {
                    failures.push(format!("{g}: vector {} leaks out of its block", b + 1));
                }
            }
        }
    }
    Ok(failures)
}

/// Every invariant check for a resolved table.
pub fn check_invariants(table: &CGTable) -> Result<Report> {
    let mut report = check_operator_invariants(&table.basis, table)?;
    report.extend(check_table_invariants(table)?);
    Ok(report)
}
