//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! fail. Runs without the test harness so the lines always show.

use std::process::{Command, ExitCode};
use std::time::Instant;

use num_bigint::BigInt;
use symadapt_core::invariants::check_invariants;
use symadapt_core::{
    candidate_eigenvalues, class_operator, class_spectrum, column_span, eigenspace, resolve, spectral_projector,
    tableau::partitions, verify_table, CGTable, Configuration, OrbitBasis, RationalMatrix, StateAlphabet,
    StateOperator,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn basis(word: &str) -> OrbitBasis {
    let alphabet = StateAlphabet::inferred_from(word).unwrap();
    let config = Configuration::parse(word, &alphabet).unwrap();
    OrbitBasis::orbit(&alphabet, &config).unwrap()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn up_to_sign(got: &[BigInt], want: &[i64]) -> bool {
    let want = ints(want);
    let negated: Vec<BigInt> = want.iter().map(|x| -x).collect();
    got == want.as_slice() || got == negated.as_slice()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Checks `(chain, state labels, coefficients up to sign, norm², tableau rows)`.
type Golden<'a> = (&'a [i64], &'a [i64], &'a [i64], i64, Option<Vec<Vec<usize>>>);

fn match_goldens(t: &CGTable, expected: &[Golden]) -> Result<(), String> {
    ensure(t.complete, || "table flagged incomplete".into())?;
    ensure(t.vectors.len() == expected.len(), || {
        format!("{} vectors", t.vectors.len())
    })?;
    for (i, (v, (nu, states, coeffs, norm, rows))) in t.vectors.iter().zip(expected).enumerate() {
        ensure(v.chain.nu == *nu && v.chain.state_labels == *states, || {
            format!("vector {}: labels {}", i + 1, v.chain)
        })?;
        ensure(
            up_to_sign(&v.coeffs, coeffs) && v.norm_sq == BigInt::from(*norm),
            || format!("vector {}: {:?}/√{}", i + 1, v.coeffs, v.norm_sq),
        )?;
        if let Some(rows) = rows {
            ensure(v.tableau.rows() == rows.as_slice(), || {
                format!("vector {}: tableau {}", i + 1, v.tableau)
            })?;
        }
    }
    Ok(())
}

fn two_particles() -> Outcome {
    let t = resolve(&basis("ab"), &[]).map_err(|e| e.to_string())?;
    match_goldens(&t, &[(&[1], &[], &[1, 1], 2, None), (&[-1], &[], &[1, -1], 2, None)])?;
    Ok("(1,1)/√2 with ν=1, (1,−1)/√2 with ν=−1".into())
}

fn two_alpha_one_beta() -> Outcome {
    let t = resolve(&basis("aab"), &[]).map_err(|e| e.to_string())?;
    match_goldens(
        &t,
        &[
            (&[3, 1], &[], &[1, 1, 1], 3, Some(vec![vec![1, 2, 3]])),
            (&[0, 1], &[], &[2, -1, -1], 6, Some(vec![vec![1, 2], vec![3]])),
            (&[0, -1], &[], &[0, 1, -1], 2, Some(vec![vec![1, 3], vec![2]])),
        ],
    )?;
    Ok("√(1/3)(1,1,1), √(1/6)(2,−1,−1), √(1/2)(0,1,−1) with tableaux".into())
}

fn three_distinct_states() -> Outcome {
    let b = basis("abc")
        .with_ordering_text(include_str!("../fixtures/s3_reference.ord"))
        .map_err(|e| e.to_string())?;
    let op = StateOperator::parse("(a b)", b.alphabet()).map_err(|e| e.to_string())?;
    let t = resolve(&b, &[op]).map_err(|e| e.to_string())?;
    match_goldens(
        &t,
        &[
            (&[3, 1], &[1], &[1, 1, 1, 1, 1, 1], 6, None),
            (&[0, 1], &[1], &[2, 2, -1, -1, -1, -1], 12, None),
            (&[0, 1], &[-1], &[0, 0, -1, 1, 1, -1], 4, None),
            (&[0, -1], &[1], &[0, 0, -1, 1, -1, 1], 4, None),
            (&[0, -1], &[-1], &[2, -2, 1, 1, -1, -1], 12, None),
            (&[-3, -1], &[-1], &[1, -1, -1, -1, 1, 1], 6, None),
        ],
    )?;
    Ok("six vectors up to sign; labels (3,1,1) (0,1,1) (0,1,−1) (0,−1,1) (0,−1,−1) (−3,−1,−1)".into())
}

fn spectrum_of_top_class() -> Outcome {
    let b = basis("abc");
    let op = class_operator(3, &b).map_err(|e| e.to_string())?;
    let mut found = Vec::new();
    for nu in candidate_eigenvalues(3).map_err(|e| e.to_string())? {
        let d = eigenspace(&op, nu).dim();
        if d > 0 {
            found.push((nu, d));
        }
    }
    ensure(found == [(-3, 1), (0, 4), (3, 1)], || format!("{found:?}"))?;
    let sparse: Vec<_> = class_spectrum(&b, 3).map_err(|e| e.to_string())?.into_iter().collect();
    ensure(sparse == found, || format!("branching spectrum {sparse:?}"))?;
    Ok("{3×1, −3×1, 0×4}".into())
}

fn property_suite() -> Outcome {
    let start = Instant::now();
    let mut sizes = Vec::new();
    for word in ["abcd", "aabb", "aabc", "abcde", "aabbc"] {
        let t = resolve(&basis(word), &[]).map_err(|e| format!("{word}: {e}"))?;
        let mut report = verify_table(&t).map_err(|e| e.to_string())?;
        report.extend(check_invariants(&t).map_err(|e| e.to_string())?);
        ensure(report.passed(), || format!("{word}:\n{report}"))?;
        sizes.push(format!("{word}:{}", t.vectors.len()));
    }
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs_f64() < 30.0, || format!("took {elapsed:.1?}"))?;
    Ok(format!("{} in {elapsed:.2?}", sizes.join(" ")))
}

fn oracle_equivalence() -> Outcome {
    let mut orbits = 0;
    let mut spaces = 0;
    for n in 2..=8 {
        for shape in partitions(n) {
            let word: String = shape
                .iter()
                .enumerate()
                .flat_map(|(i, &m)| std::iter::repeat_n((b'a' + i as u8) as char, m))
                .collect();
            let b = basis(&word);
            if b.len() > 24 {
                continue;
            }
            orbits += 1;
            for k in 2..=n {
                let op = class_operator(k, &b).map_err(|e| e.to_string())?;
                let m = RationalMatrix::from(&op);
                let candidates = candidate_eigenvalues(k).map_err(|e| e.to_string())?;
                for &nu in &candidates {
                    let p = spectral_projector(&m, nu, &candidates).map_err(|e| e.to_string())?;
                    let span = column_span(&p).map_err(|e| e.to_string())?;
                    ensure(span == eigenspace(&op, nu), || format!("{word}, C({k}), ν={nu}"))?;
                    spaces += 1;
                }
            }
        }
    }
    Ok(format!("{orbits} orbits, {spaces} eigenspaces"))
}

fn candidate_completeness() -> Outcome {
    let mut checked = 0;
    for word in ["ab", "aab", "abc", "abcd", "aabb", "aabc", "abcde", "aabbc", "aaabb"] {
        let b = basis(word);
        for k in 2..=b.degree().min(5) {
            let candidates = candidate_eigenvalues(k).map_err(|e| e.to_string())?;
            let spectrum = class_spectrum(&b, k).map_err(|e| e.to_string())?;
            ensure(spectrum.keys().all(|nu| candidates.contains(nu)), || {
                format!("{word}, C({k})")
            })?;
            let total: usize = spectrum.values().sum();
            ensure(total == b.len(), || format!("{word}, C({k}): {total} of {}", b.len()))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (orbit, k) pairs"))
}

fn deterministic_output() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_symadapt"))
            .args(["basis", "--config", "aabc", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.success() && b.status.success(), || "non-zero exit".into())?;
    ensure(a.stdout == b.stdout, || "outputs differ".into())?;
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 two-particle golden", two_particles),
        ("2 two-alpha-one-beta golden", two_alpha_one_beta),
        ("3 three-distinct-state golden", three_distinct_states),
        ("4 top class spectrum", spectrum_of_top_class),
        ("5 property suite", property_suite),
        ("6 oracle equivalence", oracle_equivalence),
        ("7 candidate completeness", candidate_completeness),
        ("8 deterministic output", deterministic_output),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                println!("FAIL {name}: {detail}");
                failed.push(name);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed {failed:?}");
        ExitCode::FAILURE
    }
}
