mod common;

use common::{basis, ints, table};
use symadapt_core::{candidate_eigenvalues, class_spectrum, resolve, StateOperator};

fn tableau_rows(t: &symadapt_core::StandardTableau) -> Vec<Vec<usize>> {
    t.rows().to_vec()
}

#[test]
fn two_particles() {
    let t = table("ab");
    assert!(t.complete);
    let got: Vec<_> = t
        .vectors
        .iter()
        .map(|v| (v.chain.nu.clone(), v.coeffs.clone(), v.norm_sq.clone()))
        .collect();
    assert_eq!(
        got,
        vec![(vec![1], ints(&[1, 1]), 2.into()), (vec![-1], ints(&[1, -1]), 2.into()),]
    );
}

#[test]
fn two_alpha_one_beta() {
    let t = table("aab");
    assert_eq!(t.basis.words(), ["aab", "aba", "baa"]);
    let got: Vec<_> = t
        .vectors
        .iter()
        .map(|v| {
            (
                v.chain.nu.clone(),
                v.coeffs.clone(),
                v.norm_sq.clone(),
                tableau_rows(&v.tableau),
            )
        })
        .collect();
    assert_eq!(
        got,
        vec![
            (vec![3, 1], ints(&[1, 1, 1]), 3.into(), vec![vec![1, 2, 3]]),
            (vec![0, 1], ints(&[2, -1, -1]), 6.into(), vec![vec![1, 2], vec![3]]),
            (vec![0, -1], ints(&[0, 1, -1]), 2.into(), vec![vec![1, 3], vec![2]]),
        ]
    );
}

#[test]
fn three_distinct_states_in_reference_ordering() {
    let b = basis("abc")
        .with_ordering_text("abc\nbac\ncba\nacb\ncab\nbca\n")
        .unwrap();
    let op = StateOperator::parse("(a b)", b.alphabet()).unwrap();
    let t = resolve(&b, &[op]).unwrap();
    assert!(t.complete);
    let expected: [(&[i64], i64, &[i64], i64); 6] = [
        (&[3, 1], 1, &[1, 1, 1, 1, 1, 1], 6),
        (&[0, 1], 1, &[2, 2, -1, -1, -1, -1], 12),
        (&[0, 1], -1, &[0, 0, -1, 1, 1, -1], 4),
        (&[0, -1], 1, &[0, 0, -1, 1, -1, 1], 4),
        (&[0, -1], -1, &[2, -2, 1, 1, -1, -1], 12),
        (&[-3, -1], -1, &[1, -1, -1, -1, 1, 1], 6),
    ];
    assert_eq!(t.vectors.len(), 6);
    for (v, (nu, s, coeffs, norm)) in t.vectors.iter().zip(expected) {
        assert_eq!(v.chain.nu, nu);
        assert_eq!(v.chain.state_labels, [s]);
        let negated: Vec<_> = v.coeffs.iter().map(|c| -c).collect();
        assert!(
            v.coeffs == ints(coeffs) || negated == ints(coeffs),
            "{}: {:?}",
            v.chain,
            v.coeffs
        );
        assert_eq!(v.norm_sq, norm.into());
    }
}

#[test]
fn symmetric_word() {
    let t = table("aaa");
    assert_eq!(t.vectors.len(), 1);
    assert_eq!(t.vectors[0].coeffs, ints(&[1]));
    assert_eq!(t.vectors[0].chain.nu, [3, 1]);
    assert!(t.state_operators.is_empty());
}

#[test]
fn class_spectra() {
    let spec = |w: &str, k| class_spectrum(&basis(w), k).unwrap().into_iter().collect::<Vec<_>>();
    assert_eq!(spec("abc", 3), [(-3, 1), (0, 4), (3, 1)]);
    assert_eq!(spec("aab", 3), [(0, 2), (3, 1)]);
    assert_eq!(spec("ab", 2), [(-1, 1), (1, 1)]);
}

#[test]
fn content_sums() {
    let c = |k| candidate_eigenvalues(k).unwrap().into_iter().collect::<Vec<_>>();
    assert_eq!(c(2), [-1, 1]);
    assert_eq!(c(3), [-3, 0, 3]);
    assert_eq!(c(4), [-6, -2, 0, 2, 6]);
    assert!(candidate_eigenvalues(1).is_err());
}

#[test]
fn default_state_operators_resolve_five_distinct_states() {
    let t = table("abcde");
    assert!(t.complete);
    assert_eq!(t.vectors.len(), 120);
    assert_eq!(t.state_operators.len(), 3);
}

#[test]
fn residue_is_flagged_not_hidden() {
    let b = basis("abcd");
    let op = StateOperator::parse("(a b)", b.alphabet()).unwrap();
    let t = resolve(&b, &[op]).unwrap();
    assert!(!t.complete);
    assert_eq!(t.vectors.len(), 24);
    assert!(t.vectors.iter().any(|v| !v.is_labeled()));
    assert!(symadapt_core::verify_table(&t).unwrap().passed());
}
