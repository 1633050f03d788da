use std::path::Path;

use sudiag::cyclic_products::{
    arity_support, check_m4_table, evaluate_witness, snake_matrix, snake_trees, verify_snake_derived, SnakeSpec, Variant,
    WitnessMode,
};
use sudiag::derived_matrices;
use sudiag::trees::is_nondegenerate_matrix;

const VARIANTS: [Variant; 3] = [Variant::Full, Variant::DropRight, Variant::DropDown];

fn specs(max_arity: usize) -> Vec<SnakeSpec> {
    let mut out = Vec::new();
    for n in 4..=6 {
        for m in 4..=n {
            for k in 0..=3 {
                for v in VARIANTS {
                    if let Ok(s) = SnakeSpec::new(n, m, k, v) {
                        if s.arity() <= max_arity {
                            out.push(s);
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn small_snakes_are_derived() {
    for s in specs(7) {
        let set = derived_matrices(s.arity() - 1).unwrap();
        assert!(set.contains(&snake_matrix(&s).unwrap()), "{s}");
    }
}

#[test]
fn snakes_alternate_large_corollas() {
    for s in specs(usize::MAX) {
        assert!(is_nondegenerate_matrix(&snake_matrix(&s).unwrap()), "{s}");
        verify_snake_derived(&s).unwrap();
        let (l, r) = snake_trees(&s).unwrap();
        let large = |t: &sudiag::trees::PlanarTree, a: usize| t.arities().iter().filter(|&&x| x > 2).all(|&x| x == a);
        assert!(large(&l, s.n) && large(&r, s.m), "{s}");
    }
}

#[test]
fn snake_only_witnesses_are_nonzero() {
    for s in specs(usize::MAX).into_iter().filter(|s| s.k >= 1) {
        assert!(!evaluate_witness(&s, WitnessMode::SnakeOnly).unwrap().is_zero(), "{s}");
    }
}

#[test]
fn full_diagonal_agrees_with_snake_only() {
    for s in specs(8).into_iter().filter(|s| s.k >= 1) {
        assert_eq!(
            evaluate_witness(&s, WitnessMode::FullDiagonal).unwrap(),
            evaluate_witness(&s, WitnessMode::SnakeOnly).unwrap(),
            "{s}"
        );
    }
}

#[test]
fn support_is_within_the_predicted_arities() {
    for (n, m) in [(4, 4), (5, 4), (6, 4)] {
        let r = arity_support(n, m, (n + m - 1).min(8), 4).unwrap();
        let allowed = [2, n, m, n + m - 2];
        assert!(r.support.iter().all(|k| allowed.contains(k)), "{n}, {m}: {:?}", r.support);
        assert!([2, n, m].iter().all(|k| r.support.contains(k)), "{n}, {m}: {:?}", r.support);
    }
}

#[test]
fn m4_table_golden() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/c4c4_m4.txt");
    let got = check_m4_table(4).unwrap().table_text();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &got).unwrap();
    }
    assert_eq!(got, std::fs::read_to_string(&path).unwrap());
}
