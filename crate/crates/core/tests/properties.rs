mod common;

use adlv_core::demazure::star;
use adlv_core::{AffineElt, AffineWeylGroup};
use common::Oracle;
use proptest::prelude::*;

const TYPES: [&str; 4] = ["A2", "B2", "A3", "G2"];
const ORACLE_TYPES: [&str; 3] = ["A2", "B2", "A3"];

fn group(t: &str) -> AffineWeylGroup {
    AffineWeylGroup::new(t.parse().unwrap())
}

/// A word in `s_0..s_n` times a length-zero element.
fn element(g: &AffineWeylGroup, word: &[usize], omega: usize) -> AffineElt {
    let n = g.rank();
    let word: Vec<usize> = word.iter().map(|i| i % (n + 1)).collect();
    let om = g.omega_elements();
    g.mul(&g.from_word(&word).unwrap(), &om[omega % om.len()])
}

fn word() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..8, 0..14)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn format_then_parse_is_identity(t in 0usize..4, w in word(), k in 0usize..4) {
        let g = group(TYPES[t]);
        let x = element(&g, &w, k);
        prop_assert_eq!(g.parse(&g.format(&x)).unwrap(), x.clone());
        prop_assert_eq!(g.parse(&g.format_word(&x)).unwrap(), x);
    }

    #[test]
    fn group_axioms(t in 0usize..4, a in word(), b in word(), c in word(), k in 0usize..4) {
        let g = group(TYPES[t]);
        let (x, y, z) = (element(&g, &a, k), element(&g, &b, 0), element(&g, &c, k + 1));
        prop_assert_eq!(g.mul(&g.mul(&x, &y), &z), g.mul(&x, &g.mul(&y, &z)));
        prop_assert!(g.mul(&x, &g.inverse(&x)).is_identity());
        prop_assert_eq!(g.length(&x), g.length(&g.inverse(&x)));
        prop_assert!(g.length(&g.mul(&x, &y)) <= g.length(&x) + g.length(&y));
    }

    #[test]
    fn simple_reflections_change_length_by_one(t in 0usize..4, w in word(), i in 0usize..8) {
        let g = group(TYPES[t]);
        let x = element(&g, &w, 1);
        let i = i % (g.rank() + 1);
        let l = g.length(&x) as i64;
        prop_assert_eq!((g.length(&g.mul(g.s(i), &x)) as i64 - l).abs(), 1);
        prop_assert_eq!((g.length(&g.mul(&x, g.s(i))) as i64 - l).abs(), 1);
        prop_assert_eq!(g.length(&g.conj_simple(i, &x)) as i64 % 2, l % 2);
    }

    #[test]
    fn length_matches_alcove_count(t in 0usize..3, w in word(), k in 0usize..4) {
        let g = group(ORACLE_TYPES[t]);
        let o = Oracle::new(ORACLE_TYPES[t]);
        let x = element(&g, &w, k);
        prop_assert_eq!(g.length(&x), o.alcove_length(&o.to_aff(&g, &x)));
    }

    #[test]
    fn decomposition_recomposes(t in 0usize..4, w in word(), k in 0usize..4) {
        let g = group(TYPES[t]);
        let x = element(&g, &w, k);
        let d = g.canonical_decomposition(&x);
        prop_assert!(d.mu.is_dominant());
        prop_assert_eq!(g.recompose(&d), x.clone());
        prop_assert_eq!(g.eta2_by_search(&x), g.eta2(&x));
    }

    #[test]
    fn demazure_product_laws(t in 0usize..4, a in word(), b in word(), c in word()) {
        let g = group(TYPES[t]);
        let (x, y, z) = (element(&g, &a, 0), element(&g, &b, 0), element(&g, &c, 0));
        let xy = star(&g, &x, &y);
        prop_assert_eq!(star(&g, &xy, &z), star(&g, &x, &star(&g, &y, &z)));
        prop_assert!(g.length(&xy) >= g.length(&x).max(g.length(&y)));
        prop_assert!(g.length(&xy) <= g.length(&x) + g.length(&y));
        prop_assert!(g.bruhat_leq(&g.mul(&x, &y), &xy));
        if g.length(&g.mul(&x, &y)) == g.length(&x) + g.length(&y) {
            prop_assert_eq!(xy, g.mul(&x, &y));
        }
    }

    #[test]
    fn conjugation_keeps_kappa_and_omega_conjugation_keeps_length(
        t in 0usize..4, w in word(), u in word(), k in 0usize..4
    ) {
        let g = group(TYPES[t]);
        let x = element(&g, &w, k);
        let h = element(&g, &u, 0);
        prop_assert_eq!(g.kappa(&g.conjugate(&h, &x)), g.kappa(&x));
        for tau in g.omega_elements() {
            let y = g.conjugate(tau, &x);
            prop_assert_eq!(g.length(&y), g.length(&x));
            prop_assert_eq!(g.is_shrunken(&y), g.is_shrunken(&x));
        }
    }
}
