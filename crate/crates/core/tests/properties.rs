use proptest::prelude::*;

use tfpl_core::dyck::{enumerate_dyck, DyckWord};
use tfpl_core::lr::lr_coefficient;
use tfpl_core::partition::Partition;
use tfpl_core::poly::{integer, interpolate, ssyt_count_polynomial, ssyt_enumerate, Polynomial};

fn dyck_word(max_n: usize) -> impl Strategy<Value = DyckWord> {
    (1..=max_n).prop_flat_map(|n| {
        let words = enumerate_dyck(n);
        (0..words.len()).prop_map(move |i| words[i].clone())
    })
}

fn partition(max_rows: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn diagram_round_trip(w in dyck_word(7)) {
        let d = w.diagram();
        prop_assert_eq!(d.size(), w.degree());
        prop_assert!(d.fits_staircase(w.n()));
        prop_assert_eq!(DyckWord::from_diagram(&d, w.n()).unwrap(), w.clone());
        prop_assert_eq!(w.link_pattern().to_word(), w);
    }

    #[test]
    fn conjugate_transposes(w in dyck_word(7)) {
        prop_assert_eq!(w.conjugate().conjugate(), w.clone());
        prop_assert_eq!(w.conjugate().diagram(), w.diagram().transpose());
        prop_assert_eq!(w.conjugate().degree(), w.degree());
    }

    #[test]
    fn outer_arcs_keep_the_diagram(w in dyck_word(5), m in 0usize..4) {
        let big = w.with_outer_arcs(m);
        prop_assert_eq!(big.n(), w.n() + m);
        prop_assert_eq!(big.diagram(), w.diagram());
    }

    #[test]
    fn hook_content_matches_enumeration(l in partition(3, 3), n in 1usize..5) {
        let poly = ssyt_count_polynomial(&l);
        prop_assert_eq!(poly.degree().unwrap_or(0), l.size());
        let direct = ssyt_enumerate(&l, n);
        prop_assert_eq!(poly.eval_int(n as i64), integer(i64::try_from(direct).unwrap()));
    }

    #[test]
    fn interpolation_is_exact(coeffs in prop::collection::vec(-20i64..20, 1..6)) {
        let p = Polynomial::new(coeffs.into_iter().map(integer).collect());
        let pts: Vec<_> = (0..6).map(|x| (integer(x), p.eval_int(x))).collect();
        prop_assert_eq!(interpolate(&pts).unwrap(), p);
    }

    #[test]
    fn lr_symmetric_and_vanishing(l in partition(3, 3), mu in partition(2, 2), nu in partition(2, 2)) {
        let c = lr_coefficient(&l, &mu, &nu);
        prop_assert_eq!(c.clone(), lr_coefficient(&l, &nu, &mu));
        if mu.size() + nu.size() != l.size() || !l.contains(&mu) || !l.contains(&nu) {
            prop_assert_eq!(c, Default::default());
        }
    }
}
