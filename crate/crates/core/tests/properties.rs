use gue_core::cli::{Cell, OutputRecord};
use gue_core::exact::{rational, Rational};
use gue_core::maps::{
    best_forward, best_inverse, directed_double, enumerate_maps, enumerate_pairings, eulerian_count_rooted,
    harer_zagier_closed, harer_zagier_from_counts, moment_wick, rosette_genus, Multigraph,
};
use gue_core::montecarlo::{hermitian_eigenvalues, sample_gue_indexed, EIGEN_TOLERANCE};
use gue_core::observables::{
    density, density_eval, moment_exact, moment_genus_expansion, wilson_bound, wilson_eval, wilson_loop, MatrixSize,
};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn size(n: u32) -> MatrixSize {
    MatrixSize::new(n).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rosette_genus_parity(l in 1usize..=6, pick in any::<prop::sample::Index>()) {
        let pairings: Vec<_> = enumerate_pairings(l).unwrap().collect();
        let p = &pairings[pick.index(pairings.len())];
        let f = p.face_count();
        prop_assert!(l + 1 >= f && (l + 1 - f) % 2 == 0);
        prop_assert_eq!(rosette_genus(p), (l + 1 - f) / 2);
    }

    #[test]
    fn wick_equals_closed_form(n in 1u32..=6, l in 1usize..=6) {
        prop_assert_eq!(moment_wick(size(n), l).unwrap(), moment_exact(size(n), l));
    }

    #[test]
    fn genus_expansion_reassembles(n in 1u32..=12, l in 0usize..=9) {
        let inv = Rational::new(BigInt::one(), BigInt::from(n).pow(2));
        let mut power = Rational::one();
        let mut sum = Rational::zero();
        for c in moment_genus_expansion(l, l) {
            sum += c * &power;
            power *= &inv;
        }
        prop_assert_eq!(sum, moment_exact(size(n), l));
    }

    #[test]
    fn harer_zagier_routes_agree(n in 1u32..=8, p_max in 1usize..=6) {
        prop_assert_eq!(harer_zagier_closed(size(n), p_max), harer_zagier_from_counts(size(n), p_max));
    }

    #[test]
    fn wilson_real_even_and_bounded(n in 1u32..=12, re in -8.0f64..8.0, im in -4.0f64..4.0) {
        let w = wilson_loop(size(n));
        let i = wilson_eval(&w, Complex64::new(re, 0.0));
        prop_assert_eq!(i.im, 0.0);
        prop_assert_eq!(i, wilson_eval(&w, Complex64::new(-re, 0.0)));
        let t = Complex64::new(re, im);
        prop_assert!(wilson_eval(&w, t).norm() <= wilson_bound(size(n), t));
    }

    #[test]
    fn density_symmetric_and_nonnegative(n in 1u32..=16, x in 0.0f64..5.0) {
        let d = density(size(n));
        let (a, b) = (density_eval(&d, x), density_eval(&d, -x));
        prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1e-300));
        prop_assert!(a >= -1e-15);
    }

    #[test]
    fn eigenvalue_trace_identities(n in 1u32..=12, seed in any::<u64>(), index in 0u64..1000) {
        let h = sample_gue_indexed(size(n), seed, index);
        let e = hermitian_eigenvalues(&h, EIGEN_TOLERANCE).unwrap();
        let tr2 = h.trace_squared();
        prop_assert!((e.iter().sum::<f64>() - h.trace()).abs() <= 1e-10);
        prop_assert!((e.iter().map(|x| x * x).sum::<f64>() - tr2).abs() <= 1e-9 * tr2.max(1.0));
        prop_assert_eq!(h, sample_gue_indexed(size(n), seed, index));
    }

    #[test]
    fn csv_round_trip(
        ints in prop::collection::vec(any::<i64>(), 1..6),
        dens in prop::collection::vec(1i64..1000, 1..6),
        floats in prop::collection::vec(any::<f64>().prop_filter("finite", |f| f.is_finite()), 1..6),
        text in "[a-z ,\"]{0,8}",
    ) {
        let mut r = OutputRecord::new("prop", &["int", "ratio", "float", "text"]).param("k", "v w");
        for i in 0..ints.len().min(dens.len()).min(floats.len()) {
            r.push(vec![
                Cell::int(ints[i]),
                Cell::rational(rational(ints[i], dens[i])),
                Cell::Float(floats[i]),
                Cell::text(format!("_{text}")),
            ]);
        }
        let csv = r.to_csv().unwrap();
        prop_assert_eq!(OutputRecord::from_csv(&csv).unwrap(), r);
    }

    #[test]
    fn connectivity_matches_eulerian_existence(
        v in 1usize..=4,
        raw in prop::collection::vec((0usize..4, 0usize..4), 1..=5),
    ) {
        let edges: Vec<(usize, usize)> = raw.iter().map(|&(a, b)| (a % v, b % v)).collect();
        let g = Multigraph::from_edges(v, &edges).unwrap();
        let d = directed_double(&g);
        let count = eulerian_count_rooted(&d, 0).unwrap();
        prop_assert_eq!(count > 0, g.is_connected());
    }

    #[test]
    fn bijection_round_trip(
        v in 1usize..=3,
        raw in prop::collection::vec((0usize..3, 0usize..3), 1..=4),
        pick in any::<(prop::sample::Index, prop::sample::Index, prop::sample::Index)>(),
    ) {
        let edges: Vec<(usize, usize)> = raw.iter().map(|&(a, b)| (a % v, b % v)).collect();
        let g = Multigraph::from_edges(v, &edges).unwrap();
        prop_assume!(g.is_connected());
        let maps = enumerate_maps(&g).unwrap();
        let trees = g.spanning_trees();
        let m = &maps[pick.0.index(maps.len())];
        let t = &trees[pick.1.index(trees.len())];
        let root = pick.2.index(2 * g.edge_count());
        let c = best_forward(m, t, root).unwrap();
        let (m2, t2) = best_inverse(&c, &g, root).unwrap();
        prop_assert_eq!(m2.rotation(), m.rotation());
        prop_assert_eq!(&t2, t);
        prop_assert_eq!(best_forward(&m2, &t2, root).unwrap(), c);
    }
}
