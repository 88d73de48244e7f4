mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::random_lamination;
use stasheff::cluster_atlas::x_var_names;
use stasheff::exact_algebra::{tropicalize, LaurentPolynomial};
use stasheff::tropical_points::{chart_change, phi, phi_inverse, TropicalCoords};
use stasheff::weighted_graph::{dominates, graph_from_cut_stats};
use stasheff::{Polygon, WeightedGraph};

fn vars() -> Vec<String> {
    x_var_names(3)
}

fn laurent(max_terms: usize, positive: bool) -> impl Strategy<Value = LaurentPolynomial> {
    let coeff = if positive { 1i64..6 } else { -5i64..6 };
    prop::collection::vec((prop::collection::vec(-3i64..4, 3), coeff), 1..max_terms).prop_map(|terms| {
        let terms = terms.into_iter().map(|(e, c)| (e, BigInt::from(c)));
        LaurentPolynomial::from_terms(&vars(), terms).unwrap()
    })
}

/// Symmetric matrix with non-negative diagonals and arbitrary edges.
fn graph(n_gon: usize) -> impl Strategy<Value = WeightedGraph> {
    let polygon = Polygon::new(n_gon).unwrap();
    let segs: Vec<_> = polygon.segments().collect();
    prop::collection::vec(-3i64..4, segs.len()).prop_map(move |ws| {
        let mut g = WeightedGraph::zero(polygon);
        for (s, w) in segs.iter().zip(ws) {
            let w = if polygon.is_diagonal(*s) { w.abs() } else { w };
            g.set(*s, w).unwrap();
        }
        g
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_division_undoes_multiplication(f in laurent(5, false), g in laurent(4, false)) {
        prop_assume!(!g.is_zero());
        let fg = f.mul(&g).unwrap();
        prop_assert_eq!(fg.exact_div(&g).unwrap(), f);
    }

    #[test]
    fn ring_laws(f in laurent(4, false), g in laurent(4, false), h in laurent(3, false)) {
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        let lhs = f.mul(&g.add(&h).unwrap()).unwrap();
        let rhs = f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(f.sub(&f).unwrap().is_zero());
    }

    #[test]
    fn text_roundtrip(f in laurent(5, false)) {
        prop_assert_eq!(LaurentPolynomial::parse(&f.to_string(), &vars()).unwrap(), f);
    }

    #[test]
    fn tropicalization_is_multiplicative_and_convex(
        f in laurent(4, true),
        g in laurent(4, true),
        x in prop::collection::vec(-5i64..6, 3),
        y in prop::collection::vec(-5i64..6, 3),
    ) {
        let (tf, tg) = (tropicalize(&f).unwrap(), tropicalize(&g).unwrap());
        let tfg = tropicalize(&f.mul(&g).unwrap()).unwrap();
        prop_assert_eq!(tfg.eval(&x).unwrap(), tf.eval(&x).unwrap() + tg.eval(&x).unwrap());
        let xy: Vec<i64> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
        prop_assert!(tf.eval(&xy).unwrap() <= tf.eval(&x).unwrap() + tf.eval(&y).unwrap());
        // Tropicalization of a sum is the max.
        let tsum = tropicalize(&f.add(&g).unwrap()).unwrap();
        prop_assert_eq!(tsum.eval(&x).unwrap(), tf.eval(&x).unwrap().max(tg.eval(&x).unwrap()));
    }

    #[test]
    fn cut_statistics_determine_the_graph(g in graph(6)) {
        let stats = g.stats();
        prop_assert_eq!(graph_from_cut_stats(stats.cut_matrix()).unwrap(), g.clone());
        // Γ_{1,N} = ½ Σ R_p.
        let total: i64 = stats.r_vector().iter().sum();
        prop_assert_eq!(2 * stats.gamma(1, 6), total);
    }

    #[test]
    fn dominance_is_a_partial_order(a in graph(5), b in graph(5), c in graph(5)) {
        prop_assert!(dominates(&a, &a).unwrap());
        if dominates(&a, &b).unwrap() && dominates(&b, &a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if dominates(&a, &b).unwrap() && dominates(&b, &c).unwrap() {
            prop_assert!(dominates(&a, &c).unwrap());
        }
    }

    #[test]
    fn coordinates_roundtrip_and_add(seed in any::<u64>(), n_gon in 5usize..9) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let polygon = Polygon::new(n_gon).unwrap();
        let l = random_lamination(&mut r, polygon, 4);
        for t in polygon.triangulations().iter().step_by(7) {
            let c = phi(&l, t).unwrap();
            prop_assert_eq!(&phi_inverse(&c).unwrap(), &l);
            // Coordinates are linear on sums that stay laminations.
            let m = random_lamination(&mut r, polygon, 4);
            if let Ok(sum) = l.try_add(&m) {
                let cm = phi(&m, t).unwrap();
                let want: Vec<i64> = c.to_vec().iter().zip(cm.to_vec()).map(|(a, b)| a + b).collect();
                prop_assert_eq!(phi(&sum, t).unwrap().to_vec(), want);
            }
        }
    }

    #[test]
    fn rational_chart_changes_roundtrip(
        vals in prop::collection::vec((-20i64..21, 1i64..5), 3),
        i in 0usize..14,
        j in 0usize..14,
    ) {
        let polygon = Polygon::new(6).unwrap();
        let charts = polygon.triangulations();
        let v: Vec<BigRational> = vals.iter().map(|(p, q)| BigRational::new((*p).into(), (*q).into())).collect();
        let c = TropicalCoords::from_vec(charts[i].clone(), v).unwrap();
        let there = chart_change(&c, &charts[j]).unwrap();
        prop_assert_eq!(chart_change(&there, &charts[i]).unwrap(), c.clone());
        // The rational lamination is chart-independent as well.
        prop_assert_eq!(phi_inverse(&there).unwrap(), phi_inverse(&c).unwrap());
    }
}
