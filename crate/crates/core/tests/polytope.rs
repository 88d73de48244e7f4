mod common;

use std::collections::BTreeSet;

use rand::Rng;

use common::{random_lamination, random_triangulation, rng, seg};
use stasheff::polytope::{
    face_membership, hull_membership, is_nondegenerate, is_stasheff, lattice_points, lattice_points_in_chart,
    minkowski_c, minkowski_sum_sets, shift_to_negative_part, vertex, vertices_contained, Face, StasheffSpec,
};
use stasheff::tropical_points::{phi, phi_inverse, Lamination, TropicalCoords};
use stasheff::{Error, Polygon, Triangulation};

fn random_points(r: &mut impl Rng, polygon: Polygon, m: usize) -> Vec<Lamination> {
    (0..m).map(|_| random_lamination(r, polygon, 3)).collect()
}

#[test]
fn specs_of_points_add() {
    let polygon = Polygon::new(6).unwrap();
    let mut r = rng(11);
    for _ in 0..30 {
        let a = random_points(&mut r, polygon, 2);
        let b = random_points(&mut r, polygon, 2);
        let both: Vec<Lamination> = a.iter().chain(&b).cloned().collect();
        let (ca, cb) = (minkowski_c(&a).unwrap(), minkowski_c(&b).unwrap());
        assert_eq!(minkowski_c(&both).unwrap(), ca.try_add(&cb).unwrap());
        assert_eq!(minkowski_sum_sets(&ca, &cb).unwrap(), ca.try_add(&cb).unwrap());
        assert!(is_stasheff(&ca) && vertices_contained(&ca));
    }
}

#[test]
fn minkowski_sums_are_associative_and_checked() {
    let polygon = Polygon::new(5).unwrap();
    let mut r = rng(12);
    for _ in 0..20 {
        let s: Vec<StasheffSpec> = (0..3).map(|_| minkowski_c(&random_points(&mut r, polygon, 2)).unwrap()).collect();
        let left = minkowski_sum_sets(&minkowski_sum_sets(&s[0], &s[1]).unwrap(), &s[2]).unwrap();
        let right = minkowski_sum_sets(&s[0], &minkowski_sum_sets(&s[1], &s[2]).unwrap()).unwrap();
        assert_eq!(left, right);
    }
    let bad = StasheffSpec::from_fn(polygon, |d| if d == seg(1, 3) { -5 } else { 0 });
    assert!(!is_stasheff(&bad));
    assert_eq!(minkowski_sum_sets(&bad, &bad), Err(Error::NotStasheff));
}

#[test]
fn lattice_points_do_not_depend_on_the_chart() {
    for n_gon in [5, 6] {
        let polygon = Polygon::new(n_gon).unwrap();
        let mut r = rng(13 + n_gon as u64);
        for _ in 0..6 {
            let spec = minkowski_c(&random_points(&mut r, polygon, 2)).unwrap();
            let base = lattice_points(&spec).unwrap();
            for t in polygon.triangulations() {
                assert_eq!(lattice_points_in_chart(&spec, &t).unwrap(), base, "{spec:?} in {t}");
            }
        }
    }
}

#[test]
fn faces_shrink_as_triangulations_grow() {
    let polygon = Polygon::new(6).unwrap();
    let mut r = rng(14);
    for _ in 0..4 {
        let spec = minkowski_c(&random_points(&mut r, polygon, 3)).unwrap();
        let points = lattice_points(&spec).unwrap();
        let full = random_triangulation(&mut r, polygon);
        let diags: Vec<_> = full.diagonals().iter().copied().collect();
        let chain: Vec<Triangulation> = (0..=diags.len())
            .map(|k| Triangulation::new(polygon, diags[..k].iter().copied()).unwrap())
            .collect();
        let members = |t: &Triangulation| -> BTreeSet<Lamination> {
            let face = Face { spec: spec.clone(), triangulation: t.clone() };
            points.iter().filter(|x| face_membership(&face, x).unwrap()).cloned().collect()
        };
        let sets: Vec<BTreeSet<Lamination>> = chain.iter().map(members).collect();
        assert_eq!(sets[0].len(), points.len());
        for w in sets.windows(2) {
            assert!(w[1].is_subset(&w[0]));
        }
        // The face of a complete triangulation is its vertex.
        let v = phi_inverse(&vertex(&spec, &full).unwrap()).unwrap();
        assert_eq!(sets.last().unwrap(), &BTreeSet::from([v]));
    }
}

#[test]
fn hull_of_a_point_set() {
    let polygon = Polygon::new(5).unwrap();
    let snake = polygon.snake();
    let p = |a: i64, b: i64| phi_inverse(&TropicalCoords::from_vec(snake.clone(), vec![a, b]).unwrap()).unwrap();
    let s = [p(-1, 0), p(1, 0)];
    for x in &s {
        assert!(hull_membership(&s, x).unwrap());
    }
    assert!(hull_membership(&s, &p(0, 0)).unwrap());
    assert!(!hull_membership(&s, &p(0, 1)).unwrap());
    assert!(!hull_membership(&s, &p(2, 0)).unwrap());
    assert_eq!(hull_membership(&[], &p(0, 0)), Err(Error::EmptyInput));
}

#[test]
fn hulls_grow_with_their_generators() {
    let polygon = Polygon::new(5).unwrap();
    let mut r = rng(15);
    for _ in 0..10 {
        let pts = random_points(&mut r, polygon, 3);
        let spec = minkowski_c(&pts).unwrap();
        let probe = lattice_points(&StasheffSpec::from_fn(polygon, |d| spec.values()[&d] + 2)).unwrap();
        for x in &probe {
            if hull_membership(&pts[..2], x).unwrap() {
                assert!(hull_membership(&pts, x).unwrap());
            }
        }
        for p in &pts {
            assert!(hull_membership(&pts, p).unwrap());
        }
    }
}

#[test]
fn shifting_into_the_negative_part() {
    let polygon = Polygon::new(6).unwrap();
    let mut r = rng(16);
    let snake = polygon.snake();
    for _ in 0..5 {
        let spec = minkowski_c(&random_points(&mut r, polygon, 2)).unwrap();
        let (shift, shifted) = shift_to_negative_part(&spec).unwrap();
        let before = lattice_points(&spec).unwrap();
        let after = lattice_points(&shifted).unwrap();
        for x in &after {
            assert!(phi(x, &snake).unwrap().to_vec().iter().all(|a| *a <= 0));
        }
        assert!(is_stasheff(&shifted));
        assert!(!shift.is_zero() || before == after);
    }
}

#[test]
fn worked_example_recognizers() {
    let polygon = Polygon::new(5).unwrap();
    let values = [((1, 3), 20), ((1, 4), 10), ((2, 4), 20), ((3, 5), 20), ((2, 5), 30)];
    let spec = StasheffSpec::new(polygon, values.iter().map(|((a, b), c)| (seg(*a, *b), *c)).collect()).unwrap();
    assert!(is_stasheff(&spec));
    assert!(is_nondegenerate(&spec));
    assert!(vertices_contained(&spec));
    // Vertex of the snake: snake coordinates (c_13, c_14).
    assert_eq!(vertex(&spec, &polygon.snake()).unwrap().to_vec(), vec![20, 10]);
    let missing = StasheffSpec::<i64>::new(polygon, [(seg(1, 3), 1)].into_iter().collect());
    assert!(matches!(missing, Err(Error::DimensionMismatch { .. })));
}

#[test]
fn degenerate_specs() {
    let polygon = Polygon::new(5).unwrap();
    let zero = StasheffSpec::<i64>::zero(polygon);
    assert!(is_stasheff(&zero));
    assert!(!is_nondegenerate(&zero));
    assert_eq!(lattice_points(&zero).unwrap(), vec![Lamination::zero(polygon)]);
    // A region with no lattice points at all.
    let empty = StasheffSpec::from_fn(polygon, |_| -1);
    assert!(lattice_points(&empty).unwrap().is_empty());
}
