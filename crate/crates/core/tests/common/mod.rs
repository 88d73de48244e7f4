//! Generators shared by the integration tests. Laminations are drawn from
//! weighted non-crossing diagonals, never through chart coordinates, so that
//! tests of the coordinate maps do not depend on those maps.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use stasheff::tropical_points::Lamination;
use stasheff::{Polygon, Segment, Triangulation, WeightedGraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn seg(a: usize, b: usize) -> Segment {
    Segment::new(a, b).unwrap()
}

/// Random lamination with diagonal weights in `0..=max_w`, supported on a
/// random triangulation. For even `N` the free alternating edge vector gets
/// a random multiple too.
pub fn random_lamination(rng: &mut impl Rng, polygon: Polygon, max_w: i64) -> Lamination {
    let triangulations = polygon.triangulations();
    loop {
        let t = triangulations.choose(rng).unwrap();
        let diags: Vec<(Segment, i64)> = t
            .diagonals()
            .iter()
            .map(|&d| (d, if rng.gen_bool(0.3) { 0 } else { rng.gen_range(0..=max_w) }))
            .collect();
        let Ok(l) = Lamination::with_balancing_edges(polygon, diags) else {
            continue;
        };
        let n = polygon.n_gon();
        if n % 2 == 1 {
            return l;
        }
        let s = rng.gen_range(-max_w..=max_w);
        let mut g: WeightedGraph = l.into_graph();
        for k in 1..=n {
            let e = polygon.segment_wrapped(k as i64, k as i64 + 1).unwrap();
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let w = *g.weight(e) + sign * s;
            g.set(e, w).unwrap();
        }
        return Lamination::new(g).unwrap();
    }
}

/// Every lamination with diagonal weights in `0..=max_w` (odd `N` only,
/// where edge weights are forced).
pub fn all_laminations(polygon: Polygon, max_w: i64) -> Vec<Lamination> {
    assert!(polygon.n_gon() % 2 == 1);
    let mut out = std::collections::BTreeSet::new();
    for t in polygon.triangulations() {
        let diags: Vec<Segment> = t.diagonals().iter().copied().collect();
        let mut w = vec![0i64; diags.len()];
        loop {
            let pairs = diags.iter().copied().zip(w.iter().copied());
            if let Ok(l) = Lamination::with_balancing_edges(polygon, pairs) {
                out.insert(l);
            }
            let Some(k) = (0..w.len()).find(|&k| w[k] < max_w) else { break };
            w[k] += 1;
            for x in &mut w[..k] {
                *x = 0;
            }
        }
    }
    out.into_iter().collect()
}

pub fn random_triangulation(rng: &mut impl Rng, polygon: Polygon) -> Triangulation {
    polygon.triangulations().choose(rng).unwrap().clone()
}
