//! Laminations as tropical points, their chart coordinates, and tropical
//! chart changes.

use std::collections::{BTreeMap, HashMap};

use crate::cluster_atlas::{entered_triangle, flip_path};
use crate::error::{Error, Result};
use crate::number::Number;
use crate::polygon::{Polygon, Segment, Triangulation};
use crate::weighted_graph::WeightedGraph;

/// A weighted graph whose positive diagonals do not cross and whose vertex
/// sums all vanish.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lamination<T: Number = i64> {
    graph: WeightedGraph<T>,
}

impl<T: Number> Lamination<T> {
    pub fn new(graph: WeightedGraph<T>) -> Result<Self> {
        if !graph.diagonals_non_crossing() {
            return Err(Error::NotALamination("positive diagonals cross".into()));
        }
        if let Some(p) = (1..=graph.n_gon()).find(|&p| !graph.vertex_sum(p).is_zero()) {
            return Err(Error::NotALamination(format!("vertex {p} has nonzero weight sum")));
        }
        Ok(Lamination { graph })
    }

    pub fn zero(polygon: Polygon) -> Self {
        Lamination {
            graph: WeightedGraph::zero(polygon),
        }
    }

    /// Completes diagonal weights with the edge weights that make every
    /// vertex sum vanish.
    ///
    /// Going round the boundary fixes each edge from the previous one. For an
    /// odd number of vertices the loop closes uniquely; for an even number the
    /// edge weights are determined only up to the alternating vector, and the
    /// representative with `w_{N,1} = 0` is returned.
    pub fn with_balancing_edges(polygon: Polygon, diagonals: impl IntoIterator<Item = (Segment, T)>) -> Result<Self> {
        let mut g: WeightedGraph<T> = WeightedGraph::zero(polygon);
        for (s, w) in diagonals {
            polygon.require_diagonal(s)?;
            let w = g.weight(s).clone() + w;
            g.set(s, w)?;
        }
        let n = polygon.n_gon();
        let d: Vec<T> = (1..=n).map(|p| g.vertex_sum(p)).collect();
        // e_k = w_{k,k+1}; e_k = c_k + (−1)^k t with t = e_N.
        let mut c = vec![T::zero(); n + 1];
        let mut sign = vec![0i64; n + 1];
        sign[0] = 1; // e_0 ≡ e_N = t
        for k in 1..n {
            c[k] = -d[k - 1].clone() - c[k - 1].clone();
            sign[k] = -sign[k - 1];
        }
        // Closing condition at vertex N: e_{N-1} + t + D_N = 0.
        let rest = -d[n - 1].clone() - c[n - 1].clone();
        let t = if sign[n - 1] == 1 {
            // 2t = rest
            rest.half()
                .ok_or_else(|| Error::NotALamination("edge weights would be fractional".into()))?
        } else {
            if !rest.is_zero() {
                return Err(Error::NotALamination("vertex sums cannot be balanced".into()));
            }
            T::zero()
        };
        for k in 1..n {
            let e = c[k].clone() + T::from_i64(sign[k]) * t.clone();
            g.set(Segment::new(k, k + 1)?, e)?;
        }
        g.set(Segment::new(1, n)?, t)?;
        Self::new(g)
    }

    pub fn graph(&self) -> &WeightedGraph<T> {
        &self.graph
    }

    pub fn into_graph(self) -> WeightedGraph<T> {
        self.graph
    }

    pub fn polygon(&self) -> Polygon {
        self.graph.polygon()
    }

    pub fn n_gon(&self) -> usize {
        self.graph.n_gon()
    }

    pub fn is_zero(&self) -> bool {
        self.graph.is_trivial()
    }

    /// Sum of two laminations whose diagonals are compatible.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Self::new(self.graph.try_add(&other.graph)?)
    }

    /// `A_diag^t(l) = ½ I_diag`.
    pub fn trop_a(&self, diag: Segment) -> Result<T> {
        self.polygon().require_diagonal(diag)?;
        self.half_cut(diag)
    }

    fn half_cut(&self, s: Segment) -> Result<T> {
        self.graph
            .cut(s.i(), s.j())
            .half()
            .ok_or(Error::NonIntegral(s))
    }
}

impl<T: Number> std::fmt::Debug for Lamination<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "L{:?}", self.graph)
    }
}

/// Coordinates `a_ij` of a tropical point on the diagonals of a complete
/// triangulation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TropicalCoords<T: Number = i64> {
    chart: Triangulation,
    values: BTreeMap<Segment, T>,
}

impl<T: Number> TropicalCoords<T> {
    pub fn new(chart: Triangulation, values: BTreeMap<Segment, T>) -> Result<Self> {
        chart.require_complete()?;
        if values.len() != chart.len() {
            return Err(Error::DimensionMismatch {
                expected: chart.len(),
                found: values.len(),
            });
        }
        if let Some(s) = values.keys().find(|s| !chart.contains(**s)) {
            return Err(Error::InvalidInput(format!("{s} is not in chart {chart}")));
        }
        Ok(TropicalCoords { chart, values })
    }

    /// Values listed in the sorted order of the chart's diagonals.
    pub fn from_vec(chart: Triangulation, values: Vec<T>) -> Result<Self> {
        if values.len() != chart.len() {
            return Err(Error::DimensionMismatch {
                expected: chart.len(),
                found: values.len(),
            });
        }
        let map = chart.diagonals().iter().copied().zip(values).collect();
        Self::new(chart, map)
    }

    pub fn chart(&self) -> &Triangulation {
        &self.chart
    }

    pub fn get(&self, d: Segment) -> Option<&T> {
        self.values.get(&d)
    }

    pub fn values(&self) -> &BTreeMap<Segment, T> {
        &self.values
    }

    pub fn to_vec(&self) -> Vec<T> {
        self.values.values().cloned().collect()
    }
}

/// `a_kl = ½ I_kl` on the diagonals of `chart`.
pub fn phi<T: Number>(l: &Lamination<T>, chart: &Triangulation) -> Result<TropicalCoords<T>> {
    chart.require_complete()?;
    if chart.n_gon() != l.n_gon() {
        return Err(Error::SizeMismatch(chart.n_gon(), l.n_gon()));
    }
    let mut values = BTreeMap::new();
    for &d in chart.diagonals() {
        values.insert(d, l.half_cut(d)?);
    }
    Ok(TropicalCoords {
        chart: chart.clone(),
        values,
    })
}

/// Extends chart values to every segment by the tropical exchange relation
/// `a_pq = max(a_pr + a_qs, a_ps + a_qr) − a_rs`, with `a = 0` on edges.
pub fn extend_to_all_segments<T: Number>(coords: &TropicalCoords<T>) -> HashMap<Segment, T> {
    let t = &coords.chart;
    let polygon = t.polygon();
    let triangles = t.triangles();
    let mut memo: HashMap<Segment, T> = HashMap::new();
    for e in polygon.edges() {
        memo.insert(e, T::zero());
    }
    for (s, v) in &coords.values {
        memo.insert(*s, v.clone());
    }
    fn get<T: Number>(
        s: Segment,
        memo: &mut HashMap<Segment, T>,
        triangles: &[[usize; 3]],
        n: usize,
    ) -> T {
        if let Some(v) = memo.get(&s) {
            return v.clone();
        }
        let (p, q) = s.endpoints();
        let (r, s2) = entered_triangle(triangles, n, p, q);
        let seg = |a, b| Segment::new(a, b).expect("distinct vertices");
        let pr = get(seg(p, r), memo, triangles, n);
        let ps = get(seg(p, s2), memo, triangles, n);
        let qr = get(seg(q, r), memo, triangles, n);
        let qs = get(seg(q, s2), memo, triangles, n);
        let rs = get(seg(r, s2), memo, triangles, n);
        let v = (pr + qs).max(ps + qr) - rs;
        memo.insert(s, v.clone());
        v
    }
    for d in polygon.diagonals() {
        get(d, &mut memo, &triangles, polygon.n_gon());
    }
    memo
}

/// The lamination with the given chart coordinates:
/// `w_pq = a_{q−1,p−1} + a_pq − a_{p,q−1} − a_{p−1,q}` after extending `a` to
/// every pair (`a_pp = 0`).
pub fn phi_inverse<T: Number>(coords: &TropicalCoords<T>) -> Result<Lamination<T>> {
    let polygon = coords.chart.polygon();
    let n = polygon.n_gon();
    let a_all = extend_to_all_segments(coords);
    let a = |x: i64, y: i64| -> T {
        let (x, y) = (polygon.wrap(x), polygon.wrap(y));
        if x == y {
            T::zero()
        } else {
            a_all[&Segment::new(x, y).expect("distinct")].clone()
        }
    };
    let mut g = WeightedGraph::zero(polygon);
    for s in polygon.segments() {
        let (p, q) = (s.i() as i64, s.j() as i64);
        let w = a(q - 1, p - 1) + a(p, q) - a(p, q - 1) - a(p - 1, q);
        g.set(s, w).map_err(|e| Error::NotALamination(e.to_string()))?;
    }
    debug_assert_eq!(g.n_gon(), n);
    Lamination::new(g)
}

/// Re-expresses coordinates in another chart by tropical flips along a
/// shortest flip path.
pub fn chart_change<T: Number>(coords: &TropicalCoords<T>, target: &Triangulation) -> Result<TropicalCoords<T>> {
    let path = flip_path(&coords.chart, target)?;
    let polygon = coords.chart.polygon();
    let mut cur = coords.chart.clone();
    let mut values = coords.values.clone();
    let val = |values: &BTreeMap<Segment, T>, a: usize, b: usize| -> T {
        let s = Segment::new(a, b).expect("distinct");
        if polygon.is_edge(s) {
            T::zero()
        } else {
            values[&s].clone()
        }
    };
    for d in path {
        let (p, r) = d.endpoints();
        let (q, s) = cur.quadrilateral(d)?;
        let v = (val(&values, p, q) + val(&values, r, s)).max(val(&values, q, r) + val(&values, p, s))
            - values[&d].clone();
        let (next, new) = cur.flip(d)?;
        values.remove(&d);
        values.insert(new, v);
        cur = next;
    }
    TropicalCoords::new(cur, values)
}
