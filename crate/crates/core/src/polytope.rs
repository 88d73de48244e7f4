//! Regions `{x : A_d^t(x) ≤ c_d for every diagonal d}` of tropical points,
//! their faces, vertices and integer points.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::Zero;

use crate::cluster_atlas::{expand_all_a_variables, Space};
use crate::error::{Error, Result};
use crate::exact_algebra::tropicalize;
use crate::fourier_motzkin::System;
use crate::number::Number;
use crate::polygon::{Polygon, Segment, Triangulation};
use crate::tropical_points::{chart_change, extend_to_all_segments, phi, phi_inverse, Lamination, TropicalCoords};

/// Bounds `c_d` for every diagonal; edges implicitly carry `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StasheffSpec<T: Number = i64> {
    n_gon: usize,
    c: BTreeMap<Segment, T>,
}

impl<T: Number> StasheffSpec<T> {
    pub fn new(polygon: Polygon, c: BTreeMap<Segment, T>) -> Result<Self> {
        let diagonals = polygon.diagonals();
        if c.len() != diagonals.len() || diagonals.iter().any(|d| !c.contains_key(d)) {
            return Err(Error::DimensionMismatch {
                expected: diagonals.len(),
                found: c.len(),
            });
        }
        Ok(StasheffSpec {
            n_gon: polygon.n_gon(),
            c,
        })
    }

    pub fn from_fn(polygon: Polygon, mut f: impl FnMut(Segment) -> T) -> Self {
        StasheffSpec {
            n_gon: polygon.n_gon(),
            c: polygon.diagonals().into_iter().map(|d| (d, f(d))).collect(),
        }
    }

    pub fn zero(polygon: Polygon) -> Self {
        Self::from_fn(polygon, |_| T::zero())
    }

    pub fn polygon(&self) -> Polygon {
        Polygon::new(self.n_gon).expect("validated")
    }

    pub fn n_gon(&self) -> usize {
        self.n_gon
    }

    pub fn values(&self) -> &BTreeMap<Segment, T> {
        &self.c
    }

    /// `c_s`, with `0` on edges.
    pub fn c(&self, s: Segment) -> T {
        self.c.get(&s).cloned().unwrap_or_else(T::zero)
    }

    fn c_at(&self, a: usize, b: usize) -> T {
        self.c(Segment::new(a, b).expect("distinct vertices"))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.n_gon != other.n_gon {
            return Err(Error::SizeMismatch(self.n_gon, other.n_gon));
        }
        Ok(StasheffSpec {
            n_gon: self.n_gon,
            c: self
                .c
                .iter()
                .map(|(d, v)| (*d, v.clone() + other.c[d].clone()))
                .collect(),
        })
    }
}

/// A face `𝓕_c^T` for a (partial) triangulation `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face<T: Number = i64> {
    pub spec: StasheffSpec<T>,
    pub triangulation: Triangulation,
}

/// `c_d = Σ_k A_d^t(l_k)`.
pub fn minkowski_c<T: Number>(points: &[Lamination<T>]) -> Result<StasheffSpec<T>> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let polygon = first.polygon();
    if let Some(l) = points.iter().find(|l| l.n_gon() != polygon.n_gon()) {
        return Err(Error::SizeMismatch(polygon.n_gon(), l.n_gon()));
    }
    let mut c = BTreeMap::new();
    for d in polygon.diagonals() {
        let mut total = T::zero();
        for l in points {
            total = total + l.trop_a(d)?;
        }
        c.insert(d, total);
    }
    StasheffSpec::new(polygon, c)
}

// For a < b < c < d: slack of `c_ac + c_bd ≥ max(c_ab + c_cd, c_bc + c_ad)`.
fn quadruple_slacks<T: Number>(spec: &StasheffSpec<T>) -> impl Iterator<Item = T> + '_ {
    let n = spec.n_gon;
    (1..=n).flat_map(move |a| {
        (a + 1..=n).flat_map(move |b| {
            (b + 1..=n).flat_map(move |c| {
                (c + 1..=n).map(move |d| {
                    let lhs = spec.c_at(a, c) + spec.c_at(b, d);
                    let rhs = (spec.c_at(a, b) + spec.c_at(c, d)).max(spec.c_at(b, c) + spec.c_at(a, d));
                    lhs - rhs
                })
            })
        })
    })
}

/// The quadruple criterion: `c_ac + c_bd ≥ max(c_ab + c_cd, c_bc + c_ad)` for
/// all `a < b < c < d`, with `c = 0` on edges.
pub fn is_stasheff<T: Number>(spec: &StasheffSpec<T>) -> bool {
    quadruple_slacks(spec).all(|s| !s.is_negative())
}

/// All quadruple inequalities hold strictly.
pub fn is_nondegenerate<T: Number>(spec: &StasheffSpec<T>) -> bool {
    quadruple_slacks(spec).all(|s| s.is_positive())
}

/// The vertex criterion: every vertex `𝓕_c^T` (complete `T`) satisfies all
/// defining inequalities.
pub fn vertices_contained<T: Number>(spec: &StasheffSpec<T>) -> bool {
    spec.polygon().triangulations().iter().all(|t| {
        let v = vertex(spec, t).expect("complete triangulation");
        let all = extend_to_all_segments(&v);
        spec.c.iter().all(|(d, c)| all[d] <= *c)
    })
}

/// The point whose chart-`T` coordinates are `(c_d)_{d ∈ T}`.
pub fn vertex<T: Number>(spec: &StasheffSpec<T>, t: &Triangulation) -> Result<TropicalCoords<T>> {
    t.require_complete()?;
    if t.n_gon() != spec.n_gon {
        return Err(Error::SizeMismatch(spec.n_gon, t.n_gon()));
    }
    TropicalCoords::new(t.clone(), t.diagonals().iter().map(|d| (*d, spec.c[d].clone())).collect())
}

/// The defining conditions of the face, evaluated literally: equality on `T`,
/// `≤` on the supplement of `T`.
pub fn face_membership<T: Number>(face: &Face<T>, x: &Lamination<T>) -> Result<bool> {
    let spec = &face.spec;
    if x.n_gon() != spec.n_gon || face.triangulation.n_gon() != spec.n_gon {
        return Err(Error::SizeMismatch(spec.n_gon, x.n_gon()));
    }
    for &d in face.triangulation.diagonals() {
        if x.trop_a(d)? != spec.c[&d] {
            return Ok(false);
        }
    }
    for d in face.triangulation.supplement() {
        if x.trop_a(d)? > spec.c[&d] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Linear pieces of every tropical cluster variable in a chart.
type Linearization = Vec<(Segment, Vec<Vec<i64>>)>;

fn linearization(chart: &Triangulation) -> Result<Arc<Linearization>> {
    static CACHE: OnceLock<Mutex<HashMap<Triangulation, Arc<Linearization>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(l) = cache.lock().expect("cache lock").get(chart) {
        return Ok(l.clone());
    }
    let mut out = Vec::new();
    for (d, f) in expand_all_a_variables(chart, Space::Reduced)? {
        let trop = tropicalize(&f)?;
        out.push((d, trop.forms().cloned().collect()));
    }
    let out = Arc::new(out);
    cache.lock().expect("cache lock").insert(chart.clone(), out.clone());
    Ok(out)
}

/// Integer coordinate box containing the region, in chart coordinates.
pub fn coordinate_box<T: Number>(spec: &StasheffSpec<T>, chart: &Triangulation) -> Result<Option<Vec<(i64, i64)>>> {
    chart.require_complete()?;
    if chart.n_gon() != spec.n_gon {
        return Err(Error::SizeMismatch(spec.n_gon, chart.n_gon()));
    }
    let lin = linearization(chart)?;
    let n = chart.len();
    let mut system = System::new(n);
    for (d, forms) in lin.iter() {
        for f in forms {
            system.add_int(f, spec.c[d].to_rational());
        }
    }
    if !system.is_feasible() {
        return Ok(None);
    }
    let mut bounds = Vec::with_capacity(n);
    for k in 0..n {
        let iv = system.bounds(k);
        if iv.is_empty() {
            return Ok(None);
        }
        let (Some(lo), Some(hi)) = (iv.lower, iv.upper) else {
            return Err(Error::Unbounded(k));
        };
        let lo = lo.ceil().to_integer();
        let hi = hi.floor().to_integer();
        use num_traits::ToPrimitive;
        let (lo, hi) = (
            lo.to_i64().ok_or(Error::Unbounded(k))?,
            hi.to_i64().ok_or(Error::Unbounded(k))?,
        );
        if lo > hi {
            return Ok(None);
        }
        bounds.push((lo, hi));
    }
    Ok(Some(bounds))
}

/// Integer laminations `x` with `A_d^t(x) ≤ c_d` for every diagonal, found in
/// the snake chart.
pub fn lattice_points<T: Number>(spec: &StasheffSpec<T>) -> Result<Vec<Lamination>> {
    lattice_points_in_chart(spec, &spec.polygon().snake())
}

/// As [`lattice_points`], with the enumeration carried out in `chart`.
///
/// Each max-inequality splits into one linear inequality per piece; exact
/// elimination bounds every coordinate; the integer box is then filtered.
pub fn lattice_points_in_chart<T: Number>(spec: &StasheffSpec<T>, chart: &Triangulation) -> Result<Vec<Lamination>> {
    let Some(bounds) = coordinate_box(spec, chart)? else {
        return Ok(Vec::new());
    };
    let lin = linearization(chart)?;
    let n = bounds.len();
    let mut out = Vec::new();
    let mut x: Vec<i64> = bounds.iter().map(|b| b.0).collect();
    'outer: loop {
        let ok = lin.iter().all(|(d, forms)| {
            forms.iter().all(|f| {
                let v: i64 = f.iter().zip(&x).map(|(a, b)| a * b).sum();
                T::from_i64(v) <= spec.c[d]
            })
        });
        if ok {
            out.push(phi_inverse(&TropicalCoords::from_vec(chart.clone(), x.clone())?)?);
        }
        for k in (0..n).rev() {
            if x[k] < bounds[k].1 {
                x[k] += 1;
                continue 'outer;
            }
            x[k] = bounds[k].0;
        }
        break;
    }
    out.sort();
    Ok(out)
}

/// Whether `x` lies in the tropical convex hull of `s`: in every chart,
/// `phi(x)` lies in the convex hull of `phi(s)` minus the nonnegative orthant.
pub fn hull_membership<T: Number>(s: &[Lamination<T>], x: &Lamination<T>) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::EmptyInput);
    }
    for chart in x.polygon().triangulations() {
        let y = phi(x, &chart)?.to_vec();
        let pts: Vec<Vec<T>> = s.iter().map(|l| phi(l, &chart).map(|c| c.to_vec())).collect::<Result<_>>()?;
        let m = pts.len();
        let mut sys = System::new(m);
        let one = BigRational::from_integer(1.into());
        for k in 0..m {
            let mut row = vec![BigRational::zero(); m];
            row[k] = -one.clone();
            sys.add(&row, BigRational::zero());
        }
        sys.add(&vec![one.clone(); m], one.clone());
        sys.add(&vec![-one.clone(); m], -one.clone());
        for (i, yi) in y.iter().enumerate() {
            // y_i ≤ Σ λ_s p_s,i
            let row: Vec<BigRational> = pts.iter().map(|p| -p[i].to_rational()).collect();
            sys.add(&row, -yi.to_rational());
        }
        if !sys.is_feasible() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sum of two specs satisfying the quadruple criterion.
pub fn minkowski_sum_sets<T: Number>(a: &StasheffSpec<T>, b: &StasheffSpec<T>) -> Result<StasheffSpec<T>> {
    if !is_stasheff(a) || !is_stasheff(b) {
        return Err(Error::NotStasheff);
    }
    a.try_add(b)
}

/// Translates the region by the point whose snake coordinates all equal
/// `−max(0, max_{d ∈ snake} c_d)`, so every point of the result has
/// nonpositive snake coordinates. Returns the shift and the new spec.
pub fn shift_to_negative_part<T: Number>(spec: &StasheffSpec<T>) -> Result<(Lamination<T>, StasheffSpec<T>)> {
    let snake = spec.polygon().snake();
    let s = snake
        .diagonals()
        .iter()
        .map(|d| spec.c[d].clone())
        .fold(T::zero(), |a, b| a.max(b));
    let shift = phi_inverse(&TropicalCoords::from_vec(snake.clone(), vec![-s; snake.len()])?)?;
    let shifted = spec.try_add(&minkowski_c(std::slice::from_ref(&shift))?)?;
    Ok((shift, shifted))
}

/// Lattice points and vertices in chart coordinates, for plotting. Columns
/// are `a_i_j` per chart diagonal plus a final `vertex` flag.
pub fn chart_csv<T: Number>(spec: &StasheffSpec<T>, chart: &Triangulation) -> Result<String> {
    let points = lattice_points(spec)?;
    let mut rows: BTreeMap<Vec<T>, bool> = BTreeMap::new();
    for l in &points {
        let v: Vec<T> = phi(l, chart)?.to_vec().into_iter().map(T::from_i64).collect();
        rows.insert(v, false);
    }
    for t in spec.polygon().triangulations() {
        let v = chart_change(&vertex(spec, &t)?, chart)?.to_vec();
        rows.insert(v, true);
    }
    let mut out = String::new();
    let header: Vec<String> = chart.diagonals().iter().map(|d| format!("a_{}_{}", d.i(), d.j())).collect();
    out.push_str(&header.join(","));
    out.push_str(",vertex\n");
    for (v, is_vertex) in rows {
        let cells: Vec<String> = v.iter().map(|x| x.to_text()).collect();
        out.push_str(&cells.join(","));
        out.push_str(if is_vertex { ",true\n" } else { ",false\n" });
    }
    Ok(out)
}

/// All vertices, one per complete triangulation, in their own charts.
pub fn vertices<T: Number>(spec: &StasheffSpec<T>) -> Result<Vec<TropicalCoords<T>>> {
    spec.polygon().triangulations().iter().map(|t| vertex(spec, t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(a: usize, b: usize) -> Segment {
        Segment::new(a, b).unwrap()
    }

    fn pentagon() -> Polygon {
        Polygon::new(5).unwrap()
    }

    fn point(a: i64, b: i64) -> Lamination {
        phi_inverse(&TropicalCoords::from_vec(pentagon().snake(), vec![a, b]).unwrap()).unwrap()
    }

    fn spec(vals: &[((usize, usize), i64)]) -> StasheffSpec {
        StasheffSpec::new(pentagon(), vals.iter().map(|((a, b), c)| (seg(*a, *b), *c)).collect()).unwrap()
    }

    fn worked_spec() -> StasheffSpec {
        spec(&[((1, 3), 20), ((1, 4), 10), ((2, 4), 20), ((3, 5), 20), ((2, 5), 30)])
    }

    #[test]
    fn minkowski_of_l1_l4() {
        let c = minkowski_c(&[point(-1, 0), point(1, 0)]).unwrap();
        assert_eq!(c, spec(&[((1, 3), 0), ((1, 4), 0), ((2, 4), 0), ((3, 5), 1), ((2, 5), 1)]));
        let pts = lattice_points(&c).unwrap();
        let mut expect = vec![point(0, 0), point(0, -1)];
        expect.sort();
        assert_eq!(pts, expect);
        // l5 is in the sum {l1} + {l4} but not in the hull of {l1, l4}: the
        // cluster monomial A25·A35 is 2 at l5 and 1 at both l1 and l4.
        let s = [point(-1, 0), point(1, 0)];
        let f = |l: &Lamination| l.trop_a(seg(2, 5)).unwrap() + l.trop_a(seg(3, 5)).unwrap();
        assert_eq!((f(&point(0, -1)), f(&s[0]), f(&s[1])), (2, 1, 1));
        assert!(!hull_membership(&s, &point(0, -1)).unwrap());
        assert!(hull_membership(&s, &point(0, 0)).unwrap());
        assert!(hull_membership(&s, &s[1]).unwrap());
        assert!(!hull_membership(&s, &point(0, 1)).unwrap());
    }

    #[test]
    fn recognizers() {
        assert!(is_stasheff(&worked_spec()));
        assert!(is_nondegenerate(&worked_spec()));
        assert!(vertices_contained(&worked_spec()));
        let zero = StasheffSpec::<i64>::zero(pentagon());
        assert!(is_stasheff(&zero) && !is_nondegenerate(&zero));
        let bad = spec(&[((1, 3), 0), ((1, 4), 0), ((2, 4), 0), ((3, 5), 0), ((2, 5), -1)]);
        assert!(!is_stasheff(&bad));
        assert!(!vertices_contained(&bad));
    }

    #[test]
    fn point_region() {
        let zero = StasheffSpec::<i64>::zero(pentagon());
        assert_eq!(lattice_points(&zero).unwrap(), vec![Lamination::zero(pentagon())]);
        let empty = spec(&[((1, 3), -1), ((1, 4), 0), ((2, 4), 0), ((3, 5), 0), ((2, 5), 0)]);
        assert!(lattice_points(&empty).unwrap().is_empty());
    }

    #[test]
    fn worked_vertices() {
        let s = worked_spec();
        let v = vertex(&s, &pentagon().snake()).unwrap();
        assert_eq!(v.to_vec(), vec![20, 10]);
        let n = lattice_points(&s).unwrap().len();
        for t in pentagon().triangulations() {
            assert_eq!(lattice_points_in_chart(&s, &t).unwrap().len(), n);
            let face = Face {
                spec: s.clone(),
                triangulation: t.clone(),
            };
            let l = phi_inverse(&vertex(&s, &t).unwrap()).unwrap();
            assert!(face_membership(&face, &l).unwrap());
        }
    }

    #[test]
    fn shifting() {
        let (shift, shifted) = shift_to_negative_part(&worked_spec()).unwrap();
        assert_eq!(phi(&shift, &pentagon().snake()).unwrap().to_vec(), vec![-20, -20]);
        for l in lattice_points(&shifted).unwrap() {
            assert!(phi(&l, &pentagon().snake()).unwrap().to_vec().iter().all(|x| *x <= 0));
        }
    }

    #[test]
    fn csv_export() {
        let c = minkowski_c(&[point(-1, 0), point(1, 0)]).unwrap();
        let csv = chart_csv(&c, &pentagon().snake()).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("a_1_3,a_1_4,vertex"));
        assert!(csv.contains("0,-1,"));
    }
}
