//! The canonical basis `𝕀_A` of type `A_n`: Laurent expansions of basis
//! elements, products of basis elements decomposed by Plücker moves, and the
//! closed-form structure constants of `A_2`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cluster_atlas::{
    change_x_chart, expand_all_a_variables, x_var_names, MonomialLattice, Space, TriangulationSeed,
};
use crate::error::{Error, Result};
use crate::exact_algebra::LaurentPolynomial;
use crate::polygon::{chords_cross, Polygon, Segment, Triangulation};
use crate::tropical_points::{phi_inverse, Lamination, TropicalCoords};
use crate::weighted_graph::WeightedGraph;

/// Positive integer combination of basis elements.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Expansion {
    coeffs: BTreeMap<Lamination, BigInt>,
}

impl Expansion {
    pub fn single(l: Lamination) -> Self {
        Expansion {
            coeffs: BTreeMap::from([(l, BigInt::one())]),
        }
    }

    /// Builds from pairs, dropping zero coefficients; negative ones are
    /// rejected.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Lamination, BigInt)>) -> Result<Self> {
        let mut e = Expansion::default();
        for (l, c) in pairs {
            if c.is_negative() {
                return Err(Error::NotPositive);
            }
            e.add(l, c);
        }
        Ok(e)
    }

    fn add(&mut self, l: Lamination, c: BigInt) {
        if c.is_zero() {
            return;
        }
        *self.coeffs.entry(l).or_default() += c;
    }

    fn merge(&mut self, other: &Expansion) {
        for (l, c) in &other.coeffs {
            self.add(l.clone(), c.clone());
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<Lamination, BigInt> {
        &self.coeffs
    }

    pub fn coeff(&self, l: &Lamination) -> BigInt {
        self.coeffs.get(l).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> BTreeSet<Lamination> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Mutable access for tests that need to corrupt an expansion.
    pub fn coeffs_mut(&mut self) -> &mut BTreeMap<Lamination, BigInt> {
        &mut self.coeffs
    }
}

/// Which crossing pair a Plücker move resolves first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SelectionPolicy {
    /// Smallest `(r, s, m, t)` lexicographically.
    #[default]
    First,
    /// Largest `(r, s, m, t)`; used to check that the result does not depend
    /// on the choice.
    Last,
}

/// Decomposes products of basis elements by repeatedly smoothing crossings.
///
/// The memo table is shared and thread-safe, so one expander can serve many
/// threads.
#[derive(Debug)]
pub struct Expander {
    policy: SelectionPolicy,
    budget: usize,
    nodes: AtomicUsize,
    memo: RwLock<HashMap<WeightedGraph, Arc<Expansion>>>,
}

impl Default for Expander {
    fn default() -> Self {
        Expander::new(SelectionPolicy::First, usize::MAX)
    }
}

impl Expander {
    /// `budget` bounds the number of distinct graphs expanded.
    pub fn new(policy: SelectionPolicy, budget: usize) -> Self {
        Expander {
            policy,
            budget,
            nodes: AtomicUsize::new(0),
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn nodes(&self) -> usize {
        self.nodes.load(Ordering::Relaxed)
    }

    /// Expansion of `Π 𝕀_A(l)` over `points`.
    pub fn product(&self, points: &[Lamination]) -> Result<Expansion> {
        let first = points.first().ok_or(Error::EmptyInput)?;
        let mut g = first.graph().clone();
        for l in &points[1..] {
            g = g.try_add(l.graph())?;
        }
        Ok(self.expand(&g)?.as_ref().clone())
    }

    /// Expansion of `Π A_ij^{w_ij}` for a graph with vanishing vertex sums.
    pub fn expand(&self, g: &WeightedGraph) -> Result<Arc<Expansion>> {
        if let Some(e) = self.memo.read().expect("memo lock").get(g) {
            return Ok(e.clone());
        }
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let result = match self.pick_crossing(g) {
            None => Expansion::single(Lamination::new(g.clone())?),
            Some((r, s, m, t)) => {
                let before = crossing_measure(g);
                let seg = |a, b| Segment::new(a, b).expect("distinct");
                let mut base = g.clone();
                for x in [seg(r, m), seg(s, t)] {
                    let w = *base.weight(x) - 1;
                    base.set(x, w)?;
                }
                let mut out = Expansion::default();
                for (a, b) in [(seg(r, t), seg(s, m)), (seg(r, s), seg(m, t))] {
                    let mut h = base.clone();
                    for x in [a, b] {
                        let w = *h.weight(x) + 1;
                        h.set(x, w)?;
                    }
                    let after = crossing_measure(&h);
                    if after >= before {
                        return Err(Error::InvariantViolation(format!(
                            "crossing measure did not decrease ({before} -> {after})"
                        )));
                    }
                    out.merge(self.expand(&h)?.as_ref());
                }
                out
            }
        };
        let result = Arc::new(result);
        self.memo
            .write()
            .expect("memo lock")
            .entry(g.clone())
            .or_insert_with(|| result.clone());
        Ok(result)
    }

    // Crossing pairs {r,m}, {s,t} with r < s < m < t, both of positive weight.
    fn pick_crossing(&self, g: &WeightedGraph) -> Option<(usize, usize, usize, usize)> {
        let polygon = g.polygon();
        let diags: Vec<Segment> = g
            .support()
            .filter(|(s, w)| polygon.is_diagonal(*s) && **w > 0)
            .map(|(s, _)| s)
            .collect();
        let mut best: Option<(usize, usize, usize, usize)> = None;
        for (k, &a) in diags.iter().enumerate() {
            for &b in &diags[k + 1..] {
                if !chords_cross(a, b) {
                    continue;
                }
                let (x, y) = if a.i() < b.i() { (a, b) } else { (b, a) };
                let cand = (x.i(), y.i(), x.j(), y.j());
                best = match (best, self.policy) {
                    (None, _) => Some(cand),
                    (Some(cur), SelectionPolicy::First) => Some(cur.min(cand)),
                    (Some(cur), SelectionPolicy::Last) => Some(cur.max(cand)),
                };
            }
        }
        best
    }
}

/// `Σ w_a w_b` over crossing pairs of positive diagonals.
pub fn crossing_measure(g: &WeightedGraph) -> i64 {
    let polygon = g.polygon();
    let diags: Vec<(Segment, i64)> = g
        .support()
        .filter(|(s, w)| polygon.is_diagonal(*s) && **w > 0)
        .map(|(s, w)| (s, *w))
        .collect();
    let mut total = 0;
    for (k, (a, wa)) in diags.iter().enumerate() {
        for (b, wb) in &diags[k + 1..] {
            if chords_cross(*a, *b) {
                total += wa * wb;
            }
        }
    }
    total
}

/// `Π 𝕀_A(l)` decomposed in the canonical basis.
pub fn product_expand(points: &[Lamination]) -> Result<Expansion> {
    Expander::default().product(points)
}

/// The basis elements occurring in `Π 𝕀_A(l)`.
pub fn support(points: &[Lamination]) -> Result<BTreeSet<Lamination>> {
    Ok(product_expand(points)?.support())
}

struct ChartData {
    vars: Vec<String>,
    labels: Vec<Segment>,
    expansions: BTreeMap<Segment, LaurentPolynomial>,
    lattice: MonomialLattice,
}

fn chart_data(t: &Triangulation) -> Result<Arc<ChartData>> {
    static CACHE: OnceLock<Mutex<HashMap<Triangulation, Arc<ChartData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(d) = cache.lock().expect("cache lock").get(t) {
        return Ok(d.clone());
    }
    let ts = TriangulationSeed::new(t)?;
    let data = Arc::new(ChartData {
        vars: ts.a_vars(),
        labels: ts.labels().to_vec(),
        expansions: expand_all_a_variables(t, Space::WithCoefficients)?,
        lattice: MonomialLattice::new(ts.seed().clone())?,
    });
    cache.lock().expect("cache lock").insert(t.clone(), data.clone());
    Ok(data)
}

/// `𝕀_A(l)` as a Laurent polynomial in the `X` chart of the snake
/// triangulation.
pub fn ia_laurent(l: &Lamination) -> Result<LaurentPolynomial> {
    ia_laurent_in_chart(l, &l.polygon().snake())
}

/// `𝕀_A(l)` in the `X` chart of `t` (`Xk` ↔ k-th sorted diagonal).
///
/// Expands `Π A_ij^{w_ij}` in the chart with coefficients of `t`, then pulls
/// each monomial back through `τ`; a monomial outside the image lattice
/// means the vertex sums of `l` do not vanish.
pub fn ia_laurent_in_chart(l: &Lamination, t: &Triangulation) -> Result<LaurentPolynomial> {
    graph_x_expansion(l.graph(), t)
}

fn graph_x_expansion(g: &WeightedGraph, t: &Triangulation) -> Result<LaurentPolynomial> {
    if g.n_gon() != t.n_gon() {
        return Err(Error::SizeMismatch(g.n_gon(), t.n_gon()));
    }
    let data = chart_data(t)?;
    let polygon = t.polygon();
    let mut product = LaurentPolynomial::one(&data.vars);
    for (s, &w) in g.support() {
        let factor = if polygon.is_edge(s) {
            let k = data.labels.iter().position(|x| *x == s).expect("edge label");
            let mut e = vec![0; data.vars.len()];
            e[k] = w;
            LaurentPolynomial::monomial(&data.vars, e, 1)
        } else {
            data.expansions[&s].pow(w as u32)
        };
        product = product.mul(&factor)?;
    }
    let xvars = x_var_names(t.len());
    product.map_exponents(&xvars, |e| {
        data.lattice
            .tau_inverse(e)?
            .ok_or_else(|| Error::NotInImageLattice(e.to_vec()))
    })
}

/// Outcome of [`verify_positive_basis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    Verified,
    /// `Σ c(l) 𝕀_A(l)` differs from the product.
    ProductMismatch,
    /// A negative coefficient (or a non-Laurent expression) in this chart.
    NotPositiveIn(Triangulation),
}

impl Verification {
    pub fn is_verified(&self) -> bool {
        matches!(self, Verification::Verified)
    }
}

/// Checks `Π 𝕀_A(points) = Σ c(l) 𝕀_A(l)` in the base chart and that the
/// result has nonnegative coefficients there and, for `n ≤ 3`, in every
/// `X` chart.
pub fn verify_positive_basis(points: &[Lamination], f: &Expansion) -> Result<Verification> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let polygon = first.polygon();
    let snake = polygon.snake();
    let vars = x_var_names(snake.len());
    let mut product = LaurentPolynomial::one(&vars);
    for l in points {
        product = product.mul(&ia_laurent(l)?)?;
    }
    let mut sum = LaurentPolynomial::zero(&vars);
    for (l, c) in f.coeffs() {
        sum = sum.add(&ia_laurent(l)?.scale(c))?;
    }
    if sum != product {
        return Ok(Verification::ProductMismatch);
    }
    if !sum.is_positive() {
        return Ok(Verification::NotPositiveIn(snake));
    }
    if polygon.rank() <= 3 {
        for t in polygon.triangulations() {
            match change_x_chart(&sum, &snake, &t) {
                Ok(g) if g.is_positive() => {}
                Ok(_) | Err(Error::NotDivisible) => return Ok(Verification::NotPositiveIn(t)),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(Verification::Verified)
}

/// The five rays of the `A_2` fan: `l_i` in snake coordinates `(a13, a14)`.
pub const A2_RAYS: [[i64; 2]; 5] = [[-1, 0], [0, 1], [1, 1], [1, 0], [0, -1]];

/// `b·l_i + c·l_{i+1}` (indices mod 5, from 1) as a pentagon lamination.
pub fn a2_point(i: usize, b: i64, c: i64) -> Result<Lamination> {
    if !(1..=5).contains(&i) {
        return Err(Error::IndexOutOfRange { index: i, size: 5 });
    }
    let (u, v) = (A2_RAYS[i - 1], A2_RAYS[i % 5]);
    let coords = vec![b * u[0] + c * v[0], b * u[1] + c * v[1]];
    phi_inverse(&TropicalCoords::from_vec(Polygon::new(5)?.snake(), coords)?)
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut out = BigInt::one();
    for j in 0..k {
        out = out * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    out
}

/// Coefficient of `𝕀_A(b l_i + c l_{i+1})` in `Π_k 𝕀_A(l_k)^{d_k}`:
/// `Σ_k C(d_{i+3},k) C(d_{i+4}+k, d_{i+2}+d_{i+3}−d_i+b) C(d_{i+2}, d_{i+4}−d_{i+1}+c+k)`.
pub fn a2_coefficient(d: [u32; 5], i: usize, b: i64, c: i64) -> Result<BigInt> {
    if !(1..=5).contains(&i) {
        return Err(Error::IndexOutOfRange { index: i, size: 5 });
    }
    let at = |j: usize| d[(j - 1) % 5] as i64;
    let (di, d1, d2, d3, d4) = (at(i), at(i + 1), at(i + 2), at(i + 3), at(i + 4));
    let mut total = BigInt::zero();
    for k in 0..=d3 {
        total += binomial(d3, k) * binomial(d4 + k, d2 + d3 - di + b) * binomial(d2, d4 - d1 + c + k);
    }
    Ok(total)
}
