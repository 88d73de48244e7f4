//! Integer-weighted segment graphs on the polygon and their interval
//! statistics.
//!
//! For a graph `G = (w_ij)`:
//! * `Γ_kl = ½ Σ_{k ≤ i,j ≤ l} w_ij` is the mass inside the interval `[k, l]`,
//! * `R_p = Σ_j w_pj` is the weight at vertex `p`,
//! * `I_kl` is the total weight crossing the cut between the cyclic interval
//!   `[k+1, l]` and its complement.
//!
//! `I` determines `G`, and comparing `I` values (with equal `R`) decides the
//! order between the products `Π A_ij^{w_ij}`.

use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};
use crate::number::Number;
use crate::polygon::{Polygon, Segment};

/// Symmetric weight matrix with zero diagonal; diagonals of the polygon carry
/// non-negative weight, edges any weight.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedGraph<T: Number = i64> {
    n_gon: usize,
    w: Vec<T>,
}

impl<T: Number> WeightedGraph<T> {
    pub fn zero(polygon: Polygon) -> Self {
        let n = polygon.n_gon();
        WeightedGraph {
            n_gon: n,
            w: vec![T::zero(); n * n],
        }
    }

    /// Builds a graph from segment weights; repeated segments accumulate.
    pub fn from_weights(
        polygon: Polygon,
        weights: impl IntoIterator<Item = (Segment, T)>,
    ) -> Result<Self> {
        let mut g = Self::zero(polygon);
        for (s, v) in weights {
            polygon.check_segment(s)?;
            let cur = g.weight(s).clone();
            g.set_unchecked(s, cur + v);
        }
        g.check_diagonals()?;
        Ok(g)
    }

    /// Builds from a dense `N × N` matrix.
    pub fn from_matrix(polygon: Polygon, rows: &[Vec<T>]) -> Result<Self> {
        let n = polygon.n_gon();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::SizeMismatch(n, rows.len()));
        }
        for i in 0..n {
            if !rows[i][i].is_zero() {
                return Err(Error::InvalidInput(format!(
                    "nonzero diagonal entry at ({0},{0})",
                    i + 1
                )));
            }
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::InvalidInput(format!(
                        "asymmetric entries at ({},{})",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        let g = WeightedGraph {
            n_gon: n,
            w: rows.iter().flatten().cloned().collect(),
        };
        g.check_diagonals()?;
        Ok(g)
    }

    fn check_diagonals(&self) -> Result<()> {
        let p = self.polygon();
        for d in p.diagonals() {
            if self.weight(d).is_negative() {
                return Err(Error::InvalidInput(format!(
                    "diagonal {d} has negative weight {}",
                    self.weight(d)
                )));
            }
        }
        Ok(())
    }

    pub fn polygon(&self) -> Polygon {
        Polygon::new(self.n_gon).expect("graph built on a valid polygon")
    }

    pub fn n_gon(&self) -> usize {
        self.n_gon
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.n_gon + (j - 1)
    }

    /// Weight at labels `(i, j)`, `1`-based; zero when `i == j`.
    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.w[self.idx(i, j)]
    }

    pub fn weight(&self, s: Segment) -> &T {
        self.at(s.i(), s.j())
    }

    pub(crate) fn set_unchecked(&mut self, s: Segment, v: T) {
        let (a, b) = (self.idx(s.i(), s.j()), self.idx(s.j(), s.i()));
        self.w[a] = v.clone();
        self.w[b] = v;
    }

    /// Sets a weight, rejecting negative values on diagonals.
    pub fn set(&mut self, s: Segment, v: T) -> Result<()> {
        self.polygon().check_segment(s)?;
        if v.is_negative() && self.polygon().is_diagonal(s) {
            return Err(Error::InvalidInput(format!(
                "diagonal {s} has negative weight {v}"
            )));
        }
        self.set_unchecked(s, v);
        Ok(())
    }

    pub fn is_trivial(&self) -> bool {
        self.w.iter().all(|v| v.is_zero())
    }

    /// Segments with nonzero weight, in segment order.
    pub fn support(&self) -> impl Iterator<Item = (Segment, &T)> + '_ {
        self.polygon()
            .segments()
            .collect::<Vec<_>>()
            .into_iter()
            .map(move |s| (s, self.weight(s)))
            .filter(|(_, v)| !v.is_zero())
    }

    /// `(i, j, w)` triplets of the nonzero weights.
    pub fn triplets(&self) -> Vec<(usize, usize, T)> {
        self.support()
            .map(|(s, v)| (s.i(), s.j(), v.clone()))
            .collect()
    }

    pub fn scale(&self, k: &T) -> Result<Self> {
        let g = WeightedGraph {
            n_gon: self.n_gon,
            w: self.w.iter().map(|v| v.clone() * k.clone()).collect(),
        };
        g.check_diagonals()?;
        Ok(g)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.n_gon != other.n_gon {
            return Err(Error::SizeMismatch(self.n_gon, other.n_gon));
        }
        Ok(WeightedGraph {
            n_gon: self.n_gon,
            w: self
                .w
                .iter()
                .zip(&other.w)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    /// `R_p`: total weight at vertex `p`.
    pub fn vertex_sum(&self, p: usize) -> T {
        (1..=self.n_gon).map(|j| self.at(p, j).clone()).sum()
    }

    /// `Γ_kl` for `1 ≤ k ≤ l ≤ N`.
    pub fn interval_mass(&self, k: usize, l: usize) -> T {
        debug_assert!(k <= l);
        let mut twice = T::zero();
        for i in k..=l {
            for j in k..=l {
                twice = twice + self.at(i, j).clone();
            }
        }
        twice
            .half()
            .expect("symmetric zero-diagonal matrices have even ordered-pair sums")
    }

    /// Whether label `v` lies in the cyclic interval `[k+1, l]`.
    fn in_cut(&self, k: usize, l: usize, v: usize) -> bool {
        let n = self.n_gon;
        // offset of v after k, in 1..=n
        let off = |x: usize| (x + n - k - 1) % n + 1;
        k != l && off(v) <= off(l)
    }

    /// `I_kl`: weight crossing between `[k+1, l]` and the rest. `I_kk = 0`.
    pub fn cut(&self, k: usize, l: usize) -> T {
        if k == l {
            return T::zero();
        }
        let n = self.n_gon;
        let inside: Vec<bool> = (1..=n).map(|v| self.in_cut(k, l, v)).collect();
        let mut total = T::zero();
        for i in 1..=n {
            if !inside[i - 1] {
                continue;
            }
            for j in 1..=n {
                if !inside[j - 1] {
                    total = total + self.at(i, j).clone();
                }
            }
        }
        total
    }

    pub fn stats(&self) -> GraphStats<T> {
        let n = self.n_gon;
        let mut gamma = vec![vec![T::zero(); n]; n];
        for k in 1..=n {
            for l in k..=n {
                gamma[k - 1][l - 1] = self.interval_mass(k, l);
            }
        }
        let r = (1..=n).map(|p| self.vertex_sum(p)).collect();
        let mut cut = vec![T::zero(); n * n];
        for k in 1..=n {
            for l in 1..=n {
                cut[(k - 1) * n + l - 1] = self.cut(k, l);
            }
        }
        GraphStats {
            gamma,
            r,
            cut: CutMatrix { n_gon: n, values: cut },
        }
    }

    /// Minimum length of a segment carrying nonzero weight; `None` when trivial.
    pub fn depth(&self) -> Option<usize> {
        let p = self.polygon();
        self.support()
            .map(|(s, _)| p.segment_length(s).expect("valid segment"))
            .min()
    }

    /// Whether the diagonals of positive weight are pairwise non-crossing.
    pub fn diagonals_non_crossing(&self) -> bool {
        let p = self.polygon();
        let diags: Vec<Segment> = self
            .support()
            .map(|(s, _)| s)
            .filter(|s| p.is_diagonal(*s))
            .collect();
        diags.iter().enumerate().all(|(a, &x)| {
            diags[a + 1..]
                .iter()
                .all(|&y| !crate::polygon::chords_cross(x, y))
        })
    }

    /// Entrywise minimum.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        if self.n_gon != other.n_gon {
            return Err(Error::SizeMismatch(self.n_gon, other.n_gon));
        }
        Ok(WeightedGraph {
            n_gon: self.n_gon,
            w: self
                .w
                .iter()
                .zip(&other.w)
                .map(|(a, b)| a.clone().min(b.clone()))
                .collect(),
        })
    }

    /// Entrywise difference; fails if a diagonal would go negative.
    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        if self.n_gon != other.n_gon {
            return Err(Error::SizeMismatch(self.n_gon, other.n_gon));
        }
        let g = WeightedGraph {
            n_gon: self.n_gon,
            w: self
                .w
                .iter()
                .zip(&other.w)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        };
        g.check_diagonals()?;
        Ok(g)
    }
}

impl<T: Number> Add for &WeightedGraph<T> {
    type Output = WeightedGraph<T>;

    fn add(self, rhs: Self) -> WeightedGraph<T> {
        self.try_add(rhs).expect("graphs on the same polygon")
    }
}

impl<T: Number> fmt::Debug for WeightedGraph<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G{}[", self.n_gon)?;
        for (k, (s, v)) in self.support().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}:{}", s.i(), s.j(), v)?;
        }
        write!(f, "]")
    }
}

/// Cut values `I_kl` for all ordered label pairs; symmetric with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutMatrix<T: Number = i64> {
    n_gon: usize,
    values: Vec<T>,
}

impl<T: Number> CutMatrix<T> {
    pub fn from_fn(polygon: Polygon, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let n = polygon.n_gon();
        let mut values = Vec::with_capacity(n * n);
        for k in 1..=n {
            for l in 1..=n {
                values.push(if k == l { T::zero() } else { f(k, l) });
            }
        }
        CutMatrix { n_gon: n, values }
    }

    pub fn n_gon(&self) -> usize {
        self.n_gon
    }

    /// `I_kl` with labels taken modulo `N`.
    pub fn get(&self, k: i64, l: i64) -> &T {
        let n = self.n_gon as i64;
        let k = (k - 1).rem_euclid(n) as usize;
        let l = (l - 1).rem_euclid(n) as usize;
        &self.values[k * self.n_gon + l]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats<T: Number = i64> {
    gamma: Vec<Vec<T>>,
    r: Vec<T>,
    cut: CutMatrix<T>,
}

impl<T: Number> GraphStats<T> {
    /// `Γ_kl`, defined for `k ≤ l`.
    pub fn gamma(&self, k: usize, l: usize) -> &T {
        assert!(k <= l, "Γ is only defined on increasing intervals");
        &self.gamma[k - 1][l - 1]
    }

    pub fn r(&self, p: usize) -> &T {
        &self.r[p - 1]
    }

    pub fn r_vector(&self) -> &[T] {
        &self.r
    }

    pub fn cut(&self, k: usize, l: usize) -> &T {
        self.cut.get(k as i64, l as i64)
    }

    pub fn cut_matrix(&self) -> &CutMatrix<T> {
        &self.cut
    }
}

/// Decides `Π A^{G1} ≤ Π A^{G2}`: equal vertex sums and `I_kl(G1) ≤ I_kl(G2)`
/// on every diagonal.
pub fn dominates<T: Number>(g1: &WeightedGraph<T>, g2: &WeightedGraph<T>) -> Result<bool> {
    if g1.n_gon != g2.n_gon {
        return Err(Error::SizeMismatch(g1.n_gon, g2.n_gon));
    }
    let n = g1.n_gon;
    if (1..=n).any(|p| g1.vertex_sum(p) != g2.vertex_sum(p)) {
        return Ok(false);
    }
    Ok(g1
        .polygon()
        .diagonals()
        .into_iter()
        .all(|d| g1.cut(d.i(), d.j()) <= g2.cut(d.i(), d.j())))
}

/// Recovers the graph from its cut values:
/// `w_ij = ½ (I_ij + I_{i-1,j-1} − I_{i,j-1} − I_{i-1,j})`.
pub fn graph_from_cut_stats<T: Number>(cut: &CutMatrix<T>) -> Result<WeightedGraph<T>> {
    let polygon = Polygon::new(cut.n_gon())?;
    let mut g = WeightedGraph::zero(polygon);
    for s in polygon.segments() {
        let (i, j) = (s.i() as i64, s.j() as i64);
        let twice = cut.get(i, j).clone() + cut.get(i - 1, j - 1).clone()
            - cut.get(i, j - 1).clone()
            - cut.get(i - 1, j).clone();
        let w = twice.half().ok_or(Error::NonIntegral(s))?;
        g.set_unchecked(s, w);
    }
    g.check_diagonals()?;
    Ok(g)
}
