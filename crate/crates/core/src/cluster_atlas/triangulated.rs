use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::One;

use super::seed::Seed;
use crate::error::{Error, Result};
use crate::exact_algebra::LaurentPolynomial;
use crate::polygon::{Polygon, Segment, Triangulation};

/// Whether polygon edges carry their own variables (`Ã`) or are set to 1
/// (`A`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    Reduced,
    WithCoefficients,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChartKind {
    A(Space),
    X,
}

/// A coordinate system labelled by a complete triangulation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chart {
    pub kind: ChartKind,
    pub label: Triangulation,
    pub vars: Vec<String>,
}

impl Chart {
    /// `A_ij` for each diagonal of `t` (and each edge with coefficients).
    pub fn a(t: &Triangulation, space: Space) -> Result<Self> {
        t.require_complete()?;
        let segs: Vec<Segment> = match space {
            Space::Reduced => t.diagonals().iter().copied().collect(),
            Space::WithCoefficients => t.with_edges(),
        };
        Ok(Chart {
            kind: ChartKind::A(space),
            label: t.clone(),
            vars: segs.iter().map(|s| a_var(*s, t.n_gon())).collect(),
        })
    }

    /// `X1..Xn`, with `Xk` attached to the k-th diagonal of `t` in sorted order.
    pub fn x(t: &Triangulation) -> Result<Self> {
        t.require_complete()?;
        Ok(Chart {
            kind: ChartKind::X,
            label: t.clone(),
            vars: super::seed::x_var_names(t.len()),
        })
    }
}

/// Variable name of `A_ij`: `A13`, or `A1_13` once labels reach two digits.
pub fn a_var(s: Segment, n_gon: usize) -> String {
    if n_gon < 10 {
        format!("A{}{}", s.i(), s.j())
    } else {
        format!("A{}_{}", s.i(), s.j())
    }
}

/// The seed with coefficients of a complete triangulation: unfrozen indices
/// are its diagonals (sorted), frozen ones the polygon edges. Every triangle
/// with sides `ab → bc → ca` contributes `+1` from each side to the next and
/// `−1` to the previous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangulationSeed {
    triangulation: Triangulation,
    labels: Vec<Segment>,
    seed: Seed,
}

impl TriangulationSeed {
    pub fn new(t: &Triangulation) -> Result<Self> {
        t.require_complete()?;
        let labels = t.with_edges();
        let index: HashMap<Segment, usize> = labels.iter().enumerate().map(|(k, s)| (*s, k)).collect();
        let m = labels.len();
        let mut eps = vec![vec![0i64; m]; m];
        for [a, b, c] in t.triangles() {
            let sides = [
                index[&Segment::new(a, b)?],
                index[&Segment::new(b, c)?],
                index[&Segment::new(a, c)?],
            ];
            for k in 0..3 {
                let s = sides[k];
                eps[s][sides[(k + 1) % 3]] += 1;
                eps[s][sides[(k + 2) % 3]] -= 1;
            }
        }
        let frozen = (t.len()..m).collect();
        let seed = Seed::new(eps, frozen, vec![num_rational::BigRational::one(); m])?;
        Ok(TriangulationSeed {
            triangulation: t.clone(),
            labels,
            seed,
        })
    }

    pub fn triangulation(&self) -> &Triangulation {
        &self.triangulation
    }

    /// Segment attached to each index.
    pub fn labels(&self) -> &[Segment] {
        &self.labels
    }

    pub fn seed(&self) -> &Seed {
        &self.seed
    }

    pub fn index_of(&self, s: Segment) -> Option<usize> {
        self.labels.iter().position(|l| *l == s)
    }

    /// Variable names of the chart with coefficients, in index order.
    pub fn a_vars(&self) -> Vec<String> {
        let n = self.triangulation.n_gon();
        self.labels.iter().map(|s| a_var(*s, n)).collect()
    }
}

/// Laurent expansions of every `A_d` (all diagonals `d`) in the chart of `t`.
///
/// For a chord `{p,q}` outside `t`, the triangle of `t` at `p` that the chord
/// enters has an opposite side `{r,s}` (a diagonal of `t` crossing `{p,q}`),
/// and `A_pq A_rs = A_pr A_qs + A_ps A_qr`. The chords `{q,r}`, `{q,s}` cross
/// fewer diagonals of `t` than `{p,q}`, so the recursion terminates.
pub fn expand_all_a_variables(
    t: &Triangulation,
    space: Space,
) -> Result<BTreeMap<Segment, LaurentPolynomial>> {
    let chart = Chart::a(t, space)?;
    let mut ctx = Expander {
        t,
        polygon: t.polygon(),
        space,
        vars: &chart.vars,
        triangles: t.triangles(),
        memo: HashMap::new(),
    };
    let mut out = BTreeMap::new();
    for d in t.polygon().diagonals() {
        out.insert(d, ctx.get(d)?);
    }
    Ok(out)
}

/// Laurent expansion of one `A_diag` in the chart of `t`.
pub fn expand_a_variable(diag: Segment, t: &Triangulation, space: Space) -> Result<LaurentPolynomial> {
    t.polygon().require_diagonal(diag)?;
    let chart = Chart::a(t, space)?;
    let mut ctx = Expander {
        t,
        polygon: t.polygon(),
        space,
        vars: &chart.vars,
        triangles: t.triangles(),
        memo: HashMap::new(),
    };
    ctx.get(diag)
}

struct Expander<'a> {
    t: &'a Triangulation,
    polygon: Polygon,
    space: Space,
    vars: &'a [String],
    triangles: Vec<[usize; 3]>,
    memo: HashMap<Segment, LaurentPolynomial>,
}

impl Expander<'_> {
    fn var_index(&self, s: Segment) -> usize {
        let name = a_var(s, self.polygon.n_gon());
        self.vars.iter().position(|v| *v == name).expect("chart variable")
    }

    fn get(&mut self, s: Segment) -> Result<LaurentPolynomial> {
        if let Some(p) = self.memo.get(&s) {
            return Ok(p.clone());
        }
        let value = if self.polygon.is_edge(s) {
            match self.space {
                Space::Reduced => LaurentPolynomial::one(self.vars),
                Space::WithCoefficients => LaurentPolynomial::variable(self.vars, self.var_index(s)),
            }
        } else if self.t.contains(s) {
            LaurentPolynomial::variable(self.vars, self.var_index(s))
        } else {
            let (p, q) = s.endpoints();
            let (r, s2) = entered_triangle(&self.triangles, self.polygon.n_gon(), p, q);
            let seg = |a, b| Segment::new(a, b);
            let pr = self.get(seg(p, r)?)?;
            let ps = self.get(seg(p, s2)?)?;
            let qr = self.get(seg(q, r)?)?;
            let qs = self.get(seg(q, s2)?)?;
            let rs = self.var_index(seg(r, s2)?);
            let num = pr.mul(&qs)?.add(&ps.mul(&qr)?)?;
            let mut e = vec![0; self.vars.len()];
            e[rs] = -1;
            num.mul_monomial(&e, &BigInt::one())
        };
        self.memo.insert(s, value.clone());
        Ok(value)
    }
}

/// The other two vertices `(r, s)` of the triangle at `p` whose wedge
/// contains the direction to `q`, ordered clockwise from `p`. Their side
/// `{r,s}` crosses `{p,q}`.
pub(crate) fn entered_triangle(triangles: &[[usize; 3]], n: usize, p: usize, q: usize) -> (usize, usize) {
    let rel = |v: usize| (v + n - p) % n;
    for tri in triangles {
        if !tri.contains(&p) {
            continue;
        }
        let mut others: Vec<usize> = tri.iter().copied().filter(|&v| v != p).collect();
        others.sort_by_key(|&v| rel(v));
        let (r, s) = (others[0], others[1]);
        if rel(r) < rel(q) && rel(q) < rel(s) {
            return (r, s);
        }
    }
    unreachable!("a complete triangulation covers every direction at a vertex")
}

/// Shortest flip sequence from `from` to `to`: each entry is the diagonal
/// flipped in the current triangulation. Breadth first; ties go to the
/// lexicographically smallest flipped diagonal.
pub fn flip_path(from: &Triangulation, to: &Triangulation) -> Result<Vec<Segment>> {
    from.require_complete()?;
    to.require_complete()?;
    if from.n_gon() != to.n_gon() {
        return Err(Error::SizeMismatch(from.n_gon(), to.n_gon()));
    }
    let mut parent: HashMap<Triangulation, (Triangulation, Segment)> = HashMap::new();
    let mut seen: HashSet<Triangulation> = HashSet::from([from.clone()]);
    let mut queue = VecDeque::from([from.clone()]);
    while let Some(cur) = queue.pop_front() {
        if &cur == to {
            break;
        }
        for (d, next) in cur.neighbors() {
            if seen.insert(next.clone()) {
                parent.insert(next.clone(), (cur.clone(), d));
                queue.push_back(next);
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = to.clone();
    while &cur != from {
        let (prev, d) = parent.get(&cur).expect("the flip graph is connected").clone();
        path.push(d);
        cur = prev;
    }
    path.reverse();
    Ok(path)
}

/// The mutation word (0-based seed indices, positions fixed by the sorted
/// diagonals of `from`) realising `flip_path(from, to)`, together with the
/// diagonal each position carries at the end.
pub fn flip_word(from: &Triangulation, to: &Triangulation) -> Result<(Vec<usize>, Vec<Segment>)> {
    let path = flip_path(from, to)?;
    let mut labels: Vec<Segment> = from.diagonals().iter().copied().collect();
    let mut cur = from.clone();
    let mut word = Vec::with_capacity(path.len());
    for d in path {
        let k = labels.iter().position(|l| *l == d).expect("flipped diagonal is present");
        let (next, new) = cur.flip(d)?;
        labels[k] = new;
        word.push(k);
        cur = next;
    }
    Ok((word, labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagon_snake() -> Triangulation {
        Polygon::new(5).unwrap().snake()
    }

    #[test]
    fn pentagon_expansions() {
        let t = pentagon_snake();
        let all = expand_all_a_variables(&t, Space::Reduced).unwrap();
        let vars = Chart::a(&t, Space::Reduced).unwrap().vars;
        let p = |s: &str| LaurentPolynomial::parse(s, &vars).unwrap();
        let seg = |a, b| Segment::new(a, b).unwrap();
        assert_eq!(all[&seg(2, 4)], p("A13^-1 + A13^-1 A14"));
        assert_eq!(all[&seg(2, 5)], p("A13^-1 A14^-1 + A13^-1 + A14^-1"));
        assert_eq!(all[&seg(3, 5)], p("A14^-1 + A13 A14^-1"));
        assert_eq!(all[&seg(1, 3)], p("A13"));
    }

    #[test]
    fn snake_seed_reduces_to_cartan() {
        for n in 1..=5 {
            let t = Polygon::of_rank(n).snake();
            let ts = TriangulationSeed::new(&t).unwrap();
            assert_eq!(ts.seed().reduced(), super::super::seed::seed_from_cartan_an(n).unwrap());
        }
    }

    #[test]
    fn flip_paths() {
        let poly = Polygon::new(6).unwrap();
        let ts = poly.triangulations();
        for a in &ts {
            for b in &ts {
                let path = flip_path(a, b).unwrap();
                let end = path.iter().fold(a.clone(), |cur, d| cur.flip(*d).unwrap().0);
                assert_eq!(&end, b);
            }
        }
        assert!(flip_path(&ts[0], &ts[0]).unwrap().is_empty());
    }
}
