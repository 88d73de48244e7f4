//! Combinatorics of a convex polygon with vertices labeled `1..=N` clockwise.
//!
//! Segments join two distinct vertices; a segment between neighbours is an
//! edge, every other one a diagonal. Sets of pairwise non-crossing diagonals
//! are (partial) triangulations, and complete triangulations index the
//! clusters of the type `A_{N-3}` cluster algebra.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An unordered pair of vertex labels stored as `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    i: usize,
    j: usize,
}

impl Segment {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::DegenerateSegment(a));
        }
        Ok(Segment {
            i: a.min(b),
            j: a.max(b),
        })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        self.i == v || self.j == v
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.i, self.j)
    }
}

impl Serialize for Segment {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.i, self.j].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Segment {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[usize; 2]>::deserialize(deserializer)?;
        Segment::new(a, b).map_err(serde::de::Error::custom)
    }
}

/// The labeled convex `N`-gon; carries `N` for all cyclic arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Polygon {
    n_gon: usize,
}

impl Polygon {
    pub fn new(n_gon: usize) -> Result<Self> {
        if n_gon < 3 {
            return Err(Error::InvalidPolygon(n_gon));
        }
        Ok(Polygon { n_gon })
    }

    /// The polygon of the rank-`n` cluster algebra, i.e. the `(n+3)`-gon.
    pub fn of_rank(n: usize) -> Self {
        Polygon { n_gon: n + 3 }
    }

    pub fn n_gon(&self) -> usize {
        self.n_gon
    }

    pub fn rank(&self) -> usize {
        self.n_gon - 3
    }

    /// Maps any integer onto the label range `1..=N` cyclically.
    pub fn wrap(&self, v: i64) -> usize {
        (v - 1).rem_euclid(self.n_gon as i64) as usize + 1
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n_gon {
            return Err(Error::InvalidVertex {
                label: v,
                n_gon: self.n_gon,
            });
        }
        Ok(())
    }

    pub fn check_segment(&self, s: Segment) -> Result<()> {
        self.check_vertex(s.i)?;
        self.check_vertex(s.j)
    }

    pub fn segment(&self, a: usize, b: usize) -> Result<Segment> {
        let s = Segment::new(a, b)?;
        self.check_segment(s)?;
        Ok(s)
    }

    /// Segment through two labels taken modulo `N`.
    pub fn segment_wrapped(&self, a: i64, b: i64) -> Result<Segment> {
        Segment::new(self.wrap(a), self.wrap(b))
    }

    pub fn is_edge(&self, s: Segment) -> bool {
        let d = s.j - s.i;
        d == 1 || d == self.n_gon - 1
    }

    pub fn is_diagonal(&self, s: Segment) -> bool {
        !self.is_edge(s)
    }

    pub fn require_diagonal(&self, s: Segment) -> Result<()> {
        self.check_segment(s)?;
        if self.is_edge(s) {
            return Err(Error::NotADiagonal(s));
        }
        Ok(())
    }

    /// Whether the open chords intersect. Segments sharing a vertex never cross.
    pub fn crosses(&self, a: Segment, b: Segment) -> Result<bool> {
        self.check_segment(a)?;
        self.check_segment(b)?;
        Ok(chords_cross(a, b))
    }

    pub fn segment_length(&self, s: Segment) -> Result<usize> {
        self.check_segment(s)?;
        let d = s.j - s.i;
        Ok(d.min(self.n_gon - d))
    }

    /// Type-A compatibility degree: the crossing number of two diagonals.
    pub fn compatibility_degree(&self, a: Segment, b: Segment) -> Result<u32> {
        self.require_diagonal(a)?;
        self.require_diagonal(b)?;
        Ok(u32::from(chords_cross(a, b)))
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        let n = self.n_gon;
        (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| Segment { i, j }))
    }

    pub fn diagonals(&self) -> Vec<Segment> {
        self.segments().filter(|s| self.is_diagonal(*s)).collect()
    }

    /// Edges in the order `{1,2}, {2,3}, ..., {N-1,N}, {1,N}`.
    pub fn edges(&self) -> Vec<Segment> {
        let n = self.n_gon;
        (1..n)
            .map(|i| Segment { i, j: i + 1 })
            .chain(std::iter::once(Segment { i: 1, j: n }))
            .collect()
    }

    /// All complete triangulations, sorted lexicographically by diagonal list.
    pub fn triangulations(&self) -> Vec<Triangulation> {
        let labels: Vec<usize> = (1..=self.n_gon).collect();
        let mut out: Vec<Triangulation> = ear_split(self, &labels)
            .into_iter()
            .map(|diagonals| Triangulation {
                n_gon: self.n_gon,
                diagonals,
            })
            .collect();
        out.sort();
        out
    }

    /// The fan triangulation `{1,3}, {1,4}, ..., {1,N-1}`.
    pub fn snake(&self) -> Triangulation {
        Triangulation {
            n_gon: self.n_gon,
            diagonals: (3..self.n_gon).map(|j| Segment { i: 1, j }).collect(),
        }
    }
}

/// Crossing test for chords given as canonical pairs.
pub fn chords_cross(a: Segment, b: Segment) -> bool {
    (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j)
}

// Triangulations of the sub-polygon on `labels` (consecutive boundary
// vertices): the chord from the first to the last label lies in exactly one
// triangle, whose apex splits the problem in two.
fn ear_split(polygon: &Polygon, labels: &[usize]) -> Vec<BTreeSet<Segment>> {
    if labels.len() < 3 {
        return vec![BTreeSet::new()];
    }
    let last = labels.len() - 1;
    let mut out = Vec::new();
    for k in 1..last {
        let left = ear_split(polygon, &labels[..=k]);
        let right = ear_split(polygon, &labels[k..]);
        let apex_chords = [
            Segment::new(labels[0], labels[k]).expect("distinct labels"),
            Segment::new(labels[k], labels[last]).expect("distinct labels"),
        ];
        for l in &left {
            for r in &right {
                let mut set: BTreeSet<Segment> = l.union(r).copied().collect();
                set.extend(apex_chords.iter().filter(|s| polygon.is_diagonal(**s)));
                out.push(set);
            }
        }
    }
    out
}

/// A set of pairwise non-crossing diagonals of an `N`-gon.
///
/// Ordering is lexicographic on the sorted diagonal list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangulation {
    n_gon: usize,
    diagonals: BTreeSet<Segment>,
}

impl Triangulation {
    pub fn new(polygon: Polygon, diagonals: impl IntoIterator<Item = Segment>) -> Result<Self> {
        let diagonals: BTreeSet<Segment> = diagonals.into_iter().collect();
        for &d in &diagonals {
            polygon.require_diagonal(d)?;
        }
        for &a in &diagonals {
            for &b in diagonals.range(a..) {
                if chords_cross(a, b) {
                    return Err(Error::Crossing(a, b));
                }
            }
        }
        Ok(Triangulation {
            n_gon: polygon.n_gon,
            diagonals,
        })
    }

    /// Builds from `(i, j)` label pairs.
    pub fn from_pairs(polygon: Polygon, pairs: &[(usize, usize)]) -> Result<Self> {
        let segs = pairs
            .iter()
            .map(|&(a, b)| polygon.segment(a, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(polygon, segs)
    }

    pub fn empty(polygon: Polygon) -> Self {
        Triangulation {
            n_gon: polygon.n_gon,
            diagonals: BTreeSet::new(),
        }
    }

    pub fn polygon(&self) -> Polygon {
        Polygon { n_gon: self.n_gon }
    }

    pub fn n_gon(&self) -> usize {
        self.n_gon
    }

    pub fn diagonals(&self) -> &BTreeSet<Segment> {
        &self.diagonals
    }

    pub fn len(&self) -> usize {
        self.diagonals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagonals.is_empty()
    }

    pub fn contains(&self, s: Segment) -> bool {
        self.diagonals.contains(&s)
    }

    pub fn is_complete(&self) -> bool {
        self.diagonals.len() + 3 == self.n_gon
    }

    pub fn require_complete(&self) -> Result<()> {
        if !self.is_complete() {
            return Err(Error::IncompleteTriangulation {
                found: self.diagonals.len(),
                expected: self.n_gon - 3,
            });
        }
        Ok(())
    }

    /// Diagonals of the triangulation followed by all polygon edges.
    pub fn with_edges(&self) -> Vec<Segment> {
        let mut out: Vec<Segment> = self.diagonals.iter().copied().collect();
        out.extend(self.polygon().edges());
        out
    }

    fn in_closure(&self, s: Segment) -> bool {
        self.polygon().is_edge(s) || self.diagonals.contains(&s)
    }

    /// Triangles `[a, b, c]` with `a < b < c` of a complete triangulation.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let n = self.n_gon;
        let mut out = Vec::with_capacity(n - 2);
        for a in 1..=n {
            for b in a + 1..=n {
                if !self.in_closure(Segment { i: a, j: b }) {
                    continue;
                }
                for c in b + 1..=n {
                    if self.in_closure(Segment { i: b, j: c })
                        && self.in_closure(Segment { i: a, j: c })
                    {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// Diagonals not in `self` that are compatible with every member.
    pub fn supplement(&self) -> Vec<Segment> {
        self.polygon()
            .diagonals()
            .into_iter()
            .filter(|d| !self.diagonals.contains(d))
            .filter(|d| self.diagonals.iter().all(|t| !chords_cross(*d, *t)))
            .collect()
    }

    /// The two triangle apexes opposite `d`: the one inside `(i, j)` and the
    /// one outside.
    pub fn quadrilateral(&self, d: Segment) -> Result<(usize, usize)> {
        self.require_complete()?;
        if !self.contains(d) {
            return Err(Error::InvalidInput(format!(
                "{d} is not a diagonal of the triangulation"
            )));
        }
        let (p, r) = d.endpoints();
        let apex = |candidates: Vec<usize>| {
            candidates
                .into_iter()
                .find(|&v| {
                    self.in_closure(Segment::new(p, v).unwrap())
                        && self.in_closure(Segment::new(r, v).unwrap())
                })
                .expect("a complete triangulation has a triangle on each side of a diagonal")
        };
        let inner = apex((p + 1..r).collect());
        let outer = apex((r + 1..=self.n_gon).chain(1..p).collect());
        Ok((inner, outer))
    }

    /// Replaces `d` by the other diagonal of its quadrilateral.
    pub fn flip(&self, d: Segment) -> Result<(Triangulation, Segment)> {
        let (q, s) = self.quadrilateral(d)?;
        let new = Segment::new(q, s)?;
        let mut diagonals = self.diagonals.clone();
        diagonals.remove(&d);
        diagonals.insert(new);
        Ok((
            Triangulation {
                n_gon: self.n_gon,
                diagonals,
            },
            new,
        ))
    }

    /// All triangulations one flip away, with the flipped-out diagonal.
    pub fn neighbors(&self) -> Vec<(Segment, Triangulation)> {
        self.diagonals
            .iter()
            .map(|&d| (d, self.flip(d).expect("complete triangulation").0))
            .collect()
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.diagonals.iter().map(|s| format!("{}-{}", s.i, s.j)).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Serialize for Triangulation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.diagonals.iter())
    }
}

/// Parses a chart label such as `1-3,1-4`.
pub fn parse_triangulation(polygon: Polygon, text: &str) -> Result<Triangulation> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Triangulation::empty(polygon));
    }
    let mut segs = Vec::new();
    for part in text.split(',') {
        let (a, b) = part
            .trim()
            .split_once('-')
            .ok_or_else(|| Error::Parse(format!("expected `i-j`, got `{part}`")))?;
        let a: usize = a.trim().parse().map_err(|_| Error::Parse(part.to_string()))?;
        let b: usize = b.trim().parse().map_err(|_| Error::Parse(part.to_string()))?;
        segs.push(polygon.segment(a, b)?);
    }
    Triangulation::new(polygon, segs)
}
