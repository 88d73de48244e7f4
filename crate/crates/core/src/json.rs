//! JSON encodings of the library's values.
//!
//! Every top-level document carries `"format": 1`. Numbers of the integer
//! domain are written as JSON integers; rationals as strings like `"-1/2"`.
//! Readers accept either form.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Map, Value};

use crate::canonical_basis::Expansion;
use crate::cluster_atlas::Seed;
use crate::error::{Error, Result};
use crate::exact_algebra::LaurentPolynomial;
use crate::number::Number;
use crate::polygon::{Polygon, Segment, Triangulation};
use crate::polytope::StasheffSpec;
use crate::tropical_points::{Lamination, TropicalCoords};
use crate::weighted_graph::WeightedGraph;

pub const FORMAT: u64 = 1;

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Adds `"format": 1` to an object, or wraps anything else as
/// `{"format": 1, key: value}`.
pub fn document(key: &str, value: Value) -> Value {
    match value {
        Value::Object(mut m) => {
            m.insert("format".into(), json!(FORMAT));
            Value::Object(m)
        }
        other => {
            let mut m = Map::new();
            m.insert("format".into(), json!(FORMAT));
            m.insert(key.into(), other);
            Value::Object(m)
        }
    }
}

/// Inverse of [`document`]: checks the format tag and unwraps `key` if the
/// document is a wrapper. Bare values without a tag are accepted.
pub fn open_document<'a>(key: &str, v: &'a Value) -> Result<&'a Value> {
    if let Value::Object(m) = v {
        if let Some(f) = m.get("format") {
            if f.as_u64() != Some(FORMAT) {
                return Err(bad(format!("unsupported format {f}")));
            }
            if let Some(inner) = m.get(key) {
                return Ok(inner);
            }
        }
    }
    Ok(v)
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value> {
    v.get(name).ok_or_else(|| bad(format!("missing field `{name}`")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("`{what}` must be an array")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| bad(format!("`{what}` must be a nonnegative integer")))
}

fn as_i64(v: &Value, what: &str) -> Result<i64> {
    v.as_i64().ok_or_else(|| bad(format!("`{what}` must be an integer")))
}

pub fn number_to_json<T: Number>(x: &T) -> Value {
    let text = x.to_text();
    match text.parse::<i64>() {
        Ok(i) if T::DOMAIN == "int" => json!(i),
        _ => json!(text),
    }
}

pub fn number_from_json<T: Number>(v: &Value) -> Result<T> {
    let parsed = match v {
        Value::Number(n) => n.as_i64().map(T::from_i64),
        Value::String(s) => T::parse_text(s),
        _ => None,
    };
    parsed.ok_or_else(|| bad(format!("`{v}` is not a {} number", T::DOMAIN)))
}

fn bigint_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
    .ok_or_else(|| bad(format!("`{v}` is not an integer")))
}

fn bigint_to_json(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(i) => json!(i),
        Err(_) => json!(x.to_string()),
    }
}

pub fn segment_from_json(v: &Value, polygon: Polygon) -> Result<Segment> {
    let a = as_array(v, "segment")?;
    if a.len() != 2 {
        return Err(bad("a segment is a pair [i, j]"));
    }
    polygon.segment(as_usize(&a[0], "i")?, as_usize(&a[1], "j")?)
}

pub fn triangulation_to_json(t: &Triangulation) -> Value {
    Value::Array(t.diagonals().iter().map(|d| json!([d.i(), d.j()])).collect())
}

pub fn triangulation_from_json(v: &Value, polygon: Polygon) -> Result<Triangulation> {
    let segs = as_array(v, "chart")?
        .iter()
        .map(|s| segment_from_json(s, polygon))
        .collect::<Result<Vec<_>>>()?;
    Triangulation::new(polygon, segs)
}

fn triplets_to_json<T: Number>(items: impl Iterator<Item = (Segment, T)>) -> Value {
    Value::Array(
        items
            .map(|(s, x)| json!([s.i(), s.j(), number_to_json(&x)]))
            .collect(),
    )
}

fn triplets_from_json<T: Number>(v: &Value, polygon: Polygon, what: &str) -> Result<Vec<(Segment, T)>> {
    as_array(v, what)?
        .iter()
        .map(|t| {
            let t = as_array(t, what)?;
            if t.len() != 3 {
                return Err(bad(format!("`{what}` entries are triplets [i, j, value]")));
            }
            let s = polygon.segment(as_usize(&t[0], "i")?, as_usize(&t[1], "j")?)?;
            Ok((s, number_from_json(&t[2])?))
        })
        .collect()
}

fn polygon_from_json(v: &Value) -> Result<Polygon> {
    Polygon::new(as_usize(field(v, "n_gon")?, "n_gon")?)
}

pub fn graph_to_json<T: Number>(g: &WeightedGraph<T>) -> Value {
    json!({
        "n_gon": g.n_gon(),
        "weights": triplets_to_json(g.support().map(|(s, w)| (s, w.clone()))),
    })
}

pub fn graph_from_json<T: Number>(v: &Value) -> Result<WeightedGraph<T>> {
    let polygon = polygon_from_json(v)?;
    let mut g = WeightedGraph::zero(polygon);
    let mut seen = BTreeSet::new();
    for (s, w) in triplets_from_json::<T>(field(v, "weights")?, polygon, "weights")? {
        if !seen.insert(s) {
            return Err(bad(format!("segment {s} listed twice")));
        }
        g.set(s, w)?;
    }
    Ok(g)
}

pub fn lamination_to_json<T: Number>(l: &Lamination<T>) -> Value {
    let mut v = graph_to_json(l.graph());
    v["domain"] = json!(T::DOMAIN);
    v
}

/// A missing `domain` is read as the reader's own domain.
pub fn lamination_from_json<T: Number>(v: &Value) -> Result<Lamination<T>> {
    if let Some(d) = v.get("domain") {
        if d.as_str() != Some(T::DOMAIN) {
            return Err(bad(format!("expected domain \"{}\", got {d}", T::DOMAIN)));
        }
    }
    Lamination::new(graph_from_json(v)?)
}

pub fn laminations_from_json<T: Number>(v: &Value) -> Result<Vec<Lamination<T>>> {
    as_array(open_document("points", v)?, "points")?
        .iter()
        .map(lamination_from_json)
        .collect()
}

pub fn coords_to_json<T: Number>(c: &TropicalCoords<T>) -> Value {
    json!({
        "n_gon": c.chart().n_gon(),
        "chart": triangulation_to_json(c.chart()),
        "values": triplets_to_json(c.values().iter().map(|(s, x)| (*s, x.clone()))),
    })
}

pub fn coords_from_json<T: Number>(v: &Value) -> Result<TropicalCoords<T>> {
    let polygon = polygon_from_json(v)?;
    let chart = triangulation_from_json(field(v, "chart")?, polygon)?;
    let values: BTreeMap<Segment, T> = triplets_from_json(field(v, "values")?, polygon, "values")?
        .into_iter()
        .collect();
    TropicalCoords::new(chart, values)
}

pub fn spec_to_json<T: Number>(spec: &StasheffSpec<T>) -> Value {
    json!({
        "n_gon": spec.n_gon(),
        "c": triplets_to_json(spec.values().iter().map(|(s, x)| (*s, x.clone()))),
    })
}

pub fn spec_from_json<T: Number>(v: &Value) -> Result<StasheffSpec<T>> {
    let polygon = polygon_from_json(v)?;
    let c: BTreeMap<Segment, T> = triplets_from_json(field(v, "c")?, polygon, "c")?.into_iter().collect();
    StasheffSpec::new(polygon, c)
}

pub fn expansion_to_json(e: &Expansion) -> Value {
    Value::Array(
        e.coeffs()
            .iter()
            .map(|(l, c)| json!({"lamination": lamination_to_json(l), "coeff": bigint_to_json(c)}))
            .collect(),
    )
}

pub fn expansion_from_json(v: &Value) -> Result<Expansion> {
    let pairs = as_array(open_document("expansion", v)?, "expansion")?
        .iter()
        .map(|item| Ok((lamination_from_json(field(item, "lamination")?)?, bigint_from_json(field(item, "coeff")?)?)))
        .collect::<Result<Vec<_>>>()?;
    Expansion::from_pairs(pairs)
}

/// `{"epsilon": [[..]], "frozen": [1-based indices], "d": [..]}`; `frozen`
/// and `d` are optional (none frozen, all `d_i = 1`).
pub fn seed_to_json(seed: &Seed) -> Value {
    json!({
        "epsilon": seed.epsilon(),
        "frozen": seed.frozen().iter().map(|i| i + 1).collect::<Vec<_>>(),
        "d": seed.d().iter().map(number_to_json).collect::<Vec<_>>(),
    })
}

pub fn seed_from_json(v: &Value) -> Result<Seed> {
    let rows = as_array(field(v, "epsilon")?, "epsilon")?;
    let epsilon = rows
        .iter()
        .map(|r| as_array(r, "epsilon")?.iter().map(|x| as_i64(x, "epsilon")).collect())
        .collect::<Result<Vec<Vec<i64>>>>()?;
    let frozen = match v.get("frozen") {
        None => BTreeSet::new(),
        Some(f) => as_array(f, "frozen")?
            .iter()
            .map(|x| match as_usize(x, "frozen")? {
                0 => Err(bad("frozen indices are 1-based")),
                i => Ok(i - 1),
            })
            .collect::<Result<_>>()?,
    };
    let d = match v.get("d") {
        None => vec![BigRational::one(); epsilon.len()],
        Some(d) => as_array(d, "d")?.iter().map(number_from_json).collect::<Result<_>>()?,
    };
    Seed::new(epsilon, frozen, d)
}

pub fn laurent_to_json(f: &LaurentPolynomial) -> Value {
    json!({
        "vars": f.vars(),
        "terms": f.graded_terms().iter().map(|(e, c)| json!([e, bigint_to_json(c)])).collect::<Vec<_>>(),
    })
}

pub fn laurent_from_json(v: &Value) -> Result<LaurentPolynomial> {
    let vars: Vec<String> = as_array(field(v, "vars")?, "vars")?
        .iter()
        .map(|x| x.as_str().map(str::to_string).ok_or_else(|| bad("`vars` must be strings")))
        .collect::<Result<_>>()?;
    let terms = as_array(field(v, "terms")?, "terms")?
        .iter()
        .map(|t| {
            let t = as_array(t, "terms")?;
            if t.len() != 2 {
                return Err(bad("`terms` entries are pairs [exponents, coefficient]"));
            }
            let e = as_array(&t[0], "exponents")?
                .iter()
                .map(|x| as_i64(x, "exponent"))
                .collect::<Result<Vec<_>>>()?;
            Ok((e, bigint_from_json(&t[1])?))
        })
        .collect::<Result<Vec<_>>>()?;
    LaurentPolynomial::from_terms(&vars, terms)
}
