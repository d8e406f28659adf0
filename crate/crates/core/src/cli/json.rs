//! JSON encodings of points, vectors, fans and reports.
//!
//! Rationals are written as `"p/q"` strings (`"p"` when integral) and
//! infinities as `"inf"` / `"-inf"`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::divisors::{BalancingReport, WeightedFan};
use crate::error::{Error, Result};
use crate::maps::BoundaryDecomposition;
use crate::moduli::{EmbeddingVector, LinkGraph, ModuliPoint};
use crate::number::{EdgeLength, Extended};
use crate::trees::{CombinatorialType, Label, LeafSet, Split};

fn bad(what: &str) -> Error {
    Error::Parse(format!("malformed JSON: {what}"))
}

fn labels(v: &Value, what: &str) -> Result<LeafSet> {
    let arr = v.as_array().ok_or_else(|| bad(what))?;
    let mut out = Vec::with_capacity(arr.len());
    for x in arr {
        out.push(x.as_u64().ok_or_else(|| bad(what))? as Label);
    }
    LeafSet::from_labels(out)
}

/// `"n"` plus an optional explicit `"leaves"` list.
fn leaf_set(obj: &Map<String, Value>) -> Result<LeafSet> {
    if let Some(l) = obj.get("leaves") {
        let leaves = labels(l, "leaves")?;
        if let Some(n) = obj.get("n").and_then(Value::as_u64) {
            if n as usize != leaves.len() {
                return Err(bad("\"n\" disagrees with \"leaves\""));
            }
        }
        return Ok(leaves);
    }
    let n = obj.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing \"n\""))?;
    LeafSet::range(n as usize)
}

fn put_leaves(obj: &mut Map<String, Value>, leaves: LeafSet) {
    obj.insert("n".into(), json!(leaves.len()));
    if LeafSet::range(leaves.len()).ok() != Some(leaves) {
        obj.insert("leaves".into(), json!(leaves.to_vec()));
    }
}

pub fn bigint(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

pub fn split(s: &Split) -> Value {
    json!(s.side().to_vec())
}

pub fn type_splits(t: &CombinatorialType) -> Value {
    Value::Array(t.splits().iter().map(split).collect())
}

pub fn point_to_json(x: &ModuliPoint) -> Value {
    let mut obj = Map::new();
    put_leaves(&mut obj, x.leaves());
    let splits: Vec<Value> = x
        .lengths()
        .iter()
        .map(|(s, l)| json!({ "side": s.side().to_vec(), "length": l.to_string() }))
        .collect();
    obj.insert("splits".into(), Value::Array(splits));
    Value::Object(obj)
}

pub fn point_from_json(v: &Value) -> Result<ModuliPoint> {
    let obj = v.as_object().ok_or_else(|| bad("point must be an object"))?;
    let leaves = leaf_set(obj)?;
    let splits = obj.get("splits").and_then(Value::as_array).ok_or_else(|| bad("missing \"splits\""))?;
    let mut edges = Vec::with_capacity(splits.len());
    for s in splits {
        let side = labels(s.get("side").ok_or_else(|| bad("split without \"side\""))?, "side")?;
        let length = match s.get("length") {
            Some(Value::String(t)) => t.parse::<EdgeLength>()?,
            Some(Value::Number(k)) => k.to_string().parse::<EdgeLength>()?,
            _ => return Err(bad("split without \"length\"")),
        };
        edges.push((Split::new(leaves, side)?, length));
    }
    ModuliPoint::new(leaves, edges)
}

pub fn vector_to_json(v: &EmbeddingVector) -> Value {
    Value::Array(v.entries().iter().map(|e| json!(e.to_string())).collect())
}

pub fn vector_from_json(v: &Value, leaves: LeafSet) -> Result<EmbeddingVector> {
    let arr = v.as_array().ok_or_else(|| bad("vector must be an array"))?;
    let entries = arr
        .iter()
        .map(|e| match e {
            Value::String(s) => s.parse::<Extended>(),
            Value::Number(k) => k.to_string().parse::<Extended>(),
            _ => Err(bad("vector entries are strings")),
        })
        .collect::<Result<Vec<_>>>()?;
    EmbeddingVector::new(leaves, entries)
}

pub fn fan_to_json(fan: &WeightedFan) -> Value {
    let mut obj = Map::new();
    put_leaves(&mut obj, fan.leaves());
    obj.insert("dim".into(), json!(fan.dim()));
    let cones: Vec<Value> = fan
        .cones()
        .iter()
        .map(|(t, w)| json!({ "splits": type_splits(t), "weight": w }))
        .collect();
    obj.insert("cones".into(), Value::Array(cones));
    Value::Object(obj)
}

pub fn fan_from_json(v: &Value) -> Result<WeightedFan> {
    let obj = v.as_object().ok_or_else(|| bad("fan must be an object"))?;
    let leaves = leaf_set(obj)?;
    let dim = obj.get("dim").and_then(Value::as_u64).ok_or_else(|| bad("missing \"dim\""))? as usize;
    let cones = obj.get("cones").and_then(Value::as_array).ok_or_else(|| bad("missing \"cones\""))?;
    let mut out = Vec::with_capacity(cones.len());
    for c in cones {
        let splits = c.get("splits").and_then(Value::as_array).ok_or_else(|| bad("cone without \"splits\""))?;
        let splits = splits
            .iter()
            .map(|s| Split::new(leaves, labels(s, "split")?))
            .collect::<Result<Vec<_>>>()?;
        let weight = c.get("weight").map_or(Some(1), Value::as_u64).ok_or_else(|| bad("weight"))?;
        out.push((CombinatorialType::new(leaves, splits)?, weight));
    }
    WeightedFan::new(leaves, dim, out)
}

pub fn report_to_json(r: &BalancingReport) -> Value {
    let adjacent: Vec<Value> = r
        .adjacent
        .iter()
        .map(|a| json!({ "split": split(&a.split), "weight": a.weight, "direction": a.direction }))
        .collect();
    let mut obj = Map::new();
    obj.insert("face".into(), type_splits(&r.face));
    obj.insert("adjacent".into(), Value::Array(adjacent));
    obj.insert("sum".into(), Value::Array(r.sum.iter().map(bigint).collect()));
    obj.insert("balanced".into(), json!(r.balanced));
    obj.insert("smooth".into(), json!(r.smooth));
    if let Some(d) = &r.elementary_divisors {
        obj.insert("elementary_divisors".into(), Value::Array(d.iter().map(bigint).collect()));
    }
    Value::Object(obj)
}

pub fn decomposition_to_json(d: &BoundaryDecomposition) -> Value {
    let components: Vec<Value> = d
        .components
        .iter()
        .map(|c| json!({ "point": point_to_json(&c.point), "markers": c.markers }))
        .collect();
    let gluings: Vec<Value> = d
        .gluings
        .iter()
        .map(|g| json!({ "marker": g.marker, "split": split(&g.split), "components": g.components }))
        .collect();
    json!({ "components": components, "gluings": gluings })
}

pub fn link_to_json(g: &LinkGraph) -> Value {
    let vertices: Vec<Value> = g.vertices.iter().map(type_splits).collect();
    json!({ "vertices": vertices, "edges": g.edges })
}
