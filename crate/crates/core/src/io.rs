//   Copyright 2026 afel developers
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.


//! JSON formats for polytopes, body measures, area measures and reports.
//!
//! Rationals are strings `"p/q"` or `"p"`. Integer direction vectors are JSON
//! integers (strings are accepted for entries beyond 64 bits). Parse errors
//! carry either the line and column of a syntax error or the JSON path of the
//! offending value.

use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::area_measure::{Arc, ArcSupport, AtomicMeasure};
use crate::error::{Error, Result};
use crate::geometry::{Direction, Point, VPolytope};
use crate::interval::Interval;
use crate::polyoid::BodyMeasure;
use crate::scalar::{parse_scalar, Scalar};

fn at(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("at {path}: {msg}"))
}

/// Parses JSON text; syntax errors carry line and column.
pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Reads a file, prefixing parse errors with its name.
pub fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_json(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn scalar_json(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

pub fn scalar_from_json(v: &Value, path: &str) -> Result<Scalar> {
    match v {
        Value::String(s) => parse_scalar(s).map_err(|e| at(path, e)),
        Value::Number(n) if n.is_i64() => Ok(Scalar::from_integer(BigInt::from(n.as_i64().expect("checked")))),
        _ => Err(at(path, "expected a rational string such as \"3/4\"")),
    }
}

fn bigint_json(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(i) => json!(i),
        Err(_) => Value::String(v.to_string()),
    }
}

fn bigint_from_json(v: &Value, path: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) if n.is_i64() => Ok(BigInt::from(n.as_i64().expect("checked"))),
        Value::String(s) => s.parse().map_err(|_| at(path, format!("{s:?} is not an integer"))),
        _ => Err(at(path, "expected an integer")),
    }
}

pub fn point_json(p: &Point) -> Value {
    Value::Array(p.coords().iter().map(scalar_json).collect())
}

pub fn point_from_json(v: &Value, path: &str) -> Result<Point> {
    let items = v.as_array().ok_or_else(|| at(path, "expected an array of rationals"))?;
    let coords = items
        .iter()
        .enumerate()
        .map(|(i, c)| scalar_from_json(c, &format!("{path}[{i}]")))
        .collect::<Result<_>>()?;
    Ok(Point::new(coords))
}

pub fn direction_json(d: &Direction) -> Value {
    Value::Array(d.components().iter().map(bigint_json).collect())
}

pub fn direction_from_json(v: &Value, path: &str) -> Result<Direction> {
    let items = v.as_array().ok_or_else(|| at(path, "expected an array of integers"))?;
    let z = items
        .iter()
        .enumerate()
        .map(|(i, c)| bigint_from_json(c, &format!("{path}[{i}]")))
        .collect::<Result<_>>()?;
    Direction::new(z).map_err(|e| at(path, e))
}

pub fn interval_json(x: &Interval) -> Value {
    json!({ "lo": x.lo, "hi": x.hi, "mid": x.mid(), "radius": x.radius() })
}

pub fn polytope_json(p: &VPolytope) -> Value {
    json!({
        "dim": p.ambient_dim(),
        "vertices": p.vertices().iter().map(point_json).collect::<Vec<_>>(),
    })
}

fn field<'a>(v: &'a Value, key: &str, path: &str) -> Result<&'a Value> {
    v.as_object()
        .ok_or_else(|| at(path, "expected an object"))?
        .get(key)
        .ok_or_else(|| at(path, format!("missing field {key:?}")))
}

pub fn polytope_from_json(v: &Value, path: &str) -> Result<VPolytope> {
    let dim = field(v, "dim", path)?
        .as_u64()
        .ok_or_else(|| at(&format!("{path}.dim"), "expected a positive integer"))? as usize;
    let verts = field(v, "vertices", path)?
        .as_array()
        .ok_or_else(|| at(&format!("{path}.vertices"), "expected an array of points"))?;
    if verts.is_empty() {
        return Err(at(&format!("{path}.vertices"), "a polytope needs at least one vertex"));
    }
    let mut pts = Vec::with_capacity(verts.len());
    for (i, raw) in verts.iter().enumerate() {
        let p = format!("{path}.vertices[{i}]");
        let x = point_from_json(raw, &p)?;
        if x.dim() != dim {
            return Err(at(&p, format!("point has {} coordinates, expected {dim}", x.dim())));
        }
        pts.push(x);
    }
    VPolytope::new(pts).map_err(|e| at(path, e))
}

/// A single polytope document, or `{"bodies": [...]}` holding several.
pub fn bodies_from_json(v: &Value) -> Result<Vec<VPolytope>> {
    match v.get("bodies") {
        Some(Value::Array(items)) => items
            .iter()
            .enumerate()
            .map(|(i, b)| polytope_from_json(b, &format!("$.bodies[{i}]")))
            .collect(),
        Some(_) => Err(at("$.bodies", "expected an array of polytopes")),
        None => Ok(vec![polytope_from_json(v, "$")?]),
    }
}

pub fn bodies_json(bodies: &[VPolytope]) -> Value {
    json!({ "bodies": bodies.iter().map(polytope_json).collect::<Vec<_>>() })
}

pub fn measure_json(mu: &BodyMeasure) -> Value {
    let atoms: Vec<Value> = mu
        .atoms()
        .iter()
        .map(|(w, p)| json!({ "weight": scalar_json(w), "polytope": polytope_json(p) }))
        .collect();
    json!({ "atoms": atoms })
}

pub fn measure_from_json(v: &Value) -> Result<BodyMeasure> {
    let atoms = field(v, "atoms", "$")?
        .as_array()
        .ok_or_else(|| at("$.atoms", "expected an array"))?;
    let mut out = Vec::with_capacity(atoms.len());
    for (i, a) in atoms.iter().enumerate() {
        let p = format!("$.atoms[{i}]");
        let w = scalar_from_json(field(a, "weight", &p)?, &format!("{p}.weight"))?;
        let body = polytope_from_json(field(a, "polytope", &p)?, &format!("{p}.polytope"))?;
        out.push((w, body));
    }
    BodyMeasure::new(out).map_err(|e| at("$.atoms", e))
}

pub fn area_measure_json(m: &AtomicMeasure) -> Value {
    let atoms: Vec<Value> = m
        .atoms()
        .iter()
        .map(|(z, w)| json!({ "z": direction_json(z), "w": scalar_json(w) }))
        .collect();
    json!({ "dim": m.ambient_dim(), "atoms": atoms })
}

pub fn area_measure_from_json(v: &Value) -> Result<AtomicMeasure> {
    let dim = field(v, "dim", "$")?.as_u64().ok_or_else(|| at("$.dim", "expected an integer"))? as usize;
    let atoms = field(v, "atoms", "$")?.as_array().ok_or_else(|| at("$.atoms", "expected an array"))?;
    let mut out = Vec::with_capacity(atoms.len());
    for (i, a) in atoms.iter().enumerate() {
        let p = format!("$.atoms[{i}]");
        out.push((
            direction_from_json(field(a, "z", &p)?, &format!("{p}.z"))?,
            scalar_from_json(field(a, "w", &p)?, &format!("{p}.w"))?,
        ));
    }
    AtomicMeasure::from_atoms(dim, out).map_err(|e| at("$.atoms", e))
}

pub fn arcs_json(s: &ArcSupport) -> Value {
    let arcs: Vec<Value> =
        s.arcs.iter().map(|a| json!({ "z1": direction_json(&a.z1), "z2": direction_json(&a.z2) })).collect();
    json!({ "arcs": arcs })
}

pub fn arcs_from_json(v: &Value) -> Result<ArcSupport> {
    let arcs = field(v, "arcs", "$")?.as_array().ok_or_else(|| at("$.arcs", "expected an array"))?;
    let arcs = arcs
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let p = format!("$.arcs[{i}]");
            let z1 = direction_from_json(field(a, "z1", &p)?, &format!("{p}.z1"))?;
            let z2 = direction_from_json(field(a, "z2", &p)?, &format!("{p}.z2"))?;
            Arc::new(z1, z2).map_err(|e| at(&p, e))
        })
        .collect::<Result<_>>()?;
    Ok(ArcSupport { arcs })
}

/// Canonical text form: pretty-printed with sorted keys and a trailing newline.
pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}
