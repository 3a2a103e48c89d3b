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

//! Minkowski differences and summand tests.

use num_traits::Zero;

use super::point::{Direction, Point};
use super::polytope::VPolytope;
use crate::error::{Error, Result};
use crate::linalg::{int_det, rank, solve_square};
use crate::scalar::{from_bigint, Scalar};

fn same_dim(p: &VPolytope, q: &VPolytope) -> Result<()> {
    if p.ambient_dim() != q.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: p.ambient_dim(), found: q.ambient_dim() });
    }
    Ok(())
}

/// `aff(Q) - aff(Q)` is contained in `aff(P) - aff(P)`.
fn directions_contained(q: &VPolytope, p: &VPolytope) -> bool {
    if q.dim() > p.dim() {
        return false;
    }
    let mut rows: Vec<Vec<Scalar>> = p.direction_space().into_iter().map(|v| v.0).collect();
    rows.extend(q.direction_space().into_iter().map(|v| v.0));
    rank(&rows) == p.dim()
}

/// The body `M` with `M + Q = P`, if it exists.
///
/// If `P = M + Q` then the normal fan of `P` refines that of `Q`, so every
/// vertex `v` of `P` splits uniquely as `v = m + w(v)` with `w(v)` the face of
/// `Q` in a direction interior to the normal cone at `v`. The candidate
/// `hull{v - w(v)}` is then confirmed by an exact sum.
pub fn minkowski_difference(p: &VPolytope, q: &VPolytope) -> Result<Option<VPolytope>> {
    same_dim(p, q)?;
    if !directions_contained(q, p) {
        return Ok(None);
    }
    if p.is_singleton() {
        return Ok(Some(VPolytope::singleton(&p.vertices()[0] - &q.vertices()[0])));
    }
    let mut pts = Vec::with_capacity(p.num_vertices());
    for (vi, v) in p.vertices().iter().enumerate() {
        let mut u = Point::zero(p.ambient_dim());
        for k in p.facets_at(vi) {
            u = &u + &p.lifted_normal(&p.relative_facets()[k]).to_point();
        }
        let w = q.maximizers_point(&u);
        if w.len() != 1 {
            return Ok(None);
        }
        pts.push(v - &q.vertices()[w[0]]);
    }
    let m = VPolytope::new(pts)?;
    Ok((m.minkowski_sum(q)? == *p).then_some(m))
}

/// `Q` is a Minkowski summand of `P`.
pub fn is_summand(q: &VPolytope, p: &VPolytope) -> Result<bool> {
    Ok(minkowski_difference(p, q)?.is_some())
}

/// Reference implementation of the Minkowski difference by erosion:
/// `M = {x : <x,z> <= h_P(z) - h_Q(z)}` over the supporting normals of `P` and
/// `P + Q`, found by brute-force vertex enumeration, then checked by `M + Q = P`.
pub fn erosion(p: &VPolytope, q: &VPolytope) -> Result<Option<VPolytope>> {
    same_dim(p, q)?;
    let n = p.ambient_dim();
    let mut normals: Vec<Direction> = p.supporting_normals();
    normals.extend(p.minkowski_sum(q)?.supporting_normals());
    normals.sort();
    normals.dedup();
    let bounds: Vec<Scalar> = normals.iter().map(|z| p.support_value(z) - q.support_value(z)).collect();

    let mut verts = Vec::new();
    let mut choice = Vec::with_capacity(n);
    enumerate(&normals, &bounds, n, 0, &mut choice, &mut verts);
    if verts.is_empty() {
        return Ok(None);
    }
    let m = VPolytope::new(verts)?;
    Ok((m.minkowski_sum(q)? == *p).then_some(m))
}

fn enumerate(
    normals: &[Direction],
    bounds: &[Scalar],
    n: usize,
    start: usize,
    choice: &mut Vec<usize>,
    out: &mut Vec<Point>,
) {
    if choice.len() == n {
        let rows: Vec<_> = choice.iter().map(|&k| normals[k].components().to_vec()).collect();
        if int_det(&rows).is_zero() {
            return;
        }
        let a: Vec<Vec<Scalar>> =
            rows.into_iter().map(|r| r.into_iter().map(from_bigint).collect()).collect();
        let b: Vec<Scalar> = choice.iter().map(|&k| bounds[k].clone()).collect();
        let x = Point(solve_square(&a, &b).expect("nonsingular system"));
        if normals.iter().zip(bounds).all(|(z, h)| &x.dot_dir(z) <= h) {
            out.push(x);
        }
        return;
    }
    for k in start..normals.len() {
        choice.push(k);
        enumerate(normals, bounds, n, k + 1, choice, out);
        choice.pop();
    }
}
