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

//! Distances, widths and the Steiner point.

use num_traits::Zero;

use super::point::Point;
use super::polytope::VPolytope;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::linalg::{rref, solve_square};
use crate::scalar::Scalar;

/// Squared distance from `x` to the affine hull of `pts`, with the foot point.
fn project_to_affine_hull(x: &Point, pts: &[&Point]) -> (Scalar, Point) {
    let base = pts[0];
    let diffs: Vec<Vec<Scalar>> = pts[1..].iter().map(|p| (*p - base).0).collect();
    let basis = rref(diffs).0;
    let rhs = x - base;
    if basis.is_empty() {
        return (rhs.norm_sq(), base.clone());
    }
    let b: Vec<Point> = basis.into_iter().map(Point).collect();
    let gram: Vec<Vec<Scalar>> = b.iter().map(|r| b.iter().map(|c| r.dot(c)).collect()).collect();
    let proj: Vec<Scalar> = b.iter().map(|r| r.dot(&rhs)).collect();
    let c = solve_square(&gram, &proj).expect("rref rows are independent");
    let mut foot = base.clone();
    for (ci, bi) in c.iter().zip(&b) {
        foot = &foot + &bi.scale(ci);
    }
    ((x - &foot).norm_sq(), foot)
}

/// Exact squared distance from a point to a polytope, given its face list.
fn point_distance_sq(x: &Point, p: &VPolytope, faces: &[Vec<usize>]) -> Scalar {
    if p.contains(x) {
        return Scalar::zero();
    }
    // The nearest point lies in the relative interior of some face, where it is
    // the orthogonal projection onto that face's affine hull.
    let mut best: Option<Scalar> = None;
    for f in faces {
        let pts: Vec<&Point> = f.iter().map(|&i| &p.vertices()[i]).collect();
        let (d, foot) = project_to_affine_hull(x, &pts);
        if best.as_ref().is_some_and(|b| &d >= b) {
            continue;
        }
        if pts.len() == 1 || p.sub_polytope(f).contains(&foot) {
            best = Some(d);
        }
    }
    best.expect("vertices are faces")
}

fn directed_sq(p: &VPolytope, q: &VPolytope) -> Scalar {
    let faces = q.face_index_sets();
    p.vertices()
        .iter()
        .map(|v| point_distance_sq(v, q, &faces))
        .max()
        .expect("polytopes are nonempty")
}

/// Squared Hausdorff distance. Exact: the maximum of the convex function
/// `dist(., Q)` over `P` is attained at a vertex, and the distance from a point
/// to a rational polytope is the distance to the affine hull of one of its faces.
pub fn hausdorff_distance_sq(p: &VPolytope, q: &VPolytope) -> Result<Scalar> {
    if p.ambient_dim() != q.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: p.ambient_dim(), found: q.ambient_dim() });
    }
    if p == q {
        return Ok(Scalar::zero());
    }
    Ok(directed_sq(p, q).max(directed_sq(q, p)))
}

pub fn diameter_sq(p: &VPolytope) -> Scalar {
    let vs = p.vertices();
    let mut best = Scalar::zero();
    for (i, a) in vs.iter().enumerate() {
        for b in &vs[i + 1..] {
            best = best.max((a - b).norm_sq());
        }
    }
    best
}

/// Enclosure of the angle between two nonzero rational vectors.
pub fn angle_between(a: &Point, b: &Point) -> Interval {
    let dot = a.dot(b);
    // Lagrange identity: |a|^2 |b|^2 - <a,b>^2 = |a ^ b|^2.
    let wedge_sq = a.norm_sq() * b.norm_sq() - &dot * &dot;
    Interval::atan2_box(Interval::from_scalar(&wedge_sq).sqrt(), Interval::from_scalar(&dot))
}

fn check_3d(p: &VPolytope) -> Result<()> {
    if p.ambient_dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: p.ambient_dim() });
    }
    Ok(())
}

/// Mean width in R^3: `(1/(4 pi)) sum_e len(e) theta(e)` with `theta(e)` the
/// exterior angle at the edge (`2 pi` for a segment, `pi` for a polygon edge).
pub fn mean_width_3d(p: &VPolytope) -> Result<Interval> {
    check_3d(p)?;
    let vs = p.vertices();
    let pi = Interval::pi();
    let len = |i: usize, j: usize| Interval::from_scalar(&(&vs[i] - &vs[j]).norm_sq()).sqrt();
    let total = match p.dim() {
        0 => return Ok(Interval::point(0.0)),
        1 => len(0, 1) * Interval::point(2.0) * pi,
        2 => Interval::sum(p.edges().into_iter().map(|(i, j)| len(i, j))) * pi,
        _ => {
            let facets = p.facets();
            Interval::sum(p.edges().into_iter().map(|(i, j)| {
                let at: Vec<_> = facets
                    .iter()
                    .filter(|f| f.vertices.binary_search(&i).is_ok() && f.vertices.binary_search(&j).is_ok())
                    .collect();
                debug_assert_eq!(at.len(), 2);
                len(i, j) * angle_between(&at[0].normal.to_point(), &at[1].normal.to_point())
            }))
        }
    };
    Ok(total / (Interval::point(4.0) * pi))
}

/// External angles `gamma(v)` at the vertices of a polytope in R^3 (they sum to 1).
pub fn external_angles_3d(p: &VPolytope) -> Result<Vec<Interval>> {
    check_3d(p)?;
    let vs = p.vertices();
    let pi = Interval::pi();
    let two_pi = Interval::point(2.0) * pi;
    match p.dim() {
        0 => Ok(vec![Interval::point(1.0)]),
        1 => Ok(vec![Interval::point(0.5); 2]),
        2 => {
            let edges = p.edges();
            Ok((0..vs.len())
                .map(|v| {
                    let nb = neighbours(&edges, v, |_| true);
                    let inner = angle_between(&(&vs[nb[0]] - &vs[v]), &(&vs[nb[1]] - &vs[v]));
                    (pi - inner) / two_pi
                })
                .collect())
        }
        _ => {
            let edges = p.edges();
            let four_pi = Interval::point(4.0) * pi;
            Ok((0..vs.len())
                .map(|v| {
                    // Gauss-Bonnet: the polar cone has area 2 pi minus the face angles.
                    let face_angles = Interval::sum(p.facets_at(v).into_iter().map(|k| {
                        let f = &p.facets()[k];
                        let nb = neighbours(&edges, v, |w| f.vertices.binary_search(&w).is_ok());
                        debug_assert_eq!(nb.len(), 2);
                        angle_between(&(&vs[nb[0]] - &vs[v]), &(&vs[nb[1]] - &vs[v]))
                    }));
                    (two_pi - face_angles) / four_pi
                })
                .collect())
        }
    }
}

fn neighbours(edges: &[(usize, usize)], v: usize, keep: impl Fn(usize) -> bool) -> Vec<usize> {
    edges
        .iter()
        .filter_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
        .filter(|&w| keep(w))
        .collect()
}

/// Steiner point `sum_v gamma(v) v`, one enclosure per coordinate.
pub fn steiner_point_3d(p: &VPolytope) -> Result<Vec<Interval>> {
    let gamma = external_angles_3d(p)?;
    let mut s = vec![Interval::point(0.0); 3];
    for (g, v) in gamma.iter().zip(p.vertices()) {
        for (si, c) in s.iter_mut().zip(v.coords()) {
            *si = *si + *g * Interval::from_scalar(c);
        }
    }
    Ok(s)
}
