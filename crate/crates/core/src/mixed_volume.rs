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

//! Exact mixed volumes.
//!
//! Three independent routes are provided and serve as mutual oracles:
//! inclusion-exclusion over Minkowski sub-sums (the reference), coefficient
//! extraction from the volume polynomial, and integration of a support function
//! against a mixed area measure.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::area_measure::mixed_area_measure;
use crate::error::{Error, Result};
use crate::geometry::{Point, SupportDiff, VPolytope};
use crate::linalg::{int_det, solve_square};
use crate::scalar::{common_denominator, from_bigint, int, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    InclusionExclusion,
    Interpolation,
    FacetIntegral,
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ie" | "inclusion_exclusion" => Ok(Method::InclusionExclusion),
            "interp" | "interpolation" => Ok(Method::Interpolation),
            "measure" | "facet_integral" => Ok(Method::FacetIntegral),
            _ => Err(Error::InvalidArgument(format!("unknown method '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedVolumeResult {
    pub value: Scalar,
    pub method: Method,
}

/// Lebesgue measure in the ambient space; zero for lower-dimensional bodies.
///
/// Uses the pyramid decomposition from the first vertex: each facet `F` with
/// primitive normal `z` contributes `(h_F - <v0,z>) vol(pi_i F) / |z_i|`,
/// where `pi_i` drops the coordinate of largest `|z_i|`.
pub fn volume(p: &VPolytope) -> Scalar {
    if !p.is_full_dim() {
        return Scalar::zero();
    }
    let n = p.ambient_dim();
    let vs = p.vertices();
    if n == 1 {
        return &vs[1][0] - &vs[0][0];
    }
    let v0 = &vs[0];
    let mut total = Scalar::zero();
    for f in p.facets() {
        if f.vertices.first() == Some(&0) {
            continue;
        }
        let height = &f.offset - v0.dot_dir(&f.normal);
        let i = f.normal.dominant_axis();
        let shadow = VPolytope::new(f.vertices.iter().map(|&k| vs[k].drop_coord(i)).collect())
            .expect("facet vertices form a point set");
        let zi = from_bigint(f.normal.components()[i].abs());
        total += height * volume(&shadow) / zi;
    }
    total / int(n as i64)
}

fn check_tuple(bodies: &[&VPolytope]) -> Result<usize> {
    let n = bodies.first().ok_or(Error::Empty("body list"))?.ambient_dim();
    if bodies.len() != n {
        return Err(Error::WrongCount { expected: n, found: bodies.len() });
    }
    if let Some(b) = bodies.iter().find(|b| b.ambient_dim() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: b.ambient_dim() });
    }
    Ok(n)
}

fn factorial(n: usize) -> BigInt {
    (1..=n as u64).map(BigInt::from).product()
}

fn binomial(n: usize, k: usize) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Distinct bodies with multiplicities.
fn group(bodies: &[&VPolytope]) -> Vec<(VPolytope, usize)> {
    let mut out: Vec<(VPolytope, usize)> = Vec::new();
    for b in bodies {
        match out.iter_mut().find(|(g, _)| g == *b) {
            Some((_, m)) => *m += 1,
            None => out.push(((*b).clone(), 1)),
        }
    }
    out
}

/// `(1/n!) sum_I (-1)^{n-|I|} Vol(sum_{i in I} K_i)`.
///
/// Equal arguments are grouped, so a sub-sum is indexed by how many copies of
/// each distinct body it uses.
pub fn mixed_volume(bodies: &[&VPolytope]) -> Result<Scalar> {
    let n = check_tuple(bodies)?;
    let groups = group(bodies);
    let mut counts: Vec<Vec<usize>> = vec![vec![]];
    for (_, m) in &groups {
        counts = counts
            .into_iter()
            .flat_map(|c| {
                (0..=*m).map(move |k| {
                    let mut c = c.clone();
                    c.push(k);
                    c
                })
            })
            .collect();
    }
    let terms: Vec<Result<Scalar>> = counts
        .par_iter()
        .filter(|c| c.iter().any(|&k| k > 0))
        .map(|c| {
            let mut mult = BigInt::one();
            let mut parts = Vec::new();
            for ((body, m), &k) in groups.iter().zip(c) {
                mult *= binomial(*m, k);
                if k > 0 {
                    parts.push(body.scale(&int(k as i64))?);
                }
            }
            let vol = volume(&VPolytope::sum_all(n, parts.iter())?);
            let size: usize = c.iter().sum();
            let signed = if (n - size).is_multiple_of(2) { mult } else { -mult };
            Ok(vol * from_bigint(signed))
        })
        .collect();
    let mut total = Scalar::zero();
    for t in terms {
        total += t?;
    }
    Ok(total / from_bigint(factorial(n)))
}

/// Exponent vectors of the degree-`n` monomials in `n` variables.
fn monomials(n: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, vars: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if vars == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in (0..=left).rev() {
            cur.push(k);
            rec(left - k, vars - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Interpolation nodes `(b_1 + 1, ..., b_{n-1} + 1, 1)` with `b >= 0`, `|b| <= n`.
///
/// Setting the last coefficient to 1 dehomogenizes the volume polynomial to a
/// polynomial of degree `n` in `n - 1` variables, for which the (shifted)
/// principal lattice of order `n` is unisolvent. All entries lie in `{1..n+1}`.
fn nodes(n: usize) -> Vec<Vec<usize>> {
    monomials(n)
        .into_iter()
        .map(|m| {
            let mut a: Vec<usize> = m[..n - 1].iter().map(|&b| b + 1).collect();
            a.push(1);
            a
        })
        .collect()
}

/// Simplices of a pulling triangulation of a full-dimensional `p`, as vertex
/// indices. It depends only on the face lattice, so it triangulates every
/// polytope combinatorially equivalent to `p` under the same labels.
fn pulling_triangulation(p: &VPolytope) -> Vec<Vec<usize>> {
    if p.ambient_dim() == 1 {
        return vec![vec![0, 1]];
    }
    let vs = p.vertices();
    let mut out = Vec::new();
    for f in p.facets() {
        if f.vertices.first() == Some(&0) {
            continue;
        }
        let i = f.normal.dominant_axis();
        let shadow = VPolytope::new(f.vertices.iter().map(|&k| vs[k].drop_coord(i)).collect())
            .expect("facet vertices form a point set");
        let lift: Vec<usize> = shadow
            .vertices()
            .iter()
            .map(|s| *f.vertices.iter().find(|&&k| vs[k].drop_coord(i) == *s).expect("shadow vertex lifts"))
            .collect();
        for t in pulling_triangulation(&shadow) {
            let mut simplex = Vec::with_capacity(t.len() + 1);
            simplex.push(0);
            simplex.extend(t.iter().map(|&j| lift[j]));
            out.push(simplex);
        }
    }
    out
}

/// `sum_i bodies[i]` together with, for each of its vertices, the vertex of
/// every summand it decomposes into (the decomposition of a vertex is unique).
fn sum_with_provenance(n: usize, bodies: &[&VPolytope]) -> Result<(VPolytope, Vec<Vec<usize>>)> {
    let mut acc = VPolytope::origin(n);
    let mut labels: Vec<Vec<usize>> = vec![vec![]];
    for b in bodies {
        let mut candidates: BTreeMap<Point, Vec<usize>> = BTreeMap::new();
        for (p, l) in acc.vertices().iter().zip(&labels) {
            for (j, q) in b.vertices().iter().enumerate() {
                let mut lj = l.clone();
                lj.push(j);
                candidates.insert(p + q, lj);
            }
        }
        acc = VPolytope::new(candidates.keys().cloned().collect())?;
        labels = acc.vertices().iter().map(|v| candidates[v].clone()).collect();
    }
    Ok((acc, labels))
}

/// Mixed volume as `1/n!` times the coefficient of `a_1 ... a_n` in
/// `Vol(a_1 K_1 + ... + a_n K_n)`, recovered by exact interpolation.
///
/// All sums with positive weights share one face lattice, so the sum is built
/// once and each node's volume comes from determinants of moved vertices.
pub fn mixed_volume_interpolated(bodies: &[&VPolytope]) -> Result<Scalar> {
    let n = check_tuple(bodies)?;
    let mons = monomials(n);
    let pts = nodes(n);
    let (sum, labels) = sum_with_provenance(n, bodies)?;
    let rhs: Vec<Scalar> = if sum.is_full_dim() {
        let simplices = pulling_triangulation(&sum);
        let den = common_denominator(bodies.iter().flat_map(|b| b.vertices().iter().flat_map(|v| v.coords())));
        let den_s = from_bigint(den.clone());
        let ints: Vec<Vec<Vec<BigInt>>> = bodies
            .iter()
            .map(|b| b.vertices().iter().map(|v| v.coords().iter().map(|x| (x * &den_s).to_integer()).collect()).collect())
            .collect();
        let scale = from_bigint(factorial(n) * den.pow(n as u32));
        pts.par_iter()
            .map(|a| {
                let verts: Vec<Vec<BigInt>> = labels
                    .iter()
                    .map(|l| {
                        (0..n)
                            .map(|c| (0..n).map(|i| &ints[i][l[i]][c] * BigInt::from(a[i])).sum())
                            .collect()
                    })
                    .collect();
                let total: BigInt = simplices
                    .iter()
                    .map(|s| {
                        let rows: Vec<Vec<BigInt>> = s[1..]
                            .iter()
                            .map(|&k| verts[k].iter().zip(&verts[s[0]]).map(|(x, y)| x - y).collect())
                            .collect();
                        int_det(&rows).abs()
                    })
                    .sum();
                from_bigint(total) / &scale
            })
            .collect()
    } else {
        vec![Scalar::zero(); pts.len()]
    };
    let matrix: Vec<Vec<Scalar>> = pts
        .iter()
        .map(|a| {
            mons.iter()
                .map(|m| {
                    let v: u64 = a.iter().zip(m).map(|(&ai, &e)| (ai as u64).pow(e as u32)).product();
                    from_bigint(BigInt::from(v))
                })
                .collect()
        })
        .collect();
    let coeffs = solve_square(&matrix, &rhs).expect("interpolation nodes are unisolvent");
    let target = mons.iter().position(|m| m.iter().all(|&e| e == 1)).expect("square-free monomial");
    Ok(&coeffs[target] / from_bigint(factorial(n)))
}

/// `(1/n) sum_z h_{K_n}(z) w(z)` over the atoms of `S(K_1, ..., K_{n-1}, .)`.
pub fn mixed_volume_via_measure(bodies: &[&VPolytope]) -> Result<Scalar> {
    let n = check_tuple(bodies)?;
    if n == 1 {
        return Ok(volume(bodies[0]));
    }
    let s = mixed_area_measure(&bodies[..n - 1])?;
    Ok(s.integrate(bodies[n - 1]) / int(n as i64))
}

pub fn mixed_volume_with(bodies: &[&VPolytope], method: Method) -> Result<MixedVolumeResult> {
    let value = match method {
        Method::InclusionExclusion => mixed_volume(bodies)?,
        Method::Interpolation => mixed_volume_interpolated(bodies)?,
        Method::FacetIntegral => mixed_volume_via_measure(bodies)?,
    };
    Ok(MixedVolumeResult { value, method })
}

/// Multilinear extension to differences of support functions.
pub fn mixed_volume_diff(args: &[&SupportDiff]) -> Result<Scalar> {
    let n = args.first().ok_or(Error::Empty("argument list"))?.ambient_dim();
    if args.len() != n {
        return Err(Error::WrongCount { expected: n, found: args.len() });
    }
    let expanded: Vec<Vec<(i8, &VPolytope)>> = args.iter().map(|a| a.terms()).collect();
    let mut total = Scalar::zero();
    let mut stack: Vec<(i8, Vec<&VPolytope>)> = vec![(1, vec![])];
    for slot in &expanded {
        stack = stack
            .into_iter()
            .flat_map(|(s, chosen)| {
                slot.iter().map(move |(t, b)| {
                    let mut c = chosen.clone();
                    c.push(*b);
                    (s * t, c)
                })
            })
            .collect();
    }
    for (sign, tuple) in stack {
        let v = mixed_volume(&tuple)?;
        if sign > 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    Ok(total)
}
