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

//! Discrete generating measures of polyoids and macroids.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{diameter_sq, mean_width_3d, steiner_point_3d, Direction, Point, VPolytope};
use crate::interval::Interval;
use crate::linalg::rank;
use crate::scalar::{rat, Scalar};

/// A probability measure with finitely many atoms on polytopes of a common dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BodyMeasure {
    atoms: Vec<(Scalar, VPolytope)>,
}

impl BodyMeasure {
    pub fn new(atoms: Vec<(Scalar, VPolytope)>) -> Result<Self> {
        let n = atoms.first().ok_or(Error::Empty("measure atoms"))?.1.ambient_dim();
        if let Some((_, p)) = atoms.iter().find(|(_, p)| p.ambient_dim() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: p.ambient_dim() });
        }
        if let Some((q, _)) = atoms.iter().find(|(q, _)| !q.is_positive()) {
            return Err(Error::InvalidArgument(format!("atom weight {q} is not positive")));
        }
        let total: Scalar = atoms.iter().map(|(q, _)| q).sum();
        if !total.is_one() {
            return Err(Error::InvalidArgument(format!("weights sum to {total}, not 1")));
        }
        Ok(BodyMeasure { atoms })
    }

    pub fn dirac(p: VPolytope) -> Self {
        BodyMeasure { atoms: vec![(Scalar::one(), p)] }
    }

    /// Uniform weights over the given bodies.
    pub fn uniform(bodies: Vec<VPolytope>) -> Result<Self> {
        let q = rat(1, bodies.len().max(1) as i64);
        BodyMeasure::new(bodies.into_iter().map(|p| (q.clone(), p)).collect())
    }

    pub fn atoms(&self) -> &[(Scalar, VPolytope)] {
        &self.atoms
    }

    pub fn ambient_dim(&self) -> usize {
        self.atoms[0].1.ambient_dim()
    }

    /// `sum_i q_i h_{P_i}(z)`.
    pub fn support_value(&self, z: &Direction) -> Scalar {
        self.atoms.iter().map(|(q, p)| q * p.support_value(z)).sum()
    }
}

/// The macroid `K` with `h_K = sum_i q_i h_{P_i}`, i.e. `sum_i q_i P_i`.
pub fn body_of_measure(mu: &BodyMeasure) -> Result<VPolytope> {
    let scaled = mu.atoms.iter().map(|(q, p)| p.scale(q)).collect::<Result<Vec<_>>>()?;
    VPolytope::sum_all(mu.ambient_dim(), scaled.iter())
}

/// Whether `mu` generates `K`: support values agree on the samples and the bodies coincide.
pub fn verify_generating(mu: &BodyMeasure, k: &VPolytope, samples: &[Direction]) -> Result<bool> {
    if k.ambient_dim() != mu.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: mu.ambient_dim(), found: k.ambient_dim() });
    }
    if samples.iter().any(|z| k.support_value(z) != mu.support_value(z)) {
        return Ok(false);
    }
    Ok(body_of_measure(mu)? == *k)
}

pub fn is_k_tope(p: &VPolytope, k: usize) -> bool {
    p.num_vertices() <= k
}

/// `sum_i lambda_i P_i`, with the empty sum `{0}`.
pub fn mpos_sample(mu: &BodyMeasure, coefficients: &[Scalar]) -> Result<VPolytope> {
    if coefficients.len() != mu.atoms.len() {
        return Err(Error::WrongCount { expected: mu.atoms.len(), found: coefficients.len() });
    }
    if let Some(c) = coefficients.iter().find(|c| c.is_negative()) {
        return Err(Error::NegativeScale(c.to_string()));
    }
    let parts = mu
        .atoms
        .iter()
        .zip(coefficients)
        .filter(|(_, c)| !c.is_zero())
        .map(|((_, p), c)| p.scale(c))
        .collect::<Result<Vec<_>>>()?;
    VPolytope::sum_all(mu.ambient_dim(), parts.iter())
}

/// `pspan Q ⊆ pspan K` for `Q = mpos_sample(mu, coefficients)` and `K = body_of_measure(mu)`.
pub fn pspan_containment(mu: &BodyMeasure, coefficients: &[Scalar]) -> Result<bool> {
    let q = mpos_sample(mu, coefficients)?;
    let k = body_of_measure(mu)?;
    let mut rows: Vec<Vec<Scalar>> = k.direction_space().into_iter().map(|p| p.0).collect();
    let base = rank(&rows);
    rows.extend(q.direction_space().into_iter().map(|p| p.0));
    Ok(rank(&rows) == base)
}

#[derive(Debug, Clone, Serialize)]
pub struct DiamSumReport {
    /// Enclosure of `sum_i diam A_i`.
    pub lhs: Interval,
    /// Enclosure of `sqrt(pi) n diam(sum_i A_i)`.
    pub rhs: Interval,
    /// The inequality is certified (`lhs.hi <= rhs.lo`), or every body is a point.
    pub holds: bool,
}

/// `sum diam A_i <= sqrt(pi) n diam sum A_i`, certified with interval arithmetic.
pub fn diam_sum_check(bodies: &[&VPolytope]) -> Result<DiamSumReport> {
    let n = bodies.first().ok_or(Error::Empty("body list"))?.ambient_dim();
    let lhs = Interval::sum(bodies.iter().map(|b| Interval::from_scalar(&diameter_sq(b)).sqrt()));
    let sum = VPolytope::sum_all(n, bodies.iter().copied())?;
    let d = Interval::from_scalar(&diameter_sq(&sum)).sqrt();
    let rhs = Interval::pi().sqrt() * Interval::point(n as f64) * d;
    let all_points = bodies.iter().all(|b| b.is_singleton());
    let holds = all_points || lhs.certainly_le(&rhs);
    Ok(DiamSumReport { lhs, rhs, holds })
}

/// The image measure of `mu` under `P -> F(P, z)`.
pub fn support_pushforward(mu: &BodyMeasure, z: &Direction) -> BodyMeasure {
    BodyMeasure { atoms: mu.atoms.iter().map(|(q, p)| (q.clone(), p.support_set(z))).collect() }
}

/// A polytope with interval vertex coordinates, produced by normalizations
/// that involve irrational quantities. Not for exact pipelines.
#[derive(Debug, Clone, Serialize)]
pub struct ApproxBody {
    pub vertices: Vec<Vec<Interval>>,
}

impl ApproxBody {
    /// Rational polytope through the midpoints of the vertex enclosures.
    pub fn midpoint_polytope(&self) -> Result<VPolytope> {
        let pts = self
            .vertices
            .iter()
            .map(|v| {
                v.iter()
                    .map(|c| Scalar::from_float(c.mid()).ok_or_else(|| Error::InvalidArgument("non-finite vertex".into())))
                    .collect::<Result<Vec<_>>>()
                    .map(Point)
            })
            .collect::<Result<Vec<_>>>()?;
        VPolytope::new(pts)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ApproxMeasure {
    pub atoms: Vec<(Interval, ApproxBody)>,
    pub approximate: bool,
}

impl ApproxMeasure {
    pub fn total_weight(&self) -> Interval {
        Interval::sum(self.atoms.iter().map(|(w, _)| *w))
    }
}

/// Steiner-point and mean-width normalization in R^3: atoms
/// `(q_i w(P_i) / w(K), (P_i - s(P_i)) / w(P_i))`, which have bounded support.
pub fn steiner_normalize(mu: &BodyMeasure) -> Result<ApproxMeasure> {
    if mu.ambient_dim() != 3 {
        return Err(Error::UnsupportedDimension(mu.ambient_dim()));
    }
    let mut widths = Vec::with_capacity(mu.atoms.len());
    for (_, p) in &mu.atoms {
        if p.dim() == 0 {
            return Err(Error::Precondition("atom with zero mean width".into()));
        }
        widths.push(mean_width_3d(p)?);
    }
    let wk = Interval::sum(mu.atoms.iter().zip(&widths).map(|((q, _), w)| Interval::from_scalar(q) * *w));
    let mut atoms = Vec::with_capacity(mu.atoms.len());
    for ((q, p), w) in mu.atoms.iter().zip(&widths) {
        let s = steiner_point_3d(p)?;
        let vertices = p
            .vertices()
            .iter()
            .map(|v| v.coords().iter().zip(&s).map(|(c, sc)| (Interval::from_scalar(c) - *sc) / *w).collect())
            .collect();
        atoms.push((Interval::from_scalar(q) * *w / wk, ApproxBody { vertices }));
    }
    Ok(ApproxMeasure { atoms, approximate: true })
}

/// A planar zonotope with four different generating measures: the hexagon
/// `P = (I1 + I2 + I3) / 2` for `I1 = [0,e1]`, `I2 = [0,e2]`, `I3 = [0,e1+e2]`.
pub fn hexagon_generating_measures() -> (VPolytope, Vec<BodyMeasure>) {
    let pt = |x: i64, y: i64| Point::from_ints(&[x, y]);
    let seg = |x: i64, y: i64| VPolytope::segment(pt(0, 0), pt(x, y)).expect("valid segment");
    let (i1, i2, i3) = (seg(1, 0), seg(0, 1), seg(1, 1));
    let half = rat(1, 2);
    let sum = |a: &VPolytope, b: &VPolytope| a.minkowski_sum(b).expect("same dimension");
    let p = sum(&sum(&i1, &i2), &i3).scale(&half).expect("positive scale");
    let p1 = VPolytope::new(vec![pt(0, 0), pt(1, 0), pt(1, 1)]).expect("triangle");
    // Taken in the position that makes (P1 + P2) / 2 equal to P itself; the
    // translate conv{e1, e1+e2, 2e1+e2} generates P + e1/2.
    let p2 = VPolytope::new(vec![pt(0, 0), pt(0, 1), pt(1, 1)]).expect("triangle");
    let three_halves = |s: &VPolytope| s.scale(&rat(3, 2)).expect("positive scale");
    let pair = |a: VPolytope, b: VPolytope| BodyMeasure::new(vec![(half.clone(), a), (half.clone(), b)]).expect("valid");
    let measures = vec![
        pair(sum(&i2, &i3), i1.clone()),
        pair(sum(&i1, &i2), i3.clone()),
        pair(p1, p2),
        BodyMeasure::uniform(vec![three_halves(&i1), three_halves(&i2), three_halves(&i3)]).expect("valid"),
    ];
    (p, measures)
}

/// Primitive directions with entries in `-range..=range`, sorted.
pub fn small_directions(n: usize, range: i64) -> Vec<Direction> {
    let mut out = Vec::new();
    let width = (2 * range + 1) as usize;
    for idx in 0..width.pow(n as u32) {
        let mut rest = idx;
        let z: Vec<i64> = (0..n)
            .map(|_| {
                let c = (rest % width) as i64 - range;
                rest /= width;
                c
            })
            .collect();
        if let Ok(d) = Direction::from_ints(&z) {
            out.push(d);
        }
    }
    out.sort();
    out.dedup();
    out
}
