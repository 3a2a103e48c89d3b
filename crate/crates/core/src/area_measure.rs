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

//! Mixed area measures of polytopes and the arc support of `S(B^3, C, .)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{Direction, Point, SupportDiff, VPolytope};
use crate::mixed_volume::mixed_volume;
use crate::scalar::{from_bigint, Scalar};

/// Default weight threshold for support estimation from numeric measures.
pub const DEFAULT_TAU: f64 = 1e-9;

/// A finite signed measure on the sphere.
///
/// An atom `(z, w)` carries mass `w |z|` at `z / |z|`, so that integrating a
/// support function is the exact rational `sum_z h(z) w(z)` with `h(z)` the
/// unnormalized support value. Zero weights are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomicMeasure {
    ambient: usize,
    atoms: BTreeMap<Direction, Scalar>,
}

impl AtomicMeasure {
    pub fn zero(n: usize) -> Self {
        AtomicMeasure { ambient: n, atoms: BTreeMap::new() }
    }

    pub fn from_atoms(n: usize, atoms: impl IntoIterator<Item = (Direction, Scalar)>) -> Result<Self> {
        let mut m = AtomicMeasure::zero(n);
        for (z, w) in atoms {
            if z.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: z.dim() });
            }
            m.add_atom(z, w);
        }
        Ok(m)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn add_atom(&mut self, z: Direction, w: Scalar) {
        let entry = self.atoms.entry(z.clone()).or_insert_with(Scalar::zero);
        *entry += w;
        if entry.is_zero() {
            self.atoms.remove(&z);
        }
    }

    pub fn atoms(&self) -> &BTreeMap<Direction, Scalar> {
        &self.atoms
    }

    pub fn weight(&self, z: &Direction) -> Scalar {
        self.atoms.get(z).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// `sum_z h_K(z) w(z)`.
    pub fn integrate(&self, k: &VPolytope) -> Scalar {
        self.atoms.iter().map(|(z, w)| k.support_value(z) * w).sum()
    }

    pub fn integrate_diff(&self, f: &SupportDiff) -> Scalar {
        self.atoms.iter().map(|(z, w)| f.eval(z) * w).sum()
    }

    pub fn scaled(&self, a: &Scalar) -> AtomicMeasure {
        let mut out = AtomicMeasure::zero(self.ambient);
        for (z, w) in &self.atoms {
            out.add_atom(z.clone(), w * a);
        }
        out
    }

    pub fn plus(&self, other: &AtomicMeasure) -> AtomicMeasure {
        let mut out = self.clone();
        for (z, w) in &other.atoms {
            out.add_atom(z.clone(), w.clone());
        }
        out
    }

    pub fn minus(&self, other: &AtomicMeasure) -> AtomicMeasure {
        self.plus(&other.scaled(&-Scalar::one()))
    }

    /// Mass of the atom at `z / |z|`, as a float.
    pub fn mass_f64(&self, z: &Direction) -> f64 {
        crate::scalar::to_f64(&self.weight(z)) * z.norm()
    }

    pub fn total_mass_f64(&self) -> f64 {
        self.atoms.keys().map(|z| self.mass_f64(z)).sum()
    }

    /// Atoms whose mass exceeds `tau`.
    pub fn significant(&self, tau: f64) -> Vec<(Direction, f64)> {
        self.atoms
            .keys()
            .map(|z| (z.clone(), self.mass_f64(z)))
            .filter(|(_, m)| *m > tau)
            .collect()
    }
}

/// `S(K_1, ..., K_{n-1}, .)` for `n - 1` polytopes in R^n, `2 <= n <= 4`.
///
/// The atoms sit at the facet normals of `K_1 + ... + K_{n-1}`. The mass at
/// `z / |z|` is the mixed `(n-1)`-volume of the faces `F(K_j, z)`; it is
/// computed after projecting the faces along the axis `i` of largest `|z_i|`,
/// which scales `(n-1)`-volumes by `|z_i| / |z|`. Hence `w(z) = V(pi_i F) / |z_i|`.
pub fn mixed_area_measure(bodies: &[&VPolytope]) -> Result<AtomicMeasure> {
    let n = bodies.first().map(|b| b.ambient_dim()).ok_or(Error::Empty("body list"))?;
    if bodies.len() + 1 != n {
        return Err(Error::WrongCount { expected: n - 1, found: bodies.len() });
    }
    if !(2..=4).contains(&n) {
        return Err(Error::UnsupportedDimension(n));
    }
    if let Some(b) = bodies.iter().find(|b| b.ambient_dim() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: b.ambient_dim() });
    }
    let sum = VPolytope::sum_all(n, bodies.iter().copied())?;
    let normals: Vec<Direction> = if sum.is_full_dim() {
        sum.facets().iter().map(|f| f.normal.clone()).collect()
    } else if sum.dim() + 1 == n {
        let c = sum.complement_normals().pop().expect("hyperplane has a normal");
        vec![c.neg(), c]
    } else {
        vec![]
    };
    let weights: Vec<(Direction, Scalar)> = normals
        .into_par_iter()
        .map(|z| {
            let w = face_weight(bodies, &z);
            (z, w)
        })
        .collect();
    AtomicMeasure::from_atoms(n, weights)
}

fn face_weight(bodies: &[&VPolytope], z: &Direction) -> Scalar {
    let i = z.dominant_axis();
    let shadows: Vec<VPolytope> = bodies
        .iter()
        .map(|b| {
            let f = b.support_set(z);
            VPolytope::new(f.vertices().iter().map(|v| v.drop_coord(i)).collect())
                .expect("face vertices form a point set")
        })
        .collect();
    let refs: Vec<&VPolytope> = shadows.iter().collect();
    let v = mixed_volume(&refs).expect("projected faces form a valid tuple");
    v / from_bigint(z.components()[i].abs())
}

/// Multilinear extension of [`mixed_area_measure`] to support-function differences.
pub fn mixed_area_diff(args: &[&SupportDiff]) -> Result<AtomicMeasure> {
    let n = args.first().map(|a| a.ambient_dim()).ok_or(Error::Empty("argument list"))?;
    if args.len() + 1 != n {
        return Err(Error::WrongCount { expected: n - 1, found: args.len() });
    }
    let mut tuples: Vec<(i8, Vec<&VPolytope>)> = vec![(1, vec![])];
    for a in args {
        tuples = tuples
            .into_iter()
            .flat_map(|(s, chosen)| {
                a.terms().into_iter().map(move |(t, b)| {
                    let mut c = chosen.clone();
                    c.push(b);
                    (s * t, c)
                })
            })
            .collect();
    }
    let mut out = AtomicMeasure::zero(n);
    for (sign, tuple) in tuples {
        let m = mixed_area_measure(&tuple)?;
        out = if sign > 0 { out.plus(&m) } else { out.minus(&m) };
    }
    Ok(out)
}

fn cross(a: &[BigInt], b: &[BigInt]) -> [BigInt; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn idot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// The closed minor great-circle arc `S^2 ∩ pos{z1, z2}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Arc {
    pub z1: Direction,
    pub z2: Direction,
}

impl Arc {
    pub fn new(z1: Direction, z2: Direction) -> Result<Self> {
        if z1.dim() != 3 || z2.dim() != 3 {
            return Err(Error::UnsupportedDimension(z1.dim().max(z2.dim())));
        }
        if cross(z1.components(), z2.components()).iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidArgument("arc endpoints are parallel".into()));
        }
        Ok(Arc { z1, z2 })
    }

    /// Normal of the plane carrying the arc, oriented so that `z1 -> z2` is counterclockwise.
    pub fn plane_normal(&self) -> Direction {
        Direction::new(cross(self.z1.components(), self.z2.components()).to_vec()).expect("independent endpoints")
    }

    /// Whether `u / |u|` lies on the arc: `u` is coplanar and a nonnegative combination.
    pub fn contains(&self, u: &[BigInt]) -> bool {
        let (a, b) = (self.z1.components(), self.z2.components());
        let c = cross(a, b);
        if !idot(&c, u).is_zero() {
            return false;
        }
        !idot(&cross(a, u), &c).is_negative() && !idot(&cross(u, b), &c).is_negative()
    }

    pub fn contains_dir(&self, u: &Direction) -> bool {
        self.contains(u.components())
    }

    /// Rational point `(1 - s) z1 + s z2` of the cone, `0 <= s <= 1`.
    pub fn point_at(&self, s: &Scalar) -> Point {
        let (a, b) = (self.z1.to_point(), self.z2.to_point());
        &a.scale(&(Scalar::one() - s)) + &b.scale(s)
    }

    /// Angular distance from a unit vector to the arc.
    pub fn angular_distance(&self, u: &[f64; 3]) -> f64 {
        let a = self.z1.unit_f64();
        let b = self.z2.unit_f64();
        let nrm = self.plane_normal().unit_f64();
        let d = |p: &[f64], q: &[f64]| p.iter().zip(q).map(|(x, y)| x * y).sum::<f64>();
        let off = d(u, &nrm);
        let proj: Vec<f64> = (0..3).map(|k| u[k] - off * nrm[k]).collect();
        let cr = |p: &[f64], q: &[f64]| [p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]];
        let inside = d(&cr(&a, &proj), &nrm) >= 0.0 && d(&cr(&proj, &b), &nrm) >= 0.0;
        let to_end = |e: &[f64]| d(u, e).clamp(-1.0, 1.0).acos();
        if inside && proj.iter().any(|v| *v != 0.0) {
            off.abs().clamp(0.0, 1.0).asin()
        } else {
            to_end(&a).min(to_end(&b))
        }
    }
}

/// Finite union of closed great-circle arcs in S^2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcSupport {
    pub arcs: Vec<Arc>,
}

impl ArcSupport {
    pub fn contains(&self, u: &Direction) -> bool {
        self.arcs.iter().any(|a| a.contains_dir(u))
    }

    pub fn angular_distance(&self, u: &[f64; 3]) -> f64 {
        self.arcs.iter().map(|a| a.angular_distance(u)).fold(f64::INFINITY, f64::min)
    }

    /// Whether the arcs lying in the plane `<c, .> = 0` cover the whole great circle.
    pub fn covers_great_circle(&self, c: &Direction) -> bool {
        let cz = c.components();
        let in_plane: Vec<&Arc> = self
            .arcs
            .iter()
            .filter(|a| idot(a.z1.components(), cz).is_zero() && idot(a.z2.components(), cz).is_zero())
            .collect();
        let mut ends: Vec<Direction> = in_plane.iter().flat_map(|a| [a.z1.clone(), a.z2.clone()]).collect();
        ends.sort();
        ends.dedup();
        if ends.len() < 3 {
            return false;
        }
        // Angular order inside the plane, relative to the first endpoint.
        let e = ends[0].components().to_vec();
        let f = cross(cz, &e).to_vec();
        let coords = |z: &Direction| (idot(z.components(), &e), idot(z.components(), &f));
        let half = |(x, y): &(BigInt, BigInt)| if y.is_positive() || (y.is_zero() && x.is_positive()) { 0 } else { 1 };
        ends.sort_by(|p, q| {
            let (cp, cq) = (coords(p), coords(q));
            half(&cp).cmp(&half(&cq)).then_with(|| (&cq.0 * &cp.1).cmp(&(&cp.0 * &cq.1)))
        });
        (0..ends.len()).all(|k| {
            let (p, q) = (&ends[k], &ends[(k + 1) % ends.len()]);
            let cpq = cross(p.components(), q.components());
            // A gap of angle >= pi cannot lie in one minor arc.
            if !idot(&cpq, cz).is_positive() {
                return false;
            }
            let mid: Vec<BigInt> = p.components().iter().zip(q.components()).map(|(a, b)| a + b).collect();
            in_plane.iter().any(|a| a.contains(&mid))
        })
    }
}

/// The support of `S(B^3, C, .)` for a 3-polytope `C`: one arc per edge,
/// joining the normals of the two facets meeting there.
pub fn ball_support_arcs(c: &VPolytope) -> Result<ArcSupport> {
    if c.ambient_dim() != 3 {
        return Err(Error::UnsupportedDimension(c.ambient_dim()));
    }
    if !c.is_full_dim() {
        return Err(Error::Precondition(format!("body has dimension {} < 3, not supercritical", c.dim())));
    }
    let facets = c.facets();
    let mut arcs = Vec::new();
    for (i, j) in c.edges() {
        let at: Vec<&Direction> = facets
            .iter()
            .filter(|f| f.vertices.binary_search(&i).is_ok() && f.vertices.binary_search(&j).is_ok())
            .map(|f| &f.normal)
            .collect();
        debug_assert_eq!(at.len(), 2);
        arcs.push(Arc::new(at[0].clone(), at[1].clone())?);
    }
    arcs.sort();
    Ok(ArcSupport { arcs })
}

/// Integer points on the sphere of radius `r` in R^n.
pub(crate) fn lattice_sphere(n: usize, r: i64) -> Vec<Vec<i64>> {
    let r2 = r * r;
    let mut out = Vec::new();
    let isqrt = |v: i64| -> Option<i64> {
        let s = (v as f64).sqrt().round() as i64;
        (s - 1..=s + 1).find(|t| *t >= 0 && t * t == v)
    };
    let mut prefix = vec![-r; n - 1];
    loop {
        let s: i64 = prefix.iter().map(|x| x * x).sum();
        if s <= r2 {
            if let Some(last) = isqrt(r2 - s) {
                let mut p = prefix.clone();
                p.push(last);
                out.push(p.clone());
                if last != 0 {
                    p[n - 1] = -last;
                    out.push(p);
                }
            }
        }
        let mut k = 0;
        loop {
            if k == n - 1 {
                return out;
            }
            if prefix[k] < r {
                prefix[k] += 1;
                break;
            }
            prefix[k] = -r;
            k += 1;
        }
    }
}

/// Quasi-uniform unit vectors: a Fibonacci spiral on S^2, seeded Gaussian samples on S^3.
fn spread_directions(n: usize, k: usize) -> Vec<Vec<f64>> {
    if n == 3 {
        let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
        return (0..k)
            .map(|i| {
                let z = 1.0 - (2 * i + 1) as f64 / k as f64;
                let rho = (1.0 - z * z).sqrt();
                let t = golden * i as f64;
                vec![rho * t.cos(), rho * t.sin(), z]
            })
            .collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    (0..k)
        .map(|_| {
            let g: Vec<f64> = (0..n)
                .map(|_| {
                    let (u1, u2): (f64, f64) = (rng.gen_range(f64::EPSILON..1.0), rng.gen());
                    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
                })
                .collect();
            let norm = g.iter().map(|v| v * v).sum::<f64>().sqrt();
            g.into_iter().map(|v| v / norm).collect()
        })
        .collect()
}

/// An inscribed rational polytope approximating the unit ball of R^n (n = 3, 4)
/// with at least `m` facets. Its vertices are integer points on a sphere of
/// radius `r` divided by `r`, so they share a single denominator.
pub fn ball_polytope(n: usize, m: usize) -> Result<VPolytope> {
    let r = match n {
        3 => 325,
        4 => 25,
        _ => return Err(Error::UnsupportedDimension(n)),
    };
    let lattice = lattice_sphere(n, r);
    let lf: Vec<Vec<f64>> = lattice.iter().map(|p| p.iter().map(|&v| v as f64 / r as f64).collect()).collect();
    let mut k = (m / 2).max(n + 1);
    loop {
        let mut picked: Vec<usize> = spread_directions(n, k)
            .iter()
            .map(|u| {
                (0..lf.len())
                    .max_by(|&a, &b| {
                        let da: f64 = lf[a].iter().zip(u).map(|(x, y)| x * y).sum();
                        let db: f64 = lf[b].iter().zip(u).map(|(x, y)| x * y).sum();
                        da.total_cmp(&db)
                    })
                    .expect("lattice sphere is nonempty")
            })
            .collect();
        picked.sort_unstable();
        picked.dedup();
        let den = Scalar::from_integer(BigInt::from(r));
        let pts: Vec<Point> = picked
            .iter()
            .map(|&i| Point(lattice[i].iter().map(|&v| Scalar::from_integer(BigInt::from(v)) / &den).collect()))
            .collect();
        let b = VPolytope::new(pts)?;
        if b.facets().len() >= m || picked.len() == lattice.len() {
            return Ok(b);
        }
        k += (m - b.facets().len()).div_ceil(2).max(1);
    }
}

/// `S(B_m, C_1, ..., C_{n-2}, .)` with `B_m` from [`ball_polytope`]; a numeric
/// stand-in for `S(B^n, C, .)` used to estimate its support.
pub fn ball_measure_numeric(cs: &[&VPolytope], m: usize) -> Result<AtomicMeasure> {
    let n = cs.first().ok_or(Error::Empty("body list"))?.ambient_dim();
    if cs.len() + 2 != n {
        return Err(Error::WrongCount { expected: n.saturating_sub(2), found: cs.len() });
    }
    let ball = ball_polytope(n, m)?;
    let mut bodies = vec![&ball];
    bodies.extend(cs.iter().copied());
    mixed_area_measure(&bodies)
}

/// Fraction of the mass of the atoms above `tau` lying within `radius` of the arcs.
pub fn mass_near_arcs(measure: &AtomicMeasure, arcs: &ArcSupport, tau: f64, radius: f64) -> f64 {
    let sig = measure.significant(tau);
    let total: f64 = sig.iter().map(|(_, m)| m).sum();
    if total == 0.0 {
        return 1.0;
    }
    let near: f64 = sig
        .iter()
        .filter(|(z, _)| {
            let u = z.unit_f64();
            arcs.angular_distance(&[u[0], u[1], u[2]]) <= radius
        })
        .map(|(_, m)| m)
        .sum();
    near / total
}
