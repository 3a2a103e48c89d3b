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


//! Seeded generators for random rational instances.
//!
//! All generators draw from a caller-supplied RNG; [`rng`] builds the ChaCha8
//! stream used throughout the crate so that a seed fixes every instance.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::appendix::admissibility_check;
use crate::area_measure::lattice_sphere;
use crate::error::{Error, Result};
use crate::geometry::{Point, VPolytope};
use crate::linalg::rank;
use crate::scalar::{int, rat, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational `p/q` with `|p/q| <= range` and `1 <= q <= denom`.
pub fn rational<R: Rng>(rng: &mut R, range: i64, denom: i64) -> Scalar {
    let q = rng.gen_range(1..=denom.max(1));
    rat(rng.gen_range(-range * q..=range * q), q)
}

pub fn rational_point<R: Rng>(rng: &mut R, n: usize, range: i64, denom: i64) -> Point {
    Point::new((0..n).map(|_| rational(rng, range, denom)).collect())
}

fn integer_vector<R: Rng>(rng: &mut R, n: usize, range: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(-range..=range)).collect()
}

/// Hull of `points` random rational points, resampled until it is full-dimensional.
pub fn random_polytope<R: Rng>(rng: &mut R, n: usize, points: usize, range: i64, denom: i64) -> Result<VPolytope> {
    if points <= n {
        return Err(Error::InvalidArgument(format!("{points} points cannot span R^{n}")));
    }
    loop {
        let pts: Vec<Point> = (0..points).map(|_| rational_point(rng, n, range, denom)).collect();
        let p = VPolytope::new(pts)?;
        if p.is_full_dim() {
            return Ok(p);
        }
    }
}

/// A random polytope of dimension exactly `d` in R^n: a rational point cloud
/// in a random `d`-flat.
pub fn random_body_of_dim<R: Rng>(rng: &mut R, n: usize, d: usize, range: i64) -> Result<VPolytope> {
    if d > n {
        return Err(Error::InvalidArgument(format!("dimension {d} exceeds ambient {n}")));
    }
    if d == 0 {
        return Ok(VPolytope::singleton(rational_point(rng, n, range, 3)));
    }
    loop {
        let basis: Vec<Point> = (0..d).map(|_| Point::from_ints(&integer_vector(rng, n, 3))).collect();
        if rank(&basis.iter().map(|b| b.0.clone()).collect::<Vec<_>>()) != d {
            continue;
        }
        let base = rational_point(rng, n, range, 2);
        let count = d + 1 + rng.gen_range(0..=2);
        let pts: Vec<Point> = (0..count)
            .map(|_| {
                basis.iter().fold(base.clone(), |acc, b| &acc + &b.scale(&rational(rng, 2, 2)))
            })
            .collect();
        let p = VPolytope::new(pts)?;
        if p.dim() == d {
            return Ok(p);
        }
    }
}

/// A 3-polytope with exactly `k >= 4` vertices: `k` lattice points of a sphere
/// (hence in convex position) under a random rational diagonal map and shift.
pub fn random_ktope<R: Rng>(rng: &mut R, k: usize) -> Result<VPolytope> {
    if k < 4 {
        return Err(Error::InvalidArgument(format!("a 3-polytope needs at least 4 vertices, got k = {k}")));
    }
    let sphere = lattice_sphere(3, 65);
    if k > sphere.len() {
        return Err(Error::InvalidArgument(format!("k = {k} is too large")));
    }
    loop {
        let scale: Vec<Scalar> = (0..3).map(|_| rat(rng.gen_range(2..=9), rng.gen_range(2..=9))).collect();
        let shift = rational_point(rng, 3, 5, 4);
        let pts: Vec<Point> = sphere
            .choose_multiple(rng, k)
            .map(|v| {
                let x = Point::new(v.iter().zip(&scale).map(|(c, s)| int(*c) * s).collect());
                &x + &shift
            })
            .collect();
        let p = VPolytope::new(pts)?;
        if p.is_full_dim() && p.num_vertices() == k {
            return Ok(p);
        }
    }
}

/// Sum of `segments` random integer segments `[0, g]`, with the generators.
pub fn random_zonotope<R: Rng>(rng: &mut R, n: usize, segments: usize, range: i64) -> Result<(VPolytope, Vec<Point>)> {
    let mut z = VPolytope::origin(n);
    let mut gens = Vec::with_capacity(segments);
    while gens.len() < segments {
        let g = Point::from_ints(&integer_vector(rng, n, range));
        if g.is_zero() {
            continue;
        }
        z = z.minkowski_sum(&VPolytope::segment(Point::zero(n), g.clone())?)?;
        gens.push(g);
    }
    Ok((z, gens))
}

/// A tetrahedron with random rational perturbations of a fixed base, recentred by a random shift.
fn perturbed_tetrahedron<R: Rng>(rng: &mut R) -> Result<VPolytope> {
    const BASE: [[i64; 3]; 4] = [[0, 0, 0], [12, 0, 0], [6, 10, 0], [6, 4, 10]];
    let shift = rational_point(rng, 3, 20, 1);
    let pts: Vec<Point> = BASE
        .iter()
        .map(|v| &(&Point::from_ints(v) + &rational_point(rng, 3, 4, 7)) + &shift)
        .collect();
    VPolytope::new(pts)
}

/// Extends a sequence one term at a time, resampling a term until the prefix stays admissible.
fn admissible_by_extension<R: Rng>(
    rng: &mut R,
    m: usize,
    mut next: impl FnMut(&mut R, usize) -> Result<VPolytope>,
) -> Result<Vec<VPolytope>> {
    let mut seq: Vec<VPolytope> = Vec::with_capacity(m);
    for i in 0..m {
        for attempt in 0.. {
            if attempt == 1000 {
                return Err(Error::Precondition(format!("no admissible extension found for term {}", i + 1)));
            }
            let cand = next(rng, i)?;
            let mut refs: Vec<&VPolytope> = seq.iter().collect();
            refs.push(&cand);
            if admissibility_check(&refs)?.passed() {
                seq.push(cand);
                break;
            }
        }
    }
    Ok(seq)
}

/// `m` randomly perturbed tetrahedra forming an admissible prefix.
pub fn admissible_tetrahedra<R: Rng>(rng: &mut R, m: usize) -> Result<Vec<VPolytope>> {
    admissible_by_extension(rng, m, |r, _| perturbed_tetrahedron(r))
}

/// An admissible prefix whose `i`-th term (one-based) has `max(i, 4)` vertices.
pub fn admissible_growth_sequence<R: Rng>(rng: &mut R, m: usize) -> Result<Vec<VPolytope>> {
    admissible_by_extension(rng, m, |r, i| random_ktope(r, (i + 1).max(4)))
}
