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


//! Beneath-beyond convex hull of full-dimensional integer point sets in R^d, d <= 4.
//!
//! Facets are kept as hyperplanes together with every processed point lying on
//! them, so coplanar input never produces split facets. Two facets are adjacent
//! across a ridge when their common points span a (d-2)-flat.
//!
//! Small inputs run on `i128`; the bound in [`I128_COORD_LIMIT`] keeps every
//! intermediate of the elimination and the dot products far from overflow.
//! Larger coordinates fall back to `BigInt`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// With `|x| <= 2^13` normals (3x3 minors of differences) stay below `2^46`
/// and every elimination on coordinate differences stays below `2^100`.
/// Ranks of normal sets would not, so those always run on `BigInt`.
const I128_COORD_LIMIT: i64 = 1 << 13;

#[derive(Debug, Clone)]
pub(crate) struct IntFacet {
    /// Primitive outer normal.
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
    /// Sorted indices into [`IntHull::vertices`].
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone)]
pub(crate) struct IntHull {
    /// Indices of the extreme points in the input, increasing.
    pub vertices: Vec<usize>,
    pub facets: Vec<IntFacet>,
}

/// The integer operations the hull needs, by reference so `BigInt` avoids clones.
trait Ring: Clone + Ord + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_u64(v: u64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Exact division.
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn gcd(&self, o: &Self) -> Self;
    fn is_zero(&self) -> bool;
    fn to_bigint(&self) -> BigInt;
}

impl Ring for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_u64(v: u64) -> Self {
        v as i128
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_u64(v: u64) -> Self {
        BigInt::from(v)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

struct Work<T> {
    normal: Vec<T>,
    offset: T,
    points: Vec<usize>,
}

fn dot<T: Ring>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc.add(&x.mul(y)))
}

fn diff<T: Ring>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

/// Rank by fraction-free (Bareiss) elimination.
fn rank<T: Ring>(rows: &[Vec<T>]) -> usize {
    let mut m = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let t = m[r][c].mul(&m[i][j]).sub(&m[i][c].mul(&m[r][j]));
                m[i][j] = t.div(&prev);
            }
            m[i][c] = T::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

fn det<T: Ring>(rows: &[Vec<T>]) -> T {
    let n = rows.len();
    if n == 0 {
        return T::one();
    }
    let mut m = rows.to_vec();
    let mut prev = T::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return T::zero();
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.div(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

fn primitive<T: Ring>(mut v: Vec<T>) -> Vec<T> {
    let g = v.iter().fold(T::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && g != T::one() {
        for x in v.iter_mut() {
            *x = x.div(&g);
        }
    }
    v
}

fn affine_rank<T: Ring>(points: &[Vec<T>], idx: &[usize]) -> usize {
    if idx.len() <= 1 {
        return 0;
    }
    let base = &points[idx[0]];
    let rows: Vec<Vec<T>> = idx[1..].iter().map(|&i| diff(&points[i], base)).collect();
    rank(&rows)
}

/// Greedily picks an affinely independent subset of `idx` of size `want`.
fn independent_subset<T: Ring>(points: &[Vec<T>], idx: &[usize], want: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::with_capacity(want);
    for &i in idx {
        if chosen.len() == want {
            break;
        }
        chosen.push(i);
        if affine_rank(points, &chosen) + 1 < chosen.len() {
            chosen.pop();
        }
    }
    chosen
}

/// Normal of the hyperplane through `d` affinely independent points of R^d.
fn hyperplane_normal<T: Ring>(points: &[Vec<T>], idx: &[usize]) -> Vec<T> {
    let d = points[idx[0]].len();
    let base = &points[idx[0]];
    let rows: Vec<Vec<T>> = idx[1..].iter().map(|&i| diff(&points[i], base)).collect();
    let mut z = Vec::with_capacity(d);
    for k in 0..d {
        let minor: Vec<Vec<T>> = rows
            .iter()
            .map(|r| r.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, v)| v.clone()).collect())
            .collect();
        let m = det(&minor);
        z.push(if k % 2 == 0 { m } else { m.neg() });
    }
    primitive(z)
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn insert_sorted(v: &mut Vec<usize>, x: usize) {
    if let Err(pos) = v.binary_search(&x) {
        v.insert(pos, x);
    }
}

/// Hull of distinct points affinely spanning R^d (d = point length, 1 <= d).
pub(crate) fn full_dim_hull(points: &[Vec<BigInt>]) -> IntHull {
    let small = points
        .iter()
        .flatten()
        .all(|x| x.to_i64().is_some_and(|v| v.abs() <= I128_COORD_LIMIT));
    if small {
        let pts: Vec<Vec<i128>> =
            points.iter().map(|p| p.iter().map(|x| x.to_i128().expect("checked range")).collect()).collect();
        hull(&pts)
    } else {
        hull(points)
    }
}

fn hull<T: Ring>(points: &[Vec<T>]) -> IntHull {
    let d = points[0].len();
    assert!(d >= 1);
    if d == 1 {
        let (mut lo, mut hi) = (0, 0);
        for (i, p) in points.iter().enumerate() {
            if p[0] < points[lo][0] {
                lo = i;
            }
            if p[0] > points[hi][0] {
                hi = i;
            }
        }
        assert_ne!(lo, hi, "one-dimensional hull needs two distinct points");
        let mut vertices = vec![lo, hi];
        vertices.sort_unstable();
        let pos = |i: usize| vertices.iter().position(|&v| v == i).unwrap();
        let facets = vec![
            IntFacet { normal: vec![BigInt::from(-1)], offset: points[lo][0].neg().to_bigint(), vertices: vec![pos(lo)] },
            IntFacet { normal: vec![BigInt::from(1)], offset: points[hi][0].to_bigint(), vertices: vec![pos(hi)] },
        ];
        return IntHull { vertices, facets };
    }

    let all: Vec<usize> = (0..points.len()).collect();
    let simplex = independent_subset(points, &all, d + 1);
    assert_eq!(simplex.len(), d + 1, "point set is not full-dimensional");

    // Interior reference point, scaled by d + 1 to stay integral.
    let mut center = vec![T::zero(); d];
    for &i in &simplex {
        for (c, v) in center.iter_mut().zip(&points[i]) {
            *c = c.add(v);
        }
    }
    let weight = T::from_u64(d as u64 + 1);

    let orient = |normal: Vec<T>, anchor: usize| -> (Vec<T>, T) {
        let offset = dot(&normal, &points[anchor]);
        if dot(&normal, &center).sub(&weight.mul(&offset)) > T::zero() {
            (normal.iter().map(|v| v.neg()).collect(), offset.neg())
        } else {
            (normal, offset)
        }
    };

    let mut processed: Vec<usize> = simplex.clone();
    processed.sort_unstable();
    let mut facets: Vec<Work<T>> = Vec::new();
    for skip in 0..=d {
        let idx: Vec<usize> = (0..=d).filter(|&k| k != skip).map(|k| simplex[k]).collect();
        let (normal, offset) = orient(hyperplane_normal(points, &idx), idx[0]);
        let mut pts = idx.clone();
        pts.sort_unstable();
        facets.push(Work { normal, offset, points: pts });
    }

    // Hidden facets through each point, rebuilt per insertion.
    let mut through: Vec<Vec<usize>> = vec![Vec::new(); points.len()];
    let in_simplex: BTreeSet<usize> = simplex.iter().copied().collect();
    for p in 0..points.len() {
        if in_simplex.contains(&p) {
            continue;
        }
        let side: Vec<Ordering> = facets.iter().map(|f| dot(&f.normal, &points[p]).cmp(&f.offset)).collect();
        if !side.iter().any(|s| s.is_gt()) {
            if side.iter().any(|s| s.is_eq()) {
                insert_sorted(&mut processed, p);
                for (f, s) in facets.iter_mut().zip(&side) {
                    if s.is_eq() {
                        insert_sorted(&mut f.points, p);
                    }
                }
            }
            continue;
        }

        // A horizon neighbour of a visible facet is hidden and shares a point with it.
        let mut touched = Vec::new();
        for (gi, g) in facets.iter().enumerate() {
            if side[gi].is_lt() {
                for &q in &g.points {
                    if through[q].is_empty() {
                        touched.push(q);
                    }
                    through[q].push(gi);
                }
            }
        }
        let mut created: Vec<Work<T>> = Vec::new();
        for (fi, f) in facets.iter().enumerate() {
            if !side[fi].is_gt() {
                continue;
            }
            let neighbours: BTreeSet<usize> = f.points.iter().flat_map(|&q| through[q].iter().copied()).collect();
            for gi in neighbours {
                let common = intersect(&f.points, &facets[gi].points);
                if common.len() + 1 < d || affine_rank(points, &common) + 2 != d {
                    continue;
                }
                let mut base = independent_subset(points, &common, d - 1);
                base.push(p);
                let (normal, offset) = orient(hyperplane_normal(points, &base), p);
                // The new facet meets the old hull exactly in the ridge.
                let mut pts = common;
                insert_sorted(&mut pts, p);
                match created.iter_mut().find(|c| c.normal == normal && c.offset == offset) {
                    Some(c) => {
                        for q in pts {
                            insert_sorted(&mut c.points, q);
                        }
                    }
                    None => created.push(Work { normal, offset, points: pts }),
                }
            }
        }
        for q in touched {
            through[q].clear();
        }

        insert_sorted(&mut processed, p);
        let mut kept: Vec<Work<T>> = Vec::with_capacity(facets.len() + created.len());
        for (mut f, s) in facets.into_iter().zip(side) {
            match s {
                Ordering::Greater => {}
                Ordering::Equal => {
                    insert_sorted(&mut f.points, p);
                    kept.push(f);
                }
                Ordering::Less => kept.push(f),
            }
        }
        kept.extend(created);
        facets = kept;
    }

    // A boundary point is a vertex iff the normals of its facets span R^d.
    let mut candidates: BTreeSet<usize> = BTreeSet::new();
    for f in &facets {
        candidates.extend(f.points.iter().copied());
    }
    let mut vertices = Vec::new();
    for &c in &candidates {
        let normals: Vec<Vec<BigInt>> = facets
            .iter()
            .filter(|f| f.points.binary_search(&c).is_ok())
            .map(|f| f.normal.iter().map(Ring::to_bigint).collect())
            .collect();
        if rank(&normals) == d {
            vertices.push(c);
        }
    }
    let mut out: Vec<IntFacet> = facets
        .into_iter()
        .map(|f| IntFacet {
            vertices: f.points.iter().filter_map(|q| vertices.binary_search(q).ok()).collect(),
            normal: f.normal.iter().map(Ring::to_bigint).collect(),
            offset: f.offset.to_bigint(),
        })
        .collect();
    out.sort_by(|a, b| a.normal.cmp(&b.normal));
    IntHull { vertices, facets: out }
}
