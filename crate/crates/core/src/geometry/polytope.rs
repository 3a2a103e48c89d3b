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

//! Vertex-represented rational polytopes.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::hull::full_dim_hull;
use super::point::{Direction, Point};
use crate::error::{Error, Result};
use crate::linalg::{int_rank, nullspace, primitive_integer, rank, rref};
use crate::scalar::{common_denominator, from_bigint, Scalar};

pub const MAX_DIM: usize = 4;

/// A facet `{x : <x, normal> = offset}` with its incident vertices.
///
/// For polytopes of lower dimension than the ambient space the facet lives in
/// the coordinate chart of the affine hull (see [`VPolytope::chart`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub normal: Direction,
    pub offset: Scalar,
    pub vertices: Vec<usize>,
}

/// Convex hull of finitely many rational points, stored by its irredundant
/// vertices in lexicographic order together with its facets.
#[derive(Clone)]
pub struct VPolytope {
    ambient: usize,
    vertices: Vec<Point>,
    dim: usize,
    chart: Vec<usize>,
    facets: Vec<Facet>,
}

impl PartialEq for VPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.vertices == other.vertices
    }
}

impl Eq for VPolytope {}

impl fmt::Debug for VPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VPolytope(dim {} in R^{}; ", self.dim, self.ambient)?;
        f.debug_list().entries(&self.vertices).finish()?;
        write!(f, ")")
    }
}

/// Convex hull of a nonempty point list in R^n, n <= 4.
pub fn convex_hull(points: &[Point]) -> Result<VPolytope> {
    VPolytope::new(points.to_vec())
}

impl VPolytope {
    pub fn new(mut points: Vec<Point>) -> Result<Self> {
        let n = points.first().ok_or(Error::Empty("point list"))?.dim();
        if n == 0 || n > MAX_DIM {
            return Err(Error::UnsupportedDimension(n));
        }
        if let Some(p) = points.iter().find(|p| p.dim() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: p.dim() });
        }
        points.sort();
        points.dedup();
        if points.len() == 1 {
            return Ok(VPolytope { ambient: n, vertices: points, dim: 0, chart: vec![], facets: vec![] });
        }
        let base = points[0].clone();
        let diffs: Vec<Vec<Scalar>> = points[1..].iter().map(|p| (p - &base).0).collect();
        let (_, chart) = rref(diffs);
        let dim = chart.len();

        let projected: Vec<Point> = points.iter().map(|p| p.select(&chart)).collect();
        let den = common_denominator(projected.iter().flat_map(|p| p.0.iter()));
        let den_s = from_bigint(den.clone());
        let ints: Vec<Vec<BigInt>> = projected
            .iter()
            .map(|p| p.0.iter().map(|v| (v * &den_s).to_integer()).collect())
            .collect();
        let hull = full_dim_hull(&ints);
        let vertices: Vec<Point> = hull.vertices.iter().map(|&i| points[i].clone()).collect();
        let facets = hull
            .facets
            .into_iter()
            .map(|f| Facet {
                normal: Direction::new(f.normal).expect("hull normal is nonzero"),
                offset: Scalar::new(f.offset, den.clone()),
                vertices: f.vertices,
            })
            .collect();
        Ok(VPolytope { ambient: n, vertices, dim, chart, facets })
    }

    pub fn singleton(p: Point) -> Self {
        VPolytope { ambient: p.dim(), vertices: vec![p], dim: 0, chart: vec![], facets: vec![] }
    }

    pub fn origin(n: usize) -> Self {
        VPolytope::singleton(Point::zero(n))
    }

    pub fn segment(a: Point, b: Point) -> Result<Self> {
        VPolytope::new(vec![a, b])
    }

    /// The box `[lo, hi]^n`.
    pub fn cube(n: usize, lo: Scalar, hi: Scalar) -> Result<Self> {
        let mut pts = Vec::with_capacity(1 << n);
        for mask in 0..(1usize << n) {
            pts.push(Point(
                (0..n)
                    .map(|i| if mask >> i & 1 == 1 { hi.clone() } else { lo.clone() })
                    .collect(),
            ));
        }
        VPolytope::new(pts)
    }

    /// `conv{0, e_1, ..., e_n}`.
    pub fn standard_simplex(n: usize) -> Result<Self> {
        let mut pts = vec![Point::zero(n)];
        pts.extend((0..n).map(|i| Point::unit(n, i)));
        VPolytope::new(pts)
    }

    pub fn from_int_points(raw: &[&[i64]]) -> Result<Self> {
        VPolytope::new(raw.iter().map(|p| Point::from_ints(p)).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Affine dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dim(&self) -> bool {
        self.dim == self.ambient
    }

    pub fn is_singleton(&self) -> bool {
        self.dim == 0
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Facets of a full-dimensional polytope; empty otherwise.
    pub fn facets(&self) -> &[Facet] {
        if self.is_full_dim() {
            &self.facets
        } else {
            &[]
        }
    }

    /// Coordinates onto which the affine hull projects bijectively.
    pub fn chart(&self) -> &[usize] {
        &self.chart
    }

    /// Facets of the polytope relative to its affine hull, in chart coordinates.
    pub fn relative_facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Relative facet normals lifted to R^n (zero outside the chart).
    pub fn lifted_normal(&self, f: &Facet) -> Direction {
        let mut z = vec![BigInt::zero(); self.ambient];
        for (k, &c) in self.chart.iter().enumerate() {
            z[c] = f.normal.components()[k].clone();
        }
        Direction::new(z).expect("lifted normal is nonzero")
    }

    /// Basis of `aff(P) - aff(P)`, as rows.
    pub fn direction_space(&self) -> Vec<Point> {
        let base = &self.vertices[0];
        let diffs: Vec<Vec<Scalar>> = self.vertices[1..].iter().map(|p| (p - base).0).collect();
        rref(diffs).0.into_iter().map(Point).collect()
    }

    /// Primitive integer basis of the orthogonal complement of the direction space.
    pub fn complement_normals(&self) -> Vec<Direction> {
        let rows: Vec<Vec<Scalar>> = self.direction_space().into_iter().map(|p| p.0).collect();
        nullspace(&rows, self.ambient)
            .into_iter()
            .map(|v| Direction::new(primitive_integer(&v)).expect("null vector is nonzero"))
            .collect()
    }

    /// Outer normals describing P as an intersection of halfspaces in R^n:
    /// lifted relative facet normals plus both signs of the complement normals.
    pub fn supporting_normals(&self) -> Vec<Direction> {
        let mut out: Vec<Direction> = self.facets.iter().map(|f| self.lifted_normal(f)).collect();
        for c in self.complement_normals() {
            out.push(c.neg());
            out.push(c);
        }
        out.sort();
        out.dedup();
        out
    }

    pub fn support_value(&self, z: &Direction) -> Scalar {
        self.vertices
            .iter()
            .map(|v| v.dot_dir(z))
            .max()
            .expect("polytopes are nonempty")
    }

    /// `max <v, u>` over vertices for a rational vector `u`.
    pub fn support_value_point(&self, u: &Point) -> Scalar {
        self.vertices.iter().map(|v| v.dot(u)).max().expect("polytopes are nonempty")
    }

    /// Indices of the vertices attaining the support value.
    pub fn maximizers(&self, z: &Direction) -> Vec<usize> {
        let vals: Vec<Scalar> = self.vertices.iter().map(|v| v.dot_dir(z)).collect();
        let m = vals.iter().max().expect("polytopes are nonempty").clone();
        (0..vals.len()).filter(|&i| vals[i] == m).collect()
    }

    pub fn maximizers_point(&self, u: &Point) -> Vec<usize> {
        let vals: Vec<Scalar> = self.vertices.iter().map(|v| v.dot(u)).collect();
        let m = vals.iter().max().expect("polytopes are nonempty").clone();
        (0..vals.len()).filter(|&i| vals[i] == m).collect()
    }

    /// The face `F(P, z)`.
    pub fn support_set(&self, z: &Direction) -> VPolytope {
        self.sub_polytope(&self.maximizers(z))
    }

    pub fn support_set_point(&self, u: &Point) -> VPolytope {
        self.sub_polytope(&self.maximizers_point(u))
    }

    /// Hull of a subset of the vertices.
    pub fn sub_polytope(&self, idx: &[usize]) -> VPolytope {
        let pts: Vec<Point> = idx.iter().map(|&i| self.vertices[i].clone()).collect();
        VPolytope::new(pts).expect("vertex subset is a valid point set")
    }

    pub fn minkowski_sum(&self, other: &VPolytope) -> Result<VPolytope> {
        if other.ambient != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        let mut pts = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                pts.push(a + b);
            }
        }
        VPolytope::new(pts)
    }

    /// `sum_i bodies[i]`; the empty sum is `{0}` in R^n.
    pub fn sum_all<'a>(n: usize, bodies: impl IntoIterator<Item = &'a VPolytope>) -> Result<VPolytope> {
        let mut acc = VPolytope::origin(n);
        for b in bodies {
            acc = if acc.vertices.len() == 1 && acc.vertices[0].is_zero() {
                if b.ambient != n {
                    return Err(Error::DimensionMismatch { expected: n, found: b.ambient });
                }
                b.clone()
            } else {
                acc.minkowski_sum(b)?
            };
        }
        Ok(acc)
    }

    /// `a P + x` for `a >= 0`.
    pub fn scale_translate(&self, a: &Scalar, x: &Point) -> Result<VPolytope> {
        if a.is_negative() {
            return Err(Error::NegativeScale(a.to_string()));
        }
        if x.dim() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: x.dim() });
        }
        if a.is_zero() {
            return Ok(VPolytope::singleton(x.clone()));
        }
        // Positive homotheties preserve the lexicographic order and the face structure.
        let vertices: Vec<Point> = self.vertices.iter().map(|v| &v.scale(a) + x).collect();
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let shift = x.select(&self.chart).dot_dir(&f.normal);
                Facet { normal: f.normal.clone(), offset: &f.offset * a + shift, vertices: f.vertices.clone() }
            })
            .collect();
        Ok(VPolytope { ambient: self.ambient, vertices, dim: self.dim, chart: self.chart.clone(), facets })
    }

    pub fn scale(&self, a: &Scalar) -> Result<VPolytope> {
        self.scale_translate(a, &Point::zero(self.ambient))
    }

    pub fn translate(&self, x: &Point) -> Result<VPolytope> {
        self.scale_translate(&crate::scalar::int(1), x)
    }

    /// `-P`.
    pub fn reflect(&self) -> VPolytope {
        VPolytope::new(self.vertices.iter().map(|v| -v).collect()).expect("reflection is valid")
    }

    /// Membership test, exact.
    pub fn contains(&self, x: &Point) -> bool {
        if x.dim() != self.ambient {
            return false;
        }
        let base = &self.vertices[0];
        if self.dim == 0 {
            return x == base;
        }
        let mut rows: Vec<Vec<Scalar>> = self.direction_space().into_iter().map(|p| p.0).collect();
        rows.push((x - base).0);
        if rank(&rows) != self.dim {
            return false;
        }
        let local = x.select(&self.chart);
        self.facets.iter().all(|f| local.dot_dir(&f.normal) <= f.offset)
    }

    /// Vertex index pairs `(i, j)`, `i < j`, spanning edges.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        match self.dim {
            0 => vec![],
            1 => vec![(0, 1)],
            d => {
                let mut by_pair: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
                for (fi, f) in self.facets.iter().enumerate() {
                    for (a, &i) in f.vertices.iter().enumerate() {
                        for &j in &f.vertices[a + 1..] {
                            by_pair.entry((i, j)).or_default().push(fi);
                        }
                    }
                }
                by_pair
                    .into_iter()
                    .filter(|(_, fs)| {
                        fs.len() + 1 >= d && {
                            let normals: Vec<Vec<BigInt>> =
                                fs.iter().map(|&k| self.facets[k].normal.components().to_vec()).collect();
                            int_rank(&normals) == d - 1
                        }
                    })
                    .map(|(p, _)| p)
                    .collect()
            }
        }
    }

    /// Directions of the edges, one line representative per edge (with repetitions).
    pub fn edge_directions(&self) -> Vec<Direction> {
        self.edges()
            .into_iter()
            .map(|(i, j)| {
                Direction::from_point(&(&self.vertices[j] - &self.vertices[i]))
                    .expect("edge endpoints are distinct")
                    .line_representative()
            })
            .collect()
    }

    /// Indices of relative facets containing vertex `v`.
    pub fn facets_at(&self, v: usize) -> Vec<usize> {
        (0..self.facets.len())
            .filter(|&k| self.facets[k].vertices.binary_search(&v).is_ok())
            .collect()
    }

    /// All faces (including P itself), each exactly once, as sorted vertex index sets.
    pub fn face_index_sets(&self) -> Vec<Vec<usize>> {
        let mut out = std::collections::BTreeSet::new();
        for i in 0..self.vertices.len() {
            out.insert(vec![i]);
        }
        for (i, j) in self.edges() {
            out.insert(vec![i, j]);
        }
        self.collect_faces(&(0..self.vertices.len()).collect::<Vec<_>>(), &mut out);
        out.into_iter().collect()
    }

    fn collect_faces(&self, idx: &[usize], out: &mut std::collections::BTreeSet<Vec<usize>>) {
        if !out.insert(idx.to_vec()) && idx.len() < self.vertices.len() {
            return;
        }
        let sub = self.sub_polytope(idx);
        if sub.dim <= 1 {
            return;
        }
        for f in &sub.facets {
            let mut child: Vec<usize> = f
                .vertices
                .iter()
                .map(|&k| {
                    let p = &sub.vertices[k];
                    self.vertices.binary_search(p).expect("face vertex is a vertex")
                })
                .collect();
            child.sort_unstable();
            self.collect_faces(&child, out);
        }
    }
}

/// Difference of support functions `h_plus - h_minus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportDiff {
    pub plus: VPolytope,
    pub minus: VPolytope,
}

impl SupportDiff {
    pub fn new(plus: VPolytope, minus: VPolytope) -> Result<Self> {
        if plus.ambient_dim() != minus.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: plus.ambient_dim(), found: minus.ambient_dim() });
        }
        Ok(SupportDiff { plus, minus })
    }

    pub fn ambient_dim(&self) -> usize {
        self.plus.ambient_dim()
    }

    pub fn eval(&self, z: &Direction) -> Scalar {
        self.plus.support_value(z) - self.minus.support_value(z)
    }

    pub fn eval_point(&self, u: &Point) -> Scalar {
        self.plus.support_value_point(u) - self.minus.support_value_point(u)
    }

    /// The linear function `<x, .>`.
    pub fn linear(x: Point) -> Self {
        let n = x.dim();
        SupportDiff { plus: VPolytope::singleton(x), minus: VPolytope::origin(n) }
    }

    /// Signed list of polytope terms: `[(+1, plus), (-1, minus)]`, skipping singleton terms
    /// that are the origin.
    pub fn terms(&self) -> Vec<(i8, &VPolytope)> {
        let mut t = vec![(1, &self.plus)];
        if !(self.minus.is_singleton() && self.minus.vertices()[0].is_zero()) {
            t.push((-1, &self.minus));
        }
        t
    }
}

impl From<VPolytope> for SupportDiff {
    fn from(p: VPolytope) -> Self {
        let n = p.ambient_dim();
        SupportDiff { plus: p, minus: VPolytope::origin(n) }
    }
}

/// `dim pspan (A_1 + ... + A_k)`, computed without forming the sum.
pub fn dim_pspan(bodies: &[&VPolytope]) -> Result<usize> {
    let n = bodies.first().ok_or(Error::Empty("body list"))?.ambient_dim();
    let mut rows = Vec::new();
    for b in bodies {
        if b.ambient_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: b.ambient_dim() });
        }
        rows.extend(b.direction_space().into_iter().map(|p| p.0));
    }
    Ok(rank(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn unit_square() -> VPolytope {
        VPolytope::from_int_points(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap()
    }

    #[test]
    fn hull_examples() {
        let sq = unit_square();
        assert_eq!(sq.num_vertices(), 4);
        let with_center = VPolytope::new(
            sq.vertices().iter().cloned().chain([Point::new(vec![rat(1, 2), rat(1, 2)])]).collect(),
        )
        .unwrap();
        assert_eq!(with_center, sq);
        let seg = VPolytope::from_int_points(&[&[0, 0], &[1, 0], &[2, 0]]).unwrap();
        assert_eq!(seg.num_vertices(), 2);
        assert_eq!(seg.dim(), 1);
        assert!(VPolytope::new(vec![Point::from_ints(&[0, 0]), Point::from_ints(&[1])]).is_err());
        assert!(VPolytope::new(vec![]).is_err());
    }

    #[test]
    fn support_values() {
        let c = VPolytope::cube(3, int(-1), int(1)).unwrap();
        assert_eq!(c.support_value(&Direction::from_ints(&[1, 1, 1]).unwrap()), int(3));
        let seg = VPolytope::from_int_points(&[&[0, 0, 0], &[1, 0, 0]]).unwrap();
        assert_eq!(seg.support_value(&Direction::from_ints(&[-2, 0, 0]).unwrap()), int(0));
        let tri = VPolytope::standard_simplex(3).unwrap().sub_polytope(&[0, 1, 2]);
        assert_eq!(tri.dim(), 2);
        let tri = VPolytope::from_int_points(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]).unwrap();
        assert_eq!(tri.support_value(&Direction::from_ints(&[1, 2, 0]).unwrap()), int(2));
    }

    #[test]
    fn support_sets() {
        let c = VPolytope::cube(3, int(0), int(1)).unwrap();
        let top = c.support_set(&Direction::from_ints(&[0, 0, 1]).unwrap());
        assert_eq!(top.dim(), 2);
        assert_eq!(top.num_vertices(), 4);
        assert!(top.vertices().iter().all(|v| v[2] == int(1)));
        let v = c.support_set(&Direction::from_ints(&[1, 1, 1]).unwrap());
        assert_eq!(v, VPolytope::singleton(Point::from_ints(&[1, 1, 1])));
        let seg = VPolytope::from_int_points(&[&[0, 0, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(seg.support_set(&Direction::from_ints(&[1, 0, 0]).unwrap()), seg);
    }

    #[test]
    fn minkowski_sums() {
        let e1 = VPolytope::from_int_points(&[&[0, 0], &[1, 0]]).unwrap();
        let e2 = VPolytope::from_int_points(&[&[0, 0], &[0, 1]]).unwrap();
        assert_eq!(e1.minkowski_sum(&e2).unwrap(), unit_square());
        let t = Point::from_ints(&[3, -2]);
        assert_eq!(
            unit_square().minkowski_sum(&VPolytope::singleton(t.clone())).unwrap(),
            unit_square().translate(&t).unwrap()
        );
        let tri = VPolytope::from_int_points(&[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        let hex = tri.minkowski_sum(&tri.reflect()).unwrap();
        assert_eq!(hex.num_vertices(), 6);
        assert_eq!(hex.facets().len(), 6);
    }

    #[test]
    fn scaling() {
        let sq = unit_square();
        assert_eq!(sq.scale_translate(&int(1), &Point::zero(2)).unwrap(), sq);
        let x = Point::from_ints(&[5, 7]);
        assert_eq!(sq.scale_translate(&int(0), &x).unwrap(), VPolytope::singleton(x));
        let c = VPolytope::cube(3, int(0), int(1)).unwrap();
        let moved = c.scale_translate(&rat(1, 2), &Point::unit(3, 0)).unwrap();
        let expected = VPolytope::new(
            VPolytope::cube(3, int(0), rat(1, 2))
                .unwrap()
                .vertices()
                .iter()
                .map(|v| v + &Point::unit(3, 0))
                .collect(),
        )
        .unwrap();
        assert_eq!(moved, expected);
        // Cached facets follow the homothety.
        assert_eq!(moved.facets(), VPolytope::new(moved.vertices().to_vec()).unwrap().facets());
        assert!(sq.scale_translate(&int(-1), &Point::zero(2)).is_err());
    }

    #[test]
    fn pspan_dims() {
        let z = Point::zero(3);
        let s = |i| VPolytope::segment(z.clone(), Point::unit(3, i)).unwrap();
        assert_eq!(dim_pspan(&[&s(0)]).unwrap(), 1);
        assert_eq!(dim_pspan(&[&s(0), &s(0)]).unwrap(), 1);
        assert_eq!(dim_pspan(&[&s(0), &s(1), &s(2)]).unwrap(), 3);
    }

    #[test]
    fn edges_and_faces() {
        let c = VPolytope::cube(3, int(0), int(1)).unwrap();
        assert_eq!(c.edges().len(), 12);
        assert_eq!(c.face_index_sets().len(), 8 + 12 + 6 + 1);
        let t = VPolytope::standard_simplex(3).unwrap();
        assert_eq!(t.edges().len(), 6);
        let square_in_3d = VPolytope::from_int_points(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]).unwrap();
        assert_eq!(square_in_3d.edges().len(), 4);
        assert!(square_in_3d.facets().is_empty());
        assert_eq!(square_in_3d.relative_facets().len(), 4);
        let c4 = VPolytope::cube(4, int(0), int(1)).unwrap();
        assert_eq!(c4.edges().len(), 32);
    }

    #[test]
    fn membership() {
        let sq = VPolytope::from_int_points(&[&[0, 0, 1], &[2, 0, 1], &[0, 2, 1], &[2, 2, 1]]).unwrap();
        assert!(sq.contains(&Point::from_ints(&[1, 1, 1])));
        assert!(!sq.contains(&Point::from_ints(&[1, 1, 0])));
        assert!(!sq.contains(&Point::from_ints(&[3, 1, 1])));
    }

    #[test]
    fn supporting_normals_describe_lower_dimensional_bodies() {
        let seg = VPolytope::from_int_points(&[&[0, 0, 0], &[1, 1, 0]]).unwrap();
        let normals = seg.supporting_normals();
        assert_eq!(normals.len(), 2 + 4);
        for z in &normals {
            for v in seg.vertices() {
                assert!(v.dot_dir(z) <= seg.support_value(z));
            }
        }
    }
}
