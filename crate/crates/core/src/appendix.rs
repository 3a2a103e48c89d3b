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


//! Zonotope kernels, segment summands and admissible sequences of
//! tetrahedra-like bodies whose associated body is a macroid but not a polyoid.
//!
//! Everything here works on finite prefixes. Statements about the infinite
//! sequence are never asserted, only the per-prefix facts that support them.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{diameter_sq, is_summand, Direction, VPolytope};
use crate::interval::Interval;
use crate::linalg::int_det;
use crate::scalar::{abs, int, Scalar};

fn require_3d(p: &VPolytope) -> Result<()> {
    if p.ambient_dim() != 3 {
        return Err(Error::UnsupportedDimension(p.ambient_dim()));
    }
    Ok(())
}

fn scaled_segment(d: &Direction, lo: &Scalar, hi: &Scalar) -> VPolytope {
    let dp = d.to_point();
    VPolytope::segment(dp.scale(lo), dp.scale(hi)).expect("segment endpoints share a dimension")
}

/// Some vertex has incident facet normals on both strict sides of `d`.
///
/// A segment summand parallel to `d` makes every normal cone of `P` lie in a
/// normal cone of the segment, so such a vertex rules out any positive length.
fn has_split_vertex(p: &VPolytope, d: &Direction) -> bool {
    let dp = d.to_point();
    (0..p.num_vertices()).any(|v| {
        let (mut pos, mut neg) = (false, false);
        for k in p.facets_at(v) {
            let s = p.facets()[k].normal.to_point().dot(&dp);
            pos |= s.is_positive();
            neg |= s.is_negative();
        }
        pos && neg
    })
}

/// Largest `lambda >= 0` such that `lambda * [0, d]` is a Minkowski summand of `P`.
///
/// `d` is taken as its primitive integer vector. Candidates are the projections
/// `<v_i - v_j, d> / <d, d>` of vertex differences, bounded by the shortest edge
/// parallel to `d`. The valid lengths form an interval `[0, lambda_max]`; the
/// search assumes this, then re-checks the pass/fail pattern and falls back to
/// a full scan of the candidates and their midpoints if the pattern breaks.
pub fn segment_summand_max(p: &VPolytope, d: &Direction) -> Result<Scalar> {
    require_3d(p)?;
    if d.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: d.dim() });
    }
    let dp = d.to_point();
    let dd = dp.norm_sq();
    let line = d.line_representative();

    let mut bound: Option<Scalar> = None;
    for (i, j) in p.edges() {
        let e = &p.vertices()[j] - &p.vertices()[i];
        if Direction::from_point(&e)?.line_representative() == line {
            let len = abs(&e.dot(&dp)) / &dd;
            bound = Some(match bound {
                Some(b) if b <= len => b,
                _ => len,
            });
        }
    }
    let Some(bound) = bound else { return Ok(int(0)) };
    if p.is_full_dim() && has_split_vertex(p, d) {
        return Ok(int(0));
    }

    let proj: Vec<Scalar> = p.vertices().iter().map(|v| v.dot(&dp) / &dd).collect();
    let mut cands = BTreeSet::new();
    for a in &proj {
        for b in &proj {
            let l = a - b;
            if l.is_positive() && l <= bound {
                cands.insert(l);
            }
        }
    }
    let cands: Vec<Scalar> = cands.into_iter().collect();
    let passes = |l: &Scalar| is_summand(&scaled_segment(d, &int(0), l), p);

    // Binary search for the end of the passing prefix.
    let (mut lo, mut hi) = (0usize, cands.len());
    while lo < hi {
        let mid = (lo + hi) / 2;
        if passes(&cands[mid])? {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    let top = lo; // number of passing candidates under the interval assumption
    let mut consistent = top == cands.len() || !passes(&cands[top])?;
    if consistent && top > 0 {
        let step = (top / 8).max(1);
        for k in (0..top).step_by(step).chain(std::iter::once(top - 1)) {
            if !passes(&cands[k])? {
                consistent = false;
                break;
            }
        }
    }
    if consistent {
        return Ok(if top == 0 { int(0) } else { cands[top - 1].clone() });
    }
    exhaustive_scan(&cands, passes)
}

fn exhaustive_scan(cands: &[Scalar], passes: impl Fn(&Scalar) -> Result<bool>) -> Result<Scalar> {
    let mut grid = Vec::with_capacity(2 * cands.len());
    let mut prev = int(0);
    for c in cands {
        grid.push((&prev + c) / int(2));
        grid.push(c.clone());
        prev = c.clone();
    }
    let mut best = int(0);
    for l in grid {
        if !passes(&l)? {
            break;
        }
        best = l;
    }
    Ok(best)
}

/// Per-direction maxima `(d, lambda_d)` over the distinct edge lines of `P`,
/// keeping only positive lengths.
pub fn kernel_generators(p: &VPolytope) -> Result<Vec<(Direction, Scalar)>> {
    require_3d(p)?;
    let lines: BTreeSet<Direction> = p.edge_directions().into_iter().collect();
    let lines: Vec<Direction> = lines.into_iter().collect();
    let lambdas: Vec<Scalar> = lines
        .par_iter()
        .map(|d| segment_summand_max(p, d))
        .collect::<Result<_>>()?;
    Ok(lines.into_iter().zip(lambdas).filter(|(_, l)| l.is_positive()).collect())
}

/// The inclusion-maximal zonotope summand of `P`, centered at the origin.
///
/// Assembled from the per-direction maximal segment summands. Each partial sum
/// is checked to remain a summand, and a failure is reported as a theory
/// violation.
pub fn zonotope_kernel(p: &VPolytope) -> Result<VPolytope> {
    let mut z = VPolytope::origin(3);
    for (d, l) in kernel_generators(p)? {
        let half = &l / int(2);
        z = z.minkowski_sum(&scaled_segment(&d, &-&half, &half))?;
        if !is_summand(&z, p)? {
            return Err(Error::TheoryViolation(format!(
                "maximal segment summands fail to combine at direction {d:?}"
            )));
        }
    }
    Ok(z)
}

/// One admissibility condition and the witnesses that break it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl Condition {
    fn from(violations: Vec<Violation>) -> Self {
        Condition { passed: violations.is_empty(), violations }
    }
}

/// Body indices are zero-based positions in the checked prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NonTriangularFacet { body: usize, normal: Direction, vertices: usize },
    LowDimensional { body: usize, dim: usize },
    RepeatedEdgeDirection { first: usize, second: usize, direction: Direction },
    NontrivialSupportSet { body: usize, normal: Direction, other: usize, dim: usize },
    DegenerateEdgeTriple { bodies: [usize; 3], directions: [Direction; 3] },
}

/// Admissibility of a finite prefix.
///
/// The pair and triple conditions of an infinite sequence can only be checked
/// on the prefix; a pass here says nothing about later terms.
#[derive(Debug, Clone, PartialEq)]
pub struct AdmissibilityReport {
    pub prefix_len: usize,
    /// Every facet of every body is a triangle.
    pub triangular_facets: Condition,
    /// Every body is 3-dimensional.
    pub full_dimensional: Condition,
    /// No edge direction repeats, within a body or across bodies.
    pub distinct_edge_directions: Condition,
    /// A facet normal of one body exposes a vertex of every other body.
    pub trivial_support_sets: Condition,
    /// Edges from three distinct bodies are linearly independent.
    pub edge_triples_span: Condition,
    /// Enclosure of the sum of diameters of the prefix.
    pub diameter_sum: Interval,
    pub bounded: bool,
}

impl AdmissibilityReport {
    pub fn passed(&self) -> bool {
        self.conditions().iter().all(|(_, c)| c.passed) && self.bounded
    }

    pub fn conditions(&self) -> [(&'static str, &Condition); 5] {
        [
            ("triangular_facets", &self.triangular_facets),
            ("full_dimensional", &self.full_dimensional),
            ("distinct_edge_directions", &self.distinct_edge_directions),
            ("trivial_support_sets", &self.trivial_support_sets),
            ("edge_triples_span", &self.edge_triples_span),
        ]
    }
}

pub fn admissibility_check(seq: &[&VPolytope]) -> Result<AdmissibilityReport> {
    if seq.is_empty() {
        return Err(Error::Empty("sequence"));
    }
    for p in seq {
        require_3d(p)?;
    }
    let m = seq.len();

    let mut tri = Vec::new();
    let mut low = Vec::new();
    for (i, p) in seq.iter().enumerate() {
        if !p.is_full_dim() {
            low.push(Violation::LowDimensional { body: i, dim: p.dim() });
        }
        for f in p.facets() {
            if f.vertices.len() != 3 {
                tri.push(Violation::NonTriangularFacet {
                    body: i,
                    normal: f.normal.clone(),
                    vertices: f.vertices.len(),
                });
            }
        }
    }

    let lines: Vec<Vec<Direction>> = seq.iter().map(|p| p.edge_directions()).collect();
    let mut rep = Vec::new();
    for i in 0..m {
        let mut seen = BTreeSet::new();
        for d in &lines[i] {
            if !seen.insert(d.clone()) {
                rep.push(Violation::RepeatedEdgeDirection { first: i, second: i, direction: d.clone() });
            }
        }
        for j in i + 1..m {
            let other: BTreeSet<&Direction> = lines[j].iter().collect();
            for d in seen.iter().filter(|d| other.contains(d)) {
                rep.push(Violation::RepeatedEdgeDirection { first: i, second: j, direction: d.clone() });
            }
        }
    }

    let mut triv = Vec::new();
    for (i, p) in seq.iter().enumerate() {
        for f in p.facets() {
            for (j, q) in seq.iter().enumerate() {
                if j != i {
                    let idx = q.maximizers(&f.normal);
                    if idx.len() > 1 {
                        triv.push(Violation::NontrivialSupportSet {
                            body: i,
                            normal: f.normal.clone(),
                            other: j,
                            dim: q.sub_polytope(&idx).dim(),
                        });
                    }
                }
            }
        }
    }

    let mut span = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                for e in &lines[a] {
                    for f in &lines[b] {
                        for g in &lines[c] {
                            let rows = vec![e.components().to_vec(), f.components().to_vec(), g.components().to_vec()];
                            if int_det(&rows).is_zero() {
                                span.push(Violation::DegenerateEdgeTriple {
                                    bodies: [a, b, c],
                                    directions: [e.clone(), f.clone(), g.clone()],
                                });
                            }
                        }
                    }
                }
            }
        }
    }

    let diameter_sum = Interval::sum(seq.iter().map(|p| Interval::from_scalar(&diameter_sq(p)).sqrt()));
    Ok(AdmissibilityReport {
        prefix_len: m,
        triangular_facets: Condition::from(tri),
        full_dimensional: Condition::from(low),
        distinct_edge_directions: Condition::from(rep),
        trivial_support_sets: Condition::from(triv),
        edge_triples_span: Condition::from(span),
        bounded: diameter_sum.hi.is_finite(),
        diameter_sum,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FacetKind {
    Triangle,
    Parallelogram,
    Other,
}

impl FacetKind {
    pub fn name(self) -> &'static str {
        match self {
            FacetKind::Triangle => "triangle",
            FacetKind::Parallelogram => "parallelogram",
            FacetKind::Other => "other",
        }
    }
}

/// One facet of a partial sum with the summands whose support set in that
/// normal direction is not a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetRecord {
    pub normal: Direction,
    pub kind: FacetKind,
    pub vertices: usize,
    pub sources: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceCensus {
    pub upto: usize,
    pub triangles: usize,
    pub parallelograms: usize,
    pub other: usize,
    pub facets: Vec<FacetRecord>,
}

fn is_translate(a: &VPolytope, b: &VPolytope) -> bool {
    if a.num_vertices() != b.num_vertices() {
        return false;
    }
    let t = &b.vertices()[0] - &a.vertices()[0];
    a.vertices().iter().zip(b.vertices()).all(|(x, y)| &(x + &t) == y)
}

impl FaceCensus {
    /// Classifies the facets of `sum(bodies)` without any admissibility check.
    ///
    /// A triangle must be a translate of the support set of exactly one body,
    /// a parallelogram the translate of the sum of two edges from exactly two
    /// bodies. Anything else, including ambiguous provenance, is `Other`.
    pub fn compute(bodies: &[&VPolytope]) -> Result<Self> {
        if bodies.is_empty() {
            return Err(Error::Empty("sequence"));
        }
        let n = bodies[0].ambient_dim();
        let k = VPolytope::sum_all(n, bodies.iter().copied())?;
        let facets: Vec<FacetRecord> = k
            .facets()
            .par_iter()
            .map(|f| {
                let face = k.sub_polytope(&f.vertices);
                let parts: Vec<(usize, VPolytope)> = bodies
                    .iter()
                    .enumerate()
                    .map(|(j, p)| (j, p.support_set(&f.normal)))
                    .filter(|(_, s)| s.dim() > 0)
                    .collect();
                let kind = match (f.vertices.len(), parts.as_slice()) {
                    (3, [(_, s)]) if s.dim() == 2 && is_translate(s, &face) => FacetKind::Triangle,
                    (4, [(_, e), (_, g)]) if e.dim() == 1 && g.dim() == 1 => {
                        match e.minkowski_sum(g) {
                            Ok(s) if is_translate(&s, &face) => FacetKind::Parallelogram,
                            _ => FacetKind::Other,
                        }
                    }
                    _ => FacetKind::Other,
                };
                FacetRecord {
                    normal: f.normal.clone(),
                    kind,
                    vertices: f.vertices.len(),
                    sources: parts.into_iter().map(|(j, _)| j).collect(),
                }
            })
            .collect();
        let count = |kind| facets.iter().filter(|r| r.kind == kind).count();
        Ok(FaceCensus {
            upto: bodies.len(),
            triangles: count(FacetKind::Triangle),
            parallelograms: count(FacetKind::Parallelogram),
            other: count(FacetKind::Other),
            facets,
        })
    }
}

/// Census of `P_1 + ... + P_upto` for an admissible prefix.
///
/// Fails with a precondition error if the prefix is not admissible and with a
/// theory violation if an admissible prefix still produces an `Other` facet.
pub fn partial_sum_census(seq: &[&VPolytope], upto: usize) -> Result<FaceCensus> {
    if upto == 0 || upto > seq.len() {
        return Err(Error::InvalidArgument(format!("upto = {upto} outside 1..={}", seq.len())));
    }
    let prefix = &seq[..upto];
    let report = admissibility_check(prefix)?;
    if !report.passed() {
        let failed: Vec<&str> = report.conditions().iter().filter(|(_, c)| !c.passed).map(|(n, _)| *n).collect();
        return Err(Error::Precondition(format!("prefix is not admissible: {}", failed.join(", "))));
    }
    let census = FaceCensus::compute(prefix)?;
    if census.other > 0 {
        return Err(Error::TheoryViolation(format!(
            "{} facets of an admissible partial sum are neither sourced triangles nor parallelograms",
            census.other
        )));
    }
    Ok(census)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthEntry {
    /// One-based position in the sequence.
    pub index: usize,
    pub vertices: usize,
    /// `P_i` has at least `i` vertices.
    pub meets_index_bound: bool,
    /// `P_i` is a Minkowski summand of the partial sum.
    pub summand_of_partial_sum: bool,
    /// Any polytope with `P_i` as a scaled summand has at least this many
    /// vertices, so it is not a k-tope for smaller k.
    pub min_atom_vertices: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexGrowthReport {
    pub entries: Vec<GrowthEntry>,
    pub admissible: bool,
    pub partial_sum_vertices: usize,
    /// Smallest k for which a k-tope could carry every `P_i` of the prefix.
    pub required_k: usize,
}

/// Vertex counts along the prefix and the k-tope bound each term forces on
/// any atom containing it as a scaled summand.
pub fn ktope_vertex_growth(seq: &[&VPolytope], upto: usize) -> Result<VertexGrowthReport> {
    if upto == 0 || upto > seq.len() {
        return Err(Error::InvalidArgument(format!("upto = {upto} outside 1..={}", seq.len())));
    }
    let prefix = &seq[..upto];
    let admissible = admissibility_check(prefix)?.passed();
    let k = VPolytope::sum_all(3, prefix.iter().copied())?;
    let entries: Vec<GrowthEntry> = prefix
        .par_iter()
        .enumerate()
        .map(|(i, p)| {
            Ok(GrowthEntry {
                index: i + 1,
                vertices: p.num_vertices(),
                meets_index_bound: p.num_vertices() > i,
                summand_of_partial_sum: is_summand(p, &k)?,
                min_atom_vertices: p.num_vertices(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(VertexGrowthReport {
        required_k: entries.iter().map(|e| e.min_atom_vertices).max().unwrap_or(1),
        partial_sum_vertices: k.num_vertices(),
        admissible,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;
    use crate::scalar::rat;

    fn tetra() -> VPolytope {
        VPolytope::from_int_points(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap()
    }

    fn seq4() -> Vec<VPolytope> {
        let raw: [[[i64; 3]; 4]; 4] = [
            [[0, 0, 0], [97, 13, 21], [11, 89, 37], [23, 31, 103]],
            [[0, 0, 0], [71, -29, 43], [-37, 83, 17], [53, 19, -79]],
            [[5, 17, 0], [-61, 41, 67], [73, -11, 59], [29, 101, -47]],
            [[0, 7, 3], [109, 47, -13], [-19, -59, 71], [41, 79, 113]],
        ];
        raw.iter()
            .map(|t| VPolytope::from_int_points(&[&t[0], &t[1], &t[2], &t[3]]).unwrap())
            .collect()
    }

    #[test]
    fn segment_maxima() {
        let cube = VPolytope::cube(3, int(0), int(1)).unwrap();
        assert_eq!(segment_summand_max(&cube, &Direction::unit(3, 0)).unwrap(), int(1));
        let t = tetra();
        for d in t.edge_directions() {
            assert_eq!(segment_summand_max(&t, &d).unwrap(), int(0));
        }
        let long = t.minkowski_sum(&scaled_segment(&Direction::from_ints(&[1, 1, 1]).unwrap(), &int(0), &int(2))).unwrap();
        assert_eq!(segment_summand_max(&long, &Direction::from_ints(&[1, 1, 1]).unwrap()).unwrap(), int(2));
        let box_ = VPolytope::cube(3, int(0), rat(3, 2)).unwrap();
        assert_eq!(segment_summand_max(&box_, &Direction::unit(3, 2)).unwrap(), rat(3, 2));
    }

    #[test]
    fn tetra_plus_axis_segment() {
        // e1 is an edge direction of the standard simplex, so use a skew tetrahedron.
        let t = VPolytope::from_int_points(&[&[0, 0, 0], &[1, 2, 0], &[0, 1, 3], &[2, 0, 1]]).unwrap();
        let e1 = Direction::unit(3, 0);
        assert!(!t.edge_directions().contains(&e1));
        let p = t.minkowski_sum(&scaled_segment(&e1, &int(0), &int(2))).unwrap();
        assert_eq!(segment_summand_max(&p, &e1).unwrap(), int(2));
        let q = t.minkowski_sum(&scaled_segment(&e1, &int(0), &int(1))).unwrap();
        assert_eq!(zonotope_kernel(&q).unwrap(), scaled_segment(&e1, &rat(-1, 2), &rat(1, 2)));
    }

    #[test]
    fn kernels() {
        let cube = VPolytope::cube(3, int(0), int(1)).unwrap();
        assert_eq!(zonotope_kernel(&cube).unwrap(), VPolytope::cube(3, rat(-1, 2), rat(1, 2)).unwrap());
        assert_eq!(zonotope_kernel(&tetra()).unwrap(), VPolytope::origin(3));
    }

    #[test]
    fn kernel_of_a_translated_zonotope_is_centered() {
        let gens = [[1, 0, 0], [0, 2, 1], [1, -1, 3], [2, 1, -1]];
        let mut z = VPolytope::singleton(Point::from_ints(&[3, -1, 2]));
        let mut centered = VPolytope::origin(3);
        for (k, g) in gens.iter().enumerate() {
            let d = Direction::from_ints(g).unwrap();
            let l = rat(k as i64 + 1, 2);
            z = z.minkowski_sum(&scaled_segment(&d, &int(0), &l)).unwrap();
            centered = centered.minkowski_sum(&scaled_segment(&d, &(-&l / int(2)), &(&l / int(2)))).unwrap();
        }
        assert_eq!(zonotope_kernel(&z).unwrap(), centered);
    }

    #[test]
    fn admissible_fixture_passes() {
        let s = seq4();
        let refs: Vec<&VPolytope> = s.iter().collect();
        let r = admissibility_check(&refs).unwrap();
        assert!(r.passed(), "{r:#?}");
        assert!(r.diameter_sum.lo > 0.0);
    }

    #[test]
    fn translates_and_cubes_are_not_admissible() {
        let t = tetra();
        let t2 = t.translate(&Point::from_ints(&[5, 0, 0])).unwrap();
        let r = admissibility_check(&[&t, &t2]).unwrap();
        assert!(!r.distinct_edge_directions.passed);
        assert!(!r.passed());

        let s = seq4();
        let cube = VPolytope::cube(3, int(0), int(1)).unwrap();
        let r = admissibility_check(&[&s[0], &cube]).unwrap();
        assert!(!r.triangular_facets.passed);
        assert!(matches!(r.triangular_facets.violations[0], Violation::NonTriangularFacet { body: 1, vertices: 4, .. }));
    }

    #[test]
    fn census_of_admissible_prefixes() {
        let s = seq4();
        let refs: Vec<&VPolytope> = s.iter().collect();
        let c1 = partial_sum_census(&refs, 1).unwrap();
        assert_eq!((c1.triangles, c1.parallelograms, c1.other), (4, 0, 0));
        assert!(c1.facets.iter().all(|f| f.sources == vec![0]));
        for m in 2..=4 {
            let c = partial_sum_census(&refs, m).unwrap();
            assert_eq!(c.other, 0);
            assert_eq!(c.triangles, 4 * m, "each facet of each body survives once");
            assert!(c.parallelograms > 0);
            let k = VPolytope::sum_all(3, refs[..m].iter().copied()).unwrap();
            assert_eq!(zonotope_kernel(&k).unwrap(), VPolytope::origin(3));
        }
    }

    #[test]
    fn census_negative_control() {
        let t = tetra();
        let t2 = t.scale(&int(2)).unwrap();
        let c = FaceCensus::compute(&[&t, &t2]).unwrap();
        assert!(c.other > 0);
        assert!(matches!(partial_sum_census(&[&t, &t2], 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn vertex_growth() {
        let s = seq4();
        let refs: Vec<&VPolytope> = s.iter().collect();
        let r = ktope_vertex_growth(&refs, 4).unwrap();
        assert!(r.admissible);
        assert!(r.entries.iter().all(|e| e.summand_of_partial_sum && e.meets_index_bound));
        assert_eq!(r.required_k, 4);

        let segs: Vec<VPolytope> = (0..3).map(|i| scaled_segment(&Direction::unit(3, i), &int(0), &int(1))).collect();
        let refs: Vec<&VPolytope> = segs.iter().collect();
        let r = ktope_vertex_growth(&refs, 3).unwrap();
        assert!(!r.admissible);
        assert_eq!(r.required_k, 2);
        assert_eq!(r.partial_sum_vertices, 8);
    }
}
