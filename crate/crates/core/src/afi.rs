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

//! The Alexandrov-Fenchel inequality and its equality cases.
//!
//! For a supercritical tuple `C` the equality `V(K,L,C)^2 = V(K,K,C) V(L,L,C)`
//! with `V(K,L,C) > 0` holds iff `h_K = h_{aL+x}` on the support of
//! `S(B^n, C, .)`, iff `S(K,C,.) = a S(L,C,.)`. Both criteria are decided
//! exactly here; the support route is available for `n = 3` and `C = (C)`.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::area_measure::{ball_support_arcs, mixed_area_diff, mixed_area_measure, Arc, ArcSupport};
use crate::error::{Error, Result};
use crate::geometry::{Point, SupportDiff, VPolytope};
use crate::linalg::{remove_components, solve_affine};
use crate::mixed_volume::{mixed_volume, mixed_volume_diff};
use crate::scalar::{int, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `V(K,L,C) = 0`.
    Degenerate,
    Positive,
}

/// A homothety `K = a L + x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub a: Scalar,
    pub x: Point,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AFIReport {
    pub v_kl: Scalar,
    pub v_kk: Scalar,
    pub v_ll: Scalar,
    pub discriminant: Scalar,
    pub equality: bool,
    pub branch: Branch,
    pub witness: Option<Witness>,
}

fn tuple<'a>(k: &'a VPolytope, l: &'a VPolytope, cs: &[&'a VPolytope]) -> Vec<&'a VPolytope> {
    let mut t = vec![k, l];
    t.extend_from_slice(cs);
    t
}

/// Exact AFI discriminant. A witness is attached in the equality case when one
/// can be certified: from the support route for a single 3-dimensional body in
/// R^3, or from a direct homothety in the degenerate branch.
pub fn afi_check(k: &VPolytope, l: &VPolytope, cs: &[&VPolytope]) -> Result<AFIReport> {
    let v_kl = mixed_volume(&tuple(k, l, cs))?;
    let v_kk = mixed_volume(&tuple(k, k, cs))?;
    let v_ll = mixed_volume(&tuple(l, l, cs))?;
    let discriminant = &v_kl * &v_kl - &v_kk * &v_ll;
    if discriminant.is_negative() {
        return Err(Error::TheoryViolation(format!("negative AFI discriminant {discriminant}")));
    }
    let equality = discriminant.is_zero();
    let branch = if v_kl.is_zero() { Branch::Degenerate } else { Branch::Positive };
    let witness = match (equality, branch) {
        (false, _) => None,
        (true, Branch::Degenerate) => homothety(k, l),
        (true, Branch::Positive) => {
            let single_body = cs.len() == 1 && k.ambient_dim() == 3 && cs[0].is_full_dim();
            if single_body && v_ll.is_positive() {
                equality_by_support(k, l, cs[0])?
            } else {
                None
            }
        }
    };
    Ok(AFIReport { v_kl, v_kk, v_ll, discriminant, equality, branch, witness })
}

/// `V(f,L,C)^2 - V(f,f,C) V(L,L,C)` for `f = h_{K1} - h_{K2}`.
pub fn gafi_check(k1: &VPolytope, k2: &VPolytope, l: &VPolytope, cs: &[&VPolytope]) -> Result<Scalar> {
    let f = SupportDiff::new(k1.clone(), k2.clone())?;
    let lf = SupportDiff::from(l.clone());
    let cf: Vec<SupportDiff> = cs.iter().map(|c| SupportDiff::from((*c).clone())).collect();
    let with = |a: &SupportDiff, b: &SupportDiff| -> Result<Scalar> {
        let mut args = vec![a, b];
        args.extend(cf.iter());
        mixed_volume_diff(&args)
    };
    let vfl = with(&f, &lf)?;
    Ok(&vfl * &vfl - with(&f, &f)? * with(&lf, &lf)?)
}

/// The measure criterion: `a = V(K,L,C) / V(L,L,C)` if `S(K,C,.) = a S(L,C,.)`.
pub fn equality_by_measure(k: &VPolytope, l: &VPolytope, cs: &[&VPolytope]) -> Result<Option<Scalar>> {
    let v_ll = mixed_volume(&tuple(l, l, cs))?;
    if !v_ll.is_positive() {
        return Err(Error::Precondition("V(L,L,C) = 0".into()));
    }
    let v_kl = mixed_volume(&tuple(k, l, cs))?;
    if v_kl.is_zero() {
        return Err(Error::Precondition("V(K,L,C) = 0: the degenerate branch applies".into()));
    }
    let a = v_kl / v_ll;
    let mut with_k = vec![k];
    with_k.extend_from_slice(cs);
    let mut with_l = vec![l];
    with_l.extend_from_slice(cs);
    let sk = mixed_area_measure(&with_k)?;
    let sl = mixed_area_measure(&with_l)?;
    Ok((sk == sl.scaled(&a)).then_some(a))
}

/// Parameters `s` in `(0, 1)` where the maximizing vertex of `P` over
/// `u(s) = (1-s) z1 + s z2` changes, in increasing order.
fn envelope_breaks(p: &VPolytope, z1: &Point, z2: &Point) -> Vec<Scalar> {
    let lines: Vec<(Scalar, Scalar)> = p
        .vertices()
        .iter()
        .map(|v| {
            let c0 = v.dot(z1);
            let slope = v.dot(z2) - &c0;
            (c0, slope)
        })
        .collect();
    let value = |j: usize, s: &Scalar| &lines[j].0 + s * &lines[j].1;
    let top = |s: &Scalar| -> usize {
        let mut best = 0;
        for j in 1..lines.len() {
            let (vb, vj) = (value(best, s), value(j, s));
            if vj > vb || (vj == vb && lines[j].1 > lines[best].1) {
                best = j;
            }
        }
        best
    };
    let mut out = Vec::new();
    let mut s = Scalar::zero();
    let mut cur = top(&s);
    loop {
        let mut next: Option<Scalar> = None;
        for j in 0..lines.len() {
            if lines[j].1 > lines[cur].1 {
                let t = (&lines[cur].0 - &lines[j].0) / (&lines[j].1 - &lines[cur].1);
                if t > s && next.as_ref().is_none_or(|n| &t < n) {
                    next = Some(t);
                }
            }
        }
        match next {
            Some(t) if t < Scalar::one() => {
                cur = top(&t);
                s = t.clone();
                out.push(t);
            }
            _ => return out,
        }
    }
}

/// A piece of an arc on which both bodies have a single maximizing vertex.
#[derive(Debug, Clone)]
pub struct SubArc {
    pub start: Point,
    pub end: Point,
    pub mid: Point,
    pub vk: Point,
    pub vl: Point,
}

/// Splits every arc at the normal-fan breakpoints of `K` and `L`.
pub fn sub_arcs(arcs: &ArcSupport, k: &VPolytope, l: &VPolytope) -> Vec<SubArc> {
    let mut out = Vec::new();
    for arc in &arcs.arcs {
        out.extend(split_arc(arc, k, l));
    }
    out
}

fn split_arc(arc: &Arc, k: &VPolytope, l: &VPolytope) -> Vec<SubArc> {
    let (z1, z2) = (arc.z1.to_point(), arc.z2.to_point());
    let mut cuts = vec![Scalar::zero(), Scalar::one()];
    cuts.extend(envelope_breaks(k, &z1, &z2));
    cuts.extend(envelope_breaks(l, &z1, &z2));
    cuts.sort();
    cuts.dedup();
    cuts.windows(2)
        .map(|w| {
            let mid_s = (&w[0] + &w[1]) / int(2);
            let mid = arc.point_at(&mid_s);
            let vk = k.vertices()[k.maximizers_point(&mid)[0]].clone();
            let vl = l.vertices()[l.maximizers_point(&mid)[0]].clone();
            SubArc { start: arc.point_at(&w[0]), end: arc.point_at(&w[1]), mid, vk, vl }
        })
        .collect()
}

fn check_support_case(k: &VPolytope, l: &VPolytope, c: &VPolytope) -> Result<()> {
    for b in [k, l, c] {
        if b.ambient_dim() != 3 {
            return Err(Error::UnsupportedDimension(b.ambient_dim()));
        }
    }
    if !c.is_full_dim() {
        return Err(Error::Precondition("C is not 3-dimensional".into()));
    }
    Ok(())
}

/// The support criterion for `n = 3`: finds `(a, x)` with `a > 0` and
/// `h_K = a h_L + <x, .>` on the arcs of `S(B^3, C, .)`, choosing the
/// solution with smallest `|x|`.
pub fn equality_by_support(k: &VPolytope, l: &VPolytope, c: &VPolytope) -> Result<Option<Witness>> {
    check_support_case(k, l, c)?;
    if !mixed_volume(&[k, l, c])?.is_positive() {
        return Err(Error::Precondition("V(K,L,C) = 0".into()));
    }
    if !mixed_volume(&[l, l, c])?.is_positive() {
        // Then the AFI is strict.
        return Ok(None);
    }
    let pieces = sub_arcs(&ball_support_arcs(c)?, k, l);
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for p in &pieces {
        for u in [&p.start, &p.end] {
            let mut row = vec![p.vl.dot(u)];
            row.extend(u.coords().iter().cloned());
            rows.push(row);
            rhs.push(p.vk.dot(u));
        }
    }
    let Some((part, null)) = solve_affine(&rows, &rhs) else {
        return Ok(None);
    };
    if null.iter().any(|v| !v[0].is_zero()) {
        return Err(Error::TheoryViolation("scale undetermined although V(L,L,C) > 0".into()));
    }
    let a = part[0].clone();
    let xs: Vec<Vec<Scalar>> = null.iter().map(|v| v[1..].to_vec()).collect();
    let x = Point(remove_components(&part[1..], &xs));
    if !a.is_positive() {
        return Ok(None);
    }
    let w = Witness { a, x };
    if !verify_on_pieces(k, l, &w, &pieces) {
        return Err(Error::TheoryViolation("support witness failed re-verification".into()));
    }
    Ok(Some(w))
}

fn verify_on_pieces(k: &VPolytope, l: &VPolytope, w: &Witness, pieces: &[SubArc]) -> bool {
    pieces.iter().all(|p| {
        [&p.start, &p.mid, &p.end]
            .iter()
            .all(|u| k.support_value_point(u) == &w.a * l.support_value_point(u) + w.x.dot(u))
    })
}

/// Checks `h_K = a h_L + <x,.>` at `samples` rational points on every arc of `C`.
pub fn verify_witness_on_arcs(k: &VPolytope, l: &VPolytope, c: &VPolytope, w: &Witness, samples: usize) -> Result<bool> {
    let arcs = ball_support_arcs(c)?;
    for arc in &arcs.arcs {
        for t in 0..=samples {
            let u = arc.point_at(&Scalar::new(t.into(), samples.max(1).into()));
            if k.support_value_point(&u) != &w.a * l.support_value_point(&u) + w.x.dot(&u) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearityReport {
    /// `S_{f,C} = 0`, decided from the signed mixed area measure.
    pub measure_zero: bool,
    /// `f` agrees with a linear function on the arcs of `S(B^3, C, .)`.
    pub linear_on_arcs: bool,
    pub x: Option<Point>,
    pub agree: bool,
}

/// Evaluates both sides of "`S_{f,C} = 0` iff `f` is linear on the support of `S(B^3, C, .)`".
pub fn linearity_equivalence(f: &SupportDiff, c: &VPolytope) -> Result<LinearityReport> {
    check_support_case(&f.plus, &f.minus, c)?;
    let cf = SupportDiff::from(c.clone());
    let measure_zero = mixed_area_diff(&[f, &cf])?.is_empty();

    let pieces = sub_arcs(&ball_support_arcs(c)?, &f.plus, &f.minus);
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for p in &pieces {
        for u in [&p.start, &p.end] {
            rows.push(u.coords().to_vec());
            rhs.push(p.vk.dot(u) - p.vl.dot(u));
        }
    }
    let x = solve_affine(&rows, &rhs).map(|(part, null)| Point(remove_components(&part, &null)));
    if let Some(x) = &x {
        let ok = pieces
            .iter()
            .all(|p| [&p.start, &p.mid, &p.end].iter().all(|u| f.eval_point(u) == x.dot(u)));
        if !ok {
            return Err(Error::TheoryViolation("linear witness failed re-verification".into()));
        }
    }
    let linear_on_arcs = x.is_some();
    Ok(LinearityReport { measure_zero, linear_on_arcs, x, agree: measure_zero == linear_on_arcs })
}

/// `K = a L + x` with `a >= 0`, by matching vertices in lexicographic order.
fn homothety_onto(k: &VPolytope, l: &VPolytope) -> Option<Witness> {
    let (kv, lv) = (k.vertices(), l.vertices());
    if k.is_singleton() {
        return Some(Witness { a: Scalar::zero(), x: kv[0].clone() });
    }
    if kv.len() != lv.len() || l.is_singleton() {
        return None;
    }
    let dl = &lv[1] - &lv[0];
    let dk = &kv[1] - &kv[0];
    let c = (0..dl.dim()).find(|&i| !dl[i].is_zero())?;
    let a = &dk[c] / &dl[c];
    if !a.is_positive() {
        return None;
    }
    let x = &kv[0] - &lv[0].scale(&a);
    kv.iter().zip(lv).all(|(p, q)| *p == &q.scale(&a) + &x).then_some(Witness { a, x })
}

/// A homothety in either direction: `K = aL + x`, or else `L = aK + x` reported with `a` inverted when possible.
pub fn homothety(k: &VPolytope, l: &VPolytope) -> Option<Witness> {
    homothety_onto(k, l).or_else(|| {
        homothety_onto(l, k).map(|w| {
            if w.a.is_zero() {
                w
            } else {
                // L = aK + x  =>  K = (1/a) L - x/a.
                let inv = w.a.recip();
                Witness { x: (-&w.x).scale(&inv), a: inv }
            }
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegenerateReport {
    pub discriminant_zero: bool,
    pub homothetic: bool,
    pub witness: Option<Witness>,
    /// `true` when the witness maps `L` onto `K`; `false` when only `L = 0 K + x` holds.
    pub k_from_l: bool,
}

/// The degenerate branch `V(K,L,C) = 0`: equality holds and `K`, `L` are homothetic.
pub fn degenerate_branch(k: &VPolytope, l: &VPolytope, cs: &[&VPolytope]) -> Result<DegenerateReport> {
    let report = afi_check(k, l, cs)?;
    if report.branch != Branch::Degenerate {
        return Err(Error::Precondition("V(K,L,C) > 0".into()));
    }
    let kl = homothety_onto(k, l);
    let k_from_l = kl.is_some();
    let witness = kl.or_else(|| homothety_onto(l, k));
    Ok(DegenerateReport { discriminant_zero: report.equality, homothetic: witness.is_some(), witness, k_from_l })
}

/// `P ∩ {<., z> <= b}` for a rational normal `z`; `None` if empty.
pub fn clip(p: &VPolytope, z: &Point, b: &Scalar) -> Result<Option<VPolytope>> {
    let vs = p.vertices();
    let vals: Vec<Scalar> = vs.iter().map(|v| v.dot(z)).collect();
    let mut pts: Vec<Point> = (0..vs.len()).filter(|&i| &vals[i] <= b).map(|i| vs[i].clone()).collect();
    for (i, j) in p.edges() {
        let (vi, vj) = (&vals[i], &vals[j]);
        if (vi < b && vj > b) || (vi > b && vj < b) {
            let t = (b - vi) / (vj - vi);
            pts.push(&vs[i] + &(&vs[j] - &vs[i]).scale(&t));
        }
    }
    if pts.is_empty() {
        return Ok(None);
    }
    Ok(Some(VPolytope::new(pts)?))
}

/// The cube `[-1,1]^3` with every corner cut off at depth `d` along the edges.
pub fn truncated_cube(d: &Scalar) -> Result<VPolytope> {
    let mut p = VPolytope::cube(3, int(-1), int(1))?;
    for signs in 0..8 {
        let z = Point((0..3).map(|i| if signs >> i & 1 == 1 { int(-1) } else { int(1) }).collect());
        p = clip(&p, &z, &(int(3) - d))?.expect("shallow cuts keep the body");
    }
    Ok(p)
}

/// Cuts off vertex `v` of a full-dimensional `P` by a plane through the middle
/// of the gap between `v` and the next vertex in the direction of the sum of
/// the facet normals at `v`.
pub fn cut_vertex(p: &VPolytope, v: usize) -> Result<VPolytope> {
    if !p.is_full_dim() {
        return Err(Error::Precondition("cut_vertex needs a full-dimensional body".into()));
    }
    let mut u = Point::zero(p.ambient_dim());
    for k in p.facets_at(v) {
        u = &u + &p.facets()[k].normal.to_point();
    }
    let top = p.vertices()[v].dot(&u);
    let second = p
        .vertices()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != v)
        .map(|(_, w)| w.dot(&u))
        .max()
        .expect("full-dimensional bodies have several vertices");
    let b = (&top + &second) / int(2);
    Ok(clip(p, &u, &b)?.expect("the cut keeps all other vertices"))
}
