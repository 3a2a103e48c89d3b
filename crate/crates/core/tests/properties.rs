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


//! Seeded property tests for the invariants of each module.

use afel::afi::{afi_check, cut_vertex, equality_by_measure, equality_by_support, verify_witness_on_arcs};
use afel::appendix::{
    admissibility_check, kernel_generators, partial_sum_census, segment_summand_max, zonotope_kernel, FacetKind,
};
use afel::area_measure::mixed_area_measure;
use afel::criticality::classify;
use afel::geometry::{
    dim_pspan, erosion, is_summand, mean_width_3d, minkowski_difference, steiner_point_3d, Direction, Point,
    VPolytope,
};
use afel::interval::Interval;
use afel::io;
use afel::mixed_volume::{mixed_volume, mixed_volume_interpolated, mixed_volume_via_measure, volume};
use afel::polyoid::{body_of_measure, diam_sum_check, mpos_sample, pspan_containment, small_directions, BodyMeasure};
use afel::random::{
    admissible_tetrahedra, random_body_of_dim, random_polytope, random_zonotope, rational, rational_point, rng,
};
use afel::scalar::{int, rat, to_f64, Scalar};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

fn body(r: &mut ChaCha8Rng) -> VPolytope {
    random_polytope(r, 3, 5, 3, 2).unwrap()
}

/// A random 3D tuple mixing points, segments, polygons and bodies.
fn mixed_body(r: &mut ChaCha8Rng) -> VPolytope {
    body_of_random_dim(r, 3, 0, 3)
}

fn body_of_random_dim(r: &mut ChaCha8Rng, n: usize, lo: usize, range: i64) -> VPolytope {
    let d = r.gen_range(lo..=n);
    random_body_of_dim(r, n, d, range).unwrap()
}

fn sample_directions(r: &mut ChaCha8Rng, n: usize, count: usize) -> Vec<Direction> {
    let all = small_directions(n, 3);
    (0..count).map(|_| all.choose(r).unwrap().clone()).collect()
}

fn segment(d: &[i64], len: Scalar) -> VPolytope {
    let p = Point::from_ints(d).scale(&len);
    VPolytope::segment(Point::zero(d.len()), p).unwrap()
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn support_is_additive(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (p, q) = (body(&mut r), body(&mut r));
        let s = p.minkowski_sum(&q).unwrap();
        for z in sample_directions(&mut r, 3, 100) {
            prop_assert_eq!(s.support_value(&z), p.support_value(&z) + q.support_value(&z));
        }
    }

    #[test]
    fn hull_is_idempotent(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=4);
        let p = random_polytope(&mut r, n, n + 4, 3, 3).unwrap();
        let again = VPolytope::new(p.vertices().to_vec()).unwrap();
        prop_assert_eq!(again.facets().len(), p.facets().len());
        prop_assert_eq!(again, p);
    }

    #[test]
    fn facets_are_tight_exactly_on_their_vertices(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=4);
        let p = random_polytope(&mut r, n, n + 4, 3, 3).unwrap();
        for f in p.facets() {
            for (i, v) in p.vertices().iter().enumerate() {
                let h = v.dot_dir(&f.normal);
                prop_assert!(h <= f.offset);
                prop_assert_eq!(h == f.offset, f.vertices.contains(&i));
            }
        }
    }

    #[test]
    fn pspan_dimension_is_monotone(seed in any::<u64>()) {
        let mut r = rng(seed);
        let bodies: Vec<VPolytope> = (0..4).map(|_| mixed_body(&mut r)).collect();
        let refs: Vec<&VPolytope> = bodies.iter().collect();
        prop_assert_eq!(dim_pspan(&refs[..1]).unwrap(), bodies[0].dim());
        for k in 1..refs.len() {
            prop_assert!(dim_pspan(&refs[..k]).unwrap() <= dim_pspan(&refs[..k + 1]).unwrap());
        }
    }

    #[test]
    fn scaled_summands_stay_summands(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (q, rest) = (random_polytope(&mut r, 3, 4, 2, 1).unwrap(), random_polytope(&mut r, 3, 4, 2, 1).unwrap());
        let p = q.minkowski_sum(&rest).unwrap();
        prop_assert!(is_summand(&q, &p).unwrap());
        for lambda in [int(0), rat(1, 3), rat(1, 2), int(1)] {
            prop_assert!(is_summand(&q.scale(&lambda).unwrap(), &p).unwrap());
        }
    }

    #[test]
    fn sum_of_segment_summands_is_a_summand(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (z, gens) = random_zonotope(&mut r, 3, 3, 3).unwrap();
        let p = z.minkowski_sum(&random_polytope(&mut r, 3, 4, 3, 1).unwrap()).unwrap();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                let e = VPolytope::segment(Point::zero(3), gens[i].clone()).unwrap();
                let f = VPolytope::segment(Point::zero(3), gens[j].clone()).unwrap();
                prop_assert!(is_summand(&e, &p).unwrap() && is_summand(&f, &p).unwrap());
                prop_assert!(is_summand(&e.minkowski_sum(&f).unwrap(), &p).unwrap());
            }
        }
    }

    #[test]
    fn minkowski_difference_matches_erosion(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=3);
        let q = random_polytope(&mut r, n, n + 1, 2, 1).unwrap();
        let p = if r.gen_bool(0.5) {
            q.minkowski_sum(&random_polytope(&mut r, n, n + 2, 2, 1).unwrap()).unwrap()
        } else {
            random_polytope(&mut r, n, n + 3, 4, 1).unwrap()
        };
        let fast = minkowski_difference(&p, &q).unwrap();
        if let Some(x) = &fast {
            prop_assert_eq!(&q.minkowski_sum(x).unwrap(), &p);
        }
        let slow = erosion(&p, &q).unwrap();
        match (&fast, &slow) {
            (Some(x), Some(y)) => prop_assert_eq!(x, y),
            (None, Some(y)) => prop_assert_ne!(&q.minkowski_sum(y).unwrap(), &p),
            _ => {}
        }
    }
}

proptest! {
    #![proptest_config(config(16))]

    #[test]
    fn mixed_volume_routes_agree(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=3);
        let bodies: Vec<VPolytope> = (0..n).map(|_| random_polytope(&mut r, n, n + 2, 3, 3).unwrap()).collect();
        let refs: Vec<&VPolytope> = bodies.iter().collect();
        let v = mixed_volume(&refs).unwrap();
        prop_assert!(!v.is_negative());
        prop_assert_eq!(&mixed_volume_interpolated(&refs).unwrap(), &v);
        prop_assert_eq!(&mixed_volume_via_measure(&refs).unwrap(), &v);
    }

    #[test]
    fn mixed_volume_is_symmetric(seed in any::<u64>()) {
        let mut r = rng(seed);
        let bodies: Vec<VPolytope> = (0..3).map(|_| mixed_body(&mut r)).collect();
        let v = mixed_volume(&[&bodies[0], &bodies[1], &bodies[2]]).unwrap();
        for perm in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            prop_assert_eq!(&mixed_volume(&[&bodies[perm[0]], &bodies[perm[1]], &bodies[perm[2]]]).unwrap(), &v);
        }
    }

    #[test]
    fn mixed_volume_is_multilinear_and_translation_invariant(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (k, k2, l, m) = (body(&mut r), body(&mut r), body(&mut r), mixed_body(&mut r));
        let alpha = rational(&mut r, 3, 3).abs();
        let beta = rational(&mut r, 3, 3).abs();
        let comb = k.scale(&alpha).unwrap().minkowski_sum(&k2.scale(&beta).unwrap()).unwrap();
        let lhs = mixed_volume(&[&comb, &l, &m]).unwrap();
        let rhs = &alpha * mixed_volume(&[&k, &l, &m]).unwrap() + &beta * mixed_volume(&[&k2, &l, &m]).unwrap();
        prop_assert_eq!(lhs, rhs);
        let x = rational_point(&mut r, 3, 3, 3);
        prop_assert_eq!(
            mixed_volume(&[&k, &l.translate(&x).unwrap(), &m]).unwrap(),
            mixed_volume(&[&k, &l, &m]).unwrap()
        );
    }

    #[test]
    fn positivity_iff_semicritical(seed in any::<u64>()) {
        let mut r = rng(seed);
        let bodies: Vec<VPolytope> = (0..3).map(|_| mixed_body(&mut r)).collect();
        let refs: Vec<&VPolytope> = bodies.iter().collect();
        let class = classify(&refs).unwrap().class;
        prop_assert_eq!(class.is_semicritical(), mixed_volume(&refs).unwrap().is_positive());
        if class.is_supercritical() { prop_assert!(class.is_critical()); }
        if class.is_critical() { prop_assert!(class.is_semicritical()); }
    }

    #[test]
    fn criticality_is_permutation_and_subtuple_monotone(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut bodies: Vec<VPolytope> = (0..3).map(|_| mixed_body(&mut r)).collect();
        let class = classify(&bodies.iter().collect::<Vec<_>>()).unwrap().class;
        for cut in 1..bodies.len() {
            let sub: Vec<&VPolytope> = bodies[..cut].iter().collect();
            prop_assert!(classify(&sub).unwrap().class >= class);
        }
        // Replacing a body by a superset never lowers the class.
        let bigger = bodies[0].minkowski_sum(&mixed_body(&mut r)).unwrap();
        let mut sup = bodies.clone();
        sup[0] = bigger;
        prop_assert!(classify(&sup.iter().collect::<Vec<_>>()).unwrap().class >= class);
        bodies.shuffle(&mut r);
        prop_assert_eq!(classify(&bodies.iter().collect::<Vec<_>>()).unwrap().class, class);
    }

    #[test]
    fn area_measure_integrates_to_mixed_volume(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b, k) = (mixed_body(&mut r), mixed_body(&mut r), mixed_body(&mut r));
        let s = mixed_area_measure(&[&a, &b]).unwrap();
        prop_assert_eq!(s.integrate(&k) / int(3), mixed_volume(&[&a, &b, &k]).unwrap());
        prop_assert_eq!(&s, &mixed_area_measure(&[&b, &a]).unwrap());
        let x = rational(&mut r, 2, 3).abs();
        let c = body(&mut r);
        let comb = a.minkowski_sum(&c.scale(&x).unwrap()).unwrap();
        let expected = s.plus(&mixed_area_measure(&[&c, &b]).unwrap().scaled(&x));
        prop_assert_eq!(mixed_area_measure(&[&comb, &b]).unwrap(), expected);
    }

    #[test]
    fn box_area_measure_has_surface_area_mass(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sides: Vec<Scalar> = (0..3).map(|_| rational(&mut r, 3, 4).abs() + int(1)).collect();
        let pts: Vec<Point> = (0..8)
            .map(|m| Point::new((0..3).map(|i| if m >> i & 1 == 1 { sides[i].clone() } else { int(0) }).collect()))
            .collect();
        let p = VPolytope::new(pts).unwrap();
        let area = 2.0 * (to_f64(&(&sides[0] * &sides[1])) + to_f64(&(&sides[1] * &sides[2])) + to_f64(&(&sides[0] * &sides[2])));
        let mass = mixed_area_measure(&[&p, &p]).unwrap().total_mass_f64();
        prop_assert!((mass - area).abs() < 1e-9 * area.max(1.0));
    }
}

proptest! {
    #![proptest_config(config(12))]

    #[test]
    fn discriminant_is_nonnegative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (k, l) = (mixed_body(&mut r), mixed_body(&mut r));
        let c = mixed_body(&mut r);
        let rep = afi_check(&k, &l, &[&c]).unwrap();
        prop_assert!(!rep.discriminant.is_negative());
        prop_assert_eq!(rep.equality, rep.discriminant.is_zero());
    }

    #[test]
    fn homothets_give_equality(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (k, c) = (body(&mut r), body(&mut r));
        let x = rational_point(&mut r, 3, 3, 2);
        for a in [rat(1, 3), int(1), rat(7, 2)] {
            let l = k.scale_translate(&a, &x).unwrap();
            prop_assert!(afi_check(&k, &l, &[&c]).unwrap().discriminant.is_zero());
        }
    }

    #[test]
    fn equality_routes_agree_and_witnesses_verify(seed in any::<u64>()) {
        let mut r = rng(seed);
        let c = body(&mut r);
        let k = c.minkowski_sum(&random_polytope(&mut r, 3, 4, 2, 2).unwrap()).unwrap();
        let l = if r.gen_bool(0.5) {
            let v = r.gen_range(0..k.num_vertices());
            cut_vertex(&k, v).unwrap().scale_translate(&rat(r.gen_range(1..=4), r.gen_range(1..=3)), &rational_point(&mut r, 3, 2, 2)).unwrap()
        } else {
            body(&mut r)
        };
        let by_measure = equality_by_measure(&k, &l, &[&c]).unwrap();
        let by_support = equality_by_support(&k, &l, &c).unwrap();
        prop_assert_eq!(by_measure.is_some(), by_support.is_some());
        prop_assert_eq!(by_measure.is_some(), afi_check(&k, &l, &[&c]).unwrap().equality);
        if let Some(w) = by_support {
            prop_assert!(w.a.is_positive());
            prop_assert_eq!(Some(w.a.clone()), by_measure);
            prop_assert!(verify_witness_on_arcs(&k, &l, &c, &w, 100).unwrap());
        }
    }

    #[test]
    fn extremal_decomposition_inherits_vanishing(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (q1, q2) = (body(&mut r), body(&mut r));
        let c = q1.minkowski_sum(&q2).unwrap();
        let k = c.minkowski_sum(&random_polytope(&mut r, 3, 4, 2, 2).unwrap()).unwrap();
        let v = r.gen_range(0..k.num_vertices());
        let l = cut_vertex(&k, v).unwrap();
        let f = afel::geometry::SupportDiff::new(k, l).unwrap();
        let vanishes = |q: &VPolytope| {
            let s = afel::area_measure::mixed_area_diff(&[&f, &afel::geometry::SupportDiff::from(q.clone())]).unwrap();
            s.is_empty()
        };
        if vanishes(&c) {
            prop_assert!(vanishes(&q1) && vanishes(&q2));
        }
    }

    #[test]
    fn macroid_support_is_the_mean(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=3);
        let atoms: Vec<(Scalar, VPolytope)> = (0..r.gen_range(1..=4))
            .map(|_| (rat(r.gen_range(1..=5), 1), body_of_random_dim(&mut r, n, 1, 3)))
            .collect();
        let total: Scalar = atoms.iter().map(|(w, _)| w.clone()).sum();
        let mu = BodyMeasure::new(atoms.into_iter().map(|(w, p)| (w / &total, p)).collect()).unwrap();
        let k = body_of_measure(&mu).unwrap();
        for z in sample_directions(&mut r, n, 200) {
            prop_assert_eq!(k.support_value(&z), mu.support_value(&z));
        }
        let coefficients: Vec<Scalar> = mu.atoms().iter().map(|_| rational(&mut r, 3, 2).abs()).collect();
        prop_assert!(mpos_sample(&mu, &coefficients).is_ok());
        prop_assert!(pspan_containment(&mu, &coefficients).unwrap());
    }

    #[test]
    fn mean_width_and_steiner_point_are_additive(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (p, q) = (body(&mut r), body(&mut r));
        let s = p.minkowski_sum(&q).unwrap();
        let (wp, wq, ws) = (mean_width_3d(&p).unwrap(), mean_width_3d(&q).unwrap(), mean_width_3d(&s).unwrap());
        prop_assert!((ws.mid() - wp.mid() - wq.mid()).abs() < 1e-9);
        let (sp, sq, ss) = (steiner_point_3d(&p).unwrap(), steiner_point_3d(&q).unwrap(), steiner_point_3d(&s).unwrap());
        for i in 0..3 {
            prop_assert!((ss[i].mid() - sp[i].mid() - sq[i].mid()).abs() < 1e-9);
        }
    }

    #[test]
    fn diameter_sum_bound_holds(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=3);
        let bodies: Vec<VPolytope> =
            (0..r.gen_range(1..=8)).map(|_| body_of_random_dim(&mut r, n, 1, 3)).collect();
        let refs: Vec<&VPolytope> = bodies.iter().collect();
        prop_assert!(diam_sum_check(&refs).unwrap().holds);
    }
}

proptest! {
    #![proptest_config(config(12))]

    #[test]
    fn kernel_of_translated_zonotope_is_centered(seed in any::<u64>()) {
        let mut r = rng(seed);
        let count = r.gen_range(1..=5);
        let (z, gens) = random_zonotope(&mut r, 3, count, 3).unwrap();
        let t = rational_point(&mut r, 3, 4, 3);
        let half: Point = gens.iter().fold(Point::zero(3), |acc, g| &acc + &g.scale(&rat(1, 2)));
        let centered = z.translate(&half.scale(&int(-1))).unwrap();
        prop_assert_eq!(zonotope_kernel(&z.translate(&t).unwrap()).unwrap(), centered);
    }

    #[test]
    fn downscaled_kernels_are_summands(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (z, _) = random_zonotope(&mut r, 3, 2, 2).unwrap();
        let p = z.minkowski_sum(&random_polytope(&mut r, 3, 4, 2, 1).unwrap()).unwrap();
        let gens = kernel_generators(&p).unwrap();
        let y = gens.iter().fold(VPolytope::origin(3), |acc, (d, lam)| {
            let shrink = rat(r.gen_range(0..=3), 3);
            acc.minkowski_sum(&VPolytope::segment(Point::zero(3), d.to_point().scale(&(lam * shrink))).unwrap()).unwrap()
        });
        prop_assert!(is_summand(&y, &p).unwrap());
    }

    #[test]
    fn segment_summand_pattern_is_monotone(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d: [i64; 3] = [r.gen_range(-2..=2), r.gen_range(-2..=2), r.gen_range(1..=2)];
        let len = rat(r.gen_range(1..=4), r.gen_range(1..=2));
        let p = random_polytope(&mut r, 3, 4, 3, 1).unwrap().minkowski_sum(&segment(&d, len)).unwrap();
        let dir = Direction::from_ints(&d).unwrap();
        let max = segment_summand_max(&p, &dir).unwrap();
        let unit = dir.to_point();
        let mut failed = false;
        for k in 0..=24 {
            let lam = rat(k, 4);
            let ok = is_summand(&VPolytope::segment(Point::zero(3), unit.scale(&lam)).unwrap(), &p).unwrap();
            prop_assert!(!(failed && ok), "pass after fail at {}", lam);
            failed |= !ok;
            prop_assert_eq!(ok, lam <= max);
        }
    }
}

#[test]
fn admissible_prefixes_have_pure_census() {
    let mut r = rng(17);
    let seq = admissible_tetrahedra(&mut r, 3).unwrap();
    let refs: Vec<&VPolytope> = seq.iter().collect();
    assert!(admissibility_check(&refs).unwrap().passed());
    for m in 1..=3 {
        let c = partial_sum_census(&refs, m).unwrap();
        assert_eq!(c.other, 0);
        for f in &c.facets {
            let want = match f.kind {
                FacetKind::Triangle => 1,
                FacetKind::Parallelogram => 2,
                FacetKind::Other => unreachable!(),
            };
            assert_eq!(f.sources.len(), want);
        }
        let sum = VPolytope::sum_all(3, refs[..m].iter().copied()).unwrap();
        assert!(zonotope_kernel(&sum).unwrap().is_singleton());
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn intervals_enclose_exact_values(p in -1_000_000i64..1_000_000, q in 1i64..10_000) {
        let s = rat(p, q);
        let x = Interval::from_scalar(&s);
        prop_assert!(x.contains(p as f64 / q as f64));
        let root = Interval::from_scalar(&s.abs()).sqrt();
        let exact = (p.unsigned_abs() as f64 / q as f64).sqrt();
        prop_assert!(root.lo <= exact && exact <= root.hi);
        let sum = Interval::sum([x, x, x]);
        prop_assert!(sum.contains(3.0 * x.mid()));
    }

    #[test]
    fn scalars_and_directions_round_trip(p in any::<i64>(), q in 1i64..i64::MAX, a in any::<i64>(), b in any::<i64>()) {
        let s = rat(p, q);
        prop_assert_eq!(io::scalar_from_json(&io::scalar_json(&s), "$").unwrap(), s);
        prop_assume!(a != 0 || b != 0);
        let d = Direction::new(vec![BigInt::from(a) * 7, BigInt::from(b), BigInt::zero()]).unwrap();
        prop_assert_eq!(io::direction_from_json(&io::direction_json(&d), "$").unwrap(), d);
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn geometry_round_trips_through_json(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=4);
        let p = body_of_random_dim(&mut r, n, 0, 4);
        let text = io::to_text(&io::polytope_json(&p));
        prop_assert_eq!(io::polytope_from_json(&io::parse_json(&text).unwrap(), "$").unwrap(), p.clone());
        let mu = BodyMeasure::new(vec![(rat(1, 3), p.clone()), (rat(2, 3), p.reflect())]).unwrap();
        prop_assert_eq!(io::measure_from_json(&io::measure_json(&mu)).unwrap(), mu);
        if n == 3 {
            let (a, b) = (mixed_body(&mut r), mixed_body(&mut r));
            let s = mixed_area_measure(&[&a, &b]).unwrap();
            prop_assert_eq!(io::area_measure_from_json(&io::area_measure_json(&s)).unwrap(), s);
        }
        prop_assert!(!volume(&p).is_negative());
    }
}
