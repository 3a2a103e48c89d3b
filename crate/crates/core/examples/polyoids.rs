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


//! Generating measures of a hexagon, pushforwards to support sets, Steiner
//! normalization, and the diameter-sum bound.
//!
//! Run with `cargo run --example polyoids`.

use afel::geometry::{Direction, Point, VPolytope};
use afel::polyoid::{
    body_of_measure, diam_sum_check, BodyMeasure, hexagon_generating_measures, is_k_tope, small_directions, steiner_normalize,
    support_pushforward, verify_generating,
};
use afel::scalar::int;

fn main() -> afel::error::Result<()> {
    let (p, measures) = hexagon_generating_measures();
    println!("P = {p:?}");
    for (i, mu) in measures.iter().enumerate() {
        let ok = verify_generating(mu, &p, &small_directions(2, 3))?;
        let k = mu.atoms().iter().map(|(_, a)| a.num_vertices()).max().unwrap_or(0);
        println!("measure {}: {} atoms, largest atom has {k} vertices, generates P: {ok}", i + 1, mu.atoms().len());
    }

    let z = Direction::from_ints(&[0, 1])?;
    let pushed = support_pushforward(&measures[0], &z);
    println!("F(P, e2) = {:?}, body of the pushforward = {:?}", p.support_set(&z), body_of_measure(&pushed)?);

    // Steiner normalization lives in R^3, so lift the three-segment measure to the plane z = 0.
    let lift = |q: &VPolytope| {
        VPolytope::new(q.vertices().iter().map(|v| Point::new(vec![v[0].clone(), v[1].clone(), int(0)])).collect())
    };
    let lifted = BodyMeasure::new(
        measures[3].atoms().iter().map(|(w, a)| Ok((w.clone(), lift(a)?))).collect::<afel::error::Result<_>>()?,
    )?;
    let normalized = steiner_normalize(&lifted)?;
    println!("Steiner-normalized measure (approximate: {}):", normalized.approximate);
    for (w, body) in &normalized.atoms {
        let ends: Vec<Vec<String>> =
            body.vertices.iter().map(|v| v.iter().map(|c| format!("{:.4}", c.mid())).collect()).collect();
        println!("  weight {:.6} +- {:.1e}, segment {ends:?}", w.mid(), w.radius());
    }
    println!("all atoms are 3-topes: {}", measures[3].atoms().iter().all(|(_, a)| is_k_tope(a, 3)));

    let bodies: Vec<&VPolytope> = measures[3].atoms().iter().map(|(_, a)| a).collect();
    let d = diam_sum_check(&bodies)?;
    println!("sum diam = {:.4} <= {:.4}: {}", d.lhs.hi, d.rhs.lo, d.holds);
    Ok(())
}
