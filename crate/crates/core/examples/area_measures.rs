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


//! Mixed area measures as exact atoms, and the arcs carrying S(B^3, C, .)
//! compared with the numeric ball approximation.
//!
//! Run with `cargo run --release --example area_measures`.

use afel::area_measure::{ball_measure_numeric, ball_support_arcs, mass_near_arcs, mixed_area_measure, DEFAULT_TAU};
use afel::geometry::VPolytope;
use afel::mixed_volume::mixed_volume;
use afel::scalar::int;

fn main() -> afel::error::Result<()> {
    let cube = VPolytope::cube(3, int(-1), int(1))?;
    let simplex = VPolytope::standard_simplex(3)?;

    let s = mixed_area_measure(&[&cube, &simplex])?;
    println!("S(cube, simplex, .) has {} atoms", s.len());
    for (z, w) in s.atoms() {
        println!("  {z:?} -> {w}");
    }
    println!("integral of h_cube = {}, 3 V(cube, cube, simplex) = {}", s.integrate(&cube), int(3) * mixed_volume(&[&cube, &cube, &simplex])?);

    let arcs = ball_support_arcs(&cube)?;
    println!("support of S(B^3, cube, .): {} arcs", arcs.arcs.len());
    for a in &arcs.arcs {
        println!("  {:?} .. {:?}", a.z1, a.z2);
    }
    let numeric = ball_measure_numeric(&[&cube], 200)?;
    let share = mass_near_arcs(&numeric, &arcs, DEFAULT_TAU, 0.15);
    println!("numeric ball model: {:.2}% of the mass within 0.15 rad of the arcs", 100.0 * share);
    Ok(())
}
