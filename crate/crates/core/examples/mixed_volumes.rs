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


//! Mixed volumes by the three independent routes, on a few hand-made bodies.
//!
//! Run with `cargo run --example mixed_volumes`.

use afel::geometry::{Point, VPolytope};
use afel::mixed_volume::{mixed_volume_with, volume, Method};
use afel::scalar::int;

fn main() -> afel::error::Result<()> {
    let seg = |i: usize| VPolytope::segment(Point::zero(3), Point::unit(3, i));
    let (e1, e2, e3) = (seg(0)?, seg(1)?, seg(2)?);
    let cube = VPolytope::cube(3, int(0), int(1))?;
    let tetra = VPolytope::standard_simplex(3)?;

    println!("vol(cube) = {}, vol(simplex) = {}", volume(&cube), volume(&tetra));
    let cases: [(&str, [&VPolytope; 3]); 4] = [
        ("V(e1, e2, e3)", [&e1, &e2, &e3]),
        ("V(cube, cube, e1)", [&cube, &cube, &e1]),
        ("V(cube, simplex, simplex)", [&cube, &tetra, &tetra]),
        ("V(simplex, e1, e2)", [&tetra, &e1, &e2]),
    ];
    for (name, bodies) in cases {
        let values: Vec<String> = [Method::InclusionExclusion, Method::Interpolation, Method::FacetIntegral]
            .into_iter()
            .map(|m| mixed_volume_with(&bodies, m).map(|r| r.value.to_string()))
            .collect::<Result<_, _>>()?;
        println!("{name:<28} ie = {:<6} interp = {:<6} measure = {}", values[0], values[1], values[2]);
    }
    Ok(())
}
