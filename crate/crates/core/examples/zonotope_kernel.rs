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


//! Maximal segment summands and the zonotope kernel.
//!
//! Run with `cargo run --example zonotope_kernel`.

use afel::appendix::{kernel_generators, segment_summand_max, zonotope_kernel};
use afel::geometry::{Direction, Point, VPolytope};
use afel::random::{random_zonotope, rng};
use afel::scalar::int;

fn main() -> afel::error::Result<()> {
    let cube = VPolytope::cube(3, int(0), int(1))?;
    println!("lambda(cube, e1) = {}", segment_summand_max(&cube, &Direction::unit(3, 0))?);
    println!("kernel(cube) = {:?}", zonotope_kernel(&cube)?);

    let tetra = VPolytope::from_int_points(&[&[0, 0, 0], &[1, 2, 0], &[0, 1, 3], &[2, 0, 1]])?;
    println!("kernel(tetra) = {:?}", zonotope_kernel(&tetra)?);
    let p = tetra.minkowski_sum(&VPolytope::segment(Point::zero(3), Point::from_ints(&[2, 0, 0]))?)?;
    println!("kernel(tetra + [0, 2 e1]) = {:?}", zonotope_kernel(&p)?);

    let (z, gens) = random_zonotope(&mut rng(5), 3, 4, 3)?;
    println!("random zonotope with generators {gens:?}");
    for (d, l) in kernel_generators(&z)? {
        println!("  direction {d:?}: lambda = {l}");
    }
    Ok(())
}
