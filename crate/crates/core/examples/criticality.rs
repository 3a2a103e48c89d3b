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


//! Criticality classes and the link between semicriticality and positive mixed volume.
//!
//! Run with `cargo run --example criticality`.

use afel::criticality::{check_append_rules, classify};
use afel::geometry::{Point, VPolytope};
use afel::mixed_volume::mixed_volume;
use afel::scalar::int;

fn main() -> afel::error::Result<()> {
    let seg = |i: usize| VPolytope::segment(Point::zero(3), Point::unit(3, i));
    let square = VPolytope::from_int_points(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 0]])?;
    let cube = VPolytope::cube(3, int(0), int(1))?;
    let e1 = seg(0)?;
    let e3 = seg(2)?;

    let tuples: Vec<(&str, Vec<&VPolytope>)> = vec![
        ("(e1)", vec![&e1]),
        ("(e1, e1)", vec![&e1, &e1]),
        ("(square, square)", vec![&square, &square]),
        ("(square, e3)", vec![&square, &e3]),
        ("(cube)", vec![&cube]),
        ("(cube, cube)", vec![&cube, &cube]),
    ];
    for (name, bodies) in &tuples {
        let r = classify(bodies)?;
        println!("{name:<18} {:<14} witness {:?}", r.class.name(), r.witness);
    }

    // Semicritical iff the mixed volume is positive, for full tuples.
    for (name, bodies) in [("(e1, e1, e3)", vec![&e1, &e1, &e3]), ("(square, e1, e3)", vec![&square, &e1, &e3])] {
        println!("{name:<18} {:<14} V = {}", classify(&bodies)?.class.name(), mixed_volume(&bodies)?);
    }

    let r = check_append_rules(&[&square], &e3)?;
    println!("appending e3 to (square): {:?} -> {:?}, rules consistent: {}", r.before, r.after, r.consistent);
    Ok(())
}
