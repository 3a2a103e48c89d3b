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


//! Alexandrov-Fenchel equality with C = (cube): a truncated cube is not
//! homothetic to the cube, yet equality holds because the truncation leaves the
//! support sets over the coordinate great circles untouched.
//!
//! Run with `cargo run --release --example afi_equality`.

use afel::afi::{afi_check, equality_by_measure, equality_by_support, linearity_equivalence, truncated_cube};
use afel::geometry::{hausdorff_distance_sq, Point, SupportDiff, VPolytope};
use afel::scalar::{int, rat};

fn main() -> afel::error::Result<()> {
    let k = VPolytope::cube(3, int(-1), int(1))?;
    let l = truncated_cube(&rat(1, 4))?;
    println!("L has {} vertices and {} facets", l.num_vertices(), l.facets().len());

    let r = afi_check(&k, &l, &[&k])?;
    println!("V(K,L,C) = {}, V(K,K,C) = {}, V(L,L,C) = {}", r.v_kl, r.v_kk, r.v_ll);
    println!("discriminant = {}, equality = {}", r.discriminant, r.equality);
    match equality_by_measure(&k, &l, &[&k])? {
        Some(a) => println!("measure route: S(K, C, .) = {a} S(L, C, .)"),
        None => println!("measure route: no equality"),
    }
    if let Some(w) = equality_by_support(&k, &l, &k)? {
        println!("support route: h_K = {} h_L + <{:?}, .> on the arcs", w.a, w.x);
    }
    println!("squared Hausdorff distance d(K, L)^2 = {}", hausdorff_distance_sq(&k, &l)?);

    // A homothetic pair, for contrast.
    let l2 = k.scale_translate(&rat(7, 2), &Point::from_ints(&[1, -2, 0]))?;
    println!("K vs 7/2 K + x: discriminant = {}", afi_check(&k, &l2, &[&k])?.discriminant);

    // The linearity criterion on f = h_K - h_L gives the same verdict.
    let f = SupportDiff::new(k.clone(), l)?;
    let lin = linearity_equivalence(&f, &k)?;
    println!("S_(f,C) = 0: {}, f linear on the arcs: {}, x = {:?}", lin.measure_zero, lin.linear_on_arcs, lin.x);
    Ok(())
}
