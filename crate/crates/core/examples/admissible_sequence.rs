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


//! An admissible sequence of perturbed tetrahedra: exact admissibility checks,
//! the facet census of partial sums, trivial zonotope kernels, and vertex growth.
//!
//! Run with `cargo run --release --example admissible_sequence [seed]`.

use afel::appendix::{admissibility_check, ktope_vertex_growth, partial_sum_census, zonotope_kernel};
use afel::geometry::VPolytope;
use afel::random::{admissible_growth_sequence, admissible_tetrahedra, rng};

fn main() -> afel::error::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let seq = admissible_tetrahedra(&mut rng(seed), 4)?;
    let refs: Vec<&VPolytope> = seq.iter().collect();

    let report = admissibility_check(&refs)?;
    for (name, c) in report.conditions() {
        println!("{name:<26} {}", if c.passed { "pass" } else { "FAIL" });
    }
    println!("sum of diameters in [{:.3}, {:.3}]", report.diameter_sum.lo, report.diameter_sum.hi);

    for m in 1..=refs.len() {
        let census = partial_sum_census(&refs, m)?;
        let k = VPolytope::sum_all(3, refs[..m].iter().copied())?;
        println!(
            "K_{m}: {} vertices, {} triangles, {} parallelograms, {} other, kernel trivial: {}",
            k.num_vertices(),
            census.triangles,
            census.parallelograms,
            census.other,
            zonotope_kernel(&k)?.is_singleton()
        );
    }

    let growth = admissible_growth_sequence(&mut rng(seed), 6)?;
    let refs: Vec<&VPolytope> = growth.iter().collect();
    let g = ktope_vertex_growth(&refs, refs.len())?;
    for e in &g.entries {
        println!(
            "P_{}: {} vertices, summand of K_{}: {}, atoms carrying it need >= {} vertices",
            e.index,
            e.vertices,
            refs.len(),
            e.summand_of_partial_sum,
            e.min_atom_vertices
        );
    }
    println!("admissible: {}, required k on this prefix: {}", g.admissible, g.required_k);
    Ok(())
}
