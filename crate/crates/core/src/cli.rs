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


//! The `afel` command line: argument parsing, dispatch and JSON reports.
//!
//! Exit codes: 0 success, 1 malformed input, 2 precondition violated,
//! 3 theory violation (a library bug, never an expected outcome).

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::afi::{afi_check, equality_by_measure, equality_by_support, linearity_equivalence, Witness};
use crate::appendix::{
    admissibility_check, kernel_generators, partial_sum_census, zonotope_kernel, AdmissibilityReport,
    Condition, FaceCensus, Violation,
};
use crate::area_measure::{ball_support_arcs, mixed_area_measure};
use crate::criticality::classify;
use crate::error::{Error, Result};
use crate::geometry::{Direction, SupportDiff, VPolytope};
use crate::io;
use crate::mixed_volume::{mixed_volume_with, Method};
use crate::polyoid::{body_of_measure, small_directions, steiner_normalize, support_pushforward, verify_generating};
use crate::random;

/// Parsed invocation. The seed fixes every random instance; `--output`
/// redirects the report from stdout to a file.
#[derive(Debug, Clone, Parser)]
#[command(name = "afel", version, about = "Exact mixed volumes and Alexandrov-Fenchel equality cases")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Measure,
    Support,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    /// Hull of random rational points.
    Polytope,
    /// 3-polytope with exactly k vertices.
    Ktope,
    /// Sum of random integer segments.
    Zonotope,
    /// Admissible sequence of perturbed tetrahedra.
    AdmissibleSeq,
    /// Admissible sequence whose i-th term has max(i, 4) vertices.
    GrowthSeq,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Mixed volume V(K_1, ..., K_n).
    MixedVolume {
        #[arg(long, num_args = 1.., required = true)]
        bodies: Vec<PathBuf>,
        #[arg(long, default_value = "ie")]
        method: Method,
    },
    /// Mixed area measure S(K_1, ..., K_{n-1}, .).
    AreaMeasure {
        #[arg(long, num_args = 1.., required = true)]
        bodies: Vec<PathBuf>,
    },
    /// Arcs carrying the mixed area measure S(B^3, C, .).
    BallSupport {
        #[arg(long)]
        body: PathBuf,
    },
    /// Subcritical / semicritical / critical / supercritical classification.
    Criticality {
        #[arg(long, num_args = 1.., required = true)]
        bodies: Vec<PathBuf>,
    },
    /// Alexandrov-Fenchel discriminant and equality witness.
    AfiCheck {
        #[arg(long)]
        k: PathBuf,
        #[arg(long)]
        l: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        c: Vec<PathBuf>,
    },
    /// Decide equality by the area-measure or the support-function route.
    Equality {
        #[arg(long)]
        k: PathBuf,
        #[arg(long)]
        l: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        c: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "measure")]
        route: Route,
    },
    /// Compare S_{f,C} = 0 with linearity of f = h_plus - h_minus on the arcs of C.
    Linearity {
        #[arg(long)]
        plus: PathBuf,
        #[arg(long)]
        minus: PathBuf,
        #[arg(long)]
        c: PathBuf,
    },
    /// Operations on generating measures.
    Polyoid {
        #[command(subcommand)]
        op: PolyoidOp,
    },
    /// Inclusion-maximal centered zonotope summand.
    Kernel {
        #[arg(long)]
        body: PathBuf,
    },
    /// Admissibility of a finite sequence of 3-polytopes.
    Admissible {
        #[arg(long, num_args = 1.., required = true)]
        seq: Vec<PathBuf>,
    },
    /// Facet census of a partial sum of an admissible sequence.
    Census {
        #[arg(long, num_args = 1.., required = true)]
        seq: Vec<PathBuf>,
        #[arg(long)]
        upto: Option<usize>,
    },
    /// Deterministic random instances.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Ambient dimension (polytope, zonotope).
        #[arg(long, default_value_t = 3)]
        dim: usize,
        /// Number of points, vertices, segments or sequence terms.
        #[arg(long, default_value_t = 5)]
        count: usize,
        /// Coordinate range.
        #[arg(long, default_value_t = 3)]
        range: i64,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum PolyoidOp {
    /// The body whose support function is the mean of the atoms.
    Body {
        #[arg(long)]
        measure: PathBuf,
    },
    /// Check that a measure generates a given body.
    Verify {
        #[arg(long)]
        measure: PathBuf,
        #[arg(long)]
        body: PathBuf,
    },
    /// Push the measure forward under P -> F(P, z).
    Pushforward {
        #[arg(long)]
        measure: PathBuf,
        /// Integer direction, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        z: Vec<i64>,
    },
    /// Re-center atoms at their Steiner points (interval enclosures).
    Normalize {
        #[arg(long)]
        measure: PathBuf,
    },
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::InvalidArgument(_) => 1,
        Error::TheoryViolation(_) => 3,
        _ => 2,
    }
}

fn read_bodies(paths: &[PathBuf]) -> Result<Vec<VPolytope>> {
    let mut out = Vec::new();
    for p in paths {
        out.extend(io::bodies_from_json(&io::read_json(p)?).map_err(|e| prefix(p, e))?);
    }
    Ok(out)
}

fn read_body(path: &Path) -> Result<VPolytope> {
    let v = io::read_json(path)?;
    io::polytope_from_json(&v, "$").map_err(|e| prefix(path, e))
}

fn prefix(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    }
}

fn refs(v: &[VPolytope]) -> Vec<&VPolytope> {
    v.iter().collect()
}

fn witness_json(w: &Option<Witness>) -> Value {
    match w {
        Some(w) => json!({ "a": io::scalar_json(&w.a), "x": io::point_json(&w.x) }),
        None => Value::Null,
    }
}

fn violation_json(v: &Violation) -> Value {
    match v {
        Violation::NonTriangularFacet { body, normal, vertices } => {
            json!({ "kind": "non_triangular_facet", "body": body, "normal": io::direction_json(normal), "vertices": vertices })
        }
        Violation::LowDimensional { body, dim } => json!({ "kind": "low_dimensional", "body": body, "dim": dim }),
        Violation::RepeatedEdgeDirection { first, second, direction } => json!({
            "kind": "repeated_edge_direction", "bodies": [first, second], "direction": io::direction_json(direction)
        }),
        Violation::NontrivialSupportSet { body, normal, other, dim } => json!({
            "kind": "nontrivial_support_set", "body": body, "normal": io::direction_json(normal), "other": other, "dim": dim
        }),
        Violation::DegenerateEdgeTriple { bodies, directions } => json!({
            "kind": "degenerate_edge_triple", "bodies": bodies,
            "directions": directions.iter().map(io::direction_json).collect::<Vec<_>>()
        }),
    }
}

fn condition_json(c: &Condition) -> Value {
    json!({ "passed": c.passed, "violations": c.violations.iter().map(violation_json).collect::<Vec<_>>() })
}

/// JSON form of an admissibility report.
pub fn admissibility_json(r: &AdmissibilityReport) -> Value {
    let mut conditions = serde_json::Map::new();
    for (name, c) in r.conditions() {
        conditions.insert(name.to_string(), condition_json(c));
    }
    json!({
        "passed": r.passed(),
        "prefix_len": r.prefix_len,
        "conditions": conditions,
        "bounded": r.bounded,
        "diameter_sum": io::interval_json(&r.diameter_sum),
        "scope": "finite prefix only",
    })
}

/// JSON form of a facet census.
pub fn census_json(c: &FaceCensus) -> Value {
    let facets: Vec<Value> = c
        .facets
        .iter()
        .map(|f| {
            json!({
                "normal": io::direction_json(&f.normal),
                "kind": f.kind.name(),
                "vertices": f.vertices,
                "sources": f.sources,
            })
        })
        .collect();
    json!({
        "upto": c.upto,
        "triangle": c.triangles,
        "parallelogram": c.parallelograms,
        "other": c.other,
        "facets": facets,
    })
}

fn measure_of(path: &Path) -> Result<crate::polyoid::BodyMeasure> {
    io::measure_from_json(&io::read_json(path)?).map_err(|e| prefix(path, e))
}

/// Executes a parsed command and returns its JSON report.
pub fn run(config: &RunConfig) -> Result<Value> {
    match &config.command {
        Command::MixedVolume { bodies, method } => {
            let b = read_bodies(bodies)?;
            let r = mixed_volume_with(&refs(&b), *method)?;
            Ok(json!({ "value": io::scalar_json(&r.value), "method": serde_json::to_value(r.method).expect("enum") }))
        }
        Command::AreaMeasure { bodies } => {
            let b = read_bodies(bodies)?;
            Ok(io::area_measure_json(&mixed_area_measure(&refs(&b))?))
        }
        Command::BallSupport { body } => Ok(io::arcs_json(&ball_support_arcs(&read_body(body)?)?)),
        Command::Criticality { bodies } => {
            let b = read_bodies(bodies)?;
            Ok(serde_json::to_value(classify(&refs(&b))?).expect("report serializes"))
        }
        Command::AfiCheck { k, l, c } => {
            let (k, l, c) = (read_body(k)?, read_body(l)?, read_bodies(c)?);
            let r = afi_check(&k, &l, &refs(&c))?;
            Ok(json!({
                "v_kl": io::scalar_json(&r.v_kl),
                "v_kk": io::scalar_json(&r.v_kk),
                "v_ll": io::scalar_json(&r.v_ll),
                "discriminant": io::scalar_json(&r.discriminant),
                "equality": r.equality,
                "branch": serde_json::to_value(r.branch).expect("enum"),
                "witness": witness_json(&r.witness),
            }))
        }
        Command::Equality { k, l, c, route } => {
            let (k, l, c) = (read_body(k)?, read_body(l)?, read_bodies(c)?);
            match route {
                Route::Measure => {
                    let a = equality_by_measure(&k, &l, &refs(&c))?;
                    Ok(json!({ "route": "measure", "equality": a.is_some(), "a": a.as_ref().map(io::scalar_json) }))
                }
                Route::Support => {
                    if c.len() != 1 {
                        return Err(Error::Precondition(format!(
                            "the support route takes exactly one body in C, got {}",
                            c.len()
                        )));
                    }
                    let w = equality_by_support(&k, &l, &c[0])?;
                    Ok(json!({ "route": "support", "equality": w.is_some(), "witness": witness_json(&w) }))
                }
            }
        }
        Command::Linearity { plus, minus, c } => {
            let f = SupportDiff::new(read_body(plus)?, read_body(minus)?)?;
            let r = linearity_equivalence(&f, &read_body(c)?)?;
            Ok(json!({
                "measure_zero": r.measure_zero,
                "linear_on_arcs": r.linear_on_arcs,
                "x": r.x.as_ref().map(io::point_json),
                "agree": r.agree,
            }))
        }
        Command::Polyoid { op } => run_polyoid(op),
        Command::Kernel { body } => {
            let p = read_body(body)?;
            let gens: Vec<Value> = kernel_generators(&p)?
                .iter()
                .map(|(d, l)| json!({ "direction": io::direction_json(d), "lambda": io::scalar_json(l) }))
                .collect();
            Ok(json!({ "kernel": io::polytope_json(&zonotope_kernel(&p)?), "generators": gens }))
        }
        Command::Admissible { seq } => {
            let b = read_bodies(seq)?;
            Ok(admissibility_json(&admissibility_check(&refs(&b))?))
        }
        Command::Census { seq, upto } => {
            let b = read_bodies(seq)?;
            let upto = upto.unwrap_or(b.len());
            Ok(census_json(&partial_sum_census(&refs(&b), upto)?))
        }
        Command::Gen { kind, seed, dim, count, range } => gen(*kind, *seed, *dim, *count, *range),
    }
}

fn run_polyoid(op: &PolyoidOp) -> Result<Value> {
    match op {
        PolyoidOp::Body { measure } => Ok(io::polytope_json(&body_of_measure(&measure_of(measure)?)?)),
        PolyoidOp::Verify { measure, body } => {
            let mu = measure_of(measure)?;
            let k = read_body(body)?;
            let ok = verify_generating(&mu, &k, &small_directions(k.ambient_dim(), 2))?;
            Ok(json!({ "generating": ok }))
        }
        PolyoidOp::Pushforward { measure, z } => {
            let mu = measure_of(measure)?;
            let z = Direction::from_ints(z)?;
            if z.dim() != mu.ambient_dim() {
                return Err(Error::DimensionMismatch { expected: mu.ambient_dim(), found: z.dim() });
            }
            Ok(io::measure_json(&support_pushforward(&mu, &z)))
        }
        PolyoidOp::Normalize { measure } => {
            let m = steiner_normalize(&measure_of(measure)?)?;
            let atoms: Vec<Value> = m
                .atoms
                .iter()
                .map(|(w, b)| {
                    let verts: Vec<Value> =
                        b.vertices.iter().map(|v| Value::Array(v.iter().map(io::interval_json).collect())).collect();
                    json!({ "weight": io::interval_json(w), "vertices": verts })
                })
                .collect();
            Ok(json!({ "approximate": m.approximate, "atoms": atoms }))
        }
    }
}

/// Deterministic random instances; identical arguments give identical output.
pub fn gen(kind: GenKind, seed: u64, dim: usize, count: usize, range: i64) -> Result<Value> {
    let mut rng = random::rng(seed);
    match kind {
        GenKind::Polytope => Ok(io::bodies_json(&[random::random_polytope(&mut rng, dim, count, range, 4)?])),
        GenKind::Ktope => Ok(io::bodies_json(&[random::random_ktope(&mut rng, count)?])),
        GenKind::Zonotope => {
            let (z, gens) = random::random_zonotope(&mut rng, dim, count, range)?;
            let mut v = io::bodies_json(&[z]);
            v["generators"] = Value::Array(gens.iter().map(io::point_json).collect());
            Ok(v)
        }
        GenKind::AdmissibleSeq | GenKind::GrowthSeq => {
            let seq = if kind == GenKind::AdmissibleSeq {
                random::admissible_tetrahedra(&mut rng, count)?
            } else {
                random::admissible_growth_sequence(&mut rng, count)?
            };
            let report = admissibility_check(&refs(&seq))?;
            if !report.passed() {
                return Err(Error::TheoryViolation("generated sequence failed its admissibility check".into()));
            }
            let mut v = io::bodies_json(&seq);
            v["admissible"] = Value::Bool(true);
            Ok(v)
        }
    }
}

fn configure_threads() -> std::result::Result<(), String> {
    let Ok(raw) = std::env::var("AFEL_THREADS") else { return Ok(()) };
    let n: usize = raw.trim().parse().map_err(|_| format!("AFEL_THREADS must be a positive integer, got {raw:?}"))?;
    if n == 0 {
        return Err("AFEL_THREADS must be at least 1".into());
    }
    // A pool that is already built (e.g. by an embedding program) is kept as is.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Full command-line entry point; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return 1;
    }
    match run(&config) {
        Ok(report) => {
            let text = io::to_text(&report);
            match &config.output {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return 1;
                    }
                }
                None => print!("{text}"),
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
