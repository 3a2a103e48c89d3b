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


//! End-to-end runs of the `afel` binary: exit codes, determinism, and JSON
//! round-trips of every report kind.

use std::path::PathBuf;
use std::process::{Command, Output};

use afel::error::Error;
use afel::geometry::{Point, VPolytope};
use afel::io;
use afel::scalar::int;
use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).to_string_lossy().into_owned()
}

fn afel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_afel")).args(args).env("AFEL_THREADS", "2").output().expect("binary runs")
}

/// Runs and returns the parsed report, asserting exit 0.
fn report(args: &[&str]) -> Value {
    let out = afel(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    io::parse_json(&String::from_utf8(out.stdout).unwrap()).unwrap()
}

fn code(args: &[&str]) -> (i32, String) {
    let out = afel(args);
    (out.status.code().unwrap(), String::from_utf8_lossy(&out.stderr).into_owned())
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn mixed_volume_of_axis_segments() {
    let segs = [fixture("segment_e1.json"), fixture("segment_e2.json"), fixture("segment_e3.json")];
    for method in ["ie", "interp", "measure"] {
        let mut args = vec!["mixed-volume", "--method", method, "--bodies"];
        args.extend(segs.iter().map(String::as_str));
        assert_eq!(report(&args)["value"], "1/6", "method {method}");
    }
}

#[test]
fn single_segment_is_semicritical() {
    let r = report(&["criticality", "--bodies", &fixture("segment_e1.json")]);
    assert_eq!(r["class"], "semicritical");
}

#[test]
fn truncated_cube_equality() {
    let (k, l, c) = (fixture("cube.json"), fixture("truncated_cube.json"), fixture("cube.json"));
    let r = report(&["afi-check", "--k", &k, "--l", &l, "--c", &c]);
    assert_eq!(r["equality"], true);
    assert_eq!(r["discriminant"], "0");
    assert_eq!(r["witness"]["a"], "1");
    assert_eq!(io::point_from_json(&r["witness"]["x"], "$").unwrap(), Point::zero(3));
    for route in ["measure", "support"] {
        let r = report(&["equality", "--k", &k, "--l", &l, "--c", &c, "--route", route]);
        assert_eq!(r["equality"], true, "route {route}");
    }
    let r = report(&["linearity", "--plus", &k, "--minus", &l, "--c", &c]);
    assert_eq!((r["agree"].clone(), r["measure_zero"].clone()), (Value::Bool(true), Value::Bool(true)));
}

#[test]
fn reports_round_trip_through_the_schemas() {
    let cube = fixture("cube.json");
    let atoms = report(&["area-measure", "--bodies", &cube, &cube]);
    let s = io::area_measure_from_json(&atoms).unwrap();
    assert_eq!(io::area_measure_json(&s), atoms);
    assert_eq!(s.len(), 6);

    let arcs = report(&["ball-support", "--body", &cube]);
    let a = io::arcs_from_json(&arcs).unwrap();
    assert_eq!(a.arcs.len(), 12);
    assert_eq!(io::arcs_json(&a), arcs);

    let kernel = report(&["kernel", "--body", &cube]);
    let z = io::polytope_from_json(&kernel["kernel"], "$.kernel").unwrap();
    assert_eq!(z, VPolytope::cube(3, int(-1), int(1)).unwrap());

    let body = report(&["polyoid", "body", "--measure", &fixture("hexagon_measure_2.json")]);
    let hexagon = io::polytope_from_json(&io::read_json(std::path::Path::new(&fixture("hexagon.json"))).unwrap(), "$")
        .unwrap();
    assert_eq!(io::polytope_from_json(&body, "$").unwrap(), hexagon);

    let pushed = report(&["polyoid", "pushforward", "--measure", &fixture("hexagon_measure_1.json"), "--z", "1,-1"]);
    let mu = io::measure_from_json(&pushed).unwrap();
    assert_eq!(io::measure_json(&mu), pushed);
}

#[test]
fn hexagon_measures_verify() {
    for i in 1..=4 {
        let m = fixture(&format!("hexagon_measure_{i}.json"));
        let r = report(&["polyoid", "verify", "--measure", &m, "--body", &fixture("hexagon.json")]);
        assert_eq!(r["generating"], true, "measure {i}");
    }
}

#[test]
fn gen_is_byte_identical_per_seed() {
    let args = ["gen", "ktope", "--count", "5", "--seed", "7"];
    let (a, b) = (afel(&args), afel(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let bodies = io::bodies_from_json(&io::parse_json(&String::from_utf8(a.stdout).unwrap()).unwrap()).unwrap();
    assert_eq!(bodies.len(), 1);
    assert_eq!(bodies[0].num_vertices(), 5);
    let other = afel(&["gen", "ktope", "--count", "5", "--seed", "8"]);
    assert_ne!(other.stdout, b.stdout);
}

#[test]
fn generated_admissible_sequence_passes_the_check() {
    let dir = tempfile::tempdir().unwrap();
    let out = afel(&["gen", "admissible-seq", "--count", "4", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let seq = write(&dir, "seq.json", &text);
    let r = report(&["admissible", "--seq", &seq]);
    assert_eq!(r["passed"], true);
    let census = report(&["census", "--seq", &seq, "--upto", "4"]);
    assert_eq!(census["other"], 0);
    assert_eq!(census["triangle"], 16);
    // The generator reproduces the shipped fixture.
    let shipped = io::read_json(std::path::Path::new(&fixture("admissible_tetrahedra.json"))).unwrap();
    assert_eq!(io::parse_json(&text).unwrap(), shipped);
}

#[test]
fn generated_zonotope_kernel_is_the_centered_zonotope() {
    let dir = tempfile::tempdir().unwrap();
    let r = report(&["gen", "zonotope", "--count", "5", "--seed", "11"]);
    let z = io::bodies_from_json(&r).unwrap().remove(0);
    let path = write(&dir, "z.json", &io::to_text(&io::polytope_json(&z)));
    let k = report(&["kernel", "--body", &path]);
    let kernel = io::polytope_from_json(&k["kernel"], "$.kernel").unwrap();
    let count = int(z.num_vertices() as i64);
    let center = z.vertices().iter().fold(Point::zero(3), |acc, v| &acc + v);
    let centered = z.translate(&center.scale(&(int(-1) / count))).unwrap();
    assert_eq!(kernel, centered);
}

#[test]
fn output_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("report.json");
    let cube = fixture("cube.json");
    let out = afel(&["kernel", "--body", &cube, "--output", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    assert_eq!(written.as_bytes(), afel(&["kernel", "--body", &cube]).stdout.as_slice());
}

#[test]
fn malformed_input_exits_one_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write(&dir, "broken.json", "{\"dim\": 3,\n \"vertices\": [[1, 2, 3],,]}");
    let (c, err) = code(&["kernel", "--body", &broken]);
    assert_eq!(c, 1);
    assert!(err.contains("line 2"), "{err}");

    let short = write(&dir, "short.json", r#"{"dim": 3, "vertices": [[0,0,0], [1, 2]]}"#);
    let (c, err) = code(&["kernel", "--body", &short]);
    assert_eq!(c, 1);
    assert!(err.contains("$.vertices[1]"), "{err}");

    let bad_scalar = write(&dir, "bad.json", r#"{"dim": 1, "vertices": [["1/0"], ["2"]]}"#);
    assert_eq!(code(&["kernel", "--body", &bad_scalar]).0, 1);
    assert_eq!(code(&["no-such-command"]).0, 1);
    assert_eq!(code(&["kernel", "--body", "/nonexistent/file.json"]).0, 1);
}

#[test]
fn precondition_failures_exit_two() {
    let cube = fixture("cube.json");
    let (c, err) = code(&["census", "--seq", &cube, "--upto", "1"]);
    assert_eq!(c, 2, "{err}");
    assert!(err.contains("not admissible"));
    let (c, _) = code(&["equality", "--k", &cube, "--l", &cube, "--c", &cube, &cube, "--route", "support"]);
    assert_eq!(c, 2);
    let (c, _) = code(&["polyoid", "normalize", "--measure", &fixture("hexagon_measure_1.json")]);
    assert_eq!(c, 2);
}

#[test]
fn exit_codes_by_error_kind() {
    use afel::cli::exit_code;
    assert_eq!(exit_code(&Error::Parse("x".into())), 1);
    assert_eq!(exit_code(&Error::InvalidArgument("x".into())), 1);
    assert_eq!(exit_code(&Error::Precondition("x".into())), 2);
    assert_eq!(exit_code(&Error::UnsupportedDimension(5)), 2);
    assert_eq!(exit_code(&Error::TheoryViolation("x".into())), 3);
}

#[test]
fn thread_count_does_not_change_reports() {
    let segs = [fixture("segment_e1.json"), fixture("cube.json"), fixture("truncated_cube.json")];
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_afel"))
            .args(["mixed-volume", "--method", "interp", "--bodies"])
            .args(&segs)
            .env("AFEL_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("4"));
}
