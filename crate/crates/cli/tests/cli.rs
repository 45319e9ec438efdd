//! End-to-end tests of the binary: golden outputs, exit codes and the
//! witness round trip through `verify`.

use std::process::Command;

fn dytri(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dytri"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, stdout, stderr) = dytri(args);
    assert_eq!(code, 0, "args {args:?} failed: {stderr}");
    stdout
}

#[test]
fn encode_prints_the_triple() {
    assert_eq!(
        ok(&["encode", "--triangle", "(0,0);(7,3);(19,0)"]),
        "(1,3,19)\n"
    );
    // Hat literals are accepted wherever triangles are.
    assert_eq!(ok(&["encode", "--triangle", "T{7,3,19,0}"]), "(1,3,19)\n");
    assert_eq!(
        ok(&["encode", "--triangle", "T{1,3,19,0}", "--vertex", "0"]),
        "(1,3,19)\n"
    );
}

#[test]
fn encode_all_lists_the_six_classes() {
    let out = ok(&["encode-all", "--triangle", "T{1,3,19,0}"]);
    assert_eq!(
        out,
        "(1,3,19)\n(3,3,19)\n(3,19,3)\n(19,19,3)\n(19,57,1)\n(39,57,1)\n"
    );
}

#[test]
fn normalize_prints_hat_and_trace() {
    let out = ok(&["normalize", "--triangle", "(1/2,0);(1/2,3/2);(5/2,0)"]);
    assert_eq!(
        out,
        "T{0,3,1,0}\n\
         translate: [[1,0],[0,1]]+(-1/2,0)\n\
         scale: [[2,0],[0,2]]+(0,0)\n\
         x-descale: [[1/4,0],[0,1]]+(0,0)\n"
    );
    // An already-normal hat needs no steps.
    assert_eq!(
        ok(&["normalize", "--triangle", "T{3,3,5,0}"]),
        "T{3,3,5,0}\n"
    );
}

#[test]
fn iso_answers_and_witnesses() {
    assert_eq!(
        ok(&[
            "iso",
            "--t1",
            "(0,0);(1,1);(2,0)",
            "--t2",
            "(0,0);(1,3);(2,0)"
        ]),
        "false\n"
    );
    let out = ok(&["iso", "--t1", "T{1,3,19,0}", "--t2", "(0,0);(0,3);(19,0)"]);
    assert!(out.starts_with("true\n"));
    let witness = out.lines().nth(1).expect("witness line");
    assert_eq!(
        ok(&[
            "verify",
            "--map",
            witness,
            "--t1",
            "T{1,3,19,0}",
            "--t2",
            "(0,0);(0,3);(19,0)"
        ]),
        "true\n"
    );
}

#[test]
fn pointed_iso_round_trips_through_verify() {
    let out = ok(&["pointed-iso", "--t1", "T{1,3,19,0}", "--t2", "T{7,3,19,0}"]);
    assert!(out.starts_with("true\n"));
    let witness = out.lines().nth(1).expect("witness line");
    assert_eq!(
        ok(&[
            "verify",
            "--map",
            witness,
            "--t1",
            "T{1,3,19,0}",
            "--t2",
            "T{7,3,19,0}"
        ]),
        "true\n"
    );
    // A valid map that misses the vertices answers false, exit 0.
    assert_eq!(
        ok(&[
            "verify",
            "--map",
            "[[1,0],[0,1]]+(1,0)",
            "--t1",
            "T{1,3,19,0}",
            "--t2",
            "T{7,3,19,0}"
        ]),
        "false\n"
    );
}

#[test]
fn scalar_types() {
    assert_eq!(ok(&["interval-type", "0", "3/4"]), "3\n");
    assert_eq!(ok(&["side-type", "(0,3)", "(19,0)"]), "1\n");
    assert_eq!(
        ok(&["boundary-type", "--triangle", "(0,0);(0,3);(19,0)"]),
        "(3,1,19)\n"
    );
}

#[test]
fn closure_lists_points_in_order() {
    assert_eq!(
        ok(&["closure", "--generators", "0;1", "--steps", "2"]),
        "0\n1/4\n1/2\n3/4\n1\n"
    );
    let out = ok(&[
        "closure",
        "--generators",
        "(0,0);(1,0);(0,1)",
        "--steps",
        "1",
    ]);
    assert_eq!(out, "(0,0)\n(0,1/2)\n(0,1)\n(1/2,0)\n(1/2,1/2)\n(1,0)\n");
}

#[test]
fn generates_reports_missing_points() {
    assert_eq!(
        ok(&[
            "generates",
            "--generators",
            "0;3",
            "--interval",
            "0;3",
            "--depth",
            "1"
        ]),
        "false\nmissing: 1/2 (budget 4)\n"
    );
    assert_eq!(
        ok(&[
            "generates",
            "--generators",
            "(0,0);(1,0);(0,1)",
            "--triangle",
            "(0,0);(1,0);(0,1)",
            "--depth",
            "3"
        ]),
        "true\n"
    );
    let (code, _, stderr) = dytri(&["generates", "--generators", "0;1", "--depth", "1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--triangle or --interval"));
}

#[test]
fn enumerate_is_sorted_and_exact() {
    assert_eq!(
        ok(&[
            "enumerate",
            "--triangle",
            "(0,0);(1,0);(0,1)",
            "--depth",
            "1"
        ]),
        "(0,0)\n(0,1/2)\n(0,1)\n(1/2,0)\n(1/2,1/2)\n(1,0)\n"
    );
}

#[test]
fn render_is_deterministic() {
    let args = ["render", "--triangle", "(0,0);(1,0);(0,1)", "--depth", "1"];
    let first = ok(&args);
    let second = ok(&args);
    assert_eq!(first, second);
    assert_eq!(first.matches("<circle").count(), 6);
    assert!(first.starts_with("<?xml"));
}

#[test]
fn render_marks_lattice_points_at_depth_zero() {
    let out = ok(&["render", "--triangle", "(0,0);(1,3);(19,0)", "--depth", "0"]);
    let expected = ok(&[
        "enumerate",
        "--triangle",
        "(0,0);(1,3);(19,0)",
        "--depth",
        "0",
    ])
    .lines()
    .count();
    assert_eq!(out.matches("<circle").count(), expected);
}

#[test]
fn output_flag_writes_a_file() {
    let dir = std::env::temp_dir().join("dytri-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.svg");
    let path_str = path.to_str().unwrap();
    let (code, stdout, _) = dytri(&[
        "render",
        "--triangle",
        "T{1,1,1,0}",
        "--depth",
        "0",
        "-o",
        path_str,
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let contents = std::fs::read_to_string(&path).unwrap();
    assert!(contents.contains("</svg>"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn exit_codes_distinguish_failures() {
    // Domain error: degenerate triangle.
    let (code, _, stderr) = dytri(&["encode", "--triangle", "(0,0);(1,1);(2,2)"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("degenerate"));
    // Domain error: non-invertible witness.
    let (code, _, stderr) = dytri(&[
        "verify",
        "--map",
        "[[3,0],[0,1]]+(0,0)",
        "--t1",
        "T{1,1,1,0}",
        "--t2",
        "T{1,1,1,0}",
    ]);
    assert_eq!(code, 1);
    assert!(stderr.contains("not invertible"));
    // Parse error names the offending token.
    let (code, _, stderr) = dytri(&["encode", "--triangle", "(0,0);(1/3,1);(2,0)"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("denominator not a power of 2"));
    assert!(stderr.contains('3'));
    // Unknown flags are usage errors.
    let (code, _, _) = dytri(&["encode", "--nope"]);
    assert_eq!(code, 2);
}

#[test]
fn printed_values_reparse() {
    // The normalize output hat re-parses as a triangle argument.
    let out = ok(&["normalize", "--triangle", "(1/2,0);(1/2,3/2);(5/2,0)"]);
    let hat = out.lines().next().unwrap();
    assert_eq!(ok(&["encode", "--triangle", hat]), "(3,3,1)\n");
    // Closure output lines re-parse under the dyadic grammar.
    let closure_out = ok(&["closure", "--generators", "0;1", "--steps", "1"]);
    for line in closure_out.lines() {
        ok(&["interval-type", line, "2"]);
    }
}
