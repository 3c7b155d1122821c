use std::path::PathBuf;

use gralg_cli::run;
use serde_json::Value;

fn example(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "examples", name].iter().collect();
    p.display().to_string()
}

fn gralg(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gralg").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn record(stdout: &str) -> Value {
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 1, "{stdout}");
    serde_json::from_str(lines[0]).unwrap()
}

#[test]
fn graded_csa_route_on_quaternions() {
    let (code, out, _) = gralg(&[
        "check",
        "azumaya",
        "--via",
        "graded-csa",
        &example("quaternion-z2z2.alg"),
    ]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(record(&out)["verdicts"][0]["verdict"], "true");
    for via in ["psi", "braun"] {
        let (code, out, _) = gralg(&["check", "azumaya", "--via", via, &example("quaternion-z2z2.alg")]);
        assert_eq!(code, 0, "{via}: {out}");
    }
}

#[test]
fn localized_comparison_reports_mismatch() {
    let (code, out, _) = gralg(&["k0", "--compare-localized", "2", &example("quaternion-z2z2.alg")]);
    assert_eq!(code, 1);
    let r = record(&out);
    assert_eq!(r["verdicts"][0]["witness"], "NOT isomorphic: Z vs Z^4");
    assert_eq!(r["values"]["k0gr"], "Z");
    assert_eq!(r["values"]["base_k0gr"], "Z^4");
}

#[test]
fn shift_classification() {
    let (code, out, _) = gralg(&[
        "classify-shift",
        "--base",
        "trivial-K",
        "--group",
        "Z",
        "(0,1,1)",
        "(1,2,2)",
    ]);
    assert_eq!(code, 0, "{out}");
    let r = record(&out);
    assert_eq!(r["values"]["sigma_1"], "1");
    assert_eq!(r["verdicts"][0]["children"][0]["predicate"], "graded-isomorphism");
    assert_eq!(r["verdicts"][0]["children"][0]["verdict"], "true");
    let (code, out, _) = gralg(&["classify-shift", "(0,1,1)", "(0,1,2)"]);
    assert_eq!(code, 1, "{out}");
    assert_eq!(record(&out)["values"]["classes"], serde_json::json!([[0], [1]]));
}

#[test]
fn laurent_matrix_k0() {
    for f in ["laurent-matrix-q.alg", "laurent-matrix-gf5.alg"] {
        let (code, out, _) = gralg(&["k0", "--graded", &example(f)]);
        assert_eq!(code, 0, "{out}");
        let r = record(&out);
        assert_eq!(r["values"]["k0gr"], "Z^2");
        assert_eq!(r["values"]["identity_component"], "[(1,1), (2,1)]");
    }
    let (code, _, _) = gralg(&["check", "strongly-graded", &example("laurent-matrix-q.alg")]);
    assert_eq!(code, 0);
}

#[test]
fn group_rings() {
    let (code, _, _) = gralg(&["check", "azumaya", "--via", "group-ring", &example("s3-rational.alg")]);
    assert_eq!(code, 0);
    let (code, out, _) = gralg(&["check", "azumaya", "--via", "group-ring", &example("s3-gf3.alg")]);
    assert_eq!(code, 1, "{out}");
    let (code, out, _) = gralg(&["k0", &example("s3-rational.alg")]);
    assert_eq!(code, 0);
    assert_eq!(record(&out)["values"]["k0"], "Z^3");
}

#[test]
fn commutator_report() {
    let (code, out, _) = gralg(&["commutators", &example("symbol-gf7.alg")]);
    assert_eq!(code, 0, "{out}");
    let r = record(&out);
    assert_eq!(r["values"]["dim_commutators"], 8);
    let supp = r["values"]["supp_commutators"].as_array().unwrap();
    assert_eq!(supp.len(), 8);
    assert!(!supp.iter().any(|d| d == "(0,0)"));
}

#[test]
fn exact_sequence() {
    let (code, out, _) = gralg(&["k0", "--exact-sequence", &example("symbol-gf5.alg")]);
    assert_eq!(code, 0);
    let r = record(&out);
    assert_eq!(
        (r["values"]["zk0"].as_str(), r["values"]["ck0"].as_str()),
        (Some("0"), Some("Z/2"))
    );
}

#[test]
fn reports_are_deterministic_across_thread_counts() {
    let file = example("symbol-gf7.alg");
    let (_, a, _) = gralg(&["--seed", "7", "check", "graded-simple", &file]);
    let (_, b, _) = gralg(&["--seed", "7", "--threads", "1", "check", "graded-simple", &file]);
    let (_, c, _) = gralg(&["--seed", "7", "--threads", "4", "check", "graded-simple", &file]);
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn malformed_input_exits_3_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.alg");
    std::fs::write(&path, "[algebra]\nfield = Q\nbasis = 1 x\n\n[products]\n1 * y = x\n").unwrap();
    let (code, out, err) = gralg(&["check", "grading", path.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(err.contains("bad.alg:6:"), "{err}");
    assert!(record(&out)["error"].as_str().unwrap().contains("`y`"));
    let (code, _, _) = gralg(&["check", "grading", "/nonexistent/file.alg"]);
    assert_eq!(code, 3);
    let (code, _, _) = gralg(&["frobnicate"]);
    assert_eq!(code, 3);
}

#[test]
fn undecided_exit_code() {
    // (-1,3) over Q is division but its norm form is indefinite, so no certificate applies.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.alg");
    let (_, text, _) = gralg(&["construct", "quaternion", "--a", "-1", "--b", "3"]);
    std::fs::write(&path, text).unwrap();
    let (code, out, _) = gralg(&["k0", "--exact-sequence", path.to_str().unwrap()]);
    assert_eq!(code, 2, "{out}");
    let r = record(&out);
    assert_eq!(r["verdicts"][0]["verdict"], "undecided");
    assert_eq!(r["values"]["k0"], "Z");
}

#[test]
fn constructed_files_round_trip() {
    let cases: &[&[&str]] = &[
        &["construct", "quaternion", "--a", "-1", "--b", "-1", "--grading", "Z2"],
        &[
            "construct",
            "symbol",
            "--field",
            "GF(7)",
            "--n",
            "3",
            "--a",
            "3",
            "--b",
            "5",
            "--xi",
            "2",
        ],
        &[
            "construct",
            "symbol",
            "--field",
            "GF(5)",
            "--n",
            "2",
            "--a",
            "2",
            "--b",
            "3",
            "--xi",
            "4",
            "--explicit",
        ],
        &["construct", "group-ring", "--group", "Z/3"],
        &["construct", "shifted-laurent", "--step", "2", "--shift", "(0,1,1)"],
        &["construct", "checkerboard", "--explicit"],
    ];
    let dir = tempfile::tempdir().unwrap();
    for (k, args) in cases.iter().enumerate() {
        let (code, text, err) = gralg(args);
        assert_eq!(code, 0, "{err}");
        let def = gralg_core::parse_definition(&text).unwrap();
        assert_eq!(gralg_core::serialize_definition(&def), text);
        let path = dir.path().join(format!("c{k}.alg"));
        std::fs::write(&path, &text).unwrap();
        let (code, out, _) = gralg(&["check", "grading", path.to_str().unwrap()]);
        assert_eq!(code, 0, "{out}");
    }
    let (code, _, err) = gralg(&[
        "construct",
        "symbol",
        "--field",
        "GF(7)",
        "--n",
        "3",
        "--a",
        "1",
        "--b",
        "1",
        "--xi",
        "1",
    ]);
    assert_eq!(code, 3);
    assert!(err.contains("primitive"), "{err}");
    let (code, _, _) = gralg(&["construct", "quaternion", "--field", "GF(3)", "--a", "1", "--b", "1"]);
    assert_eq!(code, 0);
}

#[test]
fn example_files_are_canonical() {
    let dir: PathBuf = [env!("CARGO_MANIFEST_DIR"), "examples"].iter().collect();
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("alg") {
            continue;
        }
        let text = std::fs::read_to_string(&path).unwrap();
        let def = gralg_core::parse_definition(&text).unwrap();
        let again = gralg_core::parse_definition(&gralg_core::serialize_definition(&def)).unwrap();
        assert_eq!(
            gralg_core::serialize_definition(&again),
            gralg_core::serialize_definition(&def)
        );
        seen += 1;
    }
    assert!(seen >= 8);
}
