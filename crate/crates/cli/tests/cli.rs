//! End-to-end runs of the `homdim` binary on the bundled data files.

use std::path::PathBuf;
use std::process::{Command, Output};

use homdim::value::DimValue;
use homdim_cli::report::{Body, Outcome, Report};

fn data(rel: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", rel].iter().collect();
    p.to_string_lossy().into_owned()
}

fn homdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homdim")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (String, Report) {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let out = homdim(&a);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let report: Report = serde_json::from_str(&text).expect("report re-parses");
    (text, report)
}

fn single(report: &Report) -> &Outcome {
    match &report.body {
        Body::Objects(objs) => &objs[0].result,
        other => panic!("{other:?}"),
    }
}

fn trivial_extension() -> String {
    data("rings/trivial_extension.json")
}

#[test]
fn resolve_residue_field_of_trivial_extension() {
    let (_, r) = json(&["resolve", "--ring", &trivial_extension(), "--object", &data("objects/residue_field.json"), "--cutoff", "8"]);
    match single(&r) {
        Outcome::Resolution { betti, .. } => {
            let totals: Vec<usize> = betti.rows.iter().map(|r| r.total()).collect();
            assert_eq!(totals, (0..=8).map(|n| 1 << n).collect::<Vec<usize>>());
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn pd_of_multiplication_by_s() {
    let (_, r) = json(&["pd", "--ring", &trivial_extension(), "--object", &data("objects/multiplication_by_s.json")]);
    match single(&r) {
        Outcome::Verdict(v) => assert_eq!(v.value, DimValue::Finite(1)),
        other => panic!("{other:?}"),
    }
}

#[test]
fn hierarchy_over_codimension_two_ci_with_registry() {
    let (_, r) = json(&[
        "hierarchy",
        "--ring",
        &data("rings/ci_x2_y3.json"),
        "--object",
        &data("objects/residue_field.json"),
        "--deformations",
        &data("deformations/ci_x2_y3.json"),
    ]);
    match single(&r) {
        Outcome::Hierarchy(h) => {
            assert!(h.holds());
            assert_eq!(h.pci.value, DimValue::Finite(0));
            assert_eq!(h.ci.value, DimValue::Finite(0));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn reports_round_trip_and_are_deterministic() {
    let r = trivial_extension();
    let k = data("objects/residue_field.json");
    let m = data("objects/maximal_ideal.json");
    let x = data("objects/multiplication_by_s.json");
    let runs: Vec<Vec<&str>> = vec![
        vec!["ring-info", "--ring", &r],
        vec!["homology", "--ring", &r, "--object", &x],
        vec!["resolve", "--ring", &r, "--object", &x, "--cutoff", "5"],
        vec!["betti", "--ring", &r, "--object", &m, "--cutoff", "5"],
        vec!["poincare", "--ring", &r, "--object", &k, "--cutoff", "6"],
        vec!["depth", "--ring", &r, "--object", &k],
        vec!["gdim", "--ring", &r, "--object", &k, "--cutoff", "4", "--window", "2"],
        vec!["pcidim", "--ring", &r, "--object", &x, "--cutoff", "4"],
        vec!["cidim-bound", "--ring", &r, "--object", &x],
        vec!["hierarchy", "--ring", &r, "--object", &k, "--object", &x, "--cutoff", "4"],
        vec!["verify", "--suite", "examples", "--seed", "3"],
    ];
    for args in runs {
        let (text, report) = json(&args);
        assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", text, "{args:?}");
        let again: Report = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
        assert_eq!(again, report);
        let (text2, _) = json(&args);
        assert_eq!(text, text2, "{args:?} is not deterministic");
    }
}

#[test]
fn verify_paper_suite_passes() {
    let out = homdim(&["verify", "--suite", "paper"]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{stdout}");
    assert_eq!(stdout.matches(" PASS: ").count(), 8, "{stdout}");
}

#[test]
fn exit_codes() {
    let r = trivial_extension();
    assert_eq!(homdim(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(homdim(&["pd", "--ring", &r]).status.code(), Some(1));
    assert_eq!(homdim(&["pd"]).status.code(), Some(1));
    assert_eq!(homdim(&["pd", "--ring", &r, "--object", &data("objects/ring.json"), "--window", "0"]).status.code(), Some(1));
    assert_eq!(homdim(&["pd", "--ring", "/nonexistent.json", "--object", "x"]).status.code(), Some(1));
    assert_eq!(homdim(&["--help"]).status.code(), Some(0));

    let dir = std::env::temp_dir().join(format!("homdim-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad_ring = dir.join("ring.json");
    std::fs::write(&bad_ring, "{\"variables\": [\"x\"],\n \"relations\": [\"x^2\", \"x*q\"]}").unwrap();
    let out = homdim(&["pd", "--ring", bad_ring.to_str().unwrap(), "--object", &data("objects/ring.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2, column 26"));

    let bad_object = dir.join("object.json");
    std::fs::write(&bad_object, r#"{"generators": [0], "relations": {"generators": [1], "matrix": [["s + 1"]]}}"#).unwrap();
    let out = homdim(&["pd", "--ring", &r, "--object", bad_object.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));

    let bad_registry = dir.join("registry.json");
    std::fs::write(&bad_registry, r#"[{"ambient_vars": ["x", "y"], "Q_relations": [], "regular_sequence": ["x^2"]}]"#).unwrap();
    let out = homdim(&["cidim-bound", "--ring", &data("rings/ci_x2_y3.json"), "--object", &data("objects/ring.json"), "--deformations", bad_registry.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}
