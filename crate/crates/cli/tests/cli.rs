use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

fn grpd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grpd"))
        .args(args)
        .current_dir(data())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str, args: &[&str], code: i32) {
    let o = grpd(args);
    assert_eq!(
        o.status.code(),
        Some(code),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    let expected = fs::read_to_string(&path).unwrap();
    assert_eq!(stdout(&o), expected, "{args:?} differs from {name}");
}

#[test]
fn golden_reports() {
    golden("analyze_qz2.txt", &["analyze", "qz2.json"], 0);
    golden("analyze_qz2.json", &["analyze", "--json", "qz2.json"], 0);
    golden(
        "check_action_p3.txt",
        &["check-action", "p3_broken.json"],
        1,
    );
    golden(
        "check_action_p3.json",
        &["check-action", "--json", "p3_broken.json"],
        1,
    );
    golden("leavitt_a3.txt", &["leavitt", "a3.json"], 0);
    golden("leavitt_loop.txt", &["leavitt", "loop.json"], 0);
    golden("leavitt_tree.json", &["leavitt", "--json", "tree.json"], 0);
    golden("matrix_ring_2.txt", &["matrix-ring", "--n", "2"], 0);
    golden(
        "globalize_partial_pair.txt",
        &["globalize", "partial_pair.json"],
        0,
    );
    golden("maschke_f2.txt", &["maschke", "swap_f2.json"], 0);
    golden(
        "partial_group_z2.txt",
        &["partial-group-algebra", "z2.json"],
        0,
    );
}

#[test]
fn analyze_group_algebra_of_z2() {
    let o = grpd(&["analyze", "--json", "qz2.json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dim"], 2);
    assert_eq!(v["semisimple"], true);
    assert_eq!(v["blocks"], serde_json::json!([1, 1]));
}

#[test]
fn loop_is_classified_not_built() {
    let o = grpd(&["leavitt", "loop.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: not artinian (finite and acyclic required)"));
    assert!(!stdout(&o).contains("dim:"));
}

#[test]
fn exit_codes() {
    assert_eq!(grpd(&["check-groupoid", "z2.json"]).status.code(), Some(0));
    assert_eq!(
        grpd(&["check-groupoid", "bad_groupoid.json"]).status.code(),
        Some(1)
    );
    assert_eq!(grpd(&["check-action", "swap.json"]).status.code(), Some(0));
    // Building from an invalid action lists the violations.
    let o = grpd(&["build-skew", "p3_broken.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("violation: P3"));
    for args in [
        &["leavitt", "truncated.json"][..],
        &["analyze", "missing.json"],
        &["analyze", "a2.json"],
        &["leavitt", "a2.json", "--field", "4"],
        &["partial-group-algebra"],
        &["no-such-verb"],
    ] {
        let o = grpd(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let o = grpd(&["leavitt", "truncated.json"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["leavitt", "--json", "tree.json"][..],
        &["globalize", "--json", "partial_pair.json"],
        &["partial-group-algebra", "--cyclic", "3", "--json"],
        &["maschke", "swap_f3.json"],
    ] {
        assert_eq!(grpd(args).stdout, grpd(args).stdout, "{args:?}");
    }
}

#[test]
fn dumps_round_trip() {
    let dir = std::env::temp_dir().join(format!("grpd-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let s = |p: &Path| p.to_str().unwrap().to_string();

    let skew = dir.join("skew.json");
    let built = grpd(&["build-skew", "swap.json", "--dump", &s(&skew)]);
    assert_eq!(built.status.code(), Some(0));
    let analyzed = grpd(&["analyze", &s(&skew)]);
    assert_eq!(analyzed.status.code(), Some(0));
    // The dump drops the grading, so only the ungraded facts must agree.
    let ungraded = |o: &Output| -> Vec<String> {
        stdout(o)
            .lines()
            .filter(|l| !l.starts_with("grading_ok"))
            .map(String::from)
            .collect()
    };
    assert_eq!(ungraded(&analyzed), ungraded(&built));

    // The globalization of a partial action is itself a valid global action.
    let glob = dir.join("glob.json");
    assert_eq!(
        grpd(&["globalize", "vanishing.json", "--dump", &s(&glob)])
            .status
            .code(),
        Some(0)
    );
    let check = grpd(&["check-action", &s(&glob)]);
    assert_eq!(check.status.code(), Some(0));
    assert!(stdout(&check).contains("global: true"));
    let again = dir.join("glob2.json");
    assert_eq!(
        grpd(&["globalize", &s(&glob), "--dump", &s(&again)])
            .status
            .code(),
        Some(0)
    );

    let alg = dir.join("ring.json");
    grpd(&["matrix-ring", "--n", "2", "--dump", &s(&alg)]);
    let text = fs::read_to_string(&alg).unwrap();
    let doc: grpd_core::schema::AlgebraDoc = grpd_core::schema::from_json(&text).unwrap();
    assert_eq!(grpd_core::schema::to_json(&doc), text);
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn coefficient_rings_by_component() {
    let o = grpd(&["groupoid-ring", "pair2.json", "--coeff", "qz2.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dim: 8"));
    assert!(stdout(&o).contains("blocks: [4, 4]"));
    let o = grpd(&[
        "groupoid-ring",
        "pair2.json",
        "--coeff",
        "qz2.json",
        "--coeff",
        "qz2.json",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = grpd(&["matrix-ring", "--n", "2", "--coeff", "dual.json"]);
    assert!(stdout(&o).contains("radical_dim: 4"));
}
