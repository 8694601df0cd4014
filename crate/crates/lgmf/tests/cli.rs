//! Black-box tests of the `lgmf` binary: exit codes, output formats, and
//! rerun determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn lgmf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lgmf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

#[test]
fn verify_pass_fail_and_usage_exit_codes() {
    let good = lgmf(&["verify", "--f", "x^2 + y^2", "--p", "x,-y;y,x", "--q", "x,y;-y,x"]);
    assert_eq!(good.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&good.stdout).contains("pass"));

    let wrong_pair = lgmf(&["verify", "--f", "x^2 + y^2", "--p", "x,y;y,x", "--q", "x,y;-y,x"]);
    assert_eq!(wrong_pair.status.code(), Some(1));
    assert!(wrong_pair.stdout.is_empty());
    assert!(String::from_utf8_lossy(&wrong_pair.stderr).contains("PQ differs"));

    let bad_poly = lgmf(&["verify", "--f", "x +", "--p", "x", "--q", "x"]);
    assert_eq!(bad_poly.status.code(), Some(2));

    let no_subcommand = lgmf(&[]);
    assert_eq!(no_subcommand.status.code(), Some(2));

    let unknown_flag = lgmf(&["verify", "--nope"]);
    assert_eq!(unknown_flag.status.code(), Some(2));
}

#[test]
fn pad_tensor_det_delta_outputs() {
    let pad = lgmf(&[
        "pad", "--f", "x^2", "--p", "x", "--q", "x", "--target", "2", "--variant", "put-f-on-q",
        "--format", "json",
    ]);
    assert_eq!(pad.status.code(), Some(0));
    let text = String::from_utf8(pad.stdout).unwrap();
    assert!(text.contains("\"kind\": \"factorization\""));
    assert!(text.contains("x^2"));

    let det = lgmf(&["det", "--matrix", "x,-y;y,x"]);
    assert_eq!(det.status.code(), Some(0));
    assert_eq!(String::from_utf8(det.stdout).unwrap(), "x^2 + y^2\n");

    let tensor = lgmf(&[
        "tensor", "--f", "x^2", "--p", "x", "--q", "x", "--g", "y^2", "--p2", "y", "--q2", "y",
    ]);
    assert_eq!(tensor.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&tensor.stdout).contains("x^2 + y^2"));

    let delta = lgmf(&["delta", "--f", "x^2", "--vars", "x"]);
    assert_eq!(delta.status.code(), Some(0));
    let text = String::from_utf8(delta.stdout).unwrap();
    assert!(text.contains("x + x'"));
    assert!(text.contains("x - x'"));
}

#[test]
fn report_normalizes_and_morita_check_passes_fixture() {
    let ctx = fixture("context_trivial.json");
    let report = lgmf(&["report", "--file", ctx.to_str().unwrap(), "--format", "json"]);
    assert_eq!(report.status.code(), Some(0));
    let normalized = String::from_utf8(report.stdout).unwrap();
    assert!(normalized.contains("\"kind\": \"context\""));

    let check = lgmf(&["morita-check", "--file", ctx.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0));
    let text = String::from_utf8(check.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("pass")));

    let missing = lgmf(&["morita-check", "--file", "/nonexistent.json"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn golden_and_reruns_are_byte_identical() {
    let first = lgmf(&["--golden"]);
    assert_eq!(first.status.code(), Some(0));
    let second = lgmf(&["--golden"]);
    assert_eq!(first.stdout, second.stdout);

    let args = [
        "tensor", "--f", "x^2 + y^2", "--p", "x,-y;y,x", "--q", "x,y;-y,x", "--g", "-x^2 - y^2",
        "--p2", "-x,y;-y,-x", "--q2", "x,y;-y,x", "--format", "json",
    ];
    assert_eq!(lgmf(&args).stdout, lgmf(&args).stdout);
}

#[test]
fn morphism_check_and_homotopy_search_files() {
    let dir = std::env::temp_dir().join("lgmf_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let factorization = r#"{"f": "x^2 + y^2",
        "p": [["x", "-y"], ["y", "x"]],
        "q": [["x", "y"], ["-y", "x"]]}"#;
    let identity = format!(
        r#"{{"kind": "morphism", "source": {factorization}, "target": {factorization},
            "even": [["1", "0"], ["0", "1"]], "odd": [["1", "0"], ["0", "1"]]}}"#
    );
    let zero = format!(
        r#"{{"kind": "morphism", "source": {factorization}, "target": {factorization},
            "even": [["0", "0"], ["0", "0"]], "odd": [["0", "0"], ["0", "0"]]}}"#
    );
    let swap = format!(
        r#"{{"kind": "morphism", "source": {factorization}, "target": {factorization},
            "even": [["0", "1"], ["1", "0"]], "odd": [["0", "1"], ["1", "0"]]}}"#
    );
    let id_path = dir.join("identity.json");
    let zero_path = dir.join("zero.json");
    let swap_path = dir.join("swap.json");
    std::fs::write(&id_path, &identity).unwrap();
    std::fs::write(&zero_path, &zero).unwrap();
    std::fs::write(&swap_path, &swap).unwrap();

    let ok = lgmf(&["morphism-check", "--file", id_path.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));

    let not_a_morphism = lgmf(&["morphism-check", "--file", swap_path.to_str().unwrap()]);
    assert_eq!(not_a_morphism.status.code(), Some(1));

    // ψ = φ: found, with the zero witness.
    let trivial = lgmf(&[
        "homotopy-search", "--psi", id_path.to_str().unwrap(), "--phi",
        id_path.to_str().unwrap(),
    ]);
    assert_eq!(trivial.status.code(), Some(0));

    // Identity vs zero: no witness at the bound, mathematical failure.
    let absent = lgmf(&[
        "homotopy-search", "--psi", id_path.to_str().unwrap(), "--phi",
        zero_path.to_str().unwrap(), "--max-degree", "3",
    ]);
    assert_eq!(absent.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&absent.stderr).contains("no homotopy"));
}
