//! Frozen end-to-end runs: each case replays a CLI invocation and diffs its
//! stdout byte-for-byte against a checked-in expectation.

use std::io::Write;

use super::{run, EXIT_MATH, EXIT_OK};

struct GoldenCase {
    name: &'static str,
    args: &'static [&'static str],
    /// Written to a temp file and substituted for the `@FILE` placeholder.
    input_file: Option<&'static str>,
    expected: &'static str,
}

const CONTEXT_TRIVIAL: &str = include_str!("../../fixtures/context_trivial.json");

const CASES: &[GoldenCase] = &[
    GoldenCase {
        name: "verify-sum-of-squares",
        args: &[
            "lgmf",
            "verify",
            "--f",
            "x^2 + y^2",
            "--p",
            "x,-y;y,x",
            "--q",
            "x,y;-y,x",
            "--format",
            "json",
        ],
        input_file: None,
        expected: include_str!("../../fixtures/golden_verify_sum_of_squares.json"),
    },
    GoldenCase {
        name: "verify-three-variable",
        args: &[
            "lgmf",
            "verify",
            "--f",
            "x*y + x*z^2 + y*z^2",
            "--p",
            "z^2,y;x,-x-y",
            "--q",
            "x+y,y;x,-z^2",
            "--format",
            "json",
        ],
        input_file: None,
        expected: include_str!("../../fixtures/golden_verify_three_variable.json"),
    },
    GoldenCase {
        name: "tensor-one-by-one",
        args: &[
            "lgmf",
            "tensor",
            "--f",
            "x^4",
            "--p",
            "x^2",
            "--q",
            "x^2",
            "--g",
            "y^6",
            "--p2",
            "y^2",
            "--q2",
            "y^4",
            "--format",
            "json",
        ],
        input_file: None,
        expected: include_str!("../../fixtures/golden_tensor_one_by_one.json"),
    },
    GoldenCase {
        name: "tensor-opposite-potentials",
        args: &[
            "lgmf",
            "tensor",
            "--f",
            "x^2 + y^2",
            "--p",
            "x,-y;y,x",
            "--q",
            "x,y;-y,x",
            "--g",
            "-x^2 - y^2",
            "--p2",
            "-x,y;-y,-x",
            "--q2",
            "x,y;-y,x",
            "--format",
            "json",
        ],
        input_file: None,
        expected: include_str!("../../fixtures/golden_tensor_opposite_potentials.json"),
    },
    GoldenCase {
        name: "morita-trivial-context",
        args: &["lgmf", "morita-check", "--file", "@FILE", "--format", "json"],
        input_file: Some(CONTEXT_TRIVIAL),
        expected: include_str!("../../fixtures/golden_morita_trivial_context.json"),
    },
];

/// Replays every golden case; reports one line per case. Returns 0 when all
/// outputs match their expectations byte-for-byte.
pub fn run_golden(out: &mut dyn Write) -> i32 {
    let mut all_ok = true;
    for case in CASES {
        let temp_path = case.input_file.map(|content| {
            let path = std::env::temp_dir().join(format!("lgmf_golden_{}.json", case.name));
            std::fs::write(&path, content).expect("temp fixture is writable");
            path
        });
        let args: Vec<String> = case
            .args
            .iter()
            .map(|a| {
                if *a == "@FILE" {
                    temp_path
                        .as_ref()
                        .expect("case with @FILE declares an input file")
                        .display()
                        .to_string()
                } else {
                    (*a).to_string()
                }
            })
            .collect();
        let mut stdout = Vec::new();
        let mut stderr = Vec::new();
        let code = run(args, &mut stdout, &mut stderr);
        if let Some(path) = temp_path {
            let _ = std::fs::remove_file(path);
        }
        let matches = code == EXIT_OK && stdout == case.expected.as_bytes();
        if matches {
            let _ = writeln!(out, "golden {}: ok", case.name);
        } else {
            all_ok = false;
            let _ = writeln!(out, "golden {}: MISMATCH (exit {code})", case.name);
            let _ = writeln!(out, "--- expected ---");
            let _ = write!(out, "{}", case.expected);
            let _ = writeln!(out, "--- actual ---");
            let _ = out.write_all(&stdout);
            let _ = out.write_all(&stderr);
        }
    }
    if all_ok {
        EXIT_OK
    } else {
        EXIT_MATH
    }
}
