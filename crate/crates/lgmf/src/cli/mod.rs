//! Command-line interface: polynomial parsing, document serialization, and
//! the subcommands wired to the library. Exit codes: 0 on pass, 1 on
//! mathematical failure, 2 on usage or parse errors.

pub mod doc;
mod golden;
pub mod parse;

pub use golden::run_golden;
pub use parse::{parse_polynomial, print_polynomial, ParseError};

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::homotopy::{search_homotopy, GradedMorphism, Homotopy};
use crate::koszul::build_delta;
use crate::matrix::PolyMatrix;
use crate::mf::{MatrixFactorization, PadVariant};
use crate::morita::{
    corollary_check, make_context, necessary_condition, non_sufficiency_witness,
    trivial_homotopy_witnesses, zero_determinant_check, LGObject, LGOneMorphism,
};
use crate::ring::{Polynomial, Variable};
use doc::{
    factorization_from_doc, factorization_to_doc, matrix_from_doc, matrix_to_doc, CheckLine,
    ContextDoc, Document, MorphismDoc, ReportDoc,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    PutFOnP,
    PutFOnQ,
}

impl From<VariantArg> for PadVariant {
    fn from(v: VariantArg) -> PadVariant {
        match v {
            VariantArg::PutFOnP => PadVariant::PutFOnP,
            VariantArg::PutFOnQ => PadVariant::PutFOnQ,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "lgmf",
    about = "Matrix factorizations of polynomials and Morita-context checks",
    disable_help_subcommand = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Re-run the bundled fixture examples and diff outputs byte-exactly.
    #[arg(long)]
    golden: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify that (P, Q) is a matrix factorization of f.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        /// Matrix literal: rows separated by ';', entries by ','.
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Enlarge a factorization, filling new diagonal entries with f and 1.
    Pad {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long)]
        target: usize,
        #[arg(long, value_enum, default_value = "put-f-on-p")]
        variant: VariantArg,
    },
    /// Yoshino tensor product of two factorizations.
    Tensor {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        p2: String,
        #[arg(long, allow_hyphen_values = true)]
        q2: String,
    },
    /// Exact determinant of a polynomial matrix.
    Det {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Build the unit factorization of f(x) - f(x').
    Delta {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        /// Comma-separated unprimed variable list, e.g. "x1,x2".
        #[arg(long)]
        vars: String,
    },
    /// Check the morphism equations for a morphism document.
    MorphismCheck {
        #[arg(long)]
        file: PathBuf,
    },
    /// Search for a homotopy witness between two morphism documents.
    HomotopySearch {
        #[arg(long)]
        psi: PathBuf,
        #[arg(long)]
        phi: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_degree: u32,
    },
    /// Run all Morita-context checks on a context document.
    MoritaCheck {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        max_degree: u32,
    },
    /// Validate a document file and re-emit it in normalized form.
    Report {
        #[arg(long)]
        file: PathBuf,
    },
}

/// A finished command: text for stdout plus the exit code.
struct CmdOutput {
    stdout: String,
    code: i32,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        CmdOutput {
            stdout,
            code: EXIT_OK,
        }
    }
}

/// An error routed to stderr with an exit code.
struct CmdFailure {
    message: String,
    code: i32,
}

impl CmdFailure {
    fn usage(err: impl std::fmt::Display) -> Self {
        CmdFailure {
            message: err.to_string(),
            code: EXIT_USAGE,
        }
    }

    fn math(err: impl std::fmt::Display) -> Self {
        CmdFailure {
            message: err.to_string(),
            code: EXIT_MATH,
        }
    }
}

type CmdResult = Result<CmdOutput, CmdFailure>;

pub fn run(args: Vec<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            } else {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            };
        }
    };
    if cli.golden {
        return run_golden(out);
    }
    let Some(command) = cli.command else {
        let _ = writeln!(err, "error: a subcommand (or --golden) is required");
        return EXIT_USAGE;
    };
    match dispatch(command, cli.format) {
        Ok(output) => {
            let _ = write!(out, "{}", output.stdout);
            output.code
        }
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

fn dispatch(command: Command, format: Format) -> CmdResult {
    match command {
        Command::Verify { f, p, q } => cmd_verify(&f, &p, &q, format),
        Command::Pad {
            f,
            p,
            q,
            target,
            variant,
        } => cmd_pad(&f, &p, &q, target, variant.into(), format),
        Command::Tensor {
            f,
            p,
            q,
            g,
            p2,
            q2,
        } => cmd_tensor(&f, &p, &q, &g, &p2, &q2, format),
        Command::Det { matrix } => cmd_det(&matrix, format),
        Command::Delta { f, vars } => cmd_delta(&f, &vars, format),
        Command::MorphismCheck { file } => cmd_morphism_check(&file, format),
        Command::HomotopySearch {
            psi,
            phi,
            max_degree,
        } => cmd_homotopy_search(&psi, &phi, max_degree, format),
        Command::MoritaCheck { file, max_degree } => cmd_morita_check(&file, max_degree, format),
        Command::Report { file } => cmd_report(&file, format),
    }
}

/// Parses a matrix literal: rows separated by ';', entries by ','.
pub fn parse_matrix_literal(text: &str) -> Result<PolyMatrix, ParseError> {
    let rows: Result<Vec<Vec<Polynomial>>, ParseError> = text
        .split(';')
        .map(|row| row.split(',').map(|e| parse_polynomial(e.trim())).collect())
        .collect();
    PolyMatrix::from_rows(rows?).map_err(|e| ParseError::Syntax {
        position: 0,
        message: e.to_string(),
    })
}

fn parse_factorization(f: &str, p: &str, q: &str) -> Result<MatrixFactorization, CmdFailure> {
    let f = parse_polynomial(f).map_err(CmdFailure::usage)?;
    let p = parse_matrix_literal(p).map_err(CmdFailure::usage)?;
    let q = parse_matrix_literal(q).map_err(CmdFailure::usage)?;
    MatrixFactorization::make(f, p, q).map_err(CmdFailure::math)
}

fn emit_factorization(mf: &MatrixFactorization, format: Format) -> CmdOutput {
    match format {
        Format::Text => CmdOutput::ok(mf.to_string()),
        Format::Json => CmdOutput::ok(Document::Factorization(factorization_to_doc(mf)).to_json()),
    }
}

fn emit_report(report: ReportDoc, format: Format) -> CmdOutput {
    let code = if report.all_pass() { EXIT_OK } else { EXIT_MATH };
    let stdout = match format {
        Format::Json => Document::Report(report).to_json(),
        Format::Text => {
            let mut text = String::new();
            for check in &report.checks {
                let status = if check.pass { "pass" } else { "FAIL" };
                let _ = writeln!(text, "{status}  {}: {}", check.name, check.detail);
            }
            text
        }
    };
    CmdOutput { stdout, code }
}

fn cmd_verify(f: &str, p: &str, q: &str, format: Format) -> CmdResult {
    let mf = parse_factorization(f, p, q)?;
    let report = ReportDoc {
        checks: vec![CheckLine {
            name: "verify".into(),
            pass: true,
            detail: format!(
                "(P,Q) is a {n}x{n} matrix factorization of {f}",
                n = mf.size(),
                f = mf.f()
            ),
        }],
    };
    Ok(emit_report(report, format))
}

fn cmd_pad(
    f: &str,
    p: &str,
    q: &str,
    target: usize,
    variant: PadVariant,
    format: Format,
) -> CmdResult {
    let mf = parse_factorization(f, p, q)?;
    let padded = mf.pad(target, variant).map_err(CmdFailure::math)?;
    Ok(emit_factorization(&padded, format))
}

fn cmd_tensor(f: &str, p: &str, q: &str, g: &str, p2: &str, q2: &str, format: Format) -> CmdResult {
    let x = parse_factorization(f, p, q)?;
    let x2 = parse_factorization(g, p2, q2)?;
    let tensor = x.yoshino_tensor(&x2);
    Ok(emit_factorization(&tensor, format))
}

fn cmd_det(matrix: &str, format: Format) -> CmdResult {
    let m = parse_matrix_literal(matrix).map_err(CmdFailure::usage)?;
    let det = m.det().map_err(CmdFailure::math)?;
    Ok(match format {
        Format::Text => CmdOutput::ok(format!("{det}\n")),
        Format::Json => CmdOutput::ok(
            Document::Polynomial {
                polynomial: det.to_string(),
            }
            .to_json(),
        ),
    })
}

fn cmd_delta(f: &str, vars: &str, format: Format) -> CmdResult {
    let f = parse_polynomial(f).map_err(CmdFailure::usage)?;
    let vars: Vec<Variable> = vars
        .split(',')
        .map(|v| Variable::new(v.trim()))
        .collect();
    let delta = build_delta(&f, &vars).map_err(CmdFailure::math)?;
    Ok(emit_factorization(&delta.as_mf(), format))
}

fn read_document(path: &PathBuf) -> Result<Document, CmdFailure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CmdFailure::usage(format!("{}: {e}", path.display())))?;
    Document::from_json(&text).map_err(CmdFailure::usage)
}

fn morphism_from_doc(doc: &MorphismDoc) -> Result<GradedMorphism, CmdFailure> {
    let source = factorization_from_doc(&doc.source).map_err(CmdFailure::math)?;
    let target = factorization_from_doc(&doc.target).map_err(CmdFailure::math)?;
    let even = matrix_from_doc(&doc.even).map_err(CmdFailure::usage)?;
    let odd = matrix_from_doc(&doc.odd).map_err(CmdFailure::usage)?;
    GradedMorphism::new(source, target, even, odd).map_err(CmdFailure::math)
}

fn expect_morphism(path: &PathBuf) -> Result<GradedMorphism, CmdFailure> {
    match read_document(path)? {
        Document::Morphism(doc) => morphism_from_doc(&doc),
        other => Err(CmdFailure::usage(format!(
            "expected a `morphism` document, found `{}`",
            other.kind()
        ))),
    }
}

fn cmd_morphism_check(file: &PathBuf, format: Format) -> CmdResult {
    let morphism = expect_morphism(file)?;
    let pass = morphism.verify_morphism();
    let report = ReportDoc {
        checks: vec![CheckLine {
            name: "morphism".into(),
            pass,
            detail: if pass {
                "morphism equations hold".into()
            } else {
                "morphism equations fail".into()
            },
        }],
    };
    Ok(emit_report(report, format))
}

fn cmd_homotopy_search(
    psi_path: &PathBuf,
    phi_path: &PathBuf,
    max_degree: u32,
    format: Format,
) -> CmdResult {
    let psi = expect_morphism(psi_path)?;
    let phi = expect_morphism(phi_path)?;
    let found = search_homotopy(&psi, &phi, max_degree).map_err(CmdFailure::math)?;
    match found {
        Some(h) => Ok(emit_homotopy(&h, format)),
        None => Err(CmdFailure::math(format!(
            "no homotopy with entries of degree <= {max_degree}; this is not a proof of non-homotopy"
        ))),
    }
}

fn emit_homotopy(h: &Homotopy, format: Format) -> CmdOutput {
    match format {
        Format::Text => {
            let mut text = String::new();
            let _ = writeln!(text, "lambda0 =");
            let _ = write!(text, "{}", h.lambda0());
            let _ = writeln!(text, "lambda1 =");
            let _ = write!(text, "{}", h.lambda1());
            CmdOutput::ok(text)
        }
        Format::Json => CmdOutput::ok(
            Document::Report(ReportDoc {
                checks: vec![CheckLine {
                    name: "homotopy".into(),
                    pass: true,
                    detail: format!(
                        "lambda0 = {:?}; lambda1 = {:?}",
                        matrix_to_doc(h.lambda0()),
                        matrix_to_doc(h.lambda1())
                    ),
                }],
            })
            .to_json(),
        ),
    }
}

fn cmd_morita_check(file: &PathBuf, max_degree: u32, format: Format) -> CmdResult {
    let ctx_doc = match read_document(file)? {
        Document::Context(doc) => doc,
        other => {
            return Err(CmdFailure::usage(format!(
                "expected a `context` document, found `{}`",
                other.kind()
            )))
        }
    };
    let report = morita_report(&ctx_doc, max_degree)?;
    Ok(emit_report(report, format))
}

/// Builds the context from its document and runs every check.
fn morita_report(ctx_doc: &ContextDoc, max_degree: u32) -> Result<ReportDoc, CmdFailure> {
    let f = parse_polynomial(&ctx_doc.f).map_err(CmdFailure::usage)?;
    let g = parse_polynomial(&ctx_doc.g).map_err(CmdFailure::usage)?;
    let source = LGObject::from_polynomial(f);
    let target = LGObject::from_polynomial(g);
    let x_mf = factorization_from_doc(&ctx_doc.x).map_err(CmdFailure::math)?;
    let y_mf = factorization_from_doc(&ctx_doc.y).map_err(CmdFailure::math)?;
    let x = LGOneMorphism::new(source.clone(), target.clone(), x_mf).map_err(CmdFailure::math)?;
    let y = LGOneMorphism::new(target, source, y_mf).map_err(CmdFailure::math)?;

    let xy = x.mf().yoshino_tensor(y.mf());
    let yx = y.mf().yoshino_tensor(x.mf());
    let delta_f = x.source().delta().map_err(CmdFailure::math)?;
    let delta_g = x.target().delta().map_err(CmdFailure::math)?;
    let eta = GradedMorphism::new(
        xy,
        delta_f.as_mf(),
        matrix_from_doc(&ctx_doc.eta.even).map_err(CmdFailure::usage)?,
        matrix_from_doc(&ctx_doc.eta.odd).map_err(CmdFailure::usage)?,
    )
    .map_err(CmdFailure::math)?;
    let rho = GradedMorphism::new(
        yx,
        delta_g.as_mf(),
        matrix_from_doc(&ctx_doc.rho.even).map_err(CmdFailure::usage)?,
        matrix_from_doc(&ctx_doc.rho.odd).map_err(CmdFailure::usage)?,
    )
    .map_err(CmdFailure::math)?;

    let trivial = eta.is_zero() && rho.is_zero();
    let ctx = make_context(x, y, eta, rho).map_err(CmdFailure::math)?;

    let mut checks = Vec::new();
    let mut push = |name: &str, pass: bool, detail: String| {
        checks.push(CheckLine {
            name: name.into(),
            pass,
            detail,
        });
    };

    let nc = necessary_condition(&ctx);
    push("eta-odd-zero", nc.eta_odd_zero, "eta^1 = 0".into());
    push("eta-even-q-zero", nc.eta_even_q_zero, "eta^0 * Q = 0".into());
    push("rho-odd-zero", nc.rho_odd_zero, "rho^1 = 0".into());
    push("rho-even-q-zero", nc.rho_even_q_zero, "rho^0 * Q' = 0".into());
    push(
        "corollary-odd-parts",
        corollary_check(&ctx),
        "eta^1 = 0 = rho^1".into(),
    );

    let zd = zero_determinant_check(ctx.x(), ctx.y()).map_err(CmdFailure::math)?;
    push(
        "zero-determinants",
        zd.all_zero(),
        format!(
            "det(P)={}, det(Q)={}, det(P')={}, det(Q')={}",
            zd.det_p, zd.det_q, zd.det_p2, zd.det_q2
        ),
    );

    let ns = non_sufficiency_witness(&ctx, max_degree);
    push(
        "q-not-invertible",
        ns.q_singular(),
        format!(
            "det(Q) = {}; eta^0*Q = 0 has solution space of dimension {} at degree <= {}",
            ns.det_q, ns.solution_space_dim, max_degree
        ),
    );

    if trivial {
        let witnesses = trivial_homotopy_witnesses(&ctx).map_err(CmdFailure::math)?;
        let zero_diagram = |h: &crate::homotopy::Homotopy| {
            let zero = GradedMorphism::zero(h.source().clone(), h.target().clone());
            crate::homotopy::verify_homotopy(h, &zero, &zero).unwrap_or(false)
        };
        let pass = zero_diagram(&witnesses.lambda) && zero_diagram(&witnesses.xi);
        push(
            "trivial-sufficient",
            pass,
            "eta = rho = 0: Morita diagrams commute with lambda = xi = 0".into(),
        );
    }

    Ok(ReportDoc { checks })
}

fn cmd_report(file: &PathBuf, format: Format) -> CmdResult {
    let document = read_document(file)?;
    Ok(match format {
        Format::Json => CmdOutput::ok(document.to_json()),
        Format::Text => CmdOutput::ok(format!("valid `{}` document\n", document.kind())),
    })
}
