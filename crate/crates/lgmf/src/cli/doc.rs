//! On-disk documents: a JSON-compatible structured text format with
//! polynomials as canonical strings and matrices as row-major arrays of
//! strings. Round-trips exactly and is byte-identical across runs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::parse::{parse_polynomial, ParseError};
use crate::matrix::{MatrixError, PolyMatrix};
use crate::mf::{MatrixFactorization, MfError};
use crate::ring::Polynomial;

#[derive(Debug, Error)]
pub enum DocError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Mf(#[from] MfError),
    #[error("invalid document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("expected a `{expected}` document, found `{found}`")]
    WrongKind {
        expected: &'static str,
        found: &'static str,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactorizationDoc {
    pub f: String,
    pub p: Vec<Vec<String>>,
    pub q: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MorphismDoc {
    pub source: FactorizationDoc,
    pub target: FactorizationDoc,
    pub even: Vec<Vec<String>>,
    pub odd: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MorphismPartDoc {
    pub even: Vec<Vec<String>>,
    pub odd: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContextDoc {
    pub f: String,
    pub g: String,
    pub x: FactorizationDoc,
    pub y: FactorizationDoc,
    pub eta: MorphismPartDoc,
    pub rho: MorphismPartDoc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub checks: Vec<CheckLine>,
}

impl ReportDoc {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// The top-level document envelope.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Document {
    Polynomial { polynomial: String },
    Matrix { rows: Vec<Vec<String>> },
    Factorization(FactorizationDoc),
    Morphism(MorphismDoc),
    Context(ContextDoc),
    Report(ReportDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Polynomial { .. } => "polynomial",
            Document::Matrix { .. } => "matrix",
            Document::Factorization(_) => "factorization",
            Document::Morphism(_) => "morphism",
            Document::Context(_) => "context",
            Document::Report(_) => "report",
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("documents serialize");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Document, DocError> {
        Ok(serde_json::from_str(text)?)
    }
}

pub fn matrix_to_doc(m: &PolyMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.at(i, j).to_string()).collect())
        .collect()
}

pub fn matrix_from_doc(rows: &[Vec<String>]) -> Result<PolyMatrix, DocError> {
    let parsed: Result<Vec<Vec<Polynomial>>, ParseError> = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_polynomial(s)).collect())
        .collect();
    Ok(PolyMatrix::from_rows(parsed?)?)
}

pub fn factorization_to_doc(mf: &MatrixFactorization) -> FactorizationDoc {
    FactorizationDoc {
        f: mf.f().to_string(),
        p: matrix_to_doc(mf.p()),
        q: matrix_to_doc(mf.q()),
    }
}

pub fn factorization_from_doc(doc: &FactorizationDoc) -> Result<MatrixFactorization, DocError> {
    let f = parse_polynomial(&doc.f)?;
    let p = matrix_from_doc(&doc.p)?;
    let q = matrix_from_doc(&doc.q)?;
    Ok(MatrixFactorization::make(f, p, q)?)
}
