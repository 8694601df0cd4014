//! Matrix factorizations (P, Q) with PQ = f·I: verification, padding,
//! transpose closure, the Yoshino tensor product, and determinant identities.

use std::fmt;

use thiserror::Error;

use crate::matrix::{MatrixError, PolyMatrix};
use crate::ring::Polynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MfError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("PQ differs from f*I at entry ({row},{col}): found `{found}`, expected `{expected}`")]
    NotAFactorization {
        row: usize,
        col: usize,
        found: Polynomial,
        expected: Polynomial,
    },
    #[error("target size {target} does not exceed current size {current}")]
    TargetTooSmall { target: usize, current: usize },
    #[error("operation requires a nonzero factored polynomial")]
    ZeroPolynomial,
}

/// Which matrix receives the new `f` diagonal entries when padding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PadVariant {
    PutFOnP,
    PutFOnQ,
}

/// A pair of n×n matrices (P, Q) with P·Q = f·Iₙ, verified on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixFactorization {
    f: Polynomial,
    p: PolyMatrix,
    q: PolyMatrix,
}

impl MatrixFactorization {
    /// Builds the factorization after checking P·Q = f·Iₙ exactly.
    pub fn make(f: Polynomial, p: PolyMatrix, q: PolyMatrix) -> Result<Self, MfError> {
        if !p.is_square() || p.rows() != q.rows() || p.cols() != q.cols() {
            return Err(MatrixError::ShapeMismatch {
                context: "matrix factorization",
                left_rows: p.rows(),
                left_cols: p.cols(),
                right_rows: q.rows(),
                right_cols: q.cols(),
            }
            .into());
        }
        let product = p.matmul(&q)?;
        let n = p.rows();
        for i in 0..n {
            for j in 0..n {
                let expected = if i == j { f.clone() } else { Polynomial::zero() };
                if *product.at(i, j) != expected {
                    return Err(MfError::NotAFactorization {
                        row: i,
                        col: j,
                        found: product.at(i, j).clone(),
                        expected,
                    });
                }
            }
        }
        Ok(MatrixFactorization { f, p, q })
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn p(&self) -> &PolyMatrix {
        &self.p
    }

    pub fn q(&self) -> &PolyMatrix {
        &self.q
    }

    pub fn size(&self) -> usize {
        self.p.rows()
    }

    /// Checks Q·P = f·Iₙ by multiplication. Always true for a constructed
    /// factorization of nonzero f; exposed as a runtime assertion.
    pub fn commute_check(&self) -> bool {
        let product = self.q.matmul(&self.p).expect("square factors");
        product == PolyMatrix::scalar(self.size(), &self.f)
    }

    /// The factorization (Qᵗ, Pᵗ) of the same f.
    pub fn transpose_mf(&self) -> MatrixFactorization {
        MatrixFactorization::make(self.f.clone(), self.q.transpose(), self.p.transpose())
            .expect("transpose of a factorization verifies")
    }

    /// Enlarges the factorization to `target` by filling new diagonal
    /// entries with f on the chosen matrix and 1 on the other.
    pub fn pad(&self, target: usize, variant: PadVariant) -> Result<MatrixFactorization, MfError> {
        let n = self.size();
        if target <= n {
            return Err(MfError::TargetTooSmall { target, current: n });
        }
        let extend = |m: &PolyMatrix, diag: &Polynomial| {
            PolyMatrix::from_fn(target, target, |i, j| {
                if i < n && j < n {
                    m.at(i, j).clone()
                } else if i == j {
                    diag.clone()
                } else {
                    Polynomial::zero()
                }
            })
        };
        let (p, q) = match variant {
            PadVariant::PutFOnP => (extend(&self.p, &self.f), extend(&self.q, &Polynomial::one())),
            PadVariant::PutFOnQ => (extend(&self.p, &Polynomial::one()), extend(&self.q, &self.f)),
        };
        MatrixFactorization::make(self.f.clone(), p, q)
    }

    /// Yoshino tensor product: for X = (φ, ψ) of f and X' = (φ', ψ') of g,
    /// the block pair
    /// ([[φ⊗1, 1⊗φ'], [-1⊗ψ', ψ⊗1]], [[ψ⊗1, -1⊗φ'], [1⊗ψ', φ⊗1]])
    /// of size 2nm, a factorization of f+g. Shared variables are read over
    /// the combined ring; renaming is the caller's job.
    pub fn yoshino_tensor(&self, other: &MatrixFactorization) -> MatrixFactorization {
        let (n, m) = (self.size(), other.size());
        let in_ = PolyMatrix::identity(n);
        let im = PolyMatrix::identity(m);
        let phi_1 = self.p.kron(&im);
        let psi_1 = self.q.kron(&im);
        let one_phi = in_.kron(&other.p);
        let one_psi = in_.kron(&other.q);
        let p = PolyMatrix::block2x2(&phi_1, &one_phi, &one_psi.neg(), &psi_1)
            .expect("tensor blocks are conformable");
        let q = PolyMatrix::block2x2(&psi_1, &one_phi.neg(), &one_psi, &phi_1)
            .expect("tensor blocks are conformable");
        MatrixFactorization::make(&self.f + &other.f, p, q)
            .expect("Yoshino tensor product verifies against f+g")
    }

    /// Checks that det(P) divides fⁿ by exact division. Errors on f = 0,
    /// where the divisibility statement has no content.
    pub fn det_divides_power(&self) -> Result<bool, MfError> {
        if self.f.is_zero() {
            return Err(MfError::ZeroPolynomial);
        }
        let det_p = self.p.det()?;
        if det_p.is_zero() {
            return Ok(false);
        }
        let power = self.f.pow(self.size() as u32);
        Ok(power.exact_divide(&det_p).is_ok())
    }
}

impl fmt::Display for MatrixFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "factorization of {} at size {}", self.f, self.size())?;
        writeln!(f, "P =")?;
        write!(f, "{}", self.p)?;
        writeln!(f, "Q =")?;
        write!(f, "{}", self.q)
    }
}

/// Determinants of both tensor orderings X⊗̂X' = (P, Q) and X'⊗̂X = (P', Q').
/// All four equal (f+g)^{nm}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorDeterminants {
    pub det_p: Polynomial,
    pub det_q: Polynomial,
    pub det_p2: Polynomial,
    pub det_q2: Polynomial,
}

impl TensorDeterminants {
    pub fn all_equal(&self) -> bool {
        self.det_p == self.det_q && self.det_p == self.det_p2 && self.det_p == self.det_q2
    }

    pub fn all_zero(&self) -> bool {
        self.det_p.is_zero() && self.all_equal()
    }
}

/// Computes the four determinants of X⊗̂X' and X'⊗̂X and asserts they all
/// equal (f+g)^{nm}.
pub fn tensor_determinants(
    x: &MatrixFactorization,
    x2: &MatrixFactorization,
) -> TensorDeterminants {
    let forward = x.yoshino_tensor(x2);
    let backward = x2.yoshino_tensor(x);
    let dets = TensorDeterminants {
        det_p: forward.p().det().expect("square"),
        det_q: forward.q().det().expect("square"),
        det_p2: backward.p().det().expect("square"),
        det_q2: backward.q().det().expect("square"),
    };
    let nm = (x.size() * x2.size()) as u32;
    let closed_form = (x.f() + x2.f()).pow(nm);
    assert!(
        dets.all_equal() && dets.det_p == closed_form,
        "tensor determinants must all equal (f+g)^nm"
    );
    dets
}
