//! Graded morphisms of matrix factorizations, homotopy verification, and
//! bounded-degree homotopy search by exact linear solving.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::linsolve::{solve_matrix_equations, EquationTerm, MatrixEquation};
use crate::matrix::{MatrixError, PolyMatrix};
use crate::mf::MatrixFactorization;
use crate::ring::Variable;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomotopyError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("composition requires h.target = g.source")]
    SourceTargetMismatch,
    #[error("morphisms do not share source and target")]
    EndpointMismatch,
}

/// A pair of matrices (even, odd) between two factorizations, with the
/// source differential read as (d0, d1) = (P, Q). Shapes are checked on
/// construction; the morphism equations are checked by `verify_morphism`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMorphism {
    source: MatrixFactorization,
    target: MatrixFactorization,
    even: PolyMatrix,
    odd: PolyMatrix,
}

impl GradedMorphism {
    pub fn new(
        source: MatrixFactorization,
        target: MatrixFactorization,
        even: PolyMatrix,
        odd: PolyMatrix,
    ) -> Result<Self, HomotopyError> {
        for m in [&even, &odd] {
            if m.rows() != target.size() || m.cols() != source.size() {
                return Err(MatrixError::ShapeMismatch {
                    context: "graded morphism",
                    left_rows: target.size(),
                    left_cols: source.size(),
                    right_rows: m.rows(),
                    right_cols: m.cols(),
                }
                .into());
            }
        }
        Ok(GradedMorphism {
            source,
            target,
            even,
            odd,
        })
    }

    pub fn zero(source: MatrixFactorization, target: MatrixFactorization) -> Self {
        let even = PolyMatrix::zero(target.size(), source.size());
        let odd = even.clone();
        GradedMorphism::new(source, target, even, odd).expect("zero morphism has valid shapes")
    }

    pub fn identity(mf: MatrixFactorization) -> Self {
        let id = PolyMatrix::identity(mf.size());
        GradedMorphism::new(mf.clone(), mf, id.clone(), id).expect("identity has valid shapes")
    }

    pub fn source(&self) -> &MatrixFactorization {
        &self.source
    }

    pub fn target(&self) -> &MatrixFactorization {
        &self.target
    }

    pub fn even(&self) -> &PolyMatrix {
        &self.even
    }

    pub fn odd(&self) -> &PolyMatrix {
        &self.odd
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// The morphism equations: even·d1_src = d1_tgt·odd and
    /// odd·d0_src = d0_tgt·even, exactly.
    pub fn verify_morphism(&self) -> bool {
        let lhs0 = self.even.matmul(self.source.q()).expect("shapes checked");
        let rhs0 = self.target.q().matmul(&self.odd).expect("shapes checked");
        let lhs1 = self.odd.matmul(self.source.p()).expect("shapes checked");
        let rhs1 = self.target.p().matmul(&self.even).expect("shapes checked");
        lhs0 == rhs0 && lhs1 == rhs1
    }
}

/// Componentwise composition g ∘ h.
pub fn compose(g: &GradedMorphism, h: &GradedMorphism) -> Result<GradedMorphism, HomotopyError> {
    if g.source != h.target {
        return Err(HomotopyError::SourceTargetMismatch);
    }
    let even = g.even.matmul(&h.even)?;
    let odd = g.odd.matmul(&h.odd)?;
    GradedMorphism::new(h.source.clone(), g.target.clone(), even, odd)
}

/// A homotopy witness λ = (λ0, λ1) between two morphisms with the same
/// source and target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homotopy {
    source: MatrixFactorization,
    target: MatrixFactorization,
    lambda0: PolyMatrix,
    lambda1: PolyMatrix,
}

impl Homotopy {
    pub fn new(
        source: MatrixFactorization,
        target: MatrixFactorization,
        lambda0: PolyMatrix,
        lambda1: PolyMatrix,
    ) -> Result<Self, HomotopyError> {
        for m in [&lambda0, &lambda1] {
            if m.rows() != target.size() || m.cols() != source.size() {
                return Err(MatrixError::ShapeMismatch {
                    context: "homotopy",
                    left_rows: target.size(),
                    left_cols: source.size(),
                    right_rows: m.rows(),
                    right_cols: m.cols(),
                }
                .into());
            }
        }
        Ok(Homotopy {
            source,
            target,
            lambda0,
            lambda1,
        })
    }

    pub fn zero(source: MatrixFactorization, target: MatrixFactorization) -> Self {
        let z = PolyMatrix::zero(target.size(), source.size());
        Homotopy::new(source, target, z.clone(), z).expect("zero homotopy has valid shapes")
    }

    pub fn source(&self) -> &MatrixFactorization {
        &self.source
    }

    pub fn target(&self) -> &MatrixFactorization {
        &self.target
    }

    pub fn lambda0(&self) -> &PolyMatrix {
        &self.lambda0
    }

    pub fn lambda1(&self) -> &PolyMatrix {
        &self.lambda1
    }

    pub fn is_zero(&self) -> bool {
        self.lambda0.is_zero() && self.lambda1.is_zero()
    }

    pub fn neg(&self) -> Homotopy {
        Homotopy {
            source: self.source.clone(),
            target: self.target.clone(),
            lambda0: self.lambda0.neg(),
            lambda1: self.lambda1.neg(),
        }
    }

    pub fn add(&self, other: &Homotopy) -> Result<Homotopy, HomotopyError> {
        if self.source != other.source || self.target != other.target {
            return Err(HomotopyError::EndpointMismatch);
        }
        Ok(Homotopy {
            source: self.source.clone(),
            target: self.target.clone(),
            lambda0: self.lambda0.add(&other.lambda0)?,
            lambda1: self.lambda1.add(&other.lambda1)?,
        })
    }
}

/// Checks d0_tgt·λ0 + λ1·d0_src = ψ.even - φ.even and
/// d1_tgt·λ1 + λ0·d1_src = ψ.odd - φ.odd.
pub fn verify_homotopy(
    h: &Homotopy,
    psi: &GradedMorphism,
    phi: &GradedMorphism,
) -> Result<bool, HomotopyError> {
    if psi.source != phi.source
        || psi.target != phi.target
        || h.source != psi.source
        || h.target != psi.target
    {
        return Err(HomotopyError::EndpointMismatch);
    }
    let even_lhs = h
        .target
        .p()
        .matmul(&h.lambda0)?
        .add(&h.lambda1.matmul(h.source.p())?)?;
    let even_rhs = psi.even.sub(&phi.even)?;
    let odd_lhs = h
        .target
        .q()
        .matmul(&h.lambda1)?
        .add(&h.lambda0.matmul(h.source.q())?)?;
    let odd_rhs = psi.odd.sub(&phi.odd)?;
    Ok(even_lhs == even_rhs && odd_lhs == odd_rhs)
}

fn combined_variables(mats: &[&PolyMatrix]) -> Vec<Variable> {
    let set: BTreeSet<Variable> = mats.iter().flat_map(|m| m.variables()).collect();
    set.into_iter().collect()
}

/// Searches for a homotopy witness with entries of total degree at most
/// `degree_bound` by exact linear solving. `None` means no witness exists
/// at this bound; it is not a proof that the morphisms are non-homotopic.
pub fn search_homotopy(
    psi: &GradedMorphism,
    phi: &GradedMorphism,
    degree_bound: u32,
) -> Result<Option<Homotopy>, HomotopyError> {
    if psi.source != phi.source || psi.target != phi.target {
        return Err(HomotopyError::EndpointMismatch);
    }
    let source = &psi.source;
    let target = &psi.target;
    let diff_even = psi.even.sub(&phi.even)?;
    let diff_odd = psi.odd.sub(&phi.odd)?;
    let vars = combined_variables(&[
        source.p(),
        source.q(),
        target.p(),
        target.q(),
        &diff_even,
        &diff_odd,
    ]);
    let shape = (target.size(), source.size());
    let equations = [
        MatrixEquation {
            terms: vec![
                EquationTerm {
                    left: Some(target.p()),
                    unknown: 0,
                    right: None,
                    negate: false,
                },
                EquationTerm {
                    left: None,
                    unknown: 1,
                    right: Some(source.p()),
                    negate: false,
                },
            ],
            rhs: diff_even.clone(),
        },
        MatrixEquation {
            terms: vec![
                EquationTerm {
                    left: Some(target.q()),
                    unknown: 1,
                    right: None,
                    negate: false,
                },
                EquationTerm {
                    left: None,
                    unknown: 0,
                    right: Some(source.q()),
                    negate: false,
                },
            ],
            rhs: diff_odd.clone(),
        },
    ];
    let Some(solutions) = solve_matrix_equations(&[shape, shape], &equations, &vars, degree_bound)
    else {
        return Ok(None);
    };
    let [lambda0, lambda1]: [PolyMatrix; 2] = solutions
        .particular
        .try_into()
        .expect("two unknowns were requested");
    Ok(Some(Homotopy::new(
        source.clone(),
        target.clone(),
        lambda0,
        lambda1,
    )?))
}

/// Solves the morphism equations between two factorizations for (even, odd)
/// with entries of total degree at most `degree_bound`. Returns the
/// particular solution followed by a basis of the solution space; every
/// returned morphism passes `verify_morphism`.
pub fn solve_morphism_system(
    source: &MatrixFactorization,
    target: &MatrixFactorization,
    degree_bound: u32,
) -> Vec<GradedMorphism> {
    let vars = combined_variables(&[source.p(), source.q(), target.p(), target.q()]);
    let shape = (target.size(), source.size());
    let zero_rhs = PolyMatrix::zero(target.size(), source.size());
    let equations = [
        // even·Q_src - T_tgt·odd = 0
        MatrixEquation {
            terms: vec![
                EquationTerm {
                    left: None,
                    unknown: 0,
                    right: Some(source.q()),
                    negate: false,
                },
                EquationTerm {
                    left: Some(target.q()),
                    unknown: 1,
                    right: None,
                    negate: true,
                },
            ],
            rhs: zero_rhs.clone(),
        },
        // odd·P_src - R_tgt·even = 0
        MatrixEquation {
            terms: vec![
                EquationTerm {
                    left: None,
                    unknown: 1,
                    right: Some(source.p()),
                    negate: false,
                },
                EquationTerm {
                    left: Some(target.p()),
                    unknown: 0,
                    right: None,
                    negate: true,
                },
            ],
            rhs: zero_rhs,
        },
    ];
    let solutions = solve_matrix_equations(&[shape, shape], &equations, &vars, degree_bound)
        .expect("homogeneous system is always consistent");
    let mut out = Vec::new();
    let mut push = |mats: &[PolyMatrix]| {
        let morphism = GradedMorphism::new(
            source.clone(),
            target.clone(),
            mats[0].clone(),
            mats[1].clone(),
        )
        .expect("solver preserves shapes");
        debug_assert!(morphism.verify_morphism());
        out.push(morphism);
    };
    push(&solutions.particular);
    for basis in &solutions.nullspace {
        push(basis);
    }
    out
}
