//! Landau-Ginzburg objects and 1-morphisms, Morita-context data, and the
//! checkers for the necessary conditions, the vanishing-determinant
//! obstruction, and the trivial sufficient condition.

use thiserror::Error;

use crate::homotopy::{GradedMorphism, Homotopy, HomotopyError};
use crate::koszul::{build_delta, DeltaFactorization, KoszulError};
use crate::linsolve::{solve_matrix_equations, EquationTerm, MatrixEquation};
use crate::matrix::PolyMatrix;
use crate::mf::{MatrixFactorization, MfError};
use crate::ring::{Polynomial, Variable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoritaError {
    #[error("expected a factorization of `{expected}`, received one of `{found}`")]
    PolynomialMismatch {
        expected: Polynomial,
        found: Polynomial,
    },
    #[error("polynomial `{0}` uses a variable outside the declared list")]
    UndeclaredVariable(Polynomial),
    #[error("potential `{0}` is constant; the invertibility hypothesis fails")]
    ConstantPotential(Polynomial),
    #[error("{role} is not a morphism of factorizations")]
    NotAMorphism { role: &'static str },
    #[error(transparent)]
    Mf(#[from] MfError),
    #[error(transparent)]
    Koszul(#[from] KoszulError),
    #[error(transparent)]
    Homotopy(#[from] HomotopyError),
}

/// An object (R, f): a polynomial over a declared ordered variable list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LGObject {
    variables: Vec<Variable>,
    f: Polynomial,
}

impl LGObject {
    pub fn new(variables: Vec<Variable>, f: Polynomial) -> Result<Self, MoritaError> {
        if f.variables().iter().any(|v| !variables.contains(v)) {
            return Err(MoritaError::UndeclaredVariable(f));
        }
        Ok(LGObject { variables, f })
    }

    /// Declares exactly the variables occurring in `f` (sorted).
    pub fn from_polynomial(f: Polynomial) -> Self {
        let variables = f.variables().into_iter().collect();
        LGObject { variables, f }
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn delta(&self) -> Result<DeltaFactorization, MoritaError> {
        Ok(build_delta(&self.f, &self.variables)?)
    }
}

/// A 1-morphism (R, f) -> (S, g): a matrix factorization of g - f.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LGOneMorphism {
    source: LGObject,
    target: LGObject,
    mf: MatrixFactorization,
}

impl LGOneMorphism {
    pub fn new(
        source: LGObject,
        target: LGObject,
        mf: MatrixFactorization,
    ) -> Result<Self, MoritaError> {
        let expected = &target.f - &source.f;
        if *mf.f() != expected {
            return Err(MoritaError::PolynomialMismatch {
                expected,
                found: mf.f().clone(),
            });
        }
        Ok(LGOneMorphism { source, target, mf })
    }

    pub fn source(&self) -> &LGObject {
        &self.source
    }

    pub fn target(&self) -> &LGObject {
        &self.target
    }

    pub fn mf(&self) -> &MatrixFactorization {
        &self.mf
    }
}

/// The quadruple Γ = (X, Y, η, ρ) with η: X⊗̂Y -> Δ_f and ρ: Y⊗̂X -> Δ_g,
/// validated on construction.
#[derive(Debug, Clone)]
pub struct MoritaContext {
    x: LGOneMorphism,
    y: LGOneMorphism,
    eta: GradedMorphism,
    rho: GradedMorphism,
    xy: MatrixFactorization,
    yx: MatrixFactorization,
    delta_f: DeltaFactorization,
    delta_g: DeltaFactorization,
}

impl MoritaContext {
    pub fn x(&self) -> &LGOneMorphism {
        &self.x
    }

    pub fn y(&self) -> &LGOneMorphism {
        &self.y
    }

    pub fn eta(&self) -> &GradedMorphism {
        &self.eta
    }

    pub fn rho(&self) -> &GradedMorphism {
        &self.rho
    }

    pub fn xy(&self) -> &MatrixFactorization {
        &self.xy
    }

    pub fn yx(&self) -> &MatrixFactorization {
        &self.yx
    }

    pub fn delta_f(&self) -> &DeltaFactorization {
        &self.delta_f
    }

    pub fn delta_g(&self) -> &DeltaFactorization {
        &self.delta_g
    }
}

/// Validates and assembles a Morita context. Both potentials must be
/// nonconstant; η and ρ must be morphisms of factorizations with the
/// expected endpoints.
pub fn make_context(
    x: LGOneMorphism,
    y: LGOneMorphism,
    eta: GradedMorphism,
    rho: GradedMorphism,
) -> Result<MoritaContext, MoritaError> {
    if y.source != x.target || y.target != x.source {
        return Err(MoritaError::PolynomialMismatch {
            expected: &x.source.f - &x.target.f,
            found: y.mf.f().clone(),
        });
    }
    let f_obj = &x.source;
    let g_obj = &x.target;
    for obj in [f_obj, g_obj] {
        if obj.f.is_constant() {
            return Err(MoritaError::ConstantPotential(obj.f.clone()));
        }
    }
    let xy = x.mf.yoshino_tensor(&y.mf);
    let yx = y.mf.yoshino_tensor(&x.mf);
    let delta_f = f_obj.delta()?;
    let delta_g = g_obj.delta()?;

    let check = |m: &GradedMorphism,
                 src: &MatrixFactorization,
                 tgt: &MatrixFactorization,
                 role: &'static str| {
        if m.source() != src || m.target() != tgt || !m.verify_morphism() {
            Err(MoritaError::NotAMorphism { role })
        } else {
            Ok(())
        }
    };
    check(&eta, &xy, &delta_f.as_mf(), "eta")?;
    check(&rho, &yx, &delta_g.as_mf(), "rho")?;

    Ok(MoritaContext {
        x,
        y,
        eta,
        rho,
        xy,
        yx,
        delta_f,
        delta_g,
    })
}

/// The context Γ = (X, Y, 0, 0), which always satisfies the Morita diagrams
/// with witnesses λ = ξ = 0.
pub fn trivial_context(x: LGOneMorphism, y: LGOneMorphism) -> Result<MoritaContext, MoritaError> {
    if y.source != x.target || y.target != x.source {
        return Err(MoritaError::PolynomialMismatch {
            expected: &x.source.f - &x.target.f,
            found: y.mf.f().clone(),
        });
    }
    for obj in [&x.source, &x.target] {
        if obj.f.is_constant() {
            return Err(MoritaError::ConstantPotential(obj.f.clone()));
        }
    }
    let xy = x.mf.yoshino_tensor(&y.mf);
    let yx = y.mf.yoshino_tensor(&x.mf);
    let delta_f = x.source.delta()?;
    let delta_g = x.target.delta()?;
    let eta = GradedMorphism::zero(xy, delta_f.as_mf());
    let rho = GradedMorphism::zero(yx, delta_g.as_mf());
    make_context(x, y, eta, rho)
}

/// The four booleans of the necessary condition: η¹ = 0, η⁰Q = 0, ρ¹ = 0,
/// ρ⁰Q' = 0, where Q and Q' are the second matrices of X⊗̂Y and Y⊗̂X.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessaryConditionReport {
    pub eta_odd_zero: bool,
    pub eta_even_q_zero: bool,
    pub rho_odd_zero: bool,
    pub rho_even_q_zero: bool,
}

impl NecessaryConditionReport {
    pub fn all_pass(&self) -> bool {
        self.eta_odd_zero && self.eta_even_q_zero && self.rho_odd_zero && self.rho_even_q_zero
    }
}

pub fn necessary_condition(ctx: &MoritaContext) -> NecessaryConditionReport {
    let eta_even_q = ctx.eta.even().matmul(ctx.xy.q()).expect("shapes validated");
    let rho_even_q = ctx.rho.even().matmul(ctx.yx.q()).expect("shapes validated");
    NecessaryConditionReport {
        eta_odd_zero: ctx.eta.odd().is_zero(),
        eta_even_q_zero: eta_even_q.is_zero(),
        rho_odd_zero: ctx.rho.odd().is_zero(),
        rho_even_q_zero: rho_even_q.is_zero(),
    }
}

/// True iff both odd parts vanish: the necessary-and-sufficient condition
/// on η¹ and ρ¹ alone.
pub fn corollary_check(ctx: &MoritaContext) -> bool {
    ctx.eta.odd().is_zero() && ctx.rho.odd().is_zero()
}

/// The four determinants of X⊗̂Y and Y⊗̂X for a compatible pair of
/// 1-morphisms; all four are the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroDeterminantReport {
    pub det_p: Polynomial,
    pub det_q: Polynomial,
    pub det_p2: Polynomial,
    pub det_q2: Polynomial,
}

impl ZeroDeterminantReport {
    pub fn all_zero(&self) -> bool {
        self.det_p.is_zero()
            && self.det_q.is_zero()
            && self.det_p2.is_zero()
            && self.det_q2.is_zero()
    }
}

pub fn zero_determinant_check(
    x: &LGOneMorphism,
    y: &LGOneMorphism,
) -> Result<ZeroDeterminantReport, MoritaError> {
    if y.source != x.target || y.target != x.source {
        return Err(MoritaError::PolynomialMismatch {
            expected: &x.source.f - &x.target.f,
            found: y.mf.f().clone(),
        });
    }
    let xy = x.mf.yoshino_tensor(&y.mf);
    let yx = y.mf.yoshino_tensor(&x.mf);
    Ok(ZeroDeterminantReport {
        det_p: xy.p().det().expect("square"),
        det_q: xy.q().det().expect("square"),
        det_p2: yx.p().det().expect("square"),
        det_q2: yx.q().det().expect("square"),
    })
}

/// Evidence that the necessary condition is not sufficient: Q is singular,
/// so η⁰Q = 0 never pins down η⁰ uniquely. `solution_space_dim` is the
/// dimension of the solution space of η⁰Q = 0 with entries of total degree
/// at most `degree_bound`; `alternative` is a solution different from the
/// context's η⁰ when one exists.
#[derive(Debug, Clone)]
pub struct NonSufficiencyReport {
    pub det_q: Polynomial,
    pub solution_space_dim: usize,
    pub alternative: Option<PolyMatrix>,
}

impl NonSufficiencyReport {
    pub fn q_singular(&self) -> bool {
        self.det_q.is_zero()
    }
}

pub fn non_sufficiency_witness(ctx: &MoritaContext, degree_bound: u32) -> NonSufficiencyReport {
    let q = ctx.xy.q();
    let det_q = q.det().expect("square");
    let vars: Vec<Variable> = q.variables().into_iter().collect();
    let shape = (ctx.eta.even().rows(), ctx.eta.even().cols());
    let equations = [MatrixEquation {
        terms: vec![EquationTerm {
            left: None,
            unknown: 0,
            right: Some(q),
            negate: false,
        }],
        rhs: PolyMatrix::zero(shape.0, q.cols()),
    }];
    let solutions = solve_matrix_equations(&[shape], &equations, &vars, degree_bound)
        .expect("homogeneous system is always consistent");
    let alternative = solutions
        .nullspace
        .iter()
        .map(|mats| mats[0].clone())
        .find(|m| *m != *ctx.eta.even());
    NonSufficiencyReport {
        det_q,
        solution_space_dim: solutions.nullspace.len(),
        alternative,
    }
}

/// Homotopy verification data for the trivial context: with η = ρ = 0 both
/// Morita diagrams compare the zero morphism against itself, so λ = ξ = 0
/// are witnesses.
pub struct TrivialHomotopyWitnesses {
    pub lambda: Homotopy,
    pub xi: Homotopy,
}

pub fn trivial_homotopy_witnesses(
    ctx: &MoritaContext,
) -> Result<TrivialHomotopyWitnesses, MoritaError> {
    // Z = (Y⊗X)⊗Y -> Y and Z' = (X⊗Y)⊗X -> X, both diagrams with
    // ψ = φ = 0.
    let z = ctx.yx.yoshino_tensor(ctx.y.mf());
    let z2 = ctx.xy.yoshino_tensor(ctx.x.mf());
    Ok(TrivialHomotopyWitnesses {
        lambda: Homotopy::zero(z, ctx.y.mf().clone()),
        xi: Homotopy::zero(z2, ctx.x.mf().clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::{parse_matrix_literal, parse_polynomial};
    use crate::homotopy::verify_homotopy;
    use crate::matrix::PolyMatrix;

    fn mf(f: &str, p: &str, q: &str) -> MatrixFactorization {
        MatrixFactorization::make(
            parse_polynomial(f).unwrap(),
            parse_matrix_literal(p).unwrap(),
            parse_matrix_literal(q).unwrap(),
        )
        .unwrap()
    }

    /// The running example: h = -x^2 + 1, g = y^2 + 1, with X factoring
    /// g - h = x^2 + y^2 and X' factoring h - g.
    fn example_pair() -> (LGOneMorphism, LGOneMorphism) {
        let h_obj = LGObject::from_polynomial(parse_polynomial("-x^2 + 1").unwrap());
        let g_obj = LGObject::from_polynomial(parse_polynomial("y^2 + 1").unwrap());
        let x = LGOneMorphism::new(
            h_obj.clone(),
            g_obj.clone(),
            mf("x^2 + y^2", "x,-y;y,x", "x,y;-y,x"),
        )
        .unwrap();
        let y = LGOneMorphism::new(
            g_obj,
            h_obj,
            mf("-x^2 - y^2", "-x,y;-y,-x", "x,y;-y,x"),
        )
        .unwrap();
        (x, y)
    }

    #[test]
    fn object_validates_declared_variables() {
        let f = parse_polynomial("x + y").unwrap();
        assert!(LGObject::new(vec![Variable::new("x")], f.clone()).is_err());
        let obj = LGObject::from_polynomial(f);
        assert_eq!(obj.variables().len(), 2);
    }

    #[test]
    fn one_morphism_requires_potential_difference() {
        let h_obj = LGObject::from_polynomial(parse_polynomial("-x^2 + 1").unwrap());
        let g_obj = LGObject::from_polynomial(parse_polynomial("y^2 + 1").unwrap());
        let err = LGOneMorphism::new(h_obj, g_obj, mf("x^2", "x", "x")).unwrap_err();
        assert!(matches!(err, MoritaError::PolynomialMismatch { .. }));
    }

    #[test]
    fn trivial_context_passes_every_check() {
        let (x, y) = example_pair();
        let ctx = trivial_context(x, y).unwrap();
        let nc = necessary_condition(&ctx);
        assert!(nc.all_pass());
        assert!(corollary_check(&ctx));
        let zd = zero_determinant_check(ctx.x(), ctx.y()).unwrap();
        assert!(zd.all_zero());
    }

    #[test]
    fn trivial_witnesses_verify_the_homotopy_diagrams() {
        let (x, y) = example_pair();
        let ctx = trivial_context(x, y).unwrap();
        let w = trivial_homotopy_witnesses(&ctx).unwrap();
        for h in [&w.lambda, &w.xi] {
            let zero = GradedMorphism::zero(h.source().clone(), h.target().clone());
            assert!(verify_homotopy(h, &zero, &zero).unwrap());
        }
    }

    #[test]
    fn non_sufficiency_on_running_example() {
        let (x, y) = example_pair();
        let ctx = trivial_context(x, y).unwrap();
        let report = non_sufficiency_witness(&ctx, 1);
        assert!(report.q_singular());
        assert!(report.solution_space_dim > 1);
        let alt = report.alternative.unwrap();
        assert!(!alt.is_zero());
        assert!(alt.matmul(ctx.xy().q()).unwrap().is_zero());
    }

    #[test]
    fn context_rejects_non_morphism_eta() {
        let (x, y) = example_pair();
        let xy = x.mf().yoshino_tensor(y.mf());
        let yx = y.mf().yoshino_tensor(x.mf());
        let delta_f = x.source().delta().unwrap();
        let delta_g = x.target().delta().unwrap();
        // η¹ = identity-row is not a morphism into Δ here.
        let bad_eta = GradedMorphism::new(
            xy,
            delta_f.as_mf(),
            PolyMatrix::zero(1, 8),
            PolyMatrix::from_fn(1, 8, |_, j| {
                if j == 0 {
                    Polynomial::one()
                } else {
                    Polynomial::zero()
                }
            }),
        )
        .unwrap();
        let rho = GradedMorphism::zero(yx, delta_g.as_mf());
        let err = make_context(x, y, bad_eta, rho).unwrap_err();
        assert!(matches!(err, MoritaError::NotAMorphism { role: "eta" }));
    }

    #[test]
    fn context_rejects_constant_potentials() {
        let one = LGObject::from_polynomial(parse_polynomial("1").unwrap());
        let two = LGObject::from_polynomial(parse_polynomial("2").unwrap());
        let x = LGOneMorphism::new(one.clone(), two.clone(), mf("1", "1", "1")).unwrap();
        let y = LGOneMorphism::new(two, one, mf("-1", "1", "-1")).unwrap();
        assert!(matches!(
            trivial_context(x, y),
            Err(MoritaError::ConstantPotential(_))
        ));
    }
}
