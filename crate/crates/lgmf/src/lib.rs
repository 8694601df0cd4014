//! Exact construction, composition, and verification of matrix
//! factorizations of multivariate polynomials over the rationals, with
//! checkers for Morita-context data between Landau-Ginzburg potentials.
//!
//! The main entry points:
//! - [`ring::Polynomial`]: exact multivariate polynomials with primed
//!   variable copies.
//! - [`matrix::PolyMatrix`]: dense polynomial matrices with a fraction-free
//!   determinant.
//! - [`mf::MatrixFactorization`]: verified pairs (P, Q) with PQ = f·I,
//!   padding, and the tensor-product composition.
//! - [`koszul::build_delta`]: the unit factorization of f(x) - f(x') on an
//!   exterior-algebra basis.
//! - [`homotopy`]: graded morphisms, homotopies, and bounded-degree searches
//!   for both.
//! - [`morita`]: context assembly and the necessary / obstruction / trivial
//!   sufficient checks.
//! - [`cli`]: the text/JSON document formats and the `lgmf` command-line
//!   tool built on them.
//!
//! See the crate's `examples/` directory for a runnable tour of each of
//! these capabilities.

pub mod cli;
pub mod homotopy;
pub mod koszul;
pub mod linsolve;
pub mod matrix;
pub mod mf;
pub mod morita;
pub mod ring;

pub use homotopy::{
    compose, search_homotopy, solve_morphism_system, verify_homotopy, GradedMorphism, Homotopy,
};
pub use koszul::{build_delta, pi_matrices, DeltaFactorization};
pub use matrix::PolyMatrix;
pub use mf::{MatrixFactorization, PadVariant};
pub use morita::{
    corollary_check, make_context, necessary_condition, non_sufficiency_witness, trivial_context,
    zero_determinant_check, LGObject, LGOneMorphism, MoritaContext,
};
pub use ring::{divided_difference, Monomial, Polynomial, Variable};
