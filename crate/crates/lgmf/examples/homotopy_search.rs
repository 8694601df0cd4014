//! Graded morphisms between factorizations and bounded-degree homotopy
//! search by exact linear solving.
//!
//! Run with: cargo run --example homotopy_search

use lgmf::cli::{parse_matrix_literal, parse_polynomial};
use lgmf::{search_homotopy, verify_homotopy, GradedMorphism, Homotopy, MatrixFactorization};

fn main() {
    let x = MatrixFactorization::make(
        parse_polynomial("x^2 + y^2").unwrap(),
        parse_matrix_literal("x,-y;y,x").unwrap(),
        parse_matrix_literal("x,y;-y,x").unwrap(),
    )
    .unwrap();

    // The identity is a morphism; the entry swap is not.
    let identity = GradedMorphism::identity(x.clone());
    assert!(identity.verify_morphism());
    let swap = parse_matrix_literal("0,1;1,0").unwrap();
    let swapped = GradedMorphism::new(x.clone(), x.clone(), swap.clone(), swap).unwrap();
    assert!(!swapped.verify_morphism());
    println!("identity is a morphism; the swap is not");

    // Plant a witness, take its boundary as psi, and recover a witness by
    // solving the homotopy equations with entries of degree <= 1.
    let lambda0 = parse_matrix_literal("x,y;0,1").unwrap();
    let lambda1 = parse_matrix_literal("1,0;y,x").unwrap();
    let even = x
        .p()
        .matmul(&lambda0)
        .unwrap()
        .add(&lambda1.matmul(x.p()).unwrap())
        .unwrap();
    let odd = x
        .q()
        .matmul(&lambda1)
        .unwrap()
        .add(&lambda0.matmul(x.q()).unwrap())
        .unwrap();
    let psi = GradedMorphism::new(x.clone(), x.clone(), even, odd).unwrap();
    let phi = GradedMorphism::zero(x.clone(), x.clone());
    let planted = Homotopy::new(x.clone(), x.clone(), lambda0, lambda1).unwrap();
    assert!(verify_homotopy(&planted, &psi, &phi).unwrap());

    let found = search_homotopy(&psi, &phi, 1).unwrap().expect("witness exists");
    assert!(verify_homotopy(&found, &psi, &phi).unwrap());
    println!("recovered witness:\nlambda0 =\n{}lambda1 =\n{}", found.lambda0(), found.lambda1());

    // Identity vs zero: the matrices have no constant terms, so no witness
    // exists at any degree. The search reports absence at the bound.
    let zero = GradedMorphism::zero(x.clone(), x);
    assert!(search_homotopy(&identity, &zero, 3).unwrap().is_none());
    println!("identity vs zero: no witness up to degree 3");
}
