//! Build and verify matrix factorizations: pairs (P, Q) with PQ = f·I.
//!
//! Run with: cargo run --example verify_factorization

use lgmf::cli::{parse_matrix_literal, parse_polynomial};
use lgmf::MatrixFactorization;

fn main() {
    // A 2x2 factorization of x^2 + y^2, which is irreducible as a
    // polynomial but still factors through matrices.
    let f = parse_polynomial("x^2 + y^2").unwrap();
    let p = parse_matrix_literal("x,-y;y,x").unwrap();
    let q = parse_matrix_literal("x,y;-y,x").unwrap();
    let x = MatrixFactorization::make(f, p, q).expect("PQ = f*I holds");
    println!("{x}");

    // The factors commute: QP = f*I as well.
    assert!(x.commute_check());
    println!("QP = f*I: confirmed");

    // (Q^t, P^t) is again a factorization of the same f.
    let t = x.transpose_mf();
    println!("transpose pair verifies at size {}", t.size());

    // det(P)·det(Q) = f^n, and det(P) divides f^n.
    let det_p = x.p().det().unwrap();
    let det_q = x.q().det().unwrap();
    assert_eq!(&det_p * &det_q, x.f().pow(2));
    assert!(x.det_divides_power().unwrap());
    println!("det(P) = {det_p}, det(Q) = {det_q}");

    // Construction is checked eagerly: a wrong pair is rejected with the
    // offending entry.
    let bad = MatrixFactorization::make(
        parse_polynomial("x^2 + y^2").unwrap(),
        parse_matrix_literal("x,y;y,x").unwrap(),
        parse_matrix_literal("x,y;-y,x").unwrap(),
    );
    println!("bad pair: {}", bad.unwrap_err());
}
