//! Combine factorizations: padding to a larger size and the tensor product
//! that factors f + g.
//!
//! Run with: cargo run --example compose_factorizations

use lgmf::cli::{parse_matrix_literal, parse_polynomial};
use lgmf::mf::tensor_determinants;
use lgmf::{MatrixFactorization, PadVariant};

fn main() {
    let one_by_one = |f: &str, p: &str, q: &str| {
        MatrixFactorization::make(
            parse_polynomial(f).unwrap(),
            parse_matrix_literal(p).unwrap(),
            parse_matrix_literal(q).unwrap(),
        )
        .unwrap()
    };

    // Padding embeds a factorization in a larger size, filling the new
    // diagonal with f on one side and 1 on the other.
    let x = one_by_one("x^4", "x^2", "x^2");
    let padded = x.pad(3, PadVariant::PutFOnP).unwrap();
    println!("padded to size {}:", padded.size());
    println!("{padded}");

    // The tensor product of a factorization of f and one of g is a
    // factorization of f + g of size 2nm.
    let y = one_by_one("y^6", "y^2", "y^4");
    let tensor = x.yoshino_tensor(&y);
    println!("{tensor}");

    // All four determinants of both tensor orderings equal (f+g)^(nm).
    let dets = tensor_determinants(&x, &y);
    assert!(dets.all_equal());
    println!("common tensor determinant: {}", dets.det_p);
}
