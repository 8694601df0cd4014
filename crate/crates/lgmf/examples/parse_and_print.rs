//! The polynomial grammar, canonical printing, and the JSON document
//! format used by the CLI.
//!
//! Run with: cargo run --example parse_and_print

use lgmf::cli::doc::{factorization_to_doc, Document};
use lgmf::cli::{parse_matrix_literal, parse_polynomial};
use lgmf::MatrixFactorization;

fn main() {
    // Expressions normalize to a canonical form: descending monomial order,
    // explicit rational coefficients, primes for shifted variable copies.
    for text in ["(x+y)*(x-y)", "1/2*x1'^3 - x1'^3", "y^2 + x^2 + x^2"] {
        let poly = parse_polynomial(text).unwrap();
        println!("{text}  ->  {poly}");
    }

    // Parse errors carry a position.
    println!("{}", parse_polynomial("x + * y").unwrap_err());

    // Canonical printing round-trips: parse(print(p)) == p.
    let poly = parse_polynomial("3*x^2*y - 7/2").unwrap();
    assert_eq!(parse_polynomial(&poly.to_string()).unwrap(), poly);

    // Factorizations serialize to a tagged JSON document; serialization is
    // deterministic, so reruns are byte-identical.
    let mf = MatrixFactorization::make(
        parse_polynomial("x^2 + y^2").unwrap(),
        parse_matrix_literal("x,-y;y,x").unwrap(),
        parse_matrix_literal("x,y;-y,x").unwrap(),
    )
    .unwrap();
    let document = Document::Factorization(factorization_to_doc(&mf));
    let text = document.to_json();
    print!("{text}");
    assert_eq!(Document::from_json(&text).unwrap(), document);
}
