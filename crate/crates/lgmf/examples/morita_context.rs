//! Morita-context checks between two potentials: the necessary condition on
//! the structure morphisms, the vanishing-determinant obstruction, and the
//! trivial sufficient case.
//!
//! Run with: cargo run --example morita_context

use lgmf::cli::{parse_matrix_literal, parse_polynomial};
use lgmf::morita::{non_sufficiency_witness, trivial_homotopy_witnesses};
use lgmf::{
    corollary_check, necessary_condition, trivial_context, verify_homotopy,
    zero_determinant_check, GradedMorphism, LGObject, LGOneMorphism, MatrixFactorization,
};

fn main() {
    // Objects: the potentials h = -x^2 + 1 and g = y^2 + 1. A 1-morphism
    // h -> g is a factorization of g - h = x^2 + y^2; the reverse direction
    // factors h - g.
    let h_obj = LGObject::from_polynomial(parse_polynomial("-x^2 + 1").unwrap());
    let g_obj = LGObject::from_polynomial(parse_polynomial("y^2 + 1").unwrap());
    let make = |f: &str, p: &str, q: &str| {
        MatrixFactorization::make(
            parse_polynomial(f).unwrap(),
            parse_matrix_literal(p).unwrap(),
            parse_matrix_literal(q).unwrap(),
        )
        .unwrap()
    };
    let x = LGOneMorphism::new(
        h_obj.clone(),
        g_obj.clone(),
        make("x^2 + y^2", "x,-y;y,x", "x,y;-y,x"),
    )
    .unwrap();
    let y = LGOneMorphism::new(g_obj, h_obj, make("-x^2 - y^2", "-x,y;-y,-x", "x,y;-y,x")).unwrap();

    // The context with zero structure morphisms always validates, and its
    // triangle diagrams commute up to homotopy with zero witnesses.
    let ctx = trivial_context(x, y).unwrap();
    let witnesses = trivial_homotopy_witnesses(&ctx).unwrap();
    for h in [&witnesses.lambda, &witnesses.xi] {
        let zero = GradedMorphism::zero(h.source().clone(), h.target().clone());
        assert!(verify_homotopy(h, &zero, &zero).unwrap());
    }
    println!("trivial context validated; zero witnesses verify both diagrams");

    // Necessary condition: eta^1 = 0 and eta^0·Q = 0 (and likewise for rho).
    let nc = necessary_condition(&ctx);
    println!("necessary condition passes: {}", nc.all_pass());
    println!("odd parts vanish: {}", corollary_check(&ctx));

    // Obstruction: both tensor composites have identically zero
    // determinants, so neither differential is invertible.
    let zd = zero_determinant_check(ctx.x(), ctx.y()).unwrap();
    println!(
        "determinants of both composites: {}, {}, {}, {}",
        zd.det_p, zd.det_q, zd.det_p2, zd.det_q2
    );

    // Non-sufficiency: since Q is singular, eta^0·Q = 0 never determines
    // eta^0 uniquely — the solution space at degree <= 1 is large.
    let ns = non_sufficiency_witness(&ctx, 1);
    println!(
        "eta^0 Q = 0 has a solution space of dimension {} at degree <= 1",
        ns.solution_space_dim
    );
}
