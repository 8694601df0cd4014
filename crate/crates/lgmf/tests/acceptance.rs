//! End-to-end acceptance suite. Each test prints one pass/fail line for its
//! criterion; the whole suite is exact (no tolerances) and deterministic
//! (fixed RNG seeds).

use lgmf::cli::{parse_matrix_literal, parse_polynomial};
use lgmf::homotopy::{search_homotopy, solve_morphism_system, verify_homotopy, GradedMorphism, Homotopy};
use lgmf::koszul::{build_delta, pi_matrices};
use lgmf::matrix::PolyMatrix;
use lgmf::mf::{tensor_determinants, MatrixFactorization, PadVariant};
use lgmf::morita::{
    corollary_check, necessary_condition, non_sufficiency_witness, trivial_context,
    trivial_homotopy_witnesses, zero_determinant_check, LGObject, LGOneMorphism,
};
use lgmf::ring::{Monomial, Polynomial, Rational, Variable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(number: usize, name: &str, pass: bool) {
    println!(
        "criterion {number:02} {name}: {}",
        if pass { "pass" } else { "FAIL" }
    );
    assert!(pass, "criterion {number:02} {name} failed");
}

fn p(text: &str) -> Polynomial {
    parse_polynomial(text).unwrap()
}

fn m(text: &str) -> PolyMatrix {
    parse_matrix_literal(text).unwrap()
}

fn mf(f: &str, pm: &str, qm: &str) -> MatrixFactorization {
    MatrixFactorization::make(p(f), m(pm), m(qm)).unwrap()
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = lgmf::cli::run(
        args.iter().map(|s| s.to_string()).collect(),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap())
}

/// Random polynomial over `vars` with total degree <= `degree` and small
/// nonzero integer coefficients; never the zero polynomial.
fn random_poly(rng: &mut ChaCha8Rng, vars: &[Variable], degree: u32) -> Polynomial {
    loop {
        let mut poly = Polynomial::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let mut remaining = degree;
            let mono = Monomial::from_exponents(vars.iter().map(|v| {
                let e = rng.gen_range(0..=remaining);
                remaining -= e;
                (v.clone(), e)
            }));
            let coeff = loop {
                let c: i64 = rng.gen_range(-3..=3);
                if c != 0 {
                    break c;
                }
            };
            poly.add_term(mono, Rational::from_integer(coeff.into()));
        }
        if !poly.is_zero() {
            return poly;
        }
    }
}

/// Random nonconstant polynomial.
fn random_nonconstant(rng: &mut ChaCha8Rng, vars: &[Variable], degree: u32) -> Polynomial {
    loop {
        let poly = random_poly(rng, vars, degree);
        if !poly.is_constant() {
            return poly;
        }
    }
}

/// Random size-n factorization over `vars`: for n = 1 a product pair, for
/// n = 2 a matrix with its adjugate.
fn random_mf(rng: &mut ChaCha8Rng, vars: &[Variable], n: usize) -> MatrixFactorization {
    loop {
        if n == 1 {
            let a = random_poly(rng, vars, 1);
            let b = random_poly(rng, vars, 1);
            let f = &a * &b;
            if f.is_constant() {
                continue;
            }
            return MatrixFactorization::make(
                f,
                PolyMatrix::new(1, 1, vec![a]).unwrap(),
                PolyMatrix::new(1, 1, vec![b]).unwrap(),
            )
            .unwrap();
        }
        let entries: Vec<Polynomial> = (0..4).map(|_| random_poly(rng, vars, 1)).collect();
        let pm = PolyMatrix::new(2, 2, entries).unwrap();
        let f = pm.det().unwrap();
        if f.is_zero() || f.is_constant() {
            continue;
        }
        let qm = PolyMatrix::from_rows(vec![
            vec![pm.at(1, 1).clone(), -pm.at(0, 1)],
            vec![-pm.at(1, 0), pm.at(0, 0).clone()],
        ])
        .unwrap();
        return MatrixFactorization::make(f, pm, qm).unwrap();
    }
}

/// The factorization (-P, Q) of -f.
fn negate_mf(x: &MatrixFactorization) -> MatrixFactorization {
    MatrixFactorization::make(-x.f(), x.p().neg(), x.q().clone()).unwrap()
}

fn vars(names: &[&str]) -> Vec<Variable> {
    names.iter().map(|n| Variable::new(*n)).collect()
}

fn sum_of_squares() -> MatrixFactorization {
    mf("x^2 + y^2", "x,-y;y,x", "x,y;-y,x")
}

/// Example 5.8's compatible pair: X factors g - h, X' factors h - g.
fn running_example_pair() -> (LGOneMorphism, LGOneMorphism) {
    let h_obj = LGObject::from_polynomial(p("-x^2 + 1"));
    let g_obj = LGObject::from_polynomial(p("y^2 + 1"));
    let x = LGOneMorphism::new(h_obj.clone(), g_obj.clone(), sum_of_squares()).unwrap();
    let y = LGOneMorphism::new(g_obj, h_obj, mf("-x^2 - y^2", "-x,y;-y,-x", "x,y;-y,x")).unwrap();
    (x, y)
}

#[test]
fn criterion_01_two_by_two_intro_verifies() {
    let x = sum_of_squares();
    let (code, _) = run_cli(&[
        "lgmf", "verify", "--f", "x^2 + y^2", "--p", "x,-y;y,x", "--q", "x,y;-y,x",
    ]);
    report(
        1,
        "sum-of-squares pair verifies",
        x.f() == &p("x^2 + y^2") && code == 0,
    );
}

#[test]
fn criterion_02_three_variable_example_verifies() {
    let built = MatrixFactorization::make(
        p("x*y + x*z^2 + y*z^2"),
        m("z^2,y;x,-x-y"),
        m("x+y,y;x,-z^2"),
    );
    let (code, _) = run_cli(&[
        "lgmf", "verify", "--f", "x*y + x*z^2 + y*z^2", "--p", "z^2,y;x,-x-y", "--q",
        "x+y,y;x,-z^2",
    ]);
    report(2, "three-variable pair verifies", built.is_ok() && code == 0);
}

#[test]
fn criterion_03_one_by_one_tensor_matches_display() {
    let x = mf("x^4", "x^2", "x^2");
    let y = mf("y^6", "y^2", "y^4");
    let t = x.yoshino_tensor(&y);
    let pass = t.f() == &p("x^4 + y^6")
        && t.p() == &m("x^2,y^2;-y^4,x^2")
        && t.q() == &m("x^2,-y^2;y^4,x^2")
        && t.commute_check();
    report(3, "1x1 tensor reproduces displayed 2x2 pair", pass);
}

#[test]
fn criterion_04_opposite_potential_tensor_is_eight_by_eight_zero() {
    let x = sum_of_squares();
    let x2 = mf("-x^2 - y^2", "-x,y;-y,-x", "x,y;-y,x");
    let t = x.yoshino_tensor(&x2);
    let expected_p = m(concat!(
        "x,0,-y,0,-x,y,0,0;",
        "0,x,0,-y,-y,-x,0,0;",
        "y,0,x,0,0,0,-x,y;",
        "0,y,0,x,0,0,-y,-x;",
        "-x,-y,0,0,x,0,y,0;",
        "y,-x,0,0,0,x,0,y;",
        "0,0,-x,-y,-y,0,x,0;",
        "0,0,y,-x,0,-y,0,x"
    ));
    let expected_q = m(concat!(
        "x,0,y,0,x,-y,0,0;",
        "0,x,0,y,y,x,0,0;",
        "-y,0,x,0,0,0,x,-y;",
        "0,-y,0,x,0,0,y,x;",
        "x,y,0,0,x,0,-y,0;",
        "-y,x,0,0,0,x,0,-y;",
        "0,0,x,y,y,0,x,0;",
        "0,0,-y,x,0,y,0,x"
    ));
    let product = t.p().matmul(t.q()).unwrap();
    let pass = t.f().is_zero()
        && t.p() == &expected_p
        && t.q() == &expected_q
        && product.is_zero();
    report(4, "opposite-potential tensor matches displayed 8x8 pair", pass);
}

#[test]
fn criterion_05_tensor_determinant_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let left_vars = vars(&["x", "y"]);
    let right_vars = vars(&["z", "w"]);
    let mut pass = true;
    for _ in 0..50 {
        let n = rng.gen_range(1..=2);
        let mcount = rng.gen_range(1..=2);
        let x = random_mf(&mut rng, &left_vars, n);
        let y = random_mf(&mut rng, &right_vars, mcount);
        let dets = tensor_determinants(&x, &y);
        let closed_form = (x.f() + y.f()).pow((n * mcount) as u32);
        pass &= dets.all_equal() && dets.det_p == closed_form;
    }
    report(5, "all four tensor determinants equal (f+g)^nm", pass);
}

#[test]
fn criterion_06_opposite_potentials_give_zero_determinants() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let shared_vars = vars(&["x", "y"]);
    let mut pass = true;
    for _ in 0..20 {
        let n = rng.gen_range(1..=2);
        let mut x = random_mf(&mut rng, &shared_vars, n);
        let mut y = negate_mf(&x);
        if rng.gen_bool(0.5) {
            x = x.transpose_mf();
        }
        if rng.gen_bool(0.5) {
            let variant = if rng.gen_bool(0.5) {
                PadVariant::PutFOnP
            } else {
                PadVariant::PutFOnQ
            };
            y = y.pad(y.size() + 1, variant).unwrap();
        }
        let zero_obj = LGObject::from_polynomial(Polynomial::zero());
        let g_obj = LGObject::from_polynomial(x.f().clone());
        let f = x.f().clone();
        let x1 = LGOneMorphism::new(zero_obj.clone(), g_obj.clone(), x).unwrap();
        let y1 = LGOneMorphism::new(g_obj, zero_obj, y).unwrap();
        let zd = zero_determinant_check(&x1, &y1).unwrap();
        pass &= zd.all_zero() && !f.is_zero();
    }
    report(6, "compatible-pair tensor determinants vanish", pass);
}

#[test]
fn criterion_07_factorization_property_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let suite_vars = vars(&["x", "y"]);
    let mut pass = true;
    for _ in 0..30 {
        let n = rng.gen_range(1..=2);
        let x = random_mf(&mut rng, &suite_vars, n);
        let n = x.size() as u32;
        let det_p = x.p().det().unwrap();
        let det_q = x.q().det().unwrap();
        pass &= x.commute_check();
        pass &= x.transpose_mf().commute_check();
        pass &= &det_p * &det_q == x.f().pow(n);
        pass &= x.det_divides_power().unwrap();
    }
    report(7, "QP = fI, transpose closure, determinant identities", pass);
}

#[test]
fn criterion_08_delta_suite() {
    let cases: [(&str, &[&str]); 6] = [
        ("x^2", &["x"]),
        ("x^3", &["x"]),
        ("x^4 + 1", &["x"]),
        ("x1*x2", &["x1", "x2"]),
        ("x1^2 + x2^3", &["x1", "x2"]),
        ("x*y + x*z^2 + y*z^2", &["x", "y", "z"]),
    ];
    let mut pass = true;
    for (f, names) in cases {
        let f = p(f);
        let names = vars(names);
        let delta = build_delta(&f, &names).unwrap();
        let as_mf = delta.as_mf();
        pass &= as_mf.size() == 1 << (names.len() - 1);
        pass &= as_mf.commute_check();
        // Telescoping: sum of (x_i - x_i') * divided differences.
        let mut total = Polynomial::zero();
        for (i, v) in names.iter().enumerate() {
            let linear = &Polynomial::variable(v) - &Polynomial::variable(&v.primed());
            total += &(&linear * &lgmf::ring::divided_difference(&f, &names, i).unwrap());
        }
        pass &= total == delta.potential();
    }
    let square = build_delta(&p("x^2"), &vars(&["x"])).unwrap();
    pass &= square.d0() == &m("x + x'") && square.d1() == &m("x - x'");
    report(8, "unit factorization suite verifies", pass);
}

#[test]
fn criterion_09_projection_vanishes_after_identification() {
    let cases: [(&str, &[&str]); 3] = [
        ("x^2", &["x"]),
        ("x1*x2", &["x1", "x2"]),
        ("x*y + x*z^2 + y*z^2", &["x", "y", "z"]),
    ];
    let mut pass = true;
    for (f, names) in cases {
        let delta = build_delta(&p(f), &vars(names)).unwrap();
        let pi = pi_matrices(&delta);
        let composed = pi.even().matmul(delta.d1()).unwrap();
        pass &= pi.odd().is_zero() && composed.map(|e| e.identify_primes()).is_zero();
    }
    report(9, "projection kills the incoming differential", pass);
}

#[test]
fn criterion_10_running_example_end_to_end() {
    let (x, y) = running_example_pair();
    let ctx = trivial_context(x, y).unwrap();
    let nc = necessary_condition(&ctx);
    let zd = zero_determinant_check(ctx.x(), ctx.y()).unwrap();
    let witnesses = trivial_homotopy_witnesses(&ctx).unwrap();
    let mut pass = nc.all_pass() && corollary_check(&ctx) && zd.all_zero();
    for h in [&witnesses.lambda, &witnesses.xi] {
        let zero = GradedMorphism::zero(h.source().clone(), h.target().clone());
        pass &= verify_homotopy(h, &zero, &zero).unwrap();
    }
    report(10, "trivial context end-to-end", pass);
}

#[test]
fn criterion_11_morphisms_into_unit_satisfy_necessary_condition() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let xs = vars(&["x"]);
    let ys = vars(&["y"]);
    let mut pass = true;
    let mut solutions_checked = 0usize;
    for _ in 0..10 {
        // h over {x}, g over {y}; X factors g - h, Y factors h - g, both as
        // tensors of 1x1 pairs.
        let h1 = random_nonconstant(&mut rng, &xs, 1);
        let h2 = random_nonconstant(&mut rng, &xs, 1);
        let h = -&(&h1 * &h2);
        let g1 = random_nonconstant(&mut rng, &ys, 1);
        let g2 = random_nonconstant(&mut rng, &ys, 1);
        let one_by_one = |a: &Polynomial, b: &Polynomial| {
            MatrixFactorization::make(
                a * b,
                PolyMatrix::new(1, 1, vec![a.clone()]).unwrap(),
                PolyMatrix::new(1, 1, vec![b.clone()]).unwrap(),
            )
            .unwrap()
        };
        let x = one_by_one(&g1, &g2).yoshino_tensor(&one_by_one(&h1, &h2));
        let y = negate_mf(&one_by_one(&g1, &g2)).yoshino_tensor(&negate_mf(&one_by_one(&h1, &h2)));
        assert_eq!(x.f(), &(&(&g1 * &g2) - &h));
        let xy = x.yoshino_tensor(&y);
        let delta_h = build_delta(&h, &xs).unwrap().as_mf();

        let zero = GradedMorphism::zero(xy.clone(), delta_h.clone());
        pass &= zero.verify_morphism();
        for eta in solve_morphism_system(&xy, &delta_h, 2) {
            solutions_checked += 1;
            pass &= eta.verify_morphism();
            pass &= eta.odd().is_zero();
            pass &= eta.even().matmul(xy.q()).unwrap().is_zero();
        }
        // A hand-built morphism candidate with a nonzero odd part must fail.
        let bad = GradedMorphism::new(
            xy.clone(),
            delta_h.clone(),
            PolyMatrix::zero(1, xy.size()),
            PolyMatrix::from_fn(1, xy.size(), |_, j| {
                if j == 0 {
                    Polynomial::one()
                } else {
                    Polynomial::zero()
                }
            }),
        )
        .unwrap();
        pass &= !bad.verify_morphism();
    }
    pass &= solutions_checked >= 10;
    report(11, "solved morphisms into the unit have zero odd part", pass);
}

#[test]
fn criterion_12_eta_equation_has_no_unique_solution() {
    let (x, y) = running_example_pair();
    let ctx = trivial_context(x, y).unwrap();
    let ns = non_sufficiency_witness(&ctx, 1);
    let pass = ns.q_singular() && ns.solution_space_dim > 1 && ns.alternative.is_some();
    report(12, "necessary condition never pins eta down", pass);
}

#[test]
fn criterion_13_homotopy_solver_planted_and_negative() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let suite_vars = vars(&["x", "y"]);
    let mut pass = true;
    for _ in 0..20 {
        let x = random_mf(&mut rng, &suite_vars, 2);
        let degree = rng.gen_range(0..=1);
        let lambda0 = PolyMatrix::from_fn(2, 2, |_, _| random_poly(&mut rng, &suite_vars, degree));
        let lambda1 = PolyMatrix::from_fn(2, 2, |_, _| random_poly(&mut rng, &suite_vars, degree));
        let planted = Homotopy::new(x.clone(), x.clone(), lambda0.clone(), lambda1.clone()).unwrap();
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
        pass &= verify_homotopy(&planted, &psi, &phi).unwrap();
        let found = search_homotopy(&psi, &phi, degree).unwrap();
        pass &= match found {
            Some(h) => verify_homotopy(&h, &psi, &phi).unwrap(),
            None => false,
        };
        // Equal morphisms are connected by the zero witness.
        let identity = GradedMorphism::identity(x.clone());
        let zero_witness = search_homotopy(&identity, &identity, 1).unwrap();
        pass &= matches!(zero_witness, Some(h) if h.is_zero());
    }
    // Identity vs zero on a pair whose matrices have no constant terms:
    // no witness exists at any degree, reported as not-found at the bound.
    let x = sum_of_squares();
    let identity = GradedMorphism::identity(x.clone());
    let zero = GradedMorphism::zero(x.clone(), x);
    pass &= search_homotopy(&identity, &zero, 3).unwrap().is_none();
    report(13, "planted witnesses recovered, absence reported", pass);
}

#[test]
fn criterion_14_serialization_round_trips_and_golden_reruns() {
    use lgmf::cli::doc::{
        factorization_to_doc, matrix_to_doc, CheckLine, Document, MorphismDoc,
        ReportDoc,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let doc_vars = vars(&["x", "y"]);
    let mut pass = true;
    for i in 0..100 {
        let document = match i % 5 {
            0 => Document::Polynomial {
                polynomial: random_poly(&mut rng, &doc_vars, 2).to_string(),
            },
            1 => Document::Matrix {
                rows: matrix_to_doc(&PolyMatrix::from_fn(2, 2, |_, _| {
                    random_poly(&mut rng, &doc_vars, 2)
                })),
            },
            2 => Document::Factorization(factorization_to_doc(&random_mf(
                &mut rng, &doc_vars, 2,
            ))),
            3 => {
                let x = random_mf(&mut rng, &doc_vars, 2);
                let id = GradedMorphism::identity(x);
                Document::Morphism(MorphismDoc {
                    source: factorization_to_doc(id.source()),
                    target: factorization_to_doc(id.target()),
                    even: matrix_to_doc(id.even()),
                    odd: matrix_to_doc(id.odd()),
                })
            }
            _ => Document::Report(ReportDoc {
                checks: vec![CheckLine {
                    name: format!("check-{i}"),
                    pass: rng.gen_bool(0.5),
                    detail: random_poly(&mut rng, &doc_vars, 2).to_string(),
                }],
            }),
        };
        let text = document.to_json();
        let reread = Document::from_json(&text).unwrap();
        pass &= reread == document && reread.to_json() == text;
    }
    let (code, output) = run_cli(&["lgmf", "--golden"]);
    pass &= code == 0 && output.lines().count() == 5 && output.lines().all(|l| l.ends_with(": ok"));
    report(14, "documents round-trip and golden runs are byte-exact", pass);
}
