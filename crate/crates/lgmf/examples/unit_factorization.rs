//! The unit factorization of f(x) - f(x'): an exterior-algebra construction
//! from divided differences, plus the projection to theta-degree zero.
//!
//! Run with: cargo run --example unit_factorization

use lgmf::cli::parse_polynomial;
use lgmf::koszul::pi_matrices;
use lgmf::ring::{divided_difference, Polynomial, Variable};
use lgmf::build_delta;

fn main() {
    let f = parse_polynomial("x1*x2").unwrap();
    let vars = [Variable::new("x1"), Variable::new("x2")];

    // Divided differences telescope: sum of (x_i - x_i')·d_i(f) equals
    // f(x) - f(x').
    let mut total = Polynomial::zero();
    for (i, v) in vars.iter().enumerate() {
        let d = divided_difference(&f, &vars, i).unwrap();
        println!("d_{i}(f) = {d}");
        let linear = &Polynomial::variable(v) - &Polynomial::variable(&v.primed());
        total += &(&linear * &d);
    }
    assert_eq!(total, &f - &f.prime_shift());

    // The unit factorization has size 2^(n-1) and factors f(x) - f(x').
    let delta = build_delta(&f, &vars).unwrap();
    println!("{}", delta.as_mf());

    // The projection onto the theta-degree-zero coefficient kills the
    // incoming differential once primes are identified (x' -> x).
    let pi = pi_matrices(&delta);
    let composed = pi.even().matmul(delta.d1()).unwrap();
    assert!(composed.map(|e| e.identify_primes()).is_zero());
    println!("projection composed with d1 vanishes after x' -> x");
}
