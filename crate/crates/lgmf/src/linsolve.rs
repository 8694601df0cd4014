//! Exact rational linear solving: Gaussian elimination over the rationals,
//! plus a coefficient-matching front end for linear matrix equations whose
//! unknowns are bounded-degree polynomial matrices.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::matrix::PolyMatrix;
use crate::ring::{Monomial, Polynomial, Rational, Variable};

/// A particular solution together with a basis of the homogeneous solution
/// space.
#[derive(Debug, Clone)]
pub struct LinearSolution {
    pub particular: Vec<Rational>,
    pub nullspace: Vec<Vec<Rational>>,
}

/// Solves A·x = b over the rationals. Returns None when inconsistent.
pub fn solve_rational(
    mut rows: Vec<Vec<Rational>>,
    mut rhs: Vec<Rational>,
    ncols: usize,
) -> Option<LinearSolution> {
    assert_eq!(rows.len(), rhs.len());
    let nrows = rows.len();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        rhs.swap(rank, pivot);
        let inv = {
            let p = &rows[rank][col];
            Rational::one() / p.clone()
        };
        for x in rows[rank].iter_mut() {
            *x *= inv.clone();
        }
        rhs[rank] *= inv;
        let pivot_row = rows[rank].clone();
        let pivot_rhs = rhs[rank].clone();
        for r in 0..nrows {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for (x, pv) in rows[r].iter_mut().zip(&pivot_row) {
                    *x -= &factor * pv;
                }
                rhs[r] -= &factor * &pivot_rhs;
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    // Consistency: every zero row must have zero right-hand side.
    if rhs[rank..].iter().any(|b| !b.is_zero()) {
        return None;
    }

    let mut particular = vec![Rational::zero(); ncols];
    for (r, &col) in pivot_cols.iter().enumerate() {
        particular[col] = rhs[r].clone();
    }

    let is_pivot: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &c in &pivot_cols {
            v[c] = true;
        }
        v
    };
    let mut nullspace = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut vec_ = vec![Rational::zero(); ncols];
        vec_[free] = Rational::one();
        for (r, &col) in pivot_cols.iter().enumerate() {
            vec_[col] = -rows[r][free].clone();
        }
        nullspace.push(vec_);
    }
    Some(LinearSolution { particular, nullspace })
}

/// One additive term `±L · U_k · R` of a matrix equation; a missing side is
/// the identity.
pub struct EquationTerm<'a> {
    pub left: Option<&'a PolyMatrix>,
    pub unknown: usize,
    pub right: Option<&'a PolyMatrix>,
    pub negate: bool,
}

/// A matrix equation Σ terms = rhs.
pub struct MatrixEquation<'a> {
    pub terms: Vec<EquationTerm<'a>>,
    pub rhs: PolyMatrix,
}

/// Solutions of a system of linear matrix equations with polynomial-matrix
/// unknowns of bounded total degree.
#[derive(Debug, Clone)]
pub struct MatrixSolutions {
    pub particular: Vec<PolyMatrix>,
    pub nullspace: Vec<Vec<PolyMatrix>>,
}

/// All monomials of total degree at most `degree` over the given variables,
/// in a deterministic order.
pub fn monomials_up_to(vars: &[Variable], degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; vars.len()];
    fn rec(
        vars: &[Variable],
        exps: &mut Vec<u32>,
        pos: usize,
        remaining: u32,
        out: &mut Vec<Monomial>,
    ) {
        if pos == vars.len() {
            out.push(Monomial::from_exponents(
                vars.iter().cloned().zip(exps.iter().copied()),
            ));
            return;
        }
        for e in 0..=remaining {
            exps[pos] = e;
            rec(vars, exps, pos + 1, remaining - e, out);
        }
        exps[pos] = 0;
    }
    rec(vars, &mut exps, 0, degree, &mut out);
    out
}

/// Solves the system by matching coefficients of every monomial in every
/// equation entry. Each unknown entry ranges over rational combinations of
/// monomials of total degree ≤ `degree` in `vars`. Returns None when the
/// system is inconsistent at this degree bound.
pub fn solve_matrix_equations(
    shapes: &[(usize, usize)],
    equations: &[MatrixEquation<'_>],
    vars: &[Variable],
    degree: u32,
) -> Option<MatrixSolutions> {
    let monos = monomials_up_to(vars, degree);
    let per_entry = monos.len();

    let mut offsets = Vec::with_capacity(shapes.len());
    let mut ncols = 0usize;
    for &(r, c) in shapes {
        offsets.push(ncols);
        ncols += r * c * per_entry;
    }
    let col_index = |unknown: usize, a: usize, b: usize, mono: usize| {
        let (_, c) = shapes[unknown];
        offsets[unknown] + (a * c + b) * per_entry + mono
    };

    // Row key: (equation, output entry, output monomial).
    let mut row_map: BTreeMap<(usize, usize, usize, Monomial), Vec<Rational>> = BTreeMap::new();
    let mut rhs_map: BTreeMap<(usize, usize, usize, Monomial), Rational> = BTreeMap::new();

    for (e, eq) in equations.iter().enumerate() {
        let (out_rows, out_cols) = (eq.rhs.rows(), eq.rhs.cols());
        for (m, coeff) in (0..out_rows)
            .flat_map(|i| (0..out_cols).map(move |j| (i, j)))
            .flat_map(|(i, j)| eq.rhs.at(i, j).terms().map(move |(m, c)| ((i, j, m), c)))
            .map(|((i, j, m), c)| ((e, i, j, m.clone()), c.clone()))
        {
            *rhs_map.entry(m).or_insert_with(Rational::zero) += coeff;
        }
        for term in &eq.terms {
            let (u_rows, u_cols) = shapes[term.unknown];
            for i in 0..out_rows {
                for j in 0..out_cols {
                    for a in 0..u_rows {
                        let left = match term.left {
                            Some(l) => l.at(i, a).clone(),
                            None => {
                                if i == a {
                                    Polynomial::one()
                                } else {
                                    Polynomial::zero()
                                }
                            }
                        };
                        if left.is_zero() {
                            continue;
                        }
                        for b in 0..u_cols {
                            let right = match term.right {
                                Some(r) => r.at(b, j).clone(),
                                None => {
                                    if b == j {
                                        Polynomial::one()
                                    } else {
                                        Polynomial::zero()
                                    }
                                }
                            };
                            let base = &left * &right;
                            if base.is_zero() {
                                continue;
                            }
                            for (k, mono) in monos.iter().enumerate() {
                                let col = col_index(term.unknown, a, b, k);
                                for (bm, bc) in base.terms() {
                                    let key = (e, i, j, bm.mul(mono));
                                    let row = row_map
                                        .entry(key)
                                        .or_insert_with(|| vec![Rational::zero(); ncols]);
                                    let signed = if term.negate { -bc.clone() } else { bc.clone() };
                                    row[col] += signed;
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // Rows with a right-hand side but no left-hand support still constrain
    // the system.
    for key in rhs_map.keys() {
        row_map
            .entry(key.clone())
            .or_insert_with(|| vec![Rational::zero(); ncols]);
    }

    let mut rows = Vec::with_capacity(row_map.len());
    let mut rhs = Vec::with_capacity(row_map.len());
    for (key, row) in row_map {
        rhs.push(rhs_map.get(&key).cloned().unwrap_or_else(Rational::zero));
        rows.push(row);
    }

    let solution = solve_rational(rows, rhs, ncols)?;
    let to_matrices = |flat: &[Rational]| -> Vec<PolyMatrix> {
        shapes
            .iter()
            .enumerate()
            .map(|(u, &(r, c))| {
                PolyMatrix::from_fn(r, c, |a, b| {
                    let mut p = Polynomial::zero();
                    for (k, mono) in monos.iter().enumerate() {
                        let coeff = flat[col_index(u, a, b, k)].clone();
                        p.add_term(mono.clone(), coeff);
                    }
                    p
                })
            })
            .collect()
    };
    Some(MatrixSolutions {
        particular: to_matrices(&solution.particular),
        nullspace: solution.nullspace.iter().map(|v| to_matrices(v)).collect(),
    })
}
