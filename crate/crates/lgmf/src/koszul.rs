//! The unit 1-morphism Δ_f: a finite-rank matrix factorization of
//! f(x) - f(x') built from the exterior-algebra differential, plus the
//! projection to θ-degree zero.

use thiserror::Error;

use crate::homotopy::GradedMorphism;
use crate::matrix::PolyMatrix;
use crate::mf::MatrixFactorization;
use crate::ring::{divided_difference, Polynomial, Variable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KoszulError {
    #[error("index {index} out of range for {count} theta generators")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("need at least one variable")]
    NoVariables,
    #[error("polynomial uses variable `{0}` outside the declared unprimed list")]
    ForeignVariable(Variable),
}

/// A product of distinct θ generators, stored as a bit-set over indices
/// 0..n. Indices are implicitly in ascending order; anticommutation lives
/// in computed signs, never in storage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ThetaWord {
    mask: u32,
}

impl ThetaWord {
    pub fn empty() -> Self {
        ThetaWord { mask: 0 }
    }

    pub fn from_mask(mask: u32) -> Self {
        ThetaWord { mask }
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn contains(&self, i: usize) -> bool {
        self.mask >> i & 1 == 1
    }

    /// θ-degree: the number of generators present.
    pub fn degree(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..32).filter(|&i| self.contains(i))
    }
}

/// Result of applying a contraction or wedge to a θ word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaAction {
    Zero,
    Term { sign: i8, word: ThetaWord },
}

/// θᵢ* applied to a word: zero if θᵢ is absent, otherwise the word with θᵢ
/// removed and sign (-1)^(p+1) where p is the 1-based position of θᵢ among
/// the ascending indices.
pub fn contract(i: usize, n: usize, w: ThetaWord) -> Result<ThetaAction, KoszulError> {
    if i >= n {
        return Err(KoszulError::IndexOutOfRange { index: i, count: n });
    }
    if !w.contains(i) {
        return Ok(ThetaAction::Zero);
    }
    let below = (w.mask & ((1 << i) - 1)).count_ones();
    let position = below + 1;
    Ok(ThetaAction::Term {
        sign: if position % 2 == 1 { 1 } else { -1 },
        word: ThetaWord::from_mask(w.mask & !(1 << i)),
    })
}

/// θᵢ ∧ (-) applied to a word: zero if θᵢ is already present (θᵢ² = 0),
/// otherwise the word with θᵢ inserted and the sign of moving θᵢ into
/// ascending position.
pub fn wedge(i: usize, n: usize, w: ThetaWord) -> Result<ThetaAction, KoszulError> {
    if i >= n {
        return Err(KoszulError::IndexOutOfRange { index: i, count: n });
    }
    if w.contains(i) {
        return Ok(ThetaAction::Zero);
    }
    let below = (w.mask & ((1 << i) - 1)).count_ones();
    Ok(ThetaAction::Term {
        sign: if below.is_multiple_of(2) { 1 } else { -1 },
        word: ThetaWord::from_mask(w.mask | (1 << i)),
    })
}

/// Δ_f presented as a matrix factorization of f(x) - f(x') in the fixed
/// θ-word basis. `d0` maps the even part to the odd part, `d1` the odd part
/// back; column j of `d0` is the differential applied to `even_basis[j]`
/// expanded in `odd_basis`, and likewise for `d1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaFactorization {
    f: Polynomial,
    vars: Vec<Variable>,
    even_basis: Vec<ThetaWord>,
    odd_basis: Vec<ThetaWord>,
    d0: PolyMatrix,
    d1: PolyMatrix,
}

impl DeltaFactorization {
    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn even_basis(&self) -> &[ThetaWord] {
        &self.even_basis
    }

    pub fn odd_basis(&self) -> &[ThetaWord] {
        &self.odd_basis
    }

    pub fn d0(&self) -> &PolyMatrix {
        &self.d0
    }

    pub fn d1(&self) -> &PolyMatrix {
        &self.d1
    }

    /// The factored polynomial f(x) - f(x').
    pub fn potential(&self) -> Polynomial {
        &self.f - &self.f.prime_shift()
    }

    /// Δ_f as a matrix factorization (d0, d1) of f(x) - f(x').
    pub fn as_mf(&self) -> MatrixFactorization {
        MatrixFactorization::make(self.potential(), self.d0.clone(), self.d1.clone())
            .expect("the exterior differential squares to f(x) - f(x')")
    }
}

/// Basis order: subsets of the θ generators sorted by (θ-degree, mask value),
/// split by parity of θ-degree. Fixed so d0/d1 are bit-exact reproducible.
fn theta_bases(n: usize) -> (Vec<ThetaWord>, Vec<ThetaWord>) {
    let mut all: Vec<ThetaWord> = (0..1u32 << n).map(ThetaWord::from_mask).collect();
    all.sort_by_key(|w| (w.degree(), w.mask()));
    let (even, odd): (Vec<_>, Vec<_>) = all.into_iter().partition(|w| w.degree() % 2 == 0);
    (even, odd)
}

/// Builds Δ_f for a polynomial f over the given unprimed variables. The
/// differential sends a word w to Σᵢ (xᵢ - xᵢ')·θᵢ*(w) + ∂ᵢ(f)·θᵢ∧w.
pub fn build_delta(f: &Polynomial, vars: &[Variable]) -> Result<DeltaFactorization, KoszulError> {
    let n = vars.len();
    if n == 0 {
        return Err(KoszulError::NoVariables);
    }
    for v in f.variables() {
        if !vars.contains(&v) {
            return Err(KoszulError::ForeignVariable(v));
        }
    }
    let linear: Vec<Polynomial> = vars
        .iter()
        .map(|v| &Polynomial::variable(v) - &Polynomial::variable(&v.primed()))
        .collect();
    let diffs: Vec<Polynomial> = (0..n)
        .map(|i| divided_difference(f, vars, i).expect("index in range"))
        .collect();

    let (even_basis, odd_basis) = theta_bases(n);
    let index_of = |basis: &[ThetaWord], w: ThetaWord| {
        basis
            .iter()
            .position(|&b| b == w)
            .expect("image word lies in the opposite-parity basis")
    };

    // Expands d(w) in the opposite-parity basis.
    let apply = |w: ThetaWord, out_basis: &[ThetaWord]| {
        let mut coeffs = vec![Polynomial::zero(); out_basis.len()];
        for i in 0..n {
            if let ThetaAction::Term { sign, word } = contract(i, n, w).expect("in range") {
                let signed = signed_copy(&linear[i], sign);
                coeffs[index_of(out_basis, word)] += &signed;
            }
            if let ThetaAction::Term { sign, word } = wedge(i, n, w).expect("in range") {
                let signed = signed_copy(&diffs[i], sign);
                coeffs[index_of(out_basis, word)] += &signed;
            }
        }
        coeffs
    };

    let half = even_basis.len();
    let d0 = PolyMatrix::from_fn(half, half, |_, _| Polynomial::zero());
    let mut d0 = d0;
    for (j, &w) in even_basis.iter().enumerate() {
        for (i, coeff) in apply(w, &odd_basis).into_iter().enumerate() {
            d0.set(i, j, coeff);
        }
    }
    let mut d1 = PolyMatrix::zero(half, half);
    for (j, &w) in odd_basis.iter().enumerate() {
        for (i, coeff) in apply(w, &even_basis).into_iter().enumerate() {
            d1.set(i, j, coeff);
        }
    }

    let delta = DeltaFactorization {
        f: f.clone(),
        vars: vars.to_vec(),
        even_basis,
        odd_basis,
        d0,
        d1,
    };
    // d1·d0 = d0·d1 = (f(x) - f(x'))·I, checked eagerly.
    let _ = delta.as_mf();
    Ok(delta)
}

fn signed_copy(p: &Polynomial, sign: i8) -> Polynomial {
    if sign >= 0 {
        p.clone()
    } else {
        -p
    }
}

/// The canonical projection π: Δ_f -> (R, 0) selecting the θ-degree-zero
/// coefficient in the even part; the odd part is zero. The morphism
/// equations hold only after identifying primes (x' -> x), which callers
/// apply when checking.
pub fn pi_matrices(delta: &DeltaFactorization) -> GradedMorphism {
    let half = delta.even_basis.len();
    let zero_target = MatrixFactorization::make(
        Polynomial::zero(),
        PolyMatrix::zero(1, 1),
        PolyMatrix::zero(1, 1),
    )
    .expect("zero differential factors zero");
    let even = PolyMatrix::from_fn(1, half, |_, j| {
        if delta.even_basis[j].degree() == 0 {
            Polynomial::one()
        } else {
            Polynomial::zero()
        }
    });
    let odd = PolyMatrix::zero(1, half);
    GradedMorphism::new(delta.as_mf(), zero_target, even, odd)
        .expect("projection has the right shapes")
}
