//! Exact sparse multivariate polynomial arithmetic over the rationals,
//! with primable variables and divided differences.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num::{BigRational, One, Signed, Zero};
use thiserror::Error;

/// Exact coefficient type for all polynomial arithmetic.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("`{0}` is not divisible by `{1}`")]
    DoesNotDivide(Polynomial, Polynomial),
    #[error("variable index {index} out of range (have {count} variables)")]
    IndexOutOfRange { index: usize, count: usize },
}

/// A named indeterminate with a prime level: `x` has level 0, `x'` level 1,
/// `x''` level 2 and so on. Distinct (name, level) pairs are distinct
/// variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variable {
    name: String,
    prime_level: u32,
}

impl Variable {
    pub fn new(name: impl Into<String>) -> Self {
        Variable {
            name: name.into(),
            prime_level: 0,
        }
    }

    pub fn with_primes(name: impl Into<String>, prime_level: u32) -> Self {
        Variable {
            name: name.into(),
            prime_level,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn prime_level(&self) -> u32 {
        self.prime_level
    }

    /// The same variable with one more prime: `x` becomes `x'`.
    pub fn primed(&self) -> Variable {
        Variable {
            name: self.name.clone(),
            prime_level: self.prime_level + 1,
        }
    }

    /// The unprimed base variable.
    pub fn base(&self) -> Variable {
        Variable {
            name: self.name.clone(),
            prime_level: 0,
        }
    }

    // Sort by the alphabetic stem, then a numeric suffix interpreted as a
    // number (so x2 < x10), then the raw name, then the prime level. Primed
    // variables therefore sort immediately after their unprimed base.
    fn sort_key(&self) -> (&str, Option<u64>, &str, u32) {
        let split = self
            .name
            .find(|c: char| c.is_ascii_digit())
            .unwrap_or(self.name.len());
        let (stem, digits) = self.name.split_at(split);
        (stem, digits.parse().ok(), &self.name, self.prime_level)
    }
}

impl Ord for Variable {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        for _ in 0..self.prime_level {
            write!(f, "'")?;
        }
        Ok(())
    }
}

/// A power product of variables. Zero exponents are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: BTreeMap<Variable, u32>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial::default()
    }

    pub fn variable(v: &Variable) -> Self {
        Monomial::from_exponents([(v.clone(), 1)])
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = (Variable, u32)>) -> Self {
        let mut m = Monomial::default();
        for (v, e) in exps {
            if e > 0 {
                *m.exps.entry(v).or_insert(0) += e;
            }
        }
        m
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn exponent(&self, v: &Variable) -> u32 {
        self.exps.get(v).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&Variable, u32)> {
        self.exps.iter().map(|(v, &e)| (v, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (v, e) in &other.exps {
            *exps.entry(v.clone()).or_insert(0) += e;
        }
        Monomial { exps }
    }

    /// Quotient monomial, if `other` divides `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = self.exps.clone();
        for (v, e) in &other.exps {
            let have = exps.get_mut(v)?;
            if *have < *e {
                return None;
            }
            *have -= e;
            if *have == 0 {
                exps.remove(v);
            }
        }
        Some(Monomial { exps })
    }

    /// Renames every variable. Images may collide; exponents then add up.
    pub fn map_variables(&self, f: impl Fn(&Variable) -> Variable) -> Monomial {
        Monomial::from_exponents(self.exps.iter().map(|(v, &e)| (f(v), e)))
    }
}

// Lexicographic order on the ordered variable list: the earliest variable
// with differing exponents decides, larger exponent wins. This order is
// admissible, which exact_divide relies on for termination.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.exps.iter();
        let mut b = other.exps.iter();
        let (mut na, mut nb) = (a.next(), b.next());
        loop {
            match (na, nb) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => {
                            na = a.next();
                            nb = b.next();
                        }
                        unequal => return unequal,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A multivariate polynomial with exact rational coefficients, stored in
/// canonical form: no zero coefficients, no duplicate monomials. Equality
/// is structural equality of canonical forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::from_int(1)
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Polynomial::default();
        p.add_term(Monomial::unit(), c);
        p
    }

    pub fn from_int(n: i64) -> Self {
        Polynomial::constant(Rational::from_integer(n.into()))
    }

    pub fn variable(v: &Variable) -> Self {
        Polynomial::term(Monomial::variable(v), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Polynomial::default();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_unit)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms
            .keys()
            .flat_map(|m| m.exponents().map(|(v, _)| v.clone()))
            .collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `DoesNotDivide`.
    pub fn exact_divide(&self, divisor: &Polynomial) -> Result<Polynomial, RingError> {
        if divisor.is_zero() {
            return Err(RingError::ZeroDivisor);
        }
        let (dm, dc) = divisor.leading().expect("nonzero divisor has a leading term");
        let mut quotient = Polynomial::zero();
        let mut remainder = self.clone();
        while let Some((rm, rc)) = remainder.leading() {
            let Some(qm) = rm.try_div(dm) else {
                return Err(RingError::DoesNotDivide(self.clone(), divisor.clone()));
            };
            let qc = rc / dc;
            let step = Polynomial::term(qm, qc);
            remainder -= &(&step * divisor);
            quotient += &step;
        }
        Ok(quotient)
    }

    /// Renames every variable in the polynomial, collecting like terms.
    pub fn map_variables(&self, f: impl Fn(&Variable) -> Variable) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.map_variables(&f), c.clone());
        }
        out
    }

    /// Increments every variable's prime level: `f(x)` becomes `f(x')`.
    pub fn prime_shift(&self) -> Polynomial {
        self.map_variables(Variable::primed)
    }

    /// Sets every prime level to zero: the multiplication map `x' -> x`.
    pub fn identify_primes(&self) -> Polynomial {
        self.map_variables(Variable::base)
    }
}

/// The divided difference of `f` with respect to `vars[i]` (0-based):
/// substitute primes into `vars[..i]` respectively `vars[..=i]`, subtract,
/// and divide by `vars[i] - vars[i]'`. The division is exact by
/// construction; primed variables already present in `f` are untouched.
pub fn divided_difference(
    f: &Polynomial,
    vars: &[Variable],
    i: usize,
) -> Result<Polynomial, RingError> {
    if i >= vars.len() {
        return Err(RingError::IndexOutOfRange {
            index: i,
            count: vars.len(),
        });
    }
    let prime_prefix = |upto: usize| {
        f.map_variables(|v| {
            if vars[..upto].contains(v) {
                v.primed()
            } else {
                v.clone()
            }
        })
    };
    let hi = prime_prefix(i);
    let lo = prime_prefix(i + 1);
    let denom = &Polynomial::variable(&vars[i]) - &Polynomial::variable(&vars[i].primed());
    (&hi - &lo)
        .exact_divide(&denom)
        .map_err(|_| unreachable_division(&hi, &lo))
}

fn unreachable_division(hi: &Polynomial, lo: &Polynomial) -> RingError {
    // Exactness is guaranteed algebraically; reaching this is a bug.
    panic!("divided difference numerator {} - ({}) was not divisible", hi, lo)
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl MulAssign<&Polynomial> for Polynomial {
    fn mul_assign(&mut self, rhs: &Polynomial) {
        *self = &*self * rhs;
    }
}

fn fmt_coeff(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

// Canonical printing: terms in descending lexicographic monomial order,
// coefficients as numerator/denominator. parse_polynomial inverts this.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            if m.is_unit() {
                fmt_coeff(f, &abs)?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                fmt_coeff(f, &abs)?;
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}
