//! Exact linear algebra over the polynomial ring: products, blocks,
//! Kronecker products, fraction-free determinants.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::ring::{Polynomial, Variable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("shape mismatch: {context} with {left_rows}x{left_cols} and {right_rows}x{right_cols}")]
    ShapeMismatch {
        context: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("entry list of length {len} does not fill a {rows}x{cols} matrix")]
    BadEntryCount { rows: usize, cols: usize, len: usize },
}

/// A dense rectangular matrix of polynomials, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::BadEntryCount {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self, MatrixError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(MatrixError::BadEntryCount {
                rows: nrows,
                cols: ncols,
                len: rows.iter().map(Vec::len).sum(),
            });
        }
        Ok(PolyMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Polynomial,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix::from_fn(rows, cols, |_, _| Polynomial::zero())
    }

    pub fn identity(n: usize) -> Self {
        PolyMatrix::scalar(n, &Polynomial::one())
    }

    /// `p` times the identity of size `n`.
    pub fn scalar(n: usize, p: &Polynomial) -> Self {
        PolyMatrix::from_fn(n, n, |i, j| if i == j { p.clone() } else { Polynomial::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> impl Iterator<Item = &Polynomial> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.entries.iter().flat_map(Polynomial::variables).collect()
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn neg(&self) -> PolyMatrix {
        self.map(|p| -p)
    }

    pub fn scale(&self, p: &Polynomial) -> PolyMatrix {
        self.map(|e| e * p)
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix, MatrixError> {
        self.zip(other, "add", |a, b| a + b)
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix, MatrixError> {
        self.zip(other, "sub", |a, b| a - b)
    }

    fn zip(
        &self,
        other: &PolyMatrix,
        context: &'static str,
        f: impl Fn(&Polynomial, &Polynomial) -> Polynomial,
    ) -> Result<PolyMatrix, MatrixError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatrixError::ShapeMismatch {
                context,
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn matmul(&self, other: &PolyMatrix) -> Result<PolyMatrix, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::ShapeMismatch {
                context: "matmul",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        Ok(PolyMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Polynomial::zero();
            for k in 0..self.cols {
                acc += &(self.at(i, k) * other.at(k, j));
            }
            acc
        }))
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    /// Kronecker product, shape (self.rows * other.rows, self.cols * other.cols).
    pub fn kron(&self, other: &PolyMatrix) -> PolyMatrix {
        PolyMatrix::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            self.at(i / other.rows, j / other.cols) * other.at(i % other.rows, j % other.cols)
        })
    }

    /// Assembles [[a, b], [c, d]].
    pub fn block2x2(
        a: &PolyMatrix,
        b: &PolyMatrix,
        c: &PolyMatrix,
        d: &PolyMatrix,
    ) -> Result<PolyMatrix, MatrixError> {
        let mismatch = |l: &PolyMatrix, r: &PolyMatrix| MatrixError::ShapeMismatch {
            context: "block2x2",
            left_rows: l.rows,
            left_cols: l.cols,
            right_rows: r.rows,
            right_cols: r.cols,
        };
        if a.rows != b.rows {
            return Err(mismatch(a, b));
        }
        if c.rows != d.rows {
            return Err(mismatch(c, d));
        }
        if a.cols != c.cols {
            return Err(mismatch(a, c));
        }
        if b.cols != d.cols {
            return Err(mismatch(b, d));
        }
        Ok(PolyMatrix::from_fn(a.rows + c.rows, a.cols + b.cols, |i, j| {
            match (i < a.rows, j < a.cols) {
                (true, true) => a.at(i, j).clone(),
                (true, false) => b.at(i, j - a.cols).clone(),
                (false, true) => c.at(i - a.rows, j).clone(),
                (false, false) => d.at(i - a.rows, j - a.cols).clone(),
            }
        }))
    }

    /// Exact determinant by fraction-free Bareiss elimination. Pivoting takes
    /// the first nonzero entry in column order; an all-zero pivot column
    /// short-circuits to zero.
    pub fn det(&self) -> Result<Polynomial, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Polynomial::one());
        }
        let mut work: Vec<Vec<Polynomial>> = (0..n)
            .map(|i| (0..n).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut sign_flip = false;
        let mut prev_pivot = Polynomial::one();
        for k in 0..n - 1 {
            let pivot_row = match (k..n).find(|&r| !work[r][k].is_zero()) {
                Some(r) => r,
                None => return Ok(Polynomial::zero()),
            };
            if pivot_row != k {
                work.swap(pivot_row, k);
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&work[k][k] * &work[i][j]) - &(&work[i][k] * &work[k][j]);
                    work[i][j] = num
                        .exact_divide(&prev_pivot)
                        .expect("Bareiss division is exact over an integral domain");
                }
                work[i][k] = Polynomial::zero();
            }
            prev_pivot = work[k][k].clone();
        }
        let det = work[n - 1][n - 1].clone();
        Ok(if sign_flip { -&det } else { det })
    }

    /// A square matrix over an integral domain is invertible over the field
    /// of fractions iff its determinant is nonzero.
    pub fn is_invertible_over_fraction_field(&self) -> Result<bool, MatrixError> {
        Ok(!self.det()?.is_zero())
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
