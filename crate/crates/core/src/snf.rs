//! Integer matrices and the Smith normal form.
//!
//! The SNF presents finitely generated abelian groups: a relation matrix `M`
//! over the generators turns into invariant factors `d_1 | d_2 | ..` of the
//! quotient group. Reduction is by elementary row/column operations with the
//! pivot chosen as the minimal nonzero absolute value (row-major tie break),
//! which is plenty at desk scale and keeps runs reproducible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Dense row-major matrix with arbitrary precision integer entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_i64(rows: usize, cols: usize, vals: &[i64]) -> Result<Self> {
        Self::new(rows, cols, vals.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.at(i, k).is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = self.at(i, k) * other.at(k, j);
                    *out.at_mut(i, j) += t;
                }
            }
        }
        Ok(out)
    }

    /// Cofactor-expansion determinant; intended for the small unimodularity
    /// checks in tests, not for production-size matrices.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(
                "determinant of non-square matrix".into(),
            ));
        }
        fn det(m: &IntMatrix, cols: &[usize], row: usize) -> BigInt {
            if cols.is_empty() {
                return BigInt::one();
            }
            let mut acc = BigInt::zero();
            for (pos, &c) in cols.iter().enumerate() {
                if m.at(row, c).is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let sub = det(m, &rest, row + 1);
                let term = m.at(row, c) * sub;
                if pos % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        let cols: Vec<usize> = (0..self.cols).collect();
        Ok(det(self, &cols, 0))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.at(r, j).clone();
            *self.at_mut(r, j) = v;
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let t = q * self.at(src, j);
            *self.at_mut(dst, j) += t;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let t = q * self.at(i, src);
            *self.at_mut(i, dst) += t;
        }
    }
}

/// `s = u * m * v` with `s` diagonal, successive diagonal entries dividing
/// each other, and `u`, `v` products of elementary (determinant +-1) matrices.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries (all positive, each dividing the next).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n)
            .map(|k| self.s.at(k, k).clone())
            .filter(|d| !d.is_zero())
            .collect()
    }
}

/// Finds the position of the minimal nonzero absolute value in the trailing
/// submatrix starting at `(k, k)`, scanning row-major for determinism.
fn min_nonzero_position(m: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in k..m.rows() {
        for j in k..m.cols() {
            let a = m.at(i, j).abs();
            if a.is_zero() {
                continue;
            }
            match &best {
                Some((_, b)) if *b <= a => {}
                _ => best = Some(((i, j), a)),
            }
        }
    }
    best.map(|(pos, _)| pos)
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let mut s = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let mut v = IntMatrix::identity(m.cols());
    let n = m.rows().min(m.cols());

    for k in 0..n {
        loop {
            let Some((pi, pj)) = min_nonzero_position(&s, k) else {
                return SmithDecomposition { s, u, v };
            };
            s.swap_rows(k, pi);
            u.swap_rows(k, pi);
            s.swap_cols(k, pj);
            v.swap_cols(k, pj);
            if s.at(k, k).is_negative() {
                s.negate_row(k);
                u.negate_row(k);
            }

            // Reduce column k below the pivot and row k to its right; Euclidean
            // division leaves remainders smaller than the pivot, so re-running
            // the min-pivot pick terminates.
            let mut dirty = false;
            for i in k + 1..s.rows() {
                if s.at(i, k).is_zero() {
                    continue;
                }
                let q = -s.at(i, k).div_floor(s.at(k, k));
                s.add_row_multiple(i, k, &q);
                u.add_row_multiple(i, k, &q);
                if !s.at(i, k).is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..s.cols() {
                if s.at(k, j).is_zero() {
                    continue;
                }
                let q = -s.at(k, j).div_floor(s.at(k, k));
                s.add_col_multiple(j, k, &q);
                v.add_col_multiple(j, k, &q);
                if !s.at(k, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }

            // Make the pivot divide everything that remains.
            let pivot = s.at(k, k).clone();
            let offender = (k + 1..s.rows()).find_map(|i| {
                (k + 1..s.cols())
                    .find(|&j| !s.at(i, j).mod_floor(&pivot).is_zero())
                    .map(|j| (i, j))
            });
            if let Some((i, _)) = offender {
                let one = BigInt::one();
                s.add_row_multiple(k, i, &one);
                u.add_row_multiple(k, i, &one);
                continue;
            }
            break;
        }
    }
    SmithDecomposition { s, u, v }
}

/// Invariant factors and free rank of `Z^cols / rowspan(relations)`.
pub fn quotient_invariants(relations: &IntMatrix) -> (Vec<BigInt>, usize) {
    let snf = smith_normal_form(relations);
    let factors: Vec<BigInt> = snf
        .invariant_factors()
        .into_iter()
        .filter(|d| !d.is_one())
        .collect();
    let nonzero = snf.invariant_factors().len();
    (factors, relations.cols() - nonzero)
}
