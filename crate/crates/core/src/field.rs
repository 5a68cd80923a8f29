//! Exact scalars over `Q` and `F_p`, and the dense linear algebra built on them.
//!
//! Every other module reduces its questions (kernels, ranks, solvability) to
//! [`Matrix::solve`] and friends, so determinism matters here: Gaussian
//! elimination always pivots on the first nonzero entry in column order, which
//! makes kernel bases and particular solutions reproducible across runs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

use crate::{Error, Result};

/// An exact field scalar: a canonical residue mod `p`, or an arbitrary
/// precision rational.
///
/// The two variants are never mixed inside one computation; the owning
/// [`Field`] decides which kind is in play.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    /// Residue in `0..p`, for the prime `p` of the owning field.
    Mod(u64),
    /// Exact rational.
    Rat(BigRational),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod(r) => *r == 0,
            Scalar::Rat(q) => q.is_zero(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod(r) => write!(f, "{r}"),
            Scalar::Rat(q) => write!(f, "{q}"),
        }
    }
}

/// The base field: `Q`, or `F_p` for a prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Rationals,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Checks the primality invariant for `Prime(p)`.
    pub fn validate(&self) -> Result<()> {
        match self {
            Field::Rationals => Ok(()),
            Field::Prime(p) if is_prime(*p) => Ok(()),
            Field::Prime(p) => Err(Error::Validation(format!("{p} is not prime"))),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::zero()),
            Field::Prime(_) => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::one()),
            Field::Prime(_) => Scalar::Mod(1),
        }
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Mod(n.rem_euclid(*p as i64) as u64),
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::Validation("zero denominator".into()));
        }
        match self {
            Field::Rationals => Ok(Scalar::Rat(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            Field::Prime(_) => {
                let d = self.from_int(den);
                let inv = self
                    .inv(&d)
                    .ok_or_else(|| Error::Validation("denominator is 0 mod p".into()))?;
                Ok(self.mul(&self.from_int(num), &inv))
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => panic!("scalar kind does not match field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Prime(p), Scalar::Mod(x)) => Scalar::Mod(if *x == 0 { 0 } else { p - x }),
            (Field::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            _ => panic!("scalar kind does not match field"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => panic!("scalar kind does not match field"),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match (self, a) {
            (Field::Prime(p), Scalar::Mod(x)) => {
                if *x == 0 {
                    None
                } else {
                    // Fermat: x^(p-2) mod p.
                    let mut base = *x as u128;
                    let mut exp = p - 2;
                    let modulus = *p as u128;
                    let mut acc = 1u128;
                    while exp > 0 {
                        if exp & 1 == 1 {
                            acc = acc * base % modulus;
                        }
                        base = base * base % modulus;
                        exp >>= 1;
                    }
                    Some(Scalar::Mod(acc as u64))
                }
            }
            (Field::Rationals, Scalar::Rat(x)) => {
                if x.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(x.recip()))
                }
            }
            _ => panic!("scalar kind does not match field"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some(*p),
        }
    }

    /// All elements in ascending order `0, 1, .., p-1`. Prime fields only.
    pub fn elements(&self) -> Result<Vec<Scalar>> {
        match self {
            Field::Rationals => Err(Error::RequiresPrimeField),
            Field::Prime(p) => Ok((0..*p).map(Scalar::Mod).collect()),
        }
    }
}

/// Dense row-major matrix over a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Output of [`Matrix::solve`]: a particular solution when the system is
/// consistent, and a basis of the kernel of the coefficient matrix either way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution {
    pub particular: Option<Vec<Scalar>>,
    pub kernel: Vec<Vec<Scalar>>,
    pub rank: usize,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Scalar>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let _ = field;
        Ok(Matrix {
            rows: r,
            cols: c,
            entries: rows.iter().flatten().cloned().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, field: &Field, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = field.mul(a, other.at(k, j));
                    *out.at_mut(i, j) = field.add(out.at(i, j), &t);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, field: &Field, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} cols, vector has {}",
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![field.zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let t = field.mul(self.at(i, j), &v[j]);
                out[i] = field.add(&out[i], &t);
            }
        }
        Ok(out)
    }

    /// In-place reduced row echelon form; returns the pivot (row, col) list.
    ///
    /// Pivot choice is the first row with a nonzero entry, scanning columns
    /// left to right, so the result is deterministic.
    pub(crate) fn rref(&mut self, field: &Field) -> Vec<(usize, usize)> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            for j in 0..self.cols {
                self.entries.swap(r * self.cols + j, pr * self.cols + j);
            }
            let inv = field.inv(self.at(r, c)).expect("pivot is nonzero");
            for j in 0..self.cols {
                *self.at_mut(r, j) = field.mul(self.at(r, j), &inv);
            }
            for i in 0..self.rows {
                if i == r || self.at(i, c).is_zero() {
                    continue;
                }
                let factor = self.at(i, c).clone();
                for j in 0..self.cols {
                    let t = field.mul(&factor, self.at(r, j));
                    *self.at_mut(i, j) = field.sub(self.at(i, j), &t);
                }
            }
            pivots.push((r, c));
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &Field) -> usize {
        let mut m = self.clone();
        m.rref(field).len()
    }

    /// Basis of `ker(self)`, one vector per free column, in ascending free
    /// column order.
    pub fn kernel_basis(&self, field: &Field) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivot_cols.contains(&f) {
                continue;
            }
            let mut v = vec![field.zero(); self.cols];
            v[f] = field.one();
            for &(r, c) in &pivots {
                v[c] = field.neg(m.at(r, f));
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = rhs` exactly.
    pub fn solve(&self, field: &Field, rhs: &[Scalar]) -> Result<LinearSolution> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} rows, rhs has {}",
                self.rows,
                rhs.len()
            )));
        }
        let mut aug = Matrix::zeros(field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, self.cols) = rhs[i].clone();
        }
        let pivots = aug.rref(field);
        let inconsistent = pivots.iter().any(|&(_, c)| c == self.cols);
        let rank = pivots.iter().filter(|&&(_, c)| c < self.cols).count();
        let particular = if inconsistent {
            None
        } else {
            let mut x = vec![field.zero(); self.cols];
            for &(r, c) in &pivots {
                x[c] = aug.at(r, self.cols).clone();
            }
            Some(x)
        };
        Ok(LinearSolution {
            particular,
            kernel: self.kernel_basis(field),
            rank,
        })
    }

    pub fn transpose(&self) -> Matrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.at(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }
}

/// Span membership: is `v` a linear combination of `basis`?
pub fn in_span(field: &Field, basis: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    if basis.is_empty() {
        return v.iter().all(Scalar::is_zero);
    }
    let n = v.len();
    let mut cols = Matrix::zeros(field, n, basis.len());
    for (j, b) in basis.iter().enumerate() {
        for i in 0..n {
            *cols.at_mut(i, j) = b[i].clone();
        }
    }
    cols.solve(field, v)
        .map(|s| s.particular.is_some())
        .unwrap_or(false)
}

/// Rank of the span of a list of vectors.
pub fn span_rank(field: &Field, vectors: &[Vec<Scalar>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(field, vectors)
        .map(|m| m.rank(field))
        .unwrap_or(0)
}
