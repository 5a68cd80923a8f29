//! Finite-dimensional commutative unital algebras given by structure constants.
//!
//! An algebra of dimension `n` is a table `c[i][j][k]` with
//! `e_i * e_j = sum_k c[i][j][k] e_k`, a distinguished coordinate vector for
//! `1`, and a base [`Field`]. Presets cover the instances that actually come
//! up: truncated polynomial rings `k[x]/(x^m)`, products of copies of the base
//! field, and field extensions `F_(p^n)` cut out by an irreducible polynomial.

use crate::field::{in_span, span_rank, Field, Matrix, Scalar};
use crate::{Error, Result};
use std::fmt::Write as _;

/// Coordinate vector of an algebra element in the distinguished basis.
pub type AlgElement = Vec<Scalar>;

/// A commutative unital algebra presented by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    basis_names: Vec<String>,
    /// `mult[(i * dim + j) * dim + k]` is the coefficient of `e_k` in `e_i e_j`.
    mult: Vec<Scalar>,
    unit: AlgElement,
}

/// A violated algebra identity, with the witnessing basis indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraViolation {
    /// `e_i e_j != e_j e_i`, differing in coordinate `k`.
    Commutativity { i: usize, j: usize, k: usize },
    /// `(e_i e_j) e_k != e_i (e_j e_k)`, differing in coordinate `l`.
    Associativity {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
    },
    /// `1 * e_i != e_i`.
    UnitLaw { i: usize },
}

impl std::fmt::Display for AlgebraViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlgebraViolation::Commutativity { i, j, k } => {
                write!(
                    f,
                    "commutativity fails: c[{i}][{j}][{k}] != c[{j}][{i}][{k}]"
                )
            }
            AlgebraViolation::Associativity { i, j, k, l } => {
                write!(f, "associativity fails at (e{i} e{j}) e{k}, coordinate {l}")
            }
            AlgebraViolation::UnitLaw { i } => write!(f, "unit law fails: 1 * e{i} != e{i}"),
        }
    }
}

impl Algebra {
    pub fn new(
        field: Field,
        basis_names: Vec<String>,
        mult: Vec<Scalar>,
        unit: AlgElement,
    ) -> Result<Self> {
        let dim = basis_names.len();
        if dim == 0 {
            return Err(Error::Validation(
                "algebra dimension must be positive".into(),
            ));
        }
        if mult.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "structure constants need {} entries, got {}",
                dim * dim * dim,
                mult.len()
            )));
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch("unit vector length".into()));
        }
        field.validate()?;
        Ok(Algebra {
            field,
            dim,
            basis_names,
            mult,
            unit,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    pub fn zero(&self) -> AlgElement {
        vec![self.field.zero(); self.dim]
    }

    pub fn one(&self) -> AlgElement {
        self.unit.clone()
    }

    pub fn basis_element(&self, i: usize) -> AlgElement {
        let mut e = self.zero();
        e[i] = self.field.one();
        e
    }

    pub fn is_zero(&self, a: &AlgElement) -> bool {
        a.iter().all(Scalar::is_zero)
    }

    pub fn is_one(&self, a: &AlgElement) -> bool {
        *a == self.unit
    }

    pub fn add(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }

    pub fn sub(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        a.iter().zip(b).map(|(x, y)| self.field.sub(x, y)).collect()
    }

    pub fn scale(&self, c: &Scalar, a: &AlgElement) -> AlgElement {
        a.iter().map(|x| self.field.mul(c, x)).collect()
    }

    /// Product via the structure constants.
    pub fn mul(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        assert_eq!(a.len(), self.dim, "element dimension mismatch");
        assert_eq!(b.len(), self.dim, "element dimension mismatch");
        let mut out = self.zero();
        for i in 0..self.dim {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if b[j].is_zero() {
                    continue;
                }
                let ab = self.field.mul(&a[i], &b[j]);
                for k in 0..self.dim {
                    let c = self.structure_constant(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    let t = self.field.mul(&ab, c);
                    out[k] = self.field.add(&out[k], &t);
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &AlgElement, mut e: u64) -> AlgElement {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Matrix of multiplication by `a`: column `j` holds the coordinates of
    /// `a * e_j`.
    pub fn mul_matrix(&self, a: &AlgElement) -> Matrix {
        let mut m = Matrix::zeros(&self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul(a, &self.basis_element(j));
            for i in 0..self.dim {
                *m.at_mut(i, j) = col[i].clone();
            }
        }
        m
    }

    /// Checks commutativity, associativity, and the unit law by direct
    /// expansion; an empty report means the table is a genuine algebra.
    pub fn validate(&self) -> Vec<AlgebraViolation> {
        let mut report = Vec::new();
        for i in 0..self.dim {
            for j in 0..i {
                for k in 0..self.dim {
                    if self.structure_constant(i, j, k) != self.structure_constant(j, i, k) {
                        report.push(AlgebraViolation::Commutativity { i, j, k });
                    }
                }
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let left = self.mul(
                        &self.mul(&self.basis_element(i), &self.basis_element(j)),
                        &self.basis_element(k),
                    );
                    let right = self.mul(
                        &self.basis_element(i),
                        &self.mul(&self.basis_element(j), &self.basis_element(k)),
                    );
                    for l in 0..self.dim {
                        if left[l] != right[l] {
                            report.push(AlgebraViolation::Associativity { i, j, k, l });
                            break;
                        }
                    }
                }
            }
        }
        for i in 0..self.dim {
            if self.mul(&self.unit, &self.basis_element(i)) != self.basis_element(i) {
                report.push(AlgebraViolation::UnitLaw { i });
            }
        }
        report
    }

    /// Inverse of `a`, or `None` when `a` is not a unit. Solves the linear
    /// system `a * x = 1` and certifies the product exactly.
    pub fn try_invert(&self, a: &AlgElement) -> Option<AlgElement> {
        let m = self.mul_matrix(a);
        let sol = m.solve(&self.field, &self.unit).ok()?;
        let x = sol.particular?;
        if self.mul(a, &x) == self.unit {
            Some(x)
        } else {
            None
        }
    }

    /// Total number of elements, `None` over the rationals or on overflow.
    pub fn element_count(&self) -> Option<u128> {
        let p = self.field.order()? as u128;
        let mut total: u128 = 1;
        for _ in 0..self.dim {
            total = total.checked_mul(p)?;
        }
        Some(total)
    }

    fn check_enumerable(&self, cap: u64) -> Result<u128> {
        let total = match self.field {
            Field::Rationals => return Err(Error::RequiresPrimeField),
            Field::Prime(_) => self.element_count().ok_or(Error::CapExceeded {
                space: u128::MAX,
                cap,
            })?,
        };
        if total > cap as u128 {
            return Err(Error::CapExceeded { space: total, cap });
        }
        Ok(total)
    }

    /// All elements in lexicographic coordinate order (`0 < 1 < .. < p-1`,
    /// leftmost coordinate most significant). Prime fields only.
    pub fn enumerate_elements(&self, cap: u64) -> Result<Vec<AlgElement>> {
        let total = self.check_enumerable(cap)?;
        let p = self.field.order().expect("prime field") as u128;
        let mut out = Vec::with_capacity(total as usize);
        for idx in 0..total {
            let mut coords = vec![self.field.zero(); self.dim];
            let mut rest = idx;
            for slot in (0..self.dim).rev() {
                coords[slot] = Scalar::Mod((rest % p) as u64);
                rest /= p;
            }
            out.push(coords);
        }
        Ok(out)
    }

    /// Exactly the invertible elements, in lexicographic coordinate order.
    pub fn enumerate_units(&self, cap: u64) -> Result<Vec<AlgElement>> {
        Ok(self
            .enumerate_elements(cap)?
            .into_iter()
            .filter(|a| self.try_invert(a).is_some())
            .collect())
    }

    /// All `e` with `e * e = e`, in lexicographic coordinate order.
    pub fn enumerate_idempotents(&self, cap: u64) -> Result<Vec<AlgElement>> {
        Ok(self
            .enumerate_elements(cap)?
            .into_iter()
            .filter(|a| self.mul(a, a) == *a)
            .collect())
    }

    /// `Some(true)` when no nonzero nilpotents exist; `None` over the
    /// rationals (not enumerable).
    pub fn is_reduced(&self, cap: u64) -> Option<bool> {
        let elements = self.enumerate_elements(cap).ok()?;
        for a in elements {
            if self.is_zero(&a) {
                continue;
            }
            if self.is_zero(&self.pow(&a, self.dim as u64)) {
                return Some(false);
            }
        }
        Some(true)
    }

    /// Renders an element against the basis names, e.g. `1 + x` or `0`.
    pub fn format_element(&self, a: &AlgElement) -> String {
        let mut s = String::new();
        for (i, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !s.is_empty() {
                s.push_str(" + ");
            }
            let name = &self.basis_names[i];
            if self.field.one() == *c {
                s.push_str(name);
            } else if name == "1" {
                let _ = write!(s, "{c}");
            } else {
                let _ = write!(s, "{c}*{name}");
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    // ---- presets ----

    /// `k[x]/(x^m)` with basis `1, x, .., x^(m-1)`.
    pub fn truncated_polynomial(field: Field, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Validation("power must be positive".into()));
        }
        let names: Vec<String> = (0..m)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        let mut mult = vec![field.zero(); m * m * m];
        for i in 0..m {
            for j in 0..m {
                if i + j < m {
                    mult[(i * m + j) * m + (i + j)] = field.one();
                }
            }
        }
        let mut unit = vec![field.zero(); m];
        unit[0] = field.one();
        Algebra::new(field, names, mult, unit)
    }

    /// The dual numbers `k[x]/(x^2)`.
    pub fn dual_numbers(field: Field) -> Result<Self> {
        Self::truncated_polynomial(field, 2)
    }

    /// `k x k x .. x k` (`copies` factors) with the coordinatewise product;
    /// the basis vectors are the atomic idempotents `e1, .., en`.
    pub fn product_of_fields(field: Field, copies: usize) -> Result<Self> {
        if copies == 0 {
            return Err(Error::Validation("need at least one factor".into()));
        }
        let names: Vec<String> = if copies == 1 {
            vec!["1".to_string()]
        } else {
            (1..=copies).map(|i| format!("e{i}")).collect()
        };
        let mut mult = vec![field.zero(); copies * copies * copies];
        for i in 0..copies {
            mult[(i * copies + i) * copies + i] = field.one();
        }
        let unit = vec![field.one(); copies];
        Algebra::new(field, names, mult, unit)
    }

    /// `F_(p^n)` as `F_p[w]/(modulus)` for a monic irreducible `modulus`
    /// given by ascending coefficients (constant term first, leading 1 last).
    pub fn field_extension(field: Field, modulus: &[i64]) -> Result<Self> {
        let Field::Prime(p) = field else {
            return Err(Error::RequiresPrimeField);
        };
        field.validate()?;
        let n = modulus.len().saturating_sub(1);
        if n == 0 {
            return Err(Error::Validation("modulus must have degree >= 1".into()));
        }
        let coeffs: Vec<u64> = modulus
            .iter()
            .map(|&c| c.rem_euclid(p as i64) as u64)
            .collect();
        if coeffs[n] != 1 {
            return Err(Error::Validation("modulus must be monic".into()));
        }
        if !poly_is_irreducible(p, &coeffs) {
            return Err(Error::Validation("modulus is reducible".into()));
        }
        // x^n = -(c_0 + c_1 x + .. + c_(n-1) x^(n-1)); reduce each basis product.
        let reduce = |mut poly: Vec<u64>| -> Vec<u64> {
            while poly.len() > n {
                let lead = poly.pop().unwrap() % p;
                if lead == 0 {
                    continue;
                }
                let deg = poly.len() - n;
                for (t, &c) in coeffs.iter().enumerate().take(n) {
                    let sub = lead * c % p;
                    poly[deg + t] = (poly[deg + t] + p - sub) % p;
                }
            }
            poly.resize(n, 0);
            poly
        };
        let names: Vec<String> = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "w".to_string(),
                _ => format!("w^{i}"),
            })
            .collect();
        let mut mult = vec![field.zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                let mut poly = vec![0u64; i + j + 1];
                poly[i + j] = 1;
                let red = reduce(poly);
                for (k, &c) in red.iter().enumerate() {
                    mult[(i * n + j) * n + k] = Scalar::Mod(c % p);
                }
            }
        }
        let mut unit = vec![field.zero(); n];
        unit[0] = field.one();
        Algebra::new(field, names, mult, unit)
    }
}

/// Irreducibility over `F_p` by trial division against every monic polynomial
/// of degree up to half the target degree. Desk scale only.
fn poly_is_irreducible(p: u64, coeffs: &[u64]) -> bool {
    let n = coeffs.len() - 1;
    if n == 1 {
        return true;
    }
    let rem_by = |dividend: &[u64], divisor: &[u64]| -> Vec<u64> {
        let mut rem: Vec<u64> = dividend.to_vec();
        let d = divisor.len() - 1;
        while rem.len() > d {
            let lead = *rem.last().unwrap() % p;
            let shift = rem.len() - 1 - d;
            if lead != 0 {
                for (i, &c) in divisor.iter().enumerate() {
                    rem[shift + i] = (rem[shift + i] + p - lead * c % p) % p;
                }
            }
            rem.pop();
        }
        rem
    };
    for d in 1..=n / 2 {
        // All monic degree-d candidates.
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut divisor = vec![0u64; d + 1];
            divisor[d] = 1;
            let mut rest = idx;
            for slot in 0..d {
                divisor[slot] = rest % p;
                rest /= p;
            }
            let rem = rem_by(coeffs, &divisor);
            if rem.iter().all(|&c| c % p == 0) {
                return false;
            }
        }
    }
    true
}

/// A subalgebra given by a spanning list of elements of the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra {
    basis: Vec<AlgElement>,
}

impl Subalgebra {
    pub fn new(basis: Vec<AlgElement>) -> Self {
        Subalgebra { basis }
    }

    pub fn basis(&self) -> &[AlgElement] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, alg: &Algebra, a: &AlgElement) -> bool {
        in_span(alg.field(), &self.basis, a)
    }

    /// Linear independence, `1` in the span, and closure under products.
    pub fn validate(&self, alg: &Algebra) -> Result<()> {
        if span_rank(alg.field(), &self.basis) != self.basis.len() {
            return Err(Error::Validation(
                "subalgebra basis is linearly dependent".into(),
            ));
        }
        if !self.contains(alg, &alg.one()) {
            return Err(Error::Validation(
                "subalgebra does not contain the unit".into(),
            ));
        }
        for (i, a) in self.basis.iter().enumerate() {
            for (j, b) in self.basis.iter().enumerate() {
                if !self.contains(alg, &alg.mul(a, b)) {
                    return Err(Error::Validation(format!(
                        "subalgebra is not multiplicatively closed: basis product ({i}, {j}) escapes the span"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Projector from raw `A (x) A` coordinates onto a chosen quotient basis,
/// stored as the reduced relation rows and their pivot columns.
#[derive(Clone, Debug)]
struct QuotientProjector {
    rref_rows: Vec<Vec<Scalar>>,
    pivot_cols: Vec<usize>,
    representatives: Vec<(usize, usize)>,
    parent_dim: usize,
}

impl QuotientProjector {
    fn project(&self, field: &Field, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.parent_dim * self.parent_dim);
        let mut w = v.to_vec();
        for (row, &pc) in self.rref_rows.iter().zip(&self.pivot_cols) {
            if w[pc].is_zero() {
                continue;
            }
            let factor = w[pc].clone();
            for (x, r) in w.iter_mut().zip(row) {
                let t = field.mul(&factor, r);
                *x = field.sub(x, &t);
            }
        }
        self.representatives
            .iter()
            .map(|&(i, j)| w[i * self.parent_dim + j].clone())
            .collect()
    }
}

/// The algebra `A (x)_B A` together with the structural maps from `A`.
#[derive(Clone, Debug)]
pub struct TensorSquare {
    pub algebra: Algebra,
    /// `a -> a (x) 1`, as a (quotient dim) x (dim A) matrix.
    pub left_inclusion: Matrix,
    /// `a -> 1 (x) a`.
    pub right_inclusion: Matrix,
    /// Quotient basis representatives as pairs `(i, j)` meaning `e_i (x) e_j`.
    pub representatives: Vec<(usize, usize)>,
    projector: QuotientProjector,
}

impl TensorSquare {
    /// Projects a raw `dim^2` coordinate vector on `e_i (x) e_j` onto the
    /// quotient basis.
    pub fn project(&self, field: &Field, v: &[Scalar]) -> Vec<Scalar> {
        self.projector.project(field, v)
    }
}

/// Builds `A (x)_B A`: the quotient of `A (x) A` by the span of
/// `(a b) (x) c - a (x) (b c)` over basis elements `a, c` of `A` and `b` of
/// `B`, with the induced multiplication.
pub fn tensor_over_subalgebra(alg: &Algebra, sub: &Subalgebra) -> Result<TensorSquare> {
    sub.validate(alg)?;
    let field = *alg.field();
    let n = alg.dim();
    let nn = n * n;

    // Relation rows in the e_i (x) e_j coordinates.
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for b in sub.basis() {
        for i in 0..n {
            let ab = alg.mul(&alg.basis_element(i), b);
            for k in 0..n {
                let bc = alg.mul(b, &alg.basis_element(k));
                let mut row = vec![field.zero(); nn];
                for (m, c) in ab.iter().enumerate() {
                    row[m * n + k] = field.add(&row[m * n + k], c);
                }
                for (m, c) in bc.iter().enumerate() {
                    row[i * n + m] = field.sub(&row[i * n + m], c);
                }
                if !row.iter().all(Scalar::is_zero) {
                    rows.push(row);
                }
            }
        }
    }

    // Reduced echelon form of the relation span.
    let (rref_rows, pivot_cols) = if rows.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        let mut m = Matrix::from_rows(&field, &rows)?;
        let pivots = m.rref(&field);
        let rows: Vec<Vec<Scalar>> = pivots.iter().map(|&(r, _)| m.row(r).to_vec()).collect();
        let cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        (rows, cols)
    };

    let representatives: Vec<(usize, usize)> = (0..nn)
        .filter(|c| !pivot_cols.contains(c))
        .map(|c| (c / n, c % n))
        .collect();
    let q = representatives.len();
    let projector = QuotientProjector {
        rref_rows,
        pivot_cols,
        representatives: representatives.clone(),
        parent_dim: n,
    };

    // Structure constants on the quotient: multiply representatives in
    // A (x) A and project.
    let mut mult = vec![field.zero(); q * q * q];
    for (u, &(i1, j1)) in representatives.iter().enumerate() {
        for (v, &(i2, j2)) in representatives.iter().enumerate() {
            let left = alg.mul(&alg.basis_element(i1), &alg.basis_element(i2));
            let right = alg.mul(&alg.basis_element(j1), &alg.basis_element(j2));
            let mut raw = vec![field.zero(); nn];
            for (a, ca) in left.iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                for (b, cb) in right.iter().enumerate() {
                    if cb.is_zero() {
                        continue;
                    }
                    let t = field.mul(ca, cb);
                    raw[a * n + b] = field.add(&raw[a * n + b], &t);
                }
            }
            let proj = projector.project(&field, &raw);
            for (w, c) in proj.into_iter().enumerate() {
                mult[(u * q + v) * q + w] = c;
            }
        }
    }

    // Unit = class of 1 (x) 1.
    let one = alg.one();
    let mut raw_one = vec![field.zero(); nn];
    for (a, ca) in one.iter().enumerate() {
        for (b, cb) in one.iter().enumerate() {
            let t = field.mul(ca, cb);
            raw_one[a * n + b] = field.add(&raw_one[a * n + b], &t);
        }
    }
    let unit = projector.project(&field, &raw_one);

    let names: Vec<String> = representatives
        .iter()
        .map(|&(i, j)| format!("{}(x){}", alg.basis_names()[i], alg.basis_names()[j]))
        .collect();
    let algebra = Algebra::new(field, names, mult, unit)?;

    // Structural maps a -> a (x) 1 and a -> 1 (x) a, columnwise.
    let mut left_inclusion = Matrix::zeros(&field, q, n);
    let mut right_inclusion = Matrix::zeros(&field, q, n);
    for j in 0..n {
        let mut raw_l = vec![field.zero(); nn];
        let mut raw_r = vec![field.zero(); nn];
        for (b, cb) in one.iter().enumerate() {
            raw_l[j * n + b] = cb.clone();
            raw_r[b * n + j] = cb.clone();
        }
        let pl = projector.project(&field, &raw_l);
        let pr = projector.project(&field, &raw_r);
        for i in 0..q {
            *left_inclusion.at_mut(i, j) = pl[i].clone();
            *right_inclusion.at_mut(i, j) = pr[i].clone();
        }
    }

    Ok(TensorSquare {
        algebra,
        left_inclusion,
        right_inclusion,
        representatives,
        projector,
    })
}

/// Rank of the multiplication map `A (x)_B A -> A`, `a (x) c -> ac`; equal to
/// `dim A` exactly when multiplication identifies the tensor square with `A`.
pub fn multiplication_map_rank(alg: &Algebra, square: &TensorSquare) -> usize {
    let field = alg.field();
    let images: Vec<AlgElement> = square
        .representatives
        .iter()
        .map(|&(i, j)| alg.mul(&alg.basis_element(i), &alg.basis_element(j)))
        .collect();
    span_rank(field, &images)
}

#[cfg(test)]
mod tests {
    use super::*;

    const F2: Field = Field::Prime(2);
    const F3: Field = Field::Prime(3);

    fn el(field: &Field, coords: &[i64]) -> AlgElement {
        coords.iter().map(|&c| field.from_int(c)).collect()
    }

    #[test]
    fn dual_numbers_is_valid() {
        let a = Algebra::dual_numbers(F2).unwrap();
        assert!(a.validate().is_empty());
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn one_dimensional_field_is_valid() {
        let a = Algebra::product_of_fields(F3, 1).unwrap();
        assert!(a.validate().is_empty());
    }

    #[test]
    fn corrupted_table_reports_unit_law() {
        // x*x = 1 and x*1 = 1*x = 0: the unit law breaks at e1 = x.
        let f = F2;
        let mut mult = vec![f.zero(); 8];
        let at = |i: usize, j: usize, k: usize| (i * 2 + j) * 2 + k;
        mult[at(0, 0, 0)] = f.one(); // 1*1 = 1
        mult[at(1, 1, 0)] = f.one(); // x*x = 1
        let a = Algebra::new(f, vec!["1".into(), "x".into()], mult, el(&f, &[1, 0])).unwrap();
        let report = a.validate();
        assert!(
            report
                .iter()
                .any(|v| matches!(v, AlgebraViolation::UnitLaw { i: 1 })),
            "got {report:?}"
        );
    }

    #[test]
    fn multiplication_basics() {
        let dual = Algebra::dual_numbers(F2).unwrap();
        let x = el(&F2, &[0, 1]);
        let one = dual.one();
        assert_eq!(dual.mul(&one, &x), x);
        // x * x = 0 in k[x]/(x^2).
        assert!(dual.is_zero(&dual.mul(&x, &x)));

        let prod = Algebra::product_of_fields(F2, 2).unwrap();
        let e1 = el(&F2, &[1, 0]);
        let e2 = el(&F2, &[0, 1]);
        assert!(prod.is_zero(&prod.mul(&e1, &e2)));
    }

    #[test]
    fn inversion() {
        let dual = Algebra::dual_numbers(F2).unwrap();
        assert_eq!(dual.try_invert(&dual.one()), Some(dual.one()));
        // (1+x)^2 = 1 in characteristic 2, so 1+x is its own inverse.
        let u = el(&F2, &[1, 1]);
        let inv = dual.try_invert(&u).unwrap();
        assert_eq!(inv, u);
        assert_eq!(dual.mul(&u, &inv), dual.one());

        let prod = Algebra::product_of_fields(F2, 2).unwrap();
        assert_eq!(prod.try_invert(&el(&F2, &[1, 0])), None);
    }

    /// Brute-force unit oracle: `a` is a unit iff some product hits 1.
    fn unit_by_exhaustion(alg: &Algebra, a: &AlgElement) -> bool {
        alg.enumerate_elements(4096)
            .unwrap()
            .iter()
            .any(|b| alg.mul(a, b) == alg.one())
    }

    #[test]
    fn unit_enumeration_matches_oracle() {
        for alg in [
            Algebra::dual_numbers(F2).unwrap(),
            Algebra::product_of_fields(F2, 2).unwrap(),
            Algebra::product_of_fields(F3, 1).unwrap(),
            Algebra::field_extension(F2, &[1, 1, 1]).unwrap(),
        ] {
            let units = alg.enumerate_units(4096).unwrap();
            for a in alg.enumerate_elements(4096).unwrap() {
                assert_eq!(units.contains(&a), unit_by_exhaustion(&alg, &a));
            }
        }
    }

    #[test]
    fn expected_unit_sets() {
        let dual = Algebra::dual_numbers(F2).unwrap();
        assert_eq!(
            dual.enumerate_units(16).unwrap(),
            vec![el(&F2, &[1, 0]), el(&F2, &[1, 1])]
        );
        let f3 = Algebra::product_of_fields(F3, 1).unwrap();
        assert_eq!(
            f3.enumerate_units(16).unwrap(),
            vec![el(&F3, &[1]), el(&F3, &[2])]
        );
        let prod = Algebra::product_of_fields(F2, 2).unwrap();
        assert_eq!(prod.enumerate_units(16).unwrap(), vec![el(&F2, &[1, 1])]);
    }

    #[test]
    fn idempotents_and_complement_closure() {
        let prod = Algebra::product_of_fields(F2, 2).unwrap();
        let idems = prod.enumerate_idempotents(16).unwrap();
        assert_eq!(
            idems,
            vec![
                el(&F2, &[0, 0]),
                el(&F2, &[0, 1]),
                el(&F2, &[1, 0]),
                el(&F2, &[1, 1])
            ]
        );
        for e in &idems {
            let complement = prod.sub(&prod.one(), e);
            assert!(idems.contains(&complement));
        }
        let dual = Algebra::dual_numbers(F2).unwrap();
        assert_eq!(
            dual.enumerate_idempotents(16).unwrap(),
            vec![el(&F2, &[0, 0]), el(&F2, &[1, 0])]
        );
    }

    #[test]
    fn enumeration_requires_prime_field() {
        let a = Algebra::dual_numbers(Field::Rationals).unwrap();
        assert!(matches!(
            a.enumerate_units(16),
            Err(Error::RequiresPrimeField)
        ));
    }

    #[test]
    fn enumeration_cap() {
        let a = Algebra::truncated_polynomial(F3, 5).unwrap();
        assert!(matches!(
            a.enumerate_units(16),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn field_extension_models() {
        // F4 = F2[w]/(w^2 + w + 1): w^2 = w + 1.
        let f4 = Algebra::field_extension(F2, &[1, 1, 1]).unwrap();
        assert!(f4.validate().is_empty());
        let w = el(&F2, &[0, 1]);
        assert_eq!(f4.mul(&w, &w), el(&F2, &[1, 1]));
        assert_eq!(f4.enumerate_units(16).unwrap().len(), 3);

        // F9 = F3[w]/(w^2 - w - 1): w^2 = w + 1.
        let f9 = Algebra::field_extension(F3, &[2, 2, 1]).unwrap();
        assert!(f9.validate().is_empty());
        let w = el(&F3, &[0, 1]);
        assert_eq!(f9.mul(&w, &w), el(&F3, &[1, 1]));
        assert_eq!(f9.enumerate_units(16).unwrap().len(), 8);

        // x^2 + 1 is reducible mod 2.
        assert!(Algebra::field_extension(F2, &[1, 0, 1]).is_err());
    }

    #[test]
    fn reducedness() {
        assert_eq!(
            Algebra::dual_numbers(F2).unwrap().is_reduced(16),
            Some(false)
        );
        assert_eq!(
            Algebra::product_of_fields(F2, 2).unwrap().is_reduced(16),
            Some(true)
        );
        assert_eq!(
            Algebra::field_extension(F2, &[1, 1, 1])
                .unwrap()
                .is_reduced(16),
            Some(true)
        );
    }

    #[test]
    fn tensor_square_over_self_collapses() {
        let alg = Algebra::product_of_fields(F2, 2).unwrap();
        let full = Subalgebra::new(vec![alg.basis_element(0), alg.basis_element(1)]);
        let sq = tensor_over_subalgebra(&alg, &full).unwrap();
        assert_eq!(sq.algebra.dim(), 2);
        assert!(sq.algebra.validate().is_empty());
        assert_eq!(multiplication_map_rank(&alg, &sq), 2);
    }

    #[test]
    fn tensor_square_over_scalars_is_full() {
        let alg = Algebra::dual_numbers(F2).unwrap();
        let scalars = Subalgebra::new(vec![alg.one()]);
        let sq = tensor_over_subalgebra(&alg, &scalars).unwrap();
        assert_eq!(sq.algebra.dim(), 4);
        assert!(sq.algebra.validate().is_empty());

        let f4 = Algebra::field_extension(F2, &[1, 1, 1]).unwrap();
        let scalars = Subalgebra::new(vec![f4.one()]);
        let sq = tensor_over_subalgebra(&f4, &scalars).unwrap();
        assert_eq!(sq.algebra.dim(), 4);
    }

    #[test]
    fn tensor_square_structural_maps() {
        let alg = Algebra::dual_numbers(F2).unwrap();
        let scalars = Subalgebra::new(vec![alg.one()]);
        let sq = tensor_over_subalgebra(&alg, &scalars).unwrap();
        // a -> a(x)1 and a -> 1(x)a are unital algebra maps into the square.
        let one_img = sq.left_inclusion.mul_vec(alg.field(), &alg.one()).unwrap();
        assert_eq!(one_img, sq.algebra.one());
        let x = el(&F2, &[0, 1]);
        let lx = sq.left_inclusion.mul_vec(alg.field(), &x).unwrap();
        let rx = sq.right_inclusion.mul_vec(alg.field(), &x).unwrap();
        assert!(!sq.algebra.is_zero(&lx));
        assert!(!sq.algebra.is_zero(&rx));
        assert_ne!(lx, rx);
    }

    #[test]
    fn invalid_subalgebra_rejected() {
        let alg = Algebra::product_of_fields(F2, 2).unwrap();
        // span{e1} does not contain the unit.
        let sub = Subalgebra::new(vec![alg.basis_element(0)]);
        assert!(tensor_over_subalgebra(&alg, &sub).is_err());
    }
}
