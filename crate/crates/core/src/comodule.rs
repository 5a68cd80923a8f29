//! Comodule-algebra structures on a finite-dimensional algebra.
//!
//! A coaction `rho: A -> A (x) H` is given in one of two shapes, matching the
//! two Hopf families:
//!
//! * a grading by the basis group `M` of `H = kM`: each basis vector of `A`
//!   gets a degree, and `rho(e_i) = e_i (x) g_(deg i)`;
//! * a group action by algebra automorphisms for `H = k^G`: each `g` gets an
//!   `n x n` matrix, and `rho(a) = sum_g (g.a) (x) p_g`.
//!
//! Constructors validate the defining conditions (homogeneous structure
//! constants, automorphism + homomorphism laws); [`Coaction::validate`]
//! re-checks the comodule-algebra axioms by direct expansion, which is what
//! the fault-injection tests poke at.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{AlgElement, Algebra, Subalgebra};
use crate::coring::CoringElement;
use crate::field::Matrix;
use crate::hopf::{Group, GroupElt, HopfAlgebra, HopfVariant, Window};
use crate::{Error, Result};

/// A validated right `H`-comodule-algebra structure on `A`.
#[derive(Clone, Debug)]
pub struct Coaction {
    algebra: Algebra,
    hopf: HopfAlgebra,
    variant: CoactionVariant,
}

#[derive(Clone, Debug)]
pub enum CoactionVariant {
    /// Degree of each basis vector of `A` in the basis group of `kM`.
    Grading(Vec<GroupElt>),
    /// One matrix per group element index, acting on coordinates.
    Action(Vec<Matrix>),
}

/// A violated comodule-algebra axiom with its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComoduleViolation {
    /// `rho(1) != 1 (x) 1`.
    UnitCoaction,
    /// `(id (x) counit) rho != id` at basis vector `i`.
    Counit { i: usize },
    /// `(rho (x) id) rho != (id (x) comult) rho` at basis vector `i`.
    Coassociativity { i: usize },
    /// `rho(e_i e_j) != rho(e_i) rho(e_j)`.
    Multiplicativity { i: usize, j: usize },
}

impl std::fmt::Display for ComoduleViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ComoduleViolation::UnitCoaction => write!(f, "rho(1) != 1 (x) 1"),
            ComoduleViolation::Counit { i } => {
                write!(f, "counit law fails on basis vector e{i}")
            }
            ComoduleViolation::Coassociativity { i } => {
                write!(f, "coaction is not coassociative on basis vector e{i}")
            }
            ComoduleViolation::Multiplicativity { i, j } => {
                write!(f, "rho(e{i} * e{j}) != rho(e{i}) rho(e{j})")
            }
        }
    }
}

/// The coinvariants `B = {a : rho(a) = a (x) 1}` as a subalgebra of `A`.
#[derive(Clone, Debug)]
pub struct CoinvariantAlgebra {
    pub subalgebra: Subalgebra,
    /// Multiplicative closure, re-checked on the computed basis.
    pub closed: bool,
}

/// Report on the canonical map `A (x)_B A -> A (x) H`,
/// `a (x) b -> a b_[0] (x) b_[1]`.
#[derive(Clone, Debug)]
pub struct CanonicalMapReport {
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub rank: usize,
    pub injective: bool,
    pub surjective: bool,
    pub bijective: bool,
    /// Basis keys of the codomain `A (x) span(keys)`.
    pub codomain_keys: Vec<GroupElt>,
    /// True when `H = kZ`: the codomain was cut to the occurring degrees, and
    /// surjectivity onto all of `A (x) H` is out of reach for dimension
    /// reasons.
    pub codomain_restricted: bool,
}

impl Coaction {
    /// Grading coaction for a group-basis `H = kM`: checks that the structure
    /// constants are homogeneous and the unit sits in degree 0.
    pub fn from_grading(
        algebra: Algebra,
        hopf: HopfAlgebra,
        degrees: Vec<GroupElt>,
    ) -> Result<Self> {
        let HopfVariant::GroupBasis(group) = hopf.variant() else {
            return Err(Error::VariantMismatch(
                "grading coactions require a group-basis Hopf algebra".into(),
            ));
        };
        if algebra.field() != hopf.field() {
            return Err(Error::Validation(
                "algebra and Hopf algebra fields differ".into(),
            ));
        }
        let n = algebra.dim();
        if degrees.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "need {n} degrees, got {}",
                degrees.len()
            )));
        }
        for &d in &degrees {
            match (group, d) {
                (Group::Integers, GroupElt::Int(_)) => {}
                (Group::Finite(g), GroupElt::Fin(i)) if i < g.order() => {}
                _ => {
                    return Err(Error::Validation(
                        "degree kind does not match the group".into(),
                    ))
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if algebra.structure_constant(i, j, k).is_zero() {
                        continue;
                    }
                    if group.op(degrees[i], degrees[j]) != degrees[k] {
                        return Err(Error::Validation(format!(
                            "structure constant c[{i}][{j}][{k}] is nonzero but deg(e{i})*deg(e{j}) != deg(e{k})"
                        )));
                    }
                }
            }
        }
        let id = group.identity();
        for (i, c) in algebra.one().iter().enumerate() {
            if !c.is_zero() && degrees[i] != id {
                return Err(Error::Validation(format!(
                    "unit has a component of nonzero degree at e{i}"
                )));
            }
        }
        Ok(Coaction {
            algebra,
            hopf,
            variant: CoactionVariant::Grading(degrees),
        })
    }

    /// Action coaction for `H = k^G`: checks that each matrix is a unital
    /// algebra endomorphism and that `g -> M_g` is a group homomorphism
    /// (which forces every `M_g` to be an automorphism).
    pub fn from_action(algebra: Algebra, hopf: HopfAlgebra, matrices: Vec<Matrix>) -> Result<Self> {
        let HopfVariant::DualGroup(group) = hopf.variant() else {
            return Err(Error::VariantMismatch(
                "action coactions require a dual-of-group Hopf algebra".into(),
            ));
        };
        if algebra.field() != hopf.field() {
            return Err(Error::Validation(
                "algebra and Hopf algebra fields differ".into(),
            ));
        }
        let n = algebra.dim();
        let m = group.order();
        if matrices.len() != m {
            return Err(Error::DimensionMismatch(format!(
                "need one matrix per group element ({m}), got {}",
                matrices.len()
            )));
        }
        let field = algebra.field();
        for (g, mat) in matrices.iter().enumerate() {
            if mat.rows() != n || mat.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "matrix for group element {g} is {}x{}, need {n}x{n}",
                    mat.rows(),
                    mat.cols()
                )));
            }
            if mat.mul_vec(field, &algebra.one())? != algebra.one() {
                return Err(Error::Validation(format!(
                    "matrix for group element {g} does not fix the unit"
                )));
            }
            for i in 0..n {
                for j in 0..n {
                    let lhs = mat.mul_vec(
                        field,
                        &algebra.mul(&algebra.basis_element(i), &algebra.basis_element(j)),
                    )?;
                    let rhs = algebra.mul(
                        &mat.mul_vec(field, &algebra.basis_element(i))?,
                        &mat.mul_vec(field, &algebra.basis_element(j))?,
                    );
                    if lhs != rhs {
                        return Err(Error::Validation(format!(
                            "matrix for group element {g} is not multiplicative on (e{i}, e{j})"
                        )));
                    }
                }
            }
        }
        let id = Matrix::identity(field, n);
        if matrices[group.identity()] != id {
            return Err(Error::Validation(
                "identity element must act as the identity".into(),
            ));
        }
        for a in 0..m {
            for b in 0..m {
                let ab = matrices[a].mul(field, &matrices[b])?;
                if ab != matrices[group.op(a, b)] {
                    return Err(Error::Validation(format!(
                        "action is not a homomorphism at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(Coaction {
            algebra,
            hopf,
            variant: CoactionVariant::Action(matrices),
        })
    }

    /// No-validation constructor for fault-injection tests.
    #[cfg(test)]
    pub(crate) fn from_parts_unchecked(
        algebra: Algebra,
        hopf: HopfAlgebra,
        variant: CoactionVariant,
    ) -> Self {
        Coaction {
            algebra,
            hopf,
            variant,
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn variant(&self) -> &CoactionVariant {
        &self.variant
    }

    pub fn is_grading(&self) -> bool {
        matches!(self.variant, CoactionVariant::Grading(_))
    }

    /// Degrees of the basis vectors (grading variant).
    pub fn degrees(&self) -> Option<&[GroupElt]> {
        match &self.variant {
            CoactionVariant::Grading(d) => Some(d),
            CoactionVariant::Action(_) => None,
        }
    }

    /// Applies the group element `g` (by index) to `a`; action variant only.
    pub fn apply_group(&self, g: usize, a: &AlgElement) -> AlgElement {
        match &self.variant {
            CoactionVariant::Action(mats) => mats[g]
                .mul_vec(self.algebra.field(), a)
                .expect("action matrix dimension"),
            CoactionVariant::Grading(_) => panic!("apply_group on a grading coaction"),
        }
    }

    /// Homogeneous component of `a` in degree `d`; grading variant only.
    pub fn homogeneous_component(&self, a: &AlgElement, d: GroupElt) -> AlgElement {
        let CoactionVariant::Grading(degrees) = &self.variant else {
            panic!("homogeneous_component on an action coaction");
        };
        let field = self.algebra.field();
        a.iter()
            .enumerate()
            .map(|(i, c)| {
                if degrees[i] == d {
                    c.clone()
                } else {
                    field.zero()
                }
            })
            .collect()
    }

    /// The distinct degrees of the basis (grading), or all group element keys
    /// (action); these index the codomain of the canonical map.
    pub fn occurring_keys(&self) -> Vec<GroupElt> {
        match &self.variant {
            CoactionVariant::Grading(degrees) => {
                let set: BTreeSet<GroupElt> = degrees.iter().copied().collect();
                set.into_iter().collect()
            }
            CoactionVariant::Action(mats) => (0..mats.len()).map(GroupElt::Fin).collect(),
        }
    }

    /// The coaction `rho(a)` as an element of `A (x) H`.
    pub fn coact(&self, a: &AlgElement) -> CoringElement {
        let field = self.algebra.field();
        match &self.variant {
            CoactionVariant::Grading(degrees) => {
                let keys: BTreeSet<GroupElt> = degrees.iter().copied().collect();
                CoringElement::from_terms(
                    field,
                    keys.into_iter()
                        .map(|d| (d, self.homogeneous_component(a, d))),
                )
            }
            CoactionVariant::Action(mats) => CoringElement::from_terms(
                field,
                (0..mats.len()).map(|g| (GroupElt::Fin(g), self.apply_group(g, a))),
            ),
        }
    }

    /// `a (x) 1_H` as an element of `A (x) H`.
    pub fn embed_left(&self, a: &AlgElement) -> CoringElement {
        let field = self.algebra.field();
        CoringElement::from_terms(
            field,
            self.hopf
                .unit_support()
                .into_iter()
                .map(|(k, c)| (k, self.algebra.scale(&c, a))),
        )
    }

    /// Checks the comodule-algebra axioms on the basis; empty means valid.
    pub fn validate(&self) -> Vec<ComoduleViolation> {
        let alg = &self.algebra;
        let n = alg.dim();
        let mut report = Vec::new();

        if self.coact(&alg.one()) != self.embed_left(&alg.one()) {
            report.push(ComoduleViolation::UnitCoaction);
        }

        for i in 0..n {
            let e = alg.basis_element(i);
            let rho = self.coact(&e);

            // (id (x) counit) rho = id
            let mut counit_img = alg.zero();
            for (k, coeff) in rho.support() {
                let eps = self.hopf.counit_on_basis(*k);
                counit_img = alg.add(&counit_img, &alg.scale(&eps, coeff));
            }
            if counit_img != e {
                report.push(ComoduleViolation::Counit { i });
            }

            // (rho (x) id) rho vs (id (x) comult) rho in A (x) H (x) H.
            let mut lhs: BTreeMap<(GroupElt, GroupElt), AlgElement> = BTreeMap::new();
            let mut rhs: BTreeMap<(GroupElt, GroupElt), AlgElement> = BTreeMap::new();
            for (k, coeff) in rho.support() {
                for (w, inner) in self.coact(coeff).support() {
                    let slot = lhs.entry((*w, *k)).or_insert_with(|| alg.zero());
                    *slot = alg.add(slot, inner);
                }
                for (h1, h2) in self.hopf.comult_pairs(*k) {
                    let slot = rhs.entry((h1, h2)).or_insert_with(|| alg.zero());
                    *slot = alg.add(slot, coeff);
                }
            }
            lhs.retain(|_, v| !alg.is_zero(v));
            rhs.retain(|_, v| !alg.is_zero(v));
            if lhs != rhs {
                report.push(ComoduleViolation::Coassociativity { i });
            }
        }

        for i in 0..n {
            for j in 0..=i {
                let lhs = self.coact(&alg.mul(&alg.basis_element(i), &alg.basis_element(j)));
                let rhs = crate::coring::coring_mul(
                    alg,
                    &self.hopf,
                    &self.coact(&alg.basis_element(i)),
                    &self.coact(&alg.basis_element(j)),
                );
                if lhs != rhs {
                    report.push(ComoduleViolation::Multiplicativity { i, j });
                }
            }
        }

        report
    }

    /// Solves `rho(a) = a (x) 1` and returns `B` with a closure check.
    pub fn coinvariants(&self) -> CoinvariantAlgebra {
        let alg = &self.algebra;
        let field = alg.field();
        let n = alg.dim();

        // Row index set: all H-keys seen in rho(e_j) or in the unit support.
        let mut keys: BTreeSet<GroupElt> = BTreeSet::new();
        let mut columns = Vec::with_capacity(n);
        for j in 0..n {
            let l = self.coact(&alg.basis_element(j));
            let r = self.embed_left(&alg.basis_element(j));
            keys.extend(l.support().keys().copied());
            keys.extend(r.support().keys().copied());
            columns.push((l, r));
        }
        let keys: Vec<GroupElt> = keys.into_iter().collect();
        let mut m = Matrix::zeros(field, keys.len() * n, n);
        let zero_vec = alg.zero();
        for (j, (l, r)) in columns.iter().enumerate() {
            for (row_block, key) in keys.iter().enumerate() {
                let lc = l.coeff(key).unwrap_or(&zero_vec);
                let rc = r.coeff(key).unwrap_or(&zero_vec);
                for i in 0..n {
                    *m.at_mut(row_block * n + i, j) = field.sub(&lc[i], &rc[i]);
                }
            }
        }
        let basis = m.kernel_basis(field);
        let subalgebra = Subalgebra::new(basis);
        let closed = subalgebra.validate(alg).is_ok();
        CoinvariantAlgebra { subalgebra, closed }
    }

    /// Assembles the canonical map on a basis of `A (x)_B A` and reports its
    /// rank against `A (x) span(occurring keys)`.
    pub fn canonical_map(&self) -> Result<CanonicalMapReport> {
        let alg = &self.algebra;
        let field = alg.field();
        let n = alg.dim();
        let b = self.coinvariants();
        let square = crate::algebra::tensor_over_subalgebra(alg, &b.subalgebra)?;
        let q = square.algebra.dim();

        let codomain_restricted = matches!(
            self.hopf.variant(),
            HopfVariant::GroupBasis(Group::Integers)
        );
        let codomain_keys: Vec<GroupElt> = if codomain_restricted {
            self.occurring_keys()
        } else {
            // Finite H: the full basis.
            self.hopf.basis_keys(Window { lo: 0, hi: 0 })
        };
        let codomain_dim = n * codomain_keys.len();

        let mut matrix = Matrix::zeros(field, codomain_dim, q);
        for (col, &(i, j)) in square.representatives.iter().enumerate() {
            // can(e_i (x) e_j) = e_i * rho(e_j), flattened over codomain keys.
            let rho = self.coact(&alg.basis_element(j));
            for (block, key) in codomain_keys.iter().enumerate() {
                if let Some(coeff) = rho.coeff(key) {
                    let img = alg.mul(&alg.basis_element(i), coeff);
                    for r in 0..n {
                        *matrix.at_mut(block * n + r, col) = img[r].clone();
                    }
                }
            }
        }
        let rank = matrix.rank(field);
        let injective = rank == q;
        let surjective = rank == codomain_dim;
        Ok(CanonicalMapReport {
            domain_dim: q,
            codomain_dim,
            rank,
            injective,
            surjective,
            bijective: injective && surjective,
            codomain_keys,
            codomain_restricted,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::hopf::FiniteGroup;

    const F2: Field = Field::Prime(2);
    const F3: Field = Field::Prime(3);

    fn el(field: &Field, coords: &[i64]) -> AlgElement {
        coords.iter().map(|&c| field.from_int(c)).collect()
    }

    fn dual_numbers_graded() -> Coaction {
        let alg = Algebra::dual_numbers(F2).unwrap();
        let hopf = HopfAlgebra::group_basis(F2, Group::Integers).unwrap();
        Coaction::from_grading(alg, hopf, vec![GroupElt::Int(0), GroupElt::Int(1)]).unwrap()
    }

    fn f4_frobenius() -> Coaction {
        let alg = Algebra::field_extension(F2, &[1, 1, 1]).unwrap();
        let hopf = HopfAlgebra::dual_of_group(F2, FiniteGroup::cyclic(2)).unwrap();
        let id = Matrix::identity(&F2, 2);
        // Frobenius: 1 -> 1, w -> w^2 = 1 + w.
        let frob = Matrix::new(2, 2, el(&F2, &[1, 1, 0, 1])).unwrap();
        Coaction::from_action(alg, hopf, vec![id, frob]).unwrap()
    }

    #[test]
    fn grading_constructor_validates() {
        let co = dual_numbers_graded();
        assert!(co.validate().is_empty());

        // All-zero degrees always give a valid (trivial) coaction.
        let alg = Algebra::product_of_fields(F2, 2).unwrap();
        let hopf = HopfAlgebra::group_basis(F2, Group::Integers).unwrap();
        let co = Coaction::from_grading(alg, hopf, vec![GroupElt::Int(0); 2]).unwrap();
        assert!(co.validate().is_empty());
    }

    #[test]
    fn inhomogeneous_constants_rejected() {
        // k[x]/(x^2) with deg(x) = 1 but a fault x*x = 1 injected: the
        // constant c[1][1][0] is nonzero with degree mismatch 1+1 != 0.
        let f = F2;
        let mut mult = vec![f.zero(); 8];
        let at = |i: usize, j: usize, k: usize| (i * 2 + j) * 2 + k;
        mult[at(0, 0, 0)] = f.one(); // 1*1 = 1
        mult[at(1, 0, 1)] = f.one(); // x*1 = x
        mult[at(0, 1, 1)] = f.one(); // 1*x = x
        mult[at(1, 1, 0)] = f.one(); // x*x = 1 (fault)
        let alg = Algebra::new(f, vec!["1".into(), "x".into()], mult, el(&f, &[1, 0])).unwrap();
        let hopf = HopfAlgebra::group_basis(F2, Group::Integers).unwrap();
        let err = Coaction::from_grading(alg, hopf, vec![GroupElt::Int(0), GroupElt::Int(1)]);
        let msg = format!("{}", err.unwrap_err());
        assert!(msg.contains("c[1][1][0]"), "{msg}");
    }

    #[test]
    fn action_constructor_validates() {
        let co = f4_frobenius();
        assert!(co.validate().is_empty());

        // Trivial C2-action on F3.
        let alg = Algebra::product_of_fields(F3, 1).unwrap();
        let hopf = HopfAlgebra::dual_of_group(F3, FiniteGroup::cyclic(2)).unwrap();
        let id = Matrix::identity(&F3, 1);
        let co = Coaction::from_action(alg, hopf, vec![id.clone(), id]).unwrap();
        assert!(co.validate().is_empty());
    }

    #[test]
    fn non_multiplicative_matrix_rejected() {
        let alg = Algebra::dual_numbers(F2).unwrap();
        let hopf = HopfAlgebra::dual_of_group(F2, FiniteGroup::cyclic(2)).unwrap();
        let id = Matrix::identity(&F2, 2);
        // x -> 1 + x is unital but not multiplicative: x*x = 0 but (1+x)^2 = 1.
        let bad = Matrix::new(2, 2, el(&F2, &[1, 1, 0, 1])).unwrap();
        let err = Coaction::from_action(alg, hopf, vec![id, bad]).unwrap_err();
        assert!(format!("{err}").contains("not multiplicative"), "{err}");
    }

    #[test]
    fn injected_degree_fault_fails_validation() {
        // Bypass the constructor with an inhomogeneous degree assignment.
        let alg = Algebra::dual_numbers(F2).unwrap();
        let hopf = HopfAlgebra::group_basis(F2, Group::Integers).unwrap();
        let co = Coaction::from_parts_unchecked(
            alg,
            hopf,
            CoactionVariant::Grading(vec![GroupElt::Int(1), GroupElt::Int(0)]),
        );
        let report = co.validate();
        assert!(
            report
                .iter()
                .any(|v| matches!(v, ComoduleViolation::Multiplicativity { .. })
                    || matches!(v, ComoduleViolation::UnitCoaction)),
            "got {report:?}"
        );
    }

    #[test]
    fn identity_coaction_passes() {
        let alg = Algebra::product_of_fields(F3, 2).unwrap();
        let hopf = HopfAlgebra::group_basis(F3, Group::Integers).unwrap();
        let co = Coaction::from_grading(alg, hopf, vec![GroupElt::Int(0); 2]).unwrap();
        assert!(co.validate().is_empty());
        let a = el(&F3, &[1, 2]);
        assert_eq!(co.coact(&a), co.embed_left(&a));
    }

    #[test]
    fn coinvariants_of_grading_are_degree_zero() {
        let co = dual_numbers_graded();
        let b = co.coinvariants();
        assert!(b.closed);
        assert_eq!(b.subalgebra.dim(), 1);
        assert!(b.subalgebra.contains(co.algebra(), &co.algebra().one()));

        // Cross-check: the degree-0 component.
        let degrees = co.degrees().unwrap();
        let zero_indices: Vec<usize> = degrees
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == GroupElt::Int(0))
            .map(|(i, _)| i)
            .collect();
        assert_eq!(b.subalgebra.dim(), zero_indices.len());
        for &i in &zero_indices {
            assert!(b
                .subalgebra
                .contains(co.algebra(), &co.algebra().basis_element(i)));
        }
    }

    #[test]
    fn coinvariants_of_trivial_coaction_are_everything() {
        let alg = Algebra::product_of_fields(F2, 2).unwrap();
        let hopf = HopfAlgebra::group_basis(F2, Group::Integers).unwrap();
        let co = Coaction::from_grading(alg, hopf, vec![GroupElt::Int(0); 2]).unwrap();
        assert_eq!(co.coinvariants().subalgebra.dim(), 2);
    }

    #[test]
    fn coinvariants_of_frobenius_are_prime_field() {
        let co = f4_frobenius();
        let b = co.coinvariants();
        assert!(b.closed);
        assert_eq!(b.subalgebra.dim(), 1);
        assert!(b.subalgebra.contains(co.algebra(), &co.algebra().one()));
    }

    #[test]
    fn galois_for_frobenius_extension() {
        let co = f4_frobenius();
        let report = co.canonical_map().unwrap();
        assert_eq!(report.domain_dim, 4);
        assert_eq!(report.codomain_dim, 4);
        assert!(report.bijective);
        assert!(!report.codomain_restricted);
    }

    #[test]
    fn trivial_action_is_not_galois() {
        let alg = Algebra::product_of_fields(F2, 1).unwrap();
        let hopf = HopfAlgebra::dual_of_group(F2, FiniteGroup::cyclic(2)).unwrap();
        let id = Matrix::identity(&F2, 1);
        let co = Coaction::from_action(alg, hopf, vec![id.clone(), id]).unwrap();
        let report = co.canonical_map().unwrap();
        assert_eq!(report.domain_dim, 1);
        assert_eq!(report.codomain_dim, 2);
        assert!(report.injective);
        assert!(!report.surjective);
    }

    #[test]
    fn trivial_grading_is_restricted_bijective() {
        let alg = Algebra::product_of_fields(F2, 2).unwrap();
        let hopf = HopfAlgebra::group_basis(F2, Group::Integers).unwrap();
        let co = Coaction::from_grading(alg, hopf, vec![GroupElt::Int(0); 2]).unwrap();
        let report = co.canonical_map().unwrap();
        assert!(report.codomain_restricted);
        assert!(report.bijective);
        assert_eq!(report.codomain_keys, vec![GroupElt::Int(0)]);
    }

    #[test]
    fn galois_verdict_survives_basis_permutation() {
        // Same F4 data with the basis listed as {w, 1}.
        let f = F2;
        // In the permuted basis f0 = w, f1 = 1: f0*f0 = w^2 = f1 + f0.
        let mut mult = vec![f.zero(); 8];
        let mut set = |i: usize, j: usize, k: usize| {
            mult[(i * 2 + j) * 2 + k] = F2.one();
        };
        set(0, 0, 0);
        set(0, 0, 1);
        set(0, 1, 0); // w*1 = w
        set(1, 0, 0);
        set(1, 1, 1); // 1*1 = 1
        let alg = Algebra::new(f, vec!["w".into(), "1".into()], mult, el(&f, &[0, 1])).unwrap();
        assert!(alg.validate().is_empty());
        let hopf = HopfAlgebra::dual_of_group(F2, FiniteGroup::cyclic(2)).unwrap();
        let id = Matrix::identity(&F2, 2);
        // Frobenius in this basis: w -> 1 + w, 1 -> 1.
        let frob = Matrix::new(2, 2, el(&F2, &[1, 0, 1, 1])).unwrap();
        let co = Coaction::from_action(alg, hopf, vec![id, frob]).unwrap();
        assert!(co.validate().is_empty());
        assert!(co.canonical_map().unwrap().bijective);
    }
}
