//! The two commutative bialgebra families the toolkit supports.
//!
//! * group-basis algebras `kM` for `M` either the integers (so
//!   `kZ = k[X, X^-1]`, with finitely supported coefficients and no
//!   truncation) or a finite group given by its Cayley table; every basis
//!   element is grouplike;
//! * duals `k^G` of finite groups, with basis `p_g`, pointwise product, and
//!   `comult(p_g) = sum over xy = g of p_x (x) p_y`.
//!
//! Both carry an antipode (group inversion), and both are commutative, which
//! is a standing assumption everywhere in this crate.

use std::collections::BTreeMap;

use crate::field::{Field, Scalar};
use crate::{Error, Result};

/// An element of the grouplike basis index set: a degree in `Z`, or an index
/// into a finite group's element list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupElt {
    Int(i64),
    Fin(usize),
}

/// A finite group presented by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// `table[a * order + b]` = index of the product `a * b`.
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    names: Vec<String>,
}

impl FiniteGroup {
    /// Validates the table as a group law: closure is structural, the
    /// identity and inverses are searched for, associativity is exhaustive.
    pub fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self> {
        let m = table.len();
        if m == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        let mut flat = Vec::with_capacity(m * m);
        for row in &table {
            if row.len() != m {
                return Err(Error::InvalidGroup("table is not square".into()));
            }
            for &v in row {
                if v >= m {
                    return Err(Error::InvalidGroup(format!("entry {v} out of range")));
                }
                flat.push(v);
            }
        }
        let op = |a: usize, b: usize| flat[a * m + b];
        let identity = (0..m)
            .find(|&e| (0..m).all(|x| op(e, x) == x && op(x, e) == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverses = vec![0; m];
        for (a, inv) in inverses.iter_mut().enumerate() {
            *inv = (0..m)
                .find(|&b| op(a, b) == identity && op(b, a) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
        }
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if op(op(a, b), c) != op(a, op(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let names = names.unwrap_or_else(|| (0..m).map(|i| format!("g{i}")).collect());
        if names.len() != m {
            return Err(Error::InvalidGroup("wrong number of element names".into()));
        }
        Ok(FiniteGroup {
            order: m,
            table: flat,
            identity,
            inverses,
            names,
        })
    }

    /// The cyclic group of order `n`, elements `0..n` under addition mod `n`.
    pub fn cyclic(n: usize) -> Self {
        let names = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "s".to_string(),
                _ => format!("s^{i}"),
            })
            .collect();
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Self::from_table(table, Some(names)).expect("cyclic table is a group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.op(a, b) == self.op(b, a)))
    }
}

/// The basis group `M` of a group-basis bialgebra `kM`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Group {
    /// `Z`, written multiplicatively as powers of `X`.
    Integers,
    Finite(FiniteGroup),
}

impl Group {
    pub fn identity(&self) -> GroupElt {
        match self {
            Group::Integers => GroupElt::Int(0),
            Group::Finite(g) => GroupElt::Fin(g.identity()),
        }
    }

    pub fn op(&self, a: GroupElt, b: GroupElt) -> GroupElt {
        match (self, a, b) {
            (Group::Integers, GroupElt::Int(x), GroupElt::Int(y)) => GroupElt::Int(x + y),
            (Group::Finite(g), GroupElt::Fin(x), GroupElt::Fin(y)) => GroupElt::Fin(g.op(x, y)),
            _ => panic!("group element kind mismatch"),
        }
    }

    pub fn inverse(&self, a: GroupElt) -> GroupElt {
        match (self, a) {
            (Group::Integers, GroupElt::Int(x)) => GroupElt::Int(-x),
            (Group::Finite(g), GroupElt::Fin(x)) => GroupElt::Fin(g.inverse(x)),
            _ => panic!("group element kind mismatch"),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Group::Finite(_))
    }
}

/// Inclusive degree window: the finite slice of `Z` that windowed operations
/// over `k[X, X^-1]` search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::Validation(format!("empty window {lo}..{hi}")));
        }
        Ok(Window { lo, hi })
    }

    pub fn contains(&self, d: i64) -> bool {
        self.lo <= d && d <= self.hi
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

/// One of the two supported bialgebra descriptions over a fixed field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    field: Field,
    variant: HopfVariant,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfVariant {
    /// `kM`: basis indexed by the group `M`, every basis element grouplike.
    GroupBasis(Group),
    /// `k^G`: basis `p_g` indexed by a finite group `G`.
    DualGroup(FiniteGroup),
}

impl HopfAlgebra {
    pub fn group_basis(field: Field, group: Group) -> Result<Self> {
        field.validate()?;
        Ok(HopfAlgebra {
            field,
            variant: HopfVariant::GroupBasis(group),
        })
    }

    pub fn dual_of_group(field: Field, group: FiniteGroup) -> Result<Self> {
        field.validate()?;
        Ok(HopfAlgebra {
            field,
            variant: HopfVariant::DualGroup(group),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn variant(&self) -> &HopfVariant {
        &self.variant
    }

    pub fn is_dual(&self) -> bool {
        matches!(self.variant, HopfVariant::DualGroup(_))
    }

    /// Dimension of `H` as a `k`-space, `None` for `kZ`.
    pub fn dim(&self) -> Option<usize> {
        match &self.variant {
            HopfVariant::GroupBasis(Group::Integers) => None,
            HopfVariant::GroupBasis(Group::Finite(g)) => Some(g.order()),
            HopfVariant::DualGroup(g) => Some(g.order()),
        }
    }

    /// The distinguished basis, restricted to `window` when `H = kZ`.
    pub fn basis_keys(&self, window: Window) -> Vec<GroupElt> {
        match &self.variant {
            HopfVariant::GroupBasis(Group::Integers) => {
                window.degrees().map(GroupElt::Int).collect()
            }
            HopfVariant::GroupBasis(Group::Finite(g)) => {
                (0..g.order()).map(GroupElt::Fin).collect()
            }
            HopfVariant::DualGroup(g) => (0..g.order()).map(GroupElt::Fin).collect(),
        }
    }

    /// Value of the counit on a basis element.
    pub fn counit_on_basis(&self, k: GroupElt) -> Scalar {
        match &self.variant {
            HopfVariant::GroupBasis(_) => self.field.one(),
            HopfVariant::DualGroup(g) => {
                let GroupElt::Fin(i) = k else {
                    panic!("dual basis key must be finite")
                };
                if i == g.identity() {
                    self.field.one()
                } else {
                    self.field.zero()
                }
            }
        }
    }

    /// Product of two basis elements, when it is again a basis element (it
    /// always is for `kM`; for `k^G` the basis is orthogonal, so off-diagonal
    /// products vanish and `None` is returned).
    pub fn basis_product(&self, a: GroupElt, b: GroupElt) -> Option<GroupElt> {
        match &self.variant {
            HopfVariant::GroupBasis(m) => Some(m.op(a, b)),
            HopfVariant::DualGroup(_) => (a == b).then_some(a),
        }
    }

    /// Comultiplication of a basis element as a list of basis pairs with
    /// coefficient 1.
    pub fn comult_pairs(&self, k: GroupElt) -> Vec<(GroupElt, GroupElt)> {
        match &self.variant {
            HopfVariant::GroupBasis(_) => vec![(k, k)],
            HopfVariant::DualGroup(g) => {
                let GroupElt::Fin(target) = k else {
                    panic!("dual basis key must be finite")
                };
                let mut out = Vec::new();
                for x in 0..g.order() {
                    for y in 0..g.order() {
                        if g.op(x, y) == target {
                            out.push((GroupElt::Fin(x), GroupElt::Fin(y)));
                        }
                    }
                }
                out
            }
        }
    }

    /// Antipode on a basis element (both families send a basis vector to a
    /// basis vector).
    pub fn antipode_on_basis(&self, k: GroupElt) -> GroupElt {
        match &self.variant {
            HopfVariant::GroupBasis(m) => m.inverse(k),
            HopfVariant::DualGroup(g) => {
                let GroupElt::Fin(i) = k else {
                    panic!("dual basis key must be finite")
                };
                GroupElt::Fin(g.inverse(i))
            }
        }
    }

    /// Support of `1_H` in the distinguished basis, with coefficients: a
    /// single grouplike basis vector for `kM`, the full sum of the `p_g` for
    /// `k^G`.
    pub fn unit_support(&self) -> Vec<(GroupElt, Scalar)> {
        match &self.variant {
            HopfVariant::GroupBasis(m) => vec![(m.identity(), self.field.one())],
            HopfVariant::DualGroup(g) => (0..g.order())
                .map(|i| (GroupElt::Fin(i), self.field.one()))
                .collect(),
        }
    }

    pub fn key_name(&self, k: GroupElt) -> String {
        match (&self.variant, k) {
            (HopfVariant::GroupBasis(Group::Integers), GroupElt::Int(d)) => match d {
                0 => "1".to_string(),
                1 => "X".to_string(),
                _ => format!("X^{d}"),
            },
            (HopfVariant::GroupBasis(Group::Finite(g)), GroupElt::Fin(i)) => g.name(i).to_string(),
            (HopfVariant::DualGroup(g), GroupElt::Fin(i)) => format!("p_{}", g.name(i)),
            _ => panic!("key kind does not match variant"),
        }
    }
}

/// A grouplike element of `H` itself: a basis group element for `kM`, or a
/// character `G -> k^*` for `k^G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfGrouplike {
    BasisElement(GroupElt),
    /// Character values indexed by group element index.
    Character(Vec<Scalar>),
}

/// Grouplike elements of `H`. For `kZ` the infinite family `X^d` is cut to
/// the window; for `k^G` these are the characters `G -> k^*`, enumerated over
/// a prime field by backtracking on the multiplication constraints.
pub fn grouplikes_of_hopf(h: &HopfAlgebra, window: Window) -> Result<Vec<HopfGrouplike>> {
    match h.variant() {
        HopfVariant::GroupBasis(_) => Ok(h
            .basis_keys(window)
            .into_iter()
            .map(HopfGrouplike::BasisElement)
            .collect()),
        HopfVariant::DualGroup(g) => {
            let field = h.field();
            let Field::Prime(p) = field else {
                return Err(Error::RequiresPrimeField);
            };
            let units: Vec<Scalar> = (1..*p).map(Scalar::Mod).collect();
            let m = g.order();
            let mut values: Vec<Option<Scalar>> = vec![None; m];
            values[g.identity()] = Some(field.one());
            let mut found = Vec::new();
            let order: Vec<usize> = (0..m).filter(|&i| i != g.identity()).collect();

            fn consistent(g: &FiniteGroup, field: &Field, values: &[Option<Scalar>]) -> bool {
                for a in 0..g.order() {
                    for b in 0..g.order() {
                        let (Some(va), Some(vb)) = (&values[a], &values[b]) else {
                            continue;
                        };
                        if let Some(vab) = &values[g.op(a, b)] {
                            if field.mul(va, vb) != *vab {
                                return false;
                            }
                        }
                    }
                }
                true
            }

            #[allow(clippy::too_many_arguments)]
            fn search(
                g: &FiniteGroup,
                field: &Field,
                units: &[Scalar],
                order: &[usize],
                pos: usize,
                values: &mut Vec<Option<Scalar>>,
                found: &mut Vec<HopfGrouplike>,
            ) {
                if pos == order.len() {
                    found.push(HopfGrouplike::Character(
                        values.iter().map(|v| v.clone().unwrap()).collect(),
                    ));
                    return;
                }
                let idx = order[pos];
                for u in units {
                    values[idx] = Some(u.clone());
                    if consistent(g, field, values) {
                        search(g, field, units, order, pos + 1, values, found);
                    }
                }
                values[idx] = None;
            }

            search(g, field, &units, &order, 0, &mut values, &mut found);
            Ok(found)
        }
    }
}

/// A finite structure-constant snapshot of a bialgebra, over a basis key set.
///
/// Built from a [`HopfAlgebra`] (windowed for `kZ`); axiom checks run on it
/// directly, so tests can corrupt a table and watch the violation appear.
#[derive(Clone, Debug)]
pub struct BialgebraTables {
    pub field: Field,
    pub keys: Vec<GroupElt>,
    /// Product expanded over keys, `None` when it falls outside the key set
    /// (windowed case).
    pub mult: BTreeMap<(GroupElt, GroupElt), Option<Vec<(GroupElt, Scalar)>>>,
    pub comult: BTreeMap<GroupElt, Vec<(GroupElt, GroupElt, Scalar)>>,
    pub counit: BTreeMap<GroupElt, Scalar>,
    pub unit: Vec<(GroupElt, Scalar)>,
    /// Antipode image per key, `None` when it leaves the key set.
    pub antipode: BTreeMap<GroupElt, Option<Vec<(GroupElt, Scalar)>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BialgebraViolation {
    Coassociativity { key: GroupElt },
    CounitLaw { key: GroupElt },
    ComultMultiplicative { a: GroupElt, b: GroupElt },
    CounitMultiplicative { a: GroupElt, b: GroupElt },
    UnitComultiplication,
    Antipode { key: GroupElt },
}

impl std::fmt::Display for BialgebraViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BialgebraViolation::Coassociativity { key } => {
                write!(
                    f,
                    "comultiplication is not coassociative at basis key {key:?}"
                )
            }
            BialgebraViolation::CounitLaw { key } => {
                write!(f, "counit law fails at basis key {key:?}")
            }
            BialgebraViolation::ComultMultiplicative { a, b } => {
                write!(f, "comult({a:?} * {b:?}) != comult({a:?}) comult({b:?})")
            }
            BialgebraViolation::CounitMultiplicative { a, b } => {
                write!(f, "counit({a:?} * {b:?}) != counit({a:?}) counit({b:?})")
            }
            BialgebraViolation::UnitComultiplication => {
                write!(f, "comult(1) != 1 (x) 1")
            }
            BialgebraViolation::Antipode { key } => {
                write!(f, "antipode law fails at basis key {key:?}")
            }
        }
    }
}

impl HopfAlgebra {
    /// Snapshot of the structure maps over the windowed basis.
    pub fn to_tables(&self, window: Window) -> BialgebraTables {
        let keys = self.basis_keys(window);
        let in_keys = |k: &GroupElt| keys.contains(k);
        let mut mult = BTreeMap::new();
        for &a in &keys {
            for &b in &keys {
                let entry = match self.basis_product(a, b) {
                    Some(k) if in_keys(&k) => Some(vec![(k, self.field.one())]),
                    Some(_) => None,
                    // Orthogonal basis: off-diagonal dual products are zero.
                    None => Some(vec![]),
                };
                mult.insert((a, b), entry);
            }
        }
        let comult = keys
            .iter()
            .map(|&k| {
                let pairs = self
                    .comult_pairs(k)
                    .into_iter()
                    .map(|(x, y)| (x, y, self.field.one()))
                    .collect();
                (k, pairs)
            })
            .collect();
        let counit = keys.iter().map(|&k| (k, self.counit_on_basis(k))).collect();
        let antipode = keys
            .iter()
            .map(|&k| {
                let s = self.antipode_on_basis(k);
                let img = in_keys(&s).then(|| vec![(s, self.field.one())]);
                (k, img)
            })
            .collect();
        BialgebraTables {
            field: self.field,
            keys,
            mult,
            comult,
            counit,
            unit: self.unit_support(),
            antipode,
        }
    }
}

type Tensor2 = BTreeMap<(GroupElt, GroupElt), Scalar>;
type Tensor3 = BTreeMap<(GroupElt, GroupElt, GroupElt), Scalar>;

fn add_to<K: Ord>(map: &mut BTreeMap<K, Scalar>, field: &Field, key: K, value: Scalar) {
    let entry = map.entry(key).or_insert_with(|| field.zero());
    *entry = field.add(entry, &value);
}

fn prune<K: Ord>(map: BTreeMap<K, Scalar>) -> BTreeMap<K, Scalar> {
    map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Checks the bialgebra axioms on a table snapshot; an empty report means
/// every identity that stays inside the key set holds.
pub fn validate_bialgebra_tables(t: &BialgebraTables) -> Vec<BialgebraViolation> {
    let f = &t.field;
    let mut report = Vec::new();

    // Coassociativity and the counit law per basis key.
    for &k in &t.keys {
        let comult = &t.comult[&k];
        let mut left: Tensor3 = BTreeMap::new();
        let mut right: Tensor3 = BTreeMap::new();
        let mut counit_left = BTreeMap::new();
        let mut counit_right = BTreeMap::new();
        for (x, y, c) in comult {
            if let Some(inner) = t.comult.get(x) {
                for (u, v, c2) in inner {
                    add_to(&mut left, f, (*u, *v, *y), f.mul(c, c2));
                }
            }
            if let Some(inner) = t.comult.get(y) {
                for (u, v, c2) in inner {
                    add_to(&mut right, f, (*x, *u, *v), f.mul(c, c2));
                }
            }
            if let Some(e) = t.counit.get(x) {
                add_to(&mut counit_left, f, *y, f.mul(c, e));
            }
            if let Some(e) = t.counit.get(y) {
                add_to(&mut counit_right, f, *x, f.mul(c, e));
            }
        }
        if prune(left) != prune(right) {
            report.push(BialgebraViolation::Coassociativity { key: k });
        }
        let expect: BTreeMap<GroupElt, Scalar> = [(k, f.one())].into_iter().collect();
        if prune(counit_left) != expect || prune(counit_right) != expect {
            report.push(BialgebraViolation::CounitLaw { key: k });
        }
    }

    // comult and counit are algebra maps; products that leave the key set are
    // skipped (windowed kZ).
    for &a in &t.keys {
        for &b in &t.keys {
            let Some(Some(prod)) = t.mult.get(&(a, b)) else {
                continue;
            };
            let mut lhs: Tensor2 = BTreeMap::new();
            for (k, c) in prod {
                for (x, y, c2) in &t.comult[k] {
                    add_to(&mut lhs, f, (*x, *y), f.mul(c, c2));
                }
            }
            let mut rhs: Tensor2 = BTreeMap::new();
            let mut defined = true;
            for (x1, y1, c1) in &t.comult[&a] {
                for (x2, y2, c2) in &t.comult[&b] {
                    let (Some(Some(px)), Some(Some(py))) =
                        (t.mult.get(&(*x1, *x2)), t.mult.get(&(*y1, *y2)))
                    else {
                        defined = false;
                        continue;
                    };
                    for (kx, cx) in px {
                        for (ky, cy) in py {
                            let c = f.mul(&f.mul(c1, c2), &f.mul(cx, cy));
                            add_to(&mut rhs, f, (*kx, *ky), c);
                        }
                    }
                }
            }
            if defined && prune(lhs) != prune(rhs) {
                report.push(BialgebraViolation::ComultMultiplicative { a, b });
            }

            let mut eps_prod = f.zero();
            for (k, c) in prod {
                eps_prod = f.add(&eps_prod, &f.mul(c, &t.counit[k]));
            }
            let eps_sep = f.mul(&t.counit[&a], &t.counit[&b]);
            if eps_prod != eps_sep {
                report.push(BialgebraViolation::CounitMultiplicative { a, b });
            }
        }
    }

    // comult(1) = 1 (x) 1, expanded over the unit support.
    {
        let mut lhs: Tensor2 = BTreeMap::new();
        let mut rhs: Tensor2 = BTreeMap::new();
        let mut defined = true;
        for (k, c) in &t.unit {
            match t.comult.get(k) {
                Some(pairs) => {
                    for (x, y, c2) in pairs {
                        add_to(&mut lhs, f, (*x, *y), f.mul(c, c2));
                    }
                }
                None => defined = false,
            }
        }
        for (k1, c1) in &t.unit {
            for (k2, c2) in &t.unit {
                add_to(&mut rhs, f, (*k1, *k2), f.mul(c1, c2));
            }
        }
        if defined && prune(lhs) != prune(rhs) {
            report.push(BialgebraViolation::UnitComultiplication);
        }
    }

    // Antipode law where defined: mult (S (x) id) comult = counit * 1.
    for &k in &t.keys {
        let mut acc: BTreeMap<GroupElt, Scalar> = BTreeMap::new();
        let mut defined = true;
        for (x, y, c) in &t.comult[&k] {
            let Some(Some(sx)) = t.antipode.get(x) else {
                defined = false;
                continue;
            };
            for (sk, sc) in sx {
                match t.mult.get(&(*sk, *y)) {
                    Some(Some(prod)) => {
                        for (pk, pc) in prod {
                            add_to(&mut acc, f, *pk, f.mul(&f.mul(c, sc), pc));
                        }
                    }
                    _ => defined = false,
                }
            }
        }
        if !defined {
            continue;
        }
        let mut expect: BTreeMap<GroupElt, Scalar> = BTreeMap::new();
        let eps = &t.counit[&k];
        for (uk, uc) in &t.unit {
            add_to(&mut expect, f, *uk, f.mul(eps, uc));
        }
        if prune(acc) != prune(expect) {
            report.push(BialgebraViolation::Antipode { key: k });
        }
    }

    report
}

/// Convenience wrapper: snapshot and validate in one go.
pub fn validate_bialgebra(h: &HopfAlgebra, window: Window) -> Vec<BialgebraViolation> {
    validate_bialgebra_tables(&h.to_tables(window))
}
