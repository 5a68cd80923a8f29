//! The JSON instance format and its validating loader.
//!
//! An instance file pins down a field, an algebra (preset or raw structure
//! constants), a Hopf description, a coaction, and optional bounds:
//!
//! ```json
//! {
//!   "field": { "kind": "prime", "p": 2 },
//!   "algebra": { "preset": "field_extension", "modulus": [1, 1, 1] },
//!   "hopf": { "variant": "dual_group", "group": { "kind": "cyclic", "order": 2 } },
//!   "coaction": { "variant": "action", "matrices": [[[1,0],[0,1]], [[1,1],[0,1]]] },
//!   "bounds": { "window": [-2, 2], "cap": 4096 }
//! }
//! ```
//!
//! Scalars are integers or `"a/b"` strings. Loading validates everything the
//! instance claims to be (algebra identities, bialgebra axioms, comodule
//! axioms) and aborts with the first witness on failure.

use std::path::Path;

use serde::Deserialize;
use sha2::{Digest, Sha256};

use coring_core::algebra::{AlgElement, Algebra};
use coring_core::comodule::Coaction;
use coring_core::coring::{Coring, CoringElement};
use coring_core::field::{Field, Matrix, Scalar};
use coring_core::hopf::{
    validate_bialgebra, FiniteGroup, Group, GroupElt, HopfAlgebra, HopfVariant, Window,
};

use crate::{CliError, Result};

pub const DEFAULT_WINDOW: (i64, i64) = (-3, 3);
pub const DEFAULT_CAP: u64 = 4096;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub field: FieldSpec,
    pub algebra: AlgebraSpec,
    pub hopf: HopfSpec,
    pub coaction: CoactionSpec,
    #[serde(default)]
    pub bounds: BoundsSpec,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FieldSpec {
    Rationals,
    Prime { p: u64 },
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum AlgebraSpec {
    Preset(PresetAlgebra),
    Raw(RawAlgebra),
}

#[derive(Debug, Deserialize)]
#[serde(tag = "preset", rename_all = "snake_case", deny_unknown_fields)]
pub enum PresetAlgebra {
    DualNumbers,
    TruncatedPolynomial { power: usize },
    ProductOfFields { copies: usize },
    FieldExtension { modulus: Vec<i64> },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawAlgebra {
    pub dim: usize,
    #[serde(default)]
    pub basis_names: Option<Vec<String>>,
    /// `mult[i][j]` lists the coordinates of `e_i * e_j`.
    pub mult: Vec<Vec<Vec<ScalarSpec>>>,
    pub unit: Vec<ScalarSpec>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ScalarSpec {
    Int(i64),
    Ratio(String),
}

impl ScalarSpec {
    pub fn to_scalar(&self, field: &Field) -> Result<Scalar> {
        match self {
            ScalarSpec::Int(n) => Ok(field.from_int(*n)),
            ScalarSpec::Ratio(s) => {
                let (num, den) = s
                    .split_once('/')
                    .ok_or_else(|| CliError::InvalidInstance(format!("bad scalar '{s}'")))?;
                let num: i64 = num
                    .trim()
                    .parse()
                    .map_err(|_| CliError::InvalidInstance(format!("bad numerator in '{s}'")))?;
                let den: i64 = den
                    .trim()
                    .parse()
                    .map_err(|_| CliError::InvalidInstance(format!("bad denominator in '{s}'")))?;
                field
                    .from_ratio(num, den)
                    .map_err(|e| CliError::InvalidInstance(e.to_string()))
            }
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case", deny_unknown_fields)]
pub enum HopfSpec {
    GroupBasis { group: GroupSpec },
    DualGroup { group: GroupSpec },
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Integers,
    Cyclic {
        order: usize,
    },
    Table {
        table: Vec<Vec<usize>>,
        #[serde(default)]
        names: Option<Vec<String>>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case", deny_unknown_fields)]
pub enum CoactionSpec {
    /// Degrees per basis vector: integers for `kZ`, element indices for a
    /// finite basis group.
    Grading { degrees: Vec<i64> },
    /// One matrix (rows of scalars) per group element index.
    Action { matrices: Vec<Vec<Vec<ScalarSpec>>> },
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundsSpec {
    #[serde(default)]
    pub window: Option<[i64; 2]>,
    #[serde(default)]
    pub cap: Option<u64>,
}

/// A fully validated instance, ready to compute on.
pub struct LoadedInstance {
    pub coring: Coring,
    pub window: Window,
    pub cap: u64,
    pub path: String,
    pub sha256: String,
}

fn finite_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Integers => Err(CliError::InvalidInstance(
            "this position needs a finite group".into(),
        )),
        GroupSpec::Cyclic { order } => {
            if *order == 0 {
                return Err(CliError::InvalidInstance("cyclic group of order 0".into()));
            }
            Ok(FiniteGroup::cyclic(*order))
        }
        GroupSpec::Table { table, names } => {
            FiniteGroup::from_table(table.clone(), names.clone()).map_err(CliError::Math)
        }
    }
}

fn build_field(spec: &FieldSpec) -> Result<Field> {
    let field = match spec {
        FieldSpec::Rationals => Field::Rationals,
        FieldSpec::Prime { p } => Field::Prime(*p),
    };
    field.validate()?;
    Ok(field)
}

fn build_algebra(spec: &AlgebraSpec, field: Field) -> Result<Algebra> {
    let alg = match spec {
        AlgebraSpec::Preset(PresetAlgebra::DualNumbers) => Algebra::dual_numbers(field)?,
        AlgebraSpec::Preset(PresetAlgebra::TruncatedPolynomial { power }) => {
            Algebra::truncated_polynomial(field, *power)?
        }
        AlgebraSpec::Preset(PresetAlgebra::ProductOfFields { copies }) => {
            Algebra::product_of_fields(field, *copies)?
        }
        AlgebraSpec::Preset(PresetAlgebra::FieldExtension { modulus }) => {
            Algebra::field_extension(field, modulus)?
        }
        AlgebraSpec::Raw(raw) => {
            let n = raw.dim;
            if raw.mult.len() != n || raw.mult.iter().any(|row| row.len() != n) {
                return Err(CliError::InvalidInstance(
                    "mult must be an n x n array of coordinate vectors".into(),
                ));
            }
            let mut mult = Vec::with_capacity(n * n * n);
            for row in &raw.mult {
                for cell in row {
                    if cell.len() != n {
                        return Err(CliError::InvalidInstance(
                            "each mult entry must have n coordinates".into(),
                        ));
                    }
                    for s in cell {
                        mult.push(s.to_scalar(&field)?);
                    }
                }
            }
            let unit = raw
                .unit
                .iter()
                .map(|s| s.to_scalar(&field))
                .collect::<Result<Vec<_>>>()?;
            let names = raw
                .basis_names
                .clone()
                .unwrap_or_else(|| (0..n).map(|i| format!("b{i}")).collect());
            Algebra::new(field, names, mult, unit)?
        }
    };
    let violations = alg.validate();
    if let Some(v) = violations.first() {
        return Err(CliError::InvalidInstance(format!(
            "algebra axiom fails: {v}"
        )));
    }
    Ok(alg)
}

fn build_hopf(spec: &HopfSpec, field: Field) -> Result<HopfAlgebra> {
    match spec {
        HopfSpec::GroupBasis { group } => {
            let g = match group {
                GroupSpec::Integers => Group::Integers,
                _ => Group::Finite(finite_group(group)?),
            };
            Ok(HopfAlgebra::group_basis(field, g)?)
        }
        HopfSpec::DualGroup { group } => {
            Ok(HopfAlgebra::dual_of_group(field, finite_group(group)?)?)
        }
    }
}

fn build_coaction(spec: &CoactionSpec, algebra: Algebra, hopf: HopfAlgebra) -> Result<Coaction> {
    match spec {
        CoactionSpec::Grading { degrees } => {
            let keys: Vec<GroupElt> = match hopf.variant() {
                HopfVariant::GroupBasis(Group::Integers) => {
                    degrees.iter().map(|&d| GroupElt::Int(d)).collect()
                }
                HopfVariant::GroupBasis(Group::Finite(g)) => degrees
                    .iter()
                    .map(|&d| {
                        let idx = usize::try_from(d).map_err(|_| {
                            CliError::InvalidInstance(format!("degree {d} is not an element index"))
                        })?;
                        if idx >= g.order() {
                            return Err(CliError::InvalidInstance(format!(
                                "degree index {idx} out of range for a group of order {}",
                                g.order()
                            )));
                        }
                        Ok(GroupElt::Fin(idx))
                    })
                    .collect::<Result<_>>()?,
                HopfVariant::DualGroup(_) => {
                    return Err(CliError::InvalidInstance(
                        "grading coactions pair with group_basis Hopf algebras".into(),
                    ))
                }
            };
            Ok(Coaction::from_grading(algebra, hopf, keys)?)
        }
        CoactionSpec::Action { matrices } => {
            let field = *algebra.field();
            let n = algebra.dim();
            let mats = matrices
                .iter()
                .map(|rows| {
                    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                        return Err(CliError::InvalidInstance(format!(
                            "action matrices must be {n} x {n}"
                        )));
                    }
                    let mut entries = Vec::with_capacity(n * n);
                    for row in rows {
                        for s in row {
                            entries.push(s.to_scalar(&field)?);
                        }
                    }
                    Matrix::new(n, n, entries).map_err(CliError::Math)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Coaction::from_action(algebra, hopf, mats)?)
        }
    }
}

/// Loads, validates, and wraps an instance file. Every axiom the context
/// depends on is checked here; command code may assume a lawful coring.
pub fn load_instance(
    path: &Path,
    window_override: Option<(i64, i64)>,
    cap_override: Option<u64>,
) -> Result<LoadedInstance> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    let sha256 = hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect::<String>();

    let spec: InstanceFile = serde_json::from_slice(&bytes).map_err(|e| CliError::Parse {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;

    let (wlo, whi) = window_override
        .or(spec.bounds.window.map(|w| (w[0], w[1])))
        .unwrap_or(DEFAULT_WINDOW);
    let window = Window::new(wlo, whi)?;
    let cap = cap_override.or(spec.bounds.cap).unwrap_or(DEFAULT_CAP);

    let field = build_field(&spec.field)?;
    let algebra = build_algebra(&spec.algebra, field)?;
    let hopf = build_hopf(&spec.hopf, field)?;

    let bialgebra_violations = validate_bialgebra(&hopf, window);
    if let Some(v) = bialgebra_violations.first() {
        return Err(CliError::InvalidInstance(format!(
            "bialgebra axiom fails: {v}"
        )));
    }

    let coaction = build_coaction(&spec.coaction, algebra, hopf)?;
    let comodule_violations = coaction.validate();
    if let Some(v) = comodule_violations.first() {
        return Err(CliError::InvalidInstance(format!(
            "comodule axiom fails: {v}"
        )));
    }

    Ok(LoadedInstance {
        coring: Coring::new(coaction),
        window,
        cap,
        path: path.display().to_string(),
        sha256,
    })
}

/// JSON shape of a coring element on the command line:
/// `{"support": [{"h": -1, "coeffs": [1, 0]}]}`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementSpec {
    pub support: Vec<ElementTerm>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementTerm {
    pub h: i64,
    pub coeffs: Vec<ScalarSpec>,
}

pub fn parse_element(raw: &str, coring: &Coring) -> Result<CoringElement> {
    let spec: ElementSpec = serde_json::from_str(raw).map_err(|e| CliError::Parse {
        path: "--element".into(),
        message: e.to_string(),
    })?;
    let alg = coring.coaction().algebra();
    let field = alg.field();
    let n = alg.dim();
    let mut terms: Vec<(GroupElt, AlgElement)> = Vec::new();
    for term in &spec.support {
        if term.coeffs.len() != n {
            return Err(CliError::InvalidInstance(format!(
                "coefficient vector must have {n} entries"
            )));
        }
        let key = match coring.coaction().hopf().variant() {
            HopfVariant::GroupBasis(Group::Integers) => GroupElt::Int(term.h),
            HopfVariant::GroupBasis(Group::Finite(g)) => {
                let idx = usize::try_from(term.h).map_err(|_| {
                    CliError::InvalidInstance(format!("key {} is not an element index", term.h))
                })?;
                if idx >= g.order() {
                    return Err(CliError::InvalidInstance(format!(
                        "key index {idx} out of range"
                    )));
                }
                GroupElt::Fin(idx)
            }
            HopfVariant::DualGroup(g) => {
                let idx = usize::try_from(term.h).map_err(|_| {
                    CliError::InvalidInstance(format!("key {} is not an element index", term.h))
                })?;
                if idx >= g.order() {
                    return Err(CliError::InvalidInstance(format!(
                        "key index {idx} out of range"
                    )));
                }
                GroupElt::Fin(idx)
            }
        };
        let coeffs = term
            .coeffs
            .iter()
            .map(|s| s.to_scalar(field))
            .collect::<Result<Vec<_>>>()?;
        terms.push((key, coeffs));
    }
    Ok(CoringElement::from_terms(field, terms))
}
