//! One function per CLI command, each returning a deterministic JSON result
//! plus any mathematical property violations it uncovered.
//!
//! Exit-code contract: violations reported here mean a theorem-backed
//! expectation failed on a validated instance, which indicates a bug in the
//! toolkit itself rather than in the input; the test suite leans on that.

use serde_json::{json, Value};

use coring_core::cohomology::{
    coboundary, e_membership, exact_sequence_report, group_h1, grouplike_of_sweedler, harrison_h1,
    hilbert90_report, sweedler_of_grouplike, twist_coinvariants, twisted_iso_witness, IsoWitness,
};
use coring_core::coring::{CoringElement, Grouplike, Invertibility};

use crate::instance::{parse_element, LoadedInstance};
use crate::report::{
    alg_element_json, canonical_map_json, coring_element_json, group_h1_json, grouplike_json,
    harrison_json, unit_search_json,
};
use crate::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
#[clap(rename_all = "kebab-case")]
pub enum CommandKind {
    /// Validate the instance and summarize its structure.
    Check,
    /// Enumerate grouplike elements within the window.
    Grouplikes,
    /// First Harrison cohomology: invertible grouplikes modulo coboundaries.
    H1,
    /// Group cohomology H^1(G, units(A)); dual variant only.
    GroupH1,
    /// Galois check plus the vanishing-cohomology expectation; dual only.
    Hilbert90,
    /// Exactness of the unit/grouplike sequence, element by element.
    ExactReport,
    /// Membership in the subgroup E (AA_X = A on both sides).
    ETest,
    /// Twist coinvariants A_X per grouplike.
    Twist,
    /// Twisted-comodule isomorphism classes via unit witnesses.
    Iso,
    /// Idempotent-degree decompositions of grouplikes; grading only.
    IdempotentGrouplikes,
}

impl CommandKind {
    pub fn name(&self) -> &'static str {
        match self {
            CommandKind::Check => "check",
            CommandKind::Grouplikes => "grouplikes",
            CommandKind::H1 => "h1",
            CommandKind::GroupH1 => "group-h1",
            CommandKind::Hilbert90 => "hilbert90",
            CommandKind::ExactReport => "exact-report",
            CommandKind::ETest => "e-test",
            CommandKind::Twist => "twist",
            CommandKind::Iso => "iso",
            CommandKind::IdempotentGrouplikes => "idempotent-grouplikes",
        }
    }
}

pub struct ElementArgs {
    pub element: Option<String>,
    pub x: Option<String>,
    pub y: Option<String>,
}

/// Runs a command against a loaded instance, producing the result body and
/// the violation list.
pub fn run_command(
    inst: &LoadedInstance,
    command: CommandKind,
    args: &ElementArgs,
) -> Result<(Value, Vec<String>)> {
    let c = &inst.coring;
    let window = inst.window;
    let cap = inst.cap;
    let mut violations = Vec::new();

    let result = match command {
        CommandKind::Check => {
            let alg = c.coaction().algebra();
            let b = c.coaction().coinvariants();
            let canonical = c.coaction().canonical_map()?;
            let reduced = alg.is_reduced(cap);
            if !b.closed {
                violations.push("coinvariants are not multiplicatively closed".into());
            }
            json!({
                "field": format!("{:?}", alg.field()),
                "algebra": {
                    "dim": alg.dim(),
                    "basis": alg.basis_names(),
                    "reduced": reduced,
                },
                "hopf_variant": if c.coaction().hopf().is_dual() { "dual_group" } else { "group_basis" },
                "coaction": if c.coaction().is_grading() { "grading" } else { "action" },
                "coinvariants": {
                    "dim": b.subalgebra.dim(),
                    "basis": b.subalgebra.basis().iter()
                        .map(|v| alg.format_element(v)).collect::<Vec<_>>(),
                },
                "canonical_map": canonical_map_json(&canonical),
                "valid": true,
            })
        }

        CommandKind::Grouplikes => {
            let found = c.enumerate_grouplikes(window, cap)?;
            let invertible = found
                .iter()
                .filter(|g| g.invertibility.is_invertible())
                .count();
            for g in &found {
                if !c.is_grouplike(&g.element) {
                    violations.push(format!(
                        "enumerated element fails the grouplike test: {}",
                        c.format_element(&g.element)
                    ));
                }
            }
            json!({
                "count": found.len(),
                "invertible_count": invertible,
                "search": exhaustiveness(c, inst),
                "grouplikes": found.iter().map(|g| grouplike_json(c, g)).collect::<Vec<_>>(),
            })
        }

        CommandKind::H1 => {
            let h1 = harrison_h1(c, window, cap)?;
            let mut body = harrison_json(c, &h1);
            body["search"] = exhaustiveness(c, inst);
            body
        }

        CommandKind::GroupH1 => {
            let gh = group_h1(c, cap)?;
            group_h1_json(c, &gh)
        }

        CommandKind::Hilbert90 => {
            let r = hilbert90_report(c, cap)?;
            if !r.consistent {
                violations.push("Galois extension with nonvanishing first cohomology".into());
            }
            json!({
                "canonical_map": canonical_map_json(&r.canonical),
                "galois": r.galois,
                "h1_trivial": r.h1_trivial,
                "consistent": r.consistent,
                "harrison": harrison_json(c, &r.harrison),
                "group_cohomology": group_h1_json(c, &r.group_cohomology),
            })
        }

        CommandKind::ExactReport => {
            let r = exact_sequence_report(c, window, cap)?;
            if !r.exact_at_units {
                violations.push("kernel of d differs from the units of the coinvariants".into());
            }
            if !r.exact_at_grouplikes {
                violations.push("image of d differs from the twisted-iso kernel".into());
            }
            if !r.image_d_in_e {
                violations.push("a coboundary fell outside the subgroup E".into());
            }
            let alg = c.coaction().algebra();
            json!({
                "units_a": r.units_a.iter().map(|u| alg.format_element(u)).collect::<Vec<_>>(),
                "units_b": r.units_b.iter().map(|u| alg.format_element(u)).collect::<Vec<_>>(),
                "kernel_d": r.kernel_d.iter().map(|u| alg.format_element(u)).collect::<Vec<_>>(),
                "cardinalities": {
                    "units_a": r.units_a.len(),
                    "units_b": r.units_b.len(),
                    "kernel_d": r.kernel_d.len(),
                    "grouplikes": r.grouplikes.len(),
                    "invertible_grouplikes": r.joints.len(),
                    "image_d": r.image_d.len(),
                },
                "exact_at_units": r.exact_at_units,
                "exact_at_grouplikes": r.exact_at_grouplikes,
                "image_d_in_e": r.image_d_in_e,
                "joints": r.joints.iter().map(|j| json!({
                    "element": c.format_element(&j.element),
                    "in_image_d": j.in_image_d,
                    "has_iso_witness": j.has_iso_witness,
                    "witness": j.witness.as_ref().map(|w| alg.format_element(w)),
                })).collect::<Vec<_>>(),
                "h1": harrison_json(c, &r.h1),
            })
        }

        CommandKind::ETest => {
            let targets = gather_targets(inst, args)?;
            let image_d: Vec<CoringElement> = {
                let alg = c.coaction().algebra();
                let mut img: Vec<CoringElement> = alg
                    .enumerate_units(cap)?
                    .iter()
                    .map(|a| coboundary(c, a).map(|g| g.element))
                    .collect::<coring_core::Result<_>>()?;
                img.sort();
                img.dedup();
                img
            };
            let mut rows = Vec::new();
            for g in &targets {
                let e = e_membership(c, g)?;
                let in_image = image_d.binary_search(&g.element).is_ok();
                if in_image && !e.member {
                    violations.push(format!(
                        "coboundary outside E: {}",
                        c.format_element(&g.element)
                    ));
                }
                rows.push(json!({
                    "element": coring_element_json(c, &g.element),
                    "member": e.member,
                    "x_generates": e.x_generates,
                    "x_inverse_generates": e.x_inverse_generates,
                    "in_image_d": in_image,
                }));
            }
            json!({ "count": rows.len(), "results": rows })
        }

        CommandKind::Twist => {
            let targets = gather_targets_elements(inst, args)?;
            let mut rows = Vec::new();
            for x in &targets {
                let t = twist_coinvariants(c, x, cap, None)?;
                rows.push(json!({
                    "element": coring_element_json(c, x),
                    "basis": t.basis.iter().map(|v| alg_element_json(c, v)).collect::<Vec<_>>(),
                    "dim": t.basis.len(),
                    "has_unit": unit_search_json(c, &t.has_unit),
                    "generates": t.generates,
                }));
            }
            json!({ "count": rows.len(), "results": rows })
        }

        CommandKind::Iso => {
            if let (Some(xr), Some(yr)) = (&args.x, &args.y) {
                let x = parse_element(xr, c)?;
                let y = parse_element(yr, c)?;
                let verdict = twisted_iso_witness(c, &x, &y, cap, None)?;
                let alg = c.coaction().algebra();
                json!({
                    "x": coring_element_json(c, &x),
                    "y": coring_element_json(c, &y),
                    "verdict": match &verdict {
                        IsoWitness::Witness(_) => "isomorphic",
                        IsoWitness::NoIsomorphism => "not_isomorphic",
                        IsoWitness::Unknown => "unknown",
                    },
                    "witness": match &verdict {
                        IsoWitness::Witness(w) => Some(alg_element_json(c, w)),
                        _ => None,
                    },
                })
            } else {
                // Classify all enumerated invertible grouplikes.
                let gs: Vec<CoringElement> = c
                    .enumerate_grouplikes(window, cap)?
                    .into_iter()
                    .filter(|g| g.invertibility.is_invertible())
                    .map(|g| g.element)
                    .collect();
                let mut class_of: Vec<usize> = (0..gs.len()).collect();
                for i in 0..gs.len() {
                    for j in 0..i {
                        if class_of[j] != j {
                            continue;
                        }
                        let verdict = twisted_iso_witness(c, &gs[i], &gs[j], cap, None)?;
                        if matches!(verdict, IsoWitness::Witness(_)) {
                            class_of[i] = j;
                            break;
                        }
                    }
                }
                let mut classes: Vec<Vec<usize>> = Vec::new();
                for i in 0..gs.len() {
                    if class_of[i] == i {
                        classes.push(vec![i]);
                    } else {
                        let root = class_of[i];
                        classes
                            .iter_mut()
                            .find(|cl| cl[0] == root)
                            .expect("root emitted earlier")
                            .push(i);
                    }
                }
                json!({
                    "element_count": gs.len(),
                    "class_count": classes.len(),
                    "classes": classes.iter().map(|cl| json!({
                        "representative": c.format_element(&gs[cl[0]]),
                        "members": cl.iter().map(|&i| c.format_element(&gs[i])).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                })
            }
        }

        CommandKind::IdempotentGrouplikes => {
            let alg = c.coaction().algebra();
            let reduced = alg.is_reduced(cap);
            let found = c.enumerate_grouplikes(window, cap)?;
            let mut rows = Vec::new();
            let mut misses = Vec::new();
            for g in &found {
                let decomposition = c.idempotent_degrees_of_grouplike(&g.element)?;
                match &decomposition {
                    Some(map) => rows.push(json!({
                        "element": c.format_element(&g.element),
                        "decomposition": map.parts.iter().map(|(e, d)| json!({
                            "idempotent": alg.format_element(e),
                            "degree": match d {
                                coring_core::hopf::GroupElt::Int(v) => *v,
                                coring_core::hopf::GroupElt::Fin(v) => *v as i64,
                            },
                        })).collect::<Vec<_>>(),
                    })),
                    None => {
                        misses.push(c.format_element(&g.element));
                        rows.push(json!({
                            "element": c.format_element(&g.element),
                            "decomposition": Value::Null,
                        }));
                    }
                }
            }
            // Over a reduced graded algebra every grouplike decomposes; a
            // miss there contradicts the bijection and is flagged loudly.
            if reduced == Some(true) && !misses.is_empty() {
                violations.push(format!(
                    "reduced algebra with undecomposable grouplikes: {}",
                    misses.join("; ")
                ));
            }
            json!({
                "reduced": reduced,
                "count": found.len(),
                "decomposable_count": found.len() - misses.len(),
                "results": rows,
                "misses": misses,
            })
        }
    };

    Ok((result, violations))
}

/// Exhaustiveness statement echoed into enumeration-backed reports: the raw
/// search-space size next to the bound that admitted it.
fn exhaustiveness(c: &coring_core::Coring, inst: &LoadedInstance) -> Value {
    json!({
        "space": c.enumeration_space(inst.window).to_string(),
        "cap": inst.cap,
        "exhaustive_within_window": true,
    })
}

/// Target grouplikes for e-test: `--element` or the enumerated invertible
/// grouplikes.
fn gather_targets(inst: &LoadedInstance, args: &ElementArgs) -> Result<Vec<Grouplike>> {
    let c = &inst.coring;
    if let Some(raw) = &args.element {
        let element = parse_element(raw, c)?;
        if !c.is_grouplike(&element) {
            return Err(CliError::Usage("supplied element is not grouplike".into()));
        }
        let invertibility = c.try_invert(&element, inst.window);
        match invertibility {
            Invertibility::Invertible(_) => {}
            Invertibility::NotInvertible => {
                return Err(CliError::Usage("supplied element is not invertible".into()))
            }
            Invertibility::UnknownWithinWindow => {
                return Err(CliError::Usage(
                    "invertibility of the supplied element is undecided within the window; \
                     widen --window"
                        .into(),
                ))
            }
        }
        return Ok(vec![Grouplike {
            element,
            invertibility,
        }]);
    }
    Ok(inst
        .coring
        .enumerate_grouplikes(inst.window, inst.cap)?
        .into_iter()
        .filter(|g| g.invertibility.is_invertible())
        .collect())
}

/// Target elements for twist: `--element` or all enumerated grouplikes.
fn gather_targets_elements(
    inst: &LoadedInstance,
    args: &ElementArgs,
) -> Result<Vec<CoringElement>> {
    let c = &inst.coring;
    if let Some(raw) = &args.element {
        return Ok(vec![parse_element(raw, c)?]);
    }
    Ok(c.enumerate_grouplikes(inst.window, inst.cap)?
        .into_iter()
        .map(|g| g.element)
        .collect())
}

/// Round-trip self-check used by the test suite: every dual-variant grouplike
/// must survive the cocycle bridge.
pub fn sweedler_round_trip(inst: &LoadedInstance) -> Result<bool> {
    let c = &inst.coring;
    for g in c.enumerate_grouplikes(inst.window, inst.cap)? {
        let phi = sweedler_of_grouplike(c, &g.element)?;
        if grouplike_of_sweedler(c, &phi)? != g.element {
            return Ok(false);
        }
    }
    Ok(true)
}
