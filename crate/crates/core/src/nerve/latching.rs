//! Verification that the latching maps of the double-category diagram at
//! the kinds O, H, V, S and E' are the generating cofibrations.

use std::collections::HashMap;

use crate::classify::{generating_cofibrations, hom_solver, ShapeInclusion};
use crate::dblcat::FiniteDoubleCategory;
use crate::error::NerveError;
use crate::presheaf::{boundary_family, matching_object};
use crate::signature::KindId;

use super::{nerve_with_elements, ShapeDiagram};

/// The kinds checked, with the generating cofibration expected as the
/// latching map and the expected number of boundary-weight elements of
/// kinds O, H, V and S.
pub const LATCHING_KINDS: [(&str, &str, [usize; 4]); 5] = [
    ("O", "empty->point", [0, 0, 0, 0]),
    ("H", "two_points->H2", [2, 0, 0, 0]),
    ("V", "two_points->V2", [2, 0, 0, 0]),
    ("S", "boundary->square", [4, 2, 2, 0]),
    ("E'", "parallel_squares->square", [4, 2, 2, 2]),
];

/// Legs from the shapes of the generating arrows out of a kind into the
/// domain of its latching map, as map text per arrow.
fn leg_text(kind: &str, arrow: &str) -> Option<&'static str> {
    Some(match (kind, arrow) {
        ("H" | "V", "s") => "obj: x -> x",
        ("H" | "V", "t") => "obj: x -> y",
        ("S", "u") => "obj: a -> tl\nobj: b -> tr\nhmor: f -> top",
        ("S", "d") => "obj: a -> bl\nobj: b -> br\nhmor: f -> bottom",
        ("S", "l") => "obj: a -> tl\nobj: b -> bl\nvmor: u -> left",
        ("S", "r") => "obj: a -> tr\nobj: b -> br\nvmor: u -> right",
        ("E'", "b") => BOUNDARY_TO_PARALLEL_B,
        ("E'", "f") => BOUNDARY_TO_PARALLEL_F,
        _ => return None,
    })
}

const BOUNDARY_TO_PARALLEL_B: &str = "obj: tl -> tl\nobj: tr -> tr\nobj: bl -> bl\nobj: br -> br\n\
hmor: top -> top\nhmor: bottom -> bottom\nvmor: left -> left\nvmor: right -> right\nsq: alpha -> alpha";

const BOUNDARY_TO_PARALLEL_F: &str = "obj: tl -> tl\nobj: tr -> tr\nobj: bl -> bl\nobj: br -> br\n\
hmor: top -> top\nhmor: bottom -> bottom\nvmor: left -> left\nvmor: right -> right\nsq: alpha -> alpha'";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatchingRow {
    pub kind: String,
    pub inclusion: String,
    /// Boundary-weight element counts at O, H, V and S.
    pub weights: [usize; 4],
    /// Total carrier and matching-object sizes over the instances.
    pub elements: usize,
    pub families: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatchingReport {
    pub rows: Vec<LatchingRow>,
    pub instances: Vec<String>,
}

fn mismatch(kind: &str, instance: &str, detail: impl Into<String>) -> NerveError {
    NerveError::MismatchAt {
        kind: kind.to_string(),
        instance: instance.to_string(),
        detail: detail.into(),
    }
}

/// Checks, for each latching kind and each instance, that the nerve's
/// carrier is the set of maps out of the codomain of the expected
/// generating cofibration and that its matching object is in natural
/// bijection with the maps out of the domain.
pub fn check_latching_table(
    d: &ShapeDiagram,
    instances: &[(&str, &FiniteDoubleCategory)],
) -> Result<LatchingReport, NerveError> {
    let sig = d.signature.clone();
    let gens = generating_cofibrations();
    let nerves = instances
        .iter()
        .map(|(_, x)| nerve_with_elements(x, d))
        .collect::<Result<Vec<_>, _>>()?;
    let mut rows = Vec::new();
    for (kind, inc_name, expected) in LATCHING_KINDS {
        let k: KindId = sig.kind(kind)?;
        let i = gens.iter().find(|g| g.name == inc_name).expect("generating cofibration");
        if *d.shapes[k] != *i.cod {
            return Err(mismatch(kind, &d.name, format!("shape is not the codomain of `{inc_name}`")));
        }
        let weight = sig.boundary_weight(k);
        let weights = ["O", "H", "V", "S"].map(|n| weight.carrier(sig.kind(n).unwrap()).len());
        if weights != expected {
            return Err(mismatch(kind, &d.name, format!("boundary weight counts {weights:?}, expected {expected:?}")));
        }
        // legs for the canonical word of each fan class
        let fan = sig.fan(k);
        let legs: Vec<ShapeInclusion> = fan
            .classes
            .iter()
            .map(|c| {
                let first = c.canonical[0];
                let name = &sig.arrow(first).name;
                let text = leg_text(kind, name).ok_or_else(|| mismatch(kind, &d.name, format!("no leg for `{name}`")))?;
                let leg = ShapeInclusion::parse(
                    &format!("leg {kind}.{name}"),
                    d.shapes[sig.arrow(first).target].clone(),
                    i.dom.clone(),
                    text,
                )?;
                Ok(d.realize(sig.arrow(first).target, &c.canonical[1..])?.then(&leg)?)
            })
            .collect::<Result<_, NerveError>>()?;
        for leg in &legs {
            leg.validate()?;
        }
        let (mut elements, mut families) = (0, 0);
        for ((name, x), n) in instances.iter().zip(&nerves) {
            let carrier = &n.elements[k];
            if hom_solver(&i.cod, x).len() != carrier.len() {
                return Err(mismatch(kind, name, "carrier is not the set of maps out of the shape"));
            }
            let m = matching_object(&n.presheaf, k);
            let lookups: Vec<HashMap<_, usize>> = n
                .elements
                .iter()
                .map(|es| es.iter().enumerate().map(|(j, a)| (a.clone(), j)).collect())
                .collect();
            let phi = |a: &_| -> Option<Vec<usize>> {
                legs.iter()
                    .zip(&fan.classes)
                    .map(|(leg, c)| leg.restrict(x, a).and_then(|r| lookups[c.target].get(&r).copied()))
                    .collect()
            };
            let boundary_maps = hom_solver(&i.dom, x);
            let mut hit = vec![false; m.families.len()];
            for a in &boundary_maps {
                let fam = phi(a).ok_or_else(|| mismatch(kind, name, "a leg does not restrict"))?;
                let j = m
                    .family_index(&fam)
                    .ok_or_else(|| mismatch(kind, name, "image is not a matching family"))?;
                if hit[j] {
                    return Err(mismatch(kind, name, "two boundary maps give the same matching family"));
                }
                hit[j] = true;
            }
            if hit.iter().any(|h| !h) {
                return Err(mismatch(kind, name, "a matching family comes from no boundary map"));
            }
            for (e, a) in carrier.iter().enumerate() {
                let r = i.restrict(x, a).ok_or_else(|| mismatch(kind, name, "restriction along the latching map"))?;
                if phi(&r) != Some(boundary_family(&n.presheaf, k, e)) {
                    return Err(mismatch(kind, name, format!("boundary of {} disagrees", n.presheaf.element_name(k, e))));
                }
            }
            elements += carrier.len();
            families += m.families.len();
        }
        rows.push(LatchingRow {
            kind: kind.to_string(),
            inclusion: inc_name.to_string(),
            weights,
            elements,
            families,
        });
    }
    Ok(LatchingReport {
        rows,
        instances: instances.iter().map(|(n, _)| n.to_string()).collect(),
    })
}
