//! The nerve of a double category along a shape diagram: the presheaf of
//! maps out of the realized kinds.

mod diagram;
mod latching;

use std::collections::HashMap;

use crate::classify::{hom_solver, Assignment};
use crate::dblcat::{horizontal_embedding, DoubleFunctor, Finite2Category, FiniteCategory, FiniteDoubleCategory};
use crate::error::NerveError;
use crate::presheaf::{NatTransf, Presheaf, Span};

pub use diagram::{builtin_diagram, ShapeDiagram, DIAGRAM_NAMES};
pub use latching::{check_latching_table, LatchingReport, LatchingRow, LATCHING_KINDS};

/// The nerve together with the maps realizing each element.
#[derive(Clone, Debug)]
pub struct Nerve {
    pub presheaf: Presheaf,
    pub elements: Vec<Vec<Assignment>>,
}

impl Nerve {
    pub fn index(&self, k: usize, a: &Assignment) -> Option<usize> {
        self.elements[k].iter().position(|b| b == a)
    }
}

/// Builds the nerve of `x`: the carrier at a kind lists the maps out of
/// its shape (named `K#n`), and arrows act by restriction.
pub fn nerve_with_elements(x: &FiniteDoubleCategory, d: &ShapeDiagram) -> Result<Nerve, NerveError> {
    let sig = d.signature.clone();
    let elements: Vec<Vec<Assignment>> = d.shapes.iter().map(|s| hom_solver(s, x)).collect();
    let lookup: Vec<HashMap<&Assignment, usize>> = elements
        .iter()
        .map(|es| es.iter().enumerate().map(|(i, a)| (a, i)).collect())
        .collect();
    let carriers = elements
        .iter()
        .enumerate()
        .map(|(k, es)| (0..es.len()).map(|i| format!("{}#{i}", sig.kind_name(k))).collect())
        .collect();
    let mut actions = Vec::with_capacity(d.arrows.len());
    for (a, inc) in d.arrows.iter().enumerate() {
        let arrow = sig.arrow(a);
        let act = elements[arrow.source]
            .iter()
            .map(|e| {
                inc.restrict(x, e)
                    .and_then(|r| lookup[arrow.target].get(&r).copied())
                    .ok_or_else(|| NerveError::NotFunctorial(format!("`{}` does not restrict a map into X", inc.name)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        actions.push(act);
    }
    let presheaf = Presheaf::from_parts(sig, carriers, actions)?;
    Ok(Nerve { presheaf, elements })
}

pub fn nerve(x: &FiniteDoubleCategory, d: &ShapeDiagram) -> Result<Presheaf, NerveError> {
    Ok(nerve_with_elements(x, d)?.presheaf)
}

/// The nerve of a category along the `cat` diagram, via its horizontal
/// embedding.
pub fn nerve_of_category(c: &FiniteCategory, d: &ShapeDiagram) -> Result<Presheaf, NerveError> {
    nerve(&horizontal_embedding(&Finite2Category::locally_discrete(c.clone())), d)
}

fn push(f: &DoubleFunctor, a: &Assignment) -> Assignment {
    Assignment {
        obj: a.obj.iter().map(|&o| f.obj[o]).collect(),
        h: a.h.iter().map(|&m| f.h[m]).collect(),
        v: a.v.iter().map(|&m| f.v[m]).collect(),
        sq: a.sq.iter().map(|&s| f.sq[s]).collect(),
    }
}

/// The transformation between nerves given by postcomposition with `f`.
pub fn nerve_map(f: &DoubleFunctor, d: &ShapeDiagram) -> Result<NatTransf, NerveError> {
    let src = nerve_with_elements(&f.dom, d)?;
    let tgt = nerve_with_elements(&f.cod, d)?;
    let components = src
        .elements
        .iter()
        .enumerate()
        .map(|(k, es)| {
            let lookup: HashMap<&Assignment, usize> = tgt.elements[k].iter().enumerate().map(|(i, a)| (a, i)).collect();
            es.iter()
                .map(|a| {
                    lookup.get(&push(f, a)).copied().ok_or_else(|| {
                        NerveError::NotFunctorial(format!("image of an element of kind `{}`", d.signature.kind_name(k)))
                    })
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(NatTransf::new(src.presheaf, tgt.presheaf, components)?)
}

/// The span of nerves `N(left.cod) <- N(A) -> N(right.cod)` for two
/// functors out of the same double category `A`.
pub fn nerve_span(left: &DoubleFunctor, right: &DoubleFunctor, d: &ShapeDiagram) -> Result<Span, NerveError> {
    if left.dom != right.dom {
        return Err(NerveError::LegMismatch);
    }
    Ok(Span::new(nerve_map(left, d)?, nerve_map(right, d)?)?)
}
