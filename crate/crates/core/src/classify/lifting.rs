//! Right lifting property of a double functor against a shape inclusion.

use std::fmt;
use std::ops::ControlFlow;

use crate::dblcat::{DoubleFunctor, FiniteDoubleCategory};

use super::inclusion::ShapeInclusion;
use super::shape::{MorExpr, ShapePresentation, SqExpr};
use super::solver::{find_one, hom_solver, solve, Assignment, GenKind};

/// A commuting square from an inclusion to a functor with no diagonal
/// filler.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftingProblem {
    pub inclusion: String,
    /// The map out of the domain of the inclusion, into the domain of the
    /// functor.
    pub top: Assignment,
    /// The map out of the codomain of the inclusion, into the codomain of
    /// the functor.
    pub bottom: Assignment,
    pub description: String,
}

impl fmt::Display for LiftingProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no lift against `{}`: {}", self.inclusion, self.description)
    }
}

/// Renders an assignment as `generator↦cell` pairs using the names of
/// both sides.
pub fn describe_assignment(p: &ShapePresentation, x: &FiniteDoubleCategory, a: &Assignment) -> String {
    let mut parts = Vec::new();
    for (i, o) in p.objects.iter().enumerate() {
        parts.push(format!("{o}↦{}", x.objects()[a.obj[i]]));
    }
    for (i, g) in p.hgens.iter().enumerate() {
        parts.push(format!("{}↦{}", g.name, x.hmors()[a.h[i]].name));
    }
    for (i, g) in p.vgens.iter().enumerate() {
        parts.push(format!("{}↦{}", g.name, x.vmors()[a.v[i]].name));
    }
    for (i, g) in p.sqgens.iter().enumerate() {
        parts.push(format!("{}↦{}", g.name, x.squares()[a.sq[i]].name));
    }
    if parts.is_empty() {
        "the empty map".to_string()
    } else {
        format!("{{{}}}", parts.join(", "))
    }
}

fn image(f: &DoubleFunctor, kind: GenKind, value: usize) -> usize {
    match kind {
        GenKind::Object => f.obj[value],
        GenKind::Hmor => f.h[value],
        GenKind::Vmor => f.v[value],
        GenKind::Square => f.sq[value],
    }
}

fn component(a: &Assignment, kind: GenKind) -> &[usize] {
    match kind {
        GenKind::Object => &a.obj,
        GenKind::Hmor => &a.h,
        GenKind::Vmor => &a.v,
        GenKind::Square => &a.sq,
    }
}

/// Values of codomain generators fixed by the inclusion mapping a domain
/// generator directly onto them.
fn pins(i: &ShapeInclusion, a: &Assignment) -> [Vec<Option<usize>>; 4] {
    let (no, nh, nv, ns) = i.cod.size();
    let mut out = [vec![None; no], vec![None; nh], vec![None; nv], vec![None; ns]];
    for (d, &c) in i.obj.iter().enumerate() {
        out[0][c] = Some(a.obj[d]);
    }
    for (d, e) in i.h.iter().enumerate() {
        if let MorExpr::Gen(c) = e {
            out[1][*c] = Some(a.h[d]);
        }
    }
    for (d, e) in i.v.iter().enumerate() {
        if let MorExpr::Gen(c) = e {
            out[2][*c] = Some(a.v[d]);
        }
    }
    for (d, e) in i.sq.iter().enumerate() {
        if let SqExpr::Gen(c) = e {
            out[3][*c] = Some(a.sq[d]);
        }
    }
    out
}

fn kind_index(kind: GenKind) -> usize {
    match kind {
        GenKind::Object => 0,
        GenKind::Hmor => 1,
        GenKind::Vmor => 2,
        GenKind::Square => 3,
    }
}

/// Searches for a diagonal filler of the square `(top, bottom)`.
pub fn find_lift(f: &DoubleFunctor, i: &ShapeInclusion, top: &Assignment, bottom: &Assignment) -> Option<Assignment> {
    let pinned = pins(i, top);
    let filter = |kind: GenKind, g: usize, value: usize| {
        image(f, kind, value) == component(bottom, kind)[g] && pinned[kind_index(kind)][g].is_none_or(|p| p == value)
    };
    find_one(&i.cod, &f.dom, Some(&filter), &|l| i.restrict(&f.dom, l).as_ref() == Some(top))
}

/// Checks that `f` has the right lifting property against `i`, returning
/// an unsolvable lifting problem otherwise.
pub fn has_rlp(f: &DoubleFunctor, i: &ShapeInclusion) -> Result<(), LiftingProblem> {
    let (a, b) = (&*f.dom, &*f.cod);
    for bottom in hom_solver(&i.cod, b) {
        let Some(restricted) = i.restrict(b, &bottom) else {
            continue;
        };
        let filter = |kind: GenKind, g: usize, value: usize| image(f, kind, value) == component(&restricted, kind)[g];
        let mut failure = None;
        let _ = solve(&i.dom, a, Some(&filter), &mut |top| {
            if find_lift(f, i, top, &bottom).is_some() {
                ControlFlow::Continue(())
            } else {
                failure = Some(top.clone());
                ControlFlow::Break(())
            }
        });
        if let Some(top) = failure {
            let description = format!(
                "{} over {}",
                describe_assignment(&i.dom, a, &top),
                describe_assignment(&i.cod, b, &bottom)
            );
            return Err(LiftingProblem {
                inclusion: i.name.clone(),
                top,
                bottom,
                description,
            });
        }
    }
    Ok(())
}

/// Checks the lifting property against every inclusion in turn.
pub fn has_rlp_all(f: &DoubleFunctor, generators: &[ShapeInclusion]) -> Result<(), LiftingProblem> {
    generators.iter().try_for_each(|i| has_rlp(f, i))
}
