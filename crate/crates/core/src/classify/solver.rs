//! Enumeration of double functors out of a presented shape.

use std::ops::ControlFlow;

use crate::dblcat::{Direction, FiniteDoubleCategory};

use super::shape::{MorExpr, ShapePresentation, SqExpr};

/// Images of the generators of a presentation; determines a double
/// functor out of the presented double category.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment {
    pub obj: Vec<usize>,
    pub h: Vec<usize>,
    pub v: Vec<usize>,
    pub sq: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenKind {
    Object,
    Hmor,
    Vmor,
    Square,
}

pub fn eval_h(x: &FiniteDoubleCategory, a: &Assignment, e: &MorExpr) -> Option<usize> {
    match e {
        MorExpr::Gen(g) => a.h.get(*g).copied(),
        MorExpr::Id(o) => Some(x.hid(*a.obj.get(*o)?)),
        MorExpr::Comp(p, q) => x.hcomp_h(eval_h(x, a, p)?, eval_h(x, a, q)?),
    }
}

pub fn eval_v(x: &FiniteDoubleCategory, a: &Assignment, e: &MorExpr) -> Option<usize> {
    match e {
        MorExpr::Gen(g) => a.v.get(*g).copied(),
        MorExpr::Id(o) => Some(x.vid(*a.obj.get(*o)?)),
        MorExpr::Comp(p, q) => x.vcomp_v(eval_v(x, a, p)?, eval_v(x, a, q)?),
    }
}

pub fn eval_sq(x: &FiniteDoubleCategory, a: &Assignment, e: &SqExpr) -> Option<usize> {
    match e {
        SqExpr::Gen(s) => a.sq.get(*s).copied(),
        SqExpr::Inv(s, Direction::Horizontal) => x.h_inverse(*a.sq.get(*s)?),
        SqExpr::Inv(s, Direction::Vertical) => x.v_inverse(*a.sq.get(*s)?),
        SqExpr::HId(v) => Some(x.sq_hid(eval_v(x, a, v)?)),
        SqExpr::VId(h) => Some(x.sq_vid(eval_h(x, a, h)?)),
        SqExpr::HComp(p, q) => x.hcomp_sq(eval_sq(x, a, p)?, eval_sq(x, a, q)?),
        SqExpr::VComp(p, q) => x.vcomp_sq(eval_sq(x, a, p)?, eval_sq(x, a, q)?),
    }
}

fn invertible_in(x: &FiniteDoubleCategory, s: usize, dir: Direction) -> bool {
    match dir {
        Direction::Horizontal => x.h_inverse(s).is_some(),
        Direction::Vertical => x.v_inverse(s).is_some(),
    }
}

/// Whether an assignment defines a double functor: endpoints and
/// boundaries match, declared inverses exist and relations hold.
pub fn is_valid_assignment(p: &ShapePresentation, x: &FiniteDoubleCategory, a: &Assignment) -> bool {
    let no = x.objects().len();
    if a.obj.len() != p.objects.len()
        || a.h.len() != p.hgens.len()
        || a.v.len() != p.vgens.len()
        || a.sq.len() != p.sqgens.len()
        || a.obj.iter().any(|&o| o >= no)
    {
        return false;
    }
    for (gens, img, cells) in [(&p.hgens, &a.h, x.hmors()), (&p.vgens, &a.v, x.vmors())] {
        for (g, &m) in gens.iter().zip(img) {
            match cells.get(m) {
                Some(c) if c.src == a.obj[g.src] && c.tgt == a.obj[g.tgt] => {}
                _ => return false,
            }
        }
    }
    for (s, g) in p.sqgens.iter().enumerate() {
        let Some(q) = x.squares().get(a.sq[s]) else {
            return false;
        };
        let bd = [
            eval_h(x, a, &g.top),
            eval_h(x, a, &g.bottom),
            eval_v(x, a, &g.left),
            eval_v(x, a, &g.right),
        ];
        if bd != [Some(q.top), Some(q.bottom), Some(q.left), Some(q.right)] {
            return false;
        }
    }
    if p.invertible.iter().any(|&(s, d)| !invertible_in(x, a.sq[s], d)) {
        return false;
    }
    p.relations
        .iter()
        .all(|(l, r)| matches!((eval_sq(x, a, l), eval_sq(x, a, r)), (Some(u), Some(w)) if u == w))
}

/// Restricts the values a generator may take.
pub type Filter<'a> = &'a dyn Fn(GenKind, usize, usize) -> bool;

struct Plan {
    /// Morphism generators in search order, `true` for horizontal.
    mors: Vec<(bool, usize)>,
    /// Relations to check after the given square generator, or before any
    /// square for index 0 when they mention no square generator.
    relations_after: Vec<Vec<usize>>,
    relations_before: Vec<usize>,
}

fn plan(p: &ShapePresentation) -> Plan {
    // grow the order from already reached objects so that endpoints prune
    let mut pending: Vec<(bool, usize)> = (0..p.hgens.len())
        .map(|g| (true, g))
        .chain((0..p.vgens.len()).map(|g| (false, g)))
        .collect();
    let mut reached = vec![false; p.objects.len()];
    let mut mors = Vec::new();
    while !pending.is_empty() {
        let ends = |&(hz, g): &(bool, usize)| {
            let gen = if hz { &p.hgens[g] } else { &p.vgens[g] };
            reached[gen.src] as usize + reached[gen.tgt] as usize
        };
        let best = (0..pending.len())
            .max_by_key(|&i| (ends(&pending[i]), std::cmp::Reverse(i)))
            .unwrap();
        let (hz, g) = pending.remove(best);
        let gen = if hz { &p.hgens[g] } else { &p.vgens[g] };
        reached[gen.src] = true;
        reached[gen.tgt] = true;
        mors.push((hz, g));
    }
    let mut relations_after = vec![Vec::new(); p.sqgens.len()];
    let mut relations_before = Vec::new();
    for (i, (l, r)) in p.relations.iter().enumerate() {
        let mut gens = Vec::new();
        l.generators(&mut gens);
        r.generators(&mut gens);
        match gens.into_iter().max() {
            Some(s) => relations_after[s].push(i),
            None => relations_before.push(i),
        }
    }
    Plan {
        mors,
        relations_after,
        relations_before,
    }
}

struct Search<'a> {
    p: &'a ShapePresentation,
    x: &'a FiniteDoubleCategory,
    filter: Option<Filter<'a>>,
    plan: Plan,
    obj: Vec<Option<usize>>,
    a: Assignment,
}

impl Search<'_> {
    fn allowed(&self, kind: GenKind, g: usize, value: usize) -> bool {
        self.filter.is_none_or(|f| f(kind, g, value))
    }

    fn relation_holds(&self, i: usize) -> bool {
        let (l, r) = &self.p.relations[i];
        matches!(
            (eval_sq(self.x, &self.a, l), eval_sq(self.x, &self.a, r)),
            (Some(u), Some(w)) if u == w
        )
    }

    fn mors(&mut self, i: usize, k: &mut dyn FnMut(&Assignment) -> ControlFlow<()>) -> ControlFlow<()> {
        if i == self.plan.mors.len() {
            return self.loose_objects(0, k);
        }
        let (hz, g) = self.plan.mors[i];
        let gen = if hz { &self.p.hgens[g] } else { &self.p.vgens[g] };
        let (gs, gt) = (gen.src, gen.tgt);
        let (cells, kind) = if hz {
            (self.x.hmors(), GenKind::Hmor)
        } else {
            (self.x.vmors(), GenKind::Vmor)
        };
        let candidates: Vec<usize> = match (self.obj[gs], self.obj[gt]) {
            (Some(s), Some(t)) if hz => self.x.hhom(s, t).to_vec(),
            (Some(s), Some(t)) => self.x.vhom(s, t).to_vec(),
            (s, t) => (0..cells.len())
                .filter(|&m| s.is_none_or(|s| cells[m].src == s) && t.is_none_or(|t| cells[m].tgt == t))
                .collect(),
        };
        for m in candidates {
            if !self.allowed(kind, g, m) {
                continue;
            }
            let (ms, mt) = (cells[m].src, cells[m].tgt);
            let set_s = self.obj[gs].is_none();
            if set_s {
                if !self.allowed(GenKind::Object, gs, ms) {
                    continue;
                }
                self.obj[gs] = Some(ms);
            }
            let set_t = self.obj[gt].is_none();
            // a loop generator may have fixed its target just now
            if set_t && !self.allowed(GenKind::Object, gt, mt) {
                if set_s {
                    self.obj[gs] = None;
                }
                continue;
            }
            if set_t {
                self.obj[gt] = Some(mt);
            }
            if self.obj[gt] == Some(mt) && self.obj[gs] == Some(ms) {
                if hz {
                    self.a.h[g] = m;
                } else {
                    self.a.v[g] = m;
                }
                let r = self.mors(i + 1, k);
                if r.is_break() {
                    return r;
                }
            }
            if set_t {
                self.obj[gt] = None;
            }
            if set_s {
                self.obj[gs] = None;
            }
        }
        ControlFlow::Continue(())
    }

    fn loose_objects(&mut self, o: usize, k: &mut dyn FnMut(&Assignment) -> ControlFlow<()>) -> ControlFlow<()> {
        if o == self.obj.len() {
            for (i, x) in self.obj.iter().enumerate() {
                self.a.obj[i] = x.unwrap();
            }
            if !self.plan.relations_before.iter().all(|&i| self.relation_holds(i)) {
                return ControlFlow::Continue(());
            }
            return self.squares(0, k);
        }
        if self.obj[o].is_some() {
            return self.loose_objects(o + 1, k);
        }
        for c in 0..self.x.objects().len() {
            if !self.allowed(GenKind::Object, o, c) {
                continue;
            }
            self.obj[o] = Some(c);
            let r = self.loose_objects(o + 1, k);
            self.obj[o] = None;
            r?;
        }
        ControlFlow::Continue(())
    }

    fn squares(&mut self, s: usize, k: &mut dyn FnMut(&Assignment) -> ControlFlow<()>) -> ControlFlow<()> {
        if s == self.p.sqgens.len() {
            return k(&self.a);
        }
        let g = &self.p.sqgens[s];
        let bd = [
            eval_h(self.x, &self.a, &g.top),
            eval_h(self.x, &self.a, &g.bottom),
            eval_v(self.x, &self.a, &g.left),
            eval_v(self.x, &self.a, &g.right),
        ];
        let [Some(t), Some(b), Some(l), Some(r)] = bd else {
            return ControlFlow::Continue(());
        };
        let dirs: Vec<Direction> = self
            .p
            .invertible
            .iter()
            .filter(|&&(q, _)| q == s)
            .map(|&(_, d)| d)
            .collect();
        for &c in self.x.squares_with([t, b, l, r]) {
            if !self.allowed(GenKind::Square, s, c) || !dirs.iter().all(|&d| invertible_in(self.x, c, d)) {
                continue;
            }
            self.a.sq[s] = c;
            if self.plan.relations_after[s].iter().all(|&i| self.relation_holds(i)) {
                self.squares(s + 1, k)?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// Calls `k` on every double functor from the presented shape to `x`
/// whose generator values pass `filter`, in a deterministic order. The
/// callback may stop the search early.
pub fn solve(
    p: &ShapePresentation,
    x: &FiniteDoubleCategory,
    filter: Option<Filter<'_>>,
    k: &mut dyn FnMut(&Assignment) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let (no, nh, nv, ns) = p.size();
    let mut search = Search {
        p,
        x,
        filter,
        plan: plan(p),
        obj: vec![None; no],
        a: Assignment {
            obj: vec![0; no],
            h: vec![0; nh],
            v: vec![0; nv],
            sq: vec![0; ns],
        },
    };
    search.mors(0, k)
}

/// All double functors from the presented shape to `x`. Distinct
/// assignments are distinct functors, so the list has no duplicates.
pub fn hom_solver(p: &ShapePresentation, x: &FiniteDoubleCategory) -> Vec<Assignment> {
    hom_solver_filtered(p, x, None)
}

pub fn hom_solver_filtered(p: &ShapePresentation, x: &FiniteDoubleCategory, filter: Option<Filter<'_>>) -> Vec<Assignment> {
    let mut out = Vec::new();
    let _ = solve(p, x, filter, &mut |a| {
        out.push(a.clone());
        ControlFlow::Continue(())
    });
    out
}

/// The first solution passing `filter` and `accept`, if any.
pub fn find_one(
    p: &ShapePresentation,
    x: &FiniteDoubleCategory,
    filter: Option<Filter<'_>>,
    accept: &dyn Fn(&Assignment) -> bool,
) -> Option<Assignment> {
    let mut found = None;
    let _ = solve(p, x, filter, &mut |a| {
        if accept(a) {
            found = Some(a.clone());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}
