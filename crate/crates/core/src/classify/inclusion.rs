//! Maps between presented shapes, given by sending each generator of the
//! domain to an expression in the codomain.
//!
//! ```text
//! obj: x -> A
//! hmor: f -> g;h
//! vmor: u -> id(A)
//! sq: alpha -> (beta | gamma) / delta
//! ```

use std::fmt::Write;
use std::sync::Arc;

use crate::dblcat::{Direction, FiniteDoubleCategory};
use crate::error::{ParseError, ShapeError};
use crate::text::{ident, lines};

use super::shape::{
    parse_mor_expr, parse_presentation_with, parse_sq_expr, MorExpr, Path, ShapePresentation, SqExpr,
};
use super::solver::{eval_h, eval_sq, eval_v, hom_solver, is_valid_assignment, Assignment};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeInclusion {
    pub name: String,
    pub dom: Arc<ShapePresentation>,
    pub cod: Arc<ShapePresentation>,
    pub obj: Vec<usize>,
    pub h: Vec<MorExpr>,
    pub v: Vec<MorExpr>,
    pub sq: Vec<SqExpr>,
}

impl ShapeInclusion {
    /// Parses generator images written against `cod` and checks them.
    pub fn parse(
        name: &str,
        dom: Arc<ShapePresentation>,
        cod: Arc<ShapePresentation>,
        text: &str,
    ) -> Result<Self, ShapeError> {
        let (no, nh, nv, ns) = dom.size();
        let mut obj = vec![None; no];
        let mut h = vec![None; nh];
        let mut v = vec![None; nv];
        let mut sq = vec![None; ns];
        for (n, l) in lines(text) {
            let (kw, body) = l
                .split_once(':')
                .ok_or_else(|| ParseError::new(n, "expected `sort: generator -> image`"))?;
            let (g, img) = body
                .split_once("->")
                .ok_or_else(|| ParseError::new(n, "expected `generator -> image`"))?;
            let g = ident(n, g)?;
            let unknown = || ShapeError::UnknownGenerator(g.clone());
            match kw.trim() {
                "obj" => {
                    let i = dom.object(&g).ok_or_else(unknown)?;
                    let o = ident(n, img)?;
                    obj[i] = Some(
                        cod.object(&o)
                            .ok_or_else(|| ParseError::new(n, format!("unknown object `{o}`")))?,
                    );
                }
                "hmor" => h[dom.hgen(&g).ok_or_else(unknown)?] = Some(parse_mor_expr(&cod, true, n, img)?),
                "vmor" => v[dom.vgen(&g).ok_or_else(unknown)?] = Some(parse_mor_expr(&cod, false, n, img)?),
                "sq" => sq[dom.sqgen(&g).ok_or_else(unknown)?] = Some(parse_sq_expr(&cod, n, img)?),
                k => return Err(ParseError::new(n, format!("unknown directive `{k}`")).into()),
            }
        }
        fn all<T>(v: Vec<Option<T>>, names: impl Fn(usize) -> String) -> Result<Vec<T>, ShapeError> {
            v.into_iter()
                .enumerate()
                .map(|(i, x)| x.ok_or_else(|| ShapeError::Malformed(format!("no image for `{}`", names(i)))))
                .collect()
        }
        let inc = ShapeInclusion {
            name: name.to_string(),
            obj: all(obj, |i| dom.objects[i].clone())?,
            h: all(h, |i| dom.hgens[i].name.clone())?,
            v: all(v, |i| dom.vgens[i].name.clone())?,
            sq: all(sq, |i| dom.sqgens[i].name.clone())?,
            dom,
            cod,
        };
        inc.validate()?;
        Ok(inc)
    }

    /// The inclusion of the sub-presentation spanned by the named
    /// generators of `cod`, together with the relations among them.
    pub fn sub(name: &str, cod: Arc<ShapePresentation>, generators: &[&str]) -> Result<Self, ShapeError> {
        let mut dom = ShapePresentation {
            name: name.to_string(),
            ..Default::default()
        };
        let mut obj_map = Vec::new();
        let keep_obj = |o: usize, dom: &mut ShapePresentation, obj_map: &mut Vec<usize>| -> usize {
            match obj_map.iter().position(|&x| x == o) {
                Some(i) => i,
                None => {
                    obj_map.push(o);
                    dom.objects.push(cod.objects[o].clone());
                    obj_map.len() - 1
                }
            }
        };
        let mut h_map = Vec::new();
        let mut v_map = Vec::new();
        let mut sq_map = Vec::new();
        for &g in generators {
            if let Some(o) = cod.object(g) {
                keep_obj(o, &mut dom, &mut obj_map);
            } else if let Some(i) = cod.hgen(g) {
                let c = &cod.hgens[i];
                let (s, t) = (keep_obj(c.src, &mut dom, &mut obj_map), keep_obj(c.tgt, &mut dom, &mut obj_map));
                dom.hgens.push(super::shape::Generator {
                    name: c.name.clone(),
                    src: s,
                    tgt: t,
                });
                h_map.push(i);
            } else if let Some(i) = cod.vgen(g) {
                let c = &cod.vgens[i];
                let (s, t) = (keep_obj(c.src, &mut dom, &mut obj_map), keep_obj(c.tgt, &mut dom, &mut obj_map));
                dom.vgens.push(super::shape::Generator {
                    name: c.name.clone(),
                    src: s,
                    tgt: t,
                });
                v_map.push(i);
            } else if let Some(i) = cod.sqgen(g) {
                sq_map.push(i);
            } else {
                return Err(ShapeError::UnknownGenerator(g.to_string()));
            }
        }
        // pull square boundaries and relations back along the kept generators
        let back_mor = |e: &MorExpr, map: &[usize], objs: &[usize]| -> Option<MorExpr> {
            fn go(e: &MorExpr, map: &[usize], objs: &[usize]) -> Option<MorExpr> {
                Some(match e {
                    MorExpr::Gen(g) => MorExpr::Gen(map.iter().position(|x| x == g)?),
                    MorExpr::Id(o) => MorExpr::Id(objs.iter().position(|x| x == o)?),
                    MorExpr::Comp(a, b) => go(a, map, objs)?.then(go(b, map, objs)?),
                })
            }
            go(e, map, objs)
        };
        for &i in &sq_map {
            let g = &cod.sqgens[i];
            let missing = || ShapeError::Malformed(format!("boundary of `{}` is not included", g.name));
            dom.sqgens.push(super::shape::SquareGenerator {
                name: g.name.clone(),
                top: back_mor(&g.top, &h_map, &obj_map).ok_or_else(missing)?,
                bottom: back_mor(&g.bottom, &h_map, &obj_map).ok_or_else(missing)?,
                left: back_mor(&g.left, &v_map, &obj_map).ok_or_else(missing)?,
                right: back_mor(&g.right, &v_map, &obj_map).ok_or_else(missing)?,
            });
        }
        for &(s, d) in &cod.invertible {
            if let Some(j) = sq_map.iter().position(|&x| x == s) {
                dom.invertible.push((j, d));
            }
        }
        fn back_sq(
            e: &SqExpr,
            h: &[usize],
            v: &[usize],
            sq: &[usize],
            objs: &[usize],
            back_mor: &dyn Fn(&MorExpr, &[usize], &[usize]) -> Option<MorExpr>,
        ) -> Option<SqExpr> {
            Some(match e {
                SqExpr::Gen(s) => SqExpr::Gen(sq.iter().position(|x| x == s)?),
                SqExpr::Inv(s, d) => SqExpr::Inv(sq.iter().position(|x| x == s)?, *d),
                SqExpr::HId(m) => SqExpr::HId(back_mor(m, v, objs)?),
                SqExpr::VId(m) => SqExpr::VId(back_mor(m, h, objs)?),
                SqExpr::HComp(a, b) => back_sq(a, h, v, sq, objs, back_mor)?.beside(back_sq(b, h, v, sq, objs, back_mor)?),
                SqExpr::VComp(a, b) => back_sq(a, h, v, sq, objs, back_mor)?.above(back_sq(b, h, v, sq, objs, back_mor)?),
            })
        }
        for (l, r) in &cod.relations {
            if let (Some(l), Some(r)) = (
                back_sq(l, &h_map, &v_map, &sq_map, &obj_map, &back_mor),
                back_sq(r, &h_map, &v_map, &sq_map, &obj_map, &back_mor),
            ) {
                dom.relations.push((l, r));
            }
        }
        dom.validate()?;
        let inc = ShapeInclusion {
            name: name.to_string(),
            obj: obj_map,
            h: h_map.into_iter().map(MorExpr::Gen).collect(),
            v: v_map.into_iter().map(MorExpr::Gen).collect(),
            sq: sq_map.into_iter().map(SqExpr::Gen).collect(),
            dom: Arc::new(dom),
            cod,
        };
        inc.validate()?;
        Ok(inc)
    }

    fn image_path(&self, horizontal: bool, p: &Path) -> Result<Path, ShapeError> {
        let mut out = Path {
            src: self.obj[p.src],
            tgt: self.obj[p.src],
            gens: Vec::new(),
        };
        for &g in &p.gens {
            let e = if horizontal { &self.h[g] } else { &self.v[g] };
            let q = if horizontal { self.cod.hpath(e)? } else { self.cod.vpath(e)? };
            out.tgt = q.tgt;
            out.gens.extend(q.gens);
        }
        Ok(out)
    }

    /// Checks that generator images have the translated endpoints and
    /// boundaries. Relations are checked by realization, see
    /// [`ShapeInclusion::check_on`].
    pub fn validate(&self) -> Result<(), ShapeError> {
        let (no, nh, nv, ns) = self.dom.size();
        if self.obj.len() != no || self.h.len() != nh || self.v.len() != nv || self.sq.len() != ns {
            return Err(ShapeError::Malformed(format!("`{}` does not map every generator", self.name)));
        }
        if self.obj.iter().any(|&o| o >= self.cod.objects.len()) {
            return Err(ShapeError::Malformed(format!("`{}` maps to an unknown object", self.name)));
        }
        for (horizontal, gens, imgs) in [(true, &self.dom.hgens, &self.h), (false, &self.dom.vgens, &self.v)] {
            for (g, e) in gens.iter().zip(imgs) {
                let p = if horizontal { self.cod.hpath(e)? } else { self.cod.vpath(e)? };
                if p.src != self.obj[g.src] || p.tgt != self.obj[g.tgt] {
                    return Err(ShapeError::NotAFunctor(format!("endpoints of `{}`", g.name)));
                }
            }
        }
        for s in 0..ns {
            let [t, b, l, r] = self.dom.generator_boundary(s)?;
            let expected = [
                self.image_path(true, &t)?,
                self.image_path(true, &b)?,
                self.image_path(false, &l)?,
                self.image_path(false, &r)?,
            ];
            if self.cod.boundary(&self.sq[s])? != expected {
                return Err(ShapeError::NotAFunctor(format!("boundary of `{}`", self.dom.sqgens[s].name)));
            }
        }
        Ok(())
    }

    /// Restriction along the inclusion: a functor out of the codomain
    /// precomposed with the inclusion.
    pub fn restrict(&self, x: &FiniteDoubleCategory, a: &Assignment) -> Option<Assignment> {
        Some(Assignment {
            obj: self.obj.iter().map(|&o| a.obj[o]).collect(),
            h: self.h.iter().map(|e| eval_h(x, a, e)).collect::<Option<_>>()?,
            v: self.v.iter().map(|e| eval_v(x, a, e)).collect::<Option<_>>()?,
            sq: self.sq.iter().map(|e| eval_sq(x, a, e)).collect::<Option<_>>()?,
        })
    }

    /// Checks on a probe double category that every functor out of the
    /// codomain restricts to a functor out of the domain.
    pub fn check_on(&self, x: &FiniteDoubleCategory) -> Result<(), ShapeError> {
        for a in hom_solver(&self.cod, x) {
            match self.restrict(x, &a) {
                Some(r) if is_valid_assignment(&self.dom, x, &r) => {}
                _ => {
                    return Err(ShapeError::NotAFunctor(format!(
                        "relations or invertibility of `{}` (`{}`)",
                        self.dom.name, self.name
                    )))
                }
            }
        }
        Ok(())
    }

    fn subst_mor(&self, horizontal: bool, e: &MorExpr) -> MorExpr {
        match e {
            MorExpr::Gen(g) => {
                if horizontal {
                    self.h[*g].clone()
                } else {
                    self.v[*g].clone()
                }
            }
            MorExpr::Id(o) => MorExpr::Id(self.obj[*o]),
            MorExpr::Comp(a, b) => self.subst_mor(horizontal, a).then(self.subst_mor(horizontal, b)),
        }
    }

    fn subst_sq(&self, e: &SqExpr) -> Result<SqExpr, ShapeError> {
        Ok(match e {
            SqExpr::Gen(s) => self.sq[*s].clone(),
            SqExpr::Inv(s, d) => invert(&self.cod, &self.sq[*s], *d).ok_or_else(|| {
                ShapeError::NotAFunctor(format!("invertibility of `{}`", self.dom.sqgens[*s].name))
            })?,
            SqExpr::HId(m) => SqExpr::HId(self.subst_mor(false, m)),
            SqExpr::VId(m) => SqExpr::VId(self.subst_mor(true, m)),
            SqExpr::HComp(a, b) => self.subst_sq(a)?.beside(self.subst_sq(b)?),
            SqExpr::VComp(a, b) => self.subst_sq(a)?.above(self.subst_sq(b)?),
        })
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ShapeInclusion) -> Result<ShapeInclusion, ShapeError> {
        if *self.cod != *next.dom {
            return Err(ShapeError::Malformed(format!(
                "cannot compose `{}` with `{}`",
                self.name, next.name
            )));
        }
        let inc = ShapeInclusion {
            name: format!("{};{}", self.name, next.name),
            dom: self.dom.clone(),
            cod: next.cod.clone(),
            obj: self.obj.iter().map(|&o| next.obj[o]).collect(),
            h: self.h.iter().map(|e| next.subst_mor(true, e)).collect(),
            v: self.v.iter().map(|e| next.subst_mor(false, e)).collect(),
            sq: self.sq.iter().map(|e| next.subst_sq(e)).collect::<Result<_, _>>()?,
        };
        Ok(inc)
    }

    pub fn identity(p: Arc<ShapePresentation>) -> ShapeInclusion {
        let (no, nh, nv, ns) = p.size();
        ShapeInclusion {
            name: format!("id_{}", p.name),
            obj: (0..no).collect(),
            h: (0..nh).map(MorExpr::Gen).collect(),
            v: (0..nv).map(MorExpr::Gen).collect(),
            sq: (0..ns).map(SqExpr::Gen).collect(),
            dom: p.clone(),
            cod: p,
        }
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (i, &o) in self.obj.iter().enumerate() {
            let _ = writeln!(out, "obj: {} -> {}", self.dom.objects[i], self.cod.objects[o]);
        }
        for (g, e) in self.dom.hgens.iter().zip(&self.h) {
            let _ = writeln!(out, "hmor: {} -> {}", g.name, self.cod.print_mor(true, e));
        }
        for (g, e) in self.dom.vgens.iter().zip(&self.v) {
            let _ = writeln!(out, "vmor: {} -> {}", g.name, self.cod.print_mor(false, e));
        }
        for (g, e) in self.dom.sqgens.iter().zip(&self.sq) {
            let _ = writeln!(out, "sq: {} -> {}", g.name, self.cod.print_sq(e));
        }
        out
    }
}

/// A square expression for the inverse of `e` in direction `dir`, when one
/// can be read off syntactically.
pub fn invert(p: &ShapePresentation, e: &SqExpr, dir: Direction) -> Option<SqExpr> {
    let is_id = |m: &MorExpr, horizontal: bool| {
        let path = if horizontal { p.hpath(m) } else { p.vpath(m) };
        path.map(|q| q.is_identity()).unwrap_or(false)
    };
    match (e, dir) {
        (SqExpr::Gen(s), _) => p.is_invertible(*s, dir).then_some(SqExpr::Inv(*s, dir)),
        (SqExpr::Inv(s, d), _) if *d == dir => Some(SqExpr::Gen(*s)),
        (SqExpr::Inv(..), _) => None,
        (SqExpr::HId(_), Direction::Horizontal) | (SqExpr::VId(_), Direction::Vertical) => Some(e.clone()),
        (SqExpr::HId(m), Direction::Vertical) => is_id(m, false).then(|| e.clone()),
        (SqExpr::VId(m), Direction::Horizontal) => is_id(m, true).then(|| e.clone()),
        (SqExpr::HComp(a, b), Direction::Horizontal) => Some(invert(p, b, dir)?.beside(invert(p, a, dir)?)),
        (SqExpr::HComp(a, b), Direction::Vertical) => Some(invert(p, a, dir)?.beside(invert(p, b, dir)?)),
        (SqExpr::VComp(a, b), Direction::Vertical) => Some(invert(p, b, dir)?.above(invert(p, a, dir)?)),
        (SqExpr::VComp(a, b), Direction::Horizontal) => Some(invert(p, a, dir)?.above(invert(p, b, dir)?)),
    }
}

/// Parses an inclusion file: a codomain presentation whose `include:`
/// lines list the generators spanning the domain.
pub fn parse_inclusion_file(name: &str, text: &str) -> Result<ShapeInclusion, ShapeError> {
    let mut included: Vec<String> = Vec::new();
    let mut extra = |n: usize, kw: &str, body: &str| -> Result<(), ParseError> {
        if kw != "include" {
            return Err(ParseError::new(n, format!("unknown directive `{kw}`")));
        }
        for g in body.split_whitespace() {
            included.push(ident(n, g)?);
        }
        Ok(())
    };
    let cod = parse_presentation_with(text, Some(&mut extra))?;
    cod.validate()?;
    let names: Vec<&str> = included.iter().map(String::as_str).collect();
    ShapeInclusion::sub(name, Arc::new(cod), &names)
}
