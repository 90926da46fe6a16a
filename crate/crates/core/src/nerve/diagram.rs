//! The diagrams realizing the kinds of the builtin signatures as shapes.

use std::sync::Arc;

use crate::classify::{hom_solver, shape, ShapeInclusion, ShapePresentation};
use crate::dblcat::corpus::builtin;
use crate::error::NerveError;
use crate::signature::{builtin_signature, ArrowId, BuiltinSignature, FoldsSignature, KindId};

/// A functor from the opposite of a signature's index category to shape
/// presentations: each kind gets a shape and each arrow `p: K -> K'` an
/// inclusion `D(K') -> D(K)`.
#[derive(Clone, Debug)]
pub struct ShapeDiagram {
    pub name: String,
    pub signature: Arc<FoldsSignature>,
    pub shapes: Vec<Arc<ShapePresentation>>,
    pub arrows: Vec<ShapeInclusion>,
}

pub const DIAGRAM_NAMES: [&str; 3] = ["cat", "twocat", "dblcat"];

const CAT_SHAPES: &[(&str, &str)] = &[("O", "point"), ("A", "H2"), ("I'", "point"), ("T'", "H3"), ("E'", "H2")];

/// Arrow images as `(kind, arrow, map text)`; an empty map text on an
/// arrow between equal shapes means the identity.
const CAT_ARROWS: &[(&str, &str, &str)] = &[
    ("A", "s", "obj: x -> a"),
    ("A", "t", "obj: x -> b"),
    ("I'", "i", "obj: a -> x\nobj: b -> x\nhmor: f -> id(x)"),
    ("T'", "l", "obj: a -> x0\nobj: b -> x1\nhmor: f -> f"),
    ("T'", "r", "obj: a -> x1\nobj: b -> x2\nhmor: f -> g"),
    ("T'", "c", "obj: a -> x0\nobj: b -> x2\nhmor: f -> f;g"),
    ("E'", "l", ""),
    ("E'", "r", ""),
];

const TWOCAT_SHAPES: &[(&str, &str)] = &[
    ("C0", "point"),
    ("C1", "H2"),
    ("C2", "Sigma2"),
    ("T", "H_T"),
    ("I1", "H_A"),
    ("I2'", "H2"),
    ("V'", "Sigma3"),
    ("H'", "H_iso"),
    ("E'", "Sigma2"),
];

const TWOCAT_ARROWS: &[(&str, &str, &str)] = &[
    ("C1", "s", "obj: x -> a"),
    ("C1", "t", "obj: x -> b"),
    ("C2", "s", "obj: a -> a\nobj: b -> b\nhmor: f -> p"),
    ("C2", "t", "obj: a -> a\nobj: b -> b\nhmor: f -> q"),
    ("T", "l", "obj: a -> x0\nobj: b -> x1\nhmor: f -> f"),
    ("T", "r", "obj: a -> x1\nobj: b -> x2\nhmor: f -> g"),
    ("T", "c", "obj: a -> x0\nobj: b -> x2\nhmor: f -> h"),
    ("I1", "i", "obj: a -> x\nobj: b -> x\nhmor: f -> e"),
    ("I2'", "i", "obj: a -> a\nobj: b -> b\nhmor: p -> f\nhmor: q -> f\nsq: theta -> idsq_v(f)"),
    ("V'", "l", "obj: a -> a\nobj: b -> b\nhmor: p -> p\nhmor: q -> q\nsq: theta -> alpha"),
    ("V'", "r", "obj: a -> a\nobj: b -> b\nhmor: p -> q\nhmor: q -> r\nsq: theta -> beta"),
    ("V'", "c", "obj: a -> a\nobj: b -> b\nhmor: p -> p\nhmor: q -> r\nsq: theta -> alpha / beta"),
    ("H'", "l", "obj: a -> x0\nobj: b -> x1\nhmor: p -> f\nhmor: q -> f'\nsq: theta -> alpha"),
    ("H'", "r", "obj: a -> x1\nobj: b -> x2\nhmor: p -> g\nhmor: q -> g'\nsq: theta -> beta"),
    (
        "H'",
        "c",
        "obj: a -> x0\nobj: b -> x2\nhmor: p -> h\nhmor: q -> h'\nsq: theta -> theta / (alpha | beta) / inv_v(theta')",
    ),
    (
        "H'",
        "s",
        "obj: x0 -> x0\nobj: x1 -> x1\nobj: x2 -> x2\nhmor: f -> f\nhmor: g -> g\nhmor: h -> h\nsq: theta -> theta",
    ),
    (
        "H'",
        "t",
        "obj: x0 -> x0\nobj: x1 -> x1\nobj: x2 -> x2\nhmor: f -> f'\nhmor: g -> g'\nhmor: h -> h'\nsq: theta -> theta'",
    ),
    ("E'", "l", ""),
    ("E'", "r", ""),
];

const DBLCAT_SHAPES: &[(&str, &str)] = &[
    ("O", "point"),
    ("H", "H2"),
    ("V", "V2"),
    ("S", "square"),
    ("I_H", "H_A"),
    ("T_H", "H_T"),
    ("I_V", "V_A"),
    ("T_V", "V_T"),
    ("I_hor'", "V2"),
    ("I_ver'", "H2"),
    ("H_comp'", "C_H"),
    ("V_comp'", "C_V"),
    ("E'", "square"),
];

const DBLCAT_ARROWS: &[(&str, &str, &str)] = &[
    ("H", "s", "obj: x -> a"),
    ("H", "t", "obj: x -> b"),
    ("V", "s", "obj: x -> a"),
    ("V", "t", "obj: x -> b"),
    ("S", "u", "obj: a -> tl\nobj: b -> tr\nhmor: f -> top"),
    ("S", "d", "obj: a -> bl\nobj: b -> br\nhmor: f -> bottom"),
    ("S", "l", "obj: a -> tl\nobj: b -> bl\nvmor: u -> left"),
    ("S", "r", "obj: a -> tr\nobj: b -> br\nvmor: u -> right"),
    ("I_H", "i_H", "obj: a -> x\nobj: b -> x\nhmor: f -> e"),
    ("T_H", "l", "obj: a -> x0\nobj: b -> x1\nhmor: f -> f"),
    ("T_H", "r", "obj: a -> x1\nobj: b -> x2\nhmor: f -> g"),
    ("T_H", "c", "obj: a -> x0\nobj: b -> x2\nhmor: f -> h"),
    ("I_V", "i_V", "obj: a -> x\nobj: b -> x\nvmor: u -> e"),
    ("T_V", "u", "obj: a -> x0\nobj: b -> x1\nvmor: u -> u"),
    ("T_V", "d", "obj: a -> x1\nobj: b -> x2\nvmor: u -> d"),
    ("T_V", "c", "obj: a -> x0\nobj: b -> x2\nvmor: u -> c"),
    (
        "I_hor'",
        "i_shor",
        "obj: tl -> a\nobj: tr -> a\nobj: bl -> b\nobj: br -> b\nhmor: top -> id(a)\nhmor: bottom -> id(b)\n\
         vmor: left -> u\nvmor: right -> u\nsq: alpha -> idsq_h(u)",
    ),
    ("I_hor'", "u", "obj: x -> a\nhmor: e -> id(a)\nsq: theta -> idsq_v(id(a))"),
    ("I_hor'", "d", "obj: x -> b\nhmor: e -> id(b)\nsq: theta -> idsq_v(id(b))"),
    (
        "I_ver'",
        "i_sver",
        "obj: tl -> a\nobj: tr -> b\nobj: bl -> a\nobj: br -> b\nhmor: top -> f\nhmor: bottom -> f\n\
         vmor: left -> id(a)\nvmor: right -> id(b)\nsq: alpha -> idsq_v(f)",
    ),
    ("I_ver'", "l", "obj: x -> a\nvmor: e -> id(a)\nsq: theta -> idsq_h(id(a))"),
    ("I_ver'", "r", "obj: x -> b\nvmor: e -> id(b)\nsq: theta -> idsq_h(id(b))"),
    (
        "H_comp'",
        "l",
        "obj: tl -> x0\nobj: tr -> x1\nobj: bl -> y0\nobj: br -> y1\nhmor: top -> f\nhmor: bottom -> f'\n\
         vmor: left -> u0\nvmor: right -> u1\nsq: alpha -> alpha",
    ),
    (
        "H_comp'",
        "r",
        "obj: tl -> x1\nobj: tr -> x2\nobj: bl -> y1\nobj: br -> y2\nhmor: top -> g\nhmor: bottom -> g'\n\
         vmor: left -> u1\nvmor: right -> u2\nsq: alpha -> beta",
    ),
    (
        "H_comp'",
        "c",
        "obj: tl -> x0\nobj: tr -> x2\nobj: bl -> y0\nobj: br -> y2\nhmor: top -> h\nhmor: bottom -> h'\n\
         vmor: left -> u0\nvmor: right -> u2\nsq: alpha -> theta / (alpha | beta) / inv_v(theta')",
    ),
    (
        "H_comp'",
        "u",
        "obj: x0 -> x0\nobj: x1 -> x1\nobj: x2 -> x2\nhmor: f -> f\nhmor: g -> g\nhmor: h -> h\nsq: theta -> theta",
    ),
    (
        "H_comp'",
        "d",
        "obj: x0 -> y0\nobj: x1 -> y1\nobj: x2 -> y2\nhmor: f -> f'\nhmor: g -> g'\nhmor: h -> h'\nsq: theta -> theta'",
    ),
    (
        "V_comp'",
        "u",
        "obj: tl -> x0\nobj: tr -> y0\nobj: bl -> x1\nobj: br -> y1\nhmor: top -> f0\nhmor: bottom -> f1\n\
         vmor: left -> u\nvmor: right -> u'\nsq: alpha -> alpha",
    ),
    (
        "V_comp'",
        "d",
        "obj: tl -> x1\nobj: tr -> y1\nobj: bl -> x2\nobj: br -> y2\nhmor: top -> f1\nhmor: bottom -> f2\n\
         vmor: left -> d\nvmor: right -> d'\nsq: alpha -> beta",
    ),
    (
        "V_comp'",
        "c",
        "obj: tl -> x0\nobj: tr -> y0\nobj: bl -> x2\nobj: br -> y2\nhmor: top -> f0\nhmor: bottom -> f2\n\
         vmor: left -> c\nvmor: right -> c'\nsq: alpha -> theta | (alpha / beta) | inv_h(theta')",
    ),
    (
        "V_comp'",
        "l",
        "obj: x0 -> x0\nobj: x1 -> x1\nobj: x2 -> x2\nvmor: u -> u\nvmor: d -> d\nvmor: c -> c\nsq: theta -> theta",
    ),
    (
        "V_comp'",
        "r",
        "obj: x0 -> y0\nobj: x1 -> y1\nobj: x2 -> y2\nvmor: u -> u'\nvmor: d -> d'\nvmor: c -> c'\nsq: theta -> theta'",
    ),
    ("E'", "b", ""),
    ("E'", "f", ""),
];

/// Double categories used to audit functoriality of the builtin diagrams.
const PROBES: &[&str] = &["sq_iso", "sq_two", "sq_adjunction", "c_h", "c_v", "h_sigma_iso", "v_sigma_iso", "h_triangle"];

impl ShapeDiagram {
    fn from_tables(
        name: &str,
        which: BuiltinSignature,
        shapes: &[(&str, &str)],
        arrows: &[(&str, &str, &str)],
    ) -> Result<Self, NerveError> {
        let sig = builtin_signature(which);
        let mut by_kind = vec![None; sig.kind_count()];
        for (k, s) in shapes {
            let p = shape(s).ok_or_else(|| NerveError::NotFunctorial(format!("unknown shape `{s}`")))?;
            by_kind[sig.kind(k)?] = Some(p);
        }
        let shapes: Vec<Arc<ShapePresentation>> = by_kind
            .into_iter()
            .enumerate()
            .map(|(k, p)| p.ok_or_else(|| NerveError::NotFunctorial(format!("no shape for kind `{}`", sig.kind_name(k)))))
            .collect::<Result<_, _>>()?;
        let mut incs: Vec<Option<ShapeInclusion>> = vec![None; sig.arrows().len()];
        for (k, a, text) in arrows {
            let kid = sig.kind(k)?;
            let aid = sig
                .arrow_from(kid, a)
                .ok_or_else(|| NerveError::NotFunctorial(format!("no arrow `{a}` out of `{k}`")))?;
            let (dom, cod) = (shapes[sig.arrow(aid).target].clone(), shapes[kid].clone());
            let label = format!("D({k}.{a})");
            let inc = if text.is_empty() && dom == cod {
                ShapeInclusion {
                    name: label,
                    ..ShapeInclusion::identity(dom)
                }
            } else {
                ShapeInclusion::parse(&label, dom, cod, text)?
            };
            incs[aid] = Some(inc);
        }
        let arrows = incs
            .into_iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| NerveError::NotFunctorial(format!("no image for arrow `{}`", sig.arrow(i).name))))
            .collect::<Result<_, _>>()?;
        Ok(ShapeDiagram {
            name: name.to_string(),
            signature: sig,
            shapes,
            arrows,
        })
    }

    /// The inclusion `D(target) -> D(k)` realizing a word of arrows out of
    /// `k`; each arrow acts by restriction, so the word is realized back
    /// to front.
    pub fn realize(&self, k: KindId, word: &[ArrowId]) -> Result<ShapeInclusion, NerveError> {
        let mut inc = ShapeInclusion::identity(self.shapes[k].clone());
        for &a in word {
            inc = self.arrows[a].then(&inc)?;
        }
        Ok(inc)
    }

    /// Checks that each arrow image is a well-typed inclusion between the
    /// assigned shapes and that both sides of every signature relation
    /// are realized by inclusions restricting identically on the probes.
    pub fn check_functoriality(&self, probes: &[&str]) -> Result<(), NerveError> {
        let sig = &self.signature;
        for (a, inc) in self.arrows.iter().enumerate() {
            let arrow = sig.arrow(a);
            if *inc.dom != *self.shapes[arrow.target] || *inc.cod != *self.shapes[arrow.source] {
                return Err(NerveError::NotFunctorial(format!("`{}` has the wrong endpoints", inc.name)));
            }
            inc.validate()?;
        }
        let xs: Vec<_> = probes
            .iter()
            .map(|p| builtin(p).map_err(|e| NerveError::NotFunctorial(e.to_string())))
            .collect::<Result<_, _>>()?;
        for rel in sig.relations() {
            let text = format!(
                "{}: {} = {}",
                sig.kind_name(rel.source),
                sig.word_text(&rel.lhs),
                sig.word_text(&rel.rhs)
            );
            let lhs = self.realize(rel.source, &rel.lhs)?;
            let rhs = self.realize(rel.source, &rel.rhs)?;
            if lhs.obj != rhs.obj {
                return Err(NerveError::NotFunctorial(format!("{text}: object images differ")));
            }
            if lhs.h == rhs.h && lhs.v == rhs.v && lhs.sq == rhs.sq {
                continue;
            }
            for (p, x) in probes.iter().zip(&xs) {
                for a in hom_solver(&self.shapes[rel.source], x) {
                    if lhs.restrict(x, &a) != rhs.restrict(x, &a) {
                        return Err(NerveError::NotFunctorial(format!("{text}: restrictions differ on `{p}`")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// One of the builtin diagrams `cat`, `twocat` or `dblcat`, checked for
/// functoriality.
pub fn builtin_diagram(name: &str) -> Result<ShapeDiagram, NerveError> {
    let d = match name {
        "cat" => ShapeDiagram::from_tables("cat", BuiltinSignature::Cat, CAT_SHAPES, CAT_ARROWS)?,
        "twocat" | "2cat" => ShapeDiagram::from_tables("twocat", BuiltinSignature::TwoCat, TWOCAT_SHAPES, TWOCAT_ARROWS)?,
        "dblcat" => ShapeDiagram::from_tables("dblcat", BuiltinSignature::DblCat, DBLCAT_SHAPES, DBLCAT_ARROWS)?,
        other => return Err(NerveError::UnknownDiagram(other.to_string())),
    };
    d.check_functoriality(PROBES)?;
    Ok(d)
}
