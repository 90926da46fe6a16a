//! Builtin shape presentations and the generating inclusions used as
//! lifting tests.

use std::sync::Arc;

use super::inclusion::ShapeInclusion;
use super::shape::{parse_presentation, ShapePresentation};

const EMPTY: &str = "name: empty\nobjects:\n";

const POINT: &str = "name: point\nobjects: x\n";

const TWO_POINTS: &str = "name: two_points\nobjects: x y\n";

const H2: &str = "name: H2\nobjects: a b\nhmor: f: a -> b\n";

const V2: &str = "name: V2\nobjects: a b\nvmor: u: a => b\n";

const H3: &str = "\
name: H3
objects: x0 x1 x2
hmor: f: x0 -> x1
hmor: g: x1 -> x2
";

const BOUNDARY: &str = "\
name: boundary
objects: tl tr bl br
hmor: top: tl -> tr
hmor: bottom: bl -> br
vmor: left: tl => bl
vmor: right: tr => br
";

const SQUARE: &str = "\
name: square
objects: tl tr bl br
hmor: top: tl -> tr
hmor: bottom: bl -> br
vmor: left: tl => bl
vmor: right: tr => br
sq: alpha [top=top bottom=bottom left=left right=right]
";

const PARALLEL: &str = "\
name: parallel_squares
objects: tl tr bl br
hmor: top: tl -> tr
hmor: bottom: bl -> br
vmor: left: tl => bl
vmor: right: tr => br
sq: alpha [top=top bottom=bottom left=left right=right]
sq: alpha' [top=top bottom=bottom left=left right=right]
";

/// The walking adjoint equivalence in the vertical direction.
const VE_ADJ: &str = "\
name: VE_adj
objects: a b
vmor: u: a => b
vmor: v: b => a
sq: eta [top=id(a) bottom=id(a) left=id(a) right=u;v]
sq: eps [top=id(b) bottom=id(b) left=v;u right=id(b)]
invertible: eta horizontal
invertible: eps horizontal
relation: (eta / idsq_h(u)) | (idsq_h(u) / eps) = idsq_h(u)
relation: (idsq_h(v) / eta) | (eps / idsq_h(v)) = idsq_h(v)
";

/// The free companion pair.
const SQ2: &str = "\
name: Sq2
objects: a b
hmor: f: a -> b
vmor: u: a => b
sq: phi [top=f bottom=id(b) left=u right=id(b)]
sq: psi [top=id(a) bottom=f left=id(a) right=u]
relation: psi | phi = idsq_v(f)
relation: psi / phi = idsq_h(u)
";

/// The free conjoint pair.
const SQ2_HOP: &str = "\
name: Sq2_hop
objects: a b
hmor: f: b -> a
vmor: u: a => b
sq: eps [top=f bottom=id(b) left=id(b) right=u]
sq: eta [top=id(a) bottom=f left=u right=id(a)]
relation: eps | eta = idsq_v(f)
relation: eta / eps = idsq_h(u)
";

/// Two parallel horizontal morphisms related by an invertible 2-cell
/// `b => a`.
const H_SIGMA_I: &str = "\
name: H_SigmaI
objects: x y
hmor: a: x -> y
hmor: b: x -> y
sq: theta [top=b bottom=a left=id(x) right=id(y)]
invertible: theta vertical
";

const V_SIGMA_I: &str = "\
name: V_SigmaI
objects: x y
vmor: a: x => y
vmor: b: x => y
sq: theta [top=id(x) bottom=id(y) left=b right=a]
invertible: theta horizontal
";

/// A horizontal loop isomorphic to the identity.
const H_ALMOST_ID: &str = "\
name: H_A
objects: x
hmor: e: x -> x
sq: theta [top=e bottom=id(x) left=id(x) right=id(x)]
invertible: theta vertical
";

const V_ALMOST_ID: &str = "\
name: V_A
objects: x
vmor: e: x => x
sq: theta [top=id(x) bottom=id(x) left=e right=id(x)]
invertible: theta horizontal
";

/// A horizontal triangle commuting up to an invertible square `h => f;g`.
const H_TRIANGLE: &str = "\
name: H_T
objects: x0 x1 x2
hmor: f: x0 -> x1
hmor: g: x1 -> x2
hmor: h: x0 -> x2
sq: theta [top=h bottom=f;g left=id(x0) right=id(x2)]
invertible: theta vertical
";

const V_TRIANGLE: &str = "\
name: V_T
objects: x0 x1 x2
vmor: u: x0 => x1
vmor: d: x1 => x2
vmor: c: x0 => x2
sq: theta [top=id(x0) bottom=id(x2) left=c right=u;d]
invertible: theta horizontal
";

/// Two horizontally adjacent squares between triangles commuting up to
/// invertible squares.
const C_H: &str = "\
name: C_H
objects: x0 x1 x2 y0 y1 y2
hmor: f: x0 -> x1
hmor: g: x1 -> x2
hmor: h: x0 -> x2
hmor: f': y0 -> y1
hmor: g': y1 -> y2
hmor: h': y0 -> y2
vmor: u0: x0 => y0
vmor: u1: x1 => y1
vmor: u2: x2 => y2
sq: alpha [top=f bottom=f' left=u0 right=u1]
sq: beta [top=g bottom=g' left=u1 right=u2]
sq: theta [top=h bottom=f;g left=id(x0) right=id(x2)]
sq: theta' [top=h' bottom=f';g' left=id(y0) right=id(y2)]
invertible: theta vertical
invertible: theta' vertical
";

const C_V: &str = "\
name: C_V
objects: x0 y0 x1 y1 x2 y2
hmor: f0: x0 -> y0
hmor: f1: x1 -> y1
hmor: f2: x2 -> y2
vmor: u: x0 => x1
vmor: d: x1 => x2
vmor: c: x0 => x2
vmor: u': y0 => y1
vmor: d': y1 => y2
vmor: c': y0 => y2
sq: alpha [top=f0 bottom=f1 left=u right=u']
sq: beta [top=f1 bottom=f2 left=d right=d']
sq: theta [top=id(x0) bottom=id(x2) left=c right=u;d]
sq: theta' [top=id(y0) bottom=id(y2) left=c' right=u';d']
invertible: theta horizontal
invertible: theta' horizontal
";

/// A 2-cell between parallel 1-cells, horizontally embedded.
const SIGMA2: &str = "\
name: Sigma2
objects: a b
hmor: p: a -> b
hmor: q: a -> b
sq: theta [top=p bottom=q left=id(a) right=id(b)]
";

const SIGMA3: &str = "\
name: Sigma3
objects: a b
hmor: p: a -> b
hmor: q: a -> b
hmor: r: a -> b
sq: alpha [top=p bottom=q left=id(a) right=id(b)]
sq: beta [top=q bottom=r left=id(a) right=id(b)]
";

/// Two composable 2-cells between triangles commuting up to invertible
/// 2-cells, horizontally embedded.
const H_ISO: &str = "\
name: H_iso
objects: x0 x1 x2
hmor: f: x0 -> x1
hmor: f': x0 -> x1
hmor: g: x1 -> x2
hmor: g': x1 -> x2
hmor: h: x0 -> x2
hmor: h': x0 -> x2
sq: alpha [top=f bottom=f' left=id(x0) right=id(x1)]
sq: beta [top=g bottom=g' left=id(x1) right=id(x2)]
sq: theta [top=h bottom=f;g left=id(x0) right=id(x2)]
sq: theta' [top=h' bottom=f';g' left=id(x0) right=id(x2)]
invertible: theta vertical
invertible: theta' vertical
";

pub const SHAPE_NAMES: [&str; 22] = [
    "empty",
    "point",
    "two_points",
    "H2",
    "V2",
    "H3",
    "boundary",
    "square",
    "parallel_squares",
    "VE_adj",
    "Sq2",
    "Sq2_hop",
    "H_SigmaI",
    "V_SigmaI",
    "H_A",
    "V_A",
    "H_T",
    "V_T",
    "C_H",
    "C_V",
    "Sigma2",
    "Sigma3",
];

fn text(name: &str) -> Option<&'static str> {
    Some(match name {
        "empty" => EMPTY,
        "point" => POINT,
        "two_points" => TWO_POINTS,
        "H2" => H2,
        "V2" => V2,
        "H3" => H3,
        "boundary" => BOUNDARY,
        "square" => SQUARE,
        "parallel_squares" => PARALLEL,
        "VE_adj" => VE_ADJ,
        "Sq2" => SQ2,
        "Sq2_hop" => SQ2_HOP,
        "H_SigmaI" => H_SIGMA_I,
        "V_SigmaI" => V_SIGMA_I,
        "H_A" => H_ALMOST_ID,
        "V_A" => V_ALMOST_ID,
        "H_T" => H_TRIANGLE,
        "V_T" => V_TRIANGLE,
        "C_H" => C_H,
        "C_V" => C_V,
        "Sigma2" => SIGMA2,
        "Sigma3" => SIGMA3,
        "H_iso" => H_ISO,
        _ => return None,
    })
}

/// A builtin presentation by name; see [`SHAPE_NAMES`] (plus `H_iso`).
pub fn shape(name: &str) -> Option<Arc<ShapePresentation>> {
    text(name).map(|t| Arc::new(parse_presentation(t).expect("builtin presentation is well formed")))
}

fn inclusion(name: &str, dom: &str, cod: &str, map: &str) -> ShapeInclusion {
    ShapeInclusion::parse(name, shape(dom).unwrap(), shape(cod).unwrap(), map)
        .unwrap_or_else(|e| panic!("builtin inclusion {name}: {e}"))
}

/// The generating cofibrations: lifting against these characterizes
/// surjectivity on objects, fullness on both kinds of morphism, and full
/// faithfulness on squares.
pub fn generating_cofibrations() -> Vec<ShapeInclusion> {
    vec![
        inclusion("empty->point", "empty", "point", ""),
        inclusion("two_points->H2", "two_points", "H2", "obj: x -> a\nobj: y -> b\n"),
        inclusion("two_points->V2", "two_points", "V2", "obj: x -> a\nobj: y -> b\n"),
        inclusion("boundary->square", "boundary", "square", BOUNDARY_MAP),
        inclusion(
            "parallel_squares->square",
            "parallel_squares",
            "square",
            &format!("{BOUNDARY_MAP}sq: alpha -> alpha\nsq: alpha' -> alpha\n"),
        ),
    ]
}

const BOUNDARY_MAP: &str = "\
obj: tl -> tl
obj: tr -> tr
obj: bl -> bl
obj: br -> br
hmor: top -> top
hmor: bottom -> bottom
vmor: left -> left
vmor: right -> right
";

/// The anodyne generators: lifting against these characterizes naive
/// fibrations.
pub fn anodyne_generators() -> Vec<ShapeInclusion> {
    let v2_map = "obj: a -> a\nobj: b -> b\nvmor: u -> u\n";
    vec![
        inclusion("point->VE_adj", "point", "VE_adj", "obj: x -> b\n"),
        inclusion("V2->Sq2", "V2", "Sq2", v2_map),
        inclusion("V2->Sq2_hop", "V2", "Sq2_hop", v2_map),
        inclusion("H2->H_SigmaI", "H2", "H_SigmaI", "obj: a -> x\nobj: b -> y\nhmor: f -> a\n"),
        inclusion("V2->V_SigmaI", "V2", "V_SigmaI", "obj: a -> x\nobj: b -> y\nvmor: u -> a\n"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_shapes_parse() {
        for n in SHAPE_NAMES.iter().chain(["H_iso"].iter()) {
            let p = shape(n).unwrap();
            assert_eq!(p.name, *n);
        }
        assert_eq!(shape("C_H").unwrap().size(), (6, 6, 3, 4));
    }

    #[test]
    fn generators_are_well_formed() {
        assert_eq!(generating_cofibrations().len(), 5);
        assert_eq!(anodyne_generators().len(), 5);
    }
}
