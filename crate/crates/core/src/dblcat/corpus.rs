//! Named builtin double categories, categories and double functors used by
//! the command line tool and the test suites.

use std::sync::Arc;

use crate::error::DblCatError;

use super::category::{Cell, Finite2Category, FiniteCategory};
use super::construct::{hop, horizontal_embedding, product, sq_of_2cat, thin_closure, vertical_embedding, DoubleBuilder};
use super::double::FiniteDoubleCategory;
use super::functor::{enumerate_functors, DoubleFunctor};
use super::table::Table;

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: &[&str] = &[
    "one",
    "discrete2",
    "discrete3",
    "two_h",
    "two_v",
    "square",
    "square_boundary",
    "parallel_squares",
    "sq_two",
    "sq_two_hop",
    "sq_iso",
    "h_chaotic2",
    "h_chaotic3",
    "v_chaotic2",
    "sq_chaotic3",
    "h_three",
    "h_triangle",
    "sq_adjunction",
    "h_sigma_two",
    "h_sigma_iso",
    "v_sigma_iso",
    "h_parallel_2cells",
    "c_h",
    "c_v",
    "sq_iso_x_two_h",
];

/// The walking arrow `0 -> 1`.
pub fn arrow_category() -> FiniteCategory {
    FiniteCategory::free(&["0", "1"], &[("f", "0", "1")]).unwrap()
}

/// The walking composable pair `0 -> 1 -> 2`.
pub fn three_category() -> FiniteCategory {
    FiniteCategory::free(&["0", "1", "2"], &[("f", "0", "1"), ("g", "1", "2")]).unwrap()
}

/// `l: a -> b` and `r: b -> a` with `r;l = 1_b`, so that `l;r` is an
/// idempotent on `a`.
pub fn reflection_category() -> FiniteCategory {
    let objects = vec!["a".to_string(), "b".to_string()];
    let mors = vec![
        Cell::new("1_a", 0, 0),
        Cell::new("1_b", 1, 1),
        Cell::new("l", 0, 1),
        Cell::new("r", 1, 0),
        Cell::new("l*r", 0, 0),
    ];
    let mut comp = Table::new(5);
    let table = [
        (0, 0, 0),
        (0, 2, 2),
        (0, 4, 4),
        (1, 1, 1),
        (1, 3, 3),
        (2, 1, 2),
        (2, 3, 4),
        (3, 0, 3),
        (3, 2, 1),
        (3, 4, 3),
        (4, 0, 4),
        (4, 2, 2),
        (4, 4, 4),
    ];
    for (f, g, h) in table {
        comp.set(f, g, h);
    }
    FiniteCategory {
        objects,
        mors,
        ids: vec![0, 1],
        comp,
    }
}

/// The reflection with a unit `1_a <= l;r`, making `l` left adjoint to `r`.
pub fn adjunction_2category() -> Finite2Category {
    Finite2Category::locally_posetal(reflection_category(), &[("1_a", "l*r")]).unwrap()
}

fn build_square(with_square: bool) -> FiniteDoubleCategory {
    let objs = ["tl", "tr", "bl", "br"];
    let h = FiniteCategory::free(&objs, &[("top", "tl", "tr"), ("bottom", "bl", "br")]).unwrap();
    let v = FiniteCategory::free(&objs, &[("left", "tl", "bl"), ("right", "tr", "br")]).unwrap();
    let gens: &[(&str, &str, &str, &str, &str)] = if with_square {
        &[("alpha", "top", "bottom", "left", "right")]
    } else {
        &[]
    };
    thin_closure(&h, &v, gens).unwrap()
}

fn sigma_iso(horizontal: bool) -> FiniteDoubleCategory {
    let parallel = FiniteCategory::free(&["x", "y"], &[("a", "x", "y"), ("b", "x", "y")]).unwrap();
    let disc = FiniteCategory::discrete(&["x", "y"]);
    if horizontal {
        thin_closure(
            &parallel,
            &disc,
            &[("phi", "a", "b", "1_x", "1_y"), ("phi_inv", "b", "a", "1_x", "1_y")],
        )
        .unwrap()
    } else {
        thin_closure(
            &disc,
            &parallel,
            &[("phi", "1_x", "1_y", "a", "b"), ("phi_inv", "1_x", "1_y", "b", "a")],
        )
        .unwrap()
    }
}

fn composite_shape(horizontal: bool) -> FiniteDoubleCategory {
    let objs = ["p0", "p1", "p2", "q0", "q1", "q2"];
    let along = FiniteCategory::free(
        &objs,
        &[
            ("f", "p0", "p1"),
            ("g", "p1", "p2"),
            ("h", "p0", "p2"),
            ("f'", "q0", "q1"),
            ("g'", "q1", "q2"),
            ("h'", "q0", "q2"),
        ],
    )
    .unwrap();
    let across = FiniteCategory::free(&objs, &[("u0", "p0", "q0"), ("u1", "p1", "q1"), ("u2", "p2", "q2")]).unwrap();
    if horizontal {
        thin_closure(
            &along,
            &across,
            &[
                ("alpha", "f", "f'", "u0", "u1"),
                ("beta", "g", "g'", "u1", "u2"),
                ("theta", "h", "f*g", "1_p0", "1_p2"),
                ("theta_inv", "f*g", "h", "1_p0", "1_p2"),
                ("theta'", "h'", "f'*g'", "1_q0", "1_q2"),
                ("theta'_inv", "f'*g'", "h'", "1_q0", "1_q2"),
            ],
        )
        .unwrap()
    } else {
        thin_closure(
            &across,
            &along,
            &[
                ("alpha", "u0", "u1", "f", "f'"),
                ("beta", "u1", "u2", "g", "g'"),
                ("theta", "1_p0", "1_p2", "h", "f*g"),
                ("theta_inv", "1_p0", "1_p2", "f*g", "h"),
                ("theta'", "1_q0", "1_q2", "h'", "f'*g'"),
                ("theta'_inv", "1_q0", "1_q2", "f'*g'", "h'"),
            ],
        )
        .unwrap()
    }
}

/// Looks up a builtin double category by name.
pub fn builtin(name: &str) -> Result<FiniteDoubleCategory, DblCatError> {
    let ld = Finite2Category::locally_discrete;
    let a = match name {
        "one" => DoubleBuilder::new().object("*").build()?,
        "discrete2" => DoubleBuilder::new().objects(&["a", "b"]).build()?,
        "discrete3" => DoubleBuilder::new().objects(&["a", "b", "c"]).build()?,
        "two_h" => DoubleBuilder::new().objects(&["0", "1"]).hmor("f", "0", "1").build()?,
        "two_v" => DoubleBuilder::new().objects(&["0", "1"]).vmor("u", "0", "1").build()?,
        "square" => build_square(true),
        "square_boundary" => build_square(false),
        "parallel_squares" => DoubleBuilder::new()
            .objects(&["tl", "tr", "bl", "br"])
            .hmor("top", "tl", "tr")
            .hmor("bottom", "bl", "br")
            .vmor("left", "tl", "bl")
            .vmor("right", "tr", "br")
            .square("alpha", "top", "bottom", "left", "right")
            .square("alpha'", "top", "bottom", "left", "right")
            .build()?,
        "sq_two" => sq_of_2cat(&ld(arrow_category())),
        "sq_two_hop" => hop(&sq_of_2cat(&ld(arrow_category()))),
        "sq_iso" => sq_of_2cat(&ld(FiniteCategory::chaotic(&["0", "1"]))),
        "h_chaotic2" => horizontal_embedding(&ld(FiniteCategory::chaotic(&["0", "1"]))),
        "h_chaotic3" => horizontal_embedding(&ld(FiniteCategory::chaotic(&["0", "1", "2"]))),
        "v_chaotic2" => vertical_embedding(&ld(FiniteCategory::chaotic(&["0", "1"]))),
        "sq_chaotic3" => sq_of_2cat(&ld(FiniteCategory::chaotic(&["0", "1", "2"]))),
        "h_three" => horizontal_embedding(&ld(three_category())),
        "h_triangle" => {
            let h = FiniteCategory::free(&["0", "1", "2"], &[("f", "0", "1"), ("g", "1", "2"), ("h", "0", "2")])?;
            let v = FiniteCategory::discrete(&["0", "1", "2"]);
            thin_closure(
                &h,
                &v,
                &[("theta", "h", "f*g", "1_0", "1_2"), ("theta_inv", "f*g", "h", "1_0", "1_2")],
            )?
        }
        "sq_adjunction" => sq_of_2cat(&adjunction_2category()),
        "h_sigma_two" => {
            let h = FiniteCategory::free(&["x", "y"], &[("a", "x", "y"), ("b", "x", "y")])?;
            thin_closure(&h, &FiniteCategory::discrete(&["x", "y"]), &[("phi", "a", "b", "1_x", "1_y")])?
        }
        "h_sigma_iso" => sigma_iso(true),
        "v_sigma_iso" => sigma_iso(false),
        "h_parallel_2cells" => DoubleBuilder::new()
            .objects(&["x", "y"])
            .hmor("a", "x", "y")
            .hmor("b", "x", "y")
            .square("phi", "a", "b", "1_x", "1_y")
            .square("psi", "a", "b", "1_x", "1_y")
            .build()?,
        "c_h" => composite_shape(true),
        "c_v" => composite_shape(false),
        "sq_iso_x_two_h" => product(&builtin("sq_iso")?, &builtin("two_h")?),
        _ => return Err(DblCatError::UnknownBuiltin(name.to_string())),
    };
    Ok(a)
}

/// All builtin double categories, in [`BUILTIN_NAMES`] order.
pub fn builtins() -> Vec<(&'static str, Arc<FiniteDoubleCategory>)> {
    BUILTIN_NAMES
        .iter()
        .map(|&n| (n, Arc::new(builtin(n).expect("builtin is valid"))))
        .collect()
}

/// Names accepted by [`builtin_category`].
pub const CATEGORY_NAMES: &[&str] = &["one", "two", "three", "chaotic2", "chaotic3", "discrete2", "reflection"];

pub fn builtin_category(name: &str) -> Result<FiniteCategory, DblCatError> {
    Ok(match name {
        "one" => FiniteCategory::discrete(&["*"]),
        "two" => arrow_category(),
        "three" => three_category(),
        "chaotic2" => FiniteCategory::chaotic(&["0", "1"]),
        "chaotic3" => FiniteCategory::chaotic(&["0", "1", "2"]),
        "discrete2" => FiniteCategory::discrete(&["a", "b"]),
        "reflection" => reflection_category(),
        _ => return Err(DblCatError::UnknownBuiltin(name.to_string())),
    })
}

/// A corpus of named double functors between builtins: identities, maps to
/// the terminal double category, collapses, inclusions, projections and
/// every functor between a few small pairs.
pub fn functor_corpus() -> Vec<(String, DoubleFunctor)> {
    let all = builtins();
    let get = |n: &str| all.iter().find(|(m, _)| *m == n).unwrap().1.clone();
    let one = get("one");
    let mut out: Vec<(String, DoubleFunctor)> = Vec::new();
    for n in ["one", "two_h", "square", "sq_iso", "parallel_squares", "c_h"] {
        out.push((format!("id_{n}"), DoubleFunctor::identity(get(n))));
    }
    for (n, a) in &all {
        if *n != "one" {
            out.push((format!("{n}->one"), DoubleFunctor::to_terminal(a.clone(), one.clone())));
        }
    }
    let named = |src: &str, tgt: &str, pick: &dyn Fn(&DoubleFunctor) -> bool| -> Option<DoubleFunctor> {
        enumerate_functors(&get(src), &get(tgt)).into_iter().find(|f| pick(f))
    };
    let mut push = |name: &str, f: Option<DoubleFunctor>| {
        out.push((name.to_string(), f.unwrap_or_else(|| panic!("corpus functor {name} exists"))));
    };
    push(
        "parallel_squares->square",
        named("parallel_squares", "square", &|f| f.obj == [0, 1, 2, 3]),
    );
    push(
        "square->parallel_squares",
        named("square", "parallel_squares", &|f| {
            f.obj == [0, 1, 2, 3] && f.sq.iter().any(|&s| f.cod.squares()[s].name == "alpha")
        }),
    );
    push(
        "square_boundary->square",
        named("square_boundary", "square", &|f| f.obj == [0, 1, 2, 3]),
    );
    push(
        "h_sigma_iso->two_h",
        named("h_sigma_iso", "two_h", &|f| f.obj == [0, 1]),
    );
    push(
        "v_sigma_iso->two_v",
        named("v_sigma_iso", "two_v", &|f| f.obj == [0, 1]),
    );
    push(
        "h_sigma_two->two_h",
        named("h_sigma_two", "two_h", &|f| f.obj == [0, 1]),
    );
    push(
        "h_triangle->h_three",
        named("h_triangle", "h_three", &|f| f.obj == [0, 1, 2]),
    );
    push(
        "h_three->h_triangle",
        named("h_three", "h_triangle", &|f| f.obj == [0, 1, 2]),
    );
    push("two_h->h_chaotic2", named("two_h", "h_chaotic2", &|f| f.obj == [0, 1]));
    push("two_v->v_chaotic2", named("two_v", "v_chaotic2", &|f| f.obj == [0, 1]));
    push("sq_two->sq_iso", named("sq_two", "sq_iso", &|f| f.obj == [0, 1]));
    push("h_chaotic2->sq_iso", named("h_chaotic2", "sq_iso", &|f| f.obj == [0, 1]));
    push("sq_chaotic3->sq_iso", named("sq_chaotic3", "sq_iso", &|f| f.obj == [0, 1, 1]));
    push("sq_iso->sq_chaotic3", named("sq_iso", "sq_chaotic3", &|f| f.obj == [0, 2]));
    push("h_chaotic3->h_chaotic2", named("h_chaotic3", "h_chaotic2", &|f| f.obj == [1, 0, 0]));
    push("one->discrete2", named("one", "discrete2", &|_| true));
    push("discrete2->two_h", named("discrete2", "two_h", &|f| f.obj == [0, 1]));
    push("discrete2->two_v", named("discrete2", "two_v", &|f| f.obj == [0, 1]));
    push("sq_adjunction->sq_iso", named("sq_adjunction", "sq_iso", &|f| f.obj == [0, 1]));
    let p = get("sq_iso_x_two_h");
    let proj = |k: usize| {
        let tgt = if k == 0 { get("sq_iso") } else { get("two_h") };
        enumerate_functors(&p, &tgt)
            .into_iter()
            .find(|f| {
                (0..p.objects().len()).all(|i| f.obj[i] == if k == 0 { i / 2 } else { i % 2 })
                    && f.h.iter().enumerate().all(|(i, &j)| {
                        let (x, y) = split_pair(&p.hmors()[i].name);
                        f.cod.hmors()[j].name == if k == 0 { x } else { y }
                    })
            })
            .unwrap()
    };
    out.push(("sq_iso_x_two_h->sq_iso".into(), proj(0)));
    out.push(("sq_iso_x_two_h->two_h".into(), proj(1)));
    for (src, tgt) in [("two_h", "h_chaotic2"), ("sq_two", "sq_iso"), ("discrete2", "sq_iso")] {
        for (k, f) in enumerate_functors(&get(src), &get(tgt)).into_iter().enumerate() {
            out.push((format!("{src}->{tgt}#{k}"), f));
        }
    }
    out
}

/// Splits a product cell name `<x,y>` at its top-level comma.
fn split_pair(name: &str) -> (&str, &str) {
    let inner = &name[1..name.len() - 1];
    let mut depth = 0i32;
    for (i, c) in inner.char_indices() {
        match c {
            '<' => depth += 1,
            '>' => depth -= 1,
            ',' if depth == 0 => return (&inner[..i], &inner[i + 1..]),
            _ => {}
        }
    }
    (inner, "")
}

/// Looks up a corpus functor by name.
pub fn builtin_functor(name: &str) -> Result<DoubleFunctor, DblCatError> {
    if let Some(n) = name.strip_prefix("id_") {
        return Ok(DoubleFunctor::identity(Arc::new(builtin(n)?)));
    }
    if let Some(n) = name.strip_suffix("->one") {
        if BUILTIN_NAMES.contains(&n) {
            return Ok(DoubleFunctor::to_terminal(Arc::new(builtin(n)?), Arc::new(builtin("one")?)));
        }
    }
    functor_corpus()
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, f)| f)
        .ok_or_else(|| DblCatError::UnknownBuiltin(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dblcat::{is_isomorphism, validate_double_category, validate_double_functor};

    #[test]
    fn builtins_are_valid() {
        for (n, a) in builtins() {
            validate_double_category(&a).unwrap_or_else(|e| panic!("{n}: {e}"));
        }
    }

    #[test]
    fn sizes() {
        let size = |n: &str| builtin(n).unwrap().size();
        assert_eq!(size("one"), (1, 1, 1, 1));
        assert_eq!(size("square"), (4, 6, 6, 9));
        assert_eq!(size("square_boundary"), (4, 6, 6, 8));
        assert_eq!(size("parallel_squares"), (4, 6, 6, 10));
        assert_eq!(size("sq_chaotic3").3, 81);
        assert_eq!(size("sq_iso").3, 16);
    }

    #[test]
    fn square_is_the_product_of_the_arrows() {
        let s = Arc::new(builtin("square").unwrap());
        let p = Arc::new(product(&builtin("two_h").unwrap(), &builtin("two_v").unwrap()));
        assert!(enumerate_functors(&s, &p).iter().any(is_isomorphism));
    }

    #[test]
    fn corpus_functors_are_valid() {
        let c = functor_corpus();
        assert!(c.len() >= 30, "{}", c.len());
        for (n, f) in &c {
            validate_double_functor(f).unwrap_or_else(|e| panic!("{n}: {e}"));
        }
        let mut names: Vec<&String> = c.iter().map(|(n, _)| n).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), c.len());
    }
}
