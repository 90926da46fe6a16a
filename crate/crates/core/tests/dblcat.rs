use std::sync::Arc;

use dblfolds::DblCatError;
use dblfolds::dblcat::corpus::{self, builtin, builtins};
use dblfolds::dblcat::{
    enumerate_functors, extract_2category, find_companions, find_conjoints, h_two_isos, hop, is_equipment,
    is_isomorphism, is_vertical_equivalence, is_weakly_vertically_invertible, sq_of_2cat, validate_double_category, validate_double_functor, ConjointPair,
    Direction, DoubleBuilder, DoubleFunctor, EquipmentFailure, Finite2Category, FiniteCategory, FiniteDoubleCategory,
};

fn vgen(a: &FiniteDoubleCategory, name: &str) -> usize {
    a.vmor(name).unwrap()
}

/// Conjoints searched directly from their defining equations.
fn conjoints_direct(a: &FiniteDoubleCategory, u: usize) -> Vec<ConjointPair> {
    let m = &a.vmors()[u];
    let (src, tgt) = (m.src, m.tgt);
    let mut out = Vec::new();
    for f in 0..a.hmors().len() {
        if a.hmors()[f].src != tgt || a.hmors()[f].tgt != src {
            continue;
        }
        for epsilon in 0..a.squares().len() {
            if a.squares()[epsilon].boundary() != [f, a.hid(tgt), a.vid(tgt), u] {
                continue;
            }
            for eta in 0..a.squares().len() {
                if a.squares()[eta].boundary() != [a.hid(src), f, u, a.vid(src)] {
                    continue;
                }
                if a.hcomp_sq(epsilon, eta) == Some(a.sq_vid(f)) && a.vcomp_sq(eta, epsilon) == Some(a.sq_hid(u)) {
                    out.push(ConjointPair { f, epsilon, eta });
                }
            }
        }
    }
    out
}

#[test]
fn free_square_has_one_nonidentity_square() {
    let s = builtin("square").unwrap();
    validate_double_category(&s).unwrap();
    let nonid = (0..s.squares().len())
        .filter(|&q| {
            let sq = &s.squares()[q];
            s.sq_hid(sq.left) != q && s.sq_vid(sq.top) != q
        })
        .count();
    assert_eq!(nonid, 1);
}

#[test]
fn broken_interchange_is_reported() {
    // one globular square x with x|x = x but x/x = identity
    let err = DoubleBuilder::new()
        .object("*")
        .square("x", "1_*", "1_*", "1_*", "1_*")
        .sq_hcomp("x", "x", "x")
        .sq_vcomp("x", "x", "1_*")
        .build()
        .unwrap_err();
    assert!(matches!(err, DblCatError::LawViolation { ref kind, .. } if kind.contains("interchange")), "{err}");
}

#[test]
fn sq_of_two_sizes() {
    let a = builtin("sq_two").unwrap();
    let (o, h, v, _) = a.size();
    assert_eq!((o, h, v), (2, 3, 3));
    let pt = sq_of_2cat(&Finite2Category::locally_discrete(FiniteCategory::discrete(&["*"])));
    assert_eq!(pt.size(), builtin("one").unwrap().size());
}

#[test]
fn hop_examples() {
    for (n, a) in builtins() {
        assert_eq!(hop(&hop(&a)), *a, "{n}");
    }
    assert_eq!(hop(&builtin("one").unwrap()), builtin("one").unwrap());
}

#[test]
fn companions_of_the_generator() {
    let a = builtin("sq_two").unwrap();
    assert_eq!(find_companions(&a, vgen(&a, "f")).len(), 1);
    let v = builtin("two_v").unwrap();
    assert!(find_companions(&v, vgen(&v, "u")).is_empty());
    let h = builtin("sq_two_hop").unwrap();
    assert_eq!(find_conjoints(&h, vgen(&h, "f")).len(), 1);
}

#[test]
fn identities_are_self_companion_and_self_conjoint() {
    for (n, a) in builtins() {
        for o in 0..a.objects().len() {
            let u = a.vid(o);
            assert!(find_companions(&a, u).iter().any(|c| c.f == a.hid(o)), "{n}");
            assert!(find_conjoints(&a, u).iter().any(|c| c.f == a.hid(o)), "{n}");
        }
    }
}

#[test]
fn conjoints_in_sq_of_a_2category_are_adjunctions() {
    let a = builtin("sq_adjunction").unwrap();
    // l is left adjoint to r, and r has no right adjoint
    assert!(!find_conjoints(&a, vgen(&a, "l")).is_empty());
    assert!(find_conjoints(&a, vgen(&a, "r")).is_empty());
    assert!(find_conjoints(&a, vgen(&a, "l")).iter().all(|c| a.hmors()[c.f].name == "r"));
    assert!(matches!(is_equipment(&a), Err(EquipmentFailure::NoConjoint(_))));
}

#[test]
fn conjoint_duality() {
    for (n, a) in builtins() {
        for u in 0..a.vmors().len() {
            let mut x = find_conjoints(&a, u);
            let mut y = conjoints_direct(&a, u);
            x.sort();
            y.sort();
            assert_eq!(x, y, "{n}, {}", a.vmors()[u].name);
        }
    }
}

#[test]
fn equipment_examples() {
    assert!(is_equipment(&builtin("one").unwrap()).is_ok());
    let v = builtin("two_v").unwrap();
    assert_eq!(is_equipment(&v), Err(EquipmentFailure::NoCompanion(vgen(&v, "u"))));
    assert!(is_equipment(&builtin("sq_iso").unwrap()).is_ok());
    for (n, a) in builtins() {
        assert_eq!(is_equipment(&a).is_ok(), is_equipment(&hop(&a)).is_ok(), "{n}");
    }
}

#[test]
fn companions_are_unique_up_to_isomorphism() {
    for (n, a) in builtins() {
        for u in 0..a.vmors().len() {
            let cs = find_companions(&a, u);
            for c in &cs {
                for d in &cs {
                    assert!(!h_two_isos(&a, c.f, d.f).is_empty(), "{n}");
                }
            }
        }
    }
}

#[test]
fn weak_vertical_invertibility() {
    for (n, a) in builtins() {
        for f in 0..a.hmors().len() {
            assert!(is_weakly_vertically_invertible(&a, a.sq_vid(f)).is_some(), "{n}");
        }
    }
    let s = builtin("square").unwrap();
    assert!(is_weakly_vertically_invertible(&s, s.square("alpha").unwrap()).is_none());
    let i = builtin("sq_iso").unwrap();
    for q in 0..i.squares().len() {
        assert!(is_weakly_vertically_invertible(&i, q).is_some());
    }
}

#[test]
fn vertical_equivalences() {
    for (_, a) in builtins() {
        for o in 0..a.objects().len() {
            assert!(is_vertical_equivalence(&a, a.vid(o)).is_some());
        }
    }
    let v = builtin("two_v").unwrap();
    assert!(is_vertical_equivalence(&v, vgen(&v, "u")).is_none());
    let i = builtin("sq_iso").unwrap();
    for u in 0..i.vmors().len() {
        assert!(is_vertical_equivalence(&i, u).is_some());
    }
}

fn same_2category(a: &Finite2Category, b: &Finite2Category) -> bool {
    // cells of `a` are named `x<...>` for the cell `x` of `b`
    let strip = |s: &str| s.split('<').next().unwrap().to_string();
    a.base == b.base
        && a.cells.len() == b.cells.len()
        && a.cells.iter().zip(&b.cells).all(|(x, y)| strip(&x.name) == y.name && x.src == y.src && x.tgt == y.tgt)
        && a.vcomp2 == b.vcomp2
        && a.hcomp2 == b.hcomp2
        && a.id2 == b.id2
}

#[test]
fn extract_examples() {
    let h2 = extract_2category(&builtin("two_h").unwrap(), Direction::Horizontal);
    assert_eq!(h2.base.mors.len(), 3);
    assert_eq!(h2.cells.len(), 3);
    let v2 = extract_2category(&builtin("two_v").unwrap(), Direction::Horizontal);
    assert_eq!(v2.base.mors.len(), 2);
    assert_eq!(v2.cells.len(), 2);
    for c in [
        Finite2Category::locally_discrete(corpus::arrow_category()),
        Finite2Category::locally_discrete(FiniteCategory::chaotic(&["0", "1", "2"])),
        corpus::adjunction_2category(),
    ] {
        c.validate().unwrap();
        let back = extract_2category(&sq_of_2cat(&c), Direction::Horizontal);
        back.validate().unwrap();
        assert!(same_2category(&back, &c));
    }
}

#[test]
fn functors_to_the_terminal_are_valid() {
    let one = Arc::new(builtin("one").unwrap());
    for (n, a) in builtins() {
        validate_double_functor(&DoubleFunctor::to_terminal(a, one.clone())).unwrap_or_else(|e| panic!("{n}: {e}"));
    }
}

#[test]
fn broken_functor_is_rejected() {
    let a = Arc::new(builtin("h_three").unwrap());
    let mut f = DoubleFunctor::identity(a.clone());
    let g = a.hmor("g").unwrap();
    let fg = a.hmor("f*g").unwrap();
    f.h[fg] = g;
    assert!(validate_double_functor(&f).is_err());
}

#[test]
fn free_square_is_not_sq_of_the_arrow() {
    let s = Arc::new(builtin("square").unwrap());
    let sq2 = Arc::new(builtin("sq_two").unwrap());
    // Sq of the walking arrow is not the free square: it has more morphisms
    assert!(!enumerate_functors(&s, &sq2).iter().any(is_isomorphism));
}
