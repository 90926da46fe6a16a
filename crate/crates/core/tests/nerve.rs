use std::sync::Arc;

use dblfolds::classify::{hom_solver, is_trivial_fibration, shape};
use dblfolds::dblcat::corpus::{arrow_category, builtin, builtin_category, builtins, functor_corpus, CATEGORY_NAMES};
use dblfolds::dblcat::{enumerate_functors, horizontal_embedding, DoubleFunctor, Finite2Category};
use dblfolds::nerve::{builtin_diagram, check_latching_table, nerve, nerve_map, nerve_of_category, DIAGRAM_NAMES};
use dblfolds::presheaf::{is_fiberwise_surjective, is_l_structure, validate_presheaf, NatTransf};

fn count(p: &dblfolds::presheaf::Presheaf, kind: &str) -> usize {
    p.carrier(p.signature().kind(kind).unwrap()).len()
}

#[test]
fn builtin_diagrams_are_functorial() {
    for n in DIAGRAM_NAMES {
        builtin_diagram(n).unwrap_or_else(|e| panic!("{n}: {e}"));
    }
    assert!(builtin_diagram("nope").is_err());
}

#[test]
fn nerve_of_the_terminal_is_terminal() {
    let one = builtin("one").unwrap();
    for n in DIAGRAM_NAMES {
        let p = nerve(&one, &builtin_diagram(n).unwrap()).unwrap();
        assert!(p.carriers().iter().all(|c| c.len() == 1), "{n}");
    }
}

#[test]
fn nerve_of_the_walking_arrow() {
    let p = nerve_of_category(&arrow_category(), &builtin_diagram("cat").unwrap()).unwrap();
    assert_eq!(count(&p, "O"), 2);
    assert_eq!(count(&p, "A"), 3);
    assert_eq!(count(&p, "T'"), 4);
    assert_eq!(count(&p, "E'"), 3);
    assert_eq!(count(&p, "I'"), 2);
}

#[test]
fn nerve_of_the_free_square() {
    let d = builtin_diagram("dblcat").unwrap();
    let s = builtin("square").unwrap();
    let p = nerve(&s, &d).unwrap();
    assert_eq!(count(&p, "S"), s.squares().len());
    assert_eq!(count(&p, "E'"), s.squares().len());
}

#[test]
fn nerves_are_l_structures() {
    for n in DIAGRAM_NAMES {
        let d = builtin_diagram(n).unwrap();
        for (m, x) in builtins() {
            let p = nerve(&x, &d).unwrap();
            assert!(validate_presheaf(&p).is_ok(), "{n} {m}");
            is_l_structure(&p).unwrap_or_else(|e| panic!("{n} {m}: {e:?}"));
        }
    }
}

#[test]
fn cat_nerve_relation_kinds() {
    // E' is the diagonal on arrows and I' picks identities
    let d = builtin_diagram("cat").unwrap();
    for n in CATEGORY_NAMES {
        let c = builtin_category(n).unwrap();
        let p = nerve_of_category(&c, &d).unwrap();
        assert_eq!(count(&p, "E'"), c.mors.len(), "{n}");
        assert_eq!(count(&p, "I'"), c.objects.len(), "{n}");
        assert_eq!(count(&p, "A"), c.mors.len(), "{n}");
    }
}

#[test]
fn nerve_map_is_functorial() {
    let d = builtin_diagram("dblcat").unwrap();
    for (n, f) in functor_corpus().into_iter().take(20) {
        let id = nerve_map(&DoubleFunctor::identity(f.dom.clone()), &d).unwrap();
        assert_eq!(id.components(), NatTransf::identity(id.source()).components(), "{n}");
        let g = DoubleFunctor::to_terminal(f.cod.clone(), Arc::new(builtin("one").unwrap()));
        let composite = nerve_map(&f.then(&g), &d).unwrap();
        let two_step = nerve_map(&f, &d).unwrap().then(&nerve_map(&g, &d).unwrap()).unwrap();
        assert_eq!(composite.components(), two_step.components(), "{n}");
    }
}

#[test]
fn trivial_fibrations_give_fiberwise_surjections() {
    let d = builtin_diagram("dblcat").unwrap();
    let mut checked = 0;
    for (n, f) in functor_corpus() {
        if is_trivial_fibration(&f).is_ok() {
            is_fiberwise_surjective(&nerve_map(&f, &d).unwrap()).unwrap_or_else(|e| panic!("{n}: {e:?}"));
            checked += 1;
        }
    }
    assert!(checked >= 5);
}

#[test]
fn vertical_arrow_to_one_is_not_fiberwise_surjective() {
    let d = builtin_diagram("dblcat").unwrap();
    let f = DoubleFunctor::to_terminal(Arc::new(builtin("two_v").unwrap()), Arc::new(builtin("one").unwrap()));
    let err = is_fiberwise_surjective(&nerve_map(&f, &d).unwrap()).unwrap_err();
    assert_eq!(err.kind, "H");
}

#[test]
fn surjective_fully_faithful_functors_give_fiberwise_surjections() {
    let d = builtin_diagram("cat").unwrap();
    let emb = |n: &str| Arc::new(horizontal_embedding(&Finite2Category::locally_discrete(builtin_category(n).unwrap())));
    let mut checked = 0;
    for a in CATEGORY_NAMES {
        for b in CATEGORY_NAMES {
            let (x, y) = (emb(a), emb(b));
            for f in enumerate_functors(&x, &y) {
                let surjective = (0..y.objects().len()).all(|o| f.obj.contains(&o));
                let fully_faithful = (0..x.objects().len()).all(|p| {
                    (0..x.objects().len()).all(|q| {
                        let mut img: Vec<usize> = x.hhom(p, q).iter().map(|&m| f.h[m]).collect();
                        img.sort_unstable();
                        let mut want = y.hhom(f.obj[p], f.obj[q]).to_vec();
                        want.sort_unstable();
                        img == want
                    })
                });
                let fw = is_fiberwise_surjective(&nerve_map(&f, &d).unwrap()).is_ok();
                if surjective && fully_faithful {
                    assert!(fw, "{a} -> {b}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked >= 5);
}

#[test]
fn latching_table() {
    let d = builtin_diagram("dblcat").unwrap();
    let all = builtins();
    let instances: Vec<_> = all.iter().map(|(n, x)| (*n, &**x)).collect();
    let report = check_latching_table(&d, &instances).unwrap();
    assert_eq!(report.rows.len(), 5);
    assert_eq!(report.rows[3].weights, [4, 2, 2, 0]);
}

#[test]
fn nerve_at_square_counts_boundary_quadruples() {
    let b = shape("boundary").unwrap();
    let d = builtin_diagram("dblcat").unwrap();
    for (n, x) in builtins() {
        let p = nerve(&x, &d).unwrap();
        let s = p.signature().kind("S").unwrap();
        let m = dblfolds::presheaf::matching_object(&p, s);
        assert_eq!(m.families.len(), hom_solver(&b, &x).len(), "{n}");
    }
}

#[test]
fn broken_diagram_is_not_functorial() {
    let mut d = builtin_diagram("dblcat").unwrap();
    let sig = d.signature.clone();
    let k = sig.kind("H_comp'").unwrap();
    let (l, r) = (sig.arrow_from(k, "l").unwrap(), sig.arrow_from(k, "r").unwrap());
    d.arrows.swap(l, r);
    assert!(d.check_functoriality(&["sq_iso"]).is_err());

    let mut d = builtin_diagram("twocat").unwrap();
    let k = d.signature.kind("H'").unwrap();
    let c = d.signature.arrow_from(k, "c").unwrap();
    let l = d.signature.arrow_from(k, "l").unwrap();
    // same endpoints on objects, different 1-cells
    d.arrows[c] = d.arrows[l].clone();
    assert!(d.check_functoriality(&["sq_iso", "h_triangle"]).is_err());
}
