use std::sync::Arc;

use dblfolds::classify::{
    anodyne_generators, classify, find_lift, generating_cofibrations, has_rlp, has_rlp_all, hom_solver,
    hom_solver_filtered, is_double_biequivalence, is_naive_fibration, is_trivial_fibration, is_valid_assignment,
    shape, Assignment, GenKind, ShapeInclusion,
};
use dblfolds::dblcat::corpus::{builtin, builtins, functor_corpus};
use dblfolds::dblcat::{enumerate_functors, find_companions, find_conjoints, is_equipment, DoubleFunctor};
use proptest::prelude::*;

fn terminal(name: &str) -> DoubleFunctor {
    DoubleFunctor::to_terminal(Arc::new(builtin(name).unwrap()), Arc::new(builtin("one").unwrap()))
}

fn inclusion(name: &str, family: &[ShapeInclusion]) -> ShapeInclusion {
    family.iter().find(|i| i.name == name).unwrap().clone()
}

/// Presentations paired with the builtin double category they present.
const PRESENTED: &[(&str, &str)] = &[
    ("point", "one"),
    ("two_points", "discrete2"),
    ("H2", "two_h"),
    ("V2", "two_v"),
    ("H3", "h_three"),
    ("boundary", "square_boundary"),
    ("square", "square"),
    ("parallel_squares", "parallel_squares"),
    ("Sq2", "sq_two"),
    ("Sq2_hop", "sq_two_hop"),
    ("H_SigmaI", "h_sigma_iso"),
    ("V_SigmaI", "v_sigma_iso"),
    ("H_T", "h_triangle"),
    ("Sigma2", "h_sigma_two"),
    ("C_H", "c_h"),
    ("C_V", "c_v"),
];

#[test]
fn solver_counts_match_functor_enumeration() {
    for (p, d) in PRESENTED {
        let pres = shape(p).unwrap();
        let dom = Arc::new(builtin(d).unwrap());
        for (n, x) in builtins() {
            if x.size().3 > 60 && dom.size().3 > 12 {
                continue;
            }
            let sols = hom_solver(&pres, &x);
            assert!(sols.iter().all(|a| is_valid_assignment(&pres, &x, a)), "{p} -> {n}");
            assert_eq!(sols.len(), enumerate_functors(&dom, &x).len(), "{p} -> {n}");
        }
    }
}

#[test]
fn adjoint_equivalences() {
    let p = shape("VE_adj").unwrap();
    assert_eq!(hom_solver(&p, &builtin("v_chaotic2").unwrap()).len(), 4);
    assert_eq!(hom_solver(&p, &builtin("sq_iso").unwrap()).len(), 4);
    assert_eq!(hom_solver(&p, &builtin("two_v").unwrap()).len(), 2);
    assert_eq!(hom_solver(&p, &builtin("h_chaotic2").unwrap()).len(), 2);
}

#[test]
fn h2_homs_are_horizontal_morphisms() {
    let p = shape("H2").unwrap();
    for (n, x) in builtins() {
        let mut got: Vec<usize> = hom_solver(&p, &x).iter().map(|a| a.h[0]).collect();
        got.sort_unstable();
        assert_eq!(got, (0..x.hmors().len()).collect::<Vec<_>>(), "{n}");
    }
}

#[test]
fn solutions_are_sorted_and_distinct() {
    for name in ["Sq2", "VE_adj", "C_H", "square"] {
        let p = shape(name).unwrap();
        for (n, x) in builtins() {
            let sols = hom_solver(&p, &x);
            let mut sorted = sols.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), sols.len(), "{name} -> {n}");
            assert_eq!(hom_solver(&p, &x), sols, "deterministic order");
        }
    }
}

#[test]
fn adjoint_equivalence_into_sq_of_the_chaotic_category() {
    assert!(!hom_solver(&shape("VE_adj").unwrap(), &builtin("sq_iso").unwrap()).is_empty());
}

#[test]
fn inclusions_restrict_functors() {
    let probes = ["one", "sq_iso", "sq_two", "c_h", "sq_adjunction", "h_sigma_iso", "v_sigma_iso"];
    for i in generating_cofibrations().iter().chain(anodyne_generators().iter()) {
        i.validate().unwrap();
        for p in probes {
            i.check_on(&builtin(p).unwrap()).unwrap_or_else(|e| panic!("{} on {p}: {e}", i.name));
        }
    }
}

/// Companion lifting: maps out of the free companion pair extending a
/// given vertical morphism are exactly its companion pairs.
#[test]
fn lifts_along_the_free_companion_are_companions() {
    let sq2 = shape("Sq2").unwrap();
    let hop = shape("Sq2_hop").unwrap();
    let u = sq2.vgen("u").unwrap();
    for (n, a) in builtins() {
        for v in 0..a.vmors().len() {
            let pin = |k: GenKind, g: usize, val: usize| k != GenKind::Vmor || g != u || val == v;
            let lifts = hom_solver_filtered(&sq2, &a, Some(&pin));
            let mut got: Vec<_> = lifts
                .iter()
                .map(|l| (l.h[0], l.sq[sq2.sqgen("phi").unwrap()], l.sq[sq2.sqgen("psi").unwrap()]))
                .collect();
            let mut want: Vec<_> = find_companions(&a, v).iter().map(|c| (c.f, c.phi, c.psi)).collect();
            got.sort();
            want.sort();
            assert_eq!(got, want, "{n}: {}", a.vmors()[v].name);

            let lifts = hom_solver_filtered(&hop, &a, Some(&pin));
            let mut got: Vec<_> = lifts
                .iter()
                .map(|l| (l.h[0], l.sq[hop.sqgen("eps").unwrap()], l.sq[hop.sqgen("eta").unwrap()]))
                .collect();
            let mut want: Vec<_> = find_conjoints(&a, v).iter().map(|c| (c.f, c.epsilon, c.eta)).collect();
            got.sort();
            want.sort();
            assert_eq!(got, want, "{n}: {}", a.vmors()[v].name);
        }
    }
}

#[test]
fn lifting_square_for_companions() {
    // A -> 1 lifts against V2 -> Sq2 exactly when every vertical has a companion
    let j = inclusion("V2->Sq2", &anodyne_generators());
    for (n, a) in builtins() {
        let f = terminal(n);
        let all_have = (0..a.vmors().len()).all(|u| !find_companions(&a, u).is_empty());
        assert_eq!(has_rlp(&f, &j).is_ok(), all_have, "{n}");
    }
}

#[test]
fn trivial_fibrations_are_characterized_by_lifting() {
    let gens = generating_cofibrations();
    let corpus = functor_corpus();
    assert!(corpus.len() >= 30);
    for (n, f) in &corpus {
        assert_eq!(is_trivial_fibration(f).is_ok(), has_rlp_all(f, &gens).is_ok(), "{n}");
    }
}

#[test]
fn equipments_are_naive_fibrant() {
    let gens = anodyne_generators();
    let all = builtins();
    assert!(all.len() >= 15);
    for (n, a) in &all {
        assert_eq!(is_equipment(a).is_ok(), has_rlp_all(&terminal(n), &gens).is_ok(), "{n}");
    }
}

#[test]
fn reports_are_consistent_on_the_corpus() {
    for (n, f) in functor_corpus() {
        let r = classify(&f);
        for c in &r.consistency {
            assert!(c.holds, "{n}: {}", c.name);
        }
    }
}

#[test]
fn isomorphisms_lift_against_everything() {
    let gens: Vec<_> = generating_cofibrations().into_iter().chain(anodyne_generators()).collect();
    for n in ["one", "square", "sq_iso", "c_h", "h_sigma_iso"] {
        let f = DoubleFunctor::identity(Arc::new(builtin(n).unwrap()));
        for i in &gens {
            assert!(has_rlp(&f, i).is_ok(), "{n} against {}", i.name);
        }
        let r = classify(&f);
        assert!(r.is_trivial_fibration() && r.is_naive_fibration() && r.is_biequivalence(), "{n}");
    }
}

#[test]
fn two_points_to_one_fails_to_lift_a_horizontal_morphism() {
    let f = terminal("discrete2");
    let i = inclusion("two_points->H2", &generating_cofibrations());
    let problem = has_rlp(&f, &i).unwrap_err();
    assert_ne!(problem.top.obj[0], problem.top.obj[1]);
    assert_eq!(is_trivial_fibration(&f).unwrap_err().tag, "hmor");
    assert!(is_double_biequivalence(&f).is_err());
}

#[test]
fn vertical_arrow_to_one() {
    let f = terminal("two_v");
    // no horizontal morphism between the two objects upstairs
    assert!(has_rlp(&f, &inclusion("two_points->H2", &generating_cofibrations())).is_err());
    assert_eq!(is_trivial_fibration(&f).unwrap_err().tag, "hmor");
    // the identity downstairs has a companion, the generator upstairs has none
    assert_eq!(is_naive_fibration(&f).unwrap_err().tag, "f2");
    // nothing goes back from the target of the generator to its source
    assert_eq!(is_double_biequivalence(&f).unwrap_err().tag, "w2");
    // and nothing vertical from the target back to the source
    assert!(has_rlp(&f, &inclusion("two_points->V2", &generating_cofibrations())).is_err());
    for i in ["empty->point", "boundary->square", "parallel_squares->square"] {
        assert!(has_rlp(&f, &inclusion(i, &generating_cofibrations())).is_ok(), "{i}");
    }
}

#[test]
fn sq_of_chaotic_to_one_is_a_trivial_fibration() {
    let r = classify(&terminal("sq_iso"));
    assert!(r.is_trivial_fibration() && r.is_naive_fibration() && r.is_biequivalence());
    assert!(r.is_consistent());
    assert_eq!(r.equipments, (true, true));
    assert!(r.w3_prime.unwrap().is_ok());
}

#[test]
fn lifts_restrict_to_the_given_square() {
    let f = terminal("sq_iso");
    for i in generating_cofibrations().iter().chain(anodyne_generators().iter()) {
        for bottom in hom_solver(&i.cod, &f.cod) {
            let r = i.restrict(&f.cod, &bottom).unwrap();
            for top in hom_solver(&i.dom, &f.dom) {
                if top.obj.iter().map(|&o| f.obj[o]).collect::<Vec<_>>() != r.obj {
                    continue;
                }
                let l = find_lift(&f, i, &top, &bottom).unwrap();
                assert_eq!(i.restrict(&f.dom, &l).as_ref(), Some(&top));
                let pushed = Assignment {
                    obj: l.obj.iter().map(|&o| f.obj[o]).collect(),
                    h: l.h.iter().map(|&m| f.h[m]).collect(),
                    v: l.v.iter().map(|&m| f.v[m]).collect(),
                    sq: l.sq.iter().map(|&m| f.sq[m]).collect(),
                };
                assert_eq!(pushed, bottom);
            }
        }
    }
}

#[test]
fn trivial_fibrations_compose() {
    let gens = generating_cofibrations();
    let tfs: Vec<_> = functor_corpus()
        .into_iter()
        .filter(|(_, f)| is_trivial_fibration(f).is_ok())
        .collect();
    let mut composed = 0;
    for (n, f) in &tfs {
        for (m, g) in &tfs {
            if *f.cod == *g.dom {
                let h = f.then(g);
                assert!(is_trivial_fibration(&h).is_ok(), "{n} then {m}");
                assert!(has_rlp_all(&h, &gens).is_ok(), "{n} then {m}");
                composed += 1;
            }
        }
    }
    assert!(composed > 0);
}

const SMALL: &[&str] = &["one", "discrete2", "two_h", "two_v", "sq_two", "sq_iso", "h_chaotic2", "v_chaotic2", "h_sigma_iso", "sq_two_hop"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_functors_are_consistent(i in 0..SMALL.len(), j in 0..SMALL.len(), k in any::<prop::sample::Index>()) {
        let a = Arc::new(builtin(SMALL[i]).unwrap());
        let b = Arc::new(builtin(SMALL[j]).unwrap());
        let fs = enumerate_functors(&a, &b);
        prop_assume!(!fs.is_empty());
        let f = &fs[k.index(fs.len())];
        let r = classify(f);
        for c in &r.consistency {
            prop_assert!(c.holds, "{} -> {}: {}", SMALL[i], SMALL[j], c.name);
        }
    }
}
