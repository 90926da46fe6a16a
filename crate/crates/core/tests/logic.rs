use std::sync::Arc;

use proptest::prelude::*;

use dblfolds::dblcat::corpus::{builtin, builtin_category, CATEGORY_NAMES};
use dblfolds::dblcat::{embed_functor, iso_comma, CategoryFunctor, DoubleFunctor, FiniteCategory};
use dblfolds::logic::{
    check_formula, check_invariance, free_vars, generate_sentences, interpret, parse_context, parse_formula,
    parse_formula_in, run_invariance, satisfies, satisfies_sentence, Context, Formula, Sort, Verdict,
};
use dblfolds::nerve::{builtin_diagram, nerve, nerve_map, nerve_of_category, nerve_span};
use dblfolds::presheaf::{boundary_family, NatTransf, Presheaf, Span};
use dblfolds::signature::{builtin_signature, BuiltinSignature, FoldsSignature};
use dblfolds::LogicError;

fn cat() -> Arc<FoldsSignature> {
    builtin_signature(BuiltinSignature::Cat)
}

fn dbl() -> Arc<FoldsSignature> {
    builtin_signature(BuiltinSignature::DblCat)
}

fn cat_nerve(name: &str) -> Presheaf {
    nerve_of_category(&builtin_category(name).unwrap(), &builtin_diagram("cat").unwrap()).unwrap()
}

fn parse(text: &str) -> Formula {
    parse_formula(text, &cat()).unwrap_or_else(|e| panic!("{text}: {e}")).0
}

fn names(ctx: &Context) -> Vec<&str> {
    ctx.vars.iter().map(|v| v.name.as_str()).collect()
}

const COMPOSITES: &str =
    "forall x:O. forall y:O. forall z:O. forall f:A(x,y). forall g:A(y,z). exists h:A(x,z). T'(f,g,h)";

const INVERSES: &str = "forall x:O. forall y:O. forall f:A(x,y). exists g:A(y,x). \
     (exists h:A(x,x). T'(f,g,h) /\\ I'(h)) /\\ (exists k:A(y,y). T'(g,f,k) /\\ I'(k))";

#[test]
fn parses_sentences() {
    let (f, ctx) = parse_formula("forall x:O. exists f:A(x,x). I'(f)", &cat()).unwrap();
    assert!(ctx.is_empty());
    assert_eq!(
        f,
        Formula::forall(
            "x",
            Sort::new("O", &[]),
            Formula::exists("f", Sort::new("A", &["x", "x"]), Formula::atom("I'", &["f"]))
        )
    );
    let (g, ctx) = parse_formula(COMPOSITES, &cat()).unwrap();
    assert!(ctx.is_empty());
    assert_eq!(g.depth(), 6);
    assert_eq!(g.to_string(), COMPOSITES);
}

#[test]
fn unicode_connectives() {
    let a = parse("∀x:O. ∃f:A(x,x). I'(f) ∧ ⊤ ∨ ⊥ → I'(f)");
    let b = parse("forall x:O. exists f:A(x,x). I'(f) /\\ true \\/ false -> I'(f)");
    assert_eq!(a, b);
}

#[test]
fn quantifying_a_dependency_is_rejected() {
    let e = parse_formula("forall f:A(x,y). forall x:O. true", &cat()).unwrap_err();
    assert_eq!(
        e,
        LogicError::DependencyViolation {
            var: "x".into(),
            dependent: "f".into()
        }
    );
}

#[test]
fn ill_formed_formulae() {
    let sig = cat();
    let err = |t: &str| parse_formula(t, &sig).unwrap_err();
    assert!(matches!(err("forall x:O. forall x:O. true"), LogicError::Shadowing(v) if v == "x"));
    assert!(matches!(err("(forall x:O. true) /\\ I'(f) /\\ I'(x)"), LogicError::UninferableVariable(v) if v == "f"));
    assert!(matches!(err("(forall x:O. true) /\\ forall f:A(x,x). true"), LogicError::Shadowing(v) if v == "x"));
    assert!(matches!(err("forall f:A(x). true"), LogicError::ArityMismatch { expected: 2, found: 1, .. }));
    assert!(matches!(err("I'(f)"), LogicError::UninferableVariable(v) if v == "f"));
    assert!(matches!(err("forall x:O. forall y:O. A(x,y)"), LogicError::NotRelationSymbol(k) if k == "A"));
    assert!(matches!(err("forall x:Q. true"), LogicError::UnknownKind(k) if k == "Q"));
    assert!(matches!(err("forall x:O. forall f:A(x,x). forall g:A(f,x). true"), LogicError::KindMismatch { .. }));
    assert!(matches!(err("exists f:A(x,y). I'(f)"), LogicError::IncompatibleFamily { .. }));
    assert!(matches!(
        err("exists f:A(x,y). exists g:A(x,y). exists h:A(x,y). T'(f,g,h)"),
        LogicError::IncompatibleFamily { .. }
    ));
    assert!(matches!(err("forall x:O. exists f:A(x,x). exists e:I'(f). true"), LogicError::QuantifiedRelation { .. }));
    assert!(matches!(err("forall x:O true"), LogicError::Syntax { .. }));
    assert!(matches!(err("true /\\"), LogicError::Syntax { offset: 7, .. }));
    assert!(matches!(err("true & false"), LogicError::Syntax { offset: 5, .. }));
    assert!(matches!(err("true) "), LogicError::Syntax { .. }));
}

#[test]
fn contexts_and_free_variables() {
    let sig = cat();
    let (f, ctx) = parse_formula("exists f:A(x,x). I'(f)", &sig).unwrap();
    assert_eq!(names(&free_vars(&f, &ctx).unwrap()), ["x"]);

    let (g, ctx) = parse_formula("x:O, y:O, f:A(x,y), g:A(x,y) |- E'(f,g)", &sig).unwrap();
    assert_eq!(names(&free_vars(&g, &ctx).unwrap()), ["x", "y", "f", "g"]);
    assert_eq!(ctx.to_string(), "x:O, y:O, f:A(x,y), g:A(x,y)");

    let s = parse(COMPOSITES);
    assert!(free_vars(&s, &Context::new()).unwrap().is_empty());

    let ctx = parse_context("a:O, b:O, u:A(a,b)", &sig).unwrap();
    let h = parse_formula_in("exists v:A(b,a). E'(u,u)", &sig, &ctx).unwrap();
    assert_eq!(names(&free_vars(&h, &ctx).unwrap()), ["a", "b", "u"]);
    assert!(matches!(
        parse_formula_in("I'(w)", &sig, &ctx),
        Err(LogicError::UnknownVariable(v)) if v == "w"
    ));
    assert!(parse_context("u:A(a,b)", &sig).is_err());
}

#[test]
fn printing_parenthesizes_where_needed() {
    for t in [
        "(true -> false) -> true",
        "true -> false -> true",
        "true /\\ (false /\\ true)",
        "true /\\ false /\\ true",
        "(true \\/ false) /\\ true",
        "true \\/ false /\\ true",
        "(forall x:O. true) /\\ true",
        "true /\\ (exists x:O. false)",
        "forall x:O. true /\\ false",
        "((forall x:O. true) -> false) \\/ true",
    ] {
        let f = parse(t);
        assert_eq!(f.to_string(), t);
        assert_eq!(parse(&f.to_string()), f);
    }
    assert_eq!(parse("true /\\ forall x:O. true /\\ false").to_string(), "true /\\ (forall x:O. true /\\ false)");
}

#[test]
fn satisfaction_examples() {
    let one = cat_nerve("one");
    let two = cat_nerve("two");
    let chaotic = cat_nerve("chaotic2");
    assert!(satisfies_sentence(&one, &parse(COMPOSITES)).unwrap());
    assert!(satisfies_sentence(&two, &parse(COMPOSITES)).unwrap());
    assert!(!satisfies_sentence(&two, &parse(INVERSES)).unwrap());
    assert!(satisfies_sentence(&chaotic, &parse(INVERSES)).unwrap());
    assert!(satisfies_sentence(&one, &parse(INVERSES)).unwrap());

    let some_arrow_has_no_way_back = parse("exists x:O. exists y:O. exists f:A(x,y). forall g:A(y,x). false");
    assert!(satisfies_sentence(&two, &some_arrow_has_no_way_back).unwrap());
    assert!(!satisfies_sentence(&chaotic, &some_arrow_has_no_way_back).unwrap());

    let every_object_has_an_identity = parse("forall x:O. exists f:A(x,x). I'(f)");
    for n in CATEGORY_NAMES {
        assert!(satisfies_sentence(&cat_nerve(n), &every_object_has_an_identity).unwrap(), "{n}");
    }
}

#[test]
fn vacuous_quantification() {
    let sig = cat();
    let empty = Presheaf::from_parts(sig.clone(), vec![Vec::new(); 5], vec![Vec::new(); 8]).unwrap();
    assert!(satisfies_sentence(&empty, &parse("forall x:O. false")).unwrap());
    assert!(!satisfies_sentence(&empty, &parse("exists x:O. true")).unwrap());
}

#[test]
fn satisfaction_under_an_interpretation() {
    let sig = cat();
    let two = cat_nerve("two");
    let ctx = parse_context("a:O, b:O, u:A(a,b)", &sig).unwrap();
    let has_inverse = parse_formula_in(
        "exists v:A(b,a). exists h:A(a,a). T'(u,v,h) /\\ I'(h)",
        &sig,
        &ctx,
    )
    .unwrap();
    // name the elements of the walking arrow's nerve by their boundaries
    let find = |kind: &str, family: &[&str]| -> String {
        let k = sig.kind(kind).unwrap();
        (0..two.carrier(k).len())
            .find(|&e| {
                let out = sig.out_arrows(k);
                out.iter()
                    .zip(family)
                    .all(|(&a, want)| two.element_name(sig.arrow(a).target, two.act(a, e)) == *want)
            })
            .map(|e| two.element_name(k, e).to_string())
            .unwrap()
    };
    let o: Vec<String> = two.carrier(sig.kind("O").unwrap()).to_vec();
    let id0 = find("A", &[&o[0], &o[0]]);
    let arrow = find("A", &[&o[0], &o[1]]);
    let alpha = interpret(&ctx, &two, &[("a", &o[0]), ("b", &o[0]), ("u", &id0)]).unwrap();
    assert!(satisfies(&two, &has_inverse, &ctx, &alpha).unwrap());
    let beta = interpret(&ctx, &two, &[("a", &o[0]), ("b", &o[1]), ("u", &arrow)]).unwrap();
    assert!(!satisfies(&two, &has_inverse, &ctx, &beta).unwrap());

    // not natural: u's source is not the value of a
    assert!(interpret(&ctx, &two, &[("a", &o[1]), ("b", &o[1]), ("u", &arrow)]).is_err());
    assert!(matches!(
        interpret(&ctx, &two, &[("a", &o[0]), ("b", &o[1])]),
        Err(LogicError::InterpretationMismatch(v)) if v == "u"
    ));
    let smaller = parse_context("a:O", &sig).unwrap();
    let gamma = interpret(&smaller, &two, &[("a", &o[0])]).unwrap();
    assert!(matches!(
        satisfies(&two, &has_inverse, &smaller, &gamma),
        Err(LogicError::InterpretationMismatch(_))
    ));
    assert!(matches!(
        satisfies(&two, &has_inverse, &ctx, &gamma),
        Err(LogicError::ContextMismatch(_))
    ));
    assert!(matches!(
        satisfies_sentence(&two, &has_inverse),
        Err(LogicError::InterpretationMismatch(_))
    ));
}

/// Evaluation by direct enumeration: a quantifier ranges over the elements
/// whose matching-map image is the family determined by the arguments.
fn oracle(m: &Presheaf, phi: &Formula, env: &mut Vec<(String, usize)>) -> bool {
    let sig = m.signature().clone();
    let family = |sort: &Sort, env: &Vec<(String, usize)>| -> (usize, Vec<usize>) {
        let k = sig.kind(&sort.kind).unwrap();
        let out = sig.out_arrows(k);
        let fam = sig
            .fan(k)
            .classes
            .iter()
            .map(|c| {
                let p = out.iter().position(|&a| a == c.canonical[0]).unwrap();
                let start = env.iter().rev().find(|v| v.0 == sort.args[p]).unwrap().1;
                m.act_word(&c.canonical[1..], start)
            })
            .collect();
        (k, fam)
    };
    let elements = |sort: &Sort, env: &Vec<(String, usize)>| -> Vec<usize> {
        let (k, fam) = family(sort, env);
        (0..m.carrier(k).len()).filter(|&e| boundary_family(m, k, e) == fam).collect()
    };
    match phi {
        Formula::True => true,
        Formula::False => false,
        Formula::Atom(s) => !elements(s, env).is_empty(),
        Formula::And(a, b) => oracle(m, a, env) & oracle(m, b, env),
        Formula::Or(a, b) => oracle(m, a, env) | oracle(m, b, env),
        Formula::Implies(a, b) => !oracle(m, a, env) | oracle(m, b, env),
        Formula::Forall(x, body) | Formula::Exists(x, body) => {
            let results: Vec<bool> = elements(&x.sort, env)
                .into_iter()
                .map(|e| {
                    env.push((x.name.clone(), e));
                    let r = oracle(m, body, env);
                    env.pop();
                    r
                })
                .collect();
            if matches!(phi, Formula::Forall(..)) {
                results.iter().all(|&r| r)
            } else {
                results.iter().any(|&r| r)
            }
        }
    }
}

fn structures() -> Vec<(String, Presheaf)> {
    let mut out: Vec<(String, Presheaf)> = CATEGORY_NAMES.iter().map(|n| (n.to_string(), cat_nerve(n))).collect();
    let d = builtin_diagram("dblcat").unwrap();
    for n in ["one", "two_h", "two_v", "sq_iso", "discrete2"] {
        out.push((format!("dbl:{n}"), nerve(&builtin(n).unwrap(), &d).unwrap()));
    }
    out
}

/// The same structure with every carrier listed in reverse and renamed.
fn permuted(m: &Presheaf) -> Presheaf {
    let sig = m.signature().clone();
    let carriers: Vec<Vec<String>> = m
        .carriers()
        .iter()
        .map(|c| c.iter().rev().map(|e| format!("{e}~")).collect())
        .collect();
    let flip = |k: usize, i: usize| m.carrier(k).len() - 1 - i;
    let actions = sig
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            (0..m.carrier(arrow.source).len())
                .map(|i| flip(arrow.target, m.act(a, flip(arrow.source, i))))
                .collect()
        })
        .collect();
    Presheaf::from_parts(sig, carriers, actions).unwrap()
}

#[test]
fn evaluation_matches_the_oracle_on_fixed_sentences() {
    for (n, m) in structures().iter().filter(|(n, _)| !n.starts_with("dbl:")) {
        for t in [COMPOSITES, INVERSES, "forall x:O. exists f:A(x,x). I'(f)"] {
            let f = parse(t);
            assert_eq!(satisfies_sentence(m, &f).unwrap(), oracle(m, &f, &mut Vec::new()), "{n}: {t}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn evaluation_matches_the_oracle(seed in any::<u64>(), depth in 0usize..4) {
        for (n, m) in structures() {
            let sig = m.signature().clone();
            for f in generate_sentences(&sig, depth, 4, seed) {
                prop_assert_eq!(satisfies_sentence(&m, &f).unwrap(), oracle(&m, &f, &mut Vec::new()), "{} {}", n, f);
            }
        }
    }

    #[test]
    fn satisfaction_respects_isomorphism(seed in any::<u64>(), depth in 1usize..5) {
        for (n, m) in structures() {
            let p = permuted(&m);
            let sig = m.signature().clone();
            for f in generate_sentences(&sig, depth, 4, seed) {
                prop_assert_eq!(satisfies_sentence(&m, &f).unwrap(), satisfies_sentence(&p, &f).unwrap(), "{} {}", n, f);
            }
        }
    }

    #[test]
    fn printing_round_trips(seed in any::<u64>(), depth in 0usize..6) {
        for which in BuiltinSignature::ALL {
            let sig = builtin_signature(which);
            for f in generate_sentences(&sig, depth, 8, seed) {
                let (g, ctx) = parse_formula(&f.to_string(), &sig).unwrap();
                prop_assert_eq!(&g, &f);
                prop_assert!(ctx.is_empty());
            }
        }
    }
}

#[test]
fn generator_is_deterministic_and_well_formed() {
    for which in BuiltinSignature::ALL {
        let sig = builtin_signature(which);
        let a = generate_sentences(&sig, 4, 100, 0);
        assert_eq!(a, generate_sentences(&sig, 4, 100, 0));
        assert_ne!(a, generate_sentences(&sig, 4, 100, 1));
        for f in &a {
            assert!(f.depth() <= 4);
            check_formula(&sig, &Context::new(), f).unwrap_or_else(|e| panic!("{f}: {e}"));
            assert!(f.free_names().is_empty());
        }
        assert!(a.iter().any(|f| f.depth() >= 3));
        assert!(a.iter().any(|f| f.to_string().contains('\'')), "some atom occurs");
    }
}

#[test]
fn depth_zero_gives_constants() {
    let fs = generate_sentences(&cat(), 0, 50, 3);
    assert!(fs.iter().all(|f| matches!(f, Formula::True | Formula::False)));
    assert!(fs.contains(&Formula::True) && fs.contains(&Formula::False));
}

#[test]
fn generator_reaches_identity_sentences() {
    let shape = |f: &Formula| match f {
        Formula::Forall(x, body) => match &**body {
            Formula::Exists(g, inner) => {
                x.sort.kind == "O"
                    && g.sort == Sort::new("A", &[&x.name, &x.name])
                    && **inner == Formula::atom("I'", &[&g.name])
            }
            _ => false,
        },
        _ => false,
    };
    let fs = generate_sentences(&cat(), 2, 5000, 0);
    assert!(fs.iter().any(shape));
}

fn iso_comma_span() -> (Span, usize, usize) {
    let one = builtin_category("one").unwrap();
    let e = builtin_category("chaotic2").unwrap();
    let f = CategoryFunctor {
        obj: vec![0],
        mor: vec![0],
    };
    let ic = iso_comma(&one, &e, &f);
    let d = builtin_diagram("cat").unwrap();
    let left = embed_functor(&ic.category, &one, &ic.to_domain).unwrap();
    let right = embed_functor(&ic.category, &e, &ic.to_codomain).unwrap();
    (nerve_span(&left, &right, &d).unwrap(), one.objects.len(), e.objects.len())
}

#[test]
fn iso_comma_of_a_point_in_the_chaotic_category() {
    let one = builtin_category("one").unwrap();
    let e = builtin_category("chaotic2").unwrap();
    let ic = iso_comma(&one, &e, &CategoryFunctor { obj: vec![0], mor: vec![0] });
    ic.category.validate().unwrap();
    assert_eq!(ic.category.objects, ["<*,1_0>", "<*,0~1>"]);
    assert_eq!(ic.category.mors.len(), 4);
    ic.to_domain.validate(&ic.category, &one).unwrap();
    ic.to_codomain.validate(&ic.category, &e).unwrap();
    assert!((0..4).all(|m| ic.category.is_iso(m)));
}

#[test]
fn iso_comma_of_identities() {
    for n in CATEGORY_NAMES {
        let c = builtin_category(n).unwrap();
        let ic = iso_comma(&c, &c, &CategoryFunctor::identity(&c));
        ic.category.validate().unwrap();
        let isos = (0..c.mors.len()).filter(|&m| c.is_iso(m)).count();
        assert_eq!(ic.category.objects.len(), isos, "{n}");
        ic.to_domain.validate(&ic.category, &c).unwrap();
        ic.to_codomain.validate(&ic.category, &c).unwrap();
    }
}

#[test]
fn non_functors_are_rejected() {
    let two = builtin_category("two").unwrap();
    let one = builtin_category("one").unwrap();
    let swap = CategoryFunctor {
        obj: vec![1, 0],
        mor: (0..two.mors.len()).collect(),
    };
    assert!(swap.validate(&two, &two).is_err());
    assert!(embed_functor(&two, &one, &CategoryFunctor::to_point(&two)).is_ok());
}

#[test]
fn identity_spans_agree() {
    for (n, m) in structures() {
        let span = Span::identity(&m);
        for f in generate_sentences(m.signature(), 3, 10, 5) {
            assert!(matches!(check_invariance(&span, &f).unwrap(), Verdict::Agree(_)), "{n}: {f}");
        }
    }
}

#[test]
fn the_iso_comma_span_preserves_sentences() {
    let (span, left_objects, right_objects) = iso_comma_span();
    assert_eq!((left_objects, right_objects), (1, 2));
    assert_eq!(span.left.target().carrier(0).len(), 1);
    assert_eq!(span.right.target().carrier(0).len(), 2);
    let sentences = generate_sentences(&cat(), 4, 60, 11);
    let summary = run_invariance(&span, &sentences).unwrap();
    assert!(summary.passed(), "{summary:?}");
    assert_eq!(summary.total(), 60);
    assert!(summary.agree_true > 0 && summary.agree_false > 0);

    let two_objects_with_inverse_arrows = parse(
        "exists x:O. exists y:O. exists f:A(x,y). exists g:A(y,x). \
         (exists h:A(x,x). T'(f,g,h) /\\ I'(h)) /\\ (exists k:A(y,y). T'(g,f,k) /\\ I'(k))",
    );
    assert_eq!(check_invariance(&span, &two_objects_with_inverse_arrows).unwrap(), Verdict::Agree(true));
}

#[test]
fn a_leg_that_is_not_fiberwise_surjective() {
    let d = builtin_diagram("cat").unwrap();
    let two = builtin_category("discrete2").unwrap();
    let one = builtin_category("one").unwrap();
    let collapse = embed_functor(&two, &one, &CategoryFunctor::to_point(&two)).unwrap();
    let identity = DoubleFunctor::identity(collapse.dom.clone());
    let span = nerve_span(&collapse, &identity, &d).unwrap();
    let f = parse("forall x:O. forall y:O. exists f:A(x,y). true");
    assert!(matches!(check_invariance(&span, &f).unwrap(), Verdict::NotApplicable(_)));
    // the feet do differ on this sentence
    let summary = run_invariance(&span, &[f]).unwrap();
    assert!(summary.not_applicable.is_some());
    assert_eq!(summary.disagreements, [(0, true, false)]);
}

#[test]
fn spans_with_a_context() {
    let sig = cat();
    let (span, _, _) = iso_comma_span();
    let apex = span.apex().clone();
    let ctx = parse_context("a:O, b:O, u:A(a,b)", &sig).unwrap();
    // a non-identity arrow of the apex
    let k = sig.kind("A").unwrap();
    let (s, t) = (sig.out_arrows(k)[0], sig.out_arrows(k)[1]);
    let e = (0..apex.carrier(k).len()).find(|&e| apex.act(s, e) != apex.act(t, e)).unwrap();
    let alpha = interpret(
        &ctx,
        &apex,
        &[
            ("a", apex.element_name(0, apex.act(s, e))),
            ("b", apex.element_name(0, apex.act(t, e))),
            ("u", apex.element_name(k, e)),
        ],
    )
    .unwrap();
    let gamma = alpha.source().clone();
    let span = span.with_context(alpha).unwrap();
    let has_inverse = parse_formula_in("exists v:A(b,a). exists h:A(a,a). T'(u,v,h) /\\ I'(h)", &sig, &ctx).unwrap();
    assert_eq!(check_invariance(&span, &has_inverse).unwrap(), Verdict::Agree(true));
    let no_composite = parse_formula_in("exists v:A(b,a). forall h:A(a,a). T'(u,v,h) -> false", &sig, &ctx).unwrap();
    assert_eq!(check_invariance(&span, &no_composite).unwrap(), Verdict::Agree(false));
    let stranger = parse_formula("exists v:A(c,c). I'(v)", &sig).unwrap().0;
    assert!(matches!(check_invariance(&span, &stranger), Err(LogicError::ContextMismatch(_))));
    assert_eq!(gamma.carriers().iter().map(Vec::len).sum::<usize>(), 3);

    // an interpretation must be defined on the declared context
    let bad = NatTransf::identity(&apex);
    assert!(matches!(satisfies(&apex, &has_inverse, &ctx, &bad), Err(LogicError::ContextMismatch(_))));
}

#[test]
fn vertical_arrow_to_one_span_is_not_applicable() {
    let d = builtin_diagram("dblcat").unwrap();
    let v2 = Arc::new(builtin("two_v").unwrap());
    let one = Arc::new(builtin("one").unwrap());
    let f = DoubleFunctor::to_terminal(v2.clone(), one);
    let span = nerve_span(&f, &DoubleFunctor::identity(v2), &d).unwrap();
    assert!(nerve_map(&f, &d).is_ok());
    let s = generate_sentences(&dbl(), 2, 1, 0).remove(0);
    assert!(matches!(check_invariance(&span, &s).unwrap(), Verdict::NotApplicable(_)));
}

#[test]
fn categories_embed_as_functors() {
    let c: FiniteCategory = builtin_category("reflection").unwrap();
    let g = embed_functor(&c, &c, &CategoryFunctor::identity(&c)).unwrap();
    assert_eq!(g.h, (0..c.mors.len()).collect::<Vec<_>>());
}
