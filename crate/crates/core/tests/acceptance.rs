//! Acceptance run: one PASS/FAIL line per criterion. Criteria that are
//! expected to fail are listed in `EXPECTED_FAILURES` with the reason; the
//! run exits non-zero if any other criterion fails or an expected failure
//! changes character.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dblfolds::classify::{
    anodyne_generators, biequivalence_conditions, generating_cofibrations, has_rlp_all, hom_solver_filtered,
    is_trivial_fibration, naive_fibration_conditions, shape, GenKind,
};
use dblfolds::dblcat::corpus::{builtin, builtin_category, builtins, functor_corpus, CATEGORY_NAMES};
use dblfolds::dblcat::{
    embed_functor, enumerate_functors, find_companions, find_conjoints, horizontal_embedding, is_equipment, iso_comma,
    validate_double_category, CategoryFunctor, DoubleFunctor, Finite2Category, FiniteDoubleCategory,
};
use dblfolds::logic::{generate_sentences, run_invariance, InvarianceSummary};
use dblfolds::nerve::{builtin_diagram, check_latching_table, nerve_map, nerve_span};
use dblfolds::presheaf::{is_fiberwise_surjective, Span};

const CRITERION_1_LIMIT: Duration = Duration::from_secs(60);
const CRITERION_6_LIMIT: Duration = Duration::from_secs(300);
const SEED: u64 = 0;
const SENTENCES: usize = 200;
const DEPTH: usize = 4;
const MUTATIONS: usize = 50;

/// Criterion 6 asks for the walking vertical arrow to the point as a
/// trivial fibration; it is not one, so the invariance theorem does not
/// apply along it.
const EXPECTED_FAILURES: &[usize] = &[6];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn terminal(a: &Arc<FiniteDoubleCategory>) -> DoubleFunctor {
    DoubleFunctor::to_terminal(a.clone(), Arc::new(builtin("one").unwrap()))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let gens = generating_cofibrations();
    let corpus = functor_corpus();
    let mut disagree = Vec::new();
    let mut tfs = 0;
    for (n, f) in &corpus {
        let tf = is_trivial_fibration(f).is_ok();
        tfs += tf as usize;
        if tf != has_rlp_all(f, &gens).is_ok() {
            disagree.push(n.clone());
        }
    }
    let t = start.elapsed();
    outcome(
        corpus.len() >= 30 && disagree.is_empty() && t < CRITERION_1_LIMIT,
        format!(
            "{} functors ({tfs} trivial fibrations), {} disagreements {disagree:?}, {:.2}s (limit {}s)",
            corpus.len(),
            disagree.len(),
            t.as_secs_f64(),
            CRITERION_1_LIMIT.as_secs()
        ),
    )
}

fn criterion_2() -> Outcome {
    let gens = anodyne_generators();
    let all = builtins();
    let mut disagree = Vec::new();
    let mut equipments = 0;
    for (n, a) in &all {
        let e = is_equipment(a).is_ok();
        equipments += e as usize;
        if e != has_rlp_all(&terminal(a), &gens).is_ok() {
            disagree.push(*n);
        }
    }
    outcome(
        all.len() >= 15 && disagree.is_empty(),
        format!("{} double categories ({equipments} equipments), disagreements {disagree:?}", all.len()),
    )
}

fn criterion_3() -> Outcome {
    let sq2 = shape("Sq2").unwrap();
    let hop = shape("Sq2_hop").unwrap();
    let u = sq2.vgen("u").unwrap();
    let (phi, psi) = (sq2.sqgen("phi").unwrap(), sq2.sqgen("psi").unwrap());
    let (eps, eta) = (hop.sqgen("eps").unwrap(), hop.sqgen("eta").unwrap());
    let (mut verticals, mut companions, mut conjoints, mut mismatches) = (0, 0, 0, Vec::new());
    for (n, a) in builtins() {
        for v in 0..a.vmors().len() {
            verticals += 1;
            let pin = |k: GenKind, g: usize, val: usize| k != GenKind::Vmor || g != u || val == v;
            let mut got: Vec<_> = hom_solver_filtered(&sq2, &a, Some(&pin))
                .iter()
                .map(|l| (l.h[0], l.sq[phi], l.sq[psi]))
                .collect();
            let mut want: Vec<_> = find_companions(&a, v).iter().map(|c| (c.f, c.phi, c.psi)).collect();
            got.sort();
            want.sort();
            companions += want.len();
            if got != want {
                mismatches.push(format!("{n}:{} companions", a.vmors()[v].name));
            }
            let mut got: Vec<_> = hom_solver_filtered(&hop, &a, Some(&pin))
                .iter()
                .map(|l| (l.h[0], l.sq[eps], l.sq[eta]))
                .collect();
            let mut want: Vec<_> = find_conjoints(&a, v).iter().map(|c| (c.f, c.epsilon, c.eta)).collect();
            got.sort();
            want.sort();
            conjoints += want.len();
            if got != want {
                mismatches.push(format!("{n}:{} conjoints", a.vmors()[v].name));
            }
        }
    }
    outcome(
        mismatches.is_empty(),
        format!("{verticals} verticals, {companions} companion pairs, {conjoints} conjoint pairs, mismatches {mismatches:?}"),
    )
}

fn criterion_4() -> Outcome {
    let (mut checked, mut violations) = (0, Vec::new());
    for (n, f) in functor_corpus() {
        if is_equipment(&f.dom).is_err() || is_equipment(&f.cod).is_err() {
            continue;
        }
        checked += 1;
        let nf_conditions = naive_fibration_conditions(&f);
        let nf = nf_conditions.iter().all(Result::is_ok);
        let f145 = [0, 3, 4].iter().all(|&i| nf_conditions[i].is_ok());
        let be = biequivalence_conditions(&f).iter().all(Result::is_ok);
        let tf = is_trivial_fibration(&f).is_ok();
        if nf != f145 {
            violations.push(format!("{n}: NF vs f1,f4,f5"));
        }
        if tf != (nf && be) {
            violations.push(format!("{n}: TF vs NF and biequivalence"));
        }
    }
    outcome(
        checked > 0 && violations.is_empty(),
        format!("{checked} functors between equipments, violations {violations:?}"),
    )
}

fn criterion_5() -> Outcome {
    let d = builtin_diagram("dblcat").unwrap();
    let (mut tfs, mut failures) = (0, Vec::new());
    for (n, f) in functor_corpus() {
        if is_trivial_fibration(&f).is_ok() {
            tfs += 1;
            if let Err(e) = is_fiberwise_surjective(&nerve_map(&f, &d).unwrap()) {
                failures.push(format!("{n}: {e}"));
            }
        }
    }
    let c = builtin_diagram("cat").unwrap();
    let emb = |n: &str| Arc::new(horizontal_embedding(&Finite2Category::locally_discrete(builtin_category(n).unwrap())));
    let mut sff = 0;
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
                if surjective && fully_faithful {
                    sff += 1;
                    if let Err(e) = is_fiberwise_surjective(&nerve_map(&f, &c).unwrap()) {
                        failures.push(format!("{a} -> {b}: {e}"));
                    }
                }
            }
        }
    }
    outcome(
        tfs > 0 && sff > 0 && failures.is_empty(),
        format!("{tfs} trivial fibrations along dblcat, {sff} surjective fully faithful functors along cat, failures {failures:?}"),
    )
}

fn iso_comma_span() -> (Span, usize, usize) {
    let one = builtin_category("one").unwrap();
    let e = builtin_category("chaotic2").unwrap();
    let f = CategoryFunctor {
        obj: vec![0],
        mor: vec![0],
    };
    let ic = iso_comma(&one, &e, &f);
    let left = embed_functor(&ic.category, &one, &ic.to_domain).unwrap();
    let right = embed_functor(&ic.category, &e, &ic.to_codomain).unwrap();
    let span = nerve_span(&left, &right, &builtin_diagram("cat").unwrap()).unwrap();
    (span, one.objects.len(), e.objects.len())
}

fn functor_span(f: &DoubleFunctor) -> Span {
    nerve_span(&DoubleFunctor::identity(f.dom.clone()), f, &builtin_diagram("dblcat").unwrap()).unwrap()
}

fn run(span: &Span) -> InvarianceSummary {
    let sig = span.left.target().signature();
    run_invariance(span, &generate_sentences(sig, DEPTH, SENTENCES, SEED)).unwrap()
}

fn describe(s: &InvarianceSummary) -> String {
    let mut out = format!(
        "{} sentences, {} agree true, {} agree false, {} disagree",
        s.total(),
        s.agree_true,
        s.agree_false,
        s.disagreements.len()
    );
    if let Some(why) = &s.not_applicable {
        out.push_str(&format!(", NotApplicable ({why})"));
    }
    out
}

struct Criterion6 {
    cat: InvarianceSummary,
    dbl: InvarianceSummary,
    dbl_trivial_fibration: Result<(), String>,
    supplementary: InvarianceSummary,
    objects: (usize, usize),
    elapsed: Duration,
}

fn criterion_6_run() -> Criterion6 {
    let start = Instant::now();
    let (span, l, r) = iso_comma_span();
    let cat = run(&span);
    let v2 = terminal(&Arc::new(builtin("two_v").unwrap()));
    let dbl_trivial_fibration = is_trivial_fibration(&v2).map_err(|e| e.to_string());
    let dbl = run(&functor_span(&v2));
    let supplementary = run(&functor_span(&terminal(&Arc::new(builtin("sq_iso").unwrap()))));
    Criterion6 {
        cat,
        dbl,
        dbl_trivial_fibration,
        supplementary,
        objects: (l, r),
        elapsed: start.elapsed(),
    }
}

fn criterion_6(c: &Criterion6) -> Outcome {
    let pass = c.cat.passed() && c.dbl.passed() && c.dbl_trivial_fibration.is_ok() && c.elapsed < CRITERION_6_LIMIT;
    let tf = match &c.dbl_trivial_fibration {
        Ok(()) => "a trivial fibration".to_string(),
        Err(e) => format!("not a trivial fibration: {e}"),
    };
    outcome(
        pass,
        format!(
            "Cat along iso-comma of 1 -> chaotic2: {}; DblCat along two_v -> one ({tf}): {}; {:.2}s (limit {}s)",
            describe(&c.cat),
            describe(&c.dbl),
            c.elapsed.as_secs_f64(),
            CRITERION_6_LIMIT.as_secs()
        ),
    )
}

/// The known failure of criterion 6 must be exactly the documented one:
/// the Cat half passes and the DblCat leg is not fiberwise surjective.
fn criterion_6_fails_as_documented(c: &Criterion6) -> bool {
    c.cat.passed() && c.dbl.not_applicable.is_some() && c.dbl_trivial_fibration.is_err() && c.supplementary.passed()
}

fn criterion_7(c: &Criterion6) -> Outcome {
    let (l, r) = c.objects;
    let agree = c.cat.disagreements.is_empty() && c.cat.not_applicable.is_none();
    outcome(
        (l, r) == (1, 2) && agree && c.cat.total() == SENTENCES,
        format!(
            "object counts {l} vs {r}; {} of {} generated sentences agree, so a single-object sentence is not in the generated fragment",
            c.cat.total() - c.cat.disagreements.len(),
            c.cat.total()
        ),
    )
}

fn criterion_8() -> Outcome {
    let d = builtin_diagram("dblcat").unwrap();
    let all = builtins();
    let instances: Vec<_> = all.iter().map(|(n, x)| (*n, &**x)).collect();
    match check_latching_table(&d, &instances) {
        Ok(report) => {
            let rows: Vec<String> = report
                .rows
                .iter()
                .map(|r| format!("{} via {} weights {:?} ({} elements)", r.kind, r.inclusion, r.weights, r.elements))
                .collect();
            let s = report.rows.iter().find(|r| r.kind == "S").map(|r| r.weights[0]);
            outcome(
                report.rows.len() == 5 && s == Some(4),
                format!("{} instances; {}", report.instances.len(), rows.join("; ")),
            )
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

/// Perturbs one defined entry of one composition table to another cell of
/// the same sort.
fn mutate(a: &FiniteDoubleCategory, rng: &mut ChaCha8Rng) -> (FiniteDoubleCategory, String) {
    let mut parts = a.clone().into_parts();
    let sizes = [parts.hmors.len(), parts.vmors.len(), parts.squares.len(), parts.squares.len()];
    let names = ["hcomp", "vcomp", "sq_hcomp", "sq_vcomp"];
    let candidates: Vec<usize> = (0..4).filter(|&t| sizes[t] > 1).collect();
    let t = *candidates.choose(rng).expect("a sort with two cells");
    let table = match t {
        0 => &mut parts.hcomp_h,
        1 => &mut parts.vcomp_v,
        2 => &mut parts.hcomp_sq,
        _ => &mut parts.vcomp_sq,
    };
    let entries: Vec<_> = table.entries().collect();
    let &(x, y, z) = entries.choose(rng).expect("a defined entry");
    let mut w = rng.gen_range(0..sizes[t] - 1);
    if w >= z {
        w += 1;
    }
    table.set(x, y, w);
    let m = FiniteDoubleCategory::from_parts(parts).expect("indices stay in range");
    (m, format!("{}({x},{y}) {z}->{w}", names[t]))
}

fn criterion_9() -> Outcome {
    let all = builtins();
    let invalid: Vec<&str> = all
        .iter()
        .filter(|(_, a)| validate_double_category(a).is_err())
        .map(|(n, _)| *n)
        .collect();
    let mutable: Vec<_> = all
        .iter()
        .filter(|(_, a)| a.hmors().len() > 1 || a.vmors().len() > 1 || a.squares().len() > 1)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut missed = Vec::new();
    for _ in 0..MUTATIONS {
        let (n, a) = mutable.choose(&mut rng).unwrap();
        let (m, what) = mutate(a, &mut rng);
        if validate_double_category(&m).is_ok() {
            missed.push(format!("{n}: {what}"));
        }
    }
    outcome(
        invalid.is_empty() && missed.is_empty(),
        format!(
            "{} builtins, invalid {invalid:?}; {} of {MUTATIONS} seeded mutations caught, missed {missed:?}",
            all.len(),
            MUTATIONS - missed.len()
        ),
    )
}

fn main() {
    let c6 = criterion_6_run();
    let results = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(&c6),
        criterion_7(&c6),
        criterion_8(),
        criterion_9(),
    ];
    let mut unexpected = Vec::new();
    for (i, r) in results.iter().enumerate() {
        let n = i + 1;
        println!("criterion {n}: {} {}", if r.pass { "PASS" } else { "FAIL" }, r.detail);
        let expected_failure = EXPECTED_FAILURES.contains(&n);
        if r.pass == expected_failure {
            unexpected.push(n);
        }
    }
    println!(
        "supplementary: DblCat along the trivial fibration sq_iso -> one: {}",
        describe(&c6.supplementary)
    );
    if !criterion_6_fails_as_documented(&c6) {
        unexpected.push(6);
    }
    let passed = results.iter().filter(|r| r.pass).count();
    println!("acceptance: {passed}/{} criteria pass; expected failures {EXPECTED_FAILURES:?}", results.len());
    if !unexpected.is_empty() {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
