use std::path::Path;

use serde_json::{json, Map, Value};

use dblfolds::classify::{anodyne_generators, classify, generating_cofibrations, has_rlp, parse_inclusion_file, Failure};
use dblfolds::dblcat::corpus::{builtin_category, functor_corpus, BUILTIN_NAMES, CATEGORY_NAMES};
use dblfolds::dblcat::{validate_double_category, validate_double_functor, DoubleFunctor};
use dblfolds::logic::{generate_sentences, interpret, parse_formula, run_invariance, satisfies, Formula};
use dblfolds::nerve::{builtin_diagram, nerve, nerve_span};
use dblfolds::presheaf::{is_l_structure, serialize_presheaf, validate_presheaf, Presheaf, Span};
use dblfolds::signature::{parse_signature, BuiltinSignature};
use dblfolds::{LogicError, NerveError, SignatureError};

use crate::input::{self, builtin_name, detect, FileKind};
use crate::report::{Fatal, Report};

fn nerve_error(e: NerveError) -> Fatal {
    match e {
        NerveError::UnknownDiagram(_) => Fatal::usage(e.to_string()),
        e => Fatal::semantic(e.to_string()),
    }
}

fn logic_error(e: LogicError) -> Fatal {
    match e {
        LogicError::Syntax { .. } => Fatal::usage(e.to_string()),
        e => Fatal::semantic(e.to_string()),
    }
}

pub fn span_of(left: &DoubleFunctor, right: &DoubleFunctor, diagram: &str) -> Result<Span, Fatal> {
    let d = builtin_diagram(diagram).map_err(nerve_error)?;
    nerve_span(left, right, &d).map_err(nerve_error)
}

fn carrier_sizes(x: &Presheaf) -> Map<String, Value> {
    let sig = x.signature();
    (0..sig.kind_count())
        .map(|k| (sig.kind_name(k).to_string(), json!(x.carrier(k).len())))
        .collect()
}

fn sizes_text(x: &Presheaf) -> String {
    let sig = x.signature();
    (0..sig.kind_count())
        .map(|k| format!("{}={}", sig.kind_name(k), x.carrier(k).len()))
        .collect::<Vec<_>>()
        .join(" ")
}

// validate

struct Item {
    input: String,
    kind: &'static str,
    verdict: Result<(), String>,
}

fn check_functor(f: &DoubleFunctor) -> Result<(), String> {
    validate_double_category(&f.dom).map_err(|e| format!("source: {e}"))?;
    validate_double_category(&f.cod).map_err(|e| format!("target: {e}"))?;
    validate_double_functor(f).map_err(|e| e.to_string())
}

/// Turns a semantic failure into a verdict and lets usage errors through.
fn verdict(r: Result<Result<(), String>, Fatal>) -> Result<Result<(), String>, Fatal> {
    match r {
        Ok(v) => Ok(v),
        Err(f) if f.code == 1 => Ok(Err(f.message)),
        Err(f) => Err(f),
    }
}

fn validate_builtin(name: &str) -> Result<Item, Fatal> {
    let input = format!("builtin:{name}");
    if let Ok(which) = name.parse::<BuiltinSignature>() {
        let sig = dblfolds::signature::builtin_signature(which);
        let text = dblfolds::signature::serialize_signature(&sig);
        return Ok(Item {
            input,
            kind: "signature",
            verdict: parse_signature(&text).map(|_| ()).map_err(|e| e.to_string()),
        });
    }
    if BUILTIN_NAMES.contains(&name) || CATEGORY_NAMES.contains(&name) {
        let a = input::builtin_double(name)?;
        let mut v = validate_double_category(&a).map_err(|e| e.to_string());
        if v.is_ok() && !BUILTIN_NAMES.contains(&name) {
            v = builtin_category(name).and_then(|c| c.validate()).map_err(|e| e.to_string());
        }
        return Ok(Item {
            input,
            kind: "double category",
            verdict: v,
        });
    }
    let f = input::functor(&input)?;
    Ok(Item {
        input,
        kind: "double functor",
        verdict: check_functor(&f),
    })
}

fn validate_file(path: &str, signature: Option<&str>) -> Result<Item, Fatal> {
    let p = Path::new(path);
    let text = input::read(p)?;
    let kind = detect(&text);
    let v = match kind {
        FileKind::Signature => match parse_signature(&text) {
            Ok(_) => Ok(()),
            Err(SignatureError::Parse(e)) => return Err(Fatal::usage(format!("{path}: {e}"))),
            Err(e) => Err(e.to_string()),
        },
        FileKind::Presheaf => verdict(input::presheaf(p, signature).map(|(_, x)| {
            let report = validate_presheaf(&x);
            match report.violations.first() {
                None => Ok(()),
                Some(w) => Err(format!(
                    "{} violation(s); relation {} fails at `{}`: {} vs {}",
                    report.violations.len(),
                    w.relation,
                    w.element,
                    w.lhs_image,
                    w.rhs_image
                )),
            }
        }))?,
        FileKind::DoubleCategory => verdict(
            input::double_category(path, None).map(|a| validate_double_category(&a).map_err(|e| e.to_string())),
        )?,
        FileKind::Functor => verdict(input::functor_text(&text, p.parent()).map(|f| check_functor(&f)))?,
        FileKind::Span => verdict(input::span_file(p, None).map(|_| Ok(())))?,
    };
    Ok(Item {
        input: path.to_string(),
        kind: kind.name(),
        verdict: v.map_err(|e| e.to_string()),
    })
}

pub fn validate(inputs: &[String], signature: Option<&str>) -> Result<Report, Fatal> {
    let mut report = Report::new("validate");
    let mut items = Vec::new();
    if inputs.is_empty() {
        report.config("inputs", "builtin corpus");
        for s in BuiltinSignature::ALL {
            items.push(validate_builtin(match s {
                BuiltinSignature::Cat => "cat",
                BuiltinSignature::TwoCat => "twocat",
                BuiltinSignature::DblCat => "dblcat",
            })?);
        }
        for n in BUILTIN_NAMES {
            items.push(validate_builtin(n)?);
        }
        for n in CATEGORY_NAMES.iter().filter(|n| !BUILTIN_NAMES.contains(n)) {
            items.push(validate_builtin(n)?);
        }
        for (n, f) in functor_corpus() {
            items.push(Item {
                input: format!("builtin:{n}"),
                kind: "double functor",
                verdict: check_functor(&f),
            });
        }
    } else {
        report.config("inputs", inputs.to_vec());
        for i in inputs {
            items.push(match builtin_name(i) {
                Some(n) => validate_builtin(n)?,
                None => validate_file(i, signature)?,
            });
        }
    }
    let mut entries = Vec::new();
    for it in &items {
        match &it.verdict {
            Ok(()) => {
                report.line(format!("ok    {} ({})", it.input, it.kind));
                entries.push(json!({"input": it.input, "kind": it.kind, "ok": true}));
            }
            Err(w) => {
                report.fail().line(format!("FAIL  {} ({}): {w}", it.input, it.kind));
                entries.push(json!({"input": it.input, "kind": it.kind, "ok": false, "witness": w}));
            }
        }
    }
    let failed = items.iter().filter(|i| i.verdict.is_err()).count();
    report
        .set("items", entries)
        .set("checked", items.len())
        .set("failed", failed)
        .line(format!("{} checked, {failed} failed", items.len()));
    Ok(report)
}

// eval and nerve

/// A structure: a presheaf file or the nerve of a builtin along a diagram.
fn structure(reference: &str, signature: Option<&str>, diagram: &str) -> Result<Presheaf, Fatal> {
    match builtin_name(reference) {
        Some(n) => {
            let a = input::builtin_double(n)?;
            nerve(&a, &builtin_diagram(diagram).map_err(nerve_error)?).map_err(nerve_error)
        }
        None => {
            let (_, x) = input::presheaf(Path::new(reference), signature)?;
            let report = validate_presheaf(&x);
            if let Some(w) = report.violations.first() {
                return Err(Fatal::semantic(format!("relation {} fails at `{}`", w.relation, w.element)));
            }
            Ok(x)
        }
    }
}

pub fn eval(
    reference: &str,
    formula: &str,
    at: &[String],
    signature: Option<&str>,
    diagram: &str,
) -> Result<Report, Fatal> {
    let mut report = Report::new("eval");
    report
        .config("structure", reference)
        .config("formula", formula)
        .config("interpretation", at.to_vec());
    if builtin_name(reference).is_some() {
        report.config("diagram", diagram);
    }
    let m = structure(reference, signature, diagram)?;
    let (phi, ctx) = parse_formula(formula, m.signature()).map_err(logic_error)?;
    let mut pairs = Vec::new();
    for a in at {
        let (v, e) = a
            .split_once('=')
            .ok_or_else(|| Fatal::usage(format!("expected `variable=element`, got `{a}`")))?;
        pairs.push((v.trim(), e.trim()));
    }
    if !ctx.is_empty() && pairs.is_empty() {
        return Err(Fatal::usage(format!(
            "the formula has free variables ({ctx}); interpret them with --at variable=element"
        )));
    }
    let alpha = interpret(&ctx, &m, &pairs).map_err(logic_error)?;
    let value = satisfies(&m, &phi, &ctx, &alpha).map_err(logic_error)?;
    report
        .set("formula", phi.to_string())
        .set("context", ctx.to_string())
        .set("depth", phi.depth())
        .set("value", value)
        .line(format!("{}{phi}", if ctx.is_empty() { String::new() } else { format!("{ctx} |- ") }))
        .line(value.to_string());
    Ok(report)
}

pub fn nerve_cmd(reference: &str, diagram: &str) -> Result<Report, Fatal> {
    let mut report = Report::new("nerve");
    report.config("input", reference).config("diagram", diagram);
    let a = input::double_category(reference, None)?;
    validate_double_category(&a).map_err(|e| Fatal::semantic(e.to_string()))?;
    let d = builtin_diagram(diagram).map_err(nerve_error)?;
    let x = nerve(&a, &d).map_err(nerve_error)?;
    let text = serialize_presheaf(&x, Some(diagram));
    report
        .set("carriers", carrier_sizes(&x))
        .set("l_structure", is_l_structure(&x).is_ok())
        .set("presheaf", text.clone());
    report.raw = Some(text);
    Ok(report)
}

// classify and lift

fn outcome<E: std::fmt::Display>(r: &Result<(), E>) -> Value {
    match r {
        Ok(()) => json!({"holds": true}),
        Err(e) => json!({"holds": false, "witness": e.to_string()}),
    }
}

fn outcome_line<E: std::fmt::Display>(name: &str, r: &Result<(), E>) -> String {
    match r {
        Ok(()) => format!("{name:<34} true"),
        Err(e) => format!("{name:<34} false  {e}"),
    }
}

fn checked_functor(reference: &str) -> Result<DoubleFunctor, Fatal> {
    let f = input::functor(reference)?;
    check_functor(&f).map_err(Fatal::semantic)?;
    Ok(f)
}

pub fn classify_cmd(reference: &str) -> Result<Report, Fatal> {
    let mut report = Report::new("classify");
    report.config("functor", reference);
    let f = checked_functor(reference)?;
    let r = classify(&f);
    let mut rows: Vec<(String, Value)> = Vec::new();
    let mut row = |report: &mut Report, key: String, label: String, r: Result<(), String>| {
        report.line(outcome_line(&label, &r));
        rows.push((key, outcome(&r)));
    };
    let text = |r: &Result<(), Failure>| r.clone().map_err(|e| e.to_string());
    row(&mut report, "trivial_fibration".into(), "trivial fibration".into(), text(&r.trivial_fibration));
    row(
        &mut report,
        "rlp_generating_cofibrations".into(),
        "lifts against I".into(),
        r.trivial_fibration_lifting.clone().map_err(|e| e.to_string()),
    );
    for (i, c) in r.naive_fibration.iter().enumerate() {
        row(&mut report, format!("naive_fibration_f{}", i + 1), format!("naive fibration (f{})", i + 1), text(c));
    }
    row(
        &mut report,
        "rlp_anodyne_generators".into(),
        "lifts against J".into(),
        r.naive_fibration_lifting.clone().map_err(|e| e.to_string()),
    );
    for (i, c) in r.biequivalence.iter().enumerate() {
        row(&mut report, format!("biequivalence_w{}", i + 1), format!("biequivalence (w{})", i + 1), text(c));
    }
    if let Some(c) = &r.w3_prime {
        row(&mut report, "biequivalence_w3_prime".into(), "biequivalence (w3')".into(), text(c));
    }
    let summary = [
        ("trivial_fibration", r.is_trivial_fibration()),
        ("naive_fibration", r.is_naive_fibration()),
        ("double_biequivalence", r.is_biequivalence()),
        ("source_equipment", r.equipments.0),
        ("target_equipment", r.equipments.1),
    ];
    report.line("");
    for (k, v) in summary {
        report.line(format!("{:<34} {v}", k.replace('_', " ")));
    }
    let consistency: Vec<Value> = r
        .consistency
        .iter()
        .map(|c| json!({"check": c.name, "holds": c.holds}))
        .collect();
    for c in &r.consistency {
        report.line(format!("consistency: {} ... {}", c.name, if c.holds { "holds" } else { "VIOLATED" }));
    }
    if !r.is_consistent() {
        report.fail();
    }
    report
        .set("conditions", rows.into_iter().collect::<Map<_, _>>())
        .set("summary", summary.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<Map<_, _>>())
        .set("consistency", consistency);
    Ok(report)
}

pub fn lift(reference: &str, against: &str) -> Result<Report, Fatal> {
    let mut report = Report::new("lift");
    report.config("functor", reference).config("against", against);
    let f = checked_functor(reference)?;
    let generators = match against {
        "I" => generating_cofibrations(),
        "J" => anodyne_generators(),
        path => {
            let text = input::read(Path::new(path))?;
            let i = parse_inclusion_file(path, &text).map_err(|e| Fatal::usage(format!("{path}: {e}")))?;
            vec![i]
        }
    };
    let mut rows = Vec::new();
    for i in &generators {
        let r = has_rlp(&f, i);
        report.line(outcome_line(&i.name, &r));
        if r.is_err() {
            report.fail();
        }
        let mut v = outcome(&r);
        v["inclusion"] = json!(i.name);
        rows.push(v);
    }
    report.set("holds", report.ok).set("inclusions", rows);
    Ok(report)
}

// invariance

pub struct InvarianceArgs<'a> {
    pub input: &'a str,
    pub depth: usize,
    pub count: usize,
    pub seed: u64,
    pub diagram: Option<&'a str>,
    pub list: bool,
}

pub fn invariance(args: &InvarianceArgs) -> Result<Report, Fatal> {
    let mut report = Report::new("invariance");
    report
        .config("input", args.input)
        .config("depth", args.depth)
        .config("count", args.count)
        .config("seed", args.seed);
    let functor = |f: DoubleFunctor| -> Result<(Span, String, Option<String>), Fatal> {
        check_functor(&f).map_err(Fatal::semantic)?;
        let diagram = args.diagram.unwrap_or("dblcat").to_string();
        let tf = dblfolds::classify::is_trivial_fibration(&f)
            .err()
            .map(|e: Failure| format!("not a trivial fibration: {e}"));
        let id = DoubleFunctor::identity(f.dom.clone());
        Ok((span_of(&id, &f, &diagram)?, diagram, tf))
    };
    let (span, diagram, precondition) = match builtin_name(args.input) {
        Some(_) => functor(input::functor(args.input)?)?,
        None => {
            let p = Path::new(args.input);
            let text = input::read(p)?;
            match detect(&text) {
                FileKind::Functor => functor(input::functor_text(&text, p.parent())?)?,
                FileKind::Span => {
                    let s = input::span_file(p, args.diagram)?;
                    report.config("span", s.description.clone());
                    (s.span, s.diagram, None)
                }
                k => return Err(Fatal::usage(format!("{}: expected a functor or span file, found a {}", args.input, k.name()))),
            }
        }
    };
    report.config("diagram", diagram.clone());
    let sig = span.left.target().signature().clone();
    let sentences: Vec<Formula> = generate_sentences(&sig, args.depth, args.count, args.seed);
    let summary = run_invariance(&span, &sentences).map_err(logic_error)?;
    let not_applicable = precondition.or(summary.not_applicable.clone());

    let (l, r) = (span.left.target(), span.right.target());
    report
        .line(format!("left foot:  {}", sizes_text(l)))
        .line(format!("right foot: {}", sizes_text(r)))
        .line(format!(
            "{} sentences: {} agree true, {} agree false, {} disagree",
            summary.total(),
            summary.agree_true,
            summary.agree_false,
            summary.disagreements.len()
        ));
    if args.list {
        let mut d = summary.disagreements.iter().peekable();
        for (i, phi) in sentences.iter().enumerate() {
            let mark = match d.peek() {
                Some(&&(j, a, b)) if j == i => {
                    d.next();
                    format!("DISAGREE {a}/{b}")
                }
                _ => String::new(),
            };
            report.line(format!("[{i}] {phi} {mark}").trim_end().to_string());
        }
    }
    let disagreements: Vec<Value> = summary
        .disagreements
        .iter()
        .map(|&(i, a, b)| json!({"index": i, "sentence": sentences[i].to_string(), "left": a, "right": b}))
        .collect();
    for &(i, a, b) in &summary.disagreements {
        report.line(format!(
            "disagreement at sentence {i} (seed {}, depth {}): left {a}, right {b}: {}",
            args.seed, args.depth, sentences[i]
        ));
    }
    if !summary.disagreements.is_empty() {
        report.line(if not_applicable.is_some() {
            "the span does not meet the hypotheses, so disagreements are possible"
        } else {
            "a disagreement along a valid span is a defect in this tool; the data above reproduces it"
        });
    }
    match &not_applicable {
        Some(why) => {
            report.fail().line(format!("not applicable: {why}"));
        }
        None if !summary.disagreements.is_empty() => {
            report.fail();
        }
        None => {}
    }
    report
        .set("sentences", summary.total())
        .set("agree_true", summary.agree_true)
        .set("agree_false", summary.agree_false)
        .set("disagreements", disagreements)
        .set("not_applicable", not_applicable.map_or(Value::Null, Value::from))
        .set("left_foot", carrier_sizes(l))
        .set("right_foot", carrier_sizes(r));
    if args.list {
        report.set("sentence_list", sentences.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    }
    Ok(report)
}
