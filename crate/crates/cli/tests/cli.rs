use std::fs;
use std::path::PathBuf;
use std::process::Command;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_dblfolds"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn fixture(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dblfolds-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

const BROKEN_INTERCHANGE: &str = "\
# one globular square x with x|x = x but x/x = e
objects: *
hmor: 1_*: * -> *
vmor: 1_*: * => *
sq: e [top=1_* bottom=1_* left=1_* right=1_*]
sq: x [top=1_* bottom=1_* left=1_* right=1_*]
idh * = 1_*
idv * = 1_*
idsq_h 1_* = e
idsq_v 1_* = e
sq_hcomp: x.x = x
sq_vcomp: x.x = e
";

#[test]
fn validate_builtin_corpus() {
    let r = run(&["validate"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains(" 0 failed"), "{}", r.stdout);
    assert!(r.stdout.contains("builtin:sq_iso (double category)"));
    assert!(r.stdout.contains("builtin:dblcat (signature)"));
}

#[test]
fn broken_interchange_is_a_validation_failure() {
    let p = fixture("broken.dbl", BROKEN_INTERCHANGE);
    let r = run(&["validate", p.to_str().unwrap()]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("interchange law violated at"), "{}", r.stdout);
}

#[test]
fn missing_files_and_syntax_errors_exit_2() {
    let r = run(&["validate", "/nonexistent/file.dbl"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.starts_with("error:"));
    let p = fixture("syntax.dbl", "objects: a\nhmor f: a -> a\n");
    assert_eq!(run(&["validate", p.to_str().unwrap()]).code, 2);
    assert_eq!(run(&["validate", "builtin:no_such_thing"]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    let r = run(&["eval", "--builtin", "one", "forall x:O. ("]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("syntax error"), "{}", r.stderr);
}

#[test]
fn functor_files_resolve_builtins_and_relative_paths() {
    let broken = fixture("b.dbl", BROKEN_INTERCHANGE);
    let f = fixture("collapse.fun", "source: builtin:two_v\ntarget: builtin:one\nobj: 0 -> *\nobj: 1 -> *\nvmor: u -> 1_*\n");
    let r = run(&["validate", f.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("(double functor)"));
    let g = fixture("onto_broken.fun", "source: builtin:one\ntarget: b.dbl\nobj: * -> *\n");
    let r = run(&["validate", g.to_str().unwrap()]);
    assert_eq!(r.code, 1, "{}{}", r.stdout, r.stderr);
    assert!(r.stdout.contains("target: interchange"), "{}", r.stdout);
    drop(broken);
}

#[test]
fn classify_reports_every_condition() {
    let r = run(&["classify", "--builtin", "id_sq_iso"]);
    assert_eq!(r.code, 0);
    for l in r.stdout.lines().filter(|l| l.starts_with("naive fibration (") || l.starts_with("biequivalence (")) {
        assert!(l.ends_with("true"), "{l}");
    }
    let r = run(&["classify", "builtin:discrete2->one", "--format", "structured"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("\"trivial_fibration\": false"), "{}", r.stdout);
    let r = run(&["classify", "builtin:two_v->one"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("trivial fibration                  false"));
    assert!(!r.stdout.contains("VIOLATED"));
}

#[test]
fn lift_exit_codes() {
    assert_eq!(run(&["lift", "builtin:id_square", "--against", "I"]).code, 0);
    assert_eq!(run(&["lift", "builtin:id_sq_iso", "--against", "J"]).code, 0);
    let r = run(&["lift", "builtin:discrete2->one"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("no lift against `two_points->H2`"), "{}", r.stdout);
    let inc = fixture(
        "point_in_h2.inc",
        "objects: a b\nhmor: f: a -> b\ninclude: a\n",
    );
    let r = run(&["lift", "builtin:two_h->one", "--against", inc.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
}

#[test]
fn eval_on_builtins_and_presheaf_files() {
    let r = run(&["eval", "--builtin", "chaotic2", "--diagram", "cat", "forall x:O. forall y:O. exists f:A(x,y). true"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout.lines().nth(1), Some("true"));
    let r = run(&["eval", "builtin:two", "--diagram", "cat", "forall x:O. forall y:O. exists f:A(x,y). true"]);
    assert_eq!(r.stdout.lines().nth(1), Some("false"));

    let p = fixture(
        "arrow.psh",
        "signature: cat\nO: x y\nA: f 1x 1y\nI': ix iy\nT': a b c d\nE': ef e1x e1y\n\
         arrow s: f -> x\narrow t: f -> y\narrow s: 1x -> x\narrow t: 1x -> x\narrow s: 1y -> y\narrow t: 1y -> y\n\
         arrow i: ix -> 1x\narrow i: iy -> 1y\n\
         arrow l: a -> 1x\narrow r: a -> 1x\narrow c: a -> 1x\n\
         arrow l: b -> 1x\narrow r: b -> f\narrow c: b -> f\n\
         arrow l: c -> f\narrow r: c -> 1y\narrow c: c -> f\n\
         arrow l: d -> 1y\narrow r: d -> 1y\narrow c: d -> 1y\n\
         arrow l: ef -> f\narrow r: ef -> f\narrow l: e1x -> 1x\narrow r: e1x -> 1x\narrow l: e1y -> 1y\narrow r: e1y -> 1y\n",
    );
    let ps = p.to_str().unwrap();
    assert_eq!(run(&["validate", ps]).code, 0);
    let r = run(&["eval", ps, "exists f:A(x,y). true"]);
    assert_eq!(r.code, 2, "free variables need an interpretation");
    let r = run(&["eval", ps, "exists f:A(x,y). true", "--at", "x=x", "--at", "y=y"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("\ntrue\n"));
    let r = run(&["eval", ps, "exists f:A(x,y). true", "--at", "x=y", "--at", "y=x"]);
    assert!(r.stdout.contains("\nfalse\n"));
    let r = run(&["eval", ps, "exists f:A(x,y). true", "--at", "x=f", "--at", "y=x"]);
    assert_eq!(r.code, 1, "kind mismatch is a semantic failure");
}

#[test]
fn nerve_output_is_a_valid_presheaf_file() {
    let r = run(&["nerve", "--builtin", "sq_iso"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("signature: dblcat\n"));
    let p = fixture("nerve.psh", &r.stdout);
    let v = run(&["validate", p.to_str().unwrap()]);
    assert_eq!(v.code, 0, "{}", v.stdout);
    let s = run(&["eval", p.to_str().unwrap(), "forall x:O. exists f:H(x,x). true"]);
    assert_eq!(s.code, 0, "{}", s.stderr);
    assert!(s.stdout.contains("\ntrue\n"));
    assert_eq!(run(&["nerve", "--builtin", "one", "--diagram", "nope"]).code, 2);
}

#[test]
fn invariance_along_spans() {
    let span = fixture("ic.span", "iso_comma: builtin:chaotic2 0\n");
    let r = run(&["invariance", span.to_str().unwrap(), "--count", "50"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("left foot:  O=1"));
    assert!(r.stdout.contains("right foot: O=2"));
    assert!(r.stdout.contains("0 disagree"));

    let r = run(&["invariance", "builtin:id_square", "--depth", "3", "--count", "40"]);
    assert_eq!(r.code, 0);

    let bad = fixture("bad.span", "left: builtin:id_discrete2\nright: builtin:discrete2->one\n");
    let r = run(&["invariance", bad.to_str().unwrap(), "--count", "20"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("not applicable: right leg"), "{}", r.stdout);

    let r = run(&["invariance", "builtin:two_v->one", "--depth", "3", "--count", "100", "--seed", "7"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("not applicable: not a trivial fibration"), "{}", r.stdout);
}

#[test]
fn structured_reports_are_deterministic() {
    let args = ["invariance", "builtin:sq_iso->one", "--count", "30", "--format", "structured", "--list"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(doc["status"], "ok");
    assert_eq!(doc["config"]["seed"], 0);
    assert_eq!(doc["result"]["sentence_list"].as_array().unwrap().len(), 30);
    let keys: Vec<&String> = doc.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["command", "config", "result", "status", "tool", "version"]);
    assert_ne!(run(&["invariance", "builtin:sq_iso->one", "--count", "30", "--seed", "1", "--format", "structured", "--list"]).stdout, a.stdout);
}
