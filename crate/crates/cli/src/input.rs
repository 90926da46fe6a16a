//! Resolution of command-line inputs: `builtin:<name>` references and
//! files in the line-oriented formats.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use dblfolds::dblcat::corpus::{builtin, builtin_category, builtin_functor, BUILTIN_NAMES, CATEGORY_NAMES};
use dblfolds::dblcat::{
    embed_functor, horizontal_embedding, iso_comma, parse_double_category, parse_raw_double_functor, CategoryFunctor,
    DoubleFunctor, Finite2Category, FiniteCategory, FiniteDoubleCategory,
};
use dblfolds::presheaf::{parse_presheaf, Presheaf, Span};
use dblfolds::signature::{builtin_signature, BuiltinSignature, FoldsSignature};
use dblfolds::{DblCatError, PresheafError};

use crate::report::Fatal;

pub fn builtin_name(s: &str) -> Option<&str> {
    s.strip_prefix("builtin:")
}

pub fn read(path: &Path) -> Result<String, Fatal> {
    fs::read_to_string(path).map_err(|e| Fatal::usage(format!("{}: {e}", path.display())))
}

/// What a file holds, guessed from its directives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileKind {
    Signature,
    Presheaf,
    DoubleCategory,
    Functor,
    Span,
}

impl FileKind {
    pub fn name(self) -> &'static str {
        match self {
            FileKind::Signature => "signature",
            FileKind::Presheaf => "presheaf",
            FileKind::DoubleCategory => "double category",
            FileKind::Functor => "double functor",
            FileKind::Span => "span",
        }
    }
}

pub fn detect(text: &str) -> FileKind {
    let heads: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .filter_map(|l| l.split_once(':').map(|(h, _)| h.trim()))
        .collect();
    let has = |k: &str| heads.contains(&k);
    if has("left") || has("right") || has("iso_comma") {
        FileKind::Span
    } else if has("source") || has("target") {
        FileKind::Functor
    } else if has("objects") || has("hmor") || has("vmor") || has("sq") {
        FileKind::DoubleCategory
    } else if has("kinds") || has("relsymbols") || has("relations") || has("arrows") {
        FileKind::Signature
    } else {
        FileKind::Presheaf
    }
}

pub fn signature(name: &str) -> Result<(BuiltinSignature, Arc<FoldsSignature>), Fatal> {
    let which: BuiltinSignature = name.parse().map_err(|e| Fatal::usage(format!("{e}")))?;
    Ok((which, builtin_signature(which)))
}

pub fn dblcat_error(e: DblCatError) -> Fatal {
    match e {
        DblCatError::Parse(p) => Fatal::usage(p.to_string()),
        DblCatError::UnknownBuiltin(n) => Fatal::usage(format!("unknown builtin `{n}`")),
        e => Fatal::semantic(e.to_string()),
    }
}

pub fn presheaf_error(e: PresheafError) -> Fatal {
    match e {
        PresheafError::Parse(p) => Fatal::usage(p.to_string()),
        PresheafError::Signature(s) => Fatal::usage(s.to_string()),
        e => Fatal::semantic(e.to_string()),
    }
}

/// A builtin double category, falling back to the horizontal embedding of a
/// builtin category.
pub fn builtin_double(name: &str) -> Result<FiniteDoubleCategory, Fatal> {
    if BUILTIN_NAMES.contains(&name) {
        return builtin(name).map_err(dblcat_error);
    }
    if CATEGORY_NAMES.contains(&name) {
        let c = builtin_category(name).map_err(dblcat_error)?;
        return Ok(horizontal_embedding(&Finite2Category::locally_discrete(c)));
    }
    Err(Fatal::usage(format!("unknown builtin double category `{name}`")))
}

/// A double category given as `builtin:<name>` or a file. Files are
/// assembled but not checked against the laws.
pub fn double_category(reference: &str, base: Option<&Path>) -> Result<FiniteDoubleCategory, Fatal> {
    match builtin_name(reference) {
        Some(n) => builtin_double(n),
        None => parse_double_category(&read(&relative(reference, base))?).map_err(dblcat_error),
    }
}

fn relative(reference: &str, base: Option<&Path>) -> PathBuf {
    let p = Path::new(reference);
    match base {
        Some(dir) if p.is_relative() => dir.join(p),
        _ => p.to_path_buf(),
    }
}

/// A double functor given as `builtin:<corpus name>` or a functor file
/// whose endpoints are resolved relative to the file.
pub fn functor(reference: &str) -> Result<DoubleFunctor, Fatal> {
    if let Some(n) = builtin_name(reference) {
        return builtin_functor(n).map_err(dblcat_error);
    }
    let path = Path::new(reference);
    functor_text(&read(path)?, path.parent())
}

pub fn functor_text(text: &str, base: Option<&Path>) -> Result<DoubleFunctor, Fatal> {
    let raw = parse_raw_double_functor(text).map_err(|e| Fatal::usage(e.to_string()))?;
    let dom = Arc::new(double_category(&raw.source, base)?);
    let cod = Arc::new(double_category(&raw.target, base)?);
    DoubleFunctor::from_named(dom, cod, &raw.obj, &raw.h, &raw.v, &raw.sq).map_err(dblcat_error)
}

/// A presheaf file; the signature comes from its `signature:` line or from
/// the flag.
pub fn presheaf(path: &Path, flag: Option<&str>) -> Result<(String, Presheaf), Fatal> {
    let text = read(path)?;
    let declared = dblfolds::presheaf::parse_raw_presheaf(&text)
        .map_err(|e| Fatal::usage(e.to_string()))?
        .signature;
    let name = match (declared, flag) {
        (Some(d), Some(f)) if d.parse::<BuiltinSignature>().ok() != f.parse().ok() => {
            return Err(Fatal::usage(format!("file declares signature `{d}` but `{f}` was requested")))
        }
        (Some(d), _) => d,
        (None, Some(f)) => f.to_string(),
        (None, None) => return Err(Fatal::usage("the presheaf names no signature; pass --signature")),
    };
    let (_, sig) = signature(&name)?;
    let x = parse_presheaf(sig, &text).map_err(presheaf_error)?;
    Ok((name, x))
}

/// The span described by a span file: either two functors with a common
/// domain, or the iso-comma span of a functor from the terminal category
/// picking an object of a builtin category.
pub struct SpanSpec {
    pub span: Span,
    pub diagram: String,
    pub description: String,
}

pub fn span_file(path: &Path, diagram_flag: Option<&str>) -> Result<SpanSpec, Fatal> {
    let text = read(path)?;
    let base = path.parent();
    let (mut left, mut right, mut comma, mut diagram) = (None, None, None, None);
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (kw, body) = line
            .split_once(':')
            .ok_or_else(|| Fatal::usage(format!("line {}: expected `keyword: value`", n + 1)))?;
        let body = body.trim().to_string();
        match kw.trim() {
            "left" => left = Some(body),
            "right" => right = Some(body),
            "iso_comma" => comma = Some(body),
            "diagram" => diagram = Some(body),
            k => return Err(Fatal::usage(format!("line {}: unknown directive `{k}`", n + 1))),
        }
    }
    let diagram = diagram_flag.map(str::to_string).or(diagram);
    let load = |r: &str| match builtin_name(r) {
        Some(_) => functor(r),
        None => functor(&relative(r, base).to_string_lossy()),
    };
    match (left, right, comma) {
        (Some(l), Some(r), None) => {
            let (lf, rf) = (load(&l)?, load(&r)?);
            let diagram = diagram.unwrap_or_else(|| "dblcat".into());
            let span = crate::commands::span_of(&lf, &rf, &diagram)?;
            Ok(SpanSpec {
                span,
                diagram,
                description: format!("{l} <- . -> {r}"),
            })
        }
        (None, None, Some(c)) => {
            let mut words = c.split_whitespace();
            let (Some(cat), Some(obj), None) = (words.next(), words.next(), words.next()) else {
                return Err(Fatal::usage("expected `iso_comma: builtin:<category> <object>`"));
            };
            let diagram = diagram.unwrap_or_else(|| "cat".into());
            let span = iso_comma_span(cat, obj, &diagram)?;
            Ok(SpanSpec {
                span,
                diagram,
                description: format!("iso-comma of the point {obj} of {cat}"),
            })
        }
        _ => Err(Fatal::usage("a span file needs `left:` and `right:`, or `iso_comma:`")),
    }
}

fn category(reference: &str) -> Result<FiniteCategory, Fatal> {
    let n = builtin_name(reference).ok_or_else(|| Fatal::usage("categories are builtin only: use builtin:<name>"))?;
    if !CATEGORY_NAMES.contains(&n) {
        return Err(Fatal::usage(format!("unknown builtin category `{n}`")));
    }
    builtin_category(n).map_err(dblcat_error)
}

/// `N(1) <- N(1 ↓ D) -> N(D)` for the functor `1 -> D` picking `obj`.
pub fn iso_comma_span(cat: &str, obj: &str, diagram: &str) -> Result<Span, Fatal> {
    let one = builtin_category("one").map_err(dblcat_error)?;
    let d = category(cat)?;
    let o = d.object(obj).ok_or_else(|| Fatal::usage(format!("`{cat}` has no object `{obj}`")))?;
    let f = CategoryFunctor {
        obj: vec![o],
        mor: vec![d.ids[o]],
    };
    let ic = iso_comma(&one, &d, &f);
    let left = embed_functor(&ic.category, &one, &ic.to_domain).map_err(dblcat_error)?;
    let right = embed_functor(&ic.category, &d, &ic.to_codomain).map_err(dblcat_error)?;
    crate::commands::span_of(&left, &right, diagram)
}
