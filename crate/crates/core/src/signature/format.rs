use crate::error::{ParseError, SignatureError};
use crate::text::{ident, lines, split_label};

use super::{FoldsSignature, RawRelation, RawSignature};

#[derive(Clone, Copy, PartialEq)]
enum Section {
    None,
    Kinds,
    RelSymbols,
    Arrows,
    Relations,
}

/// Parses the line-oriented signature format into unvalidated data.
pub fn parse_raw_signature(text: &str) -> Result<RawSignature, ParseError> {
    let mut raw = RawSignature::default();
    let mut section = Section::None;
    for (n, line) in lines(text) {
        let mut body = line;
        if let Some((head, rest)) = split_label(line) {
            let s = match head {
                "kinds" => Some(Section::Kinds),
                "relsymbols" => Some(Section::RelSymbols),
                "arrows" => Some(Section::Arrows),
                "relations" => Some(Section::Relations),
                _ => None,
            };
            if let Some(s) = s {
                section = s;
                body = rest;
                if body.is_empty() {
                    continue;
                }
            }
        }
        match section {
            Section::None => return Err(ParseError::new(n, "expected a section header")),
            Section::Kinds => {
                for k in body.split_whitespace() {
                    raw.kinds.push(ident(n, k)?);
                }
            }
            Section::RelSymbols => {
                for k in body.split_whitespace() {
                    raw.relation_kinds.push(ident(n, k)?);
                }
            }
            Section::Arrows => {
                let (name, ty) = split_label(body)
                    .ok_or_else(|| ParseError::new(n, "expected `name: Src -> Dst`"))?;
                let (src, dst) = ty
                    .split_once("->")
                    .ok_or_else(|| ParseError::new(n, "expected `Src -> Dst`"))?;
                raw.arrows
                    .push((name.to_string(), ident(n, src)?, ident(n, dst)?));
            }
            Section::Relations => raw.relations.push(parse_relation(n, body)?),
        }
    }
    Ok(raw)
}

/// Parses `[K:] a . b = c . d`.
pub(crate) fn parse_relation(n: usize, body: &str) -> Result<RawRelation, ParseError> {
    let (source, eq) = match body.split_once(':') {
        Some((k, rest)) => (Some(ident(n, k)?), rest),
        None => (None, body),
    };
    let (l, r) = eq
        .split_once('=')
        .ok_or_else(|| ParseError::new(n, "expected `=` in relation"))?;
    let word = |s: &str| -> Result<Vec<String>, ParseError> {
        s.split('.').map(|a| ident(n, a)).collect()
    };
    Ok(RawRelation {
        source,
        lhs: word(l)?,
        rhs: word(r)?,
    })
}

pub fn parse_signature(text: &str) -> Result<FoldsSignature, SignatureError> {
    let raw = parse_raw_signature(text)?;
    FoldsSignature::from_raw(&raw).map_err(SignatureError::Invalid)
}

pub fn serialize_signature(sig: &FoldsSignature) -> String {
    serialize_raw(&sig.to_raw())
}

pub fn serialize_raw(raw: &RawSignature) -> String {
    let mut out = String::new();
    out.push_str(&format!("kinds: {}\n", raw.kinds.join(" ")));
    if !raw.relation_kinds.is_empty() {
        out.push_str(&format!("relsymbols: {}\n", raw.relation_kinds.join(" ")));
    }
    out.push_str("arrows:\n");
    for (a, s, t) in &raw.arrows {
        out.push_str(&format!("  {a}: {s} -> {t}\n"));
    }
    if !raw.relations.is_empty() {
        out.push_str("relations:\n");
        for r in &raw.relations {
            let prefix = r.source.as_ref().map(|k| format!("{k}: ")).unwrap_or_default();
            out.push_str(&format!(
                "  {}{} = {}\n",
                prefix,
                r.lhs.join(" . "),
                r.rhs.join(" . ")
            ));
        }
    }
    out
}
