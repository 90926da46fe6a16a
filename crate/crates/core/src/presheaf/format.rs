use std::sync::Arc;

use crate::error::{ParseError, PresheafError};
use crate::signature::FoldsSignature;
use crate::text::{ident, lines, split_label};

use super::{NatTransf, Presheaf, RawPresheaf};

/// Parses the presheaf format:
///
/// ```text
/// signature: cat
/// O: x y
/// A: f
/// arrow s: f -> x
/// arrow t: f -> y
/// ```
pub fn parse_raw_presheaf(text: &str) -> Result<RawPresheaf, ParseError> {
    let mut raw = RawPresheaf::default();
    for (n, line) in lines(text) {
        if let Some(rest) = line.strip_prefix("arrow ") {
            let (name, map) = split_label(rest)
                .ok_or_else(|| ParseError::new(n, "expected `arrow a: e -> e'`"))?;
            let (e, img) = map
                .split_once("->")
                .ok_or_else(|| ParseError::new(n, "expected `e -> e'`"))?;
            raw.actions
                .push((name.to_string(), ident(n, e)?, ident(n, img)?));
            continue;
        }
        let (head, rest) =
            split_label(line).ok_or_else(|| ParseError::new(n, "expected `Kind: elements`"))?;
        if head == "signature" {
            raw.signature = Some(ident(n, rest)?);
            continue;
        }
        let elems = rest
            .split_whitespace()
            .map(|e| ident(n, e))
            .collect::<Result<Vec<_>, _>>()?;
        raw.carriers.push((head.to_string(), elems));
    }
    Ok(raw)
}

pub fn parse_presheaf(sig: Arc<FoldsSignature>, text: &str) -> Result<Presheaf, PresheafError> {
    let raw = parse_raw_presheaf(text)?;
    Presheaf::from_raw(sig, &raw)
}

pub fn serialize_presheaf(x: &Presheaf, signature_name: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(s) = signature_name {
        out.push_str(&format!("signature: {s}\n"));
    }
    let sig = x.signature();
    for k in 0..sig.kind_count() {
        out.push_str(&format!("{}:", sig.kind_name(k)));
        for e in x.carrier(k) {
            out.push(' ');
            out.push_str(e);
        }
        out.push('\n');
    }
    for (a, arrow) in sig.arrows().iter().enumerate() {
        for (i, &j) in x.action(a).iter().enumerate() {
            out.push_str(&format!(
                "arrow {}: {} -> {}\n",
                arrow.name,
                x.element_name(arrow.source, i),
                x.element_name(arrow.target, j)
            ));
        }
    }
    out
}

/// Parses `at K: e |-> e'` lines into a transformation between the given
/// presheaves.
pub fn parse_nat_transf(
    source: Presheaf,
    target: Presheaf,
    text: &str,
) -> Result<NatTransf, PresheafError> {
    let mut pairs = Vec::new();
    for (n, line) in lines(text) {
        let rest = line
            .strip_prefix("at ")
            .ok_or_else(|| ParseError::new(n, "expected `at K: e |-> e'`"))?;
        let (k, map) =
            split_label(rest).ok_or_else(|| ParseError::new(n, "expected `at K: e |-> e'`"))?;
        let (e, img) = map
            .split_once("|->")
            .ok_or_else(|| ParseError::new(n, "expected `e |-> e'`"))?;
        pairs.push((k.to_string(), ident(n, e)?, ident(n, img)?));
    }
    NatTransf::from_named(source, target, &pairs)
}

pub fn serialize_nat_transf(t: &NatTransf) -> String {
    let sig = t.source().signature();
    let mut out = String::new();
    for k in 0..sig.kind_count() {
        for (i, &j) in t.component(k).iter().enumerate() {
            out.push_str(&format!(
                "at {}: {} |-> {}\n",
                sig.kind_name(k),
                t.source().element_name(k, i),
                t.target().element_name(k, j)
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signature::{builtin_signature, BuiltinSignature};

    #[test]
    fn presheaf_round_trip() {
        let sig = builtin_signature(BuiltinSignature::Cat);
        let text = "O: x y\nA: f\narrow s: f -> x\narrow t: f -> y\n";
        let x = parse_presheaf(sig.clone(), text).unwrap();
        let back = parse_presheaf(sig, &serialize_presheaf(&x, Some("cat"))).unwrap();
        assert_eq!(x, back);
    }

    #[test]
    fn nat_transf_round_trip() {
        let sig = builtin_signature(BuiltinSignature::Cat);
        let x = parse_presheaf(sig.clone(), "O: x y\n").unwrap();
        let y = parse_presheaf(sig, "O: z\n").unwrap();
        let t = parse_nat_transf(x.clone(), y.clone(), "at O: x |-> z\nat O: y |-> z\n").unwrap();
        let back = parse_nat_transf(x, y, &serialize_nat_transf(&t)).unwrap();
        assert_eq!(t, back);
    }
}
