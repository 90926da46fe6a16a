//! Line-oriented text formats for double categories and double functors.
//!
//! ```text
//! objects: a b
//! hmor: f: a -> b
//! vmor: u: a => b
//! sq: s [top=f bottom=f left=1_a right=1_b]
//! hcomp: g.f = h        # g after f
//! vcomp: w.u = x
//! sq_hcomp: t.s = r     # s on the left, t on the right
//! sq_vcomp: t.s = r     # s on top, t below
//! idh a = 1_a
//! idv a = 1_a
//! idsq_h u = 1_u
//! idsq_v f = e_f
//! ```
//!
//! Composites with an identity may be omitted. A functor file names its
//! endpoints and maps cells sort by sort; identity cells may be omitted.
//!
//! ```text
//! source: builtin:two_v
//! target: builtin:one
//! obj: a -> *
//! vmor: u -> 1_*
//! ```

use std::fmt::Write;

use crate::error::{DblCatError, ParseError};
use crate::text::{ident, lines, split_label};

use super::double::{FiniteDoubleCategory, RawDoubleCategory};
use super::functor::DoubleFunctor;

fn arrow_pair(n: usize, body: &str, arrow: &str) -> Result<(String, String, String), ParseError> {
    let (name, rest) = split_label(body).ok_or_else(|| ParseError::new(n, format!("expected `name: src {arrow} tgt`")))?;
    let (s, t) = rest
        .split_once(arrow)
        .ok_or_else(|| ParseError::new(n, format!("expected `{arrow}`")))?;
    Ok((name.to_string(), ident(n, s)?, ident(n, t)?))
}

fn composite(n: usize, body: &str) -> Result<(String, String, String), ParseError> {
    let (lhs, c) = body
        .split_once('=')
        .ok_or_else(|| ParseError::new(n, "expected `second.first = composite`"))?;
    let (second, first) = lhs
        .split_once('.')
        .ok_or_else(|| ParseError::new(n, "expected `second.first`"))?;
    Ok((ident(n, first)?, ident(n, second)?, ident(n, c)?))
}

fn designation(n: usize, body: &str) -> Result<(String, String), ParseError> {
    let (k, v) = body
        .split_once('=')
        .ok_or_else(|| ParseError::new(n, "expected `key = value`"))?;
    Ok((ident(n, k)?, ident(n, v)?))
}

fn square(n: usize, body: &str) -> Result<(String, String, String, String, String), ParseError> {
    let (name, rest) = body
        .split_once('[')
        .ok_or_else(|| ParseError::new(n, "expected `name [top=.. bottom=.. left=.. right=..]`"))?;
    let rest = rest
        .trim()
        .strip_suffix(']')
        .ok_or_else(|| ParseError::new(n, "missing `]`"))?;
    let mut sides: [Option<String>; 4] = Default::default();
    for item in rest.split_whitespace() {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| ParseError::new(n, format!("expected `side=name`, found `{item}`")))?;
        let slot = match k {
            "top" => 0,
            "bottom" => 1,
            "left" => 2,
            "right" => 3,
            _ => return Err(ParseError::new(n, format!("unknown side `{k}`"))),
        };
        sides[slot] = Some(ident(n, v)?);
    }
    let [t, b, l, r] = sides;
    let missing = || ParseError::new(n, "square needs top, bottom, left and right");
    Ok((
        ident(n, name)?,
        t.ok_or_else(missing)?,
        b.ok_or_else(missing)?,
        l.ok_or_else(missing)?,
        r.ok_or_else(missing)?,
    ))
}

pub fn parse_raw_double_category(text: &str) -> Result<RawDoubleCategory, ParseError> {
    let mut raw = RawDoubleCategory::default();
    for (n, l) in lines(text) {
        let (kw, body) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let body = body.trim();
        match kw {
            "objects:" => {
                for o in body.split_whitespace() {
                    raw.objects.push(ident(n, o)?);
                }
            }
            "hmor:" => raw.hmors.push(arrow_pair(n, body, "->")?),
            "vmor:" => raw.vmors.push(arrow_pair(n, body, "=>")?),
            "sq:" => raw.squares.push(square(n, body)?),
            "hcomp:" => raw.hcomp.push(composite(n, body)?),
            "vcomp:" => raw.vcomp.push(composite(n, body)?),
            "sq_hcomp:" => raw.sq_hcomp.push(composite(n, body)?),
            "sq_vcomp:" => raw.sq_vcomp.push(composite(n, body)?),
            "idh" => raw.idh.push(designation(n, body)?),
            "idv" => raw.idv.push(designation(n, body)?),
            "idsq_h" => raw.idsq_h.push(designation(n, body)?),
            "idsq_v" => raw.idsq_v.push(designation(n, body)?),
            _ => return Err(ParseError::new(n, format!("unknown directive `{kw}`"))),
        }
    }
    Ok(raw)
}

/// Parses and assembles a double category. Laws are not checked; see
/// [`super::validate_double_category`].
pub fn parse_double_category(text: &str) -> Result<FiniteDoubleCategory, DblCatError> {
    FiniteDoubleCategory::from_raw(&parse_raw_double_category(text)?)
}

pub fn serialize_double_category(a: &FiniteDoubleCategory) -> String {
    let mut out = String::new();
    let o = a.objects();
    let _ = writeln!(out, "objects: {}", o.join(" "));
    for m in a.hmors() {
        let _ = writeln!(out, "hmor: {}: {} -> {}", m.name, o[m.src], o[m.tgt]);
    }
    for m in a.vmors() {
        let _ = writeln!(out, "vmor: {}: {} => {}", m.name, o[m.src], o[m.tgt]);
    }
    let (h, v) = (a.hmors(), a.vmors());
    for s in a.squares() {
        let _ = writeln!(
            out,
            "sq: {} [top={} bottom={} left={} right={}]",
            s.name, h[s.top].name, h[s.bottom].name, v[s.left].name, v[s.right].name
        );
    }
    for x in 0..o.len() {
        let _ = writeln!(out, "idh {} = {}", o[x], h[a.hid(x)].name);
        let _ = writeln!(out, "idv {} = {}", o[x], v[a.vid(x)].name);
    }
    let sq = a.squares();
    for u in 0..v.len() {
        let _ = writeln!(out, "idsq_h {} = {}", v[u].name, sq[a.sq_hid(u)].name);
    }
    for f in 0..h.len() {
        let _ = writeln!(out, "idsq_v {} = {}", h[f].name, sq[a.sq_vid(f)].name);
    }
    let [th, tv, tsh, tsv] = a.tables();
    for (x, y, z) in th.entries() {
        if !a.is_hid(x) && !a.is_hid(y) {
            let _ = writeln!(out, "hcomp: {}.{} = {}", h[y].name, h[x].name, h[z].name);
        }
    }
    for (x, y, z) in tv.entries() {
        if !a.is_vid(x) && !a.is_vid(y) {
            let _ = writeln!(out, "vcomp: {}.{} = {}", v[y].name, v[x].name, v[z].name);
        }
    }
    let is_sq_hid = |s: usize| a.sq_hid(sq[s].left) == s;
    let is_sq_vid = |s: usize| a.sq_vid(sq[s].top) == s;
    for (x, y, z) in tsh.entries() {
        if !is_sq_hid(x) && !is_sq_hid(y) {
            let _ = writeln!(out, "sq_hcomp: {}.{} = {}", sq[y].name, sq[x].name, sq[z].name);
        }
    }
    for (x, y, z) in tsv.entries() {
        if !is_sq_vid(x) && !is_sq_vid(y) {
            let _ = writeln!(out, "sq_vcomp: {}.{} = {}", sq[y].name, sq[x].name, sq[z].name);
        }
    }
    out
}

/// A double functor file before its endpoints are resolved.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawDoubleFunctor {
    pub source: String,
    pub target: String,
    pub obj: Vec<(String, String)>,
    pub h: Vec<(String, String)>,
    pub v: Vec<(String, String)>,
    pub sq: Vec<(String, String)>,
}

pub fn parse_raw_double_functor(text: &str) -> Result<RawDoubleFunctor, ParseError> {
    let mut raw = RawDoubleFunctor::default();
    let mut source = None;
    let mut target = None;
    for (n, l) in lines(text) {
        let (kw, body) = l
            .split_once(':')
            .ok_or_else(|| ParseError::new(n, "expected `keyword: ...`"))?;
        let body = body.trim();
        let pair = || -> Result<(String, String), ParseError> {
            let (a, b) = body
                .split_once("->")
                .ok_or_else(|| ParseError::new(n, "expected `cell -> image`"))?;
            Ok((ident(n, a)?, ident(n, b)?))
        };
        match kw.trim() {
            "source" => source = Some(body.to_string()),
            "target" => target = Some(body.to_string()),
            "obj" => raw.obj.push(pair()?),
            "hmor" => raw.h.push(pair()?),
            "vmor" => raw.v.push(pair()?),
            "sq" => raw.sq.push(pair()?),
            k => return Err(ParseError::new(n, format!("unknown directive `{k}`"))),
        }
    }
    raw.source = source.ok_or_else(|| ParseError::new(0, "missing `source:`"))?;
    raw.target = target.ok_or_else(|| ParseError::new(0, "missing `target:`"))?;
    Ok(raw)
}

pub fn serialize_double_functor(f: &DoubleFunctor, source: &str, target: &str) -> String {
    let mut out = format!("source: {source}\ntarget: {target}\n");
    let [o, h, v, s] = f.named_maps();
    for (kw, list) in [("obj", o), ("hmor", h), ("vmor", v), ("sq", s)] {
        for (a, b) in list {
            let _ = writeln!(out, "{kw}: {a} -> {b}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dblcat::{sq_of_2cat, validate_double_category, Finite2Category, FiniteCategory};

    #[test]
    fn round_trip() {
        let two = FiniteCategory::free(&["0", "1"], &[("f", "0", "1")]).unwrap();
        let sq = sq_of_2cat(&Finite2Category::locally_discrete(two));
        let text = serialize_double_category(&sq);
        let back = parse_double_category(&text).unwrap();
        assert_eq!(back, sq);
        validate_double_category(&back).unwrap();
    }

    #[test]
    fn hand_written() {
        let text = "objects: a b\nhmor: f: a -> b\nhmor: 1_a: a -> a\nhmor: 1_b: b -> b\n\
                    vmor: 1_a: a => a\nvmor: 1_b: b => b\n\
                    sq: 1_a [top=1_a bottom=1_a left=1_a right=1_a]\n\
                    sq: 1_b [top=1_b bottom=1_b left=1_b right=1_b]\n\
                    sq: e_f [top=f bottom=f left=1_a right=1_b]\n\
                    idh a = 1_a\nidh b = 1_b\nidv a = 1_a\nidv b = 1_b\n\
                    idsq_h 1_a = 1_a\nidsq_h 1_b = 1_b\n\
                    idsq_v 1_a = 1_a\nidsq_v 1_b = 1_b\nidsq_v f = e_f\n";
        let a = parse_double_category(text).unwrap();
        validate_double_category(&a).unwrap();
        assert_eq!(a.size(), (2, 3, 2, 3));
    }

    #[test]
    fn missing_side() {
        assert!(parse_raw_double_category("sq: s [top=f bottom=g left=u]").is_err());
    }
}
