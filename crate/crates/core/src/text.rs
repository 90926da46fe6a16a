//! Helpers shared by the line-oriented file formats.

use crate::error::ParseError;

/// Non-empty lines with comments removed, paired with 1-based line numbers.
/// A comment is a `#` at the start of a line or after whitespace, so that
/// generated names such as `S#3` survive.
pub(crate) fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let cut = l
            .char_indices()
            .find(|&(p, c)| c == '#' && (p == 0 || l[..p].ends_with(char::is_whitespace)))
            .map(|(p, _)| p);
        let l = match cut {
            Some(p) => &l[..p],
            None => l,
        };
        let l = l.trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

pub(crate) fn is_ident(s: &str) -> bool {
    !s.is_empty()
        && s
            .chars()
            .all(|c| c.is_alphanumeric() || matches!(c, '_' | '\'' | '#' | '+' | '*' | '@' | '~' | '!' | '^' | '<' | '>' | ','))
}

pub(crate) fn ident(line: usize, s: &str) -> Result<String, ParseError> {
    let s = s.trim();
    if is_ident(s) {
        Ok(s.to_string())
    } else {
        Err(ParseError::new(line, format!("invalid identifier `{s}`")))
    }
}

/// Splits `head: rest` where `head` is a single identifier.
pub(crate) fn split_label(l: &str) -> Option<(&str, &str)> {
    let (h, r) = l.split_once(':')?;
    let h = h.trim();
    is_ident(h).then_some((h, r.trim()))
}
