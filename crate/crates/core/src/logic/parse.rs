//! Concrete syntax:
//!
//! ```text
//! [decl, ... |-] formula
//! formula := 'forall' decl '.' formula | 'exists' decl '.' formula
//!          | disj ('->' formula)?
//! disj    := conj ('\/' conj)*
//! conj    := unit ('/\' unit)*
//! unit    := 'true' | 'false' | Kind '(' var, ... ')' | '(' formula ')'
//!          | quantified formula
//! decl    := var ':' Kind ['(' var, ... ')']
//! ```
//!
//! Quantifier bodies extend as far right as possible. The symbols
//! `∀ ∃ ∧ ∨ → ⊤ ⊥ ⊢` are accepted as alternatives.

use crate::error::LogicError;
use crate::signature::FoldsSignature;

use super::formula::{Checker, Context, Formula, Sort, VarDecl};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Colon,
    Dot,
    And,
    Or,
    Implies,
    Turnstile,
    Forall,
    Exists,
    True,
    False,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Comma => "`,`".into(),
        Tok::Colon => "`:`".into(),
        Tok::Dot => "`.`".into(),
        Tok::And => "`/\\`".into(),
        Tok::Or => "`\\/`".into(),
        Tok::Implies => "`->`".into(),
        Tok::Turnstile => "`|-`".into(),
        Tok::Forall => "`forall`".into(),
        Tok::Exists => "`exists`".into(),
        Tok::True => "`true`".into(),
        Tok::False => "`false`".into(),
    }
}

fn syntax(offset: usize, message: impl Into<String>) -> LogicError {
    LogicError::Syntax {
        offset,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, LogicError> {
    let mut out = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some(&(i, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&(_, c)) = it.peek() {
                if c.is_alphanumeric() || c == '_' || c == '\'' {
                    s.push(c);
                    it.next();
                } else {
                    break;
                }
            }
            let tok = match s.as_str() {
                "forall" => Tok::Forall,
                "exists" => Tok::Exists,
                "true" => Tok::True,
                "false" => Tok::False,
                _ => Tok::Ident(s),
            };
            out.push((i, tok));
            continue;
        }
        it.next();
        let two = |it: &mut std::iter::Peekable<std::str::CharIndices>, want: char, tok: Tok| {
            if it.peek().map(|p| p.1) == Some(want) {
                it.next();
                Ok(tok)
            } else {
                Err(syntax(i, format!("unexpected character `{c}`")))
            }
        };
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            ':' => Tok::Colon,
            '.' => Tok::Dot,
            '/' => two(&mut it, '\\', Tok::And)?,
            '\\' => two(&mut it, '/', Tok::Or)?,
            '-' => two(&mut it, '>', Tok::Implies)?,
            '|' => two(&mut it, '-', Tok::Turnstile)?,
            '∀' => Tok::Forall,
            '∃' => Tok::Exists,
            '∧' => Tok::And,
            '∨' => Tok::Or,
            '→' => Tok::Implies,
            '⊤' => Tok::True,
            '⊥' => Tok::False,
            '⊢' => Tok::Turnstile,
            _ => return Err(syntax(i, format!("unexpected character `{c}`"))),
        };
        out.push((i, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn unexpected(&self, wanted: &str) -> LogicError {
        match self.peek() {
            Some(t) => syntax(self.offset(), format!("expected {wanted}, found {}", describe(t))),
            None => syntax(self.end, format!("expected {wanted}, found end of input")),
        }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok) -> Result<(), LogicError> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(self.unexpected(&describe(&t)))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, LogicError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.unexpected(what)),
        }
    }

    fn args(&mut self) -> Result<Vec<String>, LogicError> {
        let mut out = Vec::new();
        if !self.eat(&Tok::LParen) {
            return Ok(out);
        }
        if self.eat(&Tok::RParen) {
            return Ok(out);
        }
        loop {
            out.push(self.ident("a variable")?);
            if self.eat(&Tok::RParen) {
                return Ok(out);
            }
            self.expect(Tok::Comma)?;
        }
    }

    fn decl(&mut self) -> Result<VarDecl, LogicError> {
        let name = self.ident("a variable")?;
        self.expect(Tok::Colon)?;
        let kind = self.ident("a kind")?;
        let args = self.args()?;
        Ok(VarDecl {
            name,
            sort: Sort { kind, args },
        })
    }

    fn has_turnstile(&self) -> bool {
        self.toks.iter().any(|t| t.1 == Tok::Turnstile)
    }

    fn context(&mut self) -> Result<Vec<VarDecl>, LogicError> {
        let mut out = Vec::new();
        if self.eat(&Tok::Turnstile) {
            return Ok(out);
        }
        loop {
            out.push(self.decl()?);
            if self.eat(&Tok::Turnstile) {
                return Ok(out);
            }
            self.expect(Tok::Comma)?;
        }
    }

    fn formula(&mut self) -> Result<Formula, LogicError> {
        if let Some(q) = self.quantified()? {
            return Ok(q);
        }
        let lhs = self.disj()?;
        if self.eat(&Tok::Implies) {
            Ok(Formula::implies(lhs, self.formula()?))
        } else {
            Ok(lhs)
        }
    }

    fn quantified(&mut self) -> Result<Option<Formula>, LogicError> {
        let forall = match self.peek() {
            Some(Tok::Forall) => true,
            Some(Tok::Exists) => false,
            _ => return Ok(None),
        };
        self.pos += 1;
        let x = self.decl()?;
        self.expect(Tok::Dot)?;
        let body = Box::new(self.formula()?);
        Ok(Some(if forall {
            Formula::Forall(x, body)
        } else {
            Formula::Exists(x, body)
        }))
    }

    fn disj(&mut self) -> Result<Formula, LogicError> {
        let mut lhs = self.conj()?;
        while self.eat(&Tok::Or) {
            lhs = Formula::or(lhs, self.conj()?);
        }
        Ok(lhs)
    }

    fn conj(&mut self) -> Result<Formula, LogicError> {
        let mut lhs = self.unit()?;
        while self.eat(&Tok::And) {
            lhs = Formula::and(lhs, self.unit()?);
        }
        Ok(lhs)
    }

    fn unit(&mut self) -> Result<Formula, LogicError> {
        if let Some(q) = self.quantified()? {
            return Ok(q);
        }
        match self.peek() {
            Some(Tok::True) => {
                self.pos += 1;
                Ok(Formula::True)
            }
            Some(Tok::False) => {
                self.pos += 1;
                Ok(Formula::False)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Some(Tok::Ident(_)) => {
                let kind = self.ident("a relation symbol")?;
                let args = self.args()?;
                Ok(Formula::Atom(Sort { kind, args }))
            }
            _ => Err(self.unexpected("a formula")),
        }
    }
}

fn parser(text: &str) -> Result<Parser, LogicError> {
    Ok(Parser {
        toks: lex(text)?,
        pos: 0,
        end: text.len(),
    })
}

/// Parses a formula without consulting a signature, together with the
/// declarations before `|-` if present.
pub fn parse_syntax(text: &str) -> Result<(Option<Vec<VarDecl>>, Formula), LogicError> {
    let mut p = parser(text)?;
    let decls = if p.has_turnstile() { Some(p.context()?) } else { None };
    let f = p.formula()?;
    if p.pos < p.toks.len() {
        return Err(p.unexpected("end of input"));
    }
    Ok((decls, f))
}

/// Parses and checks a formula, returning it with its context: the
/// declared variables followed by inferred ones. Free variables of kinds
/// without dependencies need not be declared.
pub fn parse_formula(text: &str, sig: &FoldsSignature) -> Result<(Formula, Context), LogicError> {
    let (decls, f) = parse_syntax(text)?;
    let mut ctx = Context::from_decls(sig, decls.unwrap_or_default(), true)?;
    let mut checker = Checker::new(sig, &mut ctx, true);
    checker.check(&f)?;
    checker.finish()?;
    Ok((f, ctx))
}

/// Parses a formula and checks it against a fixed context; a `|-` prefix
/// is not allowed.
pub fn parse_formula_in(text: &str, sig: &FoldsSignature, ctx: &Context) -> Result<Formula, LogicError> {
    let (decls, f) = parse_syntax(text)?;
    if decls.is_some() {
        return Err(LogicError::ContextMismatch("the context is given separately".into()));
    }
    super::formula::check_formula(sig, ctx, &f)?;
    Ok(f)
}

/// Parses a comma-separated list of declarations such as `x:O, f:A(x,y)`.
pub fn parse_context(text: &str, sig: &FoldsSignature) -> Result<Context, LogicError> {
    let mut p = parser(text)?;
    let mut decls = Vec::new();
    if p.peek().is_some() {
        loop {
            decls.push(p.decl()?);
            if p.peek().is_none() {
                break;
            }
            p.expect(Tok::Comma)?;
        }
    }
    Context::from_decls(sig, decls, false)
}
