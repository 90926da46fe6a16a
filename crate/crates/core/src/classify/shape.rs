//! Double categories presented by generators and relations.
//!
//! ```text
//! name: Sq2
//! objects: A B
//! hmor: f: A -> B
//! vmor: u: A => B
//! sq: phi [top=f bottom=id(B) left=u right=id(B)]
//! sq: psi [top=id(A) bottom=f left=id(A) right=u]
//! relation: psi | phi = idsq_v(f)
//! relation: psi / phi = idsq_h(u)
//! ```
//!
//! Morphism expressions are `;`-separated paths of generators and `id(x)`.
//! Square expressions combine generators with `|` (left to right), `/`
//! (top to bottom), `inv_h(s)`, `inv_v(s)`, `idsq_h(path)` (identity square
//! on a vertical path) and `idsq_v(path)` (identity square on a horizontal
//! path). Mixing `|` and `/` needs parentheses.

use std::fmt::{self, Write};

use crate::dblcat::Direction;
use crate::error::{ParseError, ShapeError};
use crate::text::{ident, is_ident, lines, split_label};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MorExpr {
    Gen(usize),
    Id(usize),
    /// First argument first.
    Comp(Box<MorExpr>, Box<MorExpr>),
}

impl MorExpr {
    pub fn then(self, next: MorExpr) -> MorExpr {
        MorExpr::Comp(Box::new(self), Box::new(next))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SqExpr {
    Gen(usize),
    Inv(usize, Direction),
    /// Identity square on a vertical path.
    HId(MorExpr),
    /// Identity square on a horizontal path.
    VId(MorExpr),
    /// Left square, right square.
    HComp(Box<SqExpr>, Box<SqExpr>),
    /// Top square, bottom square.
    VComp(Box<SqExpr>, Box<SqExpr>),
}

impl SqExpr {
    pub fn beside(self, right: SqExpr) -> SqExpr {
        SqExpr::HComp(Box::new(self), Box::new(right))
    }

    pub fn above(self, bottom: SqExpr) -> SqExpr {
        SqExpr::VComp(Box::new(self), Box::new(bottom))
    }

    /// Square generators mentioned, with repetition.
    pub fn generators(&self, out: &mut Vec<usize>) {
        match self {
            SqExpr::Gen(g) | SqExpr::Inv(g, _) => out.push(*g),
            SqExpr::HId(_) | SqExpr::VId(_) => {}
            SqExpr::HComp(a, b) | SqExpr::VComp(a, b) => {
                a.generators(out);
                b.generators(out);
            }
        }
    }
}

/// A path in the free category on the morphism generators of one
/// direction: the normal form of a [`MorExpr`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub src: usize,
    pub tgt: usize,
    pub gens: Vec<usize>,
}

impl Path {
    pub fn is_identity(&self) -> bool {
        self.gens.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareGenerator {
    pub name: String,
    pub top: MorExpr,
    pub bottom: MorExpr,
    pub left: MorExpr,
    pub right: MorExpr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Sort {
    H,
    V,
}

/// A finitely presented double category. Morphisms are freely generated;
/// squares are generated subject to invertibility constraints and
/// equations between pasting composites.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ShapePresentation {
    pub name: String,
    pub objects: Vec<String>,
    pub hgens: Vec<Generator>,
    pub vgens: Vec<Generator>,
    pub sqgens: Vec<SquareGenerator>,
    pub invertible: Vec<(usize, Direction)>,
    pub relations: Vec<(SqExpr, SqExpr)>,
}

impl ShapePresentation {
    pub fn object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }
    pub fn hgen(&self, name: &str) -> Option<usize> {
        self.hgens.iter().position(|g| g.name == name)
    }
    pub fn vgen(&self, name: &str) -> Option<usize> {
        self.vgens.iter().position(|g| g.name == name)
    }
    pub fn sqgen(&self, name: &str) -> Option<usize> {
        self.sqgens.iter().position(|g| g.name == name)
    }

    pub fn is_invertible(&self, s: usize, dir: Direction) -> bool {
        self.invertible.contains(&(s, dir))
    }

    /// Generator counts `(objects, hgens, vgens, sqgens)`.
    pub fn size(&self) -> (usize, usize, usize, usize) {
        (self.objects.len(), self.hgens.len(), self.vgens.len(), self.sqgens.len())
    }

    fn gens(&self, sort: Sort) -> &[Generator] {
        match sort {
            Sort::H => &self.hgens,
            Sort::V => &self.vgens,
        }
    }

    fn path(&self, sort: Sort, e: &MorExpr) -> Result<Path, ShapeError> {
        match e {
            MorExpr::Gen(g) => {
                let gen = self
                    .gens(sort)
                    .get(*g)
                    .ok_or_else(|| ShapeError::UnknownGenerator(format!("#{g}")))?;
                Ok(Path {
                    src: gen.src,
                    tgt: gen.tgt,
                    gens: vec![*g],
                })
            }
            MorExpr::Id(o) => {
                if *o >= self.objects.len() {
                    return Err(ShapeError::UnknownGenerator(format!("object #{o}")));
                }
                Ok(Path {
                    src: *o,
                    tgt: *o,
                    gens: Vec::new(),
                })
            }
            MorExpr::Comp(a, b) => {
                let a = self.path(sort, a)?;
                let b = self.path(sort, b)?;
                if a.tgt != b.src {
                    return Err(ShapeError::IllTyped(format!(
                        "composite of paths ending at `{}` and starting at `{}`",
                        self.objects[a.tgt], self.objects[b.src]
                    )));
                }
                let mut gens = a.gens;
                gens.extend(b.gens);
                Ok(Path {
                    src: a.src,
                    tgt: b.tgt,
                    gens,
                })
            }
        }
    }

    pub fn hpath(&self, e: &MorExpr) -> Result<Path, ShapeError> {
        self.path(Sort::H, e)
    }

    pub fn vpath(&self, e: &MorExpr) -> Result<Path, ShapeError> {
        self.path(Sort::V, e)
    }

    fn identity_path(o: usize) -> Path {
        Path {
            src: o,
            tgt: o,
            gens: Vec::new(),
        }
    }

    fn concat(a: &Path, b: &Path) -> Path {
        let mut gens = a.gens.clone();
        gens.extend(b.gens.iter().copied());
        Path {
            src: a.src,
            tgt: b.tgt,
            gens,
        }
    }

    /// The boundary `[top, bottom, left, right]` of a square generator.
    pub fn generator_boundary(&self, s: usize) -> Result<[Path; 4], ShapeError> {
        let g = self
            .sqgens
            .get(s)
            .ok_or_else(|| ShapeError::UnknownGenerator(format!("square #{s}")))?;
        Ok([
            self.hpath(&g.top)?,
            self.hpath(&g.bottom)?,
            self.vpath(&g.left)?,
            self.vpath(&g.right)?,
        ])
    }

    /// Type-checks a square expression and returns its boundary.
    pub fn boundary(&self, e: &SqExpr) -> Result<[Path; 4], ShapeError> {
        match e {
            SqExpr::Gen(s) => self.generator_boundary(*s),
            SqExpr::Inv(s, dir) => {
                if !self.is_invertible(*s, *dir) {
                    return Err(ShapeError::IllTyped(format!(
                        "`{}` is not declared {dir}ly invertible",
                        self.sqgens[*s].name
                    )));
                }
                let [t, b, l, r] = self.generator_boundary(*s)?;
                Ok(match dir {
                    Direction::Horizontal => [t, b, r, l],
                    Direction::Vertical => [b, t, l, r],
                })
            }
            SqExpr::HId(v) => {
                let p = self.vpath(v)?;
                Ok([
                    Self::identity_path(p.src),
                    Self::identity_path(p.tgt),
                    p.clone(),
                    p,
                ])
            }
            SqExpr::VId(h) => {
                let p = self.hpath(h)?;
                Ok([
                    p.clone(),
                    p.clone(),
                    Self::identity_path(p.src),
                    Self::identity_path(p.tgt),
                ])
            }
            SqExpr::HComp(x, y) => {
                let [xt, xb, xl, xr] = self.boundary(x)?;
                let [yt, yb, yl, yr] = self.boundary(y)?;
                if xr != yl {
                    return Err(ShapeError::IllTyped(format!(
                        "horizontal composite `{}` with mismatched sides",
                        self.print_sq(e)
                    )));
                }
                Ok([Self::concat(&xt, &yt), Self::concat(&xb, &yb), xl, yr])
            }
            SqExpr::VComp(x, y) => {
                let [xt, xb, xl, xr] = self.boundary(x)?;
                let [yt, yb, yl, yr] = self.boundary(y)?;
                if xb != yt {
                    return Err(ShapeError::IllTyped(format!(
                        "vertical composite `{}` with mismatched sides",
                        self.print_sq(e)
                    )));
                }
                Ok([xt, yb, Self::concat(&xl, &yl), Self::concat(&xr, &yr)])
            }
        }
    }

    /// Checks that generator boundaries close up, that invertible
    /// generators have identity sides in the other direction, and that
    /// both sides of every relation have the same boundary.
    pub fn validate(&self) -> Result<(), ShapeError> {
        for (sort, gens) in [("hmor", &self.hgens), ("vmor", &self.vgens)] {
            for g in gens {
                if g.src >= self.objects.len() || g.tgt >= self.objects.len() {
                    return Err(ShapeError::Malformed(format!("{sort} `{}` has an unknown endpoint", g.name)));
                }
            }
        }
        for s in 0..self.sqgens.len() {
            let [t, b, l, r] = self.generator_boundary(s)?;
            if t.src != l.src || t.tgt != r.src || b.src != l.tgt || b.tgt != r.tgt {
                return Err(ShapeError::IllTyped(format!(
                    "boundary of square `{}` does not close up",
                    self.sqgens[s].name
                )));
            }
        }
        for &(s, dir) in &self.invertible {
            let [t, b, l, r] = self.generator_boundary(s)?;
            let ok = match dir {
                Direction::Horizontal => t.is_identity() && b.is_identity(),
                Direction::Vertical => l.is_identity() && r.is_identity(),
            };
            if !ok {
                return Err(ShapeError::IllTyped(format!(
                    "{dir}ly invertible square `{}` needs identity {} sides",
                    self.sqgens[s].name,
                    if dir == Direction::Horizontal { "top and bottom" } else { "left and right" }
                )));
            }
        }
        for (lhs, rhs) in &self.relations {
            if self.boundary(lhs)? != self.boundary(rhs)? {
                return Err(ShapeError::IllTyped(format!(
                    "relation `{} = {}` relates squares with different boundaries",
                    self.print_sq(lhs),
                    self.print_sq(rhs)
                )));
            }
        }
        Ok(())
    }

    pub fn print_mor(&self, horizontal: bool, e: &MorExpr) -> String {
        let gens = if horizontal { &self.hgens } else { &self.vgens };
        match e {
            MorExpr::Gen(g) => gens[*g].name.clone(),
            MorExpr::Id(o) => format!("id({})", self.objects[*o]),
            MorExpr::Comp(a, b) => format!("{};{}", self.print_mor(horizontal, a), self.print_mor(horizontal, b)),
        }
    }

    pub fn print_sq(&self, e: &SqExpr) -> String {
        let mut out = String::new();
        self.write_sq(&mut out, e, false);
        out
    }

    fn write_sq(&self, out: &mut String, e: &SqExpr, paren: bool) {
        match e {
            SqExpr::Gen(s) => out.push_str(&self.sqgens[*s].name),
            SqExpr::Inv(s, Direction::Horizontal) => {
                let _ = write!(out, "inv_h({})", self.sqgens[*s].name);
            }
            SqExpr::Inv(s, Direction::Vertical) => {
                let _ = write!(out, "inv_v({})", self.sqgens[*s].name);
            }
            SqExpr::HId(v) => {
                let _ = write!(out, "idsq_h({})", self.print_mor(false, v));
            }
            SqExpr::VId(h) => {
                let _ = write!(out, "idsq_v({})", self.print_mor(true, h));
            }
            SqExpr::HComp(a, b) | SqExpr::VComp(a, b) => {
                let op = op_of(e);
                if paren {
                    out.push('(');
                }
                // chains are read left-associatively
                let left_paren = op_of(a).is_some() && op_of(a) != op;
                self.write_sq(out, a, left_paren);
                let _ = write!(out, " {} ", op.unwrap());
                self.write_sq(out, b, op_of(b).is_some());
                if paren {
                    out.push(')');
                }
            }
        }
    }
}

fn op_of(e: &SqExpr) -> Option<char> {
    match e {
        SqExpr::HComp(..) => Some('|'),
        SqExpr::VComp(..) => Some('/'),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Expression parsing

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Name(String),
    Open,
    Close,
    Bar,
    Slash,
    Semi,
}

fn tokenize(n: usize, s: &str) -> Result<Vec<Tok>, ParseError> {
    let mut out = Vec::new();
    let mut chars = s.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' => {
                chars.next();
                out.push(Tok::Open);
            }
            ')' => {
                chars.next();
                out.push(Tok::Close);
            }
            '|' => {
                chars.next();
                out.push(Tok::Bar);
            }
            '/' => {
                chars.next();
                out.push(Tok::Slash);
            }
            ';' => {
                chars.next();
                out.push(Tok::Semi);
            }
            _ => {
                let mut end = s.len();
                while let Some(&(j, d)) = chars.peek() {
                    if d.is_whitespace() || "()|/;".contains(d) {
                        end = j;
                        break;
                    }
                    chars.next();
                }
                let name = &s[i..end];
                if !is_ident(name) {
                    return Err(ParseError::new(n, format!("invalid identifier `{name}`")));
                }
                out.push(Tok::Name(name.to_string()));
            }
        }
    }
    Ok(out)
}

struct ExprParser<'a> {
    n: usize,
    toks: Vec<Tok>,
    pos: usize,
    p: &'a ShapePresentation,
}

impl<'a> ExprParser<'a> {
    fn new(n: usize, text: &str, p: &'a ShapePresentation) -> Result<Self, ParseError> {
        Ok(ExprParser {
            n,
            toks: tokenize(n, text)?,
            pos: 0,
            p,
        })
    }

    fn err(&self, m: impl Into<String>) -> ParseError {
        ParseError::new(self.n, m)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expect(&mut self, t: Tok) -> Result<(), ParseError> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {t:?}")))
        }
    }

    fn name(&mut self) -> Result<String, ParseError> {
        match self.toks.get(self.pos) {
            Some(Tok::Name(s)) => {
                self.pos += 1;
                Ok(s.clone())
            }
            _ => Err(self.err("expected a name")),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(self.err("trailing input in expression"))
        }
    }

    fn mor(&mut self, horizontal: bool) -> Result<MorExpr, ParseError> {
        let mut e = self.mor_term(horizontal)?;
        while self.peek() == Some(&Tok::Semi) {
            self.pos += 1;
            e = e.then(self.mor_term(horizontal)?);
        }
        Ok(e)
    }

    fn mor_term(&mut self, horizontal: bool) -> Result<MorExpr, ParseError> {
        let name = self.name()?;
        if name == "id" && self.peek() == Some(&Tok::Open) {
            self.pos += 1;
            let o = self.name()?;
            self.expect(Tok::Close)?;
            let o = self
                .p
                .object(&o)
                .ok_or_else(|| self.err(format!("unknown object `{o}`")))?;
            return Ok(MorExpr::Id(o));
        }
        let g = if horizontal { self.p.hgen(&name) } else { self.p.vgen(&name) };
        g.map(MorExpr::Gen).ok_or_else(|| {
            self.err(format!(
                "unknown {} generator `{name}`",
                if horizontal { "horizontal" } else { "vertical" }
            ))
        })
    }

    fn sq(&mut self) -> Result<SqExpr, ParseError> {
        let mut e = self.sq_atom()?;
        let mut op = None;
        while let Some(t) = self.peek().cloned() {
            if t != Tok::Bar && t != Tok::Slash {
                break;
            }
            if op.is_some() && op != Some(t.clone()) {
                return Err(self.err("mixing `|` and `/` needs parentheses"));
            }
            self.pos += 1;
            let rhs = self.sq_atom()?;
            e = if t == Tok::Bar { e.beside(rhs) } else { e.above(rhs) };
            op = Some(t);
        }
        Ok(e)
    }

    fn sq_atom(&mut self) -> Result<SqExpr, ParseError> {
        if self.peek() == Some(&Tok::Open) {
            self.pos += 1;
            let e = self.sq()?;
            self.expect(Tok::Close)?;
            return Ok(e);
        }
        let name = self.name()?;
        if self.peek() == Some(&Tok::Open) {
            self.pos += 1;
            let e = match name.as_str() {
                "inv_h" | "inv_v" => {
                    let s = self.name()?;
                    let s = self
                        .p
                        .sqgen(&s)
                        .ok_or_else(|| self.err(format!("unknown square generator `{s}`")))?;
                    let dir = if name == "inv_h" { Direction::Horizontal } else { Direction::Vertical };
                    SqExpr::Inv(s, dir)
                }
                "idsq_h" => SqExpr::HId(self.mor(false)?),
                "idsq_v" => SqExpr::VId(self.mor(true)?),
                other => return Err(self.err(format!("unknown square operation `{other}`"))),
            };
            self.expect(Tok::Close)?;
            return Ok(e);
        }
        self.p
            .sqgen(&name)
            .map(SqExpr::Gen)
            .ok_or_else(|| self.err(format!("unknown square generator `{name}`")))
    }
}

pub(crate) fn parse_mor_expr(
    p: &ShapePresentation,
    horizontal: bool,
    n: usize,
    text: &str,
) -> Result<MorExpr, ParseError> {
    let mut ep = ExprParser::new(n, text, p)?;
    let e = ep.mor(horizontal)?;
    ep.finish()?;
    Ok(e)
}

pub(crate) fn parse_sq_expr(p: &ShapePresentation, n: usize, text: &str) -> Result<SqExpr, ParseError> {
    let mut ep = ExprParser::new(n, text, p)?;
    let e = ep.sq()?;
    ep.finish()?;
    Ok(e)
}

fn arrow_pair(n: usize, body: &str, arrow: &str) -> Result<(String, String, String), ParseError> {
    let (name, rest) =
        split_label(body).ok_or_else(|| ParseError::new(n, format!("expected `name: src {arrow} tgt`")))?;
    let (s, t) = rest
        .split_once(arrow)
        .ok_or_else(|| ParseError::new(n, format!("expected `{arrow}`")))?;
    Ok((name.to_string(), ident(n, s)?, ident(n, t)?))
}

/// Splits `name [top=.. bottom=.. left=.. right=..]` into the name and
/// the four side texts.
fn square_sides(n: usize, body: &str) -> Result<(String, [String; 4]), ParseError> {
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
            .ok_or_else(|| ParseError::new(n, format!("expected `side=path`, found `{item}`")))?;
        let slot = match k {
            "top" => 0,
            "bottom" => 1,
            "left" => 2,
            "right" => 3,
            _ => return Err(ParseError::new(n, format!("unknown side `{k}`"))),
        };
        sides[slot] = Some(v.to_string());
    }
    let missing = || ParseError::new(n, "square needs top, bottom, left and right");
    let [t, b, l, r] = sides;
    Ok((
        ident(n, name)?,
        [t.ok_or_else(missing)?, b.ok_or_else(missing)?, l.ok_or_else(missing)?, r.ok_or_else(missing)?],
    ))
}

/// Parses a presentation. Lines other than the presentation directives
/// are handed to `extra` (used by inclusion files); without it they are
/// errors.
pub(crate) fn parse_presentation_with(
    text: &str,
    mut extra: Option<&mut dyn FnMut(usize, &str, &str) -> Result<(), ParseError>>,
) -> Result<ShapePresentation, ParseError> {
    let mut p = ShapePresentation::default();
    // squares and relations may mention generators declared later
    let mut squares = Vec::new();
    let mut invertible = Vec::new();
    let mut relations = Vec::new();
    for (n, l) in lines(text) {
        let (kw, body) = l.split_once(':').unwrap_or((l, ""));
        let body = body.trim();
        match kw.trim() {
            "name" => p.name = body.to_string(),
            "objects" => {
                for o in body.split_whitespace() {
                    p.objects.push(ident(n, o)?);
                }
            }
            "hmor" | "vmor" => {
                let horizontal = kw.trim() == "hmor";
                let (name, s, t) = arrow_pair(n, body, if horizontal { "->" } else { "=>" })?;
                let obj = |x: &str| p.object(x).ok_or_else(|| ParseError::new(n, format!("unknown object `{x}`")));
                let g = Generator {
                    name,
                    src: obj(&s)?,
                    tgt: obj(&t)?,
                };
                if horizontal {
                    p.hgens.push(g);
                } else {
                    p.vgens.push(g);
                }
            }
            "sq" => squares.push((n, square_sides(n, body)?)),
            "invertible" => {
                let mut it = body.split_whitespace();
                let (Some(s), Some(d), None) = (it.next(), it.next(), it.next()) else {
                    return Err(ParseError::new(n, "expected `invertible: square horizontal|vertical`"));
                };
                let dir = match d {
                    "horizontal" => Direction::Horizontal,
                    "vertical" => Direction::Vertical,
                    _ => return Err(ParseError::new(n, format!("unknown direction `{d}`"))),
                };
                invertible.push((n, s.to_string(), dir));
            }
            "relation" => {
                let (a, b) = body
                    .split_once('=')
                    .ok_or_else(|| ParseError::new(n, "expected `relation: tree = tree`"))?;
                relations.push((n, a.to_string(), b.to_string()));
            }
            k => match extra.as_mut() {
                Some(f) => f(n, k, body)?,
                None => return Err(ParseError::new(n, format!("unknown directive `{k}`"))),
            },
        }
    }
    for (n, (name, _)) in &squares {
        p.sqgens.push(SquareGenerator {
            name: name.clone(),
            top: MorExpr::Id(0),
            bottom: MorExpr::Id(0),
            left: MorExpr::Id(0),
            right: MorExpr::Id(0),
        });
        let _ = n;
    }
    for (i, (n, (_, [t, b, l, r]))) in squares.iter().enumerate() {
        let g = SquareGenerator {
            name: p.sqgens[i].name.clone(),
            top: parse_mor_expr(&p, true, *n, t)?,
            bottom: parse_mor_expr(&p, true, *n, b)?,
            left: parse_mor_expr(&p, false, *n, l)?,
            right: parse_mor_expr(&p, false, *n, r)?,
        };
        p.sqgens[i] = g;
    }
    for (n, s, dir) in invertible {
        let s = p
            .sqgen(&s)
            .ok_or_else(|| ParseError::new(n, format!("unknown square generator `{s}`")))?;
        p.invertible.push((s, dir));
    }
    for (n, a, b) in relations {
        let lhs = parse_sq_expr(&p, n, &a)?;
        let rhs = parse_sq_expr(&p, n, &b)?;
        p.relations.push((lhs, rhs));
    }
    Ok(p)
}

/// Parses and type-checks a presentation.
pub fn parse_presentation(text: &str) -> Result<ShapePresentation, ShapeError> {
    let p = parse_presentation_with(text, None)?;
    p.validate()?;
    Ok(p)
}

pub fn serialize_presentation(p: &ShapePresentation) -> String {
    let mut out = String::new();
    if !p.name.is_empty() {
        let _ = writeln!(out, "name: {}", p.name);
    }
    let _ = writeln!(out, "objects: {}", p.objects.join(" "));
    for g in &p.hgens {
        let _ = writeln!(out, "hmor: {}: {} -> {}", g.name, p.objects[g.src], p.objects[g.tgt]);
    }
    for g in &p.vgens {
        let _ = writeln!(out, "vmor: {}: {} => {}", g.name, p.objects[g.src], p.objects[g.tgt]);
    }
    for g in &p.sqgens {
        let _ = writeln!(
            out,
            "sq: {} [top={} bottom={} left={} right={}]",
            g.name,
            p.print_mor(true, &g.top),
            p.print_mor(true, &g.bottom),
            p.print_mor(false, &g.left),
            p.print_mor(false, &g.right)
        );
    }
    for &(s, dir) in &p.invertible {
        let _ = writeln!(out, "invertible: {} {dir}", p.sqgens[s].name);
    }
    for (a, b) in &p.relations {
        let _ = writeln!(out, "relation: {} = {}", p.print_sq(a), p.print_sq(b));
    }
    out
}

impl fmt::Display for ShapePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_presentation(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQ2: &str = "\
name: Sq2
objects: A B
hmor: f: A -> B
vmor: u: A => B
sq: phi [top=f bottom=id(B) left=u right=id(B)]
sq: psi [top=id(A) bottom=f left=id(A) right=u]
relation: psi | phi = idsq_v(f)
relation: psi / phi = idsq_h(u)
";

    #[test]
    fn parse_and_round_trip() {
        let p = parse_presentation(SQ2).unwrap();
        assert_eq!(p.size(), (2, 1, 1, 2));
        assert_eq!(p.relations.len(), 2);
        let back = parse_presentation(&serialize_presentation(&p)).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn boundaries() {
        let p = parse_presentation(SQ2).unwrap();
        let e = parse_sq_expr(&p, 0, "psi | phi").unwrap();
        let [t, b, l, r] = p.boundary(&e).unwrap();
        assert_eq!(t.gens, vec![0]);
        assert_eq!(b.gens, vec![0]);
        assert!(l.is_identity() && r.is_identity());
        assert!(p.boundary(&parse_sq_expr(&p, 0, "phi | psi").unwrap()).is_err());
    }

    #[test]
    fn nested_print_round_trip() {
        let p = parse_presentation(SQ2).unwrap();
        for text in [
            "(psi | phi) / idsq_v(f)",
            "psi / (phi / idsq_h(id(B)))",
            "(psi / phi) | idsq_h(u)",
            "psi | phi | idsq_h(id(B))",
        ] {
            let e = parse_sq_expr(&p, 0, text).unwrap();
            let again = parse_sq_expr(&p, 0, &p.print_sq(&e)).unwrap();
            assert_eq!(again, e, "{text}");
        }
    }

    #[test]
    fn mixing_needs_parentheses() {
        let p = parse_presentation(SQ2).unwrap();
        assert!(parse_sq_expr(&p, 0, "psi | phi / psi").is_err());
    }

    #[test]
    fn bad_relation_is_rejected() {
        let text = SQ2.replace("psi | phi = idsq_v(f)", "psi | phi = idsq_h(u)");
        assert!(matches!(parse_presentation(&text), Err(ShapeError::IllTyped(_))));
    }

    #[test]
    fn invertible_needs_identity_sides() {
        let text = format!("{SQ2}invertible: phi horizontal\n");
        assert!(parse_presentation(&text).is_err());
    }
}
