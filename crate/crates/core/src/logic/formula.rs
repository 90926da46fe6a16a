use std::collections::BTreeSet;
use std::fmt;

use crate::error::LogicError;
use crate::presheaf::Presheaf;
use crate::signature::{FoldsSignature, KindId};

/// A kind together with one variable per generating arrow out of it, in the
/// signature's declared arrow order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sort {
    pub kind: String,
    pub args: Vec<String>,
}

impl Sort {
    pub fn new(kind: impl Into<String>, args: &[&str]) -> Self {
        Sort {
            kind: kind.into(),
            args: args.iter().map(|s| s.to_string()).collect(),
        }
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if !self.args.is_empty() {
            write!(f, "({})", self.args.join(","))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarDecl {
    pub name: String,
    pub sort: Sort,
}

impl fmt::Display for VarDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.name, self.sort)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    True,
    False,
    /// A relation kind applied to one variable per generating arrow.
    Atom(Sort),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Forall(VarDecl, Box<Formula>),
    Exists(VarDecl, Box<Formula>),
}

impl Formula {
    pub fn atom(kind: &str, args: &[&str]) -> Self {
        Formula::Atom(Sort::new(kind, args))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn forall(var: &str, sort: Sort, body: Formula) -> Self {
        Formula::Forall(
            VarDecl {
                name: var.to_string(),
                sort,
            },
            Box::new(body),
        )
    }

    pub fn exists(var: &str, sort: Sort, body: Formula) -> Self {
        Formula::Exists(
            VarDecl {
                name: var.to_string(),
                sort,
            },
            Box::new(body),
        )
    }

    /// Nesting depth of connectives and quantifiers; atoms and constants
    /// have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::True | Formula::False | Formula::Atom(_) => 0,
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => 1 + a.depth().max(b.depth()),
            Formula::Forall(_, b) | Formula::Exists(_, b) => 1 + b.depth(),
        }
    }

    /// Names occurring free, without dependency closure.
    pub fn free_names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        collect_free(self, &mut Vec::new(), &mut out);
        out
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Forall(..) | Formula::Exists(..) => 0,
            Formula::Implies(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            _ => 4,
        }
    }
}

fn collect_free(phi: &Formula, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
    let mut note = |names: &[String], bound: &Vec<String>| {
        for n in names {
            if !bound.contains(n) {
                out.insert(n.clone());
            }
        }
    };
    match phi {
        Formula::True | Formula::False => {}
        Formula::Atom(s) => note(&s.args, bound),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
            collect_free(a, bound, out);
            collect_free(b, bound, out);
        }
        Formula::Forall(x, body) | Formula::Exists(x, body) => {
            note(&x.sort.args, bound);
            bound.push(x.name.clone());
            collect_free(body, bound, out);
            bound.pop();
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn operand(f: &mut fmt::Formatter<'_>, phi: &Formula, min: u8) -> fmt::Result {
            if phi.precedence() < min {
                write!(f, "({phi})")
            } else {
                write!(f, "{phi}")
            }
        }
        match self {
            Formula::True => write!(f, "true"),
            Formula::False => write!(f, "false"),
            Formula::Atom(s) => write!(f, "{}({})", s.kind, s.args.join(",")),
            Formula::And(a, b) => {
                operand(f, a, 3)?;
                write!(f, " /\\ ")?;
                operand(f, b, 4)
            }
            Formula::Or(a, b) => {
                operand(f, a, 2)?;
                write!(f, " \\/ ")?;
                operand(f, b, 3)
            }
            Formula::Implies(a, b) => {
                operand(f, a, 2)?;
                write!(f, " -> ")?;
                operand(f, b, 1)
            }
            Formula::Forall(x, body) => write!(f, "forall {x}. {body}"),
            Formula::Exists(x, body) => write!(f, "exists {x}. {body}"),
        }
    }
}

/// A finite list of variable declarations, each depending only on earlier
/// ones.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Context {
    pub vars: Vec<VarDecl>,
}

impl Context {
    pub fn new() -> Self {
        Context::default()
    }

    pub fn get(&self, name: &str) -> Option<&VarDecl> {
        self.vars.iter().find(|v| v.name == name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.get(name).is_some()
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    /// Declares variables in order, checking each against the ones before.
    /// With `infer` set, undeclared arguments of kinds without dependencies
    /// are declared on first use.
    pub fn from_decls(sig: &FoldsSignature, decls: Vec<VarDecl>, infer: bool) -> Result<Self, LogicError> {
        let mut ctx = Context::new();
        for d in decls {
            let mut checker = Checker::new(sig, &mut ctx, infer);
            checker.check_decl(&d, false)?;
            ctx.vars.push(d);
        }
        Ok(ctx)
    }

    /// The variables named in `names` together with everything they depend
    /// on, in context order.
    pub fn closure(&self, names: &BTreeSet<String>) -> Result<Context, LogicError> {
        let mut keep: BTreeSet<String> = BTreeSet::new();
        let mut todo: Vec<String> = names.iter().cloned().collect();
        while let Some(n) = todo.pop() {
            let v = self.get(&n).ok_or_else(|| LogicError::UnknownVariable(n.clone()))?;
            if keep.insert(n.clone()) {
                todo.extend(v.sort.args.iter().cloned());
            }
        }
        Ok(Context {
            vars: self.vars.iter().filter(|v| keep.contains(&v.name)).cloned().collect(),
        })
    }

    /// The context as a presheaf whose elements are the variables, each
    /// generating arrow sending a variable to the corresponding argument.
    pub fn to_presheaf(&self, sig: &std::sync::Arc<FoldsSignature>) -> Result<Presheaf, LogicError> {
        let n = sig.kind_count();
        let mut carriers: Vec<Vec<String>> = vec![Vec::new(); n];
        let mut kinds = Vec::new();
        for v in &self.vars {
            let k = kind_of(sig, &v.sort.kind)?;
            kinds.push(k);
            carriers[k].push(v.name.clone());
        }
        let pos = |k: KindId, name: &str| carriers[k].iter().position(|e| e == name);
        let mut actions: Vec<Vec<usize>> = vec![Vec::new(); sig.arrows().len()];
        for (v, &k) in self.vars.iter().zip(&kinds) {
            let out = sig.out_arrows(k);
            if out.len() != v.sort.args.len() {
                return Err(LogicError::ArityMismatch {
                    kind: v.sort.kind.clone(),
                    expected: out.len(),
                    found: v.sort.args.len(),
                });
            }
            for (&a, arg) in out.iter().zip(&v.sort.args) {
                let target = sig.arrow(a).target;
                let j = pos(target, arg).ok_or_else(|| LogicError::UnknownVariable(arg.clone()))?;
                actions[a].push(j);
            }
        }
        Ok(Presheaf::from_parts(sig.clone(), carriers, actions)?)
    }

    /// Reads a presheaf as a context: each element becomes a variable named
    /// after it. Kinds are taken in order of increasing degree.
    pub fn from_presheaf(p: &Presheaf) -> Context {
        let sig = p.signature();
        let mut kinds: Vec<KindId> = (0..sig.kind_count()).collect();
        kinds.sort_by_key(|&k| (sig.degree(k), k));
        let mut vars = Vec::new();
        for k in kinds {
            for (e, name) in p.carrier(k).iter().enumerate() {
                let args = sig
                    .out_arrows(k)
                    .iter()
                    .map(|&a| p.element_name(sig.arrow(a).target, p.act(a, e)).to_string())
                    .collect();
                vars.push(VarDecl {
                    name: name.clone(),
                    sort: Sort {
                        kind: sig.kind_name(k).to_string(),
                        args,
                    },
                });
            }
        }
        Context { vars }
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vars.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(", "))
    }
}

pub(crate) fn kind_of(sig: &FoldsSignature, name: &str) -> Result<KindId, LogicError> {
    sig.kind(name).map_err(|_| LogicError::UnknownKind(name.to_string()))
}

/// Resolves names, checks arities, kinds and compatibility, and the binding
/// discipline. With `infer` set, unknown variables of kinds without
/// dependencies are added to the context.
pub(crate) struct Checker<'a> {
    sig: &'a FoldsSignature,
    ctx: &'a mut Context,
    infer: bool,
    bound: Vec<VarDecl>,
    binders: Vec<String>,
}

impl<'a> Checker<'a> {
    pub(crate) fn new(sig: &'a FoldsSignature, ctx: &'a mut Context, infer: bool) -> Self {
        Checker {
            sig,
            ctx,
            infer,
            bound: Vec::new(),
            binders: Vec::new(),
        }
    }

    fn lookup(&self, name: &str) -> Option<&VarDecl> {
        self.bound.iter().rev().find(|v| v.name == name).or_else(|| self.ctx.get(name))
    }

    /// Checks that `args` is a compatible family for `kind`.
    fn check_family(&mut self, kind: KindId, args: &[String]) -> Result<(), LogicError> {
        let sig = self.sig;
        let out = sig.out_arrows(kind);
        if out.len() != args.len() {
            return Err(LogicError::ArityMismatch {
                kind: sig.kind_name(kind).to_string(),
                expected: out.len(),
                found: args.len(),
            });
        }
        for (&a, name) in out.iter().zip(args) {
            let expected = sig.arrow(a).target;
            let found = match self.lookup(name) {
                Some(v) => v.sort.kind.clone(),
                None if self.infer && sig.out_arrows(expected).is_empty() => {
                    self.ctx.vars.push(VarDecl {
                        name: name.clone(),
                        sort: Sort {
                            kind: sig.kind_name(expected).to_string(),
                            args: Vec::new(),
                        },
                    });
                    continue;
                }
                None if self.infer => return Err(LogicError::UninferableVariable(name.clone())),
                None => return Err(LogicError::UnknownVariable(name.clone())),
            };
            if found != sig.kind_name(expected) {
                return Err(LogicError::KindMismatch {
                    var: name.clone(),
                    expected: sig.kind_name(expected).to_string(),
                    found,
                });
            }
        }
        for rel in sig.relations().iter().filter(|r| r.source == kind) {
            let l = self.follow(kind, args, &rel.lhs);
            let r = self.follow(kind, args, &rel.rhs);
            if l != r {
                return Err(LogicError::IncompatibleFamily {
                    kind: sig.kind_name(kind).to_string(),
                    detail: format!(
                        "`{}` gives `{}` but `{}` gives `{}`",
                        sig.word_text(&rel.lhs),
                        l,
                        sig.word_text(&rel.rhs),
                        r
                    ),
                });
            }
        }
        Ok(())
    }

    /// The variable reached from a family for `kind` along `word`.
    fn follow(&self, kind: KindId, args: &[String], word: &[usize]) -> String {
        let sig = self.sig;
        let first = sig.out_arrows(kind).iter().position(|&a| a == word[0]).expect("word starts at kind");
        let mut name = args[first].clone();
        for &a in &word[1..] {
            let v = self.lookup(&name).expect("arguments resolved");
            let k = sig.kind(&v.sort.kind).expect("kind resolved");
            let p = sig.out_arrows(k).iter().position(|&b| b == a).expect("word is composable");
            name = v.sort.args[p].clone();
        }
        name
    }

    pub(crate) fn check_decl(&mut self, x: &VarDecl, quantified: bool) -> Result<(), LogicError> {
        let k = kind_of(self.sig, &x.sort.kind)?;
        if quantified && self.sig.is_relation_kind(k) {
            return Err(LogicError::QuantifiedRelation {
                var: x.name.clone(),
                kind: x.sort.kind.clone(),
            });
        }
        self.check_family(k, &x.sort.args)?;
        if self.lookup(&x.name).is_some() {
            let dependent = self
                .bound
                .iter()
                .chain(self.ctx.vars.iter())
                .find(|v| v.sort.args.contains(&x.name));
            return Err(match dependent {
                Some(d) => LogicError::DependencyViolation {
                    var: x.name.clone(),
                    dependent: d.name.clone(),
                },
                None => LogicError::Shadowing(x.name.clone()),
            });
        }
        Ok(())
    }

    pub(crate) fn check(&mut self, phi: &Formula) -> Result<(), LogicError> {
        match phi {
            Formula::True | Formula::False => Ok(()),
            Formula::Atom(s) => {
                let k = kind_of(self.sig, &s.kind)?;
                if !self.sig.is_relation_kind(k) {
                    return Err(LogicError::NotRelationSymbol(s.kind.clone()));
                }
                self.check_family(k, &s.args)
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                self.check(a)?;
                self.check(b)
            }
            Formula::Forall(x, body) | Formula::Exists(x, body) => {
                self.check_decl(x, true)?;
                self.bound.push(x.clone());
                self.binders.push(x.name.clone());
                let r = self.check(body);
                self.bound.pop();
                r
            }
        }
    }

    /// Bound names must differ from every name in the context, including
    /// ones inferred after the binder was seen.
    pub(crate) fn finish(&self) -> Result<(), LogicError> {
        match self.binders.iter().find(|b| self.ctx.contains(b)) {
            Some(b) => Err(LogicError::Shadowing(b.clone())),
            None => Ok(()),
        }
    }
}

/// Checks a formula against a fixed context.
pub fn check_formula(sig: &FoldsSignature, ctx: &Context, phi: &Formula) -> Result<(), LogicError> {
    let mut ctx = ctx.clone();
    let mut checker = Checker::new(sig, &mut ctx, false);
    checker.check(phi)?;
    checker.finish()
}

/// The free variables of `phi`, closed under dependency, in context order.
pub fn free_vars(phi: &Formula, ctx: &Context) -> Result<Context, LogicError> {
    ctx.closure(&phi.free_names())
}
