use std::sync::Arc;

use crate::error::LogicError;
use crate::presheaf::{NatTransf, Presheaf};
use crate::signature::{FoldsSignature, KindId};

use super::formula::{check_formula, kind_of, Context, Formula};

struct Env<'a> {
    m: &'a Presheaf,
    sig: &'a FoldsSignature,
    values: Vec<(String, usize)>,
}

impl Env<'_> {
    fn value(&self, name: &str) -> usize {
        self.values.iter().rev().find(|v| v.0 == name).expect("variable is interpreted").1
    }

    /// Elements of `M(K)` whose generating-arrow images are the values of
    /// the arguments, in carrier order.
    fn fiber(&self, k: KindId, args: &[String]) -> Vec<usize> {
        let out = self.sig.out_arrows(k);
        let want: Vec<usize> = args.iter().map(|a| self.value(a)).collect();
        (0..self.m.carrier(k).len())
            .filter(|&e| out.iter().zip(&want).all(|(&a, &w)| self.m.act(a, e) == w))
            .collect()
    }

    fn eval(&mut self, phi: &Formula) -> Result<bool, LogicError> {
        Ok(match phi {
            Formula::True => true,
            Formula::False => false,
            Formula::Atom(s) => !self.fiber(kind_of(self.sig, &s.kind)?, &s.args).is_empty(),
            Formula::And(a, b) => self.eval(a)? && self.eval(b)?,
            Formula::Or(a, b) => self.eval(a)? || self.eval(b)?,
            Formula::Implies(a, b) => !self.eval(a)? || self.eval(b)?,
            Formula::Forall(x, body) => {
                for e in self.fiber(kind_of(self.sig, &x.sort.kind)?, &x.sort.args) {
                    if !self.bind(&x.name, e, body)? {
                        return Ok(false);
                    }
                }
                true
            }
            Formula::Exists(x, body) => {
                for e in self.fiber(kind_of(self.sig, &x.sort.kind)?, &x.sort.args) {
                    if self.bind(&x.name, e, body)? {
                        return Ok(true);
                    }
                }
                false
            }
        })
    }

    fn bind(&mut self, name: &str, e: usize, body: &Formula) -> Result<bool, LogicError> {
        self.values.push((name.to_string(), e));
        let r = self.eval(body);
        self.values.pop();
        r
    }
}

fn interpretation_error(e: LogicError) -> LogicError {
    match e {
        LogicError::UnknownVariable(v) => LogicError::InterpretationMismatch(v),
        e => e,
    }
}

/// Whether `M ⊨ φ[α]`, where `α: Γ -> M` interprets the context `ctx`.
pub fn satisfies(m: &Presheaf, phi: &Formula, ctx: &Context, alpha: &NatTransf) -> Result<bool, LogicError> {
    let sig = m.signature();
    if alpha.target() != m {
        return Err(LogicError::ContextMismatch("the interpretation does not land in the structure".into()));
    }
    if alpha.source() != &ctx.to_presheaf(sig)? {
        return Err(LogicError::ContextMismatch("the interpretation is not defined on the context".into()));
    }
    check_formula(sig, ctx, phi).map_err(interpretation_error)?;
    let source = alpha.source();
    let values = ctx
        .vars
        .iter()
        .map(|v| {
            let (k, i) = source.element(&v.name).expect("context element");
            (v.name.clone(), alpha.component(k)[i])
        })
        .collect();
    Env { m, sig, values }.eval(phi)
}

/// Evaluates a sentence.
pub fn satisfies_sentence(m: &Presheaf, phi: &Formula) -> Result<bool, LogicError> {
    if let Some(v) = phi.free_names().into_iter().next() {
        return Err(LogicError::InterpretationMismatch(v));
    }
    let empty = Context::new();
    check_formula(m.signature(), &empty, phi)?;
    Env {
        m,
        sig: m.signature(),
        values: Vec::new(),
    }
    .eval(phi)
}

/// Builds the interpretation of `ctx` in `m` sending each variable to the
/// named element.
pub fn interpret(ctx: &Context, m: &Presheaf, values: &[(&str, &str)]) -> Result<NatTransf, LogicError> {
    let sig: &Arc<FoldsSignature> = m.signature();
    let gamma = ctx.to_presheaf(sig)?;
    let mut components: Vec<Vec<usize>> = gamma.carriers().iter().map(|c| vec![usize::MAX; c.len()]).collect();
    for (var, elem) in values {
        let (k, i) = gamma
            .element(var)
            .ok_or_else(|| LogicError::UnknownVariable(var.to_string()))?;
        let (k2, j) = m
            .element(elem)
            .ok_or_else(|| LogicError::ContextMismatch(format!("unknown element `{elem}`")))?;
        if k != k2 {
            return Err(LogicError::KindMismatch {
                var: var.to_string(),
                expected: sig.kind_name(k).to_string(),
                found: sig.kind_name(k2).to_string(),
            });
        }
        components[k][i] = j;
    }
    if let Some(v) = ctx.vars.iter().find(|v| {
        let (k, i) = gamma.element(&v.name).unwrap();
        components[k][i] == usize::MAX
    }) {
        return Err(LogicError::InterpretationMismatch(v.name.clone()));
    }
    Ok(NatTransf::new(gamma, m.clone(), components)?)
}
