use crate::error::LogicError;
use crate::presheaf::{is_fiberwise_surjective, NatTransf, Span};

use super::eval::satisfies;
use super::formula::{free_vars, Context, Formula};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Both feet give the same truth value.
    Agree(bool),
    /// The feet differ; this contradicts the invariance theorem and so
    /// indicates a defect.
    Disagree { left: bool, right: bool },
    /// A leg is not a fiberwise surjection.
    NotApplicable(String),
}

impl Verdict {
    pub fn is_disagreement(&self) -> bool {
        matches!(self, Verdict::Disagree { .. })
    }
}

/// Evaluates formulae in both feet of a span, with the interpretations
/// obtained by composing the span's context with each leg. The legs are
/// checked for fiberwise surjectivity once.
pub struct InvarianceChecker<'a> {
    span: &'a Span,
    legs: Result<(), String>,
    context: Context,
    left: Option<NatTransf>,
    right: Option<NatTransf>,
}

impl<'a> InvarianceChecker<'a> {
    pub fn new(span: &'a Span) -> Result<Self, LogicError> {
        let legs = is_fiberwise_surjective(&span.left)
            .map_err(|e| format!("left leg: {e}"))
            .and_then(|_| is_fiberwise_surjective(&span.right).map_err(|e| format!("right leg: {e}")));
        let (context, left, right) = match &span.context {
            Some(alpha) => (
                Context::from_presheaf(alpha.source()),
                Some(alpha.then(&span.left)?),
                Some(alpha.then(&span.right)?),
            ),
            None => (Context::new(), None, None),
        };
        Ok(InvarianceChecker {
            span,
            legs,
            context,
            left,
            right,
        })
    }

    pub fn context(&self) -> &Context {
        &self.context
    }

    pub fn legs_fiberwise_surjective(&self) -> Result<(), &str> {
        self.legs.as_ref().map(|_| ()).map_err(|e| e.as_str())
    }

    pub fn check(&self, phi: &Formula) -> Result<Verdict, LogicError> {
        if let Err(e) = &self.legs {
            return Ok(Verdict::NotApplicable(e.clone()));
        }
        free_vars(phi, &self.context).map_err(|e| match e {
            LogicError::UnknownVariable(v) => LogicError::ContextMismatch(format!("`{v}` is not in the span's context")),
            e => e,
        })?;
        let (m, n) = (self.span.left.target(), self.span.right.target());
        let (l, r) = match (&self.left, &self.right) {
            (Some(a), Some(b)) => (
                satisfies(m, phi, &self.context, a)?,
                satisfies(n, phi, &self.context, b)?,
            ),
            _ => (
                super::eval::satisfies_sentence(m, phi)?,
                super::eval::satisfies_sentence(n, phi)?,
            ),
        };
        Ok(if l == r {
            Verdict::Agree(l)
        } else {
            Verdict::Disagree { left: l, right: r }
        })
    }
}

pub fn check_invariance(span: &Span, phi: &Formula) -> Result<Verdict, LogicError> {
    InvarianceChecker::new(span)?.check(phi)
}

/// Tallies of an invariance run over many formulae.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InvarianceSummary {
    pub agree_true: usize,
    pub agree_false: usize,
    /// Indices of disagreeing formulae with the two truth values.
    pub disagreements: Vec<(usize, bool, bool)>,
    pub not_applicable: Option<String>,
}

impl InvarianceSummary {
    pub fn total(&self) -> usize {
        self.agree_true + self.agree_false + self.disagreements.len()
    }

    /// All formulae agreed and the span was applicable.
    pub fn passed(&self) -> bool {
        self.not_applicable.is_none() && self.disagreements.is_empty()
    }
}

/// Runs every formula through the checker. When the legs are not fiberwise
/// surjective the feet are still compared and the summary records why the
/// result carries no guarantee.
pub fn run_invariance(span: &Span, formulae: &[Formula]) -> Result<InvarianceSummary, LogicError> {
    let checker = InvarianceChecker::new(span)?;
    let mut summary = InvarianceSummary {
        not_applicable: checker.legs.clone().err(),
        ..Default::default()
    };
    let forced = InvarianceChecker {
        legs: Ok(()),
        ..checker
    };
    for (i, phi) in formulae.iter().enumerate() {
        match forced.check(phi)? {
            Verdict::Agree(true) => summary.agree_true += 1,
            Verdict::Agree(false) => summary.agree_false += 1,
            Verdict::Disagree { left, right } => summary.disagreements.push((i, left, right)),
            Verdict::NotApplicable(_) => unreachable!(),
        }
    }
    Ok(summary)
}
