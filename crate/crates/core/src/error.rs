use thiserror::Error;

use crate::signature::SignatureViolation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("unknown kind `{0}`")]
    UnknownKind(String),
    #[error("unknown builtin signature `{0}` (expected cat, twocat or dblcat)")]
    UnknownBuiltin(String),
    #[error("invalid signature: {}", join_violations(.0))]
    Invalid(Vec<SignatureViolation>),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

fn join_violations(v: &[SignatureViolation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresheafError {
    #[error("unknown kind `{0}`")]
    UnknownKind(String),
    #[error("unknown arrow `{arrow}` out of kind `{kind}`")]
    UnknownArrow { kind: String, arrow: String },
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("element `{0}` appears twice")]
    DuplicateElement(String),
    #[error("arrow `{arrow}` is not defined on element `{element}`")]
    ActionNotTotal { arrow: String, element: String },
    #[error("arrow `{arrow}` sends `{element}` to `{image}`, which is not in kind `{expected}`")]
    ActionIllTyped {
        arrow: String,
        element: String,
        image: String,
        expected: String,
    },
    #[error("transformation is not defined on element `{0}`")]
    ComponentNotTotal(String),
    #[error("transformation sends `{element}` to `{image}`, outside the target carrier of kind `{kind}`")]
    ComponentIllTyped {
        kind: String,
        element: String,
        image: String,
    },
    #[error("naturality fails for arrow `{arrow}` at element `{element}`")]
    NotNatural { arrow: String, element: String },
    #[error("presheaves live over different signatures")]
    SignatureMismatch,
    #[error(transparent)]
    Signature(#[from] SignatureError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown kind `{0}`")]
    UnknownKind(String),
    #[error("`{0}` is not a relation symbol")]
    NotRelationSymbol(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("cannot infer the sort of free variable `{0}`; declare it in a context")]
    UninferableVariable(String),
    #[error("`{kind}` expects {expected} arguments, got {found}")]
    ArityMismatch {
        kind: String,
        expected: usize,
        found: usize,
    },
    #[error("argument `{var}` has kind `{found}`, expected `{expected}`")]
    KindMismatch {
        var: String,
        expected: String,
        found: String,
    },
    #[error("cannot quantify over `{var}`: `{dependent}` depends on it")]
    DependencyViolation { var: String, dependent: String },
    #[error("variable `{0}` is bound twice")]
    Shadowing(String),
    #[error("arguments of `{kind}` are not a compatible family: {detail}")]
    IncompatibleFamily { kind: String, detail: String },
    #[error("interpretation does not cover variable `{0}`")]
    InterpretationMismatch(String),
    #[error("cannot quantify over `{var}` of relation kind `{kind}`")]
    QuantifiedRelation { var: String, kind: String },
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error(transparent)]
    Presheaf(#[from] PresheafError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DblCatError {
    #[error("malformed double category: {0}")]
    Malformed(String),
    #[error("{kind} composition is not defined on composable pair ({first}, {second})")]
    NonComposablePair {
        kind: String,
        first: String,
        second: String,
    },
    #[error("{kind} law violated at {}", .witnesses.join(", "))]
    LawViolation { kind: String, witnesses: Vec<String> },
    #[error("unknown {sort} `{name}`")]
    UnknownCell { sort: String, name: String },
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl DblCatError {
    pub fn law(kind: &str, witnesses: Vec<String>) -> Self {
        DblCatError::LawViolation {
            kind: kind.to_string(),
            witnesses,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("ill-typed expression: {0}")]
    IllTyped(String),
    #[error("malformed presentation: {0}")]
    Malformed(String),
    #[error("inclusion does not respect {0}")]
    NotAFunctor(String),
    #[error(transparent)]
    DblCat(#[from] DblCatError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NerveError {
    #[error("unknown builtin diagram `{0}` (expected cat, twocat or dblcat)")]
    UnknownDiagram(String),
    #[error("diagram is not functorial: {0}")]
    NotFunctorial(String),
    #[error("span legs have different domains")]
    LegMismatch,
    #[error("latching table mismatch at kind `{kind}` over `{instance}`: {detail}")]
    MismatchAt {
        kind: String,
        instance: String,
        detail: String,
    },
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Presheaf(#[from] PresheafError),
    #[error(transparent)]
    Signature(#[from] SignatureError),
}
