//! Formulae with dependent sorts over a signature: parsing, well-formedness,
//! satisfaction in finite structures, random sentences, and invariance
//! along spans of fiberwise surjections.

mod eval;
mod formula;
mod generate;
mod invariance;
mod parse;

pub use eval::{interpret, satisfies, satisfies_sentence};
pub use formula::{check_formula, free_vars, Context, Formula, Sort, VarDecl};
pub use generate::{generate_sentences, generate_sentences_with, GeneratorConfig};
pub use invariance::{check_invariance, run_invariance, InvarianceChecker, InvarianceSummary, Verdict};
pub use parse::{parse_context, parse_formula, parse_formula_in, parse_syntax};
