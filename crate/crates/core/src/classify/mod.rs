//! Finite presentations of shapes, homomorphism search into finite double
//! categories, and the lifting-property classification of double functors.

mod inclusion;
mod lifting;
mod predicates;
mod shape;
mod shapes;
mod solver;

pub use inclusion::{invert, parse_inclusion_file, ShapeInclusion};
pub use lifting::{describe_assignment, find_lift, has_rlp, has_rlp_all, LiftingProblem};
pub use predicates::{
    biequivalence_conditions, classify, is_double_biequivalence, is_naive_fibration, is_trivial_fibration,
    naive_fibration_conditions, w3_prime, ClassifyReport, Consistency, Failure,
};
pub use shape::{
    parse_presentation, serialize_presentation, Generator, MorExpr, Path, ShapePresentation, SqExpr,
    SquareGenerator,
};
pub use shapes::{anodyne_generators, generating_cofibrations, shape, SHAPE_NAMES};
pub use solver::{
    eval_h, eval_sq, eval_v, find_one, hom_solver, hom_solver_filtered, is_valid_assignment, solve, Assignment,
    Filter, GenKind,
};
