//! Finite categories, 2-categories and double categories given by
//! explicit composition tables.

mod category;
mod construct;
pub mod corpus;
mod double;
mod format;
mod functor;
mod predicates;
mod table;

pub use category::{iso_comma, CategoryFunctor, Cell, Finite2Category, FiniteCategory, IsoComma};
pub use construct::{
    coproduct, embed_functor, extract_2category, hop, horizontal_embedding, product, sq_of_2cat, thin_closure, vertical_embedding,
    Direction, DoubleBuilder,
};
pub use double::{validate_double_category, DoubleParts, FiniteDoubleCategory, RawDoubleCategory, Square};
pub use format::{
    parse_double_category, parse_raw_double_category, parse_raw_double_functor, serialize_double_category,
    serialize_double_functor, RawDoubleFunctor,
};
pub use functor::{enumerate_functors, is_isomorphism, validate_double_functor, DoubleFunctor};
pub use predicates::{
    find_companions, find_conjoints, h_two_isos, is_equipment, is_vertical_equivalence,
    is_weakly_vertically_invertible, v_two_isos, CompanionPair, ConjointPair, EquipmentFailure, VerticalEquivalence,
    WeakInverse,
};
pub use table::Table;
