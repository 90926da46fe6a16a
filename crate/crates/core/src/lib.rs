//! Executable finite instances of FOLDS signatures and structures, finite
//! double categories, lifting-property search and the nerve construction
//! relating them.

pub mod classify;
pub mod dblcat;
pub mod error;
pub mod logic;
pub mod nerve;
pub mod presheaf;
pub mod signature;
mod text;

pub use error::{
    DblCatError, LogicError, NerveError, ParseError, PresheafError, ShapeError, SignatureError,
};
