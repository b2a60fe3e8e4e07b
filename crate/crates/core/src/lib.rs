pub mod algebra;
pub mod analysis;
pub mod arith;
pub mod diffpoly;
pub mod engine;
pub mod error;
pub mod frontend;

pub use error::{CapKind, Error, ParseError, Result};
