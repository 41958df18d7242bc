//! Exact computation with commuting-matrix motivic symbols and Milnor
//! K-theory.

pub mod algebra;
pub mod checker;
pub mod error;
pub mod maps;
pub mod milnor;
pub mod random;
pub mod suites;
pub mod symbols;
pub mod text;

pub use error::{Error, Result};
