//! Milnor K-theory of fields and of rational function fields.

mod element;
mod invariant;
mod norm;
mod ratfunc;
mod tame;

pub use element::{FunctionElement, MilnorElement};
pub use invariant::{hilbert2_bit, invariant, primitive_element, tame_at, MilnorInvariant};
pub use norm::norm;
pub use ratfunc::{Place, RatFunc};
pub use tame::{support, tame_symbol, tame_symbol_reversed, weil_reciprocity_check, ReciprocityReport};
