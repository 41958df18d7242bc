//! Symbol tuples, chains, boundaries and canonical `K_0` classes.

pub mod chain;
pub mod irreducible;
pub mod k0;
pub mod tuple;

pub use chain::{Chain, Context};
pub use irreducible::{is_irreducible, Irreducibility, Reason};
pub use k0::{composition_factors, k0_class, k0_class_tuple, K0Class, SimpleFactor};
pub use tuple::{check_identity, var_names, SymbolTuple};

use crate::error::Result;

/// Whether a `d = 1` chain is a cycle: its boundary has empty class.
pub fn is_cycle(c: &Chain) -> Result<bool> {
    Ok(k0_class(&c.boundary()?)?.is_empty())
}
