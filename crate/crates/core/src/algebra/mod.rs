//! Exact fields, polynomials, matrices and factorization.

pub mod factor;
pub mod field;
pub mod matrix;
pub mod mpoly;
pub mod poly;
pub mod ring;

pub use field::{Elem, Field, FieldValue};
pub use matrix::Mat;
pub use mpoly::MPoly;
pub use poly::Poly;
pub use ring::{PolyRing, Ring};
