//! Text formats shared by the library, the certificate files and the CLI.

mod expr;
mod value;

pub use expr::{parse_expr, tower_generator, Algebra, ElemAlg, Expr, MPolyAlg, RatAlg};
pub use value::{parse_value, Value};
pub(crate) use value::balanced_prefix;
mod parse;

pub use parse::{
    chain_from_value, context_from_value, matrix_from_value, milnor_from_value, parse_chain,
    parse_const_matrix, parse_elem, parse_field, parse_function_element, parse_matrix,
    parse_milnor, parse_poly_free, parse_tuple, tuple_from_value, ParsedMilnor,
};
