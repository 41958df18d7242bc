//! Reading input files into library values, with an optional field
//! override and error classification for exit codes.

use std::fs;
use std::path::Path;

use motsym::milnor::{FunctionElement, MilnorElement};
use motsym::symbols::{Chain, SymbolTuple};
use motsym::text::{chain_from_value, milnor_from_value, parse_value, tuple_from_value, ParsedMilnor, Value};
use motsym::Error;

/// Why a command could not produce a verdict.
#[derive(Debug)]
pub enum Failure {
    /// Malformed or invalid input (exit 2).
    Input(String),
    /// A factorization or size limit (exit 3).
    Limit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::DegreeLimit { .. } => Failure::Limit(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

pub type Res<T> = std::result::Result<T, Failure>;

pub fn read(path: &Path) -> Res<String> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn override_field(v: &mut Value, field: &str, function: bool) {
    match v {
        Value::Object(kv) => {
            for (k, x) in kv.iter_mut() {
                if k == "field" {
                    let f = if function && !field.ends_with("(t)") { format!("{field}(t)") } else { field.to_string() };
                    *x = Value::Str(f);
                } else {
                    override_field(x, field, function);
                }
            }
        }
        Value::Array(a) => a.iter_mut().for_each(|x| override_field(x, field, function)),
        _ => {}
    }
}

fn value(path: &Path, field: Option<&str>, function: bool) -> Res<Value> {
    let mut v = parse_value(&read(path)?)?;
    if let Some(f) = field {
        override_field(&mut v, f, function);
    }
    Ok(v)
}

pub fn tuple(path: &Path, field: Option<&str>) -> Res<SymbolTuple> {
    Ok(tuple_from_value(&value(path, field, false)?, None)?)
}

/// A chain, or a single tuple read as a one-term chain.
pub fn chain(path: &Path, field: Option<&str>) -> Res<Chain> {
    Ok(chain_from_value(&value(path, field, false)?, None)?)
}

pub fn milnor(path: &Path, field: Option<&str>) -> Res<MilnorElement> {
    match milnor_from_value(&value(path, field, false)?)? {
        ParsedMilnor::Field(m) => Ok(m),
        ParsedMilnor::Function(_) => Err(Failure::Input("expected an element over a field, not over k(t)".into())),
    }
}

pub fn function_element(path: &Path, field: Option<&str>) -> Res<FunctionElement> {
    match milnor_from_value(&value(path, field, true)?)? {
        ParsedMilnor::Function(m) => Ok(m),
        ParsedMilnor::Field(_) => Err(Failure::Input("expected an element over k(t)".into())),
    }
}
