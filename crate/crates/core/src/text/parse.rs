//! Parsers for fields, matrices, tuples, chains and Milnor elements.

use crate::algebra::{Elem, Field, MPoly, Mat, Poly};
use crate::error::{Error, Result};
use crate::milnor::{FunctionElement, MilnorElement, RatFunc};
use crate::symbols::{var_names, Chain, Context, SymbolTuple};

use super::expr::{parse_expr, tower_generator, Algebra, ElemAlg, MPolyAlg, RatAlg};
use super::value::{parse_value, Value};

/// Split `s` at commas outside parentheses.
fn split_top(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

fn call<'a>(s: &'a str, name: &str) -> Option<Vec<&'a str>> {
    let rest = s.strip_prefix(name)?.trim_start();
    let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
    Some(split_top(inner))
}

/// A univariate polynomial over `base` in its single free identifier (not a
/// tower generator). Returns the polynomial and the variable name.
pub fn parse_poly_free(base: &Field, s: &str) -> Result<(Poly, String)> {
    let e = parse_expr(s)?;
    let mut ids = Vec::new();
    e.idents(&mut ids);
    ids.retain(|v| tower_generator(base, v).is_none());
    if ids.len() != 1 {
        return Err(Error::Parse(format!("expected exactly one variable in `{s}`, found {ids:?}")));
    }
    let var = ids.pop().unwrap();
    let p = e.eval(&MPolyAlg { field: base, vars: &[var.as_str()] })?;
    Ok((p.to_poly(base).unwrap(), var))
}

/// Field descriptor: `Q`, `Fp(p)`, `Fq(p, modulus)`, `Ext(base, modulus)`.
pub fn parse_field(s: &str) -> Result<Field> {
    let s = s.trim();
    if s == "Q" {
        return Ok(Field::rational());
    }
    let prime = |t: &str| -> Result<Field> {
        let p: u64 = t.parse().map_err(|_| Error::InvalidField(format!("bad prime `{t}`")))?;
        Field::prime(p)
    };
    let ext = |base: Field, m: &str| -> Result<Field> {
        let (poly, var) = parse_poly_free(&base, m)?;
        Field::extension(&base, &poly, &var)
    };
    if let Some(a) = call(s, "Fp") {
        if let [p] = a[..] {
            return prime(p);
        }
    }
    if let Some(a) = call(s, "Fq") {
        if let [p, m] = a[..] {
            return ext(prime(p)?, m);
        }
    }
    if let Some(a) = call(s, "Ext") {
        if let [b, m] = a[..] {
            return ext(parse_field(b)?, m);
        }
    }
    Err(Error::InvalidField(format!("unrecognized field descriptor `{s}`")))
}

pub fn parse_elem(k: &Field, s: &str) -> Result<Elem> {
    parse_expr(s)?.eval(&ElemAlg(k))
}

/// Polynomial in `t` (or `x, y` when `d = 2`) from a scalar value.
fn mpoly_value(k: &Field, d: usize, v: &Value) -> Result<MPoly> {
    parse_expr(v.as_text()?)?.eval(&MPolyAlg { field: k, vars: var_names(d) })
}

pub fn matrix_from_value(k: &Field, d: usize, v: &Value) -> Result<Mat<MPoly>> {
    let rows = v
        .as_array()?
        .iter()
        .map(|r| r.as_array()?.iter().map(|e| mpoly_value(k, d, e)).collect())
        .collect::<Result<Vec<Vec<MPoly>>>>()?;
    Mat::from_rows(rows)
}

pub fn parse_matrix(k: &Field, d: usize, s: &str) -> Result<Mat<MPoly>> {
    matrix_from_value(k, d, &parse_value(s)?)
}

/// A constant matrix; `d` only affects which names count as variables.
pub fn parse_const_matrix(k: &Field, s: &str) -> Result<Mat<Elem>> {
    let m = parse_matrix(k, 0, s)?;
    m.as_constant(k).ok_or_else(|| Error::Parse("expected a constant matrix".into()))
}

fn check_header(v: &Value, want_l: Option<usize>, mats: usize) -> Result<()> {
    if let Some(l) = v.get("l") {
        let l = l.as_usize()?;
        if l != mats || want_l.is_some_and(|w| w != l) {
            return Err(Error::Dimension(format!("declared l={l} but {mats} matrices")));
        }
    }
    Ok(())
}

pub fn tuple_from_value(v: &Value, ctx: Option<&Context>) -> Result<SymbolTuple> {
    let field = match v.get("field") {
        Some(f) => parse_field(f.as_text()?)?,
        None => ctx.ok_or_else(|| Error::Parse("tuple without a field".into()))?.field.clone(),
    };
    let d = match v.get("d") {
        Some(d) => d.as_usize()?,
        None => ctx.map_or(0, |c| c.d),
    };
    let mats = v
        .field("mats")?
        .as_array()?
        .iter()
        .map(|m| matrix_from_value(&field, d, m))
        .collect::<Result<Vec<_>>>()?;
    check_header(v, ctx.map(|c| c.l), mats.len())?;
    let t = SymbolTuple::new(&field, d, mats)?;
    if let Some(c) = ctx {
        if t.field() != &c.field || t.d() != c.d || t.l() != c.l {
            return Err(Error::Context(format!("tuple {} does not fit context {c}", t.short())));
        }
    }
    Ok(t)
}

pub fn parse_tuple(s: &str) -> Result<SymbolTuple> {
    tuple_from_value(&parse_value(s)?, None)
}

/// A chain: a list of `{coef, tuple}` (or a single tuple object). The
/// context is taken from `ctx` or from the first term.
pub fn chain_from_value(v: &Value, ctx: Option<&Context>) -> Result<Chain> {
    let items: Vec<&Value> = match v {
        Value::Array(a) => a.iter().collect(),
        Value::Object(_) if v.get("mats").is_some() => {
            let t = tuple_from_value(v, ctx)?;
            return Ok(Chain::single(t));
        }
        _ => return Err(Error::Parse("a chain is a list of {coef, tuple} terms".into())),
    };
    let mut terms = Vec::new();
    let mut ctx = ctx.cloned();
    for it in items {
        let coef = match it.get("coef") {
            Some(c) => c.as_int()?,
            None => 1,
        };
        let t = tuple_from_value(it.field("tuple")?, ctx.as_ref())?;
        if ctx.is_none() {
            ctx = Some(Context { field: t.field().clone(), d: t.d(), l: t.l() });
        }
        terms.push((coef, t));
    }
    let ctx = ctx.ok_or_else(|| Error::Parse("empty chain without a context".into()))?;
    Chain::new(&ctx, terms)
}

pub fn parse_chain(s: &str, ctx: Option<&Context>) -> Result<Chain> {
    chain_from_value(&parse_value(s)?, ctx)
}

pub fn context_from_value(v: &Value) -> Result<Context> {
    Ok(Context {
        field: parse_field(v.field("field")?.as_text()?)?,
        d: v.field("d")?.as_usize()?,
        l: v.field("l")?.as_usize()?,
    })
}

/// Either a Milnor element over a field or over `k(t)`.
#[derive(Clone, Debug)]
pub enum ParsedMilnor {
    Field(MilnorElement),
    Function(FunctionElement),
}

type Terms<T> = Vec<(i64, Vec<T>)>;

fn terms_from<T, A: Algebra<V = T>>(v: &Value, alg: &A, l: Option<usize>) -> Result<(usize, Terms<T>)> {
    let mut out = Vec::new();
    for t in v.field("terms")?.as_array()? {
        let coef = match t.get("coef") {
            Some(c) => c.as_int()?,
            None => 1,
        };
        let coords = t
            .field("symbol")?
            .as_array()?
            .iter()
            .map(|c| parse_expr(c.as_text()?)?.eval(alg))
            .collect::<Result<Vec<_>>>()?;
        out.push((coef, coords));
    }
    let l = match l {
        Some(l) => l,
        None => out.first().map(|(_, s)| s.len()).ok_or_else(|| Error::Parse("empty element without l".into()))?,
    };
    Ok((l, out))
}

pub fn milnor_from_value(v: &Value) -> Result<ParsedMilnor> {
    let desc = v.field("field")?.as_text()?.trim();
    let l = v.get("l").map(|x| x.as_usize()).transpose()?;
    if let Some(base) = desc.strip_suffix("(t)") {
        let k = parse_field(base)?;
        let (l, terms) = terms_from::<RatFunc, _>(v, &RatAlg(&k), l)?;
        return Ok(ParsedMilnor::Function(FunctionElement::new(&k, l, terms)?));
    }
    let k = parse_field(desc)?;
    let (l, terms) = terms_from::<Elem, _>(v, &ElemAlg(&k), l)?;
    Ok(ParsedMilnor::Field(MilnorElement::new(&k, l, terms)?))
}

pub fn parse_milnor(s: &str) -> Result<MilnorElement> {
    match milnor_from_value(&parse_value(s)?)? {
        ParsedMilnor::Field(e) => Ok(e),
        ParsedMilnor::Function(_) => Err(Error::Parse("expected an element over a field, not k(t)".into())),
    }
}

pub fn parse_function_element(s: &str) -> Result<FunctionElement> {
    match milnor_from_value(&parse_value(s)?)? {
        ParsedMilnor::Function(e) => Ok(e),
        ParsedMilnor::Field(_) => Err(Error::Parse("expected an element over k(t)".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fields_round_trip() {
        for s in ["Q", "Fp(5)", "Fq(5,x^2+2)", "Ext(Q,i^2+1)", "Ext(Ext(Q,s^2-2),r^2-s)", "Ext(Fq(3,x^2+1),y^3-y-x-1)"] {
            let f = parse_field(s).unwrap();
            assert_eq!(parse_field(&f.descriptor()).unwrap(), f, "{s}");
        }
        assert!(parse_field("Fq(5,x^2-4)").is_err());
        assert!(parse_field("Fp(6)").is_err());
        let k = parse_field("Ext(Ext(Q,s^2-2),r^2-s)").unwrap();
        let r = parse_elem(&k, "r^4").unwrap();
        assert_eq!(r, k.from_int(2));
    }

    #[test]
    fn tuple_round_trip() {
        let s = r#"{field:"Q", d:1, l:2, mats:[[[0,1],[-12,t+3]], [[1,0],[0,1]]]}"#;
        let t = parse_tuple(s).unwrap();
        assert_eq!(parse_tuple(&t.format()).unwrap(), t);
        let c = Chain::new(&Context { field: t.field().clone(), d: 1, l: 2 }, vec![(-2, t.clone())]).unwrap();
        assert_eq!(parse_chain(&c.format(), None).unwrap(), c);
        assert!(parse_tuple(r#"{field:"Q", d:0, l:1, mats:[[[0,1],[0,0]]]}"#).is_err());
        assert!(parse_tuple(r#"{field:"Q", d:0, l:2, mats:[[[1,1],[0,1]], [[1,0],[1,1]]]}"#).is_err());
    }

    #[test]
    fn milnor_round_trip() {
        let e = parse_milnor(r#"{field:"Q", l:2, terms:[{coef:1, symbol:["2","3"]}, {coef:-2, symbol:["1/2","-5"]}]}"#).unwrap();
        assert_eq!(parse_milnor(&e.format()).unwrap(), e);
        let w = parse_function_element(r#"{field:"Q(t)", l:2, terms:[{coef:1, symbol:["(t^2-2)/(t+1)","t"]}]}"#).unwrap();
        assert_eq!(parse_function_element(&w.format()).unwrap(), w);
        let f = parse_field("Fq(5,x^2+2)").unwrap();
        let e = MilnorElement::symbol(&f, vec![f.generator().unwrap(), f.from_int(3)]).unwrap();
        assert_eq!(parse_milnor(&e.format()).unwrap(), e);
    }
}
