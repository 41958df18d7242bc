//! Formal sums of Steinberg symbols over a field `k` and over `k(t)`.

use std::collections::BTreeMap;
use std::fmt;

use super::ratfunc::RatFunc;
use crate::algebra::{Elem, Field};
use crate::error::{Error, Result};

/// `Σ c {a_1, ..., a_l}` with `a_i ∈ k^×`. Symbols with a coordinate equal
/// to 1 are dropped on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MilnorElement {
    field: Field,
    l: usize,
    terms: Vec<(i64, Vec<Elem>)>,
}

impl MilnorElement {
    pub fn zero(field: &Field, l: usize) -> MilnorElement {
        MilnorElement { field: field.clone(), l, terms: vec![] }
    }

    pub fn new(field: &Field, l: usize, terms: Vec<(i64, Vec<Elem>)>) -> Result<MilnorElement> {
        let mut out = MilnorElement::zero(field, l);
        for (c, s) in terms {
            out.push(c, s)?;
        }
        Ok(out)
    }

    pub fn symbol(field: &Field, coords: Vec<Elem>) -> Result<MilnorElement> {
        let l = coords.len();
        MilnorElement::new(field, l, vec![(1, coords)])
    }

    pub fn push(&mut self, c: i64, s: Vec<Elem>) -> Result<()> {
        if s.len() != self.l {
            return Err(Error::Dimension(format!(
                "symbol of length {} in weight {}",
                s.len(),
                self.l
            )));
        }
        if s.iter().any(|a| self.field.is_zero(a)) {
            return Err(Error::ZeroCoordinate);
        }
        if c != 0 && !s.iter().any(|a| self.field.is_one(a)) {
            self.terms.push((c, s));
        }
        Ok(())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn terms(&self) -> &[(i64, Vec<Elem>)] {
        &self.terms
    }

    pub fn is_zero_formally(&self) -> bool {
        self.collect().terms.is_empty()
    }

    pub fn add(&self, o: &MilnorElement) -> Result<MilnorElement> {
        if self.field != o.field || self.l != o.l {
            return Err(Error::Context("adding Milnor elements of different shape".into()));
        }
        let mut r = self.clone();
        r.terms.extend(o.terms.iter().cloned());
        Ok(r)
    }

    pub fn scale(&self, c: i64) -> MilnorElement {
        let terms = if c == 0 {
            vec![]
        } else {
            self.terms.iter().map(|(k, s)| (k * c, s.clone())).collect()
        };
        MilnorElement { field: self.field.clone(), l: self.l, terms }
    }

    /// Merge equal symbols and drop zero coefficients.
    pub fn collect(&self) -> MilnorElement {
        let mut map: BTreeMap<&Vec<Elem>, i64> = BTreeMap::new();
        for (c, s) in &self.terms {
            *map.entry(s).or_insert(0) += c;
        }
        let terms = map.into_iter().filter(|(_, c)| *c != 0).map(|(s, c)| (c, s.clone())).collect();
        MilnorElement { field: self.field.clone(), l: self.l, terms }
    }

    /// For weight 1: the product `Π a^c ∈ k^×`.
    pub fn weight_one_value(&self) -> Result<Elem> {
        if self.l != 1 {
            return Err(Error::Context("weight-one evaluation of a higher symbol".into()));
        }
        let k = &self.field;
        let mut acc = k.one();
        for (c, s) in &self.terms {
            acc = k.mul(&acc, &k.pow(&s[0], *c).unwrap());
        }
        Ok(acc)
    }

    /// For weight 0: the integer `Σ c`.
    pub fn weight_zero_value(&self) -> i64 {
        self.terms.iter().map(|(c, _)| c).sum()
    }

    /// Text form `{field:"Q", l:2, terms:[{coef:1, symbol:["2","3"]}]}`.
    pub fn format(&self) -> String {
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|(c, s)| {
                let coords: Vec<String> =
                    s.iter().map(|a| format!("\"{}\"", self.field.format_elem(a))).collect();
                format!("{{coef:{c}, symbol:[{}]}}", coords.join(","))
            })
            .collect();
        format!(
            "{{field:\"{}\", l:{}, terms:[{}]}}",
            self.field.descriptor(),
            self.l,
            terms.join(", ")
        )
    }
}

fn write_terms<T>(
    f: &mut fmt::Formatter<'_>,
    terms: &[(i64, Vec<T>)],
    show: impl Fn(&T) -> String,
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (c, s)) in terms.iter().enumerate() {
        let sign = if *c < 0 { "-" } else if i > 0 { "+" } else { "" };
        if i > 0 {
            write!(f, " ")?;
        }
        let mag = c.unsigned_abs();
        let coords: Vec<String> = s.iter().map(&show).collect();
        if mag == 1 {
            write!(f, "{sign}{{{}}}", coords.join(","))?;
        } else {
            write!(f, "{sign}{mag}{{{}}}", coords.join(","))?;
        }
    }
    Ok(())
}

impl fmt::Display for MilnorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms, |a| self.field.format_elem(a))
    }
}

/// `Σ c {f_1, ..., f_l}` with `f_i ∈ k(t)^×`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionElement {
    field: Field,
    l: usize,
    terms: Vec<(i64, Vec<RatFunc>)>,
}

impl FunctionElement {
    pub fn new(field: &Field, l: usize, terms: Vec<(i64, Vec<RatFunc>)>) -> Result<FunctionElement> {
        let mut out = FunctionElement { field: field.clone(), l, terms: vec![] };
        for (c, s) in terms {
            if s.len() != l {
                return Err(Error::Dimension(format!("symbol of length {} in weight {l}", s.len())));
            }
            if s.iter().any(|a| a.is_zero()) {
                return Err(Error::ZeroCoordinate);
            }
            if c != 0 && !s.iter().any(|a| a.is_one(field)) {
                out.terms.push((c, s));
            }
        }
        Ok(out)
    }

    pub fn symbol(field: &Field, coords: Vec<RatFunc>) -> Result<FunctionElement> {
        let l = coords.len();
        FunctionElement::new(field, l, vec![(1, coords)])
    }

    /// The constant field `k`.
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn terms(&self) -> &[(i64, Vec<RatFunc>)] {
        &self.terms
    }

    pub fn format(&self) -> String {
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|(c, s)| {
                let coords: Vec<String> =
                    s.iter().map(|a| format!("\"{}\"", a.format(&self.field))).collect();
                format!("{{coef:{c}, symbol:[{}]}}", coords.join(","))
            })
            .collect();
        format!(
            "{{field:\"{}(t)\", l:{}, terms:[{}]}}",
            self.field.descriptor(),
            self.l,
            terms.join(", ")
        )
    }
}

impl fmt::Display for FunctionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms, |a| a.format(&self.field))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rules() {
        let q = Field::rational();
        let e = MilnorElement::symbol(&q, vec![q.from_int(2), q.one()]).unwrap();
        assert!(e.terms().is_empty());
        assert_eq!(
            MilnorElement::symbol(&q, vec![q.zero(), q.from_int(3)]),
            Err(Error::ZeroCoordinate)
        );
        let a = MilnorElement::new(&q, 1, vec![(2, vec![q.from_int(5)]), (-1, vec![q.from_int(3)])])
            .unwrap();
        assert_eq!(a.to_string(), "2{5} -{3}");
        assert_eq!(
            a.weight_one_value().unwrap(),
            q.from_rational(&num_rational::BigRational::new(25.into(), 3.into())).unwrap()
        );
    }
}
