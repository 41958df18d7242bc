//! Minimal commutative-ring interface used by the generic matrix code.

use std::fmt::Debug;

use super::field::{Elem, Field};
use super::mpoly::MPoly;

#[allow(clippy::wrong_self_convention)]
pub trait Ring {
    type E: Clone + Debug + PartialEq;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn from_int(&self, n: i64) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;

    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.add(a, &self.neg(b))
    }
}

impl Ring for Field {
    type E = Elem;
    fn zero(&self) -> Elem {
        Field::zero(self)
    }
    fn one(&self) -> Elem {
        Field::one(self)
    }
    fn from_int(&self, n: i64) -> Elem {
        Field::from_int(self, n)
    }
    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        Field::add(self, a, b)
    }
    fn neg(&self, a: &Elem) -> Elem {
        Field::neg(self, a)
    }
    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        Field::mul(self, a, b)
    }
    fn is_zero(&self, a: &Elem) -> bool {
        Field::is_zero(self, a)
    }
}

/// `k[t]` or `k[x, y]` over a field; the variable count only matters for
/// display and validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    pub field: Field,
}

impl PolyRing {
    pub fn new(field: &Field) -> PolyRing {
        PolyRing { field: field.clone() }
    }
}

impl Ring for PolyRing {
    type E = MPoly;
    fn zero(&self) -> MPoly {
        MPoly::zero()
    }
    fn one(&self) -> MPoly {
        MPoly::one(&self.field)
    }
    fn from_int(&self, n: i64) -> MPoly {
        MPoly::from_int(&self.field, n)
    }
    fn add(&self, a: &MPoly, b: &MPoly) -> MPoly {
        a.add(b, &self.field)
    }
    fn neg(&self, a: &MPoly) -> MPoly {
        a.neg(&self.field)
    }
    fn mul(&self, a: &MPoly, b: &MPoly) -> MPoly {
        a.mul(b, &self.field)
    }
    fn is_zero(&self, a: &MPoly) -> bool {
        a.is_zero()
    }
}
