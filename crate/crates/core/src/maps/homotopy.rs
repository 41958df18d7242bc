//! The companion homotopy between two monic polynomials with equal
//! products of roots and of `1 - root`.

use crate::algebra::matrix::companion;
use crate::algebra::{Elem, Field, MPoly, Mat, Poly, PolyRing};
use crate::error::{Error, HomotopyViolation, Result};
use crate::symbols::SymbolTuple;

/// Companion matrix `θ(t)` of `p(λ) = (1 - t) A(λ) + t B(λ)`.
pub fn build_companion_homotopy(field: &Field, a: &Poly, b: &Poly) -> Result<SymbolTuple> {
    let violations = preconditions(field, a, b);
    if !violations.is_empty() {
        return Err(Error::Homotopy(violations));
    }
    let n = a.degree().unwrap();
    let t = MPoly::var0(field);
    let one_minus_t = MPoly::one(field).sub(&t, field);
    let lower: Vec<MPoly> = (0..n)
        .map(|i| {
            let ca = MPoly::constant(field, a.coeff(field, i));
            let cb = MPoly::constant(field, b.coeff(field, i));
            one_minus_t.mul(&ca, field).add(&t.mul(&cb, field), field)
        })
        .collect();
    let theta = companion(&PolyRing::new(field), &lower);
    SymbolTuple::new(field, 1, vec![theta])
}

fn preconditions(k: &Field, a: &Poly, b: &Poly) -> Vec<HomotopyViolation> {
    let mut v = Vec::new();
    let monic = |p: &Poly| p.degree().is_some_and(|d| d >= 1) && p.is_monic(k);
    if !monic(a) || !monic(b) {
        v.push(HomotopyViolation::NotMonic);
        return v;
    }
    let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
    if da != db {
        v.push(HomotopyViolation::DegreeMismatch { a: da, b: db });
        return v;
    }
    let (a0, b0) = (a.eval(&k.zero(), k), b.eval(&k.zero(), k));
    let (a1, b1) = (a.eval(&k.one(), k), b.eval(&k.one(), k));
    if a0 != b0 {
        v.push(HomotopyViolation::RootProductMismatch);
    }
    if k.is_zero(&a0) || k.is_zero(&b0) {
        v.push(HomotopyViolation::ZeroRoot);
    }
    if a1 != b1 {
        v.push(HomotopyViolation::OneMinusRootProductMismatch);
    }
    if k.is_zero(&a1) || k.is_zero(&b1) {
        v.push(HomotopyViolation::UnitRoot);
    }
    v
}

/// Independent verification of the properties of a companion homotopy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyCheck {
    /// `det θ(t)` when it is a nonzero constant.
    pub det: Option<Elem>,
    /// `det (1 - θ(t))` when it is a nonzero constant.
    pub det_one_minus: Option<Elem>,
    /// `θ · θ^{-1} = 1` and `(1 - θ)(1 - θ)^{-1} = 1` with explicit inverses.
    pub inverses_verified: bool,
    pub charpoly_at_0: bool,
    pub charpoly_at_1: bool,
}

impl HomotopyCheck {
    pub fn ok(&self) -> bool {
        self.det.is_some()
            && self.det_one_minus.is_some()
            && self.inverses_verified
            && self.charpoly_at_0
            && self.charpoly_at_1
    }
}

pub fn check_companion_homotopy(theta: &SymbolTuple, a: &Poly, b: &Poly) -> HomotopyCheck {
    let k = theta.field();
    let r = PolyRing::new(k);
    let m = &theta.mats()[0];
    let n = m.rows();
    let unit_det = |x: &Mat<MPoly>| x.det_poly(k).as_constant(k).filter(|c| !k.is_zero(c));
    let one_minus = Mat::identity(&r, n).sub(m, &r).unwrap();
    let inverts = |x: &Mat<MPoly>| {
        x.inverse_poly(k).is_ok_and(|inv| x.mulm(&inv, &r).is_identity(&r))
    };
    let cp = |c: i64| m.eval(&k.from_int(c), &k.zero(), k).charpoly_poly(k);
    HomotopyCheck {
        det: unit_det(m),
        det_one_minus: unit_det(&one_minus),
        inverses_verified: inverts(m) && inverts(&one_minus),
        charpoly_at_0: cp(0) == *a,
        charpoly_at_1: cp(1) == *b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displayed_three_by_three() {
        let q = Field::rational();
        // (λ-4)(λ²-3) and (λ-3)(λ²-4)
        let a = Poly::from_ints(&q, &[12, -3, -4, 1]);
        let b = Poly::from_ints(&q, &[12, -4, -3, 1]);
        let th = build_companion_homotopy(&q, &a, &b).unwrap();
        assert_eq!(th.mats()[0].format(&q, &["t"]), "[[0,1,0],[0,0,1],[-12,t+3,-t+4]]");
        let c = check_companion_homotopy(&th, &a, &b);
        assert!(c.ok(), "{c:?}");
        assert_eq!(c.det, Some(q.from_int(-12)));
    }

    #[test]
    fn constant_when_equal() {
        let q = Field::rational();
        let a = Poly::from_ints(&q, &[6, -5, 1]);
        let th = build_companion_homotopy(&q, &a, &a).unwrap();
        assert!(th.is_constant());
    }

    #[test]
    fn reports_product_constraints() {
        let q = Field::rational();
        let a = Poly::from_ints(&q, &[6, -5, 1]);
        let b = Poly::from_ints(&q, &[7, -5, 1]);
        let e = build_companion_homotopy(&q, &a, &b).unwrap_err();
        assert_eq!(
            e,
            Error::Homotopy(vec![
                HomotopyViolation::RootProductMismatch,
                HomotopyViolation::OneMinusRootProductMismatch
            ])
        );
    }
}
