//! Irreducibility of symbol tuples: exact at `d = 0`, sufficient criteria at
//! `d = 1`.

use std::fmt;

use super::k0::composition_factors;
use super::tuple::SymbolTuple;
use crate::algebra::factor::{factor, is_irreducible as poly_irreducible};
use crate::algebra::{Elem, MPoly, Poly};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reason {
    /// `d = 0`: a single composition factor of full dimension.
    Simple,
    /// The characteristic polynomial of coordinate `coord` is irreducible
    /// over `k(t)`, certified by its specialization at `t = t0`.
    IrreducibleCharPoly { coord: usize, t0: String },
    /// Coordinate `coord` at the face `t = face` has `n` distinct
    /// eigenvalues.
    DistinctEigenvalues { coord: usize, face: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Yes(Reason),
    No(String),
    Unknown,
}

impl fmt::Display for Irreducibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Irreducibility::Yes(Reason::Simple) => write!(f, "yes (simple module)"),
            Irreducibility::Yes(Reason::IrreducibleCharPoly { coord, t0 }) => write!(
                f,
                "yes (characteristic polynomial of coordinate {coord} is irreducible; specialization t={t0})"
            ),
            Irreducibility::Yes(Reason::DistinctEigenvalues { coord, face }) => write!(
                f,
                "yes (coordinate {coord} at t={face} has distinct eigenvalues)"
            ),
            Irreducibility::No(why) => write!(f, "no ({why})"),
            Irreducibility::Unknown => write!(f, "unknown"),
        }
    }
}

/// Specialization points tried for the `d = 1` certificate.
fn sample_points(t: &SymbolTuple) -> Vec<Elem> {
    let k = t.field();
    let ints: Vec<i64> = (0..12).map(|i| if i % 2 == 1 { (i + 1) / 2 } else { -(i / 2) }).collect();
    match k.size() {
        Some(sz) if sz <= 64u32.into() => k.elements(),
        _ => ints.into_iter().map(|i| k.from_int(i)).collect(),
    }
}

pub fn is_irreducible(t: &SymbolTuple) -> Result<Irreducibility> {
    let k = t.field();
    let n = t.n();
    match t.d() {
        0 => {
            let fac = composition_factors(t, true)?;
            let simple = fac.len() == 1 && fac[0].1 == 1 && fac[0].0.degree_over(k) == n;
            if simple {
                Ok(Irreducibility::Yes(Reason::Simple))
            } else {
                let total: usize = fac.iter().map(|(_, m)| m).sum();
                Ok(Irreducibility::No(format!("{total} composition factors")))
            }
        }
        1 => {
            let ring = t.ring();
            for (i, m) in t.mats().iter().enumerate() {
                let cp = m.charpoly(&ring);
                for t0 in sample_points(t) {
                    let spec = Poly::new(k, cp.iter().map(|c| c.eval(&t0, &k.zero(), k)).collect());
                    if spec.degree() == Some(n) && poly_irreducible(k, &spec)? {
                        return Ok(Irreducibility::Yes(Reason::IrreducibleCharPoly {
                            coord: i,
                            t0: k.format_elem(&t0),
                        }));
                    }
                }
            }
            for (i, m) in t.mats().iter().enumerate() {
                for face in [0i64, 1] {
                    let c = m.substitute(&MPoly::from_int(k, face), &MPoly::zero(), k);
                    let c = c.as_constant(k).unwrap();
                    let cp = c.charpoly_poly(k);
                    if factor(k, &cp)?.iter().all(|(_, e)| *e == 1) {
                        return Ok(Irreducibility::Yes(Reason::DistinctEigenvalues {
                            coord: i,
                            face,
                        }));
                    }
                }
            }
            Ok(Irreducibility::Unknown)
        }
        _ => Ok(Irreducibility::Unknown),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Field, Mat};

    #[test]
    fn d0_examples() {
        let f = Field::rational();
        let diag = |a: i64, b: i64| {
            Mat::from_rows(vec![
                vec![f.from_int(a), f.zero()],
                vec![f.zero(), f.from_int(b)],
            ])
            .unwrap()
        };
        let t = SymbolTuple::constant(&f, vec![diag(2, 3)]).unwrap();
        assert!(matches!(is_irreducible(&t).unwrap(), Irreducibility::No(_)));
        let t = SymbolTuple::constant(&f, vec![diag(2, 2)]).unwrap();
        assert!(matches!(is_irreducible(&t).unwrap(), Irreducibility::No(_)));
        let c = Mat::from_rows(vec![
            vec![f.zero(), f.one()],
            vec![f.from_int(2), f.zero()],
        ])
        .unwrap();
        let t = SymbolTuple::constant(&f, vec![c]).unwrap();
        assert_eq!(is_irreducible(&t).unwrap(), Irreducibility::Yes(Reason::Simple));
    }

    #[test]
    fn companion_certified_by_specialization() {
        // companion of λ^2 - tλ - 1: t=0 gives λ^2-1, t=1 gives λ^2-λ-1
        let f = Field::rational();
        let t = MPoly::var0(&f);
        let m = Mat::from_rows(vec![
            vec![MPoly::zero(), MPoly::one(&f)],
            vec![MPoly::one(&f), t],
        ])
        .unwrap();
        let s = SymbolTuple::new(&f, 1, vec![m]).unwrap();
        assert_eq!(
            is_irreducible(&s).unwrap(),
            Irreducibility::Yes(Reason::IrreducibleCharPoly { coord: 0, t0: "1".into() })
        );
    }
}
