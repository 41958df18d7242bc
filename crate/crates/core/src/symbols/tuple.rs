//! Symbol tuples: `l` commuting invertible matrices over `k`, `k[t]` or
//! `k[x, y]`.

use std::fmt;

use crate::algebra::{Elem, Field, MPoly, Mat, PolyRing};
use crate::error::{Error, Result};

/// Variable names for simplicial degree `d`.
pub fn var_names(d: usize) -> &'static [&'static str] {
    match d {
        2 => &["x", "y"],
        _ => &["t"],
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolTuple {
    field: Field,
    d: usize,
    mats: Vec<Mat<MPoly>>,
}

impl SymbolTuple {
    /// Validate and build a tuple: matrices square of equal size, entries in
    /// the right polynomial ring, pairwise commuting, unit determinants.
    pub fn new(field: &Field, d: usize, mats: Vec<Mat<MPoly>>) -> Result<SymbolTuple> {
        if d > 2 {
            return Err(Error::Dimension(format!("simplicial degree {d} is not supported")));
        }
        if mats.is_empty() {
            return Err(Error::Dimension("a symbol needs at least one matrix".into()));
        }
        let n = mats[0].rows();
        for (i, m) in mats.iter().enumerate() {
            if !m.is_square() || m.rows() != n {
                return Err(Error::Dimension(format!(
                    "matrix {i} is {}x{}, expected {n}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
            let bad_var = match d {
                0 => m.uses_var(0) || m.uses_var(1),
                1 => m.uses_var(1),
                _ => false,
            };
            if bad_var {
                return Err(Error::Context(format!(
                    "matrix {i} uses a variable not available at d={d}"
                )));
            }
        }
        let ring = PolyRing::new(field);
        for i in 0..mats.len() {
            for j in i + 1..mats.len() {
                if !mats[i].commutes_with(&mats[j], &ring) {
                    return Err(Error::NotCommuting(i, j));
                }
            }
        }
        for (i, m) in mats.iter().enumerate() {
            let det = m.det_poly(field);
            let ok = det.as_constant(field).is_some_and(|c| !field.is_zero(&c));
            if !ok {
                return Err(Error::NotInvertible {
                    index: i,
                    det: det.format(field, var_names(d)),
                });
            }
        }
        Ok(SymbolTuple { field: field.clone(), d, mats })
    }

    /// Build without validation; callers guarantee the invariants.
    pub fn new_unchecked(field: &Field, d: usize, mats: Vec<Mat<MPoly>>) -> SymbolTuple {
        SymbolTuple { field: field.clone(), d, mats }
    }

    /// A `d = 0` tuple from constant matrices.
    pub fn constant(field: &Field, mats: Vec<Mat<Elem>>) -> Result<SymbolTuple> {
        let mats = mats.into_iter().map(|m| m.to_poly_matrix(field)).collect();
        SymbolTuple::new(field, 0, mats)
    }

    /// A `d = 0` tuple of `1 x 1` matrices.
    pub fn scalars(field: &Field, alphas: &[Elem]) -> Result<SymbolTuple> {
        let mats = alphas
            .iter()
            .map(|a| Mat::from_rows(vec![vec![a.clone()]]).unwrap())
            .collect();
        SymbolTuple::constant(field, mats)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn l(&self) -> usize {
        self.mats.len()
    }

    pub fn n(&self) -> usize {
        self.mats[0].rows()
    }

    pub fn mats(&self) -> &[Mat<MPoly>] {
        &self.mats
    }

    pub fn ring(&self) -> PolyRing {
        PolyRing::new(&self.field)
    }

    /// Constant matrices of a tuple that does not depend on the variables.
    pub fn constant_mats(&self) -> Option<Vec<Mat<Elem>>> {
        self.mats.iter().map(|m| m.as_constant(&self.field)).collect()
    }

    /// Whether no coordinate depends on a variable.
    pub fn is_constant(&self) -> bool {
        self.mats.iter().all(|m| m.as_constant(&self.field).is_some())
    }

    /// Index of a coordinate equal to the identity matrix.
    pub fn identity_coordinate(&self) -> Option<usize> {
        let r = self.ring();
        self.mats.iter().position(|m| m.is_identity(&r))
    }

    /// Same matrices viewed at another simplicial degree (constants only
    /// move down).
    pub fn with_degree(&self, d: usize) -> Result<SymbolTuple> {
        SymbolTuple::new(&self.field, d, self.mats.clone())
    }

    /// Substitute the variables in every coordinate; the result lives at
    /// degree `d`.
    pub fn substitute(&self, s0: &MPoly, s1: &MPoly, d: usize) -> SymbolTuple {
        let mats = self.mats.iter().map(|m| m.substitute(s0, s1, &self.field)).collect();
        SymbolTuple { field: self.field.clone(), d, mats }
    }

    /// The face `t := c` of a `d = 1` tuple.
    pub fn at(&self, c: i64) -> SymbolTuple {
        let f = &self.field;
        self.substitute(&MPoly::from_int(f, c), &MPoly::zero(), 0)
    }

    /// `t := 1 - t` on a `d = 1` tuple.
    pub fn reflect(&self) -> SymbolTuple {
        let f = &self.field;
        let s = MPoly::one(f).sub(&MPoly::var0(f), f);
        self.substitute(&s, &MPoly::zero(), 1)
    }

    pub fn direct_sum(&self, o: &SymbolTuple) -> Result<SymbolTuple> {
        if self.field != o.field || self.d != o.d || self.l() != o.l() {
            return Err(Error::Context("direct sum of tuples from different contexts".into()));
        }
        let r = self.ring();
        let mats = self
            .mats
            .iter()
            .zip(&o.mats)
            .map(|(a, b)| Mat::block_diag(&[a, b], &r))
            .collect();
        Ok(SymbolTuple { field: self.field.clone(), d: self.d, mats })
    }

    /// `(g θ_i g^-1)_i`; `g` must be invertible over the coordinate ring.
    pub fn conjugate(&self, g: &Mat<MPoly>) -> Result<SymbolTuple> {
        if g.rows() != self.n() || !g.is_square() {
            return Err(Error::Dimension("conjugator has the wrong size".into()));
        }
        let ginv = g.inverse_poly(&self.field)?;
        let r = self.ring();
        let mats = self.mats.iter().map(|m| g.mulm(m, &r).mulm(&ginv, &r)).collect();
        Ok(SymbolTuple { field: self.field.clone(), d: self.d, mats })
    }

    /// Split along a partition when every coordinate is block upper
    /// triangular; `None` otherwise.
    pub fn block_split(&self, sizes: &[usize]) -> Option<Vec<SymbolTuple>> {
        let r = self.ring();
        if sizes.contains(&0) || !self.mats.iter().all(|m| m.is_block_upper(sizes, &r)) {
            return None;
        }
        let blocks: Vec<Vec<Mat<MPoly>>> =
            self.mats.iter().map(|m| m.diagonal_blocks(sizes)).collect();
        Some(
            (0..sizes.len())
                .map(|b| SymbolTuple {
                    field: self.field.clone(),
                    d: self.d,
                    mats: blocks.iter().map(|bl| bl[b].clone()).collect(),
                })
                .collect(),
        )
    }

    /// Restriction of scalars from `L = self.field()` to a subfield `k`: every
    /// entry is replaced by its regular representation over `k`.
    pub fn restrict_scalars(&self, k: &Field) -> Result<SymbolTuple> {
        let l = &self.field;
        let dim = l
            .degree_over(k)
            .ok_or_else(|| Error::NotExtension(l.descriptor(), k.descriptor()))?;
        if self.d > 1 {
            return Err(Error::Context("restriction of scalars needs d <= 1".into()));
        }
        let n = self.n();
        let mut mats = Vec::new();
        for m in &self.mats {
            let mut out = Mat::filled(n * dim, n * dim, MPoly::zero());
            for i in 0..n {
                for j in 0..n {
                    for (&(e0, e1), c) in m.get(i, j).terms() {
                        let rep = l.regular_representation(c, k)?;
                        for a in 0..dim {
                            for b in 0..dim {
                                let term = MPoly::monomial(k, rep.get(a, b).clone(), e0, e1);
                                let v = out.get(i * dim + a, j * dim + b).add(&term, k);
                                out.set(i * dim + a, j * dim + b, v);
                            }
                        }
                    }
                }
            }
            mats.push(out);
        }
        Ok(SymbolTuple { field: k.clone(), d: self.d, mats })
    }

    /// Extension of scalars to `L` (a field above `self.field()`).
    pub fn extend_scalars(&self, l: &Field) -> Result<SymbolTuple> {
        let k = &self.field;
        if !l.is_extension_of(k) {
            return Err(Error::NotExtension(l.descriptor(), k.descriptor()));
        }
        let mats = self
            .mats
            .iter()
            .map(|m| m.map(|e| e.map_coeffs(l, |c| l.embed(k, c).unwrap())))
            .collect();
        Ok(SymbolTuple { field: l.clone(), d: self.d, mats })
    }

    /// Text form `{field:"Q", d:1, l:2, mats:[...]}`.
    pub fn format(&self) -> String {
        let vars = var_names(self.d);
        let mats: Vec<String> = self.mats.iter().map(|m| m.format(&self.field, vars)).collect();
        format!(
            "{{field:\"{}\", d:{}, l:{}, mats:[{}]}}",
            self.field.descriptor(),
            self.d,
            self.l(),
            mats.join(", ")
        )
    }

    /// Compact form `(m1, m2, ...)`.
    pub fn short(&self) -> String {
        let vars = var_names(self.d);
        let mats: Vec<String> = self
            .mats
            .iter()
            .map(|m| {
                if m.rows() == 1 {
                    m.get(0, 0).format(&self.field, vars)
                } else {
                    m.format(&self.field, vars)
                }
            })
            .collect();
        format!("({})", mats.join(", "))
    }
}

impl fmt::Display for SymbolTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.short())
    }
}

/// Whether two polynomial matrices are equal (entry-wise exact identity).
pub fn check_identity<E: Clone + PartialEq>(lhs: &Mat<E>, rhs: &Mat<E>) -> Result<bool> {
    if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
        return Err(Error::Dimension(format!(
            "{}x{} vs {}x{}",
            lhs.rows(),
            lhs.cols(),
            rhs.rows(),
            rhs.cols()
        )));
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rational()
    }

    fn cm(f: &Field, rows: &[&[i64]]) -> Mat<Elem> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| f.from_int(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn shears_do_not_commute() {
        let f = q();
        let a = cm(&f, &[&[1, 1], &[0, 1]]);
        let b = cm(&f, &[&[1, 0], &[1, 1]]);
        assert_eq!(SymbolTuple::constant(&f, vec![a, b]), Err(Error::NotCommuting(0, 1)));
    }

    #[test]
    fn non_unit_determinant_rejected() {
        let f = q();
        let t = MPoly::var0(&f);
        let m = Mat::from_rows(vec![vec![t]]).unwrap();
        let err = SymbolTuple::new(&f, 1, vec![m]).unwrap_err();
        assert!(matches!(err, Error::NotInvertible { index: 0, .. }));
    }

    #[test]
    fn direct_sum_of_scalars() {
        let f = q();
        let a = SymbolTuple::scalars(&f, &[f.from_int(2), f.from_int(3)]).unwrap();
        let b = SymbolTuple::scalars(&f, &[f.from_int(4), f.from_int(5)]).unwrap();
        let s = a.direct_sum(&b).unwrap();
        let r = s.constant_mats().unwrap();
        assert_eq!(r[0], cm(&f, &[&[2, 0], &[0, 4]]));
        assert_eq!(r[1], cm(&f, &[&[3, 0], &[0, 5]]));
    }

    #[test]
    fn restrict_i_to_q() {
        let f = q();
        let l = Field::extension(
            &f,
            &crate::algebra::Poly::from_ints(&f, &[1, 0, 1]),
            "i",
        )
        .unwrap();
        let i = l.generator().unwrap();
        let s = SymbolTuple::scalars(&l, &[i.clone(), i]).unwrap();
        let r = s.restrict_scalars(&f).unwrap();
        let m = r.constant_mats().unwrap();
        assert_eq!(m[0], cm(&f, &[&[0, -1], &[1, 0]]));
        assert_eq!(m[1], cm(&f, &[&[0, -1], &[1, 0]]));
        assert_eq!(s.restrict_scalars(&l).unwrap(), s);
    }
}
