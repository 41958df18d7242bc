//! Dense matrices over a commutative [`Ring`], with field-specific linear
//! algebra for constant matrices and unit-determinant inversion over
//! polynomial rings.

use super::field::{Elem, Field};
use super::mpoly::MPoly;
use super::poly::Poly;
use super::ring::{PolyRing, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Mat<E> {
    pub fn filled(rows: usize, cols: usize, e: E) -> Mat<E> {
        Mat { rows, cols, data: vec![e; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Mat<E>> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        Ok(Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut g: impl FnMut(usize, usize) -> E) -> Mat<E> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(g(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, e: E) {
        self.data[i * self.cols + j] = e;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn map<F, T: Clone>(&self, g: F) -> Mat<T>
    where
        F: Fn(&E) -> T,
    {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(g).collect() }
    }

    pub fn transpose(&self) -> Mat<E> {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Mat<E> {
        Mat::from_fn(r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Matrix with the given columns.
    pub fn from_columns(rows: usize, cols: &[Vec<E>]) -> Mat<E> {
        Mat::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }
}

/// Block boundaries `[0, s1, s1+s2, ...]` of a partition.
pub fn offsets(sizes: &[usize]) -> Vec<usize> {
    let mut v = vec![0];
    for s in sizes {
        v.push(v.last().unwrap() + s);
    }
    v
}

impl<E: Clone + PartialEq + std::fmt::Debug> Mat<E> {
    pub fn zeros<R: Ring<E = E>>(r: &R, rows: usize, cols: usize) -> Mat<E> {
        Mat::filled(rows, cols, r.zero())
    }

    pub fn identity<R: Ring<E = E>>(r: &R, n: usize) -> Mat<E> {
        Mat::from_fn(n, n, |i, j| if i == j { r.one() } else { r.zero() })
    }

    pub fn scalar<R: Ring<E = E>>(r: &R, n: usize, c: &E) -> Mat<E> {
        Mat::from_fn(n, n, |i, j| if i == j { c.clone() } else { r.zero() })
    }

    pub fn is_identity<R: Ring<E = E>>(&self, r: &R) -> bool {
        self.is_square() && *self == Mat::identity(r, self.rows)
    }

    pub fn is_zero<R: Ring<E = E>>(&self, r: &R) -> bool {
        self.data.iter().all(|e| r.is_zero(e))
    }

    fn check_same(&self, o: &Mat<E>) -> Result<()> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    pub fn add<R: Ring<E = E>>(&self, o: &Mat<E>, r: &R) -> Result<Mat<E>> {
        self.check_same(o)?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| r.add(a, b)).collect(),
        })
    }

    pub fn sub<R: Ring<E = E>>(&self, o: &Mat<E>, r: &R) -> Result<Mat<E>> {
        self.check_same(o)?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| r.sub(a, b)).collect(),
        })
    }

    pub fn neg<R: Ring<E = E>>(&self, r: &R) -> Mat<E> {
        self.map(|e| r.neg(e))
    }

    pub fn scale<R: Ring<E = E>>(&self, c: &E, r: &R) -> Mat<E> {
        self.map(|e| r.mul(e, c))
    }

    pub fn mul<R: Ring<E = E>>(&self, o: &Mat<E>, r: &R) -> Result<Mat<E>> {
        if self.cols != o.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Mat::zeros(r, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..o.cols {
                    let v = r.add(out.get(i, j), &r.mul(a, o.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Multiply, panicking on a dimension mismatch (internal use on square
    /// matrices of equal size).
    pub fn mulm<R: Ring<E = E>>(&self, o: &Mat<E>, r: &R) -> Mat<E> {
        self.mul(o, r).expect("dimension mismatch")
    }

    pub fn pow<R: Ring<E = E>>(&self, e: u32, r: &R) -> Mat<E> {
        let mut acc = Mat::identity(r, self.rows);
        for _ in 0..e {
            acc = acc.mulm(self, r);
        }
        acc
    }

    pub fn commutes_with<R: Ring<E = E>>(&self, o: &Mat<E>, r: &R) -> bool {
        match (self.mul(o, r), o.mul(self, r)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }

    pub fn block_diag<R: Ring<E = E>>(blocks: &[&Mat<E>], r: &R) -> Mat<E> {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(r, n, m);
        let (mut oi, mut oj) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(oi + i, oj + j, b.get(i, j).clone());
                }
            }
            oi += b.rows;
            oj += b.cols;
        }
        out
    }

    /// Whether every entry below the diagonal blocks of the partition is zero.
    pub fn is_block_upper<R: Ring<E = E>>(&self, sizes: &[usize], r: &R) -> bool {
        let off = offsets(sizes);
        if *off.last().unwrap() != self.rows || !self.is_square() {
            return false;
        }
        for bi in 0..sizes.len() {
            for bj in 0..bi {
                for i in off[bi]..off[bi + 1] {
                    for j in off[bj]..off[bj + 1] {
                        if !r.is_zero(self.get(i, j)) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Whether the matrix is block diagonal for the partition.
    pub fn is_block_diagonal<R: Ring<E = E>>(&self, sizes: &[usize], r: &R) -> bool {
        self.is_block_upper(sizes, r) && self.transpose().is_block_upper(sizes, r)
    }

    /// Diagonal blocks of the partition.
    pub fn diagonal_blocks(&self, sizes: &[usize]) -> Vec<Mat<E>> {
        let off = offsets(sizes);
        (0..sizes.len())
            .map(|b| self.submatrix(off[b], off[b + 1], off[b], off[b + 1]))
            .collect()
    }

    /// Coefficients of `det(λI - A)`, low to high (Berkowitz, division free).
    pub fn charpoly<R: Ring<E = E>>(&self, r: &R) -> Vec<E> {
        assert!(self.is_square(), "characteristic polynomial of non-square matrix");
        let n = self.rows;
        // high-to-low coefficients of the leading principal minors
        let mut v: Vec<E> = vec![r.one()];
        for k in 0..n {
            let a = self.get(k, k).clone();
            let row: Vec<E> = (0..k).map(|j| self.get(k, j).clone()).collect();
            let mut col: Vec<E> = (0..k).map(|i| self.get(i, k).clone()).collect();
            let mut t = vec![r.one(), r.neg(&a)];
            for _ in 0..k {
                let rc = row.iter().zip(&col).fold(r.zero(), |s, (x, y)| r.add(&s, &r.mul(x, y)));
                t.push(r.neg(&rc));
                col = (0..k)
                    .map(|i| {
                        (0..k).fold(r.zero(), |s, j| r.add(&s, &r.mul(self.get(i, j), &col[j])))
                    })
                    .collect();
            }
            let mut next = Vec::with_capacity(k + 2);
            for i in 0..k + 2 {
                let mut s = r.zero();
                for (j, vj) in v.iter().enumerate() {
                    if i >= j {
                        s = r.add(&s, &r.mul(&t[i - j], vj));
                    }
                }
                next.push(s);
            }
            v = next;
        }
        v.reverse();
        v
    }

    pub fn det<R: Ring<E = E>>(&self, r: &R) -> E {
        let cp = self.charpoly(r);
        if self.rows.is_multiple_of(2) {
            cp[0].clone()
        } else {
            r.neg(&cp[0])
        }
    }

    pub fn trace<R: Ring<E = E>>(&self, r: &R) -> E {
        (0..self.rows).fold(r.zero(), |s, i| r.add(&s, self.get(i, i)))
    }

    /// `p(A)` for coefficients low to high.
    pub fn eval_poly<R: Ring<E = E>>(&self, coeffs: &[E], r: &R) -> Mat<E> {
        let mut acc = Mat::zeros(r, self.rows, self.cols);
        for c in coeffs.iter().rev() {
            acc = acc.mulm(self, r).add(&Mat::scalar(r, self.rows, c), r).unwrap();
        }
        acc
    }
}

// ---------- constant matrices over a field ----------

impl Mat<Elem> {
    pub fn det_field(&self, f: &Field) -> Elem {
        // Gaussian elimination is much cheaper than Berkowitz here.
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !f.is_zero(m.get(i, c))) else {
                return f.zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = f.neg(&det);
            }
            let piv = m.get(c, c).clone();
            det = f.mul(&det, &piv);
            let inv = f.inv(&piv).unwrap();
            for i in c + 1..n {
                let factor = f.mul(m.get(i, c), &inv);
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..n {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Monic characteristic polynomial `det(λI - A)`.
    pub fn charpoly_poly(&self, f: &Field) -> Poly {
        Poly::new(f, self.charpoly(f))
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self, f: &Field) -> (Mat<Elem>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for c in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(p, row);
            let inv = f.inv(m.get(row, c)).unwrap();
            for j in 0..self.cols {
                let v = f.mul(m.get(row, j), &inv);
                m.set(row, j, v);
            }
            for i in 0..self.rows {
                if i == row {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for j in 0..self.cols {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(row, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.rref(f).1.len()
    }

    /// Basis of the right kernel `{v : A v = 0}`.
    pub fn kernel(&self, f: &Field) -> Vec<Vec<Elem>> {
        let (m, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![f.zero(); self.cols];
                v[fc] = f.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.get(r, fc));
                }
                v
            })
            .collect()
    }

    /// One solution of `A x = b`, if any.
    pub fn solve(&self, b: &[Elem], f: &Field) -> Option<Vec<Elem>> {
        let aug = Mat::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (m, pivots) = aug.rref(f);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = m.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse_field(&self, f: &Field) -> Result<Mat<Elem>> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let aug = Mat::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                f.one()
            } else {
                f.zero()
            }
        });
        let (m, pivots) = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(m.submatrix(0, n, n, 2 * n))
    }

    pub fn format(&self, f: &Field) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let r: Vec<String> = self.row(i).iter().map(|e| f.format_elem(e)).collect();
                format!("[{}]", r.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }

    pub fn to_poly_matrix(&self, f: &Field) -> Mat<MPoly> {
        self.map(|e| MPoly::constant(f, e.clone()))
    }
}

// ---------- matrices over k[t] / k[x, y] ----------

impl Mat<MPoly> {
    pub fn substitute(&self, s0: &MPoly, s1: &MPoly, f: &Field) -> Mat<MPoly> {
        self.map(|e| e.substitute(s0, s1, f))
    }

    /// Constant matrix, if no entry involves a variable.
    pub fn as_constant(&self, f: &Field) -> Option<Mat<Elem>> {
        if self.data.iter().all(|e| e.is_constant()) {
            Some(self.map(|e| e.constant_term(f)))
        } else {
            None
        }
    }

    pub fn eval(&self, x0: &Elem, x1: &Elem, f: &Field) -> Mat<Elem> {
        self.map(|e| e.eval(x0, x1, f))
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.data.iter().any(|e| e.uses_var(var))
    }

    pub fn det_poly(&self, f: &Field) -> MPoly {
        self.det(&PolyRing::new(f))
    }

    /// Inverse over the polynomial ring; requires a nonzero constant
    /// determinant. Uses Cayley-Hamilton, so no division by non-constants.
    pub fn inverse_poly(&self, f: &Field) -> Result<Mat<MPoly>> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of non-square matrix".into()));
        }
        let ring = PolyRing::new(f);
        let n = self.rows;
        let cp = self.charpoly(&ring);
        let c0 = cp[0]
            .as_constant(f)
            .filter(|c| !f.is_zero(c))
            .ok_or(Error::Singular)?;
        let mut b = Mat::identity(&ring, n);
        for j in (0..n.saturating_sub(1)).rev() {
            b = b.mulm(self, &ring).add(&Mat::scalar(&ring, n, &cp[j + 1]), &ring).unwrap();
        }
        let s = f.neg(&f.inv(&c0).unwrap());
        Ok(b.map(|e| e.scale(&s, f)))
    }

    pub fn format(&self, f: &Field, vars: &[&str]) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let r: Vec<String> = self.row(i).iter().map(|e| e.format(f, vars)).collect();
                format!("[{}]", r.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

/// Companion matrix of a monic polynomial `λ^n + c_{n-1}λ^{n-1} + ... + c_0`
/// given its lower coefficients as ring elements: ones on the superdiagonal,
/// `-c_0, ..., -c_{n-1}` in the last row.
pub fn companion<R: Ring>(r: &R, lower: &[R::E]) -> Mat<R::E> {
    let n = lower.len();
    Mat::from_fn(n, n, |i, j| {
        if i + 1 == n {
            r.neg(&lower[j])
        } else if j == i + 1 {
            r.one()
        } else {
            r.zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rational()
    }

    fn qm(rows: &[&[i64]]) -> Mat<Elem> {
        let f = q();
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| f.from_int(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn charpoly_examples() {
        let f = q();
        let m = qm(&[&[0, 1], &[-20, 9]]);
        assert_eq!(m.charpoly_poly(&f), Poly::from_ints(&f, &[20, -9, 1]));
        let i2 = qm(&[&[1, 0], &[0, 1]]);
        assert_eq!(i2.charpoly_poly(&f), Poly::from_ints(&f, &[1, -2, 1]));
        let c = companion(&f, &[f.from_int(-12), f.from_int(4), f.from_int(3)]);
        assert_eq!(c.charpoly_poly(&f), Poly::from_ints(&f, &[-12, 4, 3, 1]));
    }

    #[test]
    fn det_agrees_with_berkowitz() {
        let f = q();
        let m = qm(&[&[2, 1, 3], &[0, -1, 4], &[5, 2, 2]]);
        assert_eq!(m.det_field(&f), m.det(&f));
    }

    #[test]
    fn elementary_inverse() {
        let f = q();
        let m = qm(&[&[1, 0], &[-3, 1]]);
        assert_eq!(m.inverse_field(&f).unwrap(), qm(&[&[1, 0], &[3, 1]]));
        let pm = m.to_poly_matrix(&f);
        assert_eq!(pm.inverse_poly(&f).unwrap(), qm(&[&[1, 0], &[3, 1]]).to_poly_matrix(&f));
    }

    #[test]
    fn polynomial_inverse() {
        let f = q();
        let t = MPoly::var0(&f);
        let one = MPoly::one(&f);
        let zero = MPoly::zero();
        // [[1, t], [0, 1]]
        let m = Mat::from_rows(vec![vec![one.clone(), t.clone()], vec![zero, one]]).unwrap();
        let inv = m.inverse_poly(&f).unwrap();
        let r = PolyRing::new(&f);
        assert!(m.mulm(&inv, &r).is_identity(&r));
        let s = Mat::from_rows(vec![vec![t.clone()]]).unwrap();
        assert_eq!(s.inverse_poly(&f), Err(Error::Singular));
    }

    #[test]
    fn kernel_and_solve() {
        let f = q();
        let m = qm(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = m.kernel(&f);
        assert_eq!(k.len(), 2);
        for v in &k {
            let mv = m.mulm(&Mat::from_columns(3, std::slice::from_ref(v)), &f);
            assert!(mv.is_zero(&f));
        }
        let x = m.solve(&[f.from_int(1), f.from_int(2)], &f).unwrap();
        assert_eq!(x[0], f.from_int(1));
        assert!(m.solve(&[f.from_int(1), f.from_int(3)], &f).is_none());
    }
}
