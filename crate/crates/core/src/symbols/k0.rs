//! Canonical classes of `d = 0` chains: signed multisets of simple
//! composition factors `(L, α_1, ..., α_l)` with no `α_i = 1`.
//!
//! The first operator's characteristic polynomial is factored; each
//! irreducible factor `f` gives the filtration `ker f(A) ⊂ ker f(A)^2 ⊂ ...`
//! whose graded pieces are vector spaces over `L = K[x]/(f)` with `x` acting
//! as `A`. The remaining operators are rewritten as `L`-matrices and the
//! procedure recurses. Factor fields are towers whose successive moduli are
//! the minimal polynomials of `α_1, α_2, ...`, which makes the result
//! canonical.

use std::collections::BTreeMap;
use std::fmt;

use super::chain::Chain;
use super::tuple::SymbolTuple;
use crate::algebra::factor::factor;
use crate::algebra::{Elem, Field, Mat, Poly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleFactor {
    pub field: Field,
    pub alphas: Vec<Elem>,
}

impl SimpleFactor {
    /// `[L : k]`.
    pub fn degree_over(&self, k: &Field) -> usize {
        self.field.degree_over(k).expect("factor field lies over the base")
    }

    /// The point `(L, α)` as a `d = 0` tuple over `k` (regular
    /// representations of the coordinates).
    pub fn to_tuple(&self, k: &Field) -> Result<SymbolTuple> {
        SymbolTuple::scalars(&self.field, &self.alphas)?.restrict_scalars(k)
    }

    pub fn has_trivial_coordinate(&self) -> bool {
        self.alphas.iter().any(|a| self.field.is_one(a))
    }

    pub fn format(&self) -> String {
        let a: Vec<String> = self.alphas.iter().map(|x| self.field.format_elem(x)).collect();
        format!("({}; {})", self.field.descriptor(), a.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0Class {
    pub field: Field,
    pub l: usize,
    factors: BTreeMap<SimpleFactor, i64>,
}

impl K0Class {
    pub fn empty(field: &Field, l: usize) -> K0Class {
        K0Class { field: field.clone(), l, factors: BTreeMap::new() }
    }

    pub fn factors(&self) -> &BTreeMap<SimpleFactor, i64> {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn add_factor(&mut self, f: SimpleFactor, m: i64) {
        let e = self.factors.entry(f.clone()).or_insert(0);
        *e += m;
        if *e == 0 {
            self.factors.remove(&f);
        }
    }

    pub fn add(&self, o: &K0Class) -> K0Class {
        let mut r = self.clone();
        for (f, m) in &o.factors {
            r.add_factor(f.clone(), *m);
        }
        r
    }

    pub fn scale(&self, c: i64) -> K0Class {
        let mut r = K0Class::empty(&self.field, self.l);
        if c != 0 {
            for (f, m) in &self.factors {
                r.factors.insert(f.clone(), m * c);
            }
        }
        r
    }

    pub fn sub(&self, o: &K0Class) -> K0Class {
        self.add(&o.scale(-1))
    }

    /// Total `k`-dimension with multiplicity.
    pub fn dimension(&self) -> i64 {
        self.factors.iter().map(|(f, m)| m * f.degree_over(&self.field) as i64).sum()
    }
}

impl fmt::Display for K0Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(sf, m)| if *m == 1 { sf.format() } else { format!("{m}*{}", sf.format()) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Class of a `d = 0` chain.
pub fn k0_class(c: &Chain) -> Result<K0Class> {
    if c.ctx().d != 0 {
        return Err(Error::Context(format!("k0_class needs d=0, got d={}", c.ctx().d)));
    }
    let mut out = K0Class::empty(&c.ctx().field, c.ctx().l);
    for (coef, t) in c.terms() {
        for (sf, m) in composition_factors(t, false)? {
            out.add_factor(sf, coef * m as i64);
        }
    }
    Ok(out)
}

/// Class of a single `d = 0` tuple.
pub fn k0_class_tuple(t: &SymbolTuple) -> Result<K0Class> {
    k0_class(&Chain::single(t.clone()))
}

/// Composition factors of a `d = 0` tuple with multiplicities. With
/// `keep_trivial`, factors having a coordinate equal to 1 are kept.
pub fn composition_factors(t: &SymbolTuple, keep_trivial: bool) -> Result<Vec<(SimpleFactor, usize)>> {
    let mats = t
        .constant_mats()
        .ok_or_else(|| Error::Context("composition factors need constant matrices".into()))?;
    let mut out = BTreeMap::new();
    decompose(t.field(), &mats, t.n(), vec![], keep_trivial, &mut out)?;
    Ok(out.into_iter().collect())
}

fn tower_depth(f: &Field) -> usize {
    match f.base() {
        Some(b) => 1 + tower_depth(b),
        None => 0,
    }
}

fn fresh_var(k: &Field) -> String {
    const NAMES: [&str; 6] = ["x", "y", "z", "u", "v", "w"];
    let d = tower_depth(k);
    NAMES.get(d).map(|s| s.to_string()).unwrap_or_else(|| format!("x{d}"))
}

fn decompose(
    k: &Field,
    mats: &[Mat<Elem>],
    dim: usize,
    alphas: Vec<Elem>,
    keep_trivial: bool,
    out: &mut BTreeMap<SimpleFactor, usize>,
) -> Result<()> {
    if dim == 0 {
        return Ok(());
    }
    let Some((a, rest)) = mats.split_first() else {
        *out.entry(SimpleFactor { field: k.clone(), alphas }).or_insert(0) += dim;
        return Ok(());
    };
    let chi = a.charpoly_poly(k);
    for (f, e) in factor(k, &chi)? {
        let nf = a.eval_poly(f.coeffs(), k);
        let mut power = Mat::identity(k, dim);
        let mut prev: Vec<Vec<Elem>> = vec![];
        for _ in 0..e {
            power = power.mulm(&nf, k);
            let comp = extend_basis(k, dim, &prev, &power.kernel(k));
            if comp.is_empty() {
                break;
            }
            let mut full = prev.clone();
            full.extend(comp.iter().cloned());
            let p = Mat::from_columns(dim, &full);
            let induced = |t: &Mat<Elem>| -> Mat<Elem> {
                let cols: Vec<Vec<Elem>> = comp
                    .iter()
                    .map(|c| {
                        let tc = t.mulm(&Mat::from_columns(dim, std::slice::from_ref(c)), k).column(0);
                        let x = p.solve(&tc, k).expect("filtration step is invariant");
                        x[prev.len()..].to_vec()
                    })
                    .collect();
                Mat::from_columns(comp.len(), &cols)
            };
            let abar = induced(a);
            let rest_bar: Vec<Mat<Elem>> = rest.iter().map(induced).collect();
            piece(k, &f, &abar, &rest_bar, &alphas, keep_trivial, out)?;
            prev = full;
        }
    }
    Ok(())
}

/// Vectors from `candidates` extending the independent set `base`.
fn extend_basis(k: &Field, dim: usize, base: &[Vec<Elem>], candidates: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    let mut cur: Vec<Vec<Elem>> = base.to_vec();
    let mut added = Vec::new();
    for v in candidates {
        let mut trial = cur.clone();
        trial.push(v.clone());
        if Mat::from_columns(dim, &trial).rank(k) == trial.len() {
            cur = trial;
            added.push(v.clone());
        }
    }
    added
}

/// Handle one graded piece on which `f(A) = 0`.
fn piece(
    k: &Field,
    f: &Poly,
    abar: &Mat<Elem>,
    rest: &[Mat<Elem>],
    alphas: &[Elem],
    keep_trivial: bool,
    out: &mut BTreeMap<SimpleFactor, usize>,
) -> Result<()> {
    let m = abar.rows();
    let d = f.degree().unwrap();
    if d == 1 {
        let root = k.neg(&f.coeffs()[0]);
        if !keep_trivial && k.is_one(&root) {
            return Ok(());
        }
        let mut al = alphas.to_vec();
        al.push(root);
        return decompose(k, rest, m, al, keep_trivial, out);
    }
    let l = Field::extension_unchecked(k, f, &fresh_var(k));
    // L-basis from cyclic orbits v, Av, ..., A^(d-1) v
    let mut basis: Vec<Vec<Elem>> = vec![];
    let mut starts = vec![];
    for i in 0..m {
        if basis.len() == m {
            break;
        }
        let mut e = vec![k.zero(); m];
        e[i] = k.one();
        let mut trial = basis.clone();
        trial.push(e.clone());
        if Mat::from_columns(m, &trial).rank(k) < trial.len() {
            continue;
        }
        starts.push(e.clone());
        let mut v = e;
        for _ in 0..d {
            basis.push(v.clone());
            v = abar.mulm(&Mat::from_columns(m, &[v]), k).column(0);
        }
    }
    let p = Mat::from_columns(m, &basis);
    let ml = starts.len();
    let rest_l: Vec<Mat<Elem>> = rest
        .iter()
        .map(|b| {
            let mut out = Mat::filled(ml, ml, l.zero());
            for (s, v) in starts.iter().enumerate() {
                let w = b.mulm(&Mat::from_columns(m, std::slice::from_ref(v)), k).column(0);
                let lam = p.solve(&w, k).expect("orbit basis spans the piece");
                for s2 in 0..ml {
                    out.set(s2, s, Elem::Ext(lam[s2 * d..(s2 + 1) * d].to_vec()));
                }
            }
            out
        })
        .collect();
    let mut al: Vec<Elem> = alphas.iter().map(|a| l.embed_base(a)).collect();
    al.push(l.generator().unwrap());
    decompose(&l, &rest_l, ml, al, keep_trivial, out)
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
    fn companion_of_split_quadratic() {
        let f = q();
        let t = SymbolTuple::constant(&f, vec![cm(&f, &[&[0, 1], &[-20, 9]])]).unwrap();
        let c = k0_class_tuple(&t).unwrap();
        let mut expect = K0Class::empty(&f, 1);
        expect.add_factor(SimpleFactor { field: f.clone(), alphas: vec![f.from_int(4)] }, 1);
        expect.add_factor(SimpleFactor { field: f.clone(), alphas: vec![f.from_int(5)] }, 1);
        assert_eq!(c, expect);
    }

    #[test]
    fn irreducible_quadratic_factor() {
        // companion of (λ-4)(λ^2-3) = λ^3 - 4λ^2 - 3λ + 12
        let f = q();
        let t = SymbolTuple::constant(&f, vec![cm(&f, &[&[0, 1, 0], &[0, 0, 1], &[-12, 3, 4]])])
            .unwrap();
        let c = k0_class_tuple(&t).unwrap();
        let l = Field::extension(&f, &Poly::from_ints(&f, &[-3, 0, 1]), "x").unwrap();
        let mut expect = K0Class::empty(&f, 1);
        expect.add_factor(SimpleFactor { field: f.clone(), alphas: vec![f.from_int(4)] }, 1);
        expect.add_factor(SimpleFactor { field: l.clone(), alphas: vec![l.generator().unwrap()] }, 1);
        assert_eq!(c, expect);
    }

    #[test]
    fn identity_coordinate_kills_class() {
        let f = q();
        let t = SymbolTuple::constant(&f, vec![cm(&f, &[&[1, 0], &[0, 1]]), cm(&f, &[&[2, 1], &[0, 2]])])
            .unwrap();
        assert!(k0_class_tuple(&t).unwrap().is_empty());
    }

    #[test]
    fn jordan_block_counts_twice() {
        let f = q();
        let t = SymbolTuple::constant(&f, vec![cm(&f, &[&[2, 1], &[0, 2]])]).unwrap();
        let c = k0_class_tuple(&t).unwrap();
        let sf = SimpleFactor { field: f.clone(), alphas: vec![f.from_int(2)] };
        assert_eq!(c.factors().get(&sf), Some(&2));
    }

    #[test]
    fn joint_eigenvalues_of_commuting_pair() {
        // A = companion of x^2+1, B = A + 2: pair acting on Q(i) by (i, i+2)
        let f = q();
        let a = cm(&f, &[&[0, 1], &[-1, 0]]);
        let b = cm(&f, &[&[2, 1], &[-1, 2]]);
        let t = SymbolTuple::constant(&f, vec![a, b]).unwrap();
        let c = k0_class_tuple(&t).unwrap();
        assert_eq!(c.factors().len(), 1);
        let (sf, m) = c.factors().iter().next().unwrap();
        assert_eq!(*m, 1);
        let l = &sf.field;
        assert_eq!(sf.alphas[1], l.add(&sf.alphas[0], &l.from_int(2)));
    }
}
