//! A programmatic way to write certificates: helpers emit the primitive
//! moves for the standard relations and simulate them on the chain, so a
//! finished builder yields a script the checker accepts.

use super::run::apply_move;
use super::script::{CertificateScript, Move, Side};
use crate::algebra::{Field, MPoly, Mat, PolyRing, Ring};
use crate::error::{Error, Result};
use crate::symbols::{Chain, Context, SymbolTuple};

/// Constant matrix from integer rows.
pub fn int_mat(k: &Field, rows: &[&[i64]]) -> Mat<MPoly> {
    Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| MPoly::from_int(k, x)).collect()).collect())
        .expect("rectangular")
}

pub fn eye(k: &Field, n: usize) -> Mat<MPoly> {
    Mat::identity(&PolyRing::new(k), n)
}

pub fn zeros(n: usize) -> Mat<MPoly> {
    Mat::filled(n, n, MPoly::zero())
}

/// `[[a, b], [c, d]]` from equal-sized square blocks.
pub fn block2(a: &Mat<MPoly>, b: &Mat<MPoly>, c: &Mat<MPoly>, d: &Mat<MPoly>) -> Mat<MPoly> {
    let n = a.rows();
    Mat::from_fn(2 * n, 2 * n, |i, j| {
        let m = match (i < n, j < n) {
            (true, true) => a,
            (true, false) => b,
            (false, true) => c,
            (false, false) => d,
        };
        m.get(i % n, j % n).clone()
    })
}

/// `x ⊕ x ⊕ ... ⊕ x` with `copies` summands.
pub fn repeat(k: &Field, x: &Mat<MPoly>, copies: usize) -> Mat<MPoly> {
    let blocks: Vec<&Mat<MPoly>> = std::iter::repeat_n(x, copies).collect();
    Mat::block_diag(&blocks, &PolyRing::new(k))
}

/// Substitute `t := s` (the first variable) in every entry.
pub fn at_time(k: &Field, m: &Mat<MPoly>, s: &MPoly) -> Mat<MPoly> {
    m.substitute(s, &MPoly::zero(), k)
}

pub struct MatOps<'a>(pub &'a Field);

impl MatOps<'_> {
    fn r(&self) -> PolyRing {
        PolyRing::new(self.0)
    }
    pub fn mul(&self, a: &Mat<MPoly>, b: &Mat<MPoly>) -> Mat<MPoly> {
        a.mulm(b, &self.r())
    }
    pub fn add(&self, a: &Mat<MPoly>, b: &Mat<MPoly>) -> Mat<MPoly> {
        a.add(b, &self.r()).expect("same size")
    }
    pub fn sub(&self, a: &Mat<MPoly>, b: &Mat<MPoly>) -> Mat<MPoly> {
        a.sub(b, &self.r()).expect("same size")
    }
    pub fn neg(&self, a: &Mat<MPoly>) -> Mat<MPoly> {
        a.neg(&self.r())
    }
    pub fn scale(&self, a: &Mat<MPoly>, c: &MPoly) -> Mat<MPoly> {
        a.scale(c, &self.r())
    }
    pub fn inv(&self, a: &Mat<MPoly>) -> Mat<MPoly> {
        a.inverse_poly(self.0).expect("invertible")
    }
    pub fn t(&self) -> MPoly {
        MPoly::var0(self.0)
    }
    pub fn int(&self, n: i64) -> MPoly {
        self.r().from_int(n)
    }
}

/// A coordinate of a shaped tuple.
#[derive(Clone, Debug)]
pub enum Slot {
    /// Filled by the `i`-th supplied matrix.
    Var(usize),
    /// A fixed matrix, repeated block-diagonally to the required size.
    Fixed(Mat<MPoly>),
}

/// A pattern for tuples in which some coordinates vary and the others are
/// fixed matrices.
#[derive(Clone, Debug)]
pub struct Shape {
    pub field: Field,
    pub slots: Vec<Slot>,
}

impl Shape {
    pub fn new(field: &Field, slots: Vec<Slot>) -> Shape {
        Shape { field: field.clone(), slots }
    }

    /// One varying coordinate at `i`, the rest fixed.
    pub fn main_at(field: &Field, i: usize, fixed: &[Mat<MPoly>]) -> Shape {
        let mut slots: Vec<Slot> = fixed.iter().cloned().map(Slot::Fixed).collect();
        slots.insert(i, Slot::Var(0));
        Shape::new(field, slots)
    }

    pub fn has_fixed(&self) -> bool {
        self.slots.iter().any(|s| matches!(s, Slot::Fixed(_)))
    }

    pub fn var_count(&self) -> usize {
        self.slots.iter().filter(|s| matches!(s, Slot::Var(_))).count()
    }

    pub fn tuple(&self, d: usize, vals: &[Mat<MPoly>]) -> Result<SymbolTuple> {
        let size = vals[0].rows();
        let mats = self
            .slots
            .iter()
            .map(|s| match s {
                Slot::Var(i) => Ok(vals[*i].clone()),
                Slot::Fixed(x) => {
                    if !size.is_multiple_of(x.rows()) {
                        return Err(Error::Dimension(format!("cannot repeat a {}x{} block to size {size}", x.rows(), x.rows())));
                    }
                    Ok(repeat(&self.field, x, size / x.rows()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        SymbolTuple::new(&self.field, d, mats)
    }

    /// Apply `f` to every fixed matrix.
    pub fn map_fixed(&self, f: impl Fn(&Mat<MPoly>) -> Mat<MPoly>) -> Shape {
        let slots = self
            .slots
            .iter()
            .map(|s| match s {
                Slot::Var(i) => Slot::Var(*i),
                Slot::Fixed(x) => Slot::Fixed(f(x)),
            })
            .collect();
        Shape { field: self.field.clone(), slots }
    }

    /// Fixed matrices evaluated at `t := s`.
    pub fn at(&self, s: &MPoly) -> Shape {
        self.map_fixed(|x| at_time(&self.field, x, s))
    }
}

/// Records moves while simulating them on the chain.
pub struct ProofBuilder {
    name: String,
    ctx: Context,
    start: Chain,
    chain: Chain,
    moves: Vec<Move>,
    notes: Vec<String>,
}

impl ProofBuilder {
    pub fn new(name: &str, start: Chain) -> ProofBuilder {
        ProofBuilder {
            name: name.to_string(),
            ctx: start.ctx().clone(),
            chain: start.clone(),
            start,
            moves: vec![],
            notes: vec![],
        }
    }

    pub fn field(&self) -> &Field {
        &self.ctx.field
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn chain(&self) -> &Chain {
        &self.chain
    }

    pub fn note(&mut self, s: &str) {
        self.notes.push(s.to_string());
    }

    /// Apply and record a move; identity-coordinate terms are then dropped.
    pub fn apply(&mut self, mv: Move) -> Result<()> {
        apply_move(&mut self.chain, &mv).map_err(|c| Error::Context(format!("{}: {c}", mv.kind())))?;
        self.moves.push(mv);
        while let Some(i) = self.chain.terms().iter().position(|(_, t)| t.identity_coordinate().is_some()) {
            let mv = Move::WedgeDrop { term: i };
            apply_move(&mut self.chain, &mv).map_err(Error::Context)?;
            self.moves.push(mv);
        }
        Ok(())
    }

    /// Index of the last term equal to `t` (with nonzero coefficient).
    pub fn find(&self, t: &SymbolTuple) -> Result<usize> {
        self.chain
            .terms()
            .iter()
            .rposition(|(c, s)| s == t && *c != 0)
            .ok_or_else(|| Error::Context(format!("term {} not in chain", t.short())))
    }

    pub fn conjugate(&mut self, t: &SymbolTuple, g: &Mat<MPoly>) -> Result<SymbolTuple> {
        let term = self.find(t)?;
        let out = t.conjugate(g)?;
        self.apply(Move::Conjugate { term, g: g.clone() })?;
        Ok(out)
    }

    pub fn blocksplit(&mut self, t: &SymbolTuple, sizes: &[usize]) -> Result<()> {
        let term = self.find(t)?;
        self.apply(Move::BlockSplit { term, sizes: sizes.to_vec() })
    }

    pub fn dsum(&mut self, t: &SymbolTuple, copies: usize) -> Result<()> {
        let term = self.find(t)?;
        self.apply(Move::DirectSum { term, copies })
    }

    pub fn merge(&mut self, a: &SymbolTuple, b: &SymbolTuple) -> Result<()> {
        let first = self.find(a)?;
        let second = self
            .chain
            .terms()
            .iter()
            .enumerate()
            .rposition(|(i, (_, s))| s == b && i != first)
            .ok_or_else(|| Error::Context(format!("term {} not in chain", b.short())))?;
        self.apply(Move::Merge { first, second })
    }

    pub fn insert_pair(&mut self, coef: i64, t: &SymbolTuple) -> Result<()> {
        self.apply(Move::InsertPair { coef, tuple: t.clone() })
    }

    pub fn add_boundary(&mut self, coef: i64, side: Side, witness: Chain) -> Result<()> {
        self.apply(Move::AddBoundary { coef, side, witness })
    }

    pub fn collect(&mut self) -> Result<()> {
        self.apply(Move::Collect)
    }

    /// The finished script with the given goal.
    pub fn finish(self, goal: Chain) -> CertificateScript {
        CertificateScript {
            name: self.name,
            context: self.ctx,
            start: self.start,
            goal,
            moves: self.moves,
            notes: self.notes,
        }
    }

    /// Finish with the current chain (collected) as the goal.
    pub fn finish_here(mut self) -> Result<CertificateScript> {
        self.collect()?;
        let goal = self.chain.clone();
        Ok(self.finish(goal))
    }
}
