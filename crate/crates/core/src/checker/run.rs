//! Applying moves and checking whole certificates.

use std::collections::HashMap;
use std::fmt;

use super::script::{CertificateScript, Move, Side};
use crate::algebra::{MPoly, Mat, PolyRing};
use crate::symbols::{composition_factors, Chain, Context, K0Class, SymbolTuple};

/// What a successful move did to the chain.
#[derive(Clone, Debug, Default)]
pub struct Effect {
    pub removed: Vec<(i64, SymbolTuple)>,
    pub added: Vec<(i64, SymbolTuple)>,
    /// For `addboundary`: the appended chain.
    pub boundary: bool,
}

fn term(chain: &Chain, i: usize) -> Result<(i64, SymbolTuple), String> {
    chain
        .terms()
        .get(i)
        .cloned()
        .ok_or_else(|| format!("term index {i} out of range (chain has {} terms)", chain.len()))
}

/// Whether one witness tuple satisfies a side condition.
pub fn side_holds(t: &SymbolTuple, side: Side) -> bool {
    let mats = t.mats();
    let r = PolyRing::new(t.field());
    let pairs = || (0..mats.len()).flat_map(|i| (0..mats.len()).filter(move |&j| j != i).map(move |j| (i, j)));
    match side {
        Side::Any => true,
        Side::Z1 => mats.iter().any(|m| !m.uses_var(0) && !m.uses_var(1)),
        Side::Z2 => pairs().any(|(i, j)| mats[i] == mats[j]),
        Side::Z3 => {
            let id = Mat::<MPoly>::identity(&r, t.n());
            pairs().any(|(i, j)| mats[i].add(&mats[j], &r).is_ok_and(|s| s == id))
        }
    }
}

/// Apply one move in place. On failure the chain is unchanged and the
/// violated condition is returned.
pub fn apply_move(chain: &mut Chain, mv: &Move) -> Result<Effect, String> {
    let ctx = chain.ctx().clone();
    let mut eff = Effect::default();
    match mv {
        Move::Conjugate { term: i, g } => {
            let (c, t) = term(chain, *i)?;
            if (ctx.d < 1 && g.uses_var(0)) || (ctx.d < 2 && g.uses_var(1)) {
                return Err(format!("conjugator uses a variable not available at d={}", ctx.d));
            }
            if !g.is_square() || g.rows() != t.n() {
                return Err(format!("conjugator is {}x{}, term {i} has size {}", g.rows(), g.cols(), t.n()));
            }
            let det = g.det_poly(&ctx.field);
            if !det.as_constant(&ctx.field).is_some_and(|d| !ctx.field.is_zero(&d)) {
                return Err(format!(
                    "conjugator is not invertible over the coefficient ring (det = {})",
                    det.format(&ctx.field, crate::symbols::var_names(ctx.d))
                ));
            }
            let nt = t.conjugate(g).map_err(|e| e.to_string())?;
            chain.terms_mut()[*i] = (c, nt.clone());
            eff.removed.push((c, t));
            eff.added.push((c, nt));
        }
        Move::BlockSplit { term: i, sizes } => {
            let (c, t) = term(chain, *i)?;
            if sizes.iter().sum::<usize>() != t.n() || sizes.contains(&0) {
                return Err(format!("sizes {sizes:?} do not partition {}", t.n()));
            }
            let blocks = t
                .block_split(sizes)
                .ok_or_else(|| format!("term {i} is not block upper triangular for sizes {sizes:?}"))?;
            let new: Vec<(i64, SymbolTuple)> = blocks.into_iter().map(|b| (c, b)).collect();
            chain.terms_mut().splice(*i..*i + 1, new.iter().cloned());
            eff.removed.push((c, t));
            eff.added = new;
        }
        Move::WedgeDrop { term: i } => {
            let (c, t) = term(chain, *i)?;
            if t.identity_coordinate().is_none() {
                return Err(format!("term {i} has no coordinate equal to the identity"));
            }
            chain.terms_mut().remove(*i);
            eff.removed.push((c, t));
        }
        Move::Merge { first, second } => {
            let (c1, t1) = term(chain, *first)?;
            let (c2, t2) = term(chain, *second)?;
            if first == second {
                return Err("merge needs two distinct terms".into());
            }
            if c1 != c2 {
                return Err(format!("merged terms have coefficients {c1} and {c2}"));
            }
            let s = t1.direct_sum(&t2).map_err(|e| e.to_string())?;
            chain.terms_mut()[*first] = (c1, s.clone());
            chain.terms_mut().remove(*second);
            eff.removed = vec![(c1, t1), (c2, t2)];
            eff.added.push((c1, s));
        }
        Move::DirectSum { term: i, copies } => {
            let (c, t) = term(chain, *i)?;
            let k = *copies as i64;
            if k < 1 || c % k != 0 {
                return Err(format!("coefficient {c} is not divisible by {copies}"));
            }
            let mut s = t.clone();
            for _ in 1..*copies {
                s = s.direct_sum(&t).map_err(|e| e.to_string())?;
            }
            chain.terms_mut()[*i] = (c / k, s.clone());
            eff.removed.push((c, t));
            eff.added.push((c / k, s));
        }
        Move::InsertPair { coef, tuple } => {
            chain.push(*coef, tuple.clone()).map_err(|e| e.to_string())?;
            chain.push(-coef, tuple.clone()).map_err(|e| e.to_string())?;
            eff.added = vec![(*coef, tuple.clone()), (-coef, tuple.clone())];
        }
        Move::AddBoundary { coef, side, witness } => {
            let w = witness.ctx();
            if w.field != ctx.field || w.l != ctx.l || w.d != ctx.d + 1 {
                return Err(format!("witness context {w} does not sit over {ctx}"));
            }
            if ctx.d == 0 {
                if ctx.l < 2 {
                    return Err("boundaries of Z need l >= 2".into());
                }
                if *side == Side::Any {
                    return Err("a d=1 witness must declare a side Z1, Z2 or Z3".into());
                }
            }
            for (j, (_, t)) in witness.terms().iter().enumerate() {
                if !side_holds(t, *side) {
                    return Err(format!("witness term {j} violates {}", describe(*side)));
                }
            }
            let b = witness.scale(*coef).boundary_any().map_err(|e| e.to_string())?;
            for (c, t) in b.terms() {
                chain.push(*c, t.clone()).map_err(|e| e.to_string())?;
            }
            eff.added = b.terms().to_vec();
            eff.boundary = true;
        }
        Move::Collect => {
            eff.removed = chain.terms().to_vec();
            *chain = chain.collect();
            eff.added = chain.terms().to_vec();
        }
    }
    Ok(eff)
}

fn describe(side: Side) -> &'static str {
    match side {
        Side::Z1 => "Z1 (no coordinate is constant)",
        Side::Z2 => "Z2 (no two coordinates are equal)",
        Side::Z3 => "Z3 (no coordinate equals 1 minus another)",
        Side::Any => "no condition",
    }
}

/// Memoized `K_0` classes of `d = 0` tuples.
#[derive(Default)]
pub struct K0Cache {
    map: HashMap<SymbolTuple, K0Class>,
}

impl K0Cache {
    pub fn tuple(&mut self, t: &SymbolTuple) -> crate::Result<K0Class> {
        if let Some(c) = self.map.get(t) {
            return Ok(c.clone());
        }
        let mut k = K0Class::empty(t.field(), t.l());
        for (sf, m) in composition_factors(t, false)? {
            k.add_factor(sf, m as i64);
        }
        self.map.insert(t.clone(), k.clone());
        Ok(k)
    }

    /// Class of `Σ c T` for `d = 0` terms, or of `Σ c ∂T` for `d = 1`.
    pub fn terms(&mut self, ctx: &Context, terms: &[(i64, SymbolTuple)]) -> crate::Result<K0Class> {
        let mut out = K0Class::empty(&ctx.field, ctx.l);
        for (c, t) in terms {
            match ctx.d {
                0 => out = out.add(&self.tuple(t)?.scale(*c)),
                _ => {
                    out = out.add(&self.tuple(&t.at(1))?.scale(*c));
                    out = out.add(&self.tuple(&t.at(0))?.scale(-c));
                }
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// Index of the failing move; `None` for a final mismatch.
    pub move_index: Option<usize>,
    pub condition: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.move_index {
            Some(i) => write!(f, "move {i}: {}", self.condition),
            None => write!(f, "{}", self.condition),
        }
    }
}

#[derive(Clone, Debug)]
pub struct LogEntry {
    pub step: usize,
    pub description: String,
    pub chain: Chain,
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub name: String,
    pub accepted: bool,
    pub failure: Option<Failure>,
    pub log: Vec<LogEntry>,
    /// Number of moves after which the `K_0` invariant was checked.
    pub soundness_checks: usize,
    /// For accepted scripts: whether `start - goal` lies in the kernel of
    /// the decidable `K_0` quotient (see [`oracle_check`]).
    pub oracle: Option<bool>,
}

impl Verdict {
    pub fn summary(&self) -> String {
        match &self.failure {
            None => format!("{}: accepted ({} moves)", self.name, self.log.len().saturating_sub(1)),
            Some(f) => format!("{}: rejected at {f}", self.name),
        }
    }
}

/// Run a certificate. Every move is validated; after each one the
/// `K_0` class of (chain minus added boundaries) at `d = 0`, or of the
/// boundary of the chain at `d = 1`, is compared against the start.
pub fn run_certificate(s: &CertificateScript) -> Verdict {
    let mut cache = K0Cache::default();
    let mut chain = s.start.clone();
    let mut log = vec![LogEntry { step: 0, description: "start".into(), chain: chain.clone() }];
    let mut checks = 0;
    let reject = |log: Vec<LogEntry>, checks, move_index, condition: String| Verdict {
        name: s.name.clone(),
        accepted: false,
        failure: Some(Failure { move_index, condition }),
        log,
        soundness_checks: checks,
        oracle: None,
    };
    if s.start.ctx() != &s.context || s.goal.ctx() != &s.context {
        return reject(log, 0, None, "start or goal does not match the context".into());
    }
    if s.context.d > 1 {
        return reject(log, 0, None, format!("unsupported context degree d={}", s.context.d));
    }
    for (i, mv) in s.moves.iter().enumerate() {
        let eff = match apply_move(&mut chain, mv) {
            Ok(e) => e,
            Err(c) => return reject(log, checks, Some(i), c),
        };
        // the class changes only by the appended boundary, which is exempt
        // at d = 0 and must itself vanish at d = 1
        let delta = if eff.boundary && s.context.d == 0 {
            Ok(K0Class::empty(&s.context.field, s.context.l))
        } else {
            cache
                .terms(&s.context, &eff.added)
                .and_then(|a| Ok(a.sub(&cache.terms(&s.context, &eff.removed)?)))
        };
        match delta {
            Ok(d) if d.is_empty() => checks += 1,
            Ok(d) => return reject(log, checks, Some(i), format!("soundness invariant violated: class changed by {d}")),
            Err(e) => return reject(log, checks, Some(i), format!("could not compute K0 class: {e}")),
        }
        log.push(LogEntry { step: i + 1, description: mv.kind().into(), chain: chain.clone() });
    }
    if !chain.same_as(&s.goal) {
        let msg = format!("final chain {} does not match goal {}", chain.collect(), s.goal.collect());
        return reject(log, checks, None, msg);
    }
    let oracle = oracle_check(s).ok();
    Verdict { name: s.name.clone(), accepted: true, failure: None, log, soundness_checks: checks, oracle }
}

/// Independent consistency check: at `d = 0` the class of
/// `start - goal + Σ c ∂W` over all boundary moves is empty; at `d = 1` the
/// class of `∂(start - goal)` is empty.
pub fn oracle_check(s: &CertificateScript) -> crate::Result<bool> {
    let mut cache = K0Cache::default();
    let mut diff = s.start.sub(&s.goal)?;
    if s.context.d == 0 {
        for mv in &s.moves {
            if let Move::AddBoundary { coef, witness, .. } = mv {
                diff = diff.add(&witness.scale(*coef).boundary()?)?;
            }
        }
    }
    Ok(cache.terms(&s.context, diff.collect().terms())?.is_empty())
}
