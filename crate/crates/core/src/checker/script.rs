//! Certificate scripts and their text format.
//!
//! ```text
//! # comment
//! {name:"example", context:{field:"Q", d:0, l:2}, start:[...], goal:[...]}
//! conjugate term=0 g=[[1,0],[3,1]]
//! blocksplit term=0 sizes=[1,1]
//! addboundary coef=1 side=Z1 witness=[{coef:1, tuple:{mats:[...]}}]
//! ```
//!
//! Tuples inside a certificate may omit `field`, `d` and `l`; they default to
//! the context (with `d + 1` for boundary witnesses).

use std::fmt;

use crate::algebra::{MPoly, Mat};
use crate::error::{Error, Result};
use crate::symbols::{var_names, Chain, Context, SymbolTuple};
use crate::text::{balanced_prefix, chain_from_value, context_from_value, matrix_from_value, parse_value, tuple_from_value, Value};

/// Membership condition declared for a boundary witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Some coordinate is constant.
    Z1,
    /// Two coordinates are equal.
    Z2,
    /// `θ_i = 1 - θ_j` for some `i != j`.
    Z3,
    /// No condition; only for `d = 2` witnesses.
    Any,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Side::Z1 => "Z1",
            Side::Z2 => "Z2",
            Side::Z3 => "Z3",
            Side::Any => "any",
        };
        write!(f, "{s}")
    }
}

impl std::str::FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Side> {
        match s {
            "Z1" => Ok(Side::Z1),
            "Z2" => Ok(Side::Z2),
            "Z3" => Ok(Side::Z3),
            "any" => Ok(Side::Any),
            _ => Err(Error::Parse(format!("unknown side `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// `θ ↦ g θ g⁻¹` on every coordinate of one term.
    Conjugate { term: usize, g: Mat<MPoly> },
    /// Replace a block upper-triangular term by its diagonal blocks.
    BlockSplit { term: usize, sizes: Vec<usize> },
    /// Remove a term with an identity coordinate.
    WedgeDrop { term: usize },
    /// Replace two terms with equal coefficients by their direct sum.
    Merge { first: usize, second: usize },
    /// `c T ↦ (c / k) T^{⊕k}`.
    DirectSum { term: usize, copies: usize },
    /// Append `c T` and `-c T`.
    InsertPair { coef: i64, tuple: SymbolTuple },
    /// Append the terms of `c ∂(witness)`.
    AddBoundary { coef: i64, side: Side, witness: Chain },
    /// Merge equal tuples and drop zero coefficients.
    Collect,
}

fn compact_tuple(t: &SymbolTuple) -> String {
    let vars = var_names(t.d());
    let mats: Vec<String> = t.mats().iter().map(|m| m.format(t.field(), vars)).collect();
    format!("{{mats:[{}]}}", mats.join(","))
}

/// A chain written without per-tuple headers.
pub fn compact_chain(c: &Chain) -> String {
    let terms: Vec<String> =
        c.terms().iter().map(|(k, t)| format!("{{coef:{k}, tuple:{}}}", compact_tuple(t))).collect();
    format!("[{}]", terms.join(", "))
}

impl Move {
    pub fn kind(&self) -> &'static str {
        match self {
            Move::Conjugate { .. } => "conjugate",
            Move::BlockSplit { .. } => "blocksplit",
            Move::WedgeDrop { .. } => "wedgedrop",
            Move::Merge { .. } => "merge",
            Move::DirectSum { .. } => "dsum",
            Move::InsertPair { .. } => "insertpair",
            Move::AddBoundary { .. } => "addboundary",
            Move::Collect => "collect",
        }
    }

    /// One-line text form.
    pub fn format(&self, ctx: &Context) -> String {
        let vars = var_names(ctx.d);
        match self {
            Move::Conjugate { term, g } => format!("conjugate term={term} g={}", g.format(&ctx.field, vars)),
            Move::BlockSplit { term, sizes } => {
                let s: Vec<String> = sizes.iter().map(|x| x.to_string()).collect();
                format!("blocksplit term={term} sizes=[{}]", s.join(","))
            }
            Move::WedgeDrop { term } => format!("wedgedrop term={term}"),
            Move::Merge { first, second } => format!("merge terms=[{first},{second}]"),
            Move::DirectSum { term, copies } => format!("dsum term={term} copies={copies}"),
            Move::InsertPair { coef, tuple } => format!("insertpair coef={coef} tuple={}", compact_tuple(tuple)),
            Move::AddBoundary { coef, side, witness } => {
                format!("addboundary coef={coef} side={side} witness={}", compact_chain(witness))
            }
            Move::Collect => "collect".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateScript {
    pub name: String,
    pub context: Context,
    pub start: Chain,
    pub goal: Chain,
    pub moves: Vec<Move>,
    /// Free-text comment lines (without `#`), written before the header.
    pub notes: Vec<String>,
}

impl CertificateScript {
    pub fn format(&self) -> String {
        let mut out = String::new();
        for n in &self.notes {
            out.push_str(&format!("# {n}\n"));
        }
        out.push_str(&format!(
            "{{name:\"{}\", context:{}, start:{}, goal:{}}}\n",
            self.name,
            self.context,
            compact_chain(&self.start),
            compact_chain(&self.goal)
        ));
        for m in &self.moves {
            out.push_str(&m.format(&self.context));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<CertificateScript> {
        let mut notes = Vec::new();
        let mut lines = text.lines().enumerate().peekable();
        let mut header = String::new();
        let mut header_done = false;
        while let Some((_, line)) = lines.peek() {
            let t = line.trim();
            if header.is_empty() && (t.is_empty() || t.starts_with('#')) {
                if let Some(n) = t.strip_prefix('#') {
                    notes.push(n.trim().to_string());
                }
                lines.next();
                continue;
            }
            header.push_str(t);
            header.push('\n');
            lines.next();
            if balanced_prefix(header.trim()).is_ok() {
                header_done = true;
                break;
            }
        }
        if !header_done {
            return Err(Error::Parse("missing or unterminated certificate header".into()));
        }
        let h = parse_value(header.trim())?;
        let context = context_from_value(h.field("context")?)?;
        let name = match h.get("name") {
            Some(n) => n.as_text()?.to_string(),
            None => String::new(),
        };
        let start = chain_in(h.field("start")?, &context)?;
        let goal = chain_in(h.field("goal")?, &context)?;
        let mut moves = Vec::new();
        for (no, line) in lines {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let m = parse_move(t, &context)
                .map_err(|e| Error::Parse(format!("line {}: {e}", no + 1)))?;
            moves.push(m);
        }
        Ok(CertificateScript { name, context, start, goal, moves, notes })
    }
}

fn chain_in(v: &Value, ctx: &Context) -> Result<Chain> {
    match v {
        Value::Array(a) if a.is_empty() => Ok(Chain::zero(ctx)),
        _ => chain_from_value(v, Some(ctx)),
    }
}

/// Split `kind k=v k=v` where values may be bracketed and contain spaces.
fn split_args(line: &str) -> Result<(String, Vec<(String, String)>)> {
    let line = line.trim();
    let (kind, mut rest) = match line.find(char::is_whitespace) {
        Some(i) => (&line[..i], line[i..].trim_start()),
        None => (line, ""),
    };
    let mut args = Vec::new();
    while !rest.is_empty() {
        let eq = rest.find('=').ok_or_else(|| Error::Parse(format!("expected key=value in `{rest}`")))?;
        let key = rest[..eq].trim().to_string();
        let after = &rest[eq + 1..];
        let len = if after.starts_with(['[', '{', '"']) {
            balanced_prefix(after)?
        } else {
            after.find(char::is_whitespace).unwrap_or(after.len())
        };
        args.push((key, after[..len].to_string()));
        rest = after[len..].trim_start();
    }
    Ok((kind.to_string(), args))
}

fn parse_move(line: &str, ctx: &Context) -> Result<Move> {
    let (kind, args) = split_args(line)?;
    let arg = |k: &str| -> Result<&str> {
        args.iter()
            .find(|(key, _)| key == k)
            .map(|(_, v)| v.as_str())
            .ok_or_else(|| Error::Parse(format!("`{kind}` needs `{k}=`")))
    };
    let int = |k: &str| -> Result<i64> {
        let s = arg(k)?;
        s.parse().map_err(|_| Error::Parse(format!("`{k}` must be an integer, got `{s}`")))
    };
    let index = |k: &str| -> Result<usize> {
        let s = arg(k)?;
        s.parse().map_err(|_| Error::Parse(format!("`{k}` must be a term index, got `{s}`")))
    };
    let usizes = |k: &str| -> Result<Vec<usize>> {
        parse_value(arg(k)?)?.as_array()?.iter().map(|v| v.as_usize()).collect()
    };
    Ok(match kind.as_str() {
        "conjugate" => Move::Conjugate {
            term: index("term")?,
            g: matrix_from_value(&ctx.field, ctx.d, &parse_value(arg("g")?)?)?,
        },
        "blocksplit" => Move::BlockSplit { term: index("term")?, sizes: usizes("sizes")? },
        "wedgedrop" => Move::WedgeDrop { term: index("term")? },
        "merge" => {
            let t = usizes("terms")?;
            if t.len() != 2 {
                return Err(Error::Parse("merge takes exactly two terms".into()));
            }
            Move::Merge { first: t[0], second: t[1] }
        }
        "dsum" => Move::DirectSum { term: index("term")?, copies: index("copies")? },
        "insertpair" => Move::InsertPair {
            coef: int("coef")?,
            tuple: tuple_from_value(&parse_value(arg("tuple")?)?, Some(ctx))?,
        },
        "addboundary" => {
            let wctx = Context { field: ctx.field.clone(), d: ctx.d + 1, l: ctx.l };
            let coef = if args.iter().any(|(k, _)| k == "coef") { int("coef")? } else { 1 };
            let side = if args.iter().any(|(k, _)| k == "side") { arg("side")?.parse()? } else { Side::Any };
            Move::AddBoundary { coef, side, witness: chain_in(&parse_value(arg("witness")?)?, &wctx)? }
        }
        "collect" => Move::Collect,
        _ => return Err(Error::Parse(format!("unknown move `{kind}`"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_field;

    #[test]
    fn move_round_trip() {
        let ctx = Context { field: parse_field("Q").unwrap(), d: 1, l: 1 };
        let text = [
            "conjugate term=0 g=[[1,t],[0,1]]",
            "blocksplit term=2 sizes=[1,2]",
            "wedgedrop term=1",
            "merge terms=[0,3]",
            "dsum term=0 copies=2",
            "insertpair coef=-2 tuple={mats:[[[0,1],[-1,t]]]}",
            "addboundary coef=-1 side=any witness=[{coef:1, tuple:{mats:[[[0,1],[-1,x*y]]]}}]",
            "collect",
        ];
        for line in text {
            let m = parse_move(line, &ctx).unwrap();
            assert_eq!(m.format(&ctx), line);
        }
        assert!(parse_move("conjugate term=x g=[[1]]", &ctx).is_err());
        assert!(parse_move("spin term=0", &ctx).is_err());
    }

    #[test]
    fn script_round_trip() {
        let text = "# note\n{name:\"s\", context:{field:\"Q\", d:0, l:2},\n start:[{coef:1, tuple:{mats:[[[2]],[[5]]]}}], goal:[]}\nwedgedrop term=0\n";
        let s = CertificateScript::parse(text).unwrap();
        assert_eq!(s.notes, vec!["note".to_string()]);
        assert_eq!(s.start.len(), 1);
        assert!(s.goal.is_empty());
        assert_eq!(CertificateScript::parse(&s.format()).unwrap(), s);
    }
}
