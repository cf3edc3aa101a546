use std::fmt;
use std::str::FromStr;

use crate::point::{Coord, FinitePoint, TailPoint};
use crate::table::SpaceSig;

/// `L,K,M`.
pub fn parse_sig(s: &str) -> Result<SpaceSig, String> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("bad signature {s:?}: {e}"))?;
    match parts[..] {
        [l, k, m] => SpaceSig::new(l, k, m).map_err(|e| e.to_string()),
        _ => Err(format!("signature {s:?} must be L,K,M")),
    }
}

/// `a,b,c` for a finite point, `a,b;t` for an eventually constant one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointArg {
    Finite(FinitePoint),
    Tail(TailPoint),
}

fn coords(s: &str) -> Result<Vec<Coord>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<Coord>()
                .map_err(|e| format!("bad coordinate {p:?}: {e}"))
        })
        .collect()
}

impl FromStr for PointArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.split_once(';') {
            Some((prefix, tail)) => {
                let tail = tail
                    .trim()
                    .parse::<Coord>()
                    .map_err(|e| format!("bad tail {tail:?}: {e}"))?;
                Ok(PointArg::Tail(TailPoint::new(coords(prefix)?, tail)))
            }
            None => {
                let c = coords(s)?;
                if c.is_empty() {
                    return Err("empty point".into());
                }
                Ok(PointArg::Finite(FinitePoint::new(c)))
            }
        }
    }
}

impl fmt::Display for PointArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointArg::Finite(x) => x.fmt(f),
            PointArg::Tail(x) => x.fmt(f),
        }
    }
}

/// A property accepted by `check`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prop {
    Proper,
    Tight,
    CTight,
    NuTight(usize),
    Minimal,
    StrongUniform,
    WeakUniform,
    LawfulClasses,
}

impl FromStr for Prop {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s.trim() {
            "proper" => Prop::Proper,
            "tight" => Prop::Tight,
            "ctight" => Prop::CTight,
            "minimal" => Prop::Minimal,
            "strong-uniform" => Prop::StrongUniform,
            "weak-uniform" => Prop::WeakUniform,
            "lawful-classes" => Prop::LawfulClasses,
            other => match other.strip_prefix("nu-tight:") {
                Some(n) => {
                    Prop::NuTight(n.parse().map_err(|e| format!("bad nu in {other:?}: {e}"))?)
                }
                None => return Err(format!("unknown property {other:?}")),
            },
        })
    }
}

impl fmt::Display for Prop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prop::Proper => f.write_str("proper"),
            Prop::Tight => f.write_str("tight"),
            Prop::CTight => f.write_str("ctight"),
            Prop::NuTight(n) => write!(f, "nu-tight:{n}"),
            Prop::Minimal => f.write_str("minimal"),
            Prop::StrongUniform => f.write_str("strong-uniform"),
            Prop::WeakUniform => f.write_str("weak-uniform"),
            Prop::LawfulClasses => f.write_str("lawful-classes"),
        }
    }
}
