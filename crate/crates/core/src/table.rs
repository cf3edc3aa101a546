//! Exhaustive finite spaces `^λκ` and coloring tables `F: ^λκ → μ`.
//!
//! Points are indexed in mixed radix with coordinate 0 least significant:
//! `enc(x) = Σ x(j)·κ^j`. A table stores `F(dec(j))` at position `j`.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::point::{Coord, FinitePoint, PointError};

/// A color index.
pub type Color = usize;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("space parameters must be at least 1 (lambda={lambda}, kappa={kappa}, mu={mu})")]
    ZeroParameter {
        lambda: usize,
        kappa: usize,
        mu: usize,
    },
    #[error("space {kappa}^{lambda} has too many points to index")]
    TooLarge { lambda: usize, kappa: usize },
    #[error("index {index} is outside a space of {size} points")]
    IndexOutOfRange { index: usize, size: usize },
    #[error(transparent)]
    Point(#[from] PointError),
    #[error("colors array has length {found}, expected {expected}")]
    WrongLength { found: usize, expected: usize },
    #[error("color {color} at index {index} is not below mu={mu}")]
    ColorOutOfRange {
        index: usize,
        color: Color,
        mu: usize,
    },
    #[error("points belong to different spaces")]
    SpaceMismatch,
    #[error("malformed table document: {0}")]
    Malformed(#[from] serde_json::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// The triple `(λ, κ, μ)` of a coloring `^λκ → μ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpaceSig {
    lambda: usize,
    kappa: usize,
    mu: usize,
    size: usize,
}

impl SpaceSig {
    pub fn new(lambda: usize, kappa: usize, mu: usize) -> Result<Self, TableError> {
        if lambda == 0 || kappa == 0 || mu == 0 {
            return Err(TableError::ZeroParameter { lambda, kappa, mu });
        }
        let size = u32::try_from(lambda)
            .ok()
            .and_then(|l| kappa.checked_pow(l))
            .ok_or(TableError::TooLarge { lambda, kappa })?;
        Ok(SpaceSig {
            lambda,
            kappa,
            mu,
            size,
        })
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    /// Number of points, `κ^λ`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn with_mu(&self, mu: usize) -> Result<Self, TableError> {
        SpaceSig::new(self.lambda, self.kappa, mu)
    }

    pub fn encode(&self, x: &FinitePoint) -> Result<usize, TableError> {
        x.check_space(self.lambda, self.kappa as Coord)?;
        Ok(x.coords()
            .iter()
            .rev()
            .fold(0usize, |acc, &v| acc * self.kappa + v as usize))
    }

    pub fn decode(&self, index: usize) -> Result<FinitePoint, TableError> {
        if index >= self.size {
            return Err(TableError::IndexOutOfRange {
                index,
                size: self.size,
            });
        }
        Ok(FinitePoint::new(self.decode_coords(index)))
    }

    pub(crate) fn decode_coords(&self, mut index: usize) -> Vec<Coord> {
        (0..self.lambda)
            .map(|_| {
                let v = index % self.kappa;
                index /= self.kappa;
                v as Coord
            })
            .collect()
    }

    /// All points in `enc` order.
    pub fn points(&self) -> impl Iterator<Item = FinitePoint> + '_ {
        (0..self.size).map(move |i| FinitePoint::new(self.decode_coords(i)))
    }
}

/// A coloring `F: ^λκ → μ` stored densely in `enc` order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoringTable {
    sig: SpaceSig,
    colors: Vec<Color>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDoc {
    lambda: usize,
    kappa: usize,
    mu: usize,
    colors: Vec<Color>,
}

impl ColoringTable {
    pub fn new(sig: SpaceSig, colors: Vec<Color>) -> Result<Self, TableError> {
        if colors.len() != sig.size() {
            return Err(TableError::WrongLength {
                found: colors.len(),
                expected: sig.size(),
            });
        }
        if let Some((index, &color)) = colors.iter().enumerate().find(|(_, &c)| c >= sig.mu()) {
            return Err(TableError::ColorOutOfRange {
                index,
                color,
                mu: sig.mu(),
            });
        }
        Ok(ColoringTable { sig, colors })
    }

    /// Builds a table by evaluating `f` on every point.
    pub fn from_fn(
        sig: SpaceSig,
        mut f: impl FnMut(&FinitePoint) -> Color,
    ) -> Result<Self, TableError> {
        let colors = sig.points().map(|x| f(&x)).collect();
        ColoringTable::new(sig, colors)
    }

    /// A constant coloring.
    pub fn constant(sig: SpaceSig, color: Color) -> Result<Self, TableError> {
        ColoringTable::new(sig, vec![color; sig.size()])
    }

    pub fn sig(&self) -> SpaceSig {
        self.sig
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color_at(&self, index: usize) -> Color {
        self.colors[index]
    }

    pub fn eval(&self, x: &FinitePoint) -> Result<Color, TableError> {
        Ok(self.colors[self.sig.encode(x)?])
    }

    /// `Ran(F)`.
    pub fn range(&self) -> BTreeSet<Color> {
        self.colors.iter().copied().collect()
    }

    /// `F⁻¹(β)` for every used color `β`.
    pub fn color_classes(&self) -> BTreeMap<Color, Vec<FinitePoint>> {
        let mut classes: BTreeMap<Color, Vec<FinitePoint>> = BTreeMap::new();
        for (index, &c) in self.colors.iter().enumerate() {
            classes
                .entry(c)
                .or_default()
                .push(FinitePoint::new(self.sig.decode_coords(index)));
        }
        classes
    }

    /// Same colors, larger (or smaller) color budget `μ`.
    pub fn with_mu(&self, mu: usize) -> Result<Self, TableError> {
        ColoringTable::new(self.sig.with_mu(mu)?, self.colors.clone())
    }

    /// `G ≤ F` pointwise.
    pub fn le(&self, other: &ColoringTable) -> bool {
        self.sig.lambda == other.sig.lambda
            && self.sig.kappa == other.sig.kappa
            && self.colors.iter().zip(&other.colors).all(|(a, b)| a <= b)
    }

    pub fn to_json(&self) -> String {
        let doc = TableDoc {
            lambda: self.sig.lambda,
            kappa: self.sig.kappa,
            mu: self.sig.mu,
            colors: self.colors.clone(),
        };
        serde_json::to_string(&doc).expect("table documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, TableError> {
        let doc: TableDoc = serde_json::from_str(text)?;
        let sig = SpaceSig::new(doc.lambda, doc.kappa, doc.mu)?;
        ColoringTable::new(sig, doc.colors)
    }

    pub fn save(&self, mut out: impl Write) -> Result<(), TableError> {
        out.write_all(self.to_json().as_bytes())?;
        out.write_all(b"\n")?;
        Ok(())
    }

    pub fn load(mut input: impl Read) -> Result<Self, TableError> {
        let mut text = String::new();
        input.read_to_string(&mut text)?;
        ColoringTable::from_json(&text)
    }

    pub fn save_to_path(&self, path: impl AsRef<Path>) -> Result<(), TableError> {
        let mut buf = Vec::new();
        self.save(&mut buf)?;
        fs::write(path, buf)?;
        Ok(())
    }

    pub fn load_from_path(path: impl AsRef<Path>) -> Result<Self, TableError> {
        ColoringTable::from_json(&fs::read_to_string(path)?)
    }
}
