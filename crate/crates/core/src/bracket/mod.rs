//! Bracketing labels.
//!
//! A right arc `h -> d` (`h < d`) is written as `/` in the label of token
//! `h + 1` balanced by `>` in the label of `d`. A left arc `h -> d`
//! (`h > d`) is written as `<` in the label of `d + 1` balanced by `\` in
//! the label of `h`. Each plane balances its own brackets; in the combined
//! display form second-plane elements carry a `*` suffix.
//!
//! Per plane a label follows `(<)?(\)*(/)*(>)?`. A token can head left
//! dependents while its predecessor heads right dependents, so `\` and `/`
//! runs may appear in the same label.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::LabelError;
use crate::plane::Plane;

mod decode;
pub use self::decode::*;

mod encode;
pub use self::encode::*;

/// Serialized form of a label without any bracket.
pub const EMPTY_LABEL: &str = "NONE";

/// Alternative spelling of the empty label accepted by the parsers.
pub const EMPTY_LABEL_SYMBOL: &str = "∅";

#[derive(Clone, Copy, Debug, Deserialize, Eq, Hash, Ord, PartialEq, PartialOrd, Serialize)]
pub enum BracketKind {
    /// `<`: the previous token is the dependent of a left arc.
    OpenLeft,
    /// `\`: this token heads a left arc.
    CloseLeft,
    /// `/`: the previous token heads a right arc.
    OpenRight,
    /// `>`: this token is the dependent of a right arc.
    CloseRight,
}

impl BracketKind {
    pub const ALL: [BracketKind; 4] = [
        BracketKind::OpenLeft,
        BracketKind::CloseLeft,
        BracketKind::OpenRight,
        BracketKind::CloseRight,
    ];

    pub fn symbol(self) -> char {
        match self {
            BracketKind::OpenLeft => '<',
            BracketKind::CloseLeft => '\\',
            BracketKind::OpenRight => '/',
            BracketKind::CloseRight => '>',
        }
    }

    pub fn from_symbol(c: char) -> Option<BracketKind> {
        match c {
            '<' => Some(BracketKind::OpenLeft),
            '\\' => Some(BracketKind::CloseLeft),
            '/' => Some(BracketKind::OpenRight),
            '>' => Some(BracketKind::CloseRight),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, Deserialize, Eq, Hash, PartialEq, Serialize)]
pub struct BracketElement {
    pub kind: BracketKind,
    pub plane: Plane,
}

impl fmt::Display for BracketElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind.symbol())?;
        if self.plane == Plane::Second {
            f.write_str("*")?;
        }
        Ok(())
    }
}

/// The brackets of one token on one plane.
#[derive(Clone, Copy, Debug, Default, Deserialize, Eq, Hash, PartialEq, Serialize)]
pub struct PlaneLabel {
    pub open_left: bool,
    pub close_left: u32,
    pub open_right: u32,
    pub close_right: bool,
}

impl PlaneLabel {
    pub fn is_empty(&self) -> bool {
        *self == PlaneLabel::default()
    }

    pub fn count(&self, kind: BracketKind) -> u32 {
        match kind {
            BracketKind::OpenLeft => self.open_left as u32,
            BracketKind::CloseLeft => self.close_left,
            BracketKind::OpenRight => self.open_right,
            BracketKind::CloseRight => self.close_right as u32,
        }
    }

    /// Total number of bracket elements.
    pub fn size(&self) -> u32 {
        BracketKind::ALL.iter().map(|&k| self.count(k)).sum()
    }

    fn add(&mut self, kind: BracketKind, label: &str) -> Result<(), LabelError> {
        match kind {
            BracketKind::OpenLeft if self.open_left => {
                return Err(LabelError::new(label, "more than one '<' on a plane"))
            }
            BracketKind::OpenLeft => self.open_left = true,
            BracketKind::CloseLeft => self.close_left += 1,
            BracketKind::OpenRight => self.open_right += 1,
            BracketKind::CloseRight if self.close_right => {
                return Err(LabelError::new(label, "more than one '>' on a plane"))
            }
            BracketKind::CloseRight => self.close_right = true,
        }
        Ok(())
    }

    fn write_symbols(&self, out: &mut String) {
        for kind in BracketKind::ALL {
            for _ in 0..self.count(kind) {
                out.push(kind.symbol());
            }
        }
    }
}

/// Plain rendering used in label files: no stars, `NONE` when empty.
impl fmt::Display for PlaneLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str(EMPTY_LABEL);
        }
        let mut s = String::new();
        self.write_symbols(&mut s);
        f.write_str(&s)
    }
}

impl FromStr for PlaneLabel {
    type Err = LabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == EMPTY_LABEL || s == EMPTY_LABEL_SYMBOL {
            return Ok(PlaneLabel::default());
        }
        if s.is_empty() {
            return Err(LabelError::new(s, "empty label string"));
        }
        let mut label = PlaneLabel::default();
        let mut last = BracketKind::OpenLeft;
        for c in s.chars() {
            let kind = BracketKind::from_symbol(c)
                .ok_or_else(|| LabelError::new(s, format!("unexpected character {:?}", c)))?;
            if kind < last {
                return Err(LabelError::new(s, "brackets out of order"));
            }
            last = kind;
            label.add(kind, s)?;
        }
        Ok(label)
    }
}

/// The label of one token over both planes.
#[derive(Clone, Copy, Debug, Default, Deserialize, Eq, Hash, PartialEq, Serialize)]
pub struct TokenLabel {
    planes: [PlaneLabel; 2],
}

impl TokenLabel {
    pub fn new(first: PlaneLabel, second: PlaneLabel) -> Self {
        TokenLabel {
            planes: [first, second],
        }
    }

    pub fn plane(&self, plane: Plane) -> &PlaneLabel {
        &self.planes[plane.index()]
    }

    pub fn plane_mut(&mut self, plane: Plane) -> &mut PlaneLabel {
        &mut self.planes[plane.index()]
    }

    pub fn is_empty(&self) -> bool {
        self.planes.iter().all(PlaneLabel::is_empty)
    }

    /// Elements in decoding order: plane 1 before plane 2, and within a plane
    /// `<`, `\`*, `/`*, `>`.
    pub fn elements(&self) -> impl Iterator<Item = BracketElement> + '_ {
        [Plane::First, Plane::Second]
            .into_iter()
            .flat_map(move |plane| {
                BracketKind::ALL.into_iter().flat_map(move |kind| {
                    (0..self.plane(plane).count(kind)).map(move |_| BracketElement { kind, plane })
                })
            })
    }
}

/// Combined rendering: kinds in the order `<`, `\`, `/`, `>`, second-plane
/// elements first within a kind, `NONE` when empty.
impl fmt::Display for TokenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str(EMPTY_LABEL);
        }
        for kind in BracketKind::ALL {
            for plane in [Plane::Second, Plane::First] {
                for _ in 0..self.plane(plane).count(kind) {
                    write!(f, "{}", BracketElement { kind, plane })?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for TokenLabel {
    type Err = LabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == EMPTY_LABEL || s == EMPTY_LABEL_SYMBOL {
            return Ok(TokenLabel::default());
        }
        if s.is_empty() {
            return Err(LabelError::new(s, "empty label string"));
        }
        let mut label = TokenLabel::default();
        let mut last = BracketKind::OpenLeft;
        let mut chars = s.chars().peekable();
        while let Some(c) = chars.next() {
            let kind = BracketKind::from_symbol(c)
                .ok_or_else(|| LabelError::new(s, format!("unexpected character {:?}", c)))?;
            let plane = if chars.peek() == Some(&'*') {
                chars.next();
                Plane::Second
            } else {
                Plane::First
            };
            if kind < last {
                return Err(LabelError::new(s, "brackets out of order"));
            }
            last = kind;
            label.plane_mut(plane).add(kind, s)?;
        }
        Ok(label)
    }
}

/// Bracket labels and relation labels of a sentence.
#[derive(Clone, Debug, Default, Eq, PartialEq)]
pub struct LabelSequence {
    pub labels: Vec<TokenLabel>,
    pub deprels: Vec<String>,
}

impl LabelSequence {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Plain per-token strings of one plane.
    pub fn plane_strings(&self, plane: Plane) -> Vec<String> {
        self.labels
            .iter()
            .map(|l| l.plane(plane).to_string())
            .collect()
    }

    /// Combined display strings, one per token.
    pub fn display_strings(&self) -> Vec<String> {
        self.labels.iter().map(ToString::to_string).collect()
    }
}
