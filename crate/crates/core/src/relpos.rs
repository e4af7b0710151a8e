//! Relative PoS-tag encoding.
//!
//! The head of a token is written as `o@TAG`: the head is the `|o|`-th
//! token tagged `TAG` counting away from the dependent, to the right for a
//! positive offset and to the left for a negative one. Root attachment is
//! `-1@ROOT`, as if a virtual `ROOT` tag sat at position 0.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{CodecError, LabelError};
use crate::tree::{Arc, DepTree};

pub const ROOT_TAG: &str = "ROOT";

#[derive(Clone, Debug, Deserialize, Eq, Hash, PartialEq, Serialize)]
pub struct RelPosLabel {
    offset: i32,
    pos: String,
}

impl RelPosLabel {
    pub fn new(offset: i32, pos: impl Into<String>) -> Result<Self, LabelError> {
        let pos = pos.into();
        if offset == 0 {
            return Err(LabelError::new(
                &format!("0@{}", pos),
                "offset must be nonzero",
            ));
        }
        if pos.is_empty() {
            return Err(LabelError::new(&format!("{:+}@", offset), "empty PoS tag"));
        }
        Ok(RelPosLabel { offset, pos })
    }

    pub fn root() -> Self {
        RelPosLabel {
            offset: -1,
            pos: ROOT_TAG.to_owned(),
        }
    }

    pub fn offset(&self) -> i32 {
        self.offset
    }

    pub fn pos(&self) -> &str {
        &self.pos
    }
}

impl fmt::Display for RelPosLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}@{}", self.offset, self.pos)
    }
}

impl FromStr for RelPosLabel {
    type Err = LabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (offset, pos) = s
            .split_once('@')
            .ok_or_else(|| LabelError::new(s, "expected OFFSET@TAG"))?;
        let offset: i32 = offset
            .parse()
            .map_err(|_| LabelError::new(s, "offset is not an integer"))?;
        RelPosLabel::new(offset, pos).map_err(|e| LabelError::new(s, e.reason))
    }
}

fn tag(tags: &[Option<String>], token: usize) -> Option<&str> {
    tags.get(token - 1).and_then(|t| t.as_deref())
}

/// Encode every head as a tag offset. All tokens need a PoS tag.
pub fn encode_relpos(
    tree: &DepTree,
    tags: &[Option<String>],
) -> Result<Vec<RelPosLabel>, CodecError> {
    if tags.len() != tree.len() {
        return Err(CodecError::LengthMismatch {
            labels: tags.len(),
            tokens: tree.len(),
        });
    }
    if let Some(missing) = (1..=tree.len()).find(|&t| tag(tags, t).is_none()) {
        return Err(CodecError::MissingTag(missing));
    }

    Ok(tree
        .arcs()
        .map(|Arc { head, dep }| {
            if head == 0 {
                return RelPosLabel::root();
            }
            let head_tag = tag(tags, head).unwrap();
            let matches = |range: std::ops::RangeInclusive<usize>| {
                range.filter(|&p| tag(tags, p) == Some(head_tag)).count() as i32
            };
            let offset = if head > dep {
                matches(dep + 1..=head)
            } else {
                -matches(head..=dep - 1)
            };
            RelPosLabel {
                offset,
                pos: head_tag.to_owned(),
            }
        })
        .collect())
}

/// Arcs recovered from tag offsets.
#[derive(Clone, Debug, Default, Eq, PartialEq)]
pub struct RelPosDecode {
    pub raw_arcs: Vec<Arc>,
    /// Tokens whose label points past the last matching tag.
    pub unresolved: Vec<usize>,
}

/// Resolve each label against the given tags. Labels that cannot be
/// resolved leave their token headless.
pub fn decode_relpos(labels: &[RelPosLabel], tags: &[Option<String>]) -> RelPosDecode {
    let mut out = RelPosDecode::default();
    let n = labels.len();
    for (i, label) in labels.iter().enumerate() {
        let dep = i + 1;
        let head = if label.pos == ROOT_TAG {
            (label.offset == -1).then_some(0)
        } else {
            let wanted = label.offset.unsigned_abs() as usize;
            let is_match = |&p: &usize| tag(tags, p) == Some(label.pos.as_str());
            if label.offset > 0 {
                (dep + 1..=n).filter(is_match).nth(wanted - 1)
            } else {
                (1..dep).rev().filter(is_match).nth(wanted - 1)
            }
        };
        match head {
            Some(h) => out.raw_arcs.push(Arc::new(h, dep)),
            None => out.unresolved.push(dep),
        }
    }
    out
}
