//! Sentence-level encoders mapping trees to label-file task columns and back.
//!
//! | encoding    | task columns                          |
//! |-------------|---------------------------------------|
//! | `1p`        | brackets, deprel                      |
//! | `2p-greedy` | plane-1 brackets, plane-2 brackets, deprel |
//! | `2p-prop`   | plane-1 brackets, plane-2 brackets, deprel |
//! | `relpos`    | `OFFSET@TAG`, deprel                  |

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bracket::{decode, encode, PlaneLabel, TokenLabel};
use crate::error::CodecError;
use crate::plane::{assign, Plane, PlanePartition, Strategy};
use crate::postprocess::{postprocess, postprocess_with_repairs, Repairs};
use crate::relpos::{decode_relpos, encode_relpos, RelPosLabel};
use crate::tree::{Arc, DepTree};

#[derive(Clone, Copy, Debug, Eq, Hash, PartialEq)]
pub enum Encoding {
    /// Brackets on a single plane.
    OnePlanar,
    /// Brackets on two planes, split by the given strategy.
    TwoPlanar(Strategy),
    /// Relative PoS-tag offsets.
    RelPos,
}

impl Encoding {
    pub const ALL: [Encoding; 4] = [
        Encoding::OnePlanar,
        Encoding::TwoPlanar(Strategy::Greedy),
        Encoding::TwoPlanar(Strategy::Propagation),
        Encoding::RelPos,
    ];

    /// Number of task columns, the relation column included.
    pub fn task_count(self) -> usize {
        match self {
            Encoding::TwoPlanar(_) => 3,
            Encoding::OnePlanar | Encoding::RelPos => 2,
        }
    }

    pub fn needs_tags(self) -> bool {
        self == Encoding::RelPos
    }
}

impl fmt::Display for Encoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Encoding::OnePlanar => f.write_str("1p"),
            Encoding::TwoPlanar(s) => write!(f, "2p-{}", s),
            Encoding::RelPos => f.write_str("relpos"),
        }
    }
}

impl FromStr for Encoding {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "1p" => Ok(Encoding::OnePlanar),
            "relpos" => Ok(Encoding::RelPos),
            _ => s
                .strip_prefix("2p-")
                .and_then(|strategy| strategy.parse().ok())
                .map(Encoding::TwoPlanar)
                .ok_or_else(|| {
                    format!(
                        "unknown encoding {:?} (expected 1p, 2p-greedy, 2p-prop or relpos)",
                        s
                    )
                }),
        }
    }
}

/// An encoding together with its plane assignment preference.
#[derive(Clone, Copy, Debug, Eq, PartialEq)]
pub struct Codec {
    pub encoding: Encoding,
    pub switch_averse: bool,
}

/// Task labels of one sentence.
#[derive(Clone, Debug, Eq, PartialEq)]
pub struct Encoded {
    /// One entry per token, one string per task column.
    pub tasks: Vec<Vec<String>>,
    /// Arcs that could not be placed on any plane.
    pub unassigned: Vec<Arc>,
}

/// Unrepaired output of a decoder.
#[derive(Clone, Debug, Default, Eq, PartialEq, Serialize)]
pub struct Diagnostics {
    pub headless: usize,
    pub dropped_closers: usize,
    pub leftover_openers: usize,
    pub dropped_openers: usize,
    /// rel-PoS labels pointing past the last matching tag.
    pub unresolved: usize,
}

#[derive(Clone, Debug, Eq, PartialEq)]
pub struct Decoded {
    pub raw_arcs: Vec<Arc>,
    pub deprels: Vec<String>,
    pub diagnostics: Diagnostics,
}

impl Decoded {
    pub fn len(&self) -> usize {
        self.deprels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.deprels.is_empty()
    }

    pub fn postprocess(&self) -> DepTree {
        postprocess(&self.raw_arcs, &self.deprels)
    }

    pub fn postprocess_with_repairs(&self) -> (DepTree, Repairs) {
        postprocess_with_repairs(&self.raw_arcs, &self.deprels)
    }

    /// First decoded head per token; tokens without one get the implicit
    /// root head 0. Not necessarily a tree.
    pub fn raw_heads(&self) -> Vec<usize> {
        let mut heads: Vec<Option<usize>> = vec![None; self.len()];
        for arc in &self.raw_arcs {
            if (1..=self.len()).contains(&arc.dep) && arc.head <= self.len() {
                heads[arc.dep - 1].get_or_insert(arc.head);
            }
        }
        heads.into_iter().map(|h| h.unwrap_or(0)).collect()
    }
}

impl Codec {
    pub fn new(encoding: Encoding) -> Self {
        Codec {
            encoding,
            switch_averse: false,
        }
    }

    pub fn switch_averse(mut self, switch_averse: bool) -> Self {
        self.switch_averse = switch_averse;
        self
    }

    /// Plane partition used by the bracket encodings.
    pub fn partition(&self, tree: &DepTree) -> Option<PlanePartition> {
        match self.encoding {
            Encoding::OnePlanar => Some(PlanePartition::single_plane(tree)),
            Encoding::TwoPlanar(strategy) => Some(assign(tree, strategy, self.switch_averse)),
            Encoding::RelPos => None,
        }
    }

    /// Encode a tree. `tags` are only consulted by rel-PoS.
    pub fn encode(&self, tree: &DepTree, tags: &[Option<String>]) -> Result<Encoded, CodecError> {
        let deprels = tree.deprels();
        match self.partition(tree) {
            Some(partition) => {
                let sequence = encode(tree, &partition)?;
                let planes: &[Plane] = match self.encoding {
                    Encoding::OnePlanar => &[Plane::First],
                    _ => &[Plane::First, Plane::Second],
                };
                let tasks = sequence
                    .labels
                    .iter()
                    .zip(deprels)
                    .map(|(label, deprel)| {
                        planes
                            .iter()
                            .map(|&p| label.plane(p).to_string())
                            .chain(std::iter::once(deprel.clone()))
                            .collect()
                    })
                    .collect();
                Ok(Encoded {
                    tasks,
                    unassigned: partition.unassigned(),
                })
            }
            None => {
                let labels = encode_relpos(tree, tags)?;
                let tasks = labels
                    .iter()
                    .zip(deprels)
                    .map(|(label, deprel)| vec![label.to_string(), deprel.clone()])
                    .collect();
                Ok(Encoded {
                    tasks,
                    unassigned: Vec::new(),
                })
            }
        }
    }

    /// Decode per-token task labels. The last column is the relation.
    pub fn decode(
        &self,
        tasks: &[Vec<String>],
        tags: &[Option<String>],
    ) -> Result<Decoded, CodecError> {
        let expected = self.encoding.task_count();
        if let Some(row) = tasks.iter().find(|row| row.len() != expected) {
            return Err(CodecError::TaskArity {
                expected,
                found: row.len(),
            });
        }
        let label_error = |token: usize| move |source| CodecError::Label { token, source };
        let deprels: Vec<String> = tasks.iter().map(|row| row[expected - 1].clone()).collect();

        if self.encoding == Encoding::RelPos {
            let labels = tasks
                .iter()
                .enumerate()
                .map(|(i, row)| row[0].parse::<RelPosLabel>().map_err(label_error(i + 1)))
                .collect::<Result<Vec<_>, _>>()?;
            let decoded = decode_relpos(&labels, tags);
            let mut diagnostics = Diagnostics {
                unresolved: decoded.unresolved.len(),
                ..Default::default()
            };
            diagnostics.headless = headless_count(&decoded.raw_arcs, tasks.len());
            return Ok(Decoded {
                raw_arcs: decoded.raw_arcs,
                deprels,
                diagnostics,
            });
        }

        let labels = tasks
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let first: PlaneLabel = row[0].parse().map_err(label_error(i + 1))?;
                let second: PlaneLabel = if expected == 3 {
                    row[1].parse().map_err(label_error(i + 1))?
                } else {
                    PlaneLabel::default()
                };
                Ok(TokenLabel::new(first, second))
            })
            .collect::<Result<Vec<_>, CodecError>>()?;
        let state = decode(&labels);
        Ok(Decoded {
            diagnostics: Diagnostics {
                headless: state.headless(tasks.len()).len(),
                dropped_closers: state.dropped_closers,
                leftover_openers: state.leftover_openers,
                dropped_openers: state.dropped_openers,
                unresolved: 0,
            },
            raw_arcs: state.raw_arcs,
            deprels,
        })
    }
}

fn headless_count(arcs: &[Arc], n: usize) -> usize {
    let mut has_head = vec![false; n + 1];
    for arc in arcs {
        if arc.dep <= n {
            has_head[arc.dep] = true;
        }
    }
    (1..=n).filter(|&d| !has_head[d]).count()
}
