//! Dependency trees over tokens `1..=n` with a dummy root node `0`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::TreeError;

mod crossing;
pub use self::crossing::*;

mod enumerate;
pub use self::enumerate::*;

/// An unlabeled dependency arc from `head` to `dep`.
///
/// Heads range over `0..=n`, dependents over `1..=n`. Every token has one
/// head, so within a tree an arc is identified by its dependent.
#[derive(Clone, Copy, Debug, Deserialize, Eq, Hash, Ord, PartialEq, PartialOrd, Serialize)]
pub struct Arc {
    pub head: usize,
    pub dep: usize,
}

impl Arc {
    pub fn new(head: usize, dep: usize) -> Self {
        Arc { head, dep }
    }

    /// The leftmost endpoint.
    pub fn left(&self) -> usize {
        self.head.min(self.dep)
    }

    /// The rightmost endpoint.
    pub fn right(&self) -> usize {
        self.head.max(self.dep)
    }

    /// True when the head precedes the dependent.
    pub fn is_right_arc(&self) -> bool {
        self.head < self.dep
    }

    pub fn is_root_arc(&self) -> bool {
        self.head == 0
    }

    /// Distance between the endpoints.
    pub fn span(&self) -> usize {
        self.right() - self.left()
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.head, self.dep)
    }
}

/// A validated dependency tree.
///
/// Token `d` (1-based) has head `heads[d - 1]` and relation `deprels[d - 1]`.
#[derive(Clone, Debug, Eq, Hash, PartialEq)]
pub struct DepTree {
    heads: Vec<usize>,
    deprels: Vec<String>,
}

impl DepTree {
    /// Build a tree from a head vector and relation labels, validating the
    /// tree constraints.
    pub fn new(heads: Vec<usize>, deprels: Vec<String>) -> Result<Self, TreeError> {
        assert_eq!(
            heads.len(),
            deprels.len(),
            "one relation label is required per token"
        );
        let arcs: Vec<Arc> = heads
            .iter()
            .enumerate()
            .map(|(i, &h)| Arc::new(h, i + 1))
            .collect();
        let tree = validate_tree(heads.len(), &arcs)?;
        Ok(tree.with_deprels(deprels))
    }

    /// Build a tree from a head vector whose validity is already known.
    pub(crate) fn from_valid_heads(heads: Vec<usize>, deprels: Vec<String>) -> Self {
        debug_assert!(validate_heads(&heads).is_ok());
        DepTree { heads, deprels }
    }

    /// Replace the relation labels.
    pub fn with_deprels(mut self, deprels: Vec<String>) -> Self {
        assert_eq!(self.heads.len(), deprels.len());
        self.deprels = deprels;
        self
    }

    /// Sentence length.
    pub fn len(&self) -> usize {
        self.heads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heads.is_empty()
    }

    pub fn head(&self, dep: usize) -> usize {
        self.heads[dep - 1]
    }

    pub fn deprel(&self, dep: usize) -> &str {
        &self.deprels[dep - 1]
    }

    pub fn heads(&self) -> &[usize] {
        &self.heads
    }

    pub fn deprels(&self) -> &[String] {
        &self.deprels
    }

    /// Arcs ordered by dependent.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.heads
            .iter()
            .enumerate()
            .map(|(i, &h)| Arc::new(h, i + 1))
    }

    pub fn labeled_arcs(&self) -> impl Iterator<Item = (Arc, &str)> + '_ {
        self.arcs().zip(self.deprels.iter().map(String::as_str))
    }

    /// Tokens attached to the dummy root.
    pub fn root_children(&self) -> impl Iterator<Item = usize> + '_ {
        self.arcs().filter(Arc::is_root_arc).map(|a| a.dep)
    }
}

/// Check that `arcs` form a dependency tree over `n` tokens rooted at 0.
///
/// Relation labels of the returned tree are `_`.
pub fn validate_tree(n: usize, arcs: &[Arc]) -> Result<DepTree, TreeError> {
    let mut heads: Vec<Option<usize>> = vec![None; n];
    for arc in arcs {
        if arc.dep == 0 || arc.dep > n || arc.head > n {
            return Err(TreeError::ArcOutOfRange {
                head: arc.head,
                dep: arc.dep,
                n,
            });
        }
        if arc.head == arc.dep {
            return Err(TreeError::SelfLoop(arc.dep));
        }
        let slot = &mut heads[arc.dep - 1];
        if slot.is_some() {
            return Err(TreeError::MultipleHeads(arc.dep));
        }
        *slot = Some(arc.head);
    }

    check_reachability(&heads)?;

    let heads = heads.into_iter().map(Option::unwrap).collect();
    Ok(DepTree {
        heads,
        deprels: vec!["_".to_owned(); n],
    })
}

/// Validate a complete head vector (token `d` has head `heads[d - 1]`).
pub fn validate_heads(heads: &[usize]) -> Result<(), TreeError> {
    let arcs: Vec<Arc> = heads
        .iter()
        .enumerate()
        .map(|(i, &h)| Arc::new(h, i + 1))
        .collect();
    validate_tree(heads.len(), &arcs).map(|_| ())
}

#[derive(Clone, Copy, PartialEq)]
enum Mark {
    Unvisited,
    OnPath,
    Rooted,
    Orphaned,
}

fn check_reachability(heads: &[Option<usize>]) -> Result<(), TreeError> {
    let n = heads.len();
    let mut marks = vec![Mark::Unvisited; n + 1];
    marks[0] = Mark::Rooted;

    for start in 1..=n {
        let mut path = Vec::new();
        let mut node = start;
        let outcome = loop {
            match marks[node] {
                Mark::Rooted => break Mark::Rooted,
                Mark::Orphaned => break Mark::Orphaned,
                Mark::OnPath => {
                    let pos = path.iter().position(|&p| p == node).unwrap();
                    return Err(TreeError::Cycle(path[pos..].iter().copied().collect()));
                }
                Mark::Unvisited => {
                    marks[node] = Mark::OnPath;
                    path.push(node);
                    match heads[node - 1] {
                        Some(h) => node = h,
                        None => break Mark::Orphaned,
                    }
                }
            }
        };
        for p in path {
            marks[p] = outcome;
        }
    }

    let orphans: BTreeSet<usize> = (1..=n).filter(|&d| marks[d] == Mark::Orphaned).collect();
    if orphans.is_empty() {
        Ok(())
    } else {
        Err(TreeError::Disconnected(orphans))
    }
}
