//! Repair heuristics turning arbitrary decoded arcs into a dependency tree.
//!
//! 1. Only the first decoded head of each token is kept.
//! 2. The root child is a token already attached to node 0 if there is one,
//!    otherwise the first headless token labeled `root`, otherwise the
//!    leftmost headless token. If every token has a non-root head, cycles
//!    are broken first (see 4) to free a candidate.
//! 3. Remaining headless tokens attach to the root child.
//! 4. While a cycle remains, its arc with the leftmost dependent is removed
//!    and that dependent attaches to the root child.

use serde::Serialize;

use crate::tree::{Arc, DepTree};

/// Relation label that marks the preferred root child.
pub const ROOT_DEPREL: &str = "root";

/// What [`postprocess_with_repairs`] had to change.
#[derive(Clone, Debug, Default, Eq, PartialEq, Serialize)]
pub struct Repairs {
    /// Arcs dropped because their dependent already had a head.
    pub duplicate_heads: usize,
    /// Arcs dropped because an endpoint is outside the sentence.
    pub invalid_arcs: usize,
    /// Tokens other than the root child that were attached to it.
    pub headless_attached: usize,
    pub cycles_broken: usize,
    /// The chosen root child, if the sentence is not empty.
    pub root: Option<usize>,
}

/// Build a valid tree from decoded arcs. Never fails.
pub fn postprocess(raw_arcs: &[Arc], deprels: &[String]) -> DepTree {
    postprocess_with_repairs(raw_arcs, deprels).0
}

pub fn postprocess_with_repairs(raw_arcs: &[Arc], deprels: &[String]) -> (DepTree, Repairs) {
    let n = deprels.len();
    let mut repairs = Repairs::default();
    let mut heads: Vec<Option<usize>> = vec![None; n + 1];

    for arc in raw_arcs {
        if arc.dep == 0 || arc.dep > n || arc.head > n || arc.head == arc.dep {
            repairs.invalid_arcs += 1;
        } else if heads[arc.dep].is_some() {
            repairs.duplicate_heads += 1;
        } else {
            heads[arc.dep] = Some(arc.head);
        }
    }

    if n == 0 {
        return (DepTree::from_valid_heads(Vec::new(), Vec::new()), repairs);
    }

    let mut root = (1..=n).find(|&d| heads[d] == Some(0));
    if root.is_none() {
        if (1..=n).all(|d| heads[d].is_some()) {
            while let Some(cycle) = find_cycle(&heads) {
                let leftmost = *cycle.iter().min().unwrap();
                heads[leftmost] = None;
                repairs.cycles_broken += 1;
            }
        }
        let headless: Vec<usize> = (1..=n).filter(|&d| heads[d].is_none()).collect();
        let chosen = headless
            .iter()
            .copied()
            .find(|&d| deprels[d - 1] == ROOT_DEPREL)
            .unwrap_or(headless[0]);
        heads[chosen] = Some(0);
        root = Some(chosen);
    }
    let root = root.unwrap();
    repairs.root = Some(root);

    for head in heads.iter_mut().skip(1) {
        if head.is_none() {
            *head = Some(root);
            repairs.headless_attached += 1;
        }
    }

    while let Some(cycle) = find_cycle(&heads) {
        let leftmost = *cycle.iter().min().unwrap();
        heads[leftmost] = Some(root);
        repairs.cycles_broken += 1;
    }

    let heads = heads.into_iter().skip(1).map(Option::unwrap).collect();
    (DepTree::from_valid_heads(heads, deprels.to_vec()), repairs)
}

/// First cycle reachable by following heads from the lowest token, as the
/// list of tokens on it. `heads[0]` is unused; a `None` head ends a walk.
fn find_cycle(heads: &[Option<usize>]) -> Option<Vec<usize>> {
    const NEW: u8 = 0;
    const ACTIVE: u8 = 1;
    const DONE: u8 = 2;

    let n = heads.len() - 1;
    let mut state = vec![NEW; n + 1];
    state[0] = DONE;
    for start in 1..=n {
        let mut path = Vec::new();
        let mut node = start;
        loop {
            match state[node] {
                DONE => break,
                ACTIVE => {
                    let pos = path.iter().position(|&p| p == node).unwrap();
                    return Some(path.split_off(pos));
                }
                _ => {
                    state[node] = ACTIVE;
                    path.push(node);
                    match heads[node] {
                        Some(h) => node = h,
                        None => break,
                    }
                }
            }
        }
        for p in path {
            state[p] = DONE;
        }
    }
    None
}
