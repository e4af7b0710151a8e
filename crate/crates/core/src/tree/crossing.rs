use std::collections::VecDeque;

use super::{Arc, DepTree};

/// True iff the endpoints of `a` and `b` strictly interleave.
///
/// Arcs that share an endpoint never cross. The dummy root is an ordinary
/// endpoint, so `(0, 3)` crosses `(1, 4)`.
pub fn arcs_cross(a: Arc, b: Arc) -> bool {
    let (i, j) = (a.left(), a.right());
    let (k, l) = (b.left(), b.right());
    (i < k && k < j && j < l) || (k < i && i < l && l < j)
}

/// Graph over arcs with an edge between every crossing pair.
#[derive(Clone, Debug)]
pub struct CrossingsGraph {
    arcs: Vec<Arc>,
    neighbors: Vec<Vec<usize>>,
}

impl CrossingsGraph {
    /// Pairwise construction over an arbitrary arc list.
    pub fn from_arcs(arcs: Vec<Arc>) -> Self {
        let mut neighbors = vec![Vec::new(); arcs.len()];
        for i in 0..arcs.len() {
            for j in i + 1..arcs.len() {
                if arcs_cross(arcs[i], arcs[j]) {
                    neighbors[i].push(j);
                    neighbors[j].push(i);
                }
            }
        }
        CrossingsGraph { arcs, neighbors }
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Indices (into [`Self::arcs`]) of the arcs crossing arc `idx`.
    pub fn neighbors(&self, idx: usize) -> &[usize] {
        &self.neighbors[idx]
    }

    /// Crossing pairs, each reported once with the lower index first.
    pub fn edges(&self) -> impl Iterator<Item = (Arc, Arc)> + '_ {
        self.neighbors.iter().enumerate().flat_map(move |(i, ns)| {
            ns.iter()
                .filter(move |&&j| j > i)
                .map(move |&j| (self.arcs[i], self.arcs[j]))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Breadth-first two-coloring. `None` if some component has an odd cycle.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.arcs.len()];
        let mut queue = VecDeque::new();
        for start in 0..self.arcs.len() {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for &w in &self.neighbors[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }
}

/// Crossings graph of a tree, one node per arc in dependent order.
pub fn crossings_graph(tree: &DepTree) -> CrossingsGraph {
    CrossingsGraph::from_arcs(tree.arcs().collect())
}

/// A tree is 2-planar iff its crossings graph is bipartite.
pub fn is_two_planar(tree: &DepTree) -> bool {
    crossings_graph(tree).is_bipartite()
}

/// Arcs crossed by at least one other arc.
///
/// Works on any arc list, so it also applies to unrepaired parser output.
pub fn nonprojective_arcs(arcs: &[Arc]) -> Vec<Arc> {
    arcs.iter()
        .copied()
        .filter(|&a| arcs.iter().any(|&b| arcs_cross(a, b)))
        .collect()
}

/// True if two arcs of the same direction cross.
pub fn has_same_direction_crossing(arcs: &[Arc]) -> bool {
    arcs.iter().enumerate().any(|(i, &a)| {
        arcs[i + 1..]
            .iter()
            .any(|&b| a.is_right_arc() == b.is_right_arc() && arcs_cross(a, b))
    })
}
