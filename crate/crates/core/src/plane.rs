//! Plane assignment: splitting the arcs of a tree into two non-crossing planes.
//!
//! Arcs are visited in the order a stack decoder closes them: by right
//! endpoint, shortest first on ties. Two strategies decide the plane of each
//! arc:
//!
//! * greedy: take plane 1 unless an already placed arc on plane 1 crosses the
//!   arc, then plane 2 under the same condition, otherwise leave it out;
//! * propagation: every placement forbids the opposite plane for the arc and
//!   pushes alternating restrictions through the crossings graph, so an arc is
//!   left out only when the crossings graph has an odd cycle.
//!
//! Both default to preferring plane 1 whenever it is allowed. With
//! `switch_averse` set they instead keep the plane of the most recently
//! placed arc when both planes are allowed.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::tree::{arcs_cross, crossings_graph, Arc, CrossingsGraph, DepTree};

#[derive(Clone, Copy, Debug, Deserialize, Eq, Hash, Ord, PartialEq, PartialOrd, Serialize)]
pub enum Plane {
    First,
    Second,
}

impl Plane {
    pub fn other(self) -> Plane {
        match self {
            Plane::First => Plane::Second,
            Plane::Second => Plane::First,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Plane::First => 0,
            Plane::Second => 1,
        }
    }
}

/// Plane assignment strategy.
#[derive(Clone, Copy, Debug, Deserialize, Eq, Hash, PartialEq, Serialize)]
pub enum Strategy {
    Greedy,
    Propagation,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Greedy => "greedy",
            Strategy::Propagation => "prop",
        })
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "greedy" => Ok(Strategy::Greedy),
            "prop" => Ok(Strategy::Propagation),
            _ => Err(format!("unknown plane assignment strategy: {}", s)),
        }
    }
}

/// Assignment of every arc of a tree to plane 1, plane 2 or neither.
#[derive(Clone, Debug, Eq, PartialEq)]
pub struct PlanePartition {
    // Indexed by dependent - 1.
    arcs: Vec<(Arc, Option<Plane>)>,
}

impl PlanePartition {
    /// Every arc on plane 1, crossing or not.
    pub fn single_plane(tree: &DepTree) -> Self {
        PlanePartition {
            arcs: tree.arcs().map(|a| (a, Some(Plane::First))).collect(),
        }
    }

    /// Build a partition from explicit arcs and planes, in dependent order.
    pub fn from_assignment(arcs: Vec<(Arc, Option<Plane>)>) -> Self {
        PlanePartition { arcs }
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Plane of the arc whose dependent is `dep`.
    pub fn plane_of(&self, dep: usize) -> Option<Plane> {
        self.arcs[dep - 1].1
    }

    pub fn assignment(&self) -> &[(Arc, Option<Plane>)] {
        &self.arcs
    }

    pub fn plane(&self, plane: Plane) -> Vec<Arc> {
        self.arcs
            .iter()
            .filter(|(_, p)| *p == Some(plane))
            .map(|(a, _)| *a)
            .collect()
    }

    pub fn plane1(&self) -> Vec<Arc> {
        self.plane(Plane::First)
    }

    pub fn plane2(&self) -> Vec<Arc> {
        self.plane(Plane::Second)
    }

    pub fn unassigned(&self) -> Vec<Arc> {
        self.arcs
            .iter()
            .filter(|(_, p)| p.is_none())
            .map(|(a, _)| *a)
            .collect()
    }

    /// First pair of crossing arcs sharing a plane, if any.
    pub fn within_plane_crossing(&self) -> Option<(Arc, Arc)> {
        for plane in [Plane::First, Plane::Second] {
            let arcs = self.plane(plane);
            for (i, &a) in arcs.iter().enumerate() {
                if let Some(&b) = arcs[i + 1..].iter().find(|&&b| arcs_cross(a, b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }
}

/// Arcs sorted by right endpoint, then by left endpoint descending.
pub fn arc_order(tree: &DepTree) -> Vec<Arc> {
    let mut arcs: Vec<Arc> = tree.arcs().collect();
    arcs.sort_by(|a, b| {
        a.right()
            .cmp(&b.right())
            .then_with(|| b.left().cmp(&a.left()))
    });
    arcs
}

/// Run the given strategy.
pub fn assign(tree: &DepTree, strategy: Strategy, switch_averse: bool) -> PlanePartition {
    match strategy {
        Strategy::Greedy => assign_greedy(tree, switch_averse),
        Strategy::Propagation => assign_prop(tree, switch_averse),
    }
}

fn choose(allowed: [bool; 2], switch_averse: bool, last: Plane) -> Option<Plane> {
    match allowed {
        [true, true] if switch_averse => Some(last),
        [true, _] => Some(Plane::First),
        [false, true] => Some(Plane::Second),
        [false, false] => None,
    }
}

/// Greedy plane assignment.
pub fn assign_greedy(tree: &DepTree, switch_averse: bool) -> PlanePartition {
    let graph = crossings_graph(tree);
    let mut planes: Vec<Option<Plane>> = vec![None; tree.len()];
    let mut last = Plane::First;

    for arc in arc_order(tree) {
        let idx = arc.dep - 1;
        let mut allowed = [true, true];
        for &other in graph.neighbors(idx) {
            if let Some(p) = planes[other] {
                allowed[p.index()] = false;
            }
        }
        if let Some(p) = choose(allowed, switch_averse, last) {
            planes[idx] = Some(p);
            last = p;
        }
    }

    PlanePartition {
        arcs: tree.arcs().zip(planes).collect(),
    }
}

/// Arcs forbidden from each plane during restriction propagation.
#[derive(Clone, Debug, Default)]
pub struct PropagationState {
    forbidden: [Vec<bool>; 2],
}

impl PropagationState {
    pub fn new(arcs: usize) -> Self {
        PropagationState {
            forbidden: [vec![false; arcs], vec![false; arcs]],
        }
    }

    pub fn is_forbidden(&self, arc: usize, plane: Plane) -> bool {
        self.forbidden[plane.index()][arc]
    }

    /// Forbid `plane` for `arc`, the other plane for its crossing neighbors,
    /// `plane` again for theirs, and so on.
    ///
    /// A neighbor already forbidden from the plane it would receive is not
    /// expanded again, so every (arc, plane) pair is visited at most once.
    pub fn propagate(&mut self, graph: &CrossingsGraph, arc: usize, plane: Plane) {
        self.forbidden[plane.index()][arc] = true;
        let mut work = vec![(arc, plane)];
        while let Some((e, p)) = work.pop() {
            let next = p.other();
            for &n in graph.neighbors(e) {
                if !self.forbidden[next.index()][n] {
                    self.forbidden[next.index()][n] = true;
                    work.push((n, next));
                }
            }
        }
    }
}

/// Plane assignment with restriction propagation over the crossings graph.
pub fn assign_prop(tree: &DepTree, switch_averse: bool) -> PlanePartition {
    let graph = crossings_graph(tree);
    let mut state = PropagationState::new(tree.len());
    let mut planes: Vec<Option<Plane>> = vec![None; tree.len()];
    let mut last = Plane::First;

    for arc in arc_order(tree) {
        let idx = arc.dep - 1;
        let allowed = [
            !state.is_forbidden(idx, Plane::First),
            !state.is_forbidden(idx, Plane::Second),
        ];
        if let Some(p) = choose(allowed, switch_averse, last) {
            planes[idx] = Some(p);
            last = p;
            state.propagate(&graph, idx, p.other());
        }
    }

    PlanePartition {
        arcs: tree.arcs().zip(planes).collect(),
    }
}
