//! Reference implementations used as oracles by the integration tests.
//! None of them call into the library beyond building trees.

#![allow(dead_code)]

use rand::Rng;
use twoplanar::DepTree;

/// Heads of the running example: 1 is the root child, 1->2, 1->3, 2->4,
/// 1->5, 3->6.
pub const FIG_HEADS: [usize; 6] = [0, 1, 1, 2, 1, 3];

pub fn tree(heads: &[usize]) -> DepTree {
    DepTree::new(heads.to_vec(), vec!["_".to_owned(); heads.len()]).unwrap()
}

pub fn labeled(heads: &[usize], deprels: &[&str]) -> DepTree {
    DepTree::new(
        heads.to_vec(),
        deprels.iter().map(|s| s.to_string()).collect(),
    )
    .unwrap()
}

/// `(head, dep)` pairs of a head vector.
pub fn arcs_of(heads: &[usize]) -> Vec<(usize, usize)> {
    heads.iter().enumerate().map(|(i, &h)| (h, i + 1)).collect()
}

/// Two arcs cross when exactly one endpoint of one lies strictly inside the
/// span of the other.
pub fn cross(a: (usize, usize), b: (usize, usize)) -> bool {
    let (al, ar) = (a.0.min(a.1), a.0.max(a.1));
    let (bl, br) = (b.0.min(b.1), b.0.max(b.1));
    let inside = |x: usize, l: usize, r: usize| l < x && x < r;
    let shares = al == bl || al == br || ar == bl || ar == br;
    !shares && (inside(bl, al, ar) != inside(br, al, ar))
}

/// Every head vector over `n` tokens that forms a tree rooted at 0, found by
/// brute force over all `(n+1)^n` vectors.
pub fn brute_force_trees(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut heads = vec![0usize; n];
    loop {
        if is_rooted_tree(&heads) {
            out.push(heads.clone());
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            heads[i] += 1;
            if heads[i] <= n {
                break;
            }
            heads[i] = 0;
            i += 1;
        }
    }
}

/// Every token reaches 0 by following heads within `n` steps.
pub fn is_rooted_tree(heads: &[usize]) -> bool {
    let n = heads.len();
    (1..=n).all(|start| {
        let mut node = start;
        for _ in 0..=n {
            if node == 0 {
                return true;
            }
            let h = heads[node - 1];
            if h == node || h > n {
                return false;
            }
            node = h;
        }
        false
    })
}

/// Bipartiteness of the crossing relation via union-find with parity.
pub fn crossing_graph_bipartite(arcs: &[(usize, usize)]) -> bool {
    let m = arcs.len();
    let mut parent: Vec<usize> = (0..m).collect();
    let mut parity = vec![0u8; m];

    fn find(parent: &mut [usize], parity: &mut [u8], x: usize) -> (usize, u8) {
        if parent[x] == x {
            return (x, 0);
        }
        let (root, p) = find(parent, parity, parent[x]);
        parity[x] ^= p;
        parent[x] = root;
        (root, parity[x])
    }

    for i in 0..m {
        for j in i + 1..m {
            if !cross(arcs[i], arcs[j]) {
                continue;
            }
            let (ri, pi) = find(&mut parent, &mut parity, i);
            let (rj, pj) = find(&mut parent, &mut parity, j);
            if ri == rj {
                if pi == pj {
                    return false;
                }
            } else {
                parent[ri] = rj;
                parity[ri] = pi ^ pj ^ 1;
            }
        }
    }
    true
}

/// Two crossing non-root arcs pointing the same way.
pub fn same_direction_crossing(heads: &[usize]) -> bool {
    let arcs: Vec<_> = arcs_of(heads).into_iter().filter(|a| a.0 != 0).collect();
    arcs.iter().enumerate().any(|(i, &a)| {
        arcs[i + 1..]
            .iter()
            .any(|&b| cross(a, b) && (a.0 < a.1) == (b.0 < b.1))
    })
}

pub fn single_root(heads: &[usize]) -> bool {
    heads.iter().filter(|&&h| h == 0).count() == 1
}

/// Random tree: tokens are attached one by one, in random order, to a
/// random already attached node.
pub fn random_heads<R: Rng>(rng: &mut R, n: usize, single_root: bool) -> Vec<usize> {
    let mut order: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut placed = vec![0usize];
    let mut heads = vec![0usize; n];
    for (k, &token) in order.iter().enumerate() {
        heads[token - 1] = if single_root && k > 0 {
            placed[rng.gen_range(1..placed.len())]
        } else {
            placed[rng.gen_range(0..placed.len())]
        };
        placed.push(token);
    }
    heads
}
