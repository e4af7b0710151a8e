use thiserror::Error;

use super::DepTree;

/// Largest sentence length accepted by [`enumerate_trees`].
pub const MAX_ENUMERATION_LENGTH: usize = 8;

#[derive(Clone, Copy, Debug, Eq, Error, PartialEq)]
#[error("refusing to enumerate trees over {0} tokens (limit {MAX_ENUMERATION_LENGTH})")]
pub struct EnumerationTooLarge(pub usize);

/// Iterate over every dependency tree with `n` tokens rooted at node 0.
///
/// There are `(n + 1)^(n - 1)` of them. Root children are labeled `root`,
/// all other tokens `dep`.
pub fn enumerate_trees(n: usize) -> Result<TreeEnumerator, EnumerationTooLarge> {
    if n > MAX_ENUMERATION_LENGTH {
        return Err(EnumerationTooLarge(n));
    }
    Ok(TreeEnumerator {
        heads: vec![UNSET; n],
        level: 0,
        started: false,
        done: false,
    })
}

const UNSET: usize = usize::MAX;

/// Backtracking search over head functions that rejects a head as soon as
/// it closes a cycle with the heads already fixed.
#[derive(Clone, Debug)]
pub struct TreeEnumerator {
    heads: Vec<usize>,
    level: usize,
    started: bool,
    done: bool,
}

impl TreeEnumerator {
    fn admissible(&self, level: usize, head: usize) -> bool {
        let token = level + 1;
        let mut node = head;
        loop {
            if node == token {
                return false;
            }
            // Tokens 1..=level already have heads.
            if node == 0 || node > level {
                return true;
            }
            node = self.heads[node - 1];
        }
    }

    fn emit(&self) -> DepTree {
        let deprels = self
            .heads
            .iter()
            .map(|&h| if h == 0 { "root" } else { "dep" }.to_owned())
            .collect();
        DepTree::from_valid_heads(self.heads.clone(), deprels)
    }
}

impl Iterator for TreeEnumerator {
    type Item = DepTree;

    fn next(&mut self) -> Option<DepTree> {
        if self.done {
            return None;
        }
        let n = self.heads.len();
        if n == 0 {
            self.done = true;
            return Some(self.emit());
        }
        if self.started {
            self.level = n - 1;
        } else {
            self.started = true;
        }

        loop {
            let level = self.level;
            let from = match self.heads[level] {
                UNSET => 0,
                h => h + 1,
            };
            match (from..=n).find(|&h| self.admissible(level, h)) {
                Some(h) => {
                    self.heads[level] = h;
                    if level + 1 == n {
                        return Some(self.emit());
                    }
                    self.level += 1;
                    self.heads[self.level] = UNSET;
                }
                None => {
                    self.heads[level] = UNSET;
                    if level == 0 {
                        self.done = true;
                        return None;
                    }
                    self.level -= 1;
                }
            }
        }
    }
}
