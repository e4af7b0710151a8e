use super::{BracketKind, LabelSequence, TokenLabel};
use crate::error::CodecError;
use crate::plane::Plane;
use crate::postprocess::postprocess;
use crate::tree::{Arc, DepTree};

/// Stacks and output of the bracket decoder.
///
/// Stacks hold token positions: dependents on the left stacks, heads on the
/// right stacks.
#[derive(Clone, Debug, Default, Eq, PartialEq)]
pub struct DecoderState {
    pub left1: Vec<usize>,
    pub right1: Vec<usize>,
    pub left2: Vec<usize>,
    pub right2: Vec<usize>,
    /// Arcs in the order their closing bracket was read.
    pub raw_arcs: Vec<Arc>,
    /// Closers read while the matching stack was empty.
    pub dropped_closers: usize,
    /// Openers still on a stack after the last token.
    pub leftover_openers: usize,
    /// `<` on the first token, which has no predecessor to attach.
    pub dropped_openers: usize,
}

impl DecoderState {
    fn stack(&mut self, plane: Plane, left: bool) -> &mut Vec<usize> {
        match (plane, left) {
            (Plane::First, true) => &mut self.left1,
            (Plane::First, false) => &mut self.right1,
            (Plane::Second, true) => &mut self.left2,
            (Plane::Second, false) => &mut self.right2,
        }
    }

    /// Feed the label of token `token` (1-based).
    pub fn push_token(&mut self, token: usize, label: &TokenLabel) {
        for element in label.elements() {
            match element.kind {
                BracketKind::OpenLeft if token == 1 => self.dropped_openers += 1,
                BracketKind::OpenLeft => self.stack(element.plane, true).push(token - 1),
                BracketKind::OpenRight => self.stack(element.plane, false).push(token - 1),
                BracketKind::CloseLeft => match self.stack(element.plane, true).pop() {
                    Some(dep) => self.raw_arcs.push(Arc::new(token, dep)),
                    None => self.dropped_closers += 1,
                },
                BracketKind::CloseRight => match self.stack(element.plane, false).pop() {
                    Some(head) => self.raw_arcs.push(Arc::new(head, token)),
                    None => self.dropped_closers += 1,
                },
            }
        }
    }

    fn finish(&mut self) {
        self.leftover_openers =
            self.left1.len() + self.right1.len() + self.left2.len() + self.right2.len();
    }

    /// Tokens that received no head from any bracket pair.
    pub fn headless(&self, n: usize) -> Vec<usize> {
        let mut has_head = vec![false; n + 1];
        for arc in &self.raw_arcs {
            has_head[arc.dep] = true;
        }
        (1..=n).filter(|&d| !has_head[d]).collect()
    }

    /// Repair the decoded arcs into a tree.
    pub fn postprocess(&self, deprels: &[String]) -> DepTree {
        postprocess(&self.raw_arcs, deprels)
    }
}

/// Decode bracket labels left to right with one pair of stacks per plane.
pub fn decode(labels: &[TokenLabel]) -> DecoderState {
    let mut state = DecoderState::default();
    for (i, label) in labels.iter().enumerate() {
        state.push_token(i + 1, label);
    }
    state.finish();
    state
}

/// Decode a label sequence and repair the result into a tree.
pub fn decode_tree(sequence: &LabelSequence) -> DepTree {
    decode(&sequence.labels).postprocess(&sequence.deprels)
}

/// Parse combined display strings, one per token.
pub fn parse_labels<S: AsRef<str>>(labels: &[S]) -> Result<Vec<TokenLabel>, CodecError> {
    labels
        .iter()
        .enumerate()
        .map(|(i, s)| {
            s.as_ref().parse().map_err(|source| CodecError::Label {
                token: i + 1,
                source,
            })
        })
        .collect()
}
