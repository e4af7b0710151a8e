use super::{LabelSequence, TokenLabel};
use crate::error::CodecError;
use crate::plane::PlanePartition;
use crate::tree::DepTree;

/// Write the arcs of each plane as balanced brackets.
///
/// Root arcs are never written: the root child is the token left without
/// a head. Unassigned arcs are skipped.
pub fn encode(tree: &DepTree, partition: &PlanePartition) -> Result<LabelSequence, CodecError> {
    if partition.len() != tree.len()
        || partition
            .assignment()
            .iter()
            .any(|(a, _)| tree.head(a.dep) != a.head)
    {
        return Err(CodecError::PartitionMismatch {
            partition: partition.len(),
            tree: tree.len(),
        });
    }

    let mut labels = vec![TokenLabel::default(); tree.len()];
    for &(arc, plane) in partition.assignment() {
        let plane = match plane {
            Some(p) if !arc.is_root_arc() => p,
            _ => continue,
        };
        if arc.is_right_arc() {
            labels[arc.head].plane_mut(plane).open_right += 1;
            labels[arc.dep - 1].plane_mut(plane).close_right = true;
        } else {
            labels[arc.dep].plane_mut(plane).open_left = true;
            labels[arc.head - 1].plane_mut(plane).close_left += 1;
        }
    }

    Ok(LabelSequence {
        labels,
        deprels: tree.deprels().to_vec(),
    })
}
