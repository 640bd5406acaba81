//! Leaf relocation `T -> T'`: a leaf `y1` hanging from a support vertex `y`
//! is detached and re-hung from another neighbour `y2` of `y`.

use serde::Serialize;

use crate::error::{RelocationError, TreeError};
use crate::tree::{Tree, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RelocationStep {
    pub support: Vertex,
    pub donor: Vertex,
    pub recipient: Vertex,
    /// Degrees of `(support, donor, recipient)` in `T`.
    pub before: [usize; 3],
    /// Degrees of `(support, donor, recipient)` in `T'`.
    pub after: [usize; 3],
}

impl RelocationStep {
    /// Degree of the support vertex before the move (lambda).
    pub fn lambda(&self) -> usize {
        self.before[0]
    }
}

pub fn relocate_leaf(
    t: &Tree,
    support: Vertex,
    donor: Vertex,
    recipient: Vertex,
) -> Result<(Tree, RelocationStep), RelocationError> {
    for v in [support, donor, recipient] {
        if !t.contains(v) {
            return Err(TreeError::VertexOutOfRange {
                vertex: v,
                order: t.order(),
            }
            .into());
        }
    }
    let adjacent = |a: Vertex, b: Vertex| t.neighbors(a).binary_search(&b).is_ok();
    if !adjacent(support, donor) || !t.is_leaf(donor) {
        return Err(RelocationError::DonorNotLeaf { support, donor });
    }
    if recipient == donor {
        return Err(RelocationError::RecipientIsDonor(donor));
    }
    if !adjacent(support, recipient) {
        return Err(RelocationError::RecipientNotNeighbor { support, recipient });
    }
    let lambda = t.degree(support);
    if lambda < 3 {
        return Err(RelocationError::LambdaBelowThree {
            support,
            degree: lambda,
        });
    }
    let removed = (support.min(donor), support.max(donor));
    let edges: Vec<_> = t
        .edges()
        .iter()
        .copied()
        .filter(|&e| e != removed)
        .chain([(recipient, donor)])
        .collect();
    let moved = Tree::new_unchecked(t.order(), edges);
    let step = RelocationStep {
        support,
        donor,
        recipient,
        before: [lambda, t.degree(donor), t.degree(recipient)],
        after: [moved.degree(support), moved.degree(donor), moved.degree(recipient)],
    };
    Ok((moved, step))
}

/// Every `(support, donor, recipient)` triple `relocate_leaf` accepts on `t`.
pub fn applicable_relocations(t: &Tree) -> Vec<(Vertex, Vertex, Vertex)> {
    let mut out = Vec::new();
    for y in 0..t.order() {
        if t.degree(y) < 3 {
            continue;
        }
        for &donor in t.neighbors(y).iter().filter(|&&w| t.is_leaf(w)) {
            for &recipient in t.neighbors(y).iter().filter(|&&w| w != donor) {
                out.push((y, donor, recipient));
            }
        }
    }
    out
}
