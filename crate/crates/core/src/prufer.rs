//! Prüfer codec with smallest-leaf-first elimination.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::error::PruferError;
use crate::tree::{Tree, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PruferCode(pub Vec<Vertex>);

impl PruferCode {
    pub fn entries(&self) -> &[Vertex] {
        &self.0
    }
}

pub fn prufer_encode(t: &Tree) -> Result<PruferCode, PruferError> {
    let n = t.order();
    if n < 2 {
        return Err(PruferError::TooSmall);
    }
    let mut degree = t.degrees();
    let mut removed = vec![false; n];
    let mut leaves: BinaryHeap<Reverse<Vertex>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut code = Vec::with_capacity(n - 2);
    while code.len() < n - 2 {
        let Reverse(leaf) = leaves.pop().expect("a tree with >2 vertices has a leaf");
        removed[leaf] = true;
        let parent = *t
            .neighbors(leaf)
            .iter()
            .find(|&&w| !removed[w])
            .expect("leaf keeps one live neighbour");
        code.push(parent);
        degree[parent] -= 1;
        if degree[parent] == 1 {
            leaves.push(Reverse(parent));
        }
    }
    Ok(PruferCode(code))
}

pub fn prufer_decode(code: &PruferCode, n: usize) -> Result<Tree, PruferError> {
    if n == 0 {
        return Err(PruferError::TooSmall);
    }
    if code.0.len() + 2 != n.max(2) || (n == 1 && !code.0.is_empty()) {
        return Err(PruferError::LengthMismatch {
            len: code.0.len(),
            order: n,
        });
    }
    if let Some(&entry) = code.0.iter().find(|&&e| e >= n) {
        return Err(PruferError::EntryOutOfRange { entry, order: n });
    }
    if n == 1 {
        return Ok(Tree::singleton());
    }
    Ok(Tree::new_unchecked(n, decode_edges(&code.0, n)))
}

/// Linear-time decoding; the caller guarantees a well-formed code.
pub(crate) fn decode_edges(code: &[Vertex], n: usize) -> Vec<(Vertex, Vertex)> {
    let mut degree = vec![1usize; n];
    for &v in code {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = (0..n).find(|&v| degree[v] == 1).expect("some vertex is a leaf");
    let mut leaf = ptr;
    for &v in code {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{path, star};

    #[test]
    fn encode_path() {
        assert_eq!(prufer_encode(&path(4)).unwrap(), PruferCode(vec![1, 2]));
    }

    #[test]
    fn decode_star() {
        assert_eq!(prufer_decode(&PruferCode(vec![0, 0]), 4).unwrap(), star(3));
    }

    #[test]
    fn two_vertices() {
        let edge = Tree::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(prufer_encode(&edge).unwrap(), PruferCode(vec![]));
        assert_eq!(prufer_decode(&PruferCode(vec![]), 2).unwrap(), edge);
    }

    #[test]
    fn errors() {
        assert_eq!(prufer_encode(&Tree::singleton()), Err(PruferError::TooSmall));
        assert_eq!(
            prufer_decode(&PruferCode(vec![4, 0]), 4),
            Err(PruferError::EntryOutOfRange { entry: 4, order: 4 })
        );
        assert!(matches!(
            prufer_decode(&PruferCode(vec![0]), 4),
            Err(PruferError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn occurrences_match_degrees() {
        let t = prufer_decode(&PruferCode(vec![3, 3, 0, 5, 5, 5]), 8).unwrap();
        let code = prufer_encode(&t).unwrap();
        for v in 0..8 {
            let count = code.0.iter().filter(|&&x| x == v).count();
            assert_eq!(count + 1, t.degree(v));
        }
    }
}
