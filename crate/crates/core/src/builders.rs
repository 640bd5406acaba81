//! Constructors for stars, paths and caterpillars with prescribed spine degrees.

use crate::error::BuildError;
use crate::tree::Tree;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecialTree {
    Star { leaves: usize },
    Path { order: usize },
    /// Spine degrees in spine order.
    Caterpillar { spine: Vec<usize> },
}

pub fn build_special(kind: &SpecialTree) -> Result<Tree, BuildError> {
    match kind {
        SpecialTree::Star { leaves: 0 } => Err(BuildError::NoLeaves),
        SpecialTree::Star { leaves } => Ok(star(*leaves)),
        SpecialTree::Path { order: 0 } => Err(BuildError::EmptyPath),
        SpecialTree::Path { order } => Ok(path(*order)),
        SpecialTree::Caterpillar { spine } => caterpillar(spine),
    }
}

/// Star with center 0 and leaves `1..=leaves`.
pub fn star(leaves: usize) -> Tree {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    if leaves == 0 {
        return Tree::singleton();
    }
    Tree::new_unchecked(leaves + 1, edges)
}

/// Path `0 - 1 - ... - (order-1)`.
pub fn path(order: usize) -> Tree {
    assert!(order >= 1, "path needs a vertex");
    let edges: Vec<_> = (1..order).map(|v| (v - 1, v)).collect();
    if order == 1 {
        return Tree::singleton();
    }
    Tree::new_unchecked(order, edges)
}

/// Caterpillar whose spine vertex `i` (vertex id `i`) has degree `spine[i]`.
///
/// Pendant leaves get ids after the spine, grouped by spine vertex in order.
pub fn caterpillar(spine: &[usize]) -> Result<Tree, BuildError> {
    let k = spine.len();
    if k == 0 {
        return Err(BuildError::EmptySpine);
    }
    let mut edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    let mut next = k;
    for (i, &degree) in spine.iter().enumerate() {
        let spine_neighbors = match k {
            1 => 0,
            _ if i == 0 || i == k - 1 => 1,
            _ => 2,
        };
        let required = spine_neighbors.max(1);
        if degree < required {
            return Err(BuildError::InfeasibleSpine {
                index: i,
                degree,
                required,
            });
        }
        for _ in spine_neighbors..degree {
            edges.push((i, next));
            next += 1;
        }
    }
    Ok(Tree::new_unchecked(next, edges))
}

/// Spider: center 0 with arms of the given lengths.
pub fn spider(arms: &[usize]) -> Tree {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in arms {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    if next == 1 {
        return Tree::singleton();
    }
    Tree::new_unchecked(next, edges)
}

/// Spine `3, 5, 7, ..., 2m+1`.
pub fn odd_spine(m: usize) -> Vec<usize> {
    (1..=m).map(|k| 2 * k + 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degseq::validate_tree_sequence;

    #[test]
    fn star_degrees() {
        let t = build_special(&SpecialTree::Star { leaves: 4 }).unwrap();
        assert_eq!(t.degrees(), vec![4, 1, 1, 1, 1]);
    }

    #[test]
    fn two_slot_odd_spine() {
        let t = caterpillar(&[3, 5]).unwrap();
        assert_eq!(t.order(), 8);
        assert_eq!(t.degrees().iter().sum::<usize>(), 14);
        assert_eq!(t.degree(0), 3);
        assert_eq!(t.degree(1), 5);
    }

    #[test]
    fn three_slot_odd_spine() {
        let spine = odd_spine(3);
        assert_eq!(spine, vec![3, 5, 7]);
        assert_eq!(spine.iter().sum::<usize>(), 15);
        assert_eq!(caterpillar(&spine).unwrap().order(), 14);
    }

    #[test]
    fn infeasible_spines() {
        assert_eq!(caterpillar(&[]), Err(BuildError::EmptySpine));
        assert_eq!(
            caterpillar(&[3, 1, 3]),
            Err(BuildError::InfeasibleSpine {
                index: 1,
                degree: 1,
                required: 2
            })
        );
        assert!(caterpillar(&[0]).is_err());
        assert_eq!(build_special(&SpecialTree::Star { leaves: 0 }), Err(BuildError::NoLeaves));
        assert_eq!(build_special(&SpecialTree::Path { order: 0 }), Err(BuildError::EmptyPath));
    }

    #[test]
    fn outputs_are_tree_graphical() {
        for spine in [vec![1], vec![4], vec![1, 1], vec![2, 2, 2], vec![5, 2, 3, 1]] {
            let t = caterpillar(&spine).unwrap();
            for (i, &d) in spine.iter().enumerate() {
                assert_eq!(t.degree(i), d);
            }
            let degrees: Vec<i64> = t.degrees().iter().map(|&d| d as i64).collect();
            assert!(validate_tree_sequence(&degrees).is_ok());
            assert!(t.is_caterpillar());
        }
    }

    #[test]
    fn spider_shape() {
        let t = spider(&[2, 1, 1]);
        assert_eq!(t.degree_sequence(), vec![3, 2, 1, 1, 1]);
    }
}
