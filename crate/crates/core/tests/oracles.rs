mod common;

use std::collections::BTreeSet;

use common::{brute_isomorphic, classes, labeled_trees, TREE_COUNTS};
use irrtree::builders::{path, spider, star};
use irrtree::enumeration::{all_trees_by_prufer, EnumerationLimits};
use irrtree::relocation::applicable_relocations;
use irrtree::{
    all_trees, canonical_code, is_isomorphic, prufer_decode, prufer_encode, relocate_leaf, trees_with_degree_sequence,
    validate_tree_sequence, DegreeSequence, PruferCode, Tree,
};

fn tree(n: usize, edges: &[(usize, usize)]) -> Tree {
    Tree::from_edges(n, edges).unwrap()
}

#[test]
fn unlabeled_counts_match_brute_force_classes() {
    for n in 1..=7 {
        let labeled: Vec<Tree> = labeled_trees(n).iter().map(|e| tree(n, e)).collect();
        let reps = classes(labeled);
        assert_eq!(reps.len(), TREE_COUNTS[n - 1], "order {n}");
        assert_eq!(all_trees(n).unwrap().len(), reps.len(), "order {n}");
        let codes: BTreeSet<_> = reps.iter().map(canonical_code).collect();
        assert_eq!(codes.len(), reps.len());
    }
}

#[test]
fn enumerators_agree_through_order_ten() {
    let limits = EnumerationLimits::default();
    for n in 1..=10 {
        let a: Vec<_> = all_trees(n).unwrap().map(|t| canonical_code(&t)).collect();
        let b: Vec<_> = all_trees_by_prufer(n, &limits).unwrap().map(|t| canonical_code(&t)).collect();
        assert_eq!(a.len(), TREE_COUNTS[n - 1], "order {n}");
        assert_eq!(a, b, "order {n}");
        assert!(a.windows(2).all(|w| w[0] < w[1]), "ascending and distinct at order {n}");
    }
}

#[test]
fn is_isomorphic_agrees_with_backtracking() {
    for n in 1..=7 {
        let trees: Vec<Tree> = all_trees(n).unwrap().collect();
        for (i, a) in trees.iter().enumerate() {
            for (j, b) in trees.iter().enumerate() {
                assert_eq!(is_isomorphic(a, b), i == j);
                assert_eq!(brute_isomorphic(a, b), i == j);
            }
            let reversed: Vec<usize> = (0..n).rev().collect();
            let r = a.relabel(&reversed).unwrap();
            assert!(is_isomorphic(a, &r) && brute_isomorphic(a, &r));
            assert_eq!(canonical_code(a), canonical_code(&r));
        }
    }
}

#[test]
fn same_degrees_different_shape() {
    // both have degrees (3,2,2,2,1,1,1)
    let even = spider(&[2, 2, 2]);
    let uneven = spider(&[1, 2, 3]);
    assert_eq!(even.degree_sequence(), uneven.degree_sequence());
    assert!(!is_isomorphic(&even, &uneven));
    assert!(!brute_isomorphic(&even, &uneven));
    assert_ne!(canonical_code(&even), canonical_code(&uneven));

    // broom: path 0-1-2-3 with two extra leaves on 3, against a double star
    let broom = tree(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)]);
    let double = tree(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]);
    assert!(!is_isomorphic(&broom, &double));
    assert!(!brute_isomorphic(&broom, &double));
}

#[test]
fn prufer_round_trip_on_every_labeled_tree() {
    for n in 2..=7 {
        let all = labeled_trees(n);
        assert_eq!(all.len(), n.pow(n as u32 - 2), "Cayley count at order {n}");
        for edges in &all {
            let t = tree(n, edges);
            let code = prufer_encode(&t).unwrap();
            assert_eq!(code.entries().len(), n - 2);
            assert_eq!(prufer_decode(&code, n).unwrap(), t);
        }
    }
}

#[test]
fn every_code_decodes_to_a_distinct_tree() {
    for n in 3..=6 {
        let mut code = vec![0; n - 2];
        let mut seen = BTreeSet::new();
        loop {
            let t = prufer_decode(&PruferCode(code.clone()), n).unwrap();
            for v in 0..n {
                let appearances = code.iter().filter(|&&x| x == v).count();
                assert_eq!(t.degree(v), appearances + 1);
            }
            assert_eq!(prufer_encode(&t).unwrap().entries(), &code[..]);
            seen.insert(t.edges().to_vec());
            let Some(i) = (0..code.len()).rev().find(|&i| code[i] + 1 < n) else { break };
            code[i] += 1;
            code[i + 1..].iter_mut().for_each(|x| *x = 0);
        }
        assert_eq!(seen.len(), n.pow(n as u32 - 2));
    }
}

#[test]
fn degree_filter_is_sound_and_complete() {
    let limits = EnumerationLimits::default();
    for n in 2..=9 {
        let trees: Vec<Tree> = all_trees(n).unwrap().collect();
        let mut covered = 0;
        let sequences: BTreeSet<Vec<usize>> = trees.iter().map(Tree::degree_sequence).collect();
        for seq in sequences {
            let ds = DegreeSequence::new(seq.clone());
            let found: Vec<Tree> = trees_with_degree_sequence(&ds, &limits).unwrap().collect();
            let expected: Vec<&Tree> = trees.iter().filter(|t| t.degree_sequence() == seq).collect();
            assert_eq!(found.len(), expected.len(), "{seq:?}");
            for t in &found {
                assert_eq!(t.degree_sequence(), seq);
                assert!(expected.iter().any(|e| is_isomorphic(e, t)));
            }
            covered += found.len();
        }
        assert_eq!(covered, trees.len());
    }
    let ds = validate_tree_sequence(&[3, 2, 2, 1, 1, 1]).unwrap();
    assert_eq!(trees_with_degree_sequence(&ds, &limits).unwrap().len(), 2);
    let ds = validate_tree_sequence(&[4, 1, 1, 1, 1]).unwrap();
    let only: Vec<Tree> = trees_with_degree_sequence(&ds, &limits).unwrap().collect();
    assert_eq!(only.len(), 1);
    assert!(is_isomorphic(&only[0], &star(4)));
}

#[test]
fn relocation_moves_one_leaf() {
    for n in 4..=9 {
        for t in all_trees(n).unwrap() {
            for (y, donor, recipient) in applicable_relocations(&t) {
                let (moved, step) = relocate_leaf(&t, y, donor, recipient).unwrap();
                assert_eq!(moved.order(), n);
                assert!(Tree::from_edges(n, moved.edges()).is_ok());
                let r = t.degree(recipient);
                assert_eq!(step.before, [t.degree(y), 1, r]);
                assert_eq!(step.after, [t.degree(y) - 1, 1, r + 1]);
                for v in (0..n).filter(|&v| v != y && v != recipient) {
                    assert_eq!(moved.degree(v), t.degree(v));
                }
                let lost = (r == 1) as usize;
                assert_eq!(moved.leaves().len() + lost, t.leaves().len());
                assert!(moved.neighbors(recipient).contains(&donor));
            }
        }
    }
}

#[test]
fn relocation_guards() {
    let p = path(5);
    assert!(applicable_relocations(&p).is_empty());
    assert!(relocate_leaf(&p, 1, 0, 2).is_err());
    let s = star(3);
    assert!(relocate_leaf(&s, 0, 1, 1).is_err());
    assert!(relocate_leaf(&s, 0, 1, 9).is_err());
    let (moved, _) = relocate_leaf(&s, 0, 1, 2).unwrap();
    assert!(is_isomorphic(&moved, &path(4)));
}
