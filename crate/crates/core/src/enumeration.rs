//! Exhaustive streams of unlabeled trees.
//!
//! Two independent enumerators produce all trees of a given order:
//! recursive leaf extension (the default) and Prüfer-code realization of
//! every tree-graphical degree sequence. Both deduplicate by canonical code
//! and emit trees rebuilt from that code in ascending code order, so the same
//! input always yields the same labelled trees in the same order.

use std::collections::BTreeSet;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::canon::{canonical_code, CanonicalCode};
use crate::degseq::{tree_sequences, validate_tree_sequence, DegreeSequence};
use crate::error::EnumerationError;
use crate::prufer::decode_edges;
use crate::tree::Tree;

pub const DEFAULT_MAX_ORDER: usize = 16;
pub const DEFAULT_MAX_CODES: u128 = 10_000_000;

/// Size guards for enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_order: usize,
    /// Cap on Prüfer codes walked for one degree sequence.
    pub max_codes: u128,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_order: DEFAULT_MAX_ORDER,
            max_codes: DEFAULT_MAX_CODES,
        }
    }
}

impl EnumerationLimits {
    fn check_order(&self, n: usize) -> Result<(), EnumerationError> {
        if n == 0 || n > self.max_order {
            return Err(EnumerationError::OrderOutOfRange {
                order: n,
                max: self.max_order,
            });
        }
        Ok(())
    }
}

/// Pairwise non-isomorphic trees in ascending canonical-code order.
#[derive(Clone, Debug)]
pub struct TreeStream {
    trees: Arc<Vec<Tree>>,
    next: usize,
}

impl TreeStream {
    fn new(trees: Arc<Vec<Tree>>) -> Self {
        TreeStream { trees, next: 0 }
    }

    fn from_codes(codes: BTreeSet<CanonicalCode>) -> Self {
        TreeStream::new(Arc::new(codes.iter().map(Tree::from_canonical).collect()))
    }

    /// The remaining trees as a shared slice, without cloning them.
    pub fn as_slice(&self) -> &[Tree] {
        &self.trees[self.next..]
    }
}

impl Iterator for TreeStream {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        let t = self.trees.get(self.next)?.clone();
        self.next += 1;
        Some(t)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.trees.len() - self.next;
        (left, Some(left))
    }
}

impl ExactSizeIterator for TreeStream {}

/// Trees of order `1..=k` computed so far, index `k-1`.
static LEVELS: Mutex<Vec<Arc<Vec<Tree>>>> = Mutex::new(Vec::new());

/// All unlabeled trees on `n` vertices under the default guard.
pub fn all_trees(n: usize) -> Result<TreeStream, EnumerationError> {
    all_trees_with(n, &EnumerationLimits::default())
}

pub fn all_trees_with(n: usize, limits: &EnumerationLimits) -> Result<TreeStream, EnumerationError> {
    limits.check_order(n)?;
    Ok(TreeStream::new(leaf_extension_levels(n)))
}

fn leaf_extension_levels(n: usize) -> Arc<Vec<Tree>> {
    let mut levels = LEVELS.lock().unwrap_or_else(|e| e.into_inner());
    if levels.is_empty() {
        levels.push(Arc::new(vec![Tree::singleton()]));
    }
    while levels.len() < n {
        let prev = levels.last().expect("seeded").clone();
        levels.push(Arc::new(extend_by_leaf(&prev)));
    }
    levels[n - 1].clone()
}

/// Every tree of order `k + 1` arises from one of order `k` by adding a leaf.
fn extend_by_leaf(prev: &[Tree]) -> Vec<Tree> {
    let codes: BTreeSet<CanonicalCode> = prev
        .par_iter()
        .flat_map_iter(|t| {
            let k = t.order();
            (0..k).map(move |v| {
                let mut edges = t.edges().to_vec();
                edges.push((v, k));
                canonical_code(&Tree::new_unchecked(k + 1, edges))
            })
        })
        .collect();
    codes.iter().map(Tree::from_canonical).collect()
}

/// All unlabeled trees on `n` vertices, found by realizing every
/// tree-graphical degree sequence through its Prüfer codes.
pub fn all_trees_by_prufer(n: usize, limits: &EnumerationLimits) -> Result<TreeStream, EnumerationError> {
    limits.check_order(n)?;
    let mut codes = BTreeSet::new();
    for seq in tree_sequences(n) {
        codes.extend(realization_codes(&seq, limits)?);
    }
    Ok(TreeStream::from_codes(codes))
}

/// The isomorphism classes of trees whose degree multiset equals `seq`.
pub fn trees_with_degree_sequence(
    seq: &DegreeSequence,
    limits: &EnumerationLimits,
) -> Result<TreeStream, EnumerationError> {
    let raw: Vec<i64> = seq.values().iter().map(|&d| d as i64).collect();
    validate_tree_sequence(&raw)?;
    limits.check_order(seq.len())?;
    Ok(TreeStream::from_codes(realization_codes(seq, limits)?))
}

/// Number of Prüfer codes that realize `seq` with vertex `i` taking degree
/// `seq[i]`.
pub fn realization_code_count(seq: &DegreeSequence) -> u128 {
    let symbols: Vec<usize> = code_multiset(seq);
    multiset_permutation_count(&symbols)
}

fn code_multiset(seq: &DegreeSequence) -> Vec<usize> {
    seq.values()
        .iter()
        .enumerate()
        .flat_map(|(v, &d)| std::iter::repeat_n(v, d.saturating_sub(1)))
        .collect()
}

fn realization_codes(
    seq: &DegreeSequence,
    limits: &EnumerationLimits,
) -> Result<BTreeSet<CanonicalCode>, EnumerationError> {
    let n = seq.len();
    if n <= 2 {
        let t = if n == 1 {
            Tree::singleton()
        } else {
            Tree::new_unchecked(2, vec![(0, 1)])
        };
        return Ok(BTreeSet::from([canonical_code(&t)]));
    }
    let symbols = code_multiset(seq);
    let count = multiset_permutation_count(&symbols);
    if count > limits.max_codes {
        return Err(EnumerationError::StreamTooLarge {
            codes: count,
            cap: limits.max_codes,
        });
    }
    // partition by leading symbol; each worker dedups locally, merge is a set union
    let mut heads = symbols.clone();
    heads.dedup();
    let parts: Vec<BTreeSet<CanonicalCode>> = heads
        .par_iter()
        .map(|&head| {
            let mut rest = symbols.clone();
            let at = rest.iter().position(|&s| s == head).expect("head is a symbol");
            rest.remove(at);
            let mut local = BTreeSet::new();
            let mut code = Vec::with_capacity(n - 2);
            for tail in DistinctPermutations::new(rest) {
                code.clear();
                code.push(head);
                code.extend_from_slice(&tail);
                let t = Tree::new_unchecked(n, decode_edges(&code, n));
                local.insert(canonical_code(&t));
            }
            local
        })
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

/// Distinct permutations of a multiset in lexicographic order.
#[derive(Clone, Debug)]
pub struct DistinctPermutations<T> {
    current: Vec<T>,
    done: bool,
}

impl<T: Ord + Clone> DistinctPermutations<T> {
    pub fn new(mut items: Vec<T>) -> Self {
        items.sort();
        DistinctPermutations {
            current: items,
            done: false,
        }
    }
}

impl<T: Ord + Clone> Iterator for DistinctPermutations<T> {
    type Item = Vec<T>;

    fn next(&mut self) -> Option<Vec<T>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        self.done = !next_permutation(&mut self.current);
        Some(out)
    }
}

/// Advances to the next lexicographic permutation; false after the last one.
pub fn next_permutation<T: Ord>(items: &mut [T]) -> bool {
    let n = items.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| items[i] < items[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| items[j] > items[i]).expect("pivot has a successor");
    items.swap(i, j);
    items[i + 1..].reverse();
    true
}

/// `len! / prod(multiplicity!)`.
pub fn multiset_permutation_count<T: Ord + Clone>(items: &[T]) -> u128 {
    let mut sorted = items.to_vec();
    sorted.sort();
    let mut result: u128 = 1;
    let mut placed: u128 = 0;
    let mut run: u128 = 0;
    for (i, x) in sorted.iter().enumerate() {
        run = if i > 0 && sorted[i - 1] == *x { run + 1 } else { 1 };
        placed += 1;
        // running product of binomials keeps every step integral
        result = result.saturating_mul(placed) / run;
    }
    result
}
