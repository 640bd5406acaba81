//! Canonical codes and isomorphism testing for unrooted trees.
//!
//! The canonical code is the AHU parenthesis string of the tree rooted at its
//! center; a bicentral tree takes the lexicographically smaller of its two
//! rooted strings. `is_isomorphic` takes a separate route (integer-interned
//! AHU labels) so the two can be checked against each other.

use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::tree::{Tree, Vertex};

const OPEN: u8 = b'(';
const CLOSE: u8 = b')';

/// Relabelling-invariant byte encoding of a tree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Parses a parenthesis string such as `(()())`.
    pub fn parse(text: &str) -> Option<CanonicalCode> {
        let bytes = text.trim().as_bytes().to_vec();
        let mut depth = 0i64;
        for (i, &b) in bytes.iter().enumerate() {
            depth += match b {
                OPEN => 1,
                CLOSE => -1,
                _ => return None,
            };
            if depth < 0 || (depth == 0 && i + 1 != bytes.len()) {
                return None;
            }
        }
        (depth == 0 && !bytes.is_empty()).then_some(CanonicalCode(bytes))
    }

    /// Vertex count encoded by this code.
    pub fn order(&self) -> usize {
        self.0.len() / 2
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // only '(' and ')' are ever stored
        f.write_str(std::str::from_utf8(&self.0).unwrap_or_default())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// AHU code of `t` rooted at `root`.
pub fn rooted_code(t: &Tree, root: Vertex) -> Vec<u8> {
    let (parent, order) = t.bfs_parents(root);
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); t.order()];
    for &v in order.iter().rev() {
        let mut children: Vec<Vec<u8>> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| parent[w] == v && w != v)
            .map(|&w| std::mem::take(&mut codes[w]))
            .collect();
        children.sort_unstable();
        let len = 2 + children.iter().map(Vec::len).sum::<usize>();
        let mut code = Vec::with_capacity(len);
        code.push(OPEN);
        for c in children {
            code.extend_from_slice(&c);
        }
        code.push(CLOSE);
        codes[v] = code;
    }
    std::mem::take(&mut codes[root])
}

pub fn canonical_code(t: &Tree) -> CanonicalCode {
    let code = t
        .centers()
        .into_iter()
        .map(|c| rooted_code(t, c))
        .min()
        .expect("every tree has a center");
    CanonicalCode(code)
}

impl Tree {
    /// Rebuilds the tree a canonical code describes, labelling vertices in
    /// preorder of the parenthesis string (the root is vertex 0).
    pub fn from_canonical(code: &CanonicalCode) -> Tree {
        let mut edges = Vec::with_capacity(code.order().saturating_sub(1));
        let mut stack: Vec<Vertex> = Vec::new();
        let mut next = 0;
        for &b in code.as_bytes() {
            if b == OPEN {
                if let Some(&p) = stack.last() {
                    edges.push((p, next));
                }
                stack.push(next);
                next += 1;
            } else {
                stack.pop();
            }
        }
        if next == 1 {
            return Tree::singleton();
        }
        Tree::new_unchecked(next, edges)
    }

    /// Copy of the tree relabelled into canonical form.
    pub fn canonical_form(&self) -> Tree {
        Tree::from_canonical(&canonical_code(self))
    }
}

/// Shared interner mapping sorted child-label lists to small integers, so
/// labels computed on different trees are comparable.
#[derive(Default)]
struct LabelInterner {
    ids: HashMap<Vec<u32>, u32>,
}

impl LabelInterner {
    fn rooted_label(&mut self, t: &Tree, root: Vertex) -> u32 {
        let (parent, order) = t.bfs_parents(root);
        let mut label = vec![0u32; t.order()];
        for &v in order.iter().rev() {
            let mut key: Vec<u32> = t
                .neighbors(v)
                .iter()
                .filter(|&&w| parent[w] == v && w != v)
                .map(|&w| label[w])
                .collect();
            key.sort_unstable();
            let fresh = self.ids.len() as u32;
            label[v] = *self.ids.entry(key).or_insert(fresh);
        }
        label[root]
    }
}

/// True iff an adjacency-preserving bijection between the trees exists.
pub fn is_isomorphic(a: &Tree, b: &Tree) -> bool {
    if a.order() != b.order() || a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    let (ca, cb) = (a.centers(), b.centers());
    if ca.len() != cb.len() {
        return false;
    }
    let mut interner = LabelInterner::default();
    let target = interner.rooted_label(a, ca[0]);
    cb.iter().any(|&c| interner.rooted_label(b, c) == target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{caterpillar, path, star};

    #[test]
    fn relabelled_path_has_same_code() {
        let p = path(4);
        let q = p.relabel(&[2, 0, 3, 1]).unwrap();
        assert_ne!(p, q);
        assert_eq!(canonical_code(&p), canonical_code(&q));
        assert!(is_isomorphic(&p, &q));
    }

    #[test]
    fn path_and_star_differ() {
        assert_ne!(canonical_code(&path(4)), canonical_code(&star(3)));
        assert!(!is_isomorphic(&path(4), &star(3)));
    }

    #[test]
    fn broom_and_spider_share_degrees_but_not_shape() {
        let broom = caterpillar(&[2, 2, 3]).unwrap();
        let spider = caterpillar(&[2, 3, 2]).unwrap();
        assert_eq!(broom.degree_sequence(), vec![3, 2, 2, 1, 1, 1]);
        assert_eq!(spider.degree_sequence(), broom.degree_sequence());
        assert!(!is_isomorphic(&broom, &spider));
        assert_ne!(canonical_code(&broom), canonical_code(&spider));
    }

    #[test]
    fn known_codes() {
        assert_eq!(canonical_code(&Tree::singleton()).to_string(), "()");
        assert_eq!(canonical_code(&path(3)).to_string(), "(()())");
        assert_eq!(canonical_code(&star(3)).to_string(), "(()()())");
        // bicentral: rooted at either center gives ((())())
        assert_eq!(canonical_code(&path(4)).to_string(), "((())())");
    }

    #[test]
    fn decode_round_trip() {
        for t in [path(7), star(5), caterpillar(&[3, 4, 2]).unwrap()] {
            let code = canonical_code(&t);
            let rebuilt = Tree::from_canonical(&code);
            assert!(is_isomorphic(&t, &rebuilt));
            assert_eq!(canonical_code(&rebuilt), code);
            assert_eq!(CanonicalCode::parse(&code.to_string()), Some(code));
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(CanonicalCode::parse("").is_none());
        assert!(CanonicalCode::parse("(()").is_none());
        assert!(CanonicalCode::parse("()()").is_none());
        assert!(CanonicalCode::parse("(x)").is_none());
    }
}
