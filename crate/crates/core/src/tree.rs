//! Immutable tree substrate: adjacency, degrees, leaves and support vertices.

use std::collections::VecDeque;

use crate::error::TreeError;

/// Vertex identifier, dense in `0..n`.
pub type Vertex = usize;

/// A finite tree on the vertex set `0..n`.
///
/// Construction validates that the edge set is simple, has exactly `n - 1`
/// members and connects every vertex. Edges are stored normalised as `(u, v)`
/// with `u < v` and sorted, so two trees compare equal exactly when they have
/// the same labelled edge set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tree {
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<Vertex>>,
}

/// Which vertices count as "strong support" vertices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SupportMode {
    /// Adjacent to at least two leaves (operative reading).
    #[default]
    TwoLeaves,
    /// Adjacent to at least one leaf.
    OneLeaf,
}

impl Tree {
    /// Builds a tree on `n` vertices from an edge list.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Tree, TreeError> {
        if n == 0 {
            return Err(TreeError::Empty);
        }
        if edges.len() != n - 1 {
            return Err(TreeError::EdgeCount {
                expected: n - 1,
                found: edges.len(),
            });
        }
        let mut uf = UnionFind::new(n);
        let mut normalised = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(TreeError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(TreeError::SelfLoop(u));
            }
            normalised.push((u.min(v), u.max(v)));
        }
        normalised.sort_unstable();
        if let Some(w) = normalised.windows(2).find(|w| w[0] == w[1]) {
            return Err(TreeError::DuplicateEdge(w[0].0, w[0].1));
        }
        // n - 1 distinct edges without a cycle connect all n vertices.
        for &(u, v) in &normalised {
            if !uf.union(u, v) {
                return Err(TreeError::Cycle(u, v));
            }
        }
        Ok(Tree::from_sorted_unchecked(n, normalised))
    }

    /// Builds a tree from edges already known to form a tree.
    pub(crate) fn new_unchecked(n: usize, edges: Vec<(Vertex, Vertex)>) -> Tree {
        let mut normalised: Vec<_> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        normalised.sort_unstable();
        let t = Tree::from_sorted_unchecked(n, normalised);
        debug_assert!(Tree::from_edges(n, t.edges()).is_ok());
        t
    }

    fn from_sorted_unchecked(n: usize, edges: Vec<(Vertex, Vertex)>) -> Tree {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Tree { edges, adjacency }
    }

    /// The single-vertex tree.
    pub fn singleton() -> Tree {
        Tree {
            edges: Vec::new(),
            adjacency: vec![Vec::new()],
        }
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges, always `order() - 1`.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    /// Degree of every vertex, indexed by vertex id.
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Degrees sorted non-increasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.order()
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.degree(v) == 1
    }

    pub fn leaves(&self) -> Vec<Vertex> {
        (0..self.order()).filter(|&v| self.is_leaf(v)).collect()
    }

    /// Number of leaf neighbours of `v`.
    pub fn leaf_neighbors(&self, v: Vertex) -> usize {
        self.adjacency[v].iter().filter(|&&w| self.is_leaf(w)).count()
    }

    /// Vertices adjacent to at least two leaves, ascending.
    pub fn strong_support_vertices(&self) -> Vec<Vertex> {
        self.support_vertices(SupportMode::TwoLeaves)
    }

    pub fn support_vertices(&self, mode: SupportMode) -> Vec<Vertex> {
        let threshold = match mode {
            SupportMode::TwoLeaves => 2,
            SupportMode::OneLeaf => 1,
        };
        (0..self.order())
            .filter(|&v| self.leaf_neighbors(v) >= threshold)
            .collect()
    }

    /// A tree is a caterpillar when deleting its leaves leaves a path.
    pub fn is_caterpillar(&self) -> bool {
        (0..self.order())
            .filter(|&v| !self.is_leaf(v))
            .all(|v| self.adjacency[v].iter().filter(|&&w| !self.is_leaf(w)).count() <= 2)
    }

    /// One or two central vertices, ascending.
    pub fn centers(&self) -> Vec<Vertex> {
        let n = self.order();
        if n <= 2 {
            return (0..n).collect();
        }
        let mut degree = self.degrees();
        let mut layer: Vec<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &leaf in &layer {
                for &w in &self.adjacency[leaf] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
            layer = next;
        }
        layer.sort_unstable();
        layer
    }

    /// Parent of every vertex in the BFS tree rooted at `root`, plus the
    /// BFS visiting order. The root's parent is itself.
    pub fn bfs_parents(&self, root: Vertex) -> (Vec<Vertex>, Vec<Vertex>) {
        let n = self.order();
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([root]);
        parent[root] = root;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &self.adjacency[v] {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        (parent, order)
    }

    /// The unique path from `u` to `v`, both endpoints included.
    pub fn path(&self, u: Vertex, v: Vertex) -> Result<Vec<Vertex>, TreeError> {
        for w in [u, v] {
            if !self.contains(w) {
                return Err(TreeError::VertexOutOfRange {
                    vertex: w,
                    order: self.order(),
                });
            }
        }
        let (parent, _) = self.bfs_parents(u);
        let mut path = vec![v];
        let mut cur = v;
        while cur != u {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        Ok(path)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Tree, TreeError> {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Tree::from_edges(self.order(), &edges)
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    /// Adds a new singleton set.
    pub(crate) fn push(&mut self) {
        self.parent.push(self.parent.len());
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already connected.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[rb] = ra;
        true
    }
}
