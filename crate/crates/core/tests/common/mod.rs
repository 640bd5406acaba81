//! Brute-force oracles that share no code with the library.
#![allow(dead_code)]

use irrtree::Tree;

/// Every labeled tree on `0..n`, as sorted edge lists, by trying every
/// `(n-1)`-subset of the complete graph's edges.
pub fn labeled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 1 {
        return vec![Vec::new()];
    }
    let all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(n - 1);
    choose(&all, 0, n - 1, &mut pick, &mut |edges| {
        if spans(n, edges) {
            out.push(edges.to_vec());
        }
    });
    out
}

fn choose(
    items: &[(usize, usize)],
    from: usize,
    k: usize,
    pick: &mut Vec<(usize, usize)>,
    f: &mut impl FnMut(&[(usize, usize)]),
) {
    if pick.len() == k {
        f(pick);
        return;
    }
    for i in from..items.len() {
        if items.len() - i < k - pick.len() {
            break;
        }
        pick.push(items[i]);
        choose(items, i + 1, k, pick, f);
        pick.pop();
    }
}

fn spans(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &(a, b) in edges {
            let w = if a == u { b } else if b == u { a } else { continue };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

fn adjacency(t: &Tree) -> Vec<Vec<bool>> {
    let n = t.order();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in t.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Backtracking search for an adjacency-preserving bijection.
pub fn brute_isomorphic(a: &Tree, b: &Tree) -> bool {
    let n = a.order();
    if n != b.order() {
        return false;
    }
    let (adj_a, adj_b) = (adjacency(a), adjacency(b));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(0, a, b, &adj_a, &adj_b, &mut map, &mut used)
}

fn extend(
    u: usize,
    a: &Tree,
    b: &Tree,
    adj_a: &[Vec<bool>],
    adj_b: &[Vec<bool>],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if u == map.len() {
        return true;
    }
    for x in 0..map.len() {
        if used[x] || a.degree(u) != b.degree(x) {
            continue;
        }
        if (0..u).any(|w| adj_a[u][w] != adj_b[x][map[w]]) {
            continue;
        }
        map[u] = x;
        used[x] = true;
        if extend(u + 1, a, b, adj_a, adj_b, map, used) {
            return true;
        }
        used[x] = false;
    }
    map[u] = usize::MAX;
    false
}

/// Isomorphism classes of `trees` by brute force, one representative each.
pub fn classes(trees: impl IntoIterator<Item = Tree>) -> Vec<Tree> {
    let mut reps: Vec<Tree> = Vec::new();
    for t in trees {
        if !reps.iter().any(|r| brute_isomorphic(r, &t)) {
            reps.push(t);
        }
    }
    reps
}

/// `|d(u) - d(v)|` summed over unordered vertex pairs.
pub fn pairwise_total(t: &Tree) -> u64 {
    let d = t.degrees();
    let mut s = 0;
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            s += d[i].abs_diff(d[j]) as u64;
        }
    }
    s
}

/// `(irr, sigma, m1)` straight from the edge list.
pub fn edge_sums(n: usize, edges: &[(usize, usize)]) -> (u64, u64, u64) {
    let mut deg = vec![0u64; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut irr = 0;
    let mut sigma = 0;
    for &(u, v) in edges {
        let d = deg[u].abs_diff(deg[v]);
        irr += d;
        sigma += d * d;
    }
    (irr, sigma, deg.iter().map(|d| d * d).sum())
}

/// Unlabeled tree counts for orders 1..=10.
pub const TREE_COUNTS: [usize; 10] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
