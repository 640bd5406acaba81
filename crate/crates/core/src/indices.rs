//! Degree-based irregularity and Zagreb indices.
//!
//! Every value here is an exact integer. With `n <= 10^4` and maximum degree
//! `<= 10^4` the largest quantity, `sigma <= m * Delta^2`, stays below `10^12`;
//! the squared comparisons of the sandwich bound are done in `u128`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::TreeError;
use crate::tree::{Tree, Vertex};

/// The five integer invariants of one tree.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct IndexBundle {
    /// Albertson index: sum over edges of `|d(u) - d(v)|`.
    pub irr: u64,
    /// Total irregularity: `|d(u) - d(v)|` over unordered vertex pairs.
    pub irr_total: u64,
    /// Sigma index: sum over edges of `(d(u) - d(v))^2`.
    pub sigma: u64,
    /// First Zagreb index: sum of squared degrees.
    pub m1: u64,
    /// Second Zagreb index: sum over edges of `d(u) * d(v)`.
    pub m2: u64,
}

/// Which index an extremal search or sweep looks at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexKind {
    Irr,
    Sigma,
    IrrTotal,
}

impl IndexKind {
    pub fn of(self, b: &IndexBundle) -> u64 {
        match self {
            IndexKind::Irr => b.irr,
            IndexKind::Sigma => b.sigma,
            IndexKind::IrrTotal => b.irr_total,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            IndexKind::Irr => "irr",
            IndexKind::Sigma => "sigma",
            IndexKind::IrrTotal => "irr_T",
        }
    }

    pub fn parse(s: &str) -> Option<IndexKind> {
        match s {
            "irr" => Some(IndexKind::Irr),
            "sigma" => Some(IndexKind::Sigma),
            "irr_T" | "irr_t" | "irrT" | "total" => Some(IndexKind::IrrTotal),
            _ => None,
        }
    }
}

pub fn compute_indices(t: &Tree) -> IndexBundle {
    let d = t.degrees();
    let mut b = IndexBundle::default();
    for &(u, v) in t.edges() {
        let (du, dv) = (d[u] as u64, d[v] as u64);
        let gap = du.abs_diff(dv);
        b.irr += gap;
        b.sigma += gap * gap;
        b.m2 += du * dv;
    }
    b.m1 = d.iter().map(|&x| (x * x) as u64).sum();
    b.irr_total = pairwise_total_irregularity(&d);
    b
}

/// `sum over {u, v}` of `|d(u) - d(v)|`, each unordered pair counted once.
/// Vertices are grouped by degree so pairs inside one group (gap 0) are skipped.
fn pairwise_total_irregularity(degrees: &[usize]) -> u64 {
    let mut histogram: BTreeMap<usize, u64> = BTreeMap::new();
    for &x in degrees {
        *histogram.entry(x).or_default() += 1;
    }
    let classes: Vec<(usize, u64)> = histogram.into_iter().collect();
    let mut total = 0;
    for (i, &(a, ca)) in classes.iter().enumerate() {
        for &(b, cb) in &classes[i + 1..] {
            total += ca * cb * a.abs_diff(b) as u64;
        }
    }
    total
}

pub fn albertson(t: &Tree) -> u64 {
    t.edges()
        .iter()
        .map(|&(u, v)| t.degree(u).abs_diff(t.degree(v)) as u64)
        .sum()
}

pub fn sigma(t: &Tree) -> u64 {
    t.edges()
        .iter()
        .map(|&(u, v)| {
            let g = t.degree(u).abs_diff(t.degree(v)) as u64;
            g * g
        })
        .sum()
}

/// Albertson index of an arbitrary simple graph given as an edge list.
pub fn albertson_of_edges(n: usize, edges: &[(Vertex, Vertex)]) -> u64 {
    let mut d = vec![0usize; n];
    for &(u, v) in edges {
        d[u] += 1;
        d[v] += 1;
    }
    edges.iter().map(|&(u, v)| d[u].abs_diff(d[v]) as u64).sum()
}

/// Total irregularity from the sorted degree sequence:
/// `2(n+1)m - 2 * sum_i i*d_i` with `d_1 >= ... >= d_n`.
pub fn total_irregularity_by_sequence(t: &Tree) -> u64 {
    let n = t.order() as i128;
    let m = t.size() as i128;
    let weighted: i128 = t
        .degree_sequence()
        .iter()
        .enumerate()
        .map(|(i, &d)| (i as i128 + 1) * d as i128)
        .sum();
    let value = 2 * (n + 1) * m - 2 * weighted;
    u64::try_from(value).expect("total irregularity is non-negative")
}

/// Sum of edge imbalances along the unique `u`-`v` path.
pub fn path_imbalance(t: &Tree, u: Vertex, v: Vertex) -> Result<u64, TreeError> {
    let path = t.path(u, v)?;
    Ok(path
        .windows(2)
        .map(|w| t.degree(w[0]).abs_diff(t.degree(w[1])) as u64)
        .sum())
}

/// `sigma <= irr^2` and `irr^2 <= m * sigma`, the squared form of
/// `sqrt(sigma) <= irr <= sqrt(m * sigma)`.
pub fn sandwich_holds(b: &IndexBundle, edges: usize) -> bool {
    let irr_sq = (b.irr as u128) * (b.irr as u128);
    let sigma = b.sigma as u128;
    sigma <= irr_sq && irr_sq <= edges as u128 * sigma
}

/// `sum over edges of (d(u) + d(v))`, which equals the first Zagreb index.
pub fn m1_by_edges(t: &Tree) -> u64 {
    t.edges()
        .iter()
        .map(|&(u, v)| (t.degree(u) + t.degree(v)) as u64)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{path, star};
    use crate::fixtures::figure_two;

    #[test]
    fn four_path() {
        let b = compute_indices(&path(4));
        assert_eq!(
            b,
            IndexBundle {
                irr: 2,
                irr_total: 4,
                sigma: 2,
                m1: 10,
                m2: 8
            }
        );
    }

    #[test]
    fn four_leaf_star() {
        let b = compute_indices(&star(4));
        assert_eq!((b.irr, b.sigma, b.irr_total, b.m1, b.m2), (12, 36, 12, 20, 16));
    }

    #[test]
    fn figure_two_values() {
        let b = compute_indices(&figure_two());
        assert_eq!((b.irr, b.sigma), (20, 54));
    }

    #[test]
    fn sequence_form_examples() {
        assert_eq!(total_irregularity_by_sequence(&star(3)), 6);
        assert_eq!(compute_indices(&star(3)).irr_total, 6);
        assert_eq!(total_irregularity_by_sequence(&path(3)), 2);
        assert_eq!(compute_indices(&path(3)).irr_total, 2);
        assert_eq!(total_irregularity_by_sequence(&path(2)), 0);
    }

    #[test]
    fn regular_edge_is_all_zero_irregularity() {
        let b = compute_indices(&path(2));
        assert_eq!((b.irr, b.irr_total, b.sigma), (0, 0, 0));
        assert_eq!(compute_indices(&Tree::singleton()), IndexBundle::default());
    }

    #[test]
    fn imbalance_along_paths() {
        assert_eq!(path_imbalance(&path(4), 0, 3).unwrap(), 2);
        assert_eq!(path_imbalance(&star(4), 0, 2).unwrap(), 3);
        assert_eq!(path_imbalance(&figure_two(), 1, 8).unwrap(), 6);
        assert_eq!(path_imbalance(&figure_two(), 5, 5).unwrap(), 0);
        assert!(path_imbalance(&path(3), 0, 9).is_err());
    }

    #[test]
    fn disjoint_stars() {
        // two 3-leaf stars side by side
        let edges = [(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7)];
        assert_eq!(albertson_of_edges(8, &edges), 12);
    }
}
