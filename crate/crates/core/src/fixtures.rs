//! Transcribed reference data: the strong-support example tree and the
//! degree-sequence table of irr bounds.

use serde::Serialize;

use crate::error::ClaimError;
use crate::tree::Tree;

/// Raw transcription of the table (header + 24 rows).
pub const TABLE1_CSV: &str = include_str!("../data/table1.csv");

/// Edge list of the strong-support example tree.
pub const FIGURE2_EDGES: &str = include_str!("../data/fig2.edges");

/// Center `v0 = 0` joined to `v0,1..v0,4 = 1..4`; vertex 3 carries leaves
/// 5, 6 and vertex 4 carries leaves 7, 8, 9 (as drawn).
pub fn figure_two() -> Tree {
    Tree::from_edges(
        10,
        &[(0, 1), (0, 2), (0, 3), (0, 4), (3, 5), (3, 6), (4, 7), (4, 8), (4, 9)],
    )
    .expect("fixture is a tree")
}

/// Degrees of `(v0, v0,1, v0,2, v0,3, v0,4)` stated in the accompanying prose,
/// which disagree with the drawing at `v0,4` (3 instead of 4).
pub const FIGURE2_PROSE_DEGREES: [i64; 5] = [4, 1, 1, 3, 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub d: [i64; 4],
    pub irr_max: i64,
    pub irr_min: i64,
    pub diff: i64,
}

pub fn table1() -> Result<Vec<Table1Row>, ClaimError> {
    let mut rows = Vec::new();
    for (lineno, line) in TABLE1_CSV.lines().enumerate().skip(1) {
        let fields: Result<Vec<i64>, _> = line.split(',').map(|f| f.trim().parse::<i64>()).collect();
        let fields = fields.map_err(|e| ClaimError::Fixture(format!("table1 line {}: {e}", lineno + 1)))?;
        let [d1, d2, d3, d4, irr_max, irr_min, diff] = fields[..] else {
            return Err(ClaimError::Fixture(format!(
                "table1 line {}: expected 7 fields",
                lineno + 1
            )));
        };
        rows.push(Table1Row {
            d: [d1, d2, d3, d4],
            irr_max,
            irr_min,
            diff,
        });
    }
    Ok(rows)
}

/// Orderings listed as attaining the maximum in the permutation example.
pub const PERM_EXAMPLE_MAX: [[i64; 6]; 17] = [
    [18, 4, 10, 14, 8, 20],
    [18, 4, 10, 14, 8, 20],
    [18, 4, 14, 8, 10, 20],
    [18, 4, 14, 10, 8, 20],
    [18, 8, 10, 14, 4, 20],
    [18, 8, 14, 4, 10, 20],
    [18, 8, 14, 10, 4, 20],
    [18, 10, 4, 14, 8, 20],
    [18, 10, 8, 14, 4, 20],
    [20, 4, 10, 14, 8, 18],
    [20, 4, 14, 8, 10, 18],
    [20, 4, 14, 10, 8, 18],
    [20, 8, 10, 14, 4, 18],
    [20, 8, 14, 4, 10, 18],
    [20, 8, 14, 10, 4, 18],
    [20, 10, 4, 14, 8, 18],
    [20, 10, 8, 14, 4, 18],
];

/// Orderings listed as attaining the minimum in the permutation example.
pub const PERM_EXAMPLE_MIN: [[i64; 6]; 17] = [
    [4, 10, 14, 18, 20, 8],
    [4, 10, 14, 18, 20, 8],
    [4, 10, 14, 20, 18, 8],
    [4, 10, 18, 20, 14, 8],
    [4, 10, 20, 18, 14, 8],
    [4, 14, 18, 20, 10, 8],
    [4, 14, 20, 18, 10, 8],
    [4, 18, 20, 14, 10, 8],
    [4, 20, 18, 14, 10, 8],
    [8, 10, 14, 18, 20, 4],
    [8, 10, 14, 20, 18, 4],
    [8, 10, 18, 20, 14, 4],
    [8, 10, 20, 18, 14, 4],
    [8, 14, 18, 20, 10, 4],
    [8, 14, 20, 18, 10, 4],
    [8, 18, 20, 14, 10, 4],
    [8, 20, 18, 14, 10, 4],
];

pub const PERM_EXAMPLE_BASE: [i64; 6] = [4, 8, 10, 14, 18, 20];
pub const PERM_EXAMPLE_REPORTED_MAX: i64 = 14802;
pub const PERM_EXAMPLE_REPORTED_MIN: i64 = 14196;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_tree;

    #[test]
    fn table_has_24_rows() {
        let rows = table1().unwrap();
        assert_eq!(rows.len(), 24);
        assert_eq!(rows[0].d, [18, 12, 6, 4]);
        assert_eq!((rows[0].irr_max, rows[0].irr_min), (454, 438));
    }

    #[test]
    fn edge_file_matches_builder() {
        let parsed = parse_tree(FIGURE2_EDGES).unwrap();
        assert_eq!(parsed.tree, figure_two());
    }
}
