//! Exact irregularity indices on trees.
//!
//! Computes the Albertson index `irr`, total irregularity `irr_T`, the Sigma
//! index and the two Zagreb indices; enumerates unlabeled trees by order or
//! degree sequence; evaluates a set of closed-form degree-tuple formulas; and
//! checks a catalog of statements about these indices against exhaustive
//! oracles.
//!
//! ```
//! use irrtree::{builders::star, compute_indices};
//!
//! let b = compute_indices(&star(4));
//! assert_eq!((b.irr, b.sigma), (12, 36));
//! ```

pub mod builders;
pub mod canon;
pub mod claims;
pub mod degseq;
pub mod enumeration;
pub mod error;
pub mod fixtures;
pub mod formulas;
pub mod indices;
pub mod io;
pub mod prufer;
pub mod relocation;
pub mod tree;

pub use canon::{canonical_code, is_isomorphic, CanonicalCode};
pub use claims::{run_report, verify, ClaimParams, ClaimReport, ClaimResult, Verdict};
pub use degseq::{validate_tree_sequence, DegreeSequence};
pub use enumeration::{all_trees, trees_with_degree_sequence, EnumerationLimits, TreeStream};
pub use formulas::{evaluate_formula, FormulaId, FormulaResult};
pub use indices::{compute_indices, IndexBundle, IndexKind};
pub use io::parse_tree;
pub use prufer::{prufer_decode, prufer_encode, PruferCode};
pub use relocation::{relocate_leaf, RelocationStep};
pub use tree::{SupportMode, Tree, Vertex};
