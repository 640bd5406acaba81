//! Catalog of checkable statements, each bound to an exact oracle.
//!
//! A claim is checked by sweeping its parameter space and recording every
//! instance that disagrees with the oracle. The verdict is `fails` exactly
//! when a violation (and therefore a witness) was found; `holds-with-notes`
//! marks results that depend on a chosen reading of the statement or that
//! carry a documented discrepancy.

mod arithmetic;
mod exhaustive;
mod extremal;
mod perm;
mod report;
mod transforms;

use std::collections::BTreeMap;
use std::fmt::Display;
use std::time::Instant;

use serde::Serialize;

use crate::error::ClaimError;
use crate::tree::{Tree, Vertex};

pub use extremal::{extremal_over_class, ExtremalResult, ExtremalWitness, Objective, TreeClass, DEFAULT_CLASS_MAX_ORDER};
pub use perm::{perm_search, Interpretation, PermSearchResult, PERM_MAX_LEN};
pub use report::{run_report, ClaimReport, ReportConfig, ReportEntry, ReportTotals};

/// Default cap on witnesses kept per claim.
pub const DEFAULT_MAX_WITNESSES: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleKind {
    ExhaustiveTrees,
    Arithmetic,
    TableFixture,
    PermutationSearch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub id: &'static str,
    /// The statement's label and a verbatim quote that locates it.
    pub anchor: &'static str,
    pub parameter_space: &'static str,
    pub oracle: OracleKind,
    /// Default value of the claim's size parameter, if it has one.
    pub default_size: Option<usize>,
}

const CATALOG: &[Claim] = &[
    Claim {
        id: "caterpillar-order",
        anchor: "caterpillar proposition: \"we have $n=m^2+m+2$\"",
        parameter_space: "spine (3,5,...,2m+1) for m = 1..=size",
        oracle: OracleKind::Arithmetic,
        default_size: Some(20),
    },
    Claim {
        id: "caterpillar-support",
        anchor: "caterpillar proposition: \"has a strong support vertex\"",
        parameter_space: "every caterpillar of order 3..=size, grouped by (n, pendant count)",
        oracle: OracleKind::ExhaustiveTrees,
        default_size: Some(14),
    },
    Claim {
        id: "cor-bounds",
        anchor: "degree-tuple corollaries: \"define the bound\", \"holds for all valid degree sequences\"",
        parameter_space: "4-term tuples realized by trees of order <= size",
        oracle: OracleKind::ExhaustiveTrees,
        default_size: Some(14),
    },
    Claim {
        id: "cor3-part1",
        anchor: "sigma corollary, part 1: \"For $d_3>3$, then\"",
        parameter_space: "3 < d3 <= d4 <= size",
        oracle: OracleKind::Arithmetic,
        default_size: Some(60),
    },
    Claim {
        id: "figure2",
        anchor: "strong support example: \"Albertson index is\"",
        parameter_space: "the drawn example tree",
        oracle: OracleKind::TableFixture,
        default_size: None,
    },
    Claim {
        id: "hyp-four",
        anchor: "order-four hypothesis: \"Let $T$ be tree of order $n=4$\"",
        parameter_space: "4-term tuples realized by trees of order <= size",
        oracle: OracleKind::ExhaustiveTrees,
        default_size: Some(14),
    },
    Claim {
        id: "irr-decrease",
        anchor: "transformation proposition: \"such that $\\operatorname{irr}(T^{\\prime}) < \\operatorname{irr}(T)$\"",
        parameter_space: "every leaf relocation with lambda >= 3 on trees of order <= size",
        oracle: OracleKind::ExhaustiveTrees,
        default_size: Some(12),
    },
    Claim {
        id: "irr-decrease-bound",
        anchor: "transformation proof: \"$3\\lambda-6>0$\"",
        parameter_space: "every leaf relocation with lambda >= 3 on trees of order <= size",
        oracle: OracleKind::ExhaustiveTrees,
        default_size: Some(12),
    },
    Claim {
        id: "irr-upper-tree",
        anchor: "tree bound: \"for any tree of order $n\\geq 2$\"",
        parameter_space: "every tree of order 2..=size",
        oracle: OracleKind::ExhaustiveTrees,
        default_size: Some(10),
    },
    Claim {
        id: "irrT-seq-formula",
        anchor: "total irregularity: \"irr(G)=2(n+1)m - 2 \\sum\"",
        parameter_space: "every tree of order 1..=size",
        oracle: OracleKind::ExhaustiveTrees,
        default_size: Some(9),
    },
    Claim {
        id: "m1-edge-identity",
        anchor: "Zagreb identity: \"an alternative expressions introduced\"",
        parameter_space: "every tree of order 1..=size",
        oracle: OracleKind::ExhaustiveTrees,
        default_size: Some(10),
    },
    Claim {
        id: "perm-example",
        anchor: "sigma permutation example: \"for Max sigma we have\"",
        parameter_space: "orderings of (4,8,10,14,18,20) under both interpretations",
        oracle: OracleKind::PermutationSearch,
        default_size: None,
    },
    Claim {
        id: "resn1",
        anchor: "degree-sum theorem: \"with $\\deg(v)>1$, then satisfying\"",
        parameter_space: "pairs of tree-graphical sequences with lengths i > j in 2..=size",
        oracle: OracleKind::Arithmetic,
        default_size: Some(8),
    },
    Claim {
        id: "sandwich",
        anchor: "Albertson/Sigma relation: \"relation between Albertson index and Sigma index\"",
        parameter_space: "every tree of order 1..=size",
        oracle: OracleKind::ExhaustiveTrees,
        default_size: Some(10),
    },
    Claim {
        id: "seq-monotonicity",
        anchor: "sequence proposition: \"be tow non increasing degree sequence\"",
        parameter_space: "majorization-comparable tree sequences of equal length 2..=size",
        oracle: OracleKind::ExhaustiveTrees,
        default_size: Some(8),
    },
    Claim {
        id: "sigma-decrease",
        anchor: "sigma transformation: \"that $\\sigma(T^{\\prime}) < \\sigma(T)$\"",
        parameter_space: "leaf relocations with 3 < lambda < 10 on trees of order <= size",
        oracle: OracleKind::ExhaustiveTrees,
        default_size: Some(13),
    },
    Claim {
        id: "sigma-five",
        anchor: "five-term sigma hypothesis: \"then Sigma index of $T$ given by\"",
        parameter_space: "5-term ascending tuples realized by trees of order <= size",
        oracle: OracleKind::ExhaustiveTrees,
        default_size: Some(12),
    },
    Claim {
        id: "sigma-increase",
        anchor: "sigma transformation: \"that $\\sigma(T^{\\prime}) > \\sigma(T)$\"",
        parameter_space: "leaf relocations with lambda >= 11 on trees of order <= size",
        oracle: OracleKind::ExhaustiveTrees,
        default_size: Some(14),
    },
    Claim {
        id: "sigma-ordered",
        anchor: "ordered sigma theorem: \"then Sigma index among tree given as\"",
        parameter_space: "ascending spines of length 1..=size with values 1..=6",
        oracle: OracleKind::Arithmetic,
        default_size: Some(8),
    },
    Claim {
        id: "star-albertson",
        anchor: "star lemma: \"=n(n-1)\"",
        parameter_space: "stars with 3..=size leaves",
        oracle: OracleKind::Arithmetic,
        default_size: Some(50),
    },
    Claim {
        id: "star-iso-sum",
        anchor: "star lemma: \"irr(T_1 \\cong T_2)=irr(T_1)+irr(T_2)\"",
        parameter_space: "pairs of isomorphic stars with 3..=size leaves",
        oracle: OracleKind::Arithmetic,
        default_size: Some(50),
    },
    Claim {
        id: "table1",
        anchor: "worked example table: \"Degree Sequence according to the term\"",
        parameter_space: "the 24 printed rows",
        oracle: OracleKind::TableFixture,
        default_size: None,
    },
    Claim {
        id: "three-c",
        anchor: "three-degree proposition: \"then Albertson index define as\"",
        parameter_space: "3-term tuples realized by trees of order <= size",
        oracle: OracleKind::ExhaustiveTrees,
        default_size: Some(14),
    },
];

/// Every claim, sorted by id.
pub fn catalog() -> &'static [Claim] {
    CATALOG
}

pub fn find_claim(id: &str) -> Result<&'static Claim, ClaimError> {
    CATALOG
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| ClaimError::UnknownClaim(id.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "holds")]
    Holds,
    #[serde(rename = "fails")]
    Fails,
    #[serde(rename = "holds-with-notes")]
    HoldsWithNotes,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::HoldsWithNotes => "holds-with-notes",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClaimParams {
    /// Overrides the claim's size parameter.
    pub n_max: Option<usize>,
    /// Witness cap; `None` keeps every witness. A cap of 0 is raised to 1.
    pub max_witnesses: Option<usize>,
    /// Record wall time in the result.
    pub timed: bool,
}

impl Default for ClaimParams {
    fn default() -> Self {
        ClaimParams {
            n_max: None,
            max_witnesses: Some(DEFAULT_MAX_WITNESSES),
            timed: false,
        }
    }
}

/// A counterexample: a tree, a tuple, or both.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<(Vertex, Vertex)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tuple: Option<Vec<i64>>,
}

impl Witness {
    pub fn tree(label: impl Into<String>, t: &Tree) -> Witness {
        Witness {
            label: label.into(),
            edges: Some(t.edges().to_vec()),
            tuple: None,
        }
    }

    pub fn tuple(label: impl Into<String>, tuple: Vec<i64>) -> Witness {
        Witness {
            label: label.into(),
            edges: None,
            tuple: Some(tuple),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub anchor: String,
    pub verdict: Verdict,
    pub parameters: BTreeMap<String, String>,
    pub instances: u64,
    pub violations: u64,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// Check `id` with `params`.
pub fn verify(id: &str, params: &ClaimParams) -> Result<ClaimResult, ClaimError> {
    let claim = find_claim(id)?;
    let start = Instant::now();
    let size = params.n_max.or(claim.default_size);
    let mut sweep = Sweep::new(params);
    if let Some(size) = size {
        sweep.param("size", size);
    }
    let size = size.unwrap_or(0);
    match claim.id {
        "caterpillar-order" => arithmetic::caterpillar_order(&mut sweep, size),
        "caterpillar-support" => exhaustive::caterpillar_support(&mut sweep, size)?,
        "cor-bounds" => extremal::cor_bounds(&mut sweep, size)?,
        "cor3-part1" => arithmetic::cor3_part1(&mut sweep, size),
        "figure2" => arithmetic::figure2(&mut sweep)?,
        "hyp-four" => extremal::hyp_four(&mut sweep, size)?,
        "irr-decrease" => transforms::irr_decrease(&mut sweep, size)?,
        "irr-decrease-bound" => transforms::irr_decrease_bound(&mut sweep, size)?,
        "irr-upper-tree" => exhaustive::irr_upper_tree(&mut sweep, size)?,
        "irrT-seq-formula" => exhaustive::irr_total_formula(&mut sweep, size)?,
        "m1-edge-identity" => exhaustive::m1_edge_identity(&mut sweep, size)?,
        "perm-example" => perm::perm_example(&mut sweep)?,
        "resn1" => arithmetic::resn1(&mut sweep, size),
        "sandwich" => exhaustive::sandwich(&mut sweep, size)?,
        "seq-monotonicity" => extremal::seq_monotonicity(&mut sweep, size)?,
        "sigma-decrease" => transforms::sigma_decrease(&mut sweep, size)?,
        "sigma-five" => extremal::sigma_five(&mut sweep, size)?,
        "sigma-increase" => transforms::sigma_increase(&mut sweep, size)?,
        "sigma-ordered" => arithmetic::sigma_ordered(&mut sweep, size)?,
        "star-albertson" => arithmetic::star_albertson(&mut sweep, size),
        "star-iso-sum" => arithmetic::star_iso_sum(&mut sweep, size),
        "table1" => arithmetic::table1(&mut sweep)?,
        "three-c" => extremal::three_c(&mut sweep, size)?,
        other => unreachable!("catalog entry {other} has no checker"),
    }
    let elapsed = params.timed.then(|| start.elapsed().as_millis() as u64);
    Ok(sweep.finish(claim, elapsed))
}

/// Accumulates one claim's counts, witnesses and notes.
pub(crate) struct Sweep {
    cap: Option<usize>,
    parameters: BTreeMap<String, String>,
    instances: u64,
    violations: u64,
    witnesses: Vec<Witness>,
    notes: Vec<String>,
    reading_dependent: bool,
}

impl Sweep {
    fn new(params: &ClaimParams) -> Sweep {
        Sweep {
            cap: params.max_witnesses.map(|k| k.max(1)),
            parameters: BTreeMap::new(),
            instances: 0,
            violations: 0,
            witnesses: Vec::new(),
            notes: Vec::new(),
            reading_dependent: false,
        }
    }

    pub(crate) fn param(&mut self, key: &str, value: impl Display) {
        self.parameters.insert(key.to_string(), value.to_string());
    }

    /// Count one instance; on failure count a violation and keep the witness
    /// while under the cap.
    pub(crate) fn check(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.instances += 1;
        if !ok {
            self.violations += 1;
            if self.cap.is_none_or(|cap| self.witnesses.len() < cap) {
                self.witnesses.push(witness());
            }
        }
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// The outcome depends on a chosen reading or carries a recorded mismatch.
    pub(crate) fn reading_dependent(&mut self) {
        self.reading_dependent = true;
    }

    fn finish(mut self, claim: &Claim, elapsed_ms: Option<u64>) -> ClaimResult {
        if self.instances == 0 {
            self.note("no instances in the swept range; the statement is vacuous here");
            self.reading_dependent = true;
        }
        if self.violations as usize > self.witnesses.len() {
            self.note(format!(
                "{} of {} witnesses shown",
                self.witnesses.len(),
                self.violations
            ));
        }
        let verdict = if self.violations > 0 {
            Verdict::Fails
        } else if self.reading_dependent {
            Verdict::HoldsWithNotes
        } else {
            Verdict::Holds
        };
        ClaimResult {
            id: claim.id.to_string(),
            anchor: claim.anchor.to_string(),
            verdict,
            parameters: self.parameters,
            instances: self.instances,
            violations: self.violations,
            witnesses: self.witnesses,
            notes: self.notes,
            elapsed_ms,
        }
    }
}

fn fmt_tuple<T: Display>(values: &[T]) -> String {
    let parts: Vec<String> = values.iter().map(T::to_string).collect();
    format!("({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sorted_and_unique() {
        let ids: Vec<&str> = catalog().iter().map(|c| c.id).collect();
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn unknown_claim() {
        assert_eq!(
            verify("no-such-claim", &ClaimParams::default()),
            Err(ClaimError::UnknownClaim("no-such-claim".into()))
        );
    }

    #[test]
    fn witness_cap_never_below_one() {
        let params = ClaimParams {
            max_witnesses: Some(0),
            ..ClaimParams::default()
        };
        let mut s = Sweep::new(&params);
        s.check(false, || Witness::tuple("a", vec![1]));
        s.check(false, || Witness::tuple("b", vec![2]));
        let r = s.finish(&CATALOG[0], None);
        assert_eq!(r.verdict, Verdict::Fails);
        assert_eq!((r.violations, r.witnesses.len()), (2, 1));
    }

    #[test]
    fn empty_sweep_is_noted() {
        let r = Sweep::new(&ClaimParams::default()).finish(&CATALOG[0], None);
        assert_eq!(r.verdict, Verdict::HoldsWithNotes);
    }
}
