//! Sigma over every ordering of a degree tuple.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{fmt_tuple, Sweep, Witness};
use crate::builders::caterpillar;
use crate::enumeration::{multiset_permutation_count, DistinctPermutations};
use crate::error::{ClaimError, FormulaError, PermSearchError};
use crate::fixtures::{
    PERM_EXAMPLE_BASE, PERM_EXAMPLE_MAX, PERM_EXAMPLE_MIN, PERM_EXAMPLE_REPORTED_MAX, PERM_EXAMPLE_REPORTED_MIN,
};
use crate::formulas::{sigma_ordered, MAX_DEGREE};
use crate::indices::sigma;

/// Longest tuple `perm_search` accepts (8! orderings).
pub const PERM_MAX_LEN: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Interpretation {
    /// The ordered sigma formula applied to the permuted tuple.
    Formula,
    /// True sigma of the caterpillar whose spine has the permuted degrees.
    Caterpillar,
}

impl Interpretation {
    pub fn parse(s: &str) -> Option<Interpretation> {
        match s {
            "formula" => Some(Interpretation::Formula),
            "caterpillar" | "caterpillar-realization" => Some(Interpretation::Caterpillar),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Interpretation::Formula => "formula",
            Interpretation::Caterpillar => "caterpillar",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermSearchResult {
    pub base: Vec<i64>,
    pub interpretation: Interpretation,
    /// Distinct orderings evaluated.
    pub evaluations: u64,
    /// Orderings with no feasible realization.
    pub skipped: u64,
    /// `(ordering, value)` in lexicographic ordering order.
    pub values: Vec<(Vec<i64>, i64)>,
    pub max: i64,
    pub argmax: Vec<Vec<i64>>,
    pub min: i64,
    pub argmin: Vec<Vec<i64>>,
    /// The computed max equals the reported max.
    pub max_matches: bool,
    /// The computed min equals the reported min.
    pub min_matches: bool,
    /// Some ordering evaluates to the reported max.
    pub max_attained: bool,
    /// Some ordering evaluates to the reported min.
    pub min_attained: bool,
}

pub fn perm_search(tuple: &[i64], interpretation: Interpretation) -> Result<PermSearchResult, PermSearchError> {
    if tuple.is_empty() {
        return Err(PermSearchError::Empty);
    }
    if tuple.len() > PERM_MAX_LEN {
        return Err(PermSearchError::TooLong {
            len: tuple.len(),
            max: PERM_MAX_LEN,
        });
    }
    match interpretation {
        Interpretation::Formula => {
            if let Some(&x) = tuple.iter().find(|&&x| !(1..=MAX_DEGREE).contains(&x)) {
                return Err(FormulaError::Domain {
                    id: "sigma_ordered",
                    reason: format!("degree {x} outside 1..={MAX_DEGREE}"),
                }
                .into());
            }
        }
        Interpretation::Caterpillar => {
            if let Some(&x) = tuple.iter().find(|&&x| !(2..=MAX_DEGREE).contains(&x)) {
                return Err(PermSearchError::CaterpillarDegree(x));
            }
        }
    }
    let mut values = Vec::new();
    let mut skipped = 0;
    for ordering in DistinctPermutations::new(tuple.to_vec()) {
        match evaluate(&ordering, interpretation) {
            Some(v) => values.push((ordering, v)),
            None => skipped += 1,
        }
    }
    debug_assert_eq!(
        (values.len() + skipped) as u128,
        multiset_permutation_count(tuple)
    );
    let max = values.iter().map(|v| v.1).max().unwrap_or(0);
    let min = values.iter().map(|v| v.1).min().unwrap_or(0);
    let pick = |target: i64| values.iter().filter(|v| v.1 == target).map(|v| v.0.clone()).collect();
    let attained = |target: i64| values.iter().any(|v| v.1 == target);
    Ok(PermSearchResult {
        base: tuple.to_vec(),
        interpretation,
        evaluations: values.len() as u64,
        skipped: skipped as u64,
        argmax: pick(max),
        argmin: pick(min),
        max_matches: max == PERM_EXAMPLE_REPORTED_MAX,
        min_matches: min == PERM_EXAMPLE_REPORTED_MIN,
        max_attained: attained(PERM_EXAMPLE_REPORTED_MAX),
        min_attained: attained(PERM_EXAMPLE_REPORTED_MIN),
        max,
        min,
        values,
    })
}

fn evaluate(ordering: &[i64], interpretation: Interpretation) -> Option<i64> {
    match interpretation {
        Interpretation::Formula => {
            let wide: Vec<i128> = ordering.iter().map(|&d| d as i128).collect();
            i64::try_from(sigma_ordered(&wide)).ok()
        }
        Interpretation::Caterpillar => {
            let spine: Vec<usize> = ordering.iter().map(|&d| d as usize).collect();
            caterpillar(&spine).ok().map(|t| sigma(&t) as i64)
        }
    }
}

/// Both interpretations on the example tuple; a mismatch with the reported
/// extremes is a violation.
pub(super) fn perm_example(sweep: &mut Sweep) -> Result<(), ClaimError> {
    sweep.param("tuple", fmt_tuple(&PERM_EXAMPLE_BASE));
    sweep.param("reported", format!("max {PERM_EXAMPLE_REPORTED_MAX}, min {PERM_EXAMPLE_REPORTED_MIN}"));
    for interp in [Interpretation::Formula, Interpretation::Caterpillar] {
        let r = perm_search(&PERM_EXAMPLE_BASE, interp)?;
        sweep.note(format!(
            "{}: {} orderings, max {} ({} argmax), min {} ({} argmin), reported max attained: {}, reported min attained: {}",
            interp.as_str(),
            r.evaluations,
            r.max,
            r.argmax.len(),
            r.min,
            r.argmin.len(),
            r.max_attained,
            r.min_attained
        ));
        for (name, listed, target) in [("max", &PERM_EXAMPLE_MAX[..], r.max), ("min", &PERM_EXAMPLE_MIN[..], r.min)] {
            let distinct: BTreeSet<&[i64; 6]> = listed.iter().collect();
            let values: BTreeSet<i64> = listed
                .iter()
                .filter_map(|o| r.values.iter().find(|v| v.0 == o[..]).map(|v| v.1))
                .collect();
            let hits = distinct
                .iter()
                .filter(|o| r.values.iter().any(|v| v.0 == o[..] && v.1 == target))
                .count();
            sweep.note(format!(
                "{}: the {} listed {name} orderings ({} distinct) take values {}; {hits} reach the computed {name}",
                interp.as_str(),
                listed.len(),
                distinct.len(),
                fmt_tuple(&values.into_iter().collect::<Vec<_>>())
            ));
        }
        sweep.check(r.max_matches && r.min_matches, || {
            Witness::tuple(
                format!(
                    "{}: computed max {} min {}, reported max {PERM_EXAMPLE_REPORTED_MAX} min {PERM_EXAMPLE_REPORTED_MIN}; tuple is a computed argmax",
                    interp.as_str(),
                    r.max,
                    r.min
                ),
                r.argmax.first().cloned().unwrap_or_default(),
            )
        });
    }
    Ok(())
}
