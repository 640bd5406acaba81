//! Identities and bounds checked on every unlabeled tree of each order.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{Sweep, Witness};
use crate::enumeration::all_trees;
use crate::error::ClaimError;
use crate::indices::{compute_indices, m1_by_edges, sandwich_holds, total_irregularity_by_sequence, IndexBundle};
use crate::tree::{SupportMode, Tree};

/// Runs `check` on every tree of order `lo..=hi`, in enumeration order.
fn for_each_tree(
    sweep: &mut Sweep,
    lo: usize,
    hi: usize,
    check: impl Fn(&Tree, &IndexBundle) -> Option<String> + Sync,
) -> Result<(), ClaimError> {
    sweep.param("orders", format!("{lo}..={hi}"));
    for n in lo..=hi {
        let stream = all_trees(n)?;
        let outcomes: Vec<Option<String>> = stream
            .as_slice()
            .par_iter()
            .map(|t| check(t, &compute_indices(t)))
            .collect();
        for (t, failure) in stream.as_slice().iter().zip(outcomes) {
            sweep.check(failure.is_none(), || Witness::tree(failure.unwrap_or_default(), t));
        }
    }
    Ok(())
}

pub(super) fn sandwich(sweep: &mut Sweep, n_max: usize) -> Result<(), ClaimError> {
    for_each_tree(sweep, 1, n_max, |t, b| {
        (!sandwich_holds(b, t.size())).then(|| format!("irr {} sigma {} m {}", b.irr, b.sigma, t.size()))
    })
}

pub(super) fn irr_upper_tree(sweep: &mut Sweep, n_max: usize) -> Result<(), ClaimError> {
    for_each_tree(sweep, 2, n_max, |t, b| {
        let n = t.order() as u64;
        let bound = (n - 1) * (n - 2);
        (b.irr > bound).then(|| format!("irr {} above (n-1)(n-2) = {bound}", b.irr))
    })
}

pub(super) fn irr_total_formula(sweep: &mut Sweep, n_max: usize) -> Result<(), ClaimError> {
    for_each_tree(sweep, 1, n_max, |t, b| {
        let by_seq = total_irregularity_by_sequence(t);
        (by_seq != b.irr_total).then(|| format!("sequence form {by_seq} vs pairwise {}", b.irr_total))
    })
}

pub(super) fn m1_edge_identity(sweep: &mut Sweep, n_max: usize) -> Result<(), ClaimError> {
    for_each_tree(sweep, 1, n_max, |t, b| {
        let by_edges = m1_by_edges(t);
        (by_edges != b.m1).then(|| format!("edge form {by_edges} vs M1 {}", b.m1))
    })
}

/// Among caterpillars with fixed order and pendant count, every tree of
/// maximum irr has a vertex adjacent to two or more leaves.
pub(super) fn caterpillar_support(sweep: &mut Sweep, n_max: usize) -> Result<(), ClaimError> {
    sweep.param("orders", format!("3..={n_max}"));
    sweep.param("support", "adjacent to at least two leaves");
    let mut maximisers = 0u64;
    let mut one_leaf_ok = true;
    for n in 3..=n_max {
        let mut classes: BTreeMap<usize, Vec<(u64, &Tree)>> = BTreeMap::new();
        let stream = all_trees(n)?;
        for t in stream.as_slice().iter().filter(|t| t.is_caterpillar()) {
            classes
                .entry(t.leaves().len())
                .or_default()
                .push((compute_indices(t).irr, t));
        }
        for (pendants, members) in classes {
            let best = members.iter().map(|m| m.0).max().unwrap_or(0);
            let winners: Vec<&Tree> = members.iter().filter(|m| m.0 == best).map(|m| m.1).collect();
            maximisers += winners.len() as u64;
            one_leaf_ok &= winners
                .iter()
                .all(|t| !t.support_vertices(SupportMode::OneLeaf).is_empty());
            let bad = winners.iter().find(|t| t.strong_support_vertices().is_empty());
            sweep.check(bad.is_none(), || {
                Witness::tree(
                    format!("n {n}, {pendants} pendants: a maximiser (irr {best}) has no strong support vertex"),
                    bad.expect("checked"),
                )
            });
        }
    }
    sweep.note(format!("{maximisers} maximisers inspected over all (n, pendant count) classes"));
    if one_leaf_ok {
        sweep.note("under the one-leaf support reading every maximiser qualifies");
    }
    Ok(())
}
