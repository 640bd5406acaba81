//! Aggregate runs over several claims.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{catalog, find_claim, verify, ClaimParams, ClaimResult, OracleKind, Verdict, DEFAULT_MAX_WITNESSES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportConfig {
    /// Claim ids to run; empty means the whole catalog.
    pub claims: Vec<String>,
    /// Caps the tree order of every exhaustive-trees claim.
    pub n_max: Option<usize>,
    pub max_witnesses: Option<usize>,
    /// Single worker and no timings, for byte-stable output.
    pub deterministic: bool,
    /// Worker count when not deterministic; `None` lets rayon decide.
    pub jobs: Option<usize>,
}

impl Default for ReportConfig {
    fn default() -> Self {
        ReportConfig {
            claims: Vec::new(),
            n_max: None,
            max_witnesses: Some(DEFAULT_MAX_WITNESSES),
            deterministic: true,
            jobs: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ReportEntry {
    Result(ClaimResult),
    Error { id: String, error: String },
}

impl ReportEntry {
    pub fn id(&self) -> &str {
        match self {
            ReportEntry::Result(r) => &r.id,
            ReportEntry::Error { id, .. } => id,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReportTotals {
    pub claims: usize,
    pub holds: usize,
    pub holds_with_notes: usize,
    pub fails: usize,
    pub errors: usize,
    pub instances: u64,
    pub violations: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub tool: String,
    pub version: String,
    pub deterministic: bool,
    pub settings: BTreeMap<String, String>,
    pub totals: ReportTotals,
    /// Sorted by claim id.
    pub claims: Vec<ReportEntry>,
}

impl ClaimReport {
    pub fn any_failed(&self) -> bool {
        self.totals.fails > 0
    }

    pub fn any_error(&self) -> bool {
        self.totals.errors > 0
    }
}

/// Runs the configured claims; a failing or erroring claim never stops the
/// others.
pub fn run_report(config: &ReportConfig) -> ClaimReport {
    let mut ids: Vec<String> = if config.claims.is_empty() {
        catalog().iter().map(|c| c.id.to_string()).collect()
    } else {
        config.claims.clone()
    };
    ids.sort();
    ids.dedup();
    let run = |id: &String| -> ReportEntry {
        let claim = match find_claim(id) {
            Ok(c) => c,
            Err(e) => {
                return ReportEntry::Error {
                    id: id.clone(),
                    error: e.to_string(),
                }
            }
        };
        let n_max = match (claim.oracle, config.n_max, claim.default_size) {
            (OracleKind::ExhaustiveTrees, Some(cap), Some(default)) => Some(cap.min(default)),
            _ => None,
        };
        let params = ClaimParams {
            n_max,
            max_witnesses: config.max_witnesses,
            timed: !config.deterministic,
        };
        match verify(id, &params) {
            Ok(r) => ReportEntry::Result(r),
            Err(e) => ReportEntry::Error {
                id: id.clone(),
                error: e.to_string(),
            },
        }
    };
    let threads = if config.deterministic { 1 } else { config.jobs.unwrap_or(0) };
    let entries: Vec<ReportEntry> = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(|| ids.par_iter().map(run).collect()),
        Err(_) => ids.iter().map(run).collect(),
    };
    let mut totals = ReportTotals {
        claims: entries.len(),
        ..ReportTotals::default()
    };
    for entry in &entries {
        match entry {
            ReportEntry::Result(r) => {
                totals.instances += r.instances;
                totals.violations += r.violations;
                match r.verdict {
                    Verdict::Holds => totals.holds += 1,
                    Verdict::HoldsWithNotes => totals.holds_with_notes += 1,
                    Verdict::Fails => totals.fails += 1,
                }
            }
            ReportEntry::Error { .. } => totals.errors += 1,
        }
    }
    let mut settings = BTreeMap::new();
    settings.insert(
        "n_max".to_string(),
        config.n_max.map_or("default".to_string(), |n| n.to_string()),
    );
    settings.insert(
        "max_witnesses".to_string(),
        config.max_witnesses.map_or("all".to_string(), |n| n.max(1).to_string()),
    );
    if !config.deterministic {
        settings.insert("jobs".to_string(), threads.to_string());
    }
    ClaimReport {
        tool: env!("CARGO_PKG_NAME").to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        deterministic: config.deterministic,
        settings,
        totals,
        claims: entries,
    }
}
