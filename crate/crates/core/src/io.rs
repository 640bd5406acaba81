//! Edge-list and degree-sequence text formats, plus report rendering.
//!
//! An edge-list document has one `u v` pair per line; blank lines and lines
//! starting with `#` are ignored. Labels are arbitrary non-negative integers
//! and are re-indexed densely in ascending label order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::claims::{ClaimReport, ClaimResult, ReportEntry};
use crate::degseq::{validate_tree_sequence, DegreeSequence};
use crate::error::ParseError;
use crate::fixtures::Table1Row;
use crate::formulas::{floor_bound, hyp_four_bounds};
use crate::tree::{Tree, UnionFind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedTree {
    pub tree: Tree,
    /// `labels[v]` is the input label of vertex `v`.
    pub labels: Vec<u64>,
}

pub fn parse_tree(text: &str) -> Result<ParsedTree, ParseError> {
    let mut index: BTreeMap<u64, usize> = BTreeMap::new();
    let mut raw: Vec<(u64, u64)> = Vec::new();
    let mut uf = UnionFind::new(0);
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let content = line.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let malformed = || ParseError::Malformed {
            line: lineno,
            content: content.to_string(),
        };
        let fields: Vec<&str> = content.split(|c: char| c.is_whitespace() || c == ',').filter(|f| !f.is_empty()).collect();
        let [a, b] = fields[..] else {
            return Err(malformed());
        };
        let a: u64 = a.parse().map_err(|_| malformed())?;
        let b: u64 = b.parse().map_err(|_| malformed())?;
        if a == b {
            return Err(ParseError::SelfLoop { line: lineno, label: a });
        }
        let (lo, hi) = (a.min(b), a.max(b));
        if raw.contains(&(lo, hi)) {
            return Err(ParseError::DuplicateEdge { line: lineno, a, b });
        }
        let mut id = |label: u64| {
            let next = index.len();
            *index.entry(label).or_insert_with(|| {
                uf.push();
                next
            })
        };
        let (ia, ib) = (id(a), id(b));
        if !uf.union(ia, ib) {
            return Err(ParseError::Cycle { line: lineno, a, b });
        }
        raw.push((lo, hi));
    }
    if raw.is_empty() {
        return Err(ParseError::Empty);
    }
    let labels: Vec<u64> = index.keys().copied().collect();
    let dense: BTreeMap<u64, usize> = labels.iter().enumerate().map(|(v, &l)| (l, v)).collect();
    let n = labels.len();
    if raw.len() != n - 1 {
        // acyclic with fewer than n-1 edges
        return Err(ParseError::Disconnected {
            components: n - raw.len(),
        });
    }
    let edges: Vec<(usize, usize)> = raw.iter().map(|(a, b)| (dense[a], dense[b])).collect();
    let tree = Tree::from_edges(n, &edges).expect("validated while parsing");
    Ok(ParsedTree { tree, labels })
}

/// One `u v` line per edge; uses `labels` when given.
pub fn emit_tree(t: &Tree, labels: Option<&[u64]>) -> String {
    let mut out = String::new();
    for &(u, v) in t.edges() {
        match labels {
            Some(l) => writeln!(out, "{} {}", l[u], l[v]),
            None => writeln!(out, "{u} {v}"),
        }
        .expect("writing to a String");
    }
    out
}

/// Whitespace- or comma-separated integers, on one or more lines.
pub fn parse_integers(text: &str) -> Result<Vec<i64>, ParseError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let content = line.trim();
        if content.starts_with('#') {
            continue;
        }
        for field in content.split(|c: char| c.is_whitespace() || c == ',').filter(|f| !f.is_empty()) {
            out.push(field.parse().map_err(|_| ParseError::Malformed {
                line: i + 1,
                content: content.to_string(),
            })?);
        }
    }
    if out.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(out)
}

/// A tree-graphical degree sequence in any order.
pub fn parse_degree_sequence(text: &str) -> Result<DegreeSequence, ParseError> {
    Ok(validate_tree_sequence(&parse_integers(text)?)?)
}

pub fn report_json(report: &ClaimReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

pub fn result_json(result: &ClaimResult) -> String {
    serde_json::to_string_pretty(result).expect("result serializes")
}

pub fn render_result(r: &ClaimResult) -> String {
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, "{}  {}", r.id, r.verdict.as_str());
    let _ = writeln!(w, "  anchor: {}", r.anchor);
    for (k, v) in &r.parameters {
        let _ = writeln!(w, "  {k}: {v}");
    }
    let _ = writeln!(w, "  instances: {}  violations: {}", r.instances, r.violations);
    if let Some(ms) = r.elapsed_ms {
        let _ = writeln!(w, "  elapsed_ms: {ms}");
    }
    for note in &r.notes {
        let _ = writeln!(w, "  note: {note}");
    }
    for wit in &r.witnesses {
        let _ = write!(w, "  witness: {}", wit.label);
        if let Some(t) = &wit.tuple {
            let parts: Vec<String> = t.iter().map(i64::to_string).collect();
            let _ = write!(w, " | tuple ({})", parts.join(","));
        }
        if let Some(edges) = &wit.edges {
            let parts: Vec<String> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
            let _ = write!(w, " | edges {}", parts.join(" "));
        }
        let _ = writeln!(w);
    }
    out
}

pub fn render_report(report: &ClaimReport) -> String {
    let mut out = String::new();
    let t = &report.totals;
    let _ = writeln!(out, "{} {}", report.tool, report.version);
    for (k, v) in &report.settings {
        let _ = writeln!(out, "{k}: {v}");
    }
    let _ = writeln!(
        out,
        "claims: {}  holds: {}  holds-with-notes: {}  fails: {}  errors: {}",
        t.claims, t.holds, t.holds_with_notes, t.fails, t.errors
    );
    for entry in &report.claims {
        let _ = writeln!(out);
        match entry {
            ReportEntry::Result(r) => out.push_str(&render_result(r)),
            ReportEntry::Error { id, error } => {
                let _ = writeln!(out, "{id}  error\n  {error}");
            }
        }
    }
    out
}

/// The printed rows next to the order-four max/min formulas.
pub fn table1_csv(rows: &[Table1Row]) -> String {
    let mut out = String::from(
        "d1,d2,d3,d4,printed_max,printed_min,printed_diff,formula_max,formula_min,offset_max,offset_min,two_d2_minus_d4,floor_bound\n",
    );
    for r in rows {
        let d = r.d.map(|x| x as i128);
        let (f_max, f_min) = hyp_four_bounds(&d);
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{f_max},{f_min},{},{},{},{}",
            r.d[0],
            r.d[1],
            r.d[2],
            r.d[3],
            r.irr_max,
            r.irr_min,
            r.diff,
            f_max - r.irr_max as i128,
            f_min - r.irr_min as i128,
            2 * (r.d[1] - r.d[3]),
            floor_bound(d[0], d[3])
        );
    }
    out
}
