//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use common::{classes, edge_sums, labeled_trees, pairwise_total, TREE_COUNTS};
use irrtree::builders::{caterpillar, odd_spine, path, star};
use irrtree::claims::{
    extremal_over_class, perm_search, run_report, Interpretation, Objective, ReportConfig, ReportEntry, TreeClass,
};
use irrtree::enumeration::all_trees_by_prufer;
use irrtree::fixtures::{figure_two, table1, PERM_EXAMPLE_BASE};
use irrtree::formulas::{floor_bound, hyp_four_bounds};
use irrtree::io::report_json;
use irrtree::{
    all_trees, canonical_code, compute_indices, evaluate_formula, is_isomorphic, prufer_decode, prufer_encode, verify,
    ClaimParams, ClaimResult, EnumerationLimits, FormulaId, IndexKind, PruferCode, Tree, Verdict,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn run(id: &str, n_max: Option<usize>) -> Result<ClaimResult, String> {
    let params = ClaimParams {
        n_max,
        ..ClaimParams::default()
    };
    verify(id, &params).map_err(|e| e.to_string())
}

fn trees(n: usize) -> Vec<Tree> {
    all_trees(n).expect("order in range").collect()
}

fn star_law() -> Outcome {
    for n in 3..=50 {
        let irr = compute_indices(&star(n)).irr;
        ensure!(irr == (n * (n - 1)) as u64, "star with {n} leaves has irr {irr}");
    }
    let r = run("star-albertson", Some(50))?;
    ensure!(
        r.verdict == Verdict::Holds && r.instances == 48 && r.violations == 0,
        "claim gave {:?} with {}/{}",
        r.verdict,
        r.violations,
        r.instances
    );
    Ok(())
}

fn figure_fixture() -> Outcome {
    let t = figure_two();
    let (irr, sigma, _) = edge_sums(t.order(), t.edges());
    ensure!((irr, sigma) == (20, 54), "direct sums give irr {irr} sigma {sigma}");
    let b = compute_indices(&t);
    ensure!((b.irr, b.sigma) == (20, 54), "library gives irr {} sigma {}", b.irr, b.sigma);
    let drawn: Vec<i64> = (0..5).map(|v| t.degree(v) as i64).collect();
    let displayed = evaluate_formula(FormulaId::FigureTwo, &drawn).map_err(|e| e.to_string())?;
    ensure!(displayed.primary() == 20, "displayed sum evaluates to {}", displayed.primary());
    Ok(())
}

fn enumerators_agree() -> Outcome {
    let limits = EnumerationLimits::default();
    for n in 1..=10 {
        let a: Vec<_> = trees(n).iter().map(canonical_code).collect();
        let b: Vec<_> = all_trees_by_prufer(n, &limits)
            .map_err(|e| e.to_string())?
            .map(|t| canonical_code(&t))
            .collect();
        ensure!(a.len() == TREE_COUNTS[n - 1], "order {n}: {} trees", a.len());
        ensure!(a == b, "order {n}: enumerators disagree ({} vs {})", a.len(), b.len());
    }
    Ok(())
}

fn sandwich() -> Outcome {
    enumerators_agree()?;
    for n in 1..=10 {
        for t in trees(n) {
            let (irr, sigma, _) = edge_sums(n, t.edges());
            let m = t.size() as u64;
            ensure!(sigma <= irr * irr && irr * irr <= m * sigma, "fails on {:?}", t.edges());
        }
    }
    let r = run("sandwich", Some(10))?;
    ensure!(r.verdict == Verdict::Holds && r.instances == 201, "claim gave {:?} over {}", r.verdict, r.instances);
    Ok(())
}

fn tree_upper_bound() -> Outcome {
    for n in 2..=10 {
        for t in trees(n) {
            let (irr, _, _) = edge_sums(n, t.edges());
            ensure!(irr <= ((n - 1) * (n - 2)) as u64, "irr {irr} on {:?}", t.edges());
        }
    }
    let r = run("irr-upper-tree", Some(10))?;
    ensure!(r.verdict == Verdict::Holds && r.instances == 200, "claim gave {:?} over {}", r.verdict, r.instances);
    Ok(())
}

fn total_irregularity_formula() -> Outcome {
    for n in 1..=9 {
        for t in trees(n) {
            let mut d = t.degrees();
            d.sort_unstable_by(|a, b| b.cmp(a));
            let weighted: i64 = d.iter().enumerate().map(|(i, &x)| (i as i64 + 1) * x as i64).sum();
            let formula = 2 * (n as i64 + 1) * t.size() as i64 - 2 * weighted;
            let pairwise = pairwise_total(&t) as i64;
            ensure!(formula == pairwise, "formula {formula} vs pairwise {pairwise} on {:?}", t.edges());
            ensure!(compute_indices(&t).irr_total as i64 == pairwise, "library irr_T differs on {:?}", t.edges());
        }
    }
    let r = run("irrT-seq-formula", Some(9))?;
    ensure!(r.verdict == Verdict::Holds && r.instances == 95, "claim gave {:?} over {}", r.verdict, r.instances);
    Ok(())
}

fn zagreb_identity() -> Outcome {
    for n in 1..=10 {
        for t in trees(n) {
            let (_, _, m1) = edge_sums(n, t.edges());
            let by_edges: u64 = t.edges().iter().map(|&(u, v)| (t.degree(u) + t.degree(v)) as u64).sum();
            ensure!(m1 == by_edges, "m1 {m1} vs {by_edges} on {:?}", t.edges());
            ensure!(compute_indices(&t).m1 == m1, "library m1 differs on {:?}", t.edges());
        }
    }
    let r = run("m1-edge-identity", Some(10))?;
    ensure!(r.verdict == Verdict::Holds && r.instances == 201, "claim gave {:?} over {}", r.verdict, r.instances);
    Ok(())
}

fn prufer_bijection() -> Outcome {
    for n in 2..=7 {
        for edges in labeled_trees(n) {
            let t = Tree::from_edges(n, &edges).map_err(|e| e.to_string())?;
            let code = prufer_encode(&t).map_err(|e| e.to_string())?;
            let back = prufer_decode(&code, n).map_err(|e| e.to_string())?;
            ensure!(back == t, "round trip changed {edges:?}");
        }
    }
    for n in 3..=6usize {
        let mut seen = BTreeSet::new();
        let total = n.pow(n as u32 - 2);
        for k in 0..total {
            let code: Vec<usize> = (0..n - 2).map(|i| k / n.pow(i as u32) % n).collect();
            let t = prufer_decode(&PruferCode(code), n).map_err(|e| e.to_string())?;
            seen.insert(t.edges().to_vec());
        }
        ensure!(seen.len() == total, "order {n}: {} distinct trees from {total} codes", seen.len());
    }
    Ok(())
}

fn table_reproduction() -> Outcome {
    let rows = table1().map_err(|e| e.to_string())?;
    ensure!(rows.len() == 24, "{} rows", rows.len());
    for r in &rows {
        let [d1, d2, _, d4] = r.d;
        ensure!(r.diff == 2 * (d2 - d4), "diff column at {:?}", r.d);
        ensure!(r.irr_max - r.irr_min < 2 * d1, "diff bound at {:?}", r.d);
        ensure!(r.irr_min as i128 >= floor_bound(d1 as i128, d4 as i128), "floor bound at {:?}", r.d);
        let (f_max, f_min) = hyp_four_bounds(&r.d.map(|x| x as i128));
        ensure!(
            (f_max - r.irr_max as i128, f_min - r.irr_min as i128) == (4, 4),
            "offset {}/{} at {:?}",
            f_max - r.irr_max as i128,
            f_min - r.irr_min as i128,
            r.d
        );
    }
    let c = run("table1", None)?;
    ensure!(c.violations == 0, "{} violations", c.violations);
    ensure!(
        c.notes.iter().any(|n| n.starts_with("documented mismatch") && n.contains("exactly 4 in 24/24 rows")),
        "mismatch not recorded"
    );
    Ok(())
}

fn caterpillar_family() -> Outcome {
    for m in 1..=20 {
        let t = caterpillar(&odd_spine(m)).map_err(|e| e.to_string())?;
        let n = t.order();
        ensure!(n == m * m + m + 2, "m {m}: order {n}");
        ensure!(t.degrees().iter().sum::<usize>() == 2 * (n - 1), "m {m}: degree sum");
    }
    let r = run("caterpillar-order", Some(20))?;
    ensure!(r.instances == 20 && r.violations == 0, "claim gave {}/{}", r.violations, r.instances);
    Ok(())
}

/// Relocations counted from scratch: `(instances, violations)`.
fn recount(n_max: usize, lambda_ok: impl Fn(usize) -> bool, holds: impl Fn((u64, u64), (u64, u64)) -> bool) -> (u64, u64) {
    let (mut instances, mut violations) = (0, 0);
    for n in 4..=n_max {
        for t in trees(n) {
            let deg = t.degrees();
            let delta = *deg.iter().max().unwrap();
            let at_delta = deg.iter().filter(|&&d| d == delta).count();
            let (irr, sigma, _) = edge_sums(n, t.edges());
            for y in 0..n {
                let lambda = deg[y];
                if lambda < 3 || !lambda_ok(lambda) || !(lambda < delta || at_delta > 1) {
                    continue;
                }
                for &donor in t.neighbors(y).iter().filter(|&&w| deg[w] == 1) {
                    for &recipient in t.neighbors(y).iter().filter(|&&w| w != donor) {
                        let edges: Vec<(usize, usize)> = t
                            .edges()
                            .iter()
                            .map(|&e| if e == (y.min(donor), y.max(donor)) { (recipient, donor) } else { e })
                            .collect();
                        let (irr2, sigma2, _) = edge_sums(n, &edges);
                        instances += 1;
                        violations += !holds((irr, sigma), (irr2, sigma2)) as u64;
                    }
                }
            }
        }
    }
    (instances, violations)
}

fn transformation_sweeps() -> Outcome {
    let ids = ["irr-decrease", "sigma-decrease", "sigma-increase"];
    let config = ReportConfig {
        claims: ids.iter().map(|s| s.to_string()).collect(),
        max_witnesses: None,
        ..ReportConfig::default()
    };
    let first = run_report(&config);
    let second = run_report(&config);
    ensure!(report_json(&first) == report_json(&second), "re-run is not byte-identical");
    let expected = [
        ("irr-decrease", 12, recount(12, |_| true, |b, a| a.0 < b.0)),
        ("sigma-decrease", 13, recount(13, |l| l > 3 && l < 10, |b, a| a.1 < b.1)),
        ("sigma-increase", 14, recount(14, |l| l >= 11, |b, a| a.1 > b.1)),
    ];
    for (entry, (id, order, (instances, violations))) in first.claims.iter().zip(expected) {
        let ReportEntry::Result(r) = entry else {
            return Err(format!("{id}: error entry"));
        };
        ensure!(r.id == id, "unexpected claim {}", r.id);
        ensure!(
            r.parameters.get("orders").map(String::as_str) == Some(&format!("4..={order}")),
            "{id}: swept {:?}",
            r.parameters.get("orders")
        );
        ensure!(
            (r.instances, r.violations) == (instances, violations),
            "{id}: report {}/{} vs recount {violations}/{instances}",
            r.violations,
            r.instances
        );
        ensure!(r.witnesses.len() as u64 == r.violations, "{id}: {} witnesses for {} violations", r.witnesses.len(), r.violations);
        ensure!((r.verdict == Verdict::Fails) == (r.violations > 0), "{id}: verdict {:?}", r.verdict);
    }
    Ok(())
}

fn permutation_example() -> Outcome {
    for interp in [Interpretation::Formula, Interpretation::Caterpillar] {
        let a = perm_search(&PERM_EXAMPLE_BASE, interp).map_err(|e| e.to_string())?;
        let b = perm_search(&PERM_EXAMPLE_BASE, interp).map_err(|e| e.to_string())?;
        let name = interp.as_str();
        ensure!(a.evaluations == 720 && a.skipped == 0, "{name}: {} evaluations", a.evaluations);
        ensure!(a.max >= a.min, "{name}: max {} < min {}", a.max, a.min);
        ensure!(a == b, "{name}: not deterministic");
        ensure!(a.max_matches == (a.max == 14802) && a.min_matches == (a.min == 14196), "{name}: match flags wrong");
    }
    let r = run("perm-example", None)?;
    for name in ["formula", "caterpillar"] {
        ensure!(
            r.notes.iter().any(|n| n.starts_with(name) && n.contains("reported max attained")),
            "report does not document the {name} comparison"
        );
    }
    Ok(())
}

fn extremal_sanity() -> Outcome {
    let reps = classes(labeled_trees(5).iter().map(|e| Tree::from_edges(5, e).unwrap()));
    ensure!(reps.len() == 3, "{} classes on 5 vertices", reps.len());
    let irr = |t: &Tree| edge_sums(5, t.edges()).0;
    let maxes: Vec<&Tree> = reps.iter().filter(|t| irr(t) == 12).collect();
    let mins: Vec<&Tree> = reps.iter().filter(|t| irr(t) == 2).collect();
    ensure!(reps.iter().all(|t| (2..=12).contains(&irr(t))), "value outside 2..=12");
    ensure!(maxes.len() == 1 && is_isomorphic(maxes[0], &star(4)), "brute-force max is not the star alone");
    ensure!(mins.len() == 1 && is_isomorphic(mins[0], &path(5)), "brute-force min is not the path alone");

    let class = TreeClass::of_order(5);
    let max = extremal_over_class(&class, IndexKind::Irr, Objective::Max).map_err(|e| e.to_string())?;
    let min = extremal_over_class(&class, IndexKind::Irr, Objective::Min).map_err(|e| e.to_string())?;
    ensure!(
        max.optimum == 12 && max.witnesses.len() == 1 && max.witnesses[0].code == canonical_code(&star(4)),
        "library max {} with {} witnesses",
        max.optimum,
        max.witnesses.len()
    );
    ensure!(
        min.optimum == 2 && min.witnesses.len() == 1 && min.witnesses[0].code == canonical_code(&path(5)),
        "library min {} with {} witnesses",
        min.optimum,
        min.witnesses.len()
    );
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("star law irr = n(n-1), n = 3..50", star_law),
        ("strong-support example tree: irr 20, sigma 54, displayed sum 20", figure_fixture),
        ("sandwich on every tree n <= 10, enumerators agree", sandwich),
        ("irr <= (n-1)(n-2) on every tree n <= 10", tree_upper_bound),
        ("total irregularity formula on every tree n <= 9", total_irregularity_formula),
        ("M1 edge identity on every tree n <= 10", zagreb_identity),
        ("Prüfer bijection n <= 7, n^(n-2) codes for n = 3..6", prufer_bijection),
        ("table rows: diff column, both bounds, +4 offset recorded", table_reproduction),
        ("odd-spine caterpillars m = 1..20", caterpillar_family),
        ("relocation sweeps exhaustive, complete and byte-stable", transformation_sweeps),
        ("permutation example: 720 orderings, flags, deterministic", permutation_example),
        ("n = 5 extremes: star 12, path 2", extremal_sanity),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("PASS criterion {}: {title}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {title}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
