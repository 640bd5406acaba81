use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use irrtree::canon::canonical_code;
use irrtree::claims::{
    catalog, extremal_over_class, perm_search, run_report, verify, ClaimParams, Interpretation, Objective,
    ReportConfig, TreeClass, Verdict, DEFAULT_MAX_WITNESSES,
};
use irrtree::degseq::DegreeSequence;
use irrtree::enumeration::{all_trees_by_prufer, all_trees_with, trees_with_degree_sequence, EnumerationLimits};
use irrtree::fixtures::table1;
use irrtree::formulas::{evaluate_formula, FormulaId, FormulaValue};
use irrtree::indices::{compute_indices, IndexKind};
use irrtree::io::{
    emit_tree, parse_degree_sequence, parse_integers, parse_tree, render_report, render_result, report_json,
    result_json, table1_csv,
};
use irrtree::tree::Tree;

/// Exact irregularity indices, tree enumeration and claim checks for trees.
#[derive(Parser, Debug)]
#[command(name = "irrtree", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Structured JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// CSV output where a grid is produced.
    #[arg(long, global = true)]
    csv: bool,
    /// Worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Single worker, no timings: byte-stable output.
    #[arg(long, global = true)]
    deterministic: bool,
    /// Keep every witness instead of the first 25.
    #[arg(long, global = true)]
    all_witnesses: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Indices of a tree read from an edge-list file.
    Compute {
        #[arg(long)]
        tree: PathBuf,
    },
    /// All unlabeled trees of one order.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Print only the count.
        #[arg(long)]
        count: bool,
        /// Use the Prüfer-code enumerator instead of leaf extension.
        #[arg(long)]
        prufer: bool,
    },
    /// All unlabeled trees with a given degree sequence.
    Realize {
        /// Degrees separated by spaces or commas.
        #[arg(long, conflicts_with = "seq_file", required_unless_present = "seq_file")]
        seq: Option<String>,
        #[arg(long)]
        seq_file: Option<PathBuf>,
    },
    /// Extreme index value over a class of trees, with every witness.
    Extremal {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        seq: Option<String>,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        caterpillars: bool,
        /// irr, sigma or irr_T.
        #[arg(long, default_value = "irr")]
        index: String,
        /// min or max.
        #[arg(long, default_value = "max")]
        objective: String,
    },
    /// Evaluate a closed-form degree-tuple formula.
    Formula {
        #[arg(long)]
        id: Option<String>,
        #[arg(long)]
        tuple: Option<String>,
        /// List the formula ids.
        #[arg(long)]
        list: bool,
    },
    /// Check one claim.
    Verify {
        #[arg(long)]
        claim: Option<String>,
        /// Override the claim's size parameter.
        #[arg(long)]
        n_max: Option<usize>,
        /// List the catalog.
        #[arg(long)]
        list: bool,
    },
    /// Check many claims and print an aggregate report.
    Report {
        /// Comma-separated claim ids; default is the whole catalog.
        #[arg(long, value_delimiter = ',')]
        claims: Vec<String>,
        /// Cap on tree order for exhaustive claims.
        #[arg(long)]
        n_max: Option<usize>,
        /// Also write the report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sigma over every ordering of a degree tuple.
    Permsearch {
        #[arg(long)]
        seq: String,
        /// formula or caterpillar.
        #[arg(long, default_value = "formula")]
        interp: String,
    },
    /// The transcribed degree-tuple table next to the formula values.
    Table1,
}

const USAGE_ERROR: u8 = 2;

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = if cli.global.deterministic { Some(1) } else { cli.global.jobs };
    if let Some(n) = threads {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Failure> {
    let g = &cli.global;
    match &cli.command {
        Command::Compute { tree } => {
            let parsed = parse_tree(&read(tree)?)?;
            let t = &parsed.tree;
            let b = compute_indices(t);
            let strong: Vec<u64> = t.strong_support_vertices().iter().map(|&v| parsed.labels[v]).collect();
            if g.json {
                let doc = json!({
                    "order": t.order(),
                    "size": t.size(),
                    "indices": b,
                    "canonical_code": canonical_code(t),
                    "strong_support_vertices": strong,
                });
                println!("{}", pretty(doc));
            } else {
                println!("n={} m={}", t.order(), t.size());
                println!(
                    "irr={} irr_T={} sigma={} m1={} m2={}",
                    b.irr, b.irr_total, b.sigma, b.m1, b.m2
                );
                println!("strong_support={}", join(&strong));
            }
        }
        Command::Enumerate { n, count, prufer } => {
            let limits = EnumerationLimits::default();
            let stream = if *prufer {
                all_trees_by_prufer(*n, &limits)?
            } else {
                all_trees_with(*n, &limits)?
            };
            print_trees(g, stream.as_slice(), *count);
        }
        Command::Realize { seq, seq_file } => {
            let text = match (seq, seq_file) {
                (Some(s), _) => s.clone(),
                (None, Some(path)) => read(path)?,
                (None, None) => unreachable!("clap requires one"),
            };
            let seq = parse_degree_sequence(&text)?;
            let stream = trees_with_degree_sequence(&seq, &EnumerationLimits::default())?;
            print_trees(g, stream.as_slice(), false);
        }
        Command::Extremal {
            n,
            seq,
            max_degree,
            caterpillars,
            index,
            objective,
        } => {
            let index = IndexKind::parse(index).ok_or_else(|| Failure(format!("unknown index `{index}`")))?;
            let objective =
                Objective::parse(objective).ok_or_else(|| Failure(format!("unknown objective `{objective}`")))?;
            let degree_sequence: Option<DegreeSequence> = seq.as_deref().map(parse_degree_sequence).transpose()?;
            let class = TreeClass {
                order: *n,
                max_degree: *max_degree,
                degree_sequence,
                caterpillars_only: *caterpillars,
            };
            let r = extremal_over_class(&class, index, objective)?;
            if g.json {
                println!("{}", pretty(json!(r)));
            } else {
                println!("class: {}", class.describe());
                println!("{} {} = {} over {} trees", objective.as_str(), index.name(), r.optimum, r.class_size);
                for w in &r.witnesses {
                    let edges: Vec<String> = w.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                    println!("{}  {}", w.code, edges.join(" "));
                }
            }
        }
        Command::Formula { id, tuple, list } => {
            if *list {
                for id in FormulaId::ALL {
                    println!("{id}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let (Some(id), Some(tuple)) = (id, tuple) else {
                return Err(Failure("formula needs --id and --tuple (or --list)".into()));
            };
            let r = evaluate_formula(FormulaId::parse(id)?, &parse_integers(tuple)?)?;
            if g.json {
                println!("{}", pretty(json!(r)));
            } else {
                match r.value {
                    FormulaValue::Int(v) => println!("{} = {v}", r.id),
                    FormulaValue::Pair { max, min } => println!("{} max = {max} min = {min}", r.id),
                    FormulaValue::Predicate(b) => println!("{} holds = {b}", r.id),
                }
                for note in &r.notes {
                    println!("note: {note}");
                }
            }
        }
        Command::Verify { claim, n_max, list } => {
            if *list {
                for c in catalog() {
                    println!("{}  {}", c.id, c.anchor);
                }
                return Ok(ExitCode::SUCCESS);
            }
            let Some(claim) = claim else {
                return Err(Failure("verify needs --claim (or --list)".into()));
            };
            let params = ClaimParams {
                n_max: *n_max,
                max_witnesses: witness_cap(g),
                timed: !g.deterministic,
            };
            let r = verify(claim, &params)?;
            if g.json {
                println!("{}", result_json(&r));
            } else {
                print!("{}", render_result(&r));
            }
            if r.verdict == Verdict::Fails {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Report { claims, n_max, out } => {
            let config = ReportConfig {
                claims: claims.clone(),
                n_max: *n_max,
                max_witnesses: witness_cap(g),
                deterministic: g.deterministic,
                jobs: g.jobs,
            };
            let report = run_report(&config);
            let text = if g.json { report_json(&report) + "\n" } else { render_report(&report) };
            print!("{text}");
            if let Some(path) = out {
                fs::write(path, &text).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            }
            if report.any_error() {
                return Ok(ExitCode::from(USAGE_ERROR));
            }
            if report.any_failed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Permsearch { seq, interp } => {
            let interpretation = Interpretation::parse(interp)
                .ok_or_else(|| Failure(format!("unknown interpretation `{interp}`")))?;
            let r = perm_search(&parse_integers(seq)?, interpretation)?;
            if g.json {
                println!("{}", pretty(json!(r)));
            } else {
                println!("interpretation: {}", r.interpretation.as_str());
                println!("evaluations: {}  skipped: {}", r.evaluations, r.skipped);
                println!("max: {} over {} orderings, first {}", r.max, r.argmax.len(), first(&r.argmax));
                println!("min: {} over {} orderings, first {}", r.min, r.argmin.len(), first(&r.argmin));
                println!(
                    "reported max matches: {}  attained: {}",
                    r.max_matches, r.max_attained
                );
                println!(
                    "reported min matches: {}  attained: {}",
                    r.min_matches, r.min_attained
                );
            }
        }
        Command::Table1 => {
            let rows = table1()?;
            let csv = table1_csv(&rows);
            if g.json {
                println!("{}", pretty(json!(rows)));
            } else if g.csv {
                print!("{csv}");
            } else {
                for line in csv.lines() {
                    let cells: Vec<String> = line.split(',').map(|c| format!("{c:>6}")).collect();
                    println!("{}", cells.join(" "));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn witness_cap(g: &Global) -> Option<usize> {
    (!g.all_witnesses).then_some(DEFAULT_MAX_WITNESSES)
}

fn print_trees(g: &Global, trees: &[Tree], count_only: bool) {
    if count_only {
        println!("{}", trees.len());
    } else if g.json {
        let docs: Vec<_> = trees
            .iter()
            .map(|t| json!({ "code": canonical_code(t), "edges": t.edges() }))
            .collect();
        println!("{}", pretty(json!(docs)));
    } else {
        println!("# {} trees", trees.len());
        for t in trees {
            println!("# {}", canonical_code(t));
            print!("{}", emit_tree(t, None));
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn pretty(value: serde_json::Value) -> String {
    serde_json::to_string_pretty(&value).expect("serializable")
}

fn join(values: &[u64]) -> String {
    values.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn first(orderings: &[Vec<i64>]) -> String {
    match orderings.first() {
        Some(o) => format!("({})", o.iter().map(i64::to_string).collect::<Vec<_>>().join(",")),
        None => "-".into(),
    }
}
