use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use degree_entropy::extremal::{construct_b, min_entropy_bipartite, min_entropy_general, ExtremalResult};
use degree_entropy::graph::{build_named, parse_edge_list, Family, Graph};
use degree_entropy::recognition::{is_difference, is_threshold};
use degree_entropy::verify::{
    check_corollary2, check_majorization_upto, check_minimizers_difference, check_minimizers_threshold,
    check_theorem1, check_theorem2, explore_problem1, table1, OracleMode, VerificationReport,
};
use degree_entropy::{compute_entropy, round9};
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "degent", version, about = "Degree-based graph entropy: compute, construct, recognize, verify")]
struct Cli {
    /// Cap on worker threads (default: machine parallelism).
    #[arg(long, global = true, value_name = "K")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Entropy report for an edge-list file (`-` reads stdin).
    Entropy {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Emit a named graph as an edge list.
    Construct {
        family: FamilyArg,
        /// complete K | complete-bipartite S T | star N | empty N | kkt K T | b N M B
        #[arg(num_args = 1..=3, required = true)]
        params: Vec<usize>,
        /// Isolated vertices appended after the core graph.
        #[arg(long, default_value_t = 0)]
        pad: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum entropy over (n,m)-graphs or (n,m)-bipartite graphs, with extremal graphs.
    MinEntropy {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        bipartite: bool,
        /// Directory receiving one edge-list file per extremal graph.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Threshold or difference graph recognition, as a JSON verdict.
    Recognize {
        #[arg(long)]
        kind: Kind,
        file: PathBuf,
    },
    /// Exhaustive verification of an extremal statement.
    Verify {
        #[arg(long)]
        theorem: Theorem,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Mode::Graphs)]
        mode: Mode,
        /// Write the full JSON report here.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Bipartite minimizers for 2 <= n <= 6.
    Table1 {
        #[arg(long)]
        csv: bool,
    },
    /// Entropy of every B(n,m,b) and the minimizing b.
    ExploreB {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Complete,
    CompleteBipartite,
    Star,
    Empty,
    /// K(k,t): K_k plus a vertex joined to t of its vertices.
    Kkt,
    /// B(n,m,b).
    B,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Threshold,
    Difference,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    Le1,
    Le7,
    Le8,
    Cor2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Sequences,
    Graphs,
}

impl From<Mode> for OracleMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Sequences => OracleMode::Sequences,
            Mode::Graphs => OracleMode::Graphs,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(k) = cli.threads {
        if k == 0 {
            bail!("--threads must be at least 1");
        }
        rayon::ThreadPoolBuilder::new().num_threads(k).build_global()?;
    }
    match cli.command {
        Command::Entropy { file, json } => entropy(&file, json),
        Command::Construct { family, params, pad, out } => construct(family, &params, pad, out.as_deref()),
        Command::MinEntropy { n, m, bipartite, out_dir, json } => min_entropy(n, m, bipartite, out_dir.as_deref(), json),
        Command::Recognize { kind, file } => recognize(kind, &file),
        Command::Verify { theorem, max_n, mode, json } => verify(theorem, max_n, mode.into(), json.as_deref()),
        Command::Table1 { csv } => table(csv),
        Command::ExploreB { n, m, csv, json } => explore(n, m, csv, json),
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn print_json(v: &Value) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v)?;
    writeln!(out)?;
    Ok(())
}

fn entropy(path: &Path, json: bool) -> Result<ExitCode> {
    let g = read_graph(path)?;
    let degrees = g.degree_sequence();
    let report = compute_entropy(&degrees)?;
    if json {
        let mut v = serde_json::to_value(&report)?;
        v["n"] = json!(g.n());
        v["m"] = json!(g.edge_count());
        v["degrees"] = serde_json::to_value(&degrees)?;
        print_json(&v)?;
    } else {
        println!("n = {}", g.n());
        println!("m = {}", g.edge_count());
        println!("degrees = {degrees}");
        println!("two_m = {}", report.two_m);
        println!("h_d = {:.9}", report.h_d);
        println!("i_d = {:.9}", report.i_d);
        println!("exact_key = {}", report.exact_key);
    }
    Ok(ExitCode::SUCCESS)
}

fn construct(family: FamilyArg, params: &[usize], pad: usize, out: Option<&Path>) -> Result<ExitCode> {
    let arity = match family {
        FamilyArg::Complete | FamilyArg::Star | FamilyArg::Empty => 1,
        FamilyArg::CompleteBipartite | FamilyArg::Kkt => 2,
        FamilyArg::B => 3,
    };
    if params.len() != arity {
        bail!("this family takes {arity} parameter(s), got {}", params.len());
    }
    let p = params;
    let g = match family {
        FamilyArg::Complete => build_named(Family::Complete { k: p[0] }, pad)?,
        FamilyArg::CompleteBipartite => build_named(Family::CompleteBipartite { s: p[0], t: p[1] }, pad)?,
        FamilyArg::Star => build_named(Family::Star { n: p[0] }, pad)?,
        FamilyArg::Empty => build_named(Family::Empty { n: p[0] }, pad)?,
        FamilyArg::Kkt => build_named(Family::CliquePlusVertex { k: p[0], t: p[1] }, pad)?,
        FamilyArg::B => construct_b(p[0] as u64, p[1] as u64, p[2] as u64)?.with_isolated(pad),
    };
    emit(&g.to_edge_list(), out)?;
    Ok(ExitCode::SUCCESS)
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => Ok(io::stdout().lock().write_all(text.as_bytes())?),
    }
}

fn min_entropy(n: u64, m: u64, bipartite: bool, out_dir: Option<&Path>, json: bool) -> Result<ExitCode> {
    let result: ExtremalResult = if bipartite { min_entropy_bipartite(n, m)? } else { min_entropy_general(n, m)? };
    let mut files = Vec::new();
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (i, g) in result.graphs.iter().enumerate() {
            let path = dir.join(format!("extremal_{}.edges", i + 1));
            fs::write(&path, g.to_edge_list()).with_context(|| format!("writing {}", path.display()))?;
            files.push(path.display().to_string());
        }
    }
    if json {
        let mut v = serde_json::to_value(&result)?;
        v["n"] = json!(n);
        v["m"] = json!(m);
        v["bipartite"] = json!(bipartite);
        if out_dir.is_some() {
            v["files"] = json!(files);
        }
        print_json(&v)?;
    } else {
        println!("bound = {:.9}", result.bound);
        println!("exact_key = {}", result.exact_key_at_bound);
        println!("attained = {}", result.attained);
        for (name, g) in result.names.iter().zip(&result.graphs) {
            println!("{name}:");
            print!("{}", g.to_edge_list());
        }
        for f in &files {
            println!("wrote {f}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn one_based(w: Option<[usize; 4]>) -> Value {
    match w {
        Some(w) => json!(w.map(|v| v + 1)),
        None => Value::Null,
    }
}

fn recognize(kind: Kind, path: &Path) -> Result<ExitCode> {
    let g = read_graph(path)?;
    let v = match kind {
        Kind::Threshold => {
            let t = is_threshold(&g);
            json!({ "kind": "threshold", "is_threshold": t.is_threshold, "witness": one_based(t.witness) })
        }
        Kind::Difference => {
            let d = is_difference(&g);
            json!({
                "kind": "difference",
                "is_difference": d.is_difference,
                "is_bipartite": d.is_bipartite,
                "witness": one_based(d.witness),
            })
        }
    };
    print_json(&v)?;
    Ok(ExitCode::SUCCESS)
}

fn verify(theorem: Theorem, max_n: usize, mode: OracleMode, json_out: Option<&Path>) -> Result<ExitCode> {
    let report = match theorem {
        Theorem::One => check_theorem1(max_n, mode)?,
        Theorem::Two => check_theorem2(max_n, mode)?,
        Theorem::Le1 => check_majorization_upto(max_n)?,
        Theorem::Le7 => check_minimizers_difference(max_n)?,
        Theorem::Le8 => check_minimizers_threshold(max_n)?,
        Theorem::Cor2 => check_corollary2(max_n)?,
    };
    print!("{report}");
    for c in &report.minimizers {
        let label = if c.names.is_empty() {
            c.sequences.iter().map(ToString::to_string).collect::<Vec<_>>().join(" | ")
        } else {
            c.names.join(" | ")
        };
        println!("n={} m={} i_d={:.9} key={} {label}", c.n, c.m, c.i_d, c.exact_key);
    }
    if let Some(path) = json_out {
        let text = serde_json::to_string_pretty(&report_json(&report)?)?;
        fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

/// The report as JSON, with minimizers keyed by cell.
fn report_json(report: &VerificationReport) -> Result<Value> {
    let mut v = serde_json::to_value(report)?;
    let mut cells = Map::new();
    for c in &report.minimizers {
        cells.insert(format!("n={},m={}", c.n, c.m), serde_json::to_value(c)?);
    }
    v["minimizers"] = Value::Object(cells);
    Ok(v)
}

const TABLE_NS: std::ops::RangeInclusive<usize> = 2..=6;
const TABLE_MS: std::ops::RangeInclusive<usize> = 1..=9;

fn table(csv_out: bool) -> Result<ExitCode> {
    let t = table1()?;
    if csv_out {
        let mut w = csv::Writer::from_writer(io::stdout().lock());
        let header: Vec<String> =
            std::iter::once("m".to_string()).chain(TABLE_NS.map(|n| format!("n={n}"))).collect();
        w.write_record(&header)?;
        for m in TABLE_MS {
            let mut row = vec![m.to_string()];
            for n in TABLE_NS {
                row.push(t.get(&(n, m)).map(|s| s.iter().cloned().collect::<Vec<_>>().join(" | ")).unwrap_or_default());
            }
            w.write_record(&row)?;
        }
        w.flush()?;
    } else {
        for ((n, m), names) in &t {
            println!("n={n} m={m}: {}", names.iter().cloned().collect::<Vec<_>>().join(" | "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn explore(n: u64, m: u64, csv_out: bool, json: bool) -> Result<ExitCode> {
    let r = explore_problem1(n, m)?;
    if json {
        print_json(&serde_json::to_value(&r)?)?;
    } else if csv_out {
        let mut w = csv::Writer::from_writer(io::stdout().lock());
        w.write_record(["b", "q", "r", "degrees", "i_d", "exact_key", "argmin"])?;
        for row in &r.rows {
            w.write_record([
                row.b.to_string(),
                row.q.to_string(),
                row.r.to_string(),
                row.degrees.to_string(),
                format!("{:.9}", round9(row.report.i_d)),
                row.report.exact_key.to_string(),
                r.argmin.contains(&row.b).to_string(),
            ])?;
        }
        w.flush()?;
    } else {
        println!("n = {n}, m = {m}");
        for row in &r.rows {
            let mark = if r.argmin.contains(&row.b) { " *" } else { "" };
            println!(
                "B({n},{m},{}) q={} r={} degrees={} i_d={:.9} key={}{mark}",
                row.b, row.q, row.r, row.degrees, row.report.i_d, row.report.exact_key
            );
        }
        if let Some(o) = &r.oracle {
            println!("oracle minimum i_d={:.9} key={} attained_by_b={}", o.i_d, o.exact_key, o.attained_by_b);
        }
        for c in &r.recorded_orderings {
            println!("recorded: {} -> {}", c.statement, if c.holds { "holds" } else { "contradicted" });
        }
        if r.inconsistent {
            println!("warning: a recorded ordering contradicts the exact keys");
        }
    }
    Ok(ExitCode::SUCCESS)
}
