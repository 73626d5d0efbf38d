use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cyclesat::analysis::{
    check_conjecture, degenerated_paths, degree_classes, discharge, format_quarters, lemma_probes,
    neighborhood_matching_violations, ChargeLedger, Conjecture, DegeneratedPaths, DegreeClasses, LemmaProbes,
    MatchingViolation,
};
use cyclesat::constructions::{formula_table, Construction, FormulaValue};
use cyclesat::{check_saturated, compute_sat, generate, sat_formula, Budget, CycleFamily, Graph, SearchMode};
use cyclesat_cli::{ResultRecord, Store};

const EXIT_NOT_SATURATED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "cyclesat", version, about = "Saturation numbers for families of cycles")]
struct Cli {
    /// Print JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    /// Result store (JSON lines).
    #[arg(long, global = true, env = "SATDB", default_value = "satdb.jsonl")]
    store: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph and print it as graph6 or DOT.
    Construct(ConstructArgs),
    /// Check whether graphs are saturated for a cycle family.
    Verify {
        #[arg(long)]
        family: CycleFamily,
        /// Graph to check; graph6 lines are read from stdin when omitted.
        #[arg(long)]
        graph6: Option<String>,
    },
    /// Exhaustive search for the saturation number.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        family: CycleFamily,
        #[arg(long, value_enum, default_value_t = ModeArg::Full)]
        mode: ModeArg,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Do not append the result to the store.
        #[arg(long)]
        no_store: bool,
    },
    /// Degree classes, degenerated paths and structural yes/no probes.
    Probe {
        #[arg(long)]
        graph6: Option<String>,
    },
    /// Run the quarter-charge discharging rules and print the ledger.
    Discharge {
        #[arg(long)]
        graph6: Option<String>,
    },
    /// Compare a conjectured formula against exhaustive search.
    Conjecture {
        /// Conjecture number, 1 to 5.
        #[arg(long)]
        id: u8,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long, default_value_t = 1)]
        from: usize,
        #[arg(long, default_value_t = 8)]
        to: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Known closed forms for the saturation number.
    Formula {
        #[arg(long, required_unless_present = "table")]
        family: Option<CycleFamily>,
        #[arg(long, required_unless_present = "table")]
        n: Option<usize>,
        /// Dump the whole formula table.
        #[arg(long, conflicts_with_all = ["family", "n"])]
        table: bool,
    },
    /// Inspect and maintain the result store.
    #[command(subcommand)]
    Store(StoreCommand),
}

#[derive(Subcommand)]
enum StoreCommand {
    /// Best stored record for a family and n.
    Query {
        #[arg(long)]
        family: CycleFamily,
        #[arg(long)]
        n: usize,
    },
    /// Re-check every stored witness.
    Verify,
    /// Fold other stores into this one, one record per key.
    Merge { inputs: Vec<PathBuf> },
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    kind: Kind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Friendship,
    FriendshipPlus,
    SatN,
    Star,
    JGraph,
    Cycle,
    CyclePendant,
    /// The J-graph for `aZ+2` on `n` vertices.
    Progression,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Value,
    Full,
}

#[derive(Args)]
struct BudgetArgs {
    /// Give up after exhausting this many edges.
    #[arg(long)]
    max_edges: Option<usize>,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    timeout: Option<f64>,
    /// Worker threads; 0 picks one per core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

impl BudgetArgs {
    fn budget(&self) -> Result<Budget> {
        let timeout = match self.timeout {
            Some(t) if !(t.is_finite() && t >= 0.0) => bail!("timeout must be a non-negative number of seconds"),
            t => t.map(Duration::from_secs_f64),
        };
        Ok(Budget { max_edges: self.max_edges, timeout, jobs: self.jobs })
    }
}

#[derive(Serialize)]
struct ConstructReport {
    construction: Construction,
    n: usize,
    m: usize,
    graph6: String,
}

#[derive(Serialize)]
struct VerifyReport {
    status: &'static str,
    witness: Vec<usize>,
    family: CycleFamily,
    graph6: String,
    n: usize,
    m: usize,
    probes: usize,
}

#[derive(Serialize)]
struct ProbeReport {
    graph6: String,
    n: usize,
    m: usize,
    classes: DegreeClasses,
    degenerated: DegeneratedPaths,
    matching_violations: Vec<MatchingViolation>,
    probes: LemmaProbes,
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
enum DischargeReport {
    Ok { graph6: String, expected_total_quarters: i64, ledger: ChargeLedger },
    Rejected { graph6: String, error: String },
}

#[derive(Serialize)]
struct StoreVerifyReport {
    checked: usize,
    discrepancies: Vec<cyclesat_cli::Discrepancy>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn emit<T: Serialize>(value: &T) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

/// The graph given on the command line, or every non-blank stdin line.
fn input_graphs(arg: &Option<String>) -> Result<Vec<(String, Graph)>> {
    let lines: Vec<String> = match arg {
        Some(s) => vec![s.clone()],
        None => io::stdin()
            .lock()
            .lines()
            .collect::<io::Result<Vec<_>>>()?
            .into_iter()
            .map(|l| l.trim().trim_start_matches(">>graph6<<").to_string())
            .filter(|l| !l.is_empty())
            .collect(),
    };
    if lines.is_empty() {
        bail!("no graph given: pass --graph6 or pipe graph6 lines on stdin");
    }
    lines
        .into_iter()
        .map(|s| {
            let g = Graph::from_graph6(&s).with_context(|| format!("cannot decode graph6 {s:?}"))?;
            Ok((s, g))
        })
        .collect()
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Construct(args) => construct(cli, args),
        Command::Verify { family, graph6 } => {
            let mut code = 0;
            for (g6, g) in input_graphs(graph6)? {
                let v = check_saturated(&g, family);
                if !v.is_saturated() {
                    code = EXIT_NOT_SATURATED;
                }
                let report = VerifyReport {
                    status: v.status_str(),
                    witness: v.witness(),
                    family: family.clone(),
                    graph6: g6,
                    n: g.n(),
                    m: g.m(),
                    probes: v.probes,
                };
                if cli.json {
                    emit(&report)?;
                } else {
                    println!(
                        "{}\t{}\tn={} m={}\twitness={:?}",
                        report.graph6, report.status, report.n, report.m, report.witness
                    );
                }
            }
            Ok(code)
        }
        Command::Search { n, family, mode, budget, no_store } => {
            let mode = match mode {
                ModeArg::Value => SearchMode::Value,
                ModeArg::Full => SearchMode::Full,
            };
            let res = compute_sat(*n, family, mode, &budget.budget()?)?;
            if !no_store {
                let store = Store::new(&cli.store);
                store
                    .append(&ResultRecord::from_search(&res))
                    .with_context(|| format!("cannot append to {}", store.path().display()))?;
            }
            if cli.json {
                emit(&res)?;
            } else {
                match res.sat {
                    Some(s) => println!("sat({}, {}) = {}", res.n, res.family, s),
                    None => println!("sat({}, {}) >= {} (budget exhausted)", res.n, res.family, res.lower_bound),
                }
                for w in &res.witnesses {
                    println!("{w}");
                }
                let c = &res.counters;
                println!("# {} graphs, {} checks, {} ms", c.graphs_enumerated, c.saturation_checks, c.wall_time_ms);
            }
            Ok(if res.sat.is_some() { 0 } else { EXIT_BUDGET })
        }
        Command::Probe { graph6 } => {
            for (g6, g) in input_graphs(graph6)? {
                let report = ProbeReport {
                    n: g.n(),
                    m: g.m(),
                    classes: degree_classes(&g),
                    degenerated: degenerated_paths(&g),
                    matching_violations: neighborhood_matching_violations(&g),
                    probes: lemma_probes(&g),
                    graph6: g6,
                };
                if cli.json {
                    emit(&report)?;
                } else {
                    print_probe(&report);
                }
            }
            Ok(0)
        }
        Command::Discharge { graph6 } => {
            let mut code = 0;
            for (g6, g) in input_graphs(graph6)? {
                let report = match discharge(&g) {
                    Ok(ledger) => DischargeReport::Ok {
                        graph6: g6,
                        expected_total_quarters: ChargeLedger::expected_total_quarters(&g),
                        ledger,
                    },
                    Err(e) => {
                        code = EXIT_NOT_SATURATED;
                        DischargeReport::Rejected { graph6: g6, error: e.to_string() }
                    }
                };
                if cli.json {
                    emit(&report)?;
                } else {
                    print_discharge(&report);
                }
            }
            Ok(code)
        }
        Command::Conjecture { id, r, s, a, from, to, budget } => {
            let conj = Conjecture::from_id(*id, *r, *s, *a)?;
            let report = check_conjecture(conj, *from..=*to, &budget.budget()?)?;
            if cli.json {
                emit(&report)?;
            } else {
                let scope = if report.asymptotic { " (claimed for large n only)" } else { "" };
                println!("conjecture {} for {}{}", report.id, report.family, scope);
                println!("{:>4} {:>11} {:>9} {:>8}", "n", "conjectured", "computed", "status");
                for row in &report.rows {
                    let show = |v: Option<u64>| v.map_or("-".to_string(), |x| x.to_string());
                    let computed = row.computed.map_or(format!(">={}", row.lower_bound), |x| x.to_string());
                    println!("{:>4} {:>11} {:>9} {:>8?}", row.n, show(row.conjectured), computed, row.status);
                }
            }
            let unknown = report.rows.iter().any(|r| r.computed.is_none());
            Ok(if unknown { EXIT_BUDGET } else { 0 })
        }
        Command::Formula { family, n, table } => {
            if *table {
                let rows = formula_table();
                if cli.json {
                    emit(&rows)?;
                } else {
                    for e in rows {
                        println!("{:<12} {:<28} {:<14} {:?}", e.family, e.closed_form, e.valid_for, e.status);
                    }
                }
                return Ok(0);
            }
            let (family, n) = family.as_ref().zip(*n).ok_or_else(|| anyhow!("--family and --n are required"))?;
            let res = sat_formula(family, n)?;
            if cli.json {
                emit(&res)?;
            } else {
                let value = match res.value {
                    FormulaValue::Exact { value } => value.to_string(),
                    FormulaValue::Bounds { lower, upper } => format!("{lower}..={upper}"),
                };
                println!("sat({}, {}) = {}\t{:?}\t{}", n, res.family, value, res.status, res.entry.closed_form);
            }
            Ok(0)
        }
        Command::Store(cmd) => store_command(cli, cmd),
    }
}

fn construct(cli: &Cli, args: &ConstructArgs) -> Result<u8> {
    let need = |v: Option<usize>, name: &str| v.ok_or_else(|| anyhow!("this construction needs --{name}"));
    let spec = match args.kind {
        Kind::Friendship => Construction::Friendship { k: need(args.k, "k")? },
        Kind::FriendshipPlus => Construction::FriendshipPlus { k: need(args.k, "k")? },
        Kind::SatN => Construction::SatN(need(args.n, "n")?),
        Kind::Star => Construction::Star(need(args.n, "n")?),
        Kind::JGraph => Construction::JGraph { s: need(args.s, "s")?, t: need(args.t, "t")?, r: args.r.unwrap_or(0) },
        Kind::Cycle => Construction::Cycle(need(args.n, "n")?),
        Kind::CyclePendant => Construction::CycleWithPendant(need(args.n, "n")?),
        Kind::Progression => Construction::progression_j_graph(need(args.a, "a")?, need(args.n, "n")?)?,
    };
    let g = generate(&spec)?;
    if cli.json {
        emit(&ConstructReport { construction: spec, n: g.n(), m: g.m(), graph6: g.to_graph6() })?;
    } else if args.format == Format::Dot {
        print!("{}", g.to_dot("G"));
    } else {
        println!("{}", g.to_graph6());
    }
    Ok(0)
}

fn store_command(cli: &Cli, cmd: &StoreCommand) -> Result<u8> {
    let store = Store::new(&cli.store);
    let ctx = || format!("store {}", store.path().display());
    match cmd {
        StoreCommand::Query { family, n } => {
            let hit = store.query(family, *n).with_context(ctx)?;
            if cli.json {
                emit(&hit)?;
            } else {
                match &hit {
                    None => println!("no record for {family} at n={n}"),
                    Some(r) => {
                        let value = r.sat.map_or(format!(">= {}", r.lower_bound), |s| s.to_string());
                        let kind = if r.exhaustive { "exhaustive" } else { "partial" };
                        println!("sat({}, {}) = {}\t{}\t{}", r.n, r.family, value, kind, r.timestamp);
                        for w in &r.witnesses {
                            println!("{w}");
                        }
                    }
                }
            }
            Ok(0)
        }
        StoreCommand::Verify => {
            let (checked, discrepancies) = store.reverify().with_context(ctx)?;
            let clean = discrepancies.is_empty();
            if cli.json {
                emit(&StoreVerifyReport { checked, discrepancies })?;
            } else {
                println!("{checked} witnesses checked, {} discrepancies", discrepancies.len());
                for d in &discrepancies {
                    println!("{}\tn={}\t{}\t{}", d.family, d.n, d.graph6, d.problem);
                }
            }
            Ok(if clean { 0 } else { EXIT_NOT_SATURATED })
        }
        StoreCommand::Merge { inputs } => {
            let others: Vec<Store> = inputs.iter().map(Store::new).collect();
            let kept = store.merge(&others).with_context(ctx)?;
            if cli.json {
                emit(&serde_json::json!({ "kept": kept }))?;
            } else {
                println!("{kept} records kept in {}", store.path().display());
            }
            Ok(0)
        }
    }
}

fn print_probe(r: &ProbeReport) {
    println!("{}\tn={} m={}", r.graph6, r.n, r.m);
    let c = &r.classes;
    for (name, set) in [
        ("D1", &c.d1),
        ("D2", &c.d2),
        ("D3", &c.d3),
        ("D2^0", &c.d2_zero),
        ("D2^1+", &c.d2_one_plus),
        ("D2^1-", &c.d2_one_minus),
        ("D2^2", &c.d2_two),
    ] {
        println!("  {name:<6} {:?}", set.iter().collect::<Vec<_>>());
    }
    for p in &r.degenerated.paths {
        println!("  path   {:?}{}", p.extension(), if p.closed { " (closed)" } else { "" });
    }
    for cyc in &r.degenerated.pure_cycles {
        println!("  cycle  {cyc:?}");
    }
    for v in &r.matching_violations {
        println!("  N({}) not a matching: {:?}", v.vertex, v.path);
    }
    println!("  {:?}", r.probes);
}

fn print_discharge(r: &DischargeReport) {
    match r {
        DischargeReport::Rejected { graph6, error } => println!("{graph6}\trejected: {error}"),
        DischargeReport::Ok { graph6, expected_total_quarters, ledger } => {
            println!("{graph6}");
            println!("{:>6} {:>6} {:>14} {:>8} {:>8}", "vertex", "degree", "class", "initial", "final");
            for v in &ledger.vertices {
                println!(
                    "{:>6} {:>6} {:>14} {:>8} {:>8}",
                    v.vertex,
                    v.degree,
                    format!("{:?}", v.class),
                    format_quarters(v.initial_quarters),
                    format_quarters(v.final_quarters)
                );
            }
            println!(
                "total {} -> {} (expected {})",
                format_quarters(ledger.initial_total_quarters),
                format_quarters(ledger.final_total_quarters),
                format_quarters(*expected_total_quarters)
            );
        }
    }
}
