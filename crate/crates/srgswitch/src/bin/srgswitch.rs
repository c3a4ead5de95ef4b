use std::error::Error as StdError;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use srgswitch::parallel::ParallelScanner;
use srgswitch::tables::Table;
use srgswitch::transcript::TranscriptRecord;
use srgswitch::{graph6, signs, transcript};
use srgswitch_core::graphs::{check_srg, sp, Family};
use srgswitch_core::hadamard::{
    graph_of, h1, h2, hadamard_of, is_graphical, is_hadamard, is_normalized, is_regular, kron_power,
    row_sum_sign,
};
use srgswitch_core::product::{
    ones_in_colspace_product, predicted_2rank, seidel_product, theorem_main_construct,
};
use srgswitch_core::search::{replay, search_increase_with, Enumeration, SearchReport};
use srgswitch_core::switching::{classify_gm, gm_switch, rank_delta, seidel_isolate, seidel_switch};
use srgswitch_core::{
    Graph, NamedGraph, ProductPlan, SearchConfig, SignMatrix, SrgParams, Transcript, VertexSet,
};

type CliResult<T = ()> = Result<T, Box<dyn StdError>>;

#[derive(Parser)]
#[command(name = "srgswitch", version, about = "2-ranks, switching and products of strongly regular graphs")]
struct Cli {
    /// Print a JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named or parametrised graph.
    Construct {
        #[command(flatten)]
        input: GraphInput,
        /// Write the graph in graph6 format.
        #[arg(long, value_name = "FILE")]
        g6: Option<PathBuf>,
    },
    /// 2-rank of the adjacency matrix.
    Rank(ReadOnly),
    /// Certify strong regularity and report the parameters.
    SrgCheck(ReadOnly),
    /// Seidel switching with respect to a vertex set.
    SeidelSwitch {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        set: SetArg,
        /// Isolate this vertex instead of switching a given set.
        #[arg(long, value_name = "LABEL", conflicts_with = "set")]
        isolate: Option<String>,
        #[arg(long, value_name = "FILE")]
        g6: Option<PathBuf>,
    },
    /// Godsil-McKay switching with respect to a set.
    GmSwitch {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        set: SetArg,
        #[arg(long, value_name = "FILE")]
        g6: Option<PathBuf>,
    },
    /// Check the Godsil-McKay condition for a set.
    GmValidate {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        set: SetArg,
    },
    /// ⊗H product of two or more graphs.
    Product {
        #[command(flatten)]
        factors: Factors,
        #[arg(long, value_name = "FILE")]
        g6: Option<PathBuf>,
    },
    /// 2-rank of a ⊗H product predicted from its factors.
    PredictRank {
        #[command(flatten)]
        factors: Factors,
    },
    /// Greedy search for 2-rank increasing GM switches.
    Search {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        set_size: usize,
        /// Rank-preserving moves allowed between increases.
        #[arg(long, default_value_t = 5000)]
        budget: usize,
        /// Stop once this 2-rank is reached.
        #[arg(long)]
        max_rank: Option<usize>,
        /// Pick uniformly among increasing sets instead of the first one.
        #[arg(long)]
        random: bool,
        /// Save the path as a transcript.
        #[arg(long, value_name = "FILE")]
        transcript: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        g6: Option<PathBuf>,
    },
    /// Replay a switching transcript, checking every step.
    Replay {
        #[arg(long, value_name = "FILE", required_unless_present = "table")]
        transcript: Option<PathBuf>,
        /// A bundled table: table1, table2-left, table2-right, table3-left,
        /// table3-right, table3-left-erratum.
        #[arg(long, conflicts_with = "transcript", value_parser = parse_table)]
        table: Option<Table>,
        /// Write the final graph.
        #[arg(long, value_name = "FILE")]
        g6: Option<PathBuf>,
    },
    /// Properties of a ±1 matrix and its graph.
    HadamardCheck {
        /// Matrix in +/- text format.
        #[arg(long, value_name = "FILE", required_unless_present_any = ["kron", "from_graph"])]
        file: Option<PathBuf>,
        /// Kronecker product of h1/h2 factors, e.g. "h1,h2".
        #[arg(long, conflicts_with_all = ["file", "from_graph"])]
        kron: Option<String>,
        /// Use (J − 2A) of a named graph or graph6 file.
        #[arg(long, value_name = "GRAPH", conflicts_with = "file")]
        from_graph: Option<String>,
        /// Write graph_of(H) in graph6 format.
        #[arg(long, value_name = "FILE")]
        g6: Option<PathBuf>,
    },
    /// Recursive product construction of a P0/P+/P- graph with a given 2-rank.
    Theorem4 {
        /// p0, p+ or p-.
        #[arg(long)]
        family: Family,
        #[arg(long)]
        m: usize,
        /// One per level: a graph name, table:NAME for the end of a bundled
        /// replay, transcript:FILE, or a graph6 file.
        #[arg(long = "factor", value_name = "SOURCE")]
        factors: Vec<String>,
        /// Write the certified SRG.
        #[arg(long, value_name = "FILE")]
        g6: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// sp3, 2k2, k4, k1, lattice4, shrikhande, clebsch, g-3, g'-3, g+3, g'+3.
    #[arg(long)]
    graph: Option<String>,
    /// Parametrised family: sp (Sp(2m,2)), h1 or h2 (graph of H^⊗m).
    #[arg(long, value_enum, requires = "m")]
    construct: Option<Construct>,
    /// Read a graph6 file.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct GraphInput {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long)]
    m: Option<usize>,
}

/// Input for commands that only read a graph; `--g6` is the input file.
#[derive(Args)]
struct ReadOnly {
    #[arg(long)]
    graph: Option<String>,
    #[arg(long, value_enum, requires = "m")]
    construct: Option<Construct>,
    #[arg(long, value_name = "FILE", visible_alias = "input")]
    g6: Option<PathBuf>,
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Args)]
struct SetArg {
    /// Vertex labels separated by ';' or whitespace; repeatable.
    #[arg(long = "set", value_name = "LABELS")]
    set: Vec<String>,
}

#[derive(Args)]
struct Factors {
    /// Graph names, table:NAME, transcript:FILE or graph6 files, left to right.
    #[arg(required = true, num_args = 2..)]
    factors: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construct {
    Sp,
    H1,
    H2,
}

fn parse_table(s: &str) -> Result<Table, String> {
    Table::from_name(s).ok_or_else(|| format!("unknown table {s:?}"))
}

fn with_index_labels(g: Graph) -> Graph {
    if g.labels().is_some() {
        return g;
    }
    let labels = (0..g.n()).map(|i| i.to_string()).collect();
    g.with_labels(labels).expect("one label per vertex")
}

fn read_g6(path: &Path) -> CliResult<Graph> {
    Ok(with_index_labels(graph6::read_file(path)?))
}

fn build(
    graph: Option<&str>,
    construct: Option<Construct>,
    file: Option<&Path>,
    m: Option<usize>,
) -> CliResult<Graph> {
    if let Some(name) = graph {
        return Ok(name.parse::<NamedGraph>()?.build());
    }
    if let Some(path) = file {
        return read_g6(path);
    }
    let m = m.ok_or("--m is required")?;
    Ok(match construct.ok_or("no graph given")? {
        Construct::Sp => sp(m)?,
        Construct::H1 => with_index_labels(graph_of(&kron_power(&h1(), m))?),
        Construct::H2 => with_index_labels(graph_of(&kron_power(&h2(), m))?),
    })
}

impl GraphInput {
    fn load(&self) -> CliResult<Graph> {
        let s = &self.source;
        build(s.graph.as_deref(), s.construct, s.input.as_deref(), self.m)
    }
}

impl ReadOnly {
    fn load(&self) -> CliResult<Graph> {
        if [self.graph.is_some(), self.construct.is_some(), self.g6.is_some()]
            .iter()
            .filter(|&&b| b)
            .count()
            != 1
        {
            return Err(Box::new(Usage(
                "exactly one of --graph, --construct, --g6 is required".into(),
            )));
        }
        build(self.graph.as_deref(), self.construct, self.g6.as_deref(), self.m)
    }
}

impl SetArg {
    fn labels(&self) -> Vec<String> {
        self.set
            .iter()
            .flat_map(|s| {
                if s.contains(';') {
                    s.split(';').map(str::to_string).collect::<Vec<_>>()
                } else {
                    s.split_whitespace().map(str::to_string).collect()
                }
            })
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect()
    }

    fn resolve(&self, g: &Graph) -> CliResult<VertexSet> {
        let labels = self.labels();
        if labels.is_empty() {
            return Err(Box::new(Usage("--set is required".into())));
        }
        Ok(VertexSet::from_labels(g, &labels)?)
    }
}

/// A usage problem detected after argument parsing.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl StdError for Usage {}

fn load_transcript(source: &str) -> CliResult<Transcript> {
    if let Some(name) = source.strip_prefix("table:") {
        return Ok(parse_table(name)?.transcript());
    }
    if let Some(path) = source.strip_prefix("transcript:") {
        return Ok(transcript::load(Path::new(path))?);
    }
    Err(format!("not a transcript source: {source}").into())
}

fn factor(source: &str) -> CliResult<Graph> {
    if source.starts_with("table:") || source.starts_with("transcript:") {
        return Ok(replay(&load_transcript(source)?)?.final_graph);
    }
    match source.parse::<NamedGraph>() {
        Ok(name) => Ok(name.build()),
        Err(_) => read_g6(Path::new(source)),
    }
}

fn params_json(p: Option<SrgParams>) -> Value {
    p.map_or(Value::Null, |p| {
        json!({"n": p.n, "k": p.k, "lambda": p.lambda, "mu": p.mu})
    })
}

fn params_text(p: Option<SrgParams>) -> String {
    p.map_or_else(|| "not strongly regular".to_string(), |p| p.to_string())
}

fn write_g6(path: Option<&PathBuf>, g: &Graph) -> CliResult {
    if let Some(p) = path {
        graph6::write_file(p, g)?;
    }
    Ok(())
}

fn graph_summary(g: &Graph) -> Value {
    json!({
        "n": g.n(),
        "edges": g.edge_count(),
        "rank": g.rank2(),
        "ones_in_colspace": g.ones_in_colspace(),
        "srg": params_json(check_srg(g)),
    })
}

fn emit(json_mode: bool, value: Value, text: impl FnOnce() -> String) {
    if json_mode {
        println!("{value}");
    } else {
        println!("{}", text());
    }
}

fn report_json(report: &SearchReport) -> Value {
    json!({
        "start_rank": report.start_rank,
        "params": params_json(report.params),
        "ranks": report.rank_sequence(),
        "steps": report.path.iter().map(|p| json!({
            "set": p.set.labels(&report.final_graph).map_or_else(
                || json!(p.set.members()),
                |l| json!(l),
            ),
            "rank": p.rank_after,
            "delta": p.delta,
            "ones_in_colspace": p.ones_in_colspace,
        })).collect::<Vec<_>>(),
        "final_rank": report.final_rank,
        "ones_in_colspace_final": report.ones_in_colspace_final,
        "terminated_by": report.terminated_by.as_str(),
    })
}

fn hadamard_json(h: &SignMatrix) -> Value {
    let graphical = is_graphical(h);
    let srg = if graphical {
        graph_of(h).ok().and_then(|g| check_srg(&g))
    } else {
        None
    };
    json!({
        "n": h.n(),
        "hadamard": is_hadamard(h),
        "graphical": graphical,
        "regular": is_regular(h),
        "normalized": is_normalized(h),
        "row_sum_sign": row_sum_sign(h).ok(),
        "graph_srg": params_json(srg),
    })
}

fn run(cli: Cli) -> CliResult {
    let js = cli.json;
    match cli.command {
        Command::Construct { input, g6 } => {
            let g = input.load()?;
            write_g6(g6.as_ref(), &g)?;
            let summary = graph_summary(&g);
            emit(js, summary, || {
                format!(
                    "n={} edges={} rank={} srg={}",
                    g.n(),
                    g.edge_count(),
                    g.rank2(),
                    params_text(check_srg(&g))
                )
            });
        }
        Command::Rank(input) => {
            let g = input.load()?;
            let r = g.rank2();
            emit(
                js,
                json!({"n": g.n(), "rank": r, "ones_in_colspace": g.ones_in_colspace()}),
                || r.to_string(),
            );
        }
        Command::SrgCheck(input) => {
            let g = input.load()?;
            let p = check_srg(&g);
            let fam = p.and_then(Family::classify);
            emit(
                js,
                json!({
                    "srg": params_json(p),
                    "family": fam.map(|(f, _)| f.name()),
                    "m": fam.map(|(_, m)| m),
                }),
                || match fam {
                    Some((f, m)) => format!("{} {}({m})", params_text(p), f.name()),
                    None => params_text(p),
                },
            );
            if p.is_none() {
                return Err("not strongly regular".into());
            }
        }
        Command::SeidelSwitch {
            input,
            set,
            isolate,
            g6,
        } => {
            let g = input.load()?;
            let s = match isolate {
                Some(label) => seidel_isolate(&g, g.label_index(&label)?)?,
                None => seidel_switch(&g, &set.resolve(&g)?)?,
            };
            write_g6(g6.as_ref(), &s)?;
            let (before, after) = (g.rank2(), s.rank2());
            emit(
                js,
                json!({"rank_before": before, "graph": graph_summary(&s)}),
                || format!("rank {before} -> {after}"),
            );
        }
        Command::GmSwitch { input, set, g6 } => {
            let g = input.load()?;
            let w = set.resolve(&g)?;
            let s = gm_switch(&g, &w)?;
            write_g6(g6.as_ref(), &s)?;
            let (before, after) = (g.rank2(), s.rank2());
            emit(
                js,
                json!({"rank_before": before, "graph": graph_summary(&s)}),
                || format!("rank {before} -> {after}"),
            );
        }
        Command::GmValidate { input, set } => {
            let g = input.load()?;
            let w = set.resolve(&g)?;
            match classify_gm(&g, &w)? {
                Some(c) => {
                    let delta = rank_delta(&g, &w)?;
                    let label = |v: &usize| g.label(*v).unwrap_or_default().to_string();
                    let half: Vec<String> = c.half.iter().map(label).collect();
                    emit(
                        js,
                        json!({
                            "valid": true,
                            "induced_degree": c.induced_degree,
                            "half": half,
                            "full": c.full.len(),
                            "zero": c.zero.len(),
                            "rank_delta": delta,
                        }),
                        || {
                            format!(
                                "valid: induced degree {}, {} half, {} full, {} zero, rank delta {delta:+}",
                                c.induced_degree,
                                c.half.len(),
                                c.full.len(),
                                c.zero.len()
                            )
                        },
                    );
                }
                None => {
                    if js {
                        println!("{}", json!({"valid": false}));
                    }
                    return Err("not a Godsil-McKay set".into());
                }
            }
        }
        Command::Product { factors, g6 } => {
            let gs = factors
                .factors
                .iter()
                .map(|f| factor(f))
                .collect::<CliResult<Vec<_>>>()?;
            let p = gs[1..].iter().fold(gs[0].clone(), |acc, g| seidel_product(&acc, g));
            write_g6(g6.as_ref(), &p)?;
            emit(js, graph_summary(&p), || {
                format!(
                    "n={} rank={} ones_in_colspace={} srg={}",
                    p.n(),
                    p.rank2(),
                    p.ones_in_colspace(),
                    params_text(check_srg(&p))
                )
            });
        }
        Command::PredictRank { factors } => {
            let gs = factors
                .factors
                .iter()
                .map(|f| factor(f))
                .collect::<CliResult<Vec<_>>>()?;
            let mut acc = gs[0].clone();
            let mut predicted = acc.rank2();
            let mut ones = acc.ones_in_colspace();
            for g in &gs[1..] {
                predicted = predicted_2rank(&acc, g);
                ones = ones_in_colspace_product(&acc, g);
                acc = seidel_product(&acc, g);
            }
            emit(
                js,
                json!({
                    "factor_ranks": gs.iter().map(Graph::rank2).collect::<Vec<_>>(),
                    "predicted_rank": predicted,
                    "ones_in_colspace": ones,
                }),
                || predicted.to_string(),
            );
        }
        Command::Search {
            input,
            seed,
            set_size,
            budget,
            max_rank,
            random,
            transcript: out,
            g6,
        } => {
            let g = input.load()?;
            let cfg = SearchConfig {
                set_size,
                budget_without_increase: budget,
                rng_seed: seed,
                max_rank,
                enumeration: if random {
                    Enumeration::Random
                } else {
                    Enumeration::Exhaustive
                },
            };
            let report = search_increase_with(&g, &cfg, &ParallelScanner::from_env())?;
            write_g6(g6.as_ref(), &report.final_graph)?;
            if let Some(path) = out {
                let start = input.source.graph.as_deref().unwrap_or("sp3");
                let rec = TranscriptRecord::from_report(start, &g, &report);
                let text = serde_json::to_string_pretty(&rec)? + "\n";
                std::fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
            }
            emit(js, report_json(&report), || {
                let ranks: Vec<String> = report.rank_sequence().iter().map(|r| r.to_string()).collect();
                format!(
                    "ranks {} ({}, {} steps)",
                    ranks.join(" "),
                    report.terminated_by.as_str(),
                    report.path.len()
                )
            });
        }
        Command::Replay {
            transcript: path,
            table,
            g6,
        } => {
            let t = match (table, path) {
                (Some(t), _) => t.transcript(),
                (None, Some(p)) => transcript::load(&p)?,
                (None, None) => unreachable!("clap requires one"),
            };
            let report = replay(&t)?;
            write_g6(g6.as_ref(), &report.final_graph)?;
            if js {
                println!("{}", report_json(&report));
            } else {
                println!("start {} rank {}", t.start, report.start_rank);
                for (i, p) in report.path.iter().enumerate() {
                    println!("step {}: {}", i + 1, p.rank_after);
                }
            }
        }
        Command::HadamardCheck {
            file,
            kron,
            from_graph,
            g6,
        } => {
            let h = if let Some(spec) = kron {
                let mut h = SignMatrix::unit();
                for f in spec.split(',').map(str::trim) {
                    let next = match f {
                        "h1" => h1(),
                        "h2" => h2(),
                        other => return Err(Box::new(Usage(format!("unknown factor {other:?}")))),
                    };
                    h = srgswitch_core::hadamard::kron(&h, &next);
                }
                h
            } else if let Some(src) = from_graph {
                hadamard_of(&factor(&src)?).0
            } else {
                signs::read_file(file.as_deref().expect("clap requires one"))?
            };
            if let Some(p) = g6.as_ref() {
                graph6::write_file(p, &graph_of(&h)?)?;
            }
            let v = hadamard_json(&h);
            emit(js, v.clone(), || {
                format!(
                    "order {} hadamard={} graphical={} regular={} normalized={} graph srg={}",
                    h.n(),
                    v["hadamard"],
                    v["graphical"],
                    v["regular"],
                    v["normalized"],
                    params_text(if v["graphical"] == true {
                        graph_of(&h).ok().and_then(|g| check_srg(&g))
                    } else {
                        None
                    })
                )
            });
        }
        Command::Theorem4 {
            family,
            m,
            factors,
            g6,
        } => {
            let gs = factors
                .iter()
                .map(|f| factor(f))
                .collect::<CliResult<Vec<_>>>()?;
            let plan = ProductPlan::new(family, m, gs.iter().map(Graph::rank2).collect())?;
            let c = theorem_main_construct(&plan, &gs)?;
            write_g6(g6.as_ref(), &c.srg)?;
            emit(
                js,
                json!({
                    "family": family.name(),
                    "m": m,
                    "params": params_json(Some(c.params)),
                    "rank": c.rank,
                    "predicted_rank": plan.predicted_rank(),
                    "chained_prediction": c.chained_prediction,
                    "n": c.srg.n(),
                }),
                || format!("{} rank {}", c.params, c.rank),
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<Usage>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
    }
}
