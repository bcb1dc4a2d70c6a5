use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use tesscover::bounds::upper_bounds_with_cap;
use tesscover::clique_graph::clique_graph_with_cap;
use tesscover::coloring::{
    edge_coloring_delta_plus_one, exact_chromatic_index, exact_chromatic_number, greedy_vertex_coloring,
};
use tesscover::corpus::{corpus_generate, write_corpus, CorpusSpec};
use tesscover::graph::Graph;
use tesscover::io::{parse_cover_json, parse_graph_auto, write_graph, SCHEMA};
use tesscover::solver::{is_t_tessellable, min_cover_exact, Decision, SolveOptions};
use tesscover::tessellation::{exposed_maximal_cliques, validate_cover};
use tesscover::two_tess::is_two_tessellable;

mod gen;

#[derive(Parser)]
#[command(name = "tesscover", version, about = "Tessellation covers of graphs")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Common {
    /// Input file (edge list or graph6); standard input when absent or `-`.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Search-node budget for exact solvers.
    #[arg(long, global = true, default_value_t = tesscover::coloring::DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    #[arg(long, global = true, default_value_t = tesscover::solver::DEFAULT_CATALOG_CAP,
          value_parser = positive)]
    catalog_cap: usize,
    #[arg(long, global = true, default_value_t = tesscover::graph::DEFAULT_CLIQUE_CAP,
          value_parser = positive)]
    clique_cap: usize,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true, value_parser = positive)]
    threads: Option<usize>,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Minimum tessellation cover, or a t-tessellability decision with --t.
    Solve {
        #[arg(long, value_parser = positive)]
        t: Option<usize>,
    },
    /// Validate a cover JSON file against the input graph.
    Check { cover: PathBuf },
    /// Lower and upper bounds on the tessellation number.
    Bounds {
        /// Solve the colourings exactly instead of heuristically.
        #[arg(long)]
        exact: bool,
    },
    /// Decide whether two tessellations suffice.
    #[command(name = "2tess")]
    TwoTess,
    /// Clique graph as an edge list, with a JSON sidecar listing the cliques.
    Kgraph {
        /// Sidecar path; defaults to `<output>.json`.
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
    /// Vertex or edge colouring.
    #[command(group(ArgGroup::new("target").required(true).args(["edges", "vertices"])))]
    Color {
        #[arg(long)]
        edges: bool,
        #[arg(long)]
        vertices: bool,
        #[arg(long)]
        exact: bool,
    },
    /// Build a construction instance.
    Gen(gen::GenArgs),
    /// Write a seeded corpus of edge-list files into the --output directory.
    Corpus {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest order of the exhaustive connected-graph family.
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
}

/// Failure reported on standard error with exit status 2.
#[derive(Debug)]
pub struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

pub type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.common.threads {
        // Only fails when a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match run(cli) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let c = &cli.common;
    let opts = SolveOptions {
        budget: c.budget,
        catalog_cap: c.catalog_cap,
        clique_cap: c.clique_cap,
    };
    match cli.command {
        Command::Solve { t: None } => {
            let g = read_graph(c)?;
            emit_json(c, &min_cover_exact(&g, &opts))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { t: Some(t) } => {
            let g = read_graph(c)?;
            let (label, cover, code) = match is_t_tessellable(&g, t, &opts) {
                Decision::Yes(cover) => ("yes", Some(cover), 0),
                Decision::No => ("no", None, 1),
                Decision::Unknown => ("unknown", None, 2),
            };
            emit_json(c, &json!({ "t": t, "decision": label, "cover": cover }))?;
            if code == 2 {
                eprintln!("error: search budget exhausted before a decision");
            }
            Ok(ExitCode::from(code))
        }
        Command::Check { cover } => {
            let g = read_graph(c)?;
            let (n, cover) = parse_cover_json(&fs::read_to_string(&cover)?)?;
            if n != g.n() {
                return Err(Failure(format!("cover is for {n} vertices, graph has {}", g.n())));
            }
            match validate_cover(&g, &cover) {
                Ok(()) => {
                    let exposed = exposed_maximal_cliques(&g, &cover)?;
                    emit_json(c, &json!({ "valid": true, "size": cover.len(), "exposed": exposed }))?;
                    Ok(ExitCode::SUCCESS)
                }
                Err(report) => {
                    emit_json(c, &json!({ "valid": false, "violations": report.violations }))?;
                    eprintln!("error: {report}");
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::Bounds { exact } => {
            let g = read_graph(c)?;
            let report = upper_bounds_with_cap(&g, exact, c.budget, c.clique_cap)?;
            emit_json(c, &report)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::TwoTess => {
            let g = read_graph(c)?;
            let r = is_two_tessellable(&g);
            emit_json(c, &r)?;
            Ok(if r.decision { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Kgraph { sidecar } => {
            let g = read_graph(c)?;
            let kg = clique_graph_with_cap(&g, c.clique_cap)?;
            write_output(c.output.as_deref(), &write_graph(&kg.kg))?;
            let doc = json!({ "cliques": kg.cliques });
            write_sidecar(c, sidecar.as_deref(), &doc)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Color { edges, vertices: _, exact } => {
            let g = read_graph(c)?;
            let (target, count, colors, solved) = if edges {
                let (col, solved) = if exact {
                    let r = exact_chromatic_index(&g, c.budget);
                    let solved = r.is_solved();
                    (r.best().unwrap_or_else(|| edge_coloring_delta_plus_one(&g)), solved)
                } else {
                    (edge_coloring_delta_plus_one(&g), false)
                };
                ("edges", col.count, col.colors, solved)
            } else {
                let (col, solved) = if exact {
                    let r = exact_chromatic_number(&g, c.budget);
                    let solved = r.is_solved();
                    (r.best().unwrap_or_else(|| greedy_vertex_coloring(&g)), solved)
                } else {
                    (greedy_vertex_coloring(&g), false)
                };
                ("vertices", col.count, col.colors, solved)
            };
            emit_json(c, &json!({ "target": target, "count": count, "colors": colors, "exact": solved }))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen(args) => gen::run(c, args),
        Command::Corpus { seed, max_n } => {
            let dir = c
                .output
                .as_deref()
                .ok_or_else(|| Failure("corpus needs --output <dir>".into()))?;
            let spec = CorpusSpec {
                small_connected_max_n: max_n,
                ..CorpusSpec::default()
            };
            let entries = corpus_generate(seed, &spec);
            write_corpus(dir, &entries)?;
            println!("{}", json!({ "schema": SCHEMA, "seed": seed, "files": entries.len() }));
            Ok(ExitCode::SUCCESS)
        }
    }
}

pub fn read_input(c: &Common) -> Result<String, Failure> {
    match c.input.as_deref() {
        None => read_stdin(),
        Some(p) if p == Path::new("-") => read_stdin(),
        Some(p) => fs::read_to_string(p).map_err(|e| Failure(format!("{}: {e}", p.display()))),
    }
}

fn read_stdin() -> Result<String, Failure> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s)?;
    Ok(s)
}

pub fn read_graph(c: &Common) -> Result<Graph, Failure> {
    Ok(parse_graph_auto(&read_input(c)?)?)
}

/// Serialises `value` as a JSON object with the schema version in front.
fn with_schema<T: Serialize>(value: &T) -> Result<Value, Failure> {
    let mut map = serde_json::Map::new();
    map.insert("schema".into(), SCHEMA.into());
    match serde_json::to_value(value)? {
        Value::Object(fields) => map.extend(fields),
        other => {
            map.insert("value".into(), other);
        }
    }
    Ok(Value::Object(map))
}

fn emit_json<T: Serialize>(c: &Common, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string(&with_schema(value)?)? + "\n";
    write_output(c.output.as_deref(), &text)
}

pub fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure(format!("{}: {e}", p.display()))),
        None => {
            io::stdout().lock().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

/// Sidecar JSON goes to `explicit`, else next to `--output`; with neither
/// there is nowhere to put it and it is skipped.
pub fn write_sidecar<T: Serialize>(c: &Common, explicit: Option<&Path>, value: &T) -> Result<(), Failure> {
    let path = match (explicit, c.output.as_deref()) {
        (Some(p), _) => p.to_path_buf(),
        (None, Some(out)) => {
            let mut s = out.as_os_str().to_owned();
            s.push(".json");
            PathBuf::from(s)
        }
        (None, None) => return Ok(()),
    };
    let text = serde_json::to_string(&with_schema(value)?)? + "\n";
    write_output(Some(&path), &text)
}
