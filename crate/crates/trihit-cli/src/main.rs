mod analyze;
mod commands;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use trihit::geometry::{build_graph_with, Scene};
use trihit::io::{parse_graph, parse_scene};
use trihit::oracle::DEFAULT_ORACLE_CAP;
use trihit::{Exec, Graph};

/// Triangle hitting on geometric intersection graphs.
#[derive(Parser, Debug)]
#[command(name = "trihit", version, about)]
pub struct Cli {
    /// Print every report as a JSON document.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the random generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest vertex count the brute-force oracles accept.
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_CAP, value_parser = positive)]
    oracle_cap: usize,
    /// Disable rayon even when it is compiled in.
    #[arg(long, global = true)]
    sequential: bool,
    /// Progress notes on stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Intersection graph of a scene, plus a vertex map sidecar.
    BuildGraph {
        #[arg(long)]
        scene: PathBuf,
        /// Graph file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Vertex map; defaults to `<out>.map` when `--out` is given.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Decide whether a solution of size at most k exists; exit 0 yes, 1 no, 2 overflow.
    SolveTh(commands::SolveArgs),
    /// Hardness scene of a CNF formula.
    GenSat2dir {
        #[arg(long)]
        cnf: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Crenellation parameter t >= 2.
        #[arg(long)]
        crenellate: Option<usize>,
        /// Also compare satisfiability with the hitting-set answer.
        #[arg(long)]
        verify: bool,
    },
    /// Seeded random instance.
    GenRandom(commands::RandomArgs),
    /// Structural reports.
    #[command(subcommand)]
    Analyze(analyze::AnalyzeCommand),
    /// Brute-force answers on small graphs.
    Oracle {
        #[arg(value_enum)]
        query: OracleQuery,
        #[command(flatten)]
        input: InputArgs,
        /// Path length for the `pt` query.
        #[arg(long, default_value_t = 3)]
        t: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum OracleQuery {
    Th,
    Fvs,
    Pseudoforest,
    Pt,
    Matching,
    Treewidth,
    Clique,
}

#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
    scene: Option<PathBuf>,
    #[arg(long)]
    graph: Option<PathBuf>,
}

pub struct Ctx {
    pub json: bool,
    pub seed: u64,
    pub oracle_cap: usize,
    pub exec: Exec,
    pub verbose: bool,
}

impl Ctx {
    pub fn note(&self, msg: impl AsRef<str>) {
        if self.verbose {
            eprintln!("{}", msg.as_ref());
        }
    }
}

pub fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

pub fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

pub fn load_scene(path: &Path) -> Result<Scene> {
    parse_scene(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

/// The graph, and the scene it came from when one was given.
pub fn load_input(input: &InputArgs, exec: Exec) -> Result<(Graph, Option<Scene>)> {
    match (&input.scene, &input.graph) {
        (Some(s), _) => {
            let scene = load_scene(s)?;
            Ok((build_graph_with(&scene, exec), Some(scene)))
        }
        (None, Some(g)) => Ok((parse_graph(&read(g)?).with_context(|| format!("parsing {}", g.display()))?, None)),
        (None, None) => bail!("one of --scene or --graph is required"),
    }
}

/// Prints `value` as JSON or `text` depending on `--json`.
pub fn emit(ctx: &Ctx, value: serde_json::Value, text: impl FnOnce() -> String) {
    if ctx.json {
        println!("{}", serde_json::to_string_pretty(&value).expect("json values serialize"));
    } else {
        print!("{}", text());
    }
}

/// Exit status of a failed run: 2 for resource limits, 3 for bad input
/// and usage errors.
fn failure_code(err: &anyhow::Error) -> u8 {
    use trihit::Error as E;
    match err.chain().find_map(|e| e.downcast_ref::<E>()) {
        Some(
            E::WidthOverflow { .. }
            | E::OracleTooLarge { .. }
            | E::SizeCap(_)
            | E::CliqueOverflow { .. }
            | E::PerturbationFailed(_),
        ) => 2,
        _ => 3,
    }
}

fn run(cli: Cli) -> Result<u8> {
    let ctx = Ctx {
        json: cli.json,
        seed: cli.seed,
        oracle_cap: cli.oracle_cap,
        exec: if cli.sequential { Exec::Sequential } else { Exec::default() },
        verbose: cli.verbose,
    };
    match cli.command {
        Command::BuildGraph { scene, out, map } => commands::build_graph(&ctx, &scene, out.as_deref(), map.as_deref()),
        Command::SolveTh(args) => commands::solve(&ctx, &args),
        Command::GenSat2dir { cnf, out, crenellate, verify } => commands::gen_sat2dir(&ctx, &cnf, &out, crenellate, verify),
        Command::GenRandom(args) => commands::gen_random(&ctx, &args),
        Command::Analyze(cmd) => analyze::run(&ctx, &cmd),
        Command::Oracle { query, input, t } => commands::oracle(&ctx, query, &input, t),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(failure_code(&e))
        }
    }
}
