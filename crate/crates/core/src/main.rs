use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use domgame::edge_game::{edge_game_value, edge_game_value_via_line_graph};
use domgame::game::{game_value, Player};
use domgame::graph::{parse_graph6, to_graph6, BitSet, Graph};
use domgame::harness::{run_sweep, verify_figure1, Check, Filters, InputSource, SweepConfig};
use domgame::recognizers::{
    find_edge_dominating_circuit, find_edge_dominating_trail, find_open_edge_dominating_trail, forbidden_subgraph_free,
    is_claw_free, is_cubic, is_hamiltonian, is_traceable, Pattern,
};
use domgame::strategies::{edge_circuit_profile, simulate, PotentialProfile, StallerModel};
use domgame::transforms::{contract_triangles, inflate};

#[derive(Parser)]
#[command(name = "domgame", version, about = "Domination game solver and verification sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// γ_g and γ_g' of one graph, optionally with predominated vertices.
    Solve {
        graph6: String,
        #[arg(long, value_delimiter = ',')]
        predominated: Vec<usize>,
    },
    /// Edge game values, computed directly and through the line graph.
    EdgeSolve { graph6: String },
    /// Every structural predicate the library knows.
    Recognize { graph6: String },
    /// Simulates a potential strategy and audits its trace.
    StrategyAudit {
        graph6: String,
        #[arg(long, value_enum)]
        profile: ProfileArg,
        #[arg(long, value_enum, default_value = "exact")]
        staller: StallerArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Triangle inflation of a cubic graph, or its inverse.
    Transform {
        #[arg(value_enum)]
        op: TransformOp,
        graph6: String,
    },
    /// Runs checks over a corpus.
    Sweep(SweepArgs),
    /// The builtin sharpness instances.
    Figure1,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Cubic,
    ClawFree,
    EdgeCircuit,
}

#[derive(Clone, Copy, ValueEnum)]
enum StallerArg {
    Exact,
    Greedy,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformOp {
    Inflate,
    Contract,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(clap::Args)]
struct SweepArgs {
    /// graph6 files, one graph per line.
    #[arg(long, num_args = 1.., conflicts_with = "gen_n")]
    input: Vec<PathBuf>,
    /// Use the builtin generator for all graphs on this many vertices.
    #[arg(long)]
    gen_n: Option<usize>,
    #[arg(long = "check", required_unless_present = "equality")]
    checks: Vec<Check>,
    /// Record equality cases `γ_g = ⌈n/2⌉`.
    #[arg(long)]
    equality: bool,
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    min_degree: Option<usize>,
    #[arg(long)]
    min_diameter: Option<usize>,
    #[arg(long)]
    claw_free: bool,
    #[arg(long)]
    cubic: bool,
    /// Evaluate the line graph of each ingested graph.
    #[arg(long)]
    line_graph: bool,
    #[arg(long)]
    max_edges: Option<usize>,
    #[arg(long)]
    order: Option<usize>,
    #[arg(long, env = "DOMGAME_JOBS", default_value_t = 0)]
    jobs: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

/// Outcome of a subcommand: the JSON/text to print and whether every check passed.
type Outcome = Result<(String, bool), String>;

fn graph(s: &str) -> Result<Graph, String> {
    parse_graph6(s).map_err(|e| format!("bad graph6 `{s}`: {e}"))
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serialisable")
}

fn solve(g6: &str, predominated: &[usize]) -> Outcome {
    let g = graph(g6)?;
    if let Some(&v) = predominated.iter().find(|&&v| v >= g.n()) {
        return Err(format!("vertex {v} out of range"));
    }
    let pre = BitSet::from_indices(predominated.iter().copied());
    let d = game_value(&g, Player::Dominator, pre).moves_remaining;
    let s = game_value(&g, Player::Staller, pre).moves_remaining;
    let out = json!({ "graph6": g6, "n": g.n(), "m": g.m(), "predominated": predominated, "gamma_g": d, "gamma_g_staller": s });
    Ok((pretty(&out), true))
}

fn edge_solve(g6: &str) -> Outcome {
    let g = graph(g6)?;
    let err = |e: domgame::graph::GraphError| e.to_string();
    let mut out = json!({ "graph6": g6, "m": g.m() });
    let mut agree = true;
    for (key, p) in [("gamma_eg", Player::Dominator), ("gamma_eg_staller", Player::Staller)] {
        let direct = edge_game_value(&g, p, BitSet::EMPTY).map_err(err)?.moves_remaining;
        let via = edge_game_value_via_line_graph(&g, p).map_err(err)?.moves_remaining;
        agree &= direct == via;
        out[key] = json!(direct);
        out[format!("{key}_via_line_graph")] = json!(via);
    }
    out["agree"] = json!(agree);
    Ok((pretty(&out), agree))
}

fn recognize(g6: &str) -> Outcome {
    let g = graph(g6)?;
    let decision = |d| serde_json::to_value::<domgame::recognizers::Decision>(d).unwrap();
    let out: Value = json!({
        "graph6": g6,
        "n": g.n(),
        "m": g.m(),
        "connected": g.is_connected(),
        "diameter": g.diameter().to_string(),
        "min_degree": if g.n() > 0 { Some(g.min_degree()) } else { None },
        "claw_free": is_claw_free(&g),
        "cubic": is_cubic(&g),
        "k4_free": forbidden_subgraph_free(&g, Pattern::K4),
        "diamond_free": forbidden_subgraph_free(&g, Pattern::Diamond),
        "c6plus_free": forbidden_subgraph_free(&g, Pattern::C6Plus),
        "traceable": is_traceable(&g),
        "hamiltonian": is_hamiltonian(&g),
        "edge_dominating_circuit": decision(find_edge_dominating_circuit(&g).decision()),
        "edge_dominating_trail": decision(find_edge_dominating_trail(&g).decision()),
        "open_edge_dominating_trail": decision(find_open_edge_dominating_trail(&g).decision()),
    });
    Ok((pretty(&out), true))
}

fn strategy_audit(g6: &str, profile: ProfileArg, staller: StallerArg, seed: u64) -> Outcome {
    let g = graph(g6)?;
    let profile = match profile {
        ProfileArg::Cubic => PotentialProfile::CubicClawFree,
        ProfileArg::ClawFree => PotentialProfile::ClawFreeMinDeg2,
        ProfileArg::EdgeCircuit => edge_circuit_profile(&g).map_err(|e| e.to_string())?,
    };
    let staller = match staller {
        StallerArg::Exact => StallerModel::ExactAdversary,
        StallerArg::Greedy => StallerModel::GreedyMinGain,
        StallerArg::Random => StallerModel::SeededRandom(seed),
    };
    let report = simulate(&g, &profile, staller).map_err(|e| e.to_string())?;
    Ok((pretty(&report), report.passed()))
}

fn transform(op: TransformOp, g6: &str) -> Outcome {
    let g = graph(g6)?;
    let (h, map) = match op {
        TransformOp::Inflate => inflate(&g),
        TransformOp::Contract => contract_triangles(&g),
    }
    .map_err(|e| e.to_string())?;
    Ok((pretty(&json!({ "graph6": to_graph6(&h), "map": map })), true))
}

fn sweep(a: SweepArgs) -> Outcome {
    let input = match a.gen_n {
        Some(n) => InputSource::Generated(n),
        None if !a.input.is_empty() => InputSource::Files(a.input),
        None => return Err("either --input or --gen-n is required".into()),
    };
    let cfg = SweepConfig {
        input,
        filters: Filters {
            connected: a.connected,
            min_degree: a.min_degree,
            min_diameter: a.min_diameter,
            claw_free: a.claw_free,
            cubic: a.cubic,
            line_graph: a.line_graph,
            max_edges: a.max_edges,
            order: a.order,
        },
        checks: a.checks,
        equality: a.equality,
        jobs: a.jobs,
        seed: a.seed,
    };
    let report = run_sweep(&cfg).map_err(|e| e.to_string())?;
    let text = match a.format {
        Format::Json => pretty(&report),
        Format::Csv => report.to_csv(),
    };
    match a.out {
        Some(path) => {
            std::fs::write(&path, &text).map_err(|e| format!("{}: {e}", path.display()))?;
            Ok((report.to_csv(), report.passed()))
        }
        None => Ok((text, report.passed())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve { graph6, predominated } => solve(&graph6, &predominated),
        Command::EdgeSolve { graph6 } => edge_solve(&graph6),
        Command::Recognize { graph6 } => recognize(&graph6),
        Command::StrategyAudit { graph6, profile, staller, seed } => strategy_audit(&graph6, profile, staller, seed),
        Command::Transform { op, graph6 } => transform(op, &graph6),
        Command::Sweep(args) => sweep(args),
        Command::Figure1 => {
            let r = verify_figure1();
            Ok((pretty(&r), r.passed))
        }
    };
    match result {
        Ok((text, passed)) => {
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{}", text.trim_end());
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
