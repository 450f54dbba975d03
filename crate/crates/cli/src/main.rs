//! `chibound`: command-line workbench for exact solvers, structure
//! verifiers, lemma engines, the constants calculator, and the conjecture
//! sweep. Exit codes: 0 success, 1 input/parse error, 2 precondition or
//! structure violation, 3 solver budget exhausted, 4 proof step failed,
//! 5 audit (an engine output failed independent verification).

mod sweep;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use chibound_core::bounds::main_bound;
use chibound_core::engines::{
    grow_cable, grow_tick, impression_to_hole, longhole_decompose, stabilize_multicover,
    ticks_to_impression, type1_extract_multicover, type2_construct_hole, DecomposeOutcome,
    EngineError, GrowCableParams, GrowTickParams, Transcript,
};
use chibound_core::formats::{from_dimacs, from_graph6, to_graph6};
use chibound_core::graph::Graph;
use chibound_core::solvers::{
    chromatic_number, find_hole_at_least, longest_hole, omega, SolveOutcome, SolverLimits,
};
use chibound_core::structures::{
    verify_cable, verify_cover, verify_impression, verify_multicover, verify_tick, Cable, Cover,
    Impression, Multicover, Tick, Verdict,
};

#[derive(Parser)]
#[command(name = "chibound", version, about = "chi-boundedness workbench")]
struct Cli {
    /// Search-node budget for exact solvers (overridden by CHIBOUND_NODE_BUDGET)
    #[arg(long, global = true)]
    nodes: Option<u64>,
    /// Wall-clock budget in milliseconds (overridden by CHIBOUND_TIME_BUDGET_MS)
    #[arg(long, global = true)]
    time_ms: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact chromatic number with a proper-coloring certificate
    Chi { graph: PathBuf },
    /// Exact clique number with a clique certificate
    Omega { graph: PathBuf },
    /// Longest induced cycle of length >= 4, if any
    LongestHole { graph: PathBuf },
    /// First induced cycle of length >= min-len, if any
    FindHole {
        #[arg(long)]
        min_len: usize,
        graph: PathBuf,
    },
    /// Coloring with <= 2(ell-3)(kappa+tau)+1 colors, or a hole of length >= ell
    Decompose {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        kappa: u32,
        #[arg(long)]
        tau: u32,
        graph: PathBuf,
        /// Write the JSON result here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a structure JSON file against a graph, naming any violated clause
    Verify {
        #[arg(long, value_enum)]
        kind: StructureKind,
        /// For multicovers: additionally require each N_x to be stable
        #[arg(long)]
        stable: bool,
        graph: PathBuf,
        structure: PathBuf,
    },
    /// Run a lemma engine on a graph plus a structure file
    Engine {
        #[arg(long, value_enum)]
        name: EngineName,
        graph: PathBuf,
        structure: PathBuf,
        /// Write the JSON transcript here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        j: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        c: Option<u32>,
        #[arg(long)]
        kappa: Option<u32>,
        #[arg(long)]
        tau: Option<u32>,
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long)]
        h: Option<usize>,
        #[arg(long)]
        sigma_next: Option<u32>,
    },
    /// Evaluate the chi-bound constant for (k, ell) exactly or symbolically
    Bound {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        ell: u64,
        /// Decimal-digit budget for exact evaluation
        #[arg(long, default_value_t = 10_000)]
        digits: usize,
        /// Write the full expression tree as JSON
        #[arg(long)]
        tree: Option<PathBuf>,
    },
    /// Run the conjecture sweep described by a TOML config file
    Sweep {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StructureKind {
    Cover,
    Multicover,
    Tick,
    Impression,
    Cable,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineName {
    GrowTick,
    StabilizeMulticover,
    TicksToImpression,
    ImpressionToHole,
    Type1Extract,
    Type2Hole,
    GrowCable,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Engine(EngineError::Precondition(_))
            | CliError::Engine(EngineError::Structure(_)) => 2,
            CliError::Engine(EngineError::Budget(_)) => 3,
            CliError::Engine(EngineError::StepFailed { .. }) => 4,
            CliError::Engine(EngineError::Audit(_)) => 5,
        }
    }
}

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| input(format!("cannot read {}: {e}", path.display())))?;
    let looks_dimacs = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("p ") || l.starts_with("c ") || l.starts_with("e "));
    let parsed = if looks_dimacs {
        from_dimacs(&text).map_err(|e| e.to_string())
    } else {
        from_graph6(text.trim()).map_err(|e| e.to_string())
    };
    parsed.map_err(|e| input(format!("{}: {e}", path.display())))
}

fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn limits_from(nodes: Option<u64>, time_ms: Option<u64>) -> SolverLimits {
    // env vars override flags; budgets are the only env-configurable knobs
    let nodes = std::env::var("CHIBOUND_NODE_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .or(nodes);
    let time_ms = std::env::var("CHIBOUND_TIME_BUDGET_MS")
        .ok()
        .and_then(|v| v.parse().ok())
        .or(time_ms);
    SolverLimits {
        node_budget: nodes,
        time_budget: time_ms.map(Duration::from_millis),
    }
}

fn emit(out: Option<&Path>, value: &serde_json::Value) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    match out {
        Some(path) => fs::write(path, text + "\n")
            .map_err(|e| input(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn transcript_json(t: &Transcript) -> serde_json::Value {
    serde_json::to_value(t).expect("serializable")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = limits_from(cli.nodes, cli.time_ms);
    match run(cli.command, &limits) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let payload = json!({ "error": e.to_string() });
            eprintln!("{}", serde_json::to_string(&payload).unwrap());
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command, limits: &SolverLimits) -> Result<(), CliError> {
    match command {
        Command::Chi { graph } => {
            let g = load_graph(&graph)?;
            match chromatic_number(&g, limits) {
                SolveOutcome::Exact(w) => emit(
                    None,
                    &json!({
                        "graph6": to_graph6(&g),
                        "chi": w.chi,
                        "coloring": w.certificate,
                    }),
                ),
                SolveOutcome::Exhausted { partial, nodes } => {
                    emit(
                        None,
                        &json!({
                            "graph6": to_graph6(&g),
                            "exhausted_after": nodes,
                            "lower": partial.lower,
                            "upper": partial.upper,
                        }),
                    )?;
                    Err(EngineError::Budget(chibound_core::solvers::Exhausted { nodes }).into())
                }
            }
        }
        Command::Omega { graph } => {
            let g = load_graph(&graph)?;
            match omega(&g, limits) {
                SolveOutcome::Exact(w) => emit(
                    None,
                    &json!({
                        "graph6": to_graph6(&g),
                        "omega": w.size,
                        "witness": w.witness.to_vec(),
                    }),
                ),
                SolveOutcome::Exhausted { partial, nodes } => {
                    emit(
                        None,
                        &json!({
                            "graph6": to_graph6(&g),
                            "exhausted_after": nodes,
                            "best_clique": partial.witness.to_vec(),
                        }),
                    )?;
                    Err(EngineError::Budget(chibound_core::solvers::Exhausted { nodes }).into())
                }
            }
        }
        Command::LongestHole { graph } => {
            let g = load_graph(&graph)?;
            let hole = match longest_hole(&g, limits) {
                SolveOutcome::Exact(h) => h,
                SolveOutcome::Exhausted { nodes, .. } => {
                    return Err(
                        EngineError::Budget(chibound_core::solvers::Exhausted { nodes }).into(),
                    )
                }
            };
            emit(
                None,
                &json!({
                    "graph6": to_graph6(&g),
                    "longest_hole": hole.as_ref().map(|h| h.len()),
                    "cycle": hole.map(|h| h.cycle),
                }),
            )
        }
        Command::FindHole { min_len, graph } => {
            let g = load_graph(&graph)?;
            if min_len < 4 {
                return Err(input("--min-len must be at least 4"));
            }
            let hole = match find_hole_at_least(&g, min_len, limits) {
                SolveOutcome::Exact(h) => h,
                SolveOutcome::Exhausted { nodes, .. } => {
                    return Err(
                        EngineError::Budget(chibound_core::solvers::Exhausted { nodes }).into(),
                    )
                }
            };
            emit(
                None,
                &json!({
                    "graph6": to_graph6(&g),
                    "min_len": min_len,
                    "hole": hole.as_ref().map(|h| h.len()),
                    "cycle": hole.map(|h| h.cycle),
                }),
            )
        }
        Command::Decompose {
            ell,
            kappa,
            tau,
            graph,
            out,
        } => {
            let g = load_graph(&graph)?;
            let (outcome, tr) = longhole_decompose(&g, ell, kappa, tau, limits)?;
            let body = match outcome {
                DecomposeOutcome::Coloring(c) => json!({
                    "branch": "coloring",
                    "num_colors": c.num_colors,
                    "coloring": c,
                }),
                DecomposeOutcome::Hole(h) => json!({
                    "branch": "hole",
                    "length": h.len(),
                    "cycle": h.cycle,
                }),
            };
            emit(
                out.as_deref(),
                &json!({
                    "graph6": to_graph6(&g),
                    "ell": ell, "kappa": kappa, "tau": tau,
                    "outcome": body,
                    "transcript": transcript_json(&tr),
                }),
            )
        }
        Command::Verify {
            kind,
            stable,
            graph,
            structure,
        } => {
            let g = load_graph(&graph)?;
            let verdict = match kind {
                StructureKind::Cover => verify_cover(&g, &load_json::<Cover>(&structure)?),
                StructureKind::Multicover => {
                    verify_multicover(&g, &load_json::<Multicover>(&structure)?, stable)
                }
                StructureKind::Tick => verify_tick(&g, &load_json::<Tick>(&structure)?),
                StructureKind::Impression => {
                    verify_impression(&g, &load_json::<Impression>(&structure)?)
                }
                StructureKind::Cable => {
                    let report = verify_cable(&g, &load_json::<Cable>(&structure)?);
                    emit(None, &json!({ "report": report, "ok": report.is_ok() }))?;
                    return if report.is_ok() {
                        Ok(())
                    } else {
                        Err(EngineError::Structure(
                            report.first_violation().unwrap().clone(),
                        )
                        .into())
                    };
                }
            };
            emit(None, &json!({ "verdict": verdict, "ok": verdict.is_ok() }))?;
            match verdict {
                Verdict::Ok => Ok(()),
                Verdict::Violation(v) => Err(EngineError::Structure(v).into()),
            }
        }
        Command::Engine {
            name,
            graph,
            structure,
            out,
            j,
            k,
            m,
            c,
            kappa,
            tau,
            ell,
            h,
            sigma_next,
        } => {
            let g = load_graph(&graph)?;
            let need = |opt: Option<u32>, what: &str| {
                opt.ok_or_else(|| input(format!("--{what} is required for this engine")))
            };
            let result = match name {
                EngineName::GrowTick => {
                    let mc: Multicover = load_json(&structure)?;
                    let p = GrowTickParams {
                        j: need(j, "j")?,
                        k: need(k, "k")?,
                        m: need(m, "m")?,
                        c: need(c, "c")?,
                        kappa: need(kappa, "kappa")?,
                    };
                    let o = grow_tick(&g, &mc, &p, limits)?;
                    json!({
                        "engine": "grow-tick",
                        "multicover": o.multicover,
                        "tick": o.tick,
                        "transcript": transcript_json(&o.transcript),
                    })
                }
                EngineName::StabilizeMulticover => {
                    let mc: Multicover = load_json(&structure)?;
                    let (o, tr) = stabilize_multicover(&g, &mc, need(kappa, "kappa")?, limits)?;
                    json!({
                        "engine": "stabilize-multicover",
                        "multicover": o,
                        "transcript": transcript_json(&tr),
                    })
                }
                EngineName::TicksToImpression => {
                    #[derive(serde::Deserialize)]
                    struct Cluster {
                        ticks: Vec<Tick>,
                        multicover: Multicover,
                    }
                    let cl: Cluster = load_json(&structure)?;
                    let (imp, tr) = ticks_to_impression(&g, &cl.ticks, &cl.multicover)?;
                    json!({
                        "engine": "ticks-to-impression",
                        "impression": imp,
                        "transcript": transcript_json(&tr),
                    })
                }
                EngineName::ImpressionToHole => {
                    let imp: Impression = load_json(&structure)?;
                    let (hole, tr) = impression_to_hole(&g, &imp, limits)?;
                    json!({
                        "engine": "impression-to-hole",
                        "length": hole.len(),
                        "cycle": hole.cycle,
                        "transcript": transcript_json(&tr),
                    })
                }
                EngineName::Type1Extract => {
                    let cable: Cable = load_json(&structure)?;
                    let m = need(m, "m")? as usize;
                    let (mc, tr) = type1_extract_multicover(&g, &cable, m)?;
                    json!({
                        "engine": "type1-extract",
                        "multicover": mc,
                        "transcript": transcript_json(&tr),
                    })
                }
                EngineName::Type2Hole => {
                    let cable: Cable = load_json(&structure)?;
                    let ell = ell.ok_or_else(|| input("--ell is required for this engine"))?;
                    let (hole, tr) =
                        type2_construct_hole(&g, &cable, ell, need(tau, "tau")?, limits)?;
                    json!({
                        "engine": "type2-hole",
                        "length": hole.len(),
                        "cycle": hole.cycle,
                        "transcript": transcript_json(&tr),
                    })
                }
                EngineName::GrowCable => {
                    let cable: Cable = load_json(&structure)?;
                    let p = GrowCableParams {
                        h: h.ok_or_else(|| input("--h is required for this engine"))?,
                        kappa: need(kappa, "kappa")?,
                        tau: need(tau, "tau")?,
                        sigma_next: need(sigma_next, "sigma-next")?,
                    };
                    // no external clique-control bound is supplied on the CLI,
                    // so a failed clique search reports a step failure rather
                    // than a falsification
                    let mut phi = |_: u64| None;
                    let (o, tr) = grow_cable(&g, &cable, &p, &mut phi, limits)?;
                    json!({
                        "engine": "grow-cable",
                        "cable": o,
                        "transcript": transcript_json(&tr),
                    })
                }
            };
            emit(out.as_deref(), &result)
        }
        Command::Bound {
            k,
            ell,
            digits,
            tree,
        } => {
            let expr = main_bound(k, ell);
            if let Some(path) = &tree {
                let text = serde_json::to_string(&expr)
                    .map_err(|e| input(format!("tree serialization: {e}")))?;
                fs::write(path, text)
                    .map_err(|e| input(format!("cannot write {}: {e}", path.display())))?;
            }
            match expr.eval(digits) {
                Some(v) => emit(
                    None,
                    &json!({ "k": k, "ell": ell, "value": v.to_string() }),
                ),
                None => emit(
                    None,
                    &json!({
                        "k": k, "ell": ell,
                        "value": null,
                        "reason": format!("exceeds the {digits}-digit evaluation budget"),
                        "nodes": expr.node_count(),
                    }),
                ),
            }
        }
        Command::Sweep { config } => sweep::run_sweep(&config).map_err(CliError::Input),
    }
}
