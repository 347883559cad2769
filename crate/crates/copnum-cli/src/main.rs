//! `copnum` — solve cops-and-robbers instances, construct finite-geometry
//! graphs, verify bounds and strategies, play out games, and run seeded
//! random-graph experiments.
//!
//! Reports are flat `key: value` lines with stable keys. Exit codes: 0
//! success, 2 parse error, 3 precondition violated, 4 budget exhausted,
//! 5 verification FAIL.

use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use copnum::bounds::{diameter2_check, girth_mindeg_lower, witness_graph, BoundsError};
use copnum::game::{
    cop_number_with_budget, simulate, solve_with_budget, CopStrategy, RobberStrategy, SolveError,
    DEFAULT_STATE_BUDGET,
};
use copnum::geometry::{
    affine_plane, incidence_graph, projective_plane, remove_parallel_classes, validate_structure,
    IncidenceStructure,
};
use copnum::graph::Graph;
use copnum::named;
use copnum::random::cop_number_experiment_with;
use copnum::strategy::{
    frankl_upper_bound, isometric_path_guard, parallel_class_strategy, verify_guard,
    OptimalCopStrategy, OptimalRobberStrategy, PieceKind, RandomCopStrategy, RandomRobberStrategy,
    StrategyError,
};

#[derive(Parser)]
#[command(name = "copnum", version, about = "Exact cops-and-robbers analysis toolkit")]
struct Cli {
    /// Worker threads for parallel work (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact cop number, best placement, and capture time of a graph.
    Solve {
        /// Edge-list file or built-in name (heawood, petersen, cycle-N,
        /// path-N, grid-AxB).
        graph: String,
        /// Stop after this many cops.
        #[arg(long, default_value_t = 4)]
        max_cops: usize,
        /// State budget; defaults to $COPNUM_BUDGET or the engine default.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Emit a constructed graph as an edge-list file (plus a structure
    /// side file for incidence constructions).
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        /// Field order for pg / ag / ag-trunc.
        #[arg(long)]
        q: Option<usize>,
        /// Parallel classes to delete (ag-trunc).
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Target order for witness.
        #[arg(long)]
        n: Option<usize>,
        /// Output file; defaults to a name derived from the parameters.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a bound, axiom set, or strategy claim (PASS/FAIL).
    Verify {
        #[command(subcommand)]
        check: Check,
    },
    /// Play one game between registry strategies.
    Simulate {
        graph: String,
        #[arg(long)]
        cops: usize,
        #[arg(long, value_enum, default_value_t = CopKind::Optimal)]
        cop_strategy: CopKind,
        #[arg(long, value_enum, default_value_t = RobberKind::Optimal)]
        robber_strategy: RobberKind,
        /// Structure side file (required by parallel-class).
        #[arg(long)]
        structure: Option<PathBuf>,
        /// Surviving parallel-class label for parallel-class.
        #[arg(long, default_value_t = 0)]
        class: usize,
        /// Comma-separated path vertices (required by path-guard).
        #[arg(long)]
        path: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_rounds: Option<u64>,
        /// Print every state of the play.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Monte-Carlo cop numbers on connected G(n,p) samples.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        k_max: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Girth-5 minimum-degree lower bound: PASS iff exact c ≥ δ.
    Mindeg {
        graph: String,
        #[arg(long, default_value_t = 4)]
        max_cops: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Diameter-2 upper bound: PASS iff exact c ≤ 2√n − 1.
    Diam2 {
        graph: String,
        #[arg(long, default_value_t = 4)]
        max_cops: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Isometric-path guard: PASS iff the path is guarded against every
    /// robber behavior after the warm-up.
    Guard {
        graph: String,
        /// Comma-separated path vertices.
        #[arg(long)]
        path: String,
        /// Warm-up rounds (default: the graph order).
        #[arg(long)]
        warmup: Option<u64>,
    },
    /// Constructive strategy soundness (parallel-class): PASS iff the
    /// strategy captures the optimal robber.
    Strategy {
        #[arg(long, value_enum)]
        kind: StrategyKind,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Incidence axioms of a structure file.
    Axioms {
        structure: PathBuf,
        #[arg(long, value_enum, default_value_t = Expect::PartialLinear)]
        expect: Expect,
    },
    /// Decomposition upper bound: PASS iff frankl bound ≥ exact c.
    Frankl {
        graph: String,
        #[arg(long, default_value_t = 4)]
        max_cops: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    Pg,
    Ag,
    AgTrunc,
    Witness,
    Heawood,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum CopKind {
    Optimal,
    ParallelClass,
    PathGuard,
    Random,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum RobberKind {
    Optimal,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyKind {
    ParallelClass,
}

#[derive(Clone, Copy, ValueEnum)]
enum Expect {
    PartialLinear,
    Affine,
    Projective,
}

/// Failure classes, one exit code each.
enum Fail {
    Parse(String),
    Pre(String),
    Budget(String),
    /// The check ran to completion and the claim is false.
    VerifyFail,
}

impl Fail {
    fn exit(&self) -> ExitCode {
        ExitCode::from(match self {
            Fail::Parse(_) => 2,
            Fail::Pre(_) => 3,
            Fail::Budget(_) => 4,
            Fail::VerifyFail => 5,
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        // Ignore the error: the global pool can only be set once.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Fail::Parse(m) => eprintln!("error (parse): {m}"),
                Fail::Pre(m) => eprintln!("error (precondition): {m}"),
                Fail::Budget(m) => eprintln!("error (budget): {m}"),
                Fail::VerifyFail => {}
            }
            f.exit()
        }
    }
}

fn emit(key: &str, value: impl Display) {
    println!("{key}: {value}");
}

/// Resolves the state budget: flag, then $COPNUM_BUDGET, then the default.
fn budget_of(flag: Option<u64>) -> Result<u64, Fail> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("COPNUM_BUDGET") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Fail::Parse(format!("COPNUM_BUDGET is not an integer: {s:?}"))),
        Err(_) => Ok(DEFAULT_STATE_BUDGET),
    }
}

/// A graph argument is a file path if one exists, else a built-in name.
fn load_graph(spec: &str) -> Result<Graph, Fail> {
    if Path::new(spec).exists() {
        let text = std::fs::read_to_string(spec)
            .map_err(|e| Fail::Parse(format!("{spec}: {e}")))?;
        return Graph::parse(&text).map_err(|e| Fail::Parse(format!("{spec}: {e}")));
    }
    named::by_name(spec)
        .ok_or_else(|| Fail::Parse(format!("no such file or built-in graph: {spec}")))
}

fn load_structure(path: &Path) -> Result<IncidenceStructure, Fail> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Fail::Parse(format!("{}: {e}", path.display())))?;
    IncidenceStructure::parse(&text)
        .map_err(|e| Fail::Parse(format!("{}: {e}", path.display())))
}

/// Maps solver failures to exit classes: exhausting either limit is a
/// budget failure, everything else is a precondition.
fn solve_fail(e: SolveError) -> Fail {
    match e {
        SolveError::BudgetExceeded { .. } | SolveError::KMaxExhausted { .. } => {
            Fail::Budget(e.to_string())
        }
        other => Fail::Pre(other.to_string()),
    }
}

fn exact_cop_number(g: &Graph, max_cops: usize, budget: u64) -> Result<usize, Fail> {
    if max_cops == 0 {
        return Err(Fail::Pre("max-cops must be at least 1".into()));
    }
    cop_number_with_budget(g, max_cops, budget).map_err(solve_fail)
}

fn parse_path_list(s: &str) -> Result<Vec<usize>, Fail> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Fail::Parse(format!("bad path vertex: {t:?}")))
        })
        .collect()
}

fn run(cmd: Cmd) -> Result<(), Fail> {
    match cmd {
        Cmd::Solve {
            graph,
            max_cops,
            budget,
        } => cmd_solve(&graph, max_cops, budget),
        Cmd::Construct { kind, q, k, n, out } => cmd_construct(kind, q, k, n, out),
        Cmd::Verify { check } => cmd_verify(check),
        Cmd::Simulate {
            graph,
            cops,
            cop_strategy,
            robber_strategy,
            structure,
            class,
            path,
            seed,
            max_rounds,
            trace,
            budget,
        } => cmd_simulate(
            &graph,
            cops,
            cop_strategy,
            robber_strategy,
            structure,
            class,
            path,
            seed,
            max_rounds,
            trace,
            budget,
        ),
        Cmd::Random {
            n,
            p,
            trials,
            seed,
            k_max,
            budget,
        } => cmd_random(n, p, trials, seed, k_max, budget),
    }
}

fn cmd_solve(spec: &str, max_cops: usize, budget: Option<u64>) -> Result<(), Fail> {
    let budget = budget_of(budget)?;
    let g = load_graph(spec)?;
    let t0 = Instant::now();
    emit("command", "solve");
    emit("graph", spec);
    emit("n", g.n());
    emit("m", g.edge_count());
    let c = exact_cop_number(&g, max_cops, budget)?;
    let sr = solve_with_budget(&g, c, budget).map_err(solve_fail)?;
    emit("cop_number", c);
    emit("best_placement", sr.best_initial_placement().map_err(solve_fail)?);
    emit("capture_time_plies", sr.capture_time().map_err(solve_fail)?);
    emit("states", sr.state_count());
    emit("elapsed_ms", t0.elapsed().as_millis());
    Ok(())
}

fn cmd_construct(
    kind: ConstructKind,
    q: Option<usize>,
    k: usize,
    n: Option<usize>,
    out: Option<PathBuf>,
) -> Result<(), Fail> {
    let t0 = Instant::now();
    emit("command", "construct");
    let need_q = || q.ok_or_else(|| Fail::Pre("this kind needs --q".into()));
    let geo_pre = |e: copnum::geometry::GeometryError| Fail::Pre(e.to_string());

    // (graph, default file stem, structure to save alongside, extra lines)
    let (g, stem, structure): (Graph, String, Option<IncidenceStructure>) = match kind {
        ConstructKind::Pg => {
            let q = need_q()?;
            emit("kind", "pg");
            emit("q", q);
            let s = projective_plane(q).map_err(geo_pre)?;
            (incidence_graph(&s).graph, format!("pg-q{q}"), Some(s))
        }
        ConstructKind::Ag => {
            let q = need_q()?;
            emit("kind", "ag");
            emit("q", q);
            let s = affine_plane(q).map_err(geo_pre)?;
            (incidence_graph(&s).graph, format!("ag-q{q}"), Some(s))
        }
        ConstructKind::AgTrunc => {
            let q = need_q()?;
            emit("kind", "ag-trunc");
            emit("q", q);
            emit("k", k);
            let a = affine_plane(q).map_err(geo_pre)?;
            let s = remove_parallel_classes(&a, k).map_err(geo_pre)?;
            (
                incidence_graph(&s).graph,
                format!("ag-trunc-q{q}-k{k}"),
                Some(s),
            )
        }
        ConstructKind::Witness => {
            let n = n.ok_or_else(|| Fail::Pre("witness needs --n".into()))?;
            emit("kind", "witness");
            emit("n", n);
            let (g, bound) = witness_graph(n).map_err(|e| Fail::Pre(e.to_string()))?;
            emit("guaranteed_lower_bound", bound);
            (g, format!("witness-n{n}"), None)
        }
        ConstructKind::Heawood => {
            emit("kind", "heawood");
            (named::heawood(), "heawood".to_string(), None)
        }
    };

    let graph_file = out.unwrap_or_else(|| PathBuf::from(format!("{stem}.edges")));
    std::fs::write(&graph_file, g.serialize())
        .map_err(|e| Fail::Pre(format!("cannot write {}: {e}", graph_file.display())))?;
    emit("vertices", g.n());
    emit("edges", g.edge_count());
    emit("graph_file", graph_file.display());
    if let Some(s) = structure {
        let mut structure_file = graph_file.clone();
        structure_file.set_extension("structure");
        std::fs::write(&structure_file, s.serialize())
            .map_err(|e| Fail::Pre(format!("cannot write {}: {e}", structure_file.display())))?;
        emit("structure_file", structure_file.display());
    }
    emit("elapsed_ms", t0.elapsed().as_millis());
    Ok(())
}

fn verdict(pass: bool) -> Result<(), Fail> {
    emit("result", if pass { "PASS" } else { "FAIL" });
    if pass {
        Ok(())
    } else {
        Err(Fail::VerifyFail)
    }
}

fn cmd_verify(check: Check) -> Result<(), Fail> {
    emit("command", "verify");
    match check {
        Check::Mindeg {
            graph,
            max_cops,
            budget,
        } => {
            let budget = budget_of(budget)?;
            let g = load_graph(&graph)?;
            emit("check", "mindeg");
            emit("graph", &graph);
            let delta = girth_mindeg_lower(&g).ok_or_else(|| {
                Fail::Pre("girth below 5: the minimum-degree bound does not apply".into())
            })?;
            let c = exact_cop_number(&g, max_cops, budget)?;
            emit("min_degree", delta);
            emit("cop_number", c);
            verdict(c >= delta)
        }
        Check::Diam2 {
            graph,
            max_cops,
            budget,
        } => {
            let budget = budget_of(budget)?;
            let g = load_graph(&graph)?;
            emit("check", "diam2");
            emit("graph", &graph);
            let c = exact_cop_number(&g, max_cops, budget)?;
            let ok = diameter2_check(&g, c).map_err(|e| match e {
                BoundsError::DiameterNotTwo { .. } => Fail::Pre(e.to_string()),
                other => Fail::Pre(other.to_string()),
            })?;
            emit("cop_number", c);
            emit("bound", format!("{:.4}", 2.0 * (g.n() as f64).sqrt() - 1.0));
            verdict(ok)
        }
        Check::Guard {
            graph,
            path,
            warmup,
        } => {
            let g = load_graph(&graph)?;
            emit("check", "guard");
            emit("graph", &graph);
            let path = parse_path_list(&path)?;
            let warmup = warmup.unwrap_or(g.n() as u64);
            emit("warmup_rounds", warmup);
            let mut s = isometric_path_guard(&g, &path)
                .map_err(|e| Fail::Pre(e.to_string()))?;
            let v = verify_guard(&g, &path, &mut s, warmup).map_err(|e| match e {
                StrategyError::WarmupInsufficient { .. } => Fail::Pre(e.to_string()),
                other => Fail::Pre(other.to_string()),
            })?;
            if let Some(play) = &v.violation {
                for (i, st) in play.iter().enumerate() {
                    emit(&format!("violation[{i}]"), st);
                }
            }
            verdict(v.guarded)
        }
        Check::Strategy {
            kind: StrategyKind::ParallelClass,
            q,
            k,
            budget,
        } => {
            let budget = budget_of(budget)?;
            emit("check", "strategy");
            emit("kind", "parallel-class");
            emit("q", q);
            emit("k", k);
            let pre = |e: copnum::geometry::GeometryError| Fail::Pre(e.to_string());
            let a = affine_plane(q).map_err(pre)?;
            let s = remove_parallel_classes(&a, k).map_err(pre)?;
            let mut cops =
                parallel_class_strategy(&s, 0).map_err(|e| Fail::Pre(e.to_string()))?;
            let g = incidence_graph(&s).graph;
            emit("vertices", g.n());
            emit("cops", cops.k());
            let solved = solve_with_budget(&g, cops.k(), budget).map_err(solve_fail)?;
            let mut robber = OptimalRobberStrategy::new(&solved);
            let rec = simulate(&g, cops.k(), &mut cops, &mut robber, None)
                .map_err(|e| Fail::Pre(e.to_string()))?;
            emit("captured", rec.captured);
            emit("rounds", rec.rounds);
            verdict(rec.captured)
        }
        Check::Axioms { structure, expect } => {
            let s = load_structure(&structure)?;
            emit("check", "axioms");
            emit("structure", structure.display());
            emit("points", s.points);
            emit("lines", s.lines.len());
            let report = validate_structure(&s);
            emit("partial_linear", report.partial_linear.holds);
            emit("affine", report.affine.holds);
            emit("projective", report.projective.holds);
            if let Some(pc) = &report.parallel_consistent {
                emit("parallel_consistent", pc.holds);
            }
            let (pass, witness) = match expect {
                Expect::PartialLinear => (
                    report.partial_linear.holds,
                    report.partial_linear.counterexample,
                ),
                Expect::Affine => {
                    let classes_ok = report
                        .parallel_consistent
                        .as_ref()
                        .map_or(true, |c| c.holds);
                    (
                        report.affine.holds && classes_ok,
                        report.affine.counterexample.or_else(|| {
                            report
                                .parallel_consistent
                                .and_then(|c| c.counterexample)
                        }),
                    )
                }
                Expect::Projective => (report.projective.holds, report.projective.counterexample),
            };
            if let Some(w) = witness {
                emit("counterexample", w);
            }
            verdict(pass)
        }
        Check::Frankl {
            graph,
            max_cops,
            budget,
        } => {
            let budget = budget_of(budget)?;
            let g = load_graph(&graph)?;
            emit("check", "frankl");
            emit("graph", &graph);
            let (bound, d) = frankl_upper_bound(&g);
            let paths = d
                .pieces
                .iter()
                .filter(|p| p.kind == PieceKind::IsometricPath)
                .count();
            emit("frankl_bound", bound);
            emit("pieces", d.pieces.len());
            emit("path_pieces", paths);
            let c = exact_cop_number(&g, max_cops, budget)?;
            emit("cop_number", c);
            verdict(bound >= c)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_simulate(
    spec: &str,
    cops: usize,
    cop_kind: CopKind,
    robber_kind: RobberKind,
    structure: Option<PathBuf>,
    class: usize,
    path: Option<String>,
    seed: u64,
    max_rounds: Option<u64>,
    trace: bool,
    budget: Option<u64>,
) -> Result<(), Fail> {
    let budget = budget_of(budget)?;
    let g = load_graph(spec)?;
    let t0 = Instant::now();
    emit("command", "simulate");
    emit("graph", spec);
    emit("cops", cops);
    if cops == 0 {
        return Err(Fail::Pre("need at least one cop".into()));
    }

    // Solve once if either side plays optimally.
    let solved = if cop_kind == CopKind::Optimal || robber_kind == RobberKind::Optimal {
        Some(solve_with_budget(&g, cops, budget).map_err(solve_fail)?)
    } else {
        None
    };

    let mut cop_strategy: Box<dyn CopStrategy> = match cop_kind {
        CopKind::Optimal => {
            emit("cop_strategy", "optimal");
            Box::new(OptimalCopStrategy::new(solved.as_ref().unwrap()))
        }
        CopKind::ParallelClass => {
            emit("cop_strategy", "parallel-class");
            let path = structure
                .ok_or_else(|| Fail::Pre("parallel-class needs --structure".into()))?;
            let s = load_structure(&path)?;
            let strat =
                parallel_class_strategy(&s, class).map_err(|e| Fail::Pre(e.to_string()))?;
            let inc = incidence_graph(&s).graph;
            if inc.n() != g.n() || inc.edges().ne(g.edges()) {
                return Err(Fail::Pre(
                    "graph does not match the structure's incidence graph".into(),
                ));
            }
            if strat.k() != cops {
                return Err(Fail::Pre(format!(
                    "parallel-class plays {} cops, got --cops {cops}",
                    strat.k()
                )));
            }
            Box::new(strat)
        }
        CopKind::PathGuard => {
            emit("cop_strategy", "path-guard");
            if cops != 1 {
                return Err(Fail::Pre("path-guard plays exactly one cop".into()));
            }
            let list = path.ok_or_else(|| Fail::Pre("path-guard needs --path".into()))?;
            let path = parse_path_list(&list)?;
            Box::new(isometric_path_guard(&g, &path).map_err(|e| Fail::Pre(e.to_string()))?)
        }
        CopKind::Random => {
            emit("cop_strategy", "random");
            Box::new(RandomCopStrategy::new(cops, seed))
        }
    };
    let mut robber_strategy: Box<dyn RobberStrategy> = match robber_kind {
        RobberKind::Optimal => {
            emit("robber_strategy", "optimal");
            Box::new(OptimalRobberStrategy::new(solved.as_ref().unwrap()))
        }
        RobberKind::Random => {
            emit("robber_strategy", "random");
            // Offset so cops and robber never share a stream.
            Box::new(RandomRobberStrategy::new(seed ^ 0x52b3_1e5a_5f1e_u64))
        }
    };

    let rec = simulate(
        &g,
        cops,
        cop_strategy.as_mut(),
        robber_strategy.as_mut(),
        max_rounds,
    )
    .map_err(|e| Fail::Pre(e.to_string()))?;
    if trace {
        for (i, st) in rec.states.iter().enumerate() {
            emit(&format!("state[{i}]"), st);
        }
    }
    emit("captured", rec.captured);
    emit("rounds", rec.rounds);
    emit("plies", rec.states.len().saturating_sub(1));
    emit("elapsed_ms", t0.elapsed().as_millis());
    Ok(())
}

fn cmd_random(
    n: usize,
    p: f64,
    trials: usize,
    seed: u64,
    k_max: usize,
    budget: Option<u64>,
) -> Result<(), Fail> {
    let budget = budget_of(budget)?;
    if n == 0 {
        return Err(Fail::Pre("need at least one vertex".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Fail::Pre(format!("p must be a probability, got {p}")));
    }
    let t0 = Instant::now();
    emit("command", "random");
    emit("n", n);
    emit("p", p);
    emit("trials", trials);
    emit("seed", seed);
    let r = cop_number_experiment_with(n, p, trials, seed, k_max, budget);
    if r.below_recommended_p {
        emit(
            "warning",
            format!("p below the recommended 2.1*ln(n)/n = {:.4}", 2.1 * (n as f64).ln() / n as f64),
        );
    }
    for t in &r.records {
        let c = t
            .cop_number
            .map_or("censored".to_string(), |c| c.to_string());
        println!(
            "trial: {} c: {} violation: {} resamples: {}",
            t.trial, c, t.violation, t.resamples
        );
    }
    emit("benchmark", format!("{:.4}", r.benchmark));
    match r.max_c {
        Some(m) => emit("max_c", m),
        None => emit("max_c", "none"),
    }
    match r.mean_c {
        Some(m) => emit("mean_c", format!("{m:.4}")),
        None => emit("mean_c", "none"),
    }
    emit("violations", r.violations);
    emit("censored", r.censored);
    emit("resamples", r.resamples);
    emit("elapsed_ms", t0.elapsed().as_millis());
    Ok(())
}
