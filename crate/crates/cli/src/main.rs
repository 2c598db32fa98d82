//! Command-line surface: parse graphs or ideals, run the engine or the
//! fast characterizations, render diagrams, and run the verify suites.
//!
//! Exit codes: 0 success, 1 verify mismatch, 2 parse/configuration error,
//! 3 engine cap exceeded, 4 theorem hypothesis not satisfied.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use edge_ideals::betti::{betti_diagram, BettiDiagram, EngineOptions};
use edge_ideals::cycle_formulas::full_diagram_cbc;
use edge_ideals::error::Error;
use edge_ideals::graph::Graph;
use edge_ideals::io::{graph_to_text, parse_input, ParsedInput};
use edge_ideals::polarization::{betti_nonsquarefree, polarize, reg3_nonsquarefree};
use edge_ideals::strands::{classify, reg3_bipartite, DEFAULT_WITNESS_CAP};
use edge_ideals::verify::{run_verify, VerifyConfig, DEFAULT_SEED};

#[derive(Parser)]
#[command(
    name = "edge-ideals",
    about = "Exact Betti diagrams and regularity of edge ideals",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Input file: an edge list, a biadjacency matrix, or an ideal.
    #[arg(long)]
    input: PathBuf,
    /// Field characteristic (a prime below 2^16).
    #[arg(long, default_value_t = 2)]
    field: u32,
    /// Engine cap on the vertex count (2^n subsets are swept).
    #[arg(long, env = "EDGE_IDEALS_MAX_VERTICES", default_value_t = 22)]
    max_vertices: usize,
    /// Cap on the number of faces per homology computation.
    #[arg(long, env = "EDGE_IDEALS_FACE_CAP", default_value_t = 1 << 22)]
    face_cap: usize,
    /// Worker threads (defaults to one per core).
    #[arg(long)]
    threads: Option<usize>,
    /// Emit JSON instead of tables.
    #[arg(long)]
    json: bool,
}

impl CommonOpts {
    fn engine(&self) -> EngineOptions {
        EngineOptions {
            max_vertices: self.max_vertices,
            face_cap: self.face_cap,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full graded Betti diagram and regularity.
    Betti(CommonOpts),
    /// Regularity only.
    Reg(CommonOpts),
    /// Locate the first nonlinear strand combinatorially.
    Strand(CommonOpts),
    /// The regularity-3 characterization (connected bipartite input).
    Reg3(CommonOpts),
    /// Closed-form diagram for the bipartite complement of an even cycle.
    CycleFormula {
        /// Half-length of the cycle (s >= 3, the graph has 2s vertices).
        #[arg(long)]
        s: usize,
        /// Also run the engine and diff the two diagrams.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 2)]
        field: u32,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Replace squares by whiskers and print the resulting graph.
    Polarize(CommonOpts),
    /// Run the self-checking suites.
    Verify {
        /// Small scale for smoke tests.
        #[arg(long)]
        quick: bool,
        /// Largest s for the closed-formula comparison.
        #[arg(long)]
        s: Option<usize>,
        /// Seed for the random corpora.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn engine_failure(e: Error) -> Failure {
    let code = match e {
        Error::TooManyVertices { .. } | Error::FaceLimitExceeded { .. } => 3,
        Error::PreconditionViolated(_)
        | Error::NotConnected
        | Error::NotBipartite
        | Error::EmptyIdeal => 4,
        _ => 2,
    };
    fail(code, e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn setup_threads(threads: Option<usize>) -> Result<(), Failure> {
    if let Some(t) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| fail(2, format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn read_input(opts: &CommonOpts) -> Result<ParsedInput, Failure> {
    let text = std::fs::read_to_string(&opts.input)
        .map_err(|e| fail(2, format!("{}: {e}", opts.input.display())))?;
    parse_input(&text).map_err(|e| fail(2, format!("{}:{e}", opts.input.display())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Betti(opts) => {
            setup_threads(opts.threads)?;
            let diagram = input_diagram(&opts)?;
            if opts.json {
                println!("{}", serde_json::to_string(&diagram).unwrap());
            } else {
                print!("{}", render::diagram_table(&diagram));
            }
            Ok(())
        }
        Command::Reg(opts) => {
            setup_threads(opts.threads)?;
            let diagram = input_diagram(&opts)?;
            let reg = diagram.regularity().map_err(engine_failure)?;
            if opts.json {
                println!("{{\"regularity\":{reg}}}");
            } else {
                println!("regularity: {reg}");
            }
            Ok(())
        }
        Command::Strand(opts) => {
            setup_threads(opts.threads)?;
            let graph = match read_input(&opts)? {
                ParsedInput::Graph(g) | ParsedInput::SquarefreeIdeal(g) => g,
                ParsedInput::Bipartite { graph, .. } => graph,
                ParsedInput::Ideal(_) => {
                    return Err(fail(
                        2,
                        "strand expects a graph; run `polarize` on the ideal first",
                    ))
                }
            };
            let report = classify(&graph, DEFAULT_WITNESS_CAP).map_err(engine_failure)?;
            if opts.json {
                println!("{}", serde_json::to_string(&report).unwrap());
            } else {
                println!("{}", render::strand_summary(&report));
            }
            Ok(())
        }
        Command::Reg3(opts) => {
            setup_threads(opts.threads)?;
            let answer = match read_input(&opts)? {
                ParsedInput::Graph(g) | ParsedInput::SquarefreeIdeal(g) => {
                    reg3_bipartite(&g).map_err(engine_failure)?
                }
                ParsedInput::Bipartite { graph, .. } => {
                    reg3_bipartite(&graph).map_err(engine_failure)?
                }
                ParsedInput::Ideal(ideal) => reg3_nonsquarefree(&ideal).map_err(engine_failure)?,
            };
            if opts.json {
                println!("{{\"reg3\":{answer}}}");
            } else {
                println!("regularity is exactly 3: {answer}");
            }
            Ok(())
        }
        Command::CycleFormula {
            s,
            verify,
            field,
            threads,
            json,
        } => {
            setup_threads(threads)?;
            if s < 3 {
                return Err(fail(2, "cycle-formula requires s >= 3"));
            }
            let closed = full_diagram_cbc(s);
            let engine = if verify {
                let g = edge_ideals::bipartite::bipartite_complement_auto(
                    &edge_ideals::graph::generators::even_cycle_xy(s),
                    false,
                )
                .map_err(engine_failure)?;
                let opts = EngineOptions {
                    max_vertices: (2 * s).max(22),
                    ..EngineOptions::default()
                };
                Some(betti_diagram(&g, field, &opts).map_err(engine_failure)?)
            } else {
                None
            };
            let matches = engine
                .as_ref()
                .map(|e| e.iter().collect::<Vec<_>>() == closed.iter().collect::<Vec<_>>());
            if json {
                let mut payload = String::from("{\"closed\":");
                payload.push_str(&serde_json::to_string(&closed).unwrap());
                if let Some(e) = &engine {
                    payload.push_str(",\"engine\":");
                    payload.push_str(&serde_json::to_string(e).unwrap());
                    payload.push_str(&format!(",\"match\":{}", matches.unwrap()));
                }
                payload.push('}');
                println!("{payload}");
            } else {
                println!("closed form for the bipartite complement of C_{}:", 2 * s);
                print!("{}", render::diagram_table(&closed));
                if let Some(e) = &engine {
                    println!("engine over GF({field}):");
                    print!("{}", render::diagram_table(e));
                    println!(
                        "status: {}",
                        if matches.unwrap() {
                            "MATCH"
                        } else {
                            "MISMATCH"
                        }
                    );
                }
            }
            if matches == Some(false) {
                return Err(fail(1, format!("closed form differs from engine at s={s}")));
            }
            Ok(())
        }
        Command::Polarize(opts) => {
            let ideal = match read_input(&opts)? {
                ParsedInput::Ideal(ideal) => ideal,
                ParsedInput::SquarefreeIdeal(g) => {
                    // Nothing to polarize; echo the graph.
                    print!("{}", graph_to_text(&g));
                    return Ok(());
                }
                _ => return Err(fail(2, "polarize expects an ideal file")),
            };
            let g = polarize(&ideal);
            if opts.json {
                let edges: Vec<Vec<usize>> =
                    g.edges().iter().map(|&(u, v)| vec![u + 1, v + 1]).collect();
                println!(
                    "{{\"n\":{},\"labels\":{},\"edges\":{}}}",
                    g.n_vertices(),
                    serde_json::to_string(g.labels().unwrap()).unwrap(),
                    serde_json::to_string(&edges).unwrap()
                );
            } else {
                print!("{}", graph_to_text(&g));
            }
            Ok(())
        }
        Command::Verify {
            quick,
            s,
            seed,
            threads,
            json,
        } => {
            setup_threads(threads)?;
            let mut cfg = if quick {
                VerifyConfig::quick()
            } else {
                VerifyConfig::default()
            };
            cfg.seed = seed;
            if let Some(s) = s {
                if s < 3 {
                    return Err(fail(2, "verify requires s >= 3"));
                }
                cfg.formula_s_max = s;
            }
            let report = run_verify(&cfg);
            if json {
                println!("{}", report.to_json());
            } else {
                println!("seed: {:#x}", report.seed);
                for suite in &report.suites {
                    let status = if suite.passed { "PASS" } else { "FAIL" };
                    println!("{status} {} ({} checks)", suite.name, suite.checks);
                    for f in &suite.failures {
                        println!("    reproducer: {f}");
                    }
                    for n in &suite.notes {
                        println!("    note: {n}");
                    }
                }
            }
            if report.all_passed() {
                Ok(())
            } else {
                Err(fail(1, "verify found mismatches"))
            }
        }
    }
}

/// Diagram of whatever the input file holds; ideal files go through the
/// polarization path.
fn input_diagram(opts: &CommonOpts) -> Result<BettiDiagram, Failure> {
    let diagram = match read_input(opts)? {
        ParsedInput::Graph(g) | ParsedInput::SquarefreeIdeal(g) => diagram_of_graph(&g, opts)?,
        ParsedInput::Bipartite { graph, .. } => diagram_of_graph(&graph, opts)?,
        ParsedInput::Ideal(ideal) => {
            betti_nonsquarefree(&ideal, opts.field, &opts.engine())
                .map_err(engine_failure)?
                .diagram
        }
    };
    Ok(diagram)
}

fn diagram_of_graph(g: &Graph, opts: &CommonOpts) -> Result<BettiDiagram, Failure> {
    betti_diagram(g, opts.field, &opts.engine()).map_err(engine_failure)
}
