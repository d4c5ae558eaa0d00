use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cliquereg::cliques::{clique_number, clique_regular_orders};
use cliquereg::families::{self, collinearity_graph};
use cliquereg::io::{emit_graph, parse_geometry, parse_graph, scan_record};
use cliquereg::regularity::{is_edge_regular, is_rca, is_strongly_regular};
use cliquereg::search::{build_tau_rho_system, enumerate_feasible_locally_linear, solve_nonneg_integer};
use cliquereg::transforms::{clique_graph, clique_subdivision, line_graph};
use cliquereg::verify::verify_all;
use cliquereg::{Error, Graph};

#[derive(Parser)]
#[command(name = "cliquereg", version, about = "Clique regular graphs: constructions, transforms and exact checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a graph from a named family.
    Gen {
        /// complete, complete-bipartite, rook, triangular, oa-block, gq22, gq24, brouwer-haemers
        family: String,
        params: Vec<usize>,
    },
    /// Report clique number, clique regularity and regularity parameters.
    Analyze { file: PathBuf },
    /// Apply a graph transform.
    Transform {
        file: PathBuf,
        #[command(subcommand)]
        which: Transform,
    },
    /// Run every applicable identity check.
    Verify {
        file: PathBuf,
        #[arg(long)]
        omega: usize,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
    /// List feasible srg(n, k, 1, mu) parameter sets.
    Scan {
        /// Largest k.
        k: Option<u64>,
        #[arg(long, conflicts_with = "k")]
        max_k: Option<u64>,
        /// Append whether the tau-rho system has a non-negative integer solution.
        #[arg(long)]
        with_solver: bool,
    },
    /// Collinearity graph of an incidence geometry file.
    Collinearity {
        file: PathBuf,
        /// Use the dual geometry.
        #[arg(long)]
        dual: bool,
    },
}

#[derive(Subcommand)]
enum Transform {
    Line,
    Clique { omega: usize },
    Subdivision { omega: usize },
}

enum Failure {
    Usage(String),
    Hypothesis(String),
    Assertion(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Hypothesis(_) => 2,
            Failure::Assertion(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Hypothesis(m) | Failure::Assertion(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let m = e.to_string();
        match e {
            Error::Graph(_) | Error::InvalidArgument(_) | Error::InvalidGeometry(_) | Error::Dimension(_) => Failure::Usage(m),
            Error::Internal(_) | Error::InconsistentSpectrum(_) => Failure::Assertion(m),
            _ => Failure::Hypothesis(m),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn params<const N: usize>(family: &str, p: &[usize]) -> Result<[usize; N], Failure> {
    p.try_into().map_err(|_| Failure::Usage(format!("{family} takes {N} parameter(s), got {}", p.len())))
}

fn generate(family: &str, p: &[usize]) -> Result<Graph, Failure> {
    let g = match family {
        "complete" => {
            let [n] = params(family, p)?;
            if n == 0 {
                return Err(Failure::Usage("complete graph needs n >= 1".into()));
            }
            families::complete_graph(n)
        }
        "complete-bipartite" => {
            let [a, b] = params(family, p)?;
            if a + b == 0 {
                return Err(Failure::Usage("complete bipartite graph needs a vertex".into()));
            }
            families::complete_bipartite(a, b)
        }
        "rook" => families::rook_graph(params::<1>(family, p)?[0])?,
        "triangular" => families::triangular_graph(params::<1>(family, p)?[0])?,
        "oa-block" => {
            let [n, m] = params(family, p)?;
            families::block_graph(&families::orthogonal_array(n, m)?)
        }
        "gq22" => {
            params::<0>(family, p)?;
            families::gq22_graph()
        }
        "gq24" => {
            params::<0>(family, p)?;
            families::gq24_graph()
        }
        "brouwer-haemers" => {
            params::<0>(family, p)?;
            families::brouwer_haemers()?
        }
        other => return Err(Failure::Usage(format!("unknown family {other:?}"))),
    };
    Ok(g)
}

fn analyze(g: &Graph) -> Result<String, Failure> {
    let mut out = String::new();
    let w = |out: &mut String, key: &str, value: String| writeln!(out, "{key}: {value}").expect("string");
    w(&mut out, "vertices", g.order().to_string());
    w(&mut out, "edges", g.size().to_string());
    w(&mut out, "clique number", clique_number(g).to_string());
    let orders = if g.size() == 0 { Vec::new() } else { clique_regular_orders(g)? };
    let orders = if orders.is_empty() {
        "none".to_string()
    } else {
        orders.iter().map(|o| format!("omega={o}")).collect::<Vec<_>>().join(", ")
    };
    w(&mut out, "clique-regular", orders);
    let erg = is_edge_regular(g).map_or("none".into(), |(n, k, l)| format!("{n} {k} {l}"));
    w(&mut out, "erg", erg);
    let srg = is_strongly_regular(g).map_or("none".into(), |p| format!("{} {} {} {}", p.n, p.k, p.lambda, p.mu));
    w(&mut out, "srg", srg);
    let rca = is_rca(g).map_or("no".into(), |(n, k, o)| format!("yes ({n} {k} {o})"));
    w(&mut out, "rca", rca);
    Ok(out)
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Gen { family, params } => Ok(emit_graph(&generate(&family, &params)?)),
        Command::Analyze { file } => analyze(&load_graph(&file)?),
        Command::Transform { file, which } => {
            let g = load_graph(&file)?;
            let t = match which {
                Transform::Line => line_graph(&g)?,
                Transform::Clique { omega } => clique_graph(&g, omega)?,
                Transform::Subdivision { omega } => clique_subdivision(&g, omega)?,
            };
            Ok(emit_graph(&t))
        }
        Command::Verify { file, omega, tolerance } => {
            let g = load_graph(&file)?;
            let checks = verify_all(&g, omega, tolerance)?;
            let report: String = checks.iter().map(|c| format!("{c}\n")).collect();
            let failed = checks.iter().filter(|c| c.failed()).count();
            if failed > 0 {
                print!("{report}");
                return Err(Failure::Assertion(format!("{failed} check(s) failed")));
            }
            Ok(report)
        }
        Command::Scan { k, max_k, with_solver } => {
            let limit = k.or(max_k).ok_or_else(|| Failure::Usage("scan needs K or --max-k".into()))?;
            let mut out = String::new();
            for p in enumerate_feasible_locally_linear(limit) {
                let mut line = scan_record(&p);
                if with_solver {
                    let sys = build_tau_rho_system(&p)?;
                    line.push_str(if solve_nonneg_integer(&sys).is_some() { " solvable" } else { " unsolvable" });
                }
                out.push_str(&line);
                out.push('\n');
            }
            Ok(out)
        }
        Command::Collinearity { file, dual } => {
            let geom = parse_geometry(&read(&file)?).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
            let geom = if dual { geom.dual()? } else { geom };
            Ok(emit_graph(&collinearity_graph(&geom)?))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
