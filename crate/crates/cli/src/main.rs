//! `plhom`: JSON-in, JSON-out front end for the plhom library.

mod input;
mod verify;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use plhom::analysis::{default_tolerance, taylor_coeffs_rational, witness_report};
use plhom::classifier::{classify_with, ClassifyOptions, Verdict};
use plhom::graph_core::{apply_degree_gadget, stretch, thicken, GraphFile};
use plhom::interpolation::{lattice_check, thicken_interpolate_with};
use plhom::partition::{BruteForce, DEFAULT_STATE_CAP};
use plhom::poly_solvers::dispatch_solve;
use plhom::Error;

#[derive(Parser, Debug)]
#[command(name = "plhom", version, about = "Classify and evaluate planar graph homomorphism partition functions")]
struct Cli {
    /// Decimal digits for numeric eigenvalues and logarithms.
    #[arg(long, env = "PLHOM_DIGITS", default_value_t = 50, value_parser = clap::value_parser!(u32).range(1..))]
    digits: u32,
    /// Largest |n_i| searched by the numeric lattice check.
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    lattice_bound: u32,
    /// Maximum number of assignments brute force may enumerate.
    #[arg(long, default_value_t = DEFAULT_STATE_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
    /// Write the JSON result here instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide tractable / hard / unknown for a matrix, with certificate and trace.
    Classify { matrix: PathBuf },
    /// Evaluate Z_M(G).
    Eval {
        matrix: PathBuf,
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Thicken, stretch or gadget-replace a graph.
    Transform(TransformArgs),
    /// Taylor data, hardness witness, lattice condition or thickening interpolation.
    Analyze(AnalyzeArgs),
    /// Run a built-in consistency suite: identities, solvers-vs-brute or taylor-claims.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Brute,
    Poly,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("op").required(true).args(["thicken", "stretch", "gadget"])))]
struct TransformArgs {
    graph: PathBuf,
    #[arg(long, value_name = "K")]
    thicken: Option<usize>,
    #[arg(long, value_name = "K")]
    stretch: Option<usize>,
    #[arg(long, num_args = 2, value_names = ["N", "P"])]
    gadget: Option<Vec<usize>>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("sub").required(true).args(["taylor", "witness", "lattice", "interp"])))]
struct AnalyzeArgs {
    /// 3x3 exponent matrix X.
    #[arg(long, value_name = "X.json")]
    taylor: Option<PathBuf>,
    /// 3x3 nonnegative integer exponent matrix X.
    #[arg(long, value_name = "X.json")]
    witness: Option<PathBuf>,
    /// Comma-separated sample points p > 1 for --witness.
    #[arg(long, value_delimiter = ',', requires = "witness")]
    grid: Option<Vec<String>>,
    /// Tolerance for the t(p) verdicts of --witness.
    #[arg(long, requires = "witness")]
    tol: Option<String>,
    /// JSON list of nonzero rationals.
    #[arg(long, value_name = "values.json")]
    lattice: Option<PathBuf>,
    #[arg(long, num_args = 2, value_names = ["M.json", "G.json"], requires = "point")]
    interp: Option<Vec<PathBuf>>,
    /// Comma-separated substitution point for --interp.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    point: Option<Vec<String>>,
}

enum Failure {
    Core(Error),
    Io(String),
    Verify(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn to_json<T: Serialize>(v: &T) -> Value {
    // serde_json's default map is ordered, so re-encoding through Value sorts keys.
    serde_json::to_value(v).expect("serializable")
}

fn classify_opts(cli: &Cli) -> ClassifyOptions {
    ClassifyOptions { digits: cli.digits, lattice_bound: cli.lattice_bound }
}

fn run(cli: &Cli) -> CliResult<Value> {
    let brute = BruteForce { cap: cli.cap };
    match &cli.command {
        Command::Classify { matrix } => Ok(to_json(&classify_with(&input::matrix(matrix)?, &classify_opts(cli)))),
        Command::Eval { matrix, graph, method } => {
            let m = input::matrix(matrix)?;
            let (g, emb) = input::graph(graph)?;
            let cls = classify_with(&m, &classify_opts(cli));
            let mut out = json!({ "classification": to_json(&cls) });
            let (value, used) = match method {
                Method::Brute => (brute.z(&m, &g)?, "brute"),
                Method::Poly => (dispatch_solve(&m, &g, emb.as_ref(), &cls)?, "poly"),
                Method::Auto if cls.verdict == Verdict::Tractable => match dispatch_solve(&m, &g, emb.as_ref(), &cls) {
                    Ok(v) => (v, "poly"),
                    Err(Error::MissingEmbedding(why)) => {
                        out["notice"] = json!(format!("polynomial path needs an embedding ({why}); fell back to brute force"));
                        (brute.z(&m, &g)?, "brute")
                    }
                    Err(e) => return Err(e.into()),
                },
                Method::Auto => {
                    let why = match cls.verdict {
                        Verdict::Hard => "matrix is hard; no polynomial algorithm applies, used brute force",
                        _ => "no polynomial algorithm is known for this matrix; used brute force",
                    };
                    out["notice"] = json!(why);
                    (brute.z(&m, &g)?, "brute")
                }
            };
            out["value"] = json!(plhom::exact_algebra::format_rational(&value));
            out["method"] = json!(used);
            Ok(out)
        }
        Command::Transform(t) => {
            let (g, emb) = input::graph(&t.graph)?;
            let file = if let Some(k) = t.thicken {
                match &emb {
                    Some(e) => GraphFile::from_embedded(&thicken(e, k)?),
                    None => GraphFile::from_graph(&thicken(&g, k)?),
                }
            } else if let Some(k) = t.stretch {
                match &emb {
                    Some(e) => GraphFile::from_embedded(&stretch(e, k)?),
                    None => GraphFile::from_graph(&stretch(&g, k)?),
                }
            } else {
                let np = t.gadget.as_deref().expect("clap enforces one operation");
                let Some(e) = &emb else {
                    return Err(Error::MissingEmbedding("the gadget construction follows the rotation system".into()).into());
                };
                GraphFile::from_embedded(&apply_degree_gadget(e, np[0], np[1])?.graph)
            };
            Ok(to_json(&file))
        }
        Command::Analyze(a) => analyze(cli, a, &brute),
        Command::Verify { suite, seed } => {
            let report = verify::run_suite(suite, *seed, &brute)?;
            let passed = report.passed;
            let v = to_json(&report);
            if passed {
                Ok(v)
            } else {
                Err(Failure::Verify(v))
            }
        }
    }
}

fn analyze(cli: &Cli, a: &AnalyzeArgs, brute: &BruteForce) -> CliResult<Value> {
    if let Some(path) = &a.taylor {
        return Ok(to_json(&taylor_coeffs_rational(&input::rational_grid(path)?)?));
    }
    if let Some(path) = &a.witness {
        let x = input::exponent_matrix(path)?;
        let grid = a.grid.as_deref().map(input::rationals).transpose()?;
        let tol = match &a.tol {
            Some(s) => input::rational(s)?,
            None => default_tolerance(),
        };
        return Ok(to_json(&witness_report(&x, grid.as_deref(), cli.digits, &tol)?));
    }
    if let Some(path) = &a.lattice {
        return Ok(to_json(&lattice_check(&input::rational_list(path)?)?));
    }
    let files = a.interp.as_deref().expect("clap enforces one analysis");
    let m = input::matrix(&files[0])?;
    let (g, _) = input::graph(&files[1])?;
    let point = input::rationals(a.point.as_deref().expect("clap requires --point"))?;
    Ok(to_json(&thicken_interpolate_with(&m, &g, &point, brute)?))
}

fn emit(value: &Value, output: Option<&Path>) -> std::result::Result<(), String> {
    let text = serde_json::to_string_pretty(value).expect("JSON value") + "\n";
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (value, code) = match run(&cli) {
        Ok(v) => (v, 0),
        Err(Failure::Verify(v)) => (v, 1),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(if matches!(e, Error::TooLarge { .. }) { 3 } else { 2 });
        }
    };
    if let Err(msg) = emit(&value, cli.output.as_deref()) {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
