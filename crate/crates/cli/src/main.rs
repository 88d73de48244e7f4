use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use stasheff::canonical_basis::{Expander, SelectionPolicy};
use stasheff::cluster_atlas::parse_word;
use stasheff::json::{
    coords_to_json, document, expansion_to_json, lamination_to_json, laminations_from_json, open_document,
    seed_from_json, seed_to_json, spec_from_json, spec_to_json, triangulation_to_json,
};
use stasheff::polygon::parse_triangulation;
use stasheff::polytope::{
    chart_csv, is_nondegenerate, is_stasheff, lattice_points, minkowski_c, vertices, vertices_contained, StasheffSpec,
};
use stasheff::tropical_points::{phi, Lamination};
use stasheff::{Error, Polygon};

/// Exact computations with canonical-basis products and Stasheff polytopes
/// of type A_n.
#[derive(Parser, Debug)]
#[command(name = "stasheff", version)]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Maximum number of graphs a product expansion may visit.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    budget: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// All triangulations of the (n+3)-gon.
    Triangulations {
        #[arg(long)]
        n: usize,
    },
    /// Basis elements occurring in the product of the given points.
    Support {
        #[arg(long = "in")]
        input: PathBuf,
        /// Also print structure constants.
        #[arg(long)]
        coeffs: bool,
    },
    /// The spec c_d = Σ A_d^t(l) of the given points.
    Minkowski {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Tests the quadruple inequalities of a spec.
    CheckStasheff {
        #[arg(long = "in")]
        input: PathBuf,
        /// Exit with status 2 unless the spec is Stasheff.
        #[arg(long)]
        strict: bool,
    },
    /// Integer points of the region cut out by a spec.
    LatticePoints {
        #[arg(long = "in")]
        input: PathBuf,
        /// Chart for the coordinate listing, e.g. `1-3,1-4`; defaults to the snake.
        #[arg(long)]
        chart: Option<String>,
    },
    /// One vertex per triangulation, in its own chart.
    Vertices {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Lattice points and vertices in one chart, for plotting.
    ExportChart {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        chart: String,
        #[arg(long, value_enum, default_value_t = ExportFormat::Csv)]
        format: ExportFormat,
    },
    /// Compares the support of a product with the lattice points of its spec.
    VerifyMthm {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Mutates a seed along a word of 1-based directions.
    Mutate {
        #[arg(long)]
        seed: PathBuf,
        #[arg(long)]
        word: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ExportFormat {
    Csv,
}

/// Exit status and message of a failed run.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }

    fn math(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded(_) => 3,
            Error::InvariantViolation(_)
            | Error::NotDivisible
            | Error::DivisionByZero
            | Error::NotPositive
            | Error::NotInImageLattice(_)
            | Error::Unbounded(_)
            | Error::NotStasheff => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

type Output = Result<String, Failure>;

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_points(path: &Path) -> Result<Vec<Lamination>, Failure> {
    let points = laminations_from_json(&read_json(path)?)?;
    if points.is_empty() {
        return Err(Error::EmptyInput.into());
    }
    Ok(points)
}

fn read_spec(path: &Path) -> Result<StasheffSpec, Failure> {
    Ok(spec_from_json(open_document("spec", &read_json(path)?)?)?)
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn laminations_json(points: &[Lamination]) -> Value {
    Value::Array(points.iter().map(lamination_to_json).collect())
}

fn run(cli: &Cli) -> Output {
    let expander = || Expander::new(SelectionPolicy::First, cli.budget);
    match &cli.command {
        Command::Triangulations { n } => {
            let polygon = Polygon::new(n + 3)?;
            let ts: Vec<Value> = polygon.triangulations().iter().map(triangulation_to_json).collect();
            Ok(render(&document("", json!({"n_gon": polygon.n_gon(), "triangulations": ts}))))
        }
        Command::Support { input, coeffs } => {
            let points = read_points(input)?;
            let e = expander().product(&points)?;
            let v = if *coeffs {
                document("expansion", expansion_to_json(&e))
            } else {
                let support: Vec<Lamination> = e.support().into_iter().collect();
                document("points", laminations_json(&support))
            };
            Ok(render(&v))
        }
        Command::Minkowski { input } => {
            let points = read_points(input)?;
            Ok(render(&document("", spec_to_json(&minkowski_c(&points)?))))
        }
        Command::CheckStasheff { input, strict } => {
            let spec = read_spec(input)?;
            let ok = is_stasheff(&spec);
            let report = format!(
                "stasheff: {ok}\nnondegenerate: {}\nvertices contained: {}\n",
                is_nondegenerate(&spec),
                vertices_contained(&spec)
            );
            if *strict && !ok {
                return Err(Failure::math(report.trim_end()));
            }
            Ok(report)
        }
        Command::LatticePoints { input, chart } => {
            let spec = read_spec(input)?;
            let polygon = spec.polygon();
            let chart = match chart {
                Some(text) => parse_triangulation(polygon, text)?,
                None => polygon.snake(),
            };
            chart.require_complete()?;
            let points = lattice_points(&spec)?;
            let coords = points
                .iter()
                .map(|l| Ok(json!(phi(l, &chart)?.to_vec())))
                .collect::<Result<Vec<Value>, Error>>()?;
            Ok(render(&document(
                "",
                json!({
                    "n_gon": polygon.n_gon(),
                    "points": laminations_json(&points),
                    "chart": triangulation_to_json(&chart),
                    "coordinates": coords,
                }),
            )))
        }
        Command::Vertices { input } => {
            let spec = read_spec(input)?;
            let vs: Vec<Value> = vertices(&spec)?.iter().map(coords_to_json).collect();
            Ok(render(&document("vertices", Value::Array(vs))))
        }
        Command::ExportChart { input, chart, format } => {
            let spec = read_spec(input)?;
            let chart = parse_triangulation(spec.polygon(), chart)?;
            chart.require_complete()?;
            match format {
                ExportFormat::Csv => Ok(chart_csv(&spec, &chart)?),
            }
        }
        Command::VerifyMthm { input } => {
            let points = read_points(input)?;
            let support = expander().product(&points)?.support();
            let lattice: BTreeSet<Lamination> = lattice_points(&minkowski_c(&points)?)?.into_iter().collect();
            if support == lattice {
                return Ok(format!("support = lattice points, {} elements\n", support.len()));
            }
            let only_support: Vec<Lamination> = support.difference(&lattice).cloned().collect();
            let only_lattice: Vec<Lamination> = lattice.difference(&support).cloned().collect();
            Err(Failure::math(format!(
                "support != lattice points ({} vs {} elements)\nonly in support: {}\nonly in lattice: {}",
                support.len(),
                lattice.len(),
                laminations_json(&only_support),
                laminations_json(&only_lattice)
            )))
        }
        Command::Mutate { seed, word } => {
            let s = seed_from_json(open_document("seed", &read_json(seed)?)?)?;
            let word = parse_word(word)?;
            Ok(render(&document("", seed_to_json(&s.mutate_word(&word)?))))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, text),
                None => std::io::stdout().write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
