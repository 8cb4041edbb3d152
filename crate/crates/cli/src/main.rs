use std::fs::{self, File};
use std::io::{self, BufWriter, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use alliance_poly::alliance::{
    self, alliance_polynomial_with, check_polynomial, AlliancePolynomial, ComputeOptions,
};
use alliance_poly::census::{self, CensusOptions};
use alliance_poly::compare::{distinguishing_suite, PolyKind};
use alliance_poly::graph::{families, io as gio};
use alliance_poly::{Error, Graph};

const EXIT_INPUT: u8 = 1;
const EXIT_GUARD: u8 = 2;
const EXIT_CHECK_FAILED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "alliance",
    version,
    about = "Alliance polynomials of small simple graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the alliance polynomial of one graph.
    Compute(ComputeArgs),
    /// Print a closed-form polynomial for a named family.
    Family(FamilyArgs),
    /// Run the structural checks on a graph's polynomial.
    Verify(VerifyArgs),
    /// Build the isomorphism-free catalog and check the family uniqueness results.
    Census(CensusArgs),
    /// Compare two graphs under several polynomials.
    Compare(CompareArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Args)]
struct InputArgs {
    /// Graph file; standard input when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: Format,
}

#[derive(Args)]
struct EngineArgs {
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    threads: u16,
    /// Lift the brute-force order guard.
    #[arg(long)]
    force: bool,
}

impl EngineArgs {
    fn options(&self) -> ComputeOptions {
        ComputeOptions {
            threads: self.threads as usize,
            force: self.force,
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    engine: EngineArgs,
    #[arg(long)]
    json: bool,
    /// Evaluation point, an integer or `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    eval: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    Empty,
    Star,
    CompleteBipartite,
    CompleteMinusEdge,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    n: usize,
    /// Second part size for complete-bipartite.
    #[arg(long)]
    m: Option<usize>,
    /// Also run the subset enumeration and report MATCH or MISMATCH.
    #[arg(long)]
    brute_force: bool,
    #[command(flatten)]
    engine: EngineArgs,
    #[arg(long)]
    json: bool,
    #[arg(long, allow_hyphen_values = true)]
    eval: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    engine: EngineArgs,
    #[arg(long)]
    json: bool,
    /// Check this JSON polynomial instead of the computed one.
    #[arg(long)]
    claimed: Option<PathBuf>,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    max_n: usize,
    /// JSON-lines catalog destination.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    engine: EngineArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CompareArgs {
    /// Two graph files.
    #[arg(num_args = 0..=2)]
    graphs: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: Format,
    /// Comma-separated polynomial names; all of them when absent.
    #[arg(long, value_delimiter = ',')]
    polys: Vec<PolyKind>,
    /// Run the built-in fixture pairs instead.
    #[arg(long)]
    suite: bool,
    #[arg(long)]
    json: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_guard() { EXIT_GUARD } else { EXIT_INPUT },
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    let outcome = match cli.command {
        Command::Compute(a) => compute(a),
        Command::Family(a) => family(a),
        Command::Verify(a) => verify(a),
        Command::Census(a) => run_census(a),
        Command::Compare(a) => compare(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_graph(text: &str, format: Format) -> Result<Graph, Failure> {
    let g = match format {
        Format::Edgelist => gio::from_edge_list_text(text)?,
        Format::Graph6 => gio::from_graph6(text.trim())?,
    };
    Ok(g)
}

fn read_path(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn read_graph(args: &InputArgs) -> Result<Graph, Failure> {
    let text = match &args.input {
        Some(p) => read_path(p)?,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| input_error(format!("stdin: {e}")))?;
            s
        }
    };
    parse_graph(&text, args.format)
}

fn parse_rational(s: &str) -> Result<BigRational, Failure> {
    let bad = || input_error(format!("invalid evaluation point {s:?}"));
    let int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| bad());
    match s.split_once('/') {
        Some((p, q)) => {
            let q = int(q)?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(int(p)?, q))
        }
        None => Ok(BigRational::from_integer(int(s)?)),
    }
}

fn print_polynomial(p: &AlliancePolynomial, json: bool, eval: Option<&str>) -> Result<(), Failure> {
    let value = eval
        .map(|x| parse_rational(x).map(|r| (x, p.evaluate(&r))))
        .transpose()?;
    if json {
        let mut v = p.to_json_value();
        if let Some((x, val)) = &value {
            v["eval"] = json!({ "x": x, "value": val.to_string() });
        }
        println!("{v}");
    } else {
        println!("{p}");
        if let Some((_, val)) = value {
            println!("{val}");
        }
    }
    Ok(())
}

fn compute(a: ComputeArgs) -> CmdResult {
    let g = read_graph(&a.input)?;
    let p = alliance_polynomial_with(&g, &a.engine.options())?;
    print_polynomial(&p, a.json, a.eval.as_deref())?;
    Ok(0)
}

fn family_graph(a: &FamilyArgs) -> Result<(Graph, AlliancePolynomial), Failure> {
    use alliance::*;
    let n = a.n;
    let pair = match a.family {
        Family::Path => (families::path(n)?, closed_form_path(n)?),
        Family::Cycle => (families::cycle(n)?, closed_form_cycle(n)?),
        Family::Complete => (families::complete(n)?, closed_form_complete(n)?),
        Family::Empty => (families::empty(n)?, closed_form_empty(n)?),
        Family::Star => (families::star(n)?, closed_form_star(n)?),
        Family::CompleteMinusEdge => (
            families::complete_minus_edge(n)?,
            closed_form_complete_minus_edge(n)?,
        ),
        Family::CompleteBipartite => {
            let m =
                a.m.ok_or_else(|| input_error("complete-bipartite needs --m"))?;
            (
                families::complete_bipartite(n, m)?,
                closed_form_complete_bipartite(n, m)?,
            )
        }
    };
    Ok(pair)
}

fn family(a: FamilyArgs) -> CmdResult {
    let (g, closed) = family_graph(&a)?;
    print_polynomial(&closed, a.json, a.eval.as_deref())?;
    if !a.brute_force {
        return Ok(0);
    }
    let brute = alliance_polynomial_with(&g, &a.engine.options())?;
    if brute == closed {
        println!("MATCH");
        Ok(0)
    } else {
        println!("MISMATCH");
        println!("{brute}");
        Ok(EXIT_CHECK_FAILED)
    }
}

fn verify(a: VerifyArgs) -> CmdResult {
    let g = read_graph(&a.input)?;
    let opts = a.engine.options();
    let claimed = match &a.claimed {
        Some(path) => AlliancePolynomial::from_json_str(&read_path(path)?)?,
        None => alliance_polynomial_with(&g, &opts)?,
    };
    let report = check_polynomial(&g, &claimed, &opts)?;
    if a.json {
        println!("{}", report.to_json_value());
    } else {
        print!("{report}");
    }
    Ok(if report.all_passed() {
        0
    } else {
        EXIT_CHECK_FAILED
    })
}

fn run_census(a: CensusArgs) -> CmdResult {
    let opts = CensusOptions {
        threads: a.engine.threads as usize,
        force: a.engine.force,
    };
    let catalog = census::build_catalog(a.max_n, &opts)?;
    if let Some(path) = &a.out {
        let file =
            File::create(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
        census::save_catalog(&catalog, BufWriter::new(file))?;
    }
    let counts = census::class_counts(&catalog);
    let collisions = census::find_collisions(&catalog);
    let report = census::verify_characterizations(&catalog)?;
    if a.json {
        let summary = json!({
            "entries": catalog.len(),
            "classes_per_order": counts[1..].to_vec(),
            "collision_groups": census::collisions_to_json(&collisions),
            "characterizations": report.to_json_value(),
        });
        println!("{summary}");
    } else {
        for (n, c) in counts.iter().enumerate().skip(1) {
            println!("n={n}: {c} classes");
        }
        match &a.out {
            Some(path) => println!("{} entries written to {}", catalog.len(), path.display()),
            None => println!("{} entries", catalog.len()),
        }
        println!("collision groups: {}", collisions.len());
        print!("{report}");
    }
    Ok(if report.all_passed() {
        0
    } else {
        EXIT_CHECK_FAILED
    })
}

fn compare(a: CompareArgs) -> CmdResult {
    if a.suite {
        let report = distinguishing_suite()?;
        if a.json {
            println!("{}", report.to_json_value());
        } else {
            print!("{report}");
        }
        return Ok(if report.all_passed() {
            0
        } else {
            EXIT_CHECK_FAILED
        });
    }
    let [left, right] = a.graphs.as_slice() else {
        return Err(input_error("compare needs two graph files or --suite"));
    };
    let g = parse_graph(&read_path(left)?, a.format)?;
    let h = parse_graph(&read_path(right)?, a.format)?;
    let kinds = if a.polys.is_empty() {
        PolyKind::ALL.to_vec()
    } else {
        a.polys.clone()
    };
    let mut rows = Vec::new();
    for kind in kinds {
        let (p, q) = (kind.compute(&g)?, kind.compute(&h)?);
        let verdict = if p == q { "EQUAL" } else { "UNEQUAL" };
        rows.push((kind, p, q, verdict));
    }
    if a.json {
        let items: Vec<Value> = rows
            .iter()
            .map(|(k, p, q, v)| {
                json!({
                    "polynomial": k.name(),
                    "left": p.to_string(),
                    "right": q.to_string(),
                    "verdict": v,
                })
            })
            .collect();
        println!("{}", Value::Array(items));
    } else {
        for (k, _, _, v) in &rows {
            println!("{k}: {v}");
        }
    }
    Ok(0)
}
