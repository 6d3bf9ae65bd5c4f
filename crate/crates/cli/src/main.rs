use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use degen_core::identity::{
    all_pass, catalog, matches_filter, negative_controls, run_cases, summary_table, IdentityCase,
    Limits,
};
use degen_core::rings::{Assignment, Rational, Var};
use degen_core::tables::{check_params, family_value, Family, Indices, LambdaSpec, TableRequest};
use degen_core::Error;

const LAMBDA_HELP: &str = "λ is written `l` in rendered polynomials; `sym` keeps it symbolic";

/// Exact tables and identity checks for degenerate Stirling, Bernoulli,
/// Fubini and poly-Bernoulli families.
#[derive(Parser)]
#[command(name = "degen", version, after_help = LAMBDA_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table of a family as JSON or CSV.
    Table(TableArgs),
    /// Run the identity catalog and print one JSON report per line.
    Check(CheckArgs),
    /// Evaluate one member of a family, optionally at rational λ, x, y.
    Eval(EvalArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_lambda(s: &str) -> Result<LambdaSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long, allow_hyphen_values = true)]
    n_max: i64,
    #[arg(long, allow_hyphen_values = true)]
    k_max: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    r: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    p: Option<i64>,
    /// `sym` or a rational such as 1/3.
    #[arg(long, default_value = "sym", value_parser = parse_lambda, allow_hyphen_values = true)]
    lambda: LambdaSpec,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct CheckArgs {
    /// Run only identities whose id starts with this prefix.
    #[arg(long)]
    filter: Option<String>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    r_max: Option<usize>,
    /// Add wall time to each report line.
    #[arg(long)]
    timings: bool,
    /// Also run deliberately corrupted identities.
    #[arg(long, hide = true)]
    corrupt: bool,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    r: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    p: Option<i64>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    lambda: Option<Rational>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    x: Option<Rational>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    y: Option<Rational>,
}

enum Failure {
    Usage(String),
    Identity(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalIdentityFailure { .. } => Failure::Identity(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn emit(text: &str) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Failure::Usage(format!("writing output: {e}")))
}

fn cmd_table(args: TableArgs) -> Result<(), Failure> {
    let req = TableRequest {
        family: args.family,
        n_max: args.n_max,
        k_max: args.k_max,
        r: args.r,
        p: args.p,
        lambda: args.lambda,
    };
    req.validate()?;
    let table = req.build()?;
    let text = match args.format {
        Format::Json => table.to_json()? + "\n",
        Format::Csv => table.to_csv()?,
    };
    emit(&text)
}

fn cmd_check(args: CheckArgs) -> Result<(), Failure> {
    let mut limits = Limits::default();
    if let Some(n) = args.n_max {
        limits = limits.with_n_max(n);
    }
    if let Some(r) = args.r_max {
        limits = limits.with_r_max(r);
    }
    let mut cases: Vec<IdentityCase> = catalog();
    if args.corrupt {
        cases.extend(negative_controls());
    }
    if let Some(f) = &args.filter {
        cases.retain(|c| matches_filter(&c.id, f));
        if cases.is_empty() {
            return Err(Failure::Usage(format!("no identity matches filter `{f}`")));
        }
    }
    let reports = run_cases(&cases, &limits);
    let lines: String = reports
        .iter()
        .map(|r| r.to_json_line(args.timings) + "\n")
        .collect();
    emit(&lines)?;
    eprint!("{}", summary_table(&reports));
    if all_pass(&reports) {
        Ok(())
    } else {
        Err(Failure::Identity("identity check failed".into()))
    }
}

fn cmd_eval(args: EvalArgs) -> Result<(), Failure> {
    let family = args.family;
    check_params(family, args.k, args.r, args.p, true)?;
    for (var, value) in [(Var::X, &args.x), (Var::Y, &args.y)] {
        if value.is_some() && !family.uses_var(var) {
            return Err(Failure::Usage(format!(
                "family {family} has no symbol {}",
                var.symbol()
            )));
        }
    }
    let idx = Indices {
        n: args.n,
        k: args.k,
        r: args.r,
        p: args.p,
    };
    let value = family_value(family, idx)?;
    let mut at = Assignment::new();
    if let Some(v) = args.lambda {
        at = at.lambda(v);
    }
    if let Some(v) = args.x {
        at = at.x(v);
    }
    if let Some(v) = args.y {
        at = at.y(v);
    }
    emit(&format!("{}\n", value.eval(&at)))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(a) => cmd_table(a),
        Command::Check(a) => cmd_check(a),
        Command::Eval(a) => cmd_eval(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Identity(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
