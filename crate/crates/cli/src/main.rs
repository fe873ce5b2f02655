//! `polybern` — exact tables of degenerate Bernoulli/Stirling/polylogarithm
//! families, an identity verification suite, and λ→0 limit comparisons.
//!
//! Exit status: 0 on success with all checks passing, 1 when a verification
//! or limit comparison fails, 2 on usage errors.

mod output;

use std::fs::File;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use polybern::identity::{run_suite, FaultTarget, SuiteConfig};
use polybern::scalar::{CoeffRing, LambdaPoly, Rational};
use polybern::sequences::{
    classical_bernoulli_numbers, family_rows, stirling1_falling_factorial_table,
    stirling2_recurrence_table, Family,
};
use polybern::Triangle;

use output::{LimitRow, TableRow, LIMIT_HEADER, REPORT_HEADER, TABLE_HEADER};

#[derive(Parser)]
#[command(
    name = "polybern",
    version,
    about = "Exact degenerate Bernoulli, Stirling and polylogarithm sequences over rationals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit an exact table of one sequence family.
    Table(TableArgs),
    /// Recompute every supported identity along independent routes; exit 1 on
    /// any mismatch.
    Verify(VerifyArgs),
    /// Evaluate symbolic-λ families at λ = 0 beside their classical
    /// counterparts; exit 1 on any mismatch.
    Limit(LimitArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct TableArgs {
    /// Family id: bernoulli, carlitz, poly-bernoulli, stirling1, stirling2,
    /// deg-stirling1, deg-stirling2, deg-polylog-coeffs.
    #[arg(long)]
    family: String,
    /// Largest index n to emit.
    #[arg(long = "n-max", default_value_t = 8)]
    n_max: usize,
    /// Polylogarithm order (poly-bernoulli and deg-polylog-coeffs).
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i32>,
    /// λ as a rational literal like 1/2 or -1/3, or the keyword "symbolic".
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Series truncation order N; n-max must not exceed it.
    #[arg(long, env = "POLYBERN_ORDER", default_value_t = 16)]
    order: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output path, or "-" for standard output.
    #[arg(long, default_value = "-")]
    output: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Series truncation order N.
    #[arg(long, env = "POLYBERN_ORDER", default_value_t = 16)]
    order: usize,
    /// Inclusive polylogarithm order range, e.g. "-2..4".
    #[arg(long = "k-range", default_value = "-2..4", allow_hyphen_values = true)]
    k_range: String,
    /// Comma-separated λ representations: "symbolic" and/or rational
    /// literals, e.g. "symbolic,1/2,-1/3".
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    lambda: String,
    /// Largest number of weak compositions enumerated per index in the
    /// multinomial check; larger indices are skipped with an explicit note.
    #[arg(long = "composition-budget", default_value_t = 100_000)]
    composition_budget: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Output path, or "-" for standard output.
    #[arg(long, default_value = "-")]
    output: String,
    /// Corrupt one internal table to exercise the failure path. Test fixture;
    /// targets: poly-bernoulli-sum, deg-stirling1-recurrence, carlitz-series.
    #[arg(long = "inject-fault", hide = true)]
    inject_fault: Option<String>,
}

#[derive(Args)]
struct LimitArgs {
    /// Restrict to one family (default: every family with a classical
    /// counterpart: carlitz, poly-bernoulli, deg-stirling1, deg-stirling2,
    /// deg-polylog-coeffs).
    #[arg(long)]
    family: Option<String>,
    /// Largest index n to compare.
    #[arg(long = "n-max", default_value_t = 8)]
    n_max: usize,
    /// Polylogarithm order for the deg-polylog-coeffs comparison.
    #[arg(long, allow_hyphen_values = true, default_value_t = 2)]
    k: i32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output path, or "-" for standard output.
    #[arg(long, default_value = "-")]
    output: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Limit(args) => cmd_limit(args),
    }
}

enum LambdaArg {
    Symbolic,
    Value(Rational),
}

fn parse_lambda(text: &str) -> Result<LambdaArg, String> {
    if text == "symbolic" {
        return Ok(LambdaArg::Symbolic);
    }
    text.parse::<Rational>()
        .map(LambdaArg::Value)
        .map_err(|_| format!("invalid λ {text:?}: expected a rational like 1/2 or \"symbolic\""))
}

/// "symbolic,1/2,-1/3" → (symbolic?, concrete values).
fn parse_lambda_list(text: &str) -> Result<(bool, Vec<Rational>), String> {
    let mut symbolic = false;
    let mut values = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match parse_lambda(item)? {
            LambdaArg::Symbolic => symbolic = true,
            LambdaArg::Value(q) => values.push(q),
        }
    }
    Ok((symbolic, values))
}

/// "-2..4" → (-2, 4), inclusive on both ends.
fn parse_k_range(text: &str) -> Result<(i32, i32), String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("invalid k range {text:?}: expected \"min..max\""))?;
    let lo: i32 = lo
        .trim()
        .parse()
        .map_err(|_| format!("invalid k range bound {lo:?}"))?;
    let hi: i32 = hi
        .trim()
        .parse()
        .map_err(|_| format!("invalid k range bound {hi:?}"))?;
    if lo > hi {
        return Err(format!("empty k range {text:?}"));
    }
    Ok((lo, hi))
}

fn open_output(path: &str) -> Result<Box<dyn Write>, String> {
    if path == "-" {
        Ok(Box::new(io::stdout()))
    } else {
        File::create(path)
            .map(|f| Box::new(f) as Box<dyn Write>)
            .map_err(|e| format!("cannot create {path}: {e}"))
    }
}

fn cmd_table(args: TableArgs) -> Result<ExitCode, String> {
    let family =
        Family::parse(&args.family).ok_or_else(|| format!("unknown family {:?}", args.family))?;
    if args.n_max > args.order {
        return Err(format!(
            "n-max ({}) must not exceed the truncation order ({})",
            args.n_max, args.order
        ));
    }
    let lambda = args.lambda.as_deref().map(parse_lambda).transpose()?;
    let rows = match &lambda {
        Some(LambdaArg::Symbolic) => assemble_rows(
            family,
            args.n_max,
            args.k,
            Some(&LambdaPoly::var()),
            Some("symbolic"),
        )?,
        Some(LambdaArg::Value(q)) => {
            assemble_rows(family, args.n_max, args.k, Some(q), Some(&q.to_string()))?
        }
        None => assemble_rows::<Rational>(family, args.n_max, args.k, None, None)?,
    };
    let mut out = open_output(&args.output)?;
    emit(&mut *out, args.format, &TABLE_HEADER, &rows, |r| {
        r.csv_fields()
    })?;
    Ok(ExitCode::SUCCESS)
}

fn assemble_rows<R: CoeffRing>(
    family: Family,
    n_max: usize,
    k: Option<i32>,
    lambda: Option<&R>,
    lambda_label: Option<&str>,
) -> Result<Vec<TableRow>, String> {
    let label = if family.needs_lambda() {
        lambda_label
    } else {
        None
    };
    let values = family_rows(family, n_max, k, lambda).map_err(|e| e.to_string())?;
    Ok(values
        .into_iter()
        .map(|v| TableRow {
            family: v.family.id().to_string(),
            n: v.n,
            k: v.k,
            lambda: label.map(str::to_string),
            value: v.value.to_string(),
            path: v.path.id().to_string(),
        })
        .collect())
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let (k_min, k_max) = parse_k_range(&args.k_range)?;
    let (symbolic, lambdas) = parse_lambda_list(&args.lambda)?;
    if !symbolic && lambdas.is_empty() {
        return Err("nothing to run: no λ representation was selected".to_string());
    }
    let fault = args
        .inject_fault
        .as_deref()
        .map(|s| FaultTarget::parse(s).ok_or_else(|| format!("unknown fault target {s:?}")))
        .transpose()?;
    let config = SuiteConfig {
        order: args.order,
        k_min,
        k_max,
        symbolic,
        lambdas,
        composition_budget: args.composition_budget,
        fault,
    };
    let report = run_suite(&config);
    let failed = report.iter().filter(|c| !c.passed()).count();
    let mut out = open_output(&args.output)?;
    match args.format {
        Format::Json => output::write_json(&mut *out, &report).map_err(io_msg)?,
        Format::Csv => output::write_csv(
            &mut *out,
            &REPORT_HEADER,
            report.iter().map(output::report_csv_fields),
        )
        .map_err(io_msg)?,
    }
    eprintln!("verify: {} checks, {} failed", report.len(), failed);
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_limit(args: LimitArgs) -> Result<ExitCode, String> {
    const COMPARABLE: [Family; 5] = [
        Family::Carlitz,
        Family::PolyBernoulli,
        Family::DegStirling1,
        Family::DegStirling2,
        Family::DegPolylogCoeffs,
    ];
    let selected: Vec<Family> = match &args.family {
        None => COMPARABLE.to_vec(),
        Some(text) => {
            let family = Family::parse(text).ok_or_else(|| format!("unknown family {text:?}"))?;
            if !COMPARABLE.contains(&family) {
                return Err(format!(
                    "family {family} is already classical; nothing to compare"
                ));
            }
            vec![family]
        }
    };

    let mut rows = Vec::new();
    for family in selected {
        limit_rows(family, args.n_max, args.k, &mut rows);
    }
    let all_match = rows.iter().all(|r| r.matches);
    let mut out = open_output(&args.output)?;
    emit(&mut *out, args.format, &LIMIT_HEADER, &rows, |r| {
        r.csv_fields()
    })?;
    if !all_match {
        eprintln!("limit: mismatch between λ→0 and classical values");
    }
    Ok(if all_match {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn push_row(
    rows: &mut Vec<LimitRow>,
    family: Family,
    n: usize,
    k: Option<i32>,
    limit: Rational,
    classical: Rational,
) {
    rows.push(LimitRow {
        family: family.id().to_string(),
        n,
        k,
        matches: limit == classical,
        limit: limit.to_string(),
        classical: classical.to_string(),
    });
}

/// λ→0 slice of one symbolic family beside its classical oracle.
fn limit_rows(family: Family, n_max: usize, k: i32, rows: &mut Vec<LimitRow>) {
    let symbolic = LambdaPoly::var();
    let zero = Rational::zero();
    match family {
        Family::Carlitz => {
            let degenerate =
                polybern::sequences::carlitz_beta_table(&symbolic, &LambdaPoly::zero(), n_max);
            let classical = classical_bernoulli_numbers(n_max);
            for n in 0..=n_max {
                push_row(
                    rows,
                    family,
                    n,
                    None,
                    degenerate[n].eval(&zero),
                    classical[n].clone(),
                );
            }
        }
        Family::PolyBernoulli => {
            // The classical anchor is k = 1: the limit is (−1)ⁿ·B_n.
            let degenerate = polybern::sequences::poly_bernoulli_table(1, &symbolic, n_max);
            let classical = classical_bernoulli_numbers(n_max);
            for n in 0..=n_max {
                let signed = if n % 2 == 0 {
                    classical[n].clone()
                } else {
                    -classical[n].clone()
                };
                push_row(rows, family, n, Some(1), degenerate[n].eval(&zero), signed);
            }
        }
        Family::DegStirling1 => {
            let degenerate =
                polybern::sequences::deg_stirling1_table(&symbolic, n_max).map(|p| p.eval(&zero));
            push_triangle(
                family,
                &degenerate,
                &stirling1_falling_factorial_table(n_max),
                rows,
            );
        }
        Family::DegStirling2 => {
            let degenerate =
                polybern::sequences::deg_stirling2_table(&symbolic, n_max).map(|p| p.eval(&zero));
            push_triangle(
                family,
                &degenerate,
                &stirling2_recurrence_table(n_max),
                rows,
            );
        }
        Family::DegPolylogCoeffs => {
            let series = polybern::degenerate::polylog_series(k, &symbolic, n_max);
            for n in 0..=n_max {
                let classical = if n == 0 {
                    Rational::zero()
                } else {
                    polybern::scalar::integer_power(n as u64, -k)
                };
                push_row(
                    rows,
                    family,
                    n,
                    Some(k),
                    series.coeff(n).eval(&zero),
                    classical,
                );
            }
        }
        Family::Bernoulli | Family::Stirling1 | Family::Stirling2 => unreachable!(),
    }
}

fn push_triangle(
    family: Family,
    degenerate: &Triangle<Rational>,
    classical: &Triangle<Rational>,
    rows: &mut Vec<LimitRow>,
) {
    for n in 0..=degenerate.size() {
        for k in 0..=n {
            let limit = degenerate.value(n, k);
            let target = classical.value(n, k);
            rows.push(LimitRow {
                family: family.id().to_string(),
                n,
                k: Some(k as i32),
                matches: limit == target,
                limit: limit.to_string(),
                classical: target.to_string(),
            });
        }
    }
}

fn emit<T>(
    out: &mut dyn Write,
    format: Format,
    header: &[&str],
    rows: &[T],
    csv_fields: impl Fn(&T) -> Vec<String>,
) -> Result<(), String>
where
    T: serde::Serialize,
{
    match format {
        Format::Json => output::write_json(out, &rows).map_err(io_msg),
        Format::Csv => output::write_csv(out, header, rows.iter().map(csv_fields)).map_err(io_msg),
    }
}

fn io_msg(e: io::Error) -> String {
    format!("cannot write output: {e}")
}
