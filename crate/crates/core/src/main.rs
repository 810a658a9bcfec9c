//! Batch front end for the unified-family engine.
//!
//! Subcommands: `gen` prints members M_0..M_N (polynomials, numbers, or
//! values at a rational point); `verify` runs a seeded identity suite and
//! reports per-identity verdicts; `basis` prints Stirling/Lah triangles and
//! orthogonal-polynomial coefficients; `bbh` prints rational-argument basis
//! values.
//!
//! All scalar flags take exact rationals ("p/q" or "p"); the exponential
//! bases enter through their logarithms, so `--log-b 1` means b = e and no
//! irrational value is ever parsed. Exit codes: 0 success (for `verify`,
//! every verdict PASS or INCONCLUSIVE), 1 verification failure, 2
//! mathematical-domain error, 64 usage error. Identical flags and seed give
//! byte-identical output.

use apostol::bases::bbh::{bbh_basis, FactorialMode};
use apostol::bases::lah::gen_lah;
use apostol::bases::orthopoly::{hermite, jacobi, laguerre};
use apostol::bases::stirling::{
    gen_stirling1_row, gen_stirling2_row, stirling_triangle, StirlingKind,
};
use apostol::family::{family_numbers, family_polynomials, FamilyParams};
use apostol::identities::{run_suite, Suite, SuiteConfig, SuiteOutcome};
use apostol::rational::parse_rat;
use apostol::{Error, Rat, Result, XPoly};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::ser::{Serialize, SerializeStruct, Serializer};

#[derive(Parser)]
#[command(
    name = "apostol",
    version,
    about = "Exact unified Apostol-type families: generation and identity verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print members M_0..M_N of the unified family.
    Gen(GenArgs),
    /// Run an identity suite and report per-identity verdicts.
    Verify(VerifyArgs),
    /// Print Stirling/Lah triangles or orthogonal-polynomial coefficients.
    Basis(BasisArgs),
    /// Print the rational-argument basis values p_0..p_N at a point.
    Bbh(BbhArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Table,
    Json,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, default_value_t = 1)]
    k: u32,
    #[arg(long, default_value_t = 1)]
    m: u32,
    /// Family order; must agree with the number of alphas when given.
    #[arg(long)]
    r: Option<usize>,
    /// Comma-separated rational alphas, e.g. "1" or "2,-3/2".
    #[arg(
        long,
        default_value = "1",
        value_delimiter = ',',
        allow_hyphen_values = true
    )]
    alphas: Vec<String>,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    log_a: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    log_b: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    log_c: String,
    #[arg(long, default_value_t = 8)]
    order: usize,
    /// Print the numbers M_n(0) instead of polynomials.
    #[arg(long)]
    numbers: bool,
    /// Evaluate each polynomial at a rational point.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "numbers")]
    at: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// structural | multiplication | connection | table1 | lah | all
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 8)]
    order: usize,
    #[arg(long, default_value_t = 2)]
    samples: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, alias = "format", value_enum, default_value_t = ReportFormat::Table)]
    report: ReportFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisFamily {
    Stirling1,
    Stirling2,
    GenStirling1,
    GenStirling2,
    Lah,
    Hermite,
    Laguerre,
    Jacobi,
}

#[derive(Args)]
struct BasisArgs {
    #[arg(long, value_enum)]
    family: BasisFamily,
    /// Triangle depth, or the degree for the orthogonal families.
    #[arg(long)]
    n: usize,
    /// Comma-separated rational nodes for the generalized Stirling kinds.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    nodes: Option<Vec<String>>,
    /// Source nodes for the Lah connection (their count is r).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    alpha_nodes: Option<Vec<String>>,
    /// Target nodes for the Lah connection (at least n of them).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    beta_nodes: Option<Vec<String>>,
    /// Laguerre/Jacobi alpha parameter.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    alpha: String,
    /// Jacobi beta parameter.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    beta: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FactorialModeArg {
    MkFact,
    MTimesKfact,
}

#[derive(Args)]
struct BbhArgs {
    #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
    x: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    a: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    b: String,
    #[arg(long, default_value_t = 1)]
    k: u32,
    #[arg(long, default_value_t = 1)]
    m: u32,
    #[arg(long, default_value_t = 8)]
    order: usize,
    /// Normalization of the generating function: 1/(mk)! or 1/(m * k!).
    #[arg(long, value_enum, default_value_t = FactorialModeArg::MkFact)]
    factorial_mode: FactorialModeArg,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::InvalidArgument(_) => 64,
                _ => 2,
            };
            std::process::exit(code);
        }
    }
}

fn run(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Basis(args) => cmd_basis(args),
        Command::Bbh(args) => cmd_bbh(args),
    }
}

fn parse_list(items: &[String]) -> Result<Vec<Rat>> {
    items.iter().map(|s| parse_rat(s.trim())).collect()
}

fn strings(values: &[Rat]) -> Vec<String> {
    values.iter().map(Rat::to_string).collect()
}

/// Coefficients lowest-degree first; the zero polynomial prints as "0".
fn coeff_strings(poly: &XPoly) -> Vec<String> {
    if poly.coeffs().is_empty() {
        return vec!["0".into()];
    }
    strings(poly.coeffs())
}

/// One JSON document, keys in declaration order.
struct Doc<'a> {
    params: String,
    order: usize,
    payload: Payload<'a>,
}

enum Payload<'a> {
    Polynomials(Vec<Vec<String>>),
    Values(Vec<String>),
    Rows(Vec<Vec<String>>),
    Suite(&'a SuiteOutcome),
}

impl Serialize for Doc<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let fields = if matches!(self.payload, Payload::Suite(_)) {
            4
        } else {
            3
        };
        let mut doc = s.serialize_struct("Doc", fields)?;
        doc.serialize_field("params", &self.params)?;
        doc.serialize_field("order", &self.order)?;
        match &self.payload {
            Payload::Polynomials(polys) => doc.serialize_field("polynomials", polys)?,
            Payload::Values(values) => doc.serialize_field("values", values)?,
            Payload::Rows(rows) => doc.serialize_field("rows", rows)?,
            Payload::Suite(outcome) => {
                doc.serialize_field("reports", &outcome.reports)?;
                doc.serialize_field("skipped", &outcome.skipped)?;
            }
        }
        doc.end()
    }
}

fn print_json(doc: &Doc) {
    println!(
        "{}",
        serde_json::to_string_pretty(doc).expect("document serializes")
    );
}

/// Scalar sequences: one labeled line per entry, a single csv row, or a
/// json values array.
fn print_values(label: &str, params: String, order: usize, values: &[Rat], format: Format) {
    match format {
        Format::Table => {
            for (n, v) in values.iter().enumerate() {
                println!("{label}_{n} = {v}");
            }
        }
        Format::Csv => println!("{}", strings(values).join(",")),
        Format::Json => print_json(&Doc {
            params,
            order,
            payload: Payload::Values(strings(values)),
        }),
    }
}

fn cmd_gen(args: &GenArgs) -> Result<i32> {
    let alphas = parse_list(&args.alphas)?;
    if let Some(r) = args.r {
        if r != alphas.len() {
            return Err(Error::InvalidArgument(format!(
                "--r {r} disagrees with the {} alphas given",
                alphas.len()
            )));
        }
    }
    let params = FamilyParams::new(
        args.k,
        args.m,
        alphas,
        parse_rat(&args.log_a)?,
        parse_rat(&args.log_b)?,
        parse_rat(&args.log_c)?,
    )?;
    if params.base_collision() {
        eprintln!("warning: log a = log b collapses the two exponential bases");
    }
    let shown = params.to_string();

    if args.numbers {
        let values = family_numbers(&params, args.order)?;
        print_values("M", shown, args.order, &values, args.format);
        return Ok(0);
    }
    let seq = family_polynomials(&params, args.order)?;
    if let Some(at) = &args.at {
        let point = parse_rat(at)?;
        let values: Vec<Rat> = (0..=args.order).map(|n| seq.eval(n, &point)).collect();
        print_values("M", shown, args.order, &values, args.format);
        return Ok(0);
    }
    match args.format {
        Format::Table => {
            for (n, poly) in seq.polys.iter().enumerate() {
                println!("M_{n}(x) = {poly}");
            }
        }
        Format::Csv => {
            for (n, poly) in seq.polys.iter().enumerate() {
                println!("{n},{}", coeff_strings(poly).join(","));
            }
        }
        Format::Json => print_json(&Doc {
            params: shown,
            order: args.order,
            payload: Payload::Polynomials(seq.polys.iter().map(coeff_strings).collect()),
        }),
    }
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32> {
    let suite: Suite = args.suite.parse()?;
    let cfg = SuiteConfig {
        suite,
        order: args.order,
        samples: args.samples,
        seed: args.seed,
    };
    let outcome = run_suite(&cfg);
    let (passed, failed, inconclusive) = outcome.counts();
    match args.report {
        ReportFormat::Table => {
            for report in &outcome.reports {
                println!("{}", report.render_line());
            }
            for skip in &outcome.skipped {
                println!("skipped {skip}");
            }
            println!(
                "{passed} passed, {failed} failed, {inconclusive} inconclusive, {} skipped",
                outcome.skipped.len()
            );
        }
        ReportFormat::Json => print_json(&Doc {
            params: format!(
                "suite={suite} order={} samples={} seed={}",
                args.order, args.samples, args.seed
            ),
            order: args.order,
            payload: Payload::Suite(&outcome),
        }),
    }
    Ok(if failed > 0 { 1 } else { 0 })
}

fn required_nodes(nodes: &Option<Vec<String>>, n: usize, what: &str) -> Result<Vec<Rat>> {
    let Some(raw) = nodes else {
        return Err(Error::InvalidArgument(format!(
            "--{what} is required for this family"
        )));
    };
    let parsed = parse_list(raw)?;
    if parsed.len() < n {
        return Err(Error::InvalidArgument(format!(
            "--{what} needs at least {n} entries, got {}",
            parsed.len()
        )));
    }
    Ok(parsed)
}

fn print_triangle(params: String, n: usize, rows: Vec<Vec<Rat>>, format: Format) {
    match format {
        Format::Table => {
            for (i, row) in rows.iter().enumerate() {
                println!("row {i}: {}", strings(row).join(", "));
            }
        }
        Format::Csv => {
            for (i, row) in rows.iter().enumerate() {
                println!("{i},{}", strings(row).join(","));
            }
        }
        Format::Json => {
            let rows = rows.iter().map(|row| strings(row)).collect();
            print_json(&Doc {
                params,
                order: n,
                payload: Payload::Rows(rows),
            });
        }
    }
}

fn print_orthopoly(label: String, params: String, n: usize, poly: &XPoly, format: Format) {
    match format {
        Format::Table => println!("{label} = {poly}"),
        Format::Csv => println!("{}", coeff_strings(poly).join(",")),
        Format::Json => print_json(&Doc {
            params,
            order: n,
            payload: Payload::Polynomials(vec![coeff_strings(poly)]),
        }),
    }
}

fn cmd_basis(args: &BasisArgs) -> Result<i32> {
    let n = args.n;
    match args.family {
        BasisFamily::Stirling1 | BasisFamily::Stirling2 => {
            let kind = if args.family == BasisFamily::Stirling1 {
                StirlingKind::FirstSigned
            } else {
                StirlingKind::Second
            };
            let params = format!("family={:?} n={n}", args.family);
            print_triangle(params, n, stirling_triangle(kind, n), args.format);
        }
        BasisFamily::GenStirling1 | BasisFamily::GenStirling2 => {
            let nodes = required_nodes(&args.nodes, n, "nodes")?;
            let row = |j: usize| {
                if args.family == BasisFamily::GenStirling1 {
                    gen_stirling1_row(j, &nodes)
                } else {
                    gen_stirling2_row(j, &nodes)
                }
            };
            let params = format!(
                "family={:?} n={n} nodes=({})",
                args.family,
                strings(&nodes).join(",")
            );
            print_triangle(params, n, (0..=n).map(row).collect(), args.format);
        }
        BasisFamily::Lah => {
            let alpha_nodes = required_nodes(&args.alpha_nodes, 1, "alpha-nodes")?;
            let r = alpha_nodes.len();
            if n < r {
                return Err(Error::InvalidArgument(format!(
                    "--n {n} is below the source order r = {r}"
                )));
            }
            let beta_nodes = required_nodes(&args.beta_nodes, n, "beta-nodes")?;
            let coeffs = gen_lah(r, &alpha_nodes, &beta_nodes[..n], n)?;
            let params = format!(
                "family=Lah r={r} n={n} alpha-nodes=({}) beta-nodes=({})",
                strings(&alpha_nodes).join(","),
                strings(&beta_nodes[..n]).join(",")
            );
            // One row per target index m, holding C(m, r).
            let rows: Vec<Vec<String>> = coeffs.iter().map(|c| vec![c.to_string()]).collect();
            match args.format {
                Format::Table => {
                    for (i, c) in coeffs.iter().enumerate() {
                        println!("C({}, {r}) = {c}", i + r);
                    }
                }
                Format::Csv => {
                    for (i, c) in coeffs.iter().enumerate() {
                        println!("{},{c}", i + r);
                    }
                }
                Format::Json => print_json(&Doc {
                    params,
                    order: n,
                    payload: Payload::Rows(rows),
                }),
            }
        }
        BasisFamily::Hermite => {
            let poly = hermite(n);
            let params = format!("family=Hermite n={n}");
            print_orthopoly(format!("H_{n}(x)"), params, n, &poly, args.format);
        }
        BasisFamily::Laguerre => {
            let alpha = parse_rat(&args.alpha)?;
            let poly = laguerre(n, &alpha);
            let params = format!("family=Laguerre n={n} alpha={alpha}");
            print_orthopoly(format!("L_{n}^({alpha})(x)"), params, n, &poly, args.format);
        }
        BasisFamily::Jacobi => {
            let alpha = parse_rat(&args.alpha)?;
            let beta = parse_rat(&args.beta)?;
            let poly = jacobi(n, &alpha, &beta)?;
            let params = format!("family=Jacobi n={n} alpha={alpha} beta={beta}");
            print_orthopoly(
                format!("P_{n}^({alpha},{beta})(x)"),
                params,
                n,
                &poly,
                args.format,
            );
        }
    }
    Ok(0)
}

fn cmd_bbh(args: &BbhArgs) -> Result<i32> {
    let x = parse_rat(&args.x)?;
    let a = parse_rat(&args.a)?;
    let b = parse_rat(&args.b)?;
    let mode = match args.factorial_mode {
        FactorialModeArg::MkFact => FactorialMode::MkFact,
        FactorialModeArg::MTimesKfact => FactorialMode::MTimesKFact,
    };
    let values = bbh_basis(&x, &a, &b, args.k, args.m, args.order, mode)?;
    let params = format!("x={x} a={a} b={b} k={} m={} mode={mode}", args.k, args.m);
    print_values("p", params, args.order, &values, args.format);
    Ok(0)
}
