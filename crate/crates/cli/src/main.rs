use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rug::Float;
use serde::Serialize;
use serde_json::json;

use zetalab::dirichlet::enumerate_characters;
use zetalab::engine::{evaluate, EvalRequest, Function};
use zetalab::error::Error;
use zetalab::identity::{list_identities, verify_identity, IdentityParams, DEFAULT_GRID};
use zetalab::mp::{format_complex, format_sci, parse_complex, parse_rational, parse_real, PrecisionContext, SeriesResult};
use zetalab::recurrences::{convergence_profile, term_table, SchemeId, SeriesScheme};

#[derive(Parser, Debug)]
#[command(name = "zetalab", version, about = "High-precision zeta-type values, fast series and identity checks")]
struct Cli {
    /// Decimal digits of working precision.
    #[arg(long, global = true, default_value_t = 60)]
    digits: u32,
    #[arg(long, global = true, conflicts_with_all = ["plain", "csv"])]
    json: bool,
    #[arg(long, global = true, conflicts_with = "csv")]
    plain: bool,
    #[arg(long, global = true)]
    csv: bool,
    /// Leave elapsed_ms out so repeated runs print identical bytes.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate η, ζ, ζ(·,a), β, Φ(−1,·,a) or L(·,χ) at s.
    Eval(EvalArgs),
    /// ζ(2r+1) from one of the odd-zeta recursions.
    OddZeta(OddZetaArgs),
    /// Check a registered series identity on a grid.
    Verify(VerifyArgs),
    /// Tail-term table and convergence fit of a fast ζ(2r+1) scheme.
    Bench(BenchArgs),
    /// Characters mod q in enumeration order.
    ListChars(ListCharsArgs),
}

#[derive(Args, Debug)]
struct CharArgs {
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    char_index: Option<usize>,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(long)]
    function: String,
    /// Complex argument such as `3`, `2.5`, `3+0.5i`.
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[command(flatten)]
    chi: CharArgs,
    /// Head length.
    #[arg(long)]
    m: Option<u64>,
    /// Tail budget.
    #[arg(long = "K", alias = "k")]
    k: Option<usize>,
}

#[derive(Args, Debug)]
struct OddZetaArgs {
    #[arg(long)]
    r: u32,
    /// dy, dyj, dh, m3, m4 or m6.
    #[arg(long)]
    scheme: String,
    #[arg(long = "K", alias = "k", default_value_t = SeriesScheme::DEFAULT_BUDGET)]
    k: usize,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Canonical id or alias; `--list` prints them.
    #[arg(long, required_unless_present = "list")]
    identity: Option<String>,
    #[arg(long)]
    list: bool,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[command(flatten)]
    chi: CharArgs,
    #[arg(long, default_value_t = DEFAULT_GRID)]
    grid: usize,
    /// LHS terms N.
    #[arg(long, default_value_t = 10_000)]
    terms: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BenchFormat {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long)]
    scheme: String,
    #[arg(long)]
    r: u32,
    #[arg(long, default_value_t = SeriesScheme::DEFAULT_BUDGET)]
    max_terms: usize,
    #[arg(long, value_enum)]
    format: Option<BenchFormat>,
}

#[derive(Args, Debug)]
struct ListCharsArgs {
    #[arg(long)]
    q: u64,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Plain,
    Csv,
}

#[derive(Serialize)]
struct OutputRecord {
    command: String,
    value: String,
    error_estimate: String,
    terms_used: usize,
    termination: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
    precision_digits: u32,
}

enum Outcome {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn echo() -> String {
    std::env::args().skip(1).collect::<Vec<_>>().join(" ")
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let ctx = PrecisionContext::new(cli.digits)?;
    let format = if cli.csv {
        Format::Csv
    } else if cli.plain {
        Format::Plain
    } else {
        Format::Json
    };
    let start = Instant::now();
    let elapsed = || (!cli.no_timing).then(|| start.elapsed().as_millis());
    match &cli.command {
        Command::Eval(args) => {
            let f: Function = args.function.parse()?;
            let mut req = EvalRequest::new(parse_complex(&args.s, &ctx)?);
            if let Some(a) = &args.a {
                req = req.with_a(parse_real(a, &ctx)?);
            }
            if let Some(chi) = character(&args.chi)? {
                req = req.with_chi(chi);
            }
            req.m = args.m;
            req.budget = args.k;
            let r = evaluate(f, &req, &ctx)?;
            print_record(&r, format, cli.digits, elapsed())
        }
        Command::OddZeta(args) => {
            let id: SchemeId = args.scheme.parse()?;
            if !id.is_odd_zeta() {
                return Err(Error::Domain(format!("scheme {id} does not compute ζ(2r+1)")));
            }
            let r = SeriesScheme::new(id, args.r, args.k)?.evaluate(&ctx)?;
            print_record(&r, format, cli.digits, elapsed())
        }
        Command::Verify(args) => verify(args, format, &ctx),
        Command::Bench(args) => bench(args, format, cli, &ctx),
        Command::ListChars(args) => {
            let chars = enumerate_characters(args.q)?;
            let rows: Vec<_> = chars
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let values: Vec<String> =
                        (0..args.q).map(|n| format_complex(&c.value(n).to_complex(&ctx), 6)).collect();
                    (i, c.is_principal(), c.is_even(), c.order(), values)
                })
                .collect();
            match format {
                Format::Json => {
                    let list: Vec<_> = rows
                        .iter()
                        .map(|(i, p, e, o, v)| {
                            json!({"index": i, "principal": p, "parity": if *e { "even" } else { "odd" }, "order": o, "values": v})
                        })
                        .collect();
                    println!("{}", json!({"q": args.q, "characters": list}));
                }
                _ => {
                    for (i, p, e, o, v) in &rows {
                        let kind = if *p { "principal" } else if *e { "even" } else { "odd" };
                        println!("{i}\t{kind}\torder {o}\t{}", v.join(" "));
                    }
                }
            }
            Ok(Outcome::Ok)
        }
    }
}

fn character(args: &CharArgs) -> Result<Option<zetalab::dirichlet::DirichletCharacter>, Error> {
    match (args.q, args.char_index) {
        (None, None) => Ok(None),
        (Some(q), Some(i)) => {
            let chars = enumerate_characters(q)?;
            let n = chars.len();
            chars
                .into_iter()
                .nth(i)
                .map(Some)
                .ok_or_else(|| Error::Domain(format!("modulus {q} has {n} characters, index {i} out of range")))
        }
        _ => Err(Error::Domain("--q and --char-index go together".into())),
    }
}

fn print_record(r: &SeriesResult, format: Format, digits: u32, elapsed_ms: Option<u128>) -> Result<Outcome, Error> {
    let value = format_complex(&r.value, digits);
    match format {
        Format::Plain => println!("{value}"),
        Format::Csv => {
            println!("value,error_estimate,terms_used,termination");
            println!("{value},{},{},{}", format_sci(&r.error_estimate, 3), r.terms_used, r.termination.as_str());
        }
        Format::Json => {
            let rec = OutputRecord {
                command: echo(),
                value,
                error_estimate: format_sci(&r.error_estimate, 3),
                terms_used: r.terms_used,
                termination: r.termination.as_str(),
                elapsed_ms,
                precision_digits: digits,
            };
            println!("{}", serde_json::to_string(&rec).expect("record serializes"));
        }
    }
    Ok(Outcome::Ok)
}

fn verify(args: &VerifyArgs, format: Format, ctx: &PrecisionContext) -> Result<Outcome, Error> {
    if args.list {
        for info in list_identities() {
            match format {
                Format::Json => println!("{}", serde_json::to_string(info).expect("info serializes")),
                _ => println!("{}\t{}\t{}", info.id, info.aliases.join(","), info.summary),
            }
        }
        return Ok(Outcome::Ok);
    }
    let id = args.identity.as_deref().unwrap_or_default();
    let params = IdentityParams {
        r: args.r,
        m: args.m,
        s: args.s.as_deref().map(|s| parse_complex(s, ctx)).transpose()?,
        a: args.a.as_deref().map(parse_rational).transpose()?,
        q: args.chi.q,
        char_index: args.chi.char_index,
    };
    let report = verify_identity(id, &params, args.grid, args.terms, ctx)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string(&report).expect("report serializes")),
        Format::Plain | Format::Csv => {
            println!("u,residual");
            for (u, res) in report.grid.iter().zip(&report.residuals) {
                println!("{u},{}", format_sci(res, 6));
            }
            println!(
                "# {} N={} tail_bound={} multiplier={} verdict={}",
                report.identity_id,
                report.n_terms,
                format_sci(&report.tail_bound, 6),
                report.multiplier,
                if report.passed() { "pass" } else { "fail" }
            );
        }
    }
    Ok(if report.passed() { Outcome::Ok } else { Outcome::Failed })
}

fn bench(args: &BenchArgs, format: Format, cli: &Cli, ctx: &PrecisionContext) -> Result<Outcome, Error> {
    let id: SchemeId = args.scheme.parse()?;
    let scheme = SeriesScheme::new(id, args.r, args.max_terms)?;
    let rows = term_table(&scheme, ctx)?;
    let profile = convergence_profile(&scheme, ctx)?;
    let csv = match args.format {
        Some(BenchFormat::Csv) => true,
        Some(BenchFormat::Json) => false,
        None => format == Format::Csv,
    };
    let k0 = profile.k_start;
    let mag = |t: &Float| format_sci(&Float::with_val(t.prec(), t.abs_ref()), 6);
    if csv {
        println!("k,term_magnitude,cumulative_value");
        for row in &rows[k0..] {
            println!("{},{},{}", row.k, mag(&row.term), format_sci(&row.cumulative, cli.digits));
        }
    } else {
        let terms: Vec<_> = rows[k0..]
            .iter()
            .map(|row| json!({"k": row.k, "term_magnitude": mag(&row.term), "cumulative_value": format_sci(&row.cumulative, cli.digits)}))
            .collect();
        let out = json!({
            "command": echo(),
            "scheme": id.name(),
            "r": args.r,
            "max_terms": args.max_terms,
            "precision_digits": cli.digits,
            "terms": terms,
            "fit": {
                "k_start": k0,
                "slope": profile.fitted_slope.to_f64(),
                "expected_slope": profile.expected_slope(),
                "k_exponent": profile.fitted_k_exponent.to_f64(),
                "expected_k_exponent": profile.expected_k_exponent(),
                "intercept": profile.intercept.to_f64(),
            },
        });
        println!("{out}");
    }
    Ok(Outcome::Ok)
}
