use std::fmt;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use overqt_core::conjectures::{
    scan_prellberg, scan_unimodality, ScanKind, ScanResult, DEFAULT_PRELLBERG_ORDER,
};
use overqt_core::identities::{self, IdentityId, Params};
use overqt_core::involutions::{
    phi5, phi5_verify, phi6_chain, phi6_verify_with, SignedOverpartition, DEFAULT_SAMPLE,
};
use overqt_core::overbinomial::{
    coefficient_table, cross_check_with_limit, ob_coefficient, ob_compute_with_limit,
    DEFAULT_ENUM_LIMIT,
};
use overqt_core::{Error, Method, Overpartition};

#[derive(Parser)]
#[command(
    name = "overqt",
    version,
    about = "Exact over-(q,t)-binomial coefficients"
)]
struct Cli {
    /// Ceiling on m*n for the brute-force methods.
    #[arg(long, global = true, env = "OVERQT_ENUM_CELLS", default_value_t = DEFAULT_ENUM_LIMIT)]
    enum_cells: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print B(M, N).
    Compute {
        m: usize,
        n: usize,
        #[arg(long, default_value = "pascal1")]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Coefficient of t^K q^W in B(M, N).
    Coefficient { m: usize, n: usize, k: u32, w: i64 },
    /// Check one identity instance exactly.
    Verify {
        identity: IdentityId,
        #[command(flatten)]
        params: VerifyParams,
        #[arg(long)]
        json: bool,
    },
    #[command(subcommand)]
    Involution(Involution),
    /// Scan a unimodality or positivity statement up to a bound.
    Scan {
        #[arg(value_parser = parse_scan)]
        kind: ScanKind,
        #[arg(long = "max")]
        max: usize,
        #[arg(long)]
        trunc: Option<usize>,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Compare all methods on a grid.
    Crosscheck {
        #[arg(long, default_value_t = 6)]
        max_m: usize,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Coefficient table of B(M, N) by powers of q.
    Table {
        m: usize,
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum Involution {
    /// Sign-reversing involution on O_n.
    Phi5 {
        #[arg(long)]
        n: usize,
        /// Apply the map to one element, e.g. "5,5~,3,2,0".
        #[arg(long)]
        trace: Option<String>,
    },
    /// Log-concavity injection.
    Phi6 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLE)]
        sample: usize,
        /// With --mu, print every step of the map on this pair.
        #[arg(long, requires = "mu", allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, requires = "lambda", allow_hyphen_values = true)]
        mu: Option<String>,
    },
}

#[derive(Args)]
struct VerifyParams {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    h: Option<usize>,
    #[arg(long)]
    trunc: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Latex,
    Csv,
}

/// Writes to stdout; a closed pipe ends the process quietly.
fn write_out(args: fmt::Arguments<'_>) {
    if let Err(e) = io::stdout().lock().write_fmt(args) {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {e}");
    }
}

macro_rules! outln {
    ($($arg:tt)*) => {
        write_out(format_args!("{}\n", format_args!($($arg)*)))
    };
}

fn parse_scan(s: &str) -> Result<ScanKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable report")
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

#[derive(Serialize)]
struct ChainStep {
    step: &'static str,
    lambda: String,
    mu: String,
}

#[derive(Serialize)]
struct Chain {
    n: usize,
    k: usize,
    l: usize,
    steps: Vec<ChainStep>,
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let limit = cli.enum_cells;
    match cli.command {
        Command::Compute {
            m,
            n,
            method,
            format,
        } => {
            let b = ob_compute_with_limit(m, n, method, limit)?;
            match format {
                Format::Plain => outln!("{b}"),
                Format::Json => outln!("{}", serde_json::to_string(&b).expect("json")),
                Format::Latex => outln!("{}", b.to_latex()),
                Format::Csv => {
                    outln!("q,t,u,c");
                    for (mono, c) in b.terms() {
                        outln!("{},{},{},{c}", mono.q, mono.t, mono.u);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Coefficient { m, n, k, w } => {
            outln!("{}", ob_coefficient(m, n, k, w));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            identity,
            params,
            json: as_json,
        } => {
            let p = Params {
                n: params.n,
                m: params.m,
                k: params.k,
                l: params.l,
                r: params.r,
                h: params.h,
                trunc: params.trunc,
            };
            let report = identities::verify(identity, &p)?;
            if as_json {
                outln!("{}", json(&report));
            } else if report.verified() {
                outln!(
                    "{identity}: verified, both sides = {}",
                    report.value.as_deref().unwrap_or("")
                );
            } else {
                outln!(
                    "{identity}: FAILED, {}",
                    report.witness.as_deref().unwrap_or("no witness")
                );
            }
            Ok(status(report.verified()))
        }
        Command::Involution(Involution::Phi5 { n, trace }) => match trace {
            Some(s) => {
                let x = SignedOverpartition::parse(&s, n)?;
                outln!("{}", json(&phi5(&x)?));
                Ok(ExitCode::SUCCESS)
            }
            None => {
                let report = phi5_verify(n);
                outln!("{}", json(&report));
                Ok(status(report.pass()))
            }
        },
        Command::Involution(Involution::Phi6 {
            n,
            k,
            l,
            seed,
            sample,
            lambda,
            mu,
        }) => {
            if let (Some(a), Some(b)) = (lambda, mu) {
                let pair = (a.parse::<Overpartition>()?, b.parse::<Overpartition>()?);
                let steps = phi6_chain(&pair, k, l)?
                    .into_iter()
                    .map(|(step, (x, y))| ChainStep {
                        step,
                        lambda: x.to_string(),
                        mu: y.to_string(),
                    })
                    .collect();
                outln!("{}", json(&Chain { n, k, l, steps }));
                return Ok(ExitCode::SUCCESS);
            }
            let report = phi6_verify_with(n, k, l, sample, seed)?;
            outln!("{}", json(&report));
            Ok(status(report.pass()))
        }
        Command::Scan {
            kind,
            max,
            trunc,
            json: as_json,
            csv,
        } => {
            let results: Vec<ScanResult> = if kind == ScanKind::Prellberg {
                scan_prellberg(max, trunc.unwrap_or(DEFAULT_PRELLBERG_ORDER))
            } else {
                scan_unimodality(kind, max)?
            };
            if as_json {
                outln!("{}", json(&results));
            } else if csv {
                outln!("{}", ScanResult::csv_header());
                for r in &results {
                    outln!("{}", r.to_csv());
                }
            } else {
                for r in &results {
                    let verdict = if r.holds { "holds" } else { "VIOLATED" };
                    outln!(
                        "{} {}: {verdict}; {}",
                        r.conjecture_id,
                        r.parameter,
                        r.detail
                    );
                }
            }
            Ok(status(results.iter().all(|r| r.holds)))
        }
        Command::Crosscheck {
            max_m,
            max_n,
            json: as_json,
        } => {
            let report = cross_check_with_limit(max_m, max_n, limit);
            if as_json {
                outln!("{}", json(&report));
            } else if report.pass {
                outln!("crosscheck {max_m}x{max_n}: pass ({} cells)", report.cells);
            } else {
                outln!(
                    "crosscheck {max_m}x{max_n}: FAILED, {}",
                    report.witness.as_deref().unwrap_or("no witness")
                );
            }
            Ok(status(report.pass))
        }
        Command::Table { m, n, format } => {
            let table = coefficient_table(m, n);
            let out = match format {
                Format::Json => table.to_json(),
                Format::Plain => table.to_plain(),
                Format::Csv => table.to_csv(),
                Format::Latex => table.to_latex(),
            };
            write_out(format_args!("{out}"));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("overqt: {e}");
            match e {
                Error::BadIndices(_)
                | Error::Parse(_)
                | Error::NotInOn(_)
                | Error::MethodTooExpensive { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
