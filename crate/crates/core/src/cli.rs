//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error (bad arguments or literal syntax),
//! 2 data error (well-formed input the mathematics rejects, or a bad dataset).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::cfrac::CfExpansion;
use crate::error::Error;
use crate::functor::{lemma2_classify, real_multiplication_theta, CmOrder, OrderForm};
use crate::harness::{conjecture_report, j_invariant_lambda, load_dataset, report_to_json, report_to_tsv, JConstant};
use crate::literal::{parse_number, parse_rational, GRAMMAR};
use crate::mat::Mat2Z;
use crate::nctorus::{K0Class, NcTorus};
use crate::surd::{Number, QuadSurd};

#[derive(Parser, Debug)]
#[command(
    name = "cmtorus",
    version,
    about = "Exact noncommutative-torus invariants of CM elliptic curves"
)]
#[command(args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Continued fraction `[a0; a1, ..., (b1, ..., bp)]`
    Cf {
        #[arg(allow_hyphen_values = true)]
        number: String,
    },
    /// Length of the minimal period
    Complexity {
        #[arg(allow_hyphen_values = true)]
        surd: String,
    },
    /// GL(2,Z)-equivalence (stable isomorphism of the tori)
    Equiv {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// Is p + theta*q in the positive cone?
    K0 {
        #[arg(allow_hyphen_values = true)]
        surd: String,
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// (c + d*theta)/(a + b*theta)
    Mobius {
        #[arg(allow_hyphen_values = true)]
        surd: String,
        #[arg(allow_hyphen_values = true, num_args = 4, value_names = ["A", "B", "C", "D"])]
        matrix: Vec<String>,
    },
    /// Classify an integer matrix acting on a rank-2 module
    Lemma2 {
        #[arg(allow_hyphen_values = true, num_args = 4, value_names = ["A", "B", "C", "D"])]
        matrix: Vec<String>,
    },
    /// Real-multiplication theta of the order Z[sqrt(-d)] (or Z[(1+sqrt(-d))/2] with --half)
    CmTheta {
        d: String,
        #[arg(long)]
        half: bool,
    },
    /// j-invariant of the Legendre curve y^2 = x(x-1)(x-lambda)
    Jlambda {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        /// Use the leading constant 2^6 instead of 2^8
        #[arg(long)]
        paper_constant: bool,
    },
    /// Complexity-versus-rank table for a dataset
    Report {
        dataset: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Minimal period divided by its first entry
    NormalizedPeriod {
        #[arg(allow_hyphen_values = true)]
        surd: String,
        /// Keep the period as produced by the expansion instead of its least rotation
        #[arg(long)]
        no_canonicalize: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

enum Failure {
    Usage(String),
    Data(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Data(e.to_string()),
        }
    }
}

type CliResult = std::result::Result<String, Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    let _ = writeln!(err, "number grammar: {GRAMMAR}");
                    1
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = writeln!(err, "number grammar: {GRAMMAR}");
            1
        }
        Err(Failure::Data(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn integer(text: &str) -> Result<BigInt, Failure> {
    text.trim()
        .parse::<BigInt>()
        .map_err(|_| Failure::Usage(format!("expected an integer, got `{text}`")))
}

fn matrix(entries: &[String]) -> Result<Mat2Z<BigInt>, Failure> {
    let v = entries.iter().map(|e| integer(e)).collect::<Result<Vec<_>, _>>()?;
    let [a, b, c, d]: [BigInt; 4] = v
        .try_into()
        .map_err(|_| Failure::Usage("expected four matrix entries".into()))?;
    Ok(Mat2Z::new(a, b, c, d))
}

fn torus(text: &str) -> Result<NcTorus<BigInt>, Failure> {
    Ok(NcTorus::new(parse_number(text)?)?)
}

fn surd(text: &str) -> Result<QuadSurd<BigInt>, Failure> {
    Ok(torus(text)?.theta().clone())
}

fn execute(command: Command) -> CliResult {
    let text = match command {
        Command::Cf { number } => match parse_number::<BigInt>(&number)? {
            Number::Surd(s) => CfExpansion::of_surd(&s).to_string(),
            Number::Rational(r) => CfExpansion::of_rational(&r).to_string(),
        },
        Command::Complexity { surd } => torus(&surd)?.arithmetic_complexity().to_string(),
        Command::Equiv { first, second } => torus(&first)?.stably_isomorphic(&torus(&second)?).to_string(),
        Command::K0 { surd, p, q } => torus(&surd)?
            .k0_positive(&K0Class::new(integer(&p)?, integer(&q)?))
            .to_string(),
        Command::Mobius { surd: s, matrix: m } => surd(&s)?.mobius(&matrix(&m)?)?.to_string(),
        Command::Lemma2 { matrix: m } => lemma2_classify(&matrix(&m)?).to_string(),
        Command::CmTheta { d, half } => {
            let form = if half { OrderForm::Half } else { OrderForm::Sqrt };
            let rm = real_multiplication_theta(&CmOrder::new(integer(&d)?, form)?)?;
            format!("theta={} k={} generator={}", rm.theta, rm.k, rm.generator)
        }
        Command::Jlambda { lambda, paper_constant } => {
            let c = if paper_constant {
                JConstant::Alternative64
            } else {
                JConstant::Standard256
            };
            j_invariant_lambda(&parse_rational::<BigInt>(&lambda)?, c)?.to_string()
        }
        Command::Report { dataset, format } => {
            let records = load_dataset(&dataset).map_err(|e| Failure::Data(format!("{}: {e}", dataset.display())))?;
            let rows = conjecture_report(&records);
            return Ok(match format {
                Format::Json => report_to_json(&rows),
                Format::Tsv => report_to_tsv(&rows),
            });
        }
        Command::NormalizedPeriod { surd, no_canonicalize } => {
            let v = torus(&surd)?.normalized_period(!no_canonicalize);
            let items: Vec<String> = v.iter().map(ToString::to_string).collect();
            format!("({})", items.join(", "))
        }
    };
    Ok(text + "\n")
}
