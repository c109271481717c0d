use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use indexlab_cli::compare::{compare, Side};
use indexlab_cli::render;
use indexlab_cli::witness::search_witness;
use indexlab_core::arith::integer::is_prime;
use indexlab_core::arith::IntPoly;
use indexlab_core::families::{param_grid, verify_family, Family};
use indexlab_core::invariants::{full_report_with, SearchConfig};
use indexlab_core::nf::build_field;
use indexlab_core::Error;
use serde_json::json;

const EXIT_DISCREPANCY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INVALID_FIELD: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(name = "indexlab", version, about = "Common index divisors and fixed divisors of number fields")]
struct Cli {
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Deepest refinement level for the index search; overrides INDEXLAB_CAP.
    #[arg(long, global = true)]
    cap: Option<u32>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// I(K), i(K) and a witness element for the field of a monic polynomial.
    Invariants {
        poly: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Primes to show splitting data for (default: all p <= degree).
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
    },
    /// Compare a family's predicted invariants with exact values.
    Verify {
        family: String,
        /// Inclusive parameter range A..B.
        #[arg(long, allow_hyphen_values = true)]
        range: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find a field of the given degree where p divides i(K).
    #[command(name = "search-t1")]
    SearchT1 {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
    },
    /// Splitting of p and local indices in two fields.
    Compare {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
        #[arg(long)]
        prime: u64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::UnknownFamily(_)
            | Error::InvalidPrime(_)
            | Error::InvalidInput(_)
            | Error::NotApplicable(_) => EXIT_USAGE,
            Error::InvalidDegree(_)
            | Error::DegreeOutOfScope(_)
            | Error::NotMonic
            | Error::ReduciblePolynomial
            | Error::NotAField(_) => EXIT_INVALID_FIELD,
            _ => EXIT_DISCREPANCY,
        };
        Failure::new(code, e.to_string())
    }
}

fn parse_poly(s: &str) -> Result<IntPoly, Failure> {
    s.parse::<IntPoly>().map_err(Failure::from)
}

fn parse_range(s: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::new(EXIT_USAGE, format!("bad range `{s}`, expected A..B"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = a.trim().parse().map_err(|_| bad())?;
    let hi: i64 = b.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::new(EXIT_DISCREPANCY, format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn side_json(s: &Side) -> serde_json::Value {
    json!({
        "poly": s.poly.to_string(),
        "splitting": s.splitting.to_string(),
        "v_p(I_K)": s.index,
        "v_p(i_K)": s.fixed,
    })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
    }
    let config = match cli.cap {
        Some(c) => SearchConfig { index_cap: Some(c) },
        None => SearchConfig::from_env()?,
    };
    match cli.cmd {
        Command::Invariants { poly, format, primes } => {
            let f = parse_poly(&poly)?;
            let field = build_field(&f)?;
            let primes = match primes {
                Some(ps) => {
                    if let Some(&q) = ps.iter().find(|&&q| !is_prime(q)) {
                        return Err(Error::InvalidPrime(q).into());
                    }
                    ps
                }
                None => (2..=field.degree() as u64).filter(|&q| is_prime(q)).collect(),
            };
            let splittings = primes
                .iter()
                .map(|&q| field.split_prime(q).map(|t| (q, t)))
                .collect::<Result<Vec<_>, _>>()?;
            let report = full_report_with(&field, &config)?;
            let text = match format {
                Format::Json => render::to_text(&render::invariants_json(&report, &splittings)),
                Format::Tsv => render::invariants_tsv(&report, &splittings),
            };
            emit(&text, None)?;
            Ok(0)
        }
        Command::Verify { family, range, format, out } => {
            let family: Family = family.parse()?;
            let (lo, hi) = parse_range(&range)?;
            let report = verify_family(family, &param_grid(family, lo, hi), &config);
            let text = match format {
                Format::Json => render::to_text(&render::verification_json(&report)),
                Format::Tsv => render::verification_tsv(&report),
            };
            emit(&text, out.as_ref())?;
            eprintln!(
                "{}: {} points, {} applicable, {} passed",
                family,
                report.rows.len(),
                report.applicable(),
                report.passed()
            );
            Ok(if report.is_success() { 0 } else { EXIT_DISCREPANCY })
        }
        Command::SearchT1 { degree, prime, seed, budget } => {
            match search_witness(degree, prime, seed, budget, &config)? {
                Some(hit) => {
                    let v = json!({
                        "degree": degree,
                        "prime": prime,
                        "poly": hit.poly.to_string(),
                        "tries": hit.tries,
                        "method": hit.method.name(),
                        "report": render::invariants_json(&hit.report, &[]),
                    });
                    emit(&render::to_text(&v), None)?;
                    Ok(0)
                }
                None => Err(Failure::new(
                    EXIT_BUDGET,
                    format!("no field of degree {degree} with {prime} | i(K) within {budget} tries"),
                )),
            }
        }
        Command::Compare { first, second, prime } => {
            if !is_prime(prime) {
                return Err(Error::InvalidPrime(prime).into());
            }
            let (f, g) = (parse_poly(&first)?, parse_poly(&second)?);
            let c = compare(&f, &g, prime, &config)?;
            let v = json!({
                "prime": prime,
                "first": side_json(&c.left),
                "second": side_json(&c.right),
                "same_splitting": c.same_splitting(),
                "same_splitting_different_index": c.same_splitting_different_index(),
            });
            emit(&render::to_text(&v), None)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
