//! Command-line front end: run-class classification, count tables,
//! verification suites, and the divisor-subset search.
//!
//! Exit codes: 0 success, 1 usage or malformed input, 2 domain rejection,
//! 3 verification failure.

use std::collections::BTreeSet;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, CommandFactory, Parser, Subcommand};
use serde_json::json;

use runsym::cyclotomic::{classify_reciprocal, search_zero_one_products, CycloError, RunClassSpec};
use runsym::oracle::{count_perms_restricted, RunPredicate, PERM_ENUM_CAP};
use runsym::parse::parse_coefficient_list;
use runsym::series::{Convention, TruncatedSeries};
use runsym::verify::{run_suite, Suite, SuiteOptions};

const EXIT_USAGE: u8 = 1;
const EXIT_REJECTED: u8 = 2;
const EXIT_VERIFY_FAILED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "runsym",
    about = "Exact enumeration of permutations and words with run lengths in congruence classes",
    long_about = None,
    version,
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy, Default)]
struct OutputFormat {
    /// Emit JSON (one object per line for streams).
    #[arg(long, conflicts_with = "tsv")]
    json: bool,
    /// Emit tab-separated values.
    #[arg(long)]
    tsv: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether every reciprocal coefficient of a(x) is 0 or 1 and
    /// report the period and residue set.
    Classify {
        /// Integer coefficients of a(x), lowest degree first, separated by
        /// commas or spaces (constant term must be 1).
        coeffs: String,
        #[command(flatten)]
        format: OutputFormat,
    },
    /// Print the table of counts of permutations whose run lengths are
    /// congruent to 0, b, .., (r-1)b modulo m*r*b.
    Table {
        /// Number of blocks in the defining polynomial.
        #[arg(long, requires = "r")]
        m: Option<usize>,
        /// Residue-class count.
        #[arg(long, requires = "m")]
        r: Option<usize>,
        /// Spacing multiplier.
        #[arg(long, default_value_t = 1)]
        b: usize,
        /// Read a classified run-class JSON file instead ("-" for stdin).
        #[arg(long, value_name = "FILE", conflicts_with_all = ["m", "r", "b"])]
        from_spec: Option<PathBuf>,
        /// Largest n to print (at most 200).
        #[arg(long, default_value_t = 13)]
        nmax: usize,
        /// Cross-check rows against the brute-force permutation oracle.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        format: OutputFormat,
    },
    /// Run a verification suite and stream one report per claim.
    Verify {
        /// One of: paper-examples, run-theorem, oracles, periodicity, all.
        #[arg(long)]
        suite: String,
        /// Include wall-clock timings (off by default so output is
        /// byte-identical across runs).
        #[arg(long)]
        timings: bool,
        /// Cap the oracle-backed sizes.
        #[arg(long)]
        max_n: Option<usize>,
        /// Cap the ribbon-support truncation degree.
        #[arg(long)]
        max_degree: Option<usize>,
        #[command(flatten)]
        format: OutputFormat,
    },
    /// Enumerate all run classes of a given period from divisor subsets.
    Search {
        /// Period m; every subset of its divisors is tried.
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        format: OutputFormat,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprint!("{e}");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(e) => {
            // --help and --version land here
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match cli.command {
        Command::Classify { coeffs, format } => cmd_classify(&coeffs, format),
        Command::Table { m, r, b, from_spec, nmax, verify, format } => {
            cmd_table(m, r, b, from_spec, nmax, verify, format)
        }
        Command::Verify { suite, timings, max_n, max_degree, format } => {
            cmd_verify(&suite, timings, max_n, max_degree, format)
        }
        Command::Search { m, format } => cmd_search(m, format),
    }
}

fn usage_error(message: &str) -> ExitCode {
    let mut cmd = Cli::command();
    eprintln!("{}", cmd.render_usage());
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn rejection(reason: String, witness: serde_json::Value, format: OutputFormat) -> ExitCode {
    if format.tsv {
        println!("rejected\t{reason}");
    } else {
        println!("{}", json!({ "rejected": reason, "witness": witness }));
    }
    ExitCode::from(EXIT_REJECTED)
}

fn spec_to_json(spec: &RunClassSpec) -> serde_json::Value {
    serde_json::to_value(spec).expect("run-class serialization cannot fail")
}

fn spec_tsv(spec: &RunClassSpec) -> String {
    format!(
        "{}\t{}\t{}\t{}",
        spec.m,
        join(spec.t.iter()),
        join(spec.n_poly.coeffs().iter()),
        join(spec.a.coeffs().iter()),
    )
}

fn join<T: ToString>(values: impl IntoIterator<Item = T>) -> String {
    values.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn cmd_classify(coeffs: &str, format: OutputFormat) -> ExitCode {
    let poly = match parse_coefficient_list(coeffs) {
        Ok(p) => p,
        Err(e) => return usage_error(&e.to_string()),
    };
    match classify_reciprocal(&poly) {
        Ok(spec) => {
            let prefix = spec.reciprocal_prefix(3 * spec.m);
            if format.tsv {
                println!("{}", spec_tsv(&spec));
                println!("reciprocal\t{}", join(prefix.coeffs().iter()));
            } else {
                println!(
                    "{}",
                    json!({ "spec": spec_to_json(&spec), "reciprocal": prefix.coeff_strings() })
                );
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let witness = match &e {
                CycloError::NotZeroOne(w) => witness_json(w),
                _ => serde_json::Value::Null,
            };
            rejection(e.to_string(), witness, format)
        }
    }
}

fn witness_json(witness: &runsym::cyclotomic::RejectionWitness) -> serde_json::Value {
    use runsym::cyclotomic::RejectionWitness as W;
    match witness {
        W::RepeatedFactor { order } => json!({ "kind": "repeated-factor", "order": order }),
        W::NonCyclotomicFactor { remainder } => {
            json!({ "kind": "non-cyclotomic-factor", "remainder": remainder.coeff_strings() })
        }
        W::CoefficientOutOfRange { index, value } => {
            json!({ "kind": "coefficient", "index": index, "value": value.to_string() })
        }
    }
}

fn cmd_table(
    m: Option<usize>,
    r: Option<usize>,
    b: usize,
    from_spec: Option<PathBuf>,
    nmax: usize,
    verify: bool,
    format: OutputFormat,
) -> ExitCode {
    if nmax > 200 {
        return usage_error("nmax is capped at 200");
    }
    // the polynomial whose EGF reciprocal is tabulated, plus the predicate
    // for oracle rows
    let (a, pred) = match (&from_spec, m, r) {
        (Some(path), None, None) => {
            let text = match read_input(path) {
                Ok(t) => t,
                Err(e) => return usage_error(&e),
            };
            let spec = match parse_spec_input(&text) {
                Ok(s) => s,
                Err(e) => return usage_error(&format!("invalid run-class JSON: {e}")),
            };
            if let Err(e) = spec.validate() {
                return usage_error(&format!("inconsistent run-class JSON: {e}"));
            }
            let pred = RunPredicate::from_spec(&spec);
            (spec.a, pred)
        }
        (None, Some(m), Some(r)) => {
            if m < 1 || r < 1 || b < 1 {
                return usage_error("m, r, b must be positive");
            }
            let residues: BTreeSet<usize> = (0..r).map(|k| k * b).collect();
            (runsym::cyclotomic::construct_a(m, r, b), RunPredicate::residue(m * r * b, residues))
        }
        _ => return usage_error("pass either --m and --r (with optional --b) or --from-spec"),
    };
    let egf = TruncatedSeries::from_polynomial(Convention::Egf, &a, nmax);
    let u = match egf.egf_inverse() {
        Ok(u) => u,
        Err(e) => return usage_error(&format!("cannot invert: {e}")),
    };

    let mut all_ok = true;
    for n in 0..=nmax {
        let value = u.coeff(n);
        let oracle = (verify && n <= PERM_ENUM_CAP.min(9))
            .then(|| count_perms_restricted(n, &pred).expect("n is within the enumeration cap"));
        let ok = oracle.as_ref().map(|o| *o == value);
        all_ok &= ok.unwrap_or(true);
        if format.json {
            let mut row = json!({ "n": n, "u": value.to_string() });
            if let Some(o) = &oracle {
                row["oracle"] = json!(o.to_string());
                row["ok"] = json!(ok.unwrap());
            }
            println!("{row}");
        } else {
            match &oracle {
                Some(o) => println!(
                    "{n}\t{value}\t{o}\t{}",
                    if ok.unwrap() { "ok" } else { "MISMATCH" }
                ),
                None => println!("{n}\t{value}"),
            }
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY_FAILED)
    }
}

/// Accepts either a bare run-class JSON object or the `classify` output
/// envelope `{"spec": .., "reciprocal": ..}`, so classify can be piped in.
fn parse_spec_input(text: &str) -> Result<RunClassSpec, serde_json::Error> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let spec_value = match value.get("spec") {
        Some(inner) => inner.clone(),
        None => value,
    };
    serde_json::from_value(spec_value)
}

fn read_input(path: &PathBuf) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
    }
}

fn cmd_verify(
    suite: &str,
    timings: bool,
    max_n: Option<usize>,
    max_degree: Option<usize>,
    format: OutputFormat,
) -> ExitCode {
    let Some(suite) = Suite::from_name(suite) else {
        return usage_error(&format!(
            "unknown suite {suite:?}; expected one of {}",
            Suite::NAMES.join(", ")
        ));
    };
    let reports = run_suite(suite, &SuiteOptions { max_n, max_degree });
    let mut all_pass = true;
    for report in &reports {
        all_pass &= report.pass;
        if format.tsv {
            println!("{}", report.tsv_line(timings));
        } else {
            println!("{}", report.to_json(timings));
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY_FAILED)
    }
}

fn cmd_search(m: usize, format: OutputFormat) -> ExitCode {
    if m < 1 {
        return usage_error("period m must be positive");
    }
    match search_zero_one_products(m) {
        Ok(specs) => {
            for spec in &specs {
                if format.tsv {
                    println!("{}", spec_tsv(spec));
                } else {
                    println!("{}", spec_to_json(spec));
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => rejection(e.to_string(), serde_json::Value::Null, format),
    }
}
