//! `mbar`: compute divisor classes on M̄_{g,n}, pull them back, pair them
//! with test curves, evaluate counting formulas and run the identity suite.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
//! parameter errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mbar::catalog::{build, ClassParams, SpinParity, CLASS_NAMES};
use mbar::enumerative::{
    count_distinct_nonzero_roots, de_jonquieres, de_jonquieres_unlabelled, picard_degree, plucker,
    residue_polynomial,
};
use mbar::io::{format_rational, to_csv, to_json_value, to_latex, to_unicode};
use mbar::maps::{parse_map_kind, pullback, GluingMap};
use mbar::verify::{relations, run_suite, SuiteOptions};
use mbar::{builtin_test_curve, DivisorClass};

#[derive(Parser)]
#[command(name = "mbar", version, about = "Exact divisor-class calculus on the moduli space of pointed curves")]
struct Cli {
    /// Write the output to this file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a catalog class.
    Class {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Pull a catalog class back along one or more maps, applied in order.
    Pullback {
        #[command(flatten)]
        class: ClassArgs,
        /// Map descriptor, e.g. glue-tail:h=1,j=0,at=1. Repeat to compose.
        #[arg(long = "map", required = true, value_name = "SPEC")]
        maps: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Intersect a catalog class with a built-in test curve.
    Pair {
        #[command(flatten)]
        class: ClassArgs,
        /// A, B_i, C_i, D, E or B_{i,n} (alias Bin).
        #[arg(long)]
        curve: String,
        #[arg(long)]
        i: Option<u32>,
        /// Number of points on the fixed side, for B_{i,n}.
        #[arg(long)]
        n: Option<u32>,
    },
    /// de Jonquières count; unlabelled unless --ordered.
    Dj {
        #[arg(long)]
        g: u32,
        /// Zero multiplicities, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        kappa: Vec<u32>,
        /// Count zeros of equal multiplicity as distinguishable.
        #[arg(long)]
        ordered: bool,
    },
    /// Simple ramification points of a general g^r_d.
    Plucker {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        g: i64,
    },
    /// Degree of the weighted Abel map into the Picard variety.
    Picdeg {
        #[arg(long)]
        g: u32,
        /// One nonzero weight per point, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
    },
    /// Residue polynomial coefficients, constant term first.
    Residue {
        #[arg(long)]
        j: i64,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        m: i64,
        /// Also print the number of distinct nonzero roots.
        #[arg(long)]
        roots: bool,
    },
    /// Run the identity suite.
    Verify {
        /// `all` or a relation name.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 8)]
        gmax: u32,
        /// Emit the machine-readable report.
        #[arg(long)]
        json: bool,
        /// List every instance, not only failures.
        #[arg(long)]
        verbose: bool,
    },
    /// List catalog class names and registered relations.
    List,
}

#[derive(Args)]
struct ClassArgs {
    /// Catalog class name.
    #[arg(long)]
    name: String,
    #[arg(long)]
    g: u32,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    h: Option<u32>,
    /// Weights, comma separated; negative entries allowed (--d -2,1,1).
    #[arg(long, allow_hyphen_values = true)]
    d: Option<String>,
    #[arg(long, value_parser = ["odd", "even", "total"])]
    parity: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<mbar::Error> for Failure {
    fn from(e: mbar::Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn parse_list(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| usage(format!("not an integer list: {s:?}"))))
        .collect()
}

impl ClassArgs {
    fn build(&self) -> Result<DivisorClass, Failure> {
        let parity = match &self.parity {
            None => None,
            Some(p) => Some(p.parse::<SpinParity>()?),
        };
        let d = self.d.as_deref().map(parse_list).transpose()?;
        let params = ClassParams { g: self.g, k: self.k, h: self.h, d, parity };
        Ok(build(&self.name, &params)?)
    }
}

/// JSON with object keys sorted, so output bytes depend only on the data.
fn sorted_json(v: &impl serde::Serialize) -> String {
    let value = serde_json::to_value(v).expect("plain data serializes");
    serde_json::to_string_pretty(&value).expect("plain data serializes")
}

fn render(a: &DivisorClass, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Json => sorted_json(&to_json_value(a)),
        Format::Csv => to_csv(a)?.trim_end().to_string(),
        Format::Latex => to_latex(a),
        Format::Text => to_unicode(a),
    })
}

/// Runs a command, returning its output and whether it succeeded.
fn run(command: &Command) -> Result<(String, bool), Failure> {
    let out = match command {
        Command::Class { class, format } => render(&class.build()?, *format)?,
        Command::Pullback { class, maps, format } => {
            let mut a = class.build()?;
            for spec in maps {
                let m = GluingMap::into_codomain(parse_map_kind(spec)?, a.base())?;
                a = pullback(&m, &a)?;
            }
            render(&a, *format)?
        }
        Command::Pair { class, curve, i, n } => {
            let a = class.build()?;
            let params: Vec<u32> = i.iter().chain(n.iter()).copied().collect();
            let t = builtin_test_curve(curve, a.base(), &params)?;
            format_rational(&mbar::pair(&t, &a)?)
        }
        Command::Dj { g, kappa, ordered } => {
            let count = if *ordered { de_jonquieres(*g, kappa)? } else { de_jonquieres_unlabelled(*g, kappa)? };
            format_rational(&count)
        }
        Command::Plucker { r, d, g } => plucker(*r, *d, *g).to_string(),
        Command::Picdeg { g, weights } => picard_degree(&parse_list(weights)?, *g)?.to_string(),
        Command::Residue { j, k, m, roots } => {
            let p = residue_polynomial(*j, *k, *m)?;
            let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
            let mut s = format!("[{}]", coeffs.join(", "));
            if *roots {
                s += &format!("\n{}", count_distinct_nonzero_roots(&p)?);
            }
            s
        }
        Command::Verify { suite, gmax, json, verbose } => {
            let only = (suite != "all").then(|| suite.clone());
            let report = run_suite(&SuiteOptions { only, ..SuiteOptions::new(*gmax) })?;
            let ok = report.all_pass();
            let text = if *json {
                sorted_json(&report)
            } else if *verbose {
                report.to_string()
            } else {
                summary(&report)
            };
            return Ok((text, ok));
        }
        Command::List => {
            let mut s = String::from("classes:\n");
            for name in CLASS_NAMES {
                s += &format!("  {name}\n");
            }
            s += "relations:\n";
            for r in relations() {
                s += &format!("  {:<4} {}\n", r.name, r.summary);
            }
            s.trim_end().to_string()
        }
    };
    Ok((out, true))
}

/// One line per relation, then every failing instance.
fn summary(report: &mbar::verify::Report) -> String {
    let mut lines = Vec::new();
    for r in relations() {
        let total = report.count(r.name);
        if total == 0 {
            continue;
        }
        let passed = report.entries.iter().filter(|e| e.relation == r.name && e.pass).count();
        let status = if passed == total { "PASS" } else { "FAIL" };
        lines.push(format!("{status} {:<4} {passed}/{total}", r.name));
    }
    lines.extend(report.failures().map(|e| e.to_string()));
    let passed = report.entries.iter().filter(|e| e.pass).count();
    lines.push(format!("{passed}/{} passed", report.entries.len()));
    lines.join("\n")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, ok) = match run(&cli.command) {
        Ok(r) => r,
        Err(f) => {
            eprintln!("error: {}", f.message);
            return ExitCode::from(f.code);
        }
    };
    let text = text + "\n";
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
