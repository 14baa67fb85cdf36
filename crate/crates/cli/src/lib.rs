//! Command-line front end for `divisorforge`.
//!
//! [`run`] parses an argument vector, runs one subcommand and returns the
//! exit code, the captured output and the structured [`Report`]. Exit codes:
//! 0 on success, 2 for usage errors (bad flags, unparsable polynomials,
//! out-of-range arguments) and 1 when a computation fails.

pub mod parse;
pub mod report;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use divisorforge::arith::is_prime_big;
use divisorforge::density::{
    construct_density, cyclotomic, index_subgroup, splitting_field_degree, subgroup_poly_fixed, DensityTarget,
    DEFAULT_DEGREE_CAP,
};
use divisorforge::factor::factor_rat_over_q;
use divisorforge::intersect::{fix_add, fix_remove, intersect, FixAction, FixKind};
use divisorforge::number_field::{factor_over_nf, NumberField};
use divisorforge::poly::content_primitive;
use divisorforge::sieve::{sieve, splitting_type_census, SieveReport};
use divisorforge::{IntPoly, RatPoly};
use num_bigint::BigUint;

pub use parse::{parse_poly, ParseError};
pub use report::{Certificate, Poly, Report};

/// Default prime bound for `intersect --verify` and `construct-density --verify`.
pub const DEFAULT_VERIFY: u64 = 10_000;

const LISTED_MEMBERS: usize = 50;

#[derive(Debug, Parser)]
#[command(name = "divisorforge", version, about = "Prime divisors of integer polynomials")]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build D with S(D) equal to the common prime divisors of the inputs.
    Intersect {
        #[arg(long = "poly", required = true, value_parser = poly_arg)]
        polys: Vec<RatPoly>,
        /// Check the result against every prime up to this bound.
        #[arg(long, default_value_t = DEFAULT_VERIFY)]
        verify: u64,
    },
    /// List the prime divisors of P up to a bound.
    Sieve {
        #[arg(long, value_parser = poly_arg)]
        poly: RatPoly,
        #[arg(long)]
        limit: u64,
    },
    /// Tally factorization patterns of P modulo primes up to a bound.
    Census {
        #[arg(long, value_parser = poly_arg)]
        poly: RatPoly,
        #[arg(long)]
        limit: u64,
    },
    /// Factor P over the rationals, or over the field defined by --over.
    Factor {
        #[arg(long, value_parser = poly_arg)]
        poly: RatPoly,
        /// Irreducible defining polynomial of the number field.
        #[arg(long, value_parser = poly_arg)]
        over: Option<RatPoly>,
    },
    /// The k-th cyclotomic polynomial.
    Cyclotomic {
        #[arg(long)]
        k: u64,
    },
    /// Gaussian-period polynomial for the index-n subgroup of (Z/pZ)*.
    SubgroupPoly {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        index: u64,
    },
    /// A polynomial whose prime divisors have density m/k.
    ConstructDensity {
        #[arg(long, value_parser = target_arg)]
        target: DensityTarget,
        #[arg(long, default_value_t = DEFAULT_VERIFY)]
        verify: u64,
    },
    /// Degree of the splitting field of a squarefree P.
    SplittingDegree {
        #[arg(long, value_parser = poly_arg)]
        poly: RatPoly,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        cap: usize,
    },
    /// Add or remove a single prime from S(P).
    Fix {
        #[arg(long, value_parser = poly_arg)]
        poly: RatPoly,
        #[arg(long, value_parser = prime_arg)]
        prime: BigUint,
        #[arg(long, value_enum)]
        action: FixArg,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FixArg {
    Add,
    Remove,
}

fn poly_arg(s: &str) -> Result<RatPoly, String> {
    parse_poly(s).map_err(|e| e.annotate(s))
}

fn target_arg(s: &str) -> Result<DensityTarget, String> {
    s.parse().map_err(|e: divisorforge::Error| e.to_string())
}

fn prime_arg(s: &str) -> Result<BigUint, String> {
    let n: BigUint = s.trim().parse().map_err(|_| format!("{s:?} is not a nonnegative integer"))?;
    if !is_prime_big(&n) {
        return Err(format!("{n} is not a prime"));
    }
    Ok(n)
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] divisorforge::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use divisorforge::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(E::InvalidArgument(_) | E::InvalidTarget(_) | E::InvalidSubgroup(_) | E::NotPrime(_)) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

/// Result of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub report: Option<Report>,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text, report: None }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new(), report: None }
            };
        }
    };
    let json = cli.json;
    match execute(cli.command) {
        Ok((report, text)) => {
            let stdout = if json {
                serde_json::to_string_pretty(&report).expect("reports serialize") + "\n"
            } else {
                text
            };
            Outcome { code: 0, stdout, stderr: String::new(), report: Some(report) }
        }
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n"), report: None },
    }
}

fn integral(p: &RatPoly, command: &str) -> Result<IntPoly, CliError> {
    p.to_int()
        .ok_or_else(|| CliError::Usage(format!("{command} expects integer coefficients, got {p}")))
}

fn report(command: &str, inputs: &[&RatPoly], results: Vec<Poly>, start: Instant) -> Report {
    Report {
        command: command.to_string(),
        inputs: inputs.iter().map(ToString::to_string).collect(),
        results,
        certificate: None,
        sieve: Vec::new(),
        timing: report::Timing { elapsed_us: start.elapsed().as_micros() as u64 },
    }
}

fn estimate_line(r: &SieveReport) -> String {
    format!(
        "{} members, estimate {:.4} ({}) among {} primes up to {}",
        r.members.len(),
        r.density(),
        r.density_estimate,
        r.prime_count,
        r.bound
    )
}

fn fix_line(f: &FixAction) -> String {
    format!("fix: {} {}", f.action.as_str(), f.prime)
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Runs one subcommand, returning its report and text output.
pub fn execute(command: Command) -> Result<(Report, String), CliError> {
    let start = Instant::now();
    let mut out = String::new();
    let rep = match command {
        Command::Intersect { polys, verify } => {
            let ints = polys.iter().map(|p| integral(p, "intersect")).collect::<Result<Vec<_>, _>>()?;
            let cert = intersect(&ints, verify)?;
            writeln!(out, "D = {}", cert.result).unwrap();
            writeln!(out, "base: {}", cert.base).unwrap();
            if cert.exceptional_primes.is_empty() {
                writeln!(out, "exceptional primes: none").unwrap();
            } else {
                writeln!(out, "exceptional primes: {}", join(&cert.exceptional_primes)).unwrap();
            }
            for f in &cert.fixes {
                writeln!(out, "{}", fix_line(f)).unwrap();
            }
            writeln!(out, "verified exact to {}", cert.verified_bound).unwrap();
            let mut r = report("intersect", &polys.iter().collect::<Vec<_>>(), vec![Poly::from_int(&cert.result)], start);
            r.certificate = Some(Certificate::intersection(&cert));
            r
        }
        Command::Sieve { poly, limit } => {
            let s = sieve(&integral(&poly, "sieve")?, limit)?;
            writeln!(out, "{}", estimate_line(&s)).unwrap();
            let shown = &s.members[..s.members.len().min(LISTED_MEMBERS)];
            let more = if s.members.len() > LISTED_MEMBERS { ", ..." } else { "" };
            writeln!(out, "members: {}{more}", join(shown)).unwrap();
            let mut r = report("sieve", &[&poly], Vec::new(), start);
            r.sieve.push(report::SieveSummary::new(&s, true));
            r
        }
        Command::Census { poly, limit } => {
            let c = splitting_type_census(&integral(&poly, "census")?, limit)?;
            for (degrees, &count) in &c.histogram {
                let pattern = degrees.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
                writeln!(out, "[{pattern}]: {count} ({:.4})", c.frequency(degrees)).unwrap();
            }
            writeln!(out, "tallied {} primes up to {}", c.tallied, c.bound).unwrap();
            if !c.skipped.is_empty() {
                writeln!(out, "skipped: {}", join(&c.skipped)).unwrap();
            }
            let mut r = report("census", &[&poly], Vec::new(), start);
            r.certificate = Some(Certificate::census(&c));
            r
        }
        Command::Factor { poly, over: None } => {
            let f = factor_rat_over_q(&poly)?;
            writeln!(out, "content: {}", f.content).unwrap();
            for (g, m) in &f.factors {
                if *m == 1 {
                    writeln!(out, "{g}").unwrap();
                } else {
                    writeln!(out, "({g})^{m}").unwrap();
                }
            }
            if f.is_irreducible() {
                writeln!(out, "irreducible").unwrap();
            }
            let results = f.factors.iter().map(|(g, _)| Poly::from_int(g)).collect();
            let mut r = report("factor", &[&poly], results, start);
            r.certificate = Some(Certificate::Factorization {
                content: f.content.to_string(),
                factors: f
                    .factors
                    .iter()
                    .map(|(g, m)| report::QFactor { poly: Poly::from_int(g), multiplicity: *m })
                    .collect(),
                irreducible: f.is_irreducible(),
            });
            r
        }
        Command::Factor { poly, over: Some(minpoly) } => {
            let field = NumberField::from_rat(&minpoly)?;
            let (_, b) = content_primitive(&poly)?;
            let factors = factor_over_nf(&b, &field)?;
            writeln!(out, "over Q(a), a a root of {}", field.minpoly()).unwrap();
            for (g, m) in &factors {
                if *m == 1 {
                    writeln!(out, "{g}").unwrap();
                } else {
                    writeln!(out, "({g})^{m}").unwrap();
                }
            }
            let mut r = report("factor", &[&poly, &minpoly], Vec::new(), start);
            r.certificate = Some(Certificate::FieldFactorization {
                field: Poly::from_rat(field.minpoly()),
                factors: factors
                    .iter()
                    .map(|(g, m)| report::FieldFactor {
                        coeffs: g.coeffs().iter().map(|c| c.coords().iter().map(ToString::to_string).collect()).collect(),
                        text: g.to_string(),
                        multiplicity: *m,
                    })
                    .collect(),
            });
            r
        }
        Command::Cyclotomic { k } => {
            let f = cyclotomic(k)?;
            writeln!(out, "{f}").unwrap();
            let mut r = report("cyclotomic", &[], vec![Poly::from_int(&f)], start);
            r.certificate = Some(Certificate::Cyclotomic { k });
            r
        }
        Command::SubgroupPoly { p, index } => {
            let h = index_subgroup(p, index)?;
            let f = subgroup_poly_fixed(p, &h)?;
            writeln!(out, "H = {{{}}} mod {p}", join(h.elements())).unwrap();
            writeln!(out, "raw: {}", f.raw).unwrap();
            for fx in &f.fixes {
                writeln!(out, "{}", fix_line(fx)).unwrap();
            }
            writeln!(out, "result: {}", f.result).unwrap();
            let mut r = report("subgroup-poly", &[], vec![Poly::from_int(&f.result)], start);
            r.certificate = Some(Certificate::subgroup(p, h.elements(), &f));
            r
        }
        Command::ConstructDensity { target, verify } => {
            let c = construct_density(target, verify)?;
            writeln!(out, "P = {}", c.poly).unwrap();
            for s in &c.steps {
                writeln!(out, "step {}/{}: p = {}, factor {}", s.m, s.n, s.prime, s.factor).unwrap();
            }
            writeln!(out, "target {}: {}", c.target, estimate_line(&c.report)).unwrap();
            if let Some(w) = &c.warning {
                writeln!(out, "warning: {w}").unwrap();
            }
            let mut r = report("construct-density", &[], vec![Poly::from_int(&c.poly)], start);
            r.certificate = Some(Certificate::density(&c));
            r.sieve.push(report::SieveSummary::new(&c.report, false));
            r
        }
        Command::SplittingDegree { poly, cap } => {
            let (_, p) = content_primitive(&poly)?;
            let degree = splitting_field_degree(&p, cap)?;
            writeln!(out, "{degree}").unwrap();
            let mut r = report("splitting-degree", &[&poly], Vec::new(), start);
            r.certificate = Some(Certificate::SplittingDegree { degree, cap });
            r
        }
        Command::Fix { poly, prime, action } => {
            let p = integral(&poly, "fix")?;
            let (kind, after) = match action {
                FixArg::Add => (FixKind::Add, fix_add(&p, prime.clone())),
                FixArg::Remove => (FixKind::Remove, fix_remove(&p, prime.clone())),
            };
            writeln!(out, "{after}").unwrap();
            let fix = FixAction { prime, action: kind, before: p, after: after.clone() };
            let mut r = report("fix", &[&poly], vec![Poly::from_int(&after)], start);
            r.certificate = Some(Certificate::Fix { fix: report::Fix::from(&fix) });
            r
        }
    };
    Ok((rep, out))
}
