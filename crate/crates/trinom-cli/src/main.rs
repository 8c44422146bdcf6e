//! Command-line front end: every divisibility criterion, the factorizations,
//! the verification sweeps, and the redundant-trinomial search.
//!
//! Output is line-oriented. `--format json` emits exactly one self-contained
//! record per invocation with the fields {command, inputs, outputs, status}
//! in stable key order, so sweeps can be diffed. Exit codes: 0 ok, 1 domain
//! error, 2 resource cap, 3 a verification run found a counterexample.

use std::io::{self, Write};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use trinom::criteria;
use trinom::cyclotomic;
use trinom::gf2poly::{self, Gf2Poly, Trinomial};
use trinom::intarith;
use trinom::order::{self, IrreducibleInfo};
use trinom::verify::{self, SweepOptions, Threads};
use trinom::Error;

const EXIT_DOMAIN: u8 = 1;
const EXIT_RESOURCE: u8 = 2;
const EXIT_COUNTEREXAMPLE: u8 = 3;

/// Writes one line to stdout. A consumer that closed the pipe (`head`,
/// `grep -q`) ends the run quietly instead of panicking.
fn outln(args: std::fmt::Arguments<'_>) {
    let mut stdout = io::stdout().lock();
    let result = stdout
        .write_fmt(args)
        .and_then(|()| stdout.write_all(b"\n"));
    if let Err(e) = result {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write to stdout: {e}");
        std::process::exit(i32::from(EXIT_DOMAIN));
    }
}

macro_rules! outln {
    ($($arg:tt)*) => { outln(format_args!($($arg)*)) };
}

#[derive(Parser)]
#[command(
    name = "trinom",
    version,
    about = "Divisibility of trinomials by irreducible polynomials over GF(2)",
    after_help = "Polynomials are accepted as 'x^6+x^3+1', as an exponent list '6,3,0', \
                  or as a hex bitmask '0x49' (bit i = coefficient of x^i)."
)]
struct Cli {
    /// Output format: human-readable text or one JSON record per invocation.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Cap on the order e accepted by Welch-type gcd computations; the gcd
    /// operands have degree e, so this bounds both memory and the quadratic
    /// running time.
    #[arg(long, global = true, default_value_t = 1 << 18)]
    max_e: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Degree, multiplicative order and primitivity of an irreducible polynomial.
    Order { poly: String },

    /// Irreducibility test.
    Irreducible { poly: String },

    /// Number of trinomials of degree < e divisible by the polynomial.
    Nf {
        poly: String,
        /// Also list the trinomials themselves.
        #[arg(long)]
        list: bool,
    },

    /// Welch's criterion: do the irreducible polynomials of order E divide trinomials?
    Welch { e: u64 },

    /// Extended criterion for trinomials of the shape x^(a*m) + x^(b*s) + 1.
    Extwelch {
        /// The order to test; omit it and pass --poly to resolve the order first.
        e: Option<u64>,
        #[arg(long, required_unless_present = "e", conflicts_with = "e")]
        poly: Option<String>,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },

    /// Does the polynomial divide the given trinomial? Includes the
    /// necessary-condition report for certified irreducibles.
    Check {
        poly: String,
        /// Trinomial as the exponent pair N,K.
        #[arg(long, value_name = "N,K")]
        trinomial: String,
    },

    /// Cyclotomic factorization of the self-reciprocal trinomial x^(2m)+x^m+1.
    SrtFactor {
        m: u64,
        /// Multiply the factorization back out and compare.
        #[arg(long)]
        verify: bool,
    },

    /// The d-th cyclotomic polynomial over GF(2).
    Cyclotomic { d: u64 },

    /// Trinomials of degree below the bound divisible by the polynomial.
    Multiples {
        poly: String,
        /// Upper bound on the trinomial degree (exclusive); defaults to the
        /// order, beyond which solutions repeat with period e.
        #[arg(long)]
        bound: Option<u64>,
    },

    /// Trinomials of degree <= max-degree with an irreducible factor of
    /// degree exactly N.
    SearchRedundant {
        n: u32,
        #[arg(long)]
        max_degree: u64,
        /// Require a primitive factor instead of just an irreducible one.
        #[arg(long)]
        primitive: bool,
    },

    /// Replay a criterion against its brute-force oracle over an exhaustive range.
    Verify {
        /// One of thm1, lemma1, thm2, thm3, thm4, thm5, thm6, cor3, cor4,
        /// cor5, or all.
        #[arg(long)]
        suite: String,
        /// Override the sweep's degree ceiling.
        #[arg(long)]
        max_degree: Option<u32>,
        /// Worker threads: 1 forces sequential execution.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

struct Failure {
    exit: u8,
    message: String,
    /// Partial outputs worth keeping in the error record (e.g. the suite
    /// reports of a verification run that found counterexamples).
    outputs: Value,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            exit: if e.is_resource_limit() { EXIT_RESOURCE } else { EXIT_DOMAIN },
            message: e.to_string(),
            outputs: json!({}),
        }
    }
}

fn counterexample_failure(message: String, outputs: Value) -> Failure {
    Failure {
        exit: EXIT_COUNTEREXAMPLE,
        message,
        outputs,
    }
}

/// What a subcommand hands back on success: the machine payload and the
/// human rendering.
struct Outcome {
    outputs: Value,
    text: String,
}

/// One self-contained record per invocation. The exit status is 0 exactly
/// when the status is ok.
struct CommandResult {
    command: &'static str,
    inputs: Value,
    outcome: Result<Outcome, Failure>,
}

impl CommandResult {
    fn exit_code(&self) -> ExitCode {
        match &self.outcome {
            Ok(_) => ExitCode::SUCCESS,
            Err(failure) => ExitCode::from(failure.exit),
        }
    }

    fn emit(&self, format: Format) {
        match (format, &self.outcome) {
            (Format::Text, Ok(outcome)) => {
                if !outcome.text.is_empty() {
                    outln!("{}", outcome.text);
                }
            }
            (Format::Text, Err(failure)) => eprintln!("error: {}", failure.message),
            (Format::Json, Ok(outcome)) => outln!(
                "{}",
                json!({
                    "command": self.command,
                    "inputs": self.inputs,
                    "outputs": outcome.outputs,
                    "status": "ok",
                })
            ),
            (Format::Json, Err(failure)) => outln!(
                "{}",
                json!({
                    "command": self.command,
                    "inputs": self.inputs,
                    "message": failure.message,
                    "outputs": failure.outputs,
                    "status": "error",
                })
            ),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_DOMAIN } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    // let a raised --max-e widen the allocation guard as well
    if cli.max_e > gf2poly::degree_cap() {
        gf2poly::set_degree_cap(cli.max_e);
    }
    let (command, inputs) = describe(&cli.command);
    let result = CommandResult {
        command,
        inputs,
        outcome: run(&cli),
    };
    result.emit(cli.format);
    result.exit_code()
}

/// Echoes the command name and its parameters for the result record.
fn describe(command: &Command) -> (&'static str, Value) {
    match command {
        Command::Order { poly } => ("order", json!({ "poly": poly })),
        Command::Irreducible { poly } => ("irreducible", json!({ "poly": poly })),
        Command::Nf { poly, list } => ("nf", json!({ "list": list, "poly": poly })),
        Command::Welch { e } => ("welch", json!({ "e": e })),
        Command::Extwelch { e, poly, a, b } => {
            ("extwelch", json!({ "a": a, "b": b, "e": e, "poly": poly }))
        }
        Command::Check { poly, trinomial } => {
            ("check", json!({ "poly": poly, "trinomial": trinomial }))
        }
        Command::SrtFactor { m, verify } => ("srt-factor", json!({ "m": m, "verify": verify })),
        Command::Cyclotomic { d } => ("cyclotomic", json!({ "d": d })),
        Command::Multiples { poly, bound } => {
            ("multiples", json!({ "bound": bound, "poly": poly }))
        }
        Command::SearchRedundant { n, max_degree, primitive } => (
            "search-redundant",
            json!({ "max_degree": max_degree, "n": n, "primitive": primitive }),
        ),
        Command::Verify { suite, max_degree, jobs } => (
            "verify",
            json!({ "jobs": jobs, "max_degree": max_degree, "suite": suite }),
        ),
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Order { poly } => cmd_order(poly),
        Command::Irreducible { poly } => cmd_irreducible(poly),
        Command::Nf { poly, list } => cmd_nf(poly, *list, cli.max_e),
        Command::Welch { e } => cmd_welch(*e, cli.max_e),
        Command::Extwelch { e, poly, a, b } => cmd_extwelch(*e, poly.as_deref(), *a, *b, cli.max_e),
        Command::Check { poly, trinomial } => cmd_check(poly, trinomial),
        Command::SrtFactor { m, verify } => cmd_srt_factor(*m, *verify),
        Command::Cyclotomic { d } => cmd_cyclotomic(*d),
        Command::Multiples { poly, bound } => cmd_multiples(poly, *bound),
        Command::SearchRedundant { n, max_degree, primitive } => {
            cmd_search_redundant(*n, *max_degree, *primitive, cli.format)
        }
        Command::Verify { suite, max_degree, jobs } => {
            cmd_verify(suite, *max_degree, *jobs, cli.format)
        }
    }
}

fn parse_poly(text: &str) -> Result<Gf2Poly, Failure> {
    Ok(Gf2Poly::from_str(text)?)
}

fn certified(text: &str) -> Result<IrreducibleInfo, Failure> {
    Ok(order::certify(&parse_poly(text)?)?)
}

fn ensure_welch_cap(e: u64, max_e: u64) -> Result<(), Failure> {
    if e > max_e {
        return Err(Failure {
            exit: EXIT_RESOURCE,
            message: format!(
                "order {e} exceeds --max-e {max_e}; raise the cap to run this gcd"
            ),
            outputs: json!({}),
        });
    }
    Ok(())
}

fn cmd_order(poly: &str) -> Result<Outcome, Failure> {
    let info = certified(poly)?;
    Ok(Outcome {
        outputs: json!({
            "degree": info.degree,
            "order": info.order,
            "poly": info.poly.to_string(),
            "primitive": info.primitive,
        }),
        text: format!(
            "poly: {}\ndegree: {}\norder: {}\nprimitive: {}",
            info.poly, info.degree, info.order, info.primitive
        ),
    })
}

fn cmd_irreducible(poly: &str) -> Result<Outcome, Failure> {
    let f = parse_poly(poly)?;
    let answer = order::is_irreducible(&f)?;
    Ok(Outcome {
        outputs: json!({ "irreducible": answer, "poly": f.to_string() }),
        text: format!("poly: {f}\nirreducible: {answer}"),
    })
}

fn cmd_nf(poly: &str, list: bool, max_e: u64) -> Result<Outcome, Failure> {
    let info = certified(poly)?;
    ensure_welch_cap(info.order, max_e)?;
    let count = criteria::count_nf(&info)?;
    let mut outputs = json!({
        "degree": info.degree,
        "nf": count,
        "order": info.order,
        "poly": info.poly.to_string(),
    });
    let mut text = format!(
        "poly: {}\norder: {}\nnf: {count}",
        info.poly, info.order
    );
    if list {
        let multiples = criteria::list_trinomial_multiples(&info, info.order)?;
        let rendered: Vec<String> = multiples.iter().map(|t| t.to_string()).collect();
        for t in &rendered {
            text.push_str(&format!("\nmultiple: {t}"));
        }
        outputs["trinomials"] = json!(rendered);
    }
    Ok(Outcome { outputs, text })
}

fn cmd_welch(e: u64, max_e: u64) -> Result<Outcome, Failure> {
    ensure_welch_cap(e, max_e)?;
    let gcd = criteria::welch_gcd(e)?;
    let gcd_degree = gcd.degree().unwrap_or(0);
    let divides = gcd_degree > 1;
    Ok(Outcome {
        outputs: json!({ "divides_trinomials": divides, "e": e, "gcd_degree": gcd_degree }),
        text: format!("e: {e}\ngcd degree: {gcd_degree}\ndivides trinomials: {divides}"),
    })
}

fn cmd_extwelch(
    e: Option<u64>,
    poly: Option<&str>,
    a: u64,
    b: u64,
    max_e: u64,
) -> Result<Outcome, Failure> {
    let e = match (e, poly) {
        (Some(e), None) => e,
        (None, Some(p)) => certified(p)?.order,
        _ => unreachable!("clap enforces exactly one of e and --poly"),
    };
    ensure_welch_cap(e, max_e)?;
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument("exponent multipliers must be positive".into()).into());
    }
    let divides = criteria::ext_welch(e, a, b)?;
    let e1 = e / intarith::gcd(a, e);
    let e2 = e / intarith::gcd(b, e);
    Ok(Outcome {
        outputs: json!({
            "a": a,
            "b": b,
            "divides_stretched_trinomials": divides,
            "e": e,
            "e1": e1,
            "e2": e2,
        }),
        text: format!(
            "e: {e}\na: {a} (power order e1 = {e1})\nb: {b} (power order e2 = {e2})\n\
             divides some x^(a*m)+x^(b*s)+1: {divides}"
        ),
    })
}

fn cmd_check(poly: &str, trinomial: &str) -> Result<Outcome, Failure> {
    let f = parse_poly(poly)?;
    let t = Trinomial::from_str(trinomial)?;
    let divides = t.to_poly()?.is_divisible_by(&f)?;
    let irreducible = order::is_irreducible(&f)?;
    let mut outputs = json!({
        "divides": divides,
        "irreducible": irreducible,
        "poly": f.to_string(),
        "trinomial": t.to_string(),
    });
    let mut text = format!("poly: {f}\ntrinomial: {t}\ndivides: {divides}");
    if irreducible && f != Gf2Poly::x() {
        let info = order::certify(&f)?;
        outputs["order"] = json!(info.order);
        text.push_str(&format!("\norder: {}", info.order));
        if info.order > 1 {
            let necessary = criteria::necessary_check(info.order, 1, 1, t.n(), t.k())?;
            outputs["necessary_condition"] = json!(necessary);
            text.push_str(&format!(
                "\nnecessary condition (e divides none of n, k, n-k): {necessary}"
            ));
            if !necessary && divides {
                return Err(counterexample_failure(
                    format!("{f} divides {t} although the necessary condition fails"),
                    outputs,
                ));
            }
        }
    }
    Ok(Outcome { outputs, text })
}

fn cmd_srt_factor(m: u64, verify: bool) -> Result<Outcome, Failure> {
    let f = cyclotomic::srt_factorization(m)?;
    let rendered: Vec<String> = f.indices.iter().map(|d| format!("Q_{d}")).collect();
    let mut text = format!(
        "x^{}+x^{}+1 = ({})^{}",
        2 * m,
        m,
        rendered.join(" * "),
        f.multiplicity
    );
    let mut outputs = json!({
        "indices": f.indices,
        "m": m,
        "multiplicity": f.multiplicity,
        "odd_part": f.odd_part,
        "two_adic": f.two_adic,
    });
    if verify {
        let recomposed = f.recompose()?;
        let expected = f.trinomial()?;
        if recomposed != expected {
            return Err(counterexample_failure(
                format!("recomposition of m={m} produced {recomposed}, expected {expected}"),
                outputs,
            ));
        }
        outputs["verified"] = json!(true);
        text.push_str("\nrecomposition verified");
    }
    Ok(Outcome { outputs, text })
}

fn cmd_cyclotomic(d: u64) -> Result<Outcome, Failure> {
    let q = cyclotomic::cyclotomic(d)?;
    Ok(Outcome {
        outputs: json!({
            "d": d,
            "degree": q.degree().unwrap_or(0),
            "poly": q.to_string(),
        }),
        text: format!("Q_{d} = {q}"),
    })
}

fn cmd_multiples(poly: &str, bound: Option<u64>) -> Result<Outcome, Failure> {
    let info = certified(poly)?;
    let bound = bound.unwrap_or(info.order);
    let multiples = criteria::list_trinomial_multiples(&info, bound)?;
    let rendered: Vec<String> = multiples.iter().map(|t| t.to_string()).collect();
    let mut text = format!(
        "poly: {}\norder: {}\nbound: {bound}\ncount: {}",
        info.poly,
        info.order,
        rendered.len()
    );
    for t in &rendered {
        text.push_str(&format!("\nmultiple: {t}"));
    }
    Ok(Outcome {
        outputs: json!({
            "bound": bound,
            "count": rendered.len(),
            "order": info.order,
            "poly": info.poly.to_string(),
            "trinomials": rendered,
        }),
        text,
    })
}

fn cmd_search_redundant(
    n: u32,
    max_degree: u64,
    primitive: bool,
    format: Format,
) -> Result<Outcome, Failure> {
    if n == 0 {
        return Err(Error::InvalidArgument("factor degree must be positive".into()).into());
    }
    let mut hits: Vec<Trinomial> = Vec::new();
    // ascending (degree, low exponent), streamed as they are found
    for degree in 2..=max_degree {
        for k in 1..degree {
            let t = Trinomial::new(degree, k)?;
            let found = if primitive {
                order::has_primitive_factor_of_degree(&t.to_poly()?, n)?
            } else {
                order::has_irreducible_factor_of_degree(&t.to_poly()?, n)?
            };
            if found {
                if format == Format::Text {
                    outln!("found: {t}");
                }
                hits.push(t);
            }
        }
    }
    let rendered: Vec<String> = hits.iter().map(|t| t.to_string()).collect();
    Ok(Outcome {
        outputs: json!({
            "count": rendered.len(),
            "factor_degree": n,
            "max_degree": max_degree,
            "primitive": primitive,
            "trinomials": rendered,
        }),
        text: format!(
            "trinomials of degree <= {max_degree} with a{} factor of degree {n}: {}",
            if primitive { " primitive" } else { "n irreducible" },
            rendered.len()
        ),
    })
}

fn threads_from_jobs(jobs: Option<usize>) -> Result<Threads, Failure> {
    match jobs {
        None => Ok(Threads::default()),
        Some(0) => Err(Error::InvalidArgument("--jobs must be at least 1".into()).into()),
        Some(1) => Ok(Threads::Sequential),
        #[cfg(feature = "parallel")]
        Some(n) => Ok(Threads::Count(n)),
        #[cfg(not(feature = "parallel"))]
        Some(_) => Err(Error::InvalidArgument(
            "this build has no parallel support; use --jobs 1".into(),
        )
        .into()),
    }
}

fn cmd_verify(
    suite: &str,
    max_degree: Option<u32>,
    jobs: Option<usize>,
    format: Format,
) -> Result<Outcome, Failure> {
    let opts = SweepOptions {
        max_degree,
        threads: threads_from_jobs(jobs)?,
        ..SweepOptions::default()
    };
    let reports = if suite == "all" {
        verify::run_all(&opts)?
    } else {
        vec![verify::run_suite(verify::Suite::from_str(suite)?, &opts)?]
    };
    let mut lines = Vec::new();
    let mut records = Vec::new();
    let mut failed = false;
    for report in &reports {
        let status = if report.passed() { "PASS" } else { "FAIL" };
        lines.push(format!(
            "suite {}: {} cases, {} counterexamples: {status}",
            report.suite,
            report.cases,
            report.counterexamples.len()
        ));
        for c in &report.counterexamples {
            lines.push(format!("  counterexample: {c}"));
        }
        if format == Format::Text {
            for line in lines.drain(..) {
                outln!("{line}");
            }
        }
        failed |= !report.passed();
        records.push(json!({
            "cases": report.cases,
            "counterexamples": report.counterexamples,
            "passed": report.passed(),
            "suite": report.suite.name(),
        }));
    }
    if failed {
        return Err(counterexample_failure(
            "verification found counterexamples".into(),
            json!({ "suites": records }),
        ));
    }
    Ok(Outcome {
        outputs: json!({ "suites": records }),
        text: lines.join("\n"),
    })
}
