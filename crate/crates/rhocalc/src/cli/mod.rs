//! Command-line front end: DSL parsing, evaluation, differentiation,
//! theorem checks and series I/O.
//!
//! Exit codes: 0 when the command succeeds (verdict holds), 2 when a check
//! fails, 3 when the outcome is dominated by indistinguishable-at-order
//! verdicts, 1 on evaluation errors, 64 on usage errors.

mod parser;
mod program;
pub mod suites;

pub use parser::{parse_domain, parse_expr, parse_point};
pub use program::ParsedProgram;

use crate::asymfunc::MultiIndex;
use crate::calculus::{
    continuity_check, derivative_quotient, differentiability_check, scalar_detect,
    standard_probes,
};
use crate::error::{Error, Result};
use crate::lcfield::{complex_to_json, AsymptoticComplex, Exponent, SeriesVerdict};
use clap::{Args, Parser as ClapParser, Subcommand};
use std::io::Write;

/// Runtime configuration shared by the subcommands.
#[derive(Clone, Debug)]
pub struct Config {
    /// Knowledge order stamped on every series built from literals.
    pub order: Exponent,
    /// Zero threshold applied at normalization (fixed at the crate level).
    pub tau: f64,
    pub seed: u64,
    pub samples: usize,
    pub deriv_depth: usize,
    pub mollifier: String,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            order: crate::lcfield::default_order(),
            tau: crate::lcfield::TAU,
            seed: 42,
            samples: 20,
            deriv_depth: 3,
            mollifier: "gaussian".into(),
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        if !self.order.is_positive() {
            return Err(Error::InvalidArgument("order must be positive".into()));
        }
        if self.tau <= 0.0 {
            return Err(Error::InvalidArgument("tau must be positive".into()));
        }
        if self.samples == 0 {
            return Err(Error::InvalidArgument("samples must be at least 1".into()));
        }
        if self.mollifier != "gaussian" {
            return Err(Error::InvalidArgument(format!(
                "unsupported mollifier `{}`; only `gaussian` is built in",
                self.mollifier
            )));
        }
        Ok(())
    }
}

#[derive(ClapParser)]
#[command(
    name = "rhocalc",
    about = "Truncated Levi-Civita series calculator for asymptotic functions",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Knowledge order (overrides RHOCALC_ORDER; accepts `n` or `p/q`)
    #[arg(long)]
    order: Option<String>,
    /// Seed for all deterministic sampling
    #[arg(long)]
    seed: Option<u64>,
    /// Sample count for domain-wide checks
    #[arg(long)]
    samples: Option<usize>,
    /// Derivative depth for null tests
    #[arg(long)]
    depth: Option<usize>,
    /// Mollifier kernel backing the distribution embeddings
    #[arg(long)]
    mollifier: Option<String>,
    /// Emit machine-readable JSON instead of the human form
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression at a nearstandard point
    Eval {
        #[arg(long)]
        expr: String,
        /// Point literal like `x=0.5+1*s^2, y=0`
        #[arg(long)]
        at: Option<String>,
        /// Domain literal like `box(-2,2)` (defaults to the full space)
        #[arg(long)]
        domain: Option<String>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Differentiate an expression symbolically and print it
    Diff {
        #[arg(long)]
        expr: String,
        /// Variable to differentiate by (x, y or z)
        #[arg(long)]
        wrt: String,
        #[arg(long, default_value_t = 1)]
        times: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Run a continuity or differentiability limit check
    Limit {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        at: String,
        /// `continuity` or `differential`
        #[arg(long)]
        mode: String,
        #[arg(long, default_value_t = 5)]
        nmax: i64,
        #[arg(long)]
        domain: Option<String>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Decide whether an expression is a scalar (constant) on a domain
    Scalar {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        domain: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Difference quotient (F(p+h) - F(p)) / h
    Quotient {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        at: String,
        /// Step series, e.g. `s`, `0.37*s^2`
        #[arg(long)]
        h: String,
        #[arg(long)]
        domain: Option<String>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Run a named check suite
    Suite {
        /// One of: field-axioms, homomorphism, pointwise, fundamental, distributions
        #[arg(long)]
        name: String,
        #[command(flatten)]
        common: CommonOpts,
    },
}

fn parse_order(text: &str) -> Result<Exponent> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num = num.trim().parse().map_err(|_| bad_order(text))?;
        let den = den.trim().parse().map_err(|_| bad_order(text))?;
        return Exponent::new(num, den);
    }
    Ok(Exponent::integer(text.parse().map_err(|_| bad_order(text))?))
}

fn bad_order(text: &str) -> Error {
    Error::InvalidArgument(format!("malformed order `{text}`; expected `n` or `p/q`"))
}

fn build_config(common: &CommonOpts) -> Result<Config> {
    let mut cfg = Config::default();
    if let Ok(env_order) = std::env::var("RHOCALC_ORDER") {
        cfg.order = parse_order(&env_order)?;
    }
    if let Some(text) = &common.order {
        cfg.order = parse_order(text)?;
    }
    if let Some(seed) = common.seed {
        cfg.seed = seed;
    }
    if let Some(samples) = common.samples {
        cfg.samples = samples;
    }
    if let Some(depth) = common.depth {
        cfg.deriv_depth = depth;
    }
    if let Some(mollifier) = &common.mollifier {
        cfg.mollifier = mollifier.clone();
    }
    cfg.validate()?;
    Ok(cfg)
}

fn verdict_code(v: SeriesVerdict) -> i32 {
    match v {
        SeriesVerdict::Holds => 0,
        SeriesVerdict::Fails => 2,
        SeriesVerdict::IndistinguishableAtOrder => 3,
    }
}

fn render_value(v: &AsymptoticComplex, json: bool) -> String {
    if json {
        complex_to_json(v)
    } else {
        format!("{v}")
    }
}

/// Entry point used by the binary and by tests: parses `argv` (including
/// the program name) and writes to the given streams.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    64
                }
            };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Eval { expr, at, domain, common } => {
            let cfg = build_config(&common)?;
            let prog = ParsedProgram::assemble(&expr, at.as_deref(), domain.as_deref(), &cfg)?;
            let p = prog.point(&cfg)?;
            let v = prog.func.evaluate(&p)?;
            writeln!(out, "{}", render_value(&v, common.json)).ok();
            Ok(0)
        }
        Command::Diff { expr, wrt, times, common } => {
            let cfg = build_config(&common)?;
            let prog = ParsedProgram::assemble(&expr, None, None, &cfg)?;
            let axis = match wrt.as_str() {
                "x" => 0,
                "y" => 1,
                "z" => 2,
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "unknown variable `{other}`; expected x, y or z"
                    )))
                }
            };
            if axis >= prog.func.domain().dim() {
                return Err(Error::UnboundVariable(wrt));
            }
            let mut alpha = vec![0usize; prog.func.domain().dim()];
            alpha[axis] = times;
            let derived = prog.func.differentiate(&MultiIndex::new(alpha));
            writeln!(out, "{}", derived.expr()).ok();
            Ok(0)
        }
        Command::Limit { expr, at, mode, nmax, domain, common } => {
            let cfg = build_config(&common)?;
            if nmax < 1 {
                return Err(Error::InvalidArgument("nmax must be at least 1".into()));
            }
            let prog = ParsedProgram::assemble(&expr, Some(&at), domain.as_deref(), &cfg)?;
            let p = prog.point(&cfg)?;
            let probes = standard_probes(p.dim(), nmax, cfg.order);
            let report = match mode.as_str() {
                "continuity" => continuity_check(&prog.func, &p, nmax, &probes, cfg.seed)?,
                "differential" => {
                    differentiability_check(&prog.func, &p, nmax, &probes, cfg.seed)?
                }
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "unknown mode `{other}`; expected continuity or differential"
                    )))
                }
            };
            if common.json {
                writeln!(out, "{}", report.to_json()).ok();
            } else {
                writeln!(out, "{} check at nmax={}", report.check, report.n_max).ok();
                for w in &report.witnesses {
                    writeln!(out, "  n={} m={}", w.n, w.m).ok();
                }
                for f in &report.failures {
                    writeln!(
                        out,
                        "  n={} no witness (probe axis {} coeff {} val {})",
                        f.n, f.probe.axis, f.probe.coeff, f.probe.valuation
                    )
                    .ok();
                }
                writeln!(out, "verdict: {}", report.verdict).ok();
            }
            Ok(verdict_code(report.verdict))
        }
        Command::Scalar { expr, domain, common } => {
            let cfg = build_config(&common)?;
            let prog = ParsedProgram::assemble(&expr, None, Some(&domain), &cfg)?;
            let (report, _witness) =
                scalar_detect(&prog.func, cfg.samples, cfg.deriv_depth, cfg.seed)?;
            if common.json {
                writeln!(out, "{}", report.to_json()).ok();
            } else {
                match (&report.is_scalar, &report.constant) {
                    (SeriesVerdict::Holds, Some(c)) => {
                        writeln!(out, "SCALAR C = {c}").ok();
                    }
                    _ => {
                        writeln!(out, "NOT A SCALAR").ok();
                        for sample in report.gradient_evidence.iter().take(3) {
                            let grad = sample
                                .gradient
                                .iter()
                                .map(|g| g.to_string())
                                .collect::<Vec<_>>()
                                .join(", ");
                            writeln!(out, "  grad at {:?} = [{}]", sample.point, grad).ok();
                        }
                    }
                }
            }
            Ok(verdict_code(report.is_scalar))
        }
        Command::Quotient { expr, at, h, domain, common } => {
            let cfg = build_config(&common)?;
            let prog = ParsedProgram::assemble(&expr, Some(&at), domain.as_deref(), &cfg)?;
            let p = prog.point(&cfg)?;
            let step_bindings = parse_point(&format!("x={h}"), cfg.order)?;
            let step = step_bindings[0].1.clone();
            let q = derivative_quotient(&prog.func, &p, &step)?;
            writeln!(out, "{}", render_value(&q, common.json)).ok();
            Ok(0)
        }
        Command::Suite { name, common } => {
            let cfg = build_config(&common)?;
            let report = suites::run_suite(&name, &cfg)?;
            write!(out, "{}", report.render(cfg.seed)).ok();
            Ok(if report.passed() { 0 } else { 2 })
        }
    }
}
