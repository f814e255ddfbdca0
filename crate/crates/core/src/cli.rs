//! The `hp` command line: argument parsing, dispatch and report emission.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{Scalar, ThetaMode};
use crate::characters::{averaged_character_with, character, AveragedCharacterSpec};
use crate::error::Error;
use crate::poly::{Partition, VLambda};
use crate::settings::{Mutation, Settings};
use crate::spectra::{
    check_catalog, eig_closed_for_isotype, eig_sym_series, jack_polynomial,
    joint_eigenbasis, joint_eigenbasis_full, n3_catalog, spectrum_on_v_lambda_with, trace_isotypic_brute_with,
    trace_isotypic_closed_with, verify_joint_basis, JointBasis, SpectrumReport,
};
use crate::verify::{verify, Suite, VerifyConfig, DEFAULT_SEED};

pub const CSV_HEADER: [&str; 8] = ["n", "lambda", "tau", "m", "theta", "value", "mult", "provenance"];

#[derive(Parser, Debug)]
#[command(name = "hp", version, about = "Exact spectra of Heckman-Polychronakos operators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Largest matrix handled with symbolic θ (also HP_SYMBOLIC_CAP).
    #[arg(long, global = true)]
    pub cap: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Args, Debug, Clone)]
pub struct Target {
    /// Number of variables.
    #[arg(long)]
    pub n: usize,
    /// Partition such as 2,1,0.
    #[arg(long)]
    pub lambda: Partition,
    /// θ as p/q, or `sym` for a formal parameter.
    #[arg(long, default_value = "sym")]
    pub theta: ThetaMode,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Closed-form eigenvalue of P_m for λ, on the symmetric isotype unless --tau is given.
    Eig {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        tau: Option<Partition>,
    },
    /// Symmetric eigenvalues for m = 0..=M from the generating function.
    Series {
        #[command(flatten)]
        target: Target,
        /// Largest m.
        #[arg(long)]
        m: u32,
    },
    /// Spectrum of Σ T_i^m on V_λ by isotype.
    Spectrum {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        m: u32,
    },
    /// Isotypic trace, closed form against explicit matrices.
    Trace {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        tau: Partition,
        #[arg(long)]
        m: u32,
    },
    /// Symmetric Jack polynomial and its eigenvalues.
    Jack {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        m: Vec<u32>,
    },
    /// Monomial basis of V_λ, or joint eigenfunctions with --joint.
    Basis {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        joint: bool,
        /// With --joint: include eigenfunctions led by every V_μ, μ ⪯ λ.
        #[arg(long)]
        full: bool,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        m: Vec<u32>,
    },
    /// Irreducible character value; the class is padded with 1-cycles.
    Char {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        tau: Partition,
        #[arg(long)]
        class: Partition,
    },
    /// Averaged character over a Young subgroup.
    Avgchar {
        #[arg(long)]
        tau: Partition,
        /// Block sizes n_1,…,n_p.
        #[arg(long, value_delimiter = ',')]
        blocks: Vec<usize>,
        /// Distinguished blocks, 1-based.
        #[arg(long, value_delimiter = ',')]
        subset: Vec<usize>,
    },
    /// Closed-form eigenvalues for three variables.
    Catalog3 {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value = "sym")]
        theta: ThetaMode,
        /// Compare against the isotypic blocks of Σ T_i^m.
        #[arg(long)]
        check: bool,
    },
    /// Run verification suites.
    Verify {
        #[arg(value_parser = ["commutativity", "triangularity", "selfadjoint", "cms", "traces", "catalog", "all"])]
        suite: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        maxdeg: u32,
        #[arg(long, default_value = "1")]
        theta: ThetaMode,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random polynomials added to the monomial checks.
        #[arg(long, default_value_t = 8)]
        samples: usize,
    },
}

/// One CSV row in the fixed column order.
#[derive(Clone, Debug, Default)]
pub struct Row {
    pub n: String,
    pub lambda: String,
    pub tau: String,
    pub m: String,
    pub theta: String,
    pub value: String,
    pub mult: String,
    pub provenance: String,
}

impl Row {
    fn fields(&self) -> [&str; 8] {
        [
            &self.n,
            &self.lambda,
            &self.tau,
            &self.m,
            &self.theta,
            &self.value,
            &self.mult,
            &self.provenance,
        ]
    }
}

/// A command's result in all three formats, with its exit status.
pub struct Report {
    pub json: Value,
    pub rows: Vec<Row>,
    pub pretty: String,
    pub violations: Vec<String>,
}

impl Report {
    fn new(json: Value, pretty: String) -> Self {
        Report {
            json,
            rows: Vec::new(),
            pretty,
            violations: Vec::new(),
        }
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", self.json),
            Format::Pretty => self.pretty.clone(),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                if self.rows.is_empty() {
                    w.write_record(["key", "value"]).expect("in-memory write");
                    if let Value::Object(map) = &self.json {
                        for (k, v) in map {
                            let v = match v {
                                Value::String(s) => s.clone(),
                                other => other.to_string(),
                            };
                            w.write_record([k.as_str(), v.as_str()]).expect("in-memory write");
                        }
                    }
                } else {
                    w.write_record(CSV_HEADER).expect("in-memory write");
                    for r in &self.rows {
                        w.write_record(r.fields()).expect("in-memory write");
                    }
                }
                String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
            }
        }
    }
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

/// Report for a spectrum; the CSV form has one row per eigen-record.
pub fn spectrum_report(rep: &SpectrumReport) -> Report {
    let json = to_json(rep);
    let mut pretty = format!(
        "V_({}) in {} variables, dim {}, m = {}, θ = {}\n",
        rep.lambda, rep.n, rep.dim, rep.m, rep.theta
    );
    for b in &rep.blocks {
        let _ = writeln!(pretty, "  τ=({}) dim {}: trace {}", b.tau, b.dim, b.trace);
    }
    for v in &rep.eigenvalues {
        let _ = writeln!(pretty, "  eigenvalue {} ×{}", v.value, v.mult);
    }
    if rep.unfactored {
        pretty.push_str("  some factors of degree > 2 were left unfactored\n");
    }
    let rows = rep
        .records
        .iter()
        .map(|r| Row {
            n: rep.n.to_string(),
            lambda: r.lambda.to_string(),
            tau: r.tau.as_ref().map(ToString::to_string).unwrap_or_default(),
            m: r.m.to_string(),
            theta: rep.theta.clone(),
            value: r.value.to_string(),
            mult: r.mult.to_string(),
            provenance: r.provenance.to_string(),
        })
        .collect();
    let violations = rep
        .verdicts
        .iter()
        .filter(|v| !v.ok)
        .map(|v| v.check.clone())
        .collect();
    Report {
        json,
        rows,
        pretty,
        violations,
    }
}

fn joint_report(bases: &[JointBasis]) -> Report {
    let json = if bases.len() == 1 {
        to_json(&bases[0])
    } else {
        json!({ "bases": to_json(&bases) })
    };
    let mut pretty = String::new();
    let mut rows = Vec::new();
    for b in bases {
        let _ = writeln!(pretty, "λ=({}) in {} variables, θ = {}", b.lambda, b.n, b.theta);
        for f in &b.functions {
            let vals: Vec<String> = f.eigenvalues.iter().map(|(m, v)| format!("P_{m}: {v}")).collect();
            let _ = writeln!(pretty, "  τ=({}) [{}]\n    {}", f.tau, vals.join(", "), f.poly);
        }
        for g in &b.groups {
            for (m, v) in &g.eigenvalues {
                rows.push(Row {
                    n: b.n.to_string(),
                    lambda: b.lambda.to_string(),
                    tau: g.tau.to_string(),
                    m: m.to_string(),
                    theta: b.theta.clone(),
                    value: v.to_string(),
                    mult: g.dim.to_string(),
                    provenance: "brute-force".into(),
                });
            }
        }
        for g in b.unresolved() {
            let _ = writeln!(pretty, "  unresolved multiplicity {} for τ=({})", g.dim, g.tau);
        }
    }
    Report {
        json,
        rows,
        pretty,
        violations: Vec::new(),
    }
}

fn scalar_row(n: usize, lambda: &Partition, tau: &str, m: u32, theta: &ThetaMode, v: &Scalar, mult: String) -> Row {
    Row {
        n: n.to_string(),
        lambda: lambda.to_string(),
        tau: tau.to_string(),
        m: m.to_string(),
        theta: theta.to_string(),
        value: v.to_string(),
        mult,
        provenance: "closed-form".into(),
    }
}

/// Execute a parsed command.
pub fn dispatch(command: &Command, settings: &Settings) -> crate::Result<Report> {
    match command {
        Command::Eig { target, m, tau } => {
            let Target { n, lambda, theta } = target;
            let tau = tau.clone().unwrap_or_else(|| Partition::from_unsorted(vec![*n as u32]));
            let v = eig_closed_for_isotype(lambda, &tau, *m, *n, theta, settings)?.ok_or_else(|| {
                Error::InvalidArgument(format!("no closed form for τ=({tau}) and λ=({lambda}); use `hp spectrum`"))
            })?;
            let mut rep = Report::new(
                json!({ "n": n, "lambda": lambda, "tau": tau, "m": m, "theta": theta.to_string(), "eigenvalue": v }),
                format!("{v}\n"),
            );
            rep.rows.push(scalar_row(*n, lambda, &tau.to_string(), *m, theta, &v, String::new()));
            Ok(rep)
        }
        Command::Series { target, m } => {
            let Target { n, lambda, theta } = target;
            let vals = eig_sym_series(lambda, *n, *m, theta)?;
            let mut pretty = String::new();
            let mut rows = Vec::new();
            for (k, v) in vals.iter().enumerate() {
                let _ = writeln!(pretty, "m={k}: {v}");
                rows.push(scalar_row(*n, lambda, &n.to_string(), k as u32, theta, v, String::new()));
            }
            let mut rep = Report::new(
                json!({ "n": n, "lambda": lambda, "theta": theta.to_string(), "eigenvalues": vals }),
                pretty,
            );
            rep.rows = rows;
            Ok(rep)
        }
        Command::Spectrum { target, m } => {
            let Target { n, lambda, theta } = target;
            Ok(spectrum_report(&spectrum_on_v_lambda_with(lambda, *m, *n, theta, settings)?))
        }
        Command::Trace { target, tau, m } => {
            let Target { n, lambda, theta } = target;
            let closed = trace_isotypic_closed_with(lambda, tau, *m, *n, theta, settings)?;
            let brute = trace_isotypic_brute_with(lambda, tau, *m, *n, theta, settings)?;
            let equal = closed == brute;
            let mut rep = Report::new(
                json!({ "n": n, "lambda": lambda, "tau": tau, "m": m, "theta": theta.to_string(),
                        "closed": closed, "brute": brute, "equal": equal }),
                format!("closed form {closed}\nexplicit matrices {brute}\n"),
            );
            if !equal {
                rep.violations.push(format!("trace mismatch: {closed} vs {brute}"));
            }
            Ok(rep)
        }
        Command::Jack { target, m } => {
            let Target { n, lambda, theta } = target;
            let j = jack_polynomial(lambda, *n, m, theta)?;
            let mut pretty = format!("{}\n", j.poly);
            for (k, e) in &j.eigenvalues {
                let _ = writeln!(pretty, "P_{k}: {e}");
            }
            let mut rep = Report::new(to_json(&j), pretty);
            rep.rows = j
                .eigenvalues
                .iter()
                .map(|(k, e)| scalar_row(*n, lambda, &n.to_string(), *k, theta, e, "1".into()))
                .collect();
            Ok(rep)
        }
        Command::Basis {
            target,
            joint,
            full,
            m,
        } => {
            let Target { n, lambda, theta } = target;
            if !joint {
                let vl = VLambda::new(lambda, *n)?;
                let basis: Vec<String> = vl.basis().iter().map(ToString::to_string).collect();
                return Ok(Report::new(
                    json!({ "n": n, "lambda": lambda, "dim": vl.dim(), "basis": basis }),
                    format!("{}\n", basis.join("\n")),
                ));
            }
            let bases = if *full {
                joint_eigenbasis_full(lambda, *n, m, theta, settings)?
            } else {
                vec![joint_eigenbasis(lambda, *n, m, theta, settings)?]
            };
            let mut rep = joint_report(&bases);
            for b in &bases {
                if let Err(e) = verify_joint_basis(b) {
                    rep.violations.push(e.to_string());
                }
            }
            Ok(rep)
        }
        Command::Char { n, tau, class } => {
            let size = class.size() as usize;
            if size > *n {
                return Err(Error::SizeMismatch(format!("class ({class}) is larger than N={n}")));
            }
            let mut parts = class.parts().to_vec();
            parts.extend(std::iter::repeat_n(1, n - size));
            let class = Partition::from_unsorted(parts);
            let v = character(tau, &class)?;
            Ok(Report::new(
                json!({ "n": n, "tau": tau, "class": class, "value": v.to_string() }),
                format!("{v}\n"),
            ))
        }
        Command::Avgchar { tau, blocks, subset } => {
            if subset.contains(&0) {
                return Err(Error::InvalidArgument("--subset indices are 1-based".into()));
            }
            let spec = AveragedCharacterSpec::new(blocks.clone(), subset.iter().map(|a| a - 1).collect())?;
            let v = averaged_character_with(tau, &spec, settings)?;
            let s = crate::arith::ThetaMode::Symbolic.rational(v).to_string();
            Ok(Report::new(
                json!({ "tau": tau, "blocks": blocks, "subset": subset, "value": s }),
                format!("{s}\n"),
            ))
        }
        Command::Catalog3 {
            lambda,
            m,
            theta,
            check,
        } => {
            let entries = n3_catalog(lambda, *m, theta)?;
            let mut pretty = String::new();
            let mut rows = Vec::new();
            for e in &entries {
                let _ = writeln!(pretty, "({}) τ=({}) {} ×{}\n    led by {}", e.item, e.tau, e.value, e.mult, e.leading);
                rows.push(Row {
                    n: "3".into(),
                    lambda: lambda.to_string(),
                    tau: e.tau.to_string(),
                    m: m.to_string(),
                    theta: theta.to_string(),
                    value: e.value.to_string(),
                    mult: e.mult.to_string(),
                    provenance: "closed-form".into(),
                });
            }
            let mut violations = Vec::new();
            let mut verdicts = Vec::new();
            if *check {
                verdicts = check_catalog(lambda, *m, theta, settings)?;
                for v in &verdicts {
                    let _ = writeln!(pretty, "{} {}", if v.ok { "ok  " } else { "FAIL" }, v.check);
                    if !v.ok {
                        violations.push(v.check.clone());
                    }
                }
            }
            let mut json = json!({ "lambda": lambda, "m": m, "theta": theta.to_string(), "entries": to_json(&entries) });
            if *check {
                json["verdicts"] = to_json(&verdicts);
            }
            Ok(Report {
                json,
                rows,
                pretty,
                violations,
            })
        }
        Command::Verify {
            suite,
            n,
            maxdeg,
            theta,
            seed,
            samples,
        } => {
            let suites = Suite::parse_list(suite).expect("clap restricts suite names");
            let cfg = VerifyConfig {
                n: *n,
                maxdeg: *maxdeg,
                mode: theta.clone(),
                seed: *seed,
                samples: *samples,
                settings: *settings,
            };
            let rep = verify(&suites, &cfg)?;
            let mut pretty = String::new();
            for s in &rep.suites {
                let _ = writeln!(
                    pretty,
                    "{:<14} {:>6} checks, {} violations",
                    s.suite.name(),
                    s.checks,
                    s.violations.len()
                );
            }
            for v in &rep.violations {
                let _ = writeln!(pretty, "  {v}");
            }
            Ok(Report {
                json: to_json(&rep),
                rows: Vec::new(),
                pretty,
                violations: rep.violations.clone(),
            })
        }
    }
}

/// Exit status for a library error: 2 for bad input, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_)
        | Error::Parse(_)
        | Error::SizeMismatch(_)
        | Error::IndexOutOfRange { .. }
        | Error::DimensionMismatch(_)
        | Error::SymbolicCapExceeded { .. } => 2,
        _ => 1,
    }
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Settings from `--cap` and the HP_SYMBOLIC_CAP / HP_MUTATE variables.
pub fn settings_from(cap: Option<usize>, env: &dyn Fn(&str) -> Option<String>) -> Result<Settings, String> {
    let mut settings = Settings::default();
    if let Some(c) = env("HP_SYMBOLIC_CAP") {
        settings.symbolic_cap = c
            .trim()
            .parse()
            .map_err(|_| format!("HP_SYMBOLIC_CAP must be a nonnegative integer, got '{c}'"))?;
    }
    if let Some(c) = cap {
        settings.symbolic_cap = c;
    }
    if let Some(m) = env("HP_MUTATE").filter(|m| !m.trim().is_empty()) {
        settings.mutation = Some(Mutation::parse(&m).ok_or_else(|| format!("unknown HP_MUTATE value '{m}'"))?);
    }
    Ok(settings)
}

/// Run the command line given the arguments (program name first) and an
/// environment lookup.
pub fn run<I, T>(args: I, env: &dyn Fn(&str) -> Option<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let settings = match settings_from(cli.cap, env) {
        Ok(s) => s,
        Err(msg) => {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: {msg}\n"),
            }
        }
    };
    match dispatch(&cli.command, &settings) {
        Ok(rep) => {
            let mut stderr = String::new();
            for v in &rep.violations {
                let _ = writeln!(stderr, "violation: {v}");
            }
            Outcome {
                code: if rep.violations.is_empty() { 0 } else { 1 },
                stdout: rep.emit(cli.format),
                stderr,
            }
        }
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Entry point used by the `hp` binary.
pub fn main_from_env() -> i32 {
    let out = run(std::env::args_os(), &|k| std::env::var(k).ok());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::EigenValue;

    fn hp(args: &str) -> Outcome {
        let argv: Vec<&str> = std::iter::once("hp").chain(args.split_whitespace()).collect();
        run(argv, &|_| None)
    }

    fn json_of(o: &Outcome) -> Value {
        serde_json::from_str(&o.stdout).unwrap()
    }

    #[test]
    fn eig_example() {
        let o = hp("eig --n 3 --lambda 1,1,0 --m 2 --theta 1");
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert_eq!(json_of(&o)["eigenvalue"], "4");
    }

    #[test]
    fn symbolic_emission() {
        let o = hp("eig --n 2 --lambda 2,0 --m 2 --theta sym");
        assert_eq!(json_of(&o)["eigenvalue"], "2*θ + 4");
    }

    #[test]
    fn spectrum_example() {
        let o = hp("spectrum --n 3 --lambda 1,1,0 --m 2 --theta 1");
        assert_eq!(o.code, 0, "{}", o.stderr);
        let v = json_of(&o);
        assert_eq!(v["eigenvalues"], json!([{"value": "4", "mult": 1}, {"value": "10", "mult": 2}]));
    }

    #[test]
    fn char_example() {
        let o = hp("char --n 3 --tau 2,1 --class 3");
        assert_eq!(json_of(&o)["value"], "-1");
    }

    #[test]
    fn csv_header() {
        let o = hp("spectrum --n 3 --lambda 1,1,0 --m 2 --theta 1 --format csv");
        assert_eq!(o.stdout.lines().next().unwrap(), "n,lambda,tau,m,theta,value,mult,provenance");
    }

    #[test]
    fn usage_errors_exit_2() {
        let o = hp("eig --n 3 --lambda 1,2 --m 2");
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("--lambda"), "{}", o.stderr);
        assert_eq!(hp("eig --n 3 --lambda 1 --m 2 --theta x").code, 2);
        assert_eq!(hp("verify nothing").code, 2);
        assert_eq!(hp("spectrum --n 5 --lambda 3,2,1 --m 1 --cap 4").code, 2);
    }

    #[test]
    fn empty_violation_list() {
        let o = hp("verify cms --n 2 --maxdeg 2");
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("\"violations\":[]"));
    }

    #[test]
    fn mutation_flips_exit() {
        let argv = ["hp", "verify", "traces", "--n", "3", "--maxdeg", "2"];
        assert_eq!(run(argv, &|_| None).code, 0);
        let o = run(argv, &|k| (k == "HP_MUTATE").then(|| "t-diag".to_string()));
        assert_eq!(o.code, 1);
    }

    #[test]
    fn eigenvalue_display() {
        let v = EigenValue::Exact(ThetaMode::Symbolic.linear(4, 2));
        assert_eq!(v.to_string(), "2*θ + 4");
    }
}
