//! Command-line front end: JSON reports on stdout, a one-line summary on stderr.
//!
//! Exit codes: 0 computed, 2 input error, 3 resource or semantic error.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::autos::{AutError, AutGroup, AutSpec, FieldAutomorphism};
use crate::field::CoefField;
use crate::groups::{GroupError, Perm, PermGroup, DEFAULT_CAP};
use crate::noether::{self, AuditOptions, NoetherError};
use crate::poly::symmetric_reduce;
use crate::ratfunc::RatFuncError;
use crate::text::parse_ratfunc;

pub const CAP_ENV: &str = "NOETHER_CAP";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("{0}")]
    Semantic(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Semantic(_) | CliError::Io(_) => 3,
        }
    }
}

impl From<AutError> for CliError {
    fn from(e: AutError) -> Self {
        match e {
            AutError::InvalidSpec(_) | AutError::ArityMismatch { .. } | AutError::FieldMismatch(..) => {
                CliError::Input(e.to_string())
            }
            AutError::Group(g) => g.into(),
            AutError::RatFunc(r) => r.into(),
            other => CliError::Semantic(other.to_string()),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::CapExceeded(_) | GroupError::Unsupported(_) => CliError::Semantic(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<RatFuncError> for CliError {
    fn from(e: RatFuncError) -> Self {
        match e {
            RatFuncError::Poly(p) => CliError::Input(p.to_string()),
            other => CliError::Semantic(other.to_string()),
        }
    }
}

impl From<NoetherError> for CliError {
    fn from(e: NoetherError) -> Self {
        match e {
            NoetherError::UnknownCheckId(_) | NoetherError::InvalidInput(_) => CliError::Input(e.to_string()),
            NoetherError::Aut(a) => a.into(),
            NoetherError::Group(g) => g.into(),
            NoetherError::RatFunc(r) => r.into(),
            NoetherError::CharDividesOrder { .. } => CliError::Semantic(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Classify,
    Invariants,
    Act,
    Audit,
    Witnesses,
}

#[derive(Debug, Parser)]
#[command(name = "noether-forge", version, about = "Invariant fields and Noether solutions of K(t1..tn)")]
pub struct Args {
    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Common {
    /// Number of variables.
    #[arg(long)]
    pub n: Option<usize>,
    /// Coefficient field: Q or Fp:P.
    #[arg(long, default_value = "Q")]
    pub field: String,
    /// Closure cap (overrides NOETHER_CAP).
    #[arg(long)]
    pub cap: Option<usize>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Classify a group given by generators, a vertical base, or both.
    Classify {
        #[command(flatten)]
        common: Common,
        /// JSON list of automorphism specs, e.g. '[{"perm":[2,3,1]}]'.
        #[arg(long)]
        group: Option<String>,
        /// JSON list of base exponents, e.g. '[2,2]'.
        #[arg(long)]
        vertical: Option<String>,
    },
    /// Elementary symmetric generators, Reynolds average and reduction.
    Invariants {
        #[command(flatten)]
        common: Common,
        #[arg(long = "fn")]
        function: Option<String>,
    },
    /// Apply one automorphism to a function.
    Act {
        #[command(flatten)]
        common: Common,
        /// JSON automorphism spec, e.g. '{"perm":[2,3,1]}'.
        #[arg(long)]
        aut: String,
        #[arg(long = "fn")]
        function: String,
    },
    /// Run brute-force audits of finite claims.
    Audit {
        #[command(flatten)]
        common: Common,
        /// Comma-separated check ids or "all".
        #[arg(long, default_value = "all")]
        checks: String,
        /// Letters for sym-free-rank.
        #[arg(long, default_value_t = 3)]
        m: usize,
    },
    /// Solution and non-solution families on n >= 3 letters.
    Witnesses {
        #[command(flatten)]
        common: Common,
    },
}

impl Cmd {
    pub fn command(&self) -> Command {
        match self {
            Cmd::Classify { .. } => Command::Classify,
            Cmd::Invariants { .. } => Command::Invariants,
            Cmd::Act { .. } => Command::Act,
            Cmd::Audit { .. } => Command::Audit,
            Cmd::Witnesses { .. } => Command::Witnesses,
        }
    }

    fn common(&self) -> &Common {
        match self {
            Cmd::Classify { common, .. }
            | Cmd::Invariants { common, .. }
            | Cmd::Act { common, .. }
            | Cmd::Audit { common, .. }
            | Cmd::Witnesses { common } => common,
        }
    }
}

/// Output of one command: the JSON body and the stderr summary line.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub body: Value,
    pub summary: String,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn parse_field(s: &str) -> Result<CoefField, CliError> {
    s.parse::<CoefField>().map_err(|e| CliError::Input(format!("bad --field `{s}`: {e}")))
}

pub fn resolve_cap(flag: Option<usize>, env: Option<String>) -> Result<usize, CliError> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match env {
        Some(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("{CAP_ENV} must be a positive integer, got `{s}`"))),
        None => Ok(DEFAULT_CAP),
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(flag: &str, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("SchemaError in --{flag}: {e}")))
}

fn require_n(common: &Common) -> Result<usize, CliError> {
    match common.n {
        Some(0) => Err(CliError::Input("--n must be at least 1".into())),
        Some(n) => Ok(n),
        None => Err(CliError::Input("--n is required".into())),
    }
}

fn cmd_classify(common: &Common, group: Option<&str>, vertical: Option<&str>, cap: usize) -> Result<Output, CliError> {
    let field = parse_field(&common.field)?;
    let mvec: Option<Vec<u64>> = vertical.map(|v| parse_json("vertical", v)).transpose()?;
    let specs: Option<Vec<AutSpec>> = group.map(|g| parse_json("group", g)).transpose()?;
    let n = match (&mvec, common.n) {
        (Some(m), Some(n)) if m.len() != n => {
            return Err(CliError::Input(format!("--vertical has {} entries but --n is {n}", m.len())))
        }
        (Some(m), _) => m.len(),
        (None, _) => require_n(common)?,
    };
    let report = match (specs, mvec) {
        (None, None) => return Err(CliError::Input("classify needs --group and/or --vertical".into())),
        (None, Some(m)) => noether::classify_vertical(&m, field, cap)?,
        (Some(specs), mvec) => {
            let gens: Vec<FieldAutomorphism> = specs.iter().map(|s| s.build(n, field)).collect::<Result<_, _>>()?;
            let perms: Option<Vec<Perm>> = gens.iter().map(|a| a.as_permutation()).collect();
            match (perms, mvec) {
                (Some(perms), None) => {
                    let g = PermGroup::closure(n, &perms, cap)?;
                    noether::classify_permutation_subgroup(&g, field)
                }
                (Some(perms), Some(m)) => {
                    let g = PermGroup::closure(n, &perms, cap)?;
                    noether::classify_separated(&m, &g, field, cap)?
                }
                (None, None) => {
                    let g = AutGroup::closure(n, field, &gens, cap)?;
                    noether::classify_aut_group(&g, None, cap)?
                }
                (None, Some(_)) => {
                    return Err(CliError::Input(
                        "with --vertical, --group must list permutations of the base".into(),
                    ))
                }
            }
        }
    };
    let summary = format!(
        "classify: {:?} (order {}, transitive {}) {}",
        report.verdict, report.group_order, report.transitive, report.citation
    );
    Ok(Output {
        body: to_value(&report),
        summary,
    })
}

fn cmd_invariants(common: &Common, function: Option<&str>) -> Result<Output, CliError> {
    let field = parse_field(&common.field)?;
    let n = require_n(common)?;
    let generators: Vec<String> = noether::sym_generators(n, field).iter().map(|g| g.to_string()).collect();
    let mut body = json!({ "n": n, "field": field.to_string(), "generators": generators });
    let mut summary = format!("invariants: {n} generators");
    if let Some(text) = function {
        let f = parse_ratfunc(text, n, field).map_err(|e| CliError::Input(e.to_string()))?;
        let sym = AutGroup::from_perm_group(&PermGroup::symmetric(n), field);
        let avg = noether::reynolds(&f, &sym)?;
        body["function"] = json!(f.to_string());
        body["reynolds"] = json!(avg.to_string());
        let (source, target) = if f.is_polynomial() && noether::is_invariant(&f, &sym)? {
            ("function", Some(&f))
        } else if avg.is_polynomial() {
            ("reynolds", Some(&avg))
        } else {
            ("none", None)
        };
        body["reduction"] = match target {
            Some(p) => {
                let r = symmetric_reduce(p.num());
                debug_assert!(r.is_symmetric());
                summary.push_str(&format!(", expression {}", r.expression.to_string_with("e")));
                json!({ "source": source, "expression": r.expression.to_string_with("e") })
            }
            None => Value::Null,
        };
    }
    Ok(Output { body, summary })
}

fn cmd_act(common: &Common, aut: &str, function: &str) -> Result<Output, CliError> {
    let field = parse_field(&common.field)?;
    let spec: AutSpec = parse_json("aut", aut)?;
    let f_probe_n = common.n;
    let a = match f_probe_n {
        Some(n) => spec.build(n, field)?,
        None => {
            let n = infer_n(&spec).ok_or_else(|| CliError::Input("--n is required for this automorphism".into()))?;
            spec.build(n, field)?
        }
    };
    let f = parse_ratfunc(function, a.nvars(), field).map_err(|e| CliError::Input(e.to_string()))?;
    let image = a.apply(&f)?;
    let fixed = image == f;
    Ok(Output {
        summary: format!("act: {f} -> {image} (fixed {fixed})"),
        body: json!({ "image": image.to_string(), "fixed": fixed }),
    })
}

/// Number of variables implied by a spec, when it carries one.
fn infer_n(spec: &AutSpec) -> Option<usize> {
    use crate::autos::PermSpec;
    let from_perm = |p: &PermSpec| match p {
        PermSpec::Images(v) => Some(v.len()),
        PermSpec::Cycles(_) => None,
    };
    match spec {
        AutSpec::Perm(p) => from_perm(p),
        AutSpec::Linear(l) => Some(l.a.len()),
        AutSpec::Monomial(e) => Some(e.len()),
        AutSpec::Vertical(v) => Some(v.m.len()),
        AutSpec::Reciprocal(_) => None,
        AutSpec::Involution(i) => i.perm.as_ref().and_then(from_perm),
    }
}

fn cmd_audit(common: &Common, checks: &str, m: usize, cap: usize) -> Result<Output, CliError> {
    let ids: Vec<String> = checks
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    if ids.is_empty() {
        return Err(CliError::Input("--checks is empty".into()));
    }
    let opts = AuditOptions {
        m,
        n: common.n.unwrap_or(3),
        cap,
    };
    let findings = noether::audit_paper(&ids, &opts)?;
    let flagged: Vec<&str> = findings.iter().filter(|f| f.discrepancy).map(|f| f.check_id.as_str()).collect();
    Ok(Output {
        summary: format!("audit: {} checks, {} discrepancies {:?}", findings.len(), flagged.len(), flagged),
        body: to_value(&findings),
    })
}

fn cmd_witnesses(common: &Common, cap: usize) -> Result<Output, CliError> {
    let field = parse_field(&common.field)?;
    let n = common.n.unwrap_or(3);
    let w = noether::witnesses_theorem_1_8(n, field, cap)?;
    Ok(Output {
        summary: format!(
            "witnesses: n = {n}, {} solutions, {} non-solutions",
            w.solutions.len(),
            w.non_solutions.len()
        ),
        body: to_value(&w),
    })
}

/// Runs one parsed command with an explicit cap environment value.
pub fn execute(cmd: &Cmd, env_cap: Option<String>) -> Result<Output, CliError> {
    let cap = resolve_cap(cmd.common().cap, env_cap)?;
    if cap == 0 {
        return Err(CliError::Input("cap must be positive".into()));
    }
    match cmd {
        Cmd::Classify { common, group, vertical } => cmd_classify(common, group.as_deref(), vertical.as_deref(), cap),
        Cmd::Invariants { common, function } => cmd_invariants(common, function.as_deref()),
        Cmd::Act { common, aut, function } => cmd_act(common, aut, function),
        Cmd::Audit { common, checks, m } => cmd_audit(common, checks, *m, cap),
        Cmd::Witnesses { common } => cmd_witnesses(common, cap),
    }
}

/// Parses `argv`, runs the command, writes output, and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = execute(&args.command, std::env::var(CAP_ENV).ok()).and_then(|out| {
        let text = serde_json::to_string_pretty(&out.body).expect("json") + "\n";
        match &args.command.common().out {
            Some(path) => std::fs::write(path, text)?,
            None => print!("{text}"),
        }
        eprintln!("{}", out.summary);
        Ok(())
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("noether-forge: {e}");
            e.exit_code()
        }
    }
}
