//! The `fmetric` command-line front end.
//!
//! [`run`] parses arguments, dispatches, and returns the exit code: 0 when
//! every check passes, 1 when a violation is found, 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::conditions::{
    edelstein_check, kannan_check, orbital_kannan_check, shift_condition_check, ConditionReport,
    PairSample, SampleSource,
};
use crate::corpus::{
    interval_halving, oscillating_orbit_space, rect_b_family, sequence_domain, sequence_space,
    NamedExample, EXAMPLE_IDS, OSC_DEFAULT_DEPTH, SEQUENCE_ENUMERATION_LIMIT,
};
use crate::error::{Error, Result};
use crate::fclass::{altering, generator};
use crate::fspace::{
    alpha_divergence_profile, check_identity_symmetry, min_alpha, verify_d3_with_margin, Witness,
};
use crate::io::load_space;
use crate::reproduce::reproduce;
use crate::solver::{picard, SolveReport, SolveStatus};
use crate::space::{AnalyticSpace, Basis, FiniteSpace, Map, Space};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "fmetric", version, about = "F-metric space verification and fixed-point diagnostics")]
pub struct Cli {
    /// Text (10 significant digits) or one JSON document.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check (D1)-(D3) on a space file.
    Verify {
        file: PathBuf,
        /// Generator name; defaults to the file's witness.
        #[arg(long)]
        f: Option<String>,
        /// Slack constant; defaults to the file's witness.
        #[arg(long)]
        alpha: Option<f64>,
        /// Absolute tolerance added to the right-hand side of (D3).
        #[arg(long, default_value_t = 0.0)]
        margin: f64,
    },
    /// Smallest alpha making (D3) hold for a generator.
    MinAlpha {
        file: Option<PathBuf>,
        /// Built-in finite space instead of a file (only `rect-b`).
        #[arg(long, conflicts_with = "file", requires = "n")]
        example: Option<String>,
        /// Family parameter for `--example rect-b`.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "ln")]
        f: String,
    },
    /// Picard iteration on an example map or a map from a space file.
    Solve {
        #[arg(long, required_unless_present = "file", conflicts_with = "file")]
        example: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        /// Starting point: a real (`0.25`, `7/3`), a basis index (`3`, `e3`) or a file label.
        #[arg(long, allow_hyphen_values = true)]
        x0: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 10_000)]
        max_iter: usize,
        #[command(flatten)]
        size: ExampleSize,
    },
    /// Evaluate a contraction condition on an example.
    Check {
        #[arg(value_enum)]
        condition: ConditionKind,
        #[command(flatten)]
        opts: CheckArgs,
    },
    /// Run the canned expectations of a worked example.
    Reproduce {
        /// One of rect-b, interval-halving, oscillating-orbit, sequence-space.
        id: String,
    },
    /// The (n, min_alpha) series of the rect-b family.
    ProfileAlpha {
        #[arg(long, default_value = "ln")]
        f: String,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct ExampleSize {
    /// Carrier size of `sequence-space`.
    #[arg(long = "N", default_value_t = 1000)]
    pub big_n: u64,
    /// Truncation depth of `oscillating-orbit`.
    #[arg(long, default_value_t = OSC_DEFAULT_DEPTH)]
    pub depth: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConditionKind {
    Edelstein,
    Kannan,
    OrbitalKannan,
    Shift,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub example: String,
    /// Altering distance; defaults to the example's suggestion.
    #[arg(long)]
    pub phi: Option<String>,
    /// Number of random pairs.
    #[arg(long, default_value_t = 1000)]
    pub pairs: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Every pair of the (finite) domain instead of a random sample.
    #[arg(long)]
    pub all_pairs: bool,
    #[command(flatten)]
    pub size: ExampleSize,
    /// Orbit start for orbital-kannan and shift.
    #[arg(long, allow_hyphen_values = true)]
    pub x0: Option<String>,
    /// Orbit pairs for orbital-kannan.
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    #[arg(long, value_delimiter = ',', default_value = "0.5,0.1,0.01")]
    pub eps_grid: Vec<f64>,
    #[arg(long, default_value_t = 50)]
    pub horizon: usize,
    /// δ(ε) = delta_scale · ε.
    #[arg(long, default_value_t = 1.0)]
    pub delta_scale: f64,
}

/// What a command produced.
struct Outcome {
    command: &'static str,
    passed: bool,
    /// 0 or 1; errors never reach an outcome.
    exit: i32,
    text: String,
    payload: Value,
}

impl Outcome {
    fn verdict(command: &'static str, passed: bool, text: String, payload: Value) -> Self {
        Outcome {
            command,
            passed,
            exit: if passed { 0 } else { 1 },
            text,
            payload,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let name = command_name(&cli.command);
    match dispatch(&cli.command) {
        Ok(outcome) => {
            let written = match cli.output {
                OutputFormat::Text => write!(out, "{}", outcome.text),
                OutputFormat::Structured => {
                    let mut doc = serde_json::Map::new();
                    doc.insert("command".into(), json!(outcome.command));
                    doc.insert("passed".into(), json!(outcome.passed));
                    if let Value::Object(fields) = outcome.payload {
                        doc.extend(fields);
                    }
                    writeln!(out, "{}", pretty(&Value::Object(doc)))
                }
            };
            if written.is_err() {
                return 2;
            }
            outcome.exit
        }
        Err(e) => {
            if cli.output == OutputFormat::Structured {
                let doc = json!({"command": name, "passed": false, "error": e.to_string()});
                let _ = writeln!(out, "{}", pretty(&doc));
            }
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap_or_else(|_| v.to_string())
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Verify { .. } => "verify",
        Command::MinAlpha { .. } => "min-alpha",
        Command::Solve { .. } => "solve",
        Command::Check { .. } => "check",
        Command::Reproduce { .. } => "reproduce",
        Command::ProfileAlpha { .. } => "profile-alpha",
    }
}

fn dispatch(c: &Command) -> Result<Outcome> {
    match c {
        Command::Verify {
            file,
            f,
            alpha,
            margin,
        } => cmd_verify(file, f.as_deref(), *alpha, *margin),
        Command::MinAlpha { file, example, n, f } => cmd_min_alpha(file.as_ref(), example.as_deref(), *n, f),
        Command::Solve {
            example,
            file,
            x0,
            tol,
            max_iter,
            size,
        } => cmd_solve(example.as_deref(), file.as_ref(), x0, *tol, *max_iter, *size),
        Command::Check { condition, opts } => cmd_check(*condition, opts),
        Command::Reproduce { id } => cmd_reproduce(id),
        Command::ProfileAlpha { f, from, to } => cmd_profile_alpha(f, *from, *to),
    }
}

/// Formats with 10 significant digits, trailing zeros removed.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let decimals = (9 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        let s = format!("{x:.9e}");
        let (mantissa, e) = s.split_once('e').unwrap_or((&s, "0"));
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{mantissa}e{e}")
    }
}

fn pass_word(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "FAIL"
    }
}

/// Parses `7/3`, `-2`, `0.25`.
pub fn parse_real(s: &str) -> Result<f64> {
    let bad = || Error::Parse(format!("`{s}` is not a real number or fraction"));
    let v = match s.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|_| bad())?;
            let den: f64 = den.trim().parse().map_err(|_| bad())?;
            num / den
        }
        None => s.trim().parse().map_err(|_| bad())?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(bad())
    }
}

/// Parses `3` or `e3`.
pub fn parse_basis(s: &str) -> Result<Basis> {
    let t = s.trim();
    t.strip_prefix('e')
        .unwrap_or(t)
        .parse()
        .map(Basis)
        .map_err(|_| Error::Parse(format!("`{s}` is not a basis index")))
}

fn resolve_witness(file_witness: Option<&crate::io::WitnessSpec>, f: Option<&str>, alpha: Option<f64>) -> Result<Witness> {
    let f_name = f
        .or(file_witness.map(|w| w.f.as_str()))
        .ok_or_else(|| Error::InvalidParameter("no generator: pass --f or add a witness to the file".into()))?;
    let alpha = alpha
        .or(file_witness.map(|w| w.alpha))
        .ok_or_else(|| Error::InvalidParameter("no alpha: pass --alpha or add a witness to the file".into()))?;
    Witness::new(generator(f_name)?, alpha)
}

fn cmd_verify(path: &Path, f: Option<&str>, alpha: Option<f64>, margin: f64) -> Result<Outcome> {
    if !(margin >= 0.0) {
        return Err(Error::InvalidParameter(format!("margin must be non-negative, got {margin}")));
    }
    let file = load_space(path)?;
    let witness = resolve_witness(file.witness.as_ref(), f, alpha)?;
    let space = &file.space;
    let basic = check_identity_symmetry(space);
    let d3 = if basic.passed {
        Some(verify_d3_with_margin(space, &witness, margin)?)
    } else {
        None
    };
    let passed = basic.passed && d3.as_ref().is_some_and(|r| r.passed);

    let mut text = format!("space: {} points\n", space.len());
    text += &format!("D1, D2: {}\n", pass_word(basic.passed));
    for v in &basic.violations {
        text += &format!(
            "  {:?} ({}, {}): {} vs {}\n",
            v.axiom,
            v.labels.0,
            v.labels.1,
            fmt_num(v.lhs),
            fmt_num(v.rhs)
        );
    }
    let header = format!(
        "D3 (f = {}, alpha = {}, margin = {})",
        witness.f.name(),
        fmt_num(witness.alpha),
        fmt_num(margin)
    );
    match &d3 {
        None => text += &format!("{header}: not checked\n"),
        Some(r) => {
            text += &format!("{header}: {}\n", pass_word(r.passed));
            for v in &r.violations {
                text += &format!(
                    "  D3 ({}, {}): f(d) = {} > f(sp) + alpha = {}\n",
                    v.labels.0,
                    v.labels.1,
                    fmt_num(v.lhs),
                    fmt_num(v.rhs)
                );
            }
        }
    }
    text += &format!("result: {}\n", pass_word(passed));
    let reports: Vec<_> = [Some(&basic), d3.as_ref()].into_iter().flatten().collect();
    let payload = json!({
        "points": space.labels(),
        "witness": {"f": witness.f.name(), "alpha": witness.alpha},
        "margin": margin,
        "reports": reports,
    });
    Ok(Outcome::verdict("verify", passed, text, payload))
}

fn finite_example(id: &str, n: usize) -> Result<FiniteSpace> {
    match id {
        "rect-b" => rect_b_family(n),
        other if EXAMPLE_IDS.contains(&other) => Err(Error::InvalidParameter(format!(
            "example `{other}` is not a finite space"
        ))),
        other => Err(Error::UnknownExample(other.to_string())),
    }
}

fn cmd_min_alpha(file: Option<&PathBuf>, example: Option<&str>, n: Option<usize>, f: &str) -> Result<Outcome> {
    let f = generator(f)?;
    let space = match (file, example) {
        (Some(path), None) => load_space(path)?.space,
        (None, Some(id)) => finite_example(id, n.unwrap_or(0))?,
        _ => {
            return Err(Error::InvalidParameter(
                "give either a space file or --example rect-b --n N".into(),
            ))
        }
    };
    let alpha = min_alpha(&space, &f)?;
    let text = format!("min_alpha (f = {}): {}\n", f.name(), fmt_num(alpha));
    let payload = json!({"f": f.name(), "points": space.len(), "min_alpha": alpha});
    Ok(Outcome::verdict("min-alpha", true, text, payload))
}

enum Loaded {
    Real(NamedExample<AnalyticSpace<f64>>),
    Sequence(NamedExample<AnalyticSpace<Basis>>, u64),
}

fn load_example(id: &str, size: ExampleSize) -> Result<Loaded> {
    match id {
        "interval-halving" => Ok(Loaded::Real(interval_halving())),
        "oscillating-orbit" => Ok(Loaded::Real(oscillating_orbit_space(size.depth)?)),
        "sequence-space" => Ok(Loaded::Sequence(sequence_space(size.big_n)?, size.big_n)),
        "rect-b" => Err(Error::InvalidParameter("example `rect-b` has no self-map".into())),
        other => Err(Error::UnknownExample(other.to_string())),
    }
}

fn solve_outcome<S: Space>(
    space: &S,
    report: &SolveReport<S::Point>,
    point_json: impl Fn(&S::Point) -> Value,
) -> Outcome {
    let mut text = format!("status: {}\n", status_name(report.status));
    if let Some(z) = &report.fixed_point {
        text += &format!("fixed_point: {}\n", label_num(space, z));
    }
    if let Some(r) = report.residual {
        text += &format!("residual: {}\n", fmt_num(r));
    }
    text += &format!("iterations: {}\n", report.iterations);
    if let Some(cycle) = &report.cycle {
        let labels: Vec<String> = cycle.iter().map(|p| label_num(space, p)).collect();
        text += &format!("cycle: {}\n", labels.join(" -> "));
    }
    let payload = json!({
        "status": report.status,
        "fixed_point": report.fixed_point.as_ref().map(&point_json),
        "residual": report.residual,
        "iterations": report.iterations,
        "cycle": report.cycle.as_ref().map(|c| c.iter().map(&point_json).collect::<Vec<_>>()),
    });
    Outcome::verdict("solve", report.status == SolveStatus::Converged, text, payload)
}

fn status_name(s: SolveStatus) -> &'static str {
    match s {
        SolveStatus::Converged => "converged",
        SolveStatus::CycleDetected => "cycle_detected",
        SolveStatus::BudgetExhausted => "budget_exhausted",
    }
}

/// A point label, reformatted to 10 significant digits when it is a number.
fn label_num<S: Space>(space: &S, p: &S::Point) -> String {
    let label = space.label(p);
    match label.parse::<f64>() {
        Ok(v) => fmt_num(v),
        Err(_) => label,
    }
}

fn cmd_solve(
    example: Option<&str>,
    file: Option<&PathBuf>,
    x0: &str,
    tol: f64,
    max_iter: usize,
    size: ExampleSize,
) -> Result<Outcome> {
    if max_iter == 0 {
        return Err(Error::InvalidParameter("max-iter must be at least 1".into()));
    }
    if let Some(path) = file {
        let f = load_space(path)?;
        let spec = f
            .map
            .ok_or_else(|| Error::Parse(format!("{}: no `map` field", path.display())))?;
        let map = spec.on_space(&f.space)?;
        let start = f
            .space
            .index_of(x0)
            .ok_or_else(|| Error::NotInCarrier(x0.to_string()))?;
        let report = picard(&f.space, &map, &start, tol, max_iter)?;
        let labels = f.space.labels().to_vec();
        return Ok(solve_outcome(&f.space, &report, |&i| json!(labels[i])));
    }
    match load_example(example.unwrap_or_default(), size)? {
        Loaded::Real(ex) => {
            let report = picard(&ex.space, ex.map(), &parse_real(x0)?, tol, max_iter)?;
            Ok(solve_outcome(&ex.space, &report, |x| json!(x)))
        }
        Loaded::Sequence(ex, _) => {
            let report = picard(&ex.space, ex.map(), &parse_basis(x0)?, tol, max_iter)?;
            Ok(solve_outcome(&ex.space, &report, |b| json!(b.to_string())))
        }
    }
}

const TEXT_VIOLATION_LIMIT: usize = 10;

fn condition_outcome(report: &ConditionReport, phi: &str, detail: String) -> Outcome {
    let source = match report.source {
        SampleSource::Random { seed } => format!("random (seed {seed})"),
        SampleSource::Grid => "grid".into(),
        SampleSource::Orbit => "orbit".into(),
        SampleSource::AllPairs => "all pairs".into(),
        SampleSource::Explicit => "explicit".into(),
    };
    let mut text = format!("condition: {} (phi = {phi})\n", report.condition);
    if !detail.is_empty() {
        text += &format!("{detail}\n");
    }
    text += &format!("sample: {source}\nchecked: {}\n", report.checked);
    text += &format!("violations: {}\n", report.violations.len());
    for v in report.violations.iter().take(TEXT_VIOLATION_LIMIT) {
        let at = match v.shift {
            Some(s) => format!(" i={} j={} eps={}", s.i, s.j, fmt_num(s.eps)),
            None => String::new(),
        };
        text += &format!(
            "  #{} ({}, {}){at}: lhs {} rhs {}\n",
            v.index,
            v.pair.0,
            v.pair.1,
            fmt_num(v.lhs),
            fmt_num(v.rhs)
        );
    }
    if report.violations.len() > TEXT_VIOLATION_LIMIT {
        text += &format!("  ... {} more\n", report.violations.len() - TEXT_VIOLATION_LIMIT);
    }
    text += &format!(
        "margin_min: {}\nresult: {}\n",
        report.margin_min.map_or("none".into(), fmt_num),
        pass_word(report.passed)
    );
    let payload = json!({ "phi": phi, "report": report });
    Outcome::verdict("check", report.passed, text, payload)
}

fn run_condition<S: Space>(
    kind: ConditionKind,
    opts: &CheckArgs,
    space: &S,
    map: &Map<S::Point>,
    phi_name: &str,
    sample: impl FnOnce() -> Result<PairSample<S::Point>>,
    x0: S::Point,
) -> Result<Outcome>
where
    S::Point: 'static,
{
    let phi = altering(phi_name)?;
    let report = match kind {
        ConditionKind::Edelstein => edelstein_check(space, map, &phi, &sample()?)?,
        ConditionKind::Kannan => kannan_check(space, map, &phi, &sample()?)?,
        ConditionKind::OrbitalKannan => orbital_kannan_check(space, map, &phi, &x0, opts.count)?,
        ConditionKind::Shift => {
            if !(opts.delta_scale > 0.0) {
                return Err(Error::InvalidParameter("delta-scale must be positive".into()));
            }
            let scale = opts.delta_scale;
            shift_condition_check(space, map, &phi, &x0, |e| scale * e, &opts.eps_grid, opts.horizon)?
        }
    };
    let detail = match kind {
        ConditionKind::OrbitalKannan => format!("x0: {}", label_num(space, &x0)),
        ConditionKind::Shift => format!(
            "x0: {}, delta(eps) = {} * eps, horizon {}",
            label_num(space, &x0),
            fmt_num(opts.delta_scale),
            opts.horizon
        ),
        _ => String::new(),
    };
    Ok(condition_outcome(&report, phi_name, detail))
}

fn cmd_check(kind: ConditionKind, opts: &CheckArgs) -> Result<Outcome> {
    let loaded = load_example(&opts.example, opts.size)?;
    match loaded {
        Loaded::Real(ex) => {
            let phi = phi_name(opts, &ex);
            let default_x0 = if ex.id == "oscillating-orbit" { 7.0 / 3.0 } else { 0.0 };
            let x0 = opts.x0.as_deref().map_or(Ok(default_x0), parse_real)?;
            let sample = || match ex.space.points() {
                Some(points) if opts.all_pairs => Ok(PairSample::all_pairs(&points)),
                Some(points) => {
                    let lead: Vec<(f64, f64)> = landmark_pairs(&ex.landmarks);
                    Ok(PairSample::random_from(&points, opts.pairs, opts.seed).with_leading(lead))
                }
                None if opts.all_pairs => Err(Error::InvalidParameter(format!(
                    "--all-pairs needs a finite carrier; `{}` is an interval",
                    ex.id
                ))),
                None => Ok(PairSample::random_interval(0.0, 1.0, opts.pairs, opts.seed)),
            };
            run_condition(kind, opts, &ex.space, ex.map(), &phi, sample, x0)
        }
        Loaded::Sequence(ex, n) => {
            let phi = phi_name(opts, &ex);
            let x0 = opts.x0.as_deref().map_or(Ok(Basis(1)), parse_basis)?;
            let sample = || {
                if n / 3 > SEQUENCE_ENUMERATION_LIMIT {
                    return Err(Error::InvalidParameter(format!(
                        "N = {n} is too large for pair sampling"
                    )));
                }
                let domain = sequence_domain(n);
                Ok(if opts.all_pairs {
                    PairSample::all_pairs(&domain)
                } else {
                    PairSample::random_from(&domain, opts.pairs, opts.seed)
                })
            };
            run_condition(kind, opts, &ex.space, ex.map(), &phi, sample, x0)
        }
    }
}

fn phi_name<S: Space>(opts: &CheckArgs, ex: &NamedExample<S>) -> String {
    opts.phi.clone().unwrap_or_else(|| {
        ex.suggested_phi
            .as_ref()
            .map_or("id".to_string(), |p| p.name().to_string())
    })
}

fn landmark_pairs<P: Clone>(landmarks: &[P]) -> Vec<(P, P)> {
    let mut out = Vec::new();
    for (i, a) in landmarks.iter().enumerate() {
        for b in &landmarks[i + 1..] {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

fn cmd_reproduce(id: &str) -> Result<Outcome> {
    let results = reproduce(id)?;
    let passed = results.iter().all(|e| e.passed);
    let mut text = String::new();
    for e in &results {
        text += &format!("{} {}: {}\n", pass_word(e.passed), e.name, e.detail);
    }
    text += &format!(
        "{id}: {}/{} expectations pass\n",
        results.iter().filter(|e| e.passed).count(),
        results.len()
    );
    let payload = json!({ "example": id, "expectations": results });
    Ok(Outcome::verdict("reproduce", passed, text, payload))
}

fn cmd_profile_alpha(f: &str, from: usize, to: usize) -> Result<Outcome> {
    let f = generator(f)?;
    if from < 2 || from > to {
        return Err(Error::InvalidParameter(format!(
            "range needs 2 <= from <= to, got from {from} to {to}"
        )));
    }
    let rows = alpha_divergence_profile(rect_b_family, &f, from..=to)?;
    let mut text = "n\talpha_min\n".to_string();
    for (n, a) in &rows {
        text += &format!("{n}\t{}\n", fmt_num(*a));
    }
    let payload = json!({
        "f": f.name(),
        "columns": ["n", "alpha_min"],
        "rows": rows,
    });
    Ok(Outcome::verdict("profile-alpha", true, text, payload))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ten_significant_digits() {
        assert_eq!(fmt_num(2.0 / 3.0), "0.6666666667");
        assert_eq!(fmt_num(250f64.ln()), "5.521460918");
        assert_eq!(fmt_num(4.0), "4");
        assert_eq!(fmt_num(-0.25), "-0.25");
        assert_eq!(fmt_num(1.5e-7), "1.5e-7");
        assert_eq!(fmt_num(0.0), "0");
        assert_eq!(fmt_num(123456.0), "123456");
    }

    #[test]
    fn point_parsing() {
        assert_eq!(parse_real("7/3").unwrap(), 7.0 / 3.0);
        assert_eq!(parse_real("-2").unwrap(), -2.0);
        assert!(parse_real("1/0").is_err());
        assert!(parse_real("x").is_err());
        assert_eq!(parse_basis("e4").unwrap(), Basis(4));
        assert_eq!(parse_basis("4").unwrap(), Basis(4));
        assert!(parse_basis("-1").is_err());
    }
}
