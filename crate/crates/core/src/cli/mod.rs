//! The `qturan` command line: parameter scans, sign certificates, identity
//! checks and report output.
//!
//! Every command writes a JSON [`Report`] (stdout unless `--out` is given)
//! and optionally a CSV table. The exit status is 0 when every verdict and
//! residual passes, 1 when one fails and 2 for unusable input.

mod grid;
mod report;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

pub use grid::{fmt_rational, parse_grid, parse_values};
pub use report::{point_text, MarginEntry, Point, Report, ResidualEntry, RunConfig, Table, Timing, VerdictEntry};

use crate::conditions::{chain_condition_a, chain_condition_b, derive_cd, majorization_sufficiency, rts_monotonicity_probe};
use crate::error::Error;
use crate::hyperseries::{g_series, heine_f_series, heine_f_tilde_series, Normalization, TruncatedSeries};
use crate::identities::{
    q_to_1_limit_study, verify_bessel_roundtrip, verify_connection_formula, verify_finite_sum_identity,
    verify_kummer_linearization, verify_linearization, verify_rahman_product, verify_recqgamma, Residual,
};
use crate::qcore::{ParamVector, QBase};
use crate::scalar::{parse_rational, BigFloat, Field, QuadRational, Rational};
use crate::turanian::{certify, predicted_g_sign, turan_point_inequality, turanian_series, Family, ShiftPair, TuranianSpec, Verdict};

#[derive(Parser, Debug)]
#[command(name = "qturan", version, about = "q-hypergeometric series, generalized Turanians and q-identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Coefficients of a series family, and truncated sums at given points
    Eval(EvalArgs),
    /// Sign certificate of one Turanian, with its coefficients
    Turanian(TuranianArgs),
    /// Chain conditions, majorization and monotonicity of R_t,s
    Conditions(ConditionsArgs),
    /// Coefficientwise or pointwise check of an identity
    Verify(VerifyArgs),
    /// Sign certificates over a parameter grid
    Scan(ScanArgs),
    /// Summarize a saved report; exits 0 iff it passes
    Report(ReportArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Float,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    HeineF,
    HeineFTilde,
    G,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdentityArg {
    Linearization,
    Kummer,
    FiniteSum,
    Rahman,
    Recqgamma,
    Connection,
    BesselRoundtrip,
    QLimit,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Base q as a rational; exact mode represents q^(1/2) in Q(sqrt d)
    #[arg(long, conflicts_with = "p")]
    pub q: Option<String>,
    /// Half-power p = q^(1/2) as a rational
    #[arg(long)]
    pub p: Option<String>,
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    pub mode: ModeArg,
    /// Decimal digits in float mode
    #[arg(long, env = "QTURAN_DIGITS", default_value_t = 50)]
    pub digits: u32,
    /// Truncation order M
    #[arg(long, default_value_t = 30)]
    pub order: usize,
    /// JSON report path (stdout if absent)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// CSV table path
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Record wall-clock time in the report
    #[arg(long)]
    pub timing: bool,
    /// Worker threads (default: all cores)
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyParams {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Upper parameter exponents of the g family, e.g. 2,3
    #[arg(long)]
    pub a: Option<String>,
    /// Lower parameter exponents of the g family
    #[arg(long)]
    pub b: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct EvalArgs {
    #[command(flatten)]
    pub family: FamilyParams,
    /// Values or start:stop:step grids
    #[arg(long, alias = "mu-grid")]
    pub mu: String,
    /// Points at which to sum the truncated series
    #[arg(long)]
    pub x: Option<String>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct TuranianArgs {
    #[command(flatten)]
    pub family: FamilyParams,
    #[arg(long)]
    pub mu: String,
    #[arg(long, default_value = "1")]
    pub alpha: String,
    #[arg(long, default_value = "1")]
    pub beta: String,
    /// Points for the Turan inequality v(mu+1)^2 against v(mu) v(mu+2)
    #[arg(long)]
    pub x: Option<String>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct ScanArgs {
    #[command(flatten)]
    pub family: FamilyParams,
    #[arg(long, alias = "mu-grid")]
    pub mu: String,
    #[arg(long, alias = "alpha-grid", default_value = "1")]
    pub alpha: String,
    #[arg(long, alias = "beta-grid", default_value = "1")]
    pub beta: String,
    /// Record points outside the theorem's hypotheses as skipped, not failed
    #[arg(long)]
    pub skip_unsupported: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct ConditionsArgs {
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
    /// Grid for the monotonicity probe of R_t,s
    #[arg(long)]
    pub y: Option<String>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub identity: IdentityArg,
    #[arg(long)]
    pub mu: Option<String>,
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub beta: Option<String>,
    #[arg(long)]
    pub nu: Option<String>,
    #[arg(long)]
    pub eta: Option<String>,
    /// Evaluation points (connection, bessel-roundtrip, q-limit)
    #[arg(long)]
    pub x: Option<String>,
    /// Bases approaching 1 for q-limit, e.g. 0.9,0.99,0.999
    #[arg(long)]
    pub q_seq: Option<String>,
    /// Relative tolerance for float residuals
    #[arg(long, default_value = "1e-30")]
    pub rel_tol: String,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct ReportArgs {
    /// A JSON report written by another command
    pub input: PathBuf,
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("qturan: {msg}");
            2
        }
    }
}

type Params = BTreeMap<String, Vec<Rational>>;

#[derive(Default)]
struct Outcome {
    verdicts: Vec<VerdictEntry>,
    residuals: Vec<ResidualEntry>,
    margins: Vec<MarginEntry>,
    table: Option<Table>,
}

fn execute(command: Command) -> Result<i32, String> {
    let (name, common) = match &command {
        Command::Report(args) => return summarize(args),
        Command::Eval(a) => ("eval", &a.common),
        Command::Turanian(a) => ("turanian", &a.common),
        Command::Conditions(a) => ("conditions", &a.common),
        Command::Verify(a) => ("verify", &a.common),
        Command::Scan(a) => ("scan", &a.common),
    };
    let start = Instant::now();
    let params = collect_params(&command)?;
    let base = resolve_base(common)?;
    let mut config = RunConfig {
        command: name.to_string(),
        mode: match common.mode {
            ModeArg::Exact => "exact".into(),
            ModeArg::Float => "float".into(),
        },
        digits: (common.mode == ModeArg::Float).then_some(common.digits),
        q: base.as_ref().map(|b| fmt_rational(&b.q)),
        p: base.as_ref().and_then(|b| b.p.as_ref().map(fmt_rational)),
        order: common.order,
        rel_tol: None,
        params: params.iter().map(|(k, v)| (k.clone(), v.iter().map(fmt_rational).collect())).collect(),
    };
    if let Command::Verify(v) = &command {
        config.rel_tol = Some(v.rel_tol.clone());
    }
    let pool = match common.threads {
        Some(n) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| format!("thread pool: {e}"))?,
        ),
        None => None,
    };
    let body = || -> Result<(Outcome, usize), String> {
        let out = match common.mode {
            ModeArg::Exact => {
                let q = base.as_ref().map(|b| b.exact()).transpose().map_err(|e| e.to_string())?;
                dispatch(&Ctx { like: QuadRational::from_i64(1), q, order: common.order }, &command, &params)?
            }
            ModeArg::Float => {
                let q = base.as_ref().map(|b| b.float(common.digits)).transpose().map_err(|e| e.to_string())?;
                let like = BigFloat::with_digits(&Rational::ONE, common.digits);
                dispatch(&Ctx { like, q, order: common.order }, &command, &params)?
            }
        };
        Ok((out, rayon::current_num_threads()))
    };
    let (outcome, threads) = match &pool {
        Some(p) => p.install(body)?,
        None => body()?,
    };
    let table = outcome.table;
    let report = Report {
        config,
        verdicts: outcome.verdicts,
        residuals: outcome.residuals,
        margins: outcome.margins,
        timing: common.timing.then(|| Timing { elapsed_ms: start.elapsed().as_millis(), threads }),
    };
    for v in report.verdicts.iter().filter(|v| v.error.is_some()) {
        eprintln!("qturan: {} failed at {}: {}", v.check, point_text(&v.point), v.error.as_deref().unwrap_or(""));
    }
    for r in report.residuals.iter().filter(|r| r.error.is_some()) {
        eprintln!("qturan: {} failed at {}: {}", r.identity, point_text(&r.point), r.error.as_deref().unwrap_or(""));
    }
    report::write_text(common.out.as_deref(), &report.to_json()).map_err(|e| format!("writing report: {e}"))?;
    if let Some(path) = &common.csv {
        table
            .unwrap_or_else(|| report.summary_table())
            .write_csv(path)
            .map_err(|e| format!("writing {}: {e}", path.display()))?;
    }
    if common.out.is_some() {
        println!(
            "{name}: {} verdicts, {} residuals, {} failing",
            report.verdicts.len(),
            report.residuals.len(),
            report.failures()
        );
    }
    Ok(if report.passes() { 0 } else { 1 })
}

fn summarize(args: &ReportArgs) -> Result<i32, String> {
    let text = std::fs::read_to_string(&args.input).map_err(|e| format!("reading {}: {e}", args.input.display()))?;
    let report: Report = serde_json::from_str(&text).map_err(|e| format!("{} is not a report: {e}", args.input.display()))?;
    let table = report.summary_table();
    for row in &table.rows {
        println!("{}", row.join("  "));
    }
    println!(
        "{}: {} verdicts, {} residuals, {} failing",
        report.config.command,
        report.verdicts.len(),
        report.residuals.len(),
        report.failures()
    );
    if let Some(path) = &args.csv {
        table.write_csv(path).map_err(|e| format!("writing {}: {e}", path.display()))?;
    }
    Ok(if report.passes() { 0 } else { 1 })
}

fn values(name: &str, text: &str) -> Result<Vec<Rational>, String> {
    let v = parse_values(text).map_err(|e| format!("--{name}: {e}"))?;
    if v.is_empty() {
        return Err(format!("--{name} is empty"));
    }
    Ok(v)
}

fn collect_params(command: &Command) -> Result<Params, String> {
    let mut p = Params::new();
    let mut put = |name: &str, text: Option<&String>| -> Result<(), String> {
        if let Some(t) = text {
            p.insert(name.to_string(), values(name, t)?);
        }
        Ok(())
    };
    match command {
        Command::Eval(a) => {
            put("a", a.family.a.as_ref())?;
            put("b", a.family.b.as_ref())?;
            put("mu", Some(&a.mu))?;
            put("x", a.x.as_ref())?;
        }
        Command::Turanian(a) => {
            put("a", a.family.a.as_ref())?;
            put("b", a.family.b.as_ref())?;
            put("mu", Some(&a.mu))?;
            put("alpha", Some(&a.alpha))?;
            put("beta", Some(&a.beta))?;
            put("x", a.x.as_ref())?;
        }
        Command::Scan(a) => {
            put("a", a.family.a.as_ref())?;
            put("b", a.family.b.as_ref())?;
            put("mu", Some(&a.mu))?;
            put("alpha", Some(&a.alpha))?;
            put("beta", Some(&a.beta))?;
        }
        Command::Conditions(a) => {
            put("a", Some(&a.a))?;
            put("b", Some(&a.b))?;
            put("y", a.y.as_ref())?;
        }
        Command::Verify(a) => {
            put("mu", a.mu.as_ref())?;
            put("alpha", a.alpha.as_ref())?;
            put("beta", a.beta.as_ref())?;
            put("nu", a.nu.as_ref())?;
            put("eta", a.eta.as_ref())?;
            put("x", a.x.as_ref())?;
            put("q_seq", a.q_seq.as_ref())?;
        }
        Command::Report(_) => {}
    }
    Ok(p)
}

/// The base as given on the command line.
struct BaseArg {
    q: Rational,
    /// Set when `--p` was given or `q` is a rational square.
    p: Option<Rational>,
}

impl BaseArg {
    fn exact(&self) -> crate::Result<QBase<QuadRational>> {
        match &self.p {
            Some(p) => QBase::exact_p(p),
            None => QBase::exact_q(&self.q),
        }
    }

    fn float(&self, digits: u32) -> crate::Result<QBase<BigFloat>> {
        match &self.p {
            Some(p) => QBase::float_p(p, digits),
            None => QBase::float_q(&self.q, digits),
        }
    }
}

fn resolve_base(common: &Common) -> Result<Option<BaseArg>, String> {
    let base = if let Some(p) = &common.p {
        let p = parse_rational(p).map_err(|e| format!("--p: {e}"))?;
        BaseArg { q: p.clone() * &p, p: Some(p) }
    } else if let Some(q) = &common.q {
        let q = parse_rational(q).map_err(|e| format!("--q: {e}"))?;
        let p = QuadRational::sqrt_of(&q)
            .ok()
            .filter(|s| s.radicand() == 1)
            .map(|s| s.rational_part().clone());
        BaseArg { q, p }
    } else {
        return Ok(None);
    };
    let (zero, one) = (Rational::ZERO, Rational::ONE);
    if !(base.q > zero && base.q < one) || base.p.as_ref().is_some_and(|p| *p <= zero) {
        return Err(format!("the base must satisfy 0 < q < 1 (and p > 0), got q = {}", fmt_rational(&base.q)));
    }
    Ok(Some(base))
}

struct Ctx<F: Field> {
    like: F,
    q: Option<QBase<F>>,
    order: usize,
}

impl<F: Field> Ctx<F> {
    fn lift(&self, r: &Rational) -> F {
        self.like.lift(r)
    }

    fn q(&self) -> Result<&QBase<F>, String> {
        self.q.as_ref().ok_or_else(|| "this command needs --q or --p".to_string())
    }
}

fn need<'a>(params: &'a Params, name: &str) -> Result<&'a [Rational], String> {
    params.get(name).map(Vec::as_slice).ok_or_else(|| format!("--{} is required here", name.replace('_', "-")))
}

fn single(params: &Params, name: &str) -> Result<Rational, String> {
    match need(params, name)? {
        [v] => Ok(v.clone()),
        many => Err(format!("--{name} takes one value here, got {}; use scan for grids", many.len())),
    }
}

/// Cartesian product of the named lists, first name varying slowest.
fn product(params: &Params, names: &[&str]) -> Result<Vec<Vec<Rational>>, String> {
    let mut out = vec![Vec::new()];
    for name in names {
        let vals = need(params, name)?;
        out = out
            .into_iter()
            .flat_map(|prefix| {
                vals.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v.clone());
                    p
                })
            })
            .collect();
    }
    Ok(out)
}

fn point(names: &[&str], vals: &[Rational]) -> Point {
    names.iter().zip(vals).map(|(n, v)| (n.to_string(), fmt_rational(v))).collect()
}

fn family<F: Field>(ctx: &Ctx<F>, args: &FamilyParams, params: &Params) -> Result<Family<F>, String> {
    Ok(match args.family {
        FamilyArg::HeineF => Family::HeineF,
        FamilyArg::HeineFTilde => Family::HeineFTilde,
        FamilyArg::G => {
            let vec = |name| -> Result<ParamVector<F>, String> {
                let v = need(params, name)?.iter().map(|r| ctx.lift(r)).collect();
                ParamVector::nonneg(v).map_err(|e| format!("--{name}: {e}"))
            };
            Family::GNormalized { a: vec("a")?, b: vec("b")? }
        }
    })
}

fn family_label(f: FamilyArg) -> &'static str {
    match f {
        FamilyArg::HeineF => "heine-f",
        FamilyArg::HeineFTilde => "heine-f-tilde",
        FamilyArg::G => "g",
    }
}

fn verdict_text(v: Verdict) -> String {
    serde_json::to_value(v).ok().and_then(|s| s.as_str().map(String::from)).unwrap_or_default()
}

fn failed(index: usize, check: &str, point: Point, err: impl ToString) -> VerdictEntry {
    VerdictEntry {
        index,
        check: check.to_string(),
        point,
        verdict: None,
        expected: None,
        passes: false,
        error: Some(err.to_string()),
        detail: serde_json::Value::Null,
    }
}

fn residual_entry(index: usize, point: Point, res: Result<Residual, Error>, name: &str, rel_tol: f64) -> ResidualEntry {
    match res {
        Ok(r) => ResidualEntry {
            index,
            identity: r.identity.clone(),
            point,
            max_abs: Some(r.max_abs.to_string()),
            max_rel: Some(r.max_rel.to_string()),
            exact_zero: r.exact_zero,
            order_checked: r.order_checked,
            passes: r.passes(rel_tol),
            error: None,
            notes: r.notes,
        },
        Err(e) => ResidualEntry {
            index,
            identity: name.to_string(),
            point,
            max_abs: None,
            max_rel: None,
            exact_zero: false,
            order_checked: 0,
            passes: false,
            error: Some(e.to_string()),
            notes: Vec::new(),
        },
    }
}

fn dispatch<F: Field>(ctx: &Ctx<F>, command: &Command, params: &Params) -> Result<Outcome, String> {
    match command {
        Command::Eval(a) => eval_cmd(ctx, a, params),
        Command::Turanian(a) => turanian_cmd(ctx, a, params),
        Command::Scan(a) => scan_cmd(ctx, a, params),
        Command::Conditions(_) => conditions_cmd(ctx, params),
        Command::Verify(a) => verify_cmd(ctx, a, params),
        Command::Report(_) => unreachable!("report is handled before dispatch"),
    }
}

fn eval_cmd<F: Field>(ctx: &Ctx<F>, args: &EvalArgs, params: &Params) -> Result<Outcome, String> {
    let q = ctx.q()?;
    let fam = family(ctx, &args.family, params)?;
    let label = family_label(args.family.family);
    let mus = need(params, "mu")?;
    let xs: Vec<F> = params.get("x").map(|v| v.iter().map(|r| ctx.lift(r)).collect()).unwrap_or_default();
    let results: Vec<crate::Result<TruncatedSeries<F>>> = mus
        .par_iter()
        .map(|mu| {
            let mu = ctx.lift(mu);
            match &fam {
                Family::HeineF => heine_f_series(&mu, q, ctx.order),
                Family::HeineFTilde => heine_f_tilde_series(&mu, q, ctx.order, false),
                Family::GNormalized { a, b } => g_series(a, b, &mu, q, ctx.order, &Normalization::Absolute),
            }
        })
        .collect();
    let mut out = Outcome { table: Some(Table::new(&["family", "mu", "q", "m", "coefficient"])), ..Default::default() };
    let qtext = q.q().to_string();
    for (i, (mu, res)) in mus.iter().zip(results).enumerate() {
        let pt = point(&["mu"], std::slice::from_ref(mu));
        let series = match res {
            Ok(s) => s,
            Err(e) => {
                out.verdicts.push(failed(i, "eval", pt, e));
                continue;
            }
        };
        let table = out.table.as_mut().expect("table");
        for (m, c) in series.coeffs().iter().enumerate() {
            table.push(vec![label.into(), fmt_rational(mu), qtext.clone(), m.to_string(), c.to_string()]);
        }
        for (x, xr) in xs.iter().zip(&params["x"]) {
            let mut pt = pt.clone();
            pt.insert("x".into(), fmt_rational(xr));
            match series.eval(x) {
                Ok(v) => out.margins.push(MarginEntry {
                    index: i,
                    label: "truncated-sum".into(),
                    point: pt,
                    value: v.to_string(),
                    error_bound: None,
                }),
                Err(e) => out.verdicts.push(failed(i, "eval", pt, e)),
            }
        }
    }
    Ok(out)
}

/// Direction of `v(mu+1)^2 - v(mu) v(mu+2)` predicted for the family.
fn turan_pair<F: Field>(spec: &TuranianSpec<F>) -> crate::Result<ShiftPair> {
    let v = match spec.family {
        Family::HeineF => Verdict::AllStrictlyNeg,
        Family::HeineFTilde => Verdict::AllStrictlyPos,
        Family::GNormalized { .. } => predicted_g_sign(spec)?.2,
    };
    Ok(match v {
        Verdict::AllStrictlyNeg | Verdict::AllNonPos => ShiftPair::Inverse,
        _ => ShiftPair::Direct,
    })
}

fn sign_entry(index: usize, pt: Point, res: crate::Result<crate::turanian::SignReport>, skip: bool) -> (VerdictEntry, Option<MarginEntry>) {
    match res {
        Ok(r) => {
            let margin = MarginEntry {
                index,
                label: "min_margin".into(),
                point: pt.clone(),
                value: r.min_margin.to_string(),
                error_bound: None,
            };
            let entry = VerdictEntry {
                index,
                check: "sign-certificate".into(),
                point: pt,
                verdict: Some(verdict_text(r.verdict)),
                expected: r.expected.map(verdict_text),
                passes: r.matches_expected,
                error: None,
                detail: serde_json::to_value(&r).unwrap_or_default(),
            };
            (entry, Some(margin))
        }
        Err(Error::Hypothesis(msg)) if skip => {
            let entry = VerdictEntry {
                index,
                check: "sign-certificate".into(),
                point: pt,
                verdict: Some("skipped".into()),
                expected: None,
                passes: true,
                error: None,
                detail: serde_json::Value::String(msg),
            };
            (entry, None)
        }
        Err(e) => (failed(index, "sign-certificate", pt, e), None),
    }
}

fn turanian_cmd<F: Field>(ctx: &Ctx<F>, args: &TuranianArgs, params: &Params) -> Result<Outcome, String> {
    let q = ctx.q()?;
    let fam = family(ctx, &args.family, params)?;
    let label = family_label(args.family.family);
    let vals = [single(params, "mu")?, single(params, "alpha")?, single(params, "beta")?];
    let names = ["mu", "alpha", "beta"];
    let pt = point(&names, &vals);
    let spec = TuranianSpec::new(fam.clone(), ctx.lift(&vals[0]), ctx.lift(&vals[1]), ctx.lift(&vals[2]), q.clone(), ctx.order);
    let mut out = Outcome::default();
    let (entry, margin) = sign_entry(0, pt.clone(), certify(&spec), false);
    out.verdicts.push(entry);
    out.margins.extend(margin);
    let mut table = Table::new(&["family", "mu", "alpha", "beta", "q", "m", "coefficient", "radius"]);
    if let Ok(series) = turanian_series(&spec) {
        let fixed: Vec<String> = vals.iter().map(fmt_rational).collect();
        for (m, (c, r)) in series.center.coeffs().iter().zip(&series.radius).enumerate() {
            let mut row = vec![label.to_string()];
            row.extend(fixed.iter().cloned());
            row.extend([q.q().to_string(), m.to_string(), c.to_string(), r.to_string()]);
            table.push(row);
        }
    }
    out.table = Some(table);
    if let Some(xs) = params.get("x") {
        let pair = match turan_pair(&spec) {
            Ok(p) => p,
            Err(e) => {
                out.verdicts.push(failed(1, "turan-point", pt, e));
                return Ok(out);
            }
        };
        let checks: Vec<_> = xs
            .par_iter()
            .map(|x| turan_point_inequality(&fam, &spec.mu, &ctx.lift(x), q, pair))
            .collect();
        for (i, (x, res)) in xs.iter().zip(checks).enumerate() {
            let mut p = pt.clone();
            p.insert("x".into(), fmt_rational(x));
            match res {
                Ok(c) => {
                    out.margins.push(MarginEntry {
                        index: i + 1,
                        label: "turan-point".into(),
                        point: p.clone(),
                        value: c.margin.to_string(),
                        error_bound: Some(c.error_bound.to_string()),
                    });
                    out.verdicts.push(VerdictEntry {
                        index: i + 1,
                        check: "turan-point".into(),
                        point: p,
                        verdict: Some(if c.strict { "strict" } else if c.holds { "holds" } else { "violated" }.into()),
                        expected: Some(serde_json::to_value(pair).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default()),
                        passes: c.holds,
                        error: None,
                        detail: serde_json::to_value(&c).unwrap_or_default(),
                    });
                }
                Err(e) => out.verdicts.push(failed(i + 1, "turan-point", p, e)),
            }
        }
    }
    Ok(out)
}

fn scan_cmd<F: Field>(ctx: &Ctx<F>, args: &ScanArgs, params: &Params) -> Result<Outcome, String> {
    let q = ctx.q()?;
    let fam = family(ctx, &args.family, params)?;
    let label = family_label(args.family.family);
    let names = ["mu", "alpha", "beta"];
    let points = product(params, &names)?;
    let reports: Vec<_> = points
        .par_iter()
        .map(|v| {
            let spec = TuranianSpec::new(fam.clone(), ctx.lift(&v[0]), ctx.lift(&v[1]), ctx.lift(&v[2]), q.clone(), ctx.order);
            certify(&spec)
        })
        .collect();
    let mut out = Outcome::default();
    let mut table = Table::new(&["family", "mu", "alpha", "beta", "q", "verdict", "expected", "passes", "min_margin"]);
    for (i, (v, res)) in points.iter().zip(reports).enumerate() {
        let (entry, margin) = sign_entry(i, point(&names, v), res, args.skip_unsupported);
        let mut row = vec![label.to_string()];
        row.extend(v.iter().map(fmt_rational));
        row.extend([
            q.q().to_string(),
            entry.verdict.clone().or_else(|| entry.error.clone()).unwrap_or_default(),
            entry.expected.clone().unwrap_or_default(),
            entry.passes.to_string(),
            margin.as_ref().map(|m| m.value.clone()).unwrap_or_default(),
        ]);
        table.push(row);
        out.verdicts.push(entry);
        out.margins.extend(margin);
    }
    out.table = Some(table);
    Ok(out)
}

fn conditions_cmd<F: Field>(ctx: &Ctx<F>, params: &Params) -> Result<Outcome, String> {
    let q = ctx.q()?;
    let lift_all = |name| -> Result<ParamVector<F>, String> {
        let v = need(params, name)?.iter().map(|r| ctx.lift(r)).collect();
        ParamVector::nonneg(v).map_err(|e| format!("--{name}: {e}"))
    };
    let (a, b) = (lift_all("a")?, lift_all("b")?);
    let (c, d) = derive_cd(&a, &b, q).map_err(|e| e.to_string())?;
    let (t, s) = (c.len(), d.len());
    let mut out = Outcome::default();
    let case_a = if s <= t && t <= s + 1 { chain_condition_a(&c, &d).ok() } else { None };
    let case_b = if t <= s { chain_condition_b(&c, &d).ok() } else { None };
    let which = match (case_a == Some(true), case_b == Some(true)) {
        (true, true) => "both",
        (true, false) => "case_a",
        (false, true) => "case_b",
        (false, false) => "neither",
    };
    let show = |v: &[F]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    out.verdicts.push(VerdictEntry {
        index: 0,
        check: "chain-conditions".into(),
        point: Point::new(),
        verdict: Some(which.into()),
        expected: None,
        passes: true,
        error: None,
        detail: serde_json::json!({ "c": show(&c), "d": show(&d), "case_a": case_a, "case_b": case_b }),
    });
    out.verdicts.push(match majorization_sufficiency(&c, &d) {
        Ok(v) => VerdictEntry {
            index: 1,
            check: "majorization".into(),
            point: Point::new(),
            verdict: Some(if v.via_majorization { "witness" } else { "no_witness" }.into()),
            expected: None,
            passes: true,
            error: None,
            detail: serde_json::to_value(&v).unwrap_or_default(),
        },
        Err(e @ Error::ImplicationViolated(_)) => failed(1, "majorization", Point::new(), e),
        Err(e) => VerdictEntry {
            index: 1,
            check: "majorization".into(),
            point: Point::new(),
            verdict: Some("not_applicable".into()),
            expected: None,
            passes: true,
            error: None,
            detail: serde_json::Value::String(e.to_string()),
        },
    });
    if let Some(ys) = params.get("y") {
        let grid: Vec<F> = ys.iter().map(|r| ctx.lift(r)).collect();
        out.verdicts.push(match rts_monotonicity_probe(&c, &d, &grid) {
            Ok(p) => VerdictEntry {
                index: 2,
                check: "rts-monotonicity".into(),
                point: Point::new(),
                verdict: serde_json::to_value(p.observed).ok().and_then(|v| v.as_str().map(String::from)),
                expected: p.predicted.and_then(|m| serde_json::to_value(m).ok()).and_then(|v| v.as_str().map(String::from)),
                passes: true,
                error: None,
                detail: serde_json::to_value(&p).unwrap_or_default(),
            },
            Err(e) => failed(2, "rts-monotonicity", Point::new(), e),
        });
    }
    let mut table = Table::new(&["check", "verdict", "passes"]);
    for v in &out.verdicts {
        table.push(vec![
            v.check.clone(),
            v.verdict.clone().or_else(|| v.error.clone()).unwrap_or_default(),
            v.passes.to_string(),
        ]);
    }
    out.table = Some(table);
    Ok(out)
}

fn verify_cmd<F: Field>(ctx: &Ctx<F>, args: &VerifyArgs, params: &Params) -> Result<Outcome, String> {
    let rel_tol = parse_rational(&args.rel_tol)
        .map_err(|e| format!("--rel-tol: {e}"))?
        .to_f64()
        .value();
    let m = ctx.order;
    let mut out = Outcome::default();
    let names: &[&str] = match args.identity {
        IdentityArg::Linearization | IdentityArg::Kummer => &["mu", "alpha", "beta"],
        IdentityArg::FiniteSum | IdentityArg::Rahman => &["nu", "eta"],
        IdentityArg::Recqgamma => &["mu", "beta"],
        IdentityArg::Connection => &["alpha"],
        IdentityArg::BesselRoundtrip => &["mu"],
        IdentityArg::QLimit => return q_limit(args, params, rel_tol),
    };
    let needs_q = args.identity != IdentityArg::Kummer;
    let q = if needs_q { Some(ctx.q()?) } else { None };
    let xs: Vec<F> = match args.identity {
        IdentityArg::Connection | IdentityArg::BesselRoundtrip => need(params, "x")?.iter().map(|r| ctx.lift(r)).collect(),
        _ => Vec::new(),
    };
    let points = product(params, names)?;
    let name = args.identity.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let results: Vec<crate::Result<Residual>> = points
        .par_iter()
        .map(|v| {
            let v: Vec<F> = v.iter().map(|r| ctx.lift(r)).collect();
            let q = || q.expect("base resolved");
            match args.identity {
                IdentityArg::Linearization => verify_linearization(&v[0], &v[1], &v[2], q(), m),
                IdentityArg::Kummer => verify_kummer_linearization(&v[0], &v[1], &v[2], m),
                IdentityArg::FiniteSum => verify_finite_sum_identity(&v[0], &v[1], q(), m),
                IdentityArg::Rahman => verify_rahman_product(&v[0], &v[1], q(), m),
                IdentityArg::Recqgamma => verify_recqgamma(&v[0], &v[1], q(), m),
                IdentityArg::Connection => verify_connection_formula(&v[0], &xs, q()),
                IdentityArg::BesselRoundtrip => verify_bessel_roundtrip(&v[0], &xs, q()),
                IdentityArg::QLimit => unreachable!(),
            }
        })
        .collect();
    for (i, (v, res)) in points.iter().zip(results).enumerate() {
        out.residuals.push(residual_entry(i, point(names, v), res, &name, rel_tol));
    }
    Ok(out)
}

/// The q -> 1 study always runs in float arithmetic at `--digits`.
fn q_limit(args: &VerifyArgs, params: &Params, rel_tol: f64) -> Result<Outcome, String> {
    let names = ["mu", "alpha", "beta", "x"];
    let vals: Vec<Rational> = names.iter().map(|n| single(params, n)).collect::<Result<_, _>>()?;
    let alpha = usize::try_from(&vals[1].clone().floor())
        .ok()
        .filter(|k| Rational::from(*k) == vals[1])
        .ok_or("--alpha must be a natural number for q-limit")?;
    let qs = need(params, "q_seq")?;
    let pt = point(&names, &vals);
    let mut out = Outcome::default();
    match q_to_1_limit_study(&vals[0], alpha, &vals[2], &vals[3], qs, args.common.digits) {
        Ok(study) => {
            for (i, p) in study.points.iter().enumerate() {
                let mut pq = pt.clone();
                pq.insert("q".into(), p.q.to_string());
                out.margins.push(MarginEntry {
                    index: i,
                    label: "deviation-from-classical".into(),
                    point: pq.clone(),
                    value: p.deviation.max_abs.to_string(),
                    error_bound: None,
                });
                out.residuals.push(residual_entry(i, pq, Ok(p.identity_gap.clone()), "q-limit", rel_tol));
            }
            out.verdicts.push(VerdictEntry {
                index: 0,
                check: "q-limit".into(),
                point: pt,
                verdict: Some(if study.strictly_decreasing { "strictly_decreasing" } else if study.decreasing { "decreasing" } else { "not_decreasing" }.into()),
                expected: Some("strictly_decreasing".into()),
                passes: study.strictly_decreasing,
                error: None,
                detail: serde_json::json!({ "warnings": study.warnings }),
            });
        }
        Err(e) => out.verdicts.push(failed(0, "q-limit", pt, e)),
    }
    Ok(out)
}
