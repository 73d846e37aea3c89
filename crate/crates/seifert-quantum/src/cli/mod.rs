//! Command line front end: argument and config handling, JSON/CSV output.

pub mod acceptance;

use crate::arith::ap;
use crate::chern_simons::{construct_representation, cs_value, enumerate_l, enumerate_w, labels_from_traces, Mat};
use crate::error::Error;
use crate::qseries::{psi_series, verify_zhat_psi, zhat_shifted, SparseQSeries};
use crate::radial::radial_limit_check;
use crate::resurgence::{
    borel_expansion_numeric, check_poles_equal_cs, formal_borel, ohtsuki_coefficients, ohtsuki_formal_terms, pole_set, probe_pole,
};
use crate::seifert::SeifertData;
use crate::wrt::{eval_phases, generating_function, integral_part, phase_polynomials};
use clap::{Parser, Subcommand, ValueEnum};
use rug::{Complex, Rational};
use serde_json::{json, Map, Value};
use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::path::PathBuf;

pub const PRECISION_ENV: &str = "SEIFERT_QUANTUM_PRECISION";

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(
    name = "seifert-quantum",
    version,
    about = "Quantum invariants of Seifert fibered homology spheres"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// key=value file; flags override it
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// working precision in bits
    #[arg(long, global = true)]
    pub precision: Option<u32>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// same as --format json
    #[arg(long, global = true, conflicts_with = "format")]
    pub json: bool,
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// multiplicities, e.g. 2,3,5
    #[arg(long, global = true)]
    pub p: Option<String>,
    /// q-exponent cutoff
    #[arg(long, global = true)]
    pub cutoff: Option<String>,
    /// level(s), comma separated
    #[arg(long, global = true)]
    pub k: Option<String>,
    /// radial parameters, comma separated
    #[arg(long, global = true)]
    pub t: Option<String>,
    #[arg(long, global = true)]
    pub mmax: Option<i64>,
    /// generating function argument re[,im]
    #[arg(long, global = true)]
    pub z: Option<String>,
    /// generating function truncation
    #[arg(long = "K", global = true)]
    pub big_k: Option<i64>,
    /// label tuple for rep
    #[arg(long, global = true)]
    pub l: Option<String>,
    /// acceptance criteria to run
    #[arg(long, global = true)]
    pub only: Option<String>,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Chern-Simons values W and the label set
    Csvalues,
    /// explicit SL(2,C) representations
    Rep,
    /// q^Δ·Ẑ₀ from the plumbing lattice sum
    Zhat,
    /// the series Ψ
    Psi,
    /// termwise comparison of q^Δ·Ẑ₀ and Ψ
    VerifyZhatPsi,
    /// normalized WRT invariant and its two parts
    Wrt,
    /// Borel poles, probes and expansion
    Borel,
    /// radial limit of Ψ at roots of unity
    RadialCheck,
    /// generating function of z̃ against its closed form
    Genfunc,
    /// run the acceptance criteria
    Acceptance,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Csvalues => "csvalues",
            Command::Rep => "rep",
            Command::Zhat => "zhat",
            Command::Psi => "psi",
            Command::VerifyZhatPsi => "verify-zhat-psi",
            Command::Wrt => "wrt",
            Command::Borel => "borel",
            Command::RadialCheck => "radial-check",
            Command::Genfunc => "genfunc",
            Command::Acceptance => "acceptance",
        }
    }
}

/// Resolved settings: flags, then config file, then environment, then defaults.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub precision: u32,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub p: Vec<i64>,
    pub cutoff: Rational,
    pub k: Vec<i64>,
    pub t: Vec<f64>,
    pub mmax: Option<i64>,
    pub z: (f64, f64),
    pub big_k: i64,
    pub l: Option<Vec<i64>>,
    pub only: Vec<usize>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Invalid(m) => CliError::Usage(m),
            e => CliError::Compute(e),
        }
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match line.split_once('=') {
            Some((k, v)) => {
                out.insert(k.trim().to_string(), v.trim().to_string());
            }
            None => return usage(format!("config line {}: expected key=value", i + 1)),
        }
    }
    Ok(out)
}

fn list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, CliError> {
    s.split(',')
        .map(|x| x.trim())
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<T>().map_err(|_| CliError::Usage(format!("bad {what}: {x}"))))
        .collect()
}

fn one<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, CliError> {
    s.trim().parse::<T>().map_err(|_| CliError::Usage(format!("bad {what}: {s}")))
}

fn rational(s: &str) -> Result<Rational, CliError> {
    let s = s.trim();
    if let Ok(r) = s.parse::<Rational>() {
        return Ok(r);
    }
    match s.parse::<f64>().ok().and_then(Rational::from_f64) {
        Some(r) => Ok(r),
        None => usage(format!("bad cutoff: {s}")),
    }
}

impl RunConfig {
    pub fn resolve(cli: &Cli, file: &BTreeMap<String, String>, env_precision: Option<&str>) -> Result<Self, CliError> {
        for key in file.keys() {
            if ![
                "precision",
                "format",
                "output",
                "p",
                "cutoff",
                "k",
                "t",
                "mmax",
                "z",
                "K",
                "l",
                "only",
            ]
            .contains(&key.as_str())
            {
                return usage(format!("unknown config key {key}"));
            }
        }
        let pick = |flag: &Option<String>, key: &str| flag.clone().or_else(|| file.get(key).cloned());
        let precision = match cli.precision {
            Some(p) => p,
            None => match file.get("precision").map(|s| s.as_str()).or(env_precision) {
                Some(s) => one(s, "precision")?,
                None => crate::DEFAULT_PREC,
            },
        };
        if !(64..=1 << 16).contains(&precision) {
            return usage("precision must be between 64 and 65536 bits");
        }
        let format = match (cli.format, file.get("format")) {
            (Some(f), _) => f,
            (None, _) if cli.json => Format::Json,
            (None, Some(s)) => Format::from_str(s, true).map_err(CliError::Usage)?,
            (None, None) => Format::Json,
        };
        let output = cli.output.clone().or_else(|| file.get("output").map(PathBuf::from));
        let p = list(&pick(&cli.p, "p").unwrap_or_else(|| "2,3,5".into()), "p")?;
        let cutoff = rational(&pick(&cli.cutoff, "cutoff").unwrap_or_else(|| "50".into()))?;
        let k = list(&pick(&cli.k, "k").unwrap_or_else(|| "2,3,4,5,6".into()), "k")?;
        let t = list(&pick(&cli.t, "t").unwrap_or_else(|| "1e-3,1e-4,1e-5".into()), "t")?;
        let mmax = match cli.mmax {
            Some(m) => Some(m),
            None => file.get("mmax").map(|s| one(s, "mmax")).transpose()?,
        };
        let zs: Vec<f64> = list(&pick(&cli.z, "z").unwrap_or_else(|| "0.1".into()), "z")?;
        let z = match zs.as_slice() {
            [re] => (*re, 0.0),
            [re, im] => (*re, *im),
            _ => return usage("z takes re or re,im"),
        };
        let big_k = match cli.big_k {
            Some(k) => k,
            None => file.get("K").map(|s| one(s, "K")).transpose()?.unwrap_or(40),
        };
        let l = pick(&cli.l, "l").map(|s| list(&s, "l")).transpose()?;
        let only = match pick(&cli.only, "only") {
            Some(s) => list(&s, "criterion")?,
            None => (1..=13).collect(),
        };
        if k.is_empty() || t.is_empty() || p.is_empty() {
            return usage("empty list argument");
        }
        if big_k < 0 {
            return usage("K must be non-negative");
        }
        Ok(RunConfig {
            precision,
            format,
            output,
            p,
            cutoff,
            k,
            t,
            mmax,
            z,
            big_k,
            l,
            only,
        })
    }
}

pub fn rat_json(r: &Rational) -> Value {
    json!({"num": r.numer().to_string(), "den": r.denom().to_string()})
}

pub fn cx_json(z: &Complex) -> Value {
    let digits = ap::decimal_digits(z.prec().0);
    let (re, im) = ap::to_decimal(z, digits);
    json!({"re": re, "im": im, "precision": z.prec().0})
}

fn mat_json(m: &Mat) -> Value {
    Value::Array(m.iter().map(cx_json).collect())
}

fn insert_series(doc: &mut Map<String, Value>, s: &SparseQSeries) {
    doc.insert("denominator".into(), json!(s.den));
    doc.insert("cutoff".into(), rat_json(&s.cutoff));
    doc.insert(
        "terms".into(),
        Value::Array(
            s.terms
                .iter()
                .map(|(k, c)| json!({"num": k, "exponent": rat_json(&s.exponent(*k)), "coeff": rat_json(c)}))
                .collect(),
        ),
    );
}

fn base_doc(cfg: &RunConfig, cmd: Command) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("tool_version".into(), json!(env!("CARGO_PKG_VERSION")));
    m.insert("p".into(), json!(cfg.p));
    m.insert("precision".into(), json!(cfg.precision));
    m.insert("command".into(), json!(cmd.name()));
    m.insert("timestamp".into(), json!(chrono::Utc::now().to_rfc3339()));
    m
}

/// Result document plus whether every check it contains passed.
pub struct Outcome {
    pub doc: Map<String, Value>,
    pub ok: bool,
}

pub fn execute(cmd: Command, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let prec = cfg.precision;
    let mut doc = base_doc(cfg, cmd);
    let mut ok = true;
    let sd = || SeifertData::new(&cfg.p).map_err(CliError::from);
    match cmd {
        Command::Csvalues => {
            let s = sd()?;
            let w = enumerate_w(&s);
            let ls = enumerate_l(&s.p);
            let cs: BTreeSet<_> = ls.iter().map(|l| cs_value(l, &s.p)).collect();
            let bijection_ok = cs.len() == ls.len() && cs == w.values;
            doc.insert("W".into(), Value::Array(w.values.iter().map(|t| rat_json(t.rep())).collect()));
            doc.insert(
                "fibers".into(),
                Value::Array(
                    w.fibers
                        .iter()
                        .map(|(t, f)| json!({"theta": rat_json(t.rep()), "fiber": f}))
                        .collect(),
                ),
            );
            let labels: Vec<Value> = ls
                .iter()
                .map(|l| json!({"l": l, "cs": rat_json(cs_value(l, &s.p).rep())}))
                .collect();
            doc.insert("multiplicities_order".into(), json!(s.p));
            doc.insert("L_count".into(), json!(ls.len()));
            doc.insert("bijection_ok".into(), json!(bijection_ok));
            doc.insert("labels".into(), Value::Array(labels));
        }
        Command::Rep => {
            let s = sd()?;
            let ls = match &cfg.l {
                Some(l) => vec![l.clone()],
                None => enumerate_l(&s.p),
            };
            let tol = 2f64.powi(30 - prec as i32);
            let mut reps = Vec::new();
            for l in ls {
                let rep = construct_representation(&l, &s, prec)?;
                let res = rep.residual.to_f64();
                ok &= res < tol;
                reps.push(json!({
                    "l": l,
                    "cs": rat_json(cs_value(&l, &s.p).rep()),
                    "h": mat_json(&rep.h),
                    "x": rep.x.iter().map(mat_json).collect::<Vec<_>>(),
                    "residual": format!("{:e}", res),
                    "labels_from_traces": labels_from_traces(&rep, &s),
                }));
            }
            doc.insert("representations".into(), Value::Array(reps));
        }
        Command::Zhat => {
            let s = sd()?;
            let (z, delta) = zhat_shifted(&s, &cfg.cutoff)?;
            doc.insert("delta".into(), rat_json(&delta));
            doc.insert("q_plumb".into(), json!(s.q_plumb));
            insert_series(&mut doc, &z);
        }
        Command::Psi => {
            let s = sd()?;
            let z = psi_series(&s, &cfg.cutoff)?;
            insert_series(&mut doc, &z);
        }
        Command::VerifyZhatPsi => {
            let s = sd()?;
            let r = verify_zhat_psi(&s, &cfg.cutoff)?;
            ok = r.verified;
            insert_series(&mut doc, &r.zhat);
            doc.insert("verified".into(), json!(r.verified));
            doc.insert("sign".into(), json!(r.sign));
            doc.insert("terms_compared".into(), json!(r.terms_compared));
            doc.insert("delta".into(), rat_json(&r.delta));
            doc.insert("mismatches".into(), Value::Array(r.mismatches.iter().map(rat_json).collect()));
        }
        Command::Wrt => {
            let s = sd()?;
            let phases = phase_polynomials(&s, prec)?;
            let mut vals = Vec::new();
            for &k in &cfg.k {
                let z_i = integral_part(&s, k, prec)?;
                let z_r = eval_phases(&phases, k, prec);
                let z = Complex::with_val(prec, &z_i + &z_r);
                vals.push(json!({"k": k, "z_I": cx_json(&z_i), "z_R": cx_json(&z_r), "z_total": cx_json(&z)}));
            }
            doc.insert("values".into(), Value::Array(vals));
            let cut = ap::two_pow_neg(prec, (prec / 2) as i32);
            let pv: Vec<Value> = phases
                .iter()
                .filter(|ph| ph.coeffs.max_abs_above(-1) >= cut)
                .map(|ph| {
                    let hi = ph.coeffs.high().max(0);
                    json!({
                        "theta": rat_json(ph.theta.rep()),
                        "fiber": ph.fiber,
                        "poly_coeffs": (0..=hi).map(|d| cx_json(&ph.coeffs.coeff(d))).collect::<Vec<_>>(),
                    })
                })
                .collect();
            doc.insert("phases".into(), Value::Array(pv));
        }
        Command::Borel => {
            let s = sd()?;
            let mmax = cfg.mmax.unwrap_or(2 * s.big_p);
            if mmax < 1 {
                return usage("mmax must be positive");
            }
            let poles = pole_set(&s, mmax, prec);
            let mut pv = Vec::new();
            for (i, pole) in poles.iter().enumerate() {
                let mut e = json!({"m": pole.m, "zeta": cx_json(&pole.zeta), "theta": rat_json(pole.theta.rep())});
                if i < 3 {
                    let pr = probe_pole(&s, pole.m, 1e-8, prec)?;
                    e["probe_near"] = json!(pr.near);
                    e["probe_control"] = json!(pr.control);
                }
                pv.push(e);
            }
            let numeric = borel_expansion_numeric(&s, 21, 512, prec)?;
            let formal = formal_borel(&ohtsuki_formal_terms(&ohtsuki_coefficients(&s, 20, prec)?))?;
            let tol = 2f64.powi(-100);
            let order = (1..=20)
                .take_while(|&m| {
                    let d = ap::abs_f64(&Complex::with_val(prec, &formal[m].coeff - &numeric[m]));
                    d < tol * ap::abs_f64(&numeric[m])
                })
                .count();
            doc.insert("mmax".into(), json!(mmax));
            doc.insert("poles".into(), Value::Array(pv));
            doc.insert("cs_match".into(), json!(check_poles_equal_cs(&s, mmax.max(4 * s.big_p))));
            doc.insert("coeff_match_order".into(), json!(order));
            doc.insert(
                "expansion".into(),
                Value::Array(
                    formal
                        .iter()
                        .map(|b| json!({"exponent": rat_json(&b.exponent), "coeff": cx_json(&b.coeff)}))
                        .collect(),
                ),
            );
        }
        Command::RadialCheck => {
            let s = sd()?;
            let mut reps = Vec::new();
            for &k in &cfg.k {
                let r = radial_limit_check(&s, k, &cfg.t, prec)?;
                ok &= r.pass;
                let slopes: Vec<f64> = (1..r.t.len())
                    .map(|i| (r.residuals_after[i] / r.residuals_after[i - 1]).ln() / (r.t[i] / r.t[i - 1]).ln())
                    .collect();
                reps.push(json!({
                    "k": k,
                    "t": r.t,
                    "lhs": r.lhs.iter().map(cx_json).collect::<Vec<_>>(),
                    "wrt": cx_json(&r.wrt),
                    "residuals": r.residuals,
                    "residuals_after_expansion": r.residuals_after,
                    "slopes": slopes,
                    "slope_fit": r.slope,
                    "extrapolated": cx_json(&r.extrapolated),
                    "extrapolation_error": r.extrapolation_error,
                    "diagnostic": {
                        "normalization_ratio": cx_json(&r.normalization_ratio),
                        "corrected_residuals": r.corrected_residuals,
                        "corrected_extrapolation_error": r.corrected_extrapolation_error,
                    },
                    "pass": r.pass,
                }));
            }
            doc.insert("checks".into(), Value::Array(reps));
        }
        Command::Genfunc => {
            let s = sd()?;
            let z = ap::from_f64(prec, cfg.z.0, cfg.z.1);
            let g = generating_function(&s, &z, cfg.big_k, prec)?;
            let d = ap::abs_f64(&Complex::with_val(prec, &g.partial_sum - &g.closed_form));
            doc.insert("z".into(), cx_json(&z));
            doc.insert("K".into(), json!(cfg.big_k));
            doc.insert("partial_sum".into(), cx_json(&g.partial_sum));
            doc.insert("closed_form".into(), cx_json(&g.closed_form));
            doc.insert("difference".into(), json!(d));
            doc.insert("min_singular_distance".into(), json!(g.min_singular_distance));
        }
        Command::Acceptance => {
            let mut rows = Vec::new();
            for &id in &cfg.only {
                let c = acceptance::run(id, prec)?;
                eprintln!("{}", c.line());
                ok &= c.pass;
                rows.push(serde_json::to_value(&c).map_err(|e| CliError::Io(e.to_string()))?);
            }
            doc.insert("criteria".into(), Value::Array(rows));
        }
    }
    doc.insert("ok".into(), json!(ok));
    Ok(Outcome { doc, ok })
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, x, out);
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

/// Two-column key,value rendering of a JSON document.
pub fn to_csv(doc: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", doc, &mut rows);
    let esc = |s: &str| {
        if s.contains([',', '"', '\n']) {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s.to_string()
        }
    };
    let mut out = String::from("key,value\n");
    for (k, v) in rows {
        out.push_str(&format!("{},{}\n", esc(&k), esc(&v)));
    }
    out
}

fn emit(doc: &Value, format: Format, output: Option<&PathBuf>) -> Result<(), CliError> {
    let text = match format {
        Format::Json => serde_json::to_string_pretty(doc).map_err(|e| CliError::Io(e.to_string()))? + "\n",
        Format::Csv => to_csv(doc),
    };
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn error_doc(kind: &str, msg: &str) -> Value {
    json!({
        "tool_version": env!("CARGO_PKG_VERSION"),
        "timestamp": chrono::Utc::now().to_rfc3339(),
        "error": {"kind": kind, "message": msg},
    })
}

/// Runs the tool; returns the process exit code (0 pass, 1 failure, 2 usage).
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let file = match &cli.config {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(text) => match parse_config(&text) {
                Ok(m) => m,
                Err(e) => return report(e),
            },
            Err(e) => return report(CliError::Usage(format!("{}: {e}", path.display()))),
        },
        None => BTreeMap::new(),
    };
    let env = std::env::var(PRECISION_ENV).ok();
    let cfg = match RunConfig::resolve(&cli, &file, env.as_deref()) {
        Ok(c) => c,
        Err(e) => return report(e),
    };
    match execute(cli.command, &cfg) {
        Ok(out) => {
            if let Err(e) = emit(&Value::Object(out.doc), cfg.format, cfg.output.as_ref()) {
                return report(e);
            }
            if out.ok {
                0
            } else {
                1
            }
        }
        Err(e) => report(e),
    }
}

fn report(e: CliError) -> i32 {
    let (kind, msg, code) = match e {
        CliError::Usage(m) => ("usage", m, 2),
        CliError::Compute(e) => ("computation", e.to_string(), 1),
        CliError::Io(m) => ("io", m, 1),
    };
    println!("{}", serde_json::to_string_pretty(&error_doc(kind, &msg)).unwrap_or_default());
    code
}
