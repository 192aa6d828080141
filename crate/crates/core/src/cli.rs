//! Command-line front end: `predict`, `verify`, `table`, `invariants`.
//!
//! Exit codes: 0 contains (or success), 1 does not contain (or a table
//! disagreement), 2 undecided or unsupported, 3 budget exceeded,
//! 64 malformed input.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_rational::Rational64;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{Field, FieldSpec, PrimeField, RationalField};
use crate::closedform::{self, ConfigKind};
use crate::divisors::{nef_threshold, NefContext};
use crate::error::{Error, Result};
use crate::fatpoints::{FatPointScheme, PointConfig, PointSpec};
use crate::oracle::{self, OracleOptions};

pub const EXIT_CONTAINS: i32 = 0;
pub const EXIT_NOT_CONTAINED: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_MALFORMED: i32 = 64;

const KEYS: &[&str] = &[
    "kind", "n", "mult", "params", "seed", "points", "field", "m_max", "r_max", "format", "budget",
];

#[derive(Parser, Debug)]
#[command(name = "resurgence", version, about = "Containment of symbolic and ordinary powers of fat point ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form verdict for I^(m) ⊆ I^r.
    Predict {
        #[command(flatten)]
        job: JobArgs,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: u32,
    },
    /// Brute-force verdict for I^(m) ⊆ I^r with a witness.
    Verify {
        #[command(flatten)]
        job: JobArgs,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: u32,
        /// Run even if the work estimate exceeds the budget.
        #[arg(long)]
        ignore_budget: bool,
    },
    /// Containment table over the grid [1, m_max] x [1, r_max].
    Table {
        #[command(flatten)]
        job: JobArgs,
        /// Also run the oracle on every cell.
        #[arg(long)]
        with_oracle: bool,
    },
    /// α, ω, reg, γ, ρ and nef thresholds of the configuration.
    Invariants {
        #[command(flatten)]
        job: JobArgs,
        /// Also compute α(I^(m)) by brute force.
        #[arg(long)]
        with_oracle: bool,
    },
}

#[derive(Args, Debug, Default)]
struct JobArgs {
    /// Flat key=value configuration file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// conic | general | explicit
    #[arg(long)]
    kind: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// Uniform multiplicity of every point.
    #[arg(long)]
    mult: Option<u32>,
    /// Conic parameters, comma separated.
    #[arg(long)]
    params: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// Explicit points as x:y:z triples separated by ';'.
    #[arg(long)]
    points: Option<String>,
    /// rational | p:N
    #[arg(long)]
    field: Option<String>,
    #[arg(long)]
    m_max: Option<u32>,
    #[arg(long)]
    r_max: Option<u32>,
    /// json | csv | text
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    budget: Option<u64>,
    /// Report wall-clock time (off by default so reruns are byte-identical).
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Fully resolved job configuration, echoed into every output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JobConfig {
    pub kind: String,
    pub n: usize,
    pub mult: u32,
    pub params: Option<Vec<i64>>,
    pub seed: Option<u64>,
    pub points: Option<Vec<[String; 3]>>,
    pub field: FieldSpec,
    pub m_max: u32,
    pub r_max: u32,
    pub format: Format,
    pub budget: u64,
    pub version: String,
}

/// Parses flat `key=value` lines; `#` starts a comment, unknown keys are
/// rejected.
pub fn parse_config_text(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("line {}: expected key=value", i + 1)))?;
        let k = k.trim().replace('-', "_");
        if !KEYS.contains(&k.as_str()) {
            return Err(Error::Config(format!("line {}: unknown key '{k}'", i + 1)));
        }
        if out.insert(k.clone(), v.trim().to_string()).is_some() {
            return Err(Error::Config(format!("line {}: duplicate key '{k}'", i + 1)));
        }
    }
    Ok(out)
}

fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T> {
    v.trim()
        .parse()
        .map_err(|_| Error::Config(format!("invalid value for {key}: '{v}'")))
}

fn parse_params(v: &str) -> Result<Vec<i64>> {
    v.split(',').map(|p| parse_num("params", p)).collect()
}

fn parse_points(v: &str) -> Result<Vec<[String; 3]>> {
    v.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|p| {
            let c: Vec<&str> = p.split(':').map(str::trim).collect();
            match c.as_slice() {
                [a, b, d] => Ok([a.to_string(), b.to_string(), d.to_string()]),
                _ => Err(Error::Config(format!("point '{p}' is not an x:y:z triple"))),
            }
        })
        .collect()
}

impl JobConfig {
    /// Merges file values (if any) with flags; flags win.
    fn resolve(args: &JobArgs) -> Result<Self> {
        let mut kv = match &args.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
                parse_config_text(&text)?
            }
            None => BTreeMap::new(),
        };
        let mut set = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                kv.insert(k.to_string(), v);
            }
        };
        set("kind", args.kind.clone());
        set("n", args.n.map(|v| v.to_string()));
        set("mult", args.mult.map(|v| v.to_string()));
        set("params", args.params.clone());
        set("seed", args.seed.map(|v| v.to_string()));
        set("points", args.points.clone());
        set("field", args.field.clone());
        set("m_max", args.m_max.map(|v| v.to_string()));
        set("r_max", args.r_max.map(|v| v.to_string()));
        set("format", args.format.clone());
        set("budget", args.budget.map(|v| v.to_string()));
        Self::from_map(&kv)
    }

    pub fn from_map(kv: &BTreeMap<String, String>) -> Result<Self> {
        let get = |k: &str| kv.get(k).map(String::as_str);
        let kind = get("kind").unwrap_or("conic").to_string();
        let params = get("params").map(parse_params).transpose()?;
        let points = get("points").map(parse_points).transpose()?;
        let n_flag: Option<usize> = get("n").map(|v| parse_num("n", v)).transpose()?;
        let (n, params, seed, points) = match kind.as_str() {
            "conic" => {
                let params = match (params, n_flag) {
                    (Some(p), Some(n)) if p.len() != n => {
                        return Err(Error::Config(format!("{} params given for n = {n}", p.len())))
                    }
                    (Some(p), _) => p,
                    (None, Some(n)) => (0..n as i64).collect(),
                    (None, None) => return Err(Error::Config("conic configuration needs n or params".into())),
                };
                (params.len(), Some(params), None, None)
            }
            "general" => {
                let n = n_flag.ok_or_else(|| Error::Config("general configuration needs n".into()))?;
                let seed = get("seed").map(|v| parse_num("seed", v)).transpose()?.unwrap_or(42);
                (n, None, Some(seed), None)
            }
            "explicit" => {
                let pts = points.ok_or_else(|| Error::Config("explicit configuration needs points".into()))?;
                if let Some(n) = n_flag {
                    if n != pts.len() {
                        return Err(Error::Config(format!("{} points given for n = {n}", pts.len())));
                    }
                }
                (pts.len(), None, None, Some(pts))
            }
            other => return Err(Error::Config(format!("unknown kind '{other}' (conic | general | explicit)"))),
        };
        if n == 0 {
            return Err(Error::Config("configuration needs at least one point".into()));
        }
        let field: FieldSpec = get("field")
            .unwrap_or("p:2147483647")
            .parse()
            .map_err(|e: Error| Error::Config(e.to_string()))?;
        let format = match get("format").unwrap_or("json") {
            "json" => Format::Json,
            "csv" => Format::Csv,
            "text" => Format::Text,
            other => return Err(Error::Config(format!("unknown format '{other}' (json | csv | text)"))),
        };
        let mult = get("mult").map(|v| parse_num("mult", v)).transpose()?.unwrap_or(1);
        if mult == 0 {
            return Err(Error::Config("mult must be at least 1".into()));
        }
        Ok(JobConfig {
            kind,
            n,
            mult,
            params,
            seed,
            points,
            field,
            m_max: get("m_max").map(|v| parse_num("m_max", v)).transpose()?.unwrap_or(4),
            r_max: get("r_max").map(|v| parse_num("r_max", v)).transpose()?.unwrap_or(4),
            format,
            budget: get("budget")
                .map(|v| parse_num("budget", v))
                .transpose()?
                .unwrap_or_else(oracle::default_budget),
            version: env!("CARGO_PKG_VERSION").to_string(),
        })
    }

    /// Point specification; `m_hint` widens the genericity battery.
    pub fn point_spec(&self, m_hint: u32) -> PointSpec {
        match self.kind.as_str() {
            "conic" => PointSpec::OnConic {
                params: self.params.clone().unwrap_or_default(),
            },
            "general" => PointSpec::Generic {
                n: self.n,
                seed: self.seed.unwrap_or(42),
                m_max: 4.max(m_hint * self.mult),
            },
            _ => PointSpec::Explicit {
                points: self.points.clone().unwrap_or_default(),
            },
        }
    }

    /// Closed-form family, if the configuration belongs to one.
    pub fn config_kind(&self) -> Option<ConfigKind> {
        let n = self.n as u32;
        match self.kind.as_str() {
            "conic" => Some(ConfigKind::ConicUniform { n, s: self.mult }),
            "general" if self.mult == 1 => Some(ConfigKind::GeneralSimple { n }),
            _ => None,
        }
    }

    fn options(&self, ignore_budget: bool) -> OracleOptions {
        OracleOptions {
            budget: self.budget,
            ignore_budget,
        }
    }
}

fn rational(q: Rational64) -> String {
    if *q.denom() == 1 {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn exit_for(contains: Option<bool>) -> i32 {
    match contains {
        Some(true) => EXIT_CONTAINS,
        Some(false) => EXIT_NOT_CONTAINED,
        None => EXIT_UNDECIDED,
    }
}

fn exit_for_error(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Config(_) | Error::Parse { .. } | Error::InvalidField(_) => EXIT_MALFORMED,
        _ => EXIT_UNDECIDED,
    }
}

struct Output {
    format: Format,
    doc: Value,
    text: Vec<String>,
    csv: Option<(Vec<&'static str>, Vec<Vec<String>>)>,
}

impl Output {
    fn render(&self, out: &mut dyn Write) -> std::io::Result<()> {
        match self.format {
            Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&self.doc).expect("json")),
            Format::Text => {
                for line in &self.text {
                    writeln!(out, "{line}")?;
                }
                Ok(())
            }
            Format::Csv => match &self.csv {
                Some((header, rows)) => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(header).map_err(std::io::Error::other)?;
                    for row in rows {
                        w.write_record(row).map_err(std::io::Error::other)?;
                    }
                    out.write_all(&w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?)
                }
                None => {
                    // single records: key,value pairs
                    writeln!(out, "key,value")?;
                    for line in &self.text {
                        if let Some((k, v)) = line.split_once(": ") {
                            let mut w = csv::Writer::from_writer(Vec::new());
                            w.write_record([k, v]).map_err(std::io::Error::other)?;
                            out.write_all(&w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?)?;
                        }
                    }
                    Ok(())
                }
            },
        }
    }
}

fn timing(enabled: bool, started: Instant) -> Value {
    if enabled {
        json!({ "elapsed_ms": started.elapsed().as_secs_f64() * 1e3 })
    } else {
        Value::Null
    }
}

fn cmd_predict(cfg: &JobConfig, m: u32, r: u32, timed: bool, started: Instant) -> (i32, Output) {
    let query = json!({ "command": "predict", "m": m, "r": r });
    let verdict = match cfg.config_kind() {
        Some(kind) => closedform::predict(kind, m, r),
        None => Err(Error::Unsupported(format!(
            "no closed form for kind={} n={} mult={}",
            cfg.kind, cfg.n, cfg.mult
        ))),
    };
    let (code, verdict_json, cert, text) = match verdict {
        Ok(v) => (
            exit_for(v.contains),
            json!({ "contains": v.contains, "method": v.method.id() }),
            serde_json::to_value(&v.certificate).expect("json"),
            vec![
                format!("contains: {}", v.contains.map_or("undecided".to_string(), |b| b.to_string())),
                format!("method: {}", v.method.id()),
                format!("certificate: {}", serde_json::to_string(&v.certificate).expect("json")),
            ],
        ),
        Err(e) => {
            let code = match e {
                Error::InvalidArgument(_) => EXIT_MALFORMED,
                _ => EXIT_UNDECIDED,
            };
            (
                code,
                json!({ "contains": null, "method": null, "error": e.to_string() }),
                Value::Null,
                vec!["contains: undecided".into(), format!("error: {e}")],
            )
        }
    };
    let doc = json!({
        "config": cfg,
        "query": query,
        "verdict": verdict_json,
        "certificate": cert,
        "timing": timing(timed, started),
    });
    (code, Output { format: cfg.format, doc, text, csv: None })
}

fn verify_in<F: Field>(field: F, cfg: &JobConfig, m: u32, r: u32, opts: &OracleOptions) -> Result<oracle::OracleReport> {
    let pc = Arc::new(PointConfig::new(cfg.point_spec(m.max(r)), field)?);
    let z = FatPointScheme::uniform(pc, cfg.mult);
    oracle::contains_bruteforce(&z, m, r, opts)
}

fn cmd_verify(cfg: &JobConfig, m: u32, r: u32, ignore_budget: bool, timed: bool, started: Instant) -> (i32, Output) {
    let query = json!({ "command": "verify", "m": m, "r": r });
    let opts = cfg.options(ignore_budget);
    let result = match cfg.field {
        FieldSpec::Rational => verify_in(RationalField, cfg, m, r, &opts),
        FieldSpec::Prime { p } => PrimeField::new(p).and_then(|f| verify_in(f, cfg, m, r, &opts)),
    };
    let (code, report, cert, text) = match result {
        Ok(rep) => {
            let holds = rep.holds();
            let cert = serde_json::to_value(&rep.witness).expect("json");
            let mut v = serde_json::to_value(&rep).expect("json");
            if let Some(o) = v.as_object_mut() {
                o.remove("elapsed_ms");
                o.remove("witness");
            }
            let mut text = vec![format!(
                "contains: {}",
                holds.map_or("undecided".to_string(), |b| b.to_string())
            )];
            if let Some(oracle::Witness::Form { degree, poly, .. }) = &rep.witness {
                text.push(format!("witness_degree: {degree}"));
                text.push(format!("witness: {poly}"));
            }
            text.extend(rep.notes.iter().map(|n| format!("note: {n}")));
            (exit_for(holds), v, cert, text)
        }
        Err(e) => (
            exit_for_error(&e),
            json!({ "error": e.to_string() }),
            Value::Null,
            vec![format!("error: {e}")],
        ),
    };
    let doc = json!({
        "config": cfg,
        "query": query,
        "report": report,
        "certificate": cert,
        "timing": timing(timed, started),
    });
    (code, Output { format: cfg.format, doc, text, csv: None })
}

fn summary(cfg: &JobConfig) -> Value {
    let Some(kind) = cfg.config_kind() else {
        return json!({ "error": "no closed form for this configuration" });
    };
    let rho = closedform::resurgence(kind).map(rational).ok();
    let gamma = closedform::gamma_value(kind).map(rational).ok();
    let alpha: Vec<Option<u32>> = (1..=cfg.m_max.max(1))
        .map(|m| closedform::alpha_symbolic(kind, m).ok())
        .collect();
    json!({ "rho": rho, "gamma": gamma, "alpha_formula": alpha_formula(kind), "alpha_symbolic": alpha })
}

/// The closed form of `α(I^(m))` as text.
pub fn alpha_formula(kind: ConfigKind) -> Option<String> {
    let general = |n: u32| -> Option<&'static str> {
        Some(match n {
            1 | 2 => "m",
            3 => "ceil(3m/2)",
            4 | 5 => "2m",
            6 => "ceil(12m/5)",
            7 => "ceil(21m/8)",
            8 => "ceil(48m/17)",
            9 => "3m",
            _ => return None,
        })
    };
    match kind {
        ConfigKind::ConicUniform { n, s } if n >= 5 => Some(if s == 1 { "2m".into() } else { format!("{}m", 2 * s) }),
        ConfigKind::ConicUniform { n, s: 1 } => general(n).map(String::from),
        ConfigKind::ConicUniform { .. } => None,
        ConfigKind::GeneralSimple { n } => general(n).map(String::from),
    }
}

fn table_in<F: Field>(field: F, cfg: &JobConfig, opts: &OracleOptions) -> Result<oracle::CrossTable>
where
    F::Elem: Send + Sync,
{
    let spec = cfg.point_spec(cfg.m_max.max(cfg.r_max));
    if cfg.mult != 1 {
        return Err(Error::Unsupported("oracle tables are built for reduced configurations".into()));
    }
    oracle::crossvalidate(&spec, field, cfg.m_max, cfg.r_max, opts)
}

fn cmd_table(cfg: &JobConfig, with_oracle: bool, timed: bool, started: Instant) -> (i32, Output) {
    let query = json!({ "command": "table", "m_max": cfg.m_max, "r_max": cfg.r_max, "with_oracle": with_oracle });
    let header = vec!["m", "r", "predicted", "oracle", "agree"];
    let show = |b: Option<bool>| b.map_or(String::new(), |b| b.to_string());
    let mut rows_json = Vec::new();
    let mut rows_csv = Vec::new();
    let mut code = EXIT_CONTAINS;
    let mut error = None;
    if with_oracle {
        let opts = cfg.options(false);
        let result = match cfg.field {
            FieldSpec::Rational => table_in(RationalField, cfg, &opts),
            FieldSpec::Prime { p } => PrimeField::new(p).and_then(|f| table_in(f, cfg, &opts)),
        };
        match result {
            Ok(t) => {
                for row in &t.rows {
                    if !row.agree {
                        code = EXIT_NOT_CONTAINED;
                    }
                    rows_json.push(json!({
                        "m": row.m, "r": row.r, "predicted": row.predicted, "oracle": row.oracle,
                        "agree": row.agree, "method": row.method, "oracle_rational": row.oracle_rational,
                        "witness": row.witness,
                    }));
                    rows_csv.push(vec![
                        row.m.to_string(),
                        row.r.to_string(),
                        show(row.predicted),
                        show(row.oracle),
                        row.agree.to_string(),
                    ]);
                }
            }
            Err(e) => {
                code = exit_for_error(&e);
                error = Some(e.to_string());
            }
        }
    } else {
        for m in 1..=cfg.m_max {
            for r in 1..=cfg.r_max {
                let v = cfg.config_kind().map(|k| closedform::predict(k, m, r));
                let (pred, method) = match v {
                    Some(Ok(v)) => (v.contains, Some(v.method.id())),
                    Some(Err(e)) => {
                        error.get_or_insert(e.to_string());
                        code = EXIT_UNDECIDED;
                        (None, None)
                    }
                    None => {
                        error.get_or_insert("no closed form for this configuration".into());
                        code = EXIT_UNDECIDED;
                        (None, None)
                    }
                };
                rows_json.push(json!({ "m": m, "r": r, "predicted": pred, "oracle": null, "agree": null, "method": method }));
                rows_csv.push(vec![m.to_string(), r.to_string(), show(pred), String::new(), String::new()]);
            }
        }
    }
    let summary = summary(cfg);
    let mut text: Vec<String> = rows_csv.iter().map(|r| r.join(" ")).collect();
    text.insert(0, header.join(" "));
    text.push(format!("summary: {summary}"));
    if let Some(e) = &error {
        text.push(format!("error: {e}"));
    }
    let doc = json!({
        "config": cfg,
        "query": query,
        "report": { "rows": rows_json, "summary": summary, "error": error },
        "certificate": null,
        "timing": timing(timed, started),
    });
    (code, Output { format: cfg.format, doc, text, csv: Some((header, rows_csv)) })
}

fn invariants_in<F: Field>(field: F, cfg: &JobConfig, with_oracle: bool) -> Result<Value> {
    let pc = Arc::new(PointConfig::new(cfg.point_spec(cfg.m_max), field)?);
    let z = FatPointScheme::uniform(pc.clone(), cfg.mult);
    let fi = z.fat_ideal()?;
    let omega = fi.omega();
    let ctx = if pc.is_conic() && cfg.n >= 5 {
        Some(NefContext::Conic)
    } else if cfg.kind == "general" && cfg.n <= 9 {
        Some(NefContext::General)
    } else {
        None
    };
    let nef = ctx.and_then(|c| nef_threshold(cfg.n, cfg.mult, c).ok());
    let mut v = json!({
        "alpha": fi.alpha(),
        "omega": omega,
        "reg": fi.reg,
        "generator_degrees": fi.generator_degrees,
        "nef_threshold": nef,
    });
    if pc.is_conic() && cfg.n >= 5 {
        v["omega_vs_nef_threshold"] = json!({ "omega": omega, "nef_threshold": nef, "match": nef == Some(omega) });
    }
    if with_oracle {
        let alphas = (1..=cfg.m_max)
            .map(|m| oracle::alpha_bruteforce(&z, m))
            .collect::<Result<Vec<_>>>()?;
        v["alpha_bruteforce"] = json!(alphas);
    }
    Ok(v)
}

fn cmd_invariants(cfg: &JobConfig, with_oracle: bool, timed: bool, started: Instant) -> (i32, Output) {
    let query = json!({ "command": "invariants", "m_max": cfg.m_max, "with_oracle": with_oracle });
    let mut closed = json!(null);
    if let Some(kind) = cfg.config_kind() {
        let alpha = closedform::alpha_of_ideal(kind).ok();
        let reg = closedform::reg_of_ideal(kind).ok();
        let gamma = closedform::gamma_value(kind).ok();
        let rho = closedform::resurgence(kind).ok();
        let bounds = match (alpha, gamma, reg) {
            (Some(a), Some(g), Some(r)) => closedform::rho_bounds(a, g, r).ok(),
            _ => None,
        };
        closed = json!({
            "alpha": alpha,
            "reg": reg,
            "gamma": gamma.map(rational),
            "rho": rho.map(rational),
            "rho_bounds": bounds.map(|(l, u)| [rational(l), rational(u)]),
            "rho_tight": match (bounds, rho) {
                (Some((l, u)), Some(r)) => Some(l == r || u == r),
                _ => None,
            },
            "alpha_formula": alpha_formula(kind),
            "alpha_symbolic": (1..=cfg.m_max).map(|m| closedform::alpha_symbolic(kind, m).ok()).collect::<Vec<_>>(),
        });
    }
    let computed = match cfg.field {
        FieldSpec::Rational => invariants_in(RationalField, cfg, with_oracle),
        FieldSpec::Prime { p } => PrimeField::new(p).and_then(|f| invariants_in(f, cfg, with_oracle)),
    };
    let (code, computed) = match computed {
        Ok(v) => (if closed.is_null() { EXIT_UNDECIDED } else { EXIT_CONTAINS }, v),
        Err(e) => (exit_for_error(&e), json!({ "error": e.to_string() })),
    };
    let mut text = Vec::new();
    for (label, obj) in [("closed_form", &closed), ("computed", &computed)] {
        if let Some(map) = obj.as_object() {
            for (k, v) in map {
                text.push(format!("{label}.{k}: {v}"));
            }
        }
    }
    let doc = json!({
        "config": cfg,
        "query": query,
        "report": { "closed_form": closed, "computed": computed },
        "certificate": null,
        "timing": timing(timed, started),
    });
    (code, Output { format: cfg.format, doc, text, csv: None })
}

/// Runs the command line `args` (including the program name), writing to
/// `out` and `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let started = Instant::now();
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { 0 };
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
            } else {
                let _ = write!(out, "{}", e.render());
            }
            return code;
        }
    };
    let job = match &cli.command {
        Command::Predict { job, .. }
        | Command::Verify { job, .. }
        | Command::Table { job, .. }
        | Command::Invariants { job, .. } => job,
    };
    let cfg = match JobConfig::resolve(job) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_MALFORMED;
        }
    };
    let (code, output) = match cli.command {
        Command::Predict { m, r, .. } => cmd_predict(&cfg, m, r, job.timing, started),
        Command::Verify { m, r, ignore_budget, .. } => cmd_verify(&cfg, m, r, ignore_budget, job.timing, started),
        Command::Table { with_oracle, .. } => cmd_table(&cfg, with_oracle, job.timing, started),
        Command::Invariants { with_oracle, .. } => cmd_invariants(&cfg, with_oracle, job.timing, started),
    };
    if let Err(e) = output.render(out) {
        let _ = writeln!(err, "error: {e}");
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["resurgence"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
    }

    #[test]
    fn config_text() {
        let kv = parse_config_text("kind=general\n# comment\nn = 6\nseed=3\n").unwrap();
        let cfg = JobConfig::from_map(&kv).unwrap();
        assert_eq!((cfg.kind.as_str(), cfg.n, cfg.seed), ("general", 6, Some(3)));
        assert!(matches!(parse_config_text("colour=red"), Err(Error::Config(_))));
        assert!(matches!(parse_config_text("n"), Err(Error::Config(_))));
    }

    #[test]
    fn predict_exit_codes() {
        let (code, out) = run_str(&["predict", "--kind", "conic", "--n", "5", "--m", "2", "--r", "2"]);
        assert_eq!(code, 1);
        assert!(out.contains("conic_odd"));
        assert_eq!(run_str(&["predict", "--kind", "general", "--n", "7", "--m", "1", "--r", "1"]).0, 0);
        assert_eq!(run_str(&["predict", "--kind", "general", "--n", "12", "--m", "1", "--r", "1"]).0, 2);
        assert_eq!(run_str(&["predict", "--kind", "blob", "--n", "3", "--m", "1", "--r", "1"]).0, 64);
        assert_eq!(run_str(&["predict", "--m", "x"]).0, 64);
    }

    #[test]
    fn alpha_formula_matches_values() {
        for n in 1..=9 {
            let kind = ConfigKind::GeneralSimple { n };
            let f = alpha_formula(kind).unwrap();
            for m in 1..=6u32 {
                let expect = closedform::alpha_symbolic(kind, m).unwrap() as i64;
                let m = m as i64;
                let v = match f.as_str() {
                    "m" => m,
                    "2m" => 2 * m,
                    "3m" => 3 * m,
                    "ceil(3m/2)" => (3 * m + 1) / 2,
                    "ceil(12m/5)" => (12 * m + 4) / 5,
                    "ceil(21m/8)" => (21 * m + 7) / 8,
                    "ceil(48m/17)" => (48 * m + 16) / 17,
                    _ => unreachable!(),
                };
                assert_eq!(v, expect, "n={n}");
            }
        }
    }
}
