//! Command-line front end for `casimir_lab`.
//!
//! Every report is a JSON object carrying `"schema": "casimir-lab/1"`,
//! with keys in sorted order and rationals as `"p/q"` strings. Errors go
//! to stderr as a single JSON object; stdout stays empty.
//!
//! Exit codes: 0 success, 1 invalid input, 2 usage, 3 refused by a
//! combinatorial cap, 4 internal consistency failure.

use std::collections::BTreeMap;
use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use casimir_lab::error::Error;
use casimir_lab::hidden::{self, HiddenReport};
use casimir_lab::oplab::certify::Strategy;
use casimir_lab::oplab::numeric::{self, DEFAULT_TOL};
use casimir_lab::oplab::{self, GroupSpec, MetricParam};
use casimir_lab::rational::{format_rational, parse_rational, ExactQ, Q};
use casimir_lab::reps::{self, KModule, RepLabel, VirtualDecomposition};
use casimir_lab::rootsys::{Family, RootSystem, RootSystemType, DEFAULT_WEYL_CAP};
use casimir_lab::spectra::{self, HiddenCaps, Irr};
use casimir_lab::weights::{self, LatticeChoice, Weight};

pub const SCHEMA: &str = "casimir-lab/1";

pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "casimir-lab", version, about = "Exact Casimir spectra, hidden symmetries and resultant certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    pub output: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Casimir classes up to a bound on a².
    Classes(ClassesArgs),
    /// Only classes with two dominant members that are neither equal nor dual.
    Coincidences(ClassesArgs),
    /// Stabilizer of the shifted sphere set at one radius.
    Hidden(HiddenArgs),
    /// Real, complex or quaternionic type of one irreducible.
    Reptype(ReptypeArgs),
    /// Resultant certificate for SU(2)^c x T^n.
    Certify(CertifyArgs),
    /// Exact or floating-point spectrum of D^V(kappa).
    Spectrum(SpectrumArgs),
    /// Generic-estimate bound for the eigenspace of one irreducible.
    Estimate(EstimateArgs),
    /// Normal-metric spectral report over all classes up to a bound.
    Report(ReportArgs),
    /// Rank-one Hodge membership table.
    HodgeRank1(HodgeArgs),
}

#[derive(Args, Debug, Clone)]
pub struct SystemArgs {
    /// Dynkin family, A to G.
    #[arg(long = "type", value_parser = parse_family)]
    pub family: Family,
    #[arg(long)]
    pub rank: usize,
    #[arg(long, default_value = "weight", value_parser = parse_lattice)]
    pub lattice: LatticeChoice,
    /// Positive multiple of the normalized invariant form.
    #[arg(long, default_value = "1", value_parser = parse_q)]
    pub scale: Q,
}

#[derive(Args, Debug)]
pub struct ClassesArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Largest a² to enumerate.
    #[arg(long, value_parser = parse_q)]
    pub cap: Q,
}

#[derive(Args, Debug)]
pub struct HiddenArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    #[arg(long, value_parser = parse_q)]
    pub a2: Q,
    #[arg(long, default_value_t = hidden::DEFAULT_SIZE_CAP)]
    pub hidden_cap: usize,
    #[arg(long, default_value_t = hidden::DEFAULT_RANK_CAP)]
    pub span_cap: usize,
    #[arg(long, default_value_t = DEFAULT_WEYL_CAP)]
    pub weyl_cap: u128,
}

#[derive(Args, Debug)]
pub struct ReptypeArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Dynkin labels, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: String,
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    #[arg(long, default_value_t = 0)]
    pub su2: usize,
    #[arg(long, default_value_t = 0)]
    pub torus: usize,
    #[arg(long)]
    pub rep_cap: u32,
    #[arg(long, default_value_t = oplab::certify::DEFAULT_BUDGET)]
    pub budget: usize,
    #[arg(long, default_value_t = oplab::certify::DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[arg(long, default_value_t = 0)]
    pub su2: usize,
    #[arg(long, default_value_t = 0)]
    pub torus: usize,
    /// `diag:1,2,3`, an inline JSON object, or a path to a JSON file
    /// `{"n": N, "entries": [[i, j, "p/q"], ...]}`.
    #[arg(long)]
    pub kappa: String,
    #[arg(long, default_value_t = 2)]
    pub rep_cap: u32,
    /// Dimension of U* for the isotypic assembly.
    #[arg(long, default_value_t = 1)]
    pub ustar_dim: usize,
    #[arg(long)]
    pub numeric: bool,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct EstimateArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Dynkin labels; in diagonal mode two factors separated by `|`.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: String,
    /// `trivial:D`, `torus:w;w;...`, `diagonal:w;w;...` or `diagonal:wedge:P`.
    #[arg(long, default_value = "trivial:1", allow_hyphen_values = true)]
    pub ustar: String,
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    #[arg(long, value_parser = parse_q)]
    pub cap: Q,
    #[arg(long, default_value = "trivial:1", allow_hyphen_values = true)]
    pub ustar: String,
    /// Fold members into duality classes.
    #[arg(long)]
    pub real: bool,
    #[arg(long, default_value_t = hidden::DEFAULT_SIZE_CAP)]
    pub hidden_cap: usize,
}

#[derive(Args, Debug)]
pub struct HodgeArgs {
    #[arg(long, value_parser = parse_q)]
    pub cap: Q,
}

fn parse_family(s: &str) -> Result<Family, Error> {
    s.parse()
}

fn parse_lattice(s: &str) -> Result<LatticeChoice, Error> {
    s.parse()
}

fn parse_q(s: &str) -> Result<Q, Error> {
    parse_rational(s)
}

fn parse_labels(s: &str) -> Result<Vec<i64>, Error> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad label {t:?}"))))
        .collect()
}

/// `diag:1,2,3`, inline JSON, or a JSON file.
pub fn parse_kappa(spec: &str) -> Result<MetricParam, Error> {
    if let Some(rest) = spec.strip_prefix("diag:") {
        let v: Vec<Q> = rest.split(',').map(parse_rational).collect::<Result<_, _>>()?;
        return MetricParam::diag(&v);
    }
    let text = if spec.trim_start().starts_with('{') {
        spec.to_string()
    } else {
        std::fs::read_to_string(spec).map_err(|e| Error::Parse(format!("cannot read {spec}: {e}")))?
    };
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("kappa json: {e}")))?;
    let n = v["n"].as_u64().ok_or_else(|| Error::Parse("kappa json needs integer \"n\"".into()))? as usize;
    let entries = v["entries"]
        .as_array()
        .ok_or_else(|| Error::Parse("kappa json needs \"entries\"".into()))?;
    let mut out = Vec::new();
    for e in entries {
        let bad = || Error::Parse(format!("bad kappa entry {e}"));
        let a = e.as_array().filter(|a| a.len() == 3).ok_or_else(bad)?;
        let i = a[0].as_u64().ok_or_else(bad)? as usize;
        let j = a[1].as_u64().ok_or_else(bad)? as usize;
        let x = match &a[2] {
            Value::String(s) => parse_rational(s)?,
            Value::Number(n) if n.is_i64() => parse_rational(&n.to_string())?,
            _ => return Err(bad()),
        };
        out.push((i, j, x));
    }
    MetricParam::from_entries(n, &out)
}

/// `trivial:D`, `torus:w;w`, `diagonal:w;w` or `diagonal:wedge:P`.
pub fn parse_ustar(spec: &str, rs: &RootSystem) -> Result<KModule, Error> {
    let (mode, rest) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("U* spec {spec:?} needs a mode prefix")))?;
    let weights = |s: &str| -> Result<Vec<Vec<i64>>, Error> {
        s.split(';').filter(|t| !t.trim().is_empty()).map(parse_labels).collect()
    };
    let check_rank = |w: &[i64]| -> Result<(), Error> {
        if w.len() != rs.rank() {
            return Err(Error::DimensionMismatch { expected: rs.rank(), got: w.len() });
        }
        Ok(())
    };
    match mode {
        "trivial" => {
            let dim = rest.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad dimension {rest:?}")))?;
            Ok(KModule::Trivial { dim })
        }
        "torus" => {
            let mut m = BTreeMap::new();
            for w in weights(rest)? {
                check_rank(&w)?;
                *m.entry(w).or_insert(0) += 1;
            }
            Ok(KModule::Torus(m))
        }
        "diagonal" => {
            if let Some(p) = rest.strip_prefix("wedge:") {
                let p = p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad degree {p:?}")))?;
                return KModule::diagonal_wedge_adjoint(rs, p);
            }
            let mut d = VirtualDecomposition::new();
            for w in weights(rest)? {
                check_rank(&w)?;
                if w.iter().any(|&x| x < 0) {
                    return Err(Error::NotDominant(w));
                }
                d.add(w, 1);
            }
            Ok(KModule::Diagonal(d))
        }
        other => Err(Error::UnsupportedK(other.to_string())),
    }
}

fn system(a: &SystemArgs) -> Result<Arc<RootSystem>, Error> {
    Ok(Arc::new(RootSystem::new(RootSystemType::new(a.family, a.rank)?, a.scale.clone())?))
}

fn rank_check(rs: &RootSystem, w: &[i64]) -> Result<(), Error> {
    if w.len() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: w.len() });
    }
    Ok(())
}

fn envelope(command: &str, body: impl Serialize) -> Result<Value, Error> {
    let mut v = serde_json::to_value(body).map_err(|e| Error::Inconsistent(format!("serialization: {e}")))?;
    let obj = v
        .as_object_mut()
        .ok_or_else(|| Error::Inconsistent("report is not an object".into()))?;
    obj.insert("schema".into(), json!(SCHEMA));
    obj.insert("command".into(), json!(command));
    Ok(v)
}

#[derive(Serialize)]
struct MemberRow {
    mu: String,
    dual_mu: String,
    dim: u64,
    rep_type: reps::RepType,
}

#[derive(Serialize)]
struct ClassRow {
    a_sq: ExactQ,
    lambda: ExactQ,
    dominant_members: Vec<MemberRow>,
    sphere_size: usize,
    nondual_coincidence: bool,
}

#[derive(Serialize)]
struct ClassesReport {
    context: Value,
    classes: Vec<ClassRow>,
}

fn classes_report(a: &ClassesArgs, only_coincidences: bool) -> Result<ClassesReport, Error> {
    let rs = system(&a.system)?;
    let mut rows = Vec::new();
    for c in weights::classes_up_to(&rs, a.system.lattice, &a.cap) {
        let coincidence = weights::has_nondual_coincidence(&rs, &c);
        if only_coincidences && !coincidence {
            continue;
        }
        let members = c
            .dominant_members
            .iter()
            .map(|w| {
                let dual = Weight::new(&rs, a.system.lattice, rs.dual_fw(w.fw_coords()))?;
                Ok(MemberRow {
                    mu: w.to_string(),
                    dual_mu: dual.to_string(),
                    dim: reps::weyl_dim(&RepLabel::new(rs.clone(), w.clone())?),
                    rep_type: reps::classify_type(&RepLabel::new(rs.clone(), w.clone())?),
                })
            })
            .collect::<Result<_, Error>>()?;
        rows.push(ClassRow {
            a_sq: ExactQ(c.a_sq.clone()),
            lambda: ExactQ(c.lambda.clone()),
            dominant_members: members,
            sphere_size: c.sphere_members.len(),
            nondual_coincidence: coincidence,
        });
    }
    Ok(ClassesReport {
        context: json!({
            "root_system": rs.typ().to_string(),
            "lattice": a.system.lattice,
            "metric_scale": ExactQ(a.system.scale.clone()),
            "a_sq_cap": ExactQ(a.cap.clone()),
        }),
        classes: rows,
    })
}

#[derive(Serialize)]
struct HiddenOut {
    context: Value,
    #[serde(flatten)]
    report: HiddenReport,
}

fn hidden_report(a: &HiddenArgs) -> Result<HiddenOut, Error> {
    let rs = system(&a.system)?;
    let cls = weights::sphere_set(&rs, a.system.lattice, &a.a2);
    let cfg = hidden::shifted_config(&rs, &cls)?;
    let grp = hidden::stabilizer_group(&cfg, a.hidden_cap, a.span_cap)?;
    if !hidden::is_group(&grp) {
        return Err(Error::Inconsistent("stabilizer is not closed".into()));
    }
    let weyl = hidden::check_weyl_inclusion(&rs, &cfg, a.weyl_cap)?;
    let orbs = hidden::orbits(&cfg, &grp);
    Ok(HiddenOut {
        context: json!({
            "root_system": rs.typ().to_string(),
            "lattice": a.system.lattice,
            "metric_scale": ExactQ(a.system.scale.clone()),
            "dominant_members": cls.dominant_members.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
        report: HiddenReport {
            a_sq: format_rational(cfg.a_sq()),
            points: cfg.len(),
            span_rank: cfg.span_rank(),
            order: grp.len(),
            orbits: orbs.len(),
            orbit_sizes: orbs.iter().map(Vec::len).collect(),
            transitive: orbs.len() == 1,
            weyl_included: weyl.holds,
            weyl_order: weyl.witnesses.len() + weyl.violations.len(),
        },
    })
}

fn reptype_report(a: &ReptypeArgs) -> Result<Value, Error> {
    let rs = system(&a.system)?;
    let w = parse_labels(&a.weight)?;
    rank_check(&rs, &w)?;
    let rep = RepLabel::from_fw(&rs, a.system.lattice, &w)?;
    Ok(json!({
        "context": {
            "root_system": rs.typ().to_string(),
            "lattice": a.system.lattice,
            "metric_scale": ExactQ(a.system.scale.clone()),
        },
        "mu": rep.highest_weight().to_string(),
        "dual_mu": rep.dual().highest_weight().to_string(),
        "dim": reps::weyl_dim(&rep),
        "rep_type": reps::classify_type(&rep),
        "bold_g": reps::bold_g_label(std::slice::from_ref(&rep)),
        "group_bold_g": reps::group_bold_g(&rs, a.system.lattice),
    }))
}

fn spectrum_report(a: &SpectrumArgs) -> Result<Value, Error> {
    let g = GroupSpec::new(a.su2, a.torus)?;
    let kappa = parse_kappa(&a.kappa)?;
    let reps = g.irreps_up_to(a.rep_cap);
    if a.numeric {
        if !(a.tol > 0.0 && a.tol.is_finite()) {
            return Err(Error::OutOfRange(format!("tolerance {}", a.tol)));
        }
        let spec = numeric::numeric_spectrum(&g, &reps, &kappa, a.tol)?;
        let assembled = numeric::assemble(&spec, a.ustar_dim);
        return Ok(json!({
            "group": g,
            "kappa": kappa,
            "numeric": true,
            "tol": a.tol,
            "ustar_dim": a.ustar_dim,
            "clusters": assembled,
        }));
    }
    let width = casimir_lab::rational::q(1, 1 << 30);
    let mut out = Vec::new();
    for r in &reps {
        let op = oplab::build_operator(&g, r, &kappa)?;
        if !op.is_self_adjoint() {
            return Err(Error::Inconsistent(format!("operator on {r} is not self-adjoint")));
        }
        let ex = oplab::exact_spectrum(&op, &width)?;
        let assembled: Vec<Value> = ex
            .roots_with_multiplicity()
            .into_iter()
            .map(|(_, m)| json!(a.ustar_dim * m * r.dual().dim()))
            .collect();
        let mut v = serde_json::to_value(&ex).map_err(|e| Error::Inconsistent(e.to_string()))?;
        v["assembled_dims"] = json!(assembled);
        out.push(v);
    }
    Ok(json!({
        "group": g,
        "kappa": kappa,
        "numeric": false,
        "ustar_dim": a.ustar_dim,
        "positive_definite": kappa.is_positive_definite(),
        "reps": out,
    }))
}

fn parse_irr(s: &str, rs: &RootSystem, factors: usize) -> Result<Irr, Error> {
    let parts: Vec<Vec<i64>> = s.split('|').map(parse_labels).collect::<Result<_, _>>()?;
    if parts.len() != factors {
        return Err(Error::ShapeMismatch(format!("expected {factors} weight factor(s), got {}", parts.len())));
    }
    for p in &parts {
        rank_check(rs, p)?;
    }
    Ok(Irr(parts))
}

fn estimate_report(a: &EstimateArgs) -> Result<Value, Error> {
    let rs = system(&a.system)?;
    let u = parse_ustar(&a.ustar, &rs)?;
    let factors = if matches!(u, KModule::Diagonal(_)) { 2 } else { 1 };
    let mu = parse_irr(&a.weight, &rs, factors)?;
    let e = spectra::generic_estimate(&rs, a.system.lattice, &u, &mu)?;
    serde_json::to_value(e).map_err(|e| Error::Inconsistent(e.to_string()))
}

fn spectral_report(a: &ReportArgs) -> Result<Value, Error> {
    let rs = system(&a.system)?;
    let u = parse_ustar(&a.ustar, &rs)?;
    let caps = HiddenCaps { size_cap: a.hidden_cap, ..HiddenCaps::default() };
    let v = if a.real {
        serde_json::to_value(spectra::real_spectrum_report(&rs, a.system.lattice, &u, &a.cap, caps)?)
    } else {
        serde_json::to_value(spectra::normal_spectrum_report(&rs, a.system.lattice, &u, &a.cap, caps)?)
    };
    v.map_err(|e| Error::Inconsistent(e.to_string()))
}

/// Builds the JSON report for a parsed command line.
pub fn execute(cli: &Cli) -> Result<Value, Error> {
    match &cli.command {
        Command::Classes(a) => envelope("classes", classes_report(a, false)?),
        Command::Coincidences(a) => envelope("coincidences", classes_report(a, true)?),
        Command::Hidden(a) => envelope("hidden", hidden_report(a)?),
        Command::Reptype(a) => envelope("reptype", reptype_report(a)?),
        Command::Certify(a) => {
            let g = GroupSpec::new(a.su2, a.torus)?;
            let c = oplab::certify(&g, a.rep_cap, Strategy { budget: a.budget, seed: a.seed })?;
            envelope("certify", c)
        }
        Command::Spectrum(a) => envelope("spectrum", spectrum_report(a)?),
        Command::Estimate(a) => envelope("estimate", estimate_report(a)?),
        Command::Report(a) => envelope("report", spectral_report(a)?),
        Command::HodgeRank1(a) => envelope("hodge-rank1", spectra::hodge_rank1_check(&a.cap)?),
    }
}

/// Plain-text rendering: one line per scalar field, nested values
/// flattened to dotted paths.
pub fn render_table(v: &Value) -> String {
    let mut out = String::new();
    flatten("", v, &mut out);
    out
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&p, x, out);
            }
        }
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = a.iter().map(scalar).collect();
            out.push_str(&format!("{prefix}\t[{}]\n", items.join(", ")));
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        _ => out.push_str(&format!("{prefix}\t{}\n", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn error_json(e: &Error) -> Value {
    match e {
        Error::CapExceeded { what, required, cap } => json!({
            "schema": SCHEMA,
            "error": "cap_exceeded",
            "reason": "refused: combinatorial cap",
            "what": what,
            "required": required,
            "cap": cap,
        }),
        Error::Inconsistent(m) => json!({
            "schema": SCHEMA,
            "error": "internal_consistency",
            "message": m,
        }),
        other => json!({
            "schema": SCHEMA,
            "error": "invalid_input",
            "message": other.to_string(),
        }),
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Inconsistent(_) => EXIT_INTERNAL,
        _ => EXIT_INVALID,
    }
}

/// Parses `args` (including the program name), runs the command and
/// writes the report. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok(v) => {
            let text = match cli.output {
                Output::Json => serde_json::to_string_pretty(&v).expect("values serialize") + "\n",
                Output::Table => render_table(&v),
            };
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "{}", error_json(&e));
            exit_code(&e)
        }
    }
}
