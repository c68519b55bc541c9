use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use wulff_core::diagnostics::{self, constancy_diagnosis_tol, law_check, monotone_check, run_law_suite, PassReport};
use wulff_core::families::{form_body, gauge_envelope, parallel_body, sample_curve, wulff_body};
use wulff_core::metrics::{classical_surface, inradius, volume};
use wulff_core::{GridSpec, LawId, LawParams, Polytope, Quotient};

use crate::body_file::{read_body, read_directions, write_body, BodyFile};
use crate::curve_file::{self, write_curve};
use crate::{svg, CliError};

const DEFAULT_SEED: u64 = 2024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "wulff", version, about = "Relative isoperimetric quotients of convex polytopes")]
pub struct Cli {
    /// Tolerance used for pass/fail verdicts (defaults depend on the check).
    #[arg(long, global = true)]
    pub eps: Option<f64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertices, facets, volume and surface area of a body.
    Info { body: PathBuf },
    /// Relative inradius of K with respect to E, with the incenter.
    Inradius { k: PathBuf, e: PathBuf },
    /// Parallel body K_λ.
    Parallel {
        k: PathBuf,
        e: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Wulff shape K(Ω,λ).
    Wulff {
        k: PathBuf,
        e: PathBuf,
        /// `axes`, a direction file, or a body file whose facet normals are used.
        #[arg(long)]
        omega: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Form body K* = E^{U(K)}.
    Formbody {
        k: PathBuf,
        e: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Gauge envelope E^Ω.
    Envelope {
        e: PathBuf,
        #[arg(long)]
        omega: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Quotient curve along the parallel (and optionally Wulff) family.
    Curve(CurveArgs),
    /// Check one law on a given pair, or on a seeded random batch.
    Check(CheckArgs),
    /// Constancy diagnosis on [l0, l1].
    Diagnose {
        k: PathBuf,
        e: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        l0: f64,
        #[arg(long, allow_hyphen_values = true)]
        l1: f64,
    },
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    pub k: PathBuf,
    pub e: PathBuf,
    #[arg(long)]
    pub omega: Option<String>,
    /// Lower end of a uniform grid; without it the grid clusters near -r.
    #[arg(long, allow_hyphen_values = true)]
    pub lmin: Option<f64>,
    #[arg(long, allow_hyphen_values = true, default_value_t = 4.0)]
    pub lmax: f64,
    #[arg(long, default_value_t = 64)]
    pub steps: usize,
    /// Comma-separated list such as `I,IO,I1,I02`.
    #[arg(long, value_delimiter = ',')]
    pub quotients: Vec<String>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub law: String,
    pub k: Option<PathBuf>,
    pub e: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub l0: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub l1: Option<f64>,
    /// Reference parameter of the Wulff shift identity.
    #[arg(long = "big-lambda", allow_hyphen_values = true)]
    pub big_lambda: Option<f64>,
    #[arg(long)]
    pub mu: Option<f64>,
    /// Finite-difference step.
    #[arg(long)]
    pub h: Option<f64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub lambdas: Vec<f64>,
    #[arg(long)]
    pub omega: Option<String>,
    #[arg(long)]
    pub omega2: Option<String>,
    /// Dimension of random instances when no bodies are given.
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    /// Number of random instances when no bodies are given.
    #[arg(long, default_value_t = 10)]
    pub count: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

fn emit_body(out: &mut dyn Write, p: &Polytope, path: Option<&Path>, label: &str, format: Format) -> Result<(), CliError> {
    if let Some(path) = path {
        write_body(path, p, Some(label))?;
    }
    match format {
        Format::Json => writeln!(out, "{}", BodyFile::from_polytope(p, Some(label)).to_json())?,
        Format::Csv => {
            for v in p.vertices() {
                let c: Vec<String> = v.coords(p.dim()).iter().map(|x| format!("{x:.16e}")).collect();
                writeln!(out, "{}", c.join(","))?;
            }
        }
    }
    Ok(())
}

fn emit_pairs(out: &mut dyn Write, value: &Value, format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(value).unwrap())?,
        Format::Csv => {
            if let Value::Object(map) = value {
                for (k, v) in map {
                    let cell = match v {
                        Value::Array(xs) => xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    writeln!(out, "{k},{cell}")?;
                }
            }
        }
    }
    Ok(())
}

fn report_json(r: &PassReport) -> Value {
    json!({
        "law": r.law.name(),
        "passed": r.passed,
        "residual": r.residual,
        "tolerance": r.tolerance,
        "breakpoints": r.breakpoints,
        "detail": r.detail,
    })
}

fn pair(k: &Path, e: &Path) -> Result<(Polytope, Polytope), CliError> {
    let (k, _) = read_body(k)?;
    let (e, _) = read_body(e)?;
    if k.dim() != e.dim() {
        return Err(CliError::Input(format!("K is {}-dimensional but E is {}-dimensional", k.dim(), e.dim())));
    }
    Ok((k, e))
}

/// Runs a parsed command line, writing results to `out`; returns the exit
/// status (0 pass, 1 law violation).
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let fmt = cli.format.unwrap_or(Format::Json);
    match &cli.command {
        Command::Info { body } => {
            let (p, label) = read_body(body)?;
            let n = p.dim();
            let v = json!({
                "label": label,
                "dim": n,
                "full_dim": p.is_full_dim(),
                "affine_dim": p.affine_dim(),
                "vertices": p.vertices().iter().map(|v| v.coords(n).to_vec()).collect::<Vec<_>>(),
                "facets": p.facets().iter().map(|f| json!({
                    "normal": f.normal.vector().coords(n).to_vec(),
                    "offset": f.offset,
                })).collect::<Vec<_>>(),
                "volume": volume(&p),
                "surface": classical_surface(&p).ok(),
            });
            emit_pairs(out, &v, fmt)?;
            Ok(0)
        }
        Command::Inradius { k, e } => {
            let (k, e) = pair(k, e)?;
            let inr = inradius(&k, &e)?;
            let v = json!({ "r": inr.r, "center": inr.center.coords(k.dim()).to_vec() });
            emit_pairs(out, &v, fmt)?;
            Ok(0)
        }
        Command::Parallel { k, e, lambda, output } => {
            let (k, e) = pair(k, e)?;
            let p = parallel_body(&k, &e, *lambda)?;
            emit_body(out, &p, output.as_deref(), &format!("K_{lambda}"), fmt)?;
            Ok(0)
        }
        Command::Wulff { k, e, omega, lambda, output } => {
            let (k, e) = pair(k, e)?;
            let om = read_directions(omega, k.dim())?;
            let p = wulff_body(&k, &e, &om, *lambda)?;
            emit_body(out, &p, output.as_deref(), &format!("K(Omega,{lambda})"), fmt)?;
            Ok(0)
        }
        Command::Formbody { k, e, output } => {
            let (k, e) = pair(k, e)?;
            let p = form_body(&k, &e)?;
            emit_body(out, &p, output.as_deref(), "K*", fmt)?;
            Ok(0)
        }
        Command::Envelope { e, omega, output } => {
            let (e, _) = read_body(e)?;
            let om = read_directions(omega, e.dim())?;
            let p = gauge_envelope(&e, &om)?;
            emit_body(out, &p, output.as_deref(), "E^Omega", fmt)?;
            Ok(0)
        }
        Command::Curve(a) => curve(cli, a, out),
        Command::Check(a) => check(cli, a, out),
        Command::Diagnose { k, e, l0, l1 } => {
            let (k, e) = pair(k, e)?;
            let tol = cli.eps.unwrap_or(diagnostics::MONOTONE_TOL);
            let rep = constancy_diagnosis_tol(&k, &e, *l0, *l1, tol)?;
            let ok = rep.consistent() && rep.monotone;
            let v = json!({
                "lambda0": rep.lambda0,
                "lambda1": rep.lambda1,
                "quotients": [rep.quotients.0, rep.quotients.1],
                "equal_quotients": rep.equal_quotients,
                "homothety": rep.homothety.map(|w| json!({
                    "scale": w.scale,
                    "translation": w.translation.coords(k.dim()).to_vec(),
                })),
                "tangential": rep.tangential,
                "constant_on_grid": rep.constant_on_grid,
                "verdicts_agree": rep.consistent(),
                "monotone": rep.monotone,
                "max_rise": rep.max_rise,
                "constancy_intervals": rep.constancy_intervals.iter().map(|(a, b)| [*a, *b]).collect::<Vec<_>>(),
                "p_tangential": rep.p_tangential.iter().map(|(p, b)| json!({"p": p, "holds": b})).collect::<Vec<_>>(),
                "r_class": rep.r_class,
                "homothetic_to_gauge": rep.homothetic_to_gauge,
                "at_gauge_bound": rep.at_gauge_bound,
                "notes": rep.notes,
            });
            emit_pairs(out, &v, fmt)?;
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn curve(cli: &Cli, a: &CurveArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let (k, e) = pair(&a.k, &a.e)?;
    let omega = a.omega.as_deref().map(|s| read_directions(s, k.dim())).transpose()?;
    let mut qs = a
        .quotients
        .iter()
        .map(|s| s.parse::<Quotient>())
        .collect::<Result<Vec<_>, _>>()?;
    if omega.is_some() && !qs.contains(&Quotient::IOmega) {
        qs.push(Quotient::IOmega);
    }
    let grid = match a.lmin {
        Some(lmin) => GridSpec::Uniform { lmin, lmax: a.lmax, steps: a.steps },
        None => GridSpec::Clustered { lmax: a.lmax, points: a.steps },
    };
    let c = sample_curve(&k, &e, &grid, omega.as_ref(), &qs)?;
    if let Some(path) = &a.output {
        let f = fs::File::create(path).map_err(|err| CliError::Input(format!("{}: {err}", path.display())))?;
        write_curve(&c, f)?;
    }
    if let Some(path) = &a.svg {
        fs::write(path, svg::render(&c)).map_err(|err| CliError::Input(format!("{}: {err}", path.display())))?;
    }
    let tol = cli.eps.unwrap_or(diagnostics::MONOTONE_TOL);
    let (mono, rise) = monotone_check(&c, tol);
    match cli.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            if a.output.is_none() {
                write_curve(&c, &mut *out)?;
            }
        }
        Format::Json => {
            let v = json!({
                "inradius": c.inradius,
                "columns": curve_file::header(&c),
                "rows": curve_file::rows(&c),
                "monotone": mono,
                "max_rise": rise,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap())?;
        }
    }
    Ok(0)
}

fn check(cli: &Cli, a: &CheckArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let law: LawId = a.law.parse()?;
    let reports = match (&a.k, &a.e) {
        (Some(k), Some(e)) => {
            let (k, e) = pair(k, e)?;
            let dirs = |s: &Option<String>| s.as_deref().map(|s| read_directions(s, k.dim())).transpose();
            let params = LawParams {
                lambda: a.lambda,
                lambda0: a.l0,
                lambda1: a.l1,
                big_lambda: a.big_lambda,
                mu: a.mu,
                h: a.h,
                tol: cli.eps,
                omega: dirs(&a.omega)?,
                omega2: dirs(&a.omega2)?,
                lambdas: a.lambdas.clone(),
            };
            vec![law_check(law, &k, &e, &params)?]
        }
        (None, None) => {
            if a.dim != 2 && a.dim != 3 {
                return Err(CliError::Input(format!("--dim must be 2 or 3, got {}", a.dim)));
            }
            if cli.eps.is_none() {
                run_law_suite(law, a.dim, a.count, a.seed)?.reports
            } else {
                let mut reports = Vec::with_capacity(a.count);
                for i in 0..a.count {
                    let (k, e, mut p) = diagnostics::random_instance(law, a.dim, a.seed, i as u64)?;
                    p.tol = cli.eps;
                    reports.push(law_check(law, &k, &e, &p)?);
                }
                reports
            }
        }
        _ => return Err(CliError::Input("give both K and E, or neither for a random batch".into())),
    };
    let passed = reports.iter().all(|r| r.passed);
    match cli.format.unwrap_or(Format::Json) {
        Format::Json => {
            let v = json!({
                "law": law.name(),
                "seed": a.seed,
                "passed": passed,
                "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap())?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["law", "passed", "residual", "tolerance", "breakpoints", "detail"])?;
            for r in &reports {
                w.write_record([
                    r.law.name().to_string(),
                    r.passed.to_string(),
                    format!("{:.16e}", r.residual),
                    format!("{:.16e}", r.tolerance),
                    r.breakpoints.to_string(),
                    r.detail.clone(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(if passed { 0 } else { 1 })
}
