//! Command-line front end: `eval`, `verify`, `sweep` and `catalog`.
//!
//! Exit codes: 0 success, 1 numerical failure or a failed verification,
//! 2 bad input (including unknown identities), 3 parameters outside a
//! function's or identity's domain.

use crate::error::Error;
use crate::legendre::{derivs_norm, Family, LegendreParams, QNorm, Side};
use crate::numerics::C64;
use crate::shift::{IdentityId, ShiftRequest};
use crate::verify::{
    default_grid, list_identities, ode_residual, verify_grid, verify_request, GridPoint, GridSummary, OdeMode,
    VerificationReport, VerifyConfig,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::io::Write;

#[derive(Debug, Parser)]
#[command(name = "legfrac", version, about = "Legendre functions and their fractional shift identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at one point.
    Eval(EvalArgs),
    /// Check identities by quadrature against their closed forms.
    Verify(VerifyArgs),
    /// Evaluate along a range of one parameter and write CSV.
    Sweep(SweepArgs),
    /// Dump the identity catalog.
    Catalog(CatalogArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FnKind {
    P,
    Q,
    QOlver,
    FerrersP,
    FerrersQ,
    Jacobi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CutSide {
    Above,
    Below,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long = "fn", value_enum, ignore_case = true)]
    pub func: FnKind,
    #[arg(long, allow_hyphen_values = true)]
    pub nu: String,
    /// Order μ, or α for Jacobi.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub mu: String,
    /// β for Jacobi.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub beta: String,
    #[arg(long, allow_hyphen_values = true)]
    pub z: String,
    /// Edge of the cut for a real argument below 1.
    #[arg(long, value_enum, ignore_case = true)]
    pub side: Option<CutSide>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, conflicts_with = "all")]
    pub id: Option<String>,
    #[arg(long)]
    pub all: bool,
    /// Use each identity's default grid.
    #[arg(long, conflicts_with_all = ["grid", "nu"])]
    pub defaults: bool,
    /// JSON file holding a list of grid points.
    #[arg(long, conflicts_with = "nu")]
    pub grid: Option<std::path::PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<String>,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub mu: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, default_value = "2", allow_hyphen_values = true)]
    pub z: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub beta: String,
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    /// Use the large-argument form where one exists.
    #[arg(long)]
    pub far_field: bool,
    /// Perturb the dominant closed-form coefficient by this relative amount.
    #[arg(long, default_value_t = 0.0)]
    pub perturb: f64,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    #[arg(long)]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Function to sweep (mutually exclusive with --id).
    #[arg(long = "fn", value_enum, ignore_case = true, conflicts_with = "id", required_unless_present = "id")]
    pub func: Option<FnKind>,
    /// Identity to sweep, reporting the closed form and its relative error.
    #[arg(long)]
    pub id: Option<String>,
    /// Each parameter is a value or a range start:stop:count; exactly one
    /// must be a range.
    #[arg(long, allow_hyphen_values = true)]
    pub nu: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub mu: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    pub z: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub beta: String,
    #[arg(long, value_enum, ignore_case = true)]
    pub side: Option<CutSide>,
    #[arg(long)]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: exit_code(&e), message: e.to_string() }
    }
}

fn input(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn io(e: std::io::Error) -> Failure {
    Failure { code: 1, message: e.to_string() }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnknownIdentity(_) | Error::Invalid(_) => 2,
        Error::Pole(_) | Error::Degenerate(_) => 3,
        e if e.is_domain() => 3,
        _ => 1,
    }
}

/// Parses `1.5`, `-2`, `0.3+0.2i` or `1e-3-2i`.
pub fn parse_complex(s: &str) -> Result<C64, Failure> {
    let t = s.trim();
    if let Ok(x) = t.parse::<f64>() {
        return Ok(C64::new(x, 0.0));
    }
    t.parse::<C64>().map_err(|_| input(format!("cannot parse '{s}' as a complex number")))
}

/// A parameter given either as a value or as start:stop:count.
fn parse_values(s: &str) -> Result<(Vec<C64>, bool), Failure> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [v] => Ok((vec![parse_complex(v)?], false)),
        [a, b, n] => {
            let (a, b) = (parse_complex(a)?, parse_complex(b)?);
            let n: usize = n.trim().parse().map_err(|_| input(format!("bad count in range '{s}'")))?;
            if n == 0 {
                return Err(input(format!("range '{s}' has no points")));
            }
            let step = if n > 1 { (b - a) / (n - 1) as f64 } else { C64::new(0.0, 0.0) };
            Ok(((0..n).map(|k| a + step * k as f64).collect(), true))
        }
        _ => Err(input(format!("expected a value or start:stop:count, got '{s}'"))),
    }
}

fn parse_id(s: &str) -> Result<IdentityId, Failure> {
    s.parse::<IdentityId>().map_err(Failure::from)
}

#[derive(Debug, Clone, Serialize)]
struct EvalRecord {
    func: String,
    nu_re: f64,
    nu_im: f64,
    mu_re: f64,
    mu_im: f64,
    z_re: f64,
    z_im: f64,
    re: f64,
    im: f64,
    /// Disagreement with an independent route: the degree reflection for
    /// the P families, the Legendre equation residual for the Q families.
    err_estimate: f64,
    region: String,
}

fn family(f: FnKind) -> (Family, QNorm) {
    match f {
        FnKind::P => (Family::P, QNorm::Hobson),
        FnKind::Q => (Family::Q, QNorm::Hobson),
        FnKind::QOlver => (Family::Q, QNorm::Olver),
        FnKind::FerrersP => (Family::FerrersP, QNorm::Hobson),
        FnKind::FerrersQ => (Family::FerrersQ, QNorm::Hobson),
        FnKind::Jacobi => (Family::Jacobi, QNorm::Hobson),
    }
}

fn region(fam: Family, z: C64, side: Side) -> String {
    let ferrers = matches!(fam, Family::FerrersP | Family::FerrersQ);
    let base = if ferrers {
        "interval (−1, 1)"
    } else if z.im == 0.0 && z.re <= 1.0 {
        match side {
            Side::Above => "cut, upper edge",
            Side::Below => "cut, lower edge",
            Side::None => "cut",
        }
    } else {
        "off the cut"
    };
    let near = if ferrers { (1.0 - z.re.abs()) < 0.05 } else { (z - 1.0).norm() < 0.05 };
    if near {
        format!("{base}, near the singular point")
    } else if z.norm() > 20.0 {
        format!("{base}, large argument")
    } else {
        base.to_string()
    }
}

fn eval_one(func: FnKind, nu: C64, mu: C64, beta: C64, z: C64, side: Side) -> Result<EvalRecord, Failure> {
    let (fam, norm) = family(func);
    let mut p = LegendreParams::new(fam, nu, mu, z);
    p.beta = beta;
    p.side = side;
    let v = derivs_norm(&p, norm, 0)?[0];
    let err_estimate = match fam {
        Family::P | Family::FerrersP => {
            let mut r = p;
            r.nu = -nu - 1.0;
            (derivs_norm(&r, norm, 0)?[0] - v).norm()
        }
        Family::Q | Family::FerrersQ if side == Side::None => {
            let res = ode_residual(OdeMode::Homogeneous, fam, nu, mu, C64::new(0.0, 0.0), z)?;
            res.relative() * v.norm()
        }
        _ => 0.0,
    };
    Ok(EvalRecord {
        func: format!("{func:?}"),
        nu_re: nu.re,
        nu_im: nu.im,
        mu_re: mu.re,
        mu_im: mu.im,
        z_re: z.re,
        z_im: z.im,
        re: v.re,
        im: v.im,
        err_estimate,
        region: region(fam, z, side),
    })
}

fn side_of(s: Option<CutSide>) -> Side {
    match s {
        Some(CutSide::Above) => Side::Above,
        Some(CutSide::Below) => Side::Below,
        None => Side::None,
    }
}

fn json_line<T: Serialize>(out: &mut dyn Write, v: &T) -> Result<(), Failure> {
    let s = serde_json::to_string(v).map_err(|e| Failure { code: 1, message: e.to_string() })?;
    writeln!(out, "{s}").map_err(io)
}

fn cmd_eval(a: &EvalArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let rec = eval_one(
        a.func,
        parse_complex(&a.nu)?,
        parse_complex(&a.mu)?,
        parse_complex(&a.beta)?,
        parse_complex(&a.z)?,
        side_of(a.side),
    )?;
    match a.format {
        Format::Json => json_line(out, &rec)?,
        Format::Csv => {
            writeln!(out, "func,nu_re,nu_im,mu_re,mu_im,z_re,z_im,re,im,err_estimate,region").map_err(io)?;
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},\"{}\"",
                rec.func, rec.nu_re, rec.nu_im, rec.mu_re, rec.mu_im, rec.z_re, rec.z_im, rec.re, rec.im,
                rec.err_estimate, rec.region
            )
            .map_err(io)?;
        }
        Format::Table => writeln!(
            out,
            "{}  value {:.15e} {:+.15e}i  err {:.1e}  [{}]",
            rec.func, rec.re, rec.im, rec.err_estimate, rec.region
        )
        .map_err(io)?,
    }
    Ok(0)
}

#[derive(Debug, Serialize)]
struct ReportLine {
    identity: IdentityId,
    nu_re: f64,
    nu_im: f64,
    mu_re: f64,
    mu_im: f64,
    lambda_re: f64,
    lambda_im: f64,
    z_re: f64,
    z_im: f64,
    beta_re: f64,
    beta_im: f64,
    lhs_re: Option<f64>,
    lhs_im: Option<f64>,
    rhs_re: Option<f64>,
    rhs_im: Option<f64>,
    rel_err: Option<f64>,
    validity: bool,
    pass: bool,
}

impl From<&VerificationReport> for ReportLine {
    fn from(r: &VerificationReport) -> Self {
        let p = r.params;
        ReportLine {
            identity: r.identity,
            nu_re: p.nu.re,
            nu_im: p.nu.im,
            mu_re: p.mu.re,
            mu_im: p.mu.im,
            lambda_re: p.lambda.re,
            lambda_im: p.lambda.im,
            z_re: p.argument.re,
            z_im: p.argument.im,
            beta_re: p.beta.re,
            beta_im: p.beta.im,
            lhs_re: r.lhs.map(|q| q.value.re),
            lhs_im: r.lhs.map(|q| q.value.im),
            rhs_re: r.rhs.as_ref().map(|q| q.total.re),
            rhs_im: r.rhs.as_ref().map(|q| q.total.im),
            rel_err: r.rel_err,
            validity: r.validity,
            pass: r.pass,
        }
    }
}

#[derive(Debug, Serialize)]
struct SummaryLine<'a> {
    summary: IdentityId,
    points: usize,
    passed: usize,
    worst_rel_err: f64,
    failures: &'a [crate::verify::GridFailure],
}

const REPORT_HEADER: &str =
    "identity,nu_re,nu_im,mu_re,mu_im,lambda_re,lambda_im,z_re,z_im,beta_re,beta_im,lhs_re,lhs_im,rhs_re,rhs_im,rel_err,validity,pass";

fn opt(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn write_report(out: &mut dyn Write, fmt: Format, r: &VerificationReport) -> Result<(), Failure> {
    let l = ReportLine::from(r);
    match fmt {
        Format::Json => json_line(out, &l),
        Format::Csv => writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            l.identity, l.nu_re, l.nu_im, l.mu_re, l.mu_im, l.lambda_re, l.lambda_im, l.z_re, l.z_im, l.beta_re,
            l.beta_im, opt(l.lhs_re), opt(l.lhs_im), opt(l.rhs_re), opt(l.rhs_im), opt(l.rel_err), l.validity,
            l.pass
        )
        .map_err(io),
        Format::Table => {
            let p = r.params;
            let status = if r.pass {
                "pass".to_string()
            } else if !r.validity {
                format!("invalid ({})", r.violated.join(", "))
            } else {
                "FAIL".to_string()
            };
            writeln!(
                out,
                "  {:<22} ν={:<6} μ={:<6} λ={:<6} z={:<6} rel_err={:<10} {status}",
                r.identity.as_str(),
                short(p.nu),
                short(p.mu),
                short(p.lambda),
                short(p.argument),
                r.rel_err.map(|e| format!("{e:.2e}")).unwrap_or_else(|| "-".into()),
            )
            .map_err(io)
        }
    }
}

fn short(z: C64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

fn write_summary(out: &mut dyn Write, fmt: Format, s: &GridSummary) -> Result<(), Failure> {
    match fmt {
        Format::Json => json_line(
            out,
            &SummaryLine {
                summary: s.identity,
                points: s.points,
                passed: s.passed,
                worst_rel_err: s.worst_rel_err,
                failures: &s.failures,
            },
        ),
        // summaries are only reported in the other formats
        Format::Csv => Ok(()),
        Format::Table => {
            let tag = if s.all_valid_pass() { "ok" } else { "FAILED" };
            writeln!(
                out,
                "{:<22} {}/{} passed, worst rel_err {:.2e}  {tag}",
                s.identity.as_str(),
                s.passed,
                s.points,
                s.worst_rel_err
            )
            .map_err(io)?;
            for f in &s.failures {
                writeln!(out, "    {} at ν={} μ={} λ={} z={}", f.reason, short(f.params.nu), short(f.params.mu), short(f.params.lambda), short(f.params.argument))
                    .map_err(io)?;
            }
            Ok(())
        }
    }
}

fn read_grid(path: &std::path::Path) -> Result<Vec<GridPoint>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn open_output(path: &Option<std::path::PathBuf>) -> Result<Option<std::fs::File>, Failure> {
    path.as_ref()
        .map(|p| std::fs::File::create(p).map_err(|e| input(format!("{}: {e}", p.display()))))
        .transpose()
}

fn cmd_verify(a: &VerifyArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let ids: Vec<IdentityId> = match (&a.id, a.all) {
        (Some(s), false) => vec![parse_id(s)?],
        (None, true) => IdentityId::ALL.to_vec(),
        _ => return Err(input("give exactly one of --id and --all")),
    };
    if !a.defaults && a.grid.is_none() && a.nu.is_none() {
        return Err(input("give --defaults, --grid or explicit parameters"));
    }
    if !(a.tol > 0.0) {
        return Err(input("--tol must be positive"));
    }
    let cfg = VerifyConfig { tol: a.tol, far_field: a.far_field, perturb: a.perturb, ..VerifyConfig::default() };
    let mut file = open_output(&a.output)?;
    let out: &mut dyn Write = match file.as_mut() {
        Some(f) => f,
        None => stdout,
    };
    if a.format == Format::Csv {
        writeln!(out, "{REPORT_HEADER}").map_err(io)?;
    }

    // a single explicit point: domain violations are an input problem
    if let Some(nu) = &a.nu {
        let id = ids[0];
        if ids.len() > 1 {
            return Err(input("explicit parameters need a single --id"));
        }
        let mut req = ShiftRequest::new(
            id,
            parse_complex(nu)?,
            parse_complex(&a.mu)?,
            parse_complex(&a.lambda)?,
            parse_complex(&a.z)?,
        );
        req.beta = parse_complex(&a.beta)?;
        req.far_field = a.far_field;
        req.perturb = a.perturb;
        let r = verify_request(&req, &cfg)?;
        write_report(out, a.format, &r)?;
        if !r.validity {
            return Err(Failure { code: 3, message: format!("{id} outside its domain: {}", r.violated.join(", ")) });
        }
        return Ok(if r.pass { 0 } else { 1 });
    }

    let custom = a.grid.as_deref().map(read_grid).transpose()?;
    let mut ok = true;
    for id in ids {
        let grid = custom.clone().unwrap_or_else(|| default_grid(id));
        let s = verify_grid(id, &grid, &cfg)?;
        for r in &s.reports {
            write_report(out, a.format, r)?;
        }
        write_summary(out, a.format, &s)?;
        ok &= s.all_valid_pass();
    }
    Ok(if ok { 0 } else { 1 })
}

fn cmd_sweep(a: &SweepArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let names = ["nu", "mu", "lambda", "z", "beta"];
    let raw = [&a.nu, &a.mu, &a.lambda, &a.z, &a.beta];
    let mut vals = Vec::new();
    let mut swept = None;
    for (k, s) in raw.iter().enumerate() {
        let (v, is_range) = parse_values(s)?;
        if is_range {
            if swept.is_some() {
                return Err(input("sweep exactly one parameter"));
            }
            swept = Some(k);
        }
        vals.push(v);
    }
    let Some(k) = swept else { return Err(input("one parameter must be a range start:stop:count")) };
    let id = a.id.as_deref().map(parse_id).transpose()?;
    let mut file = open_output(&a.output)?;
    let out: &mut dyn Write = match file.as_mut() {
        Some(f) => f,
        None => stdout,
    };
    if id.is_some() {
        writeln!(out, "{}_re,{}_im,re,im,err_estimate,rel_err", names[k], names[k]).map_err(io)?;
    } else {
        writeln!(out, "{}_re,{}_im,re,im,err_estimate", names[k], names[k]).map_err(io)?;
    }
    let cfg = VerifyConfig::default();
    let mut worst = 0i32;
    for &x in &vals[k] {
        let mut p: Vec<C64> = vals.iter().map(|v| v[0]).collect();
        p[k] = x;
        let row = match (id, a.func) {
            (Some(id), _) => {
                let mut req = ShiftRequest::new(id, p[0], p[1], p[2], p[3]);
                req.beta = p[4];
                verify_request(&req, &cfg).map(|r| match (r.rhs, r.abs_err, r.rel_err) {
                    (Some(rhs), Some(abs), Some(rel)) => {
                        format!("{},{},{},{},{},{}", x.re, x.im, rhs.total.re, rhs.total.im, abs, rel)
                    }
                    _ => format!("{},{},,,,", x.re, x.im),
                })
                .map_err(Failure::from)
            }
            (None, Some(f)) => eval_one(f, p[0], p[1], p[4], p[3], side_of(a.side))
                .map(|r| format!("{},{},{},{},{}", x.re, x.im, r.re, r.im, r.err_estimate)),
            (None, None) => return Err(input("give --fn or --id")),
        };
        match row {
            Ok(line) => writeln!(out, "{line}").map_err(io)?,
            Err(f) => {
                worst = worst.max(f.code);
                eprintln!("legfrac: {} at {x}: {}", names[k], f.message);
            }
        }
    }
    Ok(worst)
}

fn cmd_catalog(a: &CatalogArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let cat = list_identities();
    match a.format {
        Format::Json => {
            let s = serde_json::to_string_pretty(cat).map_err(|e| Failure { code: 1, message: e.to_string() })?;
            writeln!(out, "{s}").map_err(io)?;
        }
        Format::Csv => {
            writeln!(out, "id,group,contour,points,formula").map_err(io)?;
            for e in cat {
                writeln!(
                    out,
                    "{},{:?},{:?},{},\"{}\"",
                    e.id,
                    e.id.group(),
                    e.contour,
                    e.default_grid.len(),
                    e.formula.replace('"', "\"\"")
                )
                .map_err(io)?;
            }
        }
        Format::Table => {
            for e in cat {
                writeln!(out, "{:<22} {}", e.id.as_str(), e.description).map_err(io)?;
                writeln!(out, "    {}", e.formula).map_err(io)?;
                let conds: Vec<String> = e.conditions.iter().map(|c| c.label()).collect();
                writeln!(out, "    when {}", conds.join("; ")).map_err(io)?;
            }
        }
    }
    Ok(0)
}

/// Runs a parsed command, writing results to `out` and returning the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> i32 {
    let r = match &cli.command {
        Command::Eval(a) => cmd_eval(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Sweep(a) => cmd_sweep(a, out),
        Command::Catalog(a) => cmd_catalog(a, out),
    };
    match r {
        Ok(code) => code,
        Err(f) => {
            eprintln!("legfrac: {}", f.message);
            f.code
        }
    }
}

/// Parses `args` and runs them. Bad flags exit with 2.
pub fn main_with<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            code
        }
    }
}
