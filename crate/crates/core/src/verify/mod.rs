//! The referee: evaluates each identity's integral side by quadrature and
//! its closed form by the shift operators, and reports how well they agree.

mod catalog;
mod lhs;
mod ode;

pub use catalog::{default_grid, entry, list_identities, GridPoint, IdentityEntry, LhsContour};
pub use lhs::integral_side;
pub use ode::{ode_residual, OdeMode, OdeResidual};

use crate::error::{Error, Result};
use crate::quad::QuadratureResult;
use crate::shift::{predict, IdentityId, Prediction, ShiftRequest};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

const REL_FLOOR: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Pass threshold on the relative error.
    pub tol: f64,
    /// Integrand evaluations allowed for one integral side.
    pub max_evaluations: usize,
    /// Use the large-argument form where an identity has one.
    pub far_field: bool,
    /// Relative perturbation of the dominant closed-form coefficient.
    pub perturb: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { tol: 1e-6, max_evaluations: 5_000_000, far_field: false, perturb: 0.0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub params: GridPoint,
    pub lhs: Option<QuadratureResult>,
    pub rhs: Option<Prediction>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub pass: bool,
    pub validity: bool,
    /// Conditions that fail at these parameters.
    pub violated: Vec<String>,
}

/// Verifies one request. Parameters outside the identity's domain give a
/// report with `validity = false` naming the failed conditions; a failed
/// or over-budget quadrature is an error, distinct from a mismatch.
pub fn verify_request(req: &ShiftRequest, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let params = GridPoint { nu: req.nu, mu: req.mu, lambda: req.lambda, argument: req.argument, beta: req.beta };
    let v = req.validity();
    let mut report = VerificationReport {
        identity: req.id,
        params,
        lhs: None,
        rhs: None,
        abs_err: None,
        rel_err: None,
        pass: false,
        validity: v.holds,
        violated: v.violated,
    };
    if !report.validity {
        return Ok(report);
    }
    let lhs = integral_side(req)?;
    if lhs.evaluations > cfg.max_evaluations {
        return Err(Error::Quadrature(format!(
            "{} used {} evaluations, budget {}",
            req.id, lhs.evaluations, cfg.max_evaluations
        )));
    }
    let rhs = predict(req)?;
    let abs = (lhs.value - rhs.total).norm();
    let rel = abs / rhs.total.norm().max(REL_FLOOR);
    report.pass = rel < cfg.tol;
    report.abs_err = Some(abs);
    report.rel_err = Some(rel);
    report.lhs = Some(lhs);
    report.rhs = Some(rhs);
    Ok(report)
}

pub fn verify_identity(id: IdentityId, point: GridPoint, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let mut req = point.request(id);
    req.far_field = cfg.far_field;
    req.perturb = cfg.perturb;
    verify_request(&req, cfg)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridFailure {
    pub params: GridPoint,
    /// Whether the point was inside the identity's domain.
    pub valid: bool,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSummary {
    pub identity: IdentityId,
    pub points: usize,
    pub passed: usize,
    pub worst_rel_err: f64,
    pub failures: Vec<GridFailure>,
    pub reports: Vec<VerificationReport>,
}

impl GridSummary {
    /// True when every point inside the domain passed.
    pub fn all_valid_pass(&self) -> bool {
        self.failures.iter().all(|f| !f.valid)
    }
}

/// Verifies every point of `grid` in parallel. Reports and failures come
/// back sorted by parameter tuple, so the summary does not depend on the
/// order in which points finish.
pub fn verify_grid(id: IdentityId, grid: &[GridPoint], cfg: &VerifyConfig) -> Result<GridSummary> {
    if grid.is_empty() {
        return Err(Error::Invalid(format!("empty grid for {id}")));
    }
    let mut points: Vec<GridPoint> = grid.to_vec();
    points.sort_by(|a, b| cmp_keys(&a.key(), &b.key()));
    let results: Vec<(GridPoint, Result<VerificationReport>)> =
        points.par_iter().map(|&p| (p, verify_identity(id, p, cfg))).collect();
    let mut summary = GridSummary {
        identity: id,
        points: points.len(),
        passed: 0,
        worst_rel_err: 0.0,
        failures: Vec::new(),
        reports: Vec::new(),
    };
    for (p, r) in results {
        match r {
            Ok(rep) => {
                if rep.pass {
                    summary.passed += 1;
                } else if !rep.validity {
                    summary.failures.push(GridFailure {
                        params: p,
                        valid: false,
                        reason: format!("outside domain: {}", rep.violated.join(", ")),
                    });
                } else {
                    summary.failures.push(GridFailure {
                        params: p,
                        valid: true,
                        reason: format!("mismatch: rel_err {:.3e}", rep.rel_err.unwrap_or(f64::NAN)),
                    });
                }
                if let Some(e) = rep.rel_err {
                    summary.worst_rel_err = summary.worst_rel_err.max(e);
                }
                summary.reports.push(rep);
            }
            Err(e) => summary.failures.push(GridFailure { params: p, valid: true, reason: e.to_string() }),
        }
    }
    Ok(summary)
}

fn cmp_keys(a: &[f64; 10], b: &[f64; 10]) -> std::cmp::Ordering {
    a.iter().zip(b).map(|(x, y)| x.total_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
}
