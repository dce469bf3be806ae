//! Loop integrals (e^{iπλ}/2πi)∫ t^{−λ−1} g(t) dt around the origin,
//! starting and ending at c with arg t running from arg c to arg c + 2π.
//!
//! The Γ(λ+1) factor is left to the caller. For Re λ < 0 the loop collapses
//! onto the segment with weight sin(π(λ+1))/π. Otherwise the Taylor
//! polynomial of g at 0 is split off: its loop integral is exact, and the
//! remainder vanishes fast enough at 0 to collapse.

use super::de::{exp_sinh, tanh_sinh, DeOptions};
use super::{Point, QuadratureResult};
use crate::error::{Error, Result};
use crate::numerics::{cpow, sin_pi, C64, PI};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum LoopMethod {
    #[default]
    Auto,
    Collapsed,
    Regularized,
}

/// Below this Re λ the plain collapse is used by `Auto`; closer to 0 the
/// t^{−λ−1} endpoint is too strong for the segment rule.
const COLLAPSE_BELOW: f64 = -0.25;

fn loop_weight(lambda: C64) -> C64 {
    -sin_pi(lambda) / PI
}

/// sin(π(λ+1))/(π(j−λ)), finite as λ → j.
fn pole_weight(lambda: C64, j: usize) -> C64 {
    let d = lambda - j as f64;
    let sinc = if d.norm() < 1e-8 {
        1.0 - (PI * d).powi(2) / 6.0
    } else {
        sin_pi(d) / (PI * d)
    };
    if j % 2 == 0 {
        sinc
    } else {
        -sinc
    }
}

/// Taylor coefficients g_j ρ^j-scaled back to g_j, j < m, by the
/// trapezoidal rule on |t| = ρ.
pub(crate) fn taylor_coefficients<G>(g: &G, c: C64, rho: f64, m: usize) -> Result<Vec<C64>>
where
    G: Fn(Point) -> Result<C64>,
{
    let mut vals = Vec::with_capacity(m);
    let mut peak = 0.0f64;
    for k in 0..m {
        let t = C64::from_polar(rho, 2.0 * PI * k as f64 / m as f64);
        let v = g(Point { x: t, da: t, db: c - t })?;
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::Analyticity(format!("g is not finite at t = {t}")));
        }
        peak = peak.max(v.norm());
        vals.push(v);
    }
    let mut out = Vec::with_capacity(m);
    for j in 0..m {
        let mut s = C64::new(0.0, 0.0);
        for (k, v) in vals.iter().enumerate() {
            s += v * C64::from_polar(1.0, -2.0 * PI * (j * k % m) as f64 / m as f64);
        }
        out.push(s / m as f64);
    }
    // slow decay of the scaled coefficients means a singularity close to the circle
    let tail = out[m / 2..].iter().map(|v| v.norm()).fold(0.0, f64::max);
    if tail > 1e-6 * peak.max(f64::MIN_POSITIVE) {
        return Err(Error::Analyticity(format!(
            "g has a singularity within radius ~{rho} of the origin"
        )));
    }
    let mut scale = 1.0;
    for v in out.iter_mut() {
        *v /= scale;
        scale *= rho;
        if scale == 0.0 || !scale.is_finite() {
            break;
        }
    }
    Ok(out)
}

fn collapsed<G>(g: &G, c: C64, lambda: C64, end_exponent: f64) -> Result<QuadratureResult>
where
    G: Fn(Point) -> Result<C64>,
{
    let e = -lambda - 1.0;
    let mut r = tanh_sinh(
        |p: Point| Ok(cpow(p.da, e) * g(p)?),
        C64::new(0.0, 0.0),
        c,
        (-lambda.re - 1.0, end_exponent),
        DeOptions::default(),
    )?;
    let w = loop_weight(lambda);
    r.value *= w;
    r.err_estimate *= w.norm();
    Ok(r)
}

fn regularized<G>(g: &G, c: C64, lambda: C64, end_exponent: f64) -> Result<QuadratureResult>
where
    G: Fn(Point) -> Result<C64>,
{
    let n = (lambda.re.ceil() + 1.0).max(0.0) as usize;
    let m = (n + 60).next_power_of_two().max(64);
    let rho = c.norm() / 4.0;
    let coef = taylor_coefficients(g, c, rho, m)?;
    let tail_terms = (n + 56).min(m - 1);

    let poly = |t: C64| {
        let mut s = C64::new(0.0, 0.0);
        for j in (0..=n).rev() {
            s = s * t + coef[j];
        }
        s
    };
    let tail = |t: C64| {
        let mut s = C64::new(0.0, 0.0);
        for j in (n + 1..=tail_terms).rev() {
            s = s * t + coef[j];
        }
        s * t.powi(n as i32 + 1)
    };

    let mut total = C64::new(0.0, 0.0);
    let c_pow = cpow(c, -lambda);
    let mut cj = C64::new(1.0, 0.0);
    for j in 0..=n {
        total += pole_weight(lambda, j) * coef[j] * cj * c_pow;
        cj *= c;
    }

    let w = loop_weight(lambda);
    let mut err = 0.0;
    let mut evals = m;
    if w.norm() != 0.0 {
        let e = -lambda - 1.0;
        let r = tanh_sinh(
            |p: Point| {
                let t = p.da;
                let rem = if t.norm() < 0.5 * rho { tail(t) } else { g(p)? - poly(t) };
                Ok(cpow(t, e) * rem)
            },
            C64::new(0.0, 0.0),
            c,
            (n as f64 - lambda.re, end_exponent),
            DeOptions::default(),
        )?;
        total += w * r.value;
        err = w.norm() * r.err_estimate;
        evals += r.evaluations;
    }
    Ok(QuadratureResult { value: total, err_estimate: err, evaluations: evals })
}

/// Bare loop over (c, 0+, c) with the e^{iπλ}/2πi prefactor.
///
/// `end_exponent` declares algebraic behavior of g at t = c.
pub fn integrate_loop<G>(g: G, c: C64, lambda: C64, end_exponent: f64) -> Result<QuadratureResult>
where
    G: Fn(Point) -> Result<C64>,
{
    integrate_loop_with(g, c, lambda, end_exponent, LoopMethod::Auto)
}

pub fn integrate_loop_with<G>(
    g: G,
    c: C64,
    lambda: C64,
    end_exponent: f64,
    method: LoopMethod,
) -> Result<QuadratureResult>
where
    G: Fn(Point) -> Result<C64>,
{
    if c.norm() == 0.0 {
        return Err(Error::Invalid("loop endpoint must be nonzero".into()));
    }
    match method {
        LoopMethod::Collapsed => {
            if lambda.re >= 0.0 {
                return Err(Error::Domain(format!("collapsed loop needs Re λ < 0, got {lambda}")));
            }
            collapsed(&g, c, lambda, end_exponent)
        }
        LoopMethod::Regularized => regularized(&g, c, lambda, end_exponent),
        LoopMethod::Auto if lambda.re < COLLAPSE_BELOW => collapsed(&g, c, lambda, end_exponent),
        LoopMethod::Auto => regularized(&g, c, lambda, end_exponent),
    }
}

/// Bare loop over (∞, 0+, ∞) along the ray through c: the finite loop to c
/// plus the two collapsed banks beyond it. `decay` is the algebraic decay of
/// g itself at infinity.
pub fn integrate_weyl_loop<G>(g: G, c: C64, lambda: C64, decay: f64) -> Result<QuadratureResult>
where
    G: Fn(Point) -> Result<C64>,
{
    let mut r = integrate_loop(&g, c, lambda, 0.0)?;
    let w = loop_weight(lambda);
    if w.norm() != 0.0 {
        let e = -lambda - 1.0;
        let far = exp_sinh(
            |p: Point| {
                let q = Point { x: p.x, da: p.x, db: c - p.x };
                Ok(cpow(p.x, e) * g(q)?)
            },
            c,
            c,
            0.0,
            decay + lambda.re + 1.0,
            DeOptions::default(),
        )?;
        r.value += w * far.value;
        r.err_estimate += w.norm() * far.err_estimate;
        r.evaluations += far.evaluations;
    }
    Ok(r)
}
