//! Associated Legendre functions P_ν^μ(z), Q_ν^μ(z) off the cut (−∞, 1],
//! Ferrers functions on (−1, 1), Jacobi functions, their z-derivatives and
//! the Whipple transformations.
//!
//! Q carries the e^{iπμ} (Hobson) phase; [`QNorm::Olver`] divides it out
//! together with Γ(ν+μ+1).

mod terms;
mod whipple;

pub use whipple::{whipple_argument, whipple_indices, whipple_offset, whipple_offset_at, whipple_p_to_q, whipple_q_to_p};

use crate::error::{Error, Result};
use crate::hyper::DEGENERATE_EPS;
use crate::numerics::{as_integer, c, exp_i_pi, gamma_ratio, rgamma, sin_pi, cos_pi, GammaRatioSpec, C64, I, PI};
use serde::{Deserialize, Serialize};
use terms::{eval_sum, Arg, Frame, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    P,
    Q,
    FerrersP,
    FerrersQ,
    Jacobi,
}

/// Which edge of the cut (−∞, 1] a real argument is taken on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Side {
    #[default]
    None,
    Above,
    Below,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum QNorm {
    #[default]
    Hobson,
    Olver,
}

/// One function evaluation. For Jacobi, `mu` holds α and `beta` holds β.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LegendreParams {
    pub family: Family,
    pub nu: C64,
    pub mu: C64,
    pub beta: C64,
    pub argument: C64,
    pub side: Side,
}

impl LegendreParams {
    pub fn new(family: Family, nu: C64, mu: C64, argument: C64) -> Self {
        Self { family, nu, mu, beta: C64::new(0.0, 0.0), argument, side: Side::None }
    }

    pub fn eval(&self) -> Result<C64> {
        Ok(derivs(self, 0)?[0])
    }
}

/// Step used for one-sided limits x ± i0.
pub const BOUNDARY_EPS: f64 = 1e-10;
/// |(1−z)/2| below this uses the expansion about z = 1.
const NEAR_RADIUS: f64 = 0.75;

fn on_cut(d: C64) -> bool {
    d.im == 0.0 && d.re <= 0.0
}

fn near_int(z: C64) -> bool {
    (z - z.re.round()).norm() < 1e-5
}

fn limit3<F>(f: F) -> Result<[C64; 3]>
where
    F: Fn(C64) -> Result<[C64; 3]>,
{
    let e = DEGENERATE_EPS;
    let a = f(I * e)?;
    let b = f(-I * e)?;
    let c2 = f(I * (2.0 * e))?;
    let d = f(-I * (2.0 * e))?;
    let mut out = [C64::new(0.0, 0.0); 3];
    for k in 0..3 {
        let g1 = (a[k] + b[k]) * 0.5;
        let g2 = (c2[k] + d[k]) * 0.5;
        out[k] = (g1 * 4.0 - g2) / 3.0;
    }
    Ok(out)
}

fn p_terms(nu: C64, mu: C64) -> [Term; 1] {
    [Term {
        coef: c(1.0, 0.0),
        p: mu * 0.5,
        q: -mu * 0.5,
        a: -nu,
        b: nu + 1.0,
        c: 1.0 - mu,
        arg: Arg::Near,
    }]
}

fn p_derivs(nu: C64, mu: C64, d: C64, wt: C64, order: usize) -> Result<[C64; 3]> {
    eval_sum(&p_terms(nu, mu), d, Frame::Plane, wt, order)
}

/// The two regularized pieces shared by Q near z = 1 and by Ferrers 𝖰:
/// T₁ = ((z+1)/(z−1))^{μ/2}₂F̃₁(−ν,ν+1;1−μ;w), T₂ = ((z−1)/(z+1))^{μ/2}₂F̃₁(−ν,ν+1;1+μ;w).
fn pair_terms(nu: C64, mu: C64, c1: C64, c2: C64) -> [Term; 2] {
    [
        Term { coef: c1, p: mu * 0.5, q: -mu * 0.5, a: -nu, b: nu + 1.0, c: 1.0 - mu, arg: Arg::Near },
        Term { coef: c2, p: -mu * 0.5, q: mu * 0.5, a: -nu, b: nu + 1.0, c: 1.0 + mu, arg: Arg::Near },
    ]
}

fn q_near_direct(nu: C64, mu: C64, d: C64, wt: C64, norm: QNorm, order: usize) -> Result<[C64; 3]> {
    let s = PI / (2.0 * sin_pi(mu));
    let terms = match norm {
        QNorm::Hobson => {
            let ph = exp_i_pi(mu) * s;
            let ratio = gamma_ratio(&GammaRatioSpec::new(&[nu + mu + 1.0], &[nu - mu + 1.0]))?;
            pair_terms(nu, mu, ph, -ph * ratio)
        }
        QNorm::Olver => pair_terms(nu, mu, s * rgamma(nu + mu + 1.0), -s * rgamma(nu - mu + 1.0)),
    };
    eval_sum(&terms, d, Frame::Plane, wt, order)
}

fn q_far(nu: C64, mu: C64, d: C64, wt: C64, norm: QNorm, order: usize) -> Result<[C64; 3]> {
    let g = match norm {
        QNorm::Hobson => {
            exp_i_pi(mu) * gamma_ratio(&GammaRatioSpec::new(&[nu + 1.0, nu + mu + 1.0], &[]))?
        }
        QNorm::Olver => gamma_ratio(&GammaRatioSpec::new(&[nu + 1.0], &[]))?,
    };
    let coef = crate::numerics::cpow(c(2.0, 0.0), nu) * g;
    let t = [Term {
        coef,
        p: mu * 0.5,
        q: -nu - mu * 0.5 - 1.0,
        a: nu + mu + 1.0,
        b: nu + 1.0,
        c: 2.0 * nu + 2.0,
        arg: Arg::Far,
    }];
    eval_sum(&t, d, Frame::Plane, wt, order)
}

fn q_derivs(nu: C64, mu: C64, d: C64, wt: C64, norm: QNorm, order: usize) -> Result<[C64; 3]> {
    if (d * 0.5).norm() < NEAR_RADIUS {
        if near_int(mu) {
            limit3(|e| q_near_direct(nu, mu + e, d, wt, norm, order))
        } else {
            q_near_direct(nu, mu, d, wt, norm, order)
        }
    } else {
        q_far(nu, mu, d, wt, norm, order)
    }
}

fn one_sided<F>(d: C64, side: Side, f: F) -> Result<[C64; 3]>
where
    F: Fn(C64) -> Result<[C64; 3]>,
{
    let s = match side {
        Side::Above => 1.0,
        Side::Below => -1.0,
        Side::None => {
            return Err(Error::BranchCut(format!(
                "argument {} lies on the cut (−∞, 1]; choose a side",
                d + 1.0
            )))
        }
    };
    let a = f(d + I * (s * BOUNDARY_EPS))?;
    let b = f(d + I * (2.0 * s * BOUNDARY_EPS))?;
    Ok([a[0] * 2.0 - b[0], a[1] * 2.0 - b[1], a[2] * 2.0 - b[2]])
}

/// The offset x − 1 of a Ferrers argument. Real arguments must lie in
/// (−1, 1); complex ones continue the functions off the interval.
fn check_ferrers(d: C64) -> Result<C64> {
    if d.im == 0.0 && !(d.re > -2.0 && d.re < 0.0) {
        return Err(Error::Domain(format!(
            "Ferrers argument must be real in (−1, 1), got {}",
            d + 1.0
        )));
    }
    Ok(d)
}

fn ferrers_p_derivs(nu: C64, mu: C64, d: C64, wt: C64, order: usize) -> Result<[C64; 3]> {
    eval_sum(&p_terms(nu, mu), d, Frame::Cut, wt, order)
}

fn ferrers_q_direct(nu: C64, mu: C64, d: C64, wt: C64, order: usize) -> Result<[C64; 3]> {
    let s = PI / (2.0 * sin_pi(mu));
    let ratio = gamma_ratio(&GammaRatioSpec::new(&[nu + mu + 1.0], &[nu - mu + 1.0]))?;
    let t = pair_terms(nu, mu, s * cos_pi(mu), -s * ratio);
    eval_sum(&t, d, Frame::Cut, wt, order)
}

fn ferrers_q_derivs(nu: C64, mu: C64, d: C64, wt: C64, order: usize) -> Result<[C64; 3]> {
    if near_int(mu) {
        limit3(|e| ferrers_q_direct(nu, mu + e, d, wt, order))
    } else {
        ferrers_q_direct(nu, mu, d, wt, order)
    }
}

fn jacobi_derivs(nu: C64, alpha: C64, beta: C64, d: C64, order: usize) -> Result<[C64; 3]> {
    let coef = gamma_ratio(&GammaRatioSpec::new(&[nu + alpha + 1.0], &[nu + 1.0]))?;
    let t = [Term {
        coef,
        p: c(0.0, 0.0),
        q: c(0.0, 0.0),
        a: -nu,
        b: nu + alpha + beta + 1.0,
        c: alpha + 1.0,
        arg: Arg::Near,
    }];
    eval_sum(&t, d, Frame::Plane, c(0.0, 0.0), order)
}

/// Value and the first `order` (≤ 2) derivatives with respect to the argument.
pub fn derivs(p: &LegendreParams, order: usize) -> Result<[C64; 3]> {
    derivs_norm(p, QNorm::Hobson, order)
}

pub fn derivs_norm(p: &LegendreParams, norm: QNorm, order: usize) -> Result<[C64; 3]> {
    derivs_at(p, p.argument - 1.0, c(0.0, 0.0), norm, order)
}

/// Core evaluator at argument 1 + d, with the weight exponent `wt` added
/// to both (z+1) and (z−1) (or (1+x) and (1−x) for Ferrers).
fn derivs_at(p: &LegendreParams, d: C64, wt: C64, norm: QNorm, order: usize) -> Result<[C64; 3]> {
    if order > 2 {
        return Err(Error::Invalid("derivative order above 2".into()));
    }
    let (nu, mu) = (p.nu, p.mu);
    match p.family {
        Family::P => {
            if on_cut(d) {
                one_sided(d, p.side, |d| p_derivs(nu, mu, d, wt, order))
            } else {
                p_derivs(nu, mu, d, wt, order)
            }
        }
        Family::Q => {
            if on_cut(d) {
                one_sided(d, p.side, |d| q_derivs(nu, mu, d, wt, norm, order))
            } else {
                q_derivs(nu, mu, d, wt, norm, order)
            }
        }
        Family::FerrersP => ferrers_p_derivs(nu, mu, check_ferrers(d)?, wt, order),
        Family::FerrersQ => ferrers_q_derivs(nu, mu, check_ferrers(d)?, wt, order),
        Family::Jacobi => jacobi_derivs(nu, mu, p.beta, d, order),
    }
}

/// (z²−1)^{sμ/2} F_ν^μ(z) for F = P, Q, or (1−x²)^{sμ/2} F for the Ferrers
/// pair, at argument 1 + d.
///
/// Taking the offset d rather than the argument keeps the weighted value
/// accurate as the argument approaches 1, where F alone is singular.
pub fn weighted(family: Family, nu: C64, mu: C64, s: f64, d: C64) -> Result<C64> {
    if family == Family::Jacobi {
        return Err(Error::Invalid("weighted form is defined for the Legendre families".into()));
    }
    let p = LegendreParams::new(family, nu, mu, d + 1.0);
    Ok(derivs_at(&p, d, mu * (0.5 * s), QNorm::Hobson, 0)?[0])
}

/// Jacobi function at argument 1 + d.
pub fn jacobi_p_offset(nu: C64, alpha: C64, beta: C64, d: C64) -> Result<C64> {
    Ok(jacobi_derivs(nu, alpha, beta, d, 0)?[0])
}

/// P_ν^μ(z) for z off (−∞, 1].
pub fn legendre_p(nu: C64, mu: C64, z: C64) -> Result<C64> {
    legendre_p_side(nu, mu, z, Side::None)
}

/// P_ν^μ(z), with z on the cut read as z ± i0.
pub fn legendre_p_side(nu: C64, mu: C64, z: C64, side: Side) -> Result<C64> {
    let mut p = LegendreParams::new(Family::P, nu, mu, z);
    p.side = side;
    Ok(derivs(&p, 0)?[0])
}

/// Q_ν^μ(z) with the e^{iπμ} phase.
pub fn legendre_q(nu: C64, mu: C64, z: C64) -> Result<C64> {
    legendre_q_side(nu, mu, z, Side::None, QNorm::Hobson)
}

pub fn legendre_q_side(nu: C64, mu: C64, z: C64, side: Side, norm: QNorm) -> Result<C64> {
    let mut p = LegendreParams::new(Family::Q, nu, mu, z);
    p.side = side;
    Ok(derivs_norm(&p, norm, 0)?[0])
}

/// e^{−iπμ} Q_ν^μ(z) / Γ(ν+μ+1), finite where Γ(ν+μ+1) has a pole.
pub fn legendre_q_olver(nu: C64, mu: C64, z: C64) -> Result<C64> {
    legendre_q_side(nu, mu, z, Side::None, QNorm::Olver)
}

pub fn ferrers_p(nu: C64, mu: C64, x: f64) -> Result<C64> {
    Ok(derivs(&LegendreParams::new(Family::FerrersP, nu, mu, c(x, 0.0)), 0)?[0])
}

pub fn ferrers_q(nu: C64, mu: C64, x: f64) -> Result<C64> {
    Ok(derivs(&LegendreParams::new(Family::FerrersQ, nu, mu, c(x, 0.0)), 0)?[0])
}

/// Jacobi function Γ(ν+α+1)/(Γ(ν+1)Γ(α+1)) ₂F₁(−ν, ν+α+β+1; α+1; (1−z)/2).
pub fn jacobi_p(nu: C64, alpha: C64, beta: C64, z: C64) -> Result<C64> {
    Ok(jacobi_derivs(nu, alpha, beta, z - 1.0, 0)?[0])
}

pub fn jacobi_deriv(nu: C64, alpha: C64, beta: C64, z: C64) -> Result<C64> {
    Ok(jacobi_derivs(nu, alpha, beta, z - 1.0, 1)?[1])
}

/// d/dz of P, Q, 𝖯 or 𝖰 by term-wise differentiation.
pub fn legendre_deriv(family: Family, nu: C64, mu: C64, z: C64) -> Result<C64> {
    if family == Family::Jacobi {
        return Err(Error::Invalid("use jacobi_deriv for the Jacobi family".into()));
    }
    Ok(derivs(&LegendreParams::new(family, nu, mu, z), 1)?[1])
}

/// Integer value of μ when μ is an integer, used by callers that special-case it.
pub fn integer_order(mu: C64) -> Option<i64> {
    as_integer(mu, 1e-12)
}

#[cfg(test)]
mod tests;
