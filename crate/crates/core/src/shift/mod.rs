//! Closed forms for fractional order and degree shifts of Legendre and
//! Ferrers functions, the repeated-integral special cases, the fractional
//! Rodrigues pair, and integer stepping by the one-step recurrences.
//!
//! Conventions shared with the verifier: functions are always carried with
//! their weight, e.g. f = (z²−1)^{−μ/2}Q_ν^μ(z) for order raising. Degree
//! shifts take a variable y > 1 and evaluate at x = y/√(y²−1).

mod ids;
mod recurrence;
mod rodrigues;
mod validity;

pub use ids::{Group, IdentityId};
pub use recurrence::{apply_integer_recurrence, RecurrenceOp};
pub use rodrigues::{rodrigues_pair, RodriguesPair};
pub use validity::{conditions, Condition, Validity};

use crate::error::{Error, Result};
use crate::hyper::{hyp3f2_regularized_any, Hyp3F2Params};
use crate::legendre::{jacobi_p, weighted, whipple_offset_at, Family};
use crate::numerics::{
    cos_pi, cpow, exp_i_pi, gamma_ratio, pow_pair, rgamma, sin_pi, GammaRatioSpec, C64, PI,
};
use serde::{Deserialize, Serialize};

/// One closed-form evaluation. For the multi-integral identities λ holds
/// the fold count n; for the Rodrigues pair μ holds α and `beta` holds β;
/// for the beta contour ν holds σ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShiftRequest {
    pub id: IdentityId,
    pub nu: C64,
    pub mu: C64,
    pub lambda: C64,
    pub argument: C64,
    #[serde(default)]
    pub beta: C64,
    /// Ask for the large-argument three-term form where one exists.
    #[serde(default)]
    pub far_field: bool,
    /// Relative perturbation of the dominant coefficient; nonzero only in
    /// mutation tests.
    #[serde(default)]
    pub perturb: f64,
}

impl ShiftRequest {
    pub fn new(id: IdentityId, nu: C64, mu: C64, lambda: C64, argument: C64) -> Self {
        Self {
            id,
            nu,
            mu,
            lambda,
            argument,
            beta: C64::new(0.0, 0.0),
            far_field: false,
            perturb: 0.0,
        }
    }

    pub fn validity(&self) -> Validity {
        Validity::check(&conditions(self.id), self)
    }

    /// The fold count of a multi-integral request.
    pub fn folds(&self) -> Result<usize> {
        let l = self.lambda;
        if l.im == 0.0 && l.re == l.re.round() && (1.0..=8.0).contains(&l.re) {
            Ok(l.re as usize)
        } else {
            Err(Error::Domain(format!("fold count must be an integer in 1..=8, got {l}")))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PredictionTerm {
    pub label: String,
    pub coef: C64,
    pub value: C64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Prediction {
    pub total: C64,
    pub terms: Vec<PredictionTerm>,
    pub validity: Validity,
}

impl Prediction {
    fn build(req: &ShiftRequest, mut terms: Vec<PredictionTerm>) -> Self {
        if req.perturb != 0.0 {
            let k = (0..terms.len())
                .max_by(|&a, &b| {
                    let ma = (terms[a].coef * terms[a].value).norm();
                    let mb = (terms[b].coef * terms[b].value).norm();
                    ma.total_cmp(&mb)
                })
                .unwrap_or(0);
            if let Some(t) = terms.get_mut(k) {
                t.coef *= 1.0 + req.perturb;
            }
        }
        let total = terms.iter().fold(C64::new(0.0, 0.0), |s, t| s + t.coef * t.value);
        Self { total, terms, validity: req.validity() }
    }
}

fn term(label: &str, coef: C64, value: C64) -> PredictionTerm {
    PredictionTerm { label: label.to_string(), coef, value }
}

fn gr(num: &[C64], den: &[C64]) -> Result<C64> {
    gamma_ratio(&GammaRatioSpec::new(num, den))
}

fn one() -> C64 {
    C64::new(1.0, 0.0)
}

/// (z²−1)^{sμ/2} F_ν^μ(z), or the Ferrers analogue.
fn fw(family: Family, nu: C64, mu: C64, s: f64, z: C64) -> Result<C64> {
    weighted(family, nu, mu, s, z - 1.0)
}

/// (y²−1)^{e} F_ν^μ(y/√(y²−1)).
pub(crate) fn degree_fn(family: Family, nu: C64, mu: C64, e: C64, y: C64) -> Result<C64> {
    degree_fn_at(family, nu, mu, e, y - 1.0)
}

/// [`degree_fn`] at y = 1 + d.
pub fn degree_fn_at(family: Family, nu: C64, mu: C64, e: C64, d: C64) -> Result<C64> {
    if d.re <= 0.0 {
        return Err(Error::Domain(format!("degree shifts need Re y > 1, got {}", d + 1.0)));
    }
    let w = pow_pair(d, e, d + 2.0, e);
    Ok(w * weighted(family, nu, mu, 0.0, whipple_offset_at(d))?)
}

fn f32r(a: [C64; 3], b: [C64; 2], w: C64) -> Result<C64> {
    hyp3f2_regularized_any(&Hyp3F2Params { a, b, w })
}

fn check(req: &ShiftRequest) -> Result<()> {
    let v = req.validity();
    if !v.holds {
        return Err(Error::Domain(format!(
            "{} outside its domain: {}",
            req.id,
            v.violated.join(", ")
        )));
    }
    Ok(())
}

/// Closed-form side of any catalog identity.
pub fn predict(req: &ShiftRequest) -> Result<Prediction> {
    check(req)?;
    let terms = match req.id.group() {
        Group::Order => order_terms(req)?,
        Group::Degree => degree_terms(req)?,
        Group::Ferrers => ferrers_terms(req)?,
        Group::MultiIntegral => multi_terms(req)?,
        Group::Rodrigues => rodrigues_terms(req)?,
        Group::Beta => beta_terms(req)?,
    };
    Ok(Prediction::build(req, terms))
}

fn in_group(req: &ShiftRequest, g: Group) -> Result<()> {
    if req.id.group() != g {
        return Err(Error::Invalid(format!("{} is not a {g:?} identity", req.id)));
    }
    Ok(())
}

/// Order shifts M±^λ of P and Q, Weyl and Riemann type.
pub fn predict_order_shift(req: &ShiftRequest) -> Result<Prediction> {
    in_group(req, Group::Order)?;
    predict(req)
}

/// Degree shifts K₃^λ, P₃^λ.
pub fn predict_degree_shift(req: &ShiftRequest) -> Result<Prediction> {
    in_group(req, Group::Degree)?;
    predict(req)
}

/// Order shifts of Ferrers functions on (−1, 1).
pub fn predict_ferrers_shift(req: &ShiftRequest) -> Result<Prediction> {
    in_group(req, Group::Ferrers)?;
    predict(req)
}

/// Γ(ν+μ+1)Γ(ν−μ+λ+1)/(Γ(ν+μ−λ+1)Γ(ν−μ+1)), the M−^λ coefficient on Q.
pub fn mminus_q_coefficient(nu: C64, mu: C64, lambda: C64) -> Result<C64> {
    gr(&[nu + mu + 1.0, nu - mu + lambda + 1.0], &[nu + mu - lambda + 1.0, nu - mu + 1.0])
}

/// Γ(ν+λ−μ+1)/Γ(ν−μ+1), the K₃^λ coefficient (without its phase).
pub fn k3_coefficient(nu: C64, mu: C64, lambda: C64) -> Result<C64> {
    gr(&[nu + lambda - mu + 1.0], &[nu - mu + 1.0])
}

/// Γ(−ν+λ−μ)/Γ(−ν−μ), the P₃^λ coefficient on P (without its phase).
pub fn p3_coefficient(nu: C64, mu: C64, lambda: C64) -> Result<C64> {
    gr(&[-nu + lambda - mu], &[-nu - mu])
}

/// The extra Q coefficient of M+^λ acting on P,
/// −2 sin πν sin πλ e^{−iπ(μ+λ)}/(π sin π(ν−μ−λ)).
///
/// The 1/π comes with the 1/(π cos πν) of the connection formula that
/// produces this term.
pub fn mplus_p_extra_coefficient(nu: C64, mu: C64, lambda: C64) -> C64 {
    -2.0 * sin_pi(nu) * sin_pi(lambda) * exp_i_pi(-(mu + lambda)) / (PI * sin_pi(nu - mu - lambda))
}

fn order_terms(req: &ShiftRequest) -> Result<Vec<PredictionTerm>> {
    use IdentityId::*;
    let (nu, mu, l, z) = (req.nu, req.mu, req.lambda, req.argument);
    Ok(match req.id {
        WeylMplusQ => vec![term("(z²−1)^{−(μ+λ)/2} Q^{μ+λ}", exp_i_pi(-l), fw(Family::Q, nu, mu + l, -1.0, z)?)],
        WeylMplusP => {
            let s = sin_pi(nu - mu - l);
            vec![
                term("(z²−1)^{−(μ+λ)/2} P^{μ+λ}", sin_pi(nu - mu) / s, fw(Family::P, nu, mu + l, -1.0, z)?),
                term(
                    "(z²−1)^{−(μ+λ)/2} Q^{μ+λ}",
                    mplus_p_extra_coefficient(nu, mu, l),
                    fw(Family::Q, nu, mu + l, -1.0, z)?,
                ),
            ]
        }
        WeylMminusQ => vec![term(
            "(z²−1)^{(μ−λ)/2} Q^{μ−λ}",
            mminus_q_coefficient(nu, mu, l)?,
            fw(Family::Q, nu, mu - l, 1.0, z)?,
        )],
        WeylMminusP => {
            let g = gr(&[-nu - mu + l, nu - mu + l + 1.0], &[-nu - mu, nu - mu + 1.0])?;
            vec![term("(z²−1)^{(μ−λ)/2} P^{μ−λ}", exp_i_pi(-l) * g, fw(Family::P, nu, mu - l, 1.0, z)?)]
        }
        RiemannMplusP => vec![term("(z²−1)^{−(μ+λ)/2} P^{μ+λ}", one(), fw(Family::P, nu, mu + l, -1.0, z)?)],
        RiemannMplusQ => {
            // 2^{−μ−1}e^{iπμ}Γ(−μ)Γ(ν+μ+1)/(Γ(1−λ)Γ(ν−μ+1)) ₃F₂(…; 1−λ, μ+1; w)
            // with the Γ(1−λ)Γ(μ+1) of the regularized ₃F₂ moved into the coefficient
            let c3 = cpow(C64::new(2.0, 0.0), -mu - 1.0)
                * exp_i_pi(mu)
                * (-PI / sin_pi(mu))
                * gr(&[nu + mu + 1.0], &[nu - mu + 1.0])?;
            let f = cpow(z - 1.0, -l)
                * f32r([mu - nu, nu + mu + 1.0, one()], [1.0 - l, mu + 1.0], (1.0 - z) * 0.5)?;
            vec![
                term(
                    "(z²−1)^{−(μ+λ)/2} P^{μ+λ}",
                    0.5 * exp_i_pi(mu) * PI / sin_pi(mu),
                    fw(Family::P, nu, mu + l, -1.0, z)?,
                ),
                term("(z−1)^{−λ} ₃F̃₂(μ−ν, ν+μ+1, 1; 1−λ, μ+1; (1−z)/2)", c3, f),
            ]
        }
        RiemannMminusP => {
            if req.far_field {
                mminus_far_terms(nu, mu, l, z)?
            } else {
                vec![term(
                    "(z−1)^{−λ} ₃F̃₂(ν−μ+1, −ν−μ, 1; 1−μ, 1−λ; (1−z)/2)",
                    cpow(C64::new(2.0, 0.0), mu),
                    mminus_near_value(nu, mu, l, z)?,
                )]
            }
        }
        _ => unreachable!(),
    })
}

/// (z−1)^{−λ} ₃F̃₂(ν−μ+1, −ν−μ, 1; 1−μ, 1−λ; (1−z)/2).
fn mminus_near_value(nu: C64, mu: C64, l: C64, z: C64) -> Result<C64> {
    Ok(cpow(z - 1.0, -l) * f32r([nu - mu + 1.0, -nu - mu, one()], [1.0 - mu, 1.0 - l], (1.0 - z) * 0.5)?)
}

/// Large-argument form of M−^λ on P: shifted P and Q plus a ₃F₂ in
/// 2/(1−z) that carries the endpoint contribution.
fn mminus_far_terms(nu: C64, mu: C64, l: C64, z: C64) -> Result<Vec<PredictionTerm>> {
    // matched against the leading large-z residues of the ₃F̃₂ near form
    let cp = mminus_q_coefficient(nu, mu, l)?;
    let inner = gr(&[mu - nu], &[-nu - mu, mu - l - nu])? - cp * rgamma(l - mu - nu);
    let cq = -exp_i_pi(l - mu) * rgamma(nu + mu - l + 1.0) / cos_pi(nu) * inner;
    let w = 2.0 / (1.0 - z);
    let c3 = -cpow(C64::new(2.0, 0.0), mu + 1.0) / ((nu - mu) * (nu + mu + 1.0))
        * rgamma(-mu)
        * rgamma(-l)
        * crate::numerics::gamma(-nu + mu + 1.0)?
        * crate::numerics::gamma(nu + mu + 2.0)?;
    let f3 = cpow(z - 1.0, -l - 1.0)
        * f32r([mu + 1.0, l + 1.0, one()], [-nu + mu + 1.0, nu + mu + 2.0], w)?;
    Ok(vec![
        term("(z²−1)^{(μ−λ)/2} P^{μ−λ}", cp, fw(Family::P, nu, mu - l, 1.0, z)?),
        term("(z²−1)^{(μ−λ)/2} Q^{μ−λ}", cq, fw(Family::Q, nu, mu - l, 1.0, z)?),
        term("(z−1)^{−λ−1} ₃F̃₂(μ+1, λ+1, 1; μ−ν+1, ν+μ+2; 2/(1−z))", c3, f3),
    ])
}

/// Printed coefficient of the K₃ Riemann ₃F₂, with Γ(ν−μ+1) on top and
/// Γ(ν+3/2) twice below, multiplying the plain ₃F₂.
pub fn k3_riemann_printed_coefficient(nu: C64, mu: C64) -> Result<C64> {
    let half_pi = (PI / 2.0).sqrt();
    Ok(exp_i_pi(mu)
        * half_pi
        * cpow(C64::new(2.0, 0.0), -nu - 0.5)
        * gr(&[nu - mu + 1.0], &[nu + 1.5, nu + 1.5])?)
}

fn degree_terms(req: &ShiftRequest) -> Result<Vec<PredictionTerm>> {
    use IdentityId::*;
    let (nu, mu, l, y) = (req.nu, req.mu, req.lambda, req.argument);
    Ok(match req.id {
        K3WeylP | K3WeylQ => {
            let (fam, label) = if req.id == K3WeylP {
                (Family::P, "(y²−1)^{−(ν+λ+1)/2} P_{ν+λ}^μ(x)")
            } else {
                (Family::Q, "(y²−1)^{−(ν+λ+1)/2} Q_{ν+λ}^μ(x)")
            };
            vec![term(
                label,
                exp_i_pi(-l) * k3_coefficient(nu, mu, l)?,
                degree_fn(fam, nu + l, mu, -(nu + l + 1.0) * 0.5, y)?,
            )]
        }
        K3RiemannQ3f2 => {
            // Q_ν^μ(x) = e^{iπμ}√(π/2)Γ(ν+μ+1)(y²−1)^{1/4}P_{−μ−1/2}^{−ν−1/2}(y)
            // turns this into M−^λ on P at the Whipple indices
            let coef = exp_i_pi(mu)
                * (PI / 2.0).sqrt()
                * cpow(C64::new(2.0, 0.0), -nu - 0.5)
                * gr(&[nu + mu + 1.0], &[])?;
            let f = cpow(y - 1.0, -l)
                * f32r([nu - mu + 1.0, nu + mu + 1.0, one()], [nu + 1.5, 1.0 - l], (1.0 - y) * 0.5)?;
            vec![term("(y−1)^{−λ} ₃F̃₂(ν−μ+1, ν+μ+1, 1; ν+3/2, 1−λ; (1−y)/2)", coef, f)]
        }
        P3WeylP => vec![term(
            "(y²−1)^{(ν−λ)/2} P_{ν−λ}^μ(x)",
            exp_i_pi(-l) * p3_coefficient(nu, mu, l)?,
            degree_fn(Family::P, nu - l, mu, (nu - l) * 0.5, y)?,
        )],
        P3RiemannQ => vec![term(
            "(y²−1)^{(ν−λ)/2} Q_{ν−λ}^μ(x)",
            gr(&[nu + mu + 1.0], &[nu - l + mu + 1.0])?,
            degree_fn(Family::Q, nu - l, mu, (nu - l) * 0.5, y)?,
        )],
        _ => unreachable!(),
    })
}

fn ferrers_terms(req: &ShiftRequest) -> Result<Vec<PredictionTerm>> {
    use IdentityId::*;
    let (nu, mu, l, x) = (req.nu, req.mu, req.lambda, req.argument);
    let p_shift = || fw(Family::FerrersP, nu, mu + l, -1.0, x);
    Ok(match req.id {
        FerrersLplusP => vec![term("(1−x²)^{−(μ+λ)/2} 𝖯^{μ+λ}", one(), p_shift()?)],
        FerrersLplusQ3f2 => {
            let c3 = cpow(C64::new(2.0, 0.0), -mu - 1.0)
                * (-PI / sin_pi(mu))
                * gr(&[nu + mu + 1.0], &[nu - mu + 1.0])?;
            let f = cpow(1.0 - x, -l)
                * f32r([mu - nu, nu + mu + 1.0, one()], [1.0 - l, mu + 1.0], (1.0 - x) * 0.5)?;
            vec![
                term("(1−x²)^{−(μ+λ)/2} 𝖯^{μ+λ}", 0.5 * PI * cos_pi(mu) / sin_pi(mu), p_shift()?),
                term("(1−x)^{−λ} ₃F̃₂(μ−ν, ν+μ+1, 1; 1−λ, μ+1; (1−x)/2)", c3, f),
            ]
        }
        FerrersLminusP3f2 => {
            let f = cpow(1.0 - x, -l)
                * f32r([nu - mu + 1.0, -nu - mu, one()], [1.0 - mu, 1.0 - l], (1.0 - x) * 0.5)?;
            vec![term(
                "(1−x)^{−λ} ₃F̃₂(ν−μ+1, −ν−μ, 1; 1−μ, 1−λ; (1−x)/2)",
                exp_i_pi(-l) * cpow(C64::new(2.0, 0.0), mu),
                f,
            )]
        }
        _ => unreachable!(),
    })
}

fn multi_terms(req: &ShiftRequest) -> Result<Vec<PredictionTerm>> {
    use IdentityId::*;
    let n = req.folds()?;
    let nf = n as f64;
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let (nu, mu, z) = (req.nu, req.mu, req.argument);
    Ok(match req.id {
        MultiIntMplus => vec![term("(z²−1)^{−(μ−n)/2} Q^{μ−n}", C64::new(sign, 0.0), fw(Family::Q, nu, mu - nf, -1.0, z)?)],
        MultiIntMminus => vec![term(
            "(z²−1)^{(μ+n)/2} Q^{μ+n}",
            sign * gr(&[nu - mu - nf + 1.0, nu + mu + 1.0], &[nu - mu + 1.0, nu + mu + nf + 1.0])?,
            fw(Family::Q, nu, mu + nf, 1.0, z)?,
        )],
        MultiIntK3 => vec![term(
            "(y²−1)^{−(ν+1)/2} P_ν^μ(x)",
            gr(&[nu - mu + 1.0], &[nu + nf - mu + 1.0])?,
            degree_fn(Family::P, nu, mu, -(nu + 1.0) * 0.5, z)?,
        )],
        MultiIntP3 => vec![term(
            "(y²−1)^{(ν+n)/2} Q_{ν+n}^μ(x)",
            gr(&[nu + mu + 1.0], &[nu + nf + mu + 1.0])?,
            degree_fn(Family::Q, nu + nf, mu, (nu + nf) * 0.5, z)?,
        )],
        MultiIntLplus => vec![term("(1−x²)^{−(μ−n)/2} 𝖯^{μ−n}", one(), fw(Family::FerrersP, nu, mu - nf, -1.0, z)?)],
        MultiIntRodrigues => {
            let (a, b) = (mu, req.beta);
            let fact: f64 = (1..=n).map(|k| k as f64).product();
            vec![term(
                "(1−z)^{n+α}(1+z)^{n+β}",
                C64::new(1.0 / (2f64.powi(n as i32) * fact), 0.0),
                cpow(1.0 - z, a + nf) * cpow(1.0 + z, b + nf),
            )]
        }
        _ => unreachable!(),
    })
}

fn rodrigues_terms(req: &ShiftRequest) -> Result<Vec<PredictionTerm>> {
    let (nu, a, b, z) = (req.nu, req.mu, req.beta, req.argument);
    Ok(match req.id {
        IdentityId::RodriguesFrac => vec![term(
            "(1−z)^α(1+z)^β P_ν^{(α,β)}(z)",
            one(),
            cpow(1.0 - z, a) * cpow(1.0 + z, b) * jacobi_p(nu, a, b, z)?,
        )],
        IdentityId::RodriguesInverse => vec![term(
            "(1−z)^{ν+α}(1+z)^{ν+β}",
            cpow(C64::new(2.0, 0.0), -nu) * rgamma(nu + 1.0),
            cpow(1.0 - z, nu + a) * cpow(1.0 + z, nu + b),
        )],
        _ => unreachable!(),
    })
}

/// sin(π(λ+1))/π · B(−λ, σ); at a nonnegative integer λ the product
/// 0·Γ(−λ) is replaced by its limit 1/Γ(λ+1)·(−1)^0 through reflection.
fn beta_terms(req: &ShiftRequest) -> Result<Vec<PredictionTerm>> {
    let (sigma, l) = (req.nu, req.lambda);
    let b = if crate::numerics::near_nonpositive_integer(-l).is_some() {
        gr(&[sigma], &[l + 1.0, sigma - l])?
    } else {
        -sin_pi(l) / PI * gr(&[-l, sigma], &[sigma - l])?
    };
    Ok(vec![term("B(−λ, σ)", one(), b)])
}

#[cfg(test)]
mod tests;
