//! The identity catalog: one entry per identity with its statement, the
//! contour of its integral side, its side conditions and a default grid.

use crate::numerics::C64;
use crate::shift::{conditions, predict, Condition, IdentityId, ShiftRequest};
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

/// One parameter point. For the multi-integral identities `lambda` is the
/// fold count; for the Rodrigues pair `mu` is α and `beta` is β; for the
/// beta contour `nu` is σ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridPoint {
    pub nu: C64,
    pub mu: C64,
    pub lambda: C64,
    pub argument: C64,
    #[serde(default)]
    pub beta: C64,
}

impl GridPoint {
    pub fn real(nu: f64, mu: f64, lambda: f64, argument: f64) -> Self {
        let r = |x: f64| C64::new(x, 0.0);
        Self { nu: r(nu), mu: r(mu), lambda: r(lambda), argument: r(argument), beta: r(0.0) }
    }

    pub fn with_beta(mut self, beta: f64) -> Self {
        self.beta = C64::new(beta, 0.0);
        self
    }

    pub fn request(&self, id: IdentityId) -> ShiftRequest {
        let mut q = ShiftRequest::new(id, self.nu, self.mu, self.lambda, self.argument);
        q.beta = self.beta;
        q
    }

    /// Sort key: the parameter tuple read left to right.
    pub fn key(&self) -> [f64; 10] {
        let [a, b, c, d, e] = [self.nu, self.mu, self.lambda, self.argument, self.beta];
        [a.re, a.im, b.re, b.im, c.re, c.im, d.re, d.im, e.re, e.im]
    }
}

/// How the integral side is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LhsContour {
    /// (∞, 0+, ∞) along the positive ray from the argument.
    WeylLoop,
    /// (z−1, 0+, z−1) or its Ferrers analogue, anchored at argument 1.
    RiemannLoop,
    /// n nested integrals reduced to one by the Cauchy kernel.
    RepeatedIntegral,
    /// (1−z, 0+, 1−z) for the Rodrigues pair.
    RodriguesLoop,
    /// (1, 0+, 1).
    BetaLoop,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityEntry {
    pub id: IdentityId,
    pub description: String,
    /// The identity written out, used as its reference anchor.
    pub formula: String,
    pub contour: LhsContour,
    pub conditions: Vec<Condition>,
    pub term_labels: Vec<String>,
    pub notes: Vec<String>,
    pub default_grid: Vec<GridPoint>,
}

fn product(nus: &[f64], mus: &[f64], lambdas: &[f64], args: &[f64]) -> Vec<GridPoint> {
    let mut out = Vec::new();
    for &n in nus {
        for &m in mus {
            for &l in lambdas {
                for &a in args {
                    out.push(GridPoint::real(n, m, l, a));
                }
            }
        }
    }
    out
}

/// Default grid of an identity.
///
/// The points keep clear of integer ν ± μ and λ, of cos πν = 0 where it
/// appears in a coefficient, and stay at least 0.1 inside every condition.
pub fn default_grid(id: IdentityId) -> Vec<GridPoint> {
    use IdentityId::*;
    let folds = [1.0, 2.0, 3.0];
    match id {
        WeylMplusQ => product(&[0.7, 1.5, 2.3], &[0.2, 0.6], &[-0.4, -1.3], &[1.5, 3.0]),
        WeylMplusP => product(&[0.3, 0.7], &[0.25, 0.45], &[0.65, 1.35], &[2.5]),
        WeylMminusQ => product(&[0.6, 1.4], &[0.3, 0.7], &[0.35, 1.45, -0.55], &[2.2]),
        WeylMminusP => product(&[0.2, 0.6], &[-0.3, 0.15], &[0.95, 1.25], &[2.0]),
        RiemannMplusP | RiemannMplusQ => product(&[0.4, 1.3], &[-0.35, 0.45], &[0.3, -0.6, 1.2], &[1.8]),
        RiemannMminusP => product(&[0.45, 1.2], &[0.2, -0.35], &[0.35, -0.65, 1.4], &[1.7]),
        MultiIntMplus => [(2.6, 0.3), (3.2, -0.4)]
            .iter()
            .flat_map(|&(n, m)| product(&[n], &[m], &folds, &[1.6]))
            .collect(),
        MultiIntMminus => [(2.7, 0.3), (3.4, -0.2)]
            .iter()
            .flat_map(|&(n, m)| product(&[n], &[m], &folds, &[1.6]))
            .collect(),
        MultiIntK3 => product(&[0.4, 1.3], &[0.25], &folds, &[1.8]),
        MultiIntP3 => product(&[0.4, -0.7], &[0.3], &folds, &[1.8]),
        MultiIntLplus => product(&[0.6, 1.7], &[0.35], &folds, &[0.4]),
        MultiIntRodrigues => product(&[0.0], &[0.3, -0.4], &folds, &[0.35])
            .into_iter()
            .map(|p| p.with_beta(0.2))
            .collect(),
        K3WeylP | K3WeylQ => product(&[0.4, 1.3], &[0.25, -0.35], &[0.45, -0.6], &[1.7]),
        K3RiemannQ3f2 => product(&[0.4, 1.3], &[0.1, -0.3], &[0.6, -0.45], &[1.8]),
        P3WeylP => product(&[0.3, 0.65], &[0.15, -0.25], &[1.2, 1.55], &[1.7]),
        P3RiemannQ => product(&[0.4, 1.3], &[0.2, -0.3], &[0.55, -0.7], &[1.8]),
        FerrersLplusP | FerrersLplusQ3f2 | FerrersLminusP3f2 => {
            product(&[0.6, 1.35], &[0.3, -0.45], &[0.4, -0.55], &[0.35, -0.25])
        }
        RodriguesFrac | RodriguesInverse => product(&[0.5, 1.3], &[0.2, -0.4], &[0.0], &[0.3, -0.2])
            .into_iter()
            .map(|p| p.with_beta(-0.1))
            .collect(),
        BetaContour => product(&[0.7, 2.3], &[0.0], &[0.4, -0.5, 1.6], &[1.0]),
    }
}

struct Text {
    description: &'static str,
    formula: &'static str,
    contour: LhsContour,
    notes: &'static [&'static str],
}

fn text(id: IdentityId) -> Text {
    use IdentityId::*;
    use LhsContour::*;
    let t = |description, formula, contour, notes| Text { description, formula, contour, notes };
    match id {
        WeylMplusQ => t(
            "Weyl order raising on Q",
            "M+^λ (z²−1)^{−μ/2}Q_ν^μ(z) = e^{−iπλ}(z²−1)^{−(μ+λ)/2}Q_ν^{μ+λ}(z)",
            WeylLoop,
            &[],
        ),
        WeylMplusP => t(
            "Weyl order raising on P, with the extra Q term",
            "M+^λ (z²−1)^{−μ/2}P_ν^μ = sin π(ν−μ)/sin π(ν−μ−λ) (z²−1)^{−(μ+λ)/2}P_ν^{μ+λ} \
             − 2 sin πν sin πλ e^{−iπ(μ+λ)}/(π sin π(ν−μ−λ)) (z²−1)^{−(μ+λ)/2}Q_ν^{μ+λ}",
            WeylLoop,
            &["the extra Q coefficient carries a 1/π that follows from the connection formula; it vanishes at integer λ and integer ν"],
        ),
        WeylMminusQ => t(
            "Weyl order lowering on Q",
            "M−^λ (z²−1)^{μ/2}Q_ν^μ = Γ(ν+μ+1)Γ(ν−μ+λ+1)/(Γ(ν+μ−λ+1)Γ(ν−μ+1)) (z²−1)^{(μ−λ)/2}Q_ν^{μ−λ}",
            WeylLoop,
            &[],
        ),
        WeylMminusP => t(
            "Weyl order lowering on P",
            "M−^λ (z²−1)^{μ/2}P_ν^μ = e^{−iπλ}Γ(λ−ν−μ)Γ(ν−μ+λ+1)/(Γ(−ν−μ)Γ(ν−μ+1)) (z²−1)^{(μ−λ)/2}P_ν^{μ−λ}",
            WeylLoop,
            &[],
        ),
        RiemannMplusP => t(
            "Riemann order raising on P",
            "M+^λ_R (z²−1)^{−μ/2}P_ν^μ = (z²−1)^{−(μ+λ)/2}P_ν^{μ+λ}",
            RiemannLoop,
            &["for λ < 0 this is the classical Riemann fractional integral from 1"],
        ),
        RiemannMplusQ => t(
            "Riemann order raising on Q",
            "M+^λ_R (z²−1)^{−μ/2}Q_ν^μ = ½e^{iπμ}π/sin πμ (z²−1)^{−(μ+λ)/2}P_ν^{μ+λ} \
             − 2^{−μ−1}e^{iπμ}π/sin πμ Γ(ν+μ+1)/Γ(ν−μ+1) (z−1)^{−λ} ₃F̃₂(μ−ν, ν+μ+1, 1; 1−λ, μ+1; (1−z)/2)",
            RiemannLoop,
            &[],
        ),
        RiemannMminusP => t(
            "Riemann order lowering on P",
            "M−^λ_R (z²−1)^{μ/2}P_ν^μ = 2^μ (z−1)^{−λ} ₃F̃₂(ν−μ+1, −ν−μ, 1; 1−μ, 1−λ; (1−z)/2)",
            RiemannLoop,
            &[
                "far field: c_P (z²−1)^{(μ−λ)/2}P_ν^{μ−λ} + c_Q (z²−1)^{(μ−λ)/2}Q_ν^{μ−λ} + c₃ (z−1)^{−λ−1} ₃F₂(μ+1, λ+1, 1; μ−ν+1, ν+μ+2; 2/(1−z))",
                "c_P = Γ(ν+μ+1)Γ(ν−μ+λ+1)/(Γ(ν+μ−λ+1)Γ(ν−μ+1)); c₃ = −2^{μ+1}/((ν−μ)(ν+μ+1)Γ(−μ)Γ(−λ))",
                "c_Q = −e^{iπ(λ−μ)}/(cos πν Γ(ν+μ−λ+1)) [Γ(μ−ν)/(Γ(−ν−μ)Γ(μ−λ−ν)) − c_P/Γ(λ−μ−ν)]",
                "G = the near form solves (z²−1)G″ − 2(μ−λ−1)zG′ − (ν+μ−λ)(ν−μ+λ+1)G = 2^{μ+1}(z−1)^{−λ−1}/(Γ(−λ)Γ(−μ))",
            ],
        ),
        MultiIntMplus => t(
            "n-fold integral of the order-raising weight on Q",
            "∫_z^∞⋯∫ (z²−1)^{−μ/2}Q_ν^μ (dz)^n = (−1)^n (z²−1)^{−(μ−n)/2}Q_ν^{μ−n}",
            RepeatedIntegral,
            &[],
        ),
        MultiIntMminus => t(
            "n-fold integral of the order-lowering weight on Q",
            "∫_z^∞⋯∫ (z²−1)^{μ/2}Q_ν^μ (dz)^n = (−1)^n Γ(ν−μ−n+1)Γ(ν+μ+1)/(Γ(ν−μ+1)Γ(ν+μ+n+1)) (z²−1)^{(μ+n)/2}Q_ν^{μ+n}",
            RepeatedIntegral,
            &[],
        ),
        MultiIntK3 => t(
            "n-fold integral lowering the degree of P",
            "∫_y^∞⋯∫ (y²−1)^{−(ν+n+1)/2}P_{ν+n}^μ(x) (dy)^n = Γ(ν−μ+1)/Γ(ν+n−μ+1) (y²−1)^{−(ν+1)/2}P_ν^μ(x), x = y/√(y²−1)",
            RepeatedIntegral,
            &["the integrand has degree ν+n, so the integral returns degree ν"],
        ),
        MultiIntP3 => t(
            "n-fold integral raising the degree of Q",
            "∫_1^y⋯∫ (y²−1)^{ν/2}Q_ν^μ(x) (dy)^n = Γ(ν+μ+1)/Γ(ν+n+μ+1) (y²−1)^{(ν+n)/2}Q_{ν+n}^μ(x)",
            RepeatedIntegral,
            &[],
        ),
        MultiIntLplus => t(
            "n-fold integral of the Ferrers order-raising weight",
            "∫_x^1⋯∫ (1−x²)^{−μ/2}𝖯_ν^μ (dx)^n = (1−x²)^{−(μ−n)/2}𝖯_ν^{μ−n}",
            RepeatedIntegral,
            &[],
        ),
        MultiIntRodrigues => t(
            "n-fold integral inverting the Rodrigues formula",
            "∫_z^1⋯∫ (1−z)^α(1+z)^β P_n^{(α,β)}(z) (dz)^n = (1−z)^{n+α}(1+z)^{n+β}/(2^n n!)",
            RepeatedIntegral,
            &[],
        ),
        K3WeylP => t(
            "Weyl degree raising on P",
            "K₃^λ (y²−1)^{−(ν+1)/2}P_ν^μ(x) = e^{−iπλ}Γ(ν+λ−μ+1)/Γ(ν−μ+1) (y²−1)^{−(ν+λ+1)/2}P_{ν+λ}^μ(x)",
            WeylLoop,
            &["evaluated through the Whipple pairing of P and Q"],
        ),
        K3WeylQ => t(
            "Weyl degree raising on Q",
            "K₃^λ (y²−1)^{−(ν+1)/2}Q_ν^μ(x) = e^{−iπλ}Γ(ν+λ−μ+1)/Γ(ν−μ+1) (y²−1)^{−(ν+λ+1)/2}Q_{ν+λ}^μ(x)",
            WeylLoop,
            &[],
        ),
        K3RiemannQ3f2 => t(
            "Riemann degree raising on Q",
            "K₃^λ_R (y²−1)^{−(ν+1)/2}Q_ν^μ(x) = e^{iπμ}√(π/2)2^{−ν−½}Γ(ν+μ+1) (y−1)^{−λ} ₃F̃₂(ν−μ+1, ν+μ+1, 1; ν+3/2, 1−λ; (1−y)/2)",
            RiemannLoop,
            &["a form with Γ(ν−μ+1) above and Γ(ν+3/2)² below disagrees with quadrature; the coefficient here is derived from the Whipple pairing and the order-lowering ₃F₂"],
        ),
        P3WeylP => t(
            "Weyl degree lowering on P",
            "P₃^λ (y²−1)^{ν/2}P_ν^μ(x) = e^{−iπλ}Γ(λ−ν−μ)/Γ(−ν−μ) (y²−1)^{(ν−λ)/2}P_{ν−λ}^μ(x)",
            WeylLoop,
            &[],
        ),
        P3RiemannQ => t(
            "Riemann degree lowering on Q",
            "P₃^λ_R (y²−1)^{ν/2}Q_ν^μ(x) = Γ(ν+μ+1)/Γ(ν−λ+μ+1) (y²−1)^{(ν−λ)/2}Q_{ν−λ}^μ(x)",
            RiemannLoop,
            &[],
        ),
        FerrersLplusP => t(
            "Riemann order raising on the Ferrers P",
            "L+^λ (1−x²)^{−μ/2}𝖯_ν^μ(x) = (1−x²)^{−(μ+λ)/2}𝖯_ν^{μ+λ}(x)",
            RiemannLoop,
            &["the loop runs through the complex plane, so 𝖯 is continued off (−1, 1)"],
        ),
        FerrersLplusQ3f2 => t(
            "Riemann order raising on the Ferrers Q",
            "L+^λ (1−x²)^{−μ/2}𝖰_ν^μ(x) = ½π cot πμ (1−x²)^{−(μ+λ)/2}𝖯_ν^{μ+λ} \
             − 2^{−μ−1}π/sin πμ Γ(ν+μ+1)/Γ(ν−μ+1) (1−x)^{−λ} ₃F̃₂(μ−ν, ν+μ+1, 1; 1−λ, μ+1; (1−x)/2)",
            RiemannLoop,
            &[],
        ),
        FerrersLminusP3f2 => t(
            "Riemann order lowering on the Ferrers P",
            "L−^λ (1−x²)^{μ/2}𝖯_ν^μ(x) = e^{−iπλ}2^μ (1−x)^{−λ} ₃F̃₂(ν−μ+1, −ν−μ, 1; 1−μ, 1−λ; (1−x)/2)",
            RiemannLoop,
            &["the loop runs from x−1 about 0, so the phase e^{−iπλ} comes from the reversed direction"],
        ),
        RodriguesFrac => t(
            "fractional Rodrigues formula for Jacobi functions",
            "(1−z)^α(1+z)^β P_ν^{(α,β)}(z) = 2^{−ν}e^{iπν}/(2πi) ∫_{(1−z,0+,1−z)} t^{−ν−1}(1−z−t)^{ν+α}(1+z+t)^{ν+β} dt",
            RodriguesLoop,
            &[],
        ),
        RodriguesInverse => t(
            "inverse of the fractional Rodrigues formula",
            "(1−z)^{ν+α}(1+z)^{ν+β}/(2^ν Γ(ν+1)) = Γ(1−ν)e^{−iπν}/(2πi) ∫_{(1−z,0+,1−z)} t^{ν−1} w(z+t) dt, w = (1−t)^α(1+t)^β P_ν^{(α,β)}",
            RodriguesLoop,
            &[],
        ),
        BetaContour => t(
            "loop continuation of the beta function",
            "e^{iπλ}/(2πi) ∫_{(1,0+,1)} t^{−λ−1}(1−t)^{σ−1} dt = sin π(λ+1)/π · B(−λ, σ)",
            BetaLoop,
            &["at nonnegative integer λ the right side is Γ(σ)/(Γ(λ+1)Γ(σ−λ))"],
        ),
    }
}

fn labels(id: IdentityId, grid: &[GridPoint]) -> Vec<String> {
    let Some(first) = grid.first() else { return Vec::new() };
    let mut req = first.request(id);
    let mut out: Vec<String> = predict(&req)
        .map(|p| p.terms.into_iter().map(|t| t.label).collect())
        .unwrap_or_default();
    if id == IdentityId::RiemannMminusP {
        req.far_field = true;
        if let Ok(p) = predict(&req) {
            out.extend(p.terms.into_iter().map(|t| format!("far field: {}", t.label)));
        }
    }
    out
}

fn build(id: IdentityId) -> IdentityEntry {
    let t = text(id);
    let default_grid = default_grid(id);
    IdentityEntry {
        id,
        description: t.description.to_string(),
        formula: t.formula.to_string(),
        contour: t.contour,
        conditions: conditions(id),
        term_labels: labels(id, &default_grid),
        notes: t.notes.iter().map(|s| s.to_string()).collect(),
        default_grid,
    }
}

/// The full catalog, in [`IdentityId::ALL`] order.
pub fn list_identities() -> &'static [IdentityEntry] {
    static CATALOG: OnceLock<Vec<IdentityEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| IdentityId::ALL.iter().map(|&id| build(id)).collect())
}

pub fn entry(id: IdentityId) -> &'static IdentityEntry {
    &list_identities()[IdentityId::ALL.iter().position(|&x| x == id).expect("id is in ALL")]
}
