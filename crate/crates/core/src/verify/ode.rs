//! Residuals of the Legendre equation and of the inhomogeneous equation
//! met by the Riemann order-lowering transform of P.

use crate::error::{Error, Result};
use crate::hyper::{hyp3f2_regularized_deriv, Hyp3F2Params};
use crate::legendre::{derivs, Family, LegendreParams};
use crate::numerics::{cpow, rgamma, C64};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OdeMode {
    Homogeneous,
    InhomogeneousMminus,
}

/// A defect together with the size of the terms that produced it, so the
/// defect can be judged relative to the cancellation it hides.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OdeResidual {
    pub defect: C64,
    pub scale: f64,
}

impl OdeResidual {
    pub fn relative(&self) -> f64 {
        self.defect.norm() / self.scale.max(f64::MIN_POSITIVE)
    }
}

/// Homogeneous: (1−z²)F″ − 2zF′ + (ν(ν+1) − μ²/(1−z²))F for F = P, Q, 𝖯, 𝖰.
///
/// Inhomogeneous: G = 2^μ(z−1)^{−λ}₃F̃₂(ν−μ+1, −ν−μ, 1; 1−μ, 1−λ; (1−z)/2)
/// in (z²−1)G″ − 2(μ−λ−1)zG′ − (ν+μ−λ)(ν−μ+λ+1)G minus the source
/// 2^{μ+1}(z−1)^{−λ−1}/(Γ(−λ)Γ(−μ)). `family` is ignored in this mode and
/// |(1−z)/2| < 1 is required.
pub fn ode_residual(mode: OdeMode, family: Family, nu: C64, mu: C64, lambda: C64, z: C64) -> Result<OdeResidual> {
    match mode {
        OdeMode::Homogeneous => homogeneous(family, nu, mu, z),
        OdeMode::InhomogeneousMminus => inhomogeneous(nu, mu, lambda, z),
    }
}

fn homogeneous(family: Family, nu: C64, mu: C64, z: C64) -> Result<OdeResidual> {
    if family == Family::Jacobi {
        return Err(Error::Invalid("the Legendre equation needs a Legendre family".into()));
    }
    let [f, f1, f2] = derivs(&LegendreParams::new(family, nu, mu, z), 2)?;
    let s = 1.0 - z * z;
    let t = [s * f2, -2.0 * z * f1, nu * (nu + 1.0) * f, -(mu * mu) / s * f];
    Ok(OdeResidual { defect: t.iter().sum(), scale: t.iter().map(|x| x.norm()).sum() })
}

fn inhomogeneous(nu: C64, mu: C64, l: C64, z: C64) -> Result<OdeResidual> {
    let u = z - 1.0;
    let p = Hyp3F2Params { a: [nu - mu + 1.0, -nu - mu, C64::new(1.0, 0.0)], b: [1.0 - mu, 1.0 - l], w: -u * 0.5 };
    let (h0, h1, h2) = (
        hyp3f2_regularized_deriv(&p, 0)?,
        hyp3f2_regularized_deriv(&p, 1)?,
        hyp3f2_regularized_deriv(&p, 2)?,
    );
    let two_mu = cpow(C64::new(2.0, 0.0), mu);
    let (um, um1, um2) = (cpow(u, -l), cpow(u, -l - 1.0), cpow(u, -l - 2.0));
    // dw/dz = −1/2
    let g0 = two_mu * um * h0;
    let g1 = two_mu * (-l * um1 * h0 - 0.5 * um * h1);
    let g2 = two_mu * (l * (l + 1.0) * um2 * h0 + l * um1 * h1 + 0.25 * um * h2);
    let source = cpow(C64::new(2.0, 0.0), mu + 1.0) * um1 * rgamma(-l) * rgamma(-mu);
    let t = [
        (z * z - 1.0) * g2,
        -2.0 * (mu - l - 1.0) * z * g1,
        -(nu + mu - l) * (nu - mu + l + 1.0) * g0,
        -source,
    ];
    Ok(OdeResidual { defect: t.iter().sum(), scale: t.iter().map(|x| x.norm()).sum() })
}
