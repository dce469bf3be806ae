//! Whipple's pairing of P and Q under (ν, μ) ↦ (−μ−½, −ν−½) and
//! y ↦ y/√(y²−1). The map on arguments is an involution, and
//! (x²−1)(y²−1) = 1 for paired points.

use super::{legendre_p, legendre_q_olver};
use crate::error::{Error, Result};
use crate::numerics::{c, exp_i_pi, gamma_ratio, pow_pair, pow_z2m1, GammaRatioSpec, C64, PI};

/// Index pair (ν′, μ′) = (−μ−½, −ν−½) of the Whipple image.
pub fn whipple_indices(nu: C64, mu: C64) -> (C64, C64) {
    (-mu - 0.5, -nu - 0.5)
}

/// y/√(y²−1) on the principal branch.
pub fn whipple_argument(y: C64) -> C64 {
    y * pow_z2m1(y, c(-0.5, 0.0))
}

/// y/√(y²−1) − 1 without cancellation: 1/(√(y²−1)(y+√(y²−1))).
pub fn whipple_offset(y: C64) -> C64 {
    whipple_offset_at(y - 1.0)
}

/// [`whipple_offset`] at y = 1 + d, for d known more accurately than y.
pub fn whipple_offset_at(d: C64) -> C64 {
    let s = pow_pair(d, c(0.5, 0.0), d + 2.0, c(0.5, 0.0));
    1.0 / (s * (d + 1.0 + s))
}

fn check(y: C64) -> Result<()> {
    if y.re <= 1.0 {
        return Err(Error::Domain(format!("Whipple transform needs Re y > 1, got {y}")));
    }
    Ok(())
}

/// P_ν^μ(y/√(y²−1)) written through Q_{−μ−½}^{−ν−½}(y).
///
/// The Γ(−ν−μ) and e^{iπ(ν+½)} factors are absorbed by the Olver
/// normalization of Q, so the right side stays finite when ν+μ is a
/// nonnegative integer.
pub fn whipple_p_to_q(nu: C64, mu: C64, y: C64) -> Result<C64> {
    check(y)?;
    let (n2, m2) = whipple_indices(nu, mu);
    let q = legendre_q_olver(n2, m2, y)?;
    Ok((2.0 / PI).sqrt() * pow_z2m1(y, c(0.25, 0.0)) * q)
}

/// Q_ν^μ(y/√(y²−1)) written through P_{−μ−½}^{−ν−½}(y).
pub fn whipple_q_to_p(nu: C64, mu: C64, y: C64) -> Result<C64> {
    check(y)?;
    let (n2, m2) = whipple_indices(nu, mu);
    let g = gamma_ratio(&GammaRatioSpec::new(&[nu + mu + 1.0], &[]))?;
    let p = legendre_p(n2, m2, y)?;
    Ok(exp_i_pi(mu) * (PI / 2.0).sqrt() * g * pow_z2m1(y, c(0.25, 0.0)) * p)
}
