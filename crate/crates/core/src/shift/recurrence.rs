//! Integer steps of the one-step order and degree recurrences.

use super::degree_fn;
use crate::error::{Error, Result};
use crate::legendre::{weighted, Family};
use crate::numerics::C64;
use serde::{Deserialize, Serialize};

/// The operator whose integer powers are iterated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum RecurrenceOp {
    /// d/dz (z²−1)^{−μ/2}F^μ = (z²−1)^{−(μ+1)/2}F^{μ+1}
    Mplus,
    /// d/dz (z²−1)^{μ/2}F^μ = (ν+μ)(ν−μ+1)(z²−1)^{(μ−1)/2}F^{μ−1}
    Mminus,
    /// d/dy (y²−1)^{ν/2}F_ν = (ν+μ)(y²−1)^{(ν−1)/2}F_{ν−1}
    P3,
    /// d/dy (y²−1)^{−(ν+1)/2}F_ν = −(ν−μ+1)(y²−1)^{−(ν+2)/2}F_{ν+1}
    K3,
    /// d/dx (1−x²)^{−μ/2}𝖥^μ = −(1−x²)^{−(μ+1)/2}𝖥^{μ+1}
    Lplus,
    /// d/dx (1−x²)^{μ/2}𝖥^μ = (ν+μ)(ν−μ+1)(1−x²)^{(μ−1)/2}𝖥^{μ−1}
    Lminus,
}

/// n-th derivative of the weighted function attached to `op`, obtained by
/// n one-step recurrences: the product of the step coefficients times the
/// weighted function at the shifted order or degree.
///
/// A vanishing step coefficient is reported as a pole rather than
/// regularized.
pub fn apply_integer_recurrence(
    op: RecurrenceOp,
    family: Family,
    nu: C64,
    mu: C64,
    n: usize,
    argument: C64,
) -> Result<C64> {
    if n == 0 {
        return Err(Error::Invalid("recurrence needs n ≥ 1".into()));
    }
    let ferrers = matches!(op, RecurrenceOp::Lplus | RecurrenceOp::Lminus);
    let ok = match family {
        Family::P | Family::Q => !ferrers,
        Family::FerrersP | Family::FerrersQ => ferrers,
        Family::Jacobi => false,
    };
    if !ok {
        return Err(Error::Invalid(format!("{op:?} does not act on the {family:?} family")));
    }
    let (mut nu_k, mut mu_k) = (nu, mu);
    let mut coef = C64::new(1.0, 0.0);
    for k in 0..n {
        let c = match op {
            RecurrenceOp::Mplus => {
                mu_k += 1.0;
                C64::new(1.0, 0.0)
            }
            RecurrenceOp::Lplus => {
                mu_k += 1.0;
                C64::new(-1.0, 0.0)
            }
            RecurrenceOp::Mminus | RecurrenceOp::Lminus => {
                let c = (nu_k + mu_k) * (nu_k - mu_k + 1.0);
                mu_k -= 1.0;
                c
            }
            RecurrenceOp::P3 => {
                let c = nu_k + mu_k;
                nu_k -= 1.0;
                c
            }
            RecurrenceOp::K3 => {
                let c = -(nu_k - mu_k + 1.0);
                nu_k += 1.0;
                c
            }
        };
        if c.norm() == 0.0 {
            return Err(Error::Pole(format!("{op:?} step {} has a vanishing coefficient", k + 1)));
        }
        coef *= c;
    }
    let value = match op {
        RecurrenceOp::Mplus | RecurrenceOp::Lplus => weighted(family, nu_k, mu_k, -1.0, argument - 1.0)?,
        RecurrenceOp::Mminus | RecurrenceOp::Lminus => weighted(family, nu_k, mu_k, 1.0, argument - 1.0)?,
        RecurrenceOp::P3 => degree_fn(family, nu_k, mu_k, nu_k * 0.5, argument)?,
        RecurrenceOp::K3 => degree_fn(family, nu_k, mu_k, -(nu_k + 1.0) * 0.5, argument)?,
    };
    Ok(coef * value)
}
