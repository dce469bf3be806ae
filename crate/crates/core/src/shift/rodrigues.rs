//! Fractional Rodrigues formula for Jacobi functions and its inverse.
//!
//! (1−z)^α(1+z)^β P_ν^{(α,β)}(z)
//!   = 2^{−ν} e^{iπν}/(2πi) ∫_{(1−z,0+,1−z)} t^{−ν−1}(1−z−t)^{ν+α}(1+z+t)^{ν+β} dt
//!
//! and, running the other way,
//!
//! (1−z)^{ν+α}(1+z)^{ν+β}/(2^ν Γ(ν+1))
//!   = Γ(1−ν) e^{−iπν}/(2πi) ∫_{(1−z,0+,1−z)} t^{ν−1} w(z+t) dt,
//!
//! with w(t) = (1−t)^α(1+t)^β P_ν^{(α,β)}(t).

use crate::error::{Error, Result};
use crate::legendre::{jacobi_p, jacobi_p_offset};
use crate::numerics::{cpow, C64};
use crate::quad::{ContourKind, ContourSpec, Point};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RodriguesPair {
    pub nu: C64,
    pub alpha: C64,
    pub beta: C64,
    pub z: C64,
    /// (1−z)^α(1+z)^β P_ν^{(α,β)}(z).
    pub lhs: C64,
    /// Loop for the fractional derivative; multiply its bare value by 2^{−ν}.
    pub rhs_spec: ContourSpec,
    /// Loop for the inverse relation; multiply by Γ(1−ν).
    pub inverse_spec: ContourSpec,
    /// (1−z)^{ν+α}(1+z)^{ν+β}/(2^ν Γ(ν+1)).
    pub inverse_value: C64,
}

impl RodriguesPair {
    /// g(t) = (1−z−t)^{ν+α}(1+z+t)^{ν+β}; t = 1−z is the end of the loop.
    pub fn rhs_integrand(&self, p: Point) -> Result<C64> {
        Ok(cpow(p.db, self.nu + self.alpha) * cpow(1.0 + self.z + p.x, self.nu + self.beta))
    }

    /// w(z+t) with the factor 1−(z+t) taken from the end offset.
    pub fn inverse_integrand(&self, p: Point) -> Result<C64> {
        let u = self.z + p.x;
        let jac = jacobi_p_offset(self.nu, self.alpha, self.beta, -p.db)?;
        Ok(cpow(p.db, self.alpha) * cpow(1.0 + u, self.beta) * jac)
    }
}

/// Both sides of the fractional Rodrigues formula and of its inverse.
pub fn rodrigues_pair(nu: C64, alpha: C64, beta: C64, z: C64) -> Result<RodriguesPair> {
    if !((nu + alpha + 1.0).re > 0.0) {
        return Err(Error::Domain(format!("Rodrigues loop needs Re(ν+α+1) > 0, got {}", nu + alpha + 1.0)));
    }
    if z.im == 0.0 && z.re.abs() >= 1.0 {
        return Err(Error::Domain(format!("Rodrigues argument {z} on a cut of the weight")));
    }
    let lhs = cpow(1.0 - z, alpha) * cpow(1.0 + z, beta) * jacobi_p(nu, alpha, beta, z)?;
    let kind = |l: C64| if l.re < 0.0 { ContourKind::LoopCollapsed } else { ContourKind::LoopRegularized };
    let rhs_spec = ContourSpec {
        kind: kind(nu),
        start: 1.0 - z,
        end: None,
        lambda: Some(nu),
        endpoint_exponents: (0.0, (nu + alpha).re),
    };
    let inverse_spec = ContourSpec {
        kind: kind(-nu),
        start: 1.0 - z,
        end: None,
        lambda: Some(-nu),
        endpoint_exponents: (0.0, alpha.re),
    };
    let inverse_value = cpow(C64::new(2.0, 0.0), -nu)
        * crate::numerics::rgamma(nu + 1.0)
        * cpow(1.0 - z, nu + alpha)
        * cpow(1.0 + z, nu + beta);
    Ok(RodriguesPair { nu, alpha, beta, z, lhs, rhs_spec, inverse_spec, inverse_value })
}
