//! n-fold nested integrals collapsed to one weighted integral by Cauchy's
//! formula for repeated integration.

use super::de::{exp_sinh, tanh_sinh, DeOptions};
use super::{Point, QuadratureResult};
use crate::error::{Error, Result};
use crate::numerics::C64;
use serde::{Deserialize, Serialize};

/// Direction of the nest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Nest {
    /// ∫_z^1 dt₁ ∫_{t₁}^1 dt₂ ⋯ f
    ToOne,
    /// ∫_z^∞ dt₁ ∫_{t₁}^∞ dt₂ ⋯ f
    ToInfinity,
    /// ∫_1^z dt₁ ∫_1^{t₁} dt₂ ⋯ f
    FromOne,
}

pub const MAX_FOLD: usize = 8;

/// Algebraic exponents of f at the lower and upper ends of the outer
/// integral; for [`Nest::ToInfinity`] `upper` is the decay rate of f.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ends {
    pub lower: f64,
    pub upper: f64,
}

impl Default for Ends {
    fn default() -> Self {
        Self { lower: 0.0, upper: 0.0 }
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

pub fn repeated_integral<F>(f: F, z: C64, nest: Nest, n: usize, ends: Ends) -> Result<QuadratureResult>
where
    F: Fn(Point) -> Result<C64>,
{
    if n == 0 || n > MAX_FOLD {
        return Err(Error::Invalid(format!("fold count {n} outside 1..={MAX_FOLD}")));
    }
    let k = (n - 1) as i32;
    let norm = 1.0 / factorial(n - 1);
    let one = C64::new(1.0, 0.0);
    match nest {
        // kernel (u−z)^{n−1}/(n−1)!; u−z is the offset from the lower end
        Nest::ToOne => tanh_sinh(
            |p: Point| Ok(p.da.powi(k) * norm * f(p)?),
            z,
            one,
            (ends.lower + k as f64, ends.upper),
            DeOptions::default(),
        ),
        Nest::ToInfinity => {
            if ends.upper <= n as f64 {
                return Err(Error::Domain(format!(
                    "{n}-fold integral to ∞ needs decay above {n}, got {}",
                    ends.upper
                )));
            }
            exp_sinh(
                |p: Point| Ok(p.da.powi(k) * norm * f(p)?),
                z,
                one,
                ends.lower + k as f64,
                ends.upper - k as f64,
                DeOptions::default(),
            )
        }
        // kernel (z−u)^{n−1}/(n−1)!, the offset from the upper end
        Nest::FromOne => tanh_sinh(
            |p: Point| Ok(p.db.powi(k) * norm * f(p)?),
            one,
            z,
            (ends.lower, ends.upper + k as f64),
            DeOptions::default(),
        ),
    }
}
