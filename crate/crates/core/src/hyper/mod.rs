//! Gauss ₂F₁ with continuation to the whole cut plane, ₃F₂ by series, by
//! residue sums at large argument, and by a vertical-line Barnes integral.

mod barnes;
mod f21;
mod f32;
mod series;

pub use barnes::{hyp3f2_barnes, hyp3f2_regularized_barnes, BarnesOptions};
pub use f21::{hyp2f1, hyp2f1_regularized, hyp2f1_regularized_deriv, Hyp2F1Params};
pub use f32::{hyp3f2_far, hyp3f2_regularized, hyp3f2_regularized_deriv, hyp3f2_series, Hyp3F2Params};
pub use series::pfq_series;

use crate::error::{Error, Result};
use crate::numerics::{C64, I};

/// Offset used when a parameter sits on a removable singularity.
pub const DEGENERATE_EPS: f64 = 1e-6;

/// Value at δ = 0 of an analytic family f(δ) from samples at ±iε and ±2iε.
///
/// The symmetric means are even in ε, and one Richardson step removes the
/// ε² term.
pub fn eps_limit<F>(f: F) -> Result<C64>
where
    F: Fn(C64) -> Result<C64>,
{
    let e = DEGENERATE_EPS;
    let g1 = (f(I * e)? + f(-I * e)?) * 0.5;
    let g2 = (f(I * (2.0 * e))? + f(-I * (2.0 * e))?) * 0.5;
    Ok((g1 * 4.0 - g2) / 3.0)
}

/// Regularized ₃F₂ anywhere off [1, ∞): the series inside the disk (or
/// when it terminates), the Barnes integral outside.
pub fn hyp3f2_regularized_any(p: &Hyp3F2Params) -> Result<C64> {
    match hyp3f2_regularized(p) {
        Err(Error::Divergence(_)) => hyp3f2_regularized_barnes(p, BarnesOptions::default()),
        r => r,
    }
}
