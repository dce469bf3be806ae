//! Quadrature for the left-hand sides: segments with algebraic endpoint
//! behavior, rays to infinity, loops about the origin and repeated integrals.
//!
//! Integrands receive a [`Point`] carrying the offsets from both ends, so
//! factors like (1−t)^σ keep full relative accuracy near t = 1.

mod de;
pub mod gauss;
mod loops;
mod repeated;

pub use de::DeOptions;
pub use loops::{integrate_loop, integrate_loop_with, integrate_weyl_loop, LoopMethod};
pub use repeated::{repeated_integral, Ends, Nest, MAX_FOLD};

use crate::error::Result;
use crate::numerics::C64;
use serde::{Deserialize, Serialize};

/// A sample point x with da = x − a and db = b − x computed without
/// cancellation. On rays db is infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: C64,
    pub da: C64,
    pub db: C64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: C64,
    /// Difference between the last two refinement levels.
    pub err_estimate: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ContourKind {
    Segment,
    SemiInfinite,
    LoopCollapsed,
    LoopRegularized,
}

/// Description of a left-hand-side contour as recorded in the catalog.
/// Loops carry the e^{iπλ}Γ(λ+1)/2πi prefactor and run positively about 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ContourSpec {
    pub kind: ContourKind,
    pub start: C64,
    pub end: Option<C64>,
    pub lambda: Option<C64>,
    pub endpoint_exponents: (f64, f64),
}

/// ∫_a^b f with declared exponents α_a, α_b (> −1) of f at the ends.
pub fn integrate_segment<F>(f: F, a: C64, b: C64, endpoint_exponents: (f64, f64)) -> Result<QuadratureResult>
where
    F: Fn(Point) -> Result<C64>,
{
    de::tanh_sinh(f, a, b, endpoint_exponents, DeOptions::default())
}

pub fn integrate_segment_with<F>(
    f: F,
    a: C64,
    b: C64,
    endpoint_exponents: (f64, f64),
    opts: DeOptions,
) -> Result<QuadratureResult>
where
    F: Fn(Point) -> Result<C64>,
{
    de::tanh_sinh(f, a, b, endpoint_exponents, opts)
}

/// ∫_a^∞ f along the positive real direction, |f(t)| = O(t^{−decay}).
pub fn integrate_semi_infinite<F>(f: F, a: C64, decay: f64) -> Result<QuadratureResult>
where
    F: Fn(Point) -> Result<C64>,
{
    de::exp_sinh(f, a, C64::new(1.0, 0.0), 0.0, decay, DeOptions::default())
}

/// ∫ along a + dir·s, s > 0, with exponent `start` at a.
pub fn integrate_ray<F>(f: F, a: C64, dir: C64, start: f64, decay: f64) -> Result<QuadratureResult>
where
    F: Fn(Point) -> Result<C64>,
{
    de::exp_sinh(f, a, dir, start, decay, DeOptions::default())
}
