//! Complex scalar conventions and the gamma family.
//!
//! Every logarithm and power uses the principal branch with arg in (−π, π].
//! Powers of z²−1 are always split as (z−1)^s (z+1)^s so that the only cut
//! is (−∞, 1].

mod elementary;
mod gamma;

pub use elementary::{cos_pi, cpow, ln, pow_pair, pow_z2m1, sin_pi};
pub use gamma::{gamma, gamma_ratio, ln_gamma, near_nonpositive_integer, rgamma, GammaRatioSpec};

pub type C64 = num_complex::Complex64;

pub const PI: f64 = std::f64::consts::PI;

#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[inline]
pub fn r(re: f64) -> C64 {
    C64::new(re, 0.0)
}

pub const I: C64 = C64 { re: 0.0, im: 1.0 };

/// e^{iπx}, with exact values at integers and half integers.
pub fn exp_i_pi(x: C64) -> C64 {
    cos_pi(x) + I * sin_pi(x)
}

/// Nearest integer to a complex number when it is within `tol` of one.
pub fn as_integer(z: C64, tol: f64) -> Option<i64> {
    let n = z.re.round();
    if (z - n).norm() <= tol && n.abs() < 9.0e15 {
        Some(n as i64)
    } else {
        None
    }
}

/// Relative distance used by tests and the verifier.
pub fn rel_err(got: C64, want: C64) -> f64 {
    (got - want).norm() / want.norm().max(1e-300)
}
