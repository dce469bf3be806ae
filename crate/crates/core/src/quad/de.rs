//! Double-exponential rules: tanh-sinh on a segment, exp-sinh on a ray.

use super::{Point, QuadratureResult};
use crate::error::{Error, Result};
use crate::numerics::C64;
use std::f64::consts::FRAC_PI_2;

#[derive(Debug, Clone, Copy)]
pub struct DeOptions {
    pub max_level: u32,
    pub rel_tol: f64,
}

impl Default for DeOptions {
    fn default() -> Self {
        Self { max_level: 12, rel_tol: 1e-13 }
    }
}

fn check_exponent(e: f64, which: &str) -> Result<()> {
    if !(e > -1.0) {
        return Err(Error::Endpoint(format!(
            "{which} endpoint exponent {e} is not integrable (needs > −1)"
        )));
    }
    Ok(())
}

/// Smallest fractional distance to an endpoint worth sampling: the neglected
/// mass ∫₀^u s^α ds stays below ~1e−18 relative to an O(1) integrand.
fn min_fraction(alpha: f64) -> f64 {
    let p = 1.0 + alpha;
    (1e-18 * p).powf(1.0 / p).clamp(1e-300, 1e-14)
}

/// Step-halving ladder shared by both rules. `node(t)` returns the sample
/// point and the Jacobian; the ladder stops when successive levels agree.
///
/// With `trim` the upper end is pulled in to where level-0 samples have
/// become negligible, for integrands decaying faster than the hint.
fn ladder<F, N>(f: &F, node: N, t_lo: f64, t_hi: f64, trim: bool, opts: DeOptions) -> Result<QuadratureResult>
where
    F: Fn(Point) -> Result<C64>,
    N: Fn(f64) -> (Point, f64),
{
    let mut evaluations = 0usize;
    let l1 = std::cell::Cell::new(0.0f64);
    let mut eval = |t: f64| -> Result<C64> {
        let (p, jac) = node(t);
        if jac == 0.0 {
            return Ok(C64::new(0.0, 0.0));
        }
        evaluations += 1;
        let v = f(p)? * jac;
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::Quadrature(format!("integrand not finite at {}", p.x)));
        }
        l1.set(l1.get().max(v.norm()));
        Ok(v)
    };

    // level 0: unit step over the full range
    let mut h = 1.0f64;
    let mut sum = C64::new(0.0, 0.0);
    let k_lo = (t_lo / h).ceil() as i64;
    let mut t_hi = t_hi;
    let k_hi = (t_hi / h).floor() as i64;
    let mut quiet = 0;
    for k in k_lo..=k_hi {
        let v = eval(k as f64 * h)?;
        sum += v;
        if trim && k > 0 {
            quiet = if v.norm() < 1e-20 * l1.get() { quiet + 1 } else { 0 };
            if quiet >= 2 {
                t_hi = k as f64 * h;
                break;
            }
        }
    }
    let mut prev = sum * h;
    let mut err = f64::INFINITY;
    for _level in 1..=opts.max_level {
        h *= 0.5;
        let k_lo = (t_lo / h).ceil() as i64;
        let k_hi = (t_hi / h).floor() as i64;
        let mut k = if k_lo % 2 == 0 { k_lo + 1 } else { k_lo };
        while k <= k_hi {
            sum += eval(k as f64 * h)?;
            k += 2;
        }
        let cur = sum * h;
        err = (cur - prev).norm();
        prev = cur;
        // an integral that cancels to ~0 is judged against the largest sample
        if err <= opts.rel_tol * cur.norm() || err <= 1e-16 * l1.get() {
            break;
        }
    }
    Ok(QuadratureResult { value: prev, err_estimate: err, evaluations })
}

/// ∫_a^b f over the straight segment, with declared algebraic exponents
/// at a and b.
pub fn tanh_sinh<F>(f: F, a: C64, b: C64, exps: (f64, f64), opts: DeOptions) -> Result<QuadratureResult>
where
    F: Fn(Point) -> Result<C64>,
{
    check_exponent(exps.0, "lower")?;
    check_exponent(exps.1, "upper")?;
    let len = b - a;
    let t_of = |u: f64| ((-u.ln() / 2.0) * 2.0 / std::f64::consts::PI).asinh();
    let t_lo = -t_of(min_fraction(exps.0));
    let t_hi = t_of(min_fraction(exps.1));
    let node = |t: f64| {
        let s = FRAC_PI_2 * t.sinh();
        // u = 1/(1+e^{−2s}), 1−u = 1/(1+e^{2s}), both without cancellation
        let (u, v) = if s >= 0.0 {
            let e = (-2.0 * s).exp();
            (1.0 / (1.0 + e), e / (1.0 + e))
        } else {
            let e = (2.0 * s).exp();
            (e / (1.0 + e), 1.0 / (1.0 + e))
        };
        let jac = FRAC_PI_2 * t.cosh() * u * v * 2.0;
        let da = len * u;
        let db = len * v;
        let x = if u <= 0.5 { a + da } else { b - db };
        (Point { x, da, db }, jac)
    };
    let mut r = ladder(&f, node, t_lo, t_hi, false, opts)?;
    r.value *= len;
    r.err_estimate *= len.norm();
    Ok(r)
}

/// ∫ f along the ray a + dir·s, s ∈ (0, ∞), with exponent `start` at a and
/// |f| = O(s^{−decay}) at infinity.
pub fn exp_sinh<F>(f: F, a: C64, dir: C64, start: f64, decay: f64, opts: DeOptions) -> Result<QuadratureResult>
where
    F: Fn(Point) -> Result<C64>,
{
    check_exponent(start, "lower")?;
    if !(decay > 1.0) {
        return Err(Error::Domain(format!("decay exponent {decay} must exceed 1")));
    }
    let dir = dir / dir.norm();
    let s_min = min_fraction(start);
    let s_max = (1e18f64).powf(1.0 / (decay - 1.0)).clamp(1e8, 1e300);
    let t_lo = (s_min.ln() / FRAC_PI_2).asinh();
    let t_hi = (s_max.ln() / FRAC_PI_2).asinh();
    let node = |t: f64| {
        let s = (FRAC_PI_2 * t.sinh()).exp();
        let jac = FRAC_PI_2 * t.cosh() * s;
        let da = dir * s;
        (Point { x: a + da, da, db: C64::new(f64::INFINITY, 0.0) }, jac)
    };
    let mut r = ladder(&f, node, t_lo, t_hi, true, opts)?;
    r.value *= dir;
    Ok(r)
}
