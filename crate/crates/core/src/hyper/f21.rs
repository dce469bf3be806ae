use super::{eps_limit, pfq_series};
use crate::error::{Error, Result};
use crate::numerics::{as_integer, cpow, gamma_ratio, rgamma, GammaRatioSpec, C64};
use serde::{Deserialize, Serialize};

/// Largest image modulus at which a series is summed directly.
const SERIES_RADIUS: f64 = 0.75;
/// Distance to an integer below which a connection formula is treated as
/// degenerate and evaluated by the ε-limit.
const DEGENERATE_GAP: f64 = 1e-5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Hyp2F1Params {
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub w: C64,
}

impl Hyp2F1Params {
    pub fn eval(&self) -> Result<C64> {
        hyp2f1(self.a, self.b, self.c, self.w)
    }
}

fn check_finite(xs: &[C64]) -> Result<()> {
    if xs.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(())
    } else {
        Err(Error::Invalid("non-finite hypergeometric parameter".into()))
    }
}

fn nonpositive_integer(z: C64) -> Option<i64> {
    match as_integer(z, 1e-14 * z.norm().max(1.0)) {
        Some(n) if n <= 0 => Some(-n),
        _ => None,
    }
}

fn near_integer(z: C64) -> bool {
    let n = z.re.round();
    (z - n).norm() < DEGENERATE_GAP
}

fn series(a: C64, b: C64, c: C64, w: C64) -> Result<C64> {
    pfq_series(&[a, b], &[c], w, false)
}

fn ratio(num: &[C64], den: &[C64]) -> Result<C64> {
    gamma_ratio(&GammaRatioSpec::new(num, den))
}

/// Gauss hypergeometric function ₂F₁(a, b; c; w) on the plane cut along
/// [1, ∞).
pub fn hyp2f1(a: C64, b: C64, c: C64, w: C64) -> Result<C64> {
    check_finite(&[a, b, c, w])?;
    if w.norm() == 0.0 {
        return Ok(C64::new(1.0, 0.0));
    }
    let ta = nonpositive_integer(a);
    let tb = nonpositive_integer(b);
    if ta.is_some() || tb.is_some() {
        return series(a, b, c, w);
    }
    if nonpositive_integer(c).is_some() {
        return Err(Error::Degenerate(format!(
            "c = {c} is a nonpositive integer and the series does not terminate"
        )));
    }
    if w.im == 0.0 && w.re >= 1.0 {
        if w.re == 1.0 {
            let s = c - a - b;
            if s.re > 0.0 {
                return ratio(&[c, s], &[c - a, c - b]);
            }
            return Err(Error::Divergence("₂F₁ at w = 1 with Re(c−a−b) ≤ 0".into()));
        }
        return Err(Error::BranchCut(format!("₂F₁ argument {w} on [1, ∞)")));
    }
    dispatch(a, b, c, w)
}

fn dispatch(a: C64, b: C64, c: C64, w: C64) -> Result<C64> {
    if w.norm() <= SERIES_RADIUS {
        return series(a, b, c, w);
    }
    let pfaff = w / (w - 1.0);
    if pfaff.norm() <= SERIES_RADIUS {
        return Ok(cpow(1.0 - w, -a) * series(a, c - b, c, pfaff)?);
    }
    let candidates = [
        (1, (1.0 - w).norm()),
        (2, (1.0 / w).norm()),
        (3, (1.0 / (1.0 - w)).norm()),
        (4, (1.0 - 1.0 / w).norm()),
    ];
    let (which, m) = candidates
        .iter()
        .copied()
        .fold((0, f64::INFINITY), |acc, x| if x.1 < acc.1 { x } else { acc });
    if m > SERIES_RADIUS {
        return ode_continuation(a, b, c, w);
    }
    match which {
        1 | 4 => {
            let f = |c: C64| {
                if which == 1 {
                    one_minus_w(a, b, c, w)
                } else {
                    one_minus_inv_w(a, b, c, w)
                }
            };
            if near_integer(c - a - b) {
                eps_limit(|d| f(c + d))
            } else {
                f(c)
            }
        }
        _ => {
            let f = |b: C64| {
                if which == 2 {
                    inv_w(a, b, c, w)
                } else {
                    inv_one_minus_w(a, b, c, w)
                }
            };
            if near_integer(a - b) {
                eps_limit(|d| f(b + d))
            } else {
                f(b)
            }
        }
    }
}

// w → 1 − w
fn one_minus_w(a: C64, b: C64, c: C64, w: C64) -> Result<C64> {
    let s = c - a - b;
    let u = 1.0 - w;
    let t1 = ratio(&[c, s], &[c - a, c - b])? * series(a, b, 1.0 - s, u)?;
    let t2 = ratio(&[c, -s], &[a, b])? * cpow(u, s) * series(c - a, c - b, 1.0 + s, u)?;
    Ok(t1 + t2)
}

// w → 1/w
fn inv_w(a: C64, b: C64, c: C64, w: C64) -> Result<C64> {
    let u = 1.0 / w;
    let mw = -w;
    let t1 = ratio(&[c, b - a], &[b, c - a])? * cpow(mw, -a) * series(a, a - c + 1.0, a - b + 1.0, u)?;
    let t2 = ratio(&[c, a - b], &[a, c - b])? * cpow(mw, -b) * series(b, b - c + 1.0, b - a + 1.0, u)?;
    Ok(t1 + t2)
}

// w → 1/(1 − w)
fn inv_one_minus_w(a: C64, b: C64, c: C64, w: C64) -> Result<C64> {
    let v = 1.0 - w;
    let u = 1.0 / v;
    let t1 = ratio(&[c, b - a], &[b, c - a])? * cpow(v, -a) * series(a, c - b, a - b + 1.0, u)?;
    let t2 = ratio(&[c, a - b], &[a, c - b])? * cpow(v, -b) * series(b, c - a, b - a + 1.0, u)?;
    Ok(t1 + t2)
}

// w → 1 − 1/w
fn one_minus_inv_w(a: C64, b: C64, c: C64, w: C64) -> Result<C64> {
    let s = c - a - b;
    let u = 1.0 - 1.0 / w;
    let t1 = ratio(&[c, s], &[c - a, c - b])? * cpow(w, -a) * series(a, a - c + 1.0, 1.0 - s, u)?;
    let t2 = ratio(&[c, -s], &[a, b])?
        * cpow(1.0 - w, s)
        * cpow(w, a - c)
        * series(c - a, 1.0 - a, 1.0 + s, u)?;
    Ok(t1 + t2)
}

/// Taylor-steps the hypergeometric equation
/// w(1−w)F'' + [c − (a+b+1)w]F' − abF = 0
/// along the ray from 0.5·w/|w| to w.
fn ode_continuation(a: C64, b: C64, c: C64, w: C64) -> Result<C64> {
    let start = w * (0.5 / w.norm());
    let mut f = series(a, b, c, start)?;
    let mut df = a * b / c * series(a + 1.0, b + 1.0, c + 1.0, start)?;
    let mut p = start;
    let ab = a * b;
    let s1 = a + b + 1.0;
    for _ in 0..200 {
        let rem = w - p;
        if rem.norm() == 0.0 {
            return Ok(f);
        }
        let reach = 0.5 * p.norm().min((1.0 - p).norm());
        let h = if rem.norm() <= reach { rem } else { rem * (reach / rem.norm()) };
        let p0 = p * (1.0 - p);
        let p1 = 1.0 - 2.0 * p;
        let q0 = c - s1 * p;
        let (mut fk, mut fk1) = (f, df);
        let mut hk = C64::new(1.0, 0.0);
        let mut val = f + df * h;
        let mut der = df;
        let mut small = 0;
        for k in 0..2000usize {
            let kf = k as f64;
            let num = (p1 * (kf * (kf + 1.0)) + q0 * (kf + 1.0)) * fk1 + (-(kf * (kf - 1.0)) - s1 * kf - ab) * fk;
            let fk2 = -num / (p0 * ((kf + 2.0) * (kf + 1.0)));
            // fk is the k-th Taylor coefficient, fk1 the (k+1)-th
            let hk1 = hk * h;
            let hk2 = hk1 * h;
            let tv = fk2 * hk2;
            val += tv;
            let td = fk2 * (kf + 2.0) * hk1;
            der += td;
            if tv.norm() <= 1e-17 * val.norm() && td.norm() <= 1e-17 * der.norm() {
                small += 1;
                if small >= 3 {
                    break;
                }
            } else {
                small = 0;
            }
            fk = fk1;
            fk1 = fk2;
            hk = hk1;
        }
        f = val;
        df = der;
        p += h;
    }
    Err(Error::Divergence("₂F₁ ODE continuation did not reach target".into()))
}

/// ₂F₁(a, b; c; w)/Γ(c), finite for every c.
pub fn hyp2f1_regularized(a: C64, b: C64, c: C64, w: C64) -> Result<C64> {
    if let Some(m) = nonpositive_integer(c) {
        let m = m as usize;
        if w.norm() == 0.0 {
            return Ok(C64::new(0.0, 0.0));
        }
        let mut pre = C64::new(1.0, 0.0);
        for k in 0..=m {
            pre *= (a + k as f64) * (b + k as f64) / (k as f64 + 1.0);
        }
        if pre.norm() == 0.0 {
            return Ok(pre);
        }
        let shift = (m + 1) as f64;
        return Ok(pre * w.powi(m as i32 + 1) * hyp2f1(a + shift, b + shift, C64::new(shift + 1.0, 0.0), w)?);
    }
    Ok(hyp2f1(a, b, c, w)? * rgamma(c))
}

/// k-th w-derivative of the regularized function, (a)_k (b)_k ₂F̃₁(a+k, b+k; c+k; w).
pub fn hyp2f1_regularized_deriv(a: C64, b: C64, c: C64, w: C64, k: usize) -> Result<C64> {
    let mut pre = C64::new(1.0, 0.0);
    for j in 0..k {
        pre *= (a + j as f64) * (b + j as f64);
    }
    if pre.norm() == 0.0 {
        return Ok(pre);
    }
    let kf = k as f64;
    Ok(pre * hyp2f1_regularized(a + kf, b + kf, c + kf, w)?)
}
