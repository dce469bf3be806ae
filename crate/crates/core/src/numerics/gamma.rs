use super::{elementary::ln, sin_pi, C64, PI};
use crate::error::{Error, Result};

// Godfrey's Lanczos set, g = 607/128, 15 terms.
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_923_517,
    -59.597_960_355_475_491_248,
    14.136_097_974_741_747_174,
    -0.491_913_816_097_620_199_78,
    0.339_946_499_848_118_886_99e-4,
    0.465_236_289_270_485_756_65e-4,
    -0.983_744_753_048_795_646_77e-4,
    0.158_088_703_224_912_488_84e-3,
    -0.210_264_441_724_104_883_19e-3,
    0.217_439_618_115_212_643_20e-3,
    -0.164_318_106_536_763_890_22e-3,
    0.844_182_239_838_527_432_93e-4,
    -0.261_908_384_015_814_086_70e-4,
    0.368_991_826_595_316_227_04e-5,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_741_78;

/// Distance below which an argument counts as sitting on a gamma pole.
const POLE_TOL: f64 = 1e-9;

fn is_exact_pole(z: C64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// Returns m when z lies within 1e−9 of −m, m ≥ 0.
pub fn near_nonpositive_integer(z: C64) -> Option<i64> {
    let n = z.re.round();
    if n <= 0.0 && (z - n).norm() < POLE_TOL {
        Some(-n as i64)
    } else {
        None
    }
}

fn ln_gamma_right(z: C64) -> C64 {
    let x = z - 1.0;
    let mut a = C64::new(LANCZOS[0], 0.0);
    for (k, &ck) in LANCZOS.iter().enumerate().skip(1) {
        a += ck / (x + k as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    HALF_LN_2PI + (x + 0.5) * ln(t) - t + ln(a)
}

/// Principal log-gamma.
///
/// For Re z < 0.5 the argument is pushed right by the recurrence, which
/// keeps the branch continuous off the negative real axis. Below
/// Re z = −60 reflection is used and the imaginary part is only fixed
/// modulo 2π.
pub fn ln_gamma(z: C64) -> Result<C64> {
    if is_exact_pole(z) {
        return Err(Error::Pole(format!("ln_gamma at {}", z.re)));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Invalid(format!("ln_gamma at non-finite {z}")));
    }
    if z.re >= 0.5 {
        return Ok(ln_gamma_right(z));
    }
    if z.re > -60.0 {
        let n = (0.5 - z.re).ceil() as usize;
        let mut acc = C64::new(0.0, 0.0);
        for k in 0..n {
            acc += ln(z + k as f64);
        }
        return Ok(ln_gamma_right(z + n as f64) - acc);
    }
    Ok(C64::new(PI.ln(), 0.0) - ln(sin_pi(z)) - ln_gamma_right(1.0 - z))
}

fn realify(z: C64, v: C64) -> C64 {
    if z.im == 0.0 {
        C64::new(v.re, 0.0)
    } else {
        v
    }
}

pub fn gamma(z: C64) -> Result<C64> {
    Ok(realify(z, ln_gamma(z)?.exp()))
}

/// 1/Γ(z); entire, exactly zero at nonpositive integers.
pub fn rgamma(z: C64) -> C64 {
    if is_exact_pole(z) {
        return C64::new(0.0, 0.0);
    }
    match ln_gamma(z) {
        Ok(l) => realify(z, (-l).exp()),
        Err(_) => C64::new(f64::NAN, f64::NAN),
    }
}

/// ∏Γ(numerators) / ∏Γ(denominators).
#[derive(Debug, Clone, Default)]
pub struct GammaRatioSpec {
    pub numerators: Vec<C64>,
    pub denominators: Vec<C64>,
}

impl GammaRatioSpec {
    pub fn new(numerators: &[C64], denominators: &[C64]) -> Self {
        Self {
            numerators: numerators.to_vec(),
            denominators: denominators.to_vec(),
        }
    }

    pub fn eval(&self) -> Result<C64> {
        gamma_ratio(self)
    }
}

/// Limiting value of the ratio.
///
/// Identical arguments cancel first. Each remaining numerator pole is paired
/// with a denominator pole; the pair Γ(a)/Γ(b) is rewritten by reflection as
/// [sin πb / sin πa]·Γ(1−b)/Γ(1−a), and when either sine vanishes exactly the
/// common-ε limit (−1)^{k−m} is used. Surplus denominator poles give 0.
pub fn gamma_ratio(spec: &GammaRatioSpec) -> Result<C64> {
    let mut num = spec.numerators.clone();
    let mut den = Vec::with_capacity(spec.denominators.len());
    for &d in &spec.denominators {
        if let Some(pos) = num.iter().position(|&n| n == d) {
            num.swap_remove(pos);
        } else {
            den.push(d);
        }
    }

    let num_poles: Vec<usize> = (0..num.len())
        .filter(|&i| near_nonpositive_integer(num[i]).is_some())
        .collect();
    let den_poles: Vec<usize> = (0..den.len())
        .filter(|&i| near_nonpositive_integer(den[i]).is_some())
        .collect();
    if num_poles.len() > den_poles.len() {
        return Err(Error::Pole(format!(
            "gamma ratio has {} numerator poles against {} denominator poles",
            num_poles.len(),
            den_poles.len()
        )));
    }
    if den_poles.len() > num_poles.len() {
        return Ok(C64::new(0.0, 0.0));
    }

    let all_real = num.iter().chain(den.iter()).all(|z| z.im == 0.0);
    let mut factor = C64::new(1.0, 0.0);
    let mut top = Vec::with_capacity(num.len());
    let mut bottom = Vec::with_capacity(den.len());
    for (&i, &j) in num_poles.iter().zip(den_poles.iter()) {
        let a = num[i];
        let b = den[j];
        let m = near_nonpositive_integer(a).unwrap();
        let k = near_nonpositive_integer(b).unwrap();
        let (sa, sb) = (sin_pi(a), sin_pi(b));
        if sa.norm() > 0.0 && sb.norm() > 0.0 {
            factor *= sb / sa;
        } else if (k - m) % 2 != 0 {
            factor = -factor;
        }
        top.push(1.0 - b);
        bottom.push(1.0 - a);
    }
    for (i, &a) in num.iter().enumerate() {
        if !num_poles.contains(&i) {
            top.push(a);
        }
    }
    for (j, &b) in den.iter().enumerate() {
        if !den_poles.contains(&j) {
            bottom.push(b);
        }
    }

    let mut l = C64::new(0.0, 0.0);
    for a in top {
        l += ln_gamma(a)?;
    }
    for b in bottom {
        l -= ln_gamma(b)?;
    }
    let v = factor * l.exp();
    Ok(if all_real { C64::new(v.re, 0.0) } else { v })
}
