use super::{C64, PI};

fn sin_pi_real(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let n = (2.0 * x).round();
    let t = PI * (x - 0.5 * n);
    let v = match (n.rem_euclid(4.0)) as i64 {
        0 => t.sin(),
        1 => t.cos(),
        2 => -t.sin(),
        _ => -t.cos(),
    };
    v + 0.0
}

fn cos_pi_real(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let n = (2.0 * x).round();
    let t = PI * (x - 0.5 * n);
    let v = match (n.rem_euclid(4.0)) as i64 {
        0 => t.cos(),
        1 => -t.sin(),
        2 => -t.cos(),
        _ => t.sin(),
    };
    v + 0.0
}

/// sin(πz) with exact reduction of the real part.
pub fn sin_pi(z: C64) -> C64 {
    if z.im == 0.0 {
        return C64::new(sin_pi_real(z.re), 0.0);
    }
    let y = PI * z.im;
    C64::new(sin_pi_real(z.re) * y.cosh(), cos_pi_real(z.re) * y.sinh())
}

/// cos(πz) with exact reduction of the real part.
pub fn cos_pi(z: C64) -> C64 {
    if z.im == 0.0 {
        return C64::new(cos_pi_real(z.re), 0.0);
    }
    let y = PI * z.im;
    C64::new(cos_pi_real(z.re) * y.cosh(), -sin_pi_real(z.re) * y.sinh())
}

/// Principal logarithm; a signed zero imaginary part is read as +0 so the
/// negative real axis maps to arg = +π.
pub fn ln(w: C64) -> C64 {
    let w = if w.im == 0.0 { C64::new(w.re, 0.0) } else { w };
    C64::new(w.norm().ln(), w.im.atan2(w.re))
}

/// Principal power w^s.
pub fn cpow(w: C64, s: C64) -> C64 {
    if w.re == 0.0 && w.im == 0.0 {
        if s.re == 0.0 && s.im == 0.0 {
            return C64::new(1.0, 0.0);
        }
        if s.re > 0.0 {
            return C64::new(0.0, 0.0);
        }
        return C64::new(f64::INFINITY, 0.0);
    }
    if s.im == 0.0 && s.re == 0.0 {
        return C64::new(1.0, 0.0);
    }
    (s * ln(w)).exp()
}

/// u^p v^q evaluated through one exponential so that large and small
/// factors do not overflow separately.
pub fn pow_pair(u: C64, p: C64, v: C64, q: C64) -> C64 {
    let mut e = C64::new(0.0, 0.0);
    if !(p.re == 0.0 && p.im == 0.0) {
        e += p * ln(u);
    }
    if !(q.re == 0.0 && q.im == 0.0) {
        e += q * ln(v);
    }
    e.exp()
}

/// (z²−1)^s as (z−1)^s (z+1)^s.
pub fn pow_z2m1(z: C64, s: C64) -> C64 {
    pow_pair(z - 1.0, s, z + 1.0, s)
}
