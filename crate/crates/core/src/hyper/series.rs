use crate::error::{Error, Result};
use crate::numerics::{as_integer, rgamma, C64};

const MAX_TERMS: usize = 2_000_000;

fn nonpositive_integer(z: C64) -> Option<i64> {
    match as_integer(z, 1e-14 * z.norm().max(1.0)) {
        Some(n) if n <= 0 => Some(-n),
        _ => None,
    }
}

/// Plain summation of the generalized hypergeometric series.
///
/// With `regularized` the sum is divided by ∏Γ(b_j), which stays finite when
/// some b_j is a nonpositive integer: summation then starts at the first
/// index whose term is nonzero. Convergence of a nonterminating series is the
/// caller's responsibility; the loop stops after three consecutive terms
/// below 1e−16 of the running sum.
pub fn pfq_series(a: &[C64], b: &[C64], w: C64, regularized: bool) -> Result<C64> {
    // A numerator parameter −m truncates the sum after index m.
    let last = a.iter().filter_map(|&x| nonpositive_integer(x)).min();

    let mut n0: i64 = 0;
    for &bj in b {
        if let Some(m) = nonpositive_integer(bj) {
            if regularized {
                n0 = n0.max(m + 1);
            } else if last.map_or(true, |l| l > m) {
                return Err(Error::Degenerate(format!(
                    "lower parameter {bj} is a nonpositive integer"
                )));
            }
        }
    }
    if let Some(l) = last {
        if l < n0 {
            return Ok(C64::new(0.0, 0.0));
        }
    }

    let mut t = if n0 == 0 {
        let mut t0 = C64::new(1.0, 0.0);
        if regularized {
            for &bj in b {
                t0 *= rgamma(bj);
            }
        }
        t0
    } else {
        let mut t0 = C64::new(1.0, 0.0);
        for &ai in a {
            for k in 0..n0 {
                t0 *= ai + k as f64;
            }
        }
        for &bj in b {
            t0 *= rgamma(bj + n0 as f64);
        }
        for k in 1..=n0 {
            t0 /= k as f64;
        }
        t0 * w.powi(n0 as i32)
    };

    let mut sum = t;
    let mut small = 0;
    let mut n = n0;
    loop {
        if let Some(l) = last {
            if n >= l {
                return Ok(sum);
            }
        }
        let nf = n as f64;
        let mut ratio = w / (nf + 1.0);
        for &ai in a {
            ratio *= ai + nf;
        }
        for &bj in b {
            ratio /= bj + nf;
        }
        t *= ratio;
        sum += t;
        n += 1;
        if !(t.re.is_finite() && t.im.is_finite()) {
            return Err(Error::Divergence(format!("series term overflow at n = {n}")));
        }
        if t.norm() <= 1e-16 * sum.norm() {
            small += 1;
            if small >= 3 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
        if (n - n0) as usize > MAX_TERMS {
            return Err(Error::Divergence(format!("no convergence after {MAX_TERMS} terms")));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::r;

    #[test]
    fn regularized_start_index() {
        // ₂F₁(a,b;−1;w)/Γ(−1) = a(a+1)b(b+1)/2 · w² ₂F₁(a+2,b+2;3;w)
        let (a, b, w) = (r(0.3), r(0.7), r(0.2));
        let got = pfq_series(&[a, b], &[r(-1.0)], w, true).unwrap();
        let inner = pfq_series(&[a + 2.0, b + 2.0], &[r(3.0)], w, false).unwrap();
        let want = a * (a + 1.0) * b * (b + 1.0) / 2.0 * w * w * inner;
        assert!((got - want).norm() < 1e-15);
    }

    #[test]
    fn terminating_below_start_is_zero() {
        let got = pfq_series(&[r(-1.0), r(2.0)], &[r(-3.0)], r(0.4), true).unwrap();
        assert_eq!(got, r(0.0));
    }

    #[test]
    fn degenerate_lower_parameter() {
        assert!(pfq_series(&[r(0.5), r(2.0)], &[r(-3.0)], r(0.4), false).is_err());
        // terminates before the zero denominator is reached
        assert!(pfq_series(&[r(-2.0), r(2.0)], &[r(-3.0)], r(0.4), false).is_ok());
    }
}
