//! A function of the form Σ coef·(z+1)^p (s(z−1))^q ·₂F̃₁(a, b; c; w(z)),
//! differentiated term by term.

use crate::error::Result;
use crate::hyper::hyp2f1_regularized_deriv;
use crate::numerics::{ln, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Arg {
    /// w = (1−z)/2
    Near,
    /// w = 2/(1−z)
    Far,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Term {
    pub coef: C64,
    pub p: C64,
    pub q: C64,
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub arg: Arg,
}

/// Sign s applied to z−1 before the power: +1 off the cut, −1 on (−1, 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Frame {
    Plane,
    Cut,
}

/// w and its first two z-derivatives, from d = z − 1.
fn w_and_derivs(arg: Arg, d: C64) -> (C64, C64, C64) {
    match arg {
        Arg::Near => (-d * 0.5, C64::new(-0.5, 0.0), C64::new(0.0, 0.0)),
        Arg::Far => {
            let e = -d;
            (2.0 / e, 2.0 / (e * e), 4.0 / (e * e * e))
        }
    }
}

impl Term {
    fn prefactor(&self, d: C64, frame: Frame) -> C64 {
        let zm = match frame {
            Frame::Plane => d,
            Frame::Cut => -d,
        };
        let mut e = C64::new(0.0, 0.0);
        if self.p.norm() != 0.0 {
            e += self.p * ln(d + 2.0);
        }
        if self.q.norm() != 0.0 {
            e += self.q * ln(zm);
        }
        self.coef * e.exp()
    }

    /// Value and up to `order` (≤ 2) z-derivatives, at z = 1 + d.
    pub fn eval(&self, d: C64, frame: Frame, order: usize) -> Result<[C64; 3]> {
        let zero = C64::new(0.0, 0.0);
        let h = self.prefactor(d, frame);
        if h.norm() == 0.0 {
            return Ok([zero; 3]);
        }
        let (w, w1, w2) = w_and_derivs(self.arg, d);
        let f0 = hyp2f1_regularized_deriv(self.a, self.b, self.c, w, 0)?;
        if order == 0 {
            return Ok([h * f0, zero, zero]);
        }
        let f1 = hyp2f1_regularized_deriv(self.a, self.b, self.c, w, 1)?;
        let l = self.p / (d + 2.0) + self.q / d;
        let d1 = h * (l * f0 + f1 * w1);
        if order == 1 {
            return Ok([h * f0, d1, zero]);
        }
        let f2 = hyp2f1_regularized_deriv(self.a, self.b, self.c, w, 2)?;
        let dl = -self.p / ((d + 2.0) * (d + 2.0)) - self.q / (d * d);
        let fz1 = f1 * w1;
        let fz2 = f2 * w1 * w1 + f1 * w2;
        let d2 = h * ((l * l + dl) * f0 + 2.0 * l * fz1 + fz2);
        Ok([h * f0, d1, d2])
    }
}

/// Sum of terms at z = 1 + d; `weight` adds (z+1)^{s}(z−1)^{s} (or the
/// cut-frame analogue) to every term.
pub(crate) fn eval_sum(terms: &[Term], d: C64, frame: Frame, weight: C64, order: usize) -> Result<[C64; 3]> {
    let mut out = [C64::new(0.0, 0.0); 3];
    for t in terms {
        let mut t = *t;
        t.p += weight;
        t.q += weight;
        let v = t.eval(d, frame, order)?;
        for k in 0..3 {
            out[k] += v[k];
        }
    }
    Ok(out)
}
