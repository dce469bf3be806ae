use super::pfq_series;
use crate::error::{Error, Result};
use crate::numerics::{as_integer, cpow, gamma_ratio, GammaRatioSpec, C64};
use serde::{Deserialize, Serialize};

/// Series use is refused within this distance of the unit circle.
const EDGE: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Hyp3F2Params {
    pub a: [C64; 3],
    pub b: [C64; 2],
    pub w: C64,
}

fn terminates(a: &[C64; 3]) -> bool {
    a.iter()
        .any(|&x| matches!(as_integer(x, 1e-14 * x.norm().max(1.0)), Some(n) if n <= 0))
}

/// ₃F₂(a₁, a₂, a₃; b₁, b₂; w) by its defining series.
pub fn hyp3f2_series(p: &Hyp3F2Params) -> Result<C64> {
    if !terminates(&p.a) && p.w.norm() >= 1.0 - EDGE {
        return Err(Error::Divergence(format!(
            "₃F₂ series at |w| = {} needs |w| < {}",
            p.w.norm(),
            1.0 - EDGE
        )));
    }
    pfq_series(&p.a, &p.b, p.w, false)
}

/// ₃F₂/(Γ(b₁)Γ(b₂)) by series, finite at nonpositive-integer b.
pub fn hyp3f2_regularized(p: &Hyp3F2Params) -> Result<C64> {
    if !terminates(&p.a) && p.w.norm() >= 1.0 - EDGE {
        return Err(Error::Divergence(format!(
            "₃F₂ series at |w| = {} needs |w| < {}",
            p.w.norm(),
            1.0 - EDGE
        )));
    }
    pfq_series(&p.a, &p.b, p.w, true)
}

/// k-th w-derivative of the regularized series.
pub fn hyp3f2_regularized_deriv(p: &Hyp3F2Params, k: usize) -> Result<C64> {
    let mut pre = C64::new(1.0, 0.0);
    for j in 0..k {
        for &ai in &p.a {
            pre *= ai + j as f64;
        }
    }
    if pre.norm() == 0.0 {
        return Ok(pre);
    }
    let kf = k as f64;
    let q = Hyp3F2Params {
        a: [p.a[0] + kf, p.a[1] + kf, p.a[2] + kf],
        b: [p.b[0] + kf, p.b[1] + kf],
        w: p.w,
    };
    Ok(pre * hyp3f2_regularized(&q)?)
}

/// ₃F₂ for |w| > 1 as the sum of the three residue series in 1/w
/// obtained by closing the Barnes contour to the left.
///
/// Requires pairwise non-integer differences of the numerator parameters.
pub fn hyp3f2_far(p: &Hyp3F2Params) -> Result<C64> {
    let u = 1.0 / p.w;
    if u.norm() >= 1.0 - EDGE {
        return Err(Error::Divergence("₃F₂ residue expansion needs |w| > 1".into()));
    }
    if p.w.im == 0.0 && p.w.re > 0.0 {
        return Err(Error::BranchCut(format!("₃F₂ argument {} on [1, ∞)", p.w)));
    }
    let a = p.a;
    let [b1, b2] = p.b;
    let mut total = C64::new(0.0, 0.0);
    for j in 0..3 {
        let aj = a[j];
        let others: Vec<C64> = (0..3).filter(|&i| i != j).map(|i| a[i]).collect();
        for &ai in &others {
            if as_integer(ai - aj, 1e-9).is_some() {
                return Err(Error::Degenerate(format!(
                    "numerator parameters {ai} and {aj} differ by an integer"
                )));
            }
        }
        let coef = gamma_ratio(&GammaRatioSpec::new(
            &[b1, b2, others[0] - aj, others[1] - aj],
            &[others[0], others[1], b1 - aj, b2 - aj],
        ))?;
        if coef.norm() == 0.0 {
            continue;
        }
        let inner = pfq_series(
            &[aj, 1.0 + aj - b1, 1.0 + aj - b2],
            &[1.0 + aj - others[0], 1.0 + aj - others[1]],
            u,
            false,
        )?;
        total += coef * cpow(-p.w, -aj) * inner;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyper::hyp2f1;
    use crate::numerics::{c, r};

    fn p(a: [f64; 3], b: [f64; 2], w: C64) -> Hyp3F2Params {
        Hyp3F2Params {
            a: [r(a[0]), r(a[1]), r(a[2])],
            b: [r(b[0]), r(b[1])],
            w,
        }
    }

    #[test]
    fn trivial_values() {
        assert_eq!(hyp3f2_series(&p([0.5, 1.5, 1.0], [2.0, 2.5], r(0.0))).unwrap(), r(1.0));
        let q = p([-1.0, 0.7, 1.3], [2.1, 0.4], c(3.0, 1.0));
        let want = 1.0 - (0.7 * 1.3) / (2.1 * 0.4) * q.w;
        assert!((hyp3f2_series(&q).unwrap() - want).norm() < 1e-14);
    }

    #[test]
    fn multiprecision_oracle() {
        // 10 000-term partial sum at 60 digits
        let got = hyp3f2_series(&p([0.5, 1.5, 1.0], [2.0, 2.5], r(0.3))).unwrap();
        let want = r(1.050_674_367_204_625_1);
        assert!((got - want).norm() < 1e-14, "{got}");
    }

    #[test]
    fn reduces_to_2f1() {
        let q = p([0.3, 1.7, 2.2], [0.9, 2.2], c(0.4, -0.3));
        let want = hyp2f1(r(0.3), r(1.7), r(0.9), q.w).unwrap();
        assert!((hyp3f2_series(&q).unwrap() - want).norm() < 1e-12 * want.norm());
    }

    #[test]
    fn divergence_is_reported() {
        assert!(matches!(
            hyp3f2_series(&p([0.5, 1.5, 1.0], [2.0, 2.5], r(1.2))),
            Err(Error::Divergence(_))
        ));
    }

    #[test]
    fn far_field_matches_2f1_reduction() {
        let q = p([0.3, 1.7, 2.2], [0.9, 2.2], c(-3.0, 0.5));
        let want = hyp2f1(r(0.3), r(1.7), r(0.9), q.w).unwrap();
        let q = Hyp3F2Params { a: [q.a[0], q.a[1], r(2.45)], b: [q.b[0], r(2.45)], w: q.w };
        let got = hyp3f2_far(&q).unwrap();
        assert!((got - want).norm() < 1e-11 * want.norm(), "{got} vs {want}");
    }
}
