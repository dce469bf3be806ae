//! Property tests of the foundations: gamma, ₂F₁, the Legendre functions
//! and the quadrature kernels.

use legfrac::hyper::hyp2f1;
use legfrac::legendre::{
    derivs, ferrers_p, ferrers_q, jacobi_p, legendre_deriv, legendre_p, legendre_p_side, legendre_q,
    legendre_q_side, whipple_p_to_q, whipple_q_to_p, Family, LegendreParams, QNorm, Side,
};
use legfrac::numerics::{c, cos_pi, cpow, exp_i_pi, gamma, r, rel_err, sin_pi, C64, PI};
use legfrac::quad::{integrate_loop_with, integrate_segment, repeated_integral, Ends, LoopMethod, Nest};
use legfrac::verify::{ode_residual, OdeMode};
use proptest::prelude::*;

fn cplx(re: std::ops::Range<f64>, im: std::ops::Range<f64>) -> impl Strategy<Value = C64> {
    (re, im).prop_map(|(a, b)| c(a, b))
}

/// Arguments off the cut, kept away from z = ±1.
fn arg() -> impl Strategy<Value = C64> {
    cplx(-3.0..4.0, -3.0..3.0).prop_filter("near ±1 or on the cut", |z| {
        (*z - 1.0).norm() > 0.2 && (*z + 1.0).norm() > 0.2 && z.im.abs() > 0.05
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn gamma_reflection_and_recurrence(z in cplx(-4.5..4.5, -3.0..3.0)) {
        prop_assume!((z - z.re.round()).norm() > 0.05);
        let g = gamma(z).unwrap();
        prop_assert!(rel_err(gamma(z + 1.0).unwrap(), z * g) < 1e-12);
        let refl = g * gamma(1.0 - z).unwrap() * sin_pi(z);
        prop_assert!(rel_err(refl, r(PI)) < 1e-12);
    }

    #[test]
    fn euler_transformation(a in cplx(-2.0..2.0, -1.0..1.0), b in cplx(-2.0..2.0, -1.0..1.0),
                            cc in cplx(0.2..3.0, -1.0..1.0), w in cplx(-3.0..0.9, -2.0..2.0)) {
        prop_assume!((w - 1.0).norm() > 0.1);
        prop_assume!((cc - a - b - (cc - a - b).re.round()).norm() > 0.05);
        let lhs = hyp2f1(a, b, cc, w).unwrap();
        let rhs = cpow(1.0 - w, cc - a - b) * hyp2f1(cc - a, cc - b, cc, w).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-10 * lhs.norm().max(1.0), "{} vs {}", lhs, rhs);
    }

    #[test]
    fn connection_formula(nu in -1.8f64..2.8, mu in -1.8f64..1.8, z in arg()) {
        prop_assume!(cos_pi(r(nu)).norm() > 0.05);
        let (nu, mu) = (r(nu), r(mu));
        prop_assume!((nu + mu + 1.0 - (nu + mu).re.round() - 1.0).norm() > 0.02);
        prop_assume!((-nu + mu - (-nu + mu).re.round()).norm() > 0.02);
        let q1 = legendre_q(nu, mu, z).unwrap();
        let q2 = legendre_q(-nu - 1.0, mu, z).unwrap();
        let p = exp_i_pi(-mu) * (sin_pi(nu + mu) * q1 - sin_pi(nu - mu) * q2) / (PI * cos_pi(nu));
        let scale = (sin_pi(nu + mu) * q1).norm().max((sin_pi(nu - mu) * q2).norm()) / (PI * cos_pi(nu).norm());
        let want = legendre_p(nu, mu, z).unwrap();
        prop_assert!((p - want).norm() <= 1e-9 * want.norm().max(scale), "{} vs {}", p, want);
    }

    #[test]
    fn degree_symmetry(nu in cplx(-2.0..2.0, -1.0..1.0), mu in cplx(-1.5..1.5, -0.5..0.5), z in arg()) {
        let a = legendre_p(nu, mu, z).unwrap();
        let b = legendre_p(-nu - 1.0, mu, z).unwrap();
        prop_assert!(rel_err(b, a) < 1e-12 || (a - b).norm() < 1e-14);
    }

    #[test]
    fn legendre_equation(nu in -1.5f64..2.5, mu in -1.5f64..1.5, z in arg(), q in any::<bool>()) {
        let fam = if q { Family::Q } else { Family::P };
        if q {
            prop_assume!(((nu + mu) - (nu + mu).round()).abs() > 0.02);
        }
        let res = ode_residual(OdeMode::Homogeneous, fam, r(nu), r(mu), r(0.0), z).unwrap();
        prop_assert!(res.relative() < 1e-8, "{:?}", res);
    }

    #[test]
    fn ferrers_equation(nu in -1.5f64..2.5, mu in -1.5f64..1.5, x in -0.9f64..0.9, q in any::<bool>()) {
        let fam = if q { Family::FerrersQ } else { Family::FerrersP };
        if q {
            prop_assume!(((nu + mu) - (nu + mu).round()).abs() > 0.02);
        }
        let res = ode_residual(OdeMode::Homogeneous, fam, r(nu), r(mu), r(0.0), r(x)).unwrap();
        prop_assert!(res.relative() < 1e-8, "{:?}", res);
    }

    #[test]
    fn derivative_matches_finite_differences(nu in -1.0f64..2.0, mu in -1.0f64..1.0, z in arg()) {
        let h = 1e-5;
        for fam in [Family::P, Family::Q] {
            let f = |w: C64| LegendreParams::new(fam, r(nu), r(mu), w).eval().unwrap();
            let fd = (f(z + h) - f(z - h)) / (2.0 * h);
            let d = legendre_deriv(fam, r(nu), r(mu), z).unwrap();
            prop_assert!((d - fd).norm() <= 1e-7 * d.norm().max(f(z).norm()), "{:?}: {} vs {}", fam, d, fd);
        }
    }

    #[test]
    fn ferrers_boundary_values(nu in -1.5f64..2.5, mu in -1.5f64..1.5, x in -0.9f64..0.9) {
        let (nu, mu, xc) = (r(nu), r(mu), r(x));
        let above = legendre_p_side(nu, mu, xc, Side::Above).unwrap();
        let below = legendre_p_side(nu, mu, xc, Side::Below).unwrap();
        let p = 0.5 * (exp_i_pi(mu * 0.5) * above + exp_i_pi(-mu * 0.5) * below);
        let want = ferrers_p(nu, mu, x).unwrap();
        let scale = above.norm().max(below.norm()).max(want.norm());
        prop_assert!((p - want).norm() <= 1e-9 * scale, "{} vs {}", p, want);
        prop_assume!(((nu + mu).re - (nu + mu).re.round()).abs() > 0.02);
        let qa = legendre_q_side(nu, mu, xc, Side::Above, QNorm::Hobson).unwrap();
        let qb = legendre_q_side(nu, mu, xc, Side::Below, QNorm::Hobson).unwrap();
        let q = 0.5 * exp_i_pi(-mu) * (exp_i_pi(-mu * 0.5) * qa + exp_i_pi(mu * 0.5) * qb);
        let want = ferrers_q(nu, mu, x).unwrap();
        let scale = qa.norm().max(qb.norm()).max(want.norm());
        prop_assert!((q - want).norm() <= 1e-9 * scale, "{} vs {}", q, want);
    }

    #[test]
    fn legendre_as_jacobi(nu in 0.0f64..2.5, mu in -0.9f64..0.9, z in arg()) {
        prop_assume!((nu - mu + 1.0 - (nu - mu + 1.0).round()).abs() > 0.02 || nu - mu + 1.0 > 0.5);
        let (nu, mu) = (r(nu), r(mu));
        let k = gamma(nu + 1.0).unwrap() / gamma(nu - mu + 1.0).unwrap();
        let w = cpow(z + 1.0, mu * 0.5) * cpow(z - 1.0, -mu * 0.5);
        let rhs = k * w * jacobi_p(nu, -mu, mu, z).unwrap();
        let lhs = legendre_p(nu, mu, z).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-10 * lhs.norm().max(rhs.norm()), "{} vs {}", lhs, rhs);
    }

    #[test]
    fn whipple_round_trip(nu in -0.8f64..1.8, mu in -0.8f64..0.8, y in 1.2f64..4.0) {
        prop_assume!(((nu + mu) - (nu + mu).round()).abs() > 0.02);
        let (nu, mu, y) = (r(nu), r(mu), r(y));
        let x = y / (y * y - 1.0).sqrt();
        let p = whipple_p_to_q(nu, mu, y).unwrap();
        prop_assert!(rel_err(p, legendre_p(nu, mu, x).unwrap()) < 1e-9);
        let q = whipple_q_to_p(nu, mu, y).unwrap();
        prop_assert!(rel_err(q, legendre_q(nu, mu, x).unwrap()) < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn kernel_reduction(a in -1.0f64..1.0, b in 0.2f64..2.0, n in 2usize..=3, z in 0.1f64..0.6) {
        // smooth f(t) = e^{at} cos(bt) on [z, 1]
        let f = move |t: C64| (a * t).exp() * (b * t).cos();
        let reduced = repeated_integral(|p| Ok(f(p.x)), r(z), Nest::ToOne, n, Ends::default()).unwrap().value;
        let inner = |t: f64| integrate_segment(|p| Ok(f(p.x)), r(t), r(1.0), (0.0, 0.0)).unwrap().value;
        let brute = if n == 2 {
            integrate_segment(|p| Ok(inner(p.x.re)), r(z), r(1.0), (0.0, 0.0)).unwrap().value
        } else {
            let mid = |t: f64| integrate_segment(|p| Ok(inner(p.x.re)), r(t), r(1.0), (0.0, 0.0)).unwrap().value;
            integrate_segment(|p| Ok(mid(p.x.re)), r(z), r(1.0), (0.0, 0.0)).unwrap().value
        };
        prop_assert!(rel_err(reduced, brute) < 1e-8, "{} vs {}", reduced, brute);
    }

    #[test]
    fn loop_regularized_equals_collapsed(l in -0.95f64..-0.05, s in 0.5f64..3.0) {
        let g = move |p: legfrac::quad::Point| Ok(cpow(p.db, r(s - 1.0)));
        let a = integrate_loop_with(g, r(1.0), r(l), s - 1.0, LoopMethod::Collapsed).unwrap().value;
        let b = integrate_loop_with(g, r(1.0), r(l), s - 1.0, LoopMethod::Regularized).unwrap().value;
        prop_assert!(rel_err(a, b) < 1e-10, "{} vs {}", a, b);
    }
}

#[test]
fn olver_normalization() {
    let (nu, mu, z) = (r(0.6), r(0.3), c(1.8, 0.4));
    let q = legendre_q(nu, mu, z).unwrap();
    let o = legendre_q_side(nu, mu, z, Side::None, QNorm::Olver).unwrap();
    assert!(rel_err(o * exp_i_pi(mu) * gamma(nu + mu + 1.0).unwrap(), q) < 1e-13);
    // finite at a pole of Γ(ν+μ+1)
    let o = legendre_q_side(r(-1.3), r(-0.7), z, Side::None, QNorm::Olver).unwrap();
    assert!(o.norm().is_finite());
    let d = derivs(&LegendreParams::new(Family::P, r(1.0), r(0.0), r(3.0)), 2).unwrap();
    assert!(rel_err(d[1], r(1.0)) < 1e-13 && d[2].norm() < 1e-12);
}
