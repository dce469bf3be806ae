use super::*;
use crate::legendre::{legendre_deriv, weighted};
use crate::numerics::{c, r, rel_err};
use crate::verify::integral_side;
use proptest::prelude::*;

fn req(id: IdentityId, nu: f64, mu: f64, l: f64, z: f64) -> ShiftRequest {
    ShiftRequest::new(id, r(nu), r(mu), r(l), r(z))
}

fn total(id: IdentityId, nu: f64, mu: f64, l: f64, z: f64) -> C64 {
    predict(&req(id, nu, mu, l, z)).unwrap().total
}

fn close(got: C64, want: C64, tol: f64) {
    assert!(rel_err(got, want) < tol, "got {got}, want {want}, rel {:.2e}", rel_err(got, want));
}

#[test]
fn multiprecision_closed_forms() {
    use IdentityId::*;
    close(total(WeylMplusQ, 1.5, 0.5, 0.75, 2.0), c(0.0, 0.078_655_826_165_803_05), 1e-12);
    close(total(WeylMminusQ, 1.2, 0.3, 0.8, 2.5), c(0.0, -0.052_696_078_281_526_483), 1e-12);
    close(total(RiemannMminusP, 0.45, 0.2, 0.35, 1.7), r(1.214_515_549_385_526_6), 1e-12);
    close(total(K3WeylP, 0.4, 0.1, 0.9, 1.8), c(-0.655_075_838_232_598_35, -0.212_847_042_368_052_29), 1e-12);
    close(total(RiemannMplusQ, 0.4, 0.45, 0.3, 1.8), c(-0.009_785_630_132_391_937_2, -0.061_784_037_070_439_35), 1e-11);
    close(total(BetaContour, 2.3, 0.0, 0.4, 1.0), r(1.367_229_794_669_487), 1e-13);
}

#[test]
fn zero_shift_is_identity() {
    use IdentityId::*;
    let (nu, mu, z, x) = (r(0.7), r(0.3), r(1.9), r(0.4));
    let cases = [
        (WeylMplusQ, weighted(Family::Q, nu, mu, -1.0, z - 1.0)),
        (WeylMminusQ, weighted(Family::Q, nu, mu, 1.0, z - 1.0)),
        (RiemannMplusP, weighted(Family::P, nu, mu, -1.0, z - 1.0)),
        (RiemannMplusQ, weighted(Family::Q, nu, mu, -1.0, z - 1.0)),
        (RiemannMminusP, weighted(Family::P, nu, mu, 1.0, z - 1.0)),
        (K3WeylQ, degree_fn(Family::Q, nu, mu, -(nu + 1.0) * 0.5, z)),
        (P3RiemannQ, degree_fn(Family::Q, nu, mu, nu * 0.5, z)),
    ];
    for (id, want) in cases {
        let got = predict(&ShiftRequest::new(id, nu, mu, r(0.0), z)).unwrap().total;
        close(got, want.unwrap(), 1e-12);
    }
    for (id, s) in [(FerrersLplusP, -1.0), (FerrersLplusQ3f2, -1.0), (FerrersLminusP3f2, 1.0)] {
        let fam = if id == FerrersLplusQ3f2 { Family::FerrersQ } else { Family::FerrersP };
        let got = predict(&ShiftRequest::new(id, nu, mu, r(0.0), x)).unwrap().total;
        close(got, weighted(fam, nu, mu, s, x - 1.0).unwrap(), 1e-12);
    }
}

#[test]
fn extra_q_term_vanishes_at_integer_lambda_and_degree() {
    let (nu, mu) = (r(0.35), r(0.2));
    assert_eq!(mplus_p_extra_coefficient(nu, mu, r(2.0)), r(0.0));
    assert_eq!(mplus_p_extra_coefficient(r(2.0), mu, r(0.4)), r(0.0));
    // the P coefficient is 1 at λ = 2 and the total is the second derivative
    let p = predict(&req(IdentityId::WeylMplusP, 0.35, 0.2, 2.0, 2.4)).unwrap();
    close(p.terms[0].coef, r(1.0), 1e-14);
    assert_eq!(p.terms[1].coef, r(0.0));
    let want = apply_integer_recurrence(RecurrenceOp::Mplus, Family::P, nu, mu, 2, r(2.4)).unwrap();
    close(p.total, want, 1e-12);
}

#[test]
fn integer_lambda_matches_recurrences() {
    use IdentityId::*;
    use RecurrenceOp::*;
    // Weyl M+ and Ferrers L+ carry (−d/dz)^n, the others plain derivatives
    let cases = [
        (WeylMplusQ, Mplus, Family::Q, (0.7, 0.3, 2.2), true),
        (RiemannMplusP, Mplus, Family::P, (0.7, 0.3, 2.2), false),
        (WeylMminusQ, Mminus, Family::Q, (2.7, 0.3, 2.2), false),
        (P3RiemannQ, P3, Family::Q, (2.6, 0.3, 1.7), false),
        (P3WeylP, P3, Family::P, (0.2, -0.45, 1.7), false),
        (K3WeylQ, K3, Family::Q, (0.4, 0.25, 1.7), false),
        (K3WeylP, K3, Family::P, (0.4, 0.25, 1.7), false),
        (FerrersLplusP, Lplus, Family::FerrersP, (0.6, 0.35, 0.3), true),
        (FerrersLminusP3f2, Lminus, Family::FerrersP, (1.6, 0.35, 0.3), false),
    ];
    for (id, op, fam, (nu, mu, z), alternating) in cases {
        for n in 1..=3 {
            let q = req(id, nu, mu, n as f64, z);
            if !q.validity().holds {
                continue;
            }
            let got = predict(&q).unwrap().total;
            let sign = if alternating && n % 2 == 1 { -1.0 } else { 1.0 };
            let want = sign * apply_integer_recurrence(op, fam, r(nu), r(mu), n, r(z)).unwrap();
            close(got, want, 1e-9);
        }
    }
}

#[test]
fn mplus_step_is_the_derivative() {
    let (nu, mu, z) = (r(0.8), r(0.35), c(1.7, 0.4));
    let got = apply_integer_recurrence(RecurrenceOp::Mplus, Family::Q, nu, mu, 1, z).unwrap();
    let w = crate::numerics::pow_z2m1(z, -mu * 0.5);
    let q = crate::legendre::legendre_q(nu, mu, z).unwrap();
    let dq = legendre_deriv(Family::Q, nu, mu, z).unwrap();
    let want = w * dq - mu * z / (z * z - 1.0) * w * q;
    close(got, want, 1e-9);
}

#[test]
fn mminus_step_coefficient() {
    let (nu, mu, z) = (r(1.3), r(0.45), r(2.1));
    let got = apply_integer_recurrence(RecurrenceOp::Mminus, Family::Q, nu, mu, 1, z).unwrap();
    let base = weighted(Family::Q, nu, mu - 1.0, 1.0, z - 1.0).unwrap();
    close(got / base, (nu + mu) * (nu - mu + 1.0), 1e-15);
    // a vanishing coefficient is a pole, not a silent zero
    let e = apply_integer_recurrence(RecurrenceOp::Mminus, Family::Q, r(1.5), r(-1.5), 1, z);
    assert!(matches!(e, Err(Error::Pole(_))));
}

#[test]
fn p3_then_k3_returns_to_the_degree() {
    let (nu, mu, y) = (r(1.35), r(0.2), r(1.6));
    for fam in [Family::P, Family::Q] {
        let down = apply_integer_recurrence(RecurrenceOp::P3, fam, nu, mu, 1, y).unwrap();
        let up = apply_integer_recurrence(RecurrenceOp::K3, fam, nu - 1.0, mu, 1, y).unwrap();
        let f_down = degree_fn(fam, nu - 1.0, mu, (nu - 1.0) * 0.5, y).unwrap();
        let f_up = degree_fn(fam, nu, mu, -(nu + 1.0) * 0.5, y).unwrap();
        close(down * up / (f_down * f_up), (nu + mu) * -(nu - mu), 1e-13);
        // each step against a central difference of the weighted function
        let h = 1e-5;
        let g = |e: C64, d: C64, yy: f64| degree_fn(fam, d, mu, e, r(yy)).unwrap();
        let fd = (g(nu * 0.5, nu, 1.6 + h) - g(nu * 0.5, nu, 1.6 - h)) / (2.0 * h);
        close(down, fd, 1e-7);
        let m = nu - 1.0;
        let fd = (g(-(m + 1.0) * 0.5, m, 1.6 + h) - g(-(m + 1.0) * 0.5, m, 1.6 - h)) / (2.0 * h);
        close(up, fd, 1e-7);
    }
}

#[test]
fn lplus_at_one_is_minus_the_derivative() {
    let (nu, mu, x) = (r(0.6), r(0.3), 0.25);
    let got = total(IdentityId::FerrersLplusP, 0.6, 0.3, 1.0, x);
    let w = (1.0 - x * x).powf(-0.15);
    let f = crate::legendre::ferrers_p(nu, mu, x).unwrap();
    let df = legendre_deriv(Family::FerrersP, nu, mu, r(x)).unwrap();
    let want = -(w * df + mu * x / (1.0 - x * x) * w * f);
    close(got, want, 1e-9);
}

#[test]
fn far_field_matches_near_field() {
    for (nu, mu, l, z) in [(0.45, 0.2, 0.35, 6.0), (0.35, -0.2, 0.45, 3.5), (1.3, 0.15, -0.6, 9.0)] {
        let mut q = req(IdentityId::RiemannMminusP, nu, mu, l, z);
        let near = predict(&q).unwrap().total;
        q.far_field = true;
        let far = predict(&q).unwrap();
        assert_eq!(far.terms.len(), 3);
        close(far.total, near, 1e-10);
    }
}

#[test]
fn closed_forms_match_quadrature() {
    use IdentityId::*;
    for (id, nu, mu, l, z) in [(WeylMminusQ, 1.2, 0.3, 0.8, 2.5), (K3WeylP, 0.4, 0.1, 0.9, 1.8)] {
        let q = req(id, nu, mu, l, z);
        close(integral_side(&q).unwrap().value, predict(&q).unwrap().total, 1e-7);
    }
}

#[test]
fn printed_k3_riemann_coefficient_disagrees() {
    let (nu, mu, l, y) = (r(0.4), r(0.1), r(0.6), r(1.8));
    let q = ShiftRequest::new(IdentityId::K3RiemannQ3f2, nu, mu, l, y);
    let lhs = integral_side(&q).unwrap().value;
    let f = crate::hyper::hyp3f2_series(&Hyp3F2Params {
        a: [nu - mu + 1.0, nu + mu + 1.0, one()],
        b: [nu + 1.5, 1.0 - l],
        w: (1.0 - y) * 0.5,
    })
    .unwrap();
    let printed = k3_riemann_printed_coefficient(nu, mu).unwrap() * cpow(y - 1.0, -l) * f;
    assert!(rel_err(printed, lhs) > 0.1);
    close(predict(&q).unwrap().total, lhs, 1e-9);
}

#[test]
fn rodrigues_classical_cases() {
    let (a, b, z) = (r(0.3), r(-0.2), c(0.2, 0.1));
    let one = rodrigues_pair(r(1.0), a, b, z).unwrap();
    let d = -(a + 1.0) * cpow(1.0 - z, a) * cpow(1.0 + z, b + 1.0)
        + (b + 1.0) * cpow(1.0 - z, a + 1.0) * cpow(1.0 + z, b);
    close(one.lhs, -0.5 * d, 1e-14);
    let zero = rodrigues_pair(r(0.0), a, b, z).unwrap();
    close(zero.lhs, cpow(1.0 - z, a) * cpow(1.0 + z, b), 1e-15);
    let mut q = ShiftRequest::new(IdentityId::RodriguesFrac, r(0.0), a, r(0.0), z);
    q.beta = b;
    close(integral_side(&q).unwrap().value, zero.lhs, 1e-9);
    let mut q = ShiftRequest::new(IdentityId::RodriguesFrac, r(0.5), r(0.2), r(0.0), r(0.3));
    q.beta = r(-0.1);
    close(integral_side(&q).unwrap().value, predict(&q).unwrap().total, 1e-8);
    assert!(matches!(rodrigues_pair(r(-1.5), r(0.2), b, z), Err(Error::Domain(_))));
}

#[test]
fn domain_errors_name_the_condition() {
    let e = predict(&req(IdentityId::WeylMplusQ, 0.5, 0.2, -2.5, 2.0)).unwrap_err();
    match e {
        Error::Domain(m) => assert!(m.contains("Re(ν+μ+λ+1) > 0"), "{m}"),
        other => panic!("unexpected {other:?}"),
    }
    let e = predict_degree_shift(&req(IdentityId::WeylMplusQ, 0.5, 0.2, 0.5, 2.0)).unwrap_err();
    assert!(matches!(e, Error::Invalid(_)));
}

#[test]
fn perturbation_scales_the_dominant_term() {
    let mut q = req(IdentityId::WeylMminusQ, 1.2, 0.3, 0.8, 2.5);
    let base = predict(&q).unwrap().total;
    q.perturb = 1e-3;
    close(predict(&q).unwrap().total, base * 1.001, 1e-14);
}

#[test]
fn ids_parse_and_print() {
    for id in IdentityId::ALL {
        assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
        assert_eq!(id.as_str().to_lowercase().parse::<IdentityId>().unwrap(), id);
        let json = serde_json::to_string(&id).unwrap();
        assert_eq!(json, format!("\"{}\"", id.as_str()));
    }
    assert!(matches!("NO_SUCH".parse::<IdentityId>(), Err(Error::UnknownIdentity(_))));
}

fn param() -> impl Strategy<Value = f64> {
    -0.9f64..0.9
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn coefficients_compose(nu in 0.5f64..2.5, mu in param(), l1 in param(), l2 in param()) {
        let (nu, mu, l1, l2) = (r(nu), r(mu), r(l1), r(l2));
        let a = mminus_q_coefficient(nu, mu, l1).unwrap() * mminus_q_coefficient(nu, mu - l1, l2).unwrap();
        prop_assert!(rel_err(a, mminus_q_coefficient(nu, mu, l1 + l2).unwrap()) < 1e-12);
        let k = k3_coefficient(nu, mu, l1).unwrap() * k3_coefficient(nu + l1, mu, l2).unwrap();
        prop_assert!(rel_err(k, k3_coefficient(nu, mu, l1 + l2).unwrap()) < 1e-12);
        let p = p3_coefficient(nu, mu, l1).unwrap() * p3_coefficient(nu - l1, mu, l2).unwrap();
        prop_assert!(rel_err(p, p3_coefficient(nu, mu, l1 + l2).unwrap()) < 1e-12);
    }

    #[test]
    fn shifts_invert(nu in 0.2f64..2.0, mu in param(), l in 0.05f64..0.85, z in 1.2f64..4.0) {
        for (id, s) in [(IdentityId::WeylMplusQ, 1.0), (IdentityId::WeylMminusQ, -1.0)] {
            let fwd = predict(&req(id, nu, mu, l, z)).unwrap();
            let back = predict(&req(id, nu, mu + s * l, -l, z)).unwrap();
            let sgn = if s > 0.0 { -1.0 } else { 1.0 };
            let start = weighted(Family::Q, r(nu), r(mu), sgn, r(z - 1.0)).unwrap();
            prop_assert!(rel_err(fwd.terms[0].coef * back.total, start) < 1e-10);
        }
    }
}
