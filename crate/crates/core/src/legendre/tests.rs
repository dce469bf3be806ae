use super::*;
use crate::numerics::{r, rel_err};

fn close(got: C64, want: C64, tol: f64) {
    assert!(rel_err(got, want) < tol, "got {got}, want {want}");
}

#[test]
fn trivial_values() {
    close(legendre_p(r(1.0), r(0.0), r(2.0)).unwrap(), r(2.0), 1e-15);
    close(legendre_p(r(0.7), r(0.0), r(1.0 + 1e-12)).unwrap(), r(1.0), 1e-9);
    close(legendre_q(r(0.0), r(0.0), r(2.0)).unwrap(), r(0.5 * 3f64.ln()), 1e-14);
    close(ferrers_p(r(1.0), r(0.0), 0.37).unwrap(), r(0.37), 1e-15);
    close(ferrers_p(r(0.6), r(0.0), 1.0 - 1e-12).unwrap(), r(1.0), 1e-9);
    let (a, b, z) = (r(0.4), r(-0.3), c(0.2, 0.5));
    close(jacobi_p(r(1.0), a, b, z).unwrap(), a + 1.0 + (a + b + 2.0) * (z - 1.0) / 2.0, 1e-14);
    close(jacobi_p(r(0.0), a, b, z).unwrap(), r(1.0), 1e-15);
}

#[test]
fn multiprecision_oracles() {
    close(legendre_p(r(0.5), r(0.25), r(2.0)).unwrap(), r(1.340_142_439_979_466_6), 1e-13);
    close(legendre_q(r(0.5), r(0.25), r(2.0)).unwrap(), c(0.164_659_724_500_302_97, 0.164_659_724_500_302_97), 1e-13);
    let (nu, z) = (c(0.3, 0.2), c(-0.4, 1.1));
    close(legendre_p(nu, r(0.7), z).unwrap(), c(0.067_187_371_542_607_232, 0.313_408_803_657_349_51), 1e-12);
    close(legendre_q(nu, r(0.7), z).unwrap(), c(0.683_041_090_414_832_45, -0.223_256_625_336_634_59), 1e-12);
    close(legendre_q(r(1.3), r(0.45), c(-2.0, 1.0)).unwrap(), c(-0.005_256_251_735_032_849_5, 0.058_456_068_662_882_3), 1e-11);
    close(ferrers_q(r(0.3), r(0.1), 0.4).unwrap(), r(-0.339_559_035_931_600_14), 1e-12);
    close(ferrers_p(r(0.3), r(0.1), 0.4).unwrap(), r(0.829_185_837_025_163_34), 1e-13);
    close(jacobi_p(r(0.5), r(0.3), r(-0.2), r(0.7)).unwrap(), r(1.057_924_245_185_624_8), 1e-13);
}

#[test]
fn integer_order_limits() {
    close(legendre_q(r(0.6), r(2.0), c(1.3, 0.2)).unwrap(), c(2.246_668_787_330_219_8, -1.561_320_857_174_583_2), 1e-9);
    close(legendre_q(r(0.6), r(1.0), c(5.0, 2.0)).unwrap(), c(-0.044_519_614_250_828_109, 0.032_036_667_763_417_729), 1e-12);
    close(ferrers_q(r(0.3), r(1.0), 0.4).unwrap(), r(-1.224_475_154_344_307_2), 1e-9);
}

#[test]
fn sides_of_the_cut() {
    let z = r(-2.5);
    let want = c(0.299_624_476_330_201_01, 1.223_696_680_244_615_5);
    close(legendre_p_side(r(0.4), r(0.3), z, Side::Above).unwrap(), want, 1e-9);
    close(legendre_p_side(r(0.4), r(0.3), z, Side::Below).unwrap(), want.conj(), 1e-9);
    assert!(matches!(legendre_p(r(0.4), r(0.3), z), Err(Error::BranchCut(_))));
    assert!(matches!(ferrers_p(r(0.4), r(0.3), 1.5), Err(Error::Domain(_))));
}

#[test]
fn derivatives() {
    close(legendre_deriv(Family::P, r(1.0), r(0.0), c(0.3, 0.8)).unwrap(), r(1.0), 1e-14);
    close(legendre_deriv(Family::Q, r(0.0), r(0.0), r(2.0)).unwrap(), r(-1.0 / 3.0), 1e-13);
    let h = 1e-5;
    for (fam, z) in [
        (Family::P, c(1.4, 0.3)),
        (Family::Q, c(1.4, 0.3)),
        (Family::Q, c(-3.0, 2.0)),
        (Family::FerrersP, r(0.3)),
        (Family::FerrersQ, r(-0.6)),
    ] {
        let (nu, mu) = (r(0.35), r(0.6));
        let p = |z: C64| LegendreParams::new(fam, nu, mu, z).eval().unwrap();
        let fd = (p(z + h) - p(z - h)) / (2.0 * h);
        let d = derivs(&LegendreParams::new(fam, nu, mu, z), 2).unwrap();
        close(d[1], fd, 1e-7);
        let fd2 = (p(z + h) - 2.0 * p(z) + p(z - h)) / (h * h);
        assert!((d[2] - fd2).norm() < 1e-4 * d[2].norm().max(1.0), "{fam:?}");
    }
}

#[test]
fn whipple_pair() {
    let (nu, mu, y) = (r(0.4), r(0.2), r(1.7));
    let x = whipple_argument(y);
    close(whipple_p_to_q(nu, mu, y).unwrap(), legendre_p(nu, mu, x).unwrap(), 1e-9);
    close(whipple_q_to_p(nu, mu, y).unwrap(), legendre_q(nu, mu, x).unwrap(), 1e-9);
    close(whipple_argument(x), y, 1e-14);
    let nu = r(0.25);
    assert_eq!(whipple_indices(nu, -nu - 1.0), (r(0.75), r(-0.75)));
}

#[test]
fn weighted_near_one() {
    let (nu, mu) = (r(0.35), r(0.6));
    let z = c(1.3, 0.2);
    let d = z - 1.0;
    let w = crate::numerics::pow_z2m1(z, mu * -0.5);
    close(weighted(Family::P, nu, mu, -1.0, d).unwrap(), w * legendre_p(nu, mu, z).unwrap(), 1e-13);
    close(weighted(Family::Q, nu, mu, 1.0, d).unwrap(), legendre_q(nu, mu, z).unwrap() / w, 1e-13);
    // (z²−1)^{−μ/2}P^μ → 1/Γ(1−μ)·(z−1)^{−μ} as z → 1
    let d = c(1e-200, 0.0);
    let want = crate::numerics::rgamma(1.0 - mu) * crate::numerics::cpow(d, -mu);
    close(weighted(Family::P, nu, mu, -1.0, d).unwrap(), want, 1e-12);
    let x: f64 = 0.4;
    let wf = (1.0f64 - x * x).powf(0.3);
    close(weighted(Family::FerrersQ, nu, mu, 1.0, r(x - 1.0)).unwrap(), ferrers_q(nu, mu, x).unwrap() * wf, 1e-13);
    let y = c(1.0 + 1e-9, 0.0);
    close(whipple_offset(y), whipple_argument(y) - 1.0, 1e-6);
    let y = r(1e7);
    close(whipple_offset(y), r(0.5e-14), 1e-9);
}
