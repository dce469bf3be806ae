//! Integral sides of the catalog identities, evaluated by contour quadrature
//! directly from their defining integrals.
//!
//! Loops are bare ((e^{iπλ}/2πi)∫ t^{−λ−1} g) and every Γ(λ+1) or e^{−iπλ}
//! factor is applied here, after quadrature. Integrands receive the offset
//! of the Legendre argument from 1 straight from the quadrature node, so
//! endpoint singularities at argument 1 are resolved without cancellation.

use crate::error::Result;
use crate::legendre::{jacobi_p_offset, weighted, Family};
use crate::numerics::{cpow, exp_i_pi, gamma, rgamma, C64};
use crate::quad::{
    integrate_loop, integrate_ray, integrate_segment, integrate_weyl_loop, repeated_integral, Ends, Nest,
    Point, QuadratureResult,
};
use crate::shift::{degree_fn_at, rodrigues_pair, IdentityId, ShiftRequest};

/// Below this Re λ the loop is collapsed onto its segment (or ray) with
/// the weight 1/Γ(−λ) = Γ(λ+1) sin(π(λ+1))/π applied directly.
const COLLAPSE_BELOW: f64 = -0.25;

fn scale(mut r: QuadratureResult, k: C64) -> QuadratureResult {
    r.value *= k;
    r.err_estimate *= k.norm();
    r
}

/// Γ(λ+1) times the bare loop over (c, 0+, c).
fn gamma_loop<G>(g: G, c: C64, lambda: C64, end: f64) -> Result<QuadratureResult>
where
    G: Fn(Point) -> Result<C64>,
{
    if lambda.re < COLLAPSE_BELOW {
        let e = -lambda - 1.0;
        let r = integrate_segment(|p: Point| Ok(cpow(p.da, e) * g(p)?), C64::new(0.0, 0.0), c, (e.re, end))?;
        Ok(scale(r, rgamma(-lambda)))
    } else {
        Ok(scale(integrate_loop(g, c, lambda, end)?, gamma(lambda + 1.0)?))
    }
}

/// Γ(λ+1) times the bare loop over (∞, 0+, ∞) along the ray through c;
/// `decay` is that of g.
fn gamma_weyl<G>(g: G, c: C64, lambda: C64, decay: f64) -> Result<QuadratureResult>
where
    G: Fn(Point) -> Result<C64>,
{
    if lambda.re < COLLAPSE_BELOW {
        let e = -lambda - 1.0;
        let r = integrate_ray(
            |p: Point| Ok(cpow(p.da, e) * g(Point { x: p.x, da: p.x, db: c - p.x })?),
            C64::new(0.0, 0.0),
            c,
            e.re,
            decay + lambda.re + 1.0,
        )?;
        Ok(scale(r, rgamma(-lambda)))
    } else {
        Ok(scale(integrate_weyl_loop(g, c, lambda, decay)?, gamma(lambda + 1.0)?))
    }
}

/// Ray direction and loop radius for Weyl integrals based at argument z:
/// the positive real direction, with the loop kept clear of argument 1.
fn weyl_anchor(z: C64) -> C64 {
    C64::new((z - 1.0).norm(), 0.0)
}

/// Evaluates the integral side of `req`.
pub fn integral_side(req: &ShiftRequest) -> Result<QuadratureResult> {
    use IdentityId::*;
    let (nu, mu, l, z) = (req.nu, req.mu, req.lambda, req.argument);
    let d0 = z - 1.0;
    match req.id {
        WeylMplusQ | WeylMplusP | WeylMminusQ | WeylMminusP => {
            let (fam, s, decay) = match req.id {
                WeylMplusQ => (Family::Q, -1.0, (nu + mu + 1.0).re),
                WeylMplusP => (Family::P, -1.0, (mu - nu).re),
                WeylMminusQ => (Family::Q, 1.0, (nu - mu + 1.0).re),
                _ => (Family::P, 1.0, (-nu - mu).re),
            };
            let g = |p: Point| weighted(fam, nu, mu, s, d0 + p.x);
            let r = gamma_weyl(g, weyl_anchor(z), l, decay)?;
            // the M− loops carry no e^{iπλ}
            Ok(if s > 0.0 { scale(r, exp_i_pi(-l)) } else { r })
        }
        RiemannMplusP | RiemannMplusQ | RiemannMminusP => {
            let (fam, s, end) = match req.id {
                RiemannMplusP => (Family::P, -1.0, -mu.re),
                RiemannMplusQ => (Family::Q, -1.0, (-mu.re).min(0.0)),
                _ => (Family::P, 1.0, 0.0),
            };
            gamma_loop(|p: Point| weighted(fam, nu, mu, s, p.db), d0, l, end)
        }
        K3WeylP | K3WeylQ | P3WeylP => {
            let (fam, e, decay) = match req.id {
                K3WeylP => (Family::P, -(nu + 1.0) * 0.5, (nu + 1.0).re - mu.re.max(0.0)),
                K3WeylQ => (Family::Q, -(nu + 1.0) * 0.5, (nu + 1.0).re - mu.re.abs()),
                _ => (Family::P, nu * 0.5, -nu.re - mu.re.max(0.0)),
            };
            let r = gamma_weyl(|p: Point| degree_fn_at(fam, nu, mu, e, d0 + p.x), weyl_anchor(z), l, decay)?;
            Ok(scale(r, exp_i_pi(-l)))
        }
        K3RiemannQ3f2 => {
            let e = -(nu + 1.0) * 0.5;
            gamma_loop(|p: Point| degree_fn_at(Family::Q, nu, mu, e, p.db), d0, l, 0.0)
        }
        P3RiemannQ => {
            let e = nu * 0.5;
            gamma_loop(|p: Point| degree_fn_at(Family::Q, nu, mu, e, p.db), d0, l, nu.re + 0.5)
        }
        FerrersLplusP | FerrersLplusQ3f2 => {
            let (fam, end) = if req.id == FerrersLplusP {
                (Family::FerrersP, -mu.re)
            } else {
                (Family::FerrersQ, (-mu.re).min(0.0))
            };
            gamma_loop(|p: Point| weighted(fam, nu, mu, -1.0, -p.db), 1.0 - z, l, end)
        }
        FerrersLminusP3f2 => {
            // contour (x−1, 0+, x−1) with g(t) = f(x−t)
            gamma_loop(|p: Point| weighted(Family::FerrersP, nu, mu, 1.0, p.db), d0, l, 0.0)
        }
        MultiIntMplus | MultiIntMminus | MultiIntK3 => {
            let n = req.folds()?;
            let nf = n as f64;
            match req.id {
                MultiIntMplus | MultiIntMminus => {
                    let (s, decay) = if req.id == MultiIntMplus {
                        (-1.0, (nu + mu + 1.0).re)
                    } else {
                        (1.0, (nu - mu + 1.0).re)
                    };
                    let f = |p: Point| weighted(Family::Q, nu, mu, s, d0 + p.da);
                    repeated_integral(f, z, Nest::ToInfinity, n, Ends { lower: 0.0, upper: decay })
                }
                _ => {
                    let (nn, e) = (nu + nf, -(nu + nf + 1.0) * 0.5);
                    let decay = (nn + 1.0).re - mu.re.max(0.0);
                    let f = |p: Point| degree_fn_at(Family::P, nn, mu, e, d0 + p.da);
                    repeated_integral(f, z, Nest::ToInfinity, n, Ends { lower: 0.0, upper: decay })
                }
            }
        }
        MultiIntP3 => {
            let n = req.folds()?;
            let f = |p: Point| degree_fn_at(Family::Q, nu, mu, nu * 0.5, p.da);
            repeated_integral(f, z, Nest::FromOne, n, Ends { lower: nu.re + 0.5, upper: 0.0 })
        }
        MultiIntLplus => {
            let n = req.folds()?;
            let f = |p: Point| weighted(Family::FerrersP, nu, mu, -1.0, -p.db);
            repeated_integral(f, z, Nest::ToOne, n, Ends { lower: 0.0, upper: -mu.re })
        }
        MultiIntRodrigues => {
            let n = req.folds()?;
            let (a, b, deg) = (mu, req.beta, C64::new(n as f64, 0.0));
            let f = |p: Point| Ok(cpow(p.db, a) * cpow(2.0 - p.db, b) * jacobi_p_offset(deg, a, b, -p.db)?);
            repeated_integral(f, z, Nest::ToOne, n, Ends { lower: 0.0, upper: a.re })
        }
        RodriguesFrac => {
            let pair = rodrigues_pair(nu, mu, req.beta, z)?;
            let r = integrate_loop(|p| pair.rhs_integrand(p), pair.rhs_spec.start, nu, (nu + mu).re)?;
            Ok(scale(r, cpow(C64::new(2.0, 0.0), -nu)))
        }
        RodriguesInverse => {
            let pair = rodrigues_pair(nu, mu, req.beta, z)?;
            gamma_loop(|p| pair.inverse_integrand(p), pair.inverse_spec.start, -nu, mu.re)
        }
        BetaContour => {
            let sigma = nu;
            integrate_loop(|p: Point| Ok(cpow(p.db, sigma - 1.0)), C64::new(1.0, 0.0), l, sigma.re - 1.0)
        }
    }
}
