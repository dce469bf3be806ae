//! Degree shifts through the Whipple pairing of P and Q.

use legfrac::legendre::{legendre_p, whipple_argument, whipple_p_to_q};
use legfrac::numerics::r;
use legfrac::shift::{predict_degree_shift, IdentityId, ShiftRequest};
use legfrac::verify::integral_side;

fn main() -> legfrac::Result<()> {
    let (nu, mu, y) = (r(0.4), r(0.25), r(1.7));
    let x = whipple_argument(y);
    println!("P_ν^μ(x) at x = {x:.6}: direct {:.14}, via Q {:.14}", legendre_p(nu, mu, x)?, whipple_p_to_q(nu, mu, y)?);

    for id in [IdentityId::K3WeylP, IdentityId::K3WeylQ, IdentityId::P3RiemannQ, IdentityId::K3RiemannQ3f2] {
        let req = ShiftRequest::new(id, nu, mu, r(0.45), y);
        println!("{id:<18} closed {:.13}  integral {:.13}", predict_degree_shift(&req)?.total, integral_side(&req)?.value);
    }
    Ok(())
}
