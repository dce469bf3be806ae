//! The fractional Rodrigues formula for Jacobi functions and its inverse.

use legfrac::numerics::{c, r};
use legfrac::shift::{predict, rodrigues_pair, IdentityId, ShiftRequest};
use legfrac::verify::integral_side;

fn main() -> legfrac::Result<()> {
    let (alpha, beta, z) = (r(0.2), r(-0.1), r(0.3));
    for nu in [0.5, 1.3, 2.0] {
        let pair = rodrigues_pair(r(nu), alpha, beta, z)?;
        let mut req = ShiftRequest::new(IdentityId::RodriguesFrac, r(nu), alpha, r(0.0), z);
        req.beta = beta;
        println!("ν = {nu}: weighted Jacobi {:.13}  loop {:.13}", pair.lhs, integral_side(&req)?.value);
    }
    let mut req = ShiftRequest::new(IdentityId::RodriguesInverse, r(0.5), alpha, r(0.0), c(0.3, 0.2));
    req.beta = beta;
    println!("inverse: closed {:.13}  loop {:.13}", predict(&req)?.total, integral_side(&req)?.value);
    Ok(())
}
