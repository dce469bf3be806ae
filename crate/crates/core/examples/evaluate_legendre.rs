//! P, Q and the Ferrers functions at a few complex and real arguments.

use legfrac::legendre::{ferrers_p, ferrers_q, legendre_p, legendre_q, legendre_q_olver};
use legfrac::numerics::{c, r};

fn main() -> legfrac::Result<()> {
    let (nu, mu) = (c(0.7, 0.2), r(0.35));
    for z in [r(1.5), c(0.3, 1.0), c(-2.0, 0.5)] {
        println!(
            "z = {z}: P = {:.12}  Q = {:.12}  Q/(e^{{iπμ}}Γ(ν+μ+1)) = {:.12}",
            legendre_p(nu, mu, z)?,
            legendre_q(nu, mu, z)?,
            legendre_q_olver(nu, mu, z)?
        );
    }
    for x in [-0.6, 0.0, 0.45] {
        println!("x = {x}: 𝖯 = {:.12}  𝖰 = {:.12}", ferrers_p(nu, mu, x)?, ferrers_q(nu, mu, x)?);
    }
    Ok(())
}
