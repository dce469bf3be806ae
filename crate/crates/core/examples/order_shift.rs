//! Fractional order shifts: the closed form term by term next to the
//! contour integral it replaces.

use legfrac::numerics::r;
use legfrac::shift::{predict_order_shift, IdentityId, ShiftRequest};
use legfrac::verify::integral_side;

fn main() -> legfrac::Result<()> {
    let cases = [
        (IdentityId::WeylMplusP, 0.3, 0.25, 0.65, 2.5),
        (IdentityId::WeylMminusQ, 1.4, 0.3, 0.35, 2.2),
        (IdentityId::RiemannMminusP, 0.45, 0.2, 0.35, 1.7),
    ];
    for (id, nu, mu, l, z) in cases {
        let req = ShiftRequest::new(id, r(nu), r(mu), r(l), r(z));
        let p = predict_order_shift(&req)?;
        println!("{id}  ν={nu} μ={mu} λ={l} z={z}");
        for t in &p.terms {
            println!("    {:<40} coef {:.10}  value {:.10}", t.label, t.coef, t.value);
        }
        println!("    closed form {:.13}", p.total);
        println!("    integral    {:.13}", integral_side(&req)?.value);
    }

    let mut far = ShiftRequest::new(IdentityId::RiemannMminusP, r(0.45), r(0.2), r(0.35), r(9.0));
    far.far_field = true;
    println!("far field at z = 9: {:.13}", predict_order_shift(&far)?.total);
    Ok(())
}
