//! Runs the referee over one identity's default grid and prints the worst
//! point, then checks the inhomogeneous equation met by one transform.

use legfrac::legendre::Family;
use legfrac::numerics::r;
use legfrac::shift::IdentityId;
use legfrac::verify::{default_grid, ode_residual, verify_grid, OdeMode, VerifyConfig};

fn main() -> legfrac::Result<()> {
    let id: IdentityId = std::env::args().nth(1).as_deref().unwrap_or("FERRERS_LPLUS_Q_3F2").parse()?;
    let s = verify_grid(id, &default_grid(id), &VerifyConfig::default())?;
    println!("{id}: {}/{} passed, worst rel_err {:.2e}", s.passed, s.points, s.worst_rel_err);
    for f in &s.failures {
        println!("    {} at {:?}", f.reason, f.params);
    }

    let g = ode_residual(OdeMode::InhomogeneousMminus, Family::P, r(0.8), r(0.3), r(0.4), r(1.6))?;
    println!("inhomogeneous equation: defect {:.2e} against terms of size {:.2e}", g.defect.norm(), g.scale);
    Ok(())
}
