//! The contour kernels: an endpoint-singular segment, a Hankel-type loop
//! and a three-fold repeated integral reduced to one.

use legfrac::numerics::{cpow, gamma, r};
use legfrac::quad::{integrate_loop, integrate_segment, repeated_integral, Ends, Nest, Point};

fn main() -> legfrac::Result<()> {
    // ∫₀¹ t^{−½}(1−t)^{−⅓} dt = B(½, ⅔)
    let s = integrate_segment(|p: Point| Ok(cpow(p.da, r(-0.5)) * cpow(p.db, r(-1.0 / 3.0))), r(0.0), r(1.0), (-0.5, -1.0 / 3.0))?;
    let beta = gamma(r(0.5))? * gamma(r(2.0 / 3.0))? / gamma(r(7.0 / 6.0))?;
    println!("segment  {:.15}  (beta {:.15}, {} evaluations)", s.value, beta, s.evaluations);

    // loop (1, 0+, 1) of t^{−λ−1}(1−t)^{3/2}
    let l = r(0.4);
    let lp = integrate_loop(|p: Point| Ok(cpow(p.db, r(1.5))), r(1.0), l, 1.5)?;
    println!("loop     {:.15}  ({} evaluations)", lp.value, lp.evaluations);

    // ∫_z^1∫_{t₁}^1∫_{t₂}^1 e^t = e((1−z)² − 2(1−z) + 2)/2 − e^z
    let z = 0.2f64;
    let n = repeated_integral(|p: Point| Ok(p.x.exp()), r(z), Nest::ToOne, 3, Ends::default())?;
    let a = 1.0 - z;
    let want = 1f64.exp() * (a * a - 2.0 * a + 2.0) / 2.0 - z.exp();
    println!("3-fold   {:.15}  (closed form {want:.15})", n.value);
    Ok(())
}
