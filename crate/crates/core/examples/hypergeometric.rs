//! ₂F₁ across its transformation regions, and ₃F₂ by series, by the
//! Barnes integral and by the residue expansion beyond the unit circle.

use legfrac::hyper::{hyp2f1, hyp3f2_barnes, hyp3f2_far, hyp3f2_series, BarnesOptions, Hyp3F2Params};
use legfrac::numerics::{c, r};

fn main() -> legfrac::Result<()> {
    let (a, b, cc) = (r(0.3), c(1.2, 0.4), r(2.1));
    for w in [r(0.5), r(-3.0), c(0.9, 0.9), r(0.999)] {
        println!("₂F₁(w = {w}) = {:.14}", hyp2f1(a, b, cc, w)?);
    }

    let p = Hyp3F2Params { a: [r(0.3), r(1.7), r(1.0)], b: [r(1.25), r(2.4)], w: r(-0.8) };
    println!("₃F₂ series  {:.14}", hyp3f2_series(&p)?);
    println!("₃F₂ Barnes  {:.14}", hyp3f2_barnes(&p, BarnesOptions::default())?);

    let far = Hyp3F2Params { w: r(-4.0), ..p };
    println!("₃F₂(−4) Barnes   {:.14}", hyp3f2_barnes(&far, BarnesOptions::default())?);
    println!("₃F₂(−4) residues {:.14}", hyp3f2_far(&far)?);
    Ok(())
}
