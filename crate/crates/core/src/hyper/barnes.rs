use super::Hyp3F2Params;
use crate::error::{Error, Result};
use crate::numerics::{cpow, gamma, gamma_ratio, ln, ln_gamma, rgamma, GammaRatioSpec, C64, PI};
use crate::quad::gauss::gauss_legendre;

/// Controls for the vertical-line quadrature.
#[derive(Debug, Clone, Copy)]
pub struct BarnesOptions {
    /// Relative cutoff of the integrand against its peak.
    pub cutoff: f64,
    /// Local tolerance per panel.
    pub tol: f64,
    /// Half-width of the line is never taken beyond this.
    pub max_tau: f64,
}

impl Default for BarnesOptions {
    fn default() -> Self {
        Self { cutoff: 1e-16, tol: 1e-14, max_tau: 400.0 }
    }
}

struct Line {
    a: [C64; 3],
    b: [C64; 2],
    log_mw: C64,
    sigma: f64,
}

impl Line {
    fn integrand(&self, tau: f64) -> Result<C64> {
        let s = C64::new(self.sigma, tau);
        let mut l = ln_gamma(-s)? + s * self.log_mw;
        for &ai in &self.a {
            l += ln_gamma(ai + s)?;
        }
        for &bj in &self.b {
            l -= ln_gamma(bj + s)?;
        }
        Ok(l.exp())
    }
}

fn left_poles(a: &[C64; 3], reach: f64) -> Vec<(usize, usize, C64)> {
    let mut out = Vec::new();
    for (i, &ai) in a.iter().enumerate() {
        let mut k = 0usize;
        loop {
            let s = -ai - k as f64;
            if s.re < reach {
                break;
            }
            out.push((i, k, s));
            k += 1;
        }
    }
    out
}

/// Picks Re s = σ in [−0.95, −0.05] as far as possible from every left pole
/// that could lie near the line.
fn choose_sigma(a: &[C64; 3]) -> f64 {
    let poles = left_poles(a, -2.0);
    let mut best = (-0.5, -1.0);
    for j in 0..=90 {
        let sigma = -0.95 + 0.01 * j as f64;
        let d = poles
            .iter()
            .map(|&(_, _, s)| (s.re - sigma).abs())
            .fold(f64::INFINITY, f64::min)
            .min(sigma.abs())
            .min((sigma + 1.0).abs().max(0.05));
        if d > best.1 {
            best = (sigma, d);
        }
    }
    best.0
}

fn adaptive_panel(line: &Line, lo: f64, hi: f64, x: &[f64], w: &[f64], tol: f64, depth: usize) -> Result<C64> {
    let rule = |l: f64, h: f64| -> Result<C64> {
        let (mid, half) = (0.5 * (l + h), 0.5 * (h - l));
        let mut s = C64::new(0.0, 0.0);
        for (xi, wi) in x.iter().zip(w) {
            s += line.integrand(mid + half * xi)? * (wi * half);
        }
        Ok(s)
    };
    let whole = rule(lo, hi)?;
    let m = 0.5 * (lo + hi);
    let left = rule(lo, m)?;
    let right = rule(m, hi)?;
    let split = left + right;
    if (split - whole).norm() <= tol || depth >= 14 {
        return Ok(split);
    }
    Ok(adaptive_panel(line, lo, m, x, w, tol * 0.5, depth + 1)?
        + adaptive_panel(line, m, hi, x, w, tol * 0.5, depth + 1)?)
}

/// ₃F₂(a; b; w) continued off the disk by the Barnes integral
///
/// Γ(a₁)Γ(a₂)Γ(a₃)/(Γ(b₁)Γ(b₂)) ₃F₂ = (1/2πi) ∫ Γ(a₁+s)Γ(a₂+s)Γ(a₃+s)Γ(−s)/(Γ(b₁+s)Γ(b₂+s)) (−w)^s ds
///
/// over a path with the poles of Γ(−s) on its right and those of Γ(aᵢ+s) on
/// its left. The path is the line Re s = σ ∈ (−1, 0); parameter poles right
/// of the line are added back as residues. Valid for |arg(−w)| < π.
pub fn hyp3f2_barnes(p: &Hyp3F2Params, opts: BarnesOptions) -> Result<C64> {
    let integral = barnes_integral(p, opts)?;
    Ok(integral * gamma_ratio(&GammaRatioSpec::new(&p.b, &p.a))?)
}

/// ₃F₂/(Γ(b₁)Γ(b₂)) by the same integral, finite at nonpositive-integer b.
pub fn hyp3f2_regularized_barnes(p: &Hyp3F2Params, opts: BarnesOptions) -> Result<C64> {
    let integral = barnes_integral(p, opts)?;
    Ok(integral * gamma_ratio(&GammaRatioSpec::new(&[], &p.a))?)
}

fn barnes_integral(p: &Hyp3F2Params, opts: BarnesOptions) -> Result<C64> {
    let mw = -p.w;
    if mw.im == 0.0 && mw.re <= 0.0 {
        return Err(Error::BranchCut(format!(
            "Barnes integral needs |arg(−w)| < π, got w = {}",
            p.w
        )));
    }
    let sigma = choose_sigma(&p.a);
    let line = Line { a: p.a, b: p.b, log_mw: ln(mw), sigma };

    // residues of parameter poles sitting right of the line
    let mut residues = C64::new(0.0, 0.0);
    let right: Vec<_> = left_poles(&p.a, sigma);
    for &(i, k, s) in &right {
        if s.im == 0.0 && s.re >= 0.0 && s.re == s.re.round() {
            return Err(Error::Pinch(format!("pole {s} of Γ(a+s) meets a pole of Γ(−s)")));
        }
        for &(j, _, t) in &right {
            if j != i && (t - s).norm() < 1e-9 {
                return Err(Error::Pinch(format!("coincident parameter poles at {s}")));
            }
        }
        let mut v = gamma(-s)? * cpow(mw, s);
        for (j, &aj) in p.a.iter().enumerate() {
            if j != i {
                v *= gamma(aj + s)?;
            }
        }
        for &bj in &p.b {
            v *= rgamma(bj + s);
        }
        let mut kf = 1.0;
        for m in 1..=k {
            kf *= m as f64;
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        residues += v * (sign / kf);
    }

    let (x, w) = gauss_legendre(20);
    let peak = (-40..=40)
        .map(|j| line.integrand(0.25 * j as f64).map(|v| v.norm()).unwrap_or(0.0))
        .fold(0.0, f64::max);
    if !(peak.is_finite() && peak > 0.0) {
        return Err(Error::Quadrature("Barnes integrand has no finite peak".into()));
    }
    let tol = opts.tol * peak;
    let mut line_sum = C64::new(0.0, 0.0);
    for dir in [1.0, -1.0] {
        let mut lo = 0.0f64;
        let mut quiet = 0;
        while lo < opts.max_tau {
            let (a0, a1) = if dir > 0.0 { (lo, lo + 2.0) } else { (-lo - 2.0, -lo) };
            line_sum += adaptive_panel(&line, a0, a1, &x, &w, tol, 0)?;
            let edge = line.integrand(dir * (lo + 2.0))?.norm();
            if edge < opts.cutoff * peak {
                quiet += 1;
                if quiet >= 2 {
                    break;
                }
            } else {
                quiet = 0;
            }
            lo += 2.0;
        }
        if lo >= opts.max_tau {
            return Err(Error::Quadrature("Barnes integrand did not decay".into()));
        }
    }
    // (1/2πi)∫ ds with ds = i dτ
    Ok(line_sum / (2.0 * PI) + residues)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyper::{hyp2f1, hyp3f2_far, hyp3f2_series};
    use crate::numerics::{c, r};

    #[test]
    fn agrees_with_series_inside_disk() {
        let p = Hyp3F2Params { a: [r(1.3), r(-0.7), r(1.0)], b: [r(0.4), r(1.6)], w: c(-0.5, 0.3) };
        let s = hyp3f2_series(&p).unwrap();
        let b = hyp3f2_barnes(&p, BarnesOptions::default()).unwrap();
        assert!((s - b).norm() < 1e-10 * s.norm(), "{s} vs {b}");
    }

    #[test]
    fn agrees_with_residue_sum_outside_disk() {
        let p = Hyp3F2Params { a: [r(1.3), r(-0.45), r(1.0)], b: [r(0.4), r(1.6)], w: r(-2.5) };
        let f = hyp3f2_far(&p).unwrap();
        let b = hyp3f2_barnes(&p, BarnesOptions::default()).unwrap();
        assert!((f - b).norm() < 1e-10 * f.norm(), "{f} vs {b}");
    }

    #[test]
    fn reduces_to_2f1_at_large_argument() {
        let p = Hyp3F2Params { a: [r(0.3), r(0.8), r(1.45)], b: [r(1.9), r(1.45)], w: c(-4.0, 2.0) };
        let want = hyp2f1(r(0.3), r(0.8), r(1.9), p.w).unwrap();
        let got = hyp3f2_barnes(&p, BarnesOptions::default()).unwrap();
        assert!((got - want).norm() < 1e-10 * want.norm(), "{got} vs {want}");
    }
}
