//! Side conditions of each identity, kept as data so they can be listed,
//! serialized and checked before anything is evaluated.

use super::{IdentityId, ShiftRequest};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Condition {
    /// Re(c₀ + c₁ν + c₂μ + c₃λ) > 0.
    Positive { coef: [f64; 4], label: String },
    /// Argument off the cut (−∞, 1].
    OffCut,
    /// Argument off (−∞, −1] and [1, ∞).
    OffJacobiCuts,
    /// Real argument in (−1, 1).
    Interval,
    /// Re y > 1, needed by the Whipple pairing.
    RightOfOne,
    /// λ is a fold count in 1..=8.
    FoldCount,
}

impl Condition {
    /// Signed distance inside the region; positive when the condition holds.
    /// Non-linear conditions report 1 or −1.
    pub fn margin(&self, req: &ShiftRequest) -> f64 {
        let flag = |ok: bool| if ok { 1.0 } else { -1.0 };
        let z = req.argument;
        match self {
            Condition::Positive { coef, .. } => {
                (coef[0] + coef[1] * req.nu + coef[2] * req.mu + coef[3] * req.lambda).re
            }
            Condition::OffCut => flag(!(z.im == 0.0 && z.re <= 1.0)),
            Condition::OffJacobiCuts => flag(!(z.im == 0.0 && z.re.abs() >= 1.0)),
            Condition::Interval => flag(z.im == 0.0 && z.re > -1.0 && z.re < 1.0),
            Condition::RightOfOne => flag(z.re > 1.0),
            Condition::FoldCount => {
                let l = req.lambda;
                flag(l.im == 0.0 && l.re == l.re.round() && (1.0..=8.0).contains(&l.re))
            }
        }
    }

    pub fn holds(&self, req: &ShiftRequest) -> bool {
        self.margin(req) > 0.0
    }

    pub fn label(&self) -> String {
        match self {
            Condition::Positive { label, .. } => label.clone(),
            Condition::OffCut => "argument off (−∞, 1]".into(),
            Condition::OffJacobiCuts => "argument off (−∞, −1] ∪ [1, ∞)".into(),
            Condition::Interval => "−1 < x < 1".into(),
            Condition::RightOfOne => "Re y > 1".into(),
            Condition::FoldCount => "n ∈ {1, …, 8}".into(),
        }
    }
}

fn pos(coef: [f64; 4], label: &str) -> Condition {
    Condition::Positive { coef, label: label.to_string() }
}

/// Result of checking a request against its identity's conditions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Validity {
    pub holds: bool,
    pub violated: Vec<String>,
    /// Smallest linear margin among the conditions (∞ when there are none).
    pub margin: f64,
}

impl Validity {
    pub fn check(conds: &[Condition], req: &ShiftRequest) -> Self {
        let mut violated = Vec::new();
        let mut margin = f64::INFINITY;
        for c in conds {
            let m = c.margin(req);
            if !(m > 0.0) {
                violated.push(c.label());
            }
            if matches!(c, Condition::Positive { .. }) {
                margin = margin.min(m);
            }
        }
        Self { holds: violated.is_empty(), violated, margin }
    }
}

/// Conditions of one identity. For the multi-integral identities λ holds
/// the fold count n; for the Rodrigues pair μ holds α; for the beta
/// contour ν holds σ.
pub fn conditions(id: IdentityId) -> Vec<Condition> {
    use IdentityId::*;
    match id {
        WeylMplusQ => vec![pos([1.0, 1.0, 1.0, 1.0], "Re(ν+μ+λ+1) > 0"), Condition::OffCut],
        WeylMplusP => vec![
            pos([0.0, -1.0, 1.0, 1.0], "Re(−ν+μ+λ) > 0"),
            pos([0.5, 1.0, 0.0, 0.0], "Re ν > −1/2"),
            Condition::OffCut,
        ],
        WeylMminusQ => vec![pos([1.0, 1.0, -1.0, 1.0], "Re(ν−μ+λ+1) > 0"), Condition::OffCut],
        WeylMminusP => vec![
            pos([0.0, -1.0, -1.0, 1.0], "Re(λ−ν−μ) > 0"),
            pos([0.5, 1.0, 0.0, 0.0], "Re ν > −1/2"),
            Condition::OffCut,
        ],
        RiemannMplusP | RiemannMplusQ => vec![pos([1.0, 0.0, -1.0, 0.0], "Re μ < 1"), Condition::OffCut],
        RiemannMminusP => vec![Condition::OffCut],
        MultiIntMplus => vec![
            Condition::FoldCount,
            pos([1.0, 1.0, 1.0, -1.0], "Re(ν+μ−n+1) > 0"),
            Condition::OffCut,
        ],
        MultiIntMminus => vec![
            Condition::FoldCount,
            pos([1.0, 1.0, -1.0, -1.0], "Re(ν−μ−n+1) > 0"),
            Condition::OffCut,
        ],
        MultiIntK3 => vec![
            Condition::FoldCount,
            pos([1.0, 1.0, -1.0, 0.0], "Re(ν−μ+1) > 0"),
            Condition::RightOfOne,
        ],
        MultiIntP3 => vec![
            Condition::FoldCount,
            pos([1.5, 1.0, 0.0, 0.0], "Re ν > −3/2"),
            Condition::RightOfOne,
        ],
        MultiIntLplus => vec![
            Condition::FoldCount,
            pos([1.0, 0.0, -1.0, 0.0], "Re μ < 1"),
            Condition::Interval,
        ],
        MultiIntRodrigues => vec![
            Condition::FoldCount,
            pos([1.0, 0.0, 1.0, 0.0], "Re α > −1"),
            Condition::OffJacobiCuts,
        ],
        K3WeylP => vec![pos([1.0, 1.0, -1.0, 1.0], "Re(ν+λ−μ+1) > 0"), Condition::RightOfOne],
        K3WeylQ => vec![
            pos([1.0, 1.0, -1.0, 1.0], "Re(ν+λ−μ+1) > 0"),
            pos([1.0, 1.0, 1.0, 1.0], "Re(ν+λ+μ+1) > 0"),
            Condition::RightOfOne,
        ],
        K3RiemannQ3f2 => vec![pos([1.5, 1.0, 0.0, 0.0], "Re ν > −3/2"), Condition::RightOfOne],
        P3WeylP => vec![
            pos([0.0, -1.0, -1.0, 1.0], "Re(ν+μ−λ) < 0"),
            pos([0.5, 1.0, 0.0, 0.0], "Re ν > −1/2"),
            Condition::RightOfOne,
        ],
        P3RiemannQ => vec![pos([1.5, 1.0, 0.0, 0.0], "Re ν > −3/2"), Condition::RightOfOne],
        FerrersLplusP | FerrersLplusQ3f2 => {
            vec![pos([1.0, 0.0, -1.0, 0.0], "Re μ < 1"), Condition::Interval]
        }
        FerrersLminusP3f2 => vec![Condition::Interval],
        RodriguesFrac => vec![pos([1.0, 1.0, 1.0, 0.0], "Re(ν+α+1) > 0"), Condition::OffJacobiCuts],
        RodriguesInverse => vec![
            pos([1.0, 0.0, 1.0, 0.0], "Re α > −1"),
            pos([0.0, 1.0, 0.0, 0.0], "Re ν > 0"),
            Condition::OffJacobiCuts,
        ],
        BetaContour => vec![pos([0.0, 1.0, 0.0, 0.0], "Re σ > 0")],
    }
}
