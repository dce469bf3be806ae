use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Every identity the library can predict and verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityId {
    WeylMplusQ,
    WeylMplusP,
    WeylMminusQ,
    WeylMminusP,
    RiemannMplusP,
    RiemannMplusQ,
    RiemannMminusP,
    MultiIntMplus,
    MultiIntMminus,
    MultiIntK3,
    MultiIntP3,
    MultiIntLplus,
    MultiIntRodrigues,
    K3WeylP,
    K3WeylQ,
    #[serde(rename = "K3_RIEMANN_Q_3F2")]
    K3RiemannQ3f2,
    P3WeylP,
    P3RiemannQ,
    FerrersLplusP,
    #[serde(rename = "FERRERS_LPLUS_Q_3F2")]
    FerrersLplusQ3f2,
    #[serde(rename = "FERRERS_LMINUS_P_3F2")]
    FerrersLminusP3f2,
    RodriguesFrac,
    RodriguesInverse,
    BetaContour,
}

/// How an identity is grouped for the prediction entry points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    Order,
    Degree,
    Ferrers,
    MultiIntegral,
    Rodrigues,
    Beta,
}

impl IdentityId {
    pub const ALL: [IdentityId; 24] = [
        IdentityId::WeylMplusQ,
        IdentityId::WeylMplusP,
        IdentityId::WeylMminusQ,
        IdentityId::WeylMminusP,
        IdentityId::RiemannMplusP,
        IdentityId::RiemannMplusQ,
        IdentityId::RiemannMminusP,
        IdentityId::MultiIntMplus,
        IdentityId::MultiIntMminus,
        IdentityId::MultiIntK3,
        IdentityId::MultiIntP3,
        IdentityId::MultiIntLplus,
        IdentityId::MultiIntRodrigues,
        IdentityId::K3WeylP,
        IdentityId::K3WeylQ,
        IdentityId::K3RiemannQ3f2,
        IdentityId::P3WeylP,
        IdentityId::P3RiemannQ,
        IdentityId::FerrersLplusP,
        IdentityId::FerrersLplusQ3f2,
        IdentityId::FerrersLminusP3f2,
        IdentityId::RodriguesFrac,
        IdentityId::RodriguesInverse,
        IdentityId::BetaContour,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::WeylMplusQ => "WEYL_MPLUS_Q",
            IdentityId::WeylMplusP => "WEYL_MPLUS_P",
            IdentityId::WeylMminusQ => "WEYL_MMINUS_Q",
            IdentityId::WeylMminusP => "WEYL_MMINUS_P",
            IdentityId::RiemannMplusP => "RIEMANN_MPLUS_P",
            IdentityId::RiemannMplusQ => "RIEMANN_MPLUS_Q",
            IdentityId::RiemannMminusP => "RIEMANN_MMINUS_P",
            IdentityId::MultiIntMplus => "MULTI_INT_MPLUS",
            IdentityId::MultiIntMminus => "MULTI_INT_MMINUS",
            IdentityId::MultiIntK3 => "MULTI_INT_K3",
            IdentityId::MultiIntP3 => "MULTI_INT_P3",
            IdentityId::MultiIntLplus => "MULTI_INT_LPLUS",
            IdentityId::MultiIntRodrigues => "MULTI_INT_RODRIGUES",
            IdentityId::K3WeylP => "K3_WEYL_P",
            IdentityId::K3WeylQ => "K3_WEYL_Q",
            IdentityId::K3RiemannQ3f2 => "K3_RIEMANN_Q_3F2",
            IdentityId::P3WeylP => "P3_WEYL_P",
            IdentityId::P3RiemannQ => "P3_RIEMANN_Q",
            IdentityId::FerrersLplusP => "FERRERS_LPLUS_P",
            IdentityId::FerrersLplusQ3f2 => "FERRERS_LPLUS_Q_3F2",
            IdentityId::FerrersLminusP3f2 => "FERRERS_LMINUS_P_3F2",
            IdentityId::RodriguesFrac => "RODRIGUES_FRAC",
            IdentityId::RodriguesInverse => "RODRIGUES_INVERSE",
            IdentityId::BetaContour => "BETA_CONTOUR",
        }
    }

    pub fn group(self) -> Group {
        use IdentityId::*;
        match self {
            WeylMplusQ | WeylMplusP | WeylMminusQ | WeylMminusP | RiemannMplusP | RiemannMplusQ
            | RiemannMminusP => Group::Order,
            K3WeylP | K3WeylQ | K3RiemannQ3f2 | P3WeylP | P3RiemannQ => Group::Degree,
            FerrersLplusP | FerrersLplusQ3f2 | FerrersLminusP3f2 => Group::Ferrers,
            MultiIntMplus | MultiIntMminus | MultiIntK3 | MultiIntP3 | MultiIntLplus
            | MultiIntRodrigues => Group::MultiIntegral,
            RodriguesFrac | RodriguesInverse => Group::Rodrigues,
            BetaContour => Group::Beta,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase();
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == key)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}
