//! Extended integers, computation caps and certainty labels shared by all reports.

use std::fmt;

use serde::{Deserialize, Serialize};

/// `Z ∪ {−∞, +∞}` with the obvious order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtInt {
    NegInf,
    Finite(i32),
    PosInf,
}

impl ExtInt {
    pub fn finite(self) -> Option<i32> {
        match self {
            ExtInt::Finite(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtInt::Finite(_))
    }

    pub fn neg(self) -> ExtInt {
        match self {
            ExtInt::NegInf => ExtInt::PosInf,
            ExtInt::PosInf => ExtInt::NegInf,
            ExtInt::Finite(n) => ExtInt::Finite(-n),
        }
    }

    /// Shift by a finite amount; infinities are fixed.
    pub fn plus(self, n: i32) -> ExtInt {
        match self {
            ExtInt::Finite(m) => ExtInt::Finite(m + n),
            other => other,
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => write!(f, "-inf"),
            ExtInt::PosInf => write!(f, "+inf"),
            ExtInt::Finite(n) => write!(f, "{n}"),
        }
    }
}

/// The value of a homological dimension as far as it could be decided.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum DimValue {
    /// The input is exact.
    NegInf,
    Finite(i32),
    /// Not decided within the cutoff; the dimension is at least this value.
    AtLeast(i32),
    /// A sub-check could not be decided; the reason is recorded.
    Indeterminate(String),
}

impl DimValue {
    pub fn finite(&self) -> Option<i32> {
        match self {
            DimValue::Finite(n) => Some(*n),
            _ => None,
        }
    }

    /// `−∞` or a finite value.
    pub fn is_determinate(&self) -> bool {
        matches!(self, DimValue::NegInf | DimValue::Finite(_))
    }

    pub fn as_ext(&self) -> Option<ExtInt> {
        match self {
            DimValue::NegInf => Some(ExtInt::NegInf),
            DimValue::Finite(n) => Some(ExtInt::Finite(*n)),
            _ => None,
        }
    }

    pub fn plus(&self, n: i32) -> DimValue {
        match self {
            DimValue::Finite(m) => DimValue::Finite(m + n),
            DimValue::AtLeast(m) => DimValue::AtLeast(m + n),
            other => other.clone(),
        }
    }
}

impl fmt::Display for DimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimValue::NegInf => write!(f, "-inf"),
            DimValue::Finite(n) => write!(f, "{n}"),
            DimValue::AtLeast(n) => write!(f, ">= {n}"),
            DimValue::Indeterminate(why) => write!(f, "indeterminate ({why})"),
        }
    }
}

/// Whether a computation bounded by an internal degree cap is exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certainty {
    /// Every internal degree is accounted for (Artinian ring and a large enough cap).
    Certified,
    /// Exact in internal degrees up to the cap; nothing is claimed above it.
    UpToCap(i32),
}

impl Certainty {
    pub fn from_flag(certified: bool, cap: i32) -> Certainty {
        if certified {
            Certainty::Certified
        } else {
            Certainty::UpToCap(cap)
        }
    }

    pub fn and(self, other: Certainty) -> Certainty {
        match (self, other) {
            (Certainty::Certified, c) | (c, Certainty::Certified) => c,
            (Certainty::UpToCap(a), Certainty::UpToCap(b)) => Certainty::UpToCap(a.min(b)),
        }
    }

    pub fn is_certified(self) -> bool {
        self == Certainty::Certified
    }
}

impl fmt::Display for Certainty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certainty::Certified => write!(f, "certified"),
            Certainty::UpToCap(d) => write!(f, "valid up to internal degree {d}"),
        }
    }
}

/// Limits for every potentially infinite computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Caps {
    /// Homological cutoff `N`: resolutions are computed through `P_N`.
    pub cutoff: i32,
    /// Internal degree cap `D`.
    pub degree_cap: i32,
    /// Window `W` for Ext vanishing checks.
    pub window: i32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { cutoff: 10, degree_cap: 20, window: 8 }
    }
}

impl Caps {
    pub fn new(cutoff: i32, degree_cap: i32, window: i32) -> Self {
        Caps { cutoff, degree_cap, window }
    }

    pub fn with_cutoff(self, cutoff: i32) -> Self {
        Caps { cutoff, ..self }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering() {
        assert!(ExtInt::NegInf < ExtInt::Finite(-100));
        assert!(ExtInt::Finite(3) < ExtInt::PosInf);
        assert_eq!(ExtInt::NegInf.neg(), ExtInt::PosInf);
        assert_eq!(ExtInt::Finite(2).plus(3), ExtInt::Finite(5));
    }
}
