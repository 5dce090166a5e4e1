use std::fmt;

use num_bigint::BigUint;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Cardinality of a group, subgroup or census bucket.
///
/// Exact: finite values are arbitrary-precision integers, the infinite
/// case is a distinguished symbol (rendered as `"inf"` in JSON).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Cardinality {
    Finite(BigUint),
    Infinite,
}

impl Cardinality {
    pub fn finite(n: u64) -> Self {
        Cardinality::Finite(BigUint::from(n))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Cardinality::Finite(_))
    }

    pub fn as_biguint(&self) -> Option<&BigUint> {
        match self {
            Cardinality::Finite(n) => Some(n),
            Cardinality::Infinite => None,
        }
    }
}

impl From<u64> for Cardinality {
    fn from(n: u64) -> Self {
        Cardinality::finite(n)
    }
}

impl From<BigUint> for Cardinality {
    fn from(n: BigUint) -> Self {
        Cardinality::Finite(n)
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Finite(n) => write!(f, "{n}"),
            Cardinality::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Cardinality {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            Cardinality::Finite(n) => match u64::try_from(n) {
                Ok(small) => ser.serialize_u64(small),
                Err(_) => ser.serialize_str(&n.to_string()),
            },
            Cardinality::Infinite => ser.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Cardinality {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Text(String),
        }
        match Raw::deserialize(de)? {
            Raw::Num(n) => Ok(Cardinality::finite(n)),
            Raw::Text(s) if s == "inf" => Ok(Cardinality::Infinite),
            Raw::Text(s) => s
                .parse::<BigUint>()
                .map(Cardinality::Finite)
                .map_err(|_| D::Error::custom(format!("bad cardinality `{s}`"))),
        }
    }
}

/// A suspension level `r`: a finite number of suspensions or the stable limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    Finite(u32),
    Infinity,
}

impl Level {
    /// Clamp to the stable range: beyond `stable_from` every further
    /// suspension is an isomorphism, so the composite stops there.
    pub fn clamp_to(self, stable_from: u32) -> u32 {
        match self {
            Level::Finite(r) => r.min(stable_from),
            Level::Infinity => stable_from,
        }
    }
}

impl From<u32> for Level {
    fn from(r: u32) -> Self {
        Level::Finite(r)
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Finite(r) => write!(f, "{r}"),
            Level::Infinity => write!(f, "inf"),
        }
    }
}

impl std::str::FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "inf" | "∞" => Ok(Level::Infinity),
            _ => s
                .parse::<u32>()
                .map(Level::Finite)
                .map_err(|_| format!("expected a non-negative integer or `inf`, got `{s}`")),
        }
    }
}

impl Serialize for Level {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            Level::Finite(r) => ser.serialize_u32(*r),
            Level::Infinity => ser.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Level {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Text(String),
        }
        match Raw::deserialize(de)? {
            Raw::Num(r) => Ok(Level::Finite(r)),
            Raw::Text(s) => s.parse().map_err(D::Error::custom),
        }
    }
}

/// Order of the deck transformation group `G` of the target space form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupOrder {
    Finite(u64),
    Infinite,
}

impl GroupOrder {
    pub fn as_finite(self) -> Option<u64> {
        match self {
            GroupOrder::Finite(k) => Some(k),
            GroupOrder::Infinite => None,
        }
    }
}

impl fmt::Display for GroupOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupOrder::Finite(k) => write!(f, "{k}"),
            GroupOrder::Infinite => write!(f, "inf"),
        }
    }
}

impl std::str::FromStr for GroupOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "inf" | "∞" => Ok(GroupOrder::Infinite),
            _ => match s.parse::<u64>() {
                Ok(k) if k >= 1 => Ok(GroupOrder::Finite(k)),
                _ => Err(format!("expected a positive integer or `inf`, got `{s}`")),
            },
        }
    }
}
