use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// A vector-space dimension over the ground field, possibly infinite.
///
/// `Infinite` is an ordinary value, never an error: it is what a colength
/// computation returns when the leading staircase is not cofinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dimension {
    Finite(u64),
    Infinite,
}

impl Dimension {
    pub fn is_finite(self) -> bool {
        matches!(self, Dimension::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Dimension::Finite(d) => Some(d),
            Dimension::Infinite => None,
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(d) => write!(f, "{d}"),
            Dimension::Infinite => f.write_str("infinite"),
        }
    }
}

impl From<u64> for Dimension {
    fn from(d: u64) -> Self {
        Dimension::Finite(d)
    }
}

impl Serialize for Dimension {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Dimension::Finite(d) => s.serialize_u64(*d),
            Dimension::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl<'de> Deserialize<'de> for Dimension {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Dimension;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a nonnegative integer or the string \"infinite\"")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Dimension, E> {
                Ok(Dimension::Finite(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Dimension, E> {
                u64::try_from(v)
                    .map(Dimension::Finite)
                    .map_err(|_| E::custom("negative dimension"))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Dimension, E> {
                if v == "infinite" {
                    Ok(Dimension::Infinite)
                } else {
                    Err(E::custom(format!("unexpected dimension string `{v}`")))
                }
            }
        }
        d.deserialize_any(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_forms() {
        assert_eq!(serde_json::to_string(&Dimension::Finite(5)).unwrap(), "5");
        assert_eq!(serde_json::to_string(&Dimension::Infinite).unwrap(), "\"infinite\"");
        let back: Dimension = serde_json::from_str("\"infinite\"").unwrap();
        assert_eq!(back, Dimension::Infinite);
        let back: Dimension = serde_json::from_str("17").unwrap();
        assert_eq!(back, Dimension::Finite(17));
        assert!(serde_json::from_str::<Dimension>("-1").is_err());
        assert!(Dimension::Finite(1000) < Dimension::Infinite);
    }
}
