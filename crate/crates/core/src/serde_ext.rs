//! JSON encoding of extended reals: finite values as numbers, infinities as
//! the strings `"inf"` / `"-inf"` (JSON has no literal for them).

use serde::de::{self, Deserializer, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// An `f64` that round-trips `±∞` through JSON.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ExtF64(pub f64);

impl Serialize for ExtF64 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let x = self.0;
        if x.is_finite() {
            s.serialize_f64(x)
        } else if x == f64::INFINITY {
            s.serialize_str("inf")
        } else if x == f64::NEG_INFINITY {
            s.serialize_str("-inf")
        } else {
            s.serialize_str("nan")
        }
    }
}

impl<'de> Deserialize<'de> for ExtF64 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = ExtF64;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a number or one of \"inf\", \"-inf\", \"nan\"")
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<ExtF64, E> {
                Ok(ExtF64(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExtF64, E> {
                Ok(ExtF64(v as f64))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExtF64, E> {
                Ok(ExtF64(v as f64))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<ExtF64, E> {
                match v {
                    "inf" | "+inf" | "infinity" => Ok(ExtF64(f64::INFINITY)),
                    "-inf" | "-infinity" => Ok(ExtF64(f64::NEG_INFINITY)),
                    "nan" => Ok(ExtF64(f64::NAN)),
                    _ => Err(E::invalid_value(de::Unexpected::Str(v), &self)),
                }
            }
        }
        d.deserialize_any(V)
    }
}

/// `#[serde(with = "ext_f64")]` for a single `f64` field.
pub mod ext_f64 {
    use super::*;

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        ExtF64(*x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(ExtF64::deserialize(d)?.0)
    }
}

/// `#[serde(with = "ext_f64_vec")]` for a `Vec<f64>` field.
pub mod ext_f64_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[f64], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&ExtF64(*x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<f64>, D::Error> {
        Ok(Vec::<ExtF64>::deserialize(d)?.into_iter().map(|x| x.0).collect())
    }
}

/// `#[serde(with = "ext_f64_opt")]` for an `Option<f64>` field.
pub mod ext_f64_opt {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
        x.map(ExtF64).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<f64>, D::Error> {
        Ok(Option::<ExtF64>::deserialize(d)?.map(|x| x.0))
    }
}
