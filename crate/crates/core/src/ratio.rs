//! Exact rational bounds. Serialized as `"p/q"` strings, or `"p"` when integral.

use num_rational::Ratio;

pub type Rational = Ratio<i64>;

pub(crate) mod as_string {
    use super::Rational;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(de)?;
        text.parse().map_err(|_| D::Error::custom(format!("invalid rational {text:?}")))
    }
}
