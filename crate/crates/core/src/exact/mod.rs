//! Exact rational scalars and dense linear algebra.
//!
//! Everything in this module works over arbitrary-precision rationals, so
//! zero tests are exact. A one-way conversion to `f64` matrices exists for
//! the numerical solver.

mod matrix;
mod subspace;

pub use matrix::{Matrix, Signature};
pub use subspace::{format_vector, Subspace};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number; always stored in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Builds `num / den`.
///
/// # Panics
///
/// Panics when `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Formats as `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses `p/q` or `p` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let r: Rational = s.parse().ok()?;
    Some(r)
}

/// Lossy conversion used only on the way into the float solver.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| if r.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod rational_str {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).ok_or_else(|| D::Error::custom(format!("invalid rational {s:?}")))
    }
}

/// Serde adapter for optional rationals.
pub mod opt_rational_str {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_str(&format_rational(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        let s = Option::<String>::deserialize(d)?;
        s.map(|s| parse_rational(&s).ok_or_else(|| D::Error::custom(format!("invalid rational {s:?}")))).transpose()
    }
}

/// Serde adapter for a row-major nested array of rational strings.
pub mod rational_rows {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(rows: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(rows.len()))?;
        for row in rows {
            let row: Vec<String> = row.iter().map(format_rational).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        rows.into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|s| parse_rational(&s).ok_or_else(|| D::Error::custom(format!("invalid rational {s:?}"))))
                    .collect()
            })
            .collect()
    }
}

/// Optional variant of [`rational_rows`]; use with `#[serde(default)]`.
pub mod opt_rational_rows {
    use super::{rational_rows, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    #[derive(Deserialize)]
    struct Rows(#[serde(with = "rational_rows")] Vec<Vec<Rational>>);

    pub fn serialize<S: Serializer>(rows: &Option<Vec<Vec<Rational>>>, s: S) -> Result<S::Ok, S::Error> {
        match rows {
            Some(rows) => rational_rows::serialize(rows, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<Vec<Rational>>>, D::Error> {
        Ok(Option::<Rows>::deserialize(d)?.map(|r| r.0))
    }
}

/// Serde adapter for maps whose values are rational strings.
pub mod rational_map {
    use std::collections::BTreeMap;

    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error, ser::SerializeMap, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<K, S>(map: &BTreeMap<K, Rational>, s: S) -> Result<S::Ok, S::Error>
    where
        K: Serialize,
        S: Serializer,
    {
        let mut m = s.serialize_map(Some(map.len()))?;
        for (k, v) in map {
            m.serialize_entry(k, &format_rational(v))?;
        }
        m.end()
    }

    pub fn deserialize<'de, K, D>(d: D) -> Result<BTreeMap<K, Rational>, D::Error>
    where
        K: Deserialize<'de> + Ord,
        D: Deserializer<'de>,
    {
        let raw = BTreeMap::<K, String>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, s)| {
                let v = parse_rational(&s).ok_or_else(|| D::Error::custom(format!("invalid rational {s:?}")))?;
                Ok((k, v))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn formats_integers_without_denominator() {
        assert_eq!(format_rational(&rat(6, 3)), "2");
        assert_eq!(format_rational(&rat(-3, 6)), "-1/2");
        assert_eq!(format_rational(&rat(3, -6)), "-1/2");
    }

    #[test]
    fn parses_both_forms() {
        assert_eq!(parse_rational("7"), Some(int(7)));
        assert_eq!(parse_rational(" -4/6 "), Some(rat(-2, 3)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..1000).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn addition_is_exact(a in small_rational(), b in small_rational()) {
            prop_assert_eq!((&a + &b) - &b, a);
        }

        #[test]
        fn reciprocal_is_exact(a in small_rational()) {
            prop_assume!(!a.is_zero());
            prop_assert_eq!(&a * a.recip(), one());
        }

        #[test]
        fn canonical_form(a in small_rational()) {
            prop_assert!(a.denom().is_positive());
            prop_assert!(num_integer::Integer::gcd(a.numer(), a.denom()).is_one());
            prop_assert_eq!(parse_rational(&format_rational(&a)), Some(a));
        }
    }
}
