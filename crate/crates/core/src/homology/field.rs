use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    #[serde(rename = "gf2")]
    Gf2,
    #[serde(rename = "q")]
    Rational,
}

impl Field {
    pub const ALL: [Field; 2] = [Field::Gf2, Field::Rational];

    pub fn tag(self) -> &'static str {
        match self {
            Field::Gf2 => "gf2",
            Field::Rational => "q",
        }
    }

    pub fn zero(self) -> Element {
        self.from_integer(0)
    }

    pub fn one(self) -> Element {
        self.from_integer(1)
    }

    /// Image of an integer under the canonical ring map.
    pub fn from_integer(self, k: i64) -> Element {
        match self {
            Field::Gf2 => Element::Gf2(k.rem_euclid(2) == 1),
            Field::Rational => Element::Rational(BigRational::from_integer(BigInt::from(k))),
        }
    }

    pub fn from_ratio(self, num: i64, den: i64) -> Option<Element> {
        let n = self.from_integer(num);
        let d = self.from_integer(den).inverse()?;
        Some(n.mul(&d))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> Result<Field, String> {
        match s.to_ascii_lowercase().as_str() {
            "gf2" | "f2" | "z2" => Ok(Field::Gf2),
            "q" | "rational" | "rationals" => Ok(Field::Rational),
            _ => Err(format!("unknown field {s:?} (expected gf2 or q)")),
        }
    }
}

/// Exact field element. Operations on elements of different fields panic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Gf2(bool),
    Rational(BigRational),
}

impl Element {
    pub fn field(&self) -> Field {
        match self {
            Element::Gf2(_) => Field::Gf2,
            Element::Rational(_) => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Element::Gf2(b) => !b,
            Element::Rational(q) => q.is_zero(),
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        match (self, other) {
            (Element::Gf2(a), Element::Gf2(b)) => Element::Gf2(a ^ b),
            (Element::Rational(a), Element::Rational(b)) => Element::Rational(a + b),
            _ => panic!("mixed fields"),
        }
    }

    pub fn mul(&self, other: &Element) -> Element {
        match (self, other) {
            (Element::Gf2(a), Element::Gf2(b)) => Element::Gf2(a & b),
            (Element::Rational(a), Element::Rational(b)) => Element::Rational(a * b),
            _ => panic!("mixed fields"),
        }
    }

    pub fn neg(&self) -> Element {
        match self {
            Element::Gf2(a) => Element::Gf2(*a),
            Element::Rational(a) => Element::Rational(-a),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Element> {
        match self {
            Element::Gf2(true) => Some(Element::Gf2(true)),
            Element::Gf2(false) => None,
            Element::Rational(q) if q.is_zero() => None,
            Element::Rational(q) => Some(Element::Rational(BigRational::one() / q)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn element(field: Field, num: i64, den: i64) -> Element {
        field.from_ratio(num, den).unwrap_or_else(|| field.from_integer(num))
    }

    proptest! {
        #[test]
        fn field_axioms_on_sampled_triples(
            a in (-50i64..50, 1i64..20),
            b in (-50i64..50, 1i64..20),
            c in (-50i64..50, 1i64..20),
        ) {
            for field in Field::ALL {
                let (x, y, z) = (element(field, a.0, a.1), element(field, b.0, b.1), element(field, c.0, c.1));
                prop_assert_eq!(x.add(&y), y.add(&x));
                prop_assert_eq!(x.mul(&y), y.mul(&x));
                prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
                prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
                prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
                prop_assert_eq!(x.add(&field.zero()), x.clone());
                prop_assert_eq!(x.mul(&field.one()), x.clone());
                prop_assert!(x.add(&x.neg()).is_zero());
                match x.inverse() {
                    Some(inv) => prop_assert_eq!(x.mul(&inv), field.one()),
                    None => prop_assert!(x.is_zero()),
                }
            }
        }
    }

    #[test]
    fn parsing_and_tags() {
        assert_eq!("GF2".parse::<Field>().unwrap(), Field::Gf2);
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rational);
        assert!("r".parse::<Field>().is_err());
        assert_eq!(serde_json::to_string(&Field::Rational).unwrap(), "\"q\"");
        assert!(Field::Gf2.from_integer(2).is_zero());
        assert!(Field::Gf2.from_ratio(1, 2).is_none());
    }
}
