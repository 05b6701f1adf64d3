use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::pfaffian::Sign;

/// A basis symbol of the Gorenstein resolution F or of a Koszul copy G^k.
///
/// The derived order lists each degree in basis order: e before u, f
/// before v, g before w, with v^k blocks ordered (1,2), (1,3), (2,3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisElement {
    /// The generator of the degree-0 module.
    One,
    E(usize),
    /// u^k_l.
    U { k: usize, l: usize },
    F(usize),
    /// v^k_{a,b} with a < b.
    V { k: usize, a: usize, b: usize },
    G,
    W(usize),
}

impl BasisElement {
    pub fn degree(&self) -> usize {
        match self {
            BasisElement::One => 0,
            BasisElement::E(_) | BasisElement::U { .. } => 1,
            BasisElement::F(_) | BasisElement::V { .. } => 2,
            BasisElement::G | BasisElement::W(_) => 3,
        }
    }

    /// v^k_{a,b} as a signed normalized symbol: v^k_{b,a} = −v^k_{a,b}.
    pub fn v(k: usize, a: usize, b: usize) -> Result<(Sign, BasisElement)> {
        if a == b || !(1..=3).contains(&a) || !(1..=3).contains(&b) {
            return Err(Error::Argument(format!("invalid Koszul index pair ({a}, {b})")));
        }
        Ok(if a < b {
            (Sign::PLUS, BasisElement::V { k, a, b })
        } else {
            (Sign::MINUS, BasisElement::V { k, a: b, b: a })
        })
    }

    /// True for symbols of the Koszul copies.
    pub fn is_koszul(&self) -> bool {
        matches!(self, BasisElement::U { .. } | BasisElement::V { .. } | BasisElement::W(_))
    }

    /// Checks index ranges against size m and trim count t.
    pub fn validate(&self, m: usize, t: usize) -> Result<()> {
        let ok = match *self {
            BasisElement::One | BasisElement::G => true,
            BasisElement::E(i) => i > t && i <= m,
            BasisElement::F(i) => (1..=m).contains(&i),
            BasisElement::U { k, l } => (1..=t).contains(&k) && (1..=3).contains(&l),
            BasisElement::V { k, a, b } => (1..=t).contains(&k) && a < b && (1..=3).contains(&a) && b <= 3,
            BasisElement::W(k) => (1..=t).contains(&k),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Argument(format!("{self} is not a basis element of this complex")))
        }
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElement::One => write!(f, "1"),
            BasisElement::E(i) => write!(f, "e{i}"),
            BasisElement::U { k, l } => write!(f, "u{k}_{l}"),
            BasisElement::F(i) => write!(f, "f{i}"),
            BasisElement::V { k, a, b } => write!(f, "v{k}_{a}{b}"),
            BasisElement::G => write!(f, "g"),
            BasisElement::W(k) => write!(f, "w{k}"),
        }
    }
}

impl FromStr for BasisElement {
    type Err = Error;

    /// Parses labels such as `1`, `e3`, `u1_2`, `f4`, `v2_13`, `g`, `w1`.
    fn from_str(s: &str) -> Result<BasisElement> {
        let bad = || Error::Argument(format!("unrecognized basis label '{s}'"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let s = s.trim();
        if s == "1" {
            return Ok(BasisElement::One);
        }
        if s == "g" {
            return Ok(BasisElement::G);
        }
        let (head, rest) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        match head {
            "e" => Ok(BasisElement::E(num(rest)?)),
            "f" => Ok(BasisElement::F(num(rest)?)),
            "w" => Ok(BasisElement::W(num(rest)?)),
            "u" => {
                let (k, l) = rest.split_once('_').ok_or_else(bad)?;
                Ok(BasisElement::U { k: num(k)?, l: num(l)? })
            }
            "v" => {
                let (k, ab) = rest.split_once('_').ok_or_else(bad)?;
                let d: Vec<usize> = ab.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>().ok_or_else(bad)?;
                if d.len() != 2 {
                    return Err(bad());
                }
                match BasisElement::v(num(k)?, d[0], d[1])? {
                    (Sign::PLUS, v) => Ok(v),
                    _ => Err(Error::Argument(format!("label '{s}' is not normalized (write a < b)"))),
                }
            }
            _ => Err(bad()),
        }
    }
}

impl Serialize for BasisElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BasisElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_round_trip() {
        let all = [
            BasisElement::One,
            BasisElement::E(3),
            BasisElement::U { k: 1, l: 2 },
            BasisElement::F(12),
            BasisElement::V { k: 2, a: 1, b: 3 },
            BasisElement::G,
            BasisElement::W(1),
        ];
        for b in all {
            assert_eq!(b.to_string().parse::<BasisElement>().unwrap(), b);
        }
        assert!("v1_31".parse::<BasisElement>().is_err());
        assert!("q1".parse::<BasisElement>().is_err());
    }

    #[test]
    fn v_normalization() {
        let (s, v) = BasisElement::v(1, 3, 1).unwrap();
        assert_eq!(s, Sign::MINUS);
        assert_eq!(v, BasisElement::V { k: 1, a: 1, b: 3 });
        assert!(BasisElement::v(1, 2, 2).is_err());
    }

    #[test]
    fn order_matches_basis_order() {
        let mut v = vec![
            BasisElement::V { k: 1, a: 2, b: 3 },
            BasisElement::F(2),
            BasisElement::V { k: 1, a: 1, b: 2 },
            BasisElement::V { k: 1, a: 1, b: 3 },
            BasisElement::F(1),
        ];
        v.sort();
        assert_eq!(
            v.iter().map(ToString::to_string).collect::<Vec<_>>(),
            ["f1", "f2", "v1_12", "v1_13", "v1_23"]
        );
    }
}
