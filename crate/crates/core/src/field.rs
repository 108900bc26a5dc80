use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficient field: ℚ or 𝔽_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// `𝔽_p`, rejecting non-primes.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::InvalidField(format!("{p} is not prime")))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Re-validates a value that may have been built without [`FieldSpec::prime`].
    pub fn validate(&self) -> Result<()> {
        match self {
            FieldSpec::Prime(p) if !is_prime(*p) => Err(Error::InvalidField(format!("{p} is not prime"))),
            _ => Ok(()),
        }
    }

    pub fn tag(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Q" | "QQ" | "0" => Ok(FieldSpec::Rationals),
            _ => {
                let digits = s.strip_prefix('F').or_else(|| s.strip_prefix("ZZ/")).unwrap_or(s);
                let p: u64 = digits
                    .parse()
                    .map_err(|_| Error::InvalidField(format!("cannot parse field `{s}` (use Q or F<p>)")))?;
                FieldSpec::prime(p)
            }
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("F7".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert_eq!(FieldSpec::Prime(2).to_string(), "F2");
        assert!(matches!("F4".parse::<FieldSpec>(), Err(Error::InvalidField(_))));
        assert!(matches!("F1".parse::<FieldSpec>(), Err(Error::InvalidField(_))));
        assert!(matches!("R".parse::<FieldSpec>(), Err(Error::InvalidField(_))));
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
