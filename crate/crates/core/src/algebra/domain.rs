use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::prime::{pow_mod, Prime};
use crate::{Error, Rational, Result};

/// Coefficient domain of a polynomial.
///
/// Coefficients are always stored as [`Rational`]; over `F_p` they are kept
/// as integer representatives in `[0, p)`, over ℤ as integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    Integer,
    Rational,
    Prime(Prime),
}

impl Domain {
    pub fn prime(p: u64) -> Result<Self> {
        Prime::new(p).map(Domain::Prime)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Domain::Prime(p) => p.get(),
            _ => 0,
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Domain::Integer)
    }

    /// Canonical representative of `c` in this domain.
    pub fn reduce(&self, c: &Rational) -> Result<Rational> {
        match self {
            Domain::Rational => Ok(c.clone()),
            Domain::Integer => {
                if c.is_integer() {
                    Ok(c.clone())
                } else {
                    Err(Error::NonIntegral(c.to_string()))
                }
            }
            Domain::Prime(p) => {
                let pb = BigInt::from(p.get());
                let num = c.numer().mod_floor(&pb).to_u64().unwrap_or(0);
                let den = c.denom().mod_floor(&pb).to_u64().unwrap_or(0);
                if den == 0 {
                    return Err(Error::BadDenominator { p: p.get() });
                }
                let inv = pow_mod(den, p.get() - 2, p.get());
                let r = (num as u128 * inv as u128 % p.get() as u128) as u64;
                Ok(Rational::from_integer(BigInt::from(r)))
            }
        }
    }

    /// Reduction of a value already known to be admissible (integral over
    /// `F_p`). Used on results of ring operations.
    pub(crate) fn normalize(&self, c: Rational) -> Rational {
        match self {
            Domain::Prime(p) => {
                debug_assert!(c.is_integer());
                let pb = BigInt::from(p.get());
                Rational::from_integer(c.numer().mod_floor(&pb))
            }
            _ => c,
        }
    }

    pub fn from_int(&self, k: i64) -> Rational {
        self.normalize(Rational::from_integer(BigInt::from(k)))
    }

    /// Multiplicative inverse; over ℤ only units are invertible.
    pub fn inverse(&self, c: &Rational) -> Option<Rational> {
        if c.is_zero() {
            return None;
        }
        match self {
            Domain::Rational => Some(c.recip()),
            Domain::Integer => {
                if c.abs().is_one() {
                    Some(c.clone())
                } else {
                    None
                }
            }
            Domain::Prime(p) => {
                let r = c.numer().to_u64()?;
                let inv = pow_mod(r, p.get() - 2, p.get());
                Some(Rational::from_integer(BigInt::from(inv)))
            }
        }
    }

    /// Exact quotient `a / b` inside the domain.
    pub(crate) fn divide(&self, a: &Rational, b: &Rational) -> Option<Rational> {
        match self {
            Domain::Integer => {
                let q = a / b;
                q.is_integer().then_some(q)
            }
            Domain::Rational => (!b.is_zero()).then(|| a / b),
            Domain::Prime(_) => self.inverse(b).map(|inv| self.normalize(a * inv)),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Integer => write!(f, "z"),
            Domain::Rational => write!(f, "q"),
            Domain::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Domain {
    type Err = Error;

    /// Accepts `q`, `z` and `fp:P`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "q" | "Q" => Ok(Domain::Rational),
            "z" | "Z" => Ok(Domain::Integer),
            other => {
                let digits = other
                    .strip_prefix("fp:")
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown field `{other}`")))?;
                let p: u64 = digits
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("bad prime `{digits}`")))?;
                Domain::prime(p)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn reduction_mod_p() {
        let f5 = Domain::prime(5).unwrap();
        assert_eq!(f5.reduce(&q(-1, 1)).unwrap(), q(4, 1));
        // 1/2 = 3 mod 5
        assert_eq!(f5.reduce(&q(1, 2)).unwrap(), q(3, 1));
        assert_eq!(f5.reduce(&q(1, 10)), Err(Error::BadDenominator { p: 5 }));
    }

    #[test]
    fn integer_domain_rejects_fractions() {
        assert!(Domain::Integer.reduce(&q(1, 2)).is_err());
        assert_eq!(Domain::Integer.divide(&q(6, 1), &q(3, 1)), Some(q(2, 1)));
        assert_eq!(Domain::Integer.divide(&q(6, 1), &q(4, 1)), None);
    }

    #[test]
    fn parse_field_tags() {
        assert_eq!("q".parse::<Domain>().unwrap(), Domain::Rational);
        assert_eq!("fp:7".parse::<Domain>().unwrap(), Domain::prime(7).unwrap());
        assert_eq!("fp:4".parse::<Domain>(), Err(Error::NotPrime(4)));
        assert!("gf".parse::<Domain>().is_err());
    }
}
