use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result};

/// A prime `p` with `2 <= p < 2^31`, checked at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub const BOUND: u64 = 1 << 31;

    pub fn new(p: u64) -> Result<Self> {
        if p < Self::BOUND && is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin. The witness set {2, 3, 5, 7} is exact for
/// every n < 3 215 031 751, which covers the supported range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7] {
        if n == small {
            return true;
        }
        if n.is_multiple_of(small) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Element of the prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    residue: u64,
    modulus: Prime,
}

impl Fp {
    pub fn new(value: i64, modulus: Prime) -> Self {
        let p = modulus.get() as i64;
        Fp {
            residue: value.rem_euclid(p) as u64,
            modulus,
        }
    }

    pub fn residue(self) -> u64 {
        self.residue
    }

    pub fn modulus(self) -> Prime {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    pub fn pow(self, exp: u64) -> Self {
        Fp {
            residue: pow_mod(self.residue, exp, self.modulus.get()),
            modulus: self.modulus,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.pow(self.modulus.get() - 2))
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let p = self.modulus.get();
        Fp {
            residue: (self.residue + rhs.residue) % p,
            modulus: self.modulus,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self + (-rhs)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        let p = self.modulus.get();
        Fp {
            residue: (p - self.residue) % p,
            modulus: self.modulus,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Fp {
            residue: mul_mod(self.residue, rhs.residue, self.modulus.get()),
            modulus: self.modulus,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|k| k * k <= n).all(|k| !n.is_multiple_of(k))
    }

    #[test]
    fn miller_rabin_matches_trial_division() {
        for n in 0..20_000u64 {
            assert_eq!(is_prime(n), trial_division(n), "n = {n}");
        }
        // strong pseudoprimes to small bases
        for n in [2047u64, 1_373_653, 25_326_001, 3_215_031_751 - 2] {
            assert_eq!(is_prime(n), trial_division(n));
        }
        assert!(is_prime(2_147_483_647));
    }

    #[test]
    fn rejects_composites_and_large() {
        assert_eq!(Prime::new(4), Err(Error::NotPrime(4)));
        assert!(Prime::new(1).is_err());
        assert!(Prime::new(4_294_967_291).is_err());
        assert_eq!(Prime::new(97).unwrap().get(), 97);
    }

    #[test]
    fn field_ops() {
        let p = Prime::new(7).unwrap();
        let a = Fp::new(3, p);
        let b = Fp::new(-2, p);
        assert_eq!(b.residue(), 5);
        assert_eq!((a + b).residue(), 1);
        assert_eq!((a * b).residue(), 1);
        assert_eq!((a - b).residue(), 5);
        assert_eq!(a.inv().unwrap() * a, Fp::new(1, p));
        assert!(Fp::new(0, p).inv().is_none());
    }
}
