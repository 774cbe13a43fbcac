use crate::algebra::Prime;
use crate::{Error, Result};

/// Largest field size for which log tables are built.
const MAX_FIELD_SIZE: u64 = 1 << 16;

/// `F_{p^e}` as `F_p[t]/(m(t))`, with `m` the first monic irreducible of
/// degree `e` when the lower coefficients `(c_0, …, c_{e−1})` are ordered by
/// the integer `Σ c_i p^i`.
///
/// Elements are encoded as that same integer (base-`p` digits, `t^0` first),
/// so `0` and `1` are the field's zero and one and `F_p ⊂ F_{p^e}` is
/// `0..p`. Multiplication goes through discrete-log tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisField {
    p: u64,
    e: u32,
    q: u64,
    modulus: Vec<u64>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

fn digits(mut x: u64, p: u64, e: u32) -> Vec<u64> {
    (0..e)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(v: &[u64], p: u64) -> u64 {
    v.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    crate::algebra::Fp::new(a as i64, Prime::new(p).expect("prime"))
        .inv()
        .expect("nonzero")
        .residue()
}

/// Remainder of `a` modulo `b` over `F_p`.
fn poly_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let b = trim(b.to_vec());
    let lead_inv = inv_mod(*b.last().expect("nonzero"), p);
    a = trim(a);
    while a.len() >= b.len() {
        let c = a.last().unwrap() * lead_inv % p;
        let shift = a.len() - b.len();
        for (i, &bi) in b.iter().enumerate() {
            a[shift + i] = (a[shift + i] + p - c * bi % p) % p;
        }
        a = trim(a);
    }
    a
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_rem(out, m, p)
}

fn poly_powmod(base: &[u64], mut k: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(base.to_vec(), m, p);
    while k > 0 {
        if k & 1 == 1 {
            acc = poly_mulmod(&acc, &b, m, p);
        }
        k >>= 1;
        if k > 0 {
            b = poly_mulmod(&b, &b, m, p);
        }
    }
    poly_rem(acc, m, p)
}

fn poly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    a = trim(a);
    b = trim(b);
    while !b.is_empty() {
        let r = poly_rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test for a monic `m` of degree `e ≥ 1`.
fn is_irreducible(m: &[u64], p: u64, e: u32) -> bool {
    let x = vec![0, 1];
    let frob = |k: u32| poly_powmod(&x, p.pow(k), m, p);
    let minus_x = |mut v: Vec<u64>| {
        v.resize(v.len().max(2), 0);
        v[1] = (v[1] + p - 1) % p;
        trim(v)
    };
    if !poly_rem(minus_x(frob(e)), m, p).is_empty() {
        return false;
    }
    prime_factors(e as u64).into_iter().all(|r| {
        let g = poly_gcd(m.to_vec(), minus_x(frob(e / r as u32)), p);
        g.len() == 1
    })
}

impl GaloisField {
    pub fn new(p: Prime, e: u32) -> Result<Self> {
        let p = p.get();
        if e == 0 {
            return Err(Error::InvalidArgument("extension degree must be positive".into()));
        }
        let q = p
            .checked_pow(e)
            .filter(|&q| q <= MAX_FIELD_SIZE)
            .ok_or_else(|| Error::SizeLimit(format!("field of size {p}^{e} above {MAX_FIELD_SIZE}")))?;
        let modulus = (0..q)
            .map(|k| {
                let mut m = digits(k, p, e);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p, e))
            .expect("irreducible polynomials exist in every degree");
        let factors = prime_factors(q - 1);
        let generator = (1..q)
            .map(|g| digits(g, p, e))
            .find(|g| {
                factors
                    .iter()
                    .all(|&r| poly_powmod(g, (q - 1) / r, &modulus, p) != vec![1])
            })
            .expect("multiplicative group is cyclic");
        let mut exp = vec![0u32; 2 * (q as usize - 1).max(1)];
        let mut log = vec![0u32; q as usize];
        let order = q as usize - 1;
        let mut cur = vec![1u64];
        for (i, slot) in exp[..order].iter_mut().enumerate() {
            let idx = undigits(&cur, p) as u32;
            *slot = idx;
            log[idx as usize] = i as u32;
            cur = poly_mulmod(&cur, &generator, &modulus, p);
        }
        exp.copy_within(0..order, order);
        Ok(GaloisField {
            p,
            e,
            q,
            modulus,
            exp,
            log,
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn size(&self) -> u64 {
        self.q
    }

    /// Coefficients of the defining polynomial, `t^0` first, monic.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            return ((a as u64 + b as u64) % self.p) as u32;
        }
        let (mut a, mut b) = (a as u64, b as u64);
        let (mut out, mut place) = (0u64, 1u64);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        let d: Vec<u64> = digits(a as u64, self.p, self.e)
            .into_iter()
            .map(|x| (self.p - x) % self.p)
            .collect();
        undigits(&d, self.p) as u32
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[self.log[a as usize] as usize + self.log[b as usize] as usize]
    }

    pub fn pow(&self, a: u32, k: u64) -> u32 {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = (self.log[a as usize] as u128 * k as u128 % (self.q - 1) as u128) as usize;
        self.exp[l]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| {
            let l = self.log[a as usize] as u64;
            self.exp[((self.q - 1 - l) % (self.q - 1)) as usize]
        })
    }

    /// The image of a residue of `F_p`.
    pub fn from_residue(&self, c: u64) -> u32 {
        (c % self.p) as u32
    }

    /// Whether `a` lies in the subfield `F_{p^k}`, i.e. `a^{p^k} = a`.
    pub fn in_subfield(&self, a: u32, k: u32) -> bool {
        self.pow(a, self.p.pow(k)) == a
    }

    /// Renders an element as a polynomial in `t`, e.g. `t^2 + 2*t + 1`.
    pub fn format(&self, a: u32) -> String {
        if self.e == 1 {
            return a.to_string();
        }
        let d = digits(a as u64, self.p, self.e);
        let parts: Vec<String> = d
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".into(),
                (1, c) => format!("{c}*t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}*t^{i}"),
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64, e: u32) -> GaloisField {
        GaloisField::new(Prime::new(p).unwrap(), e).unwrap()
    }

    #[test]
    fn first_irreducibles() {
        assert_eq!(field(2, 2).modulus(), &[1, 1, 1]);
        assert_eq!(field(2, 3).modulus(), &[1, 1, 0, 1]);
        assert_eq!(field(3, 2).modulus(), &[1, 0, 1]);
        assert_eq!(field(5, 1).modulus(), &[0, 1]);
    }

    #[test]
    fn rabin_agrees_with_root_search_in_degree_two_and_three() {
        for p in [2u64, 3, 5, 7] {
            for e in [2u32, 3] {
                for k in 0..p.pow(e) {
                    let mut m = digits(k, p, e);
                    m.push(1);
                    // degree ≤ 3: irreducible iff no root in F_p
                    let has_root = (0..p).any(|x| {
                        m.iter().rev().fold(0, |acc, &c| (acc * x + c) % p) == 0
                    });
                    assert_eq!(is_irreducible(&m, p, e), !has_root, "p={p} m={m:?}");
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, e) in [(2, 1), (2, 3), (3, 2), (5, 1), (2, 4)] {
            let f = field(p, e);
            let q = f.size() as u32;
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                assert_eq!(f.pow(a, f.size()), a);
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in [0, 1, q - 1] {
                        let lhs = f.mul(a, f.add(b, c));
                        assert_eq!(lhs, f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn subfields() {
        let f = field(2, 4);
        let in_f4 = (0..16).filter(|&a| f.in_subfield(a, 2)).count();
        assert_eq!(in_f4, 4);
        assert!((0..2).all(|a| f.in_subfield(a, 1)));
        assert_eq!(f.format(0b1011), "t^3 + t + 1");
        assert!(GaloisField::new(Prime::new(2).unwrap(), 17).is_err());
    }
}
