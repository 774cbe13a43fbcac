#![allow(dead_code)]

use chowstab::algebra::{Domain, Exponent, Poly};
use chowstab::stability::WeightVector;
use chowstab::Rational;
use rand::Rng;

/// Random homogeneous form with nonzero integer coefficients in [-9, 9].
pub fn random_form(rng: &mut impl Rng, nvars: usize, degree: u32, max_terms: usize, domain: Domain) -> Poly {
    loop {
        let terms: Vec<(Vec<u32>, Rational)> = (0..rng.gen_range(1..=max_terms))
            .map(|_| {
                let mut e = vec![0u32; nvars];
                for _ in 0..degree {
                    e[rng.gen_range(0..nvars)] += 1;
                }
                let mut c = 0i64;
                while c == 0 {
                    c = rng.gen_range(-9..=9);
                }
                (e, Rational::from_integer(c.into()))
            })
            .collect();
        let f = Poly::from_terms(nvars, domain, terms).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

/// `μ` via the one-parameter subgroup itself: substitute
/// `X_i ↦ T^{r_i + s} X_i` in a ring with an extra variable `T` and read off
/// the lowest power of `T`, minus the shift `s·d`.
pub fn mu_by_substitution(f: &Poly, r: &WeightVector) -> i64 {
    let n = f.nvars();
    let s = -r.entries().iter().copied().min().unwrap();
    let d = f.homogeneous_degree().unwrap() as i64;
    let big = n + 1;
    let mut acc = Poly::zero(big, f.domain());
    for (e, c) in f.terms() {
        let mut term = Poly::constant(big, f.domain(), c).unwrap();
        for (i, &a) in e.entries().iter().enumerate() {
            let mut ex = vec![0u32; big];
            ex[i] = 1;
            ex[n] = (r.entries()[i] + s) as u32;
            let factor = Poly::from_terms(big, f.domain(), [(Exponent::new(ex), Rational::from_integer(1.into()))]).unwrap();
            term = term.try_mul(&factor.pow(a as u64)).unwrap();
        }
        acc = acc.try_add(&term).unwrap();
    }
    let lowest = acc.terms().map(|(e, _)| e.entries()[n] as i64).min().unwrap();
    lowest - s * d
}
