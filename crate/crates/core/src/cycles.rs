//! Chow-form operations on cycles: sums, multiples and support-preserving
//! lifts from `F_p` to ℤ.
//!
//! The Chow form of `Y + Z` is the product of the forms and that of `m·Z` is
//! the `m`-th power. Over an integral domain the lowest-weight parts of a
//! product multiply without cancellation, so `μ` is additive on sums and
//! homogeneous on multiples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Domain, Poly};
use crate::stability::{mu_hypersurface, WeightVector};
use crate::{Error, Result};

fn nonzero_form(f: &Poly) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    Ok(())
}

/// Chow form of `Y + Z` from the forms of `Y` and `Z`.
pub fn sum_cycles(f: &Poly, g: &Poly) -> Result<Poly> {
    nonzero_form(f)?;
    nonzero_form(g)?;
    f.try_mul(g)
}

/// Chow form of `m·Z`.
pub fn multiple_cycle(f: &Poly, m: u64) -> Result<Poly> {
    if m == 0 {
        return Err(Error::InvalidArgument("multiplicity must be positive".into()));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f.pow(m))
}

/// Integer polynomial with the same support: each residue `c ∈ [1, p−1]`
/// is taken as its own representative.
pub fn lift_support(f: &Poly) -> Result<Poly> {
    if !matches!(f.domain(), Domain::Prime(_)) {
        return Err(Error::DomainMismatch {
            left: f.domain().to_string(),
            right: "fp".into(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lifted = f.with_domain(Domain::Integer)?;
    debug_assert_eq!(lifted.support(), f.support());
    Ok(lifted)
}

/// Outcome of comparing `μ` before and after a support-preserving lift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftReport {
    pub support_preserved: bool,
    pub sampled_weights: Vec<WeightVector>,
    /// `(μ over F_p, μ of the ℤ lift)` per sampled weight.
    pub mu_pairs: Vec<(i64, i64)>,
    pub all_equal: bool,
}

/// Uniform weight vector with entries in `[-bound, bound]` and zero sum.
pub fn random_weight(nvars: usize, bound: i64, rng: &mut impl Rng) -> WeightVector {
    assert!(nvars >= 2 && bound >= 1);
    loop {
        let mut v: Vec<i64> = (0..nvars - 1).map(|_| rng.gen_range(-bound..=bound)).collect();
        let last = -v.iter().sum::<i64>();
        if last.abs() > bound {
            continue;
        }
        v.push(last);
        if let Ok(r) = WeightVector::new(v) {
            return r;
        }
    }
}

/// Samples `samples` seeded weights in `[-5, 5]` and compares `μ(F)` with
/// `μ(lift_support(F))`.
pub fn transfer_check(f: &Poly, samples: usize, seed: u64) -> Result<LiftReport> {
    let lifted = lift_support(f)?;
    nonzero_form(f)?;
    if f.nvars() < 2 {
        return Err(Error::InvalidArgument("need at least two variables".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sampled_weights: Vec<WeightVector> =
        (0..samples).map(|_| random_weight(f.nvars(), 5, &mut rng)).collect();
    let mu_pairs = sampled_weights
        .iter()
        .map(|r| Ok((mu_hypersurface(f, r)?, mu_hypersurface(&lifted, r)?)))
        .collect::<Result<Vec<_>>>()?;
    let all_equal = mu_pairs.iter().all(|(a, b)| a == b);
    Ok(LiftReport {
        support_preserved: lifted.support() == f.support(),
        sampled_weights,
        mu_pairs,
        all_equal,
    })
}

/// `reduce_mod_p ∘ lift_support` as a predicate; used in checks.
pub fn lift_round_trips(f: &Poly) -> Result<bool> {
    let Domain::Prime(p) = f.domain() else {
        return Ok(false);
    };
    Ok(lift_support(f)?.reduce_mod_p(p)? == *f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stability::{torus_certificate, Verdict};

    fn fp(s: &str, n: usize, p: u64) -> Poly {
        Poly::parse(s, n, Domain::prime(p).unwrap()).unwrap()
    }

    fn q(s: &str, n: usize) -> Poly {
        Poly::parse(s, n, Domain::Rational).unwrap()
    }

    #[test]
    fn three_lines_make_the_triangle() {
        let tri = sum_cycles(&sum_cycles(&q("x0", 3), &q("x1", 3)).unwrap(), &q("x2", 3)).unwrap();
        assert_eq!(tri, q("x0*x1*x2", 3));
        assert_eq!(
            torus_certificate(&tri).unwrap().verdict,
            Verdict::StrictlySemistableTorus
        );
        for i in 0..3 {
            let line = Poly::var(3, Domain::Rational, i).unwrap();
            assert_eq!(torus_certificate(&line).unwrap().verdict, Verdict::UnstableWitness);
        }
    }

    #[test]
    fn sum_with_a_monomial_translates_support() {
        let f = q("x0^2 + x1*x2", 3);
        let g = sum_cycles(&f, &q("x2", 3)).unwrap();
        assert_eq!(g, q("x0^2*x2 + x1*x2^2", 3));
    }

    #[test]
    fn sum_rejects_bad_inputs() {
        assert_eq!(
            sum_cycles(&q("x0", 2), &Poly::zero(2, Domain::Rational)),
            Err(Error::ZeroPolynomial)
        );
        assert!(matches!(
            sum_cycles(&q("x0", 2), &fp("x0", 2, 3)),
            Err(Error::DomainMismatch { .. })
        ));
    }

    #[test]
    fn multiples() {
        let f = q("x0 + x1", 2);
        assert_eq!(multiple_cycle(&f, 1).unwrap(), f);
        assert_eq!(multiple_cycle(&f, 2).unwrap(), sum_cycles(&f, &f).unwrap());
        assert_eq!(multiple_cycle(&fp("x0 + x1", 2, 2), 2).unwrap(), fp("x0^2 + x1^2", 2, 2));
        assert!(multiple_cycle(&f, 0).is_err());
    }

    #[test]
    fn lifts_keep_support() {
        let f = fp("x0^3 + 2*x1^3", 2, 3);
        let l = lift_support(&f).unwrap();
        assert_eq!(l.domain(), Domain::Integer);
        assert_eq!(l, Poly::parse("x0^3 + 2*x1^3", 2, Domain::Integer).unwrap());
        assert!(lift_round_trips(&f).unwrap());
        let g = fp("x0*x1 + x2*x3", 4, 2);
        assert_eq!(lift_support(&g).unwrap().to_string(), "x0*x1 + x2*x3");
        assert!(lift_support(&Poly::zero(2, Domain::prime(5).unwrap())).is_err());
        assert!(lift_support(&q("x0", 1)).is_err());
    }

    #[test]
    fn transfer_reports_agree() {
        let f = fp("x0^2 + x1^2", 2, 2);
        let rep = transfer_check(&f, 100, 3).unwrap();
        assert!(rep.support_preserved && rep.all_equal);
        assert_eq!(rep.mu_pairs.len(), 100);
        // the ℤ-square of the lift keeps the cross term, the F_2 square does not;
        // powers are therefore never lifted, only F itself
        let lifted_sq = lift_support(&f).unwrap().pow(2);
        assert_eq!(lifted_sq.len(), 3);
        assert_eq!(f.pow(2).len(), 2);
    }
}
