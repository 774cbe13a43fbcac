//! Threshold invariants feeding the singularity route to stability.
//!
//! Weighted multiplicities give only *upper* bounds for the log canonical
//! threshold; the verdict rule [`lee_verdict`] needs a certified *lower*
//! bound, which callers supply (smoothness gives 1, an F-pure threshold
//! interval gives its lower end, a monomial gives its closed form).

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::{Domain, Poly};
use crate::{Error, Rational, Result};

/// Non-negative weights `w(x_1), …, w(x_n)` on affine variables, not all zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightAssignment(Vec<u64>);

impl WeightAssignment {
    pub fn new(w: Vec<u64>) -> Result<Self> {
        if w.iter().all(|&x| x == 0) {
            return Err(Error::InvalidWeights("weight assignment is zero".into()));
        }
        Ok(WeightAssignment(w))
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl std::str::FromStr for WeightAssignment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let w = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidArgument(format!("bad weight `{}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(w)
    }
}

/// A rational number or `+∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    Finite(Rational),
    Infinite,
}

impl Bound {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Bound::Finite(q) => Some(q),
            Bound::Infinite => None,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(q) => write!(f, "{q}"),
            Bound::Infinite => write!(f, "inf"),
        }
    }
}

fn ratio(a: u64, b: u64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

fn check_weights(f: &Poly, w: &WeightAssignment) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if w.entries().len() != f.nvars() {
        return Err(Error::LengthMismatch {
            expected: f.nvars(),
            got: w.entries().len(),
        });
    }
    Ok(())
}

/// `Σ w(x_i) / w(f)`, an upper bound for `lct_0(𝔸^n, div f)`; `+∞` when
/// `w(f) = 0`.
pub fn lct_upper_bound(f: &Poly, w: &WeightAssignment) -> Result<Bound> {
    check_weights(f, w)?;
    let wf = f.weighted_multiplicity(w.entries())?;
    if wf == 0 {
        Ok(Bound::Infinite)
    } else {
        Ok(Bound::Finite(ratio(w.total(), wf)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LctOptimum {
    pub best_bound: Rational,
    pub best_w: WeightAssignment,
}

impl LctOptimum {
    pub fn interval(&self) -> ThresholdInterval {
        ThresholdInterval {
            lower: Rational::zero(),
            upper: Bound::Finite(self.best_bound.clone()),
            kind: ThresholdKind::LctUpperBoundOnly,
            provenance: Provenance::Weights(self.best_w.clone()),
        }
    }
}

/// Minimum of [`lct_upper_bound`] over primitive weight vectors in
/// `[0, max_weight]^n`; ties go to the lexicographically smallest weight.
pub fn lct_bound_optimize(f: &Poly, max_weight: u64) -> Result<LctOptimum> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.constant_term().is_zero() {
        return Err(Error::NonVanishingAtOrigin);
    }
    if max_weight == 0 {
        return Err(Error::InvalidArgument("max_weight must be at least 1".into()));
    }
    let n = f.nvars();
    let mut w = vec![0u64; n];
    let mut best: Option<LctOptimum> = None;
    // odometer over [0, max_weight]^n in lexicographic order
    loop {
        let mut i = n;
        loop {
            if i == 0 {
                return best.ok_or(Error::NonVanishingAtOrigin);
            }
            i -= 1;
            if w[i] < max_weight {
                w[i] += 1;
                w[i + 1..].iter_mut().for_each(|x| *x = 0);
                break;
            }
        }
        let g = w.iter().fold(0u64, |g, &x| g.gcd(&x));
        if g != 1 {
            continue;
        }
        let wa = WeightAssignment(w.clone());
        if let Bound::Finite(b) = lct_upper_bound(f, &wa)? {
            if best.as_ref().is_none_or(|cur| b < cur.best_bound) {
                best = Some(LctOptimum {
                    best_bound: b,
                    best_w: wa,
                });
            }
        }
    }
}

/// `−1 + Σ w(x_i) − c·w(f)`.
pub fn blowup_discrepancy(f: &Poly, w: &WeightAssignment, c: &Rational) -> Result<Rational> {
    check_weights(f, w)?;
    if c < &Rational::zero() {
        return Err(Error::InvalidArgument("coefficient must be non-negative".into()));
    }
    let wf = f.weighted_multiplicity(w.entries())?;
    Ok(Rational::from_integer(BigInt::from(w.total() as i64 - 1)) - c * Rational::from_integer(BigInt::from(wf)))
}

/// Size limits for Frobenius-power computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FptLimits {
    pub max_power: u64,
    pub max_vars: usize,
}

impl Default for FptLimits {
    fn default() -> Self {
        FptLimits {
            max_power: 1 << 16,
            max_vars: 4,
        }
    }
}

pub fn fpt_nu(f: &Poly, e: u32) -> Result<u64> {
    fpt_nu_with_limits(f, e, FptLimits::default())
}

/// `ν(p^e) = max{N : f^N ∉ (x_1^{p^e}, …, x_n^{p^e})}`.
///
/// Computes `f^N` incrementally, discarding monomials with some exponent
/// `≥ p^e`; those never come back under further multiplication.
pub fn fpt_nu_with_limits(f: &Poly, e: u32, limits: FptLimits) -> Result<u64> {
    let Domain::Prime(p) = f.domain() else {
        return Err(Error::DomainMismatch {
            left: f.domain().to_string(),
            right: "fp".into(),
        });
    };
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.constant_term().is_zero() {
        return Err(Error::NonVanishingAtOrigin);
    }
    if e == 0 {
        return Err(Error::InvalidArgument("e must be positive".into()));
    }
    if f.nvars() > limits.max_vars {
        return Err(Error::SizeLimit(format!(
            "{} variables exceeds {}",
            f.nvars(),
            limits.max_vars
        )));
    }
    let q = p
        .get()
        .checked_pow(e)
        .filter(|&q| q <= limits.max_power)
        .ok_or_else(|| Error::SizeLimit(format!("{}^{e} exceeds {}", p.get(), limits.max_power)))?;
    let modulus = p.get();
    let terms: Vec<(Vec<u32>, u64)> = f
        .terms()
        .map(|(ex, c)| (ex.entries().to_vec(), c.to_integer().to_u64().expect("reduced")))
        .collect();
    let mut current: HashMap<Vec<u32>, u64> = HashMap::from([(vec![0; f.nvars()], 1)]);
    let mut nu = 0;
    loop {
        let mut next: HashMap<Vec<u32>, u64> = HashMap::with_capacity(current.len() * terms.len());
        for (ea, ca) in &current {
            'term: for (eb, cb) in &terms {
                let mut ex = Vec::with_capacity(ea.len());
                for (a, b) in ea.iter().zip(eb) {
                    let s = a + b;
                    if s as u64 >= q {
                        continue 'term;
                    }
                    ex.push(s);
                }
                let slot = next.entry(ex).or_insert(0);
                *slot = ((*slot as u128 + *ca as u128 * *cb as u128) % modulus as u128) as u64;
            }
        }
        next.retain(|_, c| *c != 0);
        if next.is_empty() {
            return Ok(nu);
        }
        nu += 1;
        current = next;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdKind {
    LctUpperBoundOnly,
    FptInterval,
}

impl ThresholdKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ThresholdKind::LctUpperBoundOnly => "lct_upper_bound_only",
            ThresholdKind::FptInterval => "fpt_interval",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Weights(WeightAssignment),
    /// `(e, ν(p^e))` for `e = 1..=e_max`.
    FrobeniusPowers(Vec<(u32, u64)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdInterval {
    pub lower: Rational,
    pub upper: Bound,
    pub kind: ThresholdKind,
    pub provenance: Provenance,
}

impl ThresholdInterval {
    pub fn contains(&self, x: &Rational) -> bool {
        x >= &self.lower
            && match &self.upper {
                Bound::Finite(u) => x <= u,
                Bound::Infinite => true,
            }
    }
}

/// `ν(p^e)/p^e ≤ fpt_0(f) ≤ (ν(p^e)+1)/p^e` at `e = e_max`.
pub fn fpt_interval(f: &Poly, e_max: u32) -> Result<ThresholdInterval> {
    if e_max == 0 {
        return Err(Error::InvalidArgument("e_max must be positive".into()));
    }
    let p = f.domain().characteristic();
    let mut pairs = Vec::with_capacity(e_max as usize);
    let mut prev: Option<(Rational, Rational)> = None;
    for e in 1..=e_max {
        let nu = fpt_nu(f, e)?;
        let q = p.pow(e);
        let lo = ratio(nu, q);
        let hi = ratio(nu + 1, q);
        if let Some((plo, phi)) = &prev {
            // nested Frobenius data: ν(p^{e+1}) ≥ p·ν(p^e)
            debug_assert!(lo >= *plo && lo <= *phi, "fpt intervals must intersect");
        }
        pairs.push((e, nu));
        prev = Some((lo, hi));
    }
    let (lower, upper) = prev.expect("e_max >= 1");
    Ok(ThresholdInterval {
        lower,
        upper: Bound::Finite(upper),
        kind: ThresholdKind::FptInterval,
        provenance: Provenance::FrobeniusPowers(pairs),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    LctLower,
    FptLower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeeOutcome {
    Stable,
    Semistable,
    Inconclusive,
}

impl LeeOutcome {
    pub fn as_str(&self) -> &'static str {
        match self {
            LeeOutcome::Stable => "stable",
            LeeOutcome::Semistable => "semistable",
            LeeOutcome::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeeVerdict {
    pub outcome: LeeOutcome,
    /// `(n+1)/d`.
    pub threshold: Rational,
    /// The bound sits exactly on the threshold.
    pub boundary: bool,
    pub kind: BoundKind,
}

/// Stable if `bound > (n+1)/d`, semistable if equal, inconclusive
/// otherwise. The rule is one-directional and never reports instability.
///
/// `bound` must be a certified lower bound for the global threshold of the
/// Chow divisor; an F-pure threshold lower bound is accepted as is since
/// F-purity implies log canonicity.
pub fn lee_verdict(n: i64, d: i64, bound: &Rational, kind: BoundKind) -> Result<LeeVerdict> {
    if n <= 0 || d <= 0 {
        return Err(Error::InvalidArgument(format!("need n > 0 and d > 0, got n = {n}, d = {d}")));
    }
    let threshold = Rational::new(BigInt::from(n + 1), BigInt::from(d));
    let outcome = match bound.cmp(&threshold) {
        std::cmp::Ordering::Greater => LeeOutcome::Stable,
        std::cmp::Ordering::Equal => LeeOutcome::Semistable,
        std::cmp::Ordering::Less => LeeOutcome::Inconclusive,
    };
    Ok(LeeVerdict {
        boundary: outcome == LeeOutcome::Semistable,
        outcome,
        threshold,
        kind,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn aff(s: &str, n: usize) -> Poly {
        Poly::parse(s, n, Domain::Rational).unwrap()
    }

    fn fp(s: &str, n: usize, p: u64) -> Poly {
        Poly::parse(s, n, Domain::prime(p).unwrap()).unwrap()
    }

    fn wa(v: &[u64]) -> WeightAssignment {
        WeightAssignment::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lct_bound_examples() {
        for a in 1..6 {
            let f = aff(&format!("x0^{a}"), 1);
            assert_eq!(lct_upper_bound(&f, &wa(&[1])).unwrap(), Bound::Finite(q(1, a)));
        }
        let cusp = aff("x0^2 + x1^3", 2);
        assert_eq!(lct_upper_bound(&cusp, &wa(&[3, 2])).unwrap(), Bound::Finite(q(5, 6)));
        assert_eq!(lct_upper_bound(&cusp, &wa(&[1, 1])).unwrap(), Bound::Finite(q(1, 1)));
        assert_eq!(
            lct_upper_bound(&aff("1 + x0", 1), &wa(&[1])).unwrap(),
            Bound::Infinite
        );
        assert!(WeightAssignment::new(vec![0, 0]).is_err());
        assert_eq!(
            lct_upper_bound(&Poly::zero(1, Domain::Rational), &wa(&[1])),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn optimize_examples() {
        let best = lct_bound_optimize(&aff("x0^2 + x1^3", 2), 6).unwrap();
        assert_eq!(best.best_bound, q(5, 6));
        assert_eq!(best.best_w, wa(&[3, 2]));
        let best = lct_bound_optimize(&aff("x0*x1", 2), 3).unwrap();
        assert_eq!(best.best_bound, q(1, 1));
        assert_eq!(best.best_w, wa(&[0, 1]));
        for m in 1..5 {
            assert_eq!(lct_bound_optimize(&aff("x0", 1), m).unwrap().best_bound, q(1, 1));
        }
        assert_eq!(
            lct_bound_optimize(&aff("x0 + 1", 1), 3),
            Err(Error::NonVanishingAtOrigin)
        );
    }

    #[test]
    fn discrepancy_examples() {
        let cusp = aff("x0^2 + x1^3", 2);
        let w = wa(&[3, 2]);
        assert_eq!(blowup_discrepancy(&cusp, &w, &q(5, 6)).unwrap(), q(-1, 1));
        assert_eq!(blowup_discrepancy(&cusp, &w, &q(0, 1)).unwrap(), q(4, 1));
        assert_eq!(blowup_discrepancy(&cusp, &w, &q(1, 1)).unwrap(), q(-2, 1));
    }

    /// ν by full expansion of f^N, independent of the truncated product.
    fn nu_by_expansion(f: &Poly, e: u32) -> u64 {
        let q = f.domain().characteristic().pow(e);
        let mut n = 0;
        loop {
            let g = f.pow(n + 1);
            if !g.terms().any(|(ex, _)| ex.entries().iter().all(|&a| (a as u64) < q)) {
                return n;
            }
            n += 1;
        }
    }

    #[test]
    fn fpt_nu_examples() {
        for p in [2u64, 3, 5] {
            for e in 1..4 {
                assert_eq!(fpt_nu(&fp("x0", 1, p), e).unwrap(), p.pow(e) - 1);
            }
        }
        assert_eq!(fpt_nu(&fp("x0^2", 1, 3), 2).unwrap(), 4);
        let cusp = fp("x0^2 + x1^3", 2, 5);
        let nu1 = fpt_nu(&cusp, 1).unwrap();
        let nu2 = fpt_nu(&cusp, 2).unwrap();
        assert_eq!(nu1, nu_by_expansion(&cusp, 1));
        assert_eq!(nu2, nu_by_expansion(&cusp, 2));
        assert!(nu2 >= 5 * nu1);
        // intervals nest and share a point
        let (lo1, hi1) = (q(nu1 as i64, 5), q(nu1 as i64 + 1, 5));
        let (lo2, hi2) = (q(nu2 as i64, 25), q(nu2 as i64 + 1, 25));
        assert!(lo2 >= lo1 && hi2 <= hi1 && lo2 <= hi2);
    }

    #[test]
    fn fpt_nu_errors() {
        assert_eq!(fpt_nu(&fp("x0 + 1", 1, 3), 1), Err(Error::NonVanishingAtOrigin));
        assert!(matches!(fpt_nu(&fp("x0", 1, 2), 17), Err(Error::SizeLimit(_))));
        assert!(matches!(fpt_nu(&aff("x0", 1), 1), Err(Error::DomainMismatch { .. })));
        assert!(matches!(
            fpt_nu(&fp("x0*x1*x2*x3*x4", 5, 2), 1),
            Err(Error::SizeLimit(_))
        ));
    }

    #[test]
    fn fpt_interval_examples() {
        let i = fpt_interval(&fp("x0^2", 1, 3), 2).unwrap();
        assert_eq!((i.lower.clone(), i.upper.clone()), (q(4, 9), Bound::Finite(q(5, 9))));
        assert!(i.contains(&q(1, 2)));
        assert_eq!(i.provenance, Provenance::FrobeniusPowers(vec![(1, 1), (2, 4)]));

        let i = fpt_interval(&fp("x0", 1, 2), 3).unwrap();
        assert_eq!((i.lower, i.upper), (q(7, 8), Bound::Finite(q(1, 1))));

        let i = fpt_interval(&fp("x0*x1", 2, 2), 2).unwrap();
        assert_eq!((i.lower.clone(), i.upper.clone()), (q(3, 4), Bound::Finite(q(1, 1))));
        assert!(i.contains(&q(1, 1)));
    }

    #[test]
    fn lee_verdict_examples() {
        let v = lee_verdict(2, 4, &q(1, 1), BoundKind::LctLower).unwrap();
        assert_eq!(v.outcome, LeeOutcome::Stable);
        let v = lee_verdict(3, 6, &q(1, 2), BoundKind::LctLower).unwrap();
        assert_eq!(v.outcome, LeeOutcome::Inconclusive);
        let v = lee_verdict(2, 3, &q(1, 1), BoundKind::LctLower).unwrap();
        assert_eq!(v.outcome, LeeOutcome::Semistable);
        assert!(v.boundary);
        assert!(lee_verdict(0, 3, &q(1, 1), BoundKind::LctLower).is_err());
        assert!(lee_verdict(2, 0, &q(1, 1), BoundKind::FptLower).is_err());
    }
}
