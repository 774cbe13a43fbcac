use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Domain, Exponent, Matrix, Prime};
use crate::{Error, Rational, Result};

/// Sparse multivariate polynomial over ℤ, ℚ or `F_p`.
///
/// Zero coefficients are never stored and every exponent has length
/// `nvars`. The value is immutable once built; all operations return new
/// polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    domain: Domain,
    terms: BTreeMap<Exponent, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize, domain: Domain) -> Self {
        Poly {
            nvars,
            domain,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, domain: Domain, c: &Rational) -> Result<Self> {
        Self::from_terms(nvars, domain, [(vec![0; nvars], c.clone())])
    }

    pub fn one(nvars: usize, domain: Domain) -> Self {
        Self::monomial_unchecked(nvars, domain, Exponent::zero(nvars), Rational::one())
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, domain: Domain, i: usize) -> Result<Self> {
        if i >= nvars {
            return Err(Error::VariableOutOfRange { index: i, nvars });
        }
        Ok(Self::monomial_unchecked(
            nvars,
            domain,
            Exponent::unit(nvars, i),
            Rational::one(),
        ))
    }

    fn monomial_unchecked(nvars: usize, domain: Domain, e: Exponent, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        let c = domain.normalize(c);
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Poly {
            nvars,
            domain,
            terms,
        }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, reducing
    /// coefficients into `domain` and merging repeated exponents.
    pub fn from_terms<I, E>(nvars: usize, domain: Domain, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (E, Rational)>,
        E: Into<Exponent>,
    {
        let mut acc: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (e, c) in terms {
            let e = e.into();
            if e.len() != nvars {
                return Err(Error::LengthMismatch {
                    expected: nvars,
                    got: e.len(),
                });
            }
            let c = domain.reduce(&c)?;
            *acc.entry(e).or_insert_with(Rational::zero) += c;
        }
        Ok(Self::from_map(nvars, domain, acc))
    }

    /// Convenience constructor with integer coefficients.
    pub fn from_int_terms(nvars: usize, domain: Domain, terms: &[(&[u32], i64)]) -> Result<Self> {
        Self::from_terms(
            nvars,
            domain,
            terms
                .iter()
                .map(|(e, c)| (e.to_vec(), Rational::from_integer(BigInt::from(*c)))),
        )
    }

    fn from_map(nvars: usize, domain: Domain, raw: BTreeMap<Exponent, Rational>) -> Self {
        let terms = raw
            .into_iter()
            .filter_map(|(e, c)| {
                let c = domain.normalize(c);
                (!c.is_zero()).then_some((e, c))
            })
            .collect();
        Poly {
            nvars,
            domain,
            terms,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, e: &Exponent) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Exponent, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Exponent::zero(self.nvars))
    }

    /// The value of a constant polynomial, `None` if any variable occurs.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.leading_term()?;
                e.is_constant().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Exponent::degree).max()
    }

    /// Common degree of all terms, `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut degrees = self.terms.keys().map(Exponent::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    pub fn support(&self) -> BTreeSet<Exponent> {
        self.terms.keys().cloned().collect()
    }

    fn check_compatible(&self, other: &Poly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        if self.domain != other.domain {
            return Err(Error::DomainMismatch {
                left: self.domain.to_string(),
                right: other.domain.to_string(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_compatible(other)?;
        let mut acc = self.terms.clone();
        for (e, c) in &other.terms {
            *acc.entry(e.clone()).or_insert_with(Rational::zero) += c;
        }
        Ok(Self::from_map(self.nvars, self.domain, acc))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        self.scale_raw(&-Rational::one())
    }

    fn scale_raw(&self, c: &Rational) -> Poly {
        let map = self
            .terms
            .iter()
            .map(|(e, a)| (e.clone(), a * c))
            .collect();
        Self::from_map(self.nvars, self.domain, map)
    }

    /// Multiplication by a scalar, reduced into the domain first.
    pub fn scale(&self, c: &Rational) -> Result<Poly> {
        let c = self.domain.reduce(c)?;
        Ok(self.scale_raw(&c))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Poly) -> Poly {
        let mut acc: HashMap<Exponent, Rational> = HashMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                *acc.entry(ea.add(eb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Self::from_map(self.nvars, self.domain, acc.into_iter().collect())
    }

    /// `self^m` by binary powering.
    pub fn pow(&self, mut m: u64) -> Poly {
        let mut acc = Poly::one(self.nvars, self.domain);
        let mut base = self.clone();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            m >>= 1;
            if m > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// `∂/∂x_i`, with the exponent factor taken in the coefficient domain.
    pub fn partial_derivative(&self, i: usize) -> Result<Poly> {
        if i >= self.nvars {
            return Err(Error::VariableOutOfRange {
                index: i,
                nvars: self.nvars,
            });
        }
        let map = self
            .terms
            .iter()
            .filter(|(e, _)| e.entries()[i] > 0)
            .map(|(e, c)| {
                let mut v = e.entries().to_vec();
                let a = v[i];
                v[i] -= 1;
                (Exponent::new(v), c * Rational::from_integer(BigInt::from(a)))
            })
            .collect();
        Ok(Self::from_map(self.nvars, self.domain, map))
    }

    /// `d·F − Σ X_i ∂F/∂X_i`, which vanishes for every homogeneous `F`.
    pub fn euler_residual(&self) -> Result<Poly> {
        let d = self.homogeneous_degree().ok_or(if self.is_zero() {
            Error::ZeroPolynomial
        } else {
            Error::NotHomogeneous
        })?;
        let mut residual = self.scale(&Rational::from_integer(BigInt::from(d)))?;
        for i in 0..self.nvars {
            let xi = Poly::var(self.nvars, self.domain, i)?;
            residual = residual.try_sub(&xi.mul_unchecked(&self.partial_derivative(i)?))?;
        }
        Ok(residual)
    }

    /// Coefficient-wise reduction of a ℤ or ℚ polynomial into `F_p`.
    pub fn reduce_mod_p(&self, p: Prime) -> Result<Poly> {
        let target = Domain::Prime(p);
        match self.domain {
            Domain::Prime(q) if q == p => Ok(self.clone()),
            Domain::Prime(_) => Err(Error::DomainMismatch {
                left: self.domain.to_string(),
                right: target.to_string(),
            }),
            _ => Self::from_terms(
                self.nvars,
                target,
                self.terms.iter().map(|(e, c)| (e.clone(), c.clone())),
            ),
        }
    }

    /// Reinterprets the coefficients in another domain (each coefficient is
    /// reduced; the support may shrink).
    pub fn with_domain(&self, domain: Domain) -> Result<Poly> {
        Self::from_terms(
            self.nvars,
            domain,
            self.terms.iter().map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    /// Linear substitution `X_i ↦ Σ_j M[i][j]·X_j`, i.e. `F(M·X)`.
    ///
    /// With this convention `F.apply_matrix(M).apply_matrix(N)` equals
    /// `F.apply_matrix(M·N)`.
    pub fn apply_matrix(&self, m: &Matrix) -> Result<Poly> {
        if m.size() != self.nvars {
            return Err(Error::LengthMismatch {
                expected: self.nvars,
                got: m.size(),
            });
        }
        let m = m.reduce(self.domain)?;
        if self.domain.reduce(&m.determinant())?.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let forms: Vec<Poly> = (0..self.nvars)
            .map(|i| {
                let terms = (0..self.nvars).map(|j| (Exponent::unit(self.nvars, j), m.get(i, j).clone()));
                Self::from_terms(self.nvars, self.domain, terms)
            })
            .collect::<Result<_>>()?;
        let mut powers: Vec<Vec<Poly>> = forms
            .iter()
            .map(|_| vec![Poly::one(self.nvars, self.domain)])
            .collect();
        let mut out = Poly::zero(self.nvars, self.domain);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(self.nvars, self.domain, c)?;
            for (i, &a) in e.entries().iter().enumerate() {
                while powers[i].len() <= a as usize {
                    let next = powers[i].last().unwrap().mul_unchecked(&forms[i]);
                    powers[i].push(next);
                }
                term = term.mul_unchecked(&powers[i][a as usize]);
            }
            out = out.try_add(&term)?;
        }
        Ok(out)
    }

    /// Minimum of `⟨w, α⟩` over the support, `None` for the zero polynomial.
    pub fn min_weight(&self, w: &[i64]) -> Option<i64> {
        self.terms.keys().map(|e| e.weight(w)).min()
    }

    /// Lowest weight of the monomials occurring in `self` for a
    /// non-negative weight assignment.
    pub fn weighted_multiplicity(&self, w: &[u64]) -> Result<u64> {
        if w.len() != self.nvars {
            return Err(Error::LengthMismatch {
                expected: self.nvars,
                got: w.len(),
            });
        }
        self.terms
            .keys()
            .map(|e| e.entries().iter().zip(w).map(|(&a, &wi)| a as u64 * wi).sum())
            .min()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Sets `x_i = 1` and drops that variable.
    pub fn dehomogenize(&self, i: usize) -> Result<Poly> {
        if i >= self.nvars {
            return Err(Error::VariableOutOfRange {
                index: i,
                nvars: self.nvars,
            });
        }
        let terms = self.terms.iter().map(|(e, c)| {
            let mut v = e.entries().to_vec();
            v.remove(i);
            (Exponent::new(v), c.clone())
        });
        Self::from_terms(self.nvars - 1, self.domain, terms)
    }

    /// Exact quotient `self / divisor`; fails if the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        self.check_compatible(divisor)?;
        let (lead_e, lead_c) = divisor.leading_term().ok_or(Error::ZeroPolynomial)?;
        let mut rem = self.clone();
        let mut quotient = BTreeMap::new();
        while let Some((e, c)) = rem.leading_term() {
            if !lead_e.divides(e) {
                return Err(Error::InexactDivision("polynomial division"));
            }
            let qc = self
                .domain
                .divide(c, lead_c)
                .ok_or(Error::InexactDivision("coefficient division"))?;
            let qe = e.sub(lead_e);
            let t = Self::monomial_unchecked(self.nvars, self.domain, qe.clone(), qc.clone());
            rem = rem.try_sub(&t.mul_unchecked(divisor))?;
            quotient.insert(qe, qc);
        }
        Ok(Self::from_map(self.nvars, self.domain, quotient))
    }

    /// Substitutes values for every variable.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::LengthMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &a) in point.iter().zip(e.entries()) {
                t *= num_traits::pow(x.clone(), a as usize);
            }
            acc += t;
        }
        self.domain.reduce(&acc)
    }
}

fn write_factor(f: &mut fmt::Formatter<'_>, i: usize, a: u32) -> fmt::Result {
    if a == 1 {
        write!(f, "x{i}")
    } else {
        write!(f, "x{i}^{a}")
    }
}

/// Graded-lex printer using explicit `*` and `^`, e.g. `x0^2 - 1/2*x1*x2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let constant = e.is_constant();
            if constant || !mag.is_one() {
                write!(f, "{mag}")?;
                if !constant {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (i, &a) in e.entries().iter().enumerate() {
                if a == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                write_factor(f, i, a)?;
                first = false;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize, d: Domain) -> Poly {
        Poly::parse(s, n, d).unwrap()
    }

    fn f(p: u64) -> Domain {
        Domain::prime(p).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let q = Domain::Rational;
        let a = p("x0 + x1", 2, q);
        let b = p("x0 - x1", 2, q);
        assert_eq!(a.try_mul(&b).unwrap(), p("x0^2 - x1^2", 2, q));
        let a2 = p("x0 + x1", 2, f(2));
        assert_eq!(a2.try_mul(&a2).unwrap(), p("x0^2 + x1^2", 2, f(2)));
        let m = p("x0", 3, q).try_mul(&p("x1*x2", 3, q)).unwrap();
        assert_eq!(m, p("x0*x1*x2", 3, q));
        assert_eq!(m.homogeneous_degree(), Some(3));
    }

    #[test]
    fn mul_rejects_mismatch() {
        let a = p("x0", 2, Domain::Rational);
        assert!(matches!(
            a.try_mul(&p("x0", 3, Domain::Rational)),
            Err(Error::NvarsMismatch { .. })
        ));
        assert!(matches!(
            a.try_mul(&p("x0", 2, f(3))),
            Err(Error::DomainMismatch { .. })
        ));
    }

    #[test]
    fn partial_derivative_examples() {
        // x^{p+1} + x^p over F_p differentiates to x^p
        for prime in [2u64, 3, 5, 7, 11] {
            let s = format!("x0^{} + x0^{}", prime + 1, prime);
            let d = p(&s, 1, f(prime)).partial_derivative(0).unwrap();
            assert_eq!(d, p(&format!("x0^{prime}"), 1, f(prime)));
        }
        assert!(p("x0^4", 1, f(2)).partial_derivative(0).unwrap().is_zero());
        let d = p("x0^2*x1^3", 2, Domain::Rational).partial_derivative(1).unwrap();
        assert_eq!(d, p("3*x0^2*x1^2", 2, Domain::Rational));
        assert!(matches!(
            p("x0", 1, Domain::Rational).partial_derivative(1),
            Err(Error::VariableOutOfRange { .. })
        ));
    }

    #[test]
    fn euler_residual_examples() {
        assert!(p("x0^3 + x1^3", 2, Domain::Rational).euler_residual().unwrap().is_zero());
        assert!(p("x0^2*x1", 2, f(3)).euler_residual().unwrap().is_zero());
        assert!(p("x0*x1 + x2*x3", 4, f(2)).euler_residual().unwrap().is_zero());
        assert_eq!(
            p("x0^2 + x1", 2, Domain::Rational).euler_residual(),
            Err(Error::NotHomogeneous)
        );
    }

    #[test]
    fn reduce_mod_p_examples() {
        let three = Prime::new(3).unwrap();
        let g = p("x0^3 - 3*x0*x1*x2", 3, Domain::Integer).reduce_mod_p(three).unwrap();
        assert_eq!(g, p("x0^3", 3, f(3)));
        let half = p("1/2*x0^2", 2, Domain::Rational);
        assert_eq!(
            half.reduce_mod_p(Prime::new(2).unwrap()),
            Err(Error::BadDenominator { p: 2 })
        );
    }

    #[test]
    fn apply_matrix_examples() {
        let q = Domain::Rational;
        let id = Matrix::identity(2);
        assert_eq!(p("x0^2", 2, q).apply_matrix(&id).unwrap(), p("x0^2", 2, q));
        let swap = Matrix::permutation(&[1, 0]);
        assert_eq!(p("x0*x1", 2, q).apply_matrix(&swap).unwrap(), p("x0*x1", 2, q));
        let t = Matrix::transvection(2, 0, 1, 1);
        assert_eq!(
            p("x0^2", 2, q).apply_matrix(&t).unwrap(),
            p("x0^2 + 2*x0*x1 + x1^2", 2, q)
        );
        let singular = Matrix::from_i64(&[vec![1, 1], vec![2, 2]]);
        assert_eq!(p("x0", 2, q).apply_matrix(&singular), Err(Error::SingularMatrix));
        // invertible over Q, singular over F_2
        let m = Matrix::from_i64(&[vec![1, 1], vec![1, -1]]);
        assert!(p("x0", 2, q).apply_matrix(&m).is_ok());
        assert_eq!(p("x0", 2, f(2)).apply_matrix(&m), Err(Error::SingularMatrix));
    }

    #[test]
    fn support_examples() {
        let fermat = p("x0^3 + x1^3 + x2^3", 3, Domain::Rational);
        let expected: BTreeSet<Exponent> = [[3, 0, 0], [0, 3, 0], [0, 0, 3]]
            .iter()
            .map(|e| Exponent::new(e.to_vec()))
            .collect();
        assert_eq!(fermat.support(), expected);
        assert!(Poly::zero(3, Domain::Rational).support().is_empty());
        let sq = p("x0 + x1", 2, f(2)).pow(2);
        assert_eq!(sq.support().len(), 2);
    }

    #[test]
    fn weighted_multiplicity_examples() {
        let q = Domain::Rational;
        assert_eq!(p("x0^2 + x1^3", 2, q).weighted_multiplicity(&[3, 2]).unwrap(), 6);
        assert_eq!(p("1 + x0^3 + x1^3", 2, q).weighted_multiplicity(&[1, 2]).unwrap(), 0);
        assert_eq!(p("x0*x1", 2, q).weighted_multiplicity(&[0, 1]).unwrap(), 1);
        assert_eq!(Poly::zero(2, q).weighted_multiplicity(&[1, 1]), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn exact_division() {
        let q = Domain::Integer;
        let a = p("x0^2 - x1^2", 2, q);
        let b = p("x0 + x1", 2, q);
        assert_eq!(a.exact_div(&b).unwrap(), p("x0 - x1", 2, q));
        assert!(p("x0^2 + x1^2", 2, q).exact_div(&b).is_err());
        assert!(p("x0", 2, q).exact_div(&p("2*x0", 2, q)).is_err());
    }

    #[test]
    fn printer_is_graded_lex() {
        let g = p("x2^3 + x0*x1 - 1/2*x0^3 + 7", 3, Domain::Rational);
        assert_eq!(g.to_string(), "-1/2*x0^3 + x2^3 + x0*x1 + 7");
        assert_eq!(p("2*x0^2*x1 - x2^3", 3, f(2)).to_string(), "x2^3");
    }
}
