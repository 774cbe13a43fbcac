use num_bigint::BigInt;

use crate::algebra::{Domain, Exponent, Poly};
use crate::{Error, Rational, Result};

/// A binary form `Σ_k c_k X0^{d−k} X1^k` whose coefficients live in a
/// common polynomial ring (a zero-variable ring for numeric forms).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<Poly>,
}

impl BinaryForm {
    /// Declared degree is `coeffs.len() − 1`.
    pub fn new(coeffs: Vec<Poly>) -> Result<Self> {
        let first = coeffs
            .first()
            .ok_or_else(|| Error::InvalidArgument("binary form needs a coefficient".into()))?;
        let (nvars, domain) = (first.nvars(), first.domain());
        for c in &coeffs {
            if c.domain() != domain {
                return Err(Error::DomainMismatch {
                    left: domain.to_string(),
                    right: c.domain().to_string(),
                });
            }
            if c.nvars() != nvars {
                return Err(Error::NvarsMismatch {
                    left: nvars,
                    right: c.nvars(),
                });
            }
        }
        Ok(BinaryForm { coeffs })
    }

    /// Numeric form with constant coefficients.
    pub fn from_values(values: &[Rational], domain: Domain) -> Result<Self> {
        Self::new(
            values
                .iter()
                .map(|v| Poly::constant(0, domain, v))
                .collect::<Result<_>>()?,
        )
    }

    /// Reads the coefficients of a homogeneous polynomial in two variables
    /// against a declared degree.
    pub fn from_poly(f: &Poly, degree: u64) -> Result<Self> {
        if f.nvars() != 2 {
            return Err(Error::NvarsMismatch {
                left: 2,
                right: f.nvars(),
            });
        }
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.homogeneous_degree() != Some(degree) {
            return Err(Error::NotHomogeneous);
        }
        let d = degree as u32;
        let values: Vec<Rational> = (0..=d)
            .map(|k| f.coeff(&Exponent::new(vec![d - k, k])))
            .collect();
        Self::from_values(&values, f.domain())
    }

    /// `Σ a_k X0^{d−k} X1^k` with indeterminate coefficients `a_0..a_d` over ℤ.
    pub fn generic(d: usize) -> Self {
        let coeffs = (0..=d)
            .map(|k| Poly::var(d + 1, Domain::Integer, k).expect("index in range"))
            .collect();
        BinaryForm { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    fn ring(&self) -> (usize, Domain) {
        (self.coeffs[0].nvars(), self.coeffs[0].domain())
    }

    fn scaled(c: &Poly, k: usize) -> Poly {
        c.scale(&Rational::from_integer(BigInt::from(k)))
            .expect("integer scalar")
    }

    /// `∂/∂X0`, of declared degree `d − 1`.
    pub fn partial_x0(&self) -> Result<Self> {
        let d = self.degree();
        if d == 0 {
            return Err(Error::InvalidArgument("derivative of a degree-0 form".into()));
        }
        Ok(BinaryForm {
            coeffs: (0..d).map(|k| Self::scaled(&self.coeffs[k], d - k)).collect(),
        })
    }

    /// `∂/∂X1`, of declared degree `d − 1`.
    pub fn partial_x1(&self) -> Result<Self> {
        let d = self.degree();
        if d == 0 {
            return Err(Error::InvalidArgument("derivative of a degree-0 form".into()));
        }
        Ok(BinaryForm {
            coeffs: (0..d)
                .map(|k| Self::scaled(&self.coeffs[k + 1], k + 1))
                .collect(),
        })
    }

    /// Product of forms; degrees add.
    pub fn mul(&self, other: &BinaryForm) -> Result<Self> {
        let (nvars, domain) = self.ring();
        let mut coeffs = vec![Poly::zero(nvars, domain); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].try_add(&a.try_mul(b)?)?;
            }
        }
        BinaryForm::new(coeffs)
    }

    /// The form as a polynomial in `X0, X1`; only for numeric forms.
    pub fn to_poly(&self) -> Result<Poly> {
        let (_, domain) = self.ring();
        let d = self.degree() as u32;
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let v = c
                    .as_constant()
                    .ok_or_else(|| Error::InvalidArgument("form has symbolic coefficients".into()))?;
                Ok((vec![d - k as u32, k as u32], v))
            })
            .collect::<Result<Vec<_>>>()?;
        Poly::from_terms(2, domain, terms)
    }
}

/// The `(m+n)×(m+n)` Sylvester matrix: `n` shifted rows of `P`'s
/// coefficients followed by `m` shifted rows of `Q`'s.
pub fn sylvester_matrix(p: &BinaryForm, q: &BinaryForm) -> Result<Vec<Vec<Poly>>> {
    let (nvars, domain) = p.ring();
    if q.ring() != (nvars, domain) {
        return Err(Error::DomainMismatch {
            left: domain.to_string(),
            right: q.ring().1.to_string(),
        });
    }
    let (m, n) = (p.degree(), q.degree());
    let size = m + n;
    let zero = Poly::zero(nvars, domain);
    let row = |form: &BinaryForm, shift: usize| {
        let mut r = vec![zero.clone(); size];
        for (k, c) in form.coeffs.iter().enumerate() {
            r[shift + k] = c.clone();
        }
        r
    };
    let mut rows: Vec<Vec<Poly>> = (0..n).map(|s| row(p, s)).collect();
    rows.extend((0..m).map(|s| row(q, s)));
    Ok(rows)
}

/// Fraction-free (Bareiss) determinant; every intermediate division is exact.
pub fn bareiss_determinant(mut m: Vec<Vec<Poly>>, nvars: usize, domain: Domain) -> Result<Poly> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidArgument("matrix is not square".into()));
    }
    if n == 0 {
        return Ok(Poly::one(nvars, domain));
    }
    let mut negate = false;
    let mut prev = Poly::one(nvars, domain);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(Poly::zero(nvars, domain)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].try_mul(&m[k][k])?.try_sub(&m[i][k].try_mul(&m[k][j])?)?;
                m[i][j] = num.exact_div(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// `Res(P, Q)` for the declared degrees. Vanishes iff `P` and `Q` share a
/// projective root over the algebraic closure (or both leading
/// coefficients vanish, which is a shared root at infinity).
pub fn sylvester_resultant(p: &BinaryForm, q: &BinaryForm) -> Result<Poly> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (nvars, domain) = p.ring();
    bareiss_determinant(sylvester_matrix(p, q)?, nvars, domain)
}

#[derive(Debug, Clone, Copy)]
pub enum DiscMode<'a> {
    /// Polynomial in the indeterminate coefficients `a_0..a_d` over ℤ.
    Generic,
    /// Value for a concrete binary form of degree `d`.
    Numeric(&'a Poly),
}

/// Raw resultant `Res(∂F/∂X0, ∂F/∂X1)` of degrees `d − 1, d − 1`.
///
/// For `d = 2` this is `4a₀a₂ − a₁²`; for `d = 4` it satisfies
/// `27·Res = 16·(4S³ − T²)`.
pub fn discriminant_binary(d: usize, mode: DiscMode<'_>) -> Result<Poly> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("degree {d} below 2")));
    }
    let form = match mode {
        DiscMode::Generic => {
            if d > 6 {
                return Err(Error::SizeLimit(format!("generic degree {d} above 6")));
            }
            BinaryForm::generic(d)
        }
        DiscMode::Numeric(f) => BinaryForm::from_poly(f, d as u64)?,
    };
    let (fx, fy) = (form.partial_x0()?, form.partial_x1()?);
    if fx.is_zero() || fy.is_zero() {
        // not a resultant of nonzero forms; the determinant is still zero
        let (nvars, domain) = form.ring();
        return Ok(Poly::zero(nvars, domain));
    }
    sylvester_resultant(&fx, &fy)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticInvariants {
    pub s: Poly,
    pub t: Poly,
    /// `4S³ − T²`.
    pub d: Poly,
}

/// `S = 12a₀a₄ − 3a₁a₃ + a₂²`,
/// `T = 72a₀a₂a₄ − 27a₀a₃² + 9a₁a₂a₃ − 27a₁²a₄ − 2a₂³`, `D = 4S³ − T²`.
pub fn quartic_st(form: &BinaryForm) -> Result<QuarticInvariants> {
    if form.degree() != 4 {
        return Err(Error::LengthMismatch {
            expected: 5,
            got: form.coeffs.len(),
        });
    }
    let a = &form.coeffs;
    let int = |k: i64| Rational::from_integer(BigInt::from(k));
    let prod = |idx: &[usize]| -> Result<Poly> {
        let (nvars, domain) = form.ring();
        idx.iter()
            .try_fold(Poly::one(nvars, domain), |acc, &i| acc.try_mul(&a[i]))
    };
    let combo = |terms: &[(i64, &[usize])]| -> Result<Poly> {
        let (nvars, domain) = form.ring();
        terms.iter().try_fold(Poly::zero(nvars, domain), |acc, (c, idx)| {
            acc.try_add(&prod(idx)?.scale(&int(*c))?)
        })
    };
    let s = combo(&[(12, &[0, 4]), (-3, &[1, 3]), (1, &[2, 2])])?;
    let t = combo(&[
        (72, &[0, 2, 4]),
        (-27, &[0, 3, 3]),
        (9, &[1, 2, 3]),
        (-27, &[1, 1, 4]),
        (-2, &[2, 2, 2]),
    ])?;
    let d = s.pow(3).scale(&int(4))?.try_sub(&t.pow(2))?;
    Ok(QuarticInvariants { s, t, d })
}

/// [`quartic_st`] on indeterminate coefficients over ℤ.
pub fn quartic_st_generic() -> QuarticInvariants {
    quartic_st(&BinaryForm::generic(4)).expect("degree 4")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Prime;
    use num_traits::{One, Zero};

    fn num(values: &[i64], domain: Domain) -> BinaryForm {
        let v: Vec<Rational> = values.iter().map(|&x| Rational::from_integer(x.into())).collect();
        BinaryForm::from_values(&v, domain).unwrap()
    }

    fn value(p: &Poly) -> Rational {
        p.as_constant().unwrap_or_else(Rational::zero)
    }

    fn gen(s: &str, n: usize) -> Poly {
        Poly::parse(s, n, Domain::Integer).unwrap()
    }

    /// Leibniz expansion over permutations, independent of Bareiss.
    fn leibniz(m: &[Vec<Poly>], nvars: usize, domain: Domain) -> Poly {
        let n = m.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = Poly::zero(nvars, domain);
        loop {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if perm[i] > perm[j] {
                        inversions += 1;
                    }
                }
            }
            let mut t = Poly::one(nvars, domain);
            for (i, &j) in perm.iter().enumerate() {
                t = t.try_mul(&m[i][j]).unwrap();
            }
            total = if inversions % 2 == 0 {
                total.try_add(&t).unwrap()
            } else {
                total.try_sub(&t).unwrap()
            };
            // next permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
                return total;
            };
            let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
    }

    #[test]
    fn resultant_examples() {
        // partials of a generic quadratic, dehomogenized
        let a = |i| Poly::var(3, Domain::Integer, i).unwrap();
        let two = |p: Poly| p.scale(&Rational::from_integer(2.into())).unwrap();
        let p = BinaryForm::new(vec![two(a(0)), a(1)]).unwrap();
        let q = BinaryForm::new(vec![a(1), two(a(2))]).unwrap();
        assert_eq!(sylvester_resultant(&p, &q).unwrap(), gen("4*x0*x2 - x1^2", 3));

        let x = num(&[1, 0], Domain::Integer);
        let x1 = num(&[1, 1], Domain::Integer);
        assert_eq!(value(&sylvester_resultant(&x, &x1).unwrap()), Rational::one());
        let x1x = num(&[1, 1, 0], Domain::Integer);
        assert!(sylvester_resultant(&x1, &x1x).unwrap().is_zero());
        assert!(sylvester_resultant(&num(&[0, 0], Domain::Integer), &x).is_err());
    }

    #[test]
    fn bareiss_matches_leibniz() {
        for d in 2..=4 {
            let f = BinaryForm::generic(d);
            let m = sylvester_matrix(&f.partial_x0().unwrap(), &f.partial_x1().unwrap()).unwrap();
            let expected = leibniz(&m, d + 1, Domain::Integer);
            assert_eq!(bareiss_determinant(m, d + 1, Domain::Integer).unwrap(), expected);
        }
        // a numeric matrix that needs a row swap
        let m: Vec<Vec<Poly>> = [[0, 2, 1], [3, 1, 0], [1, 0, 4]]
            .iter()
            .map(|r| r.iter().map(|&v| Poly::constant(0, Domain::Integer, &Rational::from_integer(v.into())).unwrap()).collect())
            .collect();
        let expected = leibniz(&m, 0, Domain::Integer);
        assert_eq!(value(&expected), Rational::from_integer((-25).into()));
        assert_eq!(bareiss_determinant(m, 0, Domain::Integer).unwrap(), expected);
    }

    #[test]
    fn quadratic_discriminant_scalar() {
        let res = discriminant_binary(2, DiscMode::Generic).unwrap();
        assert_eq!(res, gen("4*x0*x2 - x1^2", 3));
        assert_eq!(res.neg(), gen("x1^2 - 4*x0*x2", 3));
    }

    #[test]
    fn quartic_discriminant_scalar() {
        let res = discriminant_binary(4, DiscMode::Generic).unwrap();
        let inv = quartic_st_generic();
        let lhs = res.scale(&Rational::from_integer(27.into())).unwrap();
        let rhs = inv.d.scale(&Rational::from_integer(16.into())).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn quartic_invariants_examples() {
        let inv = quartic_st(&num(&[1, 0, 0, 0, 1], Domain::Integer)).unwrap();
        assert_eq!(value(&inv.s), Rational::from_integer(12.into()));
        assert!(inv.t.is_zero());
        assert_eq!(value(&inv.d), Rational::from_integer(6912.into()));
        let inv = quartic_st(&num(&[0, 1, 0, 0, 0], Domain::Integer)).unwrap();
        assert!(inv.s.is_zero() && inv.t.is_zero() && inv.d.is_zero());
    }

    #[test]
    fn quartic_mod_two() {
        let two = Prime::new(2).unwrap();
        let inv = quartic_st_generic();
        let t2 = gen("x0*x3^2 + x1*x2*x3 + x1^2*x4", 5).reduce_mod_p(two).unwrap();
        assert_eq!(inv.t.reduce_mod_p(two).unwrap(), t2);
        assert_eq!(inv.d.reduce_mod_p(two).unwrap(), t2.pow(2));
        // computing directly over F_2 agrees
        let f2 = BinaryForm::new(
            (0..5)
                .map(|k| Poly::var(5, Domain::Prime(two), k).unwrap())
                .collect(),
        )
        .unwrap();
        let direct = quartic_st(&f2).unwrap();
        assert_eq!(direct.d, inv.d.reduce_mod_p(two).unwrap());
        assert_eq!(direct.s, inv.s.reduce_mod_p(two).unwrap());
    }

    #[test]
    fn numeric_discriminant() {
        let f = Poly::parse("x0^4 + x1^4", 2, Domain::Rational).unwrap();
        let v = discriminant_binary(4, DiscMode::Numeric(&f)).unwrap();
        assert!(!v.is_zero());
        assert!(discriminant_binary(3, DiscMode::Numeric(&f)).is_err());
        assert!(discriminant_binary(1, DiscMode::Generic).is_err());
        assert!(discriminant_binary(7, DiscMode::Generic).is_err());
        let g = Poly::parse("x0^2*x1", 2, Domain::Rational).unwrap();
        assert!(discriminant_binary(3, DiscMode::Numeric(&g)).unwrap().is_zero());
    }

    #[test]
    fn multiplicativity_small() {
        let p = num(&[1, -2, 3], Domain::Integer);
        let q = num(&[2, 0, 1, 5], Domain::Integer);
        let r = num(&[1, 4], Domain::Integer);
        let lhs = sylvester_resultant(&p, &q.mul(&r).unwrap()).unwrap();
        let rhs = sylvester_resultant(&p, &q)
            .unwrap()
            .try_mul(&sylvester_resultant(&p, &r).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}
