use num_traits::Zero;

use crate::algebra::{Domain, Exponent, Poly};
use crate::{Error, Rational, Result};

/// Dense univariate polynomial over a field, lowest degree first, trimmed.
type Dense = Vec<Rational>;

fn trim(mut a: Dense) -> Dense {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn derivative(a: &Dense, domain: Domain) -> Dense {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| domain.normalize(c * domain.from_int(k as i64)))
            .collect(),
    )
}

fn rem(mut a: Dense, b: &Dense, domain: Domain) -> Dense {
    let lead_inv = domain.inverse(b.last().expect("nonzero divisor")).expect("field");
    while a.len() >= b.len() {
        let q = domain.normalize(a.last().unwrap() * &lead_inv);
        let shift = a.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            a[shift + i] = domain.normalize(&a[shift + i] - &q * c);
        }
        a = trim(a);
    }
    a
}

fn gcd(mut a: Dense, mut b: Dense, domain: Domain) -> Dense {
    while !b.is_empty() {
        let r = rem(a, &b, domain);
        a = b;
        b = r;
    }
    a
}

/// Whether `V(F, ∂F/∂X0, ∂F/∂X1)` is empty, i.e. `F` is squarefree.
///
/// Decided exactly over ℚ or `F_p` (ℤ is treated as ℚ) by checking the
/// multiplicity of the point `[1:0]` and `gcd(f, f')` for `f = F(x, 1)`.
pub fn smoothness_binary(f: &Poly) -> Result<bool> {
    if f.nvars() != 2 {
        return Err(Error::NvarsMismatch {
            left: 2,
            right: f.nvars(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.homogeneous_degree().ok_or(Error::NotHomogeneous)? as u32;
    let domain = match f.domain() {
        Domain::Integer => Domain::Rational,
        other => other,
    };
    // coefficient of x^j in f(x, 1) is that of X0^j X1^{d−j}
    let dense: Dense = trim(
        (0..=d)
            .map(|j| f.coeff(&Exponent::new(vec![j, d - j])))
            .collect(),
    );
    let at_infinity = d as usize + 1 - dense.len();
    if at_infinity > 1 {
        return Ok(false);
    }
    if dense.len() <= 1 {
        return Ok(true);
    }
    let df = derivative(&dense, domain);
    if df.is_empty() {
        // f is a p-th power
        return Ok(false);
    }
    Ok(gcd(dense, df, domain).len() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(s: &str, domain: Domain) -> Poly {
        Poly::parse(s, 2, domain).unwrap()
    }

    #[test]
    fn smoothness_examples() {
        let q = Domain::Rational;
        let f2 = Domain::prime(2).unwrap();
        assert!(smoothness_binary(&form("x0*x1", q)).unwrap());
        assert!(!smoothness_binary(&form("x0^2*x1", q)).unwrap());
        assert!(!smoothness_binary(&form("x0*x1^2", q)).unwrap());
        assert!(!smoothness_binary(&form("x0^4 + x1^4", f2)).unwrap());
        assert!(smoothness_binary(&form("x0^4 + x1^4", q)).unwrap());
        assert!(smoothness_binary(&form("x0*x1", f2)).unwrap());
        assert!(smoothness_binary(&form("x1", q)).unwrap());
        assert!(!smoothness_binary(&form("x1^2", q)).unwrap());
        assert!(smoothness_binary(&form("7", q)).unwrap());
        assert!(!smoothness_binary(&form("x0^2 + 2*x0*x1 + x1^2", Domain::Integer)).unwrap());
        assert!(smoothness_binary(&Poly::zero(2, q)).is_err());
        assert!(smoothness_binary(&form("x0^2 + x1", q)).is_err());
    }

    #[test]
    fn gcd_over_fp() {
        let f3 = Domain::prime(3).unwrap();
        // x^3 - x = x(x-1)(x+1) over F_3 is separable
        assert!(smoothness_binary(&form("x0^3 - x0*x1^2", f3)).unwrap());
        // (x+1)^3 = x^3 + 1 over F_3
        assert!(!smoothness_binary(&form("x0^3 + x1^3", f3)).unwrap());
    }
}
