use num_bigint::BigInt;
use serde::Serialize;

use super::{BracketSupport, WeightVector};
use crate::algebra::Poly;
use crate::{Error, Rational, Result};

fn homogeneous_degree(f: &Poly) -> Result<u64> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    f.homogeneous_degree().ok_or(Error::NotHomogeneous)
}

fn check_len(f: &Poly, r: &WeightVector) -> Result<()> {
    if r.len() != f.nvars() {
        return Err(Error::LengthMismatch {
            expected: f.nvars(),
            got: r.len(),
        });
    }
    Ok(())
}

/// Numerical function of a hypersurface: `min_{α ∈ supp F} ⟨r, α⟩`.
///
/// A hypersurface is its own Chow form, so this is the bracket weight of
/// `F` with `Δ_{i} = X_i`. Positive values destabilize.
pub fn mu_hypersurface(f: &Poly, r: &WeightVector) -> Result<i64> {
    homogeneous_degree(f)?;
    check_len(f, r)?;
    Ok(f.min_weight(r.entries()).expect("nonzero"))
}

/// `min` over bracket tuples of `Σ_ℓ Σ_{i ∈ I_ℓ} r_i`.
pub fn mu_bracket(s: &BracketSupport, r: &WeightVector) -> Result<i64> {
    if r.len() != s.n() + 1 {
        return Err(Error::LengthMismatch {
            expected: s.n() + 1,
            got: r.len(),
        });
    }
    s.tuples()
        .iter()
        .map(|tuple| tuple.iter().flatten().map(|&i| r.entries()[i]).sum())
        .min()
        .ok_or_else(|| Error::InvalidBracket("empty support".into()))
}

/// Weighted-multiplicity form of the numerical criterion on the chart
/// `X_0 ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeeRatio {
    /// Weighted multiplicity of `f = F(1, x_1, …, x_n)` for weights
    /// `w(x_i) = r_i − r_0`.
    pub w_f: i64,
    /// `Σ_i w(x_i) = −(n+1)·r_0`.
    pub sum_wxi: i64,
    pub ratio: Rational,
    /// `d / (n+1)`.
    pub threshold: Rational,
}

impl LeeRatio {
    /// `ratio < d/(n+1)`, equivalent to `μ < 0` for this weight.
    pub fn stable_against(&self) -> bool {
        self.ratio < self.threshold
    }

    pub fn semistable_against(&self) -> bool {
        self.ratio <= self.threshold
    }
}

fn chart_weights(f: &Poly, r: &WeightVector) -> Result<(u64, Vec<u64>)> {
    let d = homogeneous_degree(f)?;
    check_len(f, r)?;
    if !r.is_normalized() {
        return Err(Error::InvalidWeights(
            "chart weights need r_0 <= r_1 <= ... <= r_n".into(),
        ));
    }
    let r0 = r.entries()[0];
    let w = r.entries()[1..].iter().map(|&ri| (ri - r0) as u64).collect();
    Ok((d, w))
}

pub fn lee_ratio(f: &Poly, r: &WeightVector) -> Result<LeeRatio> {
    let (d, w) = chart_weights(f, r)?;
    let affine = f.dehomogenize(0)?;
    let w_f = affine.weighted_multiplicity(&w)? as i64;
    let sum_wxi: i64 = w.iter().map(|&x| x as i64).sum();
    let n_plus_1 = f.nvars() as i64;
    Ok(LeeRatio {
        w_f,
        sum_wxi,
        ratio: Rational::new(BigInt::from(w_f), BigInt::from(sum_wxi)),
        threshold: Rational::new(BigInt::from(d), BigInt::from(n_plus_1)),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    /// `d·Σ w(x_i) − (n+1)·w(f)`.
    pub lhs: i64,
    pub mu: i64,
    /// `lhs + (n+1)·μ`; zero for every input.
    pub residual: i64,
}

/// Evaluates both sides of `d·Σ w(x_i) − (n+1)·w(f) = −(n+1)·μ(F, r)`
/// through independent paths (chart weights vs. the projective support).
pub fn numerical_identity_check(f: &Poly, r: &WeightVector) -> Result<IdentityCheck> {
    let ratio = lee_ratio(f, r)?;
    let mu = mu_hypersurface(f, r)?;
    let d = f.homogeneous_degree().expect("checked") as i64;
    let n_plus_1 = f.nvars() as i64;
    let lhs = d * ratio.sum_wxi - n_plus_1 * ratio.w_f;
    Ok(IdentityCheck {
        lhs,
        mu,
        residual: lhs + n_plus_1 * mu,
    })
}
