use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::numerical::{mu_bracket, mu_hypersurface};
use super::{BracketSupport, SearchCounters, WeightVector};
use crate::algebra::{Matrix, Poly};
use crate::lp::{LinearProgram, Relation};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Some weight has `μ > 0`.
    UnstableWitness,
    /// `μ ≤ 0` for every diagonal weight and `μ = 0` for some.
    StrictlySemistableTorus,
    /// `μ < 0` for every nonzero diagonal weight.
    StableTorus,
    /// A bounded search found no destabilizing coordinate change. This is
    /// not a proof of stability.
    UnknownAfterSearch,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::UnstableWitness => "unstable_witness",
            Verdict::StrictlySemistableTorus => "strictly_semistable_torus",
            Verdict::StableTorus => "stable_torus",
            Verdict::UnknownAfterSearch => "unknown_after_search",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StabilityCertificate {
    pub verdict: Verdict,
    pub witness_r: Option<WeightVector>,
    pub witness_g: Option<Matrix>,
    pub mu_value: Option<i64>,
    /// Optimum `t*` of the max-min program in the coordinates examined.
    pub lp_value: Option<Rational>,
    pub search_budget_used: SearchCounters,
}

impl StabilityCertificate {
    fn without_witness(verdict: Verdict, lp_value: Option<Rational>) -> Self {
        StabilityCertificate {
            verdict,
            witness_r: None,
            witness_g: None,
            mu_value: None,
            lp_value,
            search_budget_used: SearchCounters::default(),
        }
    }

    pub(crate) fn unknown(counters: SearchCounters) -> Self {
        StabilityCertificate {
            search_budget_used: counters,
            ..Self::without_witness(Verdict::UnknownAfterSearch, None)
        }
    }
}

/// Optimum of `max t` s.t. `⟨r, α − c⟩ ≥ t` for all points `α`,
/// `Σ r_i = 0`, `−1 ≤ r_i ≤ 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct MaxMin {
    pub t_star: Rational,
    pub r_star: Vec<Rational>,
}

fn int(k: i64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

fn validate_points(points: &[Vec<Rational>], c: &[Rational]) -> Result<()> {
    if points.is_empty() {
        return Err(Error::InvalidArgument("empty point set".into()));
    }
    if let Some(bad) = points.iter().find(|p| p.len() != c.len()) {
        return Err(Error::LengthMismatch {
            expected: c.len(),
            got: bad.len(),
        });
    }
    Ok(())
}

/// Box-constrained program over `u_i = r_i + 1 ∈ [0, 2]`, `Σ u_i = n+1`,
/// with one row `Σ_i u_i (α_i − c_i) ≥ Σ_i (α_i − c_i) + t` per point.
fn base_program(points: &[Vec<Rational>], c: &[Rational], with_t: bool) -> LinearProgram {
    let dim = c.len();
    let nv = dim + usize::from(with_t);
    let mut lp = LinearProgram::new(nv);
    let mut seen: Vec<&Vec<Rational>> = Vec::new();
    for alpha in points {
        if seen.contains(&alpha) {
            continue;
        }
        seen.push(alpha);
        let shifted: Vec<Rational> = alpha.iter().zip(c).map(|(a, ci)| a - ci).collect();
        let total: Rational = shifted.iter().sum();
        let mut row: Vec<Rational> = shifted.iter().map(|x| -x).collect();
        if with_t {
            row.push(Rational::one());
        }
        lp.constrain(row, Relation::LessEq, -total);
    }
    let mut sum = vec![Rational::one(); dim];
    if with_t {
        sum.push(Rational::zero());
    }
    lp.constrain(sum, Relation::Equal, int(dim as i64));
    for i in 0..dim {
        let mut row = vec![Rational::zero(); nv];
        row[i] = Rational::one();
        lp.constrain(row, Relation::LessEq, int(2));
    }
    lp
}

pub fn lp_membership_maxmin(points: &[Vec<Rational>], c: &[Rational]) -> Result<MaxMin> {
    validate_points(points, c)?;
    let dim = c.len();
    let mut lp = base_program(points, c, true);
    let mut objective = vec![Rational::zero(); dim + 1];
    objective[dim] = Rational::one();
    lp.maximize(objective);
    let sol = lp
        .solve()
        .optimal()
        .expect("max-min program is feasible and bounded");
    Ok(MaxMin {
        t_star: sol.value,
        r_star: sol.point[..dim].iter().map(|u| u - Rational::one()).collect(),
    })
}

/// A nonzero `r` in the cone `{Σ r = 0, ⟨r, α − c⟩ ≥ 0 ∀α}`, if one exists.
/// Tries `max ±r_i` over the cone intersected with the unit box.
pub fn cone_nonzero_point(points: &[Vec<Rational>], c: &[Rational]) -> Result<Option<Vec<Rational>>> {
    validate_points(points, c)?;
    let dim = c.len();
    let base = base_program(points, c, false);
    for i in 0..dim {
        for sign in [1i64, -1] {
            let mut lp = base.clone();
            let mut objective = vec![Rational::zero(); dim];
            objective[i] = int(sign);
            lp.maximize(objective);
            let sol = lp.solve().optimal().expect("cone program is feasible and bounded");
            // value = sign·u_i, and sign·r_i = value − sign
            if (sol.value - int(sign)).is_positive() {
                return Ok(Some(sol.point.iter().map(|u| u - Rational::one()).collect()));
            }
        }
    }
    Ok(None)
}

fn certify_points<M>(points: &[Vec<Rational>], c: &[Rational], mu: M) -> Result<StabilityCertificate>
where
    M: Fn(&WeightVector) -> Result<i64>,
{
    let maxmin = lp_membership_maxmin(points, c)?;
    if maxmin.t_star.is_positive() {
        let r = WeightVector::primitive_from_rational(&maxmin.r_star)?;
        let value = mu(&r)?;
        debug_assert!(value > 0);
        return Ok(StabilityCertificate {
            witness_r: Some(r),
            mu_value: Some(value),
            ..StabilityCertificate::without_witness(Verdict::UnstableWitness, Some(maxmin.t_star))
        });
    }
    match cone_nonzero_point(points, c)? {
        Some(point) => {
            let r = WeightVector::primitive_from_rational(&point)?;
            let value = mu(&r)?;
            debug_assert_eq!(value, 0);
            Ok(StabilityCertificate {
                witness_r: Some(r),
                mu_value: Some(value),
                ..StabilityCertificate::without_witness(
                    Verdict::StrictlySemistableTorus,
                    Some(maxmin.t_star),
                )
            })
        }
        None => Ok(StabilityCertificate::without_witness(
            Verdict::StableTorus,
            Some(maxmin.t_star),
        )),
    }
}

pub(crate) fn hypersurface_points(f: &Poly) -> Result<(Vec<Vec<Rational>>, Vec<Rational>)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    let points = f
        .support()
        .iter()
        .map(|e| e.entries().iter().map(|&a| int(a as i64)).collect())
        .collect();
    let center = vec![Rational::new(BigInt::from(d), BigInt::from(f.nvars())); f.nvars()];
    Ok((points, center))
}

/// Decides stability of `V(F)` against every diagonal one-parameter
/// subgroup in the given coordinates (barycenter versus Newton polytope).
pub fn torus_certificate(f: &Poly) -> Result<StabilityCertificate> {
    let (points, center) = hypersurface_points(f)?;
    if f.nvars() < 2 {
        return Err(Error::InvalidArgument("need at least two variables".into()));
    }
    certify_points(&points, &center, |r| mu_hypersurface(f, r))
}

/// Same decision for a Chow form given by its bracket support.
pub fn torus_certificate_bracket(s: &BracketSupport) -> Result<StabilityCertificate> {
    let points: Vec<Vec<Rational>> = s
        .count_vectors()
        .into_iter()
        .map(|v| v.into_iter().map(|k| int(k as i64)).collect())
        .collect();
    let mass = (s.degree() * (s.n() - s.dim())) as i64;
    let center = vec![Rational::new(BigInt::from(mass), BigInt::from(s.n() as i64 + 1)); s.n() + 1];
    certify_points(&points, &center, |r| mu_bracket(s, r))
}

/// Quick instability test used by the search: `t* > 0`.
pub(crate) fn has_positive_weight(f: &Poly) -> Result<bool> {
    let (points, center) = hypersurface_points(f)?;
    Ok(lp_membership_maxmin(&points, &center)?.t_star.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Domain;

    fn p(s: &str, n: usize) -> Poly {
        Poly::parse(s, n, Domain::Rational).unwrap()
    }

    fn pts(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|x| x.iter().map(|&k| int(k)).collect()).collect()
    }

    /// All integer r in [-k, k]^3 with zero sum, excluding 0.
    fn small_weights(k: i64) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        for a in -k..=k {
            for b in -k..=k {
                let c = -a - b;
                if c.abs() <= k && (a, b, c) != (0, 0, 0) {
                    out.push(vec![a, b, c]);
                }
            }
        }
        out
    }

    #[test]
    fn maxmin_examples() {
        let ones = vec![int(1); 3];
        let simplex = pts(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]);
        let mm = lp_membership_maxmin(&simplex, &ones).unwrap();
        assert_eq!(mm.t_star, int(0));
        // brute force: no nonzero small r has min >= 0 against the centroid
        for r in small_weights(4) {
            let min = [3 * r[0], 3 * r[1], 3 * r[2]].into_iter().min().unwrap();
            assert!(min < 0, "{r:?}");
        }
        assert_eq!(cone_nonzero_point(&simplex, &ones).unwrap(), None);

        let centroid = pts(&[&[1, 1, 1]]);
        assert_eq!(lp_membership_maxmin(&centroid, &ones).unwrap().t_star, int(0));

        // one point (3,0,0): ⟨r, (2,-1,-1)⟩ is maximized at r = (1,-1/2,-1/2) → 3
        let single = pts(&[&[3, 0, 0]]);
        let mm = lp_membership_maxmin(&single, &ones).unwrap();
        assert_eq!(mm.t_star, int(3));
        assert!(mm.t_star >= int(2));
    }

    #[test]
    fn torus_examples() {
        let fermat = torus_certificate(&p("x0^3 + x1^3 + x2^3", 3)).unwrap();
        assert_eq!(fermat.verdict, Verdict::StableTorus);
        assert!(fermat.witness_r.is_none() && fermat.mu_value.is_none());

        let triangle = torus_certificate(&p("x0*x1*x2", 3)).unwrap();
        assert_eq!(triangle.verdict, Verdict::StrictlySemistableTorus);
        assert_eq!(triangle.mu_value, Some(0));

        let cusp = p("x1^2*x2 - x0^3", 3);
        let cert = torus_certificate(&cusp).unwrap();
        assert_eq!(cert.verdict, Verdict::UnstableWitness);
        let r = cert.witness_r.unwrap();
        assert!(r.is_primitive());
        assert!(cert.mu_value.unwrap() > 0);
        assert_eq!(mu_hypersurface(&cusp, &r).unwrap(), cert.mu_value.unwrap());
    }

    #[test]
    fn torus_matches_small_box_search() {
        let cases = [
            "x0^3 + x1^3 + x2^3",
            "x0*x1*x2",
            "x1^2*x2 - x0^3",
            "x0^2*x1 + x1^2*x2 + x2^2*x0",
            "x0^2*x1 + x2^3",
            "x0*x1^2",
            "x0^3 + x0*x1*x2",
        ];
        for s in cases {
            let f = p(s, 3);
            let cert = torus_certificate(&f).unwrap();
            let best = small_weights(6)
                .into_iter()
                .map(|r| mu_hypersurface(&f, &WeightVector::new(r).unwrap()).unwrap())
                .max()
                .unwrap();
            let expected = match best {
                b if b > 0 => Verdict::UnstableWitness,
                0 => Verdict::StrictlySemistableTorus,
                _ => Verdict::StableTorus,
            };
            assert_eq!(cert.verdict, expected, "{s}");
        }
    }

    #[test]
    fn bracket_certificates() {
        // two skew lines in P^3: Δ_{01}Δ_{23}
        let skew = BracketSupport::parse(3, 1, "0,1|2,3").unwrap();
        assert_eq!(
            torus_certificate_bracket(&skew).unwrap().verdict,
            Verdict::StrictlySemistableTorus
        );
        // a double line
        let double = BracketSupport::parse(3, 1, "0,1|0,1").unwrap();
        let cert = torus_certificate_bracket(&double).unwrap();
        assert_eq!(cert.verdict, Verdict::UnstableWitness);
        assert!(mu_bracket(&double, cert.witness_r.as_ref().unwrap()).unwrap() > 0);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(
            torus_certificate(&Poly::zero(3, Domain::Rational)),
            Err(Error::ZeroPolynomial)
        );
    }
}
