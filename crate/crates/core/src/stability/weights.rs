use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::{Error, Rational, Result};

/// Integer weights `(r_0, …, r_n)` of a diagonal one-parameter subgroup
/// `t ↦ diag(t^{r_0}, …, t^{r_n})`. Entries sum to zero and are not all zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.iter().all(|&r| r == 0) {
            return Err(Error::InvalidWeights("all entries zero".into()));
        }
        let sum: i128 = entries.iter().map(|&r| r as i128).sum();
        if sum != 0 {
            return Err(Error::InvalidWeights(format!("entries sum to {sum}, not 0")));
        }
        Ok(WeightVector(entries))
    }

    /// Scales a nonzero rational vector with zero sum to its primitive
    /// integer multiple.
    pub fn primitive_from_rational(v: &[Rational]) -> Result<Self> {
        let lcm = v
            .iter()
            .fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<_> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
        let g = ints
            .iter()
            .fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return Err(Error::InvalidWeights("all entries zero".into()));
        }
        let entries = ints
            .iter()
            .map(|x| (x / &g).to_i64())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidWeights("entry exceeds i64".into()))?;
        Self::new(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `r_0 ≤ r_1 ≤ … ≤ r_n`.
    pub fn is_normalized(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_primitive(&self) -> bool {
        self.0.iter().fold(0i64, |g, &x| g.gcd(&x.abs())) == 1
    }

    /// Weights after relabelling coordinates: entry `i` becomes `r_{σ(i)}`.
    pub fn permuted(&self, sigma: &[usize]) -> WeightVector {
        WeightVector(sigma.iter().map(|&j| self.0[j]).collect())
    }
}

impl std::str::FromStr for WeightVector {
    type Err = Error;

    /// Comma separated integers, e.g. `-1,0,1`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidArgument(format!("bad weight `{}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

/// The set `𝓘(F)` of bracket monomials `Δ_{I_1}⋯Δ_{I_d}` with nonzero
/// coefficient in the Chow form of an `r`-dimensional degree-`d` cycle in
/// `ℙ^n`. Each tuple is a multiset of `d` subsets of `{0,…,n}` of size `n−r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BracketSupport {
    n: usize,
    dim: usize,
    degree: usize,
    tuples: Vec<Vec<Vec<usize>>>,
}

impl BracketSupport {
    pub fn new(n: usize, dim: usize, tuples: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        if dim >= n {
            return Err(Error::InvalidBracket(format!("cycle dimension {dim} must be below n = {n}")));
        }
        if tuples.is_empty() {
            return Err(Error::InvalidBracket("empty support".into()));
        }
        let size = n - dim;
        let degree = tuples[0].len();
        if degree == 0 {
            return Err(Error::InvalidBracket("degree must be at least 1".into()));
        }
        let mut canonical = Vec::with_capacity(tuples.len());
        for tuple in tuples {
            if tuple.len() != degree {
                return Err(Error::InvalidBracket(format!(
                    "tuple has {} subsets, expected {degree}",
                    tuple.len()
                )));
            }
            let mut sorted_tuple = Vec::with_capacity(degree);
            for mut subset in tuple {
                subset.sort_unstable();
                subset.dedup();
                if subset.len() != size {
                    return Err(Error::InvalidBracket(format!(
                        "subset {subset:?} must have {size} distinct elements"
                    )));
                }
                if subset.iter().any(|&i| i > n) {
                    return Err(Error::InvalidBracket(format!("index out of range in {subset:?}")));
                }
                sorted_tuple.push(subset);
            }
            sorted_tuple.sort();
            canonical.push(sorted_tuple);
        }
        canonical.sort();
        canonical.dedup();
        Ok(BracketSupport {
            n,
            dim,
            degree,
            tuples: canonical,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn tuples(&self) -> &[Vec<Vec<usize>>] {
        &self.tuples
    }

    /// For each tuple the occurrence counts `#{ℓ : i ∈ I_ℓ}`, `i = 0..=n`.
    pub fn count_vectors(&self) -> Vec<Vec<u32>> {
        self.tuples
            .iter()
            .map(|tuple| {
                let mut counts = vec![0u32; self.n + 1];
                for i in tuple.iter().flatten() {
                    counts[*i] += 1;
                }
                counts
            })
            .collect()
    }

    /// Parses `0,1|2,3;0,2|1,3`: tuples separated by `;`, subsets inside a
    /// tuple by `|`, indices by `,`.
    pub fn parse(n: usize, dim: usize, text: &str) -> Result<Self> {
        let parse_index = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidBracket(format!("bad index `{}`", t.trim())))
        };
        let tuples = text
            .split(';')
            .filter(|t| !t.trim().is_empty())
            .map(|tuple| {
                tuple
                    .split('|')
                    .map(|subset| subset.split(',').map(parse_index).collect())
                    .collect()
            })
            .collect::<Result<Vec<Vec<Vec<usize>>>>>()?;
        Self::new(n, dim, tuples)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_vector_invariants() {
        assert!(WeightVector::new(vec![-1, 0, 1]).is_ok());
        assert!(WeightVector::new(vec![0, 0]).is_err());
        assert!(WeightVector::new(vec![1, 1]).is_err());
        let r: WeightVector = "2, -1, -1".parse().unwrap();
        assert!(!r.is_normalized());
        assert!(r.permuted(&[1, 2, 0]).is_normalized());
    }

    #[test]
    fn primitive_scaling() {
        let half = |n: i64| Rational::new(n.into(), 2.into());
        let r = WeightVector::primitive_from_rational(&[half(2), half(-1), half(-1)]).unwrap();
        assert_eq!(r.entries(), &[2, -1, -1]);
        assert!(r.is_primitive());
        let r = WeightVector::primitive_from_rational(&[half(4), half(-4), half(0)]).unwrap();
        assert_eq!(r.entries(), &[1, -1, 0]);
    }

    #[test]
    fn bracket_validation() {
        assert!(BracketSupport::parse(3, 1, "0,1|0,1").is_ok());
        assert!(BracketSupport::parse(3, 1, "0,1|0").is_err());
        assert!(BracketSupport::parse(3, 1, "0,1|0,4").is_err());
        assert!(BracketSupport::parse(3, 1, "0,1|2,3;0,1").is_err());
        assert!(BracketSupport::parse(3, 3, "0").is_err());
        assert!(BracketSupport::parse(3, 1, "").is_err());
        let s = BracketSupport::parse(3, 1, "1,0|3,2").unwrap();
        assert_eq!(s.count_vectors(), vec![vec![1, 1, 1, 1]]);
    }
}
