use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::certificate::{has_positive_weight, torus_certificate, StabilityCertificate};
use crate::algebra::{Matrix, Poly};
use crate::{Error, Result};

/// Limits for [`destab_search`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    /// Hard cap on the number of matrices examined, across all stages.
    pub max_candidates: usize,
    /// Scalars `s` for transvections `X_i ↦ X_i + s·X_j`.
    pub transvection_scalars: Vec<i64>,
    /// Longest product of transvections enumerated exhaustively.
    pub depth: usize,
    /// Number of seeded pseudo-random unimodular matrices tried last.
    pub random_candidates: usize,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_candidates: 100_000,
            transvection_scalars: vec![1, -1],
            depth: 2,
            random_candidates: 2_000,
            seed: 0,
        }
    }
}

/// Matrices examined per stage.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchCounters {
    pub identity: usize,
    pub permutations: usize,
    pub transvection_products: usize,
    pub random: usize,
    pub evaluated: usize,
}

#[derive(Clone, Copy)]
enum Stage {
    Identity,
    Permutations,
    Transvections,
    Random,
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn permutations(n: usize, cap: usize) -> Vec<Matrix> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    while out.len() < cap && next_permutation(&mut perm) {
        out.push(Matrix::permutation(&perm));
    }
    out
}

fn transvection_products(n: usize, scalars: &[i64], depth: usize, cap: usize) -> Vec<Matrix> {
    let elementary: Vec<Matrix> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .flat_map(|(i, j)| {
            scalars
                .iter()
                .filter(|&&s| s != 0)
                .map(move |&s| Matrix::transvection(n, i, j, s))
        })
        .collect();
    let mut out: Vec<Matrix> = Vec::new();
    let mut frontier = vec![Matrix::identity(n)];
    for _ in 0..depth {
        let mut next = Vec::new();
        for m in &frontier {
            for e in &elementary {
                if out.len() + next.len() >= cap {
                    break;
                }
                next.push(m.mul(e));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
        if out.len() >= cap {
            break;
        }
    }
    out.truncate(cap);
    out
}

/// `P·L·U` with unit triangular `L`, `U` (entries in `[-2, 2]`) and a random
/// permutation `P`; determinant ±1.
fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let mut lower = vec![vec![0i64; n]; n];
    let mut upper = vec![vec![0i64; n]; n];
    for i in 0..n {
        lower[i][i] = 1;
        upper[i][i] = 1;
        for j in 0..i {
            lower[i][j] = rng.gen_range(-2..=2);
            upper[j][i] = rng.gen_range(-2..=2);
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Matrix::permutation(&perm)
        .mul(&Matrix::from_i64(&lower))
        .mul(&Matrix::from_i64(&upper))
}

/// Searches coordinate changes `g` for a diagonal weight with `μ > 0` on
/// `F(g·X)`, in the order identity, permutations, transvection products up
/// to `depth`, seeded random unimodular matrices.
///
/// Candidates are evaluated in parallel, but the witness reported is always
/// the first in enumeration order. Not finding one yields
/// [`super::Verdict::UnknownAfterSearch`], which says nothing about
/// stability.
pub fn destab_search(f: &Poly, budget: &SearchBudget) -> Result<StabilityCertificate> {
    if budget.max_candidates == 0 {
        return Err(Error::InvalidArgument("empty search budget".into()));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = f.nvars();
    let mut counters = SearchCounters::default();
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    for stage in [
        Stage::Identity,
        Stage::Permutations,
        Stage::Transvections,
        Stage::Random,
    ] {
        let remaining = budget.max_candidates - counters.evaluated;
        if remaining == 0 {
            break;
        }
        let candidates = match stage {
            Stage::Identity => vec![Matrix::identity(n)],
            Stage::Permutations => permutations(n, remaining),
            Stage::Transvections => {
                transvection_products(n, &budget.transvection_scalars, budget.depth, remaining)
            }
            Stage::Random => (0..budget.random_candidates.min(remaining))
                .map(|_| random_unimodular(n, &mut rng))
                .collect(),
        };
        let hit = candidates
            .par_iter()
            .enumerate()
            .map(|(k, g)| -> Result<Option<(usize, Poly)>> {
                let moved = f.apply_matrix(g)?;
                Ok(has_positive_weight(&moved)?.then_some((k, moved)))
            })
            .find_map_first(|res| match res {
                Ok(None) => None,
                other => Some(other),
            });
        let examined = match &hit {
            Some(Ok(Some((k, _)))) => k + 1,
            _ => candidates.len(),
        };
        counters.evaluated += examined;
        match stage {
            Stage::Identity => counters.identity += examined,
            Stage::Permutations => counters.permutations += examined,
            Stage::Transvections => counters.transvection_products += examined,
            Stage::Random => counters.random += examined,
        }
        match hit {
            Some(Err(e)) => return Err(e),
            Some(Ok(Some((k, moved)))) => {
                let mut cert = torus_certificate(&moved)?;
                cert.witness_g = Some(candidates[k].clone());
                cert.search_budget_used = counters;
                return Ok(cert);
            }
            _ => {}
        }
    }
    Ok(StabilityCertificate::unknown(counters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Domain;
    use crate::stability::{mu_hypersurface, Verdict};
    use num_traits::{One, Signed};

    fn p(s: &str, n: usize) -> Poly {
        Poly::parse(s, n, Domain::Rational).unwrap()
    }

    #[test]
    fn permutation_enumeration() {
        assert_eq!(permutations(3, 100).len(), 5);
        assert_eq!(permutations(4, 100).len(), 23);
        assert_eq!(permutations(4, 7).len(), 7);
    }

    #[test]
    fn transvection_enumeration_sizes() {
        // 6 ordered pairs × 2 scalars = 12, then 144 products of two
        assert_eq!(transvection_products(3, &[1, -1], 1, usize::MAX).len(), 12);
        assert_eq!(transvection_products(3, &[1, -1], 2, usize::MAX).len(), 156);
    }

    #[test]
    fn random_matrices_are_unimodular() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let det = random_unimodular(4, &mut rng).determinant();
            assert!(det.abs().is_one());
        }
    }

    #[test]
    fn single_monomial_found_at_identity() {
        let cert = destab_search(&p("x0^3", 3), &SearchBudget::default()).unwrap();
        assert_eq!(cert.verdict, Verdict::UnstableWitness);
        assert_eq!(cert.witness_g, Some(Matrix::identity(3)));
        let r = cert.witness_r.as_ref().unwrap();
        assert!(r.is_primitive());
        assert_eq!(cert.mu_value, Some(mu_hypersurface(&p("x0^3", 3), r).unwrap()));
        assert_eq!(cert.mu_value, Some(3));
        assert_eq!(cert.search_budget_used.evaluated, 1);
    }

    #[test]
    fn conjugated_cusp_is_found() {
        let cusp = p("x1^2*x2 - x0^3", 3);
        let g0 = Matrix::transvection(3, 2, 0, 1).mul(&Matrix::transvection(3, 1, 2, -1));
        let hidden = cusp.apply_matrix(&g0).unwrap();
        let budget = SearchBudget {
            random_candidates: 0,
            ..SearchBudget::default()
        };
        let cert = destab_search(&hidden, &budget).unwrap();
        assert_eq!(cert.verdict, Verdict::UnstableWitness);
        let g = cert.witness_g.unwrap();
        let moved = hidden.apply_matrix(&g).unwrap();
        assert!(mu_hypersurface(&moved, cert.witness_r.as_ref().unwrap()).unwrap() > 0);
    }

    #[test]
    fn empty_budget_is_an_error() {
        let budget = SearchBudget {
            max_candidates: 0,
            ..SearchBudget::default()
        };
        assert!(destab_search(&p("x0^3", 3), &budget).is_err());
    }

    #[test]
    fn search_is_seed_reproducible() {
        let f = p("x0^3 + x1^3 + x2^3", 3);
        let budget = SearchBudget {
            random_candidates: 50,
            seed: 11,
            ..SearchBudget::default()
        };
        let a = destab_search(&f, &budget).unwrap();
        let b = destab_search(&f, &budget).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.verdict, Verdict::UnknownAfterSearch);
        assert_eq!(a.search_budget_used.evaluated, 1 + 5 + 156 + 50);
    }
}
