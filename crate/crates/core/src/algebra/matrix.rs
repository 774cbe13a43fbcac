use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Domain;
use crate::{Rational, Result};

/// Dense square matrix with exact rational entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Rational::one();
        }
        Matrix { n, entries }
    }

    /// Panics if `rows` is not square.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
                .collect(),
        )
    }

    /// Matrix sending `X_i` to `X_{perm[i]}` under [`super::Poly::apply_matrix`].
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Matrix {
            n,
            entries: vec![Rational::zero(); n * n],
        };
        for (i, &j) in perm.iter().enumerate() {
            m.entries[i * n + j] = Rational::one();
        }
        m
    }

    /// `I + s·E_{ij}` (requires `i != j`); substitutes `X_i ↦ X_i + s·X_j`.
    pub fn transvection(n: usize, i: usize, j: usize, s: i64) -> Self {
        assert_ne!(i, j);
        let mut m = Self::identity(n);
        m.entries[i * n + j] = Rational::from_integer(BigInt::from(s));
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.n.max(1))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * &other.entries[k * n + j];
                }
            }
        }
        Matrix { n, entries }
    }

    /// Entry-wise reduction into `domain`.
    pub fn reduce(&self, domain: Domain) -> Result<Matrix> {
        Ok(Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|c| domain.reduce(c))
                .collect::<Result<_>>()?,
        })
    }

    /// Determinant over ℚ by Gaussian elimination.
    pub fn determinant(&self) -> Rational {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det *= &p;
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let factor = &a[r * n + col] / &p;
                for j in col..n {
                    let sub = &factor * &a[col * n + j];
                    a[r * n + j] -= sub;
                }
            }
        }
        det
    }

    /// Rows of entries rendered as strings, for serialization.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        self.rows()
            .map(|r| r.iter().map(|c| c.to_string()).collect())
            .collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_string_rows()
            .into_iter()
            .map(|r| format!("[{}]", r.join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(k: i64) -> Rational {
        Rational::from_integer(BigInt::from(k))
    }

    #[test]
    fn determinants() {
        assert_eq!(Matrix::identity(4).determinant(), int(1));
        assert_eq!(Matrix::permutation(&[1, 0, 2]).determinant(), int(-1));
        assert_eq!(Matrix::transvection(3, 0, 2, 5).determinant(), int(1));
        let m = Matrix::from_i64(&[vec![0, 2, 1], vec![1, 1, 1], vec![3, 0, 4]]);
        // 0*(4-0) - 2*(4-3) + 1*(0-3)
        assert_eq!(m.determinant(), int(-5));
    }

    #[test]
    fn product() {
        let a = Matrix::from_i64(&[vec![1, 2], vec![3, 4]]);
        let b = Matrix::from_i64(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b), Matrix::from_i64(&[vec![2, 1], vec![4, 3]]));
    }
}
