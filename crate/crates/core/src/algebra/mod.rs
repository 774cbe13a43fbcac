//! Exact coefficient arithmetic and sparse multivariate polynomials.

mod domain;
mod exponent;
mod matrix;
mod parse;
mod poly;
mod prime;

pub use domain::Domain;
pub use exponent::Exponent;
pub use matrix::Matrix;
pub use poly::Poly;
pub use prime::{is_prime, Fp, Prime};
