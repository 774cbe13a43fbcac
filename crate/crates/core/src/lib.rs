//! Exact Hilbert–Mumford stability toolkit.
//!
//! The crate decides torus (semi-)stability of projective hypersurfaces and of
//! Chow-form bracket supports by exact rational linear programming, searches
//! coordinate changes for destabilizing one-parameter subgroups, and computes
//! the companion invariants used when stability is argued through
//! singularities: weighted-multiplicity bounds for log canonical thresholds,
//! F-pure threshold intervals, binary-form resultants and discriminants, and
//! singular points over finite fields.
//!
//! All arithmetic is exact. Coefficients live in ℤ, ℚ or a prime field
//! `F_p` (see [`algebra::Domain`]); finite extensions only appear inside
//! [`discriminant::GaloisField`] for point enumeration.
//!
//! ```
//! use chowstab::algebra::{Domain, Poly};
//! use chowstab::stability::{torus_certificate, Verdict};
//!
//! let fermat = Poly::parse("x0^3 + x1^3 + x2^3", 3, Domain::Rational).unwrap();
//! let cert = torus_certificate(&fermat).unwrap();
//! assert_eq!(cert.verdict, Verdict::StableTorus);
//! ```

pub mod algebra;
pub mod cli;
pub mod cycles;
pub mod discriminant;
mod error;
pub mod lp;
pub mod stability;
pub mod thresholds;

pub use error::{Error, Result};

/// Exact rational number used throughout the crate.
pub type Rational = num_rational::BigRational;
