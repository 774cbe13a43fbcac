//! Binary-form resultants and discriminants, the binary quartic invariants,
//! smoothness of binary forms, and finite-field singular-point searches.

mod binary;
mod galois;
mod singular;
mod univariate;

pub use binary::{
    bareiss_determinant, discriminant_binary, quartic_st, quartic_st_generic, sylvester_matrix,
    sylvester_resultant, BinaryForm, DiscMode, QuarticInvariants,
};
pub use galois::GaloisField;
pub use singular::{
    cyclic_critical_exponent, cyclic_form, singular_locus_enumerate, LocusLabel, ProjPoint,
    SingularLocus, POINT_LIMIT,
};
pub use univariate::smoothness_binary;
