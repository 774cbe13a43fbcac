//! Hilbert–Mumford numerical function and stability certificates.
//!
//! Sign convention: `μ(F, r) = min ⟨r, α⟩` over the support. The cycle is
//! stable iff `μ < 0` for every coordinate change and every nonzero weight,
//! semistable iff `μ ≤ 0`; a weight with `μ > 0` destabilizes.

mod certificate;
mod numerical;
mod search;
mod weights;

pub use certificate::{
    cone_nonzero_point, lp_membership_maxmin, torus_certificate, torus_certificate_bracket, MaxMin,
    StabilityCertificate, Verdict,
};
pub use numerical::{
    lee_ratio, mu_bracket, mu_hypersurface, numerical_identity_check, IdentityCheck, LeeRatio,
};
pub use search::{destab_search, SearchBudget, SearchCounters};
pub use weights::{BracketSupport, WeightVector};
