//! Looks for a coordinate change that exposes instability.
//!
//! A cusp hidden by a linear change of variables is torus-semistable in the
//! given coordinates, but the search finds a transvection product undoing it.

use chowstab::algebra::{Domain, Matrix, Poly};
use chowstab::stability::{destab_search, torus_certificate, SearchBudget};

fn main() -> chowstab::Result<()> {
    let cusp = Poly::parse("x1^2*x2 - x0^3", 3, Domain::Rational)?;
    let g = Matrix::transvection(3, 2, 0, 1).mul(&Matrix::transvection(3, 1, 2, -1));
    let hidden = cusp.apply_matrix(&g)?;
    println!("hidden cusp: {hidden}");
    println!("torus verdict in these coordinates: {}", torus_certificate(&hidden)?.verdict.as_str());

    let budget = SearchBudget {
        seed: 7,
        ..SearchBudget::default()
    };
    let cert = destab_search(&hidden, &budget)?;
    println!("search verdict: {}", cert.verdict.as_str());
    if let (Some(m), Some(r)) = (&cert.witness_g, &cert.witness_r) {
        println!("  g = {m}");
        println!("  r = {:?}, mu = {:?}", r.entries(), cert.mu_value);
    }
    println!("  budget used: {:?}", cert.search_budget_used);

    let fermat = Poly::parse("x0^3 + x1^3 + x2^3", 3, Domain::prime(5)?)?;
    let cert = destab_search(&fermat, &budget)?;
    println!("Fermat cubic over F_5: {} after {} candidates", cert.verdict.as_str(), cert.search_budget_used.evaluated);
    Ok(())
}
