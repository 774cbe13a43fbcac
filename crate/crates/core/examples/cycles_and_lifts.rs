//! Sums and multiples of cycles, and lifting a form from F_p to Z without
//! changing its support.

use chowstab::algebra::{Domain, Poly};
use chowstab::cycles::{lift_support, multiple_cycle, sum_cycles, transfer_check};
use chowstab::stability::{mu_hypersurface, torus_certificate, WeightVector};

fn main() -> chowstab::Result<()> {
    let q = |s: &str| Poly::parse(s, 3, Domain::Rational);
    let conic = q("x0^2 + x1^2 + x2^2")?;
    let line = q("x0 + x1 + x2")?;
    let union = sum_cycles(&conic, &line)?;
    let r: WeightVector = "-2,1,1".parse()?;
    println!(
        "mu(conic + line) = {} = {} + {}",
        mu_hypersurface(&union, &r)?,
        mu_hypersurface(&conic, &r)?,
        mu_hypersurface(&line, &r)?
    );

    let triple = multiple_cycle(&q("x0^3 + x1^3 + x2^3")?, 3)?;
    println!("3 * Fermat cubic: {} terms, {}", triple.len(), torus_certificate(&triple)?.verdict.as_str());

    let f = Poly::parse("x0^4 + 6*x0*x1^2*x2 + 3*x2^4", 3, Domain::prime(7)?)?;
    let lifted = lift_support(&f)?;
    let report = transfer_check(&f, 200, 1)?;
    println!("over F_7: {f}");
    println!("lift:     {lifted}");
    println!(
        "support preserved: {}, mu agrees on {} sampled weights: {}",
        report.support_preserved,
        report.mu_pairs.len(),
        report.all_equal
    );
    Ok(())
}
