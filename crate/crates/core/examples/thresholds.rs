//! Weighted bounds for log canonical thresholds, F-pure threshold
//! intervals, and the verdict rule fed by a certified lower bound.

use chowstab::algebra::{Domain, Poly};
use chowstab::thresholds::{
    blowup_discrepancy, fpt_interval, lct_bound_optimize, lee_verdict, BoundKind,
};
use chowstab::Rational;

fn main() -> chowstab::Result<()> {
    let cusp = Poly::parse("x0^2 + x1^3", 2, Domain::Rational)?;
    let best = lct_bound_optimize(&cusp, 6)?;
    println!("cusp: lct <= {} with weights {:?}", best.best_bound, best.best_w.entries());
    for c in ["5/6", "1"] {
        let c: Rational = c.parse().expect("rational literal");
        println!("  discrepancy at c = {c}: {}", blowup_discrepancy(&cusp, &best.best_w, &c)?);
    }

    for p in [2u64, 3, 5, 7] {
        let f = Poly::parse("x0^2 + x1^3", 2, Domain::prime(p)?)?;
        let i = fpt_interval(&f, 3)?;
        println!("cusp over F_{p}: fpt in [{}, {}]", i.lower, i.upper);
    }

    // a smooth quartic curve has threshold 1 everywhere
    let v = lee_verdict(2, 4, &Rational::from_integer(1.into()), BoundKind::LctLower)?;
    println!("smooth plane quartic: {} (threshold {})", v.outcome.as_str(), v.threshold);
    // a doubled cubic surface only gets the ceiling 1/2
    let v = lee_verdict(3, 6, &Rational::new(1.into(), 2.into()), BoundKind::LctLower)?;
    println!("doubled cubic surface: {} (threshold {})", v.outcome.as_str(), v.threshold);
    Ok(())
}
