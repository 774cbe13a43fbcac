//! Critical points of forms over finite fields.

use chowstab::algebra::{Domain, Poly};
use chowstab::discriminant::{cyclic_critical_exponent, cyclic_form, singular_locus_enumerate};

fn main() -> chowstab::Result<()> {
    let quadric = Poly::parse("x0*x1 + x2*x3", 4, Domain::prime(2)?)?;
    for e in 1..=3 {
        let locus = singular_locus_enumerate(&quadric, e, false)?;
        println!("x0*x1 + x2*x3 over F_{}: {} critical points ({})", locus.field.size(), locus.points.len(), locus.label.as_str());
    }

    let cyclic = cyclic_form(2, 3, Domain::prime(3)?)?;
    let locus = singular_locus_enumerate(&cyclic, 2, false)?;
    println!("{cyclic} over F_9:");
    for pt in &locus.points {
        println!("  {}", pt.format(&locus.field));
    }
    for (n, d) in [(2, 3), (1, 2), (2, 2), (3, 4)] {
        println!("critical exponent for n = {n}, d = {d}: {}", cyclic_critical_exponent(n, d)?);
    }
    Ok(())
}
