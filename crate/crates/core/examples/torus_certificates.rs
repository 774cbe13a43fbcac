//! Torus stability of a few plane cubics and of line configurations in P^3.
//!
//! Run with `cargo run --example torus_certificates`.

use chowstab::algebra::{Domain, Poly};
use chowstab::stability::{torus_certificate, torus_certificate_bracket, BracketSupport};

fn main() -> chowstab::Result<()> {
    let cubics = [
        ("Fermat cubic", "x0^3 + x1^3 + x2^3"),
        ("three lines", "x0*x1*x2"),
        ("cuspidal cubic", "x1^2*x2 - x0^3"),
        ("nodal cubic", "x1^2*x2 - x0^3 - x0^2*x2"),
    ];
    for (name, text) in cubics {
        let f = Poly::parse(text, 3, Domain::Rational)?;
        let cert = torus_certificate(&f)?;
        print!("{name:<16} {:<28}", cert.verdict.as_str());
        if let Some(r) = &cert.witness_r {
            print!(" r = {:?}, mu = {}", r.entries(), cert.mu_value.unwrap_or_default());
        }
        match &cert.lp_value {
            Some(t) => println!(", t* = {t}"),
            None => println!(),
        }
    }

    // lines in P^3 by their Plücker bracket supports
    let supports = [
        ("two skew lines", "0,1|2,3"),
        ("double line", "0,1|0,1"),
    ];
    for (name, text) in supports {
        let s = BracketSupport::parse(3, 1, text)?;
        let cert = torus_certificate_bracket(&s)?;
        println!("{name:<16} {}", cert.verdict.as_str());
    }
    Ok(())
}
