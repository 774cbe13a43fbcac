//! The resultant of the partials of a binary quartic, compared with
//! 4S^3 - T^2 over Z and modulo 2.

use chowstab::algebra::{Domain, Poly, Prime};
use chowstab::discriminant::{
    discriminant_binary, quartic_st, quartic_st_generic, smoothness_binary, BinaryForm, DiscMode,
};
use chowstab::Rational;

fn main() -> chowstab::Result<()> {
    // coefficients a_k of X0^{4-k} X1^k print as x_k
    let res = discriminant_binary(4, DiscMode::Generic)?;
    let inv = quartic_st_generic();
    println!("Res has {} terms; D = 4S^3 - T^2 has {} terms", res.len(), inv.d.len());
    let lhs = res.scale(&Rational::from_integer(27.into()))?;
    let rhs = inv.d.scale(&Rational::from_integer(16.into()))?;
    println!("27 Res == 16 D: {}", lhs == rhs);

    let two = Prime::new(2)?;
    println!("T mod 2 = {}", inv.t.reduce_mod_p(two)?);
    println!("D mod 2 = {}", inv.d.reduce_mod_p(two)?);

    let values: Vec<Rational> = [1, 0, 0, 0, 1].iter().map(|&c| Rational::from_integer(c.into())).collect();
    let x4y4 = quartic_st(&BinaryForm::from_values(&values, Domain::Integer)?)?;
    println!("X0^4 + X1^4: S = {}, T = {}, D = {}", x4y4.s, x4y4.t, x4y4.d);

    for p in [0u64, 2, 3, 5] {
        let domain = if p == 0 { Domain::Rational } else { Domain::prime(p)? };
        let f = Poly::parse("x0^4 + x1^4", 2, domain)?;
        let disc = discriminant_binary(4, DiscMode::Numeric(&f))?;
        println!("over {domain}: disc = {disc}, smooth = {}", smoothness_binary(&f)?);
    }
    Ok(())
}
