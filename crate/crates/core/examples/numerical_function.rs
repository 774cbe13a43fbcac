//! The numerical function for hypersurfaces and bracket supports, and the
//! weighted-multiplicity ratio in the chart X0 = 1.

use chowstab::algebra::{Domain, Poly};
use chowstab::stability::{
    lee_ratio, mu_bracket, mu_hypersurface, numerical_identity_check, BracketSupport, WeightVector,
};

fn main() -> chowstab::Result<()> {
    let f = Poly::parse("x0^3 + x1^3 + x2^3", 3, Domain::Rational)?;
    for text in ["-1,0,1", "-2,1,1", "-1,-1,2"] {
        let r: WeightVector = text.parse()?;
        let ratio = lee_ratio(&f, &r)?;
        let check = numerical_identity_check(&f, &r)?;
        println!(
            "r = ({text}): mu = {}, w(f) = {}, sum w = {}, ratio = {} vs {}, identity residual = {}",
            mu_hypersurface(&f, &r)?,
            ratio.w_f,
            ratio.sum_wxi,
            ratio.ratio,
            ratio.threshold,
            check.residual
        );
    }

    // two skew lines in P^3 against a weight separating them
    let lines = BracketSupport::parse(3, 1, "0,1|2,3")?;
    let r: WeightVector = "-1,-1,1,1".parse()?;
    println!("skew lines, r = (-1,-1,1,1): mu = {}", mu_bracket(&lines, &r)?);
    Ok(())
}
