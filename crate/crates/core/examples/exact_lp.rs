//! The exact simplex solver on its own, and the max-min program behind
//! torus certificates.

use chowstab::lp::{LinearProgram, Relation};
use chowstab::stability::lp_membership_maxmin;
use chowstab::Rational;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn main() {
    // maximize 3x + 2y subject to x + y <= 4, x + 3y <= 6, x <= 3
    let mut lp = LinearProgram::new(2);
    lp.maximize(vec![r(3, 1), r(2, 1)])
        .constrain(vec![r(1, 1), r(1, 1)], Relation::LessEq, r(4, 1))
        .constrain(vec![r(1, 1), r(3, 1)], Relation::LessEq, r(6, 1))
        .constrain(vec![r(1, 1), r(0, 1)], Relation::LessEq, r(3, 1));
    let sol = lp.solve().optimal().expect("bounded and feasible");
    println!("optimum {} at {:?}", sol.value, sol.point.iter().map(ToString::to_string).collect::<Vec<_>>());

    // support of x0^3 + x1^3 + x2^3 around the barycenter (1, 1, 1)
    let points: Vec<Vec<Rational>> = [[3, 0, 0], [0, 3, 0], [0, 0, 3]]
        .iter()
        .map(|p| p.iter().map(|&a| r(a, 1)).collect())
        .collect();
    let c = vec![r(1, 1); 3];
    let mm = lp_membership_maxmin(&points, &c).expect("well-formed");
    println!("Fermat cubic: t* = {} (zero means the barycenter is in the hull)", mm.t_star);
    let mm = lp_membership_maxmin(&points[..1], &c).expect("well-formed");
    println!("x0^3 alone: t* = {}", mm.t_star);
}
