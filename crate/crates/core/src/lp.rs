//! Exact two-phase primal simplex over the rationals.
//!
//! Variables are non-negative; the objective is maximized. Pivoting uses
//! Bland's rule, so the method terminates on degenerate problems, which are
//! the norm for the Newton-polytope programs built in [`crate::stability`].

use num_traits::{One, Signed, Zero};

use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    LessEq,
    GreaterEq,
    Equal,
}

#[derive(Debug, Clone)]
struct Constraint {
    coeffs: Vec<Rational>,
    relation: Relation,
    rhs: Rational,
}

/// `max ⟨c, x⟩` subject to linear constraints and `x ≥ 0`.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    num_vars: usize,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub value: Rational,
    pub point: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn optimal(self) -> Option<LpSolution> {
        match self {
            LpOutcome::Optimal(s) => Some(s),
            _ => None,
        }
    }
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            objective: vec![Rational::zero(); num_vars],
            constraints: Vec::new(),
        }
    }

    pub fn maximize(&mut self, objective: Vec<Rational>) -> &mut Self {
        assert_eq!(objective.len(), self.num_vars);
        self.objective = objective;
        self
    }

    pub fn constrain(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> &mut Self {
        assert_eq!(coeffs.len(), self.num_vars);
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
        self
    }

    pub fn solve(&self) -> LpOutcome {
        Tableau::build(self).run(&self.objective)
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    num_vars: usize,
    num_cols: usize,
    first_artificial: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let m = lp.constraints.len();
        // normalize right-hand sides to be non-negative
        let normalized: Vec<Constraint> = lp
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    Constraint {
                        coeffs: c.coeffs.iter().map(|a| -a).collect(),
                        relation: match c.relation {
                            Relation::LessEq => Relation::GreaterEq,
                            Relation::GreaterEq => Relation::LessEq,
                            Relation::Equal => Relation::Equal,
                        },
                        rhs: -c.rhs.clone(),
                    }
                } else {
                    c.clone()
                }
            })
            .collect();
        let slacks = normalized
            .iter()
            .filter(|c| c.relation != Relation::Equal)
            .count();
        let artificials = normalized
            .iter()
            .filter(|c| c.relation != Relation::LessEq)
            .count();
        let first_slack = lp.num_vars;
        let first_artificial = first_slack + slacks;
        let num_cols = first_artificial + artificials;

        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let (mut s, mut a) = (first_slack, first_artificial);
        for c in normalized {
            let mut row = vec![Rational::zero(); num_cols + 1];
            row[..lp.num_vars].clone_from_slice(&c.coeffs);
            row[num_cols] = c.rhs;
            match c.relation {
                Relation::LessEq => {
                    row[s] = Rational::one();
                    basis.push(s);
                    s += 1;
                }
                Relation::GreaterEq => {
                    row[s] = -Rational::one();
                    s += 1;
                    row[a] = Rational::one();
                    basis.push(a);
                    a += 1;
                }
                Relation::Equal => {
                    row[a] = Rational::one();
                    basis.push(a);
                    a += 1;
                }
            }
            rows.push(row);
        }
        Tableau {
            rows,
            basis,
            num_vars: lp.num_vars,
            num_cols,
            first_artificial,
        }
    }

    /// Reduced-cost row for `costs`; the last entry holds minus the
    /// current objective value.
    fn cost_row(&self, costs: &[Rational]) -> Vec<Rational> {
        let mut obj = vec![Rational::zero(); self.num_cols + 1];
        obj[..costs.len()].clone_from_slice(costs);
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = obj[b].clone();
            if cb.is_zero() {
                continue;
            }
            for (o, x) in obj.iter_mut().zip(row) {
                *o -= &cb * x;
            }
        }
        obj
    }

    fn pivot(&mut self, obj: &mut [Rational], r: usize, s: usize) {
        let inv = self.rows[r][s].recip();
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[s].is_zero() {
                continue;
            }
            let f = row[s].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        if !obj[s].is_zero() {
            let f = obj[s].clone();
            for (x, p) in obj.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = s;
    }

    /// Simplex iterations with Bland's rule over columns `< allowed`.
    /// Returns false if the objective is unbounded.
    fn iterate(&mut self, obj: &mut [Rational], allowed: usize) -> bool {
        let rhs = self.num_cols;
        loop {
            let Some(s) = (0..allowed).find(|&j| obj[j].is_positive()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[s].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[s];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else {
                return false;
            };
            self.pivot(obj, r, s);
        }
    }

    fn run(mut self, objective: &[Rational]) -> LpOutcome {
        let rhs = self.num_cols;
        if self.first_artificial < self.num_cols {
            let mut phase1 = vec![Rational::zero(); self.num_cols];
            for c in phase1.iter_mut().skip(self.first_artificial) {
                *c = -Rational::one();
            }
            let mut obj = self.cost_row(&phase1);
            self.iterate(&mut obj, self.num_cols);
            if !obj[rhs].is_zero() {
                return LpOutcome::Infeasible;
            }
            // drive zero-level artificials out of the basis
            let mut i = 0;
            while i < self.rows.len() {
                if self.basis[i] >= self.first_artificial {
                    match (0..self.first_artificial).find(|&j| !self.rows[i][j].is_zero()) {
                        Some(j) => {
                            self.pivot(&mut obj, i, j);
                            i += 1;
                        }
                        None => {
                            self.rows.remove(i);
                            self.basis.remove(i);
                        }
                    }
                } else {
                    i += 1;
                }
            }
        }
        let mut costs = objective.to_vec();
        costs.resize(self.num_cols, Rational::zero());
        let mut obj = self.cost_row(&costs);
        if !self.iterate(&mut obj, self.first_artificial) {
            return LpOutcome::Unbounded;
        }
        let mut point = vec![Rational::zero(); self.num_vars];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            if b < self.num_vars {
                point[b] = row[rhs].clone();
            }
        }
        LpOutcome::Optimal(LpSolution {
            value: -obj[rhs].clone(),
            point,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn rv(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| r(x)).collect()
    }

    #[test]
    fn textbook_problem() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6)
        let mut lp = LinearProgram::new(2);
        lp.maximize(rv(&[3, 5]))
            .constrain(rv(&[1, 0]), Relation::LessEq, r(4))
            .constrain(rv(&[0, 2]), Relation::LessEq, r(12))
            .constrain(rv(&[3, 2]), Relation::LessEq, r(18));
        let sol = lp.solve().optimal().unwrap();
        assert_eq!(sol.value, r(36));
        assert_eq!(sol.point, rv(&[2, 6]));
    }

    #[test]
    fn equality_and_ge_constraints() {
        // max -x - y s.t. x + y = 3, x >= 1 -> -3
        let mut lp = LinearProgram::new(2);
        lp.maximize(rv(&[-1, -1]))
            .constrain(rv(&[1, 1]), Relation::Equal, r(3))
            .constrain(rv(&[1, 0]), Relation::GreaterEq, r(1));
        assert_eq!(lp.solve().optimal().unwrap().value, r(-3));
    }

    #[test]
    fn fractional_optimum() {
        // max x + y s.t. 2x + y <= 2, x + 3y <= 3 -> (3/5, 4/5)
        let mut lp = LinearProgram::new(2);
        lp.maximize(rv(&[1, 1]))
            .constrain(rv(&[2, 1]), Relation::LessEq, r(2))
            .constrain(rv(&[1, 3]), Relation::LessEq, r(3));
        let sol = lp.solve().optimal().unwrap();
        assert_eq!(sol.value, Rational::new(BigInt::from(7), BigInt::from(5)));
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(1);
        lp.maximize(rv(&[1]))
            .constrain(rv(&[1]), Relation::LessEq, r(1))
            .constrain(rv(&[1]), Relation::GreaterEq, r(2));
        assert_eq!(lp.solve(), LpOutcome::Infeasible);

        let mut lp = LinearProgram::new(2);
        lp.maximize(rv(&[1, 0]))
            .constrain(rv(&[1, -1]), Relation::LessEq, r(1));
        assert_eq!(lp.solve(), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_equalities() {
        let mut lp = LinearProgram::new(2);
        lp.maximize(rv(&[1, 2]))
            .constrain(rv(&[1, 1]), Relation::Equal, r(2))
            .constrain(rv(&[2, 2]), Relation::Equal, r(4));
        assert_eq!(lp.solve().optimal().unwrap().value, r(4));
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example cycles under the Dantzig rule without anti-cycling.
        let q = |n, d| Rational::new(BigInt::from(n), BigInt::from(d));
        let mut lp = LinearProgram::new(4);
        lp.maximize(vec![q(3, 4), r(-150), q(1, 50), r(-6)])
            .constrain(vec![q(1, 4), r(-60), q(-1, 25), r(9)], Relation::LessEq, r(0))
            .constrain(vec![q(1, 2), r(-90), q(-1, 50), r(3)], Relation::LessEq, r(0))
            .constrain(rv(&[0, 0, 1, 0]), Relation::LessEq, r(1));
        assert_eq!(lp.solve().optimal().unwrap().value, q(1, 20));
    }
}
