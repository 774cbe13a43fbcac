use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use super::GaloisField;
use crate::algebra::{Domain, Poly};
use crate::{Error, Result};

/// Bound on `p^{e(n+1)}` for point enumeration.
pub const POINT_LIMIT: u64 = 10_000_000;

/// A point of `ℙⁿ(F_{p^e})` with first nonzero coordinate `1`; coordinates
/// use the [`GaloisField`] encoding.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint(Vec<u32>);

impl ProjPoint {
    pub fn new(coords: Vec<u32>, field: &GaloisField) -> Result<Self> {
        let lead = coords
            .iter()
            .position(|&c| c != 0)
            .ok_or_else(|| Error::InvalidArgument("all coordinates are zero".into()))?;
        let inv = field.inv(coords[lead]).expect("nonzero");
        Ok(ProjPoint(coords.iter().map(|&c| field.mul(c, inv)).collect()))
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn format(&self, field: &GaloisField) -> String {
        let parts: Vec<String> = self.0.iter().map(|&c| field.format(c)).collect();
        format!("[{}]", parts.join(" : "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocusLabel {
    /// At least one point found; the locus is nonempty over the closure too.
    Nonempty,
    /// Nothing over the searched field. Not a proof of emptiness over the
    /// algebraic closure.
    NoneFoundOverField,
}

impl LocusLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            LocusLabel::Nonempty => "nonempty",
            LocusLabel::NoneFoundOverField => "none_found_over_field",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SingularLocus {
    pub field: GaloisField,
    pub points: Vec<ProjPoint>,
    pub label: LocusLabel,
    pub includes_f: bool,
}

/// Polynomial prepared for evaluation over `F_{p^e}`.
struct Evaluator {
    terms: Vec<(u32, Vec<u32>)>,
}

impl Evaluator {
    fn new(f: &Poly, field: &GaloisField) -> Self {
        let terms = f
            .terms()
            .map(|(ex, c)| {
                let c = c.to_integer().to_u64().expect("reduced residue");
                (field.from_residue(c), ex.entries().to_vec())
            })
            .collect();
        Evaluator { terms }
    }

    fn vanishes_at(&self, x: &[u32], field: &GaloisField) -> bool {
        let mut acc = 0;
        for (c, ex) in &self.terms {
            let mut t = *c;
            for (&xi, &a) in x.iter().zip(ex) {
                if a > 0 {
                    t = field.mul(t, field.pow(xi, a as u64));
                    if t == 0 {
                        break;
                    }
                }
            }
            acc = field.add(acc, t);
        }
        acc == 0
    }
}

/// All points of `ℙⁿ(F_{p^e})` where every `∂F/∂X_i` vanishes, and `F` as
/// well when `include_f` is set.
///
/// Points come out ordered by chart (position of the leading `1`) and then
/// by the base-`q` index of the remaining coordinates.
pub fn singular_locus_enumerate(f: &Poly, e: u32, include_f: bool) -> Result<SingularLocus> {
    let Domain::Prime(p) = f.domain() else {
        return Err(Error::DomainMismatch {
            left: f.domain().to_string(),
            right: "fp".into(),
        });
    };
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let nvars = f.nvars();
    (e as u64)
        .checked_mul(nvars as u64)
        .and_then(|k| u32::try_from(k).ok())
        .and_then(|k| p.get().checked_pow(k))
        .filter(|&t| t <= POINT_LIMIT)
        .ok_or_else(|| {
            Error::SizeLimit(format!("{}^({e}*{nvars}) points exceeds {POINT_LIMIT}", p.get()))
        })?;
    let field = GaloisField::new(p, e)?;
    let q = field.size();
    let mut polys: Vec<Poly> = (0..nvars)
        .map(|i| f.partial_derivative(i))
        .collect::<Result<_>>()?;
    if include_f {
        polys.push(f.clone());
    }
    let evals: Vec<Evaluator> = polys
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Evaluator::new(g, &field))
        .collect();

    let mut points = Vec::new();
    for lead in 0..nvars {
        let free = nvars - lead - 1;
        let count = q.pow(free as u32);
        let chart: Vec<ProjPoint> = (0..count)
            .into_par_iter()
            .filter_map(|mut idx| {
                let mut x = vec![0u32; nvars];
                x[lead] = 1;
                for slot in x[lead + 1..].iter_mut().rev() {
                    *slot = (idx % q) as u32;
                    idx /= q;
                }
                evals
                    .iter()
                    .all(|ev| ev.vanishes_at(&x, &field))
                    .then_some(ProjPoint(x))
            })
            .collect();
        points.extend(chart);
    }
    let label = if points.is_empty() {
        LocusLabel::NoneFoundOverField
    } else {
        LocusLabel::Nonempty
    };
    Ok(SingularLocus {
        field,
        points,
        label,
        includes_f: include_f,
    })
}

/// `Σ_{i=0}^{n} X_i^{d−1} X_{i+1}` with indices mod `n + 1`.
pub fn cyclic_form(n: usize, d: u32, domain: Domain) -> Result<Poly> {
    if n < 1 || d < 2 {
        return Err(Error::InvalidArgument(format!("need n >= 1 and d >= 2, got n = {n}, d = {d}")));
    }
    let nvars = n + 1;
    let terms = (0..nvars).map(|i| {
        let mut ex = vec![0u32; nvars];
        ex[i] += d - 1;
        ex[(i + 1) % nvars] += 1;
        (ex, crate::Rational::one())
    });
    Poly::from_terms(nvars, domain, terms)
}

/// `1 − (1 − d)^{n+1}`, the exponent in the constraint on `a_1` for the
/// cyclic critical locus.
pub fn cyclic_critical_exponent(n: u32, d: u64) -> Result<BigInt> {
    if n < 1 || d < 2 {
        return Err(Error::InvalidArgument(format!("need n >= 1 and d >= 2, got n = {n}, d = {d}")));
    }
    Ok(BigInt::one() - num_traits::pow(BigInt::one() - BigInt::from(d), n as usize + 1))
}
