use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use super::args::{BracketArgs, Command, PolyArgs, SecondPoly};
use super::input::{parse_i64_list, parse_rational, parse_rational_list, read_poly_file};
use super::{CliError, Report};
use crate::algebra::{Domain, Matrix, Poly, Prime};
use crate::discriminant::{
    cyclic_critical_exponent, discriminant_binary, quartic_st, singular_locus_enumerate,
    smoothness_binary, sylvester_resultant, BinaryForm, DiscMode,
};
use crate::stability::{
    destab_search, lee_ratio, mu_bracket, mu_hypersurface, numerical_identity_check,
    torus_certificate, torus_certificate_bracket, BracketSupport, SearchBudget,
    StabilityCertificate, WeightVector,
};
use crate::thresholds::{
    blowup_discrepancy, fpt_interval, lct_bound_optimize, lct_upper_bound, lee_verdict, Bound,
    BoundKind, Provenance, ThresholdInterval, WeightAssignment,
};
use crate::{cycles, Error, Rational};

type Out = Result<Report, CliError>;

fn obj(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn q(x: &Rational) -> Value {
    Value::String(x.to_string())
}

fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => Value::String(x.to_string()),
    }
}

fn bound(b: &Bound) -> Value {
    Value::String(b.to_string())
}

fn parse_domain(s: &str) -> Result<Domain, CliError> {
    Ok(Domain::from_str(s)?)
}

fn load_poly(a: &PolyArgs) -> Result<Poly, CliError> {
    if let Some(path) = &a.input {
        let f = read_poly_file(path)?;
        if let Some(n) = a.nvars.filter(|&n| n != f.nvars()) {
            return Err(CliError::Usage(format!(
                "--nvars {n} disagrees with vars={} in the file header",
                f.nvars()
            )));
        }
        return Ok(f);
    }
    let text = a
        .poly
        .as_deref()
        .ok_or_else(|| CliError::Usage("one of --poly or --in is required".into()))?;
    let nvars = a
        .nvars
        .ok_or_else(|| CliError::Usage("--nvars is required with --poly".into()))?;
    Ok(Poly::parse(text, nvars, parse_domain(&a.field)?)?)
}

fn load_second(a: &SecondPoly, first: &Poly) -> Result<Poly, CliError> {
    if let Some(path) = &a.input2 {
        return read_poly_file(path);
    }
    let text = a
        .poly2
        .as_deref()
        .ok_or_else(|| CliError::Usage("one of --poly2 or --in2 is required".into()))?;
    Ok(Poly::parse(text, first.nvars(), first.domain())?)
}

fn poly_inputs(f: &Poly) -> Map<String, Value> {
    obj(vec![
        ("poly", json!(f.to_string())),
        ("field", json!(f.domain().to_string())),
        ("nvars", json!(f.nvars())),
    ])
}

fn weight(s: &str) -> Result<WeightVector, CliError> {
    Ok(WeightVector::new(parse_i64_list(s)?)?)
}

fn weights_affine(s: &str) -> Result<WeightAssignment, CliError> {
    Ok(WeightAssignment::from_str(s)?)
}

fn matrix_value(m: &Matrix) -> Value {
    json!(m.to_string_rows())
}

fn certificate_result(c: &StabilityCertificate) -> Map<String, Value> {
    obj(vec![
        ("verdict", json!(c.verdict.as_str())),
        ("witness_r", json!(c.witness_r.as_ref().map(|r| r.entries().to_vec()))),
        ("witness_g", c.witness_g.as_ref().map_or(Value::Null, matrix_value)),
        ("mu_value", json!(c.mu_value)),
        ("lp_value", c.lp_value.as_ref().map_or(Value::Null, q)),
        ("search_budget_used", serde_json::to_value(c.search_budget_used).expect("plain struct")),
    ])
}

fn interval_result(i: &ThresholdInterval) -> Map<String, Value> {
    let provenance = match &i.provenance {
        Provenance::Weights(w) => json!({ "weights": w.entries() }),
        Provenance::FrobeniusPowers(pairs) => json!({
            "frobenius_powers": pairs.iter().map(|(e, nu)| json!({"e": e, "nu": nu})).collect::<Vec<_>>()
        }),
    };
    obj(vec![
        ("lower", q(&i.lower)),
        ("upper", bound(&i.upper)),
        ("kind", json!(i.kind.as_str())),
        ("provenance", provenance),
    ])
}

fn bracket(b: &BracketArgs) -> Result<BracketSupport, CliError> {
    Ok(BracketSupport::parse(b.n, b.dim, &b.support)?)
}

fn bracket_inputs(s: &BracketSupport) -> Map<String, Value> {
    obj(vec![
        ("n", json!(s.n())),
        ("dim", json!(s.dim())),
        ("support", json!(s.tuples())),
    ])
}

fn binary_from_list(s: &str, domain: Domain) -> Result<BinaryForm, CliError> {
    Ok(BinaryForm::from_values(&parse_rational_list(s)?, domain)?)
}

fn constant_value(p: &Poly) -> Value {
    q(&p.as_constant().unwrap_or_else(Rational::zero))
}

pub(super) fn dispatch(cmd: &Command) -> Out {
    match cmd {
        Command::Mu { poly, r } => {
            let f = load_poly(poly)?;
            let r = weight(r)?;
            let mu = mu_hypersurface(&f, &r)?;
            let mut inputs = poly_inputs(&f);
            inputs.insert("r".into(), json!(r.entries()));
            Ok(Report {
                command: "mu",
                inputs,
                result: obj(vec![("mu", json!(mu))]),
            })
        }
        Command::MuBracket { bracket: b, r } => {
            let s = bracket(b)?;
            let r = weight(r)?;
            let mu = mu_bracket(&s, &r)?;
            let mut inputs = bracket_inputs(&s);
            inputs.insert("r".into(), json!(r.entries()));
            Ok(Report {
                command: "mu-bracket",
                inputs,
                result: obj(vec![("mu", json!(mu))]),
            })
        }
        Command::LeeRatio { poly, r } => {
            let f = load_poly(poly)?;
            let r = weight(r)?;
            let l = lee_ratio(&f, &r)?;
            let mut inputs = poly_inputs(&f);
            inputs.insert("r".into(), json!(r.entries()));
            Ok(Report {
                command: "lee-ratio",
                inputs,
                result: obj(vec![
                    ("w_f", json!(l.w_f)),
                    ("sum_wxi", json!(l.sum_wxi)),
                    ("ratio", q(&l.ratio)),
                    ("threshold", q(&l.threshold)),
                    ("stable_against", json!(l.stable_against())),
                    ("semistable_against", json!(l.semistable_against())),
                ]),
            })
        }
        Command::IdentityCheck { poly, r } => {
            let f = load_poly(poly)?;
            let r = weight(r)?;
            let c = numerical_identity_check(&f, &r)?;
            let mut inputs = poly_inputs(&f);
            inputs.insert("r".into(), json!(r.entries()));
            Ok(Report {
                command: "identity-check",
                inputs,
                result: obj(vec![
                    ("lhs", json!(c.lhs)),
                    ("mu", json!(c.mu)),
                    ("residual", json!(c.residual)),
                    ("holds", json!(c.residual == 0)),
                ]),
            })
        }
        Command::CertifyTorus { poly, support, n, dim } => {
            let (inputs, cert) = match support {
                Some(text) => {
                    let s = BracketSupport::parse(n.expect("required"), dim.expect("required"), text)?;
                    (bracket_inputs(&s), torus_certificate_bracket(&s)?)
                }
                None => {
                    let f = load_poly(poly)?;
                    (poly_inputs(&f), torus_certificate(&f)?)
                }
            };
            Ok(Report {
                command: "certify-torus",
                inputs,
                result: certificate_result(&cert),
            })
        }
        Command::SearchDestab {
            poly,
            seed,
            depth,
            random,
            max_candidates,
            scalars,
        } => {
            let f = load_poly(poly)?;
            let budget = SearchBudget {
                max_candidates: *max_candidates,
                transvection_scalars: parse_i64_list(scalars)?,
                depth: *depth,
                random_candidates: *random,
                seed: *seed,
            };
            let cert = destab_search(&f, &budget)?;
            let mut inputs = poly_inputs(&f);
            inputs.insert(
                "budget".into(),
                json!({
                    "max_candidates": budget.max_candidates,
                    "transvection_scalars": budget.transvection_scalars,
                    "depth": budget.depth,
                    "random_candidates": budget.random_candidates,
                    "seed": budget.seed,
                }),
            );
            Ok(Report {
                command: "search-destab",
                inputs,
                result: certificate_result(&cert),
            })
        }
        Command::Sum { poly, second } => {
            let f = load_poly(poly)?;
            let g = load_second(second, &f)?;
            let h = cycles::sum_cycles(&f, &g)?;
            let mut inputs = poly_inputs(&f);
            inputs.insert("poly2".into(), json!(g.to_string()));
            Ok(Report {
                command: "sum",
                inputs,
                result: obj(vec![
                    ("poly", json!(h.to_string())),
                    ("degree", json!(h.homogeneous_degree())),
                ]),
            })
        }
        Command::Power { poly, m } => {
            let f = load_poly(poly)?;
            let h = cycles::multiple_cycle(&f, *m)?;
            let mut inputs = poly_inputs(&f);
            inputs.insert("m".into(), json!(m));
            Ok(Report {
                command: "power",
                inputs,
                result: obj(vec![
                    ("poly", json!(h.to_string())),
                    ("degree", json!(h.homogeneous_degree())),
                ]),
            })
        }
        Command::LiftCheck { poly, seed, samples } => {
            let f = load_poly(poly)?;
            let lifted = cycles::lift_support(&f)?;
            let report = cycles::transfer_check(&f, *samples, *seed)?;
            let mut inputs = poly_inputs(&f);
            inputs.insert("seed".into(), json!(seed));
            inputs.insert("samples".into(), json!(samples));
            let mismatches: Vec<Value> = report
                .sampled_weights
                .iter()
                .zip(&report.mu_pairs)
                .filter(|(_, (a, b))| a != b)
                .map(|(r, (a, b))| json!({"r": r.entries(), "mu_p": a, "mu_lift": b}))
                .collect();
            Ok(Report {
                command: "lift-check",
                inputs,
                result: obj(vec![
                    ("lift", json!(lifted.to_string())),
                    ("support_preserved", json!(report.support_preserved)),
                    ("all_equal", json!(report.all_equal)),
                    ("samples", json!(report.mu_pairs.len())),
                    ("mismatches", json!(mismatches)),
                ]),
            })
        }
        Command::LctBound { poly, w } => {
            let f = load_poly(poly)?;
            let w = weights_affine(w)?;
            let b = lct_upper_bound(&f, &w)?;
            let mut inputs = poly_inputs(&f);
            inputs.insert("w".into(), json!(w.entries()));
            Ok(Report {
                command: "lct-bound",
                inputs,
                result: obj(vec![
                    ("upper_bound", bound(&b)),
                    ("kind", json!("lct_upper_bound_only")),
                ]),
            })
        }
        Command::LctOptimize { poly, max_weight } => {
            let f = load_poly(poly)?;
            let best = lct_bound_optimize(&f, *max_weight)?;
            let mut inputs = poly_inputs(&f);
            inputs.insert("max_weight".into(), json!(max_weight));
            let mut result = interval_result(&best.interval());
            result.insert("best_bound".into(), q(&best.best_bound));
            result.insert("best_w".into(), json!(best.best_w.entries()));
            Ok(Report {
                command: "lct-optimize",
                inputs,
                result,
            })
        }
        Command::BlowupA { poly, w, c } => {
            let f = load_poly(poly)?;
            let w = weights_affine(w)?;
            let c = parse_rational(c)?;
            let a = blowup_discrepancy(&f, &w, &c)?;
            let mut inputs = poly_inputs(&f);
            inputs.insert("w".into(), json!(w.entries()));
            inputs.insert("c".into(), q(&c));
            Ok(Report {
                command: "blowup-a",
                inputs,
                result: obj(vec![
                    ("discrepancy", q(&a)),
                    ("log_canonical_at_e", json!(a >= Rational::from_integer((-1).into()))),
                ]),
            })
        }
        Command::Fpt { poly, e } => {
            let f = load_poly(poly)?;
            let i = fpt_interval(&f, *e)?;
            let mut inputs = poly_inputs(&f);
            inputs.insert("e".into(), json!(e));
            Ok(Report {
                command: "fpt",
                inputs,
                result: interval_result(&i),
            })
        }
        Command::LeeVerdict {
            n,
            d,
            bound: b,
            kind,
            points,
            e,
            poly,
        } => lee_verdict_command(*n, *d, b.as_deref(), kind, points.as_deref(), *e, poly),
        Command::Resultant { field, p, q: qs } => {
            let domain = parse_domain(field)?;
            let pf = binary_from_list(p, domain)?;
            let qf = binary_from_list(qs, domain)?;
            let res = sylvester_resultant(&pf, &qf)?;
            Ok(Report {
                command: "resultant",
                inputs: obj(vec![
                    ("field", json!(domain.to_string())),
                    ("p", json!(p)),
                    ("q", json!(qs)),
                ]),
                result: obj(vec![
                    ("resultant", constant_value(&res)),
                    ("common_root", json!(res.is_zero())),
                ]),
            })
        }
        Command::Disc {
            d,
            generic,
            modulus,
            poly,
        } => {
            let (inputs, value) = if *generic {
                let mut res = discriminant_binary(*d, DiscMode::Generic)?;
                if let Some(p) = modulus {
                    res = res.reduce_mod_p(Prime::new(*p)?)?;
                }
                let inputs = obj(vec![("d", json!(d)), ("generic", json!(true)), ("mod", json!(modulus))]);
                (inputs, json!(res.to_string()))
            } else {
                if modulus.is_some() {
                    return Err(CliError::Usage("--mod applies to --generic; use --field fp:P".into()));
                }
                let f = load_poly(poly)?;
                let res = discriminant_binary(*d, DiscMode::Numeric(&f))?;
                let mut inputs = poly_inputs(&f);
                inputs.insert("d".into(), json!(d));
                (inputs, constant_value(&res))
            };
            Ok(Report {
                command: "disc",
                inputs,
                result: obj(vec![("discriminant", value)]),
            })
        }
        Command::QuarticSt {
            coeffs,
            generic,
            modulus,
        } => quartic_command(coeffs.as_deref(), *generic, *modulus),
        Command::SmoothBinary { poly } => {
            let f = load_poly(poly)?;
            let smooth = smoothness_binary(&f)?;
            Ok(Report {
                command: "smooth-binary",
                inputs: poly_inputs(&f),
                result: obj(vec![("smooth", json!(smooth))]),
            })
        }
        Command::SingularPoints { poly, e, include_f } => {
            let f = load_poly(poly)?;
            let locus = singular_locus_enumerate(&f, *e, *include_f)?;
            let mut inputs = poly_inputs(&f);
            inputs.insert("e".into(), json!(e));
            inputs.insert("include_f".into(), json!(include_f));
            let points: Vec<String> = locus.points.iter().map(|p| p.format(&locus.field)).collect();
            Ok(Report {
                command: "singular-points",
                inputs,
                result: obj(vec![
                    ("field_size", json!(locus.field.size())),
                    ("field_modulus", json!(locus.field.modulus())),
                    ("count", json!(points.len())),
                    ("points", json!(points)),
                    ("label", json!(locus.label.as_str())),
                ]),
            })
        }
        Command::CyclicExponent { n, d } => {
            let x = cyclic_critical_exponent(*n, *d)?;
            Ok(Report {
                command: "cyclic-exponent",
                inputs: obj(vec![("n", json!(n)), ("d", json!(d))]),
                result: obj(vec![("exponent", int(&x))]),
            })
        }
    }
}

fn quartic_command(coeffs: Option<&str>, generic: bool, modulus: Option<u64>) -> Out {
    let form = match (coeffs, generic) {
        (Some(text), _) => {
            let values = parse_rational_list(text)?;
            if values.len() != 5 {
                return Err(CliError::Usage(format!("expected 5 coefficients, got {}", values.len())));
            }
            BinaryForm::from_values(&values, Domain::Integer)?
        }
        (None, true) => BinaryForm::generic(4),
        (None, false) => return Err(CliError::Usage("one of --coeffs or --generic is required".into())),
    };
    let inv = quartic_st(&form)?;
    let (s, t, d) = match modulus {
        Some(p) => {
            let p = Prime::new(p)?;
            (inv.s.reduce_mod_p(p)?, inv.t.reduce_mod_p(p)?, inv.d.reduce_mod_p(p)?)
        }
        None => (inv.s, inv.t, inv.d),
    };
    let show = |x: &Poly| {
        if generic {
            json!(x.to_string())
        } else {
            constant_value(x)
        }
    };
    let d_is_t_squared = d == t.pow(2);
    Ok(Report {
        command: "quartic-st",
        inputs: obj(vec![
            ("coeffs", json!(coeffs)),
            ("generic", json!(generic)),
            ("mod", json!(modulus)),
        ]),
        result: obj(vec![
            ("S", show(&s)),
            ("T", show(&t)),
            ("D", show(&d)),
            ("T_squared", show(&t.pow(2))),
            ("D_equals_T_squared", json!(d_is_t_squared)),
        ]),
    })
}

/// Affine chart of `F` centred at `point`: `f(x) = F(point + x)` with the
/// leading coordinate set to 1.
fn chart_at(f: &Poly, point: &[i64]) -> Result<Poly, CliError> {
    let n = f.nvars();
    if point.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: point.len(),
        }
        .into());
    }
    let domain = f.domain();
    let coords: Vec<Rational> = point.iter().map(|&c| domain.from_int(c)).collect();
    let lead = coords
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| CliError::Usage("point has all coordinates zero".into()))?;
    let inv = domain.inverse(&coords[lead]).expect("nonzero in a field");
    let mut m = vec![vec![Rational::zero(); n]; n];
    for j in 0..n {
        m[j][j] = Rational::from_integer(1.into());
        if j != lead {
            m[j][lead] = &coords[j] * &inv;
        }
    }
    Ok(f.apply_matrix(&Matrix::from_rows(m))?.dehomogenize(lead)?)
}

fn lee_verdict_command(
    n: Option<i64>,
    d: Option<i64>,
    bound_text: Option<&str>,
    kind: &str,
    points: Option<&str>,
    e: Option<u32>,
    poly: &PolyArgs,
) -> Out {
    let mut inputs = Map::new();
    let (n, d, value, kind) = match (bound_text, points) {
        (Some(b), None) => {
            let kind = match kind {
                "lct" => BoundKind::LctLower,
                "fpt" => BoundKind::FptLower,
                other => return Err(CliError::Usage(format!("unknown bound kind `{other}`"))),
            };
            let n = n.ok_or_else(|| CliError::Usage("--n is required with --bound".into()))?;
            let d = d.ok_or_else(|| CliError::Usage("--d is required with --bound".into()))?;
            (n, d, parse_rational(b)?, kind)
        }
        (None, Some(pts)) => {
            let f = load_poly(poly)?;
            if !matches!(f.domain(), Domain::Prime(_)) {
                return Err(Error::DomainMismatch {
                    left: f.domain().to_string(),
                    right: "fp".into(),
                }
                .into());
            }
            let e = e.expect("required by clap");
            let deg = f.homogeneous_degree().ok_or(Error::NotHomogeneous)? as i64;
            let mut per_point = Vec::new();
            let mut least: Option<Rational> = None;
            for text in pts.split(';').filter(|t| !t.trim().is_empty()) {
                let pt = parse_i64_list(text)?;
                let chart = chart_at(&f, &pt)?;
                if !chart.constant_term().is_zero() {
                    per_point.push(json!({"point": pt, "on_divisor": false}));
                    continue;
                }
                let interval = fpt_interval(&chart, e)?;
                per_point.push(json!({"point": pt, "on_divisor": true, "fpt_lower": q(&interval.lower)}));
                if least.as_ref().is_none_or(|l| interval.lower < *l) {
                    least = Some(interval.lower);
                }
            }
            let value = least.ok_or_else(|| {
                CliError::Lib(Error::InvalidArgument("no listed point lies on the hypersurface".into()))
            })?;
            inputs = poly_inputs(&f);
            inputs.insert("e".into(), json!(e));
            inputs.insert("charts".into(), json!(per_point));
            (
                n.unwrap_or(f.nvars() as i64 - 1),
                d.unwrap_or(deg),
                value,
                BoundKind::FptLower,
            )
        }
        _ => return Err(CliError::Usage("exactly one of --bound or --points is required".into())),
    };
    let v = lee_verdict(n, d, &value, kind)?;
    inputs.insert("n".into(), json!(n));
    inputs.insert("d".into(), json!(d));
    inputs.insert("bound".into(), q(&value));
    inputs.insert(
        "kind".into(),
        json!(match kind {
            BoundKind::LctLower => "lct_lower",
            BoundKind::FptLower => "fpt_lower",
        }),
    );
    Ok(Report {
        command: "lee-verdict",
        inputs,
        result: obj(vec![
            ("verdict", json!(v.outcome.as_str())),
            ("threshold", q(&v.threshold)),
            ("boundary", json!(v.boundary)),
        ]),
    })
}

