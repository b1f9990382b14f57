//! One report builder per subcommand.

use std::path::Path;

use serde_json::{json, Value};

use super::{CliError, Command, Emit, RunConfig, SourceArgs};
use crate::abnormal::{classify, Classification};
use crate::dist::{growth_vector, realize_flat, verify_brackets, DistributionSpec};
use crate::exactla::{MatQ, Rational};
use crate::flags::{
    bmatrix_sweep, build_model, build_poisson_g, build_symbol, compare_degree_zero, flat_curve_symmetries,
    p_dim_formula, symbol_parts,
};
use crate::liecore::{
    csp_algebra, default_anchor, heisenberg_extend, modified_tower, prolongations_agree, standard_form,
    tanaka_prolongation, LinMapSpace, TanakaProlongation,
};
use crate::poly::{vanishing_ideal_piece, verify_vanishing, Variety};

pub const K_MAX: usize = 8;
pub const L_MAX: usize = 8;

fn check_kl(k: usize, l: usize) -> Result<(), CliError> {
    if !(2..=K_MAX).contains(&k) {
        return Err(CliError::Invalid(format!("k must be in 2..={K_MAX}, got {k}")));
    }
    if l > L_MAX {
        return Err(CliError::Invalid(format!("l must be in 0..={L_MAX}, got {l}")));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelSpec {
    Flat { k: usize, l: usize },
}

/// Parses `flat:K,L`.
pub fn parse_model(s: &str) -> Result<ModelSpec, CliError> {
    let bad = || CliError::Invalid(format!("model must look like flat:K,L, got {s:?}"));
    let rest = s.strip_prefix("flat:").ok_or_else(bad)?;
    let (k, l) = rest.split_once(',').ok_or_else(bad)?;
    let k = k.trim().parse().map_err(|_| bad())?;
    let l = l.trim().parse().map_err(|_| bad())?;
    check_kl(k, l)?;
    Ok(ModelSpec::Flat { k, l })
}

fn read_json<T: serde::de::DeserializeOwned>(p: &Path) -> Result<T, CliError> {
    let s = std::fs::read_to_string(p)?;
    serde_json::from_str(&s).map_err(|e| CliError::Invalid(format!("{}: {e}", p.display())))
}

/// Distribution and base point from `--model`/`--fields` and `--point`.
pub fn load_distribution(src: &SourceArgs) -> Result<(DistributionSpec, Vec<Rational>, Value), CliError> {
    let (d, label) = match (&src.model, &src.fields) {
        (Some(m), None) => {
            let ModelSpec::Flat { k, l } = parse_model(m)?;
            (realize_flat(k, l)?.distribution, json!(m))
        }
        (None, Some(p)) => (read_json::<DistributionSpec>(p)?, json!(p.display().to_string())),
        _ => return Err(CliError::Invalid("exactly one of --model and --fields is required".into())),
    };
    if d.generators.is_empty() {
        return Err(CliError::Invalid("distribution has no generators".into()));
    }
    let q = match &src.point {
        Some(p) => match p.to_str().map(str::trim_start) {
            Some(inline) if inline.starts_with('[') => {
                serde_json::from_str(inline).map_err(|e| CliError::Invalid(format!("--point: {e}")))?
            }
            _ => read_json::<Vec<Rational>>(p)?,
        },
        None => vec![Rational::zero(); d.ambient_dim],
    };
    if q.len() != d.ambient_dim {
        return Err(CliError::Invalid(format!("point has {} coordinates, expected {}", q.len(), d.ambient_dim)));
    }
    Ok((d, q, label))
}

pub(crate) fn tanaka_for(k: usize, l: usize) -> Result<TanakaProlongation, CliError> {
    let m = build_model(k, l)?;
    let s = build_symbol(k, l)?;
    let h = heisenberg_extend(m.dim(), &m.sigma)?;
    Ok(tanaka_prolongation(&h, &s, Some(m.r))?)
}

pub(crate) fn per_degree_json(t: &TanakaProlongation) -> Value {
    let m: serde_json::Map<String, Value> = t.per_degree().iter().map(|(d, n)| (d.to_string(), json!(n))).collect();
    Value::Object(m)
}

fn flat_model(k: usize, l: usize, emit: Emit) -> Result<Value, CliError> {
    check_kl(k, l)?;
    let fr = realize_flat(k, l)?;
    verify_brackets(&fr.algebra.alg, &fr.fields)?;
    let n = fr.distribution.ambient_dim;
    let growth = growth_vector(&fr.distribution, &vec![Rational::zero(); n], n)?;
    let mut v = json!({
        "command": "flat-model",
        "k": k,
        "l": l,
        "dim": n,
        "graded_dims": fr.algebra.graded_dims(),
        "growth": growth,
        "brackets_verified": true,
        "anchor": "flat model m_{k,l} with [Y_1, Z_1] = eta, realized by left-invariant fields",
    });
    match emit {
        Emit::Growth => {}
        Emit::Fields => v["distribution"] = serde_json::to_value(&fr.distribution).expect("serializable"),
        Emit::Algebra => v["algebra"] = serde_json::to_value(&fr.algebra).expect("serializable"),
    }
    Ok(v)
}

fn growth(src: &SourceArgs, max_step: usize) -> Result<Value, CliError> {
    if max_step == 0 {
        return Err(CliError::Invalid("max-step must be positive".into()));
    }
    let (d, q, label) = load_distribution(src)?;
    Ok(json!({
        "command": "growth",
        "source": label,
        "point": q,
        "growth": growth_vector(&d, &q, max_step)?,
        "anchor": "small growth vector (dim D, dim D^2, ...)",
    }))
}

fn diagram(src: &SourceArgs, samples: usize, seed: u64) -> Result<(i32, Value), CliError> {
    if samples == 0 {
        return Err(CliError::Invalid("samples must be positive".into()));
    }
    let (d, q, label) = load_distribution(src)?;
    let c = classify(&d, &q, samples, seed)?;
    let code = c.exit_code();
    let mut v = json!({
        "command": "diagram",
        "source": label,
        "point": q,
        "samples": samples,
        "classification": c,
        "anchor": "Young diagram of the flag of abnormal extremals; n = 2k + l + 2",
    });
    match &c {
        Classification::Classified { young, maximal_class, .. } => {
            v["young"] = json!(young);
            v["maximal_class"] = json!(maximal_class);
        }
        Classification::NotMaximalClass { .. } => {
            v["young"] = Value::Null;
            v["maximal_class"] = json!(false);
        }
        _ => {}
    }
    Ok((code, v))
}

pub(crate) fn symbol_report(k: usize, l: usize, prolong: bool, poisson: bool) -> Result<Value, CliError> {
    check_kl(k, l)?;
    let (m, parts) = symbol_parts(k, l)?;
    let s = build_symbol(k, l)?;
    let expected = if l == 0 { 7 } else { 5 + p_dim_formula(l) };
    let stab = flat_curve_symmetries(k, l)?;
    let mut v = json!({
        "command": "symbol",
        "k": k,
        "l": l,
        "dim_v": m.dim(),
        "dims": {
            "symbol": s.dim(),
            "formula": expected,
            "reductive": parts.all().len() - parts.p.len(),
            "p": parts.p.len(),
        },
        "verdicts": {
            "closed_and_conformally_symplectic": true,
            "matches_formula": s.dim() == expected,
            "stabilizer_equal": stab.equals_symbol,
        },
        "stabilizer_chain": stab.chain,
        "anchor": if l == 0 {
            "s_{k,0} = sl(2) + gl(2) acting on V"
        } else {
            "s_{k,l} is equivalent to a + p, p from I_2 of the tangential variety"
        },
    });
    if prolong {
        let t = tanaka_for(k, l)?;
        let (u, w) = default_anchor(&m.sigma).ok_or(CliError::Invalid("degenerate form".into()))?;
        let first = crate::liecore::modified_prolongation(&s, &m.sigma, (&u, &w))?;
        v["prolongation"] = json!({
            "per_degree": per_degree_json(&t),
            "total": t.total(),
            "first_modified_dim": first.dim(),
            "finite_type": t.is_finite(),
            "zero_by_degree_r": t.first_zero.is_some_and(|z| z <= m.r),
            "anchor": "Tanaka prolongation of R eta + V + s_{k,l}; finite type",
        });
    }
    if poisson && l == 0 {
        v["poisson"] = json!({"skipped": "the Poisson model is built for l >= 1"});
    } else if poisson {
        let pm = build_poisson_g(k, l)?;
        let cmp = compare_degree_zero(&pm)?;
        let mut out = json!({
            "total": pm.dim(),
            "per_degree": pm.graded_dims().iter().map(|(d, n)| (d.to_string(), json!(n))).collect::<serde_json::Map<_, _>>(),
            "ideal_dims": pm.ideal_dims,
            "degree_zero_equal": cmp.equal,
            "anchor": "Poisson-algebra model with [Z', f] = (deg f - 2) f",
        });
        if let Some(pr) = v.get("prolongation") {
            out["total_equals_tanaka"] = json!(pr["total"] == json!(pm.dim()));
        }
        v["poisson"] = out;
    }
    Ok(v)
}

fn prolong(k: Option<usize>, l: usize, csp: Option<usize>, diagonal: bool, depth: usize) -> Result<Value, CliError> {
    if depth == 0 || depth > 8 {
        return Err(CliError::Invalid("depth must be in 1..=8".into()));
    }
    let (w, omega, label) = match (k, csp) {
        (Some(k), None) => {
            check_kl(k, l)?;
            let m = build_model(k, l)?;
            (build_symbol(k, l)?, m.sigma, format!("s_{{{k},{l}}}"))
        }
        (None, Some(n)) => {
            if n < 2 || n % 2 == 1 || n > 8 {
                return Err(CliError::Invalid(format!("csp dimension must be even in 2..=8, got {n}")));
            }
            let om = standard_form(n);
            if diagonal {
                let maps: Vec<MatQ> = (0..n)
                    .map(|i| {
                        let mut a = MatQ::zeros(n, n);
                        a[(i, i)] = Rational::one();
                        a
                    })
                    .collect();
                let w = LinMapSpace::span(n, n, &maps);
                let w = if n == 2 { w } else { w.intersection(&csp_algebra(&om)) };
                (w, om, format!("diagonal in gl({n})"))
            } else {
                (csp_algebra(&om), om, format!("csp({n})"))
            }
        }
        _ => return Err(CliError::Invalid("give either --k/--l or --csp".into())),
    };
    let (u, x) = default_anchor(&omega).ok_or(CliError::Invalid("degenerate form".into()))?;
    let tower = modified_tower(&w, &omega, (&u, &x), depth)?;
    let n = w.source_dim();
    let hom_dim = n * w.dim();
    let mut v = json!({
        "command": "prolong",
        "algebra": label,
        "dim_v": n,
        "dim_w": w.dim(),
        "modified_dims": tower.iter().map(|s| s.dim()).collect::<Vec<_>>(),
        "anchor": "modified prolongation W^(pm) and the Tanaka prolongation",
    });
    match prolongations_agree(&w, &omega, depth) {
        Ok(rep) => v["agreement"] = json!(rep),
        Err(crate::liecore::ProlongError::SmallV(_)) => {
            v["agreement"] = json!({
                "refused": "dim V < 4",
                "first_modified_is_all_of_hom": tower.get(1).map(|s| s.dim()) == Some(hom_dim),
            });
        }
        Err(e) => return Err(e.into()),
    }
    Ok(v)
}

fn gdim(k: usize, l: usize) -> Result<Value, CliError> {
    check_kl(k, l)?;
    let t = tanaka_for(k, l)?;
    let anchor = match (k, l) {
        (2, 0) => "G_{2,0} = so(4,3)".to_string(),
        (_, 0) => format!("G_{{{k},0}} = R eta + V + s_{{{k},0}}, dim 4k+6"),
        _ => "dimension of G_{k,l}, the Tanaka prolongation of R eta + V + s_{k,l}".to_string(),
    };
    Ok(json!({
        "command": "gdim",
        "k": k,
        "l": l,
        "total": t.total(),
        "per_degree": per_degree_json(&t),
        "finite_type": t.is_finite(),
        "anchor": anchor,
    }))
}

fn parse_variety(s: &str) -> Result<Variety, CliError> {
    let bad = || CliError::Invalid(format!("variety must be curve, tangential:B or secant:S,B, got {s:?}"));
    if s == "curve" {
        return Ok(Variety::curve());
    }
    if let Some(b) = s.strip_prefix("tangential:") {
        return Ok(Variety::tangential(b.trim().parse().map_err(|_| bad())?));
    }
    if let Some(rest) = s.strip_prefix("secant:") {
        let (a, b) = rest.split_once(',').ok_or_else(bad)?;
        return Ok(Variety::secant(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?));
    }
    Err(bad())
}

fn ideal(r: usize, variety: &str, degree: u32) -> Result<Value, CliError> {
    if !(2..=12).contains(&r) || !(1..=4).contains(&degree) {
        return Err(CliError::Invalid("need 2 ≤ r ≤ 12 and 1 ≤ degree ≤ 4".into()));
    }
    let var = parse_variety(variety)?;
    let piece = vanishing_ideal_piece(r, var, degree)?;
    Ok(json!({
        "command": "ideal",
        "r": r,
        "variety": variety,
        "degree": degree,
        "dim": piece.dim(),
        "fills_space": var.fills_space(r)?,
        "verified": verify_vanishing(&piece, var)?,
        "basis": piece.basis,
        "anchor": "vanishing ideal of a secant or tangential variety of the rational normal curve",
    }))
}

fn bsuite(k_max: usize, l_max: usize) -> Result<Value, CliError> {
    if !(2..=10).contains(&k_max) || l_max > 8 {
        return Err(CliError::Invalid("need 2 ≤ k-max ≤ 10 and l-max ≤ 8".into()));
    }
    let reps = bmatrix_sweep(2..=k_max, 0..=l_max);
    let all_ok = reps.iter().all(|r| r.ok());
    Ok(json!({
        "command": "bsuite",
        "all_ok": all_ok,
        "reports": reps,
        "anchor": "det B_p != 0 and the recursion for d(k,s,j)",
    }))
}

pub(crate) fn dispatch(c: &RunConfig) -> Result<(i32, Value), CliError> {
    let v = match &c.command {
        Command::FlatModel { kl, emit } => flat_model(kl.k, kl.l, *emit)?,
        Command::Growth { src, max_step } => growth(src, *max_step)?,
        Command::Diagram { src, samples } => return diagram(src, *samples, c.seed),
        Command::Symbol {
            kl,
            check_prolongation,
            cross_check_poisson,
        } => symbol_report(kl.k, kl.l, *check_prolongation, *cross_check_poisson)?,
        Command::Prolong {
            k,
            l,
            csp,
            diagonal,
            depth,
        } => prolong(*k, *l, *csp, *diagonal, *depth)?,
        Command::Gdim { kl } => gdim(kl.k, kl.l)?,
        Command::Ideal { r, variety, degree } => ideal(*r, variety, *degree)?,
        Command::Bsuite { k_max, l_max } => bsuite(*k_max, *l_max)?,
        Command::Selftest => {
            let rep = super::acceptance::run_suite(c.seed);
            let code = if rep.all_pass { 0 } else { 1 };
            let mut v = serde_json::to_value(&rep).expect("serializable");
            v["command"] = json!("selftest");
            return Ok((code, v));
        }
    };
    Ok((0, v))
}
