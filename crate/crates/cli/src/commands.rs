use std::path::Path;

use serde_json::{json, Map, Value};

use gpkit::epsilon::{eps_half, eps_irreducible, eps_numeric_oracle, eps_symplectic};
use gpkit::lparam::{
    dichotomy_identity_check, endoscopic_split, gp_character_parts, ComponentElement,
    ComponentGroup, GPPair, LParameter,
};
use gpkit::quadspace::{is_quasi_split, kottwitz_sign, pure_inner_forms, quasi_split_form, QuadSpace, Sign};

use crate::input::{load_pair, load_param, load_rep, param_error};
use crate::report::{InputError, Outcome};

const ORACLE_TOLERANCE: f64 = 1e-6;

fn labels(g: &ComponentGroup) -> Vec<String> {
    g.basis.iter().map(|r| r.to_string()).collect()
}

pub fn classify(path: &Path) -> Result<Outcome, InputError> {
    let phi = load_param(path)?;
    let c = phi.classify();
    Ok(Outcome::value(json!({
        "type": c.canonical.to_string(),
        "flags": {"B": c.b, "P": c.p, "E": c.e},
        "explicit_condition": c.explicit_condition,
        "reduced": phi.is_reduced(),
        "V": phi.target(),
    })))
}

fn group_json(phi: &LParameter) -> Value {
    let g = phi.component_group();
    json!({
        "basis": labels(&g),
        "multiplicities": g.mults,
        "constraint": g.constraint,
        "rank": g.rank(),
        "order": g.order(),
        "elements": g.elements().iter().map(ComponentElement::to_bits).collect::<Vec<_>>(),
        "central": g.central().to_bits(),
    })
}

pub fn component_group(path: &Path) -> Result<Outcome, InputError> {
    let phi = load_param(path)?;
    let mut v = group_json(&phi);
    v["explicit_condition"] = json!(phi.component_group().not_in_center_times_identity_component());
    Ok(Outcome::value(v))
}

fn element(phi: &LParameter, bits: Option<&str>) -> Result<ComponentElement, InputError> {
    let g = phi.component_group();
    match bits {
        None => Ok(g.identity()),
        Some(b) => g.element_from_bits(b).map_err(param_error),
    }
}

fn elements(pair: &GPPair, s_w: Option<&str>, s_v: Option<&str>) -> Result<(ComponentElement, ComponentElement), InputError> {
    Ok((element(pair.phi_w(), s_w)?, element(pair.phi_v(), s_v)?))
}

pub fn chi(path: &Path, s_w: Option<&str>, s_v: Option<&str>) -> Result<Outcome, InputError> {
    let pair = load_pair(path)?;
    let (sw, sv) = elements(&pair, s_w, s_v)?;
    let (on_w, on_v) = gp_character_parts(&pair, &sw, &sv).map_err(param_error)?;
    Ok(Outcome::value(json!({
        "chi": on_w * on_v,
        "chi_V_phiW": on_w,
        "chi_W_phiV": on_v,
        "sW": sw.to_bits(),
        "sV": sv.to_bits(),
        "basis_W": labels(&pair.phi_w().component_group()),
        "basis_V": labels(&pair.phi_v().component_group()),
    })))
}

pub fn epsilon(path: &Path, oracle: bool) -> Result<Outcome, InputError> {
    let rep = load_rep(path)?;
    let e = eps_half(&rep);
    let mut result = Map::new();
    result.insert("rep".into(), json!(rep.to_string()));
    result.insert("epsilon".into(), json!(e.label()));
    result.insert("exponent".into(), json!(e.exponent()));
    if let Ok(s) = eps_symplectic(&rep) {
        result.insert("sign".into(), json!(s));
    }
    let mut counterexamples = Vec::new();
    let mut cases = 1;
    if oracle {
        let mut rows = Vec::new();
        for (r, _) in rep.summands() {
            let z = eps_numeric_oracle(r).map_err(|e| InputError::new(e.to_string()))?;
            let exact = eps_irreducible(r);
            let error = (z - exact.to_complex()).norm();
            let row = json!({"irreducible": r.to_string(), "re": z.re, "im": z.im, "table": exact.label(), "error": error});
            if error >= ORACLE_TOLERANCE {
                counterexamples.push(row.clone());
            }
            rows.push(row);
        }
        cases = rows.len() as u64;
        result.insert("oracle".into(), json!(rows));
        result.insert("tolerance".into(), json!(ORACLE_TOLERANCE));
    }
    Ok(Outcome::sweep(cases, counterexamples, result))
}

pub fn dichotomy(path: &Path, s_w: Option<&str>, s_v: Option<&str>) -> Result<Outcome, InputError> {
    let pair = load_pair(path)?;
    let (sw, sv) = elements(&pair, s_w, s_v)?;
    let split = endoscopic_split(&pair, &sw, &sv).map_err(param_error)?;
    let check = dichotomy_identity_check(&pair, &sw, &sv).map_err(param_error)?;
    let mut result = Map::new();
    let part = |p: &LParameter| json!({"V": p.target(), "rep": p.rep().to_string()});
    result.insert(
        "split".into(),
        json!({
            "W+": part(&split.w_plus),
            "W-": part(&split.w_minus),
            "V+": part(&split.v_plus),
            "V-": part(&split.v_minus),
        }),
    );
    result.insert("plus_minus".into(), json!(check.plus_minus));
    result.insert("minus_plus".into(), json!(check.minus_plus));
    result.insert("chi".into(), json!(check.chi));
    result.insert("holds".into(), json!(check.holds));
    let counterexamples = if check.holds {
        Vec::new()
    } else {
        vec![json!({"sW": sw.to_bits(), "sV": sv.to_bits()})]
    };
    Ok(Outcome::sweep(1, counterexamples, result))
}

pub fn enumerate_pure_inner(v: QuadSpace, line: Option<Sign>) -> Result<Outcome, InputError> {
    if line.is_some() && v.is_odd_dim() {
        return Err(InputError::new("--line applies to even-dimensional spaces only"));
    }
    let with_line = |x: &QuadSpace| match line {
        Some(s) => x.oplus(&QuadSpace::line(s)),
        None => *x,
    };
    let forms: Vec<Value> = pure_inner_forms(&v)
        .iter()
        .map(|a| {
            json!({
                "p": a.p,
                "q": a.q,
                "quasi_split": is_quasi_split(a),
                "kottwitz": kottwitz_sign(&with_line(a)),
            })
        })
        .collect();
    Ok(Outcome::value(json!({
        "V": v,
        "line": line,
        "quasi_split_form": quasi_split_form(&v),
        "forms": forms,
    })))
}
