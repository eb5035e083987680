use rayon::prelude::*;
use serde_json::{json, Map, Value};

use gpkit::conjclass::{
    admissible_pairs, verify_fiber_lemma, verify_fiber_union, verify_union_prop, xi_dvdw, SetCheck,
};
use gpkit::lparam::{dichotomy_identity_check, gp_character, reduced_gp_pairs, GPPair};
use gpkit::quadspace::{QuadSpace, Sign};

use crate::report::{InputError, Outcome};

fn signs(e0: Option<Sign>) -> Vec<Sign> {
    e0.map_or_else(|| vec![Sign::Plus, Sign::Minus], |s| vec![s])
}

fn lines(odd: bool) -> Vec<Option<Sign>> {
    if odd {
        vec![None]
    } else {
        vec![Some(Sign::Plus), Some(Sign::Minus)]
    }
}

fn set_check_json(kind: &str, r: &SetCheck) -> Value {
    let entries = |v: &[gpkit::conjclass::Entry]| v.iter().map(|e| e.to_string()).collect::<Vec<_>>();
    json!({
        "kind": kind,
        "case": r.case,
        "lhs": entries(&r.lhs),
        "rhs": entries(&r.rhs),
        "difference": entries(&r.difference()),
        "duplicates": entries(&r.duplicates),
        "status": if r.pass { "PASS" } else { "FAIL" },
    })
}

fn sorted(mut v: Vec<Value>) -> Vec<Value> {
    v.sort_by_key(|x| x.to_string());
    v
}

pub fn union(max_dim: u32, e0: Option<Sign>) -> Result<Outcome, InputError> {
    let mut cases = Vec::new();
    for n in 1..=max_dim {
        for v in QuadSpace::all_of_dim(n) {
            for &e in &signs(e0) {
                for line in lines(n % 2 == 1) {
                    cases.push((v, e, line));
                }
            }
        }
    }
    let results: Vec<SetCheck> = cases
        .par_iter()
        .map(|(v, e, line)| verify_union_prop(v, *e, *line).expect("parity chosen to match"))
        .collect();
    let failures = results.iter().filter(|r| !r.pass).map(|r| set_check_json("union", r)).collect();
    let mut result = Map::new();
    result.insert("max_dim".into(), json!(max_dim));
    Ok(Outcome::sweep(results.len() as u64, sorted(failures), result))
}

pub fn fibers(max_dv: u32, e0: Option<Sign>) -> Result<Outcome, InputError> {
    let mut cases = Vec::new();
    for (w, v) in admissible_pairs(max_dv) {
        for kappa in xi_dvdw(v.dim(), w.dim()) {
            cases.push((w, v, kappa));
        }
    }
    let results: Vec<(SetCheck, Vec<SetCheck>)> = cases
        .par_iter()
        .map(|(w, v, kappa)| {
            let lemma = verify_fiber_lemma(kappa, v, w).expect("valid input");
            let mut unions = Vec::new();
            for &e in &signs(e0) {
                for line in lines(w.is_odd_dim()) {
                    unions.push(verify_fiber_union(kappa, v, w, e, line).expect("valid input"));
                }
            }
            (lemma, unions)
        })
        .collect();
    let mut failures = Vec::new();
    let (mut lemma_failed, mut union_failed, mut union_checked) = (0, 0, 0);
    for (lemma, unions) in &results {
        if !lemma.pass {
            lemma_failed += 1;
            failures.push(set_check_json("fiber lemma", lemma));
        }
        for u in unions {
            union_checked += 1;
            if !u.pass {
                union_failed += 1;
                failures.push(set_check_json("fiber union", u));
            }
        }
    }
    let mut result = Map::new();
    result.insert("max_dv".into(), json!(max_dv));
    result.insert(
        "fiber_lemma".into(),
        json!({"checked": results.len(), "failed": lemma_failed}),
    );
    result.insert(
        "fiber_union".into(),
        json!({"checked": union_checked, "failed": union_failed}),
    );
    Ok(Outcome::sweep((results.len() + union_checked) as u64, sorted(failures), result))
}

fn pair_label(pair: &GPPair) -> String {
    format!(
        "W={} [{}] V={} [{}]",
        pair.phi_w().target(),
        pair.phi_w().rep(),
        pair.phi_v().target(),
        pair.phi_v().rep()
    )
}

pub fn dichotomy(max_dim: u32, max_k: u32) -> Result<Outcome, InputError> {
    let pairs = reduced_gp_pairs(max_dim, max_k);
    let results: Vec<(u64, Vec<Value>)> = pairs
        .par_iter()
        .map(|pair| {
            let gv = pair.phi_v().component_group();
            let mut checked = 0;
            let mut bad = Vec::new();
            for sw in pair.phi_w().component_group().elements() {
                for sv in gv.elements().into_iter().filter(|s| !gv.is_central(s)) {
                    checked += 1;
                    let ok = matches!(dichotomy_identity_check(pair, &sw, &sv), Ok(c) if c.holds);
                    if !ok {
                        bad.push(json!({"pair": pair_label(pair), "sW": sw.to_bits(), "sV": sv.to_bits()}));
                    }
                }
            }
            (checked, bad)
        })
        .collect();
    let checked = results.iter().map(|r| r.0).sum();
    let failures = results.into_iter().flat_map(|r| r.1).collect();
    let mut result = Map::new();
    result.insert("pairs".into(), json!(pairs.len()));
    Ok(Outcome::sweep(checked, sorted(failures), result))
}

pub fn characters(max_dim: u32, max_k: u32) -> Result<Outcome, InputError> {
    let pairs = reduced_gp_pairs(max_dim, max_k);
    let results: Vec<(u64, Vec<Value>)> = pairs
        .par_iter()
        .map(|pair| {
            let ws = pair.phi_w().component_group().elements();
            let vs = pair.phi_v().component_group().elements();
            let mut table = std::collections::HashMap::new();
            let mut bad = Vec::new();
            for sw in &ws {
                for sv in &vs {
                    match gp_character(pair, sw, sv) {
                        Ok(c) => {
                            table.insert((sw.mask(), sv.mask()), c);
                        }
                        Err(e) => bad.push(json!({"pair": pair_label(pair), "error": e.to_string()})),
                    }
                }
            }
            let mut checked = 0;
            for (&(aw, av), &x) in &table {
                for (&(bw, bv), &y) in &table {
                    checked += 1;
                    if table.get(&(aw ^ bw, av ^ bv)) != Some(&(x * y)) {
                        bad.push(json!({"pair": pair_label(pair), "masks": [[aw, av], [bw, bv]]}));
                    }
                }
            }
            (checked, bad)
        })
        .collect();
    let checked = results.iter().map(|r| r.0).sum();
    let failures = results.into_iter().flat_map(|r| r.1).collect();
    let mut result = Map::new();
    result.insert("pairs".into(), json!(pairs.len()));
    Ok(Outcome::sweep(checked, sorted(failures), result))
}
