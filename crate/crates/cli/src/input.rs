use std::fs;
use std::io::Read;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::json;

use gpkit::lparam::{validate, GPPair, LParameter, ParamError};
use gpkit::quadspace::{QuadSpace, Sign};
use gpkit::weilrep::{IrredRep, WeilRep};

use crate::report::InputError;

#[derive(Deserialize)]
struct RawParam {
    #[serde(rename = "V")]
    v: QuadSpace,
    rep: WeilRep,
}

#[derive(Deserialize)]
struct RawPair {
    #[serde(rename = "phiW")]
    phi_w: RawParam,
    #[serde(rename = "phiV")]
    phi_v: RawParam,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawRep {
    Irreducible(IrredRep),
    Sum(WeilRep),
    Param { rep: WeilRep },
}

pub fn param_error(e: ParamError) -> InputError {
    match e {
        ParamError::Invalid(v) => InputError::with_detail("invalid parameter", json!(v)),
        other => InputError::new(other.to_string()),
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, InputError> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| InputError::new(format!("reading stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| InputError::new(format!("reading {}: {e}", path.display())))?
    };
    serde_json::from_str(&text).map_err(|e| InputError::new(format!("parsing {}: {e}", path.display())))
}

fn to_param(raw: RawParam) -> Result<LParameter, InputError> {
    validate(raw.rep, raw.v).map_err(param_error)
}

pub fn load_param(path: &Path) -> Result<LParameter, InputError> {
    to_param(read_json(path)?)
}

pub fn load_pair(path: &Path) -> Result<GPPair, InputError> {
    let raw: RawPair = read_json(path)?;
    GPPair::new(to_param(raw.phi_w)?, to_param(raw.phi_v)?).map_err(param_error)
}

pub fn load_rep(path: &Path) -> Result<WeilRep, InputError> {
    Ok(match read_json(path)? {
        RawRep::Irreducible(r) => WeilRep::irreducible(r),
        RawRep::Sum(r) | RawRep::Param { rep: r } => r,
    })
}

pub fn parse_sign(s: &str) -> Result<Sign, String> {
    match s.trim() {
        "1" | "+1" | "+" => Ok(Sign::Plus),
        "-1" | "-" => Ok(Sign::Minus),
        other => Err(format!("expected +1 or -1, got {other:?}")),
    }
}
