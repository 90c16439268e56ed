//! JSON parameter files for natural transformations:
//! `{"target": "id" | {"beta": i}, "degree": g, "epsilon": {"ℓ": c},
//! "sigma": {"ℓ": c}, "theta": [c, ...]}` where each `c` is an integer or a
//! string such as `"-3/2"`.

use std::collections::BTreeMap;

use klrw_core::Q;
use klrw_nattrans::{NatParams, Target};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::CliError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawParams {
    target: RawTarget,
    degree: usize,
    #[serde(default)]
    epsilon: BTreeMap<String, Value>,
    #[serde(default)]
    sigma: BTreeMap<String, Value>,
    #[serde(default)]
    theta: Vec<Value>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawTarget {
    Name(String),
    Beta { beta: usize },
}

fn scalar(v: &Value) -> Result<Q, CliError> {
    let bad = || CliError::Params(format!("{v} is not a rational number"));
    match v {
        Value::Number(n) => n.as_i64().map(Q::from_integer).ok_or_else(bad),
        Value::String(s) => {
            let (num, den) = match s.split_once('/') {
                Some((a, b)) => (a.trim(), b.trim()),
                None => (s.trim(), "1"),
            };
            let num: i64 = num.parse().map_err(|_| bad())?;
            let den: i64 = den.parse().map_err(|_| bad())?;
            if den == 0 {
                return Err(bad());
            }
            Ok(Q::new(num, den))
        }
        _ => Err(bad()),
    }
}

fn weights(map: &BTreeMap<String, Value>) -> Result<BTreeMap<usize, Q>, CliError> {
    map.iter()
        .map(|(k, v)| {
            let ell = k
                .parse()
                .map_err(|_| CliError::Params(format!("key {k:?} is not a non-negative integer")))?;
            Ok((ell, scalar(v)?))
        })
        .collect()
}

/// Reads parameters from JSON text. Range checks against a quiver happen
/// when the transformation is built.
pub fn parse_params(text: &str) -> Result<NatParams, CliError> {
    let raw: RawParams = serde_json::from_str(text).map_err(|e| CliError::Params(e.to_string()))?;
    let target = match raw.target {
        RawTarget::Name(s) if s == "id" => Target::Identity,
        RawTarget::Name(s) => return Err(CliError::Params(format!("unknown target {s:?}"))),
        RawTarget::Beta { beta } => Target::Beta(beta),
    };
    Ok(NatParams {
        target,
        degree: raw.degree,
        epsilon: weights(&raw.epsilon)?,
        sigma: weights(&raw.sigma)?,
        theta: raw.theta.iter().map(scalar).collect::<Result<_, _>>()?,
    })
}

fn scalar_json(c: &Q) -> Value {
    if c.is_integer() {
        json!(c.to_integer())
    } else {
        json!(c.to_string())
    }
}

/// Canonical JSON of parameters; [`parse_params`] inverts it.
pub fn params_json(p: &NatParams) -> Value {
    let target = match p.target {
        Target::Identity => json!("id"),
        Target::Beta(i) => json!({ "beta": i }),
    };
    let map = |m: &BTreeMap<usize, Q>| -> serde_json::Map<String, Value> {
        m.iter().map(|(k, v)| (k.to_string(), scalar_json(v))).collect()
    };
    json!({
        "target": target,
        "degree": p.degree,
        "epsilon": map(&p.epsilon),
        "sigma": map(&p.sigma),
        "theta": p.theta.iter().map(scalar_json).collect::<Vec<_>>(),
    })
}
