//! Reading documents from files or stdin, raw or wrapped in a previous report.

use std::io::Read;

use mbqc_core::json::{circuit_from_json, geometry_from_json, pattern_from_json};
use mbqc_core::{CircuitIR, Geometry, MeasurementPattern};
use mbqc_qfe::{qfe_from_json, QuadraticFormExpansion};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::report::{CliResult, Failure};

pub struct Inputs {
    hasher: Sha256,
    stdin_used: bool,
}

impl Inputs {
    pub fn new() -> Inputs {
        Inputs {
            hasher: Sha256::new(),
            stdin_used: false,
        }
    }

    pub fn read(&mut self, path: &str) -> CliResult<Value> {
        let bytes = if path == "-" {
            if self.stdin_used {
                return Err(Failure::input("stdin can be read only once"));
            }
            self.stdin_used = true;
            let mut buf = Vec::new();
            std::io::stdin().read_to_end(&mut buf).map_err(|e| Failure::input(format!("stdin: {e}")))?;
            buf
        } else {
            std::fs::read(path).map_err(|e| Failure::input(format!("{path}: {e}")))?
        };
        self.hasher.update(&bytes);
        serde_json::from_slice(&bytes).map_err(|e| Failure::input(format!("{path}: malformed JSON: {e}")))
    }

    pub fn digest(&self) -> String {
        hex::encode(self.hasher.clone().finalize())
    }
}

/// What a document holds, by its shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Geometry,
    Pattern,
    Circuit,
    Qfe,
}

fn looks_like(v: &Value) -> Option<Kind> {
    let o = v.as_object()?;
    if o.contains_key("commands") {
        Some(Kind::Pattern)
    } else if o.contains_key("gates") {
        Some(Kind::Circuit)
    } else if o.contains_key("indices") {
        Some(Kind::Qfe)
    } else if o.contains_key("vertices") {
        Some(Kind::Geometry)
    } else {
        None
    }
}

fn key(k: Kind) -> &'static str {
    match k {
        Kind::Geometry => "geometry",
        Kind::Pattern => "pattern",
        Kind::Circuit => "circuit",
        Kind::Qfe => "qfe",
    }
}

/// The payload of kind `k`: the document itself, or `outcome.<k>` of a report.
pub fn payload(v: &Value, k: Kind) -> Option<&Value> {
    if looks_like(v) == Some(k) {
        return Some(v);
    }
    v.get("outcome")?.get(key(k))
}

/// The first payload present, trying kinds in order.
pub fn any_payload<'a>(v: &'a Value, kinds: &[Kind]) -> Option<(Kind, &'a Value)> {
    if let Some(k) = looks_like(v) {
        if kinds.contains(&k) {
            return Some((k, v));
        }
    }
    kinds.iter().find_map(|&k| v.get("outcome")?.get(key(k)).map(|p| (k, p)))
}

fn need<'a>(v: &'a Value, k: Kind) -> CliResult<&'a Value> {
    payload(v, k).ok_or_else(|| Failure::input(format!("expected a {} document", key(k))))
}

pub fn geometry(v: &Value) -> CliResult<Geometry> {
    geometry_from_json(need(v, Kind::Geometry)?).map_err(Failure::input)
}

pub fn pattern(v: &Value) -> CliResult<MeasurementPattern> {
    pattern_from_json(need(v, Kind::Pattern)?).map_err(Failure::input)
}

pub fn circuit(v: &Value) -> CliResult<CircuitIR> {
    circuit_from_json(need(v, Kind::Circuit)?).map_err(Failure::input)
}

pub fn qfe(v: &Value) -> CliResult<QuadraticFormExpansion> {
    qfe_from_json(need(v, Kind::Qfe)?).map_err(Failure::input)
}

pub fn parse_as(k: Kind, v: &Value) -> CliResult<Parsed> {
    Ok(match k {
        Kind::Geometry => Parsed::Geometry(geometry(v)?),
        Kind::Pattern => Parsed::Pattern(pattern(v)?),
        Kind::Circuit => Parsed::Circuit(circuit(v)?),
        Kind::Qfe => Parsed::Qfe(qfe(v)?),
    })
}

pub enum Parsed {
    Geometry(Geometry),
    Pattern(MeasurementPattern),
    Circuit(CircuitIR),
    Qfe(QuadraticFormExpansion),
}
