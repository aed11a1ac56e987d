//! Certificate documents.

use std::collections::{BTreeMap, BTreeSet};

use mbqc_core::{Geometry, Plane};
use mbqc_flow::{lift_eflow_to_gflow, FlowCertificate, FlowKind, GflowCertificate};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::report::{CliResult, Failure};

/// `{kind, successor, yz_set, layers, g, planes}`; the gflow fields alone
/// are enough for `verify-gflow`.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct CertDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub successor: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    pub yz_set: BTreeSet<String>,
    pub layers: BTreeMap<String, usize>,
    pub g: BTreeMap<String, BTreeSet<String>>,
    pub planes: BTreeMap<String, String>,
}

pub fn flow_doc(geo: &Geometry, cert: &FlowCertificate) -> CertDoc {
    let lifted = lift_eflow_to_gflow(geo, cert);
    CertDoc {
        kind: Some(
            match cert.kind {
                FlowKind::Flow => "flow",
                FlowKind::EFlow => "eflow",
            }
            .into(),
        ),
        successor: cert.successor.f.clone(),
        yz_set: cert.yz_set.clone(),
        ..gflow_doc(&lifted)
    }
}

pub fn gflow_doc(c: &GflowCertificate) -> CertDoc {
    CertDoc {
        layers: c.layers.clone(),
        g: c.g.clone(),
        planes: c.planes.iter().map(|(v, p)| (v.clone(), p.to_string())).collect(),
        ..CertDoc::default()
    }
}

/// Accepts a certificate document or a report carrying `outcome.certificate`.
pub fn gflow_from_json(v: &Value) -> CliResult<GflowCertificate> {
    let v = v.get("outcome").and_then(|o| o.get("certificate")).unwrap_or(v);
    let d: CertDoc = serde_json::from_value(v.clone()).map_err(|e| Failure::input(format!("certificate: {e}")))?;
    let mut planes = BTreeMap::new();
    for (v, p) in &d.planes {
        let p = Plane::parse(p).ok_or_else(|| Failure::input(format!("unknown plane {p}")))?;
        planes.insert(v.clone(), p);
    }
    Ok(GflowCertificate {
        g: d.g,
        layers: d.layers,
        planes,
    })
}
