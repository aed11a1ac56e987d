use std::collections::{BTreeMap, BTreeSet};

use mbqc_core::Geometry;

use crate::error::{FlowError, FlowResult};
use crate::infima::SystemOfInfima;
use crate::successor::SuccessorMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlowKind {
    Flow,
    EFlow,
}

/// A causal order in one of its encodings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Order {
    Infima(SystemOfInfima),
    /// `v ⪯ w` iff `v = w` or `layer(v) > layer(w)`.
    Layers(BTreeMap<String, usize>),
    /// Explicit reflexive-transitive closure: `w ∈ reach[v]` iff `v ⪯ w`.
    Closure(BTreeMap<String, BTreeSet<String>>),
}

impl Order {
    pub fn preceq(&self, u: &str, w: &str) -> FlowResult<bool> {
        match self {
            Order::Infima(s) => s.preceq(u, w),
            Order::Layers(l) => {
                let lu = l.get(u).ok_or_else(|| FlowError::UnknownVertex(u.to_owned()))?;
                let lw = l.get(w).ok_or_else(|| FlowError::UnknownVertex(w.to_owned()))?;
                Ok(u == w || lu > lw)
            }
            Order::Closure(c) => {
                let r = c.get(u).ok_or_else(|| FlowError::UnknownVertex(u.to_owned()))?;
                if !c.contains_key(w) {
                    return Err(FlowError::UnknownVertex(w.to_owned()));
                }
                Ok(r.contains(w))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowCertificate {
    pub kind: FlowKind,
    pub successor: SuccessorMap,
    pub order: Order,
    /// Vertices measured in the YZ plane, with `f(a) = a`.
    pub yz_set: BTreeSet<String>,
}

/// Checks the flow (or eflow) conditions pointwise against the stored order.
pub fn check_flow_conditions(geo: &Geometry, cert: &FlowCertificate) -> bool {
    let le = |a: &str, b: &str| cert.order.preceq(a, b).unwrap_or(false);
    let mut image = BTreeSet::new();
    for v in geo.vertices() {
        let fv = cert.successor.succ(v);
        if geo.outputs().contains(v) {
            if fv.is_some() {
                return false;
            }
            continue;
        }
        let Some(fv) = fv else { return false };
        if !image.insert(fv) || geo.inputs().contains(fv) {
            return false;
        }
        if fv == v {
            if !cert.yz_set.contains(v) {
                return false;
            }
        } else if cert.yz_set.contains(v) || !geo.has_edge(v, fv) || !le(v, fv) {
            return false;
        }
        for w in geo.neighbors(fv) {
            if !le(v, &w) {
                return false;
            }
        }
    }
    true
}
