use std::collections::{BTreeMap, BTreeSet};

use mbqc_core::{Geometry, Plane};

use crate::cert::{FlowCertificate, Order};
use crate::successor::influence_digraph_with_yz;

/// Correction sets, layers (`v ⪯ w` iff `v = w` or `layer(v) > layer(w)`) and
/// measurement planes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GflowCertificate {
    pub g: BTreeMap<String, BTreeSet<String>>,
    pub layers: BTreeMap<String, usize>,
    pub planes: BTreeMap<String, Plane>,
}

/// Vertices adjacent to an odd number of elements of `s`.
pub fn odd_neighborhood(geo: &Geometry, s: &BTreeSet<String>) -> BTreeSet<String> {
    let mut odd = BTreeSet::new();
    for x in s {
        for y in geo.neighbors(x) {
            if !odd.remove(&y) {
                odd.insert(y);
            }
        }
    }
    odd
}

/// Every violated condition, as human-readable strings; empty iff valid.
pub fn gflow_violations(geo: &Geometry, cert: &GflowCertificate) -> Vec<String> {
    let mut out = Vec::new();
    let layer = |v: &str| cert.layers.get(v).copied();
    let le = |v: &str, w: &str| v == w || matches!((layer(v), layer(w)), (Some(a), Some(b)) if a > b);
    for v in geo.vertices().iter().filter(|v| !geo.outputs().contains(*v)) {
        let Some(gv) = cert.g.get(v) else {
            out.push(format!("{v}: no correction set"));
            continue;
        };
        let Some(plane) = cert.planes.get(v) else {
            out.push(format!("{v}: no plane"));
            continue;
        };
        if layer(v).is_none() {
            out.push(format!("{v}: no layer"));
        }
        for w in gv {
            if !geo.vertices().contains(w) {
                out.push(format!("{v}: unknown vertex {w} in g"));
            } else if geo.inputs().contains(w) {
                out.push(format!("{v}: input {w} in g"));
            } else if !le(v, w) {
                out.push(format!("{v}: {w} in g({v}) but not after {v}"));
            }
        }
        let odd = odd_neighborhood(geo, gv);
        for w in &odd {
            if !le(v, w) {
                out.push(format!("{v}: {w} in Odd(g({v})) but not after {v}"));
            }
        }
        let (in_g, in_odd) = (gv.contains(v), odd.contains(v));
        let ok = match plane {
            Plane::XY => in_odd && !in_g,
            Plane::YZ => in_g && !in_odd,
            Plane::XZ => in_g && in_odd,
        };
        if !ok {
            out.push(format!("{v}: plane {plane} condition fails"));
        }
    }
    out
}

pub fn verify_gflow(geo: &Geometry, cert: &GflowCertificate) -> bool {
    gflow_violations(geo, cert).is_empty()
}

fn layers_of(geo: &Geometry, cert: &FlowCertificate) -> BTreeMap<String, usize> {
    match &cert.order {
        Order::Layers(l) => l.clone(),
        _ => influence_digraph_with_yz(geo, &cert.successor, &cert.yz_set)
            .ok()
            .and_then(|d| d.sink_depths())
            .unwrap_or_default(),
    }
}

/// `g(v) = {f(v)}` with the XY plane; layers come from the certificate or
/// from longest paths in the influence digraph.
pub fn lift_flow_to_gflow(geo: &Geometry, cert: &FlowCertificate) -> GflowCertificate {
    lift_eflow_to_gflow(geo, cert)
}

/// As [`lift_flow_to_gflow`], with `g(a) = {a}` and the YZ plane on `T`.
pub fn lift_eflow_to_gflow(geo: &Geometry, cert: &FlowCertificate) -> GflowCertificate {
    let mut g = BTreeMap::new();
    let mut planes = BTreeMap::new();
    for (v, w) in &cert.successor.f {
        g.insert(v.clone(), BTreeSet::from([w.clone()]));
        let p = if cert.yz_set.contains(v) { Plane::YZ } else { Plane::XY };
        planes.insert(v.clone(), p);
    }
    GflowCertificate {
        g,
        layers: layers_of(geo, cert),
        planes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::find::find_flow;

    #[test]
    fn lifted_chain_verifies() {
        let g = Geometry::from_parts(&["v0", "v1", "v2"], &[("v0", "v1"), ("v1", "v2")], &["v0"], &["v2"]).unwrap();
        let c = find_flow(&g).unwrap().unwrap();
        let mut gf = lift_flow_to_gflow(&g, &c);
        assert_eq!(gf.layers["v0"], 2);
        assert!(verify_gflow(&g, &gf));
        gf.layers.insert("v1".into(), 2);
        assert!(!verify_gflow(&g, &gf));
    }

    #[test]
    fn odd_neighbourhood() {
        let g = Geometry::from_parts(&["a", "b", "c"], &[("a", "b"), ("b", "c")], &["a"], &["c"]).unwrap();
        let s = BTreeSet::from(["a".to_string(), "c".to_string()]);
        assert!(odd_neighborhood(&g, &s).is_empty());
        let s = BTreeSet::from(["b".to_string()]);
        assert_eq!(odd_neighborhood(&g, &s).len(), 2);
    }
}
