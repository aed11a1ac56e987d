use std::collections::{BTreeMap, BTreeSet};

use mbqc_core::Geometry;

use crate::cert::{FlowCertificate, FlowKind, Order};
use crate::error::{FlowError, FlowResult};
use crate::extremal::edge_bound_unchecked;
use crate::successor::SuccessorMap;

/// Maximally delayed eflow for `(geo, t)`, or `None`.
///
/// Layer 0 is `O`. A later layer takes every unlayered `v ∉ T` that is the
/// only unlayered neighbour of some layered candidate `w ∉ I ∪ T` (then
/// `f(v) = w`), and every unlayered `a ∈ T` with no unlayered neighbour
/// (then `f(a) = a`). Decisions for a layer are made against the unlayered
/// set as it stood when the layer began.
pub fn find_eflow(geo: &Geometry, t: &BTreeSet<String>) -> FlowResult<Option<FlowCertificate>> {
    for a in t {
        if !geo.vertices().contains(a) {
            return Err(FlowError::UnknownVertex(a.clone()));
        }
        if geo.inputs().contains(a) || geo.outputs().contains(a) {
            return Err(FlowError::BadT(a.clone()));
        }
    }
    let ig = geo.indexed();
    let n = ig.len();
    let k = ig.output_count();
    if t.is_empty() && ig.input_count() == k && k > 0 && ig.edge_count() as i64 > edge_bound_unchecked(n, k) {
        return Ok(None);
    }
    let in_t: Vec<bool> = ig.labels.iter().map(|l| t.contains(l)).collect();
    let mut layer: Vec<Option<usize>> = (0..n).map(|v| ig.is_output[v].then_some(0)).collect();
    let mut f: Vec<Option<usize>> = vec![None; n];
    // unlayered neighbour counts
    let mut open_deg: Vec<usize> = (0..n)
        .map(|v| ig.adj[v].iter().filter(|&&w| layer[w].is_none()).count())
        .collect();
    let mut candidates: BTreeSet<usize> = (0..n).filter(|&v| ig.is_output[v] && !ig.is_input[v]).collect();
    let mut remaining = (0..n).filter(|&v| layer[v].is_none()).count();
    let mut current = 0;
    while remaining > 0 {
        current += 1;
        let mut chosen: BTreeMap<usize, usize> = BTreeMap::new();
        for &w in &candidates {
            if open_deg[w] != 1 {
                continue;
            }
            let v = *ig.adj[w].iter().find(|&&x| layer[x].is_none()).expect("one open neighbour");
            if !in_t[v] && !chosen.contains_key(&v) {
                chosen.insert(v, w);
            }
        }
        for a in (0..n).filter(|&a| in_t[a] && layer[a].is_none() && open_deg[a] == 0) {
            chosen.insert(a, a);
        }
        if chosen.is_empty() {
            break;
        }
        for (&v, &w) in &chosen {
            layer[v] = Some(current);
            f[v] = Some(w);
            candidates.remove(&w);
            remaining -= 1;
            for &z in &ig.adj[v] {
                open_deg[z] -= 1;
            }
        }
        for &v in chosen.keys() {
            if !in_t[v] && !ig.is_input[v] {
                candidates.insert(v);
            }
        }
    }
    if remaining > 0 {
        return Ok(None);
    }
    let layers = ig
        .labels
        .iter()
        .zip(&layer)
        .map(|(l, x)| (l.clone(), x.expect("all layered")))
        .collect();
    Ok(Some(FlowCertificate {
        kind: if t.is_empty() { FlowKind::Flow } else { FlowKind::EFlow },
        successor: SuccessorMap::from_indexed(&ig, &f),
        order: Order::Layers(layers),
        yz_set: t.clone(),
    }))
}
