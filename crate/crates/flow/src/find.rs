use std::collections::BTreeSet;

use mbqc_core::Geometry;

use crate::cert::{FlowCertificate, FlowKind, Order};
use crate::error::{FlowError, FlowResult};
use crate::extremal::edge_bound_unchecked;
use crate::infima::{natural_preorder_indexed, NaturalPreorder};
use crate::paths::max_path_family_indexed;
use crate::successor::SuccessorMap;

/// Flow with its natural pre-order, or `None` when the geometry has none.
/// Edge weights are ignored.
pub fn find_flow(geo: &Geometry) -> FlowResult<Option<FlowCertificate>> {
    let (ni, no) = (geo.inputs().len(), geo.outputs().len());
    if ni != no {
        return Err(FlowError::UnequalIO { inputs: ni, outputs: no });
    }
    let (n, m, k) = (geo.vertex_count(), geo.edge_count(), no);
    if k > 0 && m as i64 > edge_bound_unchecked(n, k) {
        return Ok(None);
    }
    let ig = geo.indexed();
    let (f, g) = max_path_family_indexed(&ig);
    for v in 0..ig.len() {
        if !(ig.is_input[v] && ig.is_output[v]) && f[v].is_none() && g[v].is_none() {
            return Ok(None);
        }
    }
    match natural_preorder_indexed(&ig, &f, &g) {
        NaturalPreorder::CircuitFound => Ok(None),
        NaturalPreorder::Infima(inf) => Ok(Some(FlowCertificate {
            kind: FlowKind::Flow,
            successor: SuccessorMap::from_indexed(&ig, &f),
            order: Order::Infima(inf),
            yz_set: BTreeSet::new(),
        })),
    }
}
