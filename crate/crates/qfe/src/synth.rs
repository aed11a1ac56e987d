//! Circuits from expansions with a flow, patterns from expansions with a
//! gflow or (after contraction) an eflow.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet};

use mbqc_core::{Angle, CircuitIR, Command, DepExpr, Gate, Geometry, MeasurementPattern, Plane};
use mbqc_dkp::standardize;
use mbqc_flow::{find_eflow, find_flow, lift_eflow_to_gflow, odd_neighborhood, verify_gflow, FlowError, GflowCertificate};
use mbqc_semantics::star_decompose;
use num_rational::Ratio;

use crate::error::{QfeError, QfeResult};
use crate::expansion::{induced_geometry, QuadraticFormExpansion};
use crate::rewrite::{decross, pad_outputs, telescope};

fn cz(u: &str, v: &str, w: Ratio<i64>) -> Gate {
    if w == Ratio::from_integer(1) {
        Gate::CZ(u.to_owned(), v.to_owned())
    } else {
        Gate::CZPow(u.to_owned(), v.to_owned(), w)
    }
}

fn flow_error(e: FlowError) -> QfeError {
    match e {
        FlowError::UnequalIO { inputs, outputs } => QfeError::UnequalIO { inputs, outputs },
        other => QfeError::Invalid(other.to_string()),
    }
}

/// `J(θ_vv)[f(v)/v]` per non-output and a (possibly fractional) CZ per
/// non-flow edge, ordered by star decomposition. `None` when the geometry
/// has no flow or a flow edge has fractional weight.
pub fn synth_circuit_via_flow(q: &QuadraticFormExpansion) -> QfeResult<Option<CircuitIR>> {
    q.require_clean_outputs()?;
    let geo = induced_geometry(q);
    let Some(cert) = find_flow(&geo).map_err(flow_error)? else {
        return Ok(None);
    };
    let f = cert.successor.f;
    if f.iter().any(|(v, w)| geo.weight(v, w) != Some(Ratio::from_integer(1))) {
        return Ok(None);
    }
    let d = star_decompose(&geo, &f).map_err(|e| QfeError::Invalid(e.to_string()))?;
    let mut gates = Vec::with_capacity(geo.edge_count());
    for (u, v, w) in d.residual.edges() {
        gates.push(cz(u, v, w));
    }
    for s in &d.stars {
        gates.push(Gate::J {
            angle: q.square(&s.root),
            input: s.root.clone(),
            output: s.center.clone(),
        });
        for z in &s.leaves {
            gates.push(cz(&s.center, z, geo.weight(&s.center, z).expect("edge")));
        }
    }
    let c = CircuitIR::from_gates(q.inputs().iter().cloned(), gates).map_err(|e| QfeError::Invalid(e.to_string()))?;
    Ok(Some(c))
}

fn preparations_and_entanglers(geo: &Geometry) -> Vec<Command> {
    let mut cmds: Vec<Command> = geo
        .vertices()
        .iter()
        .filter(|v| !geo.inputs().contains(*v))
        .map(|v| Command::Prepare(v.clone()))
        .collect();
    for (u, v, _) in geo.edges() {
        cmds.push(Command::Entangle(u.to_owned(), v.to_owned()));
    }
    cmds
}

/// Non-outputs, latest layer first, ties by label.
fn measurement_order<'a>(geo: &'a Geometry, layers: &BTreeMap<String, usize>) -> Vec<&'a String> {
    let mut vs: Vec<&String> = geo.vertices().iter().filter(|v| !geo.outputs().contains(*v)).collect();
    vs.sort_by_key(|v| (Reverse(layers.get(*v).copied().unwrap_or(0)), (*v).clone()));
    vs
}

fn standardized(cmds: Vec<Command>) -> QfeResult<MeasurementPattern> {
    standardize(&MeasurementPattern::new(cmds)).map_err(|e| QfeError::Invalid(e.to_string()))
}

/// Measures each `v ∉ O` at `-θ_vv`, then corrects `X` on `g(v)` and `Z` on
/// `Odd(g(v)) \ {v}` by `s[v]`, latest layer first; returned standardized.
pub fn synth_pattern_via_gflow(q: &QuadraticFormExpansion, cert: &GflowCertificate) -> QfeResult<MeasurementPattern> {
    q.require_clean_outputs()?;
    if let Some((u, v, _)) = q.cross_terms().find(|(_, _, t)| *t != Angle::pi()) {
        return Err(QfeError::Fractional(format!("{u}-{v}")));
    }
    let geo = induced_geometry(q);
    if let Some((v, p)) = cert.planes.iter().find(|(_, p)| **p != Plane::XY) {
        return Err(QfeError::BadCertificate(format!("{v} is measured in {p}")));
    }
    if !verify_gflow(&geo, cert) {
        return Err(QfeError::BadCertificate("gflow conditions fail".into()));
    }
    let mut cmds = preparations_and_entanglers(&geo);
    for v in measurement_order(&geo, &cert.layers) {
        cmds.push(Command::measure_xy(v, -q.square(v)));
        let gv = &cert.g[v];
        for u in gv {
            cmds.push(Command::CorrectX(u.clone(), DepExpr::of(v)));
        }
        for w in odd_neighborhood(&geo, gv).into_iter().filter(|w| w != v) {
            cmds.push(Command::CorrectZ(w, DepExpr::of(v)));
        }
    }
    standardized(cmds)
}

/// Degree-one interior indices whose neighbour is interior with a square
/// term in `πZ`; at most one leaf per neighbour. Returns leaf → neighbour.
fn pendant_pairs(q: &QuadraticFormExpansion) -> BTreeMap<String, String> {
    let interior = |x: &str| !q.inputs().contains(x) && !q.outputs().contains(x);
    let mut leaf_of: BTreeMap<String, String> = BTreeMap::new();
    let mut taken: BTreeSet<String> = BTreeSet::new();
    for v in q.indices().iter().filter(|v| interior(v)) {
        let nv = q.neighbors(v);
        if nv.len() != 1 || taken.contains(v) {
            continue;
        }
        let a = nv.into_iter().next().expect("one neighbour");
        if !interior(&a) || !q.square(&a).is_multiple_of_pi() || taken.contains(&a) {
            continue;
        }
        taken.insert(v.clone());
        taken.insert(a.clone());
        leaf_of.insert(v.clone(), a);
    }
    leaf_of
}

/// Pads and decrosses, contracts leaf chains, treats each qualifying leaf
/// and its neighbour `a` as a YZ measurement on `a`, and searches for an
/// eflow on what remains. `None` when there is none.
pub fn synth_pattern_via_eflow(q: &QuadraticFormExpansion) -> QfeResult<Option<MeasurementPattern>> {
    q.require_clean_outputs()?;
    let q = telescope(&pad_outputs(&decross(q)));
    let geo = induced_geometry(&q);
    let leaves = pendant_pairs(&q);
    let t: BTreeSet<String> = leaves.values().cloned().collect();
    let leaf_at: BTreeMap<&String, &String> = leaves.iter().map(|(v, a)| (a, v)).collect();
    let mut reduced = geo.clone();
    for v in leaves.keys() {
        reduced.remove_vertex(v);
    }
    let Some(cert) = find_eflow(&reduced, &t).map_err(flow_error)? else {
        return Ok(None);
    };
    let layers = lift_eflow_to_gflow(&reduced, &cert).layers;
    let mut cmds = preparations_and_entanglers(&geo);
    for v in measurement_order(&reduced, &layers) {
        cmds.push(Command::measure_xy(v, -q.square(v)));
        if let Some(leaf) = leaf_at.get(v) {
            cmds.push(Command::MeasureXY {
                qubit: (*leaf).clone(),
                angle: -q.square(leaf),
                sign: DepExpr::of(v),
                pi: DepExpr::new(),
            });
            for u in geo.neighbors(v).into_iter().filter(|u| u != *leaf) {
                cmds.push(Command::CorrectZ(u, DepExpr::of(leaf)));
            }
        } else {
            let w = cert.successor.succ(v).expect("flow on non-outputs").to_owned();
            for z in geo.neighbors(&w).into_iter().filter(|z| z != v) {
                cmds.push(Command::CorrectZ(z, DepExpr::of(v)));
            }
            cmds.push(Command::CorrectX(w, DepExpr::of(v)));
        }
    }
    standardized(cmds).map(Some)
}
