use std::collections::BTreeMap;

use mbqc_core::{pattern_geometry, Angle, CircuitIR, Command, Gate, MeasurementPattern};
use mbqc_dkp::test_dependencies;
use mbqc_flow::find_flow;

use crate::error::{SemanticsError, SemanticsResult};
use crate::star::star_decompose;

/// The circuit whose DKP compilation is congruent to `p`, or `None` when the
/// geometry has no flow or the dependencies are not the ones the
/// construction would produce.
pub fn semantic_dkp(p: &MeasurementPattern) -> SemanticsResult<Option<CircuitIR>> {
    if !p.is_standard() || p.has_shift() {
        return Err(SemanticsError::InvalidPattern("pattern must be standard and shift-free".into()));
    }
    let mut theta: BTreeMap<String, Angle> = BTreeMap::new();
    for c in &p.commands {
        match c {
            Command::MeasureXY { qubit, angle, .. } => {
                theta.insert(qubit.clone(), -*angle);
            }
            Command::MeasureYZ { .. } | Command::MeasureZ(_) | Command::TraceOut(_) => {
                return Err(SemanticsError::InvalidPattern(format!("{c} has no circuit counterpart")));
            }
            _ => {}
        }
    }
    let geo = pattern_geometry(p).map_err(|e| SemanticsError::InvalidPattern(e.to_string()))?;
    let (ni, no) = (geo.inputs().len(), geo.outputs().len());
    if ni < no {
        return Err(SemanticsError::UnequalIO { inputs: ni, outputs: no });
    }
    if ni > no {
        // an injective f : O^c -> I^c cannot exist
        return Ok(None);
    }
    let Some(cert) = find_flow(&geo).map_err(|e| SemanticsError::InvalidPattern(e.to_string()))? else {
        return Ok(None);
    };
    let f = cert.successor.f;
    if !test_dependencies(p, &f).map_err(|e| SemanticsError::InvalidPattern(e.to_string()))? {
        return Ok(None);
    }

    let d = star_decompose(&geo, &f)?;
    let mut gates = Vec::with_capacity(geo.edge_count());
    for (a, b, _) in d.residual.edges() {
        gates.push(Gate::CZ(a.to_owned(), b.to_owned()));
    }
    for s in &d.stars {
        gates.push(Gate::J {
            angle: theta[&s.root],
            input: s.root.clone(),
            output: s.center.clone(),
        });
        for z in &s.leaves {
            gates.push(Gate::CZ(s.center.clone(), z.clone()));
        }
    }
    let c = CircuitIR::from_gates(geo.inputs().iter().cloned(), gates)
        .map_err(|e| SemanticsError::InvalidPattern(e.to_string()))?;
    Ok(Some(c))
}
