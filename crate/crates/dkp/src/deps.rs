//! Dependency propagation matrices and the dependency test.

use std::collections::{BTreeMap, BTreeSet};

use mbqc_core::{bit_qubit, pattern_geometry, Angle, Command, DepExpr, Geometry, MeasurementPattern};
use mbqc_flow::{influence_digraph, SuccessorMap};

use crate::error::{DkpError, DkpResult};
use crate::gf2::{gf2_inverse, Gf2Matrix};

/// Matrices indexed by the sorted vertex labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dependencies {
    pub labels: Vec<String>,
    /// Shift propagation: `T[w][v]`.
    pub t: Gf2Matrix,
    /// Flow propagation: `F[w][v]`.
    pub f: Gf2Matrix,
}

impl Dependencies {
    pub fn index(&self, v: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(v)).ok()
    }
}

/// `f` is injective, covers `O^c` by edges, avoids inputs, and its
/// influence relation has no cycle.
pub fn is_flow_function(geo: &Geometry, f: &BTreeMap<String, String>) -> bool {
    let Ok(s) = SuccessorMap::from_f(f.clone()) else { return false };
    if f.iter().any(|(v, w)| v == w) {
        return false;
    }
    influence_digraph(geo, &s).is_ok_and(|d| d.find_cycle().is_none())
}

fn odd_half_pi(angles: &BTreeMap<String, Angle>, w: &str) -> bool {
    angles.get(w).is_some_and(|a| a.is_odd_half_pi())
}

pub fn dependency_matrices(
    geo: &Geometry,
    f: &BTreeMap<String, String>,
    angles: &BTreeMap<String, Angle>,
) -> DkpResult<Dependencies> {
    if !is_flow_function(geo, f) {
        return Err(DkpError::NotAFlow(format!("{f:?}")));
    }
    let labels: Vec<String> = geo.vertices().iter().cloned().collect();
    let n = labels.len();
    let idx = |v: &str| labels.binary_search_by(|l| l.as_str().cmp(v)).expect("vertex");
    let (mut t, mut fm) = (Gf2Matrix::zeros(n, n), Gf2Matrix::zeros(n, n));
    for v in geo.vertices() {
        if geo.outputs().contains(v) {
            continue;
        }
        if !angles.contains_key(v) {
            return Err(DkpError::InvalidInput(format!("no angle for measured vertex {v}")));
        }
        let fv = &f[v];
        for w in geo.neighbors(fv) {
            if &w != v {
                t.set(idx(&w), idx(v), true);
            }
        }
        if odd_half_pi(angles, fv) {
            t.set(idx(fv), idx(v), true);
        } else {
            fm.set(idx(fv), idx(v), true);
        }
    }
    Ok(Dependencies { labels, t, f: fm })
}

/// `(E, D)` with `D = (I - T)^{-1}` and `E = F' D`, where `F'` is `F` with
/// the rows of vertices measured at angles in `πZ` cleared (their sign
/// dependencies are dropped by Pauli simplification).
pub fn expected_dependencies(
    deps: &Dependencies,
    angles: &BTreeMap<String, Angle>,
) -> DkpResult<(Gf2Matrix, Gf2Matrix)> {
    let n = deps.labels.len();
    let d = gf2_inverse(&Gf2Matrix::identity(n).add(&deps.t))?;
    let mut f = deps.f.clone();
    for (i, l) in deps.labels.iter().enumerate() {
        if angles.get(l).is_some_and(|a| a.is_multiple_of_pi()) {
            for c in 0..n {
                f.set(i, c, false);
            }
        }
    }
    Ok((f.mul(&d), d))
}

fn qubit_set(d: &DepExpr) -> Option<BTreeSet<String>> {
    d.bits().iter().map(|b| bit_qubit(b).map(str::to_owned)).collect()
}

/// Whether the dependencies of a standard, shift-free pattern of XY
/// measurements are exactly those the DKP construction produces for `f`.
pub fn test_dependencies(p: &MeasurementPattern, f: &BTreeMap<String, String>) -> DkpResult<bool> {
    if !p.is_standard() || p.has_shift() {
        return Err(DkpError::InvalidInput("pattern must be standard and shift-free".into()));
    }
    let geo = pattern_geometry(p).map_err(|e| DkpError::InvalidPattern(e.to_string()))?;
    let mut angles = BTreeMap::new();
    for c in &p.commands {
        match c {
            Command::MeasureXY { qubit, angle, .. } => {
                angles.insert(qubit.clone(), *angle);
            }
            Command::MeasureYZ { .. } | Command::MeasureZ(_) | Command::TraceOut(_) => {
                return Err(DkpError::InvalidInput(format!("unsupported command {c}")));
            }
            _ => {}
        }
    }
    let deps = dependency_matrices(&geo, f, &angles)?;
    let (e, d) = expected_dependencies(&deps, &angles)?;
    let row = |m: &Gf2Matrix, w: &str| -> BTreeSet<String> {
        let wi = deps.index(w).expect("vertex");
        m.row_support(wi).into_iter().filter(|&c| c != wi).map(|c| deps.labels[c].clone()).collect()
    };

    let mut x_deps: BTreeMap<String, DepExpr> = BTreeMap::new();
    let mut z_deps: BTreeMap<String, DepExpr> = BTreeMap::new();
    for c in &p.commands {
        match c {
            Command::MeasureXY { qubit, sign, pi, .. } => {
                if !pi.is_empty() || qubit_set(sign) != Some(row(&e, qubit)) {
                    return Ok(false);
                }
            }
            Command::CorrectX(q, dep) => x_deps.entry(q.clone()).or_default().xor_assign(dep),
            Command::CorrectZ(q, dep) => z_deps.entry(q.clone()).or_default().xor_assign(dep),
            _ => {}
        }
    }
    for w in geo.outputs() {
        let x = x_deps.remove(w).unwrap_or_default();
        let z = z_deps.remove(w).unwrap_or_default();
        if qubit_set(&x) != Some(row(&e, w)) || qubit_set(&z) != Some(row(&d, w)) {
            return Ok(false);
        }
    }
    Ok(x_deps.is_empty() && z_deps.is_empty())
}
