//! Stable-index circuits over the gate set {J(a), CZ} plus fractional CZ powers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Ratio;

use crate::angle::Angle;
use crate::error::{CoreError, CoreResult};
use crate::geometry::{normalize_weight, Geometry, Plane};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gate {
    /// J(angle) deprecating `input` and advancing `output`.
    J { angle: Angle, input: String, output: String },
    CZ(String, String),
    /// diag(1, 1, 1, e^{i pi t}); only produced by synthesis from weighted
    /// quadratic forms.
    CZPow(String, String, Ratio<i64>),
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::J { angle, input, output } => write!(f, "J({angle})[{output}/{input}]"),
            Gate::CZ(a, b) => write!(f, "CZ[{a},{b}]"),
            Gate::CZPow(a, b, t) => write!(f, "CZ^{t}[{a},{b}]"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CircuitIR {
    pub gates: Vec<Gate>,
    pub inputs: BTreeSet<String>,
    pub outputs: BTreeSet<String>,
}

impl CircuitIR {
    /// Builds a circuit and derives its outputs; fails if ill-formed.
    pub fn from_gates<I, S>(inputs: I, gates: Vec<Gate>) -> CoreResult<CircuitIR>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let inputs: BTreeSet<String> = inputs.into_iter().map(Into::into).collect();
        let mut c = CircuitIR {
            gates,
            inputs,
            outputs: BTreeSet::new(),
        };
        c.outputs = c.current_after()?;
        Ok(c)
    }

    fn current_after(&self) -> CoreResult<BTreeSet<String>> {
        let mut current = self.inputs.clone();
        let mut seen = self.inputs.clone();
        let bad = |m: String| Err(CoreError::IllFormedCircuit(m));
        for (i, g) in self.gates.iter().enumerate() {
            match g {
                Gate::J { input, output, .. } => {
                    if !current.remove(input) {
                        return bad(format!("gate {i}: {input} is not current"));
                    }
                    if input == output || !seen.insert(output.clone()) {
                        return bad(format!("gate {i}: {output} is not fresh"));
                    }
                    current.insert(output.clone());
                }
                Gate::CZ(a, b) | Gate::CZPow(a, b, _) => {
                    if a == b {
                        return bad(format!("gate {i}: CZ on a single index {a}"));
                    }
                    for x in [a, b] {
                        if !current.contains(x) {
                            return bad(format!("gate {i}: {x} is not current"));
                        }
                    }
                }
            }
        }
        Ok(current)
    }

    /// Checks the stable-index invariants and the recorded outputs.
    pub fn validate(&self) -> CoreResult<()> {
        let out = self.current_after()?;
        if out != self.outputs {
            return Err(CoreError::IllFormedCircuit("recorded outputs differ from derived outputs".into()));
        }
        Ok(())
    }

    pub fn indices(&self) -> BTreeSet<String> {
        let mut s = self.inputs.clone();
        for g in &self.gates {
            if let Gate::J { output, .. } = g {
                s.insert(output.clone());
            }
        }
        s
    }

    /// Drops wires that no gate touches. Patterns carry no qubit for such
    /// a wire, so this is the form extraction can recover.
    pub fn without_idle_wires(&self) -> CircuitIR {
        let mut used = BTreeSet::new();
        for g in &self.gates {
            match g {
                Gate::J { input, output, .. } => {
                    used.insert(input.clone());
                    used.insert(output.clone());
                }
                Gate::CZ(a, b) | Gate::CZPow(a, b, _) => {
                    used.insert(a.clone());
                    used.insert(b.clone());
                }
            }
        }
        CircuitIR {
            gates: self.gates.clone(),
            inputs: self.inputs.intersection(&used).cloned().collect(),
            outputs: self.outputs.intersection(&used).cloned().collect(),
        }
    }

    pub fn has_fractional(&self) -> bool {
        self.gates.iter().any(|g| matches!(g, Gate::CZPow(..)))
    }
}

impl fmt::Display for CircuitIR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gates.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Interaction graph and the successor map `f(v) = w` for each J[w/v].
/// Deprecated indices are tagged with the XY plane. Repeated CZs on a pair
/// cancel; fractional powers accumulate as edge weights.
pub fn interaction_graph(c: &CircuitIR) -> CoreResult<(Geometry, BTreeMap<String, String>)> {
    c.validate()?;
    let mut g = Geometry::new();
    for v in c.indices() {
        g.add_vertex(&v);
    }
    let mut f = BTreeMap::new();
    for gate in &c.gates {
        match gate {
            Gate::J { input, output, .. } => {
                g.toggle_edge(input, output)?;
                g.set_plane(input, Plane::XY)?;
                f.insert(input.clone(), output.clone());
            }
            Gate::CZ(a, b) => g.toggle_edge(a, b)?,
            Gate::CZPow(a, b, t) => {
                if normalize_weight(*t).is_some() {
                    g.accumulate_edge(a, b, *t)?;
                }
            }
        }
    }
    g.set_inputs(c.inputs.iter().cloned())?;
    g.set_outputs(c.outputs.iter().cloned())?;
    Ok((g, f))
}

/// Equality of the J and CZ multisets under the identity relabelling; the
/// constructions in this workspace preserve index labels, so this is the
/// isomorphism notion used in round-trip checks.
pub fn same_gate_multiset(a: &CircuitIR, b: &CircuitIR) -> bool {
    fn canon(c: &CircuitIR) -> Vec<Gate> {
        let mut v: Vec<Gate> = c
            .gates
            .iter()
            .map(|g| match g {
                Gate::CZ(x, y) if x > y => Gate::CZ(y.clone(), x.clone()),
                Gate::CZPow(x, y, t) if x > y => Gate::CZPow(y.clone(), x.clone(), *t),
                other => other.clone(),
            })
            .collect();
        v.sort();
        v
    }
    a.inputs == b.inputs && a.outputs == b.outputs && canon(a) == canon(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j(a: Angle, i: &str, o: &str) -> Gate {
        Gate::J {
            angle: a,
            input: i.into(),
            output: o.into(),
        }
    }

    #[test]
    fn single_j() {
        let c = CircuitIR::from_gates(["v"], vec![j(Angle::zero(), "v", "w")]).unwrap();
        let (g, f) = interaction_graph(&c).unwrap();
        assert!(g.has_edge("v", "w"));
        assert_eq!(f["v"], "w");
        assert_eq!(c.outputs.iter().collect::<Vec<_>>(), vec!["w"]);
    }

    #[test]
    fn lone_cz() {
        let c = CircuitIR::from_gates(["u", "v"], vec![Gate::CZ("u".into(), "v".into())]).unwrap();
        let (g, f) = interaction_graph(&c).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(f.is_empty());
        assert_eq!(g.inputs(), g.outputs());
    }

    #[test]
    fn ill_formed() {
        assert!(CircuitIR::from_gates(["v"], vec![j(Angle::zero(), "x", "w")]).is_err());
        assert!(CircuitIR::from_gates(["v"], vec![j(Angle::zero(), "v", "v")]).is_err());
        assert!(CircuitIR::from_gates(["v", "u"], vec![j(Angle::zero(), "v", "u")]).is_err());
        assert!(CircuitIR::from_gates(
            ["v", "u"],
            vec![j(Angle::zero(), "v", "w"), Gate::CZ("v".into(), "u".into())]
        )
        .is_err());
    }

    #[test]
    fn idle_wires_dropped() {
        let c = CircuitIR::from_gates(["u", "v"], vec![j(Angle::zero(), "v", "w")]).unwrap();
        let d = c.without_idle_wires();
        assert_eq!(d.inputs.iter().collect::<Vec<_>>(), vec!["v"]);
        assert_eq!(d.outputs.iter().collect::<Vec<_>>(), vec!["w"]);
        d.validate().unwrap();
    }

    #[test]
    fn repeated_cz_cancels() {
        let cz = Gate::CZ("u".into(), "v".into());
        let c = CircuitIR::from_gates(["u", "v"], vec![cz.clone(), cz]).unwrap();
        assert_eq!(interaction_graph(&c).unwrap().0.edge_count(), 0);
    }
}
