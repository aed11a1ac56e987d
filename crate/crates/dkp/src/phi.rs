use mbqc_core::{CircuitIR, Command, DepExpr, Gate, MeasurementPattern};

use crate::error::{DkpError, DkpResult};

/// Gate-by-gate translation: `J(a)[:w/v]` becomes
/// `N(w) E(v,w) M_xy(v,-a) X(w)^{s[v]}` and `CZ[u,v]` becomes `E(u,v)`.
pub fn phi(c: &CircuitIR) -> DkpResult<MeasurementPattern> {
    c.validate().map_err(|e| DkpError::InvalidCircuit(e.to_string()))?;
    let mut cmds = Vec::with_capacity(4 * c.gates.len());
    for g in &c.gates {
        match g {
            Gate::J { angle, input, output } => {
                cmds.push(Command::Prepare(output.clone()));
                cmds.push(Command::Entangle(input.clone(), output.clone()));
                cmds.push(Command::measure_xy(input, -*angle));
                cmds.push(Command::CorrectX(output.clone(), DepExpr::of(input)));
            }
            Gate::CZ(a, b) => cmds.push(Command::Entangle(a.clone(), b.clone())),
            Gate::CZPow(..) => {
                return Err(DkpError::InvalidCircuit(format!("{g:?} is outside the {{J, CZ}} gate set")));
            }
        }
    }
    Ok(MeasurementPattern::new(cmds))
}

#[cfg(test)]
mod tests {
    use super::*;
    use mbqc_core::{validate_pattern, Angle};

    #[test]
    fn single_j() {
        let a = Angle::frac(1, 4);
        let c = CircuitIR::from_gates(
            ["v"],
            vec![Gate::J {
                angle: a,
                input: "v".into(),
                output: "w".into(),
            }],
        )
        .unwrap();
        let p = phi(&c).unwrap();
        assert_eq!(p.to_string(), "N(w) E(v,w) M_xy(v,-pi/4;0;0) X(w)^s[v]");
        assert!(validate_pattern(&p).is_empty());
    }

    #[test]
    fn cz_alone() {
        let c = CircuitIR::from_gates(["u", "v"], vec![Gate::CZ("u".into(), "v".into())]).unwrap();
        assert_eq!(phi(&c).unwrap().commands, vec![Command::Entangle("u".into(), "v".into())]);
    }
}
