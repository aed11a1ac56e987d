//! Pattern rewrites of the DKP pipeline.

use std::collections::BTreeMap;

use mbqc_core::{result_bit, validate_pattern, CircuitIR, Command, DepExpr, MeasurementPattern};

use crate::error::{DkpError, DkpResult};
use crate::phi::phi;

fn check(p: &MeasurementPattern) -> DkpResult<()> {
    match validate_pattern(p).first() {
        Some(d) => Err(DkpError::InvalidPattern(d.to_string())),
        None => Ok(()),
    }
}

fn take(m: &mut BTreeMap<String, DepExpr>, q: &str) -> DepExpr {
    m.remove(q).unwrap_or_default()
}

/// Moves preparations and entanglers to the front and corrections to the
/// end, absorbing corrections on measured qubits into their measurements.
pub fn standardize(p: &MeasurementPattern) -> DkpResult<MeasurementPattern> {
    check(p)?;
    let (mut prep, mut ent, mut meas) = (Vec::new(), Vec::new(), Vec::new());
    let mut xs: BTreeMap<String, DepExpr> = BTreeMap::new();
    let mut zs: BTreeMap<String, DepExpr> = BTreeMap::new();
    for c in &p.commands {
        match c {
            Command::Prepare(_) => prep.push(c.clone()),
            Command::Entangle(a, b) => {
                // E_ab X_b = Z_a X_b E_ab
                let xa = xs.get(a).cloned().unwrap_or_default();
                let xb = xs.get(b).cloned().unwrap_or_default();
                zs.entry(a.clone()).or_default().xor_assign(&xb);
                zs.entry(b.clone()).or_default().xor_assign(&xa);
                ent.push(c.clone());
            }
            Command::CorrectX(q, d) => xs.entry(q.clone()).or_default().xor_assign(d),
            Command::CorrectZ(q, d) => zs.entry(q.clone()).or_default().xor_assign(d),
            Command::MeasureXY { qubit, angle, sign, pi } => {
                meas.push(Command::MeasureXY {
                    qubit: qubit.clone(),
                    angle: *angle,
                    sign: sign.xor(&take(&mut xs, qubit)),
                    pi: pi.xor(&take(&mut zs, qubit)),
                });
            }
            Command::MeasureYZ { qubit, angle, sign, pi } => {
                // X rotates a YZ basis by pi, Z reflects it
                meas.push(Command::MeasureYZ {
                    qubit: qubit.clone(),
                    angle: *angle,
                    sign: sign.xor(&take(&mut zs, qubit)),
                    pi: pi.xor(&take(&mut xs, qubit)),
                });
            }
            Command::MeasureZ(q) => {
                take(&mut zs, q);
                let x = take(&mut xs, q);
                meas.push(c.clone());
                if !x.is_empty() {
                    meas.push(Command::Shift(q.clone(), x));
                }
            }
            Command::TraceOut(q) => {
                take(&mut xs, q);
                take(&mut zs, q);
                meas.push(c.clone());
            }
            Command::Shift(..) => meas.push(c.clone()),
        }
    }
    let mut out = prep;
    out.append(&mut ent);
    out.append(&mut meas);
    let mut keys: Vec<&String> = xs.keys().chain(zs.keys()).collect();
    keys.sort();
    keys.dedup();
    for q in keys {
        if let Some(d) = xs.get(q).filter(|d| !d.is_empty()) {
            out.push(Command::CorrectX(q.clone(), d.clone()));
        }
        if let Some(d) = zs.get(q).filter(|d| !d.is_empty()) {
            out.push(Command::CorrectZ(q.clone(), d.clone()));
        }
    }
    Ok(MeasurementPattern::new(out))
}

/// Replaces each π-dependency `γ` by a clean measurement followed by
/// `Shift(v, γ)`.
pub fn eliminate_pi(p: &MeasurementPattern) -> MeasurementPattern {
    let mut out = Vec::with_capacity(p.commands.len());
    for c in &p.commands {
        match c {
            Command::MeasureXY { qubit, angle, sign, pi } if !pi.is_empty() => {
                out.push(Command::MeasureXY {
                    qubit: qubit.clone(),
                    angle: *angle,
                    sign: sign.clone(),
                    pi: DepExpr::new(),
                });
                out.push(Command::Shift(qubit.clone(), pi.clone()));
            }
            Command::MeasureYZ { qubit, angle, sign, pi } if !pi.is_empty() => {
                out.push(Command::MeasureYZ {
                    qubit: qubit.clone(),
                    angle: *angle,
                    sign: sign.clone(),
                    pi: DepExpr::new(),
                });
                out.push(Command::Shift(qubit.clone(), pi.clone()));
            }
            _ => out.push(c.clone()),
        }
    }
    MeasurementPattern::new(out)
}

/// Drops sign dependencies at angles in `πZ` and turns them into shifts at
/// odd multiples of `π/2`.
pub fn pauli_simplify(p: &MeasurementPattern) -> MeasurementPattern {
    let mut out = Vec::with_capacity(p.commands.len());
    for c in &p.commands {
        let (qubit, angle, sign) = match c {
            Command::MeasureXY { qubit, angle, sign, .. } | Command::MeasureYZ { qubit, angle, sign, .. } => {
                (qubit, *angle, sign)
            }
            _ => {
                out.push(c.clone());
                continue;
            }
        };
        if sign.is_empty() || !angle.is_pauli_axis() {
            out.push(c.clone());
            continue;
        }
        let mut m = c.clone();
        if let Command::MeasureXY { sign, .. } | Command::MeasureYZ { sign, .. } = &mut m {
            *sign = DepExpr::new();
        }
        out.push(m);
        if angle.is_odd_half_pi() {
            out.push(Command::Shift(qubit.clone(), sign.clone()));
        }
    }
    MeasurementPattern::new(out)
}

fn substitute(d: &DepExpr, acc: &BTreeMap<String, DepExpr>) -> DepExpr {
    let mut out = d.clone();
    for b in d.bits() {
        if let Some(extra) = acc.get(b) {
            out.xor_assign(extra);
        }
    }
    out
}

/// Commutes every shift to the end of the pattern, rewriting the
/// dependencies it passes, and deletes it.
pub fn signal_shift(p: &MeasurementPattern) -> MeasurementPattern {
    let mut acc: BTreeMap<String, DepExpr> = BTreeMap::new();
    let mut out = Vec::with_capacity(p.commands.len());
    for c in &p.commands {
        let c = match c {
            Command::Shift(q, d) => {
                let d = substitute(d, &acc);
                acc.entry(result_bit(q)).or_default().xor_assign(&d);
                continue;
            }
            Command::MeasureXY { qubit, angle, sign, pi } => Command::MeasureXY {
                qubit: qubit.clone(),
                angle: *angle,
                sign: substitute(sign, &acc),
                pi: substitute(pi, &acc),
            },
            Command::MeasureYZ { qubit, angle, sign, pi } => Command::MeasureYZ {
                qubit: qubit.clone(),
                angle: *angle,
                sign: substitute(sign, &acc),
                pi: substitute(pi, &acc),
            },
            Command::CorrectX(q, d) => Command::CorrectX(q.clone(), substitute(d, &acc)),
            Command::CorrectZ(q, d) => Command::CorrectZ(q.clone(), substitute(d, &acc)),
            other => other.clone(),
        };
        out.push(c);
    }
    MeasurementPattern::new(out)
}

fn is_free_pauli(c: &Command) -> bool {
    match c {
        Command::MeasureXY { angle, sign, pi, .. } | Command::MeasureYZ { angle, sign, pi, .. } => {
            angle.is_pauli_axis() && sign.is_empty() && pi.is_empty()
        }
        Command::MeasureZ(_) => true,
        _ => false,
    }
}

/// Moves dependency-free Pauli measurements to the start of the
/// measurement phase, ordered by qubit label.
pub fn commute_pauli_first(p: &MeasurementPattern) -> MeasurementPattern {
    let cmds = &p.commands;
    let start = cmds
        .iter()
        .position(|c| !matches!(c, Command::Prepare(_) | Command::Entangle(..)))
        .unwrap_or(cmds.len());
    let end = cmds[start..]
        .iter()
        .position(Command::is_correction)
        .map_or(cmds.len(), |k| start + k);
    let phase = &cmds[start..end];
    if phase.iter().any(|c| matches!(c, Command::Prepare(_) | Command::Entangle(..))) {
        return p.clone();
    }
    let mut pauli: Vec<Command> = phase.iter().filter(|c| is_free_pauli(c)).cloned().collect();
    pauli.sort_by(|a, b| a.qubits()[0].cmp(b.qubits()[0]));
    let mut out = cmds[..start].to_vec();
    out.extend(pauli);
    out.extend(phase.iter().filter(|c| !is_free_pauli(c)).cloned());
    out.extend_from_slice(&cmds[end..]);
    MeasurementPattern::new(out)
}

/// The full pipeline: translate, standardise, eliminate π-dependencies,
/// simplify Pauli measurements, shift signals, and put Pauli measurements
/// first.
pub fn dkp_complete(c: &CircuitIR) -> DkpResult<MeasurementPattern> {
    let p = standardize(&phi(c)?)?;
    let p = signal_shift(&pauli_simplify(&eliminate_pi(&p)));
    Ok(commute_pauli_first(&p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use mbqc_core::{Angle, Gate};

    fn j(a: Angle, i: &str, o: &str) -> Gate {
        Gate::J {
            angle: a,
            input: i.into(),
            output: o.into(),
        }
    }

    fn m(q: &str, a: Angle, sign: &[&str], pi: &[&str]) -> Command {
        Command::MeasureXY {
            qubit: q.into(),
            angle: a,
            sign: DepExpr::from_bits(sign.iter().map(|s| result_bit(s))),
            pi: DepExpr::from_bits(pi.iter().map(|s| result_bit(s))),
        }
    }

    #[test]
    fn two_j_chain_standard_form() {
        let (a1, a2) = (Angle::frac(1, 4), Angle::frac(1, 3));
        let c = CircuitIR::from_gates(["v0"], vec![j(a1, "v0", "v1"), j(a2, "v1", "v2")]).unwrap();
        let p = standardize(&phi(&c).unwrap()).unwrap();
        assert!(p.is_standard());
        assert!(p.commands.contains(&m("v1", -a2, &["v0"], &[])));
        assert!(p.commands.contains(&Command::CorrectX("v2".into(), DepExpr::of("v1"))));
        assert!(p.commands.contains(&Command::CorrectZ("v2".into(), DepExpr::of("v0"))));
    }

    #[test]
    fn standardize_is_idempotent() {
        let c = CircuitIR::from_gates(
            ["a", "b"],
            vec![j(Angle::frac(1, 4), "a", "a1"), Gate::CZ("a1".into(), "b".into()), j(Angle::frac(1, 8), "b", "b1")],
        )
        .unwrap();
        let p = standardize(&phi(&c).unwrap()).unwrap();
        assert_eq!(standardize(&p).unwrap(), p);
    }

    #[test]
    fn pi_elimination() {
        let p = MeasurementPattern::new(vec![m("u", Angle::zero(), &[], &[]), m("v", Angle::frac(1, 4), &[], &["u"])]);
        let q = eliminate_pi(&p);
        assert_eq!(
            q.commands[1..],
            [m("v", Angle::frac(1, 4), &[], &[]), Command::Shift("v".into(), DepExpr::of("u"))]
        );
        assert_eq!(eliminate_pi(&q), q);
        let clean = MeasurementPattern::new(vec![m("v", Angle::frac(1, 4), &["u"], &[])]);
        assert_eq!(eliminate_pi(&clean), clean);
    }

    #[test]
    fn pauli_rules() {
        let x = pauli_simplify(&MeasurementPattern::new(vec![m("v", Angle::zero(), &["u"], &[])]));
        assert_eq!(x.commands, [m("v", Angle::zero(), &[], &[])]);
        let y = pauli_simplify(&MeasurementPattern::new(vec![m("v", Angle::half_pi(), &["u"], &[])]));
        assert_eq!(
            y.commands,
            [m("v", Angle::half_pi(), &[], &[]), Command::Shift("v".into(), DepExpr::of("u"))]
        );
        let t = MeasurementPattern::new(vec![m("v", Angle::frac(1, 4), &["u"], &[])]);
        assert_eq!(pauli_simplify(&t), t);
    }

    #[test]
    fn shift_rewrites_later_dependencies() {
        let p = MeasurementPattern::new(vec![
            m("u", Angle::zero(), &[], &[]),
            m("v", Angle::zero(), &[], &[]),
            Command::Shift("v".into(), DepExpr::of("u")),
            m("w", Angle::frac(1, 4), &["v"], &[]),
            Command::CorrectX("o".into(), DepExpr::from_bits(["s[v]", "s[u]"])),
        ]);
        let q = signal_shift(&p);
        assert!(!q.has_shift());
        assert_eq!(q.commands[2], m("w", Angle::frac(1, 4), &["u", "v"], &[]));
        // s[v] + s[u] becomes s[v] + s[u] + s[u]
        assert_eq!(q.commands[3], Command::CorrectX("o".into(), DepExpr::of("v")));
    }

    #[test]
    fn trailing_shift_is_deleted() {
        let p = MeasurementPattern::new(vec![m("u", Angle::zero(), &[], &[]), Command::Shift("u".into(), DepExpr::new())]);
        assert_eq!(signal_shift(&p).commands.len(), 1);
    }

    #[test]
    fn empty_circuit() {
        let c = CircuitIR::from_gates(Vec::<String>::new(), vec![]).unwrap();
        assert!(dkp_complete(&c).unwrap().commands.is_empty());
    }

    #[test]
    fn single_j_is_the_elementary_pattern() {
        let a = Angle::frac(1, 4);
        let c = CircuitIR::from_gates(["v"], vec![j(a, "v", "w")]).unwrap();
        let p = dkp_complete(&c).unwrap();
        assert_eq!(p.to_string(), "N(w) E(v,w) M_xy(v,-pi/4;0;0) X(w)^s[v]");
    }

    #[test]
    fn pauli_measurements_go_first() {
        let c = CircuitIR::from_gates(
            ["a"],
            vec![j(Angle::frac(1, 4), "a", "b"), j(Angle::zero(), "b", "c"), j(Angle::half_pi(), "c", "d")],
        )
        .unwrap();
        let p = dkp_complete(&c).unwrap();
        let meas: Vec<&str> = p.commands.iter().filter(|c| c.is_measurement()).map(|c| c.qubits()[0]).collect();
        assert_eq!(meas, ["b", "c", "a"]);
        for c in &p.commands {
            if let Command::MeasureXY { angle, sign, pi, .. } = c {
                if angle.is_pauli_axis() {
                    assert!(sign.is_empty() && pi.is_empty());
                }
            }
        }
    }
}
