//! Named expansions and patterns.

use mbqc_core::{Angle, CircuitIR, Command, DepExpr, Gate, MeasurementPattern};
use mbqc_sim::c64;

use crate::error::{QfeError, QfeResult};
use crate::expansion::QuadraticFormExpansion;

fn xs(k: usize, p: &str) -> Vec<String> {
    (0..k).map(|j| format!("{p}{j}")).collect()
}

/// Fourier transform over `Z_{2^k}`: inputs `x0..`, outputs `y0..` (index
/// 0 least significant), `θ_{x_j y_h} = 2^{h+j} π / 2^{k-1}`.
pub fn qft_qfe(k: usize) -> QuadraticFormExpansion {
    assert!((1..=30).contains(&k), "k out of range");
    let (x, y) = (xs(k, "x"), xs(k, "y"));
    let all: Vec<String> = x.iter().chain(&y).cloned().collect();
    let mut q = QuadraticFormExpansion::new(all, x.clone(), y.clone())
        .expect("labels")
        .with_prefactor(c64((0.5f64).powf(k as f64 / 2.0), 0.0));
    for j in 0..k {
        for h in 0..k - j {
            let t = Angle::frac(1 << (h + j), 1 << (k - 1));
            q.set_term(&x[j], &y[h], t).expect("labels");
        }
    }
    q
}

/// `1/2 Σ (-1)^{x_v x_m + x_m x_w} |x_w⟩⟨x_v|`, the identity on one qubit.
pub fn identity_qfe(v: &str, m: &str, w: &str) -> QuadraticFormExpansion {
    let mut q = QuadraticFormExpansion::new([v, m, w], [v], [w]).expect("labels").with_prefactor(c64(0.5, 0.0));
    q.set_term(v, m, Angle::pi()).expect("labels");
    q.set_term(m, w, Angle::pi()).expect("labels");
    q
}

/// The `φ (x_u ⊕ x_v)` gadget on `u, v` with an extra square term `θ` on
/// `a1` and `φ` on `a2`, prefactor 1/2.
pub fn parity_gadget(theta: Angle, phi: Angle) -> QuadraticFormExpansion {
    let mut q = QuadraticFormExpansion::new(["u", "v", "a1", "a2"], ["u", "v"], ["u", "v"])
        .expect("labels")
        .with_prefactor(c64(0.5, 0.0));
    for (a, b) in [("u", "a1"), ("v", "a1"), ("a1", "a2")] {
        q.set_term(a, b, Angle::pi()).expect("labels");
    }
    q.set_term("a1", "a1", theta).expect("labels");
    q.set_term("a2", "a2", phi).expect("labels");
    q
}

/// The negative control: both extra squares at π/2 give diagonal entries
/// `1 + i` or `0` depending on the parity of `x_u, x_v`.
pub fn nonuniformity_gadget() -> QuadraticFormExpansion {
    parity_gadget(Angle::half_pi(), Angle::half_pi())
}

fn leaves(k: usize) -> Vec<String> {
    (1..=k).map(|j| format!("v{j}")).collect()
}

/// `e^{-iθ Z^{⊗k}/2}` on `v1..vk` with only XY measurements: `a1` measured
/// at 0 simulates a frame change so that `a2` acts as a YZ measurement.
pub fn zz_many_pattern(k: usize, theta: Angle) -> MeasurementPattern {
    let vs = leaves(k);
    let mut cmds = vec![
        Command::Prepare("a1".into()),
        Command::Prepare("a2".into()),
        Command::Entangle("a1".into(), "a2".into()),
    ];
    for v in &vs {
        cmds.push(Command::Entangle("a1".into(), v.clone()));
    }
    cmds.push(Command::measure_xy("a1", Angle::zero()));
    cmds.push(Command::MeasureXY {
        qubit: "a2".into(),
        angle: -theta,
        sign: DepExpr::of("a1"),
        pi: DepExpr::new(),
    });
    for v in &vs {
        cmds.push(Command::CorrectZ(v.clone(), DepExpr::of("a2")));
    }
    MeasurementPattern::new(cmds)
}

/// The same rotation with one auxiliary qubit measured in the YZ plane.
pub fn zz_many_yz_pattern(k: usize, theta: Angle) -> MeasurementPattern {
    let vs = leaves(k);
    let mut cmds = vec![Command::Prepare("a".into())];
    for v in &vs {
        cmds.push(Command::Entangle("a".into(), v.clone()));
    }
    cmds.push(Command::measure_yz("a", theta));
    for v in &vs {
        cmds.push(Command::CorrectZ(v.clone(), DepExpr::of("a")));
    }
    MeasurementPattern::new(cmds)
}

/// The expansion whose positive branch is [`zz_many_pattern`].
pub fn zz_many_qfe(k: usize, theta: Angle) -> QuadraticFormExpansion {
    let vs = leaves(k);
    let all: Vec<String> = vs.iter().cloned().chain(["a1".to_string(), "a2".to_string()]).collect();
    let mut q = QuadraticFormExpansion::new(all, vs.clone(), vs.clone()).expect("labels");
    q.set_term("a1", "a2", Angle::pi()).expect("labels");
    for v in &vs {
        q.set_term("a1", v, Angle::pi()).expect("labels");
    }
    q.set_term("a2", "a2", theta).expect("labels");
    q
}

/// Sum-over-paths expansion of a stable-index circuit: `J(α)[w/v]` adds
/// `α x_v` and `π x_v x_w`, `CZ^t[u,v]` adds `πt x_u x_v`.
pub fn circuit_qfe(c: &CircuitIR) -> QfeResult<QuadraticFormExpansion> {
    c.validate().map_err(|e| QfeError::Invalid(e.to_string()))?;
    let mut q = QuadraticFormExpansion::new(c.indices(), c.inputs.clone(), c.outputs.clone())?;
    let mut js = 0;
    for g in &c.gates {
        match g {
            Gate::J { angle, input, output } => {
                q.add_term(input, input, *angle)?;
                q.add_term(input, output, Angle::pi())?;
                js += 1;
            }
            Gate::CZ(a, b) => q.add_term(a, b, Angle::pi())?,
            Gate::CZPow(a, b, t) => q.add_term(a, b, Angle::from_ratio(*t))?,
        }
    }
    Ok(q.with_prefactor(c64(std::f64::consts::FRAC_1_SQRT_2.powi(js), 0.0)))
}
