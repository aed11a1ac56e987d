use num_complex::Complex64;
use num_rational::Ratio;

use mbqc_core::{Angle, CircuitIR, Gate};

use crate::dense::{c64, DenseMatrix};
use crate::error::{SimError, SimResult};
use crate::reg::Register;

/// Wire cap for [`circuit_unitary`].
pub const MAX_CIRCUIT_WIRES: usize = 12;

pub(crate) fn j_entries(alpha: f64) -> [[Complex64; 2]; 2] {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let m = Complex64::from_polar(s, -alpha / 2.0);
    let p = Complex64::from_polar(s, alpha / 2.0);
    [[m, p], [m, -p]]
}

/// `J(a) = (1/√2)[[e^{-ia/2}, e^{ia/2}], [e^{-ia/2}, -e^{ia/2}]]`.
pub fn j_matrix(a: Angle) -> DenseMatrix {
    let e = j_entries(a.radians());
    DenseMatrix::from_rows(&[e[0].to_vec(), e[1].to_vec()])
}

pub fn cz_matrix() -> DenseMatrix {
    czpow_matrix(Ratio::from_integer(1))
}

/// `diag(1, 1, 1, e^{iπt})`.
pub fn czpow_matrix(t: Ratio<i64>) -> DenseMatrix {
    let mut m = DenseMatrix::identity(4);
    m.set(3, 3, phase_of(t));
    m
}

fn phase_of(t: Ratio<i64>) -> Complex64 {
    let x = *t.numer() as f64 / *t.denom() as f64;
    Complex64::from_polar(1.0, std::f64::consts::PI * x)
}

/// Unitary of a circuit, rows labelled by outputs and columns by inputs.
pub fn circuit_unitary(c: &CircuitIR) -> SimResult<DenseMatrix> {
    c.validate().map_err(|e| SimError::Invalid(e.to_string()))?;
    if c.inputs.len() > MAX_CIRCUIT_WIRES {
        return Err(SimError::TooLarge(format!("{} wires", c.inputs.len())));
    }
    let inputs: Vec<String> = c.inputs.iter().cloned().collect();
    let mut reg = Register::identity(&inputs);
    for g in &c.gates {
        match g {
            Gate::J { angle, input, output } => {
                let p = reg.pos(input).expect("valid circuit");
                reg.apply_1q(p, j_entries(angle.radians()));
                reg.rename(input, output);
            }
            Gate::CZ(a, b) => {
                let (p, q) = (reg.pos(a).expect("valid"), reg.pos(b).expect("valid"));
                reg.apply_phase_11(p, q, c64(-1.0, 0.0));
            }
            Gate::CZPow(a, b, t) => {
                let (p, q) = (reg.pos(a).expect("valid"), reg.pos(b).expect("valid"));
                reg.apply_phase_11(p, q, phase_of(*t));
            }
        }
    }
    Ok(reg.to_matrix())
}
