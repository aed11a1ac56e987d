//! Exhaustive branch simulation of measurement patterns.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use mbqc_core::{result_bit, validate_pattern, Angle, Command, DepExpr, MeasurementPattern};

use crate::dense::{c64, equal_up_to_phase, DenseMatrix, DEFAULT_TOL};
use crate::error::{SimError, SimResult};
use crate::reg::Register;

/// Budget on `2^live × 2^inputs` amplitudes held at once.
pub const MAX_ENTRIES: usize = 1 << 22;
/// Budget on branching commands (measurements and trace-outs).
pub const MAX_MEASUREMENTS: usize = 20;

/// Branches this deep or shallower may run on separate threads.
const PAR_DEPTH: usize = 6;

#[derive(Clone, Copy, Debug)]
pub struct SimOptions {
    pub tol: f64,
    pub parallel: bool,
}

impl Default for SimOptions {
    fn default() -> Self {
        SimOptions {
            tol: DEFAULT_TOL,
            parallel: true,
        }
    }
}

/// The isometry `U` implemented by `p`, if every branch operator is a
/// multiple of a common `U` and the branch weights sum to one.
pub fn pattern_unitary(p: &MeasurementPattern) -> SimResult<DenseMatrix> {
    pattern_unitary_with(p, SimOptions::default())
}

pub fn pattern_unitary_with(p: &MeasurementPattern, opts: SimOptions) -> SimResult<DenseMatrix> {
    pattern_unitary_on(p, &BTreeSet::new(), opts)
}

/// As [`pattern_unitary_with`], with `idle` added as inputs (and outputs)
/// even where no command touches them.
pub fn pattern_unitary_on(p: &MeasurementPattern, idle: &BTreeSet<String>, opts: SimOptions) -> SimResult<DenseMatrix> {
    let diags = validate_pattern(p);
    if let Some(d) = diags.first() {
        return Err(SimError::Invalid(d.to_string()));
    }
    let prepared = p.prepared();
    if let Some(q) = idle.iter().find(|q| prepared.contains(*q)) {
        return Err(SimError::Invalid(format!("idle wire {q} is prepared by the pattern")));
    }
    let inputs: Vec<String> = p.inputs().union(idle).cloned().collect();
    check_budget(p, inputs.len())?;

    let sim = Sim {
        cmds: &p.commands,
        opts,
        k_in: inputs.len(),
    };
    let summary = sim.run(0, Register::identity(&inputs), BTreeMap::new(), String::new());
    if let Some((a, b, reason)) = summary.violation {
        return Err(SimError::NotUnitary { a, b, reason });
    }
    let Some((u, _)) = summary.reference else {
        return Err(SimError::NotUnitary {
            a: String::new(),
            b: String::new(),
            reason: "every branch vanishes".into(),
        });
    };
    if (summary.weight - 1.0).abs() > opts.tol.max(1e-12) * 10.0 {
        return Err(SimError::NotUnitary {
            a: String::new(),
            b: String::new(),
            reason: format!("branch weights sum to {}", summary.weight),
        });
    }
    Ok(u)
}

fn check_budget(p: &MeasurementPattern, k_in: usize) -> SimResult<()> {
    let branches = p.commands.iter().filter(|c| c.is_destructive()).count();
    if branches > MAX_MEASUREMENTS {
        return Err(SimError::TooLarge(format!(
            "{branches} measured qubits (cap {MAX_MEASUREMENTS})"
        )));
    }
    let mut live = k_in;
    let mut peak = live;
    for c in &p.commands {
        if matches!(c, Command::Prepare(_)) {
            live += 1;
        } else if c.is_destructive() {
            live -= 1;
        }
        peak = peak.max(live);
    }
    if peak + k_in >= usize::BITS as usize || (1usize << (peak + k_in)) > MAX_ENTRIES {
        return Err(SimError::TooLarge(format!(
            "{peak} live qubits with {k_in} inputs exceeds the amplitude budget"
        )));
    }
    Ok(())
}

struct Summary {
    /// Normalised operator of the first non-vanishing branch.
    reference: Option<(DenseMatrix, String)>,
    weight: f64,
    violation: Option<(String, String, String)>,
}

impl Summary {
    fn empty() -> Summary {
        Summary {
            reference: None,
            weight: 0.0,
            violation: None,
        }
    }

    fn merge(self, right: Summary, tol: f64) -> Summary {
        let weight = self.weight + right.weight;
        let mut violation = self.violation.or(right.violation);
        let reference = match (self.reference, right.reference) {
            (Some(l), Some(r)) => {
                if violation.is_none() && !equal_up_to_phase(&r.0, &l.0, tol) {
                    violation = Some((l.1.clone(), r.1, "branch operators are not proportional".into()));
                }
                Some(l)
            }
            (l, r) => l.or(r),
        };
        Summary {
            reference,
            weight,
            violation,
        }
    }
}

struct Sim<'a> {
    cmds: &'a [Command],
    opts: SimOptions,
    k_in: usize,
}

type Bits = BTreeMap<String, bool>;

fn eval(d: &DepExpr, bits: &Bits) -> bool {
    d.eval(|b| bits.get(b).copied().unwrap_or(false))
}

fn xy_bras(theta: f64) -> [(Complex64, Complex64); 2] {
    let e = Complex64::from_polar(FRAC_1_SQRT_2, -theta);
    let h = c64(FRAC_1_SQRT_2, 0.0);
    [(h, e), (h, -e)]
}

fn yz_bras(theta: f64) -> [(Complex64, Complex64); 2] {
    let (s, c) = (theta / 2.0).sin_cos();
    [(c64(c, 0.0), c64(0.0, -s)), (c64(s, 0.0), c64(0.0, c))]
}

fn adapted(angle: &Angle, sign: &DepExpr, pi: &DepExpr, bits: &Bits) -> f64 {
    let mut t = angle.radians();
    if eval(sign, bits) {
        t = -t;
    }
    if eval(pi, bits) {
        t += std::f64::consts::PI;
    }
    t
}

impl Sim<'_> {
    fn run(&self, mut i: usize, mut reg: Register, mut bits: Bits, path: String) -> Summary {
        // a vanishing partial operator cannot grow again
        if reg.norm_sqr().sqrt() < self.opts.tol {
            return Summary::empty();
        }
        while i < self.cmds.len() {
            let c = &self.cmds[i];
            i += 1;
            let (q, bras, record) = match c {
                Command::Prepare(q) => {
                    let h = c64(FRAC_1_SQRT_2, 0.0);
                    reg.append(q, h, h);
                    continue;
                }
                Command::Entangle(a, b) => {
                    let (p, r) = (reg.pos(a).expect("live"), reg.pos(b).expect("live"));
                    reg.apply_phase_11(p, r, c64(-1.0, 0.0));
                    continue;
                }
                Command::CorrectX(q, d) => {
                    if eval(d, &bits) {
                        reg.apply_x(reg.pos(q).expect("live"));
                    }
                    continue;
                }
                Command::CorrectZ(q, d) => {
                    if eval(d, &bits) {
                        reg.apply_z(reg.pos(q).expect("live"));
                    }
                    continue;
                }
                Command::Shift(q, d) => {
                    if eval(d, &bits) {
                        let e = bits.entry(result_bit(q)).or_insert(false);
                        *e = !*e;
                    }
                    continue;
                }
                Command::MeasureXY { qubit, angle, sign, pi } => {
                    (qubit, xy_bras(adapted(angle, sign, pi, &bits)), true)
                }
                Command::MeasureYZ { qubit, angle, sign, pi } => {
                    (qubit, yz_bras(adapted(angle, sign, pi, &bits)), true)
                }
                Command::MeasureZ(q) => (q, [(c64(1.0, 0.0), c64(0.0, 0.0)), (c64(0.0, 0.0), c64(1.0, 0.0))], true),
                Command::TraceOut(q) => (q, [(c64(1.0, 0.0), c64(0.0, 0.0)), (c64(0.0, 0.0), c64(1.0, 0.0))], false),
            };
            let p = reg.pos(q).expect("live");
            let branch = |b: usize| {
                let r = reg.contract(p, bras[b].0, bras[b].1);
                let mut bits = bits.clone();
                if record {
                    bits.insert(result_bit(q), b == 1);
                }
                self.run(i, r, bits, format!("{path}{b}"))
            };
            let (l, r) = if self.opts.parallel && path.len() < PAR_DEPTH {
                rayon::join(|| branch(0), || branch(1))
            } else {
                (branch(0), branch(1))
            };
            return l.merge(r, self.opts.tol);
        }
        bits.clear();
        self.leaf(reg, path)
    }

    fn leaf(&self, reg: Register, path: String) -> Summary {
        let k = reg.to_matrix();
        let fro = k.frobenius_norm();
        if fro < self.opts.tol {
            return Summary::empty();
        }
        let c = fro / ((1usize << self.k_in) as f64).sqrt();
        let u = k.scale(c64(1.0 / c, 0.0));
        let mut s = Summary {
            reference: None,
            weight: c * c,
            violation: None,
        };
        if !u.is_isometry(self.opts.tol.max(1e-12) * 10.0) {
            s.violation = Some((path.clone(), path.clone(), "branch operator is not an isometry".into()));
        }
        s.reference = Some((u, path));
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{j_matrix, czpow_matrix};
    use mbqc_core::{Angle, DepExpr};
    use num_rational::Ratio;

    fn j_pattern(a: Angle, x_fix: bool) -> MeasurementPattern {
        let mut cmds = vec![
            Command::Prepare("o".into()),
            Command::Entangle("i".into(), "o".into()),
            Command::measure_xy("i", -a),
        ];
        if x_fix {
            cmds.push(Command::CorrectX("o".into(), DepExpr::of("i")));
        }
        MeasurementPattern::new(cmds)
    }

    #[test]
    fn j_pattern_implements_j() {
        for k in -3..=4 {
            let a = Angle::frac(k, 4);
            let u = pattern_unitary(&j_pattern(a, true)).unwrap();
            assert!(equal_up_to_phase(&u, &j_matrix(a), 1e-9), "k={k}\n{u}");
            assert_eq!(u.row_labels, vec!["o"]);
            assert_eq!(u.col_labels, vec!["i"]);
        }
    }

    #[test]
    fn missing_correction_is_not_unitary() {
        let err = pattern_unitary(&j_pattern(Angle::frac(1, 4), false)).unwrap_err();
        assert!(matches!(err, SimError::NotUnitary { .. }), "{err}");
    }

    #[test]
    fn zz_pattern() {
        // one ancilla measured in the YZ plane, entangled with both wires
        let cmds = vec![
            Command::Prepare("a".into()),
            Command::Entangle("u".into(), "a".into()),
            Command::Entangle("v".into(), "a".into()),
            Command::measure_yz("a", Angle::half_pi()),
            Command::CorrectZ("u".into(), DepExpr::of("a")),
            Command::CorrectZ("v".into(), DepExpr::of("a")),
        ];
        let u = pattern_unitary(&MeasurementPattern::new(cmds)).unwrap();
        let e = |t: f64| Complex64::from_polar(1.0, t);
        let q = std::f64::consts::FRAC_PI_4;
        let mut want = DenseMatrix::identity(4);
        for (i, t) in [-q, q, q, -q].into_iter().enumerate() {
            want.set(i, i, e(t));
        }
        assert!(equal_up_to_phase(&u, &want, 1e-9), "{u}");
    }

    #[test]
    fn empty_pattern_on_inputs_is_identity() {
        let p = MeasurementPattern::new(vec![Command::Entangle("a".into(), "b".into())]);
        let u = pattern_unitary(&p).unwrap();
        assert!(u.max_abs_diff(&czpow_matrix(Ratio::from_integer(1))) < 1e-12);
    }

    #[test]
    fn trace_out_branches_are_summed() {
        // preparing and discarding an ancilla leaves the identity
        let p = MeasurementPattern::new(vec![Command::Prepare("a".into()), Command::TraceOut("a".into()), Command::CorrectZ("i".into(), DepExpr::new())]);
        let u = pattern_unitary(&p).unwrap();
        assert!(equal_up_to_phase(&u, &DenseMatrix::identity(2), 1e-9));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let a = Angle::frac(1, 3);
        let seq = SimOptions { tol: 1e-9, parallel: false };
        let u = pattern_unitary_with(&j_pattern(a, true), seq).unwrap();
        let v = pattern_unitary(&j_pattern(a, true)).unwrap();
        assert_eq!(u, v);
    }

    #[test]
    fn invalid_pattern_is_rejected() {
        let p = MeasurementPattern::new(vec![Command::CorrectX("o".into(), DepExpr::of("z"))]);
        assert!(matches!(pattern_unitary(&p), Err(SimError::Invalid(_))));
    }
}
