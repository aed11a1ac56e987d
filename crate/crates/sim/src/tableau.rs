//! Stabilizer tableau with destabilizers, after Aaronson and Gottesman.

use mbqc_core::{Angle, Geometry};

use crate::error::{SimError, SimResult};
use crate::state::PauliString;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CliffordGate {
    H(usize),
    S(usize),
    X(usize),
    Z(usize),
    CZ(usize, usize),
    CNOT(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeasureOutcome {
    /// Eigenvalue `+1` or `-1`.
    Deterministic(i8),
    /// Uniformly random; the tableau now holds the state for this bit.
    Random(bool),
}

/// Rows `0..n` are destabilizers, rows `n..2n` stabilizers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerTableau {
    pub labels: Vec<String>,
    rows: Vec<PauliString>,
}

/// Exponent of `i` picked up when multiplying single-qubit Paulis
/// `(x1,z1)·(x2,z2)`.
fn g(x1: bool, z1: bool, x2: bool, z2: bool) -> i32 {
    let (x2, z2) = (i32::from(x2), i32::from(z2));
    match (x1, z1) {
        (false, false) => 0,
        (true, true) => z2 - x2,
        (true, false) => z2 * (2 * x2 - 1),
        (false, true) => x2 * (1 - 2 * z2),
    }
}

/// `h <- i · h` for commuting rows.
fn rowsum(h: &mut PauliString, i: &PauliString) {
    let mut sum = 2 * i32::from(h.negative) + 2 * i32::from(i.negative);
    for j in 0..h.len() {
        sum += g(i.x[j], i.z[j], h.x[j], h.z[j]);
        h.x[j] ^= i.x[j];
        h.z[j] ^= i.z[j];
    }
    debug_assert!(sum.rem_euclid(2) == 0, "rowsum of anticommuting rows");
    h.negative = sum.rem_euclid(4) == 2;
}

impl StabilizerTableau {
    /// `|0…0>` on qubits named `labels`.
    pub fn new(labels: Vec<String>) -> StabilizerTableau {
        let n = labels.len();
        let mut rows = Vec::with_capacity(2 * n);
        rows.extend((0..n).map(|q| PauliString::single(n, q, 'X')));
        rows.extend((0..n).map(|q| PauliString::single(n, q, 'Z')));
        StabilizerTableau { labels, rows }
    }

    pub fn zero(n: usize) -> StabilizerTableau {
        StabilizerTableau::new((0..n).map(|i| format!("q{i}")).collect())
    }

    /// Graph state on the sorted vertices of `g` (edge weights ignored).
    pub fn graph_state(geo: &Geometry) -> StabilizerTableau {
        let labels: Vec<String> = geo.vertices().iter().cloned().collect();
        let idx = |v: &str| labels.iter().position(|l| l == v).expect("vertex");
        let edges: Vec<(usize, usize)> = geo.edges().map(|(a, b, _)| (idx(a), idx(b))).collect();
        let mut t = StabilizerTableau::new(labels.clone());
        for q in 0..labels.len() {
            t.apply(CliffordGate::H(q));
        }
        for (a, b) in edges {
            t.apply(CliffordGate::CZ(a, b));
        }
        t
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn stabilizers(&self) -> &[PauliString] {
        &self.rows[self.n()..]
    }

    pub fn destabilizers(&self) -> &[PauliString] {
        &self.rows[..self.n()]
    }

    pub fn apply(&mut self, gate: CliffordGate) {
        match gate {
            CliffordGate::H(a) => {
                for r in &mut self.rows {
                    r.negative ^= r.x[a] & r.z[a];
                    std::mem::swap(&mut r.x[a], &mut r.z[a]);
                }
            }
            CliffordGate::S(a) => {
                for r in &mut self.rows {
                    r.negative ^= r.x[a] & r.z[a];
                    r.z[a] ^= r.x[a];
                }
            }
            CliffordGate::X(a) => {
                for r in &mut self.rows {
                    r.negative ^= r.z[a];
                }
            }
            CliffordGate::Z(a) => {
                for r in &mut self.rows {
                    r.negative ^= r.x[a];
                }
            }
            CliffordGate::CNOT(a, b) => {
                for r in &mut self.rows {
                    r.negative ^= r.x[a] & r.z[b] & !(r.x[b] ^ r.z[a]);
                    r.x[b] ^= r.x[a];
                    r.z[a] ^= r.z[b];
                }
            }
            CliffordGate::CZ(a, b) => {
                self.apply(CliffordGate::H(b));
                self.apply(CliffordGate::CNOT(a, b));
                self.apply(CliffordGate::H(b));
            }
        }
    }

    /// `J(angle) = H·Rz(angle)`, Clifford only for multiples of π/2.
    pub fn apply_j(&mut self, q: usize, angle: Angle) -> SimResult<()> {
        if !angle.is_pauli_axis() {
            return Err(SimError::NonClifford(format!("J({angle})")));
        }
        let quarter = (angle.to_ratio() * 2).to_integer().rem_euclid(4);
        for _ in 0..quarter {
            self.apply(CliffordGate::S(q));
        }
        self.apply(CliffordGate::H(q));
        Ok(())
    }

    /// Measures `p`; on a random outcome the state is projected onto the
    /// `(-1)^choice` eigenspace.
    pub fn measure_pauli(&mut self, p: &PauliString, choice: bool) -> SimResult<MeasureOutcome> {
        let n = self.n();
        if p.len() != n {
            return Err(SimError::Invalid(format!("Pauli on {} qubits, tableau has {n}", p.len())));
        }
        let anti = |r: &PauliString| !r.commutes_with(p);
        match (n..2 * n).find(|&i| anti(&self.rows[i])) {
            Some(pi) => {
                let pivot = self.rows[pi].clone();
                for i in 0..2 * n {
                    if i != pi && i != pi - n && anti(&self.rows[i]) {
                        rowsum(&mut self.rows[i], &pivot);
                    }
                }
                self.rows[pi - n] = pivot;
                let mut new = p.clone();
                new.negative ^= choice;
                self.rows[pi] = new;
                Ok(MeasureOutcome::Random(choice))
            }
            None => {
                let mut acc = PauliString::identity(n);
                for i in 0..n {
                    if anti(&self.rows[i]) {
                        let s = self.rows[i + n].clone();
                        rowsum(&mut acc, &s);
                    }
                }
                debug_assert_eq!((&acc.x, &acc.z), (&p.x, &p.z));
                Ok(MeasureOutcome::Deterministic(if acc.negative == p.negative { 1 } else { -1 }))
            }
        }
    }

    /// Classifies a measurement of `p` without changing the state.
    pub fn peek(&self, p: &PauliString) -> SimResult<MeasureOutcome> {
        let mut t = self.clone();
        t.measure_pauli(p, false)
    }
}
