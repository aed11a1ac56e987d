use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use num_complex::Complex64;

use crate::dense::c64;
use crate::error::{SimError, SimResult};

/// `±` tensor product of single-qubit Paulis; `Y` is stored as `x & z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliString {
    pub x: Vec<bool>,
    pub z: Vec<bool>,
    pub negative: bool,
}

impl PauliString {
    pub fn identity(n: usize) -> PauliString {
        PauliString {
            x: vec![false; n],
            z: vec![false; n],
            negative: false,
        }
    }

    pub fn single(n: usize, q: usize, p: char) -> PauliString {
        let mut s = PauliString::identity(n);
        match p {
            'X' => s.x[q] = true,
            'Z' => s.z[q] = true,
            'Y' => {
                s.x[q] = true;
                s.z[q] = true;
            }
            _ => {}
        }
        s
    }

    /// Parses `"+XZI"`-style strings; character `i` acts on qubit `i`.
    pub fn parse(s: &str) -> SimResult<PauliString> {
        let (negative, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let mut p = PauliString::identity(body.len());
        for (i, ch) in body.chars().enumerate() {
            match ch {
                'I' | 'X' | 'Y' | 'Z' => {
                    let t = PauliString::single(body.len(), i, ch);
                    p.x[i] = t.x[i];
                    p.z[i] = t.z[i];
                }
                _ => return Err(SimError::Invalid(format!("bad Pauli character {ch:?}"))),
            }
        }
        p.negative = negative;
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn commutes_with(&self, o: &PauliString) -> bool {
        let anti = (0..self.len())
            .filter(|&i| (self.x[i] & o.z[i]) ^ (self.z[i] & o.x[i]))
            .count();
        anti % 2 == 0
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.negative { "-" } else { "+" })?;
        for i in 0..self.len() {
            let c = match (self.x[i], self.z[i]) {
                (false, false) => 'I',
                (true, false) => 'X',
                (true, true) => 'Y',
                (false, true) => 'Z',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Pure state on `n` qubits; qubit `i` is bit `i` of the index.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    pub n: usize,
    pub amps: Vec<Complex64>,
}

impl StateVector {
    pub fn zero(n: usize) -> StateVector {
        let mut amps = vec![c64(0.0, 0.0); 1 << n];
        amps[0] = c64(1.0, 0.0);
        StateVector { n, amps }
    }

    fn pairs(&mut self, q: usize, f: impl Fn(Complex64, Complex64) -> (Complex64, Complex64)) {
        let bit = 1 << q;
        for i in 0..self.amps.len() {
            if i & bit == 0 {
                let (a, b) = f(self.amps[i], self.amps[i | bit]);
                self.amps[i] = a;
                self.amps[i | bit] = b;
            }
        }
    }

    pub fn h(&mut self, q: usize) {
        let s = FRAC_1_SQRT_2;
        self.pairs(q, |a, b| ((a + b) * s, (a - b) * s));
    }

    pub fn s(&mut self, q: usize) {
        self.pairs(q, |a, b| (a, b * c64(0.0, 1.0)));
    }

    pub fn x(&mut self, q: usize) {
        self.pairs(q, |a, b| (b, a));
    }

    pub fn z(&mut self, q: usize) {
        self.pairs(q, |a, b| (a, -b));
    }

    pub fn cz(&mut self, a: usize, b: usize) {
        let m = (1 << a) | (1 << b);
        for (i, x) in self.amps.iter_mut().enumerate() {
            if i & m == m {
                *x = -*x;
            }
        }
    }

    pub fn cnot(&mut self, c: usize, t: usize) {
        let (cb, tb) = (1 << c, 1 << t);
        for i in 0..self.amps.len() {
            if i & cb != 0 && i & tb == 0 {
                self.amps.swap(i, i | tb);
            }
        }
    }

    /// `P|ψ>`.
    pub fn apply_pauli(&self, p: &PauliString) -> StateVector {
        assert_eq!(p.len(), self.n);
        let xmask = (0..self.n).filter(|&i| p.x[i]).fold(0usize, |m, i| m | 1 << i);
        let mut out = vec![c64(0.0, 0.0); self.amps.len()];
        for (i, a) in self.amps.iter().enumerate() {
            // Y = iXZ: phase from Z parts then i per Y
            let mut ph = c64(if p.negative { -1.0 } else { 1.0 }, 0.0);
            for q in 0..self.n {
                if p.z[q] && (i >> q) & 1 == 1 {
                    ph = -ph;
                }
                if p.x[q] && p.z[q] {
                    ph *= c64(0.0, 1.0);
                }
            }
            out[i ^ xmask] += ph * a;
        }
        StateVector { n: self.n, amps: out }
    }

    pub fn inner(&self, o: &StateVector) -> Complex64 {
        self.amps.iter().zip(&o.amps).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(Complex64::norm_sqr).sum()
    }

    /// `<ψ|P|ψ>`, real for Hermitian `P`.
    pub fn expectation(&self, p: &PauliString) -> f64 {
        self.inner(&self.apply_pauli(p)).re
    }

    /// `(I + (-1)^outcome P)/2 |ψ>`, unnormalised.
    pub fn project(&self, p: &PauliString, outcome: bool) -> StateVector {
        let pp = self.apply_pauli(p);
        let s = if outcome { -0.5 } else { 0.5 };
        let amps = self.amps.iter().zip(&pp.amps).map(|(a, b)| a * 0.5 + b * s).collect();
        StateVector { n: self.n, amps }
    }

    pub fn normalized(&self) -> StateVector {
        let k = self.norm_sqr().sqrt();
        StateVector {
            n: self.n,
            amps: self.amps.iter().map(|a| a / k).collect(),
        }
    }

    /// `∏ CZ_e |+…+>`.
    pub fn graph_state(n: usize, edges: &[(usize, usize)]) -> StateVector {
        let mut s = StateVector::zero(n);
        for q in 0..n {
            s.h(q);
        }
        for &(a, b) in edges {
            s.cz(a, b);
        }
        s
    }

    /// Component with qubit `q` fixed to `bit`, as a state on the others.
    pub fn restrict(&self, q: usize, bit: bool) -> StateVector {
        let low = (1usize << q) - 1;
        let amps = (0..1usize << (self.n - 1))
            .map(|i| {
                let j = (i & low) | ((i & !low) << 1) | (usize::from(bit) << q);
                self.amps[j]
            })
            .collect();
        StateVector { n: self.n - 1, amps }
    }

    /// `|<ψ|φ>|²` of normalised copies.
    pub fn fidelity(&self, o: &StateVector) -> f64 {
        self.normalized().inner(&o.normalized()).norm_sqr()
    }
}
