//! Brute-force evaluation, the reference for every rewrite and synthesis step.

use mbqc_sim::{c64, DenseMatrix};
use num_complex::Complex64;

use crate::error::{QfeError, QfeResult};
use crate::expansion::QuadraticFormExpansion;

pub const MAX_EVAL_INDICES: usize = 16;

#[derive(Clone, Debug)]
pub struct Evaluation {
    /// Rows are sorted output labels, columns sorted input labels, most
    /// significant bit first.
    pub matrix: DenseMatrix,
    /// With a symbolic prefactor, the positive scalar divided out so that an
    /// isometry comes back with unit-norm columns; `|C|` otherwise.
    pub scale: f64,
}

fn position(labels: &[String], v: &str) -> usize {
    labels.binary_search_by(|l| l.as_str().cmp(v)).expect("label")
}

/// `C Σ_x e^{iQ(x)} |x_O⟩⟨x_I|` by enumerating all `2^|V|` assignments.
pub fn evaluate(q: &QuadraticFormExpansion) -> QfeResult<Evaluation> {
    let n = q.len();
    if n > MAX_EVAL_INDICES {
        return Err(QfeError::TooLarge(n));
    }
    let labels: Vec<String> = q.indices().iter().cloned().collect();
    let rows: Vec<String> = q.outputs().iter().cloned().collect();
    let cols: Vec<String> = q.inputs().iter().cloned().collect();
    let terms: Vec<(usize, usize, f64)> = q
        .terms()
        .map(|(u, v, t)| (position(&labels, u), position(&labels, v), t.radians()))
        .collect();
    let out_bits: Vec<usize> = rows.iter().map(|v| position(&labels, v)).collect();
    let in_bits: Vec<usize> = cols.iter().map(|v| position(&labels, v)).collect();
    let pack = |x: usize, bits: &[usize]| bits.iter().fold(0usize, |acc, &b| acc << 1 | (x >> b & 1));

    let mut m = DenseMatrix::zeros(1 << rows.len(), 1 << cols.len()).with_labels(rows, cols);
    for x in 0usize..(1 << n) {
        let phase: f64 = terms
            .iter()
            .filter(|(u, v, _)| x >> u & 1 == 1 && x >> v & 1 == 1)
            .map(|(_, _, t)| t)
            .sum();
        let (r, c) = (pack(x, &out_bits), pack(x, &in_bits));
        let cur = m.get(r, c);
        m.set(r, c, cur + Complex64::from_polar(1.0, phase));
    }
    match q.prefactor {
        Some(c) => Ok(Evaluation {
            matrix: m.scale(c),
            scale: c.norm(),
        }),
        None => {
            let s = m.frobenius_norm() / (m.cols as f64).sqrt();
            if s > 0.0 {
                m = m.scale(c64(1.0 / s, 0.0));
            }
            Ok(Evaluation { matrix: m, scale: s })
        }
    }
}
