use num_complex::Complex64;

use crate::dense::DenseMatrix;

/// Operator columns over a register of named qubits; position `p` is bit
/// `p` of the row index.
#[derive(Clone, Debug)]
pub(crate) struct Register {
    pub positions: Vec<String>,
    pub cols: usize,
    pub data: Vec<Complex64>,
    pub col_labels: Vec<String>,
}

fn msb_index(bits_by_label: impl Fn(usize) -> bool, m: usize) -> usize {
    (0..m).fold(0, |acc, i| acc | (usize::from(bits_by_label(i)) << (m - 1 - i)))
}

impl Register {
    /// Identity on the sorted `inputs`.
    pub fn identity(inputs: &[String]) -> Register {
        let k = inputs.len();
        let cols = 1usize << k;
        let mut data = vec![Complex64::new(0.0, 0.0); cols * cols];
        for c in 0..cols {
            // column c: label i carries bit (k-1-i) of c; register bit i
            let row = (0..k).fold(0, |acc, i| acc | (((c >> (k - 1 - i)) & 1) << i));
            data[row * cols + c] = Complex64::new(1.0, 0.0);
        }
        Register {
            positions: inputs.to_vec(),
            cols,
            data,
            col_labels: inputs.to_vec(),
        }
    }

    pub fn live(&self) -> usize {
        self.positions.len()
    }

    pub fn pos(&self, label: &str) -> Option<usize> {
        self.positions.iter().position(|l| l == label)
    }

    pub fn apply_1q(&mut self, p: usize, m: [[Complex64; 2]; 2]) {
        let rows = 1usize << self.live();
        let bit = 1usize << p;
        for r in 0..rows {
            if r & bit != 0 {
                continue;
            }
            let (i0, i1) = (r * self.cols, (r | bit) * self.cols);
            for c in 0..self.cols {
                let (a, b) = (self.data[i0 + c], self.data[i1 + c]);
                self.data[i0 + c] = m[0][0] * a + m[0][1] * b;
                self.data[i1 + c] = m[1][0] * a + m[1][1] * b;
            }
        }
    }

    /// Multiplies amplitudes where both qubits are 1.
    pub fn apply_phase_11(&mut self, p: usize, q: usize, phase: Complex64) {
        let rows = 1usize << self.live();
        let mask = (1usize << p) | (1usize << q);
        for r in 0..rows {
            if r & mask == mask {
                for x in &mut self.data[r * self.cols..(r + 1) * self.cols] {
                    *x *= phase;
                }
            }
        }
    }

    pub fn apply_x(&mut self, p: usize) {
        let rows = 1usize << self.live();
        let bit = 1usize << p;
        for r in 0..rows {
            if r & bit == 0 {
                for c in 0..self.cols {
                    self.data.swap(r * self.cols + c, (r | bit) * self.cols + c);
                }
            }
        }
    }

    pub fn apply_z(&mut self, p: usize) {
        let rows = 1usize << self.live();
        let bit = 1usize << p;
        for r in 0..rows {
            if r & bit != 0 {
                for x in &mut self.data[r * self.cols..(r + 1) * self.cols] {
                    *x = -*x;
                }
            }
        }
    }

    /// Appends a qubit in `a|0> + b|1>` at the highest position.
    pub fn append(&mut self, label: &str, a: Complex64, b: Complex64) {
        let rows = 1usize << self.live();
        let mut data = Vec::with_capacity(2 * self.data.len());
        data.extend(self.data.iter().map(|x| x * a));
        data.extend(self.data.iter().map(|x| x * b));
        debug_assert_eq!(data.len(), 2 * rows * self.cols);
        self.data = data;
        self.positions.push(label.to_owned());
    }

    /// Applies the bra `b0<0| + b1<1|` to position `p` and removes it.
    pub fn contract(&self, p: usize, b0: Complex64, b1: Complex64) -> Register {
        let new_rows = 1usize << (self.live() - 1);
        let low = (1usize << p) - 1;
        let mut data = vec![Complex64::new(0.0, 0.0); new_rows * self.cols];
        for nr in 0..new_rows {
            let r0 = (nr & low) | ((nr & !low) << 1);
            let r1 = r0 | (1 << p);
            let (s0, s1) = (r0 * self.cols, r1 * self.cols);
            let dst = &mut data[nr * self.cols..(nr + 1) * self.cols];
            for (c, d) in dst.iter_mut().enumerate() {
                *d = b0 * self.data[s0 + c] + b1 * self.data[s1 + c];
            }
        }
        let mut positions = self.positions.clone();
        positions.remove(p);
        Register {
            positions,
            cols: self.cols,
            data,
            col_labels: self.col_labels.clone(),
        }
    }

    pub fn rename(&mut self, from: &str, to: &str) {
        if let Some(p) = self.pos(from) {
            self.positions[p] = to.to_owned();
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.data.iter().map(Complex64::norm_sqr).sum()
    }

    /// Dense matrix with rows ordered by the sorted register labels.
    pub fn to_matrix(&self) -> DenseMatrix {
        let mut labels = self.positions.clone();
        labels.sort();
        let m = labels.len();
        let pos_of: Vec<usize> = labels.iter().map(|l| self.pos(l).expect("label")).collect();
        let rows = 1usize << m;
        let mut out = DenseMatrix::zeros(rows, self.cols);
        for r in 0..rows {
            let mr = msb_index(|i| r >> pos_of[i] & 1 == 1, m);
            out.data[mr * self.cols..(mr + 1) * self.cols].copy_from_slice(&self.data[r * self.cols..(r + 1) * self.cols]);
        }
        out.row_labels = labels;
        out.col_labels = self.col_labels.clone();
        out
    }
}
