use std::fmt;

use num_complex::Complex64;

pub const DEFAULT_TOL: f64 = 1e-9;

pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Row-major complex matrix. Rows are indexed by basis states of
/// `row_labels`, columns by basis states of `col_labels`; the first label is
/// the most significant bit.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Complex64>,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> DenseMatrix {
        DenseMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
            row_labels: Vec::new(),
            col_labels: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> DenseMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = DenseMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            m.data[i * c..(i + 1) * c].copy_from_slice(row);
        }
        m
    }

    pub fn with_labels(mut self, rows: Vec<String>, cols: Vec<String>) -> DenseMatrix {
        self.row_labels = rows;
        self.col_labels = cols;
        self
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, o: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut m = DenseMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..o.cols {
                    m.data[i * o.cols + j] += a * o.data[k * o.cols + j];
                }
            }
        }
        m.row_labels = self.row_labels.clone();
        m.col_labels = o.col_labels.clone();
        m
    }

    pub fn adjoint(&self) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.data[j * self.rows + i] = self.data[i * self.cols + j].conj();
            }
        }
        m.row_labels = self.col_labels.clone();
        m.col_labels = self.row_labels.clone();
        m
    }

    pub fn scale(&self, s: Complex64) -> DenseMatrix {
        let mut m = self.clone();
        for x in &mut m.data {
            *x *= s;
        }
        m
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise difference; infinite if shapes differ.
    pub fn max_abs_diff(&self, o: &DenseMatrix) -> f64 {
        if self.rows != o.rows || self.cols != o.cols {
            return f64::INFINITY;
        }
        self.data.iter().zip(&o.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// `‖M†M − I‖_max < tol`.
    pub fn is_isometry(&self, tol: f64) -> bool {
        let p = self.adjoint().mul(self);
        p.max_abs_diff(&DenseMatrix::identity(self.cols)) < tol
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.rows == self.cols && self.is_isometry(tol)
    }

    /// Kronecker product; `self` occupies the more significant bits.
    pub fn kron(&self, o: &DenseMatrix) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        m.set(i * o.rows + k, j * o.cols + l, a * o.get(k, l));
                    }
                }
            }
        }
        m
    }

    /// Row-major `(re, im)` pairs.
    pub fn to_pairs(&self) -> Vec<Vec<[f64; 2]>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| [self.get(i, j).re, self.get(i, j).im]).collect())
            .collect()
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| {
                    let z = self.get(i, j);
                    format!("{:+.4}{:+.4}i", z.re, z.im)
                })
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `∃θ: ‖A − e^{iθ}B‖_max < tol`, with θ taken from the largest entry of B.
pub fn equal_up_to_phase(a: &DenseMatrix, b: &DenseMatrix, tol: f64) -> bool {
    if a.rows != b.rows || a.cols != b.cols {
        return false;
    }
    let Some((idx, bmax)) = b
        .data
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.norm().total_cmp(&y.1.norm()))
    else {
        return true;
    };
    if bmax.norm() < tol {
        return a.data.iter().all(|x| x.norm() < tol);
    }
    let ratio = a.data[idx] / bmax;
    if ratio.norm() < 1e-300 {
        return false;
    }
    let phase = ratio / ratio.norm();
    a.max_abs_diff(&b.scale(phase)) < tol
}

/// As [`equal_up_to_phase`] after scaling both to unit Frobenius norm.
pub fn equal_up_to_phase_and_scale(a: &DenseMatrix, b: &DenseMatrix, tol: f64) -> bool {
    let (na, nb) = (a.frobenius_norm(), b.frobenius_norm());
    if na < tol || nb < tol {
        return na < tol && nb < tol;
    }
    equal_up_to_phase(&a.scale(c64(1.0 / na, 0.0)), &b.scale(c64(1.0 / nb, 0.0)), tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h() -> DenseMatrix {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        DenseMatrix::from_rows(&[vec![c64(s, 0.0), c64(s, 0.0)], vec![c64(s, 0.0), c64(-s, 0.0)]])
    }

    #[test]
    fn phase_equality() {
        let u = h();
        let p = Complex64::from_polar(1.0, std::f64::consts::PI / 7.0);
        assert!(equal_up_to_phase(&u.scale(p), &u, 1e-12));
        let x = DenseMatrix::from_rows(&[vec![c64(0.0, 0.0), c64(1.0, 0.0)], vec![c64(1.0, 0.0), c64(0.0, 0.0)]]);
        assert!(!equal_up_to_phase(&h(), &x, 1e-9));
        assert!(equal_up_to_phase_and_scale(&u.scale(c64(3.0, 0.0)), &u, 1e-12));
    }

    #[test]
    fn unitarity() {
        assert!(h().is_unitary(1e-12));
        assert!(!h().scale(c64(2.0, 0.0)).is_unitary(1e-9));
        assert!(h().kron(&h()).is_unitary(1e-12));
    }
}
