use std::fmt;

use crate::error::{DkpError, DkpResult};

/// Dense matrix over GF(2), rows packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Gf2Matrix {
        let words = cols.div_ceil(64);
        Gf2Matrix {
            rows,
            cols,
            words,
            bits: vec![0; rows * words],
        }
    }

    pub fn identity(n: usize) -> Gf2Matrix {
        let mut m = Gf2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Gf2Matrix {
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Gf2Matrix::zeros(rows.len(), c);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), c, "ragged rows");
            for (j, &b) in r.iter().enumerate() {
                m.set(i, j, b & 1 == 1);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let w = &mut self.bits[r * self.words + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words..(r + 1) * self.words]
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        for k in 0..self.words {
            let s = self.bits[src * self.words + k];
            self.bits[dst * self.words + k] ^= s;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for k in 0..self.words {
            self.bits.swap(a * self.words + k, b * self.words + k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn add(&self, o: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "dimension mismatch");
        let mut m = self.clone();
        for (a, b) in m.bits.iter_mut().zip(&o.bits) {
            *a ^= b;
        }
        m
    }

    pub fn mul(&self, o: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut m = Gf2Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    for w in 0..m.words {
                        m.bits[i * m.words + w] ^= o.bits[k * o.words + w];
                    }
                }
            }
        }
        m
    }

    pub fn pow(&self, e: u32) -> Gf2Matrix {
        assert_eq!(self.rows, self.cols, "square matrix required");
        (0..e).fold(Gf2Matrix::identity(self.rows), |acc, _| acc.mul(self))
    }

    /// Row indices with a one in column `c`.
    pub fn column_support(&self, c: usize) -> Vec<usize> {
        (0..self.rows).filter(|&r| self.get(r, c)).collect()
    }

    /// Column indices with a one in row `r`.
    pub fn row_support(&self, r: usize) -> Vec<usize> {
        let row = self.row(r);
        (0..self.cols).filter(|&c| row[c / 64] >> (c % 64) & 1 == 1).collect()
    }
}

/// Gauss–Jordan inverse over GF(2).
pub fn gf2_inverse(m: &Gf2Matrix) -> DkpResult<Gf2Matrix> {
    if m.rows != m.cols {
        return Err(DkpError::InvalidInput(format!("{}x{} matrix is not square", m.rows, m.cols)));
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut inv = Gf2Matrix::identity(n);
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| a.get(r, col)) else {
            return Err(DkpError::Singular);
        };
        if p != col {
            a.swap_rows(p, col);
            inv.swap_rows(p, col);
        }
        for r in 0..n {
            if r != col && a.get(r, col) {
                a.xor_row_into(col, r);
                inv.xor_row_into(col, r);
            }
        }
    }
    Ok(inv)
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let s: String = (0..self.cols).map(|c| if self.get(r, c) { '1' } else { '0' }).collect();
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}
