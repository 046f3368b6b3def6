use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::error::{invalid, Result};

/// Dense matrix over the prime field `F_p`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

pub(crate) fn check_field(p: u64) -> Result<()> {
    arith::require_prime(p)?;
    if p > u64::from(u32::MAX) {
        return Err(invalid("field characteristic must fit in 32 bits"));
    }
    Ok(())
}

impl FpMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Result<Self> {
        check_field(p)?;
        Ok(Self { p, rows, cols, data: vec![0; rows * cols] })
    }

    pub fn identity(p: u64, n: usize) -> Result<Self> {
        let mut m = Self::zeros(p, n, n)?;
        for i in 0..n {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    /// Entries are reduced mod `p`. Every row must have `cols` entries.
    pub fn from_rows(p: u64, cols: usize, rows: &[Vec<u64>]) -> Result<Self> {
        let mut m = Self::zeros(p, rows.len(), cols)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(invalid(alloc::format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: u64) {
        self.data[r * self.cols + c] = x % self.p;
    }

    /// Adds `x` (an integer, possibly negative) to entry `(r, c)`.
    pub fn add_signed(&mut self, r: usize, c: usize, x: i64) {
        let p = self.p as i64;
        let cur = self.get(r, c) as i64;
        self.data[r * self.cols + c] = (cur + x).rem_euclid(p) as u64;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows || self.p != other.p {
            return Err(invalid(alloc::format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.p, self.rows, other.cols)?;
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * out.cols + j;
                    out.data[idx] = (out.data[idx] + a * other.get(k, j)) % self.p;
                }
            }
        }
        Ok(out)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                data.push(self.get(r, c));
            }
        }
        Self { p: self.p, rows: rows.len(), cols: cols.len(), data }
    }

    /// `Some(c)` when the matrix is square and equal to `c` times the identity.
    pub fn scalar_value(&self) -> Option<u64> {
        if self.rows != self.cols {
            return None;
        }
        let c = if self.rows == 0 { 0 } else { self.get(0, 0) };
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) != if i == j { c } else { 0 } {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn rank(&self) -> usize {
        let p = self.p;
        let mut m = self.data.clone();
        let cols = self.cols;
        let mut rank = 0;
        for c in 0..cols {
            let Some(pivot) = (rank..self.rows).find(|&r| m[r * cols + c] != 0) else {
                continue;
            };
            for j in 0..cols {
                m.swap(pivot * cols + j, rank * cols + j);
            }
            let inv = inverse(m[rank * cols + c], p);
            for j in c..cols {
                m[rank * cols + j] = m[rank * cols + j] * inv % p;
            }
            for r in 0..self.rows {
                let factor = m[r * cols + c];
                if r == rank || factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let sub = factor * m[rank * cols + j] % p;
                    m[r * cols + j] = (m[r * cols + j] + p - sub) % p;
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

fn inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}
