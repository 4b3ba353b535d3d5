//! Dense exact linear algebra over [`Scalar`].
//!
//! Elimination always pivots on the leftmost column that has an exact
//! nonzero entry, taking the first such row. Results are therefore
//! deterministic.

use std::fmt;

use thiserror::Error;

use crate::scalar::{Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("inconsistent system (row {row} of the reduced system)")]
    Inconsistent { row: usize },
    #[error("matrix is singular")]
    Singular,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            m.set(k, k, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::Dimension("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Matrix { rows: n, cols, entries: rows.into_iter().flatten().collect() })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Scalar>], rows: usize) -> Result<Self, LinalgError> {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return Err(LinalgError::Dimension(format!("column {} has length {}", j, c.len())));
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Dimension(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if x.len() != self.cols {
            return Err(LinalgError::Dimension(format!("{} columns, vector of length {}", self.cols, x.len())));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(x) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::Dimension("sum of differently shaped matrices".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        self.map(|x| x * s)
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for k in 0..self.rows.min(self.cols) {
            acc = &acc + self.get(k, k);
        }
        acc
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.reduce_in_place(self.cols);
        (m, pivots)
    }

    /// Gauss-Jordan elimination restricted to the first `ncols` columns;
    /// further columns are carried along.
    fn reduce_in_place(&mut self, ncols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.entries.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inv().expect("pivot is nonzero");
            for j in c..self.cols {
                let idx = r * self.cols + j;
                if !self.entries[idx].is_zero() {
                    self.entries[idx] = &self.entries[idx] * &inv;
                }
            }
            let pivot_row: Vec<Scalar> = self.row(r).to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    if pivot_row[j].is_zero() {
                        continue;
                    }
                    let idx = i * self.cols + j;
                    self.entries[idx] = &self.entries[idx] - &(&factor * &pivot_row[j]);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space. Each vector has a 1 in its free column (the
    /// first nonzero entry) and zeros in the other free columns.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut out = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free);
            }
            out.push(normalize_first(v));
        }
        out
    }

    /// Solves `self · x = rhs`. Free variables are set to zero.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if rhs.len() != self.rows {
            return Err(LinalgError::Dimension(format!("{} rows, right-hand side of length {}", self.rows, rhs.len())));
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let pivots = aug.reduce_in_place(self.cols);
        for i in pivots.len()..self.rows {
            if !aug.get(i, self.cols).is_zero() {
                return Err(LinalgError::Inconsistent { row: i });
            }
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(row, self.cols).clone();
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one());
        }
        if aug.reduce_in_place(n).len() < n {
            return Err(LinalgError::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }
}

/// Scales a vector so that its first nonzero entry is 1.
pub fn normalize_first(v: Vec<Scalar>) -> Vec<Scalar> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) if !lead.is_one() => {
            let inv = lead.inv().expect("nonzero");
            v.iter().map(|x| x * &inv).collect()
        }
        _ => v,
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn q() -> Scalar {
        Scalar::v_pow(1)
    }

    #[test]
    fn kernel_of_difference_row() {
        let m = Matrix::from_rows(vec![vec![s(1), s(-1)]]).unwrap();
        assert_eq!(m.kernel(), vec![vec![s(1), s(1)]]);
        assert!(Matrix::identity(3).kernel().is_empty());
        assert_eq!(Matrix::zeros(2, 2).kernel().len(), 2);
    }

    #[test]
    fn kernel_is_normalized_and_annihilated() {
        let m = Matrix::from_rows(vec![vec![s(0), q(), &q() * &q(), s(1)], vec![s(0), s(2), &q() + &s(1), q()]]).unwrap();
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(v.iter().find(|x| !x.is_zero()).unwrap().is_one());
            assert!(m.mul_vec(v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solve_and_report_inconsistency() {
        let id = Matrix::identity(2);
        let v = vec![q(), s(3)];
        assert_eq!(id.solve(&v).unwrap(), v);
        let sing = Matrix::from_rows(vec![vec![s(1), s(1)], vec![s(2), s(2)]]).unwrap();
        assert_eq!(sing.solve(&[s(1), s(2)]).unwrap(), vec![s(1), s(0)]);
        assert_eq!(sing.solve(&[s(1), s(3)]), Err(LinalgError::Inconsistent { row: 1 }));
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_rows(vec![vec![&q() + &q().inv().unwrap(), s(-1)], vec![s(-1), q()]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        let sing = Matrix::from_rows(vec![vec![q(), q()], vec![q(), q()]]).unwrap();
        assert_eq!(sing.inverse(), Err(LinalgError::Singular));
    }
}
