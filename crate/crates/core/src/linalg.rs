//! Dense exact linear algebra over a [`FieldSpec`].

use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    ncols: usize,
    rows: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn new(field: FieldSpec, ncols: usize, rows: Vec<Vec<Scalar>>) -> Matrix {
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        Matrix { field, ncols, rows }
    }

    pub fn zeros(field: FieldSpec, nrows: usize, ncols: usize) -> Matrix {
        Matrix::new(field, ncols, vec![vec![field.zero(); ncols]; nrows])
    }

    pub fn from_i64(field: FieldSpec, ncols: usize, rows: &[Vec<i64>]) -> Matrix {
        Matrix::new(
            field,
            ncols,
            rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.rows[i][j] = v;
    }

    pub fn transpose(&self) -> Matrix {
        let rows = (0..self.ncols)
            .map(|j| self.rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        Matrix::new(self.field, self.nrows(), rows)
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            if r == m.len() {
                break;
            }
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].inverse().expect("nonzero pivot");
            for v in m[r].iter_mut() {
                *v = &*v * &inv;
            }
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in c..self.ncols {
                        let d = &f * &m[r][j];
                        m[i][j] = &m[i][j] - &d;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        (Matrix::new(self.field, self.ncols, m), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{ v : self · v = 0 }`, one vector per free column, each with
    /// a 1 in its free coordinate.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.ncols];
                v[f] = self.field.one();
                for (row, &pc) in r.rows.iter().zip(&pivots) {
                    v[pc] = -&row[f];
                }
                v
            })
            .collect()
    }

    /// Some `x` with `self · x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.nrows(), "right-hand side length");
        let aug = Matrix::new(
            self.field,
            self.ncols + 1,
            self.rows
                .iter()
                .zip(b)
                .map(|(r, bi)| r.iter().cloned().chain(std::iter::once(bi.clone())).collect())
                .collect(),
        );
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.ncols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.ncols];
        for (row, &pc) in r.rows.iter().zip(&pivots) {
            x[pc] = row[self.ncols].clone();
        }
        Some(x)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }
}
