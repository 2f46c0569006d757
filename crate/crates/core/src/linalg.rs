//! Dense exact matrices and Gaussian elimination.

use crate::field::{format_scalar, Field, Scalar};
use num_traits::Zero;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub mat: Mat,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat { field, rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Mat {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        let data = data.into_iter().map(|x| field.reduce(x)).collect();
        Mat { field, rows, cols, data }
    }

    pub fn from_i64(field: Field, rows: &[Vec<i64>]) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Mat::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, field.from_i64(v));
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        *x == self.field.one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let f = self.field;
        let mut out = Mat::zeros(f, self.rows, other.cols);
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
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in sum");
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Mat { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in difference");
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Mat { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        let f = self.field;
        let data = self.data.iter().map(|a| f.mul(a, c)).collect();
        Mat { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Mat {
        let f = self.field;
        let data = self.data.iter().map(|a| f.neg(a)).collect();
        Mat { field: f, rows: self.rows, cols: self.cols, data }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let mut m = Mat::zeros(self.field, self.rows, self.cols + other.cols);
        m.paste(0, 0, self);
        m.paste(0, self.cols, other);
        m
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut m = Mat::zeros(self.field, self.rows + other.rows, self.cols);
        m.paste(0, 0, self);
        m.paste(self.rows, 0, other);
        m
    }

    pub fn hcat(field: Field, rows: usize, parts: &[Mat]) -> Mat {
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut m = Mat::zeros(field, rows, cols);
        let mut c = 0;
        for p in parts {
            m.paste(0, c, p);
            c += p.cols;
        }
        m
    }

    pub fn vcat(field: Field, cols: usize, parts: &[Mat]) -> Mat {
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut m = Mat::zeros(field, rows, cols);
        let mut r = 0;
        for p in parts {
            m.paste(r, 0, p);
            r += p.rows;
        }
        m
    }

    pub fn block_diag(field: Field, blocks: &[Mat]) -> Mat {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Mat::zeros(field, rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            m.paste(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        m
    }

    /// Copy `block` into `self` with its top-left corner at `(r, c)`.
    pub fn paste(&mut self, r: usize, c: usize, block: &Mat) {
        assert!(r + block.rows <= self.rows && c + block.cols <= self.cols, "paste out of range");
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r + i, c + j, block.get(i, j).clone());
            }
        }
    }

    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Mat {
        let mut m = Mat::zeros(self.field, r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                m.set(i - r0, j - c0, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn select_cols(&self, cols: &[usize]) -> Mat {
        let mut m = Mat::zeros(self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                m.set(i, jj, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Mat {
        let mut m = Mat::zeros(self.field, rows.len(), self.cols);
        for (ii, &i) in rows.iter().enumerate() {
            for j in 0..self.cols {
                m.set(ii, j, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn col(&self, j: usize) -> Mat {
        self.select_cols(&[j])
    }

    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c)).unwrap();
            for j in c..m.cols {
                let idx = r * m.cols + j;
                if !m.data[idx].is_zero() {
                    m.data[idx] = f.mul(&m.data[idx], &inv);
                }
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pv = &m.data[r * m.cols + j];
                    if pv.is_zero() {
                        continue;
                    }
                    let pv = pv.clone();
                    let idx = i * m.cols + j;
                    m.data[idx] = f.sub_mul(&m.data[idx], &factor, &pv);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { mat: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Columns spanning the null space, one per free variable.
    pub fn kernel_basis(&self) -> Mat {
        let f = self.field;
        let rr = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !rr.pivots.contains(c)).collect();
        let mut k = Mat::zeros(f, self.cols, free.len());
        for (kk, &fc) in free.iter().enumerate() {
            k.set(fc, kk, f.one());
            for (i, &pc) in rr.pivots.iter().enumerate() {
                let v = rr.mat.get(i, fc);
                if !v.is_zero() {
                    k.set(pc, kk, f.neg(v));
                }
            }
        }
        k
    }

    /// Rows `q` with `q * self = 0`, spanning the left null space.
    pub fn left_kernel(&self) -> Mat {
        self.transpose().kernel_basis().transpose()
    }

    /// Linearly independent columns of `self` spanning its column space.
    pub fn image_basis(&self) -> Mat {
        let rr = self.rref();
        self.select_cols(&rr.pivots)
    }

    /// Some `x` with `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, b.rows, "shape mismatch in solve");
        let f = self.field;
        let aug = self.hstack(b);
        let rr = aug.rref();
        if rr.pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Mat::zeros(f, self.cols, b.cols);
        for (i, &pc) in rr.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, rr.mat.get(i, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(&Mat::identity(self.field, self.rows))?;
        if self.mul(&x).is_identity() {
            Some(x)
        } else {
            None
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Columns completing the columns of `self` (assumed independent) to a basis.
    pub fn complement_columns(&self) -> Mat {
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(self.field, n));
        let rr = aug.rref();
        let extra: Vec<usize> = rr.pivots.iter().filter(|&&p| p >= self.cols).map(|p| p - self.cols).collect();
        Mat::identity(self.field, n).select_cols(&extra)
    }

    /// Whether every column of `v` lies in the column span of `self`.
    pub fn spans(&self, v: &Mat) -> bool {
        if v.cols == 0 {
            return true;
        }
        if self.cols == 0 {
            return v.is_zero();
        }
        self.solve(v).is_some()
    }

    /// Flatten column-major into a single column.
    pub fn vectorize(&self) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                out.push(self.get(i, j).clone());
            }
        }
        out
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|j| format_scalar(self.get(i, j))).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn rref_examples() {
        let id = Mat::identity(Q, 2);
        let r = id.rref();
        assert_eq!(r.mat, id);
        assert_eq!(r.rank(), 2);
        let z = Mat::zeros(Q, 3, 2);
        assert_eq!(z.rref().rank(), 0);
        let m = Mat::from_i64(Q, &[vec![1, 2], vec![2, 4]]);
        let r = m.rref();
        assert_eq!(r.mat, Mat::from_i64(Q, &[vec![1, 2], vec![0, 0]]));
        assert_eq!(r.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        let z = Mat::zeros(Q, 2, 3);
        assert_eq!(z.kernel_basis(), Mat::identity(Q, 3));
        let f2 = Field::Prime(2);
        let m = Mat::from_i64(f2, &[vec![1, 1]]);
        assert_eq!(m.kernel_basis(), Mat::from_i64(f2, &[vec![1], vec![1]]));
    }

    #[test]
    fn solve_and_inverse() {
        let b = Mat::from_i64(Q, &[vec![3], vec![-1]]);
        assert_eq!(Mat::identity(Q, 2).solve(&b).unwrap(), b);
        let m = Mat::from_i64(Q, &[vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(Mat::from_i64(Q, &[vec![1, 2], vec![2, 4]]).inverse().is_none());
        assert!(Mat::from_i64(Q, &[vec![1, 2], vec![2, 4]]).solve(&Mat::from_i64(Q, &[vec![1], vec![0]])).is_none());
    }

    #[test]
    fn complement() {
        let v = Mat::from_i64(Q, &[vec![1], vec![1], vec![0]]);
        let c = v.complement_columns();
        assert_eq!(v.hstack(&c).rank(), 3);
    }
}
