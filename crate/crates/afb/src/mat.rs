//! Dense row-major `f64` matrix used for filter weights, responses and
//! feature maps. Deliberately minimal: the hot paths in this crate are
//! row-slice dot products, so rows are exposed as contiguous slices.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "expected {}x{}={} elements, got {}",
                rows,
                cols,
                rows * cols,
                data.len()
            )));
        }
        Ok(Mat { rows, cols, data })
    }

    /// Build row by row from a function of (row, col).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Mat::zeros(rows, cols);
        for r in 0..rows {
            let row = m.row_mut(r);
            for (c, v) in row.iter_mut().enumerate() {
                *v = f(r, c);
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

    pub fn same_shape(&self, other: &Mat) -> bool {
        self.rows == other.rows && self.cols == other.cols
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [f64] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Parallel population of rows; `f` fills each row slice given its index.
    pub fn par_fill_rows(rows: usize, cols: usize, f: impl Fn(usize, &mut [f64]) + Sync) -> Self {
        use rayon::prelude::*;
        let mut m = Mat::zeros(rows, cols);
        m.data
            .par_chunks_mut(cols)
            .enumerate()
            .for_each(|(r, row)| f(r, row));
        m
    }

    /// Horizontal concatenation; all inputs must share the row count.
    pub fn hconcat(parts: &[Mat]) -> Result<Mat> {
        if parts.is_empty() {
            return Err(Error::InvalidInput("hconcat of no matrices".into()));
        }
        let rows = parts[0].rows;
        if parts.iter().any(|p| p.rows != rows) {
            return Err(Error::ShapeMismatch("hconcat row counts differ".into()));
        }
        let cols: usize = parts.iter().map(|p| p.cols).sum();
        let mut out = Mat::zeros(rows, cols);
        for r in 0..rows {
            let mut at = 0;
            for p in parts {
                out.row_mut(r)[at..at + p.cols].copy_from_slice(p.row(r));
                at += p.cols;
            }
        }
        Ok(out)
    }

    /// Columns `[from, to)` as a new matrix.
    pub fn col_slice(&self, from: usize, to: usize) -> Mat {
        let mut out = Mat::zeros(self.rows, to - from);
        for r in 0..self.rows {
            out.row_mut(r).copy_from_slice(&self.row(r)[from..to]);
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        self.data.iter().copied()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `acc[i] += scale * src[i]`.
pub fn axpy(acc: &mut [f64], scale: f64, src: &[f64]) {
    debug_assert_eq!(acc.len(), src.len());
    for (a, s) in acc.iter_mut().zip(src) {
        *a += scale * s;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_are_contiguous() {
        let m = Mat::from_fn(3, 4, |r, c| (r * 10 + c) as f64);
        assert_eq!(m.row(1), &[10.0, 11.0, 12.0, 13.0]);
        assert_eq!(m.get(2, 3), 23.0);
    }

    #[test]
    fn hconcat_and_slice_roundtrip() {
        let a = Mat::from_fn(2, 3, |r, c| (r + c) as f64);
        let b = Mat::from_fn(2, 2, |r, c| (r * c) as f64 + 0.5);
        let cat = Mat::hconcat(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(cat.cols(), 5);
        assert_eq!(cat.col_slice(0, 3), a);
        assert_eq!(cat.col_slice(3, 5), b);
    }

    #[test]
    fn from_vec_rejects_bad_shape() {
        assert!(Mat::from_vec(2, 2, vec![1.0; 3]).is_err());
    }
}
