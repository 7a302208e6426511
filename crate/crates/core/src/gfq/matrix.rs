//! Dense matrices over a finite field.

use std::fmt;

use super::field::{FqElem, FqField};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct FqMatrix {
    field: FqField,
    rows: usize,
    cols: usize,
    data: Vec<FqElem>,
}

/// Output of row reduction.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: FqMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl FqMatrix {
    pub fn zeros(field: &FqField, rows: usize, cols: usize) -> Self {
        FqMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![FqElem::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &FqField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FqElem::ONE);
        }
        m
    }

    pub fn from_rows(field: &FqField, rows: usize, cols: usize, data: Vec<FqElem>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        FqMatrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_vecs(field: &FqField, cols: usize, rows: &[Vec<FqElem>]) -> Self {
        let data: Vec<FqElem> = rows.iter().flat_map(|r| {
            assert_eq!(r.len(), cols);
            r.iter().copied()
        }).collect();
        Self::from_rows(field, rows.len(), cols, data)
    }

    pub fn field(&self) -> &FqField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[FqElem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FqElem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: FqElem) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[FqElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> FqMatrix {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &FqMatrix) -> Result<FqMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Mismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, f.mul(a, rhs.get(k, j))));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &FqMatrix) -> FqMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = &self.field;
        FqMatrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    /// Apply an entrywise map (e.g. a Frobenius power or an embedding).
    pub fn map(&self, target: &FqField, g: impl Fn(FqElem) -> FqElem) -> FqMatrix {
        FqMatrix {
            field: target.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| g(x)).collect(),
        }
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> FqMatrix {
        let mut out = Self::zeros(&self.field, r1 - r0, c1 - c0);
        for r in r0..r1 {
            for c in c0..c1 {
                out.set(r - r0, c - c0, self.get(r, c));
            }
        }
        out
    }

    /// Stack `self` above `below`.
    pub fn vstack(&self, below: &FqMatrix) -> FqMatrix {
        assert_eq!(self.cols, below.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        FqMatrix {
            field: self.field.clone(),
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(piv) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if piv != rank {
                for c in 0..m.cols {
                    m.data.swap(piv * m.cols + c, rank * m.cols + c);
                }
            }
            let inv = f.inv(m.get(rank, col)).unwrap();
            for c in col..m.cols {
                let x = m.get(rank, c);
                m.set(rank, c, f.mul(inv, x));
            }
            for r in 0..m.rows {
                if r == rank {
                    continue;
                }
                let factor = m.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let x = f.sub(m.get(r, c), f.mul(factor, m.get(rank, c)));
                    m.set(r, c, x);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        Rref {
            matrix: m,
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    pub fn inverse(&self) -> Option<FqMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let f = &self.field;
        let mut aug = Self::zeros(f, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, FqElem::ONE);
        }
        let red = aug.rref();
        if red.pivots.len() < n || red.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(red.matrix.block(0, n, n, 2 * n))
    }

    /// Some `x` with `self * x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &FqMatrix) -> Option<FqMatrix> {
        assert_eq!(self.rows, b.rows);
        let f = &self.field;
        let (n, k) = (self.cols, b.cols);
        let mut aug = Self::zeros(f, self.rows, n + k);
        for r in 0..self.rows {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            for c in 0..k {
                aug.set(r, n + c, b.get(r, c));
            }
        }
        let red = aug.rref();
        if red.pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut x = Self::zeros(f, n, k);
        for (i, &p) in red.pivots.iter().enumerate() {
            for c in 0..k {
                x.set(p, c, red.matrix.get(i, n + c));
            }
        }
        Some(x)
    }

    /// Basis of the right kernel, as columns of the returned matrix.
    pub fn kernel(&self) -> FqMatrix {
        let f = &self.field;
        let red = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !red.pivots.contains(c)).collect();
        let mut out = Self::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            out.set(fc, j, FqElem::ONE);
            for (i, &p) in red.pivots.iter().enumerate() {
                out.set(p, j, f.neg(red.matrix.get(i, fc)));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<Vec<u64>>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(|&x| self.field.coords(x)).collect())
            .collect();
        serde_json::json!(rows)
    }
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[", self.field)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<u16> = self.row(r).iter().map(|x| x.0).collect();
            write!(f, "{row:?}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfq::field::make_field;

    fn m(f: &FqField, rows: &[&[u16]]) -> FqMatrix {
        let cols = rows[0].len();
        FqMatrix::from_vecs(f, cols, &rows.iter().map(|r| r.iter().map(|&x| FqElem(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn rref_examples() {
        let f2 = make_field(2, 1).unwrap();
        let id = FqMatrix::identity(&f2, 3);
        assert_eq!(id.rref().matrix, id);
        assert_eq!(id.rank(), 3);
        let z = FqMatrix::zeros(&f2, 2, 3);
        assert_eq!(z.rref().rank, 0);
        let r = m(&f2, &[&[1, 1], &[1, 1]]).rref();
        assert_eq!(r.matrix, m(&f2, &[&[1, 1], &[0, 0]]));
        assert_eq!((r.rank, r.pivots), (1, vec![0]));
    }

    #[test]
    fn inverse_and_solve() {
        let f3 = make_field(3, 1).unwrap();
        let a = m(&f3, &[&[1, 2], &[0, 1]]);
        let ai = a.inverse().unwrap();
        assert_eq!(a.mul(&ai).unwrap(), FqMatrix::identity(&f3, 2));
        assert!(m(&f3, &[&[1, 2], &[2, 1]]).inverse().is_none());
        let b = m(&f3, &[&[1], &[2]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x).unwrap(), b);
        let sing = m(&f3, &[&[1, 1], &[1, 1]]);
        assert!(sing.solve(&m(&f3, &[&[1], &[0]])).is_none());
        let k = sing.kernel();
        assert_eq!(k.cols(), 1);
        assert!(sing.mul(&k).unwrap().is_zero());
    }
}
