//! Small dense matrices over a finite field.

use serde::{Deserialize, Serialize};

use crate::cyclofield::Field;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FqMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u32>,
}

impl FqMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        FqMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        if rows.iter().any(|v| v.len() != c) {
            return Err(Error::ShapeMismatch("ragged matrix rows".into()));
        }
        Ok(FqMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn diagonal(entries: &[u32]) -> Self {
        let n = entries.len();
        let mut m = Self::zero(n, n);
        for (i, &d) in entries.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> FqMatrix {
        let mut out = FqMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn add(&self, other: &FqMatrix, f: &Field) -> FqMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        FqMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &FqMatrix, f: &Field) -> FqMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        FqMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: u32, f: &Field) -> FqMatrix {
        FqMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn matmul(&self, other: &FqMatrix, f: &Field) -> FqMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = FqMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[u32], f: &Field) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = 0;
                for (j, &x) in v.iter().enumerate() {
                    acc = f.add(acc, f.mul(self.get(i, j), x));
                }
                acc
            })
            .collect()
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self, f: &Field) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m.cols {
            let pivot = (row..m.rows).find(|&r| m.get(r, col) != 0);
            let Some(p) = pivot else { continue };
            m.swap_rows(row, p);
            let inv = f.inv(m.get(row, col)).unwrap();
            for j in col..m.cols {
                m.set(row, j, f.mul(m.get(row, j), inv));
            }
            for r in 0..m.rows {
                if r != row && m.get(r, col) != 0 {
                    let c = m.get(r, col);
                    for j in col..m.cols {
                        let v = f.sub(m.get(r, j), f.mul(c, m.get(row, j)));
                        m.set(r, j, v);
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == m.rows {
                break;
            }
        }
        rank
    }

    pub fn det(&self, f: &Field) -> u32 {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = m.rows;
        let mut det = 1u32;
        for col in 0..n {
            let pivot = (col..n).find(|&r| m.get(r, col) != 0);
            let Some(p) = pivot else { return 0 };
            if p != col {
                m.swap_rows(col, p);
                det = f.neg(det);
            }
            let d = m.get(col, col);
            det = f.mul(det, d);
            let inv = f.inv(d).unwrap();
            for r in col + 1..n {
                let c = f.mul(m.get(r, col), inv);
                if c == 0 {
                    continue;
                }
                for j in col..n {
                    let v = f.sub(m.get(r, j), f.mul(c, m.get(col, j)));
                    m.set(r, j, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self, f: &Field) -> Result<FqMatrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = FqMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| m.get(r, col) != 0)
                .ok_or_else(|| Error::DegenerateInput("singular matrix".into()))?;
            m.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let d = f.inv(m.get(col, col))?;
            for j in 0..n {
                m.set(col, j, f.mul(m.get(col, j), d));
                inv.set(col, j, f.mul(inv.get(col, j), d));
            }
            for r in 0..n {
                if r != col && m.get(r, col) != 0 {
                    let c = m.get(r, col);
                    for j in 0..n {
                        let v = f.sub(m.get(r, j), f.mul(c, m.get(col, j)));
                        m.set(r, j, v);
                        let w = f.sub(inv.get(r, j), f.mul(c, inv.get(col, j)));
                        inv.set(r, j, w);
                    }
                }
            }
        }
        Ok(inv)
    }

    pub fn block(&self, i0: usize, j0: usize, rows: usize, cols: usize) -> FqMatrix {
        let mut out = FqMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.set(i, j, self.get(i0 + i, j0 + j));
            }
        }
        out
    }

    pub fn set_block(&mut self, i0: usize, j0: usize, block: &FqMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(i0 + i, j0 + j, block.get(i, j));
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Rank-one matrix `col * row`.
    pub fn outer(col: &[u32], row: &[u32], f: &Field) -> FqMatrix {
        let mut out = FqMatrix::zero(col.len(), row.len());
        for (i, &a) in col.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in row.iter().enumerate() {
                out.set(i, j, f.mul(a, b));
            }
        }
        out
    }

    /// Characteristic polynomial `det(x I - A)` by the division-free
    /// Berkowitz algorithm; coefficients ascending.
    pub fn charpoly(&self, f: &Field) -> Vec<u32> {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return vec![1];
        }
        // Vector of coefficients of det(xI - A), built principal minor by
        // principal minor via Toeplitz products.
        let mut poly = vec![f.neg(self.get(0, 0)), 1];
        for k in 1..n {
            // R = row (A[k][0..k]), C = column (A[0..k][k]), M = leading k x k block
            let m = self.block(0, 0, k, k);
            let c: Vec<u32> = (0..k).map(|i| self.get(i, k)).collect();
            let r: Vec<u32> = (0..k).map(|j| self.get(k, j)).collect();
            // toeplitz column: t_0 = 1 (degree k+1 coeff), t_1 = -a_{kk},
            // t_{j+1} = -(R M^{j-1} C)
            let mut t = vec![0u32; k + 2];
            t[0] = 1;
            t[1] = f.neg(self.get(k, k));
            let mut mc = c.clone();
            for j in 1..=k {
                let mut dot = 0u32;
                for (idx, &rv) in r.iter().enumerate() {
                    dot = f.add(dot, f.mul(rv, mc[idx]));
                }
                t[j + 1] = f.neg(dot);
                if j < k {
                    mc = m.matvec(&mc, f);
                }
            }
            // multiply: new_poly[d] = sum_j t[j] * poly[d - (1 - j)] aligning
            // degrees: poly has degree k, result degree k+1.
            let mut next = vec![0u32; k + 2];
            for (j, &tv) in t.iter().enumerate() {
                if tv == 0 {
                    continue;
                }
                // t[j] multiplies x^{k+1-j} tail against poly's coefficients
                for (d, &pv) in poly.iter().enumerate() {
                    if pv == 0 {
                        continue;
                    }
                    // contribution to coefficient of x^{d + 1 - j} when j <= 1
                    // handled by the shifted convolution below
                    let deg = d as i64 + 1 - j as i64;
                    if (0..=(k as i64 + 1)).contains(&deg) {
                        let slot = &mut next[deg as usize];
                        *slot = f.add(*slot, f.mul(tv, pv));
                    }
                }
            }
            poly = next;
        }
        poly
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> Field {
        Field::prime(7).unwrap()
    }

    #[test]
    fn det_and_inverse() {
        let f = f7();
        let m = FqMatrix::from_rows(vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(m.det(&f), f.sub(4, 6));
        let inv = m.inverse(&f).unwrap();
        assert!(m.matmul(&inv, &f).is_identity());
    }

    #[test]
    fn rank_of_outer_product() {
        let f = f7();
        let m = FqMatrix::outer(&[1, 2, 3], &[4, 5, 0], &f);
        assert_eq!(m.rank(&f), 1);
    }

    #[test]
    fn charpoly_matches_diagonal() {
        let f = f7();
        let m = FqMatrix::diagonal(&[1, 2, 3]);
        // det(xI - A) = (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        let cp = m.charpoly(&f);
        assert_eq!(cp, vec![f.from_int(-6), f.from_int(11), f.from_int(-6), 1]);
    }

    #[test]
    fn charpoly_matches_companion() {
        let f = f7();
        // companion of x^3 - x - 1
        let m = FqMatrix::from_rows(vec![vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 0]]).unwrap();
        let cp = m.charpoly(&f);
        assert_eq!(cp, vec![f.from_int(-1), f.from_int(-1), 0, 1]);
    }
}
