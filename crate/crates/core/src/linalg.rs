//! Exact dense linear algebra over a generic scalar field.
//!
//! Everything reduces to Gauss-Jordan elimination with a fixed deterministic
//! pivot rule: columns are scanned left to right and the first row with a
//! nonzero entry becomes the pivot. No magnitude-based pivoting — over the
//! rationals exactness makes it unnecessary, and determinism of every derived
//! basis (kernels, particular solutions) depends on the fixed rule.

use crate::scalar::Scalar;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Mat<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut S {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> Vec<S> {
        (0..self.cols).map(|c| self.at(r, c).clone()).collect()
    }

    pub fn col(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let lhs = self.at(r, k).clone();
                if lhs.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let term = lhs.clone() * other.at(k, c).clone();
                    *out.at_mut(r, c) = out.at(r, c).clone() + term;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = S::zero();
                for (c, vc) in v.iter().enumerate() {
                    acc = acc + self.at(r, c).clone() * vc.clone();
                }
                acc
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// In-place reduced row echelon form. Returns the pivot columns in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&row| !self.at(row, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = S::one() / self.at(r, c).clone();
            for cc in c..self.cols {
                *self.at_mut(r, cc) = self.at(r, cc).clone() * inv.clone();
            }
            for row in 0..self.rows {
                if row == r || self.at(row, c).is_zero() {
                    continue;
                }
                let factor = self.at(row, c).clone();
                for cc in c..self.cols {
                    let delta = factor.clone() * self.at(r, cc).clone();
                    *self.at_mut(row, cc) = self.at(row, cc).clone() - delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Canonical basis of the null space `{v : Mv = 0}`, one vector per free
    /// column (ascending), with the free coordinate set to 1.
    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![S::zero(); self.cols];
                v[f] = S::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m.at(row, f).clone();
                }
                v
            })
            .collect()
    }

    /// Particular solution of `Mx = rhs` with all free variables set to zero,
    /// or `None` if the system is inconsistent.
    pub fn solve_particular(&self, rhs: &[S]) -> Option<Vec<S>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for (r, b) in rhs.iter().enumerate() {
            for c in 0..self.cols {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, self.cols) = b.clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![S::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(row, self.cols).clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, n + r) = S::one();
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                *inv.at_mut(r, c) = aug.at(r, n + c).clone();
            }
        }
        Some(inv)
    }

    /// Determinant by fraction-producing Gaussian elimination.
    pub fn det(&self) -> S {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = S::one();
        for c in 0..n {
            let Some(pr) = (c..n).find(|&row| !m.at(row, c).is_zero()) else {
                return S::zero();
            };
            if pr != c {
                m.swap_rows(c, pr);
                det = -det;
            }
            let pivot = m.at(c, c).clone();
            det = det * pivot.clone();
            for row in c + 1..n {
                if m.at(row, c).is_zero() {
                    continue;
                }
                let factor = m.at(row, c).clone() / pivot.clone();
                for cc in c..n {
                    let delta = factor.clone() * m.at(c, cc).clone();
                    *m.at_mut(row, cc) = m.at(row, cc).clone() - delta;
                }
            }
        }
        det
    }

    /// Canonical form of a row span: RREF rows with zero rows dropped.
    /// Two collections of rows span the same subspace iff this agrees.
    pub fn row_space_canonical(&self) -> Vec<Vec<S>> {
        let mut m = self.clone();
        let pivots = m.rref();
        (0..pivots.len()).map(|r| m.row(r)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rint, Rat};
    use num_traits::Zero;

    fn m(rows: &[&[i64]]) -> Mat<Rat> {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rint(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_is_deterministic_lexicographic() {
        let mut a = m(&[&[0, 2, 4], &[1, 1, 1], &[1, 3, 5]]);
        let pivots = a.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(a.row(0), vec![rint(1), rint(0), rint(-1)]);
        assert_eq!(a.row(1), vec![rint(0), rint(1), rint(2)]);
        assert_eq!(a.row(2), vec![rint(0), rint(0), rint(0)]);
    }

    #[test]
    fn kernel_and_solve() {
        let a = m(&[&[1, 0, -1, 0], &[0, 1, 2, 0]]);
        let kernel = a.kernel_basis();
        assert_eq!(kernel.len(), 2);
        for v in &kernel {
            assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        // Free variables zero in the particular solution.
        let x = a.solve_particular(&[rint(3), rint(-4)]).unwrap();
        assert_eq!(x, vec![rint(3), rint(-4), rint(0), rint(0)]);
        // Inconsistent system.
        let b = m(&[&[1, 1], &[2, 2]]);
        assert!(b.solve_particular(&[rint(1), rint(3)]).is_none());
    }

    #[test]
    fn inverse_and_det() {
        let a = m(&[&[2, 1, 0], &[1, -1, 3], &[0, 2, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.matmul(&inv), Mat::identity(3));
        assert_eq!(inv.matmul(&a), Mat::identity(3));
        // det by cofactor expansion done by hand: 2(-1-6) - 1(1-0) + 0 = -15.
        assert_eq!(a.det(), rint(-15));
        assert_eq!(inv.det(), rat(-1, 15));
        let singular = m(&[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
        assert_eq!(singular.det(), rint(0));
    }

    #[test]
    fn row_space_canonical_detects_equal_spans() {
        let a = m(&[&[1, 0, 1], &[0, 1, 1]]);
        let b = m(&[&[1, 1, 2], &[1, -1, 0]]);
        assert_eq!(a.row_space_canonical(), b.row_space_canonical());
        let c = m(&[&[1, 0, 0], &[0, 1, 1]]);
        assert_ne!(a.row_space_canonical(), c.row_space_canonical());
    }
}
