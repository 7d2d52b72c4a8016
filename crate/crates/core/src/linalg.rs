//! Exact linear algebra over a [`Scalar`] field: reduced row echelon form,
//! rank, kernels, and linear solves. Matrices are small (at most a few dozen
//! rows) so the implementation favors clarity over asymptotics.

use num_traits::Zero;

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
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
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data: Vec<S> = rows.into_iter().flatten().collect();
        Mat {
            rows: data.len() / cols,
            cols,
            data,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
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

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Mat<S> {
        Mat::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn mul(&self, other: &Mat<S>) -> Mat<S> {
        assert_eq!(self.cols, other.rows);
        Mat::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = S::zero();
            for k in 0..self.cols {
                acc = acc + self.at(r, k).clone() * other.at(k, c).clone();
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = S::zero();
                for k in 0..self.cols {
                    acc = acc + self.at(r, k).clone() * v[k].clone();
                }
                acc
            })
            .collect()
    }

    /// In-place Gauss-Jordan reduction to reduced row echelon form.
    /// Returns the pivot columns in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..self.cols {
            if lead >= self.rows {
                break;
            }
            let pivot_row = (lead..self.rows).find(|&r| !self.at(r, col).is_zero());
            let Some(pr) = pivot_row else { continue };
            self.swap_rows(lead, pr);
            let inv = S::one() / self.at(lead, col).clone();
            for c in col..self.cols {
                let v = self.at(lead, c).clone() * inv.clone();
                *self.at_mut(lead, c) = v;
            }
            for r in 0..self.rows {
                if r != lead && !self.at(r, col).is_zero() {
                    let factor = self.at(r, col).clone();
                    for c in col..self.cols {
                        let v = self.at(r, c).clone() - factor.clone() * self.at(lead, c).clone();
                        *self.at_mut(r, c) = v;
                    }
                }
            }
            pivots.push(col);
            lead += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Drops all-zero rows; useful after `rref` to get a canonical basis.
    pub fn without_zero_rows(&self) -> Mat<S> {
        let rows: Vec<Vec<S>> = (0..self.rows)
            .filter(|&r| self.row(r).iter().any(|x| !x.is_zero()))
            .map(|r| self.row(r).to_vec())
            .collect();
        if rows.is_empty() {
            Mat {
                rows: 0,
                cols: self.cols,
                data: Vec::new(),
            }
        } else {
            Mat::from_rows(rows)
        }
    }

    /// Canonical basis (RREF, no zero rows) of the row space.
    pub fn row_space(&self) -> Mat<S> {
        let mut m = self.clone();
        m.rref();
        m.without_zero_rows()
    }

    /// Canonical basis of the kernel `{x : self * x = 0}`, one row per basis
    /// vector, in reduced row echelon form.
    pub fn kernel_basis(&self) -> Mat<S> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::new();
        for &f in &free {
            let mut v = vec![S::zero(); self.cols];
            v[f] = S::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -m.at(prow, f).clone();
            }
            rows.push(v);
        }
        if rows.is_empty() {
            return Mat {
                rows: 0,
                cols: self.cols,
                data: Vec::new(),
            };
        }
        let mut k = Mat::from_rows(rows);
        k.rref();
        k
    }

    /// A particular solution of `self * x = rhs`, if one exists. Free
    /// variables are set to zero.
    pub fn solve(&self, rhs: &[S]) -> Option<Vec<S>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = Mat::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                rhs[r].clone()
            }
        });
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![S::zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = aug.at(prow, self.cols).clone();
        }
        Some(x)
    }
}

impl<S: Scalar> std::fmt::Debug for Mat<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{} ", self.at(r, c))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Do two row sets span the same subspace?
pub fn same_row_space<S: Scalar>(a: &Mat<S>, b: &Mat<S>) -> bool {
    a.row_space() == b.row_space()
}

/// Is every row of `a` in the row space of `b`?
pub fn contained_in_row_space<S: Scalar>(a: &Mat<S>, b: &Mat<S>) -> bool {
    assert_eq!(a.cols(), b.cols());
    let rb = b.rank();
    let mut stacked: Vec<Vec<S>> = b.row_vecs();
    stacked.extend(a.row_vecs());
    if stacked.is_empty() {
        return true;
    }
    Mat::from_rows(stacked).rank() == rb
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qr, Q};
    use proptest::prelude::*;

    fn qm(rows: Vec<Vec<i64>>) -> Mat<Q> {
        Mat::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(q).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_canonicalizes() {
        let mut m = qm(vec![vec![0, 2, 4], vec![1, 1, 1]]);
        let pivots = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(m.row(0), &[q(1), q(0), q(-1)]);
        assert_eq!(m.row(1), &[q(0), q(1), q(2)]);
    }

    #[test]
    fn kernel_of_rank_one_row() {
        let m = qm(vec![vec![1, 1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 2);
        // Every kernel row must satisfy the equation.
        for r in 0..k.rows() {
            let s: Q = k.row(r).iter().cloned().fold(q(0), |a, b| a + b);
            assert_eq!(s, q(0));
        }
    }

    #[test]
    fn solve_unique_and_inconsistent() {
        let m = qm(vec![vec![2, 0], vec![0, 4]]);
        assert_eq!(m.solve(&[q(1), q(2)]), Some(vec![qr(1, 2), qr(1, 2)]));
        let sing = qm(vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(sing.solve(&[q(0), q(1)]), None);
    }

    #[test]
    fn row_space_equality_detects_reordered_bases() {
        let a = qm(vec![vec![1, 0, 0], vec![0, 1, 2]]);
        let b = qm(vec![vec![1, 1, 2], vec![1, 0, 0]]);
        assert!(same_row_space(&a, &b));
        let c = qm(vec![vec![1, 0, 0], vec![0, 1, 3]]);
        assert!(!same_row_space(&a, &c));
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(rows in proptest::collection::vec(
            proptest::collection::vec(-5i64..=5, 4), 1..4))
        {
            let mut m = qm(rows);
            m.rref();
            let once = m.clone();
            m.rref();
            prop_assert_eq!(m, once);
        }

        #[test]
        fn rank_bounded_and_kernel_dim_complements(rows in proptest::collection::vec(
            proptest::collection::vec(-5i64..=5, 4), 1..5))
        {
            let m = qm(rows);
            let r = m.rank();
            prop_assert!(r <= 4);
            prop_assert_eq!(m.kernel_basis().rows() + r, 4);
        }
    }
}
