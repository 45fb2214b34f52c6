//! Dense matrices over a [`Field`] with exact Gaussian elimination.

use crate::field::Field;

/// Row-major dense matrix. Elements only make sense together with the field
/// they were produced by.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Mat<E> {
    pub fn filled(rows: usize, cols: usize, v: E) -> Self {
        Mat { rows, cols, data: vec![v; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<E>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix");
            data.extend(row);
        }
        Mat { rows: r, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Mat { rows: self.cols, cols: self.rows, data }
    }

    /// Columns `idx` of `self`, in the given order.
    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * idx.len());
        for i in 0..self.rows {
            for &j in idx {
                data.push(self.get(i, j).clone());
            }
        }
        Mat { rows: self.rows, cols: idx.len(), data }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.cols * idx.len());
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Mat { rows: idx.len(), cols: self.cols, data }
    }

    pub fn map<G, T: Clone>(&self, mut g: G) -> Mat<T>
    where
        G: FnMut(&E) -> T,
    {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| g(x)).collect() }
    }

    pub fn try_map<G, T: Clone>(&self, mut g: G) -> Option<Mat<T>>
    where
        G: FnMut(&E) -> Option<T>,
    {
        let data = self.data.iter().map(|x| g(x)).collect::<Option<Vec<_>>>()?;
        Some(Mat { rows: self.rows, cols: self.cols, data })
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Mat { rows: self.rows, cols, data }
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }
}

/// Result of row reduction: the reduced matrix and its pivot columns.
pub struct Echelon<E> {
    pub reduced: Mat<E>,
    pub pivots: Vec<usize>,
}

/// Linear algebra over a field `F`.
pub trait LinAlg: Field {
    fn zeros(&self, rows: usize, cols: usize) -> Mat<Self::Elem> {
        Mat::filled(rows, cols, self.zero())
    }

    fn identity(&self, n: usize) -> Mat<Self::Elem> {
        let mut m = self.zeros(n, n);
        for i in 0..n {
            m.set(i, i, self.one());
        }
        m
    }

    fn matmul(&self, a: &Mat<Self::Elem>, b: &Mat<Self::Elem>) -> Mat<Self::Elem> {
        assert_eq!(a.cols, b.rows, "matmul shape mismatch");
        let mut out = self.zeros(a.rows, b.cols);
        for i in 0..a.rows {
            for k in 0..a.cols {
                let x = a.get(i, k);
                if self.is_zero(x) {
                    continue;
                }
                for j in 0..b.cols {
                    let y = b.get(k, j);
                    if self.is_zero(y) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = self.add(&out.data[idx], &self.mul(x, y));
                }
            }
        }
        out
    }

    fn mat_add(&self, a: &Mat<Self::Elem>, b: &Mat<Self::Elem>) -> Mat<Self::Elem> {
        assert_eq!((a.rows, a.cols), (b.rows, b.cols));
        let data = a.data.iter().zip(&b.data).map(|(x, y)| self.add(x, y)).collect();
        Mat { rows: a.rows, cols: a.cols, data }
    }

    fn mat_sub(&self, a: &Mat<Self::Elem>, b: &Mat<Self::Elem>) -> Mat<Self::Elem> {
        assert_eq!((a.rows, a.cols), (b.rows, b.cols));
        let data = a.data.iter().zip(&b.data).map(|(x, y)| self.sub(x, y)).collect();
        Mat { rows: a.rows, cols: a.cols, data }
    }

    fn mat_scale(&self, a: &Mat<Self::Elem>, s: &Self::Elem) -> Mat<Self::Elem> {
        a.map(|x| self.mul(x, s))
    }

    fn mat_vec(&self, a: &Mat<Self::Elem>, v: &[Self::Elem]) -> Vec<Self::Elem> {
        assert_eq!(a.cols, v.len());
        (0..a.rows)
            .map(|i| {
                let mut acc = self.zero();
                for (x, y) in a.row(i).iter().zip(v) {
                    if !self.is_zero(x) && !self.is_zero(y) {
                        acc = self.add(&acc, &self.mul(x, y));
                    }
                }
                acc
            })
            .collect()
    }

    fn is_zero_mat(&self, a: &Mat<Self::Elem>) -> bool {
        a.data.iter().all(|x| self.is_zero(x))
    }

    /// Reduced row echelon form.
    fn rref(&self, a: &Mat<Self::Elem>) -> Echelon<Self::Elem> {
        let mut m = a.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !self.is_zero(m.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = self.inv(m.get(r, c));
            for j in c..m.cols {
                let v = self.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if self.is_zero(&factor) {
                    continue;
                }
                for j in c..m.cols {
                    let rj = m.get(r, j);
                    if self.is_zero(rj) {
                        continue;
                    }
                    let v = self.sub(m.get(i, j), &self.mul(&factor, rj));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    fn rank(&self, a: &Mat<Self::Elem>) -> usize {
        if a.rows == 0 || a.cols == 0 {
            return 0;
        }
        // eliminate along the shorter side
        if a.rows > a.cols {
            self.rref(&a.transpose()).pivots.len()
        } else {
            self.rref(a).pivots.len()
        }
    }

    /// Basis of `{x : a x = 0}` as the columns of the returned matrix.
    fn nullspace(&self, a: &Mat<Self::Elem>) -> Mat<Self::Elem> {
        let n = a.cols;
        let ech = self.rref(a);
        let mut is_pivot = vec![false; n];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
        let mut out = self.zeros(n, free.len());
        for (k, &fcol) in free.iter().enumerate() {
            out.set(fcol, k, self.one());
            for (r, &pcol) in ech.pivots.iter().enumerate() {
                let v = ech.reduced.get(r, fcol);
                if !self.is_zero(v) {
                    out.set(pcol, k, self.neg(v));
                }
            }
        }
        out
    }

    /// Maximal linearly independent subset of the columns, as indices.
    fn independent_columns(&self, a: &Mat<Self::Elem>) -> Vec<usize> {
        self.rref(a).pivots
    }

    /// Basis (as columns) of the column space.
    fn column_basis(&self, a: &Mat<Self::Elem>) -> Mat<Self::Elem> {
        let idx = self.independent_columns(a);
        a.select_columns(&idx)
    }

    /// Standard basis vectors completing the column space of `a` to the
    /// whole space, as indices into the standard basis.
    fn complement_indices(&self, a: &Mat<Self::Elem>) -> Vec<usize> {
        let n = a.rows;
        let aug = a.hstack(&self.identity(n));
        self.rref(&aug)
            .pivots
            .into_iter()
            .filter(|&p| p >= a.cols)
            .map(|p| p - a.cols)
            .collect()
    }

    /// Solves `a x = b`; `None` if inconsistent. Free variables are set to 0.
    fn solve(&self, a: &Mat<Self::Elem>, b: &Mat<Self::Elem>) -> Option<Mat<Self::Elem>> {
        assert_eq!(a.rows, b.rows);
        let aug = a.hstack(b);
        let ech = self.rref(&aug);
        if ech.pivots.iter().any(|&p| p >= a.cols) {
            return None;
        }
        let mut x = self.zeros(a.cols, b.cols);
        for (r, &p) in ech.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, ech.reduced.get(r, a.cols + j).clone());
            }
        }
        Some(x)
    }

    fn inverse(&self, a: &Mat<Self::Elem>) -> Option<Mat<Self::Elem>> {
        if a.rows != a.cols {
            return None;
        }
        let x = self.solve(a, &self.identity(a.rows))?;
        if self.rank(a) == a.rows {
            Some(x)
        } else {
            None
        }
    }

    fn from_columns(&self, cols: &[Vec<Self::Elem>], rows: usize) -> Mat<Self::Elem> {
        let mut m = self.zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    fn block_diag(&self, blocks: &[Mat<Self::Elem>]) -> Mat<Self::Elem> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = self.zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    fn mat_pow(&self, a: &Mat<Self::Elem>, e: usize) -> Mat<Self::Elem> {
        let mut r = self.identity(a.rows);
        for _ in 0..e {
            r = self.matmul(&r, a);
        }
        r
    }

    fn trace(&self, a: &Mat<Self::Elem>) -> Self::Elem {
        let mut t = self.zero();
        for i in 0..a.rows.min(a.cols) {
            t = self.add(&t, a.get(i, i));
        }
        t
    }
}

impl<F: Field> LinAlg for F {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn q(rows: Vec<Vec<i64>>) -> Mat<num_rational::BigRational> {
        let c = rows[0].len();
        Mat::from_rows(
            rows.into_iter().map(|r| r.into_iter().map(|v| Rationals.from_i64(v)).collect()).collect(),
            c,
        )
    }

    #[test]
    fn rank_and_nullspace() {
        let f = Rationals;
        let a = q(vec![vec![0, 2, -2], vec![-2, 0, 2], vec![2, -2, 0]]);
        assert_eq!(f.rank(&a), 2);
        let n = f.nullspace(&a);
        assert_eq!(n.cols(), 1);
        assert!(f.is_zero_mat(&f.matmul(&a, &n)));
    }

    #[test]
    fn solve_and_inverse() {
        let f = Rationals;
        let a = q(vec![vec![2, 1], vec![1, 1]]);
        let inv = f.inverse(&a).unwrap();
        assert_eq!(f.matmul(&a, &inv), f.identity(2));
        let singular = q(vec![vec![1, 2], vec![2, 4]]);
        assert!(f.inverse(&singular).is_none());
        let b = q(vec![vec![1], vec![3]]);
        assert!(f.solve(&singular, &b).is_none());
    }

    #[test]
    fn complement_fills_space() {
        let f = PrimeField::new(5).unwrap();
        let a = Mat::from_rows(vec![vec![1, 1], vec![1, 1], vec![0, 0]], 2);
        let comp = f.complement_indices(&a);
        assert_eq!(comp.len(), 2);
        assert_eq!(f.rank(&a) + comp.len(), 3);
    }
}
