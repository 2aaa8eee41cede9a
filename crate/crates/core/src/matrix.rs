//! Minimal row-major dense matrix.
//!
//! Networks here are small (tens of nodes, a handful of layers), so a plain
//! `Vec`-backed matrix keeps the supra-centrality assembly transparent.

use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Real> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    /// Builds from rows; panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            data.extend(row);
        }
        Self {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn matvec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                row.iter().zip(v).map(|(&a, &x)| a * x).sum()
            })
            .collect()
    }

    pub fn scaled(&self, c: R) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| x * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|&x| x >= R::zero())
    }

    /// Column sums.
    pub fn col_sums(&self) -> Vec<R> {
        let mut sums = vec![R::zero(); self.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                sums[j] = sums[j] + self[(i, j)];
            }
        }
        sums
    }

    /// Row sums.
    pub fn row_sums(&self) -> Vec<R> {
        (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].iter().copied().sum())
            .collect()
    }
}

impl<R> std::ops::Index<(usize, usize)> for Matrix<R> {
    type Output = R;

    fn index(&self, (i, j): (usize, usize)) -> &R {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<R> std::ops::IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matvec_matches_hand_computation() {
        let m = Matrix::from_rows(vec![vec![1.0, 2.0], vec![3.0, 4.0]]);
        assert_eq!(m.matvec(&[1.0, 1.0]), vec![3.0, 7.0]);
        assert_eq!(m.matvec(&[1.0, 0.0]), vec![1.0, 3.0]);
    }

    #[test]
    fn sums_and_predicates() {
        let m = Matrix::from_rows(vec![vec![0.0, 1.0], vec![2.0, 0.0]]);
        assert_eq!(m.col_sums(), vec![2.0, 1.0]);
        assert_eq!(m.row_sums(), vec![1.0, 2.0]);
        assert!(m.is_nonnegative());
        assert!(!m.is_zero());
        assert!(Matrix::<f64>::zeros(3, 3).is_zero());
    }

    #[test]
    fn works_at_f32() {
        let m: Matrix<f32> = Matrix::identity(4);
        let v = vec![1.0f32, 2.0, 3.0, 4.0];
        assert_eq!(m.matvec(&v), v);
    }
}
