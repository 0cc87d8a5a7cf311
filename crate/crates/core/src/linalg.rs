//! Gaussian elimination over an exact field.
//!
//! Pivoting always takes the first nonzero entry in the column, which makes
//! intermediate states deterministic. That rule is only sound for exact
//! scalars; floating point callers should not rely on these routines.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// In-place reduction to row echelon form; returns the pivot columns.
    fn echelon(&mut self, rhs: &mut Option<&mut Vec<T>>) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            if let Some(b) = rhs.as_deref_mut() {
                b.swap(r, p);
            }
            let inv = T::one() / self[(r, c)].clone();
            for i in r + 1..self.rows {
                if self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone() * &inv;
                for j in c..self.cols {
                    let v = self[(i, j)].clone() - &(factor.clone() * &self[(r, j)]);
                    self[(i, j)] = v;
                }
                if let Some(b) = rhs.as_deref_mut() {
                    b[i] = b[i].clone() - &(factor.clone() * &b[r]);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.echelon(&mut None).len()
    }

    /// Unique solution of a square system.
    pub fn solve(&self, rhs: &[T]) -> Result<Vec<T>> {
        if self.rows != self.cols {
            return Err(Error::Usage(format!(
                "solve needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        if rhs.len() != self.rows {
            return Err(Error::DegreeMismatch {
                expected: self.rows,
                found: rhs.len(),
            });
        }
        let mut m = self.clone();
        let mut b = rhs.to_vec();
        let pivots = m.echelon(&mut Some(&mut b));
        if let Some(column) = (0..self.cols).find(|c| !pivots.contains(c)) {
            return Err(Error::Singular { column });
        }
        let n = self.rows;
        let mut x = vec![T::zero(); n];
        for i in (0..n).rev() {
            let mut acc = b[i].clone();
            for j in i + 1..n {
                acc = acc - &(m[(i, j)].clone() * &x[j]);
            }
            x[i] = acc / m[(i, i)].clone();
        }
        Ok(x)
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + &(a.clone() * b))
            })
            .collect()
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

/// Rank of a set of vectors (as rows).
pub fn rank_of<T: Scalar>(vectors: &[Vec<T>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(vectors.to_vec()).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{FieldElem, Rational};
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v)
    }

    #[test]
    fn identity_solves_to_rhs() {
        let id = Matrix::<Rational>::identity(3);
        let r = vec![q(4), q(-2), q(7)];
        assert_eq!(id.solve(&r).unwrap(), r);
    }

    #[test]
    fn singular_is_reported() {
        let m = Matrix::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert_eq!(m.solve(&[q(1), q(1)]), Err(Error::Singular { column: 1 }));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn needs_a_row_swap() {
        let m = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]);
        assert_eq!(m.solve(&[q(3), q(5)]).unwrap(), vec![q(5), q(3)]);
    }

    #[test]
    fn quadratic_field_system() {
        let s = FieldElem::sqrt_d();
        let one = FieldElem::one();
        let m = Matrix::from_rows(vec![vec![s.clone(), one.clone()], vec![one.clone(), s.clone()]]);
        let x = m.solve(&[one.clone(), FieldElem::zero()]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![one, FieldElem::zero()]);
    }

    #[test]
    fn rank_of_vectors() {
        assert_eq!(rank_of::<Rational>(&[]), 0);
        let v = vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)], vec![q(1), q(2), q(1)]];
        assert_eq!(rank_of(&v), 2);
    }

    proptest! {
        #[test]
        fn solution_satisfies_system(entries in prop::collection::vec(-9i64..9, 9), rhs in prop::collection::vec(-9i64..9, 3)) {
            let rows: Vec<Vec<Rational>> = entries.chunks(3).map(|c| c.iter().map(|&v| q(v)).collect()).collect();
            let m = Matrix::from_rows(rows);
            let b: Vec<Rational> = rhs.iter().map(|&v| q(v)).collect();
            match m.solve(&b) {
                Ok(x) => prop_assert_eq!(m.mul_vec(&x), b),
                Err(Error::Singular { .. }) => prop_assert!(m.rank() < 3),
                Err(e) => prop_assert!(false, "unexpected error {e}"),
            }
        }
    }
}
