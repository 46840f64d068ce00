//! Exact linear algebra over an arbitrary field scalar.
//!
//! Everything here is scalar-generic: any type with exact field arithmetic
//! (`Zero`, `One`, the four operations, negation, equality) works. The crate
//! instantiates it with arbitrary-precision rationals as
//! [`RationalMatrix`](crate::RationalMatrix); no floating point is involved
//! anywhere, so ranks and solutions are exact, not approximate.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An exact field scalar. Blanket-implemented; `BigRational` is the
/// instantiation used throughout the crate.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
{
}

/// A dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    /// Builds a matrix from row-major entries. Fails unless
    /// `entries.len() == rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<S>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries[i * n + i] = S::one();
        }
        m
    }

    /// Builds a matrix column by column. All columns must have length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<S>]) -> Result<Self> {
        for col in columns {
            if col.len() != rows {
                return Err(Error::ShapeMismatch {
                    expected: rows,
                    got: col.len(),
                });
            }
        }
        let cols = columns.len();
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for col in columns {
                entries.push(col[r].clone());
            }
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[S] {
        assert!(r < self.rows, "row index out of range");
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        assert!(c < self.cols, "column index out of range");
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// The submatrix keeping only the given rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            entries.extend_from_slice(self.row(r));
        }
        Self {
            rows: rows.len(),
            cols: self.cols,
            entries,
        }
    }

    /// The submatrix keeping only the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            for &c in cols {
                entries.push(self.get(r, c).clone());
            }
        }
        Self {
            rows: self.rows,
            cols: cols.len(),
            entries,
        }
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, x: &[S]) -> Result<Vec<S>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// The rank over the scalar field, by Gaussian elimination with
    /// first-nonzero pivoting.
    pub fn rank(&self) -> usize {
        let mut m = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !m[r * cols + col].is_zero()) else {
                continue;
            };
            if p != rank {
                for c in 0..cols {
                    m.swap(p * cols + c, rank * cols + c);
                }
            }
            for r in rank + 1..rows {
                if m[r * cols + col].is_zero() {
                    continue;
                }
                let factor =
                    m[r * cols + col].clone() / m[rank * cols + col].clone();
                for c in col..cols {
                    let delta = factor.clone() * m[rank * cols + c].clone();
                    m[r * cols + c] = m[r * cols + c].clone() - delta;
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    /// The lexicographically-first maximal set of linearly independent row
    /// indices: scan rows in order, keep a row iff it is independent of the
    /// rows already kept. The result has `rank()` members.
    pub fn greedy_independent_rows(&self) -> Vec<usize> {
        let mut basis = SpanBasis::new(self.cols);
        let mut kept = Vec::new();
        for r in 0..self.rows {
            if basis.try_insert(self.row(r).to_vec()) {
                kept.push(r);
            }
        }
        kept
    }

    /// The lexicographically-first set of `r` linearly independent column
    /// indices. Fails when `r` exceeds the rank.
    pub fn independent_columns(&self, r: usize) -> Result<Vec<usize>> {
        let mut basis = SpanBasis::new(self.rows);
        let mut kept = Vec::new();
        for c in 0..self.cols {
            if kept.len() == r {
                break;
            }
            if basis.try_insert(self.column(c)) {
                kept.push(c);
            }
        }
        if kept.len() < r {
            return Err(Error::InsufficientRank {
                requested: r,
                available: self.rank(),
            });
        }
        Ok(kept)
    }

    /// Solves `M x = rhs` exactly. Returns `Ok(None)` when the system is
    /// inconsistent; when the columns are independent the solution is unique.
    /// Free variables, if any, are set to zero.
    pub fn solve(&self, rhs: &[S]) -> Result<Option<Vec<S>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: rhs.len(),
            });
        }
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.entries.clone();
        let mut b = rhs.to_vec();
        let mut pivots: Vec<(usize, usize)> = Vec::new();

        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
                continue;
            };
            if p != rank {
                for c in 0..cols {
                    a.swap(p * cols + c, rank * cols + c);
                }
                b.swap(p, rank);
            }
            for r in rank + 1..rows {
                if a[r * cols + col].is_zero() {
                    continue;
                }
                let factor = a[r * cols + col].clone() / a[rank * cols + col].clone();
                for c in col..cols {
                    let delta = factor.clone() * a[rank * cols + c].clone();
                    a[r * cols + c] = a[r * cols + c].clone() - delta;
                }
                let delta = factor * b[rank].clone();
                b[r] = b[r].clone() - delta;
            }
            pivots.push((rank, col));
            rank += 1;
        }

        // Rows below the last pivot are entirely zero on the left side.
        if b[rank..].iter().any(|v| !v.is_zero()) {
            return Ok(None);
        }

        let mut x = vec![S::zero(); cols];
        for &(r, col) in pivots.iter().rev() {
            let mut acc = b[r].clone();
            for c in col + 1..cols {
                if !a[r * cols + c].is_zero() && !x[c].is_zero() {
                    acc = acc - a[r * cols + c].clone() * x[c].clone();
                }
            }
            x[col] = acc / a[r * cols + col].clone();
        }
        debug_assert_eq!(self.mul_vec(&x).unwrap(), rhs);
        Ok(Some(x))
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Incrementally maintained basis of a span, kept in reduced form: every
/// stored vector has entry 1 at its own pivot position and 0 at every other
/// stored pivot. Insertion order decides which vectors are kept, which is
/// what makes the greedy selections lexicographically first.
struct SpanBasis<S> {
    dim: usize,
    vectors: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> SpanBasis<S> {
    fn new(dim: usize) -> Self {
        Self {
            dim,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Inserts `v` if it is independent of the vectors already stored.
    /// Returns whether it was inserted.
    fn try_insert(&mut self, mut v: Vec<S>) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        for (vec, &p) in self.vectors.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for c in 0..self.dim {
                if !vec[c].is_zero() {
                    let delta = factor.clone() * vec[c].clone();
                    v[c] = v[c].clone() - delta;
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[pivot].clone();
        for entry in &mut v {
            if !entry.is_zero() {
                *entry = entry.clone() / lead.clone();
            }
        }
        // Clear the new pivot column from the stored vectors so future
        // reductions stay single-pass.
        for vec in &mut self.vectors {
            if vec[pivot].is_zero() {
                continue;
            }
            let factor = vec[pivot].clone();
            for c in 0..self.dim {
                if !v[c].is_zero() {
                    let delta = factor.clone() * v[c].clone();
                    vec[c] = vec[c].clone() - delta;
                }
            }
        }
        self.vectors.push(v);
        self.pivots.push(pivot);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from(BigInt::from(n))
    }

    fn qm(rows: usize, cols: usize, entries: &[i64]) -> Matrix<Rational> {
        Matrix::new(rows, cols, entries.iter().map(|&n| q(n)).collect()).unwrap()
    }

    #[test]
    fn rank_identity() {
        assert_eq!(Matrix::<Rational>::identity(2).rank(), 2);
        assert_eq!(Matrix::<Rational>::identity(5).rank(), 5);
    }

    #[test]
    fn rank_of_collinear_columns_is_one() {
        // columns (2,4), (3,6), (5,10): all multiples of (1,2)
        let m = qm(2, 3, &[2, 3, 5, 4, 6, 10]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rank_of_nested_staircase_is_full() {
        // columns (1,1,1,1), (1,2,2,2), (1,2,3,3), (1,2,3,4)
        let m = qm(
            4,
            4,
            &[1, 1, 1, 1, 1, 2, 2, 2, 1, 2, 3, 3, 1, 2, 3, 4],
        );
        assert_eq!(m.rank(), 4);
    }

    #[test]
    fn rank_of_empty_matrix_is_zero() {
        assert_eq!(Matrix::<Rational>::zero(0, 0).rank(), 0);
        assert_eq!(Matrix::<Rational>::zero(0, 3).rank(), 0);
        assert_eq!(Matrix::<Rational>::zero(3, 0).rank(), 0);
    }

    #[test]
    fn greedy_rows_identity() {
        assert_eq!(
            Matrix::<Rational>::identity(3).greedy_independent_rows(),
            vec![0, 1, 2]
        );
    }

    #[test]
    fn greedy_rows_skip_dependent_row() {
        let m = qm(3, 2, &[1, 2, 2, 4, 0, 1]);
        assert_eq!(m.greedy_independent_rows(), vec![0, 2]);
    }

    #[test]
    fn greedy_rows_zero_matrix() {
        let m = Matrix::<Rational>::zero(3, 3);
        assert!(m.greedy_independent_rows().is_empty());
    }

    #[test]
    fn independent_columns_identity() {
        let m = Matrix::<Rational>::identity(2);
        assert_eq!(m.independent_columns(2).unwrap(), vec![0, 1]);
    }

    #[test]
    fn independent_columns_skip_scaled_column() {
        // columns (2,4), (3,6), (1,1): second is 3/2 of the first
        let m = qm(2, 3, &[2, 3, 1, 4, 6, 1]);
        assert_eq!(m.independent_columns(2).unwrap(), vec![0, 2]);
    }

    #[test]
    fn independent_columns_requesting_too_many_fails() {
        let m = qm(2, 2, &[1, 2, 2, 4]);
        assert_eq!(
            m.independent_columns(2),
            Err(Error::InsufficientRank {
                requested: 2,
                available: 1
            })
        );
    }

    #[test]
    fn solve_identity() {
        let m = Matrix::<Rational>::identity(2);
        assert_eq!(m.solve(&[q(3), q(5)]).unwrap(), Some(vec![q(3), q(5)]));
    }

    #[test]
    fn solve_unique_system() {
        // columns (1,2), (1,3); rhs (2,5) -> (1,1)
        let m = qm(2, 2, &[1, 1, 2, 3]);
        assert_eq!(m.solve(&[q(2), q(5)]).unwrap(), Some(vec![q(1), q(1)]));
    }

    #[test]
    fn solve_inconsistent_system() {
        // single column (1,2); rhs (1,3) is not a multiple
        let m = qm(2, 1, &[1, 2]);
        assert_eq!(m.solve(&[q(1), q(3)]).unwrap(), None);
    }

    #[test]
    fn solve_dimension_mismatch() {
        let m = Matrix::<Rational>::identity(2);
        assert!(matches!(
            m.solve(&[q(1)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    fn small_matrix() -> impl Strategy<Value = Matrix<Rational>> {
        (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-9i64..=9, r * c)
                .prop_map(move |v| qm(r, c, &v))
        })
    }

    proptest! {
        #[test]
        fn greedy_row_count_equals_rank(m in small_matrix()) {
            prop_assert_eq!(m.greedy_independent_rows().len(), m.rank());
        }

        #[test]
        fn rank_bounded_by_dimensions(m in small_matrix()) {
            prop_assert!(m.rank() <= m.rows().min(m.cols()));
        }

        #[test]
        fn rank_invariant_under_permutations(
            m in small_matrix(),
            row_seed in any::<u64>(),
            col_seed in any::<u64>(),
        ) {
            let rows = permutation(m.rows(), row_seed);
            let cols = permutation(m.cols(), col_seed);
            let permuted = m.select_rows(&rows).select_columns(&cols);
            prop_assert_eq!(permuted.rank(), m.rank());
        }

        #[test]
        fn solve_residual_is_exactly_zero(
            m in small_matrix(),
            rhs_entries in proptest::collection::vec(-9i64..=9, 1..=5),
        ) {
            let rhs: Vec<Rational> = (0..m.rows())
                .map(|i| q(*rhs_entries.get(i).unwrap_or(&0)))
                .collect();
            if let Some(x) = m.solve(&rhs).unwrap() {
                prop_assert_eq!(m.mul_vec(&x).unwrap(), rhs);
            }
        }

        #[test]
        fn solve_finds_constructed_solutions(
            m in small_matrix(),
            x_entries in proptest::collection::vec(-9i64..=9, 1..=5),
        ) {
            let x: Vec<Rational> = (0..m.cols())
                .map(|i| q(*x_entries.get(i).unwrap_or(&0)))
                .collect();
            let rhs = m.mul_vec(&x).unwrap();
            // Some solution must exist; it need not be x itself.
            let solved = m.solve(&rhs).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&solved).unwrap(), rhs);
        }
    }

    fn permutation(n: usize, seed: u64) -> Vec<usize> {
        let mut order: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            order.swap(i, j);
        }
        order
    }
}
