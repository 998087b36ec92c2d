//! Exact integer and rational linear algebra.
//!
//! Everything here works on dense row-major matrices of [`BigInt`] or
//! [`BigRational`]. Determinants use fraction-free (Bareiss) elimination,
//! linear systems are solved by rational Gauss-Jordan elimination, and
//! lattices are normalized with a row-style Hermite normal form.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<Int>;
pub type RatMatrix = Matrix<Rat>;

impl<T> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries cannot fill a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from a list of rows. `cols` is only consulted when
    /// `rows` is empty.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(cols, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data = rows.into_iter().flatten().collect();
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data,
        })
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

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.row_iter().map(<[T]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// The submatrix formed by the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix {
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors, each of length `dim`.
    pub fn from_columns(columns: &[Vec<T>], dim: usize) -> Result<Self> {
        if columns.iter().any(|c| c.len() != dim) {
            return Err(Error::Dimension("column length mismatch".into()));
        }
        let mut data = Vec::with_capacity(dim * columns.len());
        for i in 0..dim {
            for c in columns {
                data.push(c[i].clone());
            }
        }
        Ok(Matrix {
            rows: dim,
            cols: columns.len(),
            data,
        })
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "cannot stack {} columns over {}",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Places `self` to the left of `other`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Dimension(format!(
                "cannot join {} rows beside {}",
                self.rows, other.rows
            )));
        }
        let mut data = Vec::with_capacity(self.rows * (self.cols + other.cols));
        for i in 0..self.rows {
            data.extend(self.row(i).iter().cloned());
            data.extend(other.row(i).iter().cloned());
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        })
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Int::from(x)).collect())
                .collect(),
            cols,
        )
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(|x| Rat::from_integer(x.clone()))
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// `self · v`
    pub fn mul_vec(&self, v: &[Int]) -> Result<Vec<Int>> {
        if self.cols != v.len() {
            return Err(Error::Dimension(format!(
                "cannot apply {}x{} matrix to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(self
            .row_iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn neg(&self) -> IntMatrix {
        self.map(|x| -x)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl RatMatrix {
    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if self.cols != v.len() {
            return Err(Error::Dimension(format!(
                "cannot apply {}x{} matrix to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(self
            .row_iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn det(a: &IntMatrix) -> Result<Int> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of non-square {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(Int::one());
    }
    let mut m = a.to_rows();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(Int::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                // Exact division: Sylvester's identity guarantees divisibility.
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    Ok(sign * &m[n - 1][n - 1])
}

/// Solves `a · x = b` exactly. `a` must be square and invertible.
pub fn solve(a: &RatMatrix, b: &[Rat]) -> Result<Vec<Rat>> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "solve needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    if a.rows() != b.len() {
        return Err(Error::Dimension(format!(
            "right-hand side has length {}, expected {}",
            b.len(),
            a.rows()
        )));
    }
    let n = a.rows();
    let mut m: Vec<Vec<Rat>> = a
        .row_iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.to_vec();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&i| !m[i][col].is_zero())
            .ok_or(Error::Singular)?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut().skip(col) {
            *v *= &inv;
        }
        for i in 0..n {
            if i == col || m[i][col].is_zero() {
                continue;
            }
            let f = m[i][col].clone();
            for j in col..=n {
                let t = &f * &m[col][j];
                m[i][j] -= t;
            }
        }
    }
    Ok(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Exact inverse of a square rational matrix.
pub fn inverse(a: &RatMatrix) -> Result<RatMatrix> {
    let n = a.rows();
    let mut columns = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[j] = Rat::one();
        columns.push(solve(a, &e)?);
    }
    RatMatrix::from_columns(&columns, n)
}

/// Exact rank by rational row reduction.
pub fn rank(a: &RatMatrix) -> usize {
    let mut m = a.to_rows();
    let (rows, cols) = (a.rows(), a.cols());
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] / &m[r][col];
            for j in col..cols {
                let t = &f * &m[r][j];
                m[i][j] -= t;
            }
        }
        r += 1;
    }
    r
}

pub fn int_rank(a: &IntMatrix) -> usize {
    rank(&a.to_rational())
}

/// Row-style Hermite normal form of the lattice spanned by the rows of `a`.
///
/// The result is in row echelon form with positive pivots, every entry above
/// a pivot lies in `[0, pivot)`, and zero rows are dropped.
pub fn hnf_row(a: &IntMatrix) -> IntMatrix {
    let (nrows, ncols) = (a.rows(), a.cols());
    let mut m = a.to_rows();
    let mut p = 0;
    for col in 0..ncols {
        if p == nrows {
            break;
        }
        loop {
            // Smallest nonzero entry at or below the pivot row becomes the pivot.
            let best = (p..nrows)
                .filter(|&i| !m[i][col].is_zero())
                .min_by(|&i, &j| m[i][col].abs().cmp(&m[j][col].abs()));
            let Some(best) = best else { break };
            m.swap(p, best);
            let mut done = true;
            for i in p + 1..nrows {
                if m[i][col].is_zero() {
                    continue;
                }
                let q = m[i][col].div_floor(&m[p][col]);
                for j in col..ncols {
                    let t = &q * &m[p][j];
                    m[i][j] -= t;
                }
                if !m[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if m[p][col].is_zero() {
            continue;
        }
        if m[p][col].is_negative() {
            for v in m[p].iter_mut() {
                *v = -&*v;
            }
        }
        for i in 0..p {
            let q = m[i][col].div_floor(&m[p][col]);
            if q.is_zero() {
                continue;
            }
            for j in col..ncols {
                let t = &q * &m[p][j];
                m[i][j] -= t;
            }
        }
        p += 1;
    }
    m.truncate(p);
    IntMatrix::from_rows(m, ncols).expect("rows keep their width")
}

/// Converts a rational vector to integers if every entry is integral.
pub fn as_integers(v: &[Rat]) -> Option<Vec<Int>> {
    v.iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect()
}

pub fn to_rationals(v: &[Int]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

/// `gcd` of all entries, zero for the zero vector.
pub fn content(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

pub fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn rats(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| Rat::from_integer(Int::from(x))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    fn q(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    /// Cofactor expansion, independent of the Bareiss path.
    fn cofactor_det(a: &[Vec<i64>]) -> i64 {
        let n = a.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = a[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * a[0][j] * cofactor_det(&minor)
            })
            .sum()
    }

    #[test]
    fn det_identity() {
        assert_eq!(det(&IntMatrix::identity(2)).unwrap(), Int::from(1));
        assert_eq!(det(&IntMatrix::identity(0)).unwrap(), Int::from(1));
    }

    #[test]
    fn det_needs_pivot_swap() {
        assert_eq!(det(&m(&[&[0, 3], &[1, 2]])).unwrap(), Int::from(-3));
    }

    #[test]
    fn det_full_matrix_of_running_example() {
        let full = [vec![1, 0, 3], vec![0, 1, 2], vec![-3, -2, 1]];
        assert_eq!(cofactor_det(&full), 14);
        let rows: Vec<&[i64]> = full.iter().map(Vec::as_slice).collect();
        assert_eq!(det(&m(&rows)).unwrap(), Int::from(14));
    }

    #[test]
    fn det_rejects_non_square() {
        assert!(matches!(
            det(&m(&[&[1, 2, 3]])),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn det_singular_is_zero() {
        assert_eq!(det(&m(&[&[1, 2], &[2, 4]])).unwrap(), Int::from(0));
        assert_eq!(
            det(&m(&[&[0, 0, 1], &[0, 0, 2], &[1, 1, 1]])).unwrap(),
            Int::from(0)
        );
    }

    #[test]
    fn solve_examples() {
        let a = IntMatrix::identity(3).to_rational();
        let b = vec![q(1, 2), q(-3, 1), q(0, 1)];
        assert_eq!(solve(&a, &b).unwrap(), b);

        let a = m(&[&[1, 3], &[0, 2]]).to_rational();
        let x = solve(&a, &rats(&[1, 1])).unwrap();
        assert_eq!(x, vec![q(-1, 2), q(1, 2)]);
        // substitution
        assert_eq!(a.mul_vec(&x).unwrap(), rats(&[1, 1]));

        let a = m(&[&[2, 0], &[0, 2]]).to_rational();
        assert_eq!(solve(&a, &rats(&[1, 1])).unwrap(), vec![q(1, 2), q(1, 2)]);
    }

    #[test]
    fn solve_singular() {
        let a = m(&[&[1, 2], &[2, 4]]).to_rational();
        assert!(matches!(solve(&a, &rats(&[1, 1])), Err(Error::Singular)));
    }

    #[test]
    fn hnf_identity() {
        assert_eq!(hnf_row(&IntMatrix::identity(3)), IntMatrix::identity(3));
    }

    #[test]
    fn hnf_of_generating_set() {
        // Brute-force membership oracle over a 5x5 box: the rows
        // (2,0),(0,3),(1,1) reach every point, so the lattice is all of Z^2.
        let gens = [(2i64, 0i64), (0, 3), (1, 1)];
        let mut reached = std::collections::HashSet::new();
        for a in -6i64..=6 {
            for b in -6i64..=6 {
                for c in -6i64..=6 {
                    let p = (
                        a * gens[0].0 + b * gens[1].0 + c * gens[2].0,
                        a * gens[0].1 + b * gens[1].1 + c * gens[2].1,
                    );
                    reached.insert(p);
                }
            }
        }
        for x in -2..=2 {
            for y in -2..=2 {
                assert!(reached.contains(&(x, y)));
            }
        }
        let h = hnf_row(&m(&[&[2, 0], &[0, 3], &[1, 1]]));
        assert_eq!(h, IntMatrix::identity(2));
    }

    #[test]
    fn hnf_running_example_full_matrix() {
        let h = hnf_row(&m(&[&[1, 0, 3], &[0, 1, 2], &[-3, -2, 1]]));
        assert_eq!(h.rows(), 3);
        let pivots: Int = (0..3).map(|i| h[(i, i)].clone()).product();
        assert_eq!(pivots, Int::from(14));
        for i in 0..3 {
            for j in 0..i {
                assert!(h[(i, j)].is_zero());
            }
            for k in 0..i {
                assert!(h[(k, i)] >= Int::zero() && h[(k, i)] < h[(i, i)]);
            }
        }
    }

    #[test]
    fn hnf_drops_zero_rows() {
        let h = hnf_row(&m(&[&[2, 4], &[1, 2], &[0, 0]]));
        assert_eq!(h, m(&[&[1, 2]]));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RatMatrix::zeros(3, 2)), 0);
        assert_eq!(rank(&RatMatrix::identity(4)), 4);
        // columns (1,0),(3,2),(4,2)
        assert_eq!(int_rank(&m(&[&[1, 3, 4], &[0, 2, 2]])), 2);
        assert_eq!(int_rank(&m(&[&[1, 2], &[2, 4], &[3, 6]])), 1);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[1, 0, 3], &[0, 1, 2], &[-3, -2, 1]]).to_rational();
        let inv = inverse(&a).unwrap();
        for j in 0..3 {
            let col = inv.column(j);
            let img = a.mul_vec(&col).unwrap();
            for (i, v) in img.iter().enumerate() {
                assert_eq!(*v, if i == j { Rat::one() } else { Rat::zero() });
            }
        }
    }
}
