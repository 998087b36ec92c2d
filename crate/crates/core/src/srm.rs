//! Standard representative matrices `D = (I_r | M)`, their dual and full
//! matrices, bases and multiplicities.

use std::fmt;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Int, IntMatrix};

/// The triple `(r, n, M)` defining `D = (I_r | M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardRepMatrix {
    r: usize,
    n: usize,
    m: IntMatrix,
}

impl StandardRepMatrix {
    pub fn new(r: usize, n: usize, m: IntMatrix) -> Result<Self> {
        if r == 0 {
            return Err(Error::Dimension("r must be at least 1".into()));
        }
        if n < r {
            return Err(Error::Dimension(format!("n = {n} is smaller than r = {r}")));
        }
        if m.rows() != r || m.cols() != n - r {
            return Err(Error::Dimension(format!(
                "M must be {r}x{}, got {}x{}",
                n - r,
                m.rows(),
                m.cols()
            )));
        }
        Ok(StandardRepMatrix { r, n, m })
    }

    /// Convenience constructor from the rows of `M`.
    pub fn from_m_rows(rows: &[&[i64]]) -> Result<Self> {
        let r = rows.len();
        let k = rows.first().map_or(0, |row| row.len());
        let m = IntMatrix::from_i64_rows(rows)?;
        Self::new(r, r + k, m)
    }

    /// `D = I_r`.
    pub fn identity(r: usize) -> Self {
        StandardRepMatrix {
            r,
            n: r,
            m: IntMatrix::zeros(r, 0),
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Corank `n - r`.
    pub fn corank(&self) -> usize {
        self.n - self.r
    }

    pub fn m(&self) -> &IntMatrix {
        &self.m
    }

    /// The `r x n` matrix `D = (I_r | M)`.
    pub fn d(&self) -> IntMatrix {
        IntMatrix::identity(self.r)
            .hstack(&self.m)
            .expect("M has r rows")
    }

    /// `D̂ = (-Mᵀ | I_{n-r})`.
    pub fn dual_matrix(&self) -> IntMatrix {
        self.m
            .transpose()
            .neg()
            .hstack(&IntMatrix::identity(self.corank()))
            .expect("Mᵀ has n - r rows")
    }

    /// `𝐃`: `D` stacked over `D̂`.
    pub fn full_matrix(&self) -> IntMatrix {
        self.d()
            .vstack(&self.dual_matrix())
            .expect("both blocks have n columns")
    }

    /// Whether the given 1-based column set is a basis of `D`.
    pub fn basis(&self, indices: &[usize]) -> Result<Basis> {
        let b = Basis::new(indices.to_vec(), self.n)?;
        if b.len() != self.r {
            return Err(Error::Dimension(format!(
                "a basis has {} columns, got {}",
                self.r,
                b.len()
            )));
        }
        if self.minor(&b).is_zero() {
            return Err(Error::Dimension(format!("{b} is not a basis")));
        }
        Ok(b)
    }

    /// Signed determinant of `D` restricted to the columns of `b`.
    pub fn minor(&self, b: &Basis) -> Int {
        linalg::det(&self.d().select_columns(&b.positions())).expect("r columns of an r-row matrix")
    }
}

/// A set of `r` column indices, 1-based and strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Basis(Vec<usize>);

impl Basis {
    pub fn new(mut indices: Vec<usize>, n: usize) -> Result<Self> {
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Dimension("repeated column index".into()));
        }
        if indices.iter().any(|&i| i == 0 || i > n) {
            return Err(Error::Dimension(format!(
                "column indices must lie in 1..={n}"
            )));
        }
        Ok(Basis(indices))
    }

    /// 1-based column indices.
    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    /// 0-based column positions.
    pub fn positions(&self) -> Vec<usize> {
        self.0.iter().map(|i| i - 1).collect()
    }

    /// 0-based positions of the columns outside the basis.
    pub fn complement_positions(&self, n: usize) -> Vec<usize> {
        (0..n).filter(|p| !self.0.contains(&(p + 1))).collect()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.binary_search(&index).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

/// All bases of a matrix with their multiplicities, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisTable {
    entries: Vec<(Basis, Int)>,
}

impl BasisTable {
    pub fn iter(&self) -> impl Iterator<Item = &(Basis, Int)> {
        self.entries.iter()
    }

    pub fn bases(&self) -> impl Iterator<Item = &Basis> {
        self.entries.iter().map(|(b, _)| b)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, b: &Basis) -> Option<&Int> {
        self.entries
            .binary_search_by(|(k, _)| k.cmp(b))
            .ok()
            .map(|i| &self.entries[i].1)
    }

    /// Position of `b` in lexicographic order.
    pub fn rank_of(&self, b: &Basis) -> Option<usize> {
        self.entries.binary_search_by(|(k, _)| k.cmp(b)).ok()
    }

    /// `Σ m(B)²`
    pub fn sum_of_squares(&self) -> Int {
        self.entries.iter().map(|(_, m)| m * m).sum()
    }
}

/// Enumerates the maximal minors of any integer matrix of full row rank,
/// keeping the nonzero ones. Column subsets are visited in lexicographic order.
pub fn maximal_minors(a: &IntMatrix) -> BasisTable {
    let (k, n) = (a.rows(), a.cols());
    let entries = (0..n)
        .combinations(k)
        .filter_map(|cols| {
            let det = linalg::det(&a.select_columns(&cols)).expect("square");
            (!det.is_zero()).then(|| {
                let b = Basis(cols.iter().map(|c| c + 1).collect());
                (b, det.abs())
            })
        })
        .collect();
    BasisTable { entries }
}

pub fn dual_matrix(d: &StandardRepMatrix) -> IntMatrix {
    d.dual_matrix()
}

pub fn full_matrix(d: &StandardRepMatrix) -> IntMatrix {
    d.full_matrix()
}

/// All bases of `D` with multiplicities `m(B) = |det D_B|`.
pub fn enumerate_bases(d: &StandardRepMatrix) -> BasisTable {
    let table = maximal_minors(&d.d());
    debug_assert_eq!(
        table.multiplicity(&Basis((1..=d.r()).collect())),
        Some(&Int::one())
    );
    table
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixTreeCheck {
    pub sum_squares: Int,
    pub det_full: Int,
    pub equal: bool,
}

/// Compares `Σ m(B)²` against `|det 𝐃|`.
pub fn matrix_tree_check(d: &StandardRepMatrix) -> MatrixTreeCheck {
    let sum_squares = enumerate_bases(d).sum_of_squares();
    let det_full = linalg::det(&d.full_matrix()).expect("square").abs();
    let equal = sum_squares == det_full;
    MatrixTreeCheck {
        sum_squares,
        det_full,
        equal,
    }
}
