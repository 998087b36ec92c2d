//! The sandpile group `S(D) = Zⁿ / im_Z(𝐃ᵀ)`.
//!
//! Classes are identified by their residue against the row Hermite normal
//! form of `𝐃`: reducing coordinate `i` against pivot row `i` in order leaves
//! every coordinate in `[0, pivot_i)`, and distinct residues are distinct
//! classes. The residue box therefore has exactly `|det 𝐃|` points.

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Int, IntMatrix, RatMatrix};
use crate::srm::StandardRepMatrix;

pub const DEFAULT_CLASS_BUDGET: u64 = 1_000_000;

/// Canonical residue of a `Zⁿ` vector modulo the row lattice of `𝐃`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SandpileClass(Vec<Int>);

impl SandpileClass {
    pub fn residue(&self) -> &[Int] {
        &self.0
    }

    pub fn into_residue(self) -> Vec<Int> {
        self.0
    }
}

#[derive(Clone, Debug)]
pub struct SandpileLattice {
    source: StandardRepMatrix,
    hnf: IntMatrix,
    full_t: RatMatrix,
}

impl SandpileLattice {
    pub fn new(source: &StandardRepMatrix) -> Self {
        let full = source.full_matrix();
        let hnf = linalg::hnf_row(&full);
        // 𝐃 is always nonsingular: det 𝐃 = det(I + MᵀM) > 0.
        assert_eq!(hnf.rows(), source.n(), "full matrix has full rank");
        SandpileLattice {
            source: source.clone(),
            full_t: full.transpose().to_rational(),
            hnf,
        }
    }

    pub fn source(&self) -> &StandardRepMatrix {
        &self.source
    }

    pub fn n(&self) -> usize {
        self.source.n()
    }

    /// Row HNF of `𝐃`.
    pub fn hnf_basis(&self) -> &IntMatrix {
        &self.hnf
    }

    pub fn pivots(&self) -> Vec<Int> {
        (0..self.n()).map(|i| self.hnf[(i, i)].clone()).collect()
    }

    /// `|S(D)| = |det 𝐃|`, read off as the product of HNF pivots.
    pub fn group_order(&self) -> Int {
        self.pivots().into_iter().product()
    }

    fn check_len(&self, z: &[Int]) -> Result<()> {
        if z.len() != self.n() {
            return Err(Error::Dimension(format!(
                "vector has length {}, expected {}",
                z.len(),
                self.n()
            )));
        }
        Ok(())
    }

    /// Whether `z - z'` lies in `im_Z(𝐃ᵀ)`, decided by solving
    /// `𝐃ᵀ x = z - z'` over the rationals and testing integrality.
    pub fn equivalent(&self, z: &[Int], z2: &[Int]) -> Result<bool> {
        self.check_len(z)?;
        self.check_len(z2)?;
        let diff: Vec<Int> = z.iter().zip(z2).map(|(a, b)| a - b).collect();
        let x = linalg::solve(&self.full_t, &linalg::to_rationals(&diff))?;
        Ok(x.iter().all(|c| c.is_integer()))
    }

    pub fn canonical(&self, z: &[Int]) -> Result<SandpileClass> {
        self.check_len(z)?;
        let mut v = z.to_vec();
        self.reduce_in_place(&mut v);
        Ok(SandpileClass(v))
    }

    pub(crate) fn reduce_in_place(&self, v: &mut [Int]) {
        for i in 0..v.len() {
            let pivot = &self.hnf[(i, i)];
            let q = v[i].div_floor(pivot);
            if q.is_zero() {
                continue;
            }
            for (j, x) in v.iter_mut().enumerate().skip(i) {
                *x -= &q * &self.hnf[(i, j)];
            }
        }
    }

    /// Every class, as residues in lexicographic order over the HNF box.
    pub fn enumerate_classes(&self, budget: u64) -> Result<Vec<SandpileClass>> {
        let order = self.group_order();
        if order.to_u64().is_none_or(|o| o > budget) {
            return Err(Error::Budget {
                requested: order.to_string(),
                budget,
            });
        }
        let pivots = self.pivots();
        let mut out = Vec::with_capacity(order.to_usize().unwrap_or(0));
        let mut cur = vec![Int::zero(); self.n()];
        loop {
            out.push(SandpileClass(cur.clone()));
            // odometer increment, last coordinate fastest
            let mut i = self.n();
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                cur[i] += Int::one();
                if cur[i] < pivots[i] {
                    break;
                }
                cur[i] = Int::zero();
            }
        }
    }
}

pub fn group_order(l: &SandpileLattice) -> Int {
    l.group_order()
}
