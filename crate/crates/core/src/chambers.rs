//! Central hyperplane arrangements `H(D)`, `H(D̂)` and chamber signatures.
//!
//! Two shifting vectors are equivalent when their `w` parts sit in the same
//! chamber of `H(D)` and their `ŵ` parts in the same chamber of `H(D̂)`;
//! equivalent vectors produce identical 𝔴-representatives.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, Int, IntMatrix, Rat};
use crate::srm::StandardRepMatrix;

/// Primitive integer normals, one per hyperplane, first nonzero entry
/// positive, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralArrangement {
    ambient_dim: usize,
    normals: Vec<Vec<Int>>,
}

impl CentralArrangement {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn normals(&self) -> &[Vec<Int>] {
        &self.normals
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ChamberSignature(pub Vec<Sign>);

impl fmt::Display for ChamberSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Sign::Plus => "+",
                Sign::Minus => "-",
            })?;
        }
        Ok(())
    }
}

fn canonical_normal(mut v: Vec<Int>) -> Vec<Int> {
    let g = linalg::content(&v);
    for x in v.iter_mut() {
        *x /= &g;
    }
    if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in v.iter_mut() {
            *x = -&*x;
        }
    }
    v
}

/// Normal of the hyperplane spanned by `k - 1` independent vectors in `ℝᵏ`,
/// by cofactor expansion along a phantom first row.
fn cofactor_normal(span: &[Vec<Int>], k: usize) -> Vec<Int> {
    let a = IntMatrix::from_rows(span.to_vec(), k).expect("k entries per vector");
    (0..k)
        .map(|j| {
            let keep: Vec<usize> = (0..k).filter(|&c| c != j).collect();
            let minor = linalg::det(&a.select_columns(&keep)).expect("square");
            if j % 2 == 0 {
                minor
            } else {
                -minor
            }
        })
        .collect()
}

/// All central hyperplanes spanned by subsets of `columns` of rank `k - 1`.
///
/// In `ℝ¹` the empty set already has rank 0, so the arrangement is the origin.
pub fn arrangement(columns: &[Vec<Int>], k: usize) -> Result<CentralArrangement> {
    if columns.iter().any(|c| c.len() != k) {
        return Err(Error::Dimension(format!("columns must have length {k}")));
    }
    let mut normals = BTreeSet::new();
    match k {
        0 => {}
        1 => {
            normals.insert(vec![Int::from(1)]);
        }
        _ => {
            for subset in (0..columns.len()).combinations(k - 1) {
                let span: Vec<Vec<Int>> = subset.iter().map(|&i| columns[i].clone()).collect();
                let normal = cofactor_normal(&span, k);
                // zero cofactor vector ⇔ the subset is dependent
                if normal.iter().all(Zero::is_zero) {
                    continue;
                }
                normals.insert(canonical_normal(normal));
            }
        }
    }
    Ok(CentralArrangement {
        ambient_dim: k,
        normals: normals.into_iter().collect(),
    })
}

fn columns_of(a: &IntMatrix) -> Vec<Vec<Int>> {
    (0..a.cols()).map(|j| a.column(j)).collect()
}

/// `H(D)` in `ℝʳ`.
pub fn arrangement_of(d: &StandardRepMatrix) -> CentralArrangement {
    arrangement(&columns_of(&d.d()), d.r()).expect("columns have length r")
}

/// `H(D̂)` in `ℝⁿ⁻ʳ`.
pub fn dual_arrangement_of(d: &StandardRepMatrix) -> CentralArrangement {
    arrangement(&columns_of(&d.dual_matrix()), d.corank()).expect("columns have length n - r")
}

pub fn signature(v: &[Rat], a: &CentralArrangement) -> Result<ChamberSignature> {
    if v.len() != a.ambient_dim {
        return Err(Error::Dimension(format!(
            "vector of length {} in {}-dimensional arrangement",
            v.len(),
            a.ambient_dim
        )));
    }
    a.normals
        .iter()
        .map(|normal| {
            let dot: Rat = normal
                .iter()
                .zip(v)
                .map(|(x, y)| Rat::from_integer(x.clone()) * y)
                .sum();
            if dot.is_positive() {
                Ok(Sign::Plus)
            } else if dot.is_negative() {
                Ok(Sign::Minus)
            } else {
                Err(Error::OnHyperplane {
                    vector: format!("({})", v.iter().join(",")),
                    normal: format!("({})", normal.iter().join(",")),
                })
            }
        })
        .collect::<Result<_>>()
        .map(ChamberSignature)
}

/// Signatures of `w` in `H(D)` and `ŵ` in `H(D̂)`.
pub fn shifting_signatures(
    d: &StandardRepMatrix,
    shifting: &[Rat],
) -> Result<(ChamberSignature, ChamberSignature)> {
    if shifting.len() != d.n() {
        return Err(Error::Dimension(format!(
            "shifting vector has length {}, expected {}",
            shifting.len(),
            d.n()
        )));
    }
    let (w, w_hat) = shifting.split_at(d.r());
    let s = signature(w, &arrangement_of(d))
        .map_err(|e| Error::InvalidShifting(format!("w: {e}")))?;
    let s_hat = signature(w_hat, &dual_arrangement_of(d))
        .map_err(|e| Error::InvalidShifting(format!("w-hat: {e}")))?;
    Ok((s, s_hat))
}

pub fn shifting_equivalent(d: &StandardRepMatrix, a: &[Rat], b: &[Rat]) -> Result<bool> {
    Ok(shifting_signatures(d, a)? == shifting_signatures(d, b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{ints, rats};

    fn running() -> StandardRepMatrix {
        StandardRepMatrix::from_m_rows(&[&[3], &[2]]).unwrap()
    }

    #[test]
    fn running_example_arrangements() {
        let d = running();
        let h = arrangement_of(&d);
        assert_eq!(h.normals(), &[ints(&[0, 1]), ints(&[1, 0]), ints(&[2, -3])]);
        let h_hat = dual_arrangement_of(&d);
        assert_eq!(h_hat.normals(), &[ints(&[1])]);
    }

    #[test]
    fn parallel_columns_give_one_hyperplane() {
        let cols = vec![ints(&[1, 2]), ints(&[-2, -4]), ints(&[3, 6])];
        let h = arrangement(&cols, 2).unwrap();
        assert_eq!(h.normals(), &[ints(&[2, -1])]);
    }

    #[test]
    fn three_dimensional_arrangement() {
        // the three coordinate planes, plus x = y from {e3, (1,1,0)}
        let cols = vec![ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[0, 0, 1]), ints(&[1, 1, 0])];
        let h = arrangement(&cols, 3).unwrap();
        assert!(h.normals().contains(&ints(&[1, -1, 0])));
        assert!(h.normals().contains(&ints(&[0, 0, 1])));
        assert_eq!(h.len(), 4);
    }

    #[test]
    fn signatures() {
        let d = running();
        let h = arrangement_of(&d);
        assert_eq!(signature(&rats(&[1, 1]), &h).unwrap().to_string(), "++-");
        assert!(matches!(
            signature(&rats(&[1, 0]), &h),
            Err(Error::OnHyperplane { .. })
        ));
        assert_eq!(
            signature(&rats(&[1]), &dual_arrangement_of(&d)).unwrap().to_string(),
            "+"
        );
    }

    #[test]
    fn equivalence() {
        let d = running();
        let a = rats(&[1, 1, 1]);
        assert!(shifting_equivalent(&d, &a, &a).unwrap());
        assert!(!shifting_equivalent(&d, &a, &rats(&[-1, 2, -2])).unwrap());
        // (2,1) crosses the line spanned by column (3,2)
        assert!(!shifting_equivalent(&d, &a, &rats(&[2, 1, 1])).unwrap());
        assert!(shifting_equivalent(&d, &a, &rats(&[1, 2, 5])).unwrap());
        assert!(matches!(
            shifting_equivalent(&d, &a, &rats(&[1, 0, 1])),
            Err(Error::InvalidShifting(_))
        ));
    }
}
