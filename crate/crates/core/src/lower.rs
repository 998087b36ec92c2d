//! Lower-dimensional tiles `T′(D) ⊂ ℝʳ` and `T″(D) ⊂ ℝⁿ⁻ʳ`.
//!
//! Every class of `S(D)` has a representative whose last `n - r` entries are
//! zero (and one whose first `r` are zero). Projecting the 𝔴-representatives
//! this way yields tiles assembled from translated copies of `P₁(B)` (resp.
//! `P₂(B)`), with the same multijection.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Int, IntMatrix};
use crate::srm::{enumerate_bases, Basis, StandardRepMatrix};
use crate::tiling::{p1, p1_associated, p2, p2_associated, OrientedParallelepiped, ShiftingVector};

fn split<'a>(d: &StandardRepMatrix, z: &'a [Int]) -> Result<(&'a [Int], &'a [Int])> {
    if z.len() != d.n() {
        return Err(Error::Dimension(format!(
            "vector has length {}, expected {}",
            z.len(),
            d.n()
        )));
    }
    Ok(z.split_at(d.r()))
}

/// `(z + M ẑ, 0)`: the equivalent vector supported on the first `r` entries.
pub fn project_first(d: &StandardRepMatrix, z: &[Int]) -> Result<Vec<Int>> {
    let (head, tail) = split(d, z)?;
    let shift = d.m().mul_vec(tail)?;
    let mut out: Vec<Int> = head.iter().zip(&shift).map(|(a, b)| a + b).collect();
    out.resize(d.n(), Int::zero());
    Ok(out)
}

/// `(0, ẑ − Mᵀ z)`: the equivalent vector supported on the last `n - r` entries.
pub fn project_last(d: &StandardRepMatrix, z: &[Int]) -> Result<Vec<Int>> {
    let (head, tail) = split(d, z)?;
    let shift = d.m().transpose().mul_vec(head)?;
    let mut out = vec![Int::zero(); d.r()];
    out.extend(tail.iter().zip(&shift).map(|(a, b)| a - b));
    Ok(out)
}

/// `D D̂ᵀ`-style Gram matrix `A Aᵀ`.
pub fn gram(a: &IntMatrix) -> IntMatrix {
    a.mul(&a.transpose()).expect("A times its transpose")
}

/// `(𝐃′, 𝐃″)`, two further integral bases of the sandpile lattice:
/// `𝐃′ = (I M / 0 D̂D̂ᵀ)` and `𝐃″ = (DDᵀ 0 / −Mᵀ I)`.
pub fn alt_bases(d: &StandardRepMatrix) -> (IntMatrix, IntMatrix) {
    let (r, k) = (d.r(), d.corank());
    let top = d.d();
    let bottom = IntMatrix::zeros(k, r)
        .hstack(&gram(&d.dual_matrix()))
        .expect("n - r rows");
    let prime = top.vstack(&bottom).expect("n columns");
    let top = gram(&d.d()).hstack(&IntMatrix::zeros(r, k)).expect("r rows");
    let double = top.vstack(&d.dual_matrix()).expect("n columns");
    (prime, double)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LowerKind {
    /// `T′(D) ⊂ ℝʳ`
    Prime,
    /// `T″(D) ⊂ ℝⁿ⁻ʳ`
    DoublePrime,
}

impl fmt::Display for LowerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LowerKind::Prime => "prime",
            LowerKind::DoublePrime => "double-prime",
        })
    }
}

impl FromStr for LowerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prime" | "first" => Ok(LowerKind::Prime),
            "double-prime" | "doubleprime" | "last" => Ok(LowerKind::DoublePrime),
            _ => Err(Error::Parse(format!("unknown tile kind {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerPiece {
    pub basis: Basis,
    /// The associated integer point whose image translates this piece.
    pub source: Vec<Int>,
    /// The translated closed parallelepiped.
    pub region: OrientedParallelepiped,
}

#[derive(Clone, Debug)]
pub struct LowerTile {
    kind: LowerKind,
    pieces: Vec<LowerPiece>,
    translation_lattice: IntMatrix,
    n: usize,
}

impl LowerTile {
    pub fn kind(&self) -> LowerKind {
        self.kind
    }

    /// Pieces ordered by basis, then by translate.
    pub fn pieces(&self) -> &[LowerPiece] {
        &self.pieces
    }

    /// `DDᵀ` for `T′`, `D̂D̂ᵀ` for `T″`; its columns generate the translates
    /// that tile the ambient space.
    pub fn translation_lattice(&self) -> &IntMatrix {
        &self.translation_lattice
    }

    pub fn dim(&self) -> usize {
        self.translation_lattice.rows()
    }
}

/// Assembles `T′(D)` (depends on `ŵ` only) or `T″(D)` (depends on `w` only).
pub fn build_lower_tile(
    d: &StandardRepMatrix,
    shifting: &ShiftingVector,
    kind: LowerKind,
) -> Result<LowerTile> {
    let table = enumerate_bases(d);
    let mut pieces = Vec::new();
    let m_t = d.m().transpose();
    for b in table.bases() {
        match kind {
            LowerKind::Prime => {
                let base = p1(d, b)?;
                let sources = if d.corank() == 0 {
                    vec![Vec::new()]
                } else {
                    p2_associated(d, b, shifting.w_hat())?
                };
                for src in sources {
                    let offset = d.m().mul_vec(&src)?;
                    pieces.push(LowerPiece {
                        basis: b.clone(),
                        region: base.translated(&offset),
                        source: src,
                    });
                }
            }
            LowerKind::DoublePrime => {
                let base = p2(d, b)?;
                for src in p1_associated(d, b, shifting.w())? {
                    let offset: Vec<Int> = m_t.mul_vec(&src)?.into_iter().map(|x| -x).collect();
                    pieces.push(LowerPiece {
                        basis: b.clone(),
                        region: base.translated(&offset),
                        source: src,
                    });
                }
            }
        }
    }
    pieces.sort_by(|a, b| (&a.basis, &a.source).cmp(&(&b.basis, &b.source)));
    let translation_lattice = match kind {
        LowerKind::Prime => gram(&d.d()),
        LowerKind::DoublePrime => gram(&d.dual_matrix()),
    };
    Ok(LowerTile {
        kind,
        pieces,
        translation_lattice,
        n: d.n(),
    })
}

/// Integer points that shift into a piece of the tile, grouped by basis and
/// zero-padded to `Zⁿ` (suffix zeros for `T′`, prefix zeros for `T″`).
pub fn lower_representatives(
    tile: &LowerTile,
    shifting: &ShiftingVector,
) -> Result<BTreeMap<Basis, Vec<Vec<Int>>>> {
    let direction = match tile.kind {
        LowerKind::Prime => shifting.w(),
        LowerKind::DoublePrime => shifting.w_hat(),
    };
    let mut out: BTreeMap<Basis, Vec<Vec<Int>>> = BTreeMap::new();
    for piece in &tile.pieces {
        let pts = if piece.region.dim() == 0 {
            vec![Vec::new()]
        } else {
            piece.region.orient(direction)?.integer_points()
        };
        let entry = out.entry(piece.basis.clone()).or_default();
        for p in pts {
            let padded = match tile.kind {
                LowerKind::Prime => {
                    let mut v = p;
                    v.resize(tile.n, Int::zero());
                    v
                }
                LowerKind::DoublePrime => {
                    let mut v = vec![Int::zero(); tile.n - p.len()];
                    v.extend(p);
                    v
                }
            };
            entry.push(padded);
        }
    }
    for pts in out.values_mut() {
        pts.sort();
    }
    Ok(out)
}
