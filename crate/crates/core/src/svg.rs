//! Plane drawings of two-dimensional tiles.
//!
//! Three tiles can be drawn when they live in `ℝ²`: `T(D)` itself when
//! `n = 2`, `T′(D)` when `r = 2` and `T″(D)` when `n − r = 2`. Each piece is
//! one polygon filled by the rank of its basis. With `grid` set, the nine
//! translates by `{-1, 0, 1}²` combinations of the translation lattice are
//! drawn too.

use std::fmt::Write as _;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Int, IntMatrix};
use crate::lower::{build_lower_tile, LowerKind};
use crate::srm::{enumerate_bases, Basis, StandardRepMatrix};
use crate::tiling::{p_full, ShiftingVector};

/// Pixels per lattice unit.
pub const SCALE: i64 = 40;
const MARGIN: i64 = 20;

const PALETTE: [&str; 10] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
    "#9c755f", "#bab0ac",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TileKind {
    Full,
    Prime,
    DoublePrime,
}

impl FromStr for TileKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(TileKind::Full),
            other => Ok(match other.parse::<LowerKind>()? {
                LowerKind::Prime => TileKind::Prime,
                LowerKind::DoublePrime => TileKind::DoublePrime,
            }),
        }
    }
}

/// A quadrilateral piece, vertices in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    pub basis: Basis,
    /// Lattice coefficients of the grid translate, `(0, 0)` for the tile itself.
    pub translate: Vec<Int>,
    pub source: Vec<Int>,
    pub vertices: Vec<Vec<Int>>,
}

impl Polygon {
    /// Twice the signed shoelace area is an integer; this is its half, exact
    /// because every piece is a lattice parallelogram.
    pub fn area(&self) -> Int {
        let v = &self.vertices;
        let twice: Int = (0..v.len())
            .map(|i| {
                let (a, b) = (&v[i], &v[(i + 1) % v.len()]);
                &a[0] * &b[1] - &a[1] * &b[0]
            })
            .sum();
        (twice / Int::from(2)).abs()
    }
}

fn cyclic(mut mask_order: Vec<Vec<Int>>) -> Vec<Vec<Int>> {
    // mask order is 0, g1, g2, g1+g2
    mask_order.swap(2, 3);
    mask_order
}

/// The polygons of the requested tile, sorted by basis, then translate,
/// then source point.
pub fn tile_polygons(
    d: &StandardRepMatrix,
    shifting: &ShiftingVector,
    kind: TileKind,
    grid: bool,
) -> Result<Vec<Polygon>> {
    let (pieces, lattice): (Vec<(Basis, Vec<Int>, Vec<Vec<Int>>)>, IntMatrix) = match kind {
        TileKind::Full => {
            if d.n() != 2 {
                return Err(Error::UnsupportedDimension(format!(
                    "T(D) lives in dimension {}, only 2 can be drawn",
                    d.n()
                )));
            }
            let pieces = enumerate_bases(d)
                .bases()
                .map(|b| Ok((b.clone(), Vec::new(), cyclic(p_full(d, b)?.vertices()))))
                .collect::<Result<_>>()?;
            (pieces, d.full_matrix().transpose())
        }
        TileKind::Prime | TileKind::DoublePrime => {
            let lower = if kind == TileKind::Prime {
                LowerKind::Prime
            } else {
                LowerKind::DoublePrime
            };
            let dim = if lower == LowerKind::Prime { d.r() } else { d.corank() };
            if dim != 2 {
                return Err(Error::UnsupportedDimension(format!(
                    "the {lower} tile lives in dimension {dim}, only 2 can be drawn"
                )));
            }
            let tile = build_lower_tile(d, shifting, lower)?;
            let pieces = tile
                .pieces()
                .iter()
                .map(|p| (p.basis.clone(), p.source.clone(), cyclic(p.region.vertices())))
                .collect();
            (pieces, tile.translation_lattice().clone())
        }
    };

    let translates: Vec<Vec<Int>> = if grid {
        (-1i64..=1)
            .cartesian_product(-1i64..=1)
            .map(|(a, b)| vec![Int::from(a), Int::from(b)])
            .collect()
    } else {
        vec![vec![Int::zero(), Int::zero()]]
    };
    let mut out = Vec::with_capacity(pieces.len() * translates.len());
    for (basis, source, verts) in &pieces {
        for z in &translates {
            let offset = lattice.mul_vec(z)?;
            let vertices = verts
                .iter()
                .map(|v| v.iter().zip(&offset).map(|(a, b)| a + b).collect())
                .collect();
            out.push(Polygon {
                basis: basis.clone(),
                translate: z.clone(),
                source: source.clone(),
                vertices,
            });
        }
    }
    out.sort_by(|a, b| {
        (&a.basis, &a.translate, &a.source).cmp(&(&b.basis, &b.translate, &b.source))
    });
    Ok(out)
}

/// Draws polygons with `y` pointing up. Colors follow the position of each
/// basis in `bases`.
pub fn render(polygons: &[Polygon], bases: &[Basis]) -> String {
    let px = |v: &[Int]| (&v[0] * SCALE, -&v[1] * SCALE);
    let all: Vec<(Int, Int)> = polygons.iter().flat_map(|p| p.vertices.iter().map(|v| px(v))).collect();
    let (min_x, max_x, min_y, max_y) = if all.is_empty() {
        (Int::zero(), Int::zero(), Int::zero(), Int::zero())
    } else {
        (
            all.iter().map(|p| &p.0).min().unwrap().clone(),
            all.iter().map(|p| &p.0).max().unwrap().clone(),
            all.iter().map(|p| &p.1).min().unwrap().clone(),
            all.iter().map(|p| &p.1).max().unwrap().clone(),
        )
    };
    let x0 = &min_x - MARGIN;
    let y0 = &min_y - MARGIN;
    let w = &max_x - &min_x + 2 * MARGIN;
    let h = &max_y - &min_y + 2 * MARGIN;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0} {y0} {w} {h}" width="{w}" height="{h}">"#
    )
    .unwrap();
    for p in polygons {
        let rank = bases.iter().position(|b| *b == p.basis).unwrap_or(0);
        let color = PALETTE[rank % PALETTE.len()];
        let points = p
            .vertices
            .iter()
            .map(|v| {
                let (x, y) = px(v);
                format!("{x},{y}")
            })
            .join(" ");
        let opacity = if p.translate.iter().all(Zero::is_zero) { "0.85" } else { "0.35" };
        writeln!(
            s,
            r##"  <polygon points="{points}" fill="{color}" fill-opacity="{opacity}" stroke="#222222" stroke-width="1"><title>{} at ({})</title></polygon>"##,
            p.basis,
            p.translate.iter().join(",")
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

pub fn tile_svg(
    d: &StandardRepMatrix,
    shifting: &ShiftingVector,
    kind: TileKind,
    grid: bool,
) -> Result<String> {
    let polygons = tile_polygons(d, shifting, kind, grid)?;
    let bases: Vec<Basis> = enumerate_bases(d).bases().cloned().collect();
    Ok(render(&polygons, &bases))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rats;
    use crate::tiling::validate_shifting;

    #[test]
    fn running_prime_tile() {
        let d = StandardRepMatrix::from_m_rows(&[&[3], &[2]]).unwrap();
        let s = validate_shifting(&d, &rats(&[1, 1, 1])).unwrap();
        let polys = tile_polygons(&d, &s, TileKind::Prime, false).unwrap();
        let mut areas: Vec<Int> = polys.iter().map(Polygon::area).collect();
        areas.sort();
        assert_eq!(areas, [1, 2, 2, 3, 3, 3].map(Int::from));
        assert_eq!(tile_polygons(&d, &s, TileKind::Prime, true).unwrap().len(), 54);
        assert!(matches!(
            tile_polygons(&d, &s, TileKind::Full, false),
            Err(Error::UnsupportedDimension(_))
        ));
        assert!(tile_polygons(&d, &s, TileKind::DoublePrime, false).is_err());
    }

    #[test]
    fn full_tile_of_one_by_two() {
        let d = StandardRepMatrix::from_m_rows(&[&[3]]).unwrap();
        let s = validate_shifting(&d, &rats(&[1, 1])).unwrap();
        let polys = tile_polygons(&d, &s, TileKind::Full, false).unwrap();
        assert_eq!(polys.len(), 2);
        assert_eq!(polys[0].area(), Int::from(1));
        assert_eq!(polys[1].area(), Int::from(9));
        let svg = tile_svg(&d, &s, TileKind::Full, true).unwrap();
        assert_eq!(svg.matches("<polygon").count(), 18);
        assert_eq!(svg, tile_svg(&d, &s, TileKind::Full, true).unwrap());
    }

    #[test]
    fn kind_names() {
        assert_eq!("full".parse::<TileKind>().unwrap(), TileKind::Full);
        assert_eq!("double-prime".parse::<TileKind>().unwrap(), TileKind::DoublePrime);
        assert!("cube".parse::<TileKind>().is_err());
    }
}
