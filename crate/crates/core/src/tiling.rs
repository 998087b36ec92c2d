//! Parallelepipeds `P₁(B)`, `P₂(B)`, `P(B)`, the tile `T(D)`, shifting
//! vectors and the sandpile-to-basis multijection `f_𝔴`.
//!
//! A point `z` is 𝔴-associated with `B` when `z + ε𝔴 ∈ P(B)` for every small
//! `ε > 0`. Writing `𝔴 = Σ bᵢ gᵢ` in the generators of a parallelepiped, this
//! happens exactly when each coefficient `aᵢ` of `z` lies in `[0, 1)` for
//! `bᵢ > 0` and in `(0, 1]` for `bᵢ < 0`. No ε is ever computed: orientation
//! is a per-generator sign.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Int, IntMatrix, Rat, RatMatrix};
use crate::sandpile::{SandpileClass, SandpileLattice};
use crate::srm::{enumerate_bases, Basis, BasisTable, StandardRepMatrix};

/// Allowed coefficient range for one generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bound {
    /// `[0, 1]`
    Closed,
    /// `[0, 1)`
    ClosedBelow,
    /// `(0, 1]`
    ClosedAbove,
}

impl Bound {
    fn admits(self, a: &Rat) -> bool {
        let zero = Rat::zero();
        let one = Rat::one();
        match self {
            Bound::Closed => *a >= zero && *a <= one,
            Bound::ClosedBelow => *a >= zero && *a < one,
            Bound::ClosedAbove => *a > zero && *a <= one,
        }
    }

    /// Same test on `num / den` with `den > 0`.
    fn admits_ratio(self, num: &Int, den: &Int) -> bool {
        match self {
            Bound::Closed => !num.is_negative() && num <= den,
            Bound::ClosedBelow => !num.is_negative() && num < den,
            Bound::ClosedAbove => num.is_positive() && num <= den,
        }
    }
}

/// `anchor + { Σ aᵢ gᵢ : aᵢ in bound i }` for linearly independent integer
/// generators `gᵢ` (the columns of `generators`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedParallelepiped {
    generators: IntMatrix,
    anchor: Vec<Int>,
    bounds: Vec<Bound>,
    det: Int,
    // adj · generators = det · I
    adjugate: IntMatrix,
}

impl OrientedParallelepiped {
    /// Closed parallelepiped spanned by the columns of `generators`.
    pub fn new(generators: IntMatrix, anchor: Vec<Int>) -> Result<Self> {
        if !generators.is_square() || generators.rows() != anchor.len() {
            return Err(Error::Dimension(format!(
                "{}x{} generators with anchor of length {}",
                generators.rows(),
                generators.cols(),
                anchor.len()
            )));
        }
        let k = generators.rows();
        let det = linalg::det(&generators)?;
        if det.is_zero() {
            return Err(Error::Singular);
        }
        let inv = linalg::inverse(&generators.to_rational())?;
        let det_r = Rat::from_integer(det.clone());
        let adjugate = inv.map(|x| (x * &det_r).to_integer());
        Ok(OrientedParallelepiped {
            generators,
            anchor,
            bounds: vec![Bound::Closed; k],
            det,
            adjugate,
        })
    }

    pub fn from_columns(columns: &[Vec<Int>], dim: usize) -> Result<Self> {
        let g = IntMatrix::from_columns(columns, dim)?;
        Self::new(g, vec![Int::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.anchor.len()
    }

    pub fn generators(&self) -> &IntMatrix {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> Vec<Int> {
        self.generators.column(i)
    }

    pub fn anchor(&self) -> &[Int] {
        &self.anchor
    }

    pub fn bounds(&self) -> &[Bound] {
        &self.bounds
    }

    /// Signed determinant of the generator matrix.
    pub fn det(&self) -> &Int {
        &self.det
    }

    pub fn volume(&self) -> Int {
        self.det.abs()
    }

    pub fn is_half_open(&self) -> bool {
        self.bounds.iter().all(|b| *b != Bound::Closed)
    }

    pub fn with_bounds(mut self, bounds: Vec<Bound>) -> Result<Self> {
        if bounds.len() != self.dim() {
            return Err(Error::Dimension("one bound per generator".into()));
        }
        self.bounds = bounds;
        Ok(self)
    }

    pub fn translated(&self, offset: &[Int]) -> Self {
        let mut out = self.clone();
        for (a, o) in out.anchor.iter_mut().zip(offset) {
            *a += o;
        }
        out
    }

    /// Coefficients of `p - anchor` in the generator basis.
    pub fn coefficients(&self, p: &[Rat]) -> Result<Vec<Rat>> {
        self.check_len(p.len())?;
        let diff: Vec<Rat> = p
            .iter()
            .zip(&self.anchor)
            .map(|(x, a)| x - Rat::from_integer(a.clone()))
            .collect();
        let det = Rat::from_integer(self.det.clone());
        Ok(self
            .adjugate
            .to_rational()
            .mul_vec(&diff)?
            .into_iter()
            .map(|x| x / &det)
            .collect())
    }

    /// Coefficients of `direction` itself (not shifted by the anchor).
    pub fn direction_coefficients(&self, direction: &[Rat]) -> Result<Vec<Rat>> {
        self.check_len(direction.len())?;
        linalg::solve(&self.generators.to_rational(), direction)
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.dim() {
            return Err(Error::Dimension(format!(
                "point of length {len} in a {}-dimensional region",
                self.dim()
            )));
        }
        Ok(())
    }

    /// Membership under the current orientation.
    pub fn contains(&self, p: &[Rat]) -> Result<bool> {
        let a = self.coefficients(p)?;
        Ok(a.iter().zip(&self.bounds).all(|(x, b)| b.admits(x)))
    }

    /// Membership in the closure, ignoring orientation.
    pub fn contains_closed(&self, p: &[Rat]) -> Result<bool> {
        let a = self.coefficients(p)?;
        Ok(a.iter().all(|x| Bound::Closed.admits(x)))
    }

    /// Integer-only membership test under the current orientation.
    pub fn contains_integer(&self, p: &[Int]) -> bool {
        debug_assert_eq!(p.len(), self.dim());
        let diff: Vec<Int> = p.iter().zip(&self.anchor).map(|(x, a)| x - a).collect();
        let (sign, den) = if self.det.is_negative() {
            (-Int::one(), -self.det.clone())
        } else {
            (Int::one(), self.det.clone())
        };
        self.adjugate.row_iter().zip(&self.bounds).all(|(row, b)| {
            let num: Int = row.iter().zip(&diff).map(|(x, y)| x * y).sum::<Int>() * &sign;
            b.admits_ratio(&num, &den)
        })
    }

    /// The `2^k` vertices, indexed by subsets of generators (bit `i` set
    /// means generator `i` is included).
    pub fn vertices(&self) -> Vec<Vec<Int>> {
        let k = self.dim();
        let cols: Vec<Vec<Int>> = (0..k).map(|i| self.generator(i)).collect();
        (0..1usize << k)
            .map(|mask| {
                let mut v = self.anchor.clone();
                for (i, c) in cols.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        for (x, y) in v.iter_mut().zip(c) {
                            *x += y;
                        }
                    }
                }
                v
            })
            .collect()
    }

    /// Per-coordinate `(min, max)` over the vertices.
    pub fn bounding_box(&self) -> Vec<(Int, Int)> {
        let verts = self.vertices();
        (0..self.dim())
            .map(|j| {
                let lo = verts.iter().map(|v| &v[j]).min().unwrap().clone();
                let hi = verts.iter().map(|v| &v[j]).max().unwrap().clone();
                (lo, hi)
            })
            .collect()
    }

    /// Sets each bound from the sign of the corresponding coefficient of
    /// `direction`, so that the region holds exactly the points `p` with
    /// `p + ε·direction` in the closed region for all small `ε > 0`.
    pub fn orient(&self, direction: &[Rat]) -> Result<Self> {
        let b = self.direction_coefficients(direction)?;
        let bounds = b
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if c.is_positive() {
                    Ok(Bound::ClosedBelow)
                } else if c.is_negative() {
                    Ok(Bound::ClosedAbove)
                } else {
                    Err(Error::InvalidShifting(format!(
                        "direction has zero coefficient on generator {}",
                        i + 1
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        self.clone().with_bounds(bounds)
    }

    /// All integer points of the region, in lexicographic order.
    ///
    /// For a fully half-open region the count equals `|det|`.
    pub fn integer_points(&self) -> Vec<Vec<Int>> {
        let (lo, hi): (Vec<Int>, Vec<Int>) = self.bounding_box().into_iter().unzip();
        let mut out = Vec::new();
        let mut cur = lo.clone();
        loop {
            if self.contains_integer(&cur) {
                out.push(cur.clone());
            }
            if !step(&mut cur, &lo, &hi) {
                return out;
            }
        }
    }
}

/// `P₁(B)`: the columns of `D` indexed by `B`.
pub fn p1(d: &StandardRepMatrix, b: &Basis) -> Result<OrientedParallelepiped> {
    let g = d.d().select_columns(&b.positions());
    OrientedParallelepiped::new(g, vec![Int::zero(); d.r()])
}

/// `P₂(B)`: the columns of `D̂` outside `B`.
pub fn p2(d: &StandardRepMatrix, b: &Basis) -> Result<OrientedParallelepiped> {
    let g = d.dual_matrix().select_columns(&b.complement_positions(d.n()));
    OrientedParallelepiped::new(g, vec![Int::zero(); d.corank()])
}

/// `P(B) = P₁(B) × P₂(B)`, generated by the columns of `𝐃` with the
/// last `n - r` entries zeroed for `j ∈ B` and the first `r` zeroed otherwise.
pub fn p_full(d: &StandardRepMatrix, b: &Basis) -> Result<OrientedParallelepiped> {
    let full = d.full_matrix();
    let (n, r) = (d.n(), d.r());
    let columns: Vec<Vec<Int>> = (0..n)
        .map(|j| {
            let mut c = full.column(j);
            let keep_top = b.contains(j + 1);
            for (i, x) in c.iter_mut().enumerate() {
                if (i < r) != keep_top {
                    *x = Int::zero();
                }
            }
            c
        })
        .collect();
    OrientedParallelepiped::from_columns(&columns, n)
}

pub fn orient(region: &OrientedParallelepiped, direction: &[Rat]) -> Result<OrientedParallelepiped> {
    region.orient(direction)
}

pub fn integer_points(region: &OrientedParallelepiped) -> Vec<Vec<Int>> {
    region.integer_points()
}

/// A validated shifting vector `𝔴 = (w, ŵ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftingVector {
    w: Vec<Rat>,
    w_hat: Vec<Rat>,
}

impl ShiftingVector {
    pub fn w(&self) -> &[Rat] {
        &self.w
    }

    pub fn w_hat(&self) -> &[Rat] {
        &self.w_hat
    }

    pub fn full(&self) -> Vec<Rat> {
        self.w.iter().chain(&self.w_hat).cloned().collect()
    }
}

/// Accepts `𝔴` when, for every basis, `w` has no zero coefficient in the
/// columns of `P₁(B)` and `ŵ` none in the columns of `P₂(B)`.
pub fn validate_shifting(d: &StandardRepMatrix, shifting: &[Rat]) -> Result<ShiftingVector> {
    validate_with_table(d, &enumerate_bases(d), shifting)
}

pub(crate) fn validate_with_table(
    d: &StandardRepMatrix,
    table: &BasisTable,
    shifting: &[Rat],
) -> Result<ShiftingVector> {
    if shifting.len() != d.n() {
        return Err(Error::Dimension(format!(
            "shifting vector has length {}, expected {}",
            shifting.len(),
            d.n()
        )));
    }
    let (w, w_hat) = shifting.split_at(d.r());
    let dual = d.dual_matrix().to_rational();
    let full = d.d().to_rational();
    for b in table.bases() {
        let pos = b.positions();
        let a = linalg::solve(&full.select_columns(&pos), w)?;
        if let Some(i) = a.iter().position(Zero::is_zero) {
            return Err(Error::InvalidShifting(format!(
                "w lies in the span of a facet of P1({b}): the hyperplane spanned by {b} without column {}",
                pos[i] + 1
            )));
        }
        let comp = b.complement_positions(d.n());
        if comp.is_empty() {
            continue;
        }
        let a = linalg::solve(&dual.select_columns(&comp), w_hat)?;
        if let Some(i) = a.iter().position(Zero::is_zero) {
            return Err(Error::InvalidShifting(format!(
                "w-hat lies in the span of a facet of P2({b}): the hyperplane spanned by the dual columns outside {b} without column {}",
                comp[i] + 1
            )));
        }
    }
    Ok(ShiftingVector {
        w: w.to_vec(),
        w_hat: w_hat.to_vec(),
    })
}

/// Points of `Zʳ` that are `w`-associated with `B`.
pub fn p1_associated(d: &StandardRepMatrix, b: &Basis, w: &[Rat]) -> Result<Vec<Vec<Int>>> {
    Ok(p1(d, b)?.orient(w)?.integer_points())
}

/// Points of `Z^{n-r}` that are `ŵ`-associated with `B`.
pub fn p2_associated(d: &StandardRepMatrix, b: &Basis, w_hat: &[Rat]) -> Result<Vec<Vec<Int>>> {
    Ok(p2(d, b)?.orient(w_hat)?.integer_points())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    pub basis: Basis,
    pub multiplicity: Int,
    /// 𝔴-representatives associated with `basis`, lexicographically sorted.
    pub points: Vec<Vec<Int>>,
}

/// The map `f_𝔴 : S(D) → B(D)` with every class's 𝔴-representative.
#[derive(Clone, Debug)]
pub struct Multijection {
    shifting: ShiftingVector,
    lattice: SandpileLattice,
    fibers: Vec<Fiber>,
    class_index: HashMap<SandpileClass, (usize, usize)>,
}

impl Multijection {
    pub fn shifting(&self) -> &ShiftingVector {
        &self.shifting
    }

    pub fn lattice(&self) -> &SandpileLattice {
        &self.lattice
    }

    pub fn fibers(&self) -> &[Fiber] {
        &self.fibers
    }

    pub fn fiber(&self, b: &Basis) -> Option<&Fiber> {
        self.fibers.iter().find(|f| &f.basis == b)
    }

    pub fn group_order(&self) -> Int {
        self.lattice.group_order()
    }

    pub fn total(&self) -> usize {
        self.class_index.len()
    }

    /// The basis `f_𝔴(z)` and the 𝔴-representative of `z`'s class.
    pub fn apply(&self, z: &[Int]) -> Result<(&Basis, &[Int])> {
        let class = self.lattice.canonical(z)?;
        let &(f, p) = self
            .class_index
            .get(&class)
            .ok_or_else(|| Error::InvariantViolation(format!("no representative for {z:?}")))?;
        let fiber = &self.fibers[f];
        Ok((&fiber.basis, &fiber.points[p]))
    }

    /// `class → basis`, ignoring which representative carries it.
    pub fn class_map(&self) -> HashMap<&SandpileClass, &Basis> {
        self.class_index
            .iter()
            .map(|(c, &(f, _))| (c, &self.fibers[f].basis))
            .collect()
    }
}

/// Materializes every 𝔴-representative and indexes them by class.
pub fn w_representatives(d: &StandardRepMatrix, shifting: &ShiftingVector) -> Result<Multijection> {
    let table = enumerate_bases(d);
    let lattice = SandpileLattice::new(d);
    let mut fibers = Vec::with_capacity(table.len());
    for (b, m) in table.iter() {
        let first = p1_associated(d, b, shifting.w())?;
        let second = if d.corank() == 0 {
            vec![Vec::new()]
        } else {
            p2_associated(d, b, shifting.w_hat())?
        };
        let mut points = Vec::with_capacity(first.len() * second.len());
        for v in &first {
            for v_hat in &second {
                points.push(v.iter().chain(v_hat).cloned().collect::<Vec<Int>>());
            }
        }
        points.sort();
        if Int::from(points.len()) != m * m {
            return Err(Error::InvariantViolation(format!(
                "{b} has {} representatives, expected {}",
                points.len(),
                m * m
            )));
        }
        fibers.push(Fiber {
            basis: b.clone(),
            multiplicity: m.clone(),
            points,
        });
    }
    let mut class_index = HashMap::new();
    for (fi, fiber) in fibers.iter().enumerate() {
        for (pi, p) in fiber.points.iter().enumerate() {
            let class = lattice.canonical(p)?;
            if let Some((f0, p0)) = class_index.insert(class, (fi, pi)) {
                return Err(Error::InvariantViolation(format!(
                    "{:?} and {:?} are equivalent",
                    fibers[f0].points[p0], p
                )));
            }
        }
    }
    if Int::from(class_index.len()) != lattice.group_order() {
        return Err(Error::InvariantViolation(format!(
            "{} representatives for a group of order {}",
            class_index.len(),
            lattice.group_order()
        )));
    }
    Ok(Multijection {
        shifting: shifting.clone(),
        lattice,
        fibers,
        class_index,
    })
}

pub fn apply<'a>(f: &'a Multijection, z: &[Int]) -> Result<(&'a Basis, &'a [Int])> {
    f.apply(z)
}

/// The 𝔴-associated corner of `P(B)` and an equivalent `{0,1}ⁿ` vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerPoint {
    pub point: Vec<Int>,
    pub basis: Basis,
    pub zero_one: Vec<Int>,
}

/// Writes `w = Σ aᵢ cᵢ` over the columns of `P₁(B)` and `ŵ = Σ âⱼ ĉⱼ` over
/// those of `P₂(B)`; the associated corner sums the columns with negative
/// coefficient, and the `{0,1}ⁿ` form marks those same column indices.
pub fn corner_point(d: &StandardRepMatrix, b: &Basis, shifting: &ShiftingVector) -> Result<CornerPoint> {
    let (n, r) = (d.n(), d.r());
    let pos = b.positions();
    let comp = b.complement_positions(n);
    let region1 = p1(d, b)?;
    let a = region1.direction_coefficients(shifting.w())?;
    let mut point = vec![Int::zero(); n];
    let mut zero_one = vec![Int::zero(); n];
    for (i, c) in a.iter().enumerate() {
        if c.is_negative() {
            for (x, g) in point[..r].iter_mut().zip(region1.generator(i)) {
                *x += g;
            }
            zero_one[pos[i]] = Int::one();
        }
    }
    if !comp.is_empty() {
        let region2 = p2(d, b)?;
        let a_hat = region2.direction_coefficients(shifting.w_hat())?;
        for (i, c) in a_hat.iter().enumerate() {
            if c.is_negative() {
                for (x, g) in point[r..].iter_mut().zip(region2.generator(i)) {
                    *x += g;
                }
                zero_one[comp[i]] = Int::one();
            }
        }
    }
    Ok(CornerPoint {
        point,
        basis: b.clone(),
        zero_one,
    })
}

/// All bases whose closed `P(B)` contains `p`.
pub fn tile_membership(d: &StandardRepMatrix, p: &[Rat]) -> Result<Vec<Basis>> {
    if p.len() != d.n() {
        return Err(Error::Dimension(format!(
            "point of length {}, expected {}",
            p.len(),
            d.n()
        )));
    }
    let mut out = Vec::new();
    for b in enumerate_bases(d).bases() {
        if p_full(d, b)?.contains_closed(p)? {
            out.push(b.clone());
        }
    }
    Ok(out)
}

/// Where a point of `ℝⁿ` falls in the periodic tiling by `T(D)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TileLocation {
    /// `z` with `p = local + 𝐃ᵀ z`.
    pub translate: Vec<Int>,
    /// The translated point, inside closed `T(D)`.
    pub local: Vec<Rat>,
    pub bases: Vec<Basis>,
}

/// Advances `cur` through the box `[lo, hi]`, last coordinate fastest.
/// Returns `false` once every point has been visited.
fn step(cur: &mut [Int], lo: &[Int], hi: &[Int]) -> bool {
    for i in (0..cur.len()).rev() {
        cur[i] += 1;
        if cur[i] <= hi[i] {
            return true;
        }
        cur[i] = lo[i].clone();
    }
    false
}

/// Precomputed data for repeated [`locate_in_tile`] queries on one matrix.
///
/// For a piece `P(B)` with generator matrix `G`, the point `p - 𝐃ᵀ z` lies
/// in `P(B)` exactly when `N z ∈ det G · (G⁻¹p - [0,1]ⁿ)`, where
/// `N = adj(G) 𝐃ᵀ` is integral. Solutions are lattice points of `N Zⁿ` in a
/// box, found coordinate by coordinate from a triangular basis of that
/// lattice.
#[derive(Clone, Debug)]
pub struct TileLocator {
    full_t: IntMatrix,
    pieces: Vec<LocatorPiece>,
}

#[derive(Clone, Debug)]
struct LocatorPiece {
    basis: Basis,
    region: OrientedParallelepiped,
    scale: Rat,
    // lower triangular, columns generate N Zⁿ
    tri: IntMatrix,
    n_inv: RatMatrix,
}

impl TileLocator {
    pub fn new(d: &StandardRepMatrix) -> Result<Self> {
        let full_t = d.full_matrix().transpose();
        let cols: Vec<Vec<Int>> = (0..d.n()).map(|j| full_t.column(j)).collect();
        let mut pieces = Vec::new();
        for b in enumerate_bases(d).bases() {
            let region = p_full(d, b)?;
            let g_inv = linalg::inverse(&region.generators().to_rational())?;
            let scale = Rat::from_integer(region.det().clone());
            let n_cols: Vec<Vec<Int>> = cols
                .iter()
                .map(|c| {
                    let v = g_inv.mul_vec(&linalg::to_rationals(c))?;
                    let v: Vec<Rat> = v.iter().map(|x| x * &scale).collect();
                    Ok(linalg::as_integers(&v).expect("adj(G) 𝐃ᵀ is integral"))
                })
                .collect::<Result<_>>()?;
            let n_mat = IntMatrix::from_columns(&n_cols, d.n())?;
            let tri = linalg::hnf_row(&n_mat.transpose()).transpose();
            let n_inv = linalg::inverse(&n_mat.to_rational())?;
            pieces.push(LocatorPiece {
                basis: b.clone(),
                region,
                scale,
                tri,
                n_inv,
            });
        }
        Ok(TileLocator { full_t, pieces })
    }

    /// See [`locate_in_tile`].
    pub fn locate(&self, p: &[Rat]) -> Result<Option<TileLocation>> {
        let n = self.full_t.rows();
        if p.len() != n {
            return Err(Error::Dimension(format!(
                "point of length {}, expected {n}",
                p.len()
            )));
        }
        for piece in &self.pieces {
            let c = piece.region.coefficients(p)?;
            let one = Rat::one();
            let bounds: Vec<(Rat, Rat)> = c
                .iter()
                .map(|ci| {
                    let (a, b) = (&piece.scale * (ci - &one), &piece.scale * ci);
                    if a <= b {
                        (a, b)
                    } else {
                        (b, a)
                    }
                })
                .collect();
            let Some(u) = first_lattice_point(&piece.tri, &bounds) else {
                continue;
            };
            let z = linalg::as_integers(&piece.n_inv.mul_vec(&linalg::to_rationals(&u))?)
                .expect("lattice point has integer preimage");
            let offset = linalg::to_rationals(&self.full_t.mul_vec(&z)?);
            let local: Vec<Rat> = p.iter().zip(&offset).map(|(a, b)| a - b).collect();
            let mut bases = Vec::new();
            for other in &self.pieces {
                if other.region.contains_closed(&local)? {
                    bases.push(other.basis.clone());
                }
            }
            debug_assert!(bases.contains(&piece.basis));
            return Ok(Some(TileLocation {
                translate: z,
                local,
                bases,
            }));
        }
        Ok(None)
    }
}

/// Smallest (lexicographic in basis coordinates) point of the lattice
/// spanned by the columns of lower triangular `tri` inside the box.
fn first_lattice_point(tri: &IntMatrix, bounds: &[(Rat, Rat)]) -> Option<Vec<Int>> {
    fn go(tri: &IntMatrix, bounds: &[(Rat, Rat)], k: &mut Vec<Int>) -> Option<Vec<Int>> {
        let i = k.len();
        let n = bounds.len();
        if i == n {
            return Some((0..n).map(|r| (0..n).map(|j| &tri[(r, j)] * &k[j]).sum()).collect());
        }
        let partial: Int = (0..i).map(|j| &tri[(i, j)] * &k[j]).sum();
        let pivot = Rat::from_integer(tri[(i, i)].clone());
        let partial = Rat::from_integer(partial);
        let lo = ((&bounds[i].0 - &partial) / &pivot).ceil().to_integer();
        let hi = ((&bounds[i].1 - &partial) / &pivot).floor().to_integer();
        let mut x = lo;
        while x <= hi {
            k.push(x.clone());
            if let Some(u) = go(tri, bounds, k) {
                return Some(u);
            }
            k.pop();
            x += 1;
        }
        None
    }
    go(tri, bounds, &mut Vec::with_capacity(bounds.len()))
}

/// Finds an integer translate `z` of `T(D)` whose closure contains `p`,
/// trying bases in order. For many points on one matrix, build a
/// [`TileLocator`] once instead.
pub fn locate_in_tile(d: &StandardRepMatrix, p: &[Rat]) -> Result<Option<TileLocation>> {
    TileLocator::new(d)?.locate(p)
}
