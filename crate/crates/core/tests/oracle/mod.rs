//! Reference arithmetic for the integration tests, written against plain
//! `i128` and `Ratio<i128>` so it shares no code with the library.

#![allow(dead_code)]

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::ToPrimitive;

pub type Q = Ratio<i128>;

pub fn small(v: &[BigInt]) -> Vec<i128> {
    v.iter().map(|x| x.to_i128().expect("fits in i128")).collect()
}

pub fn big(v: &[i128]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Laplace expansion along the first row.
pub fn det(a: &[Vec<i128>]) -> i128 {
    let n = a.len();
    match n {
        0 => 1,
        1 => a[0][0],
        2 => a[0][0] * a[1][1] - a[0][1] * a[1][0],
        _ => (0..n)
            .filter(|&j| a[0][j] != 0)
            .map(|j| {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * a[0][j] * det(&minor(a, 0, j))
            })
            .sum(),
    }
}

pub fn minor(a: &[Vec<i128>], row: usize, col: usize) -> Vec<Vec<i128>> {
    a.iter()
        .enumerate()
        .filter(|&(i, _)| i != row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|&(j, _)| j != col)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}

/// `adj(a)` with `adj(a) · a = det(a) · I`.
pub fn adjugate(a: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = a.len();
    if n == 1 {
        return vec![vec![1]];
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                    sign * det(&minor(a, j, i))
                })
                .collect()
        })
        .collect()
}

pub fn transpose(a: &[Vec<i128>]) -> Vec<Vec<i128>> {
    if a.is_empty() {
        return Vec::new();
    }
    (0..a[0].len()).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

pub fn mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|r| (0..cols).map(|j| (0..inner).map(|k| r[k] * b[k][j]).sum()).collect())
        .collect()
}

pub fn mul_vec(a: &[Vec<i128>], v: &[i128]) -> Vec<i128> {
    a.iter().map(|r| r.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

/// `(D, D̂, 𝐃)` built directly from the rows of `M`.
pub struct Blocks {
    pub r: usize,
    pub n: usize,
    pub d: Vec<Vec<i128>>,
    pub d_hat: Vec<Vec<i128>>,
    pub full: Vec<Vec<i128>>,
}

pub fn blocks(r: usize, n: usize, m: &[Vec<i128>]) -> Blocks {
    let k = n - r;
    let d: Vec<Vec<i128>> = (0..r)
        .map(|i| (0..n).map(|j| if j < r { (i == j) as i128 } else { m[i][j - r] }).collect())
        .collect();
    let d_hat: Vec<Vec<i128>> = (0..k)
        .map(|i| (0..n).map(|j| if j < r { -m[j][i] } else { (j - r == i) as i128 }).collect())
        .collect();
    let full = d.iter().chain(&d_hat).cloned().collect();
    Blocks { r, n, d, d_hat, full }
}

pub fn columns(a: &[Vec<i128>], cols: &[usize]) -> Vec<Vec<i128>> {
    a.iter().map(|r| cols.iter().map(|&j| r[j]).collect()).collect()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `(1-based basis, |minor|)` for every nonzero maximal minor of `a`.
pub fn bases(a: &[Vec<i128>], n: usize) -> Vec<(Vec<usize>, i128)> {
    subsets(n, a.len())
        .into_iter()
        .filter_map(|s| {
            let m = det(&columns(a, &s)).abs();
            (m != 0).then(|| (s.iter().map(|j| j + 1).collect(), m))
        })
        .collect()
}

/// Class invariant in `Zⁿ / im(𝐃ᵀ)`: `z ~ z'` iff `adj(𝐃ᵀ)(z - z') ≡ 0`
/// mod `det 𝐃ᵀ`, so the residue vector is a complete invariant.
pub struct ClassKey {
    adj: Vec<Vec<i128>>,
    modulus: i128,
}

impl ClassKey {
    pub fn new(full: &[Vec<i128>]) -> Self {
        let ft = transpose(full);
        let modulus = det(&ft).abs();
        assert!(modulus > 0);
        ClassKey {
            adj: adjugate(&ft),
            modulus,
        }
    }

    pub fn order(&self) -> i128 {
        self.modulus
    }

    pub fn key(&self, z: &[i128]) -> Vec<i128> {
        mul_vec(&self.adj, z)
            .into_iter()
            .map(|x| x.rem_euclid(self.modulus))
            .collect()
    }

    pub fn equivalent(&self, a: &[i128], b: &[i128]) -> bool {
        self.key(a) == self.key(b)
    }

    pub fn distinct(&self, points: &[Vec<i128>]) -> usize {
        points.iter().map(|p| self.key(p)).collect::<HashSet<_>>().len()
    }
}

/// Which half-open or closed coefficient range a generator gets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Closed,
    Below,
    Above,
}

impl Side {
    fn admits(self, a: Q) -> bool {
        let (zero, one) = (Q::from_integer(0), Q::from_integer(1));
        match self {
            Side::Closed => a >= zero && a <= one,
            Side::Below => a >= zero && a < one,
            Side::Above => a > zero && a <= one,
        }
    }
}

/// Coefficients of `p - anchor` in the columns of `gens`, by Cramer's rule.
pub fn coefficients(gens: &[Vec<i128>], anchor: &[i128], p: &[Q]) -> Vec<Q> {
    let dim = gens.len();
    let diff: Vec<Q> = p.iter().zip(anchor).map(|(x, &a)| x - Q::from_integer(a)).collect();
    let den = det(gens);
    (0..dim)
        .map(|i| {
            // replace column i by diff; expand along that column
            let mut acc = Q::from_integer(0);
            for (row, dv) in diff.iter().enumerate() {
                let sign = if (row + i) % 2 == 0 { 1 } else { -1 };
                acc += dv * Q::from_integer(sign * det(&minor(gens, row, i)));
            }
            acc / Q::from_integer(den)
        })
        .collect()
}

pub fn contains(gens: &[Vec<i128>], anchor: &[i128], sides: &[Side], p: &[Q]) -> bool {
    coefficients(gens, anchor, p)
        .into_iter()
        .zip(sides)
        .all(|(a, s)| s.admits(a))
}

/// Integer points by scanning the vertex bounding box.
pub fn box_scan(gens: &[Vec<i128>], anchor: &[i128], sides: &[Side]) -> Vec<Vec<i128>> {
    let dim = gens.len();
    let mut lo = anchor.to_vec();
    let mut hi = anchor.to_vec();
    for mask in 0..1usize << dim {
        let v: Vec<i128> = (0..dim)
            .map(|row| anchor[row] + (0..dim).filter(|&j| mask >> j & 1 == 1).map(|j| gens[row][j]).sum::<i128>())
            .collect();
        for j in 0..dim {
            lo[j] = lo[j].min(v[j]);
            hi[j] = hi[j].max(v[j]);
        }
    }
    let mut out = Vec::new();
    let mut cur = lo.clone();
    if dim == 0 {
        return vec![Vec::new()];
    }
    loop {
        let q: Vec<Q> = cur.iter().map(|&x| Q::from_integer(x)).collect();
        if contains(gens, anchor, sides, &q) {
            out.push(cur.clone());
        }
        let mut i = dim;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] <= hi[i] {
                break;
            }
            cur[i] = lo[i];
        }
    }
}

/// Brute-force spanning tree count by union-find over all `(v-1)`-subsets.
pub fn spanning_trees(vertices: usize, edges: &[(usize, usize)]) -> usize {
    subsets(edges.len(), vertices - 1)
        .into_iter()
        .filter(|s| {
            let mut parent: Vec<usize> = (0..vertices).collect();
            fn root(p: &mut Vec<usize>, mut v: usize) -> usize {
                while p[v] != v {
                    v = p[v];
                }
                v
            }
            s.iter().all(|&e| {
                let (a, b) = (root(&mut parent, edges[e].0), root(&mut parent, edges[e].1));
                parent[a] = b;
                a != b
            })
        })
        .count()
}
