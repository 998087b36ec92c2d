//! JSON input formats, exact rational parsing and the report documents the
//! `sandtile` commands print.
//!
//! Integers are written as JSON numbers of arbitrary size. Rationals are
//! written as strings, `"p/q"` or `"p"`. Object keys come out sorted, and
//! every list has a fixed order, so identical input gives identical bytes.

use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use serde_json::{json, Number, Value};

use crate::chambers::{arrangement_of, dual_arrangement_of, shifting_signatures};
use crate::error::{Error, Result};
use crate::graph::{count_spanning_trees, Graph, GraphSpec, TreeData};
use crate::linalg::{Int, IntMatrix, Rat};
use crate::lower::{project_first, project_last, LowerKind, LowerTile};
use crate::sandpile::SandpileLattice;
use crate::srm::{enumerate_bases, matrix_tree_check, Basis, StandardRepMatrix};
use crate::tiling::{corner_point, Multijection, ShiftingVector};

/// `{"r": 2, "n": 3, "M": [[3], [2]]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixSpec {
    pub r: usize,
    pub n: usize,
    #[serde(rename = "M")]
    pub m: Vec<Vec<Number>>,
}

impl MatrixSpec {
    pub fn build(&self) -> Result<StandardRepMatrix> {
        let k = self.n.checked_sub(self.r).ok_or_else(|| {
            Error::Dimension(format!("n = {} is smaller than r = {}", self.n, self.r))
        })?;
        // with n = r the empty M may be written as [] or as r empty rows
        let rows = if k == 0 && self.m.is_empty() {
            vec![Vec::new(); self.r]
        } else {
            self.m
                .iter()
                .map(|row| row.iter().map(number_to_int).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?
        };
        if rows.len() != self.r {
            return Err(Error::Dimension(format!(
                "M has {} rows, expected r = {}",
                rows.len(),
                self.r
            )));
        }
        let m = IntMatrix::from_rows(rows, k)?;
        StandardRepMatrix::new(self.r, self.n, m)
    }
}

fn number_to_int(x: &Number) -> Result<Int> {
    BigInt::from_str(&x.to_string())
        .map_err(|_| Error::Parse(format!("matrix entry {x} is not an integer")))
}

pub fn read_matrix(text: &str) -> Result<StandardRepMatrix> {
    serde_json::from_str::<MatrixSpec>(text)?.build()
}

pub fn read_graph(text: &str) -> Result<(Graph, TreeData)> {
    serde_json::from_str::<GraphSpec>(text)?.build()
}

/// Parses `"p/q"`, `"-p/q"` or an integer.
pub fn parse_rational(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("{s:?} is not a rational number"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.sign() == num_bigint::Sign::NoSign {
                return Err(Error::Parse(format!("{s:?} has zero denominator")));
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Comma-separated exact rationals, e.g. `"1,-1/2,3"`.
pub fn parse_shifting(s: &str) -> Result<Vec<Rat>> {
    s.split(',').map(parse_rational).collect()
}

pub fn format_rational(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn int_value(x: &Int) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integers are valid JSON numbers"))
}

pub fn vector_value(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int_value).collect())
}

pub fn points_value(points: &[Vec<Int>]) -> Value {
    Value::Array(points.iter().map(|p| vector_value(p)).collect())
}

pub fn matrix_value(a: &IntMatrix) -> Value {
    Value::Array(a.row_iter().map(vector_value).collect())
}

fn basis_value(b: &Basis) -> Value {
    json!(b.indices())
}

fn rationals_value(v: &[Rat]) -> Value {
    json!(v.iter().map(format_rational).collect::<Vec<_>>())
}

pub fn matrix_spec_value(d: &StandardRepMatrix) -> Value {
    json!({"r": d.r(), "n": d.n(), "M": matrix_value(d.m())})
}

/// Indented JSON with a trailing newline. Arrays holding only scalars, or
/// only arrays of scalars, stay on one line.
pub fn render(v: &Value) -> String {
    let mut s = String::new();
    write_value(&mut s, v, 0);
    s.push('\n');
    s
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| match x {
            Value::Array(inner) => inner.iter().all(|y| !y.is_array() && !y.is_object()),
            Value::Object(_) => false,
            _ => true,
        }),
        Value::Object(_) => false,
        _ => true,
    }
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth + 1);
    match v {
        Value::Array(items) if !items.is_empty() && !is_flat(v) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad);
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(depth));
            out.push(']');
        }
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(depth));
            out.push('}');
        }
        Value::Array(items) => {
            out.push('[');
            for (i, x) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_value(out, x, depth);
            }
            out.push(']');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

/// Bases, multiplicities and the count check `Σ m(B)² = |det 𝐃|`.
pub fn analyze_report(d: &StandardRepMatrix) -> Value {
    let table = enumerate_bases(d);
    let check = matrix_tree_check(d);
    let order = SandpileLattice::new(d).group_order();
    json!({
        "matrix": matrix_spec_value(d),
        "bases": table.iter().map(|(b, m)| json!({
            "basis": basis_value(b),
            "minor": int_value(&d.minor(b)),
            "multiplicity": int_value(m),
        })).collect::<Vec<_>>(),
        "group_order": int_value(&order),
        "sum_of_squares": int_value(&check.sum_squares),
        "det_full": int_value(&check.det_full),
        "matrix_tree_check": check.equal && check.det_full == order,
    })
}

fn fiber_entries<'a>(items: impl Iterator<Item = (&'a Basis, &'a Int, Vec<Vec<Int>>)>) -> Value {
    Value::Array(
        items
            .map(|(b, m, points)| {
                json!({
                    "basis": basis_value(b),
                    "multiplicity": int_value(&m.abs()),
                    "points": points_value(&points),
                })
            })
            .collect(),
    )
}

/// `{"shifting", "fibers": [{"basis", "multiplicity", "points"}], "group_order"}`
pub fn fiber_report(f: &Multijection) -> Value {
    json!({
        "shifting": rationals_value(&f.shifting().full()),
        "fibers": fiber_entries(f.fibers().iter().map(|x| (&x.basis, &x.multiplicity, x.points.clone()))),
        "group_order": int_value(&f.group_order()),
    })
}

/// The fiber report with every point replaced by its projection
/// `(z + Mẑ, 0)` or `(0, ẑ − Mᵀz)`.
pub fn projected_fiber_report(
    d: &StandardRepMatrix,
    f: &Multijection,
    kind: LowerKind,
) -> Result<Value> {
    let project = |z: &Vec<Int>| match kind {
        LowerKind::Prime => project_first(d, z),
        LowerKind::DoublePrime => project_last(d, z),
    };
    let mut fibers = Vec::new();
    for x in f.fibers() {
        let mut pts = x.points.iter().map(project).collect::<Result<Vec<_>>>()?;
        pts.sort();
        fibers.push((&x.basis, &x.multiplicity, pts));
    }
    Ok(json!({
        "shifting": rationals_value(&f.shifting().full()),
        "projection": kind.to_string(),
        "fibers": fiber_entries(fibers.into_iter()),
        "group_order": int_value(&f.group_order()),
    }))
}

/// Pieces of `T′` or `T″` with their vertices, and the integer points they
/// pick out, zero-padded to `Zⁿ`.
pub fn lower_report(
    d: &StandardRepMatrix,
    tile: &LowerTile,
    shifting: &ShiftingVector,
) -> Result<Value> {
    let reps = crate::lower::lower_representatives(tile, shifting)?;
    let table = enumerate_bases(d);
    let pieces: Vec<Value> = tile
        .pieces()
        .iter()
        .map(|p| {
            json!({
                "basis": basis_value(&p.basis),
                "source": vector_value(&p.source),
                "anchor": vector_value(p.region.anchor()),
                "vertices": points_value(&p.region.vertices()),
                "volume": int_value(&p.region.volume()),
            })
        })
        .collect();
    let fibers = fiber_entries(reps.iter().map(|(b, pts)| {
        (b, table.multiplicity(b).expect("piece bases are bases"), pts.clone())
    }));
    Ok(json!({
        "kind": tile.kind().to_string(),
        "shifting": rationals_value(&shifting.full()),
        "translation_lattice": matrix_value(tile.translation_lattice()),
        "pieces": pieces,
        "fibers": fibers,
    }))
}

/// Chamber signatures of two shifting vectors and whether they agree.
pub fn chambers_report(d: &StandardRepMatrix, a: &[Rat], b: &[Rat]) -> Result<Value> {
    let (sa, sa_hat) = shifting_signatures(d, a)?;
    let (sb, sb_hat) = shifting_signatures(d, b)?;
    let normals = |h: crate::chambers::CentralArrangement| {
        Value::Array(h.normals().iter().map(|v| vector_value(v)).collect())
    };
    Ok(json!({
        "arrangement": normals(arrangement_of(d)),
        "dual_arrangement": normals(dual_arrangement_of(d)),
        "signatures": [
            {"shifting": rationals_value(a), "w": sa.to_string(), "w_hat": sa_hat.to_string()},
            {"shifting": rationals_value(b), "w": sb.to_string(), "w_hat": sb_hat.to_string()},
        ],
        "equivalent": sa == sb && sa_hat == sb_hat,
    }))
}

/// The 𝔴-associated corner of every `P(B)` and its `{0,1}ⁿ` form.
pub fn corners_report(d: &StandardRepMatrix, shifting: &ShiftingVector) -> Result<Value> {
    let lattice = SandpileLattice::new(d);
    let mut corners = Vec::new();
    for b in enumerate_bases(d).bases() {
        let c = corner_point(d, b, shifting)?;
        corners.push(json!({
            "basis": basis_value(b),
            "point": vector_value(&c.point),
            "zero_one": vector_value(&c.zero_one),
            "equivalent": lattice.equivalent(&c.point, &c.zero_one)?,
        }));
    }
    Ok(json!({
        "shifting": rationals_value(&shifting.full()),
        "corners": corners,
    }))
}

/// The matrix of a graph, its column order and, optionally, the bijection
/// between sandpile classes and spanning trees.
pub fn graph_report(g: &Graph, t: &TreeData, bijection: Option<&Multijection>) -> Result<Value> {
    let d = crate::graph::graph_to_srm(g, t)?;
    let edges_in_order: Vec<Value> = t
        .permutation()
        .iter()
        .map(|&e| {
            let (a, b) = g.edges()[e];
            json!({"edge": e + 1, "tail": a + 1, "head": b + 1})
        })
        .collect();
    let trees = match count_spanning_trees(g) {
        Ok(c) => int_value(&c),
        Err(Error::Budget { .. }) => Value::Null,
        Err(e) => return Err(e),
    };
    let mut out = json!({
        "matrix": matrix_spec_value(&d),
        "D": matrix_value(&d.d()),
        "tree": t.tree_edges().iter().map(|e| e + 1).collect::<Vec<_>>(),
        "columns": edges_in_order,
        "group_order": int_value(&SandpileLattice::new(&d).group_order()),
        "spanning_trees": trees,
    });
    if let Some(f) = bijection {
        // column k of D is edge permutation[k]; report trees in input numbering
        let trees: Vec<Value> = f
            .fibers()
            .iter()
            .map(|x| {
                let edges = x
                    .basis
                    .indices()
                    .iter()
                    .map(|&k| t.permutation()[k - 1] + 1)
                    .sorted()
                    .collect::<Vec<_>>();
                json!({"tree_edges": edges, "basis": basis_value(&x.basis), "points": points_value(&x.points)})
            })
            .collect();
        out["bijection"] = json!({
            "shifting": rationals_value(&f.shifting().full()),
            "trees": trees,
        });
    }
    Ok(out)
}
