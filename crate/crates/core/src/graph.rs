//! Standard representative matrices of graphs.
//!
//! Given a connected graph and a spanning tree `T`, the tree edges are moved
//! to the front and each non-tree edge `e` contributes the column of signs of
//! its fundamental circuit. Edge orientations are bookkeeping only.

use std::collections::VecDeque;

use itertools::Itertools;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Int, IntMatrix};
use crate::srm::StandardRepMatrix;

/// Brute-force spanning tree counting refuses more subsets than this.
pub const TREE_COUNT_BUDGET: u64 = 5_000_000;

/// A connected multigraph with oriented edges. Vertices and edges are
/// 0-based here; the JSON form is 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::Graph("graph has no vertices".into()));
        }
        for (i, &(t, h)) in edges.iter().enumerate() {
            if t >= vertex_count || h >= vertex_count {
                return Err(Error::Graph(format!(
                    "edge {} references a vertex outside 1..={vertex_count}",
                    i + 1
                )));
            }
            if t == h {
                return Err(Error::Graph(format!("edge {} is a self-loop", i + 1)));
            }
        }
        let g = Graph {
            vertex_count,
            edges,
        };
        if !g.is_connected() {
            return Err(Error::Graph("graph is not connected".into()));
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Size of every spanning tree.
    pub fn rank(&self) -> usize {
        self.vertex_count - 1
    }

    /// Same graph with every edge pointing from the smaller vertex to the larger.
    pub fn oriented_low_to_high(&self) -> Graph {
        Graph {
            vertex_count: self.vertex_count,
            edges: self
                .edges
                .iter()
                .map(|&(t, h)| (t.min(h), t.max(h)))
                .collect(),
        }
    }

    fn adjacency(&self, allowed: impl Fn(usize) -> bool) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (i, &(t, h)) in self.edges.iter().enumerate() {
            if allowed(i) {
                adj[t].push((h, i));
                adj[h].push((t, i));
            }
        }
        adj
    }

    fn is_connected(&self) -> bool {
        let adj = self.adjacency(|_| true);
        reachable(&adj, 0).iter().all(|&r| r)
    }
}

fn reachable(adj: &[Vec<(usize, usize)>], start: usize) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &(u, _) in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen
}

/// A spanning tree together with the edge order that puts it first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeData {
    tree_edges: Vec<usize>,
    permutation: Vec<usize>,
}

impl TreeData {
    /// Checks that `tree_edges` (0-based, any order) spans `g` without cycles.
    /// Tree edges keep their given order, the rest follow in input order.
    pub fn new(g: &Graph, tree_edges: Vec<usize>) -> Result<Self> {
        if tree_edges.len() != g.rank() {
            return Err(Error::Graph(format!(
                "a spanning tree needs {} edges, got {}",
                g.rank(),
                tree_edges.len()
            )));
        }
        if let Some(&e) = tree_edges.iter().find(|&&e| e >= g.edge_count()) {
            return Err(Error::EdgeDomain {
                edge: e + 1,
                problem: "is not an edge of the graph",
            });
        }
        if tree_edges.iter().duplicates().next().is_some() {
            return Err(Error::Graph("tree edges repeat".into()));
        }
        let adj = g.adjacency(|i| tree_edges.contains(&i));
        // r edges reaching all r + 1 vertices cannot contain a cycle
        if !reachable(&adj, 0).iter().all(|&r| r) {
            return Err(Error::Graph("tree edges do not span the graph".into()));
        }
        let permutation = tree_edges
            .iter()
            .copied()
            .chain((0..g.edge_count()).filter(|e| !tree_edges.contains(e)))
            .collect();
        Ok(TreeData {
            tree_edges,
            permutation,
        })
    }

    pub fn tree_edges(&self) -> &[usize] {
        &self.tree_edges
    }

    /// `permutation[k]` is the original index of the edge in column `k`.
    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn contains(&self, e: usize) -> bool {
        self.tree_edges.contains(&e)
    }
}

/// Breadth-first tree from vertex 0, scanning edges in input order.
pub fn spanning_tree(g: &Graph) -> Result<TreeData> {
    let adj = g.adjacency(|_| true);
    let mut seen = vec![false; g.vertex_count];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut tree = Vec::new();
    while let Some(v) = queue.pop_front() {
        let mut incident = adj[v].clone();
        incident.sort_by_key(|&(_, e)| e);
        for (u, e) in incident {
            if !seen[u] {
                seen[u] = true;
                tree.push(e);
                queue.push_back(u);
            }
        }
    }
    if tree.len() != g.rank() {
        return Err(Error::Graph("graph is not connected".into()));
    }
    tree.sort_unstable();
    TreeData::new(g, tree)
}

/// Tree path from `from` to `to` as `(edge, +1 if traversed tail to head)`.
fn tree_path(g: &Graph, t: &TreeData, from: usize, to: usize) -> Vec<(usize, i64)> {
    let adj = g.adjacency(|i| t.contains(i));
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; g.vertex_count];
    let mut seen = vec![false; g.vertex_count];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(v) = queue.pop_front() {
        for &(u, e) in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                parent[u] = Some((v, e));
                queue.push_back(u);
            }
        }
    }
    let mut path = Vec::new();
    let mut v = to;
    while v != from {
        let (p, e) = parent[v].expect("tree is spanning");
        // stepping p -> v along e
        path.push((e, if g.edges[e] == (p, v) { 1 } else { -1 }));
        v = p;
    }
    path.reverse();
    path
}

/// Signed fundamental circuit of a non-tree edge `e`, oriented along `e`.
/// Returned as `(edge, sign)` pairs with `e` itself first.
pub fn fundamental_circuit(g: &Graph, t: &TreeData, e: usize) -> Result<Vec<(usize, i64)>> {
    if e >= g.edge_count() {
        return Err(Error::EdgeDomain {
            edge: e + 1,
            problem: "is not an edge of the graph",
        });
    }
    if t.contains(e) {
        return Err(Error::EdgeDomain {
            edge: e + 1,
            problem: "lies in the tree, so has no fundamental circuit",
        });
    }
    let (tail, head) = g.edges[e];
    // walk e from tail to head, then return to the tail through the tree
    let mut out = vec![(e, 1)];
    out.extend(tree_path(g, t, head, tail));
    Ok(out)
}

/// Signed fundamental cocircuit of a tree edge `e`: the cut between the two
/// components of `T - e`, with `+1` on edges crossing the same way as `e`.
pub fn fundamental_cocircuit(g: &Graph, t: &TreeData, e: usize) -> Result<Vec<(usize, i64)>> {
    if e >= g.edge_count() {
        return Err(Error::EdgeDomain {
            edge: e + 1,
            problem: "is not an edge of the graph",
        });
    }
    if !t.contains(e) {
        return Err(Error::EdgeDomain {
            edge: e + 1,
            problem: "is not a tree edge, so has no fundamental cocircuit",
        });
    }
    let adj = g.adjacency(|i| i != e && t.contains(i));
    let tail_side = reachable(&adj, g.edges[e].0);
    let mut out = vec![(e, 1)];
    for (i, &(a, b)) in g.edges.iter().enumerate() {
        if i == e || tail_side[a] == tail_side[b] {
            continue;
        }
        out.push((i, if tail_side[a] { 1 } else { -1 }));
    }
    Ok(out)
}

/// The standard representative matrix of `g` with respect to `t`, columns
/// ordered by `t.permutation()`.
pub fn graph_to_srm(g: &Graph, t: &TreeData) -> Result<StandardRepMatrix> {
    let r = g.rank();
    let n = g.edge_count();
    let perm = t.permutation();
    let column_of = |edge: usize| perm.iter().position(|&p| p == edge).expect("permutation");

    let mut m = IntMatrix::zeros(r, n - r).to_rows();
    for (k, &e) in perm.iter().enumerate().skip(r) {
        for (f, sign) in fundamental_circuit(g, t, e)?.into_iter().skip(1) {
            m[column_of(f)][k - r] = Int::from(sign);
        }
    }
    let d = StandardRepMatrix::new(r, n, IntMatrix::from_rows(m, n - r)?)?;

    // D̂ assembled independently from cocircuits must be the dual matrix
    let mut d_hat = IntMatrix::zeros(n - r, n).to_rows();
    for (j, &e) in perm.iter().enumerate().take(r) {
        for (f, sign) in fundamental_cocircuit(g, t, e)?.into_iter().skip(1) {
            d_hat[column_of(f) - r][j] = Int::from(sign);
        }
    }
    for (i, row) in d_hat.iter_mut().enumerate() {
        row[r + i] = Int::from(1);
    }
    let d_hat = IntMatrix::from_rows(d_hat, n)?;
    if d_hat != d.dual_matrix() {
        return Err(Error::InvariantViolation(
            "cocircuit matrix differs from the dual matrix".into(),
        ));
    }
    if !d.d().mul(&d_hat.transpose())?.is_zero() {
        return Err(Error::InvariantViolation("D times D-hat transpose is nonzero".into()));
    }
    Ok(d)
}

/// Counts spanning trees by testing every `r`-subset of edges.
pub fn count_spanning_trees(g: &Graph) -> Result<Int> {
    let r = g.rank();
    let subsets = binomial(g.edge_count() as u64, r as u64);
    if subsets.is_none_or(|s| s > TREE_COUNT_BUDGET) {
        return Err(Error::Budget {
            requested: format!("C({}, {r}) edge subsets", g.edge_count()),
            budget: TREE_COUNT_BUDGET,
        });
    }
    let mut count = Int::zero();
    for subset in (0..g.edge_count()).combinations(r) {
        if is_forest(g.vertex_count, subset.iter().map(|&e| g.edges[e])) {
            count += 1;
        }
    }
    Ok(count)
}

fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

fn is_forest(vertices: usize, edges: impl Iterator<Item = (usize, usize)>) -> bool {
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for (a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

/// JSON form: `{"vertices": 4, "edges": [[1,4],[1,2]], "tree": [1,2,3]}`,
/// all indices 1-based.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpec {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tree: Option<Vec<usize>>,
}

impl GraphSpec {
    /// Validates and converts to 0-based form, choosing the BFS tree when
    /// none is given.
    pub fn build(&self) -> Result<(Graph, TreeData)> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, &[t, h]) in self.edges.iter().enumerate() {
            if t == 0 || h == 0 {
                return Err(Error::Graph(format!("edge {} uses vertex 0; vertices are 1-based", i + 1)));
            }
            edges.push((t - 1, h - 1));
        }
        let g = Graph::new(self.vertices, edges)?;
        let tree = match &self.tree {
            Some(tree) => {
                if tree.contains(&0) {
                    return Err(Error::Graph("tree edge indices are 1-based".into()));
                }
                TreeData::new(&g, tree.iter().map(|e| e - 1).collect())?
            }
            None => spanning_tree(&g)?,
        };
        Ok((g, tree))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::srm::enumerate_bases;

    /// Four vertices, five edges, oriented low to high.
    fn square_graph() -> Graph {
        Graph::new(4, vec![(0, 3), (0, 1), (1, 2), (2, 3), (1, 3)]).unwrap()
    }

    fn cycle(k: usize) -> Graph {
        Graph::new(k, (0..k).map(|i| (i, (i + 1) % k)).collect()).unwrap()
    }

    fn complete(k: usize) -> Graph {
        Graph::new(k, (0..k).tuple_combinations().collect()).unwrap()
    }

    #[test]
    fn square_graph_matrix() {
        let g = square_graph();
        let t = TreeData::new(&g, vec![0, 1, 2]).unwrap();
        let d = graph_to_srm(&g, &t).unwrap();
        let want = IntMatrix::from_i64_rows(&[&[1, 0, 0, -1, -1], &[0, 1, 0, 1, 1], &[0, 0, 1, 1, 0]])
            .unwrap();
        assert_eq!(d.d(), want);
    }

    #[test]
    fn circuits_and_cocircuits() {
        let g = square_graph();
        let t = TreeData::new(&g, vec![0, 1, 2]).unwrap();
        let mut c4 = fundamental_circuit(&g, &t, 3).unwrap();
        c4.sort();
        assert_eq!(c4, vec![(0, -1), (1, 1), (2, 1), (3, 1)]);
        assert!(matches!(
            fundamental_circuit(&g, &t, 0),
            Err(Error::EdgeDomain { edge: 1, .. })
        ));
        // removing e1 isolates v4; e4 and e5 both enter v4 like e1
        let mut k1 = fundamental_cocircuit(&g, &t, 0).unwrap();
        k1.sort();
        assert_eq!(k1, vec![(0, 1), (3, 1), (4, 1)]);
        assert!(fundamental_cocircuit(&g, &t, 4).is_err());
    }

    #[test]
    fn triangle_consistently_oriented() {
        let g = cycle(3);
        let t = TreeData::new(&g, vec![0, 1]).unwrap();
        let c = fundamental_circuit(&g, &t, 2).unwrap();
        assert!(c.iter().all(|&(_, s)| s == 1));
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn star_and_bridge_cocircuits() {
        // star: every edge is a bridge
        let g = Graph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let t = spanning_tree(&g).unwrap();
        assert_eq!(t.tree_edges(), &[0, 1, 2]);
        for e in 0..3 {
            assert_eq!(fundamental_cocircuit(&g, &t, e).unwrap(), vec![(e, 1)]);
        }
        let d = graph_to_srm(&g, &t).unwrap();
        assert_eq!(d.d(), IntMatrix::identity(3));
    }

    #[test]
    fn bfs_tree() {
        let path = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(spanning_tree(&path).unwrap().tree_edges(), &[0, 1]);
        assert_eq!(spanning_tree(&cycle(3)).unwrap().tree_edges().len(), 2);
        let t = spanning_tree(&square_graph()).unwrap();
        // v4 is dequeued before v2, so v3 is reached through e4
        assert_eq!(t.tree_edges(), &[0, 1, 3]);
    }

    #[test]
    fn tree_counts() {
        assert_eq!(count_spanning_trees(&cycle(3)).unwrap(), Int::from(3));
        assert_eq!(count_spanning_trees(&square_graph()).unwrap(), Int::from(8));
        assert_eq!(count_spanning_trees(&complete(4)).unwrap(), Int::from(16));
        assert_eq!(count_spanning_trees(&complete(5)).unwrap(), Int::from(125));
    }

    #[test]
    fn multiplicities_are_one_and_order_is_tree_count() {
        for g in [square_graph(), complete(4), cycle(5)] {
            let t = spanning_tree(&g).unwrap();
            let d = graph_to_srm(&g, &t).unwrap();
            let table = enumerate_bases(&d);
            assert!(table.iter().all(|(_, m)| *m == Int::from(1)));
            let trees = count_spanning_trees(&g).unwrap();
            assert_eq!(Int::from(table.len()), trees);
            assert_eq!(crate::sandpile::SandpileLattice::new(&d).group_order(), trees);
        }
    }

    #[test]
    fn tree_choice_does_not_change_order() {
        let g = square_graph();
        let a = graph_to_srm(&g, &TreeData::new(&g, vec![0, 1, 2]).unwrap()).unwrap();
        let b = graph_to_srm(&g, &TreeData::new(&g, vec![3, 4, 1]).unwrap()).unwrap();
        let order = |d| crate::sandpile::SandpileLattice::new(d).group_order();
        assert_eq!(order(&a), order(&b));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Graph::new(2, vec![(0, 0)]).is_err());
        assert!(Graph::new(3, vec![(0, 1)]).is_err());
        let g = cycle(3);
        assert!(TreeData::new(&g, vec![0]).is_err());
        assert!(TreeData::new(&g, vec![0, 0]).is_err());
        // multi-edges are fine
        let g = Graph::new(2, vec![(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(count_spanning_trees(&g).unwrap(), Int::from(3));
        let d = graph_to_srm(&g, &spanning_tree(&g).unwrap()).unwrap();
        // a parallel edge runs against the tree edge around their 2-cycle
        assert_eq!(d.d(), IntMatrix::from_i64_rows(&[&[1, -1, 1]]).unwrap());
    }

    #[test]
    fn json_spec() {
        let spec: GraphSpec = serde_json::from_str(
            r#"{"vertices": 4, "edges": [[1,4],[1,2],[2,3],[3,4],[2,4]], "tree": [1,2,3]}"#,
        )
        .unwrap();
        let (g, t) = spec.build().unwrap();
        assert_eq!(g, square_graph());
        assert_eq!(t.tree_edges(), &[0, 1, 2]);
    }
}
