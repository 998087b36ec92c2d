//! A graph's matrix and the bijection between its sandpile group and its
//! spanning trees.

use sandpile_tiling::graph::{count_spanning_trees, graph_to_srm, Graph, TreeData};
use sandpile_tiling::io::parse_shifting;
use sandpile_tiling::tiling::validate_shifting;
use sandpile_tiling::{w_representatives, Result, SandpileLattice};

fn main() -> Result<()> {
    // a square with one diagonal, 0-based
    let g = Graph::new(4, vec![(0, 3), (0, 1), (1, 2), (2, 3), (1, 3)])?;
    let t = TreeData::new(&g, vec![0, 1, 2])?;
    let d = graph_to_srm(&g, &t)?;
    println!("D = {:?}", d.d());
    println!(
        "{} spanning trees, |S(D)| = {}",
        count_spanning_trees(&g)?,
        SandpileLattice::new(&d).group_order()
    );

    let s = validate_shifting(&d, &parse_shifting("1,2,4,8,16")?)?;
    for fiber in w_representatives(&d, &s)?.fibers() {
        let edges: Vec<usize> = fiber.basis.indices().iter().map(|&k| t.permutation()[k - 1] + 1).collect();
        println!("tree {edges:?} <- {:?}", fiber.points[0]);
    }
    Ok(())
}
