//! Bases, multiplicities and the count `Σ m(B)² = |det 𝐃|` for a few matrices.

use sandpile_tiling::srm::{enumerate_bases, matrix_tree_check};
use sandpile_tiling::{Result, SandpileLattice, StandardRepMatrix};

fn main() -> Result<()> {
    let examples = [
        StandardRepMatrix::from_m_rows(&[&[3], &[2]])?,
        StandardRepMatrix::from_m_rows(&[&[-1, -2, 2], &[1, 2, -1]])?,
        StandardRepMatrix::from_m_rows(&[&[1, 3, -4, 5], &[3, 3, 3, -3]])?,
    ];
    for d in &examples {
        println!("D = {:?}", d.d());
        for (b, m) in enumerate_bases(d).iter() {
            println!("  m({b}) = {m}");
        }
        let check = matrix_tree_check(d);
        let order = SandpileLattice::new(d).group_order();
        println!("  sum of squares {} = |det| {} = |S(D)| {order}\n", check.sum_squares, check.det_full);
    }
    Ok(())
}
