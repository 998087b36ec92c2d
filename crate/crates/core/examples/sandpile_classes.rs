//! Canonical class representatives in `Zⁿ / im(𝐃ᵀ)`.

use num_bigint::BigInt;
use sandpile_tiling::{Result, SandpileLattice, StandardRepMatrix};

fn v(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn main() -> Result<()> {
    let d = StandardRepMatrix::from_m_rows(&[&[3], &[2]])?;
    let lattice = SandpileLattice::new(&d);
    println!("|S(D)| = {}, HNF pivots {:?}", lattice.group_order(), lattice.pivots());

    for z in [v(&[0, 0, 0]), v(&[1, 0, 3]), v(&[0, 0, -4]), v(&[-2, -2, 0])] {
        println!("{z:?} -> {:?}", lattice.canonical(&z)?.residue());
    }
    println!("(0,0,-4) ~ (-2,-2,0): {}", lattice.equivalent(&v(&[0, 0, -4]), &v(&[-2, -2, 0]))?);

    let classes = lattice.enumerate_classes(1_000)?;
    println!("{} classes:", classes.len());
    for c in classes {
        println!("  {:?}", c.residue());
    }
    Ok(())
}
