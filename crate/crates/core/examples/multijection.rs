//! The map from sandpile classes to bases for a generic shifting vector.
//! Each fiber has `m(B)²` classes.

use num_bigint::BigInt;
use sandpile_tiling::io::parse_shifting;
use sandpile_tiling::tiling::validate_shifting;
use sandpile_tiling::{w_representatives, Result, StandardRepMatrix};

fn main() -> Result<()> {
    let d = StandardRepMatrix::from_m_rows(&[&[3], &[2]])?;
    let s = validate_shifting(&d, &parse_shifting("1,1,1")?)?;
    let f = w_representatives(&d, &s)?;
    for fiber in f.fibers() {
        println!("{} (m = {}): {:?}", fiber.basis, fiber.multiplicity, fiber.points);
    }

    let z: Vec<BigInt> = [5, -7, 11].into_iter().map(BigInt::from).collect();
    let (b, rep) = f.apply(&z)?;
    println!("{z:?} is represented by {rep:?} in the fiber over {b}");

    // a vector on a facet hyperplane is rejected
    match validate_shifting(&d, &parse_shifting("1,1,0")?) {
        Ok(_) => println!("accepted"),
        Err(e) => println!("1,1,0 rejected: {e}"),
    }
    Ok(())
}
