//! Shifting vectors in the same chamber pair give the same multijection.

use sandpile_tiling::chambers::{arrangement_of, dual_arrangement_of, shifting_equivalent, shifting_signatures};
use sandpile_tiling::io::parse_shifting;
use sandpile_tiling::tiling::validate_shifting;
use sandpile_tiling::{w_representatives, Result, StandardRepMatrix};

fn main() -> Result<()> {
    let d = StandardRepMatrix::from_m_rows(&[&[3], &[2]])?;
    println!("normals {:?}", arrangement_of(&d).normals());
    println!("dual normals {:?}", dual_arrangement_of(&d).normals());

    let base = parse_shifting("1,1,1")?;
    for other in ["1,2,5", "2,1,1", "7/2,-1,1"] {
        let w = parse_shifting(other)?;
        let (sw, sh) = shifting_signatures(&d, &w)?;
        let same = shifting_equivalent(&d, &base, &w)?;
        let fibers_match = w_representatives(&d, &validate_shifting(&d, &base)?)?.fibers()
            == w_representatives(&d, &validate_shifting(&d, &w)?)?.fibers();
        println!("{other}: signs {sw} / {sh}, same chambers as 1,1,1: {same}, same fibers: {fibers_match}");
    }
    Ok(())
}
