//! Corner points of each `P(B)` and their `{0,1}ⁿ` forms.

use sandpile_tiling::io::parse_shifting;
use sandpile_tiling::srm::enumerate_bases;
use sandpile_tiling::tiling::{corner_point, validate_shifting};
use sandpile_tiling::{Result, SandpileLattice, StandardRepMatrix};

fn main() -> Result<()> {
    let d = StandardRepMatrix::from_m_rows(&[&[-1, -2, 2], &[1, 2, -1]])?;
    let s = validate_shifting(&d, &parse_shifting("1,3,9,27,81")?)?;
    let lattice = SandpileLattice::new(&d);
    for b in enumerate_bases(&d).bases() {
        let c = corner_point(&d, b, &s)?;
        println!(
            "{b}: {:?} ~ {:?} {}",
            c.point,
            c.zero_one,
            lattice.equivalent(&c.point, &c.zero_one)?
        );
    }
    Ok(())
}
