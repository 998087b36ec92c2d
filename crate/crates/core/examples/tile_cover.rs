//! Locates points of `ℝⁿ` in the periodic tiling by `T(D)`.

use sandpile_tiling::io::parse_shifting;
use sandpile_tiling::tiling::TileLocator;
use sandpile_tiling::{Result, StandardRepMatrix};

fn main() -> Result<()> {
    let d = StandardRepMatrix::from_m_rows(&[&[3], &[2]])?;
    let locator = TileLocator::new(&d)?;
    for p in ["0,0,0", "1/2,1/3,1/5", "17,-4,9/2", "-100,33,7"] {
        match locator.locate(&parse_shifting(p)?)? {
            Some(loc) => {
                let bases: Vec<String> = loc.bases.iter().map(|b| b.to_string()).collect();
                println!("({p}) = translate {:?} of a point in {}", loc.translate, bases.join(", "));
            }
            None => println!("({p}) not covered"),
        }
    }
    Ok(())
}
