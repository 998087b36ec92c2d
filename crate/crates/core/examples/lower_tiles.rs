//! The lower-dimensional tiles `T′` in `ℝʳ` and `T″` in `ℝⁿ⁻ʳ`.

use sandpile_tiling::io::parse_shifting;
use sandpile_tiling::lower::{build_lower_tile, lower_representatives, LowerKind};
use sandpile_tiling::tiling::validate_shifting;
use sandpile_tiling::{Result, StandardRepMatrix};

fn main() -> Result<()> {
    let d = StandardRepMatrix::from_m_rows(&[&[3], &[2]])?;
    let s = validate_shifting(&d, &parse_shifting("1,1,1")?)?;
    for kind in [LowerKind::Prime, LowerKind::DoublePrime] {
        let tile = build_lower_tile(&d, &s, kind)?;
        println!("{kind}: dimension {}, translates by {:?}", tile.dim(), tile.translation_lattice());
        for p in tile.pieces() {
            println!("  {} from {:?}: vertices {:?}", p.basis, p.source, p.region.vertices());
        }
        for (b, pts) in lower_representatives(&tile, &s)? {
            println!("  {b}: {pts:?}");
        }
    }
    Ok(())
}
