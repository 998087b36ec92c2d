//! Writes `T′` of the running example and `T` of `(1 3)` as SVG files.
//!
//! `cargo run --example tile_svg -- out_dir`

use std::path::PathBuf;

use sandpile_tiling::io::parse_shifting;
use sandpile_tiling::svg::{tile_polygons, tile_svg, TileKind};
use sandpile_tiling::tiling::validate_shifting;
use sandpile_tiling::{Result, StandardRepMatrix};

fn main() -> Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));

    let running = StandardRepMatrix::from_m_rows(&[&[3], &[2]])?;
    let s = validate_shifting(&running, &parse_shifting("1,1,1")?)?;
    for p in tile_polygons(&running, &s, TileKind::Prime, false)? {
        println!("{} area {}: {:?}", p.basis, p.area(), p.vertices);
    }
    std::fs::write(dir.join("running_prime.svg"), tile_svg(&running, &s, TileKind::Prime, true)?)?;

    let small = StandardRepMatrix::from_m_rows(&[&[3]])?;
    let s = validate_shifting(&small, &parse_shifting("1,1")?)?;
    std::fs::write(dir.join("one_by_two_full.svg"), tile_svg(&small, &s, TileKind::Full, true)?)?;
    println!("wrote {}", dir.display());
    Ok(())
}
