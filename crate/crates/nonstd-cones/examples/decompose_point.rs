//! Orthogonal decomposition of hyperreal points: every nonzero point is a
//! sum of strictly shrinking scales against orthogonal real directions,
//! and the direction tuple (the index) is its combinatorial fingerprint.
//!
//! Run with: cargo run --example decompose_point

use nonstd_cones::index::{canonical_point, index_of, orthogonal_decomposition};
use nonstd_cones::series::parse_point;
use nonstd_cones::NumberFieldSpec;

fn main() -> nonstd_cones::Result<()> {
    let spec = NumberFieldSpec::rational();

    // The point (1, e): infinitesimally close to the x-axis but off it.
    let y = parse_point("(1, e)", 2, &spec)?;
    let d = orthogonal_decomposition(&y)?;
    println!("decomposition of (1, e):");
    println!("{d}");
    println!("index: {}\n", d.index());

    // A real point decomposes in one stroke; the direction is the ray.
    let real = parse_point("(3, 4)", 2, &spec)?;
    println!("decomposition of (3, 4):");
    println!("{}\n", orthogonal_decomposition(&real)?);

    // An irrational slope plus an infinitesimal kick in a quadratic field.
    let s2 = NumberFieldSpec::sqrt2();
    let x = parse_point("(1, th + e)", 2, &s2)?;
    let d = orthogonal_decomposition(&x)?;
    println!("decomposition of (1, sqrt2 + e):");
    println!("{d}");
    println!("index: {}\n", d.index());

    // Reconstruction is exact, and scaling the point leaves the index
    // unchanged.
    let rebuilt = d.reconstruct()?;
    println!("reconstruction exact: {}", rebuilt == x);
    let index = index_of(&x)?;
    println!("index of canonical point matches: {}", {
        let p = canonical_point(&index);
        index_of(&p)? == index
    });
    Ok(())
}
