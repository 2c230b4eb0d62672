//! The two Zariski topologies disagree off the rationals: with real
//! scalars, an irrational ray is closed; with integer coefficients only,
//! its closure swallows infinitesimal perturbations. Failed specializations
//! come with constructive separating functionals.
//!
//! Run with: cargo run --example closures_and_witnesses

use nonstd_cones::index::{
    index_of, lgroup_specializes, reduce, riesz_specializes, separating_form,
};
use nonstd_cones::series::parse_point;
use nonstd_cones::{Dialect, NumberFieldSpec};

fn main() -> nonstd_cones::Result<()> {
    let s2 = NumberFieldSpec::sqrt2();

    // y sits on the irrational line of slope sqrt2; x is knocked off it by
    // an infinitesimal.
    let y = parse_point("(1, th)", 2, &s2)?;
    let x = parse_point("(1, th + e)", 2, &s2)?;
    println!("index of y: {}", index_of(&y)?);
    println!("index of x: {}", index_of(&x)?);
    println!("reduced index of x: {}", reduce(&index_of(&x)?));

    // Riesz scalars separate x from the closure of y...
    println!(
        "\nx in Riesz closure of y:         {}",
        riesz_specializes(&x, &y)?
    );
    // ...but integer-coefficient functions cannot tell them apart.
    println!(
        "x in lattice-group closure of y: {}",
        lgroup_specializes(&x, &y)?
    );

    // The separating functional: vanishes on the line, strictly negative
    // at the perturbed point. It is a positive multiple of (sqrt2, -1).
    let f = separating_form(&x, &y, Dialect::Riesz)?;
    println!("\nseparating form: {f}");
    println!("value at y: {}", f.apply_series(&y)?);
    println!("value at x: {}", f.apply_series(&x)?);

    // Over the rationals the dialects agree; a genuinely different index
    // fails in both, and the lattice-group witness has integer entries.
    let q = NumberFieldSpec::rational();
    let a = parse_point("(0, 1)", 2, &q)?;
    let b = parse_point("(1, e)", 2, &q)?;
    println!(
        "\n(0,1) in lattice-group closure of (1,e): {}",
        lgroup_specializes(&a, &b)?
    );
    let g = separating_form(&a, &b, Dialect::LGroup)?;
    println!("integer witness: {g}");
    println!("value at (1,e): {}", g.apply_series(&b)?);
    println!("value at (0,1): {}", g.apply_series(&a)?);
    Ok(())
}
