//! Strong order-units through geometry: a positive element is a strong
//! unit exactly when adding its absolute value to the relator leaves no
//! nonzero common zero, decided by an exact polyhedral fan.
//!
//! Run with: cargo run --example strong_units

use nonstd_cones::spectrum::{linearity_fan, strong_unit_check, variety_is_origin};
use nonstd_cones::{Dialect, NumberFieldSpec, Term};

fn main() -> nonstd_cones::Result<()> {
    let spec = NumberFieldSpec::rational();

    // |x0| + |x1| vanishes only at the origin: the signature strong unit
    // of the free two-variable algebra.
    let unit = Term::parse_q("|x0| + |x1|", 2, Dialect::LGroup)?;
    println!(
        "variety of |x0| + |x1| is the origin: {}",
        variety_is_origin(&unit, &spec)?
    );

    // A one-sided positive part is not: its zero set contains a halfplane.
    let pos = Term::parse_q("x0 \\/ 0", 2, Dialect::LGroup)?;
    println!(
        "variety of x0 \\/ 0 is the origin:    {}",
        variety_is_origin(&pos, &spec)?
    );

    println!("\nunit checks (relator; candidate):");
    let cases = [
        ("0", "|x0| + |x1|", 2),
        ("x1", "|x0|", 2),
        ("0", "x0 \\/ 0", 2),
        ("x0 - x1", "x0 \\/ x1 \\/ 0", 2),
    ];
    for (relator, candidate, n) in cases {
        let r = Term::parse_q(relator, n, Dialect::LGroup)?;
        let c = Term::parse_q(candidate, n, Dialect::LGroup)?;
        println!(
            "  ({relator}; {candidate}) -> {}",
            strong_unit_check(&r, &c, &spec)?
        );
    }

    // The underlying machinery: the exact linearity fan of a term. Each
    // piece is a polyhedral cone region with the linear form the term
    // agrees with there.
    let t = Term::parse_q("0 /\\ x0 /\\ x1 /\\ (x0 - x1)", 2, Dialect::LGroup)?;
    println!("\nlinearity fan of 0 /\\ x0 /\\ x1 /\\ (x0 - x1):");
    for piece in linearity_fan(&t, &spec)? {
        println!("  {piece}");
    }
    Ok(())
}
