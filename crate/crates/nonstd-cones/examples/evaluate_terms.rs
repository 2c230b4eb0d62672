//! Parsing and evaluating lattice terms: piecewise linear functions over
//! real points and over hyperreal series points.
//!
//! Run with: cargo run --example evaluate_terms

use nonstd_cones::series::{parse_point, parse_real_point};
use nonstd_cones::{Dialect, NumberFieldSpec, Term};

fn main() -> nonstd_cones::Result<()> {
    let spec = NumberFieldSpec::rational();

    let meet = Term::parse_q("x0 /\\ x1", 2, Dialect::LGroup)?;
    let at = parse_real_point("(2, 3)", 2, &spec)?;
    println!("(x0 /\\ x1)(2, 3) = {}", meet.eval_real(&at)?);

    // The two-variable family 0 /\ x0 /\ x1 /\ (x0 - k*x1): every member
    // vanishes at (1, e) because e is below 1/k for every k.
    let point = parse_point("(1, e)", 2, &spec)?;
    for k in [1, 3, 10, 1000] {
        let t = Term::parse_q(
            &format!("0 /\\ x0 /\\ x1 /\\ (x0 - {k}*x1)"),
            2,
            Dialect::LGroup,
        )?;
        println!("k = {k:>4}: value at (1, e) = {}", t.eval_series(&point)?);
    }
    // But the same family separates (1, 1/k') for any fixed real slope.
    let real = parse_point("(1, 1/4)", 2, &spec)?;
    let t6 = Term::parse_q("0 /\\ x0 /\\ x1 /\\ (x0 - 6*x1)", 2, Dialect::LGroup)?;
    println!("k = 6 at (1, 1/4) = {}", t6.eval_series(&real)?);

    // Absolute values are sugar for joins; rendering is canonical.
    let abs = Term::parse_q("|x0 - x1|", 2, Dialect::LGroup)?;
    println!("|x0 - x1| parses to {abs}");

    // Every linear piece candidate of a term, by syntactic flattening.
    let t1 = Term::parse_q("0 /\\ x0 /\\ x1 /\\ (x0 - x1)", 2, Dialect::LGroup)?;
    println!("leaf forms of t1:");
    for f in t1.leaf_forms(&spec)? {
        println!("  {f}");
    }

    // Field scalars are allowed in the Riesz dialect only.
    let s2 = NumberFieldSpec::sqrt2();
    let riesz = Term::parse("th*x0 - x1", 2, Dialect::Riesz, &s2)?;
    let on_line = parse_point("(1, th)", 2, &s2)?;
    println!("(th*x0 - x1)(1, th) = {}", riesz.eval_series(&on_line)?);
    let rejected = Term::parse("th*x0", 1, Dialect::LGroup, &s2);
    println!("lattice-group parse of th*x0: {rejected:?}");
    Ok(())
}
