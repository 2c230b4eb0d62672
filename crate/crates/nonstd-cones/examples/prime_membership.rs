//! Prime ideals of free algebras are named by indexes; membership of a
//! term is decided by evaluating it at the canonical point of the index.
//!
//! Run with: cargo run --example prime_membership

use nonstd_cones::index::canonical_point;
use nonstd_cones::series::parse_real_point;
use nonstd_cones::spectrum::{
    maximal_from_real_point, prime_leq, vanishes_on_cone, PrimeIdealHandle,
};
use nonstd_cones::{Dialect, Index, NumberFieldSpec, Term};

fn main() -> nonstd_cones::Result<()> {
    let spec = NumberFieldSpec::rational();

    // The index (e1, e2) names the prime ideal generated by the family
    // 0 /\ x0 /\ x1 /\ (x0 - k*x1): functions flat along the first axis to
    // infinitesimal order.
    let v = Index::parse("[(1,0)],[(0,1)]", 2, &spec)?;
    println!("canonical point of {v}:");
    for (i, c) in canonical_point(&v).iter().enumerate() {
        println!("  coordinate {i}: {c}");
    }
    for k in [1, 2, 7] {
        let t = Term::parse_q(
            &format!("0 /\\ x0 /\\ x1 /\\ (x0 - {k}*x1)"),
            2,
            Dialect::LGroup,
        )?;
        println!(
            "k = {k}: in the prime? {}",
            vanishes_on_cone(&t, &v, Dialect::Riesz)?
        );
    }
    let x0 = Term::parse_q("x0", 2, Dialect::LGroup)?;
    println!(
        "x0 in the prime? {}",
        vanishes_on_cone(&x0, &v, Dialect::Riesz)?
    );

    // Truncating the index gives a larger prime (reverse inclusion).
    let u = v.truncate(1)?;
    let h_v = PrimeIdealHandle::new(Dialect::Riesz, v.clone())?;
    let h_u = PrimeIdealHandle::new(Dialect::Riesz, u)?;
    println!("truncation order: {}", prime_leq(&h_u, &h_v)?);

    // Maximal ideals come from nonzero real points, up to positive scaling.
    let p = parse_real_point("(3, 4)", 2, &spec)?;
    let p2 = parse_real_point("(6, 8)", 2, &spec)?;
    let m1 = maximal_from_real_point(&p, Dialect::Riesz)?;
    let m2 = maximal_from_real_point(&p2, Dialect::Riesz)?;
    println!("maximal from (3,4): {m1}");
    println!("scaling invariance: {}", m1 == m2);

    // In a quadratic field the kernel of th*x0 - x1 is the irrational ray
    // (1, th); the term lies in the corresponding maximal ideal.
    let s2 = NumberFieldSpec::sqrt2();
    let t = Term::parse("th*x0 - x1", 2, Dialect::Riesz, &s2)?;
    let ray = Index::parse("[(1,th)]", 2, &s2)?;
    println!(
        "th*x0 - x1 vanishes on the (1, th) ray: {}",
        vanishes_on_cone(&t, &ray, Dialect::Riesz)?
    );
    Ok(())
}
