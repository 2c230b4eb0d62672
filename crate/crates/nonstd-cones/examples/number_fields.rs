//! Exact arithmetic in real algebraic number fields with certified signs.
//!
//! Run with: cargo run --example number_fields

use nonstd_cones::{FieldElement, NumberFieldSpec};

fn main() -> nonstd_cones::Result<()> {
    // Q(sqrt 2), presented by x^2 - 2 with the root isolated in [7/5, 3/2].
    let spec = NumberFieldSpec::sqrt2();
    let th = FieldElement::generator(&spec);

    let sq = th.checked_mul(&th)?;
    println!("th * th           = {sq}");

    let a = FieldElement::parse("1+th", &spec)?;
    let inv = a.inv()?;
    println!("inv(1 + th)       = {inv}");
    println!("(1 + th)*inv      = {}", a.checked_mul(&inv)?);

    // Signs are decided exactly, by refining the isolating interval until
    // an interval evaluation excludes zero. 3 - 2*sqrt2 is about 0.17.
    let tight = FieldElement::parse("3-2*th", &spec)?;
    println!("sign(3 - 2*th)    = {}", tight.sign());
    let negative = FieldElement::parse("7/5-th", &spec)?;
    println!("sign(7/5 - th)    = {}", negative.sign());

    // A degree-4 field: Q(sqrt2 + sqrt3). Inside it, sqrt2 is expressible
    // as (th^3 - 9*th)/2, and squaring recovers 2 exactly.
    let quartic = NumberFieldSpec::sqrt2_sqrt3();
    let s2 = FieldElement::parse("-9/2*th+1/2*th^3", &quartic)?;
    println!("in Q(sqrt2+sqrt3): s2 = {s2}");
    println!("s2 * s2           = {}", s2.checked_mul(&s2)?);
    println!("sign(s2)          = {}", s2.sign());

    // The canonical JSON interchange form.
    let one_two = FieldElement::parse("1+2*th", &spec)?;
    println!("JSON: {}", one_two.to_json());
    Ok(())
}
