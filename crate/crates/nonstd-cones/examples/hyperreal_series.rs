//! The computable stand-in for hyperreals: finite series in a positive
//! infinitesimal `e`, ordered lexicographically.
//!
//! Run with: cargo run --example hyperreal_series

use nonstd_cones::series::SeriesClass;
use nonstd_cones::{EpsSeries, NumberFieldSpec};

fn main() -> nonstd_cones::Result<()> {
    let spec = NumberFieldSpec::rational();

    let a = EpsSeries::parse("3 + 5*e", &spec)?;
    let b = EpsSeries::parse("2*e + e^2", &spec)?;
    println!("(3 + 5e) + (2e + e^2) = {}", a.add(&b)?);

    let p = EpsSeries::parse("1 + e", &spec)?;
    let q = EpsSeries::parse("1 - e", &spec)?;
    println!("(1 + e)(1 - e)        = {}", p.mul(&q)?);

    // e is positive yet below every positive real; 1/e is unlimited.
    let eps = EpsSeries::eps(&spec);
    let one = EpsSeries::parse("1", &spec)?;
    let million = EpsSeries::parse("1000000", &spec)?;
    let eps_inv = EpsSeries::parse("e^-1", &spec)?;
    println!("e < 1                 : {}", eps.cmp_exact(&one)? < 0);
    println!(
        "e^-1 > 10^6           : {}",
        eps_inv.cmp_exact(&million)? > 0
    );
    println!("e * e^-1              = {}", eps.mul(&eps_inv)?);

    // Standard parts strip the infinitesimal fuzz from limited elements.
    let prod = p.mul(&EpsSeries::parse("2 - e", &spec)?)?;
    println!("st((1+e)(2-e))        = {}", prod.standard_part()?);

    for text in ["e^2", "2 + e^-1", "5", "0"] {
        let s = EpsSeries::parse(text, &spec)?;
        let kind = match s.classify() {
            SeriesClass::Zero => "zero",
            SeriesClass::Infinitesimal => "infinitesimal",
            SeriesClass::LimitedNoninfinitesimal => "limited, not infinitesimal",
            SeriesClass::Unlimited => "unlimited",
        };
        println!("classify({text:>9})    = {kind}");
    }

    // Rational exponents let points absorb arbitrary positive rescalings.
    let half = EpsSeries::parse("e^1/2", &spec)?;
    println!("e^1/2 * e^1/2         = {}", half.mul(&half)?);
    Ok(())
}
