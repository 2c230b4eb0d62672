//! v-cones: the polyhedral shadows of an index. A term belongs to the
//! prime ideal of an index exactly when its real zero set contains some
//! v-cone; the search scans geometrically shrinking radii and certifies
//! candidates on an exact rational grid.
//!
//! Run with: cargo run --example vcone_search

use num_traits::One;

use nonstd_cones::series::parse_point;
use nonstd_cones::spectrum::{vanishes_on_cone, vcone_in_variety, VCone};
use nonstd_cones::{Dialect, Index, NumberFieldSpec, Rational, Term};

fn main() -> nonstd_cones::Result<()> {
    let spec = NumberFieldSpec::rational();
    let v = Index::parse("[(1,0)],[(0,1)]", 2, &spec)?;

    // Generators of a v-cone are nested partial sums of scaled directions.
    let half = Rational::new(1.into(), 2.into());
    let cone = VCone::new(v.clone(), vec![Rational::one(), half])?;
    println!("generators of the (1, 1/2) v-cone on {v}:");
    for g in cone.generators() {
        let txt: Vec<String> = g.iter().map(|c| c.to_string()).collect();
        println!("  ({})", txt.join(", "));
    }

    // The membership predicate for enlarged cones accepts the canonical
    // infinitesimal point of the index and rejects a transposed one.
    let inside = parse_point("(1, e)", 2, &spec)?;
    let outside = parse_point("(e, 1)", 2, &spec)?;
    println!(
        "(1, e) in the enlarged cone: {}",
        cone.contains_series(&inside)?
    );
    println!(
        "(e, 1) in the enlarged cone: {}",
        cone.contains_series(&outside)?
    );

    // Radius search: t vanishes on {x, y >= 0, y <= x}, which contains the
    // v-cone once the second radius is small enough.
    let t = Term::parse_q("0 /\\ x0 /\\ x1 /\\ (x0 - x1)", 2, Dialect::LGroup)?;
    println!(
        "\nsymbolic membership: {}",
        vanishes_on_cone(&t, &v, Dialect::LGroup)?
    );
    match vcone_in_variety(&t, &v, Dialect::LGroup, 12)? {
        Some(radii) => {
            let txt: Vec<String> = radii.iter().map(|r| r.to_string()).collect();
            println!("radius search found: ({})", txt.join(", "));
        }
        None => println!("radius search exhausted its budget"),
    }

    // A term that does not vanish fails at the first generator, instantly.
    let x0 = Term::parse_q("x0", 2, Dialect::LGroup)?;
    println!(
        "x0 search result: {:?}",
        vcone_in_variety(&x0, &v.truncate(1)?, Dialect::LGroup, 12)?
    );

    // In a quadratic field the kernel of th*x0 - x1 contains the full ray
    // with radius 1.
    let s2 = NumberFieldSpec::sqrt2();
    let irr = Term::parse("th*x0 - x1", 2, Dialect::Riesz, &s2)?;
    let ray = Index::parse("[(1,th)]", 2, &s2)?;
    println!(
        "irrational ray search: {:?}",
        vcone_in_variety(&irr, &ray, Dialect::Riesz, 12)?.map(|radii| radii[0].to_string())
    );
    Ok(())
}
