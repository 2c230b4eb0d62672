//! A countably-generated presentation whose nilpotents differ from the
//! intersection of its maximal ideals, checked at a finite variable
//! truncation: the defining terms vanish on the defining cones, yet the
//! projection x0 stays nonzero at a point every real trace approves of.
//!
//! Run with: cargo run --example appendix_family

use nonstd_cones::series::parse_point;
use nonstd_cones::spectrum::{appendix_suite, appendix_terms};

fn main() -> nonstd_cones::Result<()> {
    // The generator families on variables x0..x3, coefficient families
    // truncated at 8.
    let terms = appendix_terms(3, 8)?;
    println!("first generators on x0..x3:");
    for t in terms.iter().take(6) {
        println!("  {t}");
    }
    println!("  ... ({} terms in total)\n", terms.len());

    // The witness point (e, 1, 0, 0): it satisfies every constraint any
    // real point of the cones satisfies, yet x0 does not vanish there.
    let spec = nonstd_cones::NumberFieldSpec::rational();
    let y = parse_point("(e, 1, 0, 0)", 4, &spec)?;
    let x0 = nonstd_cones::Term::var(4, 0)?;
    println!("x0 at (e, 1, 0, 0) = {}", x0.eval_series(&y)?);

    // The full check at three truncations.
    for n in [2, 3, 4] {
        let report = appendix_suite(n, 16)?;
        println!("\n{report}");
        println!("  passed: {}", report.passed());
    }
    Ok(())
}
