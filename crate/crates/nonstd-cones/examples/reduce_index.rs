//! Z-reduction of indexes: projecting each direction onto the
//! orthocomplement of the rational envelope of its predecessors, dropping
//! what disappears. Reduced indexes are the names of lattice-group primes.
//!
//! Run with: cargo run --example reduce_index

use nonstd_cones::index::{envelope_of_index_prefix, is_z_reduced, rational_envelope, reduce};
use nonstd_cones::{FieldElement, Index, NumberFieldSpec};

fn main() -> nonstd_cones::Result<()> {
    let s2 = NumberFieldSpec::sqrt2();

    // Three pairwise-orthogonal directions involving sqrt2.
    let v = Index::parse("[(1,th,0)],[(th,-1,1)],[(-th,1,3)]", 3, &s2)?;
    println!("index v = {v}");
    println!("Z-reduced already? {}", is_z_reduced(&v));

    // The envelope of the first vector is the whole xy-plane: the
    // irrationality of sqrt2 forces any rational subspace containing
    // (1, sqrt2, 0) to contain both (1,0,0) and (0,1,0).
    let env1 = envelope_of_index_prefix(&v, 1);
    println!("envelope of (1, th, 0): {env1}");
    println!("its orthocomplement:    {}", env1.orthocomplement());

    let reduced = reduce(&v);
    println!("red(v) = {reduced}");
    println!("red is Z-reduced: {}", is_z_reduced(&reduced));
    println!("red is idempotent: {}", reduce(&reduced) == reduced);

    // Rational orthogonal tuples are always Z-reduced.
    let q = NumberFieldSpec::rational();
    let rational = Index::parse("[(1,2,0)],[(2,-1,0)],[(0,0,5)]", 3, &q)?;
    println!(
        "
rational index {rational}
Z-reduced: {}",
        is_z_reduced(&rational)
    );

    // A single irrational direction in the plane spans everything
    // rationally, so nothing can be appended to it after reduction.
    let lone = vec![vec![FieldElement::one(&s2), FieldElement::generator(&s2)]];
    println!(
        "envelope of (1, th) in R^2: dim {}",
        rational_envelope(&lone, 2).dim()
    );
    Ok(())
}
