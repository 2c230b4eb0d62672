//! The vanishing-set operators: C sends point sets to the terms that kill
//! them, V sends term sets to their common zeros. They form a Galois
//! connection, and over real points they restrict to the classical pair.
//!
//! Run with: cargo run --example galois_operators

use nonstd_cones::series::{parse_point, parse_real_point};
use nonstd_cones::spectrum::{c_operator, c_operator_real, v_operator, v_operator_real};
use nonstd_cones::{Dialect, EpsSeries, NumberFieldSpec, Term};

fn main() -> nonstd_cones::Result<()> {
    let spec = NumberFieldSpec::rational();

    let points = vec![
        parse_point("(1, e)", 2, &spec)?,
        parse_point("(2, e^2)", 2, &spec)?,
    ];
    let terms = vec![
        Term::parse_q("0 /\\ x0 /\\ x1 /\\ (x0 - x1)", 2, Dialect::LGroup)?,
        Term::parse_q("x0", 2, Dialect::LGroup)?,
        Term::parse_q("x1 /\\ 0", 2, Dialect::LGroup)?,
    ];

    let killed = c_operator(&points, &terms)?;
    println!("terms vanishing on all sample points:");
    for &i in &killed {
        println!("  {}", terms[i]);
    }

    let zeros = v_operator(&terms[..1], &points)?;
    println!(
        "points killed by the first term: {} of {}",
        zeros.len(),
        points.len()
    );

    // The Galois property on this sample: T inside C(S) iff S inside V(T).
    let t_in_c = killed.len() == terms.len();
    let s_in_v = v_operator(&terms, &points)?.len() == points.len();
    println!("Galois bidirectional check: {}", t_in_c == s_in_v);

    // Real points, embedded as constant series, see exactly the classical
    // operators: the hyperreal model is conservative over the reals.
    let real_points = vec![
        parse_real_point("(1, 1)", 2, &spec)?,
        parse_real_point("(2, 0)", 2, &spec)?,
    ];
    let embedded: Vec<Vec<EpsSeries>> = real_points
        .iter()
        .map(|p| p.iter().cloned().map(EpsSeries::constant).collect())
        .collect();
    println!(
        "real-trace C agrees: {}",
        c_operator(&embedded, &terms)? == c_operator_real(&real_points, &terms)?
    );
    println!(
        "real-trace V agrees: {}",
        v_operator(&terms, &embedded)? == v_operator_real(&terms, &real_points)?
    );

    // Closed sets are built from basic identities: a meet of absolute
    // values vanishes where either term does, a sum where both do.
    let t1 = &terms[0];
    let t2 = &terms[2];
    let union = Term::meet(Term::abs(t1.clone()), Term::abs(t2.clone()))?;
    let intersection = Term::sum(vec![Term::abs(t1.clone()), Term::abs(t2.clone())])?;
    let p = &points[0];
    println!(
        "union law at (1, e): {}",
        union.eval_series(p)?.is_zero()
            == (t1.eval_series(p)?.is_zero() || t2.eval_series(p)?.is_zero())
    );
    println!(
        "intersection law at (1, e): {}",
        intersection.eval_series(p)?.is_zero()
            == (t1.eval_series(p)?.is_zero() && t2.eval_series(p)?.is_zero())
    );
    Ok(())
}
