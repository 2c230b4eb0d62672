//! Internal exact linear algebra, in two flavors: reduced row echelon form
//! and nullspaces over the rationals (canonical presentations of rational
//! subspaces), and Gaussian elimination plus small-dimension cone probing
//! over a number field.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::coeff::{FieldElement, NumberFieldSpec, Rational};

// ---------------------------------------------------------------------------
// Rational matrices.

/// Reduced row echelon form in place; returns the rank. Zero rows are
/// removed, so the result is canonical for the row space.
pub fn rref(rows: &mut Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(sel) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, sel);
        let inv = Rational::one() / rows[pivot_row][col].clone();
        for c in col..ncols {
            rows[pivot_row][c] = &rows[pivot_row][c] * &inv;
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let sub = &factor * &rows[pivot_row][c];
                    rows[r][c] = &rows[r][c] - sub;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.retain(|r| r.iter().any(|c| !c.is_zero()));
    rows.len()
}

/// Canonical basis (RREF rows) of the nullspace `{x : rows * x = 0}` in
/// `Q^n`.
pub fn nullspace(rows: &[Vec<Rational>], n: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows.iter().filter(|r| !r.is_empty()).cloned().collect();
    rref(&mut m);
    let mut pivots = vec![];
    let mut col = 0;
    for row in &m {
        while col < n && row[col].is_zero() {
            col += 1;
        }
        if col < n {
            pivots.push(col);
            col += 1;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = vec![];
    for &f in &free {
        let mut v = vec![Rational::zero(); n];
        v[f] = Rational::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -m[i][f].clone();
        }
        basis.push(v);
    }
    rref(&mut basis);
    basis
}

pub fn dot_rational(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Exact Gram-Schmidt over the rationals, without normalization. The output
/// spans the same space and is pairwise orthogonal.
pub fn gram_schmidt_rational(rows: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = vec![];
    for row in rows {
        let mut v = row.clone();
        for b in &out {
            let denom = dot_rational(b, b);
            if denom.is_zero() {
                continue;
            }
            let coef = dot_rational(&v, b) / denom;
            for (vi, bi) in v.iter_mut().zip(b) {
                let sub = &coef * bi;
                *vi = &*vi - sub;
            }
        }
        if v.iter().any(|c| !c.is_zero()) {
            out.push(v);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Field-element matrices. All entries are assumed to share one field spec;
// these helpers are only reachable through surfaces that validated it.

pub type FeVec = Vec<FieldElement>;

pub fn fe_dot(a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    let mut acc = FieldElement::zero(a[0].spec());
    for (x, y) in a.iter().zip(b) {
        acc = acc
            .checked_add(&x.checked_mul(y).expect("same field"))
            .expect("same field");
    }
    acc
}

pub fn fe_add_vec(a: &[FieldElement], b: &[FieldElement]) -> FeVec {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(y).expect("same field"))
        .collect()
}

pub fn fe_sub_vec(a: &[FieldElement], b: &[FieldElement]) -> FeVec {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_sub(y).expect("same field"))
        .collect()
}

pub fn fe_scale_vec(c: &FieldElement, v: &[FieldElement]) -> FeVec {
    v.iter()
        .map(|x| x.checked_mul(c).expect("same field"))
        .collect()
}

pub fn fe_vec_is_zero(v: &[FieldElement]) -> bool {
    v.iter().all(FieldElement::is_zero)
}

pub fn fe_zero_vec(spec: &Arc<NumberFieldSpec>, n: usize) -> FeVec {
    vec![FieldElement::zero(spec); n]
}

pub fn rational_vec_to_fe(spec: &Arc<NumberFieldSpec>, v: &[Rational]) -> FeVec {
    v.iter()
        .map(|r| FieldElement::from_rational(spec, r.clone()))
        .collect()
}

/// Solves `A x = b` over the field by Gaussian elimination. Returns one
/// solution (free columns set to zero), or `None` when inconsistent.
pub fn fe_solve(a: &[FeVec], b: &[FieldElement]) -> Option<FeVec> {
    assert!(!a.is_empty(), "empty system");
    let spec = Arc::clone(a[0][0].spec());
    let nrows = a.len();
    let ncols = a[0].len();
    let mut m: Vec<FeVec> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = vec![];
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(sel) = (pivot_row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, sel);
        let inv = m[pivot_row][col].inv().expect("pivot is nonzero");
        for c in col..=ncols {
            m[pivot_row][c] = m[pivot_row][c].checked_mul(&inv).expect("same field");
        }
        for r in 0..nrows {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=ncols {
                    let sub = factor.checked_mul(&m[pivot_row][c]).expect("same field");
                    m[r][c] = m[r][c].checked_sub(&sub).expect("same field");
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
        if pivot_row == nrows {
            break;
        }
    }
    for row in m.iter().take(nrows).skip(pivot_row) {
        if !row[ncols].is_zero() {
            return None;
        }
    }
    let mut x = fe_zero_vec(&spec, ncols);
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = m[i][ncols].clone();
    }
    Some(x)
}

/// Basis of the nullspace of `rows` over the field.
pub fn fe_nullspace(rows: &[FeVec], n: usize, spec: &Arc<NumberFieldSpec>) -> Vec<FeVec> {
    let mut m: Vec<FeVec> = rows.to_vec();
    let nrows = m.len();
    let mut pivots = vec![];
    let mut pivot_row = 0;
    for col in 0..n {
        let Some(sel) = (pivot_row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, sel);
        let inv = m[pivot_row][col].inv().expect("pivot is nonzero");
        for c in col..n {
            m[pivot_row][c] = m[pivot_row][c].checked_mul(&inv).expect("same field");
        }
        for r in 0..nrows {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..n {
                    let sub = factor.checked_mul(&m[pivot_row][c]).expect("same field");
                    m[r][c] = m[r][c].checked_sub(&sub).expect("same field");
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
        if pivot_row == nrows {
            break;
        }
    }
    m.truncate(pivot_row);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = vec![];
    for &f in &free {
        let mut v = fe_zero_vec(spec, n);
        v[f] = FieldElement::one(spec);
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = m[i][f].neg();
        }
        basis.push(v);
    }
    basis
}

/// Cross product in dimension 3.
pub fn fe_cross(a: &[FieldElement], b: &[FieldElement]) -> FeVec {
    let mul = |i: usize, j: usize| a[i].checked_mul(&b[j]).expect("same field");
    vec![
        mul(1, 2).checked_sub(&mul(2, 1)).expect("same field"),
        mul(2, 0).checked_sub(&mul(0, 2)).expect("same field"),
        mul(0, 1).checked_sub(&mul(1, 0)).expect("same field"),
    ]
}

/// Finds a nonzero point of the closed cone `{x in R^d : B x >= 0}` for
/// `d <= 3`, or reports that the cone is the origin alone.
///
/// The search is complete: a nonzero cone either contains a line, recovered
/// from the common nullspace of the rows, or is pointed and contains an
/// extreme ray, which in dimension <= 3 is tight on enough independent rows
/// to appear among row rotations (d = 2) or pairwise cross products (d = 3).
/// Candidates are produced in the field, so real feasibility and field
/// feasibility agree.
pub fn cone_nonzero_point(rows: &[FeVec], d: usize, spec: &Arc<NumberFieldSpec>) -> Option<FeVec> {
    assert!(d <= 3, "cone probing is limited to dimension 3");
    if d == 0 {
        return None;
    }
    let nonzero_rows: Vec<&FeVec> = rows.iter().filter(|r| !fe_vec_is_zero(r)).collect();
    if nonzero_rows.is_empty() {
        let mut e1 = fe_zero_vec(spec, d);
        e1[0] = FieldElement::one(spec);
        return Some(e1);
    }
    let satisfies = |x: &FeVec| nonzero_rows.iter().all(|r| fe_dot(r, x).sign() >= 0);

    let mut candidates: Vec<FeVec> = vec![];
    let owned: Vec<FeVec> = nonzero_rows.iter().map(|r| (*r).clone()).collect();
    candidates.extend(fe_nullspace(&owned, d, spec));
    match d {
        1 => {
            candidates.push(vec![FieldElement::one(spec)]);
            candidates.push(vec![FieldElement::from_int(spec, -1)]);
        }
        2 => {
            for r in &nonzero_rows {
                let rot = vec![r[1].neg(), r[0].clone()];
                candidates.push(vec![rot[0].neg(), rot[1].neg()]);
                candidates.push(rot);
            }
        }
        3 => {
            for (i, a) in nonzero_rows.iter().enumerate() {
                for b in nonzero_rows.iter().skip(i + 1) {
                    let c = fe_cross(a, b);
                    if !fe_vec_is_zero(&c) {
                        candidates.push(c.iter().map(FieldElement::neg).collect());
                        candidates.push(c);
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    candidates
        .into_iter()
        .filter(|c| !fe_vec_is_zero(c))
        .find(satisfies)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, rat_int, NumberFieldSpec};

    fn rv(vals: &[i64]) -> Vec<Rational> {
        vals.iter().map(|&v| rat_int(v)).collect()
    }

    #[test]
    fn rref_canonicalizes() {
        let mut m = vec![rv(&[2, 4, 0]), rv(&[1, 2, 1])];
        let rank = rref(&mut m);
        assert_eq!(rank, 2);
        assert_eq!(m, vec![rv(&[1, 2, 0]), rv(&[0, 0, 1])]);

        // Row order and scaling do not matter.
        let mut m2 = vec![rv(&[3, 6, 3]), rv(&[4, 8, 0])];
        rref(&mut m2);
        assert_eq!(m, m2);
    }

    #[test]
    fn nullspace_of_line() {
        let ns = nullspace(&[rv(&[1, 2])], 2);
        assert_eq!(ns.len(), 1);
        assert_eq!(dot_rational(&rv(&[1, 2]), &ns[0]), Rational::zero());
        // Nullspace of nothing is everything.
        let full = nullspace(&[], 2);
        assert_eq!(full.len(), 2);
    }

    #[test]
    fn fe_solve_small_system() {
        let spec = NumberFieldSpec::sqrt2();
        let th = FieldElement::generator(&spec);
        let one = FieldElement::one(&spec);
        // x + th*y = 0 ; -x + (th/2)*y = -1
        let half_th = th.scale(&rat(1, 2));
        let a = vec![vec![one.clone(), th.clone()], vec![one.neg(), half_th]];
        let b = vec![FieldElement::zero(&spec), FieldElement::from_int(&spec, -1)];
        let x = fe_solve(&a, &b).unwrap();
        assert_eq!(fe_dot(&a[0], &x), b[0]);
        assert_eq!(fe_dot(&a[1], &x), b[1]);
    }

    #[test]
    fn cone_probing_dim2() {
        let spec = NumberFieldSpec::rational();
        let one = FieldElement::one(&spec);
        let zero = FieldElement::zero(&spec);
        // x >= 0, y >= 0: the first quadrant is nonzero.
        let rows = vec![
            vec![one.clone(), zero.clone()],
            vec![zero.clone(), one.clone()],
        ];
        let p = cone_nonzero_point(&rows, 2, &spec).unwrap();
        assert!(!fe_vec_is_zero(&p));
        // x >= 0, -x >= 0, y >= 0, -y >= 0: only the origin.
        let rows = vec![
            vec![one.clone(), zero.clone()],
            vec![one.neg(), zero.clone()],
            vec![zero.clone(), one.clone()],
            vec![zero.clone(), one.neg()],
        ];
        assert!(cone_nonzero_point(&rows, 2, &spec).is_none());
    }

    #[test]
    fn cone_probing_dim3() {
        let spec = NumberFieldSpec::rational();
        let one = FieldElement::one(&spec);
        let zero = FieldElement::zero(&spec);
        // x >= 0, y >= 0, z >= 0, x - y - z >= 0 is nonzero (contains e1).
        let rows = vec![
            vec![one.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), one.clone(), zero.clone()],
            vec![zero.clone(), zero.clone(), one.clone()],
            vec![one.clone(), one.neg(), one.neg()],
        ];
        let p = cone_nonzero_point(&rows, 3, &spec).unwrap();
        for r in &rows {
            assert!(fe_dot(r, &p).sign() >= 0);
        }
        // All six half-space pairs: origin only.
        let mut degenerate = vec![];
        for i in 0..3 {
            let mut r = vec![zero.clone(), zero.clone(), zero.clone()];
            r[i] = one.clone();
            degenerate.push(r.clone());
            r[i] = one.neg();
            degenerate.push(r);
        }
        assert!(cone_nonzero_point(&degenerate, 3, &spec).is_none());
    }

    #[test]
    fn gram_schmidt_orthogonalizes() {
        let rows = vec![rv(&[1, 1, 0]), rv(&[1, 0, 1])];
        let out = gram_schmidt_rational(&rows);
        assert_eq!(out.len(), 2);
        assert_eq!(dot_rational(&out[0], &out[1]), Rational::zero());
    }

    /// Fuzz the cone probe against a brute-force grid oracle: whenever some
    /// small integer point satisfies the system, the probe must find a
    /// point too, and anything it returns must satisfy the system exactly.
    #[test]
    fn cone_probe_agrees_with_grid_oracle() {
        let spec = NumberFieldSpec::rational();
        let mut rng = crate::selftest::Rng::new(0x90);
        for d in [2usize, 3] {
            for _ in 0..300 {
                let nrows = 1 + rng.below(5) as usize;
                let rows: Vec<FeVec> = (0..nrows)
                    .map(|_| {
                        (0..d)
                            .map(|_| FieldElement::from_int(&spec, rng.int_in(-3, 3)))
                            .collect()
                    })
                    .collect();
                let found = cone_nonzero_point(&rows, d, &spec);
                if let Some(p) = &found {
                    assert!(!fe_vec_is_zero(p));
                    for r in rows.iter().filter(|r| !fe_vec_is_zero(r)) {
                        assert!(fe_dot(r, p).sign() >= 0, "probe output violates a row");
                    }
                }
                let grid_hit = grid_point(&rows, d, &spec);
                if grid_hit.is_some() {
                    assert!(
                        found.is_some(),
                        "grid found a point but the probe claimed origin-only: {rows:?}"
                    );
                }
            }
        }
    }

    fn grid_point(rows: &[FeVec], d: usize, spec: &Arc<NumberFieldSpec>) -> Option<Vec<i64>> {
        let range = -3i64..=3;
        let mut coords = vec![0i64; d];
        fn rec(
            rows: &[FeVec],
            spec: &Arc<NumberFieldSpec>,
            coords: &mut Vec<i64>,
            slot: usize,
            range: &std::ops::RangeInclusive<i64>,
        ) -> Option<Vec<i64>> {
            if slot == coords.len() {
                if coords.iter().all(|&c| c == 0) {
                    return None;
                }
                let p: FeVec = coords
                    .iter()
                    .map(|&c| FieldElement::from_int(spec, c))
                    .collect();
                let ok = rows
                    .iter()
                    .filter(|r| !fe_vec_is_zero(r))
                    .all(|r| fe_dot(r, &p).sign() >= 0);
                return if ok { Some(coords.clone()) } else { None };
            }
            for c in range.clone() {
                coords[slot] = c;
                if let Some(hit) = rec(rows, spec, coords, slot + 1, range) {
                    return Some(hit);
                }
            }
            None
        }
        rec(rows, spec, &mut coords, 0, &range)
    }
}
