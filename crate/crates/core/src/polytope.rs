//! Face lattices of convex hulls of finite point sets, and a small exact
//! feasibility solver used to classify faces by their normal cones.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg::{det_int, integer_rows, rank_int, Rational};

/// A face of `conv(points)`, given by the indices of all input points lying
/// on it, together with its affine dimension.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HullFace {
    pub dim: usize,
    pub points: Vec<usize>,
}

fn diff(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn affine_rank(pts: &[Vec<BigInt>], idx: &[usize]) -> usize {
    let base = &pts[idx[0]];
    let diffs: Vec<Vec<BigInt>> = idx[1..].iter().map(|&i| diff(&pts[i], base)).collect();
    rank_int(diffs)
}

/// Affine dimension of a rational point set (`-1` for the empty set).
pub fn affine_dimension(points: &[Vec<Rational>]) -> i32 {
    if points.is_empty() {
        return -1;
    }
    let pts = integer_rows(points);
    let idx: Vec<usize> = (0..pts.len()).collect();
    affine_rank(&pts, &idx) as i32
}

fn combinations(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, len: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            if len - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, len, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, len, k, &mut Vec::new(), &mut out);
    out
}

/// Facets of `conv(pts[idx])` inside its own affine hull, where `dim` is
/// the affine dimension of the set.
fn facets(pts: &[Vec<BigInt>], idx: &[usize], dim: usize) -> Vec<Vec<usize>> {
    let base = &pts[idx[0]];
    let diffs: Vec<Vec<BigInt>> = idx.iter().map(|&i| diff(&pts[i], base)).collect();
    // Choose `dim` coordinates on which the affine hull projects injectively.
    let ambient = base.len();
    let mut chosen: Vec<usize> = Vec::new();
    for c in 0..ambient {
        let mut trial = chosen.clone();
        trial.push(c);
        let cols: Vec<Vec<BigInt>> = diffs
            .iter()
            .map(|d| trial.iter().map(|&t| d[t].clone()).collect())
            .collect();
        if rank_int(cols) == trial.len() {
            chosen = trial;
        }
        if chosen.len() == dim {
            break;
        }
    }
    let proj: Vec<Vec<BigInt>> = diffs
        .iter()
        .map(|d| chosen.iter().map(|&c| d[c].clone()).collect())
        .collect();

    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    for subset in combinations(idx.len(), dim) {
        let anchor = &proj[subset[0]];
        let spanning: Vec<Vec<BigInt>> = subset[1..].iter().map(|&s| diff(&proj[s], anchor)).collect();
        // Generalized cross product of the dim-1 spanning vectors.
        let normal: Vec<BigInt> = (0..dim)
            .map(|skip| {
                let minor: Vec<Vec<BigInt>> = spanning
                    .iter()
                    .map(|v| (0..dim).filter(|&c| c != skip).map(|c| v[c].clone()).collect())
                    .collect();
                let d = det_int(minor);
                if skip % 2 == 0 {
                    d
                } else {
                    -d
                }
            })
            .collect();
        if normal.iter().all(Zero::is_zero) {
            continue;
        }
        let sides: Vec<BigInt> = proj
            .iter()
            .map(|p| {
                diff(p, anchor)
                    .iter()
                    .zip(&normal)
                    .fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
            })
            .collect();
        let has_pos = sides.iter().any(Signed::is_positive);
        let has_neg = sides.iter().any(Signed::is_negative);
        if has_pos && has_neg {
            continue;
        }
        let facet: Vec<usize> = sides
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_zero())
            .map(|(i, _)| idx[i])
            .collect();
        found.insert(facet);
    }
    found.into_iter().collect()
}

/// All nonempty faces of `conv(points)`, including the polytope itself,
/// sorted by dimension and then by point set.
pub fn face_lattice(points: &[Vec<Rational>]) -> Vec<HullFace> {
    if points.is_empty() {
        return Vec::new();
    }
    let pts = integer_rows(points);
    let mut memo: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut stack: Vec<Vec<usize>> = vec![(0..pts.len()).collect()];
    while let Some(idx) = stack.pop() {
        if memo.contains_key(&idx) {
            continue;
        }
        let dim = affine_rank(&pts, &idx);
        memo.insert(idx.clone(), dim);
        if dim > 0 {
            for f in facets(&pts, &idx, dim) {
                if !memo.contains_key(&f) {
                    stack.push(f);
                }
            }
        }
    }
    let mut out: Vec<HullFace> = memo
        .into_iter()
        .map(|(points, dim)| HullFace { dim, points })
        .collect();
    out.sort();
    out
}

/// Exact phase-one simplex: is there `x >= 0` with `a.x = b` for every
/// `(a, b)` in `equalities` and `a.x >= b` for every `(a, b)` in
/// `inequalities`? Bland's rule guarantees termination.
pub fn feasible(
    nvars: usize,
    equalities: &[(Vec<Rational>, Rational)],
    inequalities: &[(Vec<Rational>, Rational)],
) -> bool {
    let nslack = inequalities.len();
    let m = equalities.len() + nslack;
    if m == 0 {
        return true;
    }
    let first_artificial = nvars + nslack;
    let ncols = first_artificial + m;
    let rhs = ncols;
    let one = Rational::from_integer(1.into());

    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m + 1);
    let rows = equalities
        .iter()
        .map(|(a, b)| (a, b, None))
        .chain(inequalities.iter().enumerate().map(|(s, (a, b))| (a, b, Some(s))));
    for (i, (a, b, slack)) in rows.enumerate() {
        let mut r = vec![Rational::zero(); ncols + 1];
        r[..nvars].clone_from_slice(a);
        if let Some(s) = slack {
            r[nvars + s] = -one.clone();
        }
        r[rhs] = b.clone();
        if r[rhs].is_negative() {
            for x in r.iter_mut() {
                *x = -x.clone();
            }
        }
        r[first_artificial + i] = one.clone();
        tab.push(r);
    }
    // Reduced costs of the phase-one objective (sum of artificials).
    let mut cost = vec![Rational::zero(); ncols + 1];
    for r in &tab {
        for j in (0..first_artificial).chain(std::iter::once(rhs)) {
            cost[j] -= &r[j];
        }
    }
    let mut basis: Vec<usize> = (first_artificial..ncols).collect();

    loop {
        let Some(enter) = (0..ncols).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for (i, r) in tab.iter().enumerate() {
            if r[enter].is_positive() {
                let ratio = &r[rhs] / &r[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((pivot_row, _)) = leave else {
            // Unbounded phase-one objective cannot happen (it is bounded below).
            break;
        };
        let inv = tab[pivot_row][enter].recip();
        for x in tab[pivot_row].iter_mut() {
            *x *= &inv;
        }
        let pivot = tab[pivot_row].clone();
        for (i, r) in tab.iter_mut().enumerate() {
            if i != pivot_row && !r[enter].is_zero() {
                let f = r[enter].clone();
                for (x, p) in r.iter_mut().zip(&pivot) {
                    *x -= p * &f;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (x, p) in cost.iter_mut().zip(&pivot) {
                *x -= p * &f;
            }
        }
        basis[pivot_row] = enter;
    }
    cost[rhs].is_zero()
}
