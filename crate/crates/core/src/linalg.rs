//! Exact dense linear algebra over big integers and big rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn centroid(points: &[&[Rational]]) -> Vec<Rational> {
    let dim = points[0].len();
    let count = q(points.len() as i64);
    (0..dim)
        .map(|i| points.iter().fold(Rational::zero(), |acc, p| acc + &p[i]) / &count)
        .collect()
}

/// Scale a set of rational rows by the common denominator so that every
/// entry becomes an integer. Affine and orientation predicates are invariant
/// under this positive scaling.
pub fn integer_rows(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    let denom = rows
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    rows.iter()
        .map(|r| r.iter().map(|x| x.numer() * (&denom / x.denom())).collect())
        .collect()
}

/// Fraction-free (Bareiss) elimination. Returns the rank and, for square
/// input, the determinant.
fn bareiss(mut m: Vec<Vec<BigInt>>) -> (usize, BigInt) {
    let rows = m.len();
    if rows == 0 {
        return (0, BigInt::one());
    }
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            m.swap(pivot, rank);
            sign = -sign;
        }
        for r in (rank + 1)..rows {
            for c in (col + 1)..cols {
                let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    let det = if rows == cols && rank == rows {
        if sign < 0 {
            -prev
        } else {
            prev
        }
    } else {
        BigInt::zero()
    };
    (rank, det)
}

pub fn rank_int(m: Vec<Vec<BigInt>>) -> usize {
    bareiss(m).0
}

pub fn det_int(m: Vec<Vec<BigInt>>) -> BigInt {
    if m.is_empty() {
        return BigInt::one();
    }
    bareiss(m).1
}

pub fn rank_q(rows: &[Vec<Rational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rank_int(integer_rows(rows))
}

/// Determinant of a square rational matrix.
pub fn det_q(rows: &[Vec<Rational>]) -> Rational {
    if rows.is_empty() {
        return Rational::one();
    }
    // Scale each row separately; the determinant scales by the product.
    let mut scale = Rational::one();
    let mut int_rows = Vec::with_capacity(rows.len());
    for r in rows {
        let denom = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        scale *= Rational::from_integer(denom.clone());
        int_rows.push(r.iter().map(|x| x.numer() * (&denom / x.denom())).collect());
    }
    Rational::from_integer(det_int(int_rows)) / scale
}

pub fn signum(x: &Rational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Sign of `det(A^T B)` for two lists of `k` vectors of equal length.
/// This is the sign of the orientation of `a` measured against `b` when both
/// bases span the same subspace.
pub fn cross_gram_sign(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> i32 {
    let m: Vec<Vec<Rational>> = a.iter().map(|u| b.iter().map(|w| dot(u, w)).collect()).collect();
    signum(&det_q(&m))
}

/// Solve `sum_j x_j * columns[j] = target` exactly. Returns `None` when the
/// system is inconsistent. Free variables are set to zero.
pub fn solve_columns(columns: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let rows = target.len();
    let cols = columns.len();
    let mut aug: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut r: Vec<Rational> = columns.iter().map(|c| c[i].clone()).collect();
            r.push(target[i].clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(p, row);
        let inv = aug[row][col].recip();
        for c in col..=cols {
            aug[row][c] = &aug[row][c] * &inv;
        }
        for r in 0..rows {
            if r != row && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in col..=cols {
                    let v = &aug[row][c] * &f;
                    aug[r][c] -= v;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    if aug[row..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn bareiss_determinant_and_rank() {
        let m = vec![
            vec![bi(2), bi(0), bi(1)],
            vec![bi(1), bi(3), bi(2)],
            vec![bi(1), bi(1), bi(1)],
        ];
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(det_int(m.clone()), bi(0));
        assert_eq!(rank_int(m), 2);
        let m = vec![vec![bi(0), bi(1)], vec![bi(1), bi(0)]];
        assert_eq!(det_int(m), bi(-1));
        let hollow = vec![
            vec![bi(-1), bi(-1), bi(0)],
            vec![bi(1), bi(0), bi(-1)],
            vec![bi(0), bi(1), bi(1)],
        ];
        assert_eq!(rank_int(hollow), 2);
    }

    #[test]
    fn rational_determinant() {
        let half = Rational::new(bi(1), bi(2));
        let m = vec![vec![half.clone(), q(1)], vec![q(3), q(4)]];
        assert_eq!(det_q(&m), q(-1));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let cols = vec![vec![q(1), q(0), q(1)], vec![q(0), q(1), q(1)]];
        let x = solve_columns(&cols, &[q(2), q(3), q(5)]).unwrap();
        assert_eq!(x, vec![q(2), q(3)]);
        assert!(solve_columns(&cols, &[q(2), q(3), q(4)]).is_none());
    }
}
