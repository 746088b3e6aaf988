//! Independent brute-force oracles and instance sets shared by the
//! integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use cellres::cycle::Rectangle2D;
use cellres::monomial::box_points;
use cellres::samples::{self, SampleRng};
use cellres::{ExponentVector, FreeComplex, MonomialIdeal};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub fn ev(v: &[u32]) -> ExponentVector {
    ExponentVector::from(v.to_vec())
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Membership by direct divisibility against the generators.
pub fn in_ideal(gens: &[ExponentVector], beta: &[u32]) -> bool {
    gens.iter().any(|g| divides(g.as_slice(), beta))
}

/// Number of lattice points outside the ideal, by scanning the box.
pub fn box_count(m: &MonomialIdeal) -> u64 {
    let upper = m.pure_power_exponents().unwrap();
    box_points(&upper)
        .filter(|b| !in_ideal(m.generators(), b.as_slice()))
        .count() as u64
}

/// Rank over the rationals by plain Gaussian elimination.
pub fn rank_rational(mut rows: Vec<Vec<BigRational>>) -> usize {
    let Some(cols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in rank + 1..rows.len() {
            if rows[r][c].is_zero() {
                continue;
            }
            let f = &rows[r][c] / &pivot;
            for k in c..cols {
                let v = &rows[rank][k] * &f;
                rows[r][k] -= v;
            }
        }
        rank += 1;
    }
    rank
}

/// Exactness of the multigraded strands of `F` at every `beta` in the box
/// `[0, upper]`, at homological levels `0..=N`. Returns the first failing
/// degree in box order.
pub fn strand_oracle(f: &FreeComplex, upper: &ExponentVector) -> Option<ExponentVector> {
    for beta in box_points(upper) {
        let live = |k: i32| -> Vec<usize> {
            f.level(k)
                .iter()
                .enumerate()
                .filter(|(_, g)| divides(g.label.as_slice(), beta.as_slice()))
                .map(|(i, _)| i)
                .collect()
        };
        let rank_of = |k: i32| -> usize {
            if k < 0 || k > f.length() {
                return 0;
            }
            let rows = live(k - 1);
            let cols = live(k);
            if rows.is_empty() || cols.is_empty() {
                return 0;
            }
            let m = f.matrix(k);
            let dense: Vec<Vec<BigRational>> = rows
                .iter()
                .map(|&i| {
                    cols.iter()
                        .map(|&j| BigRational::from_integer(BigInt::from(m[i][j].sign)))
                        .collect()
                })
                .collect();
            rank_rational(dense)
        };
        for k in 0..=f.length() {
            let dim = live(k).len();
            if dim - rank_of(k) != rank_of(k + 1) {
                return Some(beta);
            }
        }
    }
    None
}

fn lcm_of(gens: &[ExponentVector], subset: &[usize]) -> Vec<u32> {
    let n = gens[0].len();
    let mut out = vec![0; n];
    for &i in subset {
        for (o, g) in out.iter_mut().zip(gens[i].as_slice()) {
            *o = (*o).max(*g);
        }
    }
    out
}

/// Scarf faces: `I` equals the set of generators dividing `m_I`, and no
/// proper subset obtained by dropping one element has the same lcm.
pub fn scarf_oracle(m: &MonomialIdeal) -> BTreeSet<Vec<usize>> {
    let gens = m.generators();
    let r = gens.len();
    let mut out = BTreeSet::new();
    for mask in 1u64..(1 << r) {
        let subset: Vec<usize> = (0..r).filter(|i| mask >> i & 1 == 1).collect();
        let l = lcm_of(gens, &subset);
        let dividing: Vec<usize> = (0..r).filter(|&i| divides(gens[i].as_slice(), &l)).collect();
        if dividing != subset {
            continue;
        }
        let redundant = subset.iter().any(|&i| {
            let rest: Vec<usize> = subset.iter().copied().filter(|&j| j != i).collect();
            !rest.is_empty() && lcm_of(gens, &rest) == l
        });
        if !redundant {
            out.insert(subset);
        }
    }
    out
}

/// `None` when the rectangles are pairwise disjoint, cover the staircase
/// exactly, and their areas add up to the number of standard monomials.
pub fn partition_defect(m: &MonomialIdeal, rects: &[Rectangle2D]) -> Option<String> {
    let b = m.pure_power_exponents().unwrap();
    for x in 0..=b.as_slice()[0] {
        for y in 0..=b.as_slice()[1] {
            let hits = rects.iter().filter(|r| r.contains(x, y)).count();
            let expected = usize::from(!in_ideal(m.generators(), &[x, y]));
            if hits != expected {
                return Some(format!("({x}, {y}) covered {hits} times, expected {expected}"));
            }
        }
    }
    let area: u64 = rects.iter().map(Rectangle2D::area).sum();
    (area != box_count(m)).then(|| format!("area {area} != {}", box_count(m)))
}

pub fn box_size(m: &MonomialIdeal) -> u64 {
    m.pure_power_exponents()
        .unwrap()
        .as_slice()
        .iter()
        .map(|&b| b as u64 + 1)
        .product()
}

pub struct Instances {
    pub staircases: Vec<MonomialIdeal>,
    pub small_staircases: Vec<MonomialIdeal>,
    pub generic3: Vec<MonomialIdeal>,
    pub complete_intersections: Vec<MonomialIdeal>,
}

/// Fixed, seeded instance sets.
pub fn instances() -> Instances {
    let mut rng: SampleRng = samples::rng(20240611);
    let staircases = (0..50).map(|_| samples::random_staircase(&mut rng, 6, 8)).collect();
    let small_staircases = (0..20).map(|_| samples::random_staircase(&mut rng, 4, 4)).collect();
    let generic3 = (0..10).map(|_| samples::random_generic(&mut rng, 3, 4, 6)).collect();
    let mut complete_intersections = Vec::new();
    for n in 2..=4 {
        for _ in 0..3 {
            complete_intersections.push(samples::random_complete_intersection(&mut rng, n, 5));
        }
    }
    Instances {
        staircases,
        small_staircases,
        generic3,
        complete_intersections,
    }
}

pub fn product(b: &[u32]) -> u64 {
    b.iter().map(|&x| x as u64).product()
}
