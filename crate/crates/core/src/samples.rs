//! Reference ideals and seeded random instance generators.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::cellcomplex::{FaceSpec, LabeledCellComplex, Vertex};
use crate::error::Result;
use crate::hull::{embedded_hull, orient_to_simplex};
use crate::monomial::{minimize, ExponentVector, MonomialIdeal};

pub use rand::SeedableRng;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `(z1, z2, z3)^2`: the smallest non-generic ideal whose hull complex has an
/// interior triangle.
pub fn example_ideal() -> MonomialIdeal {
    MonomialIdeal::from_slices(&[
        &[2, 0, 0],
        &[1, 1, 0],
        &[1, 0, 1],
        &[0, 2, 0],
        &[0, 1, 1],
        &[0, 0, 2],
    ])
    .expect("valid generators")
}

/// A minimal cellular resolution of [`example_ideal`]: its hull complex with
/// the edge between `z1*z2` and `z1*z3` removed, merging the corner triangle
/// at `z1^2` with the inner triangle into a quadrilateral.
pub fn example_minimal_complex() -> Result<LabeledCellComplex> {
    let hull = embedded_hull(&example_ideal())?;
    let vertices: Vec<Vertex> = hull.vertices().cloned().collect();
    let id = |label: [u32; 3]| {
        let label = ExponentVector::from(label);
        vertices
            .iter()
            .find(|v| v.label == label)
            .map(|v| v.id)
            .expect("generator present")
    };
    let quad = vec![id([2, 0, 0]), id([1, 1, 0]), id([0, 1, 1]), id([1, 0, 1])];
    let right = vec![id([0, 2, 0]), id([1, 1, 0]), id([0, 1, 1])];
    let top = vec![id([0, 0, 2]), id([1, 0, 1]), id([0, 1, 1])];
    let mut x = LabeledCellComplex::from_faces(
        3,
        vertices.clone(),
        vec![FaceSpec::new(quad), FaceSpec::new(right), FaceSpec::new(top)],
    )?;
    let tops: Vec<usize> = x.faces_of_dim(2).collect();
    orient_to_simplex(&mut x, &tops)?;
    Ok(x)
}

/// Random Artinian ideal in two variables with between 2 and `max_gens`
/// generators and exponents at most `max_exp`.
pub fn random_staircase(rng: &mut SampleRng, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let r = rng.gen_range(2..=max_gens.max(2)).min(max_exp as usize + 1);
    let mut xs: Vec<u32> = (1..=max_exp).collect();
    xs.shuffle(rng);
    let mut a: Vec<u32> = xs[..r - 1].to_vec();
    a.push(0);
    a.sort_unstable_by(|x, y| y.cmp(x));
    xs.shuffle(rng);
    let mut b: Vec<u32> = xs[..r - 1].to_vec();
    b.push(0);
    b.sort_unstable();
    let gens = a
        .into_iter()
        .zip(b)
        .map(|(x, y)| ExponentVector::from(vec![x, y]))
        .collect();
    MonomialIdeal::new(gens).expect("staircase generators are valid")
}

/// Random Artinian ideal in `n` variables: pure powers in `[1, max_exp]`
/// plus up to `extra` random mixed generators, minimized.
pub fn random_artinian(rng: &mut SampleRng, n: usize, max_exp: u32, extra: usize) -> MonomialIdeal {
    let b: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=max_exp)).collect();
    let mut gens: Vec<ExponentVector> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = b[i];
            ExponentVector::from(e)
        })
        .collect();
    let count = rng.gen_range(0..=extra);
    for _ in 0..count {
        let e: Vec<u32> = b.iter().map(|&bi| rng.gen_range(0..bi)).collect();
        if e.iter().any(|&x| x > 0) {
            gens.push(ExponentVector::from(e));
        }
    }
    minimize(gens).expect("nonempty generator list")
}

/// Random generic Artinian ideal, by rejection sampling.
pub fn random_generic(rng: &mut SampleRng, n: usize, max_exp: u32, extra: usize) -> MonomialIdeal {
    loop {
        let m = random_artinian(rng, n, max_exp, extra);
        if m.is_generic() && m.len() > n {
            return m;
        }
    }
}

/// Random complete intersection with exponents in `[1, max_exp]`.
pub fn random_complete_intersection(rng: &mut SampleRng, n: usize, max_exp: u32) -> MonomialIdeal {
    let b: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=max_exp)).collect();
    MonomialIdeal::complete_intersection(&b).expect("positive exponents")
}

/// Flip each face of dimension `1..n-1` with probability one half. The top
/// faces keep their orientation, so nothing observable should change.
pub fn random_reorientation(x: &mut LabeledCellComplex, rng: &mut SampleRng) -> usize {
    let top = x.nvars() as i32 - 1;
    let candidates: Vec<usize> = (1..top).flat_map(|k| x.faces_of_dim(k).collect::<Vec<_>>()).collect();
    let mut flipped = 0;
    for f in candidates {
        if rng.gen_bool(0.5) {
            x.reorient(f);
            flipped += 1;
        }
    }
    flipped
}
