//! Exponent vectors, monomial ideals and their staircases.
//!
//! A monomial `z^a` is stored as its exponent vector `a`. Ideals keep only
//! their minimal generators, sorted in descending lexicographic order so that
//! the pure power of `z_1` comes first and, for `n = 2`, the generators run
//! along the staircase from `(a_1, 0)` down to `(0, b_r)`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<u32>);

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl ExponentVector {
    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    fn check_len(&self, other: &ExponentVector) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    /// `z^self` divides `z^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Least common multiple: componentwise maximum.
    pub fn lcm(&self, other: &ExponentVector) -> Result<ExponentVector> {
        self.check_len(other)?;
        Ok(self.join(other))
    }

    pub(crate) fn join(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    /// `self - other`, or `None` when some entry would go negative.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        if self.len() != other.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn checked_add(&self, other: &ExponentVector) -> Result<ExponentVector> {
        self.check_len(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    /// Variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &a)| a > 0).map(|(i, _)| i)
    }

    /// Index of the variable when `self` is a pure power `z_i^a` with `a > 0`.
    pub fn pure_power_variable(&self) -> Option<usize> {
        let mut support = self.support();
        let i = support.next()?;
        support.next().is_none().then_some(i)
    }

    /// Human readable monomial, e.g. `z1^2*z2`.
    pub fn to_monomial_string(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| {
                if a == 1 {
                    format!("z{}", i + 1)
                } else {
                    format!("z{}^{}", i + 1, a)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Iterate over all lattice points in the box `[0, upper]` (inclusive).
pub fn box_points(upper: &ExponentVector) -> impl Iterator<Item = ExponentVector> + '_ {
    let n = upper.len();
    let mut current = vec![0u32; n];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = ExponentVector(current.clone());
        done = true;
        for i in (0..n).rev() {
            if current[i] < upper.0[i] {
                current[i] += 1;
                done = false;
                break;
            }
            current[i] = 0;
        }
        Some(out)
    })
}

/// A monomial ideal given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<ExponentVector>,
}

/// `(z_1^{a_1}, ..., z_n^{a_n})` with every `a_i >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IrreducibleComponent {
    pub alpha: ExponentVector,
}

impl IrreducibleComponent {
    pub fn new(alpha: ExponentVector) -> Result<Self> {
        if alpha.0.contains(&0) {
            return Err(Error::Parse(format!(
                "irreducible component {alpha:?} has a zero exponent"
            )));
        }
        Ok(IrreducibleComponent { alpha })
    }

    pub fn contains(&self, beta: &ExponentVector) -> bool {
        self.alpha.0.iter().zip(&beta.0).any(|(a, b)| b >= a)
    }
}

fn descending(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    b.cmp(a)
}

/// Reduce a generator list to its divisibility-minimal subset.
pub fn minimize(generators: Vec<ExponentVector>) -> Result<MonomialIdeal> {
    let n = generators.first().ok_or(Error::EmptyGenerators)?.len();
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if let Some(bad) = generators.iter().find(|g| g.len() != n) {
        return Err(Error::LengthMismatch {
            expected: n,
            found: bad.len(),
        });
    }
    let distinct: BTreeSet<ExponentVector> = generators.into_iter().collect();
    let mut minimal: Vec<ExponentVector> = distinct
        .iter()
        .filter(|g| !distinct.iter().any(|h| h != *g && h.divides(g)))
        .cloned()
        .collect();
    minimal.sort_by(descending);
    Ok(MonomialIdeal {
        n,
        generators: minimal,
    })
}

impl MonomialIdeal {
    pub fn new(generators: Vec<ExponentVector>) -> Result<Self> {
        minimize(generators)
    }

    pub fn from_slices(generators: &[&[u32]]) -> Result<Self> {
        minimize(generators.iter().map(|g| ExponentVector(g.to_vec())).collect())
    }

    /// `(z_1^{b_1}, ..., z_n^{b_n})`.
    pub fn complete_intersection(b: &[u32]) -> Result<Self> {
        if b.contains(&0) {
            return Err(Error::Parse("complete intersection exponents must be positive".into()));
        }
        let n = b.len();
        minimize(
            (0..n)
                .map(|i| {
                    let mut e = vec![0; n];
                    e[i] = b[i];
                    ExponentVector(e)
                })
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Does `z^beta` lie in the ideal?
    pub fn contains(&self, beta: &ExponentVector) -> Result<bool> {
        if beta.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: beta.len(),
            });
        }
        Ok(self.generators.iter().any(|g| g.divides(beta)))
    }

    pub fn is_artinian(&self) -> bool {
        self.first_missing_pure_power().is_none()
    }

    fn first_missing_pure_power(&self) -> Option<usize> {
        (0..self.n).find(|&i| {
            !self
                .generators
                .iter()
                .any(|g| g.pure_power_variable() == Some(i))
        })
    }

    /// The exponents `b_i` of the pure-power generators `z_i^{b_i}`.
    pub fn pure_power_exponents(&self) -> Result<ExponentVector> {
        if let Some(variable) = self.first_missing_pure_power() {
            return Err(Error::NotArtinian {
                variable: variable + 1,
            });
        }
        let mut b = vec![0; self.n];
        for g in &self.generators {
            if let Some(i) = g.pure_power_variable() {
                b[i] = g.0[i];
            }
        }
        Ok(ExponentVector(b))
    }

    /// Join of all generators.
    pub fn lcm_all(&self) -> ExponentVector {
        self.generators
            .iter()
            .fold(ExponentVector::zero(self.n), |acc, g| acc.join(g))
    }

    /// All joins of nonempty generator subsets, by fixed-point closure.
    pub fn lcm_lattice(&self) -> BTreeSet<ExponentVector> {
        let mut lattice: BTreeSet<ExponentVector> = self.generators.iter().cloned().collect();
        let mut frontier: Vec<ExponentVector> = lattice.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for g in &self.generators {
                    let j = a.join(g);
                    if lattice.insert(j.clone()) {
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        lattice
    }

    /// `dim O/M`, the number of standard monomials.
    ///
    /// Counted by slicing along the last variable: the slice `z_n = j` is the
    /// staircase of the ideal in `n - 1` variables generated by the generators
    /// with last exponent at most `j`.
    pub fn multiplicity(&self) -> Result<u64> {
        let b = self.pure_power_exponents()?;
        let gens: Vec<&[u32]> = self.generators.iter().map(|g| g.as_slice()).collect();
        count_standard(&gens, b.as_slice()).ok_or(Error::Overflow)
    }

    /// Bayer-Peeva-Sturmfels genericity.
    pub fn is_generic(&self) -> bool {
        let gens = &self.generators;
        for i in 0..gens.len() {
            for j in (i + 1)..gens.len() {
                let shares = (0..self.n).any(|l| gens[i].0[l] > 0 && gens[i].0[l] == gens[j].0[l]);
                if !shares {
                    continue;
                }
                let lcm = gens[i].join(&gens[j]);
                let strictly_divided = gens.iter().enumerate().any(|(k, g)| {
                    k != i
                        && k != j
                        && g.0.iter().zip(&lcm.0).all(|(&e, &m)| if m > 0 { e < m } else { e == 0 })
                });
                if !strictly_divided {
                    return false;
                }
            }
        }
        true
    }

    /// Generators of a two-variable staircase as `(a_i, b_i)` with
    /// `a_1 > ... > a_r = 0` and `0 = b_1 < ... < b_r`.
    pub fn staircase_corners_2d(&self) -> Result<Vec<(u32, u32)>> {
        if self.n != 2 {
            return Err(Error::WrongDimension {
                expected: 2,
                found: self.n,
            });
        }
        self.pure_power_exponents()?;
        let corners: Vec<(u32, u32)> = self.generators.iter().map(|g| (g.0[0], g.0[1])).collect();
        let monotone = corners.windows(2).all(|w| w[0].0 > w[1].0 && w[0].1 < w[1].1);
        let ends = corners.first().map(|c| c.1) == Some(0) && corners.last().map(|c| c.0) == Some(0);
        if !(monotone && ends) {
            return Err(Error::NotAStaircase);
        }
        Ok(corners)
    }
}

fn count_standard(gens: &[&[u32]], upper: &[u32]) -> Option<u64> {
    let n = upper.len();
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return Some(0);
    }
    if n == 1 {
        return Some(gens.iter().map(|g| g[0]).min().unwrap_or(upper[0]) as u64);
    }
    let last = n - 1;
    let mut total: u64 = 0;
    for j in 0..upper[last] {
        let slice: Vec<&[u32]> = gens
            .iter()
            .filter(|g| g[last] <= j)
            .map(|g| &g[..last])
            .collect();
        total = total.checked_add(count_standard(&slice, &upper[..last])?)?;
    }
    Some(total)
}

/// `beta` lies in the intersection of the components.
pub fn irreducible_intersection_contains(
    components: &[IrreducibleComponent],
    beta: &ExponentVector,
) -> Result<bool> {
    if components.is_empty() {
        return Err(Error::EmptyComponents);
    }
    Ok(components.iter().all(|c| c.contains(beta)))
}

/// Scan the box `[0, upper]` and compare the intersection of the components
/// with `M` pointwise.
pub fn equals_ideal(
    components: &[IrreducibleComponent],
    ideal: &MonomialIdeal,
    upper: Option<&ExponentVector>,
) -> Result<bool> {
    if components.is_empty() {
        return Err(Error::EmptyComponents);
    }
    let b = ideal.pure_power_exponents()?;
    let upper = upper.cloned().unwrap_or_else(|| b.clone());
    if !b.divides(&upper) {
        return Err(Error::BoxTooSmall);
    }
    for beta in box_points(&upper) {
        if irreducible_intersection_contains(components, &beta)? != ideal.contains(&beta)? {
            return Ok(false);
        }
    }
    Ok(true)
}
