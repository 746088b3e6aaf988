//! Differentials of the resolution maps as matrices of holomorphic forms, the
//! fundamental-cycle identity `dphi o R = n! m [0]`, and the rectangle
//! partitions of two-dimensional staircases.
//!
//! Sign convention: forms are multiplied as `A_ik ^ B_kj` with `dphi_0`
//! leftmost, and `naive` below denotes the resulting coefficient of
//! `z^{alpha - 1} dz_1 ^ ... ^ dz_n` paired with the residue signs. Letting
//! the form parts act on the current moves them past the `n` residue factors
//! in reverse order, which contributes `(-1)^{n(n-1)/2}` for the full
//! differential; the per-permutation identity carries its own normalisation
//! `(-1)^{n^2}`, so that its expected value is `c_n m` with
//! `c_n = (-1)^{n^2} (-1)^{n(n-1)/2}`. The permutation values then sum to
//! `c_n` times the full value.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::cellcomplex::LabeledCellComplex;
use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::residue::residue_from_theorem;
use crate::resolution::{cellular_complex, FreeComplex};

/// `coeff * z^exponent dz_{i_1} ^ ... ^ dz_{i_k}` with increasing indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormMonomial {
    pub coeff: BigInt,
    pub exponent: ExponentVector,
    pub dz: Vec<usize>,
}

/// Sign and sorted union of two wedge index lists, or `None` on a repeat.
fn wedge_indices(a: &[usize], b: &[usize]) -> Option<(i32, Vec<usize>)> {
    let mut merged: Vec<usize> = a.iter().chain(b).copied().collect();
    let mut sign = 1;
    // insertion sort, counting transpositions
    for i in 1..merged.len() {
        let mut j = i;
        while j > 0 && merged[j - 1] > merged[j] {
            merged.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if merged.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, merged))
}

/// Sign of a permutation of `0..n` given as a list.
pub fn permutation_sign(p: &[usize]) -> i32 {
    let mut sign = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// A sum of form monomials in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Form {
    terms: BTreeMap<(ExponentVector, Vec<usize>), BigInt>,
}

impl Form {
    pub fn zero() -> Self {
        Form::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exponent: ExponentVector, dz: Vec<usize>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let key = (exponent, dz);
        let slot = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Add `coeff * z^exponent dz_list` for an arbitrary index list.
    pub fn add_unsorted(&mut self, exponent: ExponentVector, dz: &[usize], coeff: BigInt) {
        if let Some((sign, sorted)) = wedge_indices(dz, &[]) {
            self.add_term(exponent, sorted, coeff * sign);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = FormMonomial> + '_ {
        self.terms.iter().map(|((e, dz), c)| FormMonomial {
            coeff: c.clone(),
            exponent: e.clone(),
            dz: dz.clone(),
        })
    }

    pub fn coefficient(&self, exponent: &ExponentVector, dz: &[usize]) -> BigInt {
        self.terms
            .get(&(exponent.clone(), dz.to_vec()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    fn accumulate(&mut self, other: &Form) {
        for ((e, dz), c) in &other.terms {
            self.add_term(e.clone(), dz.clone(), c.clone());
        }
    }

    pub fn wedge(&self, other: &Form) -> Result<Form> {
        let mut out = Form::zero();
        for ((e1, d1), c1) in &self.terms {
            for ((e2, d2), c2) in &other.terms {
                if let Some((sign, dz)) = wedge_indices(d1, d2) {
                    out.add_term(e1.checked_add(e2)?, dz, c1 * c2 * sign);
                }
            }
        }
        Ok(out)
    }
}

/// Dense matrix of forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Form>>,
}

impl FormMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FormMatrix {
            rows,
            cols,
            entries: vec![vec![Form::zero(); cols]; rows],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Form {
        &self.entries[i][j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Form {
        &mut self.entries[i][j]
    }

    pub fn mul(&self, other: &FormMatrix) -> Result<FormMatrix> {
        if self.cols != other.rows {
            return Err(Error::MatrixShape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = FormMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.entries[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if !other.entries[k][j].is_zero() {
                        let p = self.entries[i][k].wedge(&other.entries[k][j])?;
                        out.entries[i][j].accumulate(&p);
                    }
                }
            }
        }
        Ok(out)
    }
}

fn derivative_matrix(f: &FreeComplex, k: i32, variables: &[usize]) -> FormMatrix {
    let rows = f.level(k - 1).len();
    let cols = f.level(k).len();
    let mut out = FormMatrix::zeros(rows, cols);
    for (i, row) in f.matrix(k).iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            for &v in variables {
                let power = e.exp.as_slice()[v];
                if power == 0 {
                    continue;
                }
                let mut lowered = e.exp.clone();
                lowered.0[v] -= 1;
                out.entries[i][j].add_term(lowered, vec![v], BigInt::from(e.sign) * power);
            }
        }
    }
    out
}

/// `d phi_k`, entrywise `sum_i d/dz_i (.) dz_i`.
pub fn differentiate(f: &FreeComplex, k: i32) -> FormMatrix {
    let all: Vec<usize> = (0..f.nvars()).collect();
    derivative_matrix(f, k, &all)
}

/// The `d/dz_i (.) dz_i` part of `d phi_k`.
pub fn partial_only(f: &FreeComplex, k: i32, i: usize) -> FormMatrix {
    derivative_matrix(f, k, &[i])
}

/// Left-to-right product.
pub fn compose(factors: &[FormMatrix]) -> Result<FormMatrix> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::MatrixShape("empty product".into()))?;
    rest.iter().try_fold(first.clone(), |acc, m| acc.mul(m))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleReport {
    #[serde(serialize_with = "crate::json::serialize_bigint")]
    pub lhs: BigInt,
    #[serde(serialize_with = "crate::json::serialize_bigint")]
    pub rhs: BigInt,
    pub ok: bool,
}

struct Setup {
    n: usize,
    complex: FreeComplex,
    /// (column index in the top level, residue sign, alpha)
    entries: Vec<(usize, i8, ExponentVector)>,
    multiplicity: u64,
}

fn setup(x: &LabeledCellComplex, m: &MonomialIdeal) -> Result<Setup> {
    let n = m.n();
    if x.nvars() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: x.nvars(),
        });
    }
    let b = m.pure_power_exponents()?;
    let r = residue_from_theorem(x, &b)?;
    let complex = cellular_complex(x)?;
    let top = n as i32 - 1;
    let mut entries = Vec::new();
    for (j, g) in complex.level(top).iter().enumerate() {
        let c = &r.entries[&g.vertices];
        if !c.is_zero() {
            entries.push((j, c.sign, c.alpha.clone()));
        }
    }
    Ok(Setup {
        n,
        complex,
        entries,
        multiplicity: m.multiplicity()?,
    })
}

/// Pair a `1 x |X_{n-1}|` matrix of `n`-forms with the residue current.
fn contract(s: &Setup, product: &FormMatrix) -> BigInt {
    let volume: Vec<usize> = (0..s.n).collect();
    let mut total = BigInt::zero();
    for (j, sign, alpha) in &s.entries {
        let shifted = ExponentVector::from(alpha.as_slice().iter().map(|a| a - 1).collect::<Vec<u32>>());
        total += product.get(0, *j).coefficient(&shifted, &volume) * BigInt::from(*sign);
    }
    total
}

fn factorial(n: usize) -> BigInt {
    (1..=n as u64).fold(BigInt::one(), |acc, k| acc * k)
}

fn sign_power(e: usize) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `c_n = (-1)^{n^2} (-1)^{n(n-1)/2}`.
pub fn c_n(n: usize) -> i32 {
    if (n * n + n * (n - 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Full-differential value before the reordering sign.
fn naive_full(s: &Setup) -> Result<BigInt> {
    let factors: Vec<FormMatrix> = (0..s.n as i32).map(|k| differentiate(&s.complex, k)).collect();
    Ok(contract(s, &compose(&factors)?))
}

fn naive_permutation(s: &Setup, perm: &[usize]) -> Result<BigInt> {
    let factors: Vec<FormMatrix> = perm
        .iter()
        .enumerate()
        .map(|(k, &i)| partial_only(&s.complex, k as i32, i))
        .collect();
    Ok(contract(s, &compose(&factors)?))
}

/// `dphi o R` against `n! m`.
pub fn fundamental_cycle_check(x: &LabeledCellComplex, m: &MonomialIdeal) -> Result<CycleReport> {
    let s = setup(x, m)?;
    let lhs = naive_full(&s)? * sign_power(s.n * (s.n - 1) / 2);
    let rhs = factorial(s.n) * s.multiplicity;
    Ok(CycleReport { ok: lhs == rhs, lhs, rhs })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermutationReport {
    /// Zero-based variable order.
    pub permutation: Vec<usize>,
    #[serde(serialize_with = "crate::json::serialize_bigint")]
    pub lhs: BigInt,
    #[serde(serialize_with = "crate::json::serialize_bigint")]
    pub expected: BigInt,
    pub ok: bool,
    /// Whether the identity is claimed in this setting (`n <= 2` or generic);
    /// otherwise `ok` is an observation only.
    pub claimed: bool,
}

fn validate_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: perm.len(),
        });
    }
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::Parse(format!("{perm:?} is not a permutation of 0..{n}")));
        }
        seen[p] = true;
    }
    Ok(())
}

fn permutation_report(s: &Setup, m: &MonomialIdeal, perm: &[usize]) -> Result<PermutationReport> {
    validate_permutation(perm, s.n)?;
    let lhs = naive_permutation(s, perm)? * sign_power(s.n * s.n);
    let expected = BigInt::from(c_n(s.n)) * s.multiplicity;
    Ok(PermutationReport {
        permutation: perm.to_vec(),
        ok: lhs == expected,
        lhs,
        expected,
        claimed: s.n <= 2 || m.is_generic(),
    })
}

/// Differentiate `phi_k` only in `z_{perm[k]}` and compare with `c_n m`.
pub fn permutation_cycle_check(
    x: &LabeledCellComplex,
    m: &MonomialIdeal,
    perm: &[usize],
) -> Result<PermutationReport> {
    let s = setup(x, m)?;
    permutation_report(&s, m, perm)
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Full check plus every permutation, sharing one setup.
pub fn all_permutation_checks(
    x: &LabeledCellComplex,
    m: &MonomialIdeal,
) -> Result<(CycleReport, Vec<PermutationReport>)> {
    let s = setup(x, m)?;
    let lhs = naive_full(&s)? * sign_power(s.n * (s.n - 1) / 2);
    let rhs = factorial(s.n) * s.multiplicity;
    let perms: Vec<PermutationReport> = permutations(s.n)
        .par_iter()
        .map(|p| permutation_report(&s, m, p))
        .collect::<Result<_>>()?;
    Ok((CycleReport { ok: lhs == rhs, lhs, rhs }, perms))
}

/// Half-open lattice rectangle `[x_lo, x_hi) x [y_lo, y_hi)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Rectangle2D {
    pub x_lo: u32,
    pub x_hi: u32,
    pub y_lo: u32,
    pub y_hi: u32,
}

impl Rectangle2D {
    pub fn area(&self) -> u64 {
        (self.x_hi - self.x_lo) as u64 * (self.y_hi - self.y_lo) as u64
    }

    pub fn contains(&self, x: u32, y: u32) -> bool {
        (self.x_lo..self.x_hi).contains(&x) && (self.y_lo..self.y_hi).contains(&y)
    }

    pub fn intersects(&self, other: &Rectangle2D) -> bool {
        self.x_lo < other.x_hi && other.x_lo < self.x_hi && self.y_lo < other.y_hi && other.y_lo < self.y_hi
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionOrder {
    /// Horizontal strips `[0, a_i) x [b_i, b_{i+1})`.
    P,
    /// Vertical strips `[a_{i+1}, a_i) x [0, b_{i+1})`.
    Q,
}

/// Rectangles partitioning the staircase of a two-variable Artinian ideal
/// with corners `(a_1, 0), ..., (0, b_r)`.
pub fn staircase_partition_2d(m: &MonomialIdeal, order: PartitionOrder) -> Result<Vec<Rectangle2D>> {
    let corners = m.staircase_corners_2d()?;
    Ok(corners
        .windows(2)
        .map(|w| {
            let ((a_i, b_i), (a_next, b_next)) = (w[0], w[1]);
            match order {
                PartitionOrder::P => Rectangle2D {
                    x_lo: 0,
                    x_hi: a_i,
                    y_lo: b_i,
                    y_hi: b_next,
                },
                PartitionOrder::Q => Rectangle2D {
                    x_lo: a_next,
                    x_hi: a_i,
                    y_lo: 0,
                    y_hi: b_next,
                },
            }
        })
        .collect())
}
