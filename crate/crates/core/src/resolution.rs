//! The cellular free complex of a labeled cell complex, and the exactness
//! and minimality checks.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::cellcomplex::{LabeledCellComplex, VertexId};
use crate::error::{Error, Result};
use crate::linalg::rank_int;
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::poly::{PolyMatrix, SignedMonomial};

/// One basis element of a free module in the complex: a face and its degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedGenerator {
    /// Index of the face in the cell complex.
    pub face: usize,
    pub vertices: Vec<VertexId>,
    pub label: ExponentVector,
}

/// `0 -> A_N -> ... -> A_0 -> A_{-1} = S`, one generator per face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeComplex {
    nvars: usize,
    levels: Vec<Vec<GradedGenerator>>,
    matrices: Vec<Vec<Vec<SignedMonomial>>>,
}

impl FreeComplex {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Top homological degree `N`.
    pub fn length(&self) -> i32 {
        self.levels.len() as i32 - 2
    }

    /// Basis of `A_k` for `-1 <= k <= N` (empty outside that range).
    pub fn level(&self, k: i32) -> &[GradedGenerator] {
        usize::try_from(k + 1)
            .ok()
            .and_then(|i| self.levels.get(i))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Matrix of `phi_k: A_k -> A_{k-1}`, rows indexed by `A_{k-1}`.
    pub fn matrix(&self, k: i32) -> &[Vec<SignedMonomial>] {
        usize::try_from(k)
            .ok()
            .and_then(|i| self.matrices.get(i))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn poly_matrix(&self, k: i32) -> PolyMatrix {
        PolyMatrix::from_monomials(self.matrix(k), self.level(k - 1).len(), self.level(k).len())
    }

    /// Position of a face within its level.
    pub fn position(&self, k: i32, face: usize) -> Option<usize> {
        self.level(k).iter().position(|g| g.face == face)
    }
}

/// Build `F_X` with `phi_k(e_sigma) = sum sign(tau, sigma) z^{m_sigma - m_tau} e_tau`,
/// verifying `phi_{k-1} phi_k = 0`.
pub fn cellular_complex(x: &LabeledCellComplex) -> Result<FreeComplex> {
    let nvars = x.nvars();
    let top = x.dim().max(-1);
    let levels: Vec<Vec<GradedGenerator>> = (-1..=top)
        .map(|k| {
            x.faces_of_dim(k)
                .map(|f| GradedGenerator {
                    face: f,
                    vertices: x.face(f).vertices.clone(),
                    label: x.face(f).label.clone(),
                })
                .collect()
        })
        .collect();
    let mut matrices = Vec::new();
    for k in 0..=top {
        let rows = &levels[k as usize];
        let cols = &levels[k as usize + 1];
        let mut m = vec![vec![SignedMonomial::zero(nvars); cols.len()]; rows.len()];
        for (j, col) in cols.iter().enumerate() {
            for &tau in x.facets_of(col.face) {
                let i = rows
                    .iter()
                    .position(|g| g.face == tau)
                    .expect("facet lies one level down");
                let sign = x.sign_facet(tau, col.face)?;
                let exp = col
                    .label
                    .checked_sub(&rows[i].label)
                    .ok_or_else(|| Error::InvalidComplex("labels do not increase along incidence".into()))?;
                m[i][j] = SignedMonomial::new(sign as i8, exp);
            }
        }
        matrices.push(m);
    }
    let complex = FreeComplex {
        nvars,
        levels,
        matrices,
    };
    for k in 1..=top {
        let product = complex.poly_matrix(k - 1).mul(&complex.poly_matrix(k))?;
        if let Some((_, j)) = product.first_difference(&PolyMatrix::zeros(product.rows(), product.cols())) {
            return Err(Error::NonzeroSquare {
                degree: k,
                face: complex.level(k)[j].vertices.clone(),
            });
        }
    }
    Ok(complex)
}

/// Integer boundary matrix `C_k -> C_{k-1}` of the augmented cellular chain
/// complex (rows indexed by `(k-1)`-faces).
fn boundary_matrix(x: &LabeledCellComplex, k: i32) -> Result<Vec<Vec<BigInt>>> {
    let rows: Vec<usize> = x.faces_of_dim(k - 1).collect();
    let cols: Vec<usize> = x.faces_of_dim(k).collect();
    let mut m = vec![vec![BigInt::from(0); cols.len()]; rows.len()];
    for (j, &sigma) in cols.iter().enumerate() {
        for &tau in x.facets_of(sigma) {
            let i = rows.iter().position(|&r| r == tau).expect("facet one level down");
            m[i][j] = BigInt::from(x.sign_facet(tau, sigma)?);
        }
    }
    Ok(m)
}

fn rank_of(m: Vec<Vec<BigInt>>) -> usize {
    if m.is_empty() || m[0].is_empty() {
        0
    } else {
        rank_int(m)
    }
}

/// Ranks of reduced homology over the rationals in degrees `-1..=dim`,
/// indexed from zero.
pub fn reduced_homology_ranks(x: &LabeledCellComplex) -> Result<Vec<usize>> {
    let top = x.dim();
    let mut ranks = Vec::with_capacity((top + 2) as usize);
    // rank of d_k for k = -1..=top+1; d_{-1} and d_{top+1} vanish
    let mut boundary_ranks = vec![0usize; (top + 3) as usize];
    for k in 0..=top {
        boundary_ranks[(k + 1) as usize] = rank_of(boundary_matrix(x, k)?);
    }
    for k in -1..=top {
        let chains = x.count_of_dim(k);
        let r_out = boundary_ranks[(k + 1) as usize];
        let r_in = boundary_ranks[(k + 2) as usize];
        ranks.push(chains - r_out - r_in);
    }
    Ok(ranks)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub ok: bool,
    /// First degree (by total degree, then lex) where `X_{<= beta}` fails
    /// to be acyclic.
    pub witness: Option<ExponentVector>,
}

/// Degrees at which acyclicity must be tested: the lcm lattice and `0`,
/// ordered by total degree and then lexicographically.
pub fn test_degrees(m: &MonomialIdeal) -> Vec<ExponentVector> {
    let mut degrees: Vec<ExponentVector> = m.lcm_lattice().into_iter().collect();
    degrees.push(ExponentVector::zero(m.n()));
    degrees.sort_by(|a, b| (a.degree(), a).cmp(&(b.degree(), b)));
    degrees.dedup();
    degrees
}

fn acyclic_at(x: &LabeledCellComplex, beta: &ExponentVector) -> Result<bool> {
    let sub = x.subcomplex_leq(beta);
    if sub.is_empty() {
        return Ok(true);
    }
    Ok(reduced_homology_ranks(&sub)?.iter().all(|&r| r == 0))
}

/// `F_X` resolves `S/M` iff every `X_{<= beta}` is empty or acyclic.
pub fn check_exact(x: &LabeledCellComplex, m: &MonomialIdeal) -> Result<ExactnessReport> {
    let degrees = test_degrees(m);
    let verdicts: Vec<bool> = degrees
        .par_iter()
        .map(|beta| acyclic_at(x, beta))
        .collect::<Result<_>>()?;
    let witness = degrees
        .into_iter()
        .zip(verdicts)
        .find(|(_, ok)| !ok)
        .map(|(beta, _)| beta);
    Ok(ExactnessReport {
        ok: witness.is_none(),
        witness,
    })
}

pub fn is_exact(x: &LabeledCellComplex, m: &MonomialIdeal) -> Result<bool> {
    Ok(check_exact(x, m)?.ok)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityReport {
    pub ok: bool,
    /// `(tau, sigma)` with `tau` a facet of `sigma` and equal labels.
    pub witness: Option<(Vec<VertexId>, Vec<VertexId>)>,
}

/// Minimal iff no matrix entry is a nonzero constant.
pub fn check_minimal(f: &FreeComplex) -> MinimalityReport {
    for k in 0..=f.length() {
        let rows = f.level(k - 1);
        let cols = f.level(k);
        for (j, col) in cols.iter().enumerate() {
            for (i, row) in rows.iter().enumerate() {
                let e = &f.matrix(k)[i][j];
                if !e.is_zero() && e.exp.degree() == 0 {
                    return MinimalityReport {
                        ok: false,
                        witness: Some((row.vertices.clone(), col.vertices.clone())),
                    };
                }
            }
        }
    }
    MinimalityReport {
        ok: true,
        witness: None,
    }
}

pub fn is_minimal(f: &FreeComplex) -> bool {
    check_minimal(f).ok
}
