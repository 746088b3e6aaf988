//! Residue currents of cellular resolutions of Artinian monomial ideals.
//!
//! A Coleff-Herrera product `dbar[1/z_n^{a_n}] ^ ... ^ dbar[1/z_1^{a_1}]` is
//! kept symbolically; its action on a monomial test coefficient `z^beta` is
//! the coefficient of `z^{a - 1}`, in units of `(2 pi i)^n`.

use std::collections::BTreeMap;

use crate::cellcomplex::{containment_table, refinement_defect, sign_same_span, LabeledCellComplex, VertexId};
use crate::error::{Error, Result};
use crate::hull::simplex_of;
use crate::monomial::{box_points, minimize, ExponentVector, IrreducibleComponent, MonomialIdeal};
use crate::poly::{PolyMatrix, SignedMonomial};
use crate::resolution::{cellular_complex, check_exact, FreeComplex};

/// `sign * dbar[1/z_n^{alpha_n}] ^ ... ^ dbar[1/z_1^{alpha_1}]`; `sign == 0`
/// is the zero current.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CHProduct {
    pub sign: i8,
    pub alpha: ExponentVector,
}

impl CHProduct {
    pub fn new(sign: i8, alpha: ExponentVector) -> Self {
        if sign == 0 || alpha.as_slice().contains(&0) {
            return Self::zero(alpha.len());
        }
        CHProduct { sign, alpha }
    }

    pub fn zero(n: usize) -> Self {
        CHProduct {
            sign: 0,
            alpha: ExponentVector::zero(n),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }
}

/// Action on the test coefficient `z^beta`.
pub fn ch_action(c: &CHProduct, beta: &ExponentVector) -> i32 {
    if c.is_zero() {
        return 0;
    }
    let hit = c
        .alpha
        .as_slice()
        .iter()
        .zip(beta.as_slice())
        .all(|(&a, &b)| b + 1 == a);
    if hit {
        c.sign as i32
    } else {
        0
    }
}

/// `z^gamma * c`: shifts the exponents down, vanishing once one reaches zero.
pub fn monomial_times_ch(gamma: &ExponentVector, c: &CHProduct) -> CHProduct {
    if c.is_zero() {
        return c.clone();
    }
    match c.alpha.checked_sub(gamma) {
        Some(rest) => CHProduct::new(c.sign, rest),
        None => CHProduct::zero(c.alpha.len()),
    }
}

/// One entry per top-dimensional face, keyed by its vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueCurrent {
    pub entries: BTreeMap<Vec<VertexId>, CHProduct>,
}

impl ResidueCurrent {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `ann R` as an intersection of irreducible ideals, one per nonzero entry.
    pub fn annihilator_components(&self) -> Vec<IrreducibleComponent> {
        self.entries
            .values()
            .filter(|c| !c.is_zero())
            .map(|c| IrreducibleComponent { alpha: c.alpha.clone() })
            .collect()
    }
}

fn check_pure_powers(delta: &LabeledCellComplex, b: &ExponentVector) -> Result<()> {
    let labels: Vec<u32> = (0..delta.nvars())
        .map(|i| delta.vertex(i).label.as_slice()[i])
        .collect();
    if labels != b.as_slice() {
        return Err(Error::NotARefinement(format!(
            "pure powers {:?} differ from {:?}",
            labels,
            b.as_slice()
        )));
    }
    Ok(())
}

fn vertex_ideal(x: &LabeledCellComplex) -> Result<MonomialIdeal> {
    minimize(x.vertices().map(|v| v.label.clone()).collect())
}

/// Check that `x` refines the simplex of `b` and resolves its vertex ideal;
/// returns the simplex complex.
fn preconditions(x: &LabeledCellComplex, b: &ExponentVector) -> Result<LabeledCellComplex> {
    let delta = simplex_of(x)?;
    check_pure_powers(&delta, b)?;
    if let Some(defect) = refinement_defect(x, &delta)? {
        return Err(Error::NotARefinement(defect));
    }
    let report = check_exact(x, &vertex_ideal(x)?)?;
    if let Some(beta) = report.witness {
        return Err(Error::NotExact { witness: beta.0 });
    }
    Ok(delta)
}

/// Closed form: `R_sigma = sign(sigma, Delta) * CH(m_sigma)` for each
/// top-dimensional face.
pub fn residue_from_theorem(x: &LabeledCellComplex, b: &ExponentVector) -> Result<ResidueCurrent> {
    let delta = preconditions(x, b)?;
    let top = delta.face(delta.len() - 1);
    let k = x.nvars() as i32 - 1;
    let mut entries = BTreeMap::new();
    for s in x.faces_of_dim(k) {
        let f = x.face(s);
        let sign = sign_same_span(f, top)?;
        entries.insert(f.vertices.clone(), CHProduct::new(sign as i8, f.label.clone()));
    }
    Ok(ResidueCurrent { entries })
}

/// Matrices of a chain map `a_k: F_k -> E_k` for `k = -1, ..., n-1`, from the
/// Koszul complex `F` of the simplex to the cellular complex `E` of `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    matrices: Vec<Vec<Vec<SignedMonomial>>>,
}

impl ChainMap {
    pub fn matrix(&self, k: i32) -> &[Vec<SignedMonomial>] {
        &self.matrices[(k + 1) as usize]
    }

    pub fn matrix_mut(&mut self, k: i32) -> &mut Vec<Vec<SignedMonomial>> {
        &mut self.matrices[(k + 1) as usize]
    }

    /// Highest degree `k` with a matrix.
    pub fn top(&self) -> i32 {
        self.matrices.len() as i32 - 2
    }
}

/// Everything needed to compare `X` with its simplex.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub delta: LabeledCellComplex,
    /// Koszul complex of the pure powers.
    pub psi: FreeComplex,
    /// Cellular complex of `X`.
    pub phi: FreeComplex,
    pub maps: ChainMap,
}

/// `a_k(e_sigma) = sum over sigma' in X_k inside sigma of
/// sign(sigma', sigma) z^{m_sigma - m_sigma'} e_sigma'`.
pub fn comparison_maps(x: &LabeledCellComplex, b: &ExponentVector) -> Result<Comparison> {
    let delta = simplex_of(x)?;
    check_pure_powers(&delta, b)?;
    if let Some(defect) = refinement_defect(x, &delta)? {
        return Err(Error::NotARefinement(defect));
    }
    let psi = cellular_complex(&delta)?;
    let phi = cellular_complex(x)?;
    let table = containment_table(x, &delta)?;
    let nvars = x.nvars();
    let mut matrices = Vec::new();
    for k in -1..x.nvars() as i32 {
        let rows = phi.level(k);
        let cols = psi.level(k);
        let mut m = vec![vec![SignedMonomial::zero(nvars); cols.len()]; rows.len()];
        for (j, col) in cols.iter().enumerate() {
            let outer = delta.face(col.face);
            for &inner in &table[col.face] {
                let i = phi.position(k, inner).expect("face of X in its level");
                let sign = sign_same_span(x.face(inner), outer)?;
                let exp = col
                    .label
                    .checked_sub(&rows[i].label)
                    .ok_or_else(|| Error::NotARefinement("label does not divide".into()))?;
                m[i][j] = SignedMonomial::new(sign as i8, exp);
            }
        }
        matrices.push(m);
    }
    Ok(Comparison {
        delta,
        psi,
        phi,
        maps: ChainMap { matrices },
    })
}

/// First `(k, column face)` where `a_{k-1} psi_k = phi_k a_k` fails.
pub fn commutation_defect(
    maps: &ChainMap,
    psi: &FreeComplex,
    phi: &FreeComplex,
) -> Result<Option<(i32, Vec<VertexId>)>> {
    let poly = |k: i32| {
        PolyMatrix::from_monomials(maps.matrix(k), phi.level(k).len(), psi.level(k).len())
    };
    for k in 0..=maps.top() {
        let left = poly(k - 1).mul(&psi.poly_matrix(k))?;
        let right = phi.poly_matrix(k).mul(&poly(k))?;
        if let Some((_, j)) = left.first_difference(&right) {
            return Ok(Some((k, psi.level(k)[j].vertices.clone())));
        }
    }
    Ok(None)
}

/// Does the comparison diagram commute for `X`?
pub fn verify_comparison(x: &LabeledCellComplex, b: &ExponentVector) -> Result<bool> {
    let c = comparison_maps(x, b)?;
    Ok(commutation_defect(&c.maps, &c.psi, &c.phi)?.is_none())
}

/// `R^E = a_{n-1} R^F` with the Koszul current `R^F = +CH(b)`.
pub fn residue_via_comparison(x: &LabeledCellComplex, b: &ExponentVector) -> Result<ResidueCurrent> {
    preconditions(x, b)?;
    let c = comparison_maps(x, b)?;
    if let Some((k, face)) = commutation_defect(&c.maps, &c.psi, &c.phi)? {
        return Err(Error::NotCommuting { k, face });
    }
    let k = x.nvars() as i32 - 1;
    let koszul = CHProduct::new(1, b.clone());
    let column = c.maps.matrix(k);
    let mut entries = BTreeMap::new();
    for (i, g) in c.phi.level(k).iter().enumerate() {
        let a = &column[i][0];
        let value = if a.is_zero() {
            CHProduct::zero(b.len())
        } else {
            let signed = CHProduct::new(a.sign * koszul.sign, koszul.alpha.clone());
            monomial_times_ch(&a.exp, &signed)
        };
        entries.insert(g.vertices.clone(), value);
    }
    Ok(ResidueCurrent { entries })
}

/// `z^beta R = 0` iff every entry has some `beta_i >= alpha_i`.
pub fn annihilator_contains(r: &ResidueCurrent, beta: &ExponentVector) -> bool {
    r.entries
        .values()
        .filter(|c| !c.is_zero())
        .all(|c| c.alpha.as_slice().iter().zip(beta.as_slice()).any(|(a, b)| b >= a))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub ok: bool,
    pub counterexample: Option<ExponentVector>,
    pub points: u64,
}

/// Compare `ann R` with `M` on the box `[0, upper]` (default: the pure
/// powers of `M`).
pub fn duality_check(
    r: &ResidueCurrent,
    m: &MonomialIdeal,
    upper: Option<&ExponentVector>,
) -> Result<DualityReport> {
    let b = m.pure_power_exponents()?;
    let upper = upper.cloned().unwrap_or(b.clone());
    if !b.divides(&upper) {
        return Err(Error::BoxTooSmall);
    }
    let mut points = 0;
    for beta in box_points(&upper) {
        points += 1;
        if annihilator_contains(r, &beta) != m.contains(&beta)? {
            return Ok(DualityReport {
                ok: false,
                counterexample: Some(beta),
                points,
            });
        }
    }
    Ok(DualityReport {
        ok: true,
        counterexample: None,
        points,
    })
}
