//! Hull, Scarf and Taylor complexes of a monomial ideal, and the projection
//! of the hull complex onto the simplex spanned by the pure powers.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::cellcomplex::{
    default_basis, sign_same_span, simplex_basis, simplex_complex, Face, LabeledCellComplex, Vertex,
    VertexId,
};
use crate::error::{Error, Result};
use crate::linalg::{dot, q, rank_q, sub, Rational};
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::polytope::{face_lattice, feasible};

/// Brute-force limit on the number of generators for the Scarf complex.
pub const SCARF_BOUND: usize = 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HullParameters {
    pub t: u64,
}

impl HullParameters {
    /// Smallest admissible lift base, `(n+1)! + 1`.
    pub fn minimum_t(n: usize) -> Result<u64> {
        (1..=n as u64 + 1)
            .try_fold(1u64, |acc, k| acc.checked_mul(k))
            .and_then(|f| f.checked_add(1))
            .ok_or(Error::Overflow)
    }

    pub fn for_dimension(n: usize) -> Result<Self> {
        Ok(HullParameters {
            t: Self::minimum_t(n)?,
        })
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let bound = Self::minimum_t(n)?;
        if self.t < bound {
            return Err(Error::LiftBaseTooSmall { t: self.t, bound });
        }
        Ok(())
    }
}

fn lift(alpha: &ExponentVector, t: u64) -> Vec<Rational> {
    alpha
        .as_slice()
        .iter()
        .map(|&a| Rational::from_integer(Pow::pow(BigInt::from(t), a)))
        .collect()
}

/// Bounded faces of `conv{t^alpha} + R_+^n` as (dimension, generator indices).
fn bounded_faces(m: &MonomialIdeal, t: u64) -> Result<BTreeSet<(usize, Vec<usize>)>> {
    let n = m.n();
    let points: Vec<Vec<Rational>> = m.generators().iter().map(|g| lift(g, t)).collect();
    let ones = vec![q(1); n];
    let mut out = BTreeSet::new();
    for face in face_lattice(&points) {
        // Substitute c = y + 1 so the solver's y >= 0 encodes c_i >= 1.
        let v0 = &points[face.points[0]];
        let inside: BTreeSet<usize> = face.points.iter().copied().collect();
        let mut eqs = Vec::new();
        let mut ges = Vec::new();
        for (i, p) in points.iter().enumerate() {
            let d = sub(p, v0);
            let shift = dot(&d, &ones);
            if inside.contains(&i) {
                if i != face.points[0] {
                    eqs.push((d, -shift));
                }
            } else {
                ges.push((d, q(1) - shift));
            }
        }
        if feasible(n, &eqs, &ges) {
            out.insert((face.dim, face.points));
        }
    }
    for (dim, pts) in &out {
        if *dim > 0 && pts.iter().any(|p| !out.contains(&(0, vec![*p]))) {
            return Err(Error::HullDegeneracy(format!(
                "bounded face {pts:?} contains a non-extreme generator"
            )));
        }
    }
    Ok(out)
}

/// Hull complex with the default lift base.
pub fn hull_complex(m: &MonomialIdeal) -> Result<LabeledCellComplex> {
    hull_complex_with(m, HullParameters::for_dimension(m.n())?)
}

/// Hull complex of an Artinian ideal. Vertex `i` is the `i`-th minimal
/// generator, placed at `t^alpha`. The face poset is recomputed at `t + 1`
/// and must agree.
pub fn hull_complex_with(m: &MonomialIdeal, params: HullParameters) -> Result<LabeledCellComplex> {
    let n = m.n();
    params.validate(n)?;
    if !m.is_artinian() {
        let variable = (0..n)
            .find(|&i| !m.generators().iter().any(|g| g.pure_power_variable() == Some(i)))
            .unwrap_or(0);
        return Err(Error::NotArtinian { variable });
    }
    let next = params.t.checked_add(1).ok_or(Error::Overflow)?;
    let (here, there) = rayon::join(|| bounded_faces(m, params.t), || bounded_faces(m, next));
    let (here, there) = (here?, there?);
    if here != there {
        return Err(Error::HullDegeneracy(format!(
            "face poset changes between t = {} and t = {}",
            params.t, next
        )));
    }
    let vertex_count = here.iter().filter(|(d, _)| *d == 0).count();
    if vertex_count < n || vertex_count != m.len() {
        return Err(Error::HullDegeneracy(format!(
            "{vertex_count} hull vertices for {} generators",
            m.len()
        )));
    }

    let vertices: BTreeMap<VertexId, Vertex> = m
        .generators()
        .iter()
        .enumerate()
        .map(|(id, g)| {
            (
                id,
                Vertex {
                    id,
                    point: lift(g, params.t),
                    label: g.clone(),
                },
            )
        })
        .collect();
    let faces: Vec<Face> = here
        .into_iter()
        .map(|(dim, vs)| {
            let pts: Vec<&[Rational]> = vs.iter().map(|v| vertices[v].point.as_slice()).collect();
            Face {
                basis: default_basis(&pts, dim as i32),
                dim: dim as i32,
                vertices: vs,
                label: ExponentVector::zero(n),
            }
        })
        .collect();
    let mut hull = LabeledCellComplex::from_closed_faces(n, n, vertices, faces)?;
    orient_top_faces(&mut hull)?;
    Ok(hull)
}

/// Pure-power vertices `v_1, ..., v_n` of a complex, by variable.
fn pure_power_vertices(x: &LabeledCellComplex) -> Result<Vec<VertexId>> {
    let n = x.nvars();
    let mut found: Vec<Option<VertexId>> = vec![None; n];
    for v in x.vertices() {
        if let Some(i) = v.label.pure_power_variable() {
            found[i] = Some(v.id);
        }
    }
    found
        .into_iter()
        .enumerate()
        .map(|(variable, v)| v.ok_or(Error::NotArtinian { variable }))
        .collect()
}

/// The simplex complex on the pure-power vertices of `x`, with vertex `i`
/// labeled `z_i^{b_i}` and faces oriented by increasing variable index.
pub fn simplex_of(x: &LabeledCellComplex) -> Result<LabeledCellComplex> {
    let ids = pure_power_vertices(x)?;
    let points = ids.iter().map(|&v| x.vertex(v).point.clone()).collect();
    let labels = ids.iter().map(|&v| x.vertex(v).label.clone()).collect();
    simplex_complex(points, labels)
}

/// Linear form `l` with `Delta` contained in `{p : l(p - 1) = 1}`.
struct Projection {
    weights: Vec<Rational>,
}

impl Projection {
    fn new(x: &LabeledCellComplex) -> Result<Self> {
        let ids = pure_power_vertices(x)?;
        let weights = ids
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let c = &x.vertex(v).point[i] - q(1);
                if c <= q(0) {
                    return Err(Error::HullDegeneracy("pure power vertex at 1".into()));
                }
                Ok(c.recip())
            })
            .collect::<Result<_>>()?;
        Ok(Projection { weights })
    }

    fn height(&self, p: &[Rational]) -> Rational {
        p.iter()
            .zip(&self.weights)
            .map(|(x, w)| (x - q(1)) * w)
            .sum()
    }

    fn apply(&self, p: &[Rational]) -> Result<Vec<Rational>> {
        let h = self.height(p);
        if h <= q(0) {
            return Err(Error::HullDegeneracy("vertex at the apex 1".into()));
        }
        Ok(p.iter().map(|x| q(1) + (x - q(1)) / &h).collect())
    }

    /// Differential of the projection at `x`, applied to `w`.
    fn push(&self, x: &[Rational], w: &[Rational]) -> Vec<Rational> {
        let h = self.height(x);
        let lw = dot(&self.weights, w);
        let ratio = &lw / &h;
        w.iter()
            .zip(x)
            .map(|(wi, xi)| (wi - (xi - q(1)) * &ratio) / &h)
            .collect()
    }
}

fn orient_top_faces(hull: &mut LabeledCellComplex) -> Result<()> {
    let tops: Vec<usize> = hull.faces_of_dim(hull.nvars() as i32 - 1).collect();
    orient_to_simplex(hull, &tops)
}

/// Flip each listed top-dimensional face whose orientation, carried to the
/// simplex of pure powers, disagrees with that of the simplex. Works both
/// before and after [`embed_in_simplex`].
pub fn orient_to_simplex(x: &mut LabeledCellComplex, faces: &[usize]) -> Result<()> {
    let delta = simplex_of(x)?;
    let top = delta.face(delta.len() - 1).clone();
    let proj = Projection::new(x)?;
    for &idx in faces {
        let bary = x.barycenter(idx);
        let f = x.face(idx);
        let pushed = Face {
            basis: f.basis.iter().map(|w| proj.push(&bary, w)).collect(),
            ..f.clone()
        };
        if sign_same_span(&pushed, &top)? < 0 {
            x.reorient(idx);
        }
    }
    Ok(())
}

/// Project a hull complex radially from `1 = (1, ..., 1)` onto the simplex
/// spanned by its pure-power vertices. Orientations are carried along by the
/// differential of the projection, so boundary signs are unchanged.
pub fn embed_in_simplex(h: &LabeledCellComplex, b: &ExponentVector) -> Result<LabeledCellComplex> {
    let ids = pure_power_vertices(h)?;
    for (i, &v) in ids.iter().enumerate() {
        if h.vertex(v).label.as_slice()[i] != b.as_slice()[i] {
            return Err(Error::LengthMismatch {
                expected: b.as_slice()[i] as usize,
                found: h.vertex(v).label.as_slice()[i] as usize,
            });
        }
    }
    let proj = Projection::new(h)?;
    let mut vertices = BTreeMap::new();
    for v in h.vertices() {
        vertices.insert(
            v.id,
            Vertex {
                id: v.id,
                point: proj.apply(&v.point)?,
                label: v.label.clone(),
            },
        );
    }
    let faces: Vec<Face> = (0..h.len())
        .map(|idx| {
            let f = h.face(idx);
            let basis = if f.dim > 0 {
                let bary = h.barycenter(idx);
                f.basis.iter().map(|w| proj.push(&bary, w)).collect()
            } else {
                Vec::new()
            };
            Face { basis, ..f.clone() }
        })
        .collect();
    LabeledCellComplex::from_closed_faces(h.ambient_dim(), h.nvars(), vertices, faces)
}

/// The hull complex already projected onto its simplex.
pub fn embedded_hull(m: &MonomialIdeal) -> Result<LabeledCellComplex> {
    let h = hull_complex(m)?;
    embed_in_simplex(&h, &m.pure_power_exponents()?)
}

/// Subsets of generators whose lcm is attained by no other subset.
pub fn scarf_subsets(m: &MonomialIdeal) -> Result<Vec<Vec<usize>>> {
    let r = m.len();
    if r > SCARF_BOUND {
        return Err(Error::TooManyGenerators {
            count: r,
            bound: SCARF_BOUND,
        });
    }
    let gens = m.generators();
    let total = 1usize << r;
    let mut lcms: Vec<ExponentVector> = Vec::with_capacity(total);
    lcms.push(ExponentVector::zero(m.n()));
    let mut seen: HashMap<ExponentVector, (u32, usize)> = HashMap::new();
    seen.insert(lcms[0].clone(), (1, 0));
    for mask in 1..total {
        let low = mask.trailing_zeros() as usize;
        let l = lcms[mask & (mask - 1)].join(&gens[low]);
        seen.entry(l.clone())
            .and_modify(|e| e.0 += 1)
            .or_insert((1, mask));
        lcms.push(l);
    }
    let mut out: Vec<Vec<usize>> = seen
        .into_values()
        .filter(|&(count, mask)| count == 1 && mask != 0)
        .map(|(_, mask)| (0..r).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    Ok(out)
}

/// Scarf complex, realized on the embedded hull vertices.
pub fn scarf_complex(m: &MonomialIdeal) -> Result<LabeledCellComplex> {
    let subsets = scarf_subsets(m)?;
    let embedded = embedded_hull(m)?;
    let vertices: BTreeMap<VertexId, Vertex> = embedded.vertices().map(|v| (v.id, v.clone())).collect();
    let mut faces = Vec::with_capacity(subsets.len());
    for vs in subsets {
        let pts: Vec<&[Rational]> = vs.iter().map(|v| vertices[v].point.as_slice()).collect();
        let basis = simplex_basis(&pts);
        if rank_q(&basis) != basis.len() {
            return Err(Error::HullDegeneracy(format!("Scarf face {vs:?} is degenerate")));
        }
        faces.push(Face {
            dim: vs.len() as i32 - 1,
            vertices: vs,
            basis,
            label: ExponentVector::zero(m.n()),
        });
    }
    LabeledCellComplex::from_closed_faces(embedded.ambient_dim(), m.n(), vertices, faces)
}

/// The full simplex on the generators, on the standard simplex in `R^{r-1}`.
pub fn taylor_complex(m: &MonomialIdeal) -> Result<LabeledCellComplex> {
    let r = m.len();
    if r == 0 {
        return Err(Error::EmptyGenerators);
    }
    if r > 63 {
        return Err(Error::TooManyGenerators { count: r, bound: 63 });
    }
    let points = (0..r)
        .map(|i| {
            (1..r)
                .map(|j| if i == j { Rational::one() } else { q(0) })
                .collect()
        })
        .collect();
    simplex_complex(points, m.generators().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cellcomplex::{contained_faces, is_refinement};
    use crate::samples;

    fn labels_of_dim(x: &LabeledCellComplex, k: i32) -> Vec<String> {
        let mut v: Vec<String> = x
            .faces_of_dim(k)
            .map(|f| x.face(f).label.to_monomial_string())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn lift_base_bound() {
        assert_eq!(HullParameters::minimum_t(3).unwrap(), 25);
        assert_eq!(HullParameters::minimum_t(2).unwrap(), 7);
        assert!(matches!(
            HullParameters { t: 24 }.validate(3),
            Err(Error::LiftBaseTooSmall { t: 24, bound: 25 })
        ));
    }

    #[test]
    fn complete_intersection_is_a_simplex() {
        let m = MonomialIdeal::complete_intersection(&[2, 3, 1]).unwrap();
        let h = hull_complex(&m).unwrap();
        assert_eq!(h.len(), 8);
        assert_eq!(h.dim(), 2);
    }

    #[test]
    fn example_ideal_hull() {
        let m = samples::example_ideal();
        let h = hull_complex(&m).unwrap();
        assert_eq!((h.count_of_dim(0), h.count_of_dim(1), h.count_of_dim(2)), (6, 9, 4));
        assert_eq!(
            labels_of_dim(&h, 2),
            vec!["z1*z2*z3", "z1*z2*z3^2", "z1*z2^2*z3", "z1^2*z2*z3"]
        );
    }

    #[test]
    fn two_variable_path() {
        let m = MonomialIdeal::from_slices(&[&[2, 0], &[1, 1], &[0, 2]]).unwrap();
        let h = hull_complex(&m).unwrap();
        assert_eq!(h.count_of_dim(1), 2);
        assert_eq!(labels_of_dim(&h, 1), vec!["z1*z2^2", "z1^2*z2"]);
    }

    #[test]
    fn rejects_non_artinian() {
        let m = MonomialIdeal::from_slices(&[&[2, 0], &[1, 1]]).unwrap();
        assert!(matches!(hull_complex(&m), Err(Error::NotArtinian { variable: 1 })));
    }

    #[test]
    fn embedding_fixes_pure_powers_and_refines() {
        let m = samples::example_ideal();
        let h = hull_complex(&m).unwrap();
        let b = m.pure_power_exponents().unwrap();
        let e = embed_in_simplex(&h, &b).unwrap();
        for v in h.vertices() {
            if v.label.pure_power_variable().is_some() {
                assert_eq!(e.vertex(v.id).point, v.point);
            }
        }
        // z1*z2 sits at (t, t, 1) with t = 25; on the line through 1 the
        // parameter s solves s * (24/624 + 24/624) = 1.
        let z1z2 = h.vertices().find(|v| v.label == ExponentVector::from([1, 1, 0])).unwrap();
        let s = Rational::new(624.into(), 48.into());
        let expected = vec![q(1) + q(24) * &s, q(1) + q(24) * &s, q(1)];
        assert_eq!(e.vertex(z1z2.id).point, expected);
        let delta = simplex_of(&e).unwrap();
        assert!(is_refinement(&e, &delta).unwrap());
        // same boundary signs before and after the projection
        for s in 0..h.len() {
            for &t in h.facets_of(s) {
                assert_eq!(h.sign_facet(t, s).unwrap(), e.sign_facet(t, s).unwrap());
            }
        }
    }

    #[test]
    fn top_faces_agree_with_simplex_orientation() {
        let e = embedded_hull(&samples::example_ideal()).unwrap();
        let delta = simplex_of(&e).unwrap();
        let top = delta.face(delta.len() - 1);
        for f in e.faces_of_dim(2) {
            assert_eq!(sign_same_span(e.face(f), top).unwrap(), 1);
        }
    }

    #[test]
    fn boundary_edges_of_example() {
        let e = embedded_hull(&samples::example_ideal()).unwrap();
        let delta = simplex_of(&e).unwrap();
        let edge = delta.face_index(&[0, 1]).unwrap();
        let inside = contained_faces(edge, &delta, &e, 1).unwrap();
        let mut labels: Vec<String> = inside.iter().map(|&f| e.face(f).label.to_monomial_string()).collect();
        labels.sort();
        assert_eq!(labels, vec!["z1*z2^2", "z1^2*z2"]);
        let vertex = delta.face_index(&[2]).unwrap();
        assert_eq!(contained_faces(vertex, &delta, &e, 0).unwrap().len(), 1);
    }

    #[test]
    fn scarf_of_example_drops_inner_triangle() {
        let m = samples::example_ideal();
        let s = scarf_complex(&m).unwrap();
        // every triangle shares its lcm with a two-element subset
        assert_eq!((s.count_of_dim(1), s.count_of_dim(2)), (6, 0));
        let inner: Vec<usize> = m
            .generators()
            .iter()
            .enumerate()
            .filter(|(_, g)| g.degree() == 2 && g.pure_power_variable().is_none())
            .map(|(i, _)| i)
            .collect();
        assert!(s.face_index(&inner).is_none());
        let single = MonomialIdeal::from_slices(&[&[1, 2]]).unwrap();
        assert_eq!(scarf_subsets(&single).unwrap(), vec![vec![0]]);
    }

    #[test]
    fn taylor_shapes() {
        let m = MonomialIdeal::from_slices(&[&[1, 0], &[0, 1]]).unwrap();
        let t = taylor_complex(&m).unwrap();
        assert_eq!((t.count_of_dim(0), t.count_of_dim(1)), (2, 1));
        let m = MonomialIdeal::from_slices(&[&[2, 0], &[1, 1], &[0, 2]]).unwrap();
        let t = taylor_complex(&m).unwrap();
        assert_eq!((t.count_of_dim(1), t.count_of_dim(2)), (3, 1));
    }
}
