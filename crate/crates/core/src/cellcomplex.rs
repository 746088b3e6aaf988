//! Oriented, labeled polyhedral cell complexes with exact rational geometry.
//!
//! A face is identified by the sorted list of its vertex ids. Orientations are
//! stored as an explicit ordered basis of the linear span of the face, which
//! handles simplices and general polytopes alike.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{centroid, cross_gram_sign, det_q, q, rank_q, solve_columns, sub, Rational};
use crate::monomial::ExponentVector;
use crate::polytope::face_lattice;

pub type VertexId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: VertexId,
    pub point: Vec<Rational>,
    pub label: ExponentVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Sorted vertex ids; empty for the empty face.
    pub vertices: Vec<VertexId>,
    pub dim: i32,
    /// Positively oriented basis of the span of the face (`dim` vectors).
    pub basis: Vec<Vec<Rational>>,
    pub label: ExponentVector,
}

impl Face {
    pub fn is_empty_face(&self) -> bool {
        self.dim < 0
    }

    /// Reverse the orientation (no-op for faces of dimension at most zero).
    pub fn flip(&mut self) {
        if let Some(first) = self.basis.first_mut() {
            for x in first.iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

/// Input description of a face: its vertex ids and an optional basis.
#[derive(Clone, Debug, Default)]
pub struct FaceSpec {
    pub vertices: Vec<VertexId>,
    pub basis: Option<Vec<Vec<Rational>>>,
}

impl FaceSpec {
    pub fn new(vertices: Vec<VertexId>) -> Self {
        FaceSpec {
            vertices,
            basis: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LabeledCellComplex {
    ambient: usize,
    nvars: usize,
    vertices: BTreeMap<VertexId, Vertex>,
    faces: Vec<Face>,
    index: HashMap<Vec<VertexId>, usize>,
    facets: Vec<Vec<usize>>,
    cofacets: Vec<Vec<usize>>,
}

/// Simplex convention: `[u_0, ..., u_k]` is oriented by `u_0 - u_k, ..., u_{k-1} - u_k`.
pub fn simplex_basis(points: &[&[Rational]]) -> Vec<Vec<Rational>> {
    match points.split_last() {
        None => Vec::new(),
        Some((last, rest)) => rest.iter().map(|p| sub(p, last)).collect(),
    }
}

/// Basis from the first `dim + 1` affinely independent points, in order.
pub fn default_basis(points: &[&[Rational]], dim: i32) -> Vec<Vec<Rational>> {
    if dim <= 0 {
        return Vec::new();
    }
    let mut chosen: Vec<&[Rational]> = Vec::new();
    for p in points {
        let mut trial = chosen.clone();
        trial.push(p);
        let diffs: Vec<Vec<Rational>> = trial[1..].iter().map(|x| sub(x, trial[0])).collect();
        if rank_q(&diffs) == diffs.len() {
            chosen = trial;
        }
        if chosen.len() == dim as usize + 1 {
            break;
        }
    }
    simplex_basis(&chosen)
}

impl LabeledCellComplex {
    /// Assemble a complex from a full (face-closed) list of faces. Labels are
    /// recomputed from the vertices and incidences derived from vertex sets.
    pub(crate) fn from_closed_faces(
        ambient: usize,
        nvars: usize,
        vertices: BTreeMap<VertexId, Vertex>,
        mut faces: Vec<Face>,
    ) -> Result<Self> {
        if !faces.iter().any(|f| f.vertices.is_empty()) {
            faces.push(Face {
                vertices: Vec::new(),
                dim: -1,
                basis: Vec::new(),
                label: ExponentVector::zero(nvars),
            });
        }
        for f in faces.iter_mut() {
            let mut label = ExponentVector::zero(nvars);
            for v in &f.vertices {
                let vx = vertices
                    .get(v)
                    .ok_or_else(|| Error::InvalidComplex(format!("unknown vertex {v}")))?;
                label = label.join(&vx.label);
            }
            f.label = label;
        }
        faces.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));
        faces.dedup_by(|a, b| a.vertices == b.vertices);
        let index: HashMap<Vec<VertexId>, usize> =
            faces.iter().enumerate().map(|(i, f)| (f.vertices.clone(), i)).collect();

        let mut by_dim: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        for (i, f) in faces.iter().enumerate() {
            by_dim.entry(f.dim).or_default().push(i);
        }
        let mut facets = vec![Vec::new(); faces.len()];
        let mut cofacets = vec![Vec::new(); faces.len()];
        for (i, f) in faces.iter().enumerate() {
            if f.dim < 0 {
                continue;
            }
            let set: BTreeSet<VertexId> = f.vertices.iter().copied().collect();
            for &j in by_dim.get(&(f.dim - 1)).map(Vec::as_slice).unwrap_or(&[]) {
                if faces[j].vertices.iter().all(|v| set.contains(v)) {
                    facets[i].push(j);
                    cofacets[j].push(i);
                }
            }
            if f.dim > 0 && facets[i].len() < f.dim as usize + 1 {
                return Err(Error::InvalidComplex(format!(
                    "face {:?} has too few facets",
                    f.vertices
                )));
            }
        }
        Ok(LabeledCellComplex {
            ambient,
            nvars,
            vertices,
            faces,
            index,
            facets,
            cofacets,
        })
    }

    /// Build a complex from vertices and a list of faces. The list is closed
    /// under taking faces by computing the face lattice of each listed face.
    /// Faces without a basis get [`default_basis`].
    pub fn from_faces(nvars: usize, vertices: Vec<Vertex>, faces: Vec<FaceSpec>) -> Result<Self> {
        let ambient = vertices
            .first()
            .map(|v| v.point.len())
            .ok_or_else(|| Error::InvalidComplex("no vertices".into()))?;
        let mut table = BTreeMap::new();
        for v in vertices {
            if v.point.len() != ambient {
                return Err(Error::LengthMismatch {
                    expected: ambient,
                    found: v.point.len(),
                });
            }
            if v.label.len() != nvars {
                return Err(Error::LengthMismatch {
                    expected: nvars,
                    found: v.label.len(),
                });
            }
            if table.insert(v.id, v.clone()).is_some() {
                return Err(Error::InvalidComplex(format!("duplicate vertex id {}", v.id)));
            }
        }

        let mut given: BTreeMap<Vec<VertexId>, Option<Vec<Vec<Rational>>>> = BTreeMap::new();
        let mut closed: BTreeMap<Vec<VertexId>, i32> = BTreeMap::new();
        for id in table.keys() {
            closed.insert(vec![*id], 0);
        }
        for spec in faces {
            let mut vs = spec.vertices.clone();
            vs.sort_unstable();
            vs.dedup();
            if vs.is_empty() {
                continue;
            }
            let pts: Vec<Vec<Rational>> = vs
                .iter()
                .map(|v| {
                    table
                        .get(v)
                        .map(|x| x.point.clone())
                        .ok_or_else(|| Error::InvalidComplex(format!("unknown vertex {v}")))
                })
                .collect::<Result<_>>()?;
            let lattice = face_lattice(&pts);
            let extreme = lattice.iter().filter(|f| f.dim == 0).count();
            if extreme != vs.len() {
                return Err(Error::InvalidComplex(format!(
                    "face {vs:?} has vertices that are not extreme points"
                )));
            }
            for f in lattice {
                let ids: Vec<VertexId> = f.points.iter().map(|&i| vs[i]).collect();
                closed.insert(ids, f.dim as i32);
            }
            given.insert(vs, spec.basis);
        }

        let mut out = Vec::with_capacity(closed.len());
        for (vs, dim) in closed {
            let pts: Vec<&[Rational]> = vs.iter().map(|v| table[v].point.as_slice()).collect();
            let basis = match given.get(&vs).cloned().flatten() {
                Some(b) => {
                    validate_basis(&vs, &pts, dim, &b)?;
                    b
                }
                None => default_basis(&pts, dim),
            };
            out.push(Face {
                vertices: vs,
                dim,
                basis,
                label: ExponentVector::zero(nvars),
            });
        }
        Self::from_closed_faces(ambient, nvars, table, out)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Largest face dimension (`-1` when only the empty face is present).
    pub fn dim(&self) -> i32 {
        self.faces.last().map(|f| f.dim).unwrap_or(-1)
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Vertex> {
        self.vertices.values()
    }

    pub fn vertex(&self, id: VertexId) -> &Vertex {
        &self.vertices[&id]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, idx: usize) -> &Face {
        &self.faces[idx]
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.len() <= 1
    }

    pub fn face_index(&self, vertices: &[VertexId]) -> Option<usize> {
        self.index.get(vertices).copied()
    }

    pub fn faces_of_dim(&self, k: i32) -> impl Iterator<Item = usize> + '_ {
        self.faces
            .iter()
            .enumerate()
            .filter(move |(_, f)| f.dim == k)
            .map(|(i, _)| i)
    }

    pub fn count_of_dim(&self, k: i32) -> usize {
        self.faces_of_dim(k).count()
    }

    pub fn facets_of(&self, idx: usize) -> &[usize] {
        &self.facets[idx]
    }

    pub fn cofacets_of(&self, idx: usize) -> &[usize] {
        &self.cofacets[idx]
    }

    /// All `k`-faces having the `(k-1)`-face `tau` as a facet.
    pub fn cofaces(&self, tau: usize, k: i32) -> Vec<usize> {
        if self.faces[tau].dim != k - 1 {
            return Vec::new();
        }
        self.cofacets[tau].clone()
    }

    pub fn points_of(&self, idx: usize) -> Vec<&[Rational]> {
        self.faces[idx]
            .vertices
            .iter()
            .map(|v| self.vertices[v].point.as_slice())
            .collect()
    }

    pub fn barycenter(&self, idx: usize) -> Vec<Rational> {
        centroid(&self.points_of(idx))
    }

    /// Flip the orientation of one face.
    pub fn reorient(&mut self, idx: usize) {
        self.faces[idx].flip();
    }

    /// Replace the orientation basis of a face.
    pub fn set_basis(&mut self, idx: usize, basis: Vec<Vec<Rational>>) -> Result<()> {
        let f = &self.faces[idx];
        let pts = self.points_of(idx);
        validate_basis(&f.vertices, &pts, f.dim, &basis)?;
        self.faces[idx].basis = basis;
        Ok(())
    }

    /// `sign(tau, sigma)` for a facet `tau` of `sigma`: compares the
    /// orientation of `tau` with the one induced by `sigma` through the
    /// inward normal.
    pub fn sign_facet(&self, tau: usize, sigma: usize) -> Result<i32> {
        let (t, s) = (&self.faces[tau], &self.faces[sigma]);
        if !self.facets[sigma].contains(&tau) {
            return Err(Error::NotAFacet {
                tau: t.vertices.clone(),
                sigma: s.vertices.clone(),
            });
        }
        if s.dim <= 0 {
            return Ok(1);
        }
        // The difference of barycenters differs from the inward normal by a
        // vector in span(tau), which does not change the determinant below.
        let normal = sub(&self.barycenter(sigma), &self.barycenter(tau));
        let mut frame = Vec::with_capacity(s.dim as usize);
        frame.push(normal);
        frame.extend(t.basis.iter().cloned());
        let induced = cross_gram_sign(&frame, &s.basis);
        let own = cross_gram_sign(&t.basis, &t.basis);
        if induced == 0 || own == 0 {
            return Err(Error::DegenerateOrientation(s.vertices.clone()));
        }
        Ok(induced * own)
    }

    /// Subcomplex of faces whose label divides `z^beta`.
    pub fn subcomplex_leq(&self, beta: &ExponentVector) -> LabeledCellComplex {
        let faces: Vec<Face> = self
            .faces
            .iter()
            .filter(|f| f.label.divides(beta))
            .cloned()
            .collect();
        self.restricted(faces)
    }

    /// The complex with one face (and everything containing it) removed.
    pub fn without_face(&self, vertices: &[VertexId]) -> LabeledCellComplex {
        let target: BTreeSet<VertexId> = vertices.iter().copied().collect();
        let faces: Vec<Face> = self
            .faces
            .iter()
            .filter(|f| f.vertices.is_empty() || !target.iter().all(|v| f.vertices.contains(v)))
            .cloned()
            .collect();
        self.restricted(faces)
    }

    fn restricted(&self, faces: Vec<Face>) -> LabeledCellComplex {
        let keep: BTreeSet<VertexId> = faces
            .iter()
            .filter(|f| f.dim == 0)
            .map(|f| f.vertices[0])
            .collect();
        let vertices = self
            .vertices
            .iter()
            .filter(|(id, _)| keep.contains(id))
            .map(|(id, v)| (*id, v.clone()))
            .collect();
        Self::from_closed_faces(self.ambient, self.nvars, vertices, faces)
            .expect("subcomplex of a valid complex is valid")
    }

    /// Pulling triangulation of a face into simplices (lists of vertex ids).
    pub fn triangulate(&self, idx: usize) -> Vec<Vec<VertexId>> {
        let f = &self.faces[idx];
        if f.dim <= 0 {
            return vec![f.vertices.clone()];
        }
        let apex = f.vertices[0];
        let mut out = Vec::new();
        for &t in &self.facets[idx] {
            if self.faces[t].vertices.contains(&apex) {
                continue;
            }
            for mut s in self.triangulate(t) {
                s.insert(0, apex);
                out.push(s);
            }
        }
        out
    }

    /// `dim`-dimensional volume of a face measured in the coordinates of
    /// `basis` (which must span the affine hull of the face).
    pub fn volume_in_basis(&self, idx: usize, basis: &[Vec<Rational>]) -> Result<Rational> {
        let f = &self.faces[idx];
        if f.dim <= 0 {
            return Ok(q(1));
        }
        let k = f.dim as usize;
        let mut total = Rational::zero();
        for simplex in self.triangulate(idx) {
            let origin = &self.vertices[&simplex[0]].point;
            let mut coords = Vec::with_capacity(k);
            for v in &simplex[1..] {
                let d = sub(&self.vertices[v].point, origin);
                coords.push(solve_columns(basis, &d).ok_or(Error::SpanMismatch)?);
            }
            total += det_q(&coords).abs();
        }
        let factorial: i64 = (1..=k as i64).product();
        Ok(total / q(factorial))
    }
}

fn validate_basis(
    vertices: &[VertexId],
    pts: &[&[Rational]],
    dim: i32,
    basis: &[Vec<Rational>],
) -> Result<()> {
    let k = dim.max(0) as usize;
    if basis.len() != k || rank_q(basis) != k {
        return Err(Error::DegenerateOrientation(vertices.to_vec()));
    }
    if k > 0 {
        let diffs: Vec<Vec<Rational>> = pts[1..].iter().map(|p| sub(p, pts[0])).collect();
        let mut all = diffs;
        all.extend(basis.iter().cloned());
        if rank_q(&all) != k {
            return Err(Error::DegenerateOrientation(vertices.to_vec()));
        }
    }
    Ok(())
}

/// `sign(sigma', sigma)` for two faces of equal dimension spanning the same
/// subspace.
pub fn sign_same_span(inner: &Face, outer: &Face) -> Result<i32> {
    if inner.dim != outer.dim {
        return Err(Error::DimensionMismatch(inner.dim, outer.dim));
    }
    if inner.dim <= 0 {
        return Ok(1);
    }
    let k = inner.dim as usize;
    let mut both = inner.basis.clone();
    both.extend(outer.basis.iter().cloned());
    if rank_q(&both) != k {
        return Err(Error::SpanMismatch);
    }
    match cross_gram_sign(&inner.basis, &outer.basis) {
        0 => Err(Error::DegenerateOrientation(inner.vertices.clone())),
        s => Ok(s),
    }
}

/// The complex of all faces of one simplex, with vertex ids `0..points.len()`
/// and each face oriented as `[v_{i_1}, ..., v_{i_l}]` for `i_1 < ... < i_l`.
pub fn simplex_complex(points: Vec<Vec<Rational>>, labels: Vec<ExponentVector>) -> Result<LabeledCellComplex> {
    let count = points.len();
    if count == 0 || labels.len() != count {
        return Err(Error::InvalidComplex("simplex needs matching points and labels".into()));
    }
    let ambient = points[0].len();
    let nvars = labels[0].len();
    if crate::polytope::affine_dimension(&points) != count as i32 - 1 {
        return Err(Error::InvalidComplex("simplex vertices are affinely dependent".into()));
    }
    let vertices: BTreeMap<VertexId, Vertex> = points
        .into_iter()
        .zip(labels)
        .enumerate()
        .map(|(id, (point, label))| (id, Vertex { id, point, label }))
        .collect();
    let mut faces = Vec::new();
    for mask in 1u64..(1u64 << count) {
        let vs: Vec<VertexId> = (0..count).filter(|i| mask >> i & 1 == 1).collect();
        let pts: Vec<&[Rational]> = vs.iter().map(|v| vertices[v].point.as_slice()).collect();
        faces.push(Face {
            dim: vs.len() as i32 - 1,
            basis: simplex_basis(&pts),
            vertices: vs,
            label: ExponentVector::zero(nvars),
        });
    }
    LabeledCellComplex::from_closed_faces(ambient, nvars, vertices, faces)
}

/// Barycentric data of `X`'s vertices relative to the unique top simplex of
/// a simplex complex `Y`.
struct SimplexFrame<'a> {
    simplex: &'a LabeledCellComplex,
    top: usize,
    /// For each `X` vertex: its barycentric coordinates, indexed like the
    /// simplex's sorted vertex list.
    coords: BTreeMap<VertexId, Vec<Rational>>,
}

impl<'a> SimplexFrame<'a> {
    fn new(x: &LabeledCellComplex, y: &'a LabeledCellComplex) -> Result<Self> {
        let top = check_simplex_complex(y)?;
        if x.ambient != y.ambient {
            return Err(Error::NotARefinement("ambient dimensions differ".into()));
        }
        let corners: Vec<Vec<Rational>> = y.faces[top]
            .vertices
            .iter()
            .map(|v| {
                let mut c = y.vertices[v].point.clone();
                c.push(q(1));
                c
            })
            .collect();
        let mut coords = BTreeMap::new();
        for v in x.vertices.values() {
            let mut target = v.point.clone();
            target.push(q(1));
            let lambda = solve_columns(&corners, &target).ok_or_else(|| {
                Error::NotARefinement(format!("vertex {} is off the simplex's affine hull", v.id))
            })?;
            coords.insert(v.id, lambda);
        }
        Ok(SimplexFrame {
            simplex: y,
            top,
            coords,
        })
    }

    fn in_simplex(&self, v: VertexId) -> bool {
        self.coords[&v].iter().all(|l| !l.is_negative())
    }

    /// Positions (in the top simplex's vertex list) carrying positive weight.
    fn support(&self, v: VertexId) -> impl Iterator<Item = usize> + '_ {
        self.coords[&v]
            .iter()
            .enumerate()
            .filter(|(_, l)| l.is_positive())
            .map(|(i, _)| i)
    }

    fn contains(&self, x: &LabeledCellComplex, inner: usize, outer: usize) -> bool {
        let top_vs = &self.simplex.faces[self.top].vertices;
        let allowed: BTreeSet<usize> = self.simplex.faces[outer]
            .vertices
            .iter()
            .map(|v| top_vs.iter().position(|t| t == v).expect("face of the simplex"))
            .collect();
        let geometric = x.faces[inner]
            .vertices
            .iter()
            .all(|&v| self.in_simplex(v) && self.support(v).all(|i| allowed.contains(&i)));
        if !geometric {
            return false;
        }
        // Variable support: when the simplex is labeled by pure powers, every
        // label inside a face may only use that face's variables.
        let vars: Option<BTreeSet<usize>> = self.simplex.faces[outer]
            .vertices
            .iter()
            .map(|v| self.simplex.vertices[v].label.pure_power_variable())
            .collect();
        match vars {
            Some(vars) => x.faces[inner].label.support().all(|i| vars.contains(&i)),
            None => true,
        }
    }

    /// Smallest face of the simplex containing the given `X` face.
    fn carrier(&self, x: &LabeledCellComplex, inner: usize) -> usize {
        let top_vs = &self.simplex.faces[self.top].vertices;
        let mut support: BTreeSet<VertexId> = BTreeSet::new();
        for &v in &x.faces[inner].vertices {
            support.extend(self.support(v).map(|i| top_vs[i]));
        }
        let ids: Vec<VertexId> = support.into_iter().collect();
        self.simplex.index[&ids]
    }
}

fn check_simplex_complex(y: &LabeledCellComplex) -> Result<usize> {
    let top_dim = y.dim();
    let tops: Vec<usize> = y.faces_of_dim(top_dim).collect();
    if tops.len() != 1 {
        return Err(Error::NotASimplexComplex);
    }
    let top = tops[0];
    let count = y.faces[top].vertices.len();
    if count != top_dim as usize + 1 || y.faces.len() != 1usize << count {
        return Err(Error::NotASimplexComplex);
    }
    Ok(top)
}

/// All `k`-faces of `x` contained in the face `sigma` of the simplex complex
/// `y`. `x` must refine `y`.
pub fn contained_faces(
    sigma: usize,
    y: &LabeledCellComplex,
    x: &LabeledCellComplex,
    k: i32,
) -> Result<Vec<usize>> {
    let frame = SimplexFrame::new(x, y)?;
    Ok(contained_with(&frame, sigma, x, k))
}

fn contained_with(frame: &SimplexFrame<'_>, sigma: usize, x: &LabeledCellComplex, k: i32) -> Vec<usize> {
    if k < 0 {
        return x.faces_of_dim(-1).collect();
    }
    x.faces_of_dim(k)
        .filter(|&f| frame.contains(x, f, sigma))
        .collect()
}

/// Containment table: for every face `sigma` of `y` (by index), the faces of
/// `x` of the same dimension inside it.
pub fn containment_table(x: &LabeledCellComplex, y: &LabeledCellComplex) -> Result<Vec<Vec<usize>>> {
    let frame = SimplexFrame::new(x, y)?;
    Ok((0..y.faces.len())
        .map(|s| contained_with(&frame, s, x, y.faces[s].dim))
        .collect())
}

/// Does `x` refine the simplex complex `y` as labeled complexes?
pub fn is_refinement(x: &LabeledCellComplex, y: &LabeledCellComplex) -> Result<bool> {
    Ok(refinement_defect(x, y)?.is_none())
}

/// `None` when `x` refines `y`, otherwise a description of the first defect.
pub fn refinement_defect(x: &LabeledCellComplex, y: &LabeledCellComplex) -> Result<Option<String>> {
    let frame = SimplexFrame::new(x, y)?;
    if x.nvars != y.nvars {
        return Ok(Some("label lengths differ".into()));
    }
    for v in x.vertices.values() {
        if !frame.in_simplex(v.id) {
            return Ok(Some(format!("vertex {} lies outside the simplex", v.id)));
        }
    }
    for (i, f) in x.faces.iter().enumerate() {
        if f.dim < 0 {
            continue;
        }
        let carrier = frame.carrier(x, i);
        if y.faces[carrier].dim < f.dim {
            return Ok(Some(format!("face {:?} is not full-dimensional in its carrier", f.vertices)));
        }
        if !f.label.divides(&y.faces[carrier].label) {
            return Ok(Some(format!(
                "label {} of face {:?} does not divide {}",
                f.label.to_monomial_string(),
                f.vertices,
                y.faces[carrier].label.to_monomial_string()
            )));
        }
    }
    for (s, face) in y.faces.iter().enumerate() {
        if face.dim < 0 {
            continue;
        }
        let inside = contained_with(&frame, s, x, face.dim);
        if face.dim == 0 {
            let same = inside.len() == 1 && x.vertices[&x.faces[inside[0]].vertices[0]].point == y.vertices[&face.vertices[0]].point;
            if !same {
                return Ok(Some(format!("simplex vertex {:?} is not a vertex of the refinement", face.vertices)));
            }
            continue;
        }
        let mut total = Rational::zero();
        for &f in &inside {
            total += x.volume_in_basis(f, &face.basis)?;
        }
        let own = y.volume_in_basis(s, &face.basis)?;
        if total != own {
            return Ok(Some(format!(
                "faces inside {:?} cover volume {} of {}",
                face.vertices, total, own
            )));
        }
    }
    Ok(None)
}
