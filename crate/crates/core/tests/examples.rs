//! Worked examples around the ideal `(z1, z2, z3)^2` and small staircases.

mod common;

use std::collections::BTreeSet;

use cellres::cellcomplex::{contained_faces, is_refinement, refinement_defect};
use cellres::cycle::{compose, partial_only, staircase_partition_2d, PartitionOrder};
use cellres::hull::{embedded_hull, hull_complex, scarf_complex, simplex_of};
use cellres::json::{complex_to_json, parse_complex};
use cellres::poly::SignedMonomial;
use cellres::residue::{comparison_maps, residue_from_theorem, residue_via_comparison};
use cellres::resolution::{cellular_complex, is_exact, is_minimal};
use cellres::samples::{example_ideal, example_minimal_complex};
use cellres::{ExponentVector, LabeledCellComplex, MonomialIdeal};
use common::ev;
use num_bigint::BigInt;

const FIXTURE: &str = include_str!("fixtures/example_minimal_complex.json");

fn labels_of(x: &LabeledCellComplex, faces: &[usize]) -> BTreeSet<ExponentVector> {
    faces.iter().map(|&f| x.face(f).label.clone()).collect()
}

fn vertex_with_label(x: &LabeledCellComplex, label: &[u32]) -> usize {
    x.vertices().find(|v| v.label.as_slice() == label).unwrap().id
}

#[test]
fn hull_is_a_labeled_refinement_of_the_simplex() {
    let x = embedded_hull(&example_ideal()).unwrap();
    let delta = simplex_of(&x).unwrap();
    assert!(is_refinement(&x, &delta).unwrap());
    assert!(is_refinement(&delta, &delta).unwrap());
}

#[test]
fn raising_a_vertex_label_breaks_the_refinement() {
    let x = embedded_hull(&example_ideal()).unwrap();
    let delta = simplex_of(&x).unwrap();
    let mut v = complex_to_json(&x);
    for vertex in v["vertices"].as_array_mut().unwrap() {
        if vertex["label"] == serde_json::json!([2, 0, 0]) {
            vertex["label"] = serde_json::json!([3, 0, 0]);
        }
    }
    let y = parse_complex(&v.to_string()).unwrap();
    assert!(!is_refinement(&y, &delta).unwrap());
    assert!(refinement_defect(&y, &delta).unwrap().unwrap().contains("z1^3"));
}

#[test]
fn faces_inside_simplex_faces() {
    let x = embedded_hull(&example_ideal()).unwrap();
    let delta = simplex_of(&x).unwrap();
    let top = delta.faces_of_dim(2).next().unwrap();
    let all_top: Vec<usize> = x.faces_of_dim(2).collect();
    assert_eq!(contained_faces(top, &delta, &x, 2).unwrap(), all_top);

    // the edge of the simplex between z1^2 and z2^2
    let edge = delta
        .faces_of_dim(1)
        .find(|&f| delta.face(f).label == ev(&[2, 2, 0]))
        .unwrap();
    let inside = contained_faces(edge, &delta, &x, 1).unwrap();
    assert_eq!(labels_of(&x, &inside), [ev(&[2, 1, 0]), ev(&[1, 2, 0])].into_iter().collect());

    for corner in delta.faces_of_dim(0) {
        let found = contained_faces(corner, &delta, &x, 0).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(x.points_of(found[0]), delta.points_of(corner));
    }
}

#[test]
fn top_faces_have_no_cofaces() {
    let x = hull_complex(&example_ideal()).unwrap();
    for f in x.faces_of_dim(2) {
        assert!(x.cofacets_of(f).is_empty());
    }
}

#[test]
fn subcomplexes_by_degree() {
    let x = hull_complex(&example_ideal()).unwrap();
    let inner = x.subcomplex_leq(&ev(&[1, 1, 1]));
    assert_eq!((inner.count_of_dim(0), inner.count_of_dim(1), inner.count_of_dim(2)), (3, 3, 1));
    let tri = inner.faces_of_dim(2).next().unwrap();
    assert_eq!(inner.face(tri).label, ev(&[1, 1, 1]));

    assert_eq!(x.subcomplex_leq(&ev(&[0, 0, 0])).len(), 1);
    assert_eq!(x.subcomplex_leq(&example_ideal().lcm_all()).len(), x.len());
}

#[test]
fn hull_labels_and_the_third_corner() {
    let x = hull_complex(&example_ideal()).unwrap();
    let tops: Vec<usize> = x.faces_of_dim(2).collect();
    let labels = labels_of(&x, &tops);
    // lcm(z1z3, z2z3, z3^2) = z1 z2 z3^2
    assert!(labels.contains(&ev(&[1, 1, 2])));
    assert!(!labels.contains(&ev(&[1, 1, 3])));
    assert!(!is_minimal(&cellular_complex(&x).unwrap()));
}

#[test]
fn scarf_complex_drops_the_inner_triangle() {
    let m = example_ideal();
    let s = scarf_complex(&m).unwrap();
    let h = hull_complex(&m).unwrap();
    let inner = h.faces_of_dim(2).find(|&f| h.face(f).label == ev(&[1, 1, 1])).unwrap();
    assert!(s.face_index(&h.face(inner).vertices).is_none());
    assert_eq!(s.count_of_dim(2), 0);
    assert!(!is_exact(&s, &m).unwrap());
}

#[test]
fn two_edge_path_for_three_generators() {
    let m = MonomialIdeal::from_slices(&[&[2, 0], &[1, 1], &[0, 2]]).unwrap();
    let x = hull_complex(&m).unwrap();
    assert_eq!((x.count_of_dim(0), x.count_of_dim(1)), (3, 2));
    let edges: Vec<usize> = x.faces_of_dim(1).collect();
    assert_eq!(labels_of(&x, &edges), [ev(&[2, 1]), ev(&[1, 2])].into_iter().collect());
}

#[test]
fn comparison_map_entries() {
    let x = embedded_hull(&example_ideal()).unwrap();
    let c = comparison_maps(&x, &ev(&[2, 2, 2])).unwrap();

    // each corner of the simplex goes to the coinciding generator
    let a0 = c.maps.matrix(0);
    for (j, g) in c.psi.level(0).iter().enumerate() {
        let target = vertex_with_label(&x, g.label.as_slice());
        for (i, h) in c.phi.level(0).iter().enumerate() {
            let expected = if h.vertices == [target] {
                SignedMonomial::new(1, ExponentVector::zero(3))
            } else {
                SignedMonomial::zero(3)
            };
            assert_eq!(a0[i][j], expected);
        }
    }

    // the top face with label z1^2 z2 z3 picks up z2 z3
    let a2 = c.maps.matrix(2);
    let row = c.phi.level(2).iter().position(|g| g.label == ev(&[2, 1, 1])).unwrap();
    assert_eq!(a2[row][0], SignedMonomial::new(1, ev(&[0, 1, 1])));
}

#[test]
fn minimal_complex_fixture() {
    let x = parse_complex(FIXTURE).unwrap();
    let built = example_minimal_complex().unwrap();
    assert_eq!((x.count_of_dim(0), x.count_of_dim(1), x.count_of_dim(2)), (6, 8, 3));
    let m = example_ideal();
    assert!(is_exact(&x, &m).unwrap());
    assert!(is_minimal(&cellular_complex(&x).unwrap()));

    let b = ev(&[2, 2, 2]);
    let r = residue_from_theorem(&x, &b).unwrap();
    let entries: BTreeSet<(i8, ExponentVector)> = r.entries.values().map(|c| (c.sign, c.alpha.clone())).collect();
    let expected: BTreeSet<(i8, ExponentVector)> =
        [(1, ev(&[2, 1, 1])), (1, ev(&[1, 2, 1])), (1, ev(&[1, 1, 2]))].into_iter().collect();
    assert_eq!(entries, expected);
    assert_eq!(residue_via_comparison(&x, &b).unwrap(), r);
    let from_samples: BTreeSet<(i8, ExponentVector)> = residue_from_theorem(&built, &b)
        .unwrap()
        .entries
        .values()
        .map(|c| (c.sign, c.alpha.clone()))
        .collect();
    assert_eq!(entries, from_samples);
}

#[test]
fn staircase_display_row() {
    // (z^4, z^3 w, z w^2, w^5): a = (4, 3, 1, 0), b = (0, 1, 2, 5)
    let m = MonomialIdeal::from_slices(&[&[4, 0], &[3, 1], &[1, 2], &[0, 5]]).unwrap();
    let f = cellular_complex(&hull_complex(&m).unwrap()).unwrap();
    let prod = compose(&[partial_only(&f, 0, 0), partial_only(&f, 1, 1)]).unwrap();
    let corners = m.staircase_corners_2d().unwrap();
    for w in corners.windows(2) {
        let ((a_i, b_i), (_, b_next)) = (w[0], w[1]);
        let j = f.level(1).iter().position(|g| g.label == ev(&[a_i, b_next])).unwrap();
        // z^{a_i} w^{b_{i+1}} dz/z ^ dw/w, with the sign of the edge orientation
        let coeff = prod.get(0, j).coefficient(&ev(&[a_i - 1, b_next - 1]), &[0, 1]);
        assert_eq!(coeff.magnitude(), BigInt::from(a_i * (b_next - b_i)).magnitude());
    }
    let p = staircase_partition_2d(&m, PartitionOrder::P).unwrap();
    let q = staircase_partition_2d(&m, PartitionOrder::Q).unwrap();
    let total: u64 = p.iter().map(|r| r.area()).sum();
    assert_eq!(total, m.multiplicity().unwrap());
    assert_eq!(total, q.iter().map(|r| r.area()).sum::<u64>());
}
