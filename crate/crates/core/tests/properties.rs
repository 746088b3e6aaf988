mod common;

use std::collections::BTreeSet;

use cellres::cellcomplex::{containment_table, contained_faces, sign_same_span};
use cellres::cycle::{all_permutation_checks, c_n, compose, differentiate, partial_only};
use cellres::hull::{embedded_hull, hull_complex, scarf_complex, scarf_subsets, simplex_of, taylor_complex};
use cellres::linalg::{q, Rational};
use cellres::residue::{duality_check, residue_from_theorem, residue_via_comparison};
use cellres::resolution::{cellular_complex, is_exact};
use cellres::samples;
use cellres::{ExponentVector, LabeledCellComplex, MonomialIdeal};
use common::{box_count, scarf_oracle, strand_oracle};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

/// Two-variable Artinian ideals: pure powers plus arbitrary extra
/// generators, minimized.
fn staircase() -> impl Strategy<Value = MonomialIdeal> {
    (1u32..=6, 1u32..=6, prop::collection::vec((0u32..6, 0u32..6), 0..5)).prop_map(|(a, b, extra)| {
        let mut gens = vec![ExponentVector::from([a, 0]), ExponentVector::from([0, b])];
        gens.extend(
            extra
                .into_iter()
                .filter(|&(x, y)| x + y > 0)
                .map(|(x, y)| ExponentVector::from([x, y])),
        );
        cellres::monomial::minimize(gens).unwrap()
    })
}

fn artinian3() -> impl Strategy<Value = MonomialIdeal> {
    (any::<u64>(), 0usize..=4).prop_map(|(seed, extra)| {
        samples::random_artinian(&mut samples::rng(seed), 3, 3, extra)
    })
}

fn generic3() -> impl Strategy<Value = MonomialIdeal> {
    any::<u64>().prop_map(|seed| samples::random_generic(&mut samples::rng(seed), 3, 4, 4))
}

fn any_ideal() -> impl Strategy<Value = MonomialIdeal> {
    prop_oneof![staircase(), artinian3()]
}

/// Multiply each basis by a random integer matrix, returning the complex and
/// the determinant sign used for every face.
fn rebased(x: &LabeledCellComplex, seed: u64) -> (LabeledCellComplex, Vec<i32>) {
    use rand::Rng;
    let mut rng = samples::rng(seed);
    let mut y = x.clone();
    let mut signs = vec![1; x.len()];
    for idx in 0..x.len() {
        let basis = &x.face(idx).basis;
        let k = basis.len();
        if k == 0 {
            continue;
        }
        loop {
            let a: Vec<Vec<Rational>> = (0..k)
                .map(|_| (0..k).map(|_| q(rng.gen_range(-3..=3))).collect())
                .collect();
            let det = cellres::linalg::det_q(&a);
            if det.is_zero() {
                continue;
            }
            let new: Vec<Vec<Rational>> = a
                .iter()
                .map(|row| {
                    (0..basis[0].len())
                        .map(|c| row.iter().zip(basis).map(|(r, b)| r * &b[c]).sum())
                        .collect()
                })
                .collect();
            y.set_basis(idx, new).unwrap();
            signs[idx] = if det > q(0) { 1 } else { -1 };
            break;
        }
    }
    (y, signs)
}

fn facet_pairs(x: &LabeledCellComplex) -> Vec<(usize, usize)> {
    (0..x.len())
        .filter(|&s| x.face(s).dim >= 1)
        .flat_map(|s| x.facets_of(s).iter().map(move |&t| (t, s)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn boundary_squares_to_zero(m in any_ideal()) {
        for x in [hull_complex(&m).unwrap(), taylor_complex(&m).unwrap(), scarf_complex(&m).unwrap()] {
            let f = cellular_complex(&x).unwrap();
            for k in 0..f.length() {
                let prod = f.poly_matrix(k).mul(&f.poly_matrix(k + 1)).unwrap();
                prop_assert!(prod.is_zero(), "d_{} d_{} != 0", k, k + 1);
            }
        }
    }

    #[test]
    fn exactness_matches_strand_ranks(m in any_ideal()) {
        let b = m.pure_power_exponents().unwrap();
        for x in [hull_complex(&m).unwrap(), scarf_complex(&m).unwrap()] {
            let lattice = is_exact(&x, &m).unwrap();
            let oracle = strand_oracle(&cellular_complex(&x).unwrap(), &b);
            prop_assert_eq!(lattice, oracle.is_none());
        }
        prop_assert!(is_exact(&hull_complex(&m).unwrap(), &m).unwrap());
    }

    #[test]
    fn codimension_one_faces_have_one_or_two_cofaces(m in any_ideal()) {
        let x = embedded_hull(&m).unwrap();
        let delta = simplex_of(&x).unwrap();
        let n = m.n() as i32;
        let mut boundary = BTreeSet::new();
        for s in delta.faces_of_dim(n - 2) {
            boundary.extend(contained_faces(s, &delta, &x, n - 2).unwrap());
        }
        for t in x.faces_of_dim(n - 2) {
            let expected = if boundary.contains(&t) { 1 } else { 2 };
            prop_assert_eq!(x.cofacets_of(t).len(), expected, "face {:?}", x.face(t).vertices);
        }
    }

    #[test]
    fn interior_incidences_cancel(m in any_ideal(), seed in any::<u64>()) {
        let x = embedded_hull(&m).unwrap();
        let (x, _) = rebased(&x, seed);
        // restore the top faces to their simplex orientation
        let base = embedded_hull(&m).unwrap();
        let mut x = x;
        let n = m.n() as i32;
        for s in x.faces_of_dim(n - 1).collect::<Vec<_>>() {
            if sign_same_span(x.face(s), base.face(s)).unwrap() < 0 {
                x.reorient(s);
            }
        }
        for t in x.faces_of_dim(n - 2) {
            let cof = x.cofacets_of(t);
            if cof.len() == 2 {
                let sum = x.sign_facet(t, cof[0]).unwrap() + x.sign_facet(t, cof[1]).unwrap();
                prop_assert_eq!(sum, 0);
            }
        }
    }

    #[test]
    fn incidence_signs_transform_with_orientation(m in any_ideal(), seed in any::<u64>()) {
        let x = hull_complex(&m).unwrap();
        let (y, signs) = rebased(&x, seed);
        for (t, s) in facet_pairs(&x) {
            let lhs = sign_same_span(y.face(s), x.face(s)).unwrap() * y.sign_facet(t, s).unwrap();
            let rhs = x.sign_facet(t, s).unwrap() * sign_same_span(y.face(t), x.face(t)).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(sign_same_span(y.face(s), x.face(s)).unwrap(), signs[s]);
            if signs[s] == 1 && signs[t] == 1 {
                prop_assert_eq!(y.sign_facet(t, s).unwrap(), x.sign_facet(t, s).unwrap());
            }
        }
    }

    #[test]
    fn volumes_partition_every_simplex_face(m in any_ideal()) {
        let x = embedded_hull(&m).unwrap();
        let delta = simplex_of(&x).unwrap();
        let table = containment_table(&x, &delta).unwrap();
        for (s, inside) in table.iter().enumerate() {
            if delta.face(s).dim < 1 {
                continue;
            }
            let basis = &delta.face(s).basis;
            let total: Rational = inside.iter().map(|&f| x.volume_in_basis(f, basis).unwrap()).sum();
            prop_assert_eq!(total, delta.volume_in_basis(s, basis).unwrap());
        }
    }

    #[test]
    fn residue_routes_agree_and_satisfy_duality(m in any_ideal()) {
        let b = m.pure_power_exponents().unwrap();
        let x = embedded_hull(&m).unwrap();
        let r = residue_from_theorem(&x, &b).unwrap();
        prop_assert_eq!(&r, &residue_via_comparison(&x, &b).unwrap());
        let report = duality_check(&r, &m, None).unwrap();
        prop_assert!(report.ok, "{:?}", report.counterexample);
    }

    #[test]
    fn full_cycle_is_signed_sum_over_orders(m in any_ideal()) {
        let x = embedded_hull(&m).unwrap();
        let (full, perms) = all_permutation_checks(&x, &m).unwrap();
        let sum: BigInt = perms.iter().map(|p| &p.lhs).sum();
        prop_assert_eq!(&full.lhs, &(BigInt::from(c_n(m.n())) * sum));
        let n_fact: u64 = (1..=m.n() as u64).product();
        prop_assert_eq!(full.lhs, BigInt::from(n_fact * box_count(&m)));
    }

    #[test]
    fn labels_divide_the_total_lcm(m in any_ideal()) {
        let top = m.lcm_all();
        for x in [hull_complex(&m).unwrap(), scarf_complex(&m).unwrap()] {
            for f in x.faces() {
                prop_assert!(f.label.divides(&top));
            }
        }
    }

    #[test]
    fn composition_is_associative(m in any_ideal()) {
        let f = cellular_complex(&hull_complex(&m).unwrap()).unwrap();
        let a = differentiate(&f, 0);
        let b = partial_only(&f, 1, 0);
        let c = if f.length() >= 2 { differentiate(&f, 2) } else { partial_only(&f, 1, 1) };
        if b.cols() == c.rows() {
            let left = compose(&[compose(&[a.clone(), b.clone()]).unwrap(), c.clone()]).unwrap();
            let right = compose(&[a, compose(&[b, c]).unwrap()]).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn generic_per_order_identity(m in generic3()) {
        let x = embedded_hull(&m).unwrap();
        let (_, perms) = all_permutation_checks(&x, &m).unwrap();
        for p in perms {
            prop_assert!(p.claimed);
            prop_assert!(p.ok, "order {:?}: {} vs {}", p.permutation, p.lhs, p.expected);
        }
    }

    #[test]
    fn scarf_equals_hull_for_generic_ideals(m in generic3()) {
        let key = |x: &LabeledCellComplex| -> BTreeSet<(i32, ExponentVector)> {
            x.faces().iter().map(|f| (f.dim, f.label.clone())).collect()
        };
        prop_assert_eq!(key(&scarf_complex(&m).unwrap()), key(&hull_complex(&m).unwrap()));
    }

    #[test]
    fn scarf_subsets_match_oracle(m in prop_oneof![staircase(), artinian3(), generic3()]) {
        let found: BTreeSet<Vec<usize>> = scarf_subsets(&m).unwrap().into_iter().collect();
        prop_assert_eq!(found, scarf_oracle(&m));
    }
}
