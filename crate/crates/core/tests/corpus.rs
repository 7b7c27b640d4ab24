mod common;

use common::*;
use grpd_core::algebra::StructureAlgebra;
use grpd_core::groupoid::FiniteGroupoid;
use grpd_core::leavitt::{lpa_characterization, LeavittSkewRing, XSpace, NOT_ARTINIAN};
use grpd_core::paction::PartialAction;
use grpd_core::skewring::build_skew_groupoid_ring;

fn domain_dims(pa: &PartialAction) -> usize {
    (0..pa.groupoid().morphism_count())
        .map(|g| pa.domain(g).dim())
        .sum()
}

#[test]
fn skew_ring_dimension_is_the_sum_of_domains() {
    for (name, pa) in [
        ("swap", swap(q())),
        ("vanishing", vanishing()),
        ("partial pair", partial_pair()),
        ("pair k=2", pair_action(2, &[], &[])),
    ] {
        let ring = build_skew_groupoid_ring(&pa).unwrap();
        assert_eq!(ring.algebra.dim(), domain_dims(&pa), "{name}");
        assert!(ring.algebra.is_associative(), "{name}");
    }
}

#[test]
fn swap_skew_ring_is_a_matrix_ring() {
    // (K × K) ⋊ ℤ/2 ≅ M_2(K) in every characteristic.
    for f in [q(), fp(2), fp(3)] {
        let ring = build_skew_groupoid_ring(&swap(f)).unwrap();
        assert_eq!(ring.algebra.wedderburn_blocks().unwrap().block_dims(), [4]);
    }
}

#[test]
fn fixed_rings() {
    assert_eq!(swap(q()).fixed_ring().unwrap().dim(), 1);
    assert_eq!(pair_action(2, &[], &[]).fixed_ring().unwrap().dim(), 2);
    let z3 = trivial_action(q(), FiniteGroupoid::cyclic(3).unwrap());
    assert_eq!(z3.fixed_ring().unwrap().dim(), 1);
}

#[test]
fn hereditary_saturated_sets_match_enumeration() {
    for (name, g) in graph_corpus() {
        let mut found: Vec<u32> = g
            .hereditary_saturated_subsets()
            .unwrap()
            .iter()
            .map(|h| h.iter().map(|&v| 1u32 << v).sum())
            .collect();
        found.sort_unstable();
        let mut expected = hereditary_saturated_masks(&g);
        expected.sort_unstable();
        assert_eq!(found, expected, "{name}");
    }
}

#[test]
fn x_space_sizes() {
    for (name, g) in graph_corpus() {
        let x = XSpace::new(&g).unwrap();
        assert_eq!(
            x.len(),
            paths_into_sinks(&g).iter().sum::<usize>(),
            "{name}"
        );
        assert!(x.words[0].is_identity(), "{name}");
    }
}

#[test]
fn leavitt_over_finite_fields() {
    for (name, g) in graph_corpus() {
        let expected: usize = paths_into_sinks(&g).iter().map(|k| k * k).sum();
        for f in [fp(2), fp(3)] {
            let ring = LeavittSkewRing::build(&g, f).unwrap();
            assert_eq!(ring.algebra.dim(), expected, "{name}");
            assert!(ring.algebra.is_semisimple().unwrap(), "{name}");
        }
    }
}

#[test]
fn cyclic_graphs_are_classified_only() {
    for g in [
        graph(&["v"], &[("e", "v", "v")]),
        graph(&["v", "w"], &[("e", "v", "w"), ("f", "w", "v")]),
    ] {
        let c = lpa_characterization(&g, q()).unwrap();
        assert!(!c.acyclic);
        assert!(c.algebra.is_none());
        assert_eq!(c.verdict, NOT_ARTINIAN);
        assert!(LeavittSkewRing::build(&g, q()).is_err());
    }
}

#[test]
fn groupoid_ring_with_mixed_coefficients() {
    // Two components: the pair groupoid on two objects and a trivial group.
    let pair = FiniteGroupoid::pair_groupoid(2).unwrap();
    let g = pair.disjoint_union(&trivial_group()).unwrap();
    let dual = StructureAlgebra::truncated_polynomial(q(), 2);
    let field = StructureAlgebra::base_field(q());
    let ring = grpd_core::skewring::build_groupoid_ring(&g, &[dual, field]).unwrap();
    let a = &ring.algebra;
    assert_eq!(a.dim(), 4 * 2 + 1);
    assert_eq!(a.jacobson_radical().unwrap().dim(), 4);
    let quotient = a.quotient_by_ideal(&a.jacobson_radical().unwrap()).unwrap();
    assert_eq!(quotient.wedderburn_blocks().unwrap().block_dims(), [1, 4]);
}
