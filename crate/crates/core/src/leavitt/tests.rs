use super::*;

fn q() -> FieldSpec {
    FieldSpec::rationals()
}

fn graph(vertices: &[&str], edges: &[(&str, &str, &str)]) -> DirectedGraph {
    DirectedGraph::from_triples(vertices, edges).unwrap()
}

fn corpus() -> Vec<(&'static str, DirectedGraph)> {
    vec![
        ("single", graph(&["v"], &[])),
        ("a2", graph(&["v", "w"], &[("f", "v", "w")])),
        (
            "a3",
            graph(
                &["v1", "v2", "v3"],
                &[("e1", "v1", "v2"), ("e2", "v2", "v3")],
            ),
        ),
        (
            "parallel",
            graph(&["v", "w"], &[("f", "v", "w"), ("g", "v", "w")]),
        ),
        (
            "tree",
            graph(
                &["r", "a", "b", "l1", "l2", "l3", "l4"],
                &[
                    ("ra", "r", "a"),
                    ("rb", "r", "b"),
                    ("a1", "a", "l1"),
                    ("a2", "a", "l2"),
                    ("b3", "b", "l3"),
                    ("b4", "b", "l4"),
                ],
            ),
        ),
        ("disjoint", graph(&["v", "w", "u"], &[("f", "v", "w")])),
    ]
}

/// Paths into each sink by counting walks backwards, sorted.
fn paths_into_sinks(g: &DirectedGraph) -> Vec<usize> {
    fn into(g: &DirectedGraph, v: Vertex) -> usize {
        1 + (0..g.edge_count())
            .filter(|&e| g.range(e) == v)
            .map(|e| into(g, g.source(e)))
            .sum::<usize>()
    }
    let mut out: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| (0..g.edge_count()).all(|e| g.source(e) != v))
        .map(|v| into(g, v))
        .collect();
    out.sort_unstable();
    out
}

#[test]
fn dimensions_match_path_counts() {
    let expected = [1, 4, 9, 9, 36, 5];
    for ((name, g), dim) in corpus().into_iter().zip(expected) {
        let ring = LeavittSkewRing::build(&g, q()).unwrap();
        let sq: usize = paths_into_sinks(&g).iter().map(|n| n * n).sum();
        assert_eq!(ring.dim(), dim, "{name}");
        assert_eq!(sq, dim, "{name}");
        assert_eq!(PathPairAlgebra::build(&g, q()).unwrap().algebra.dim(), dim);
    }
}

#[test]
fn skew_ring_is_associative_graded_and_unital() {
    for (name, g) in corpus() {
        let ring = LeavittSkewRing::build(&g, q()).unwrap();
        assert!(ring.algebra.is_associative(), "{name}");
        assert!(ring.grading_ok(), "{name}");
        assert!(ring.algebra.unit().is_some(), "{name}");
        assert_eq!(ring.alpha_identity_failure(), None, "{name}");
    }
}

#[test]
fn a2_is_two_by_two_matrices() {
    let g = &corpus()[1].1;
    let ring = LeavittSkewRing::build(g, q()).unwrap();
    let w = ring.algebra.wedderburn_blocks().unwrap();
    assert_eq!(w.block_dims(), [4]);
    assert!(w.split());
    assert_eq!(ring.algebra.center().dim(), 1);
}

#[test]
fn phi_passes_on_corpus() {
    for (name, g) in corpus() {
        for field in [
            q(),
            FieldSpec::prime(2).unwrap(),
            FieldSpec::prime(3).unwrap(),
        ] {
            let r = phi_isomorphism_check(&g, field).unwrap();
            assert!(r.passed(), "{name} over {field}: {r:?}");
        }
    }
}

#[test]
fn phi_checks_relation_four_on_parallel_edges() {
    let g = &corpus()[3].1;
    let r = phi_isomorphism_check(g, q()).unwrap();
    assert_eq!((r.skew_dim, r.oracle_dim), (9, 9));
    // 4 vertex pairs, 4 per edge, 4 ghost-edge pairs, one non-sink.
    assert_eq!(r.relations_checked, 4 + 8 + 4 + 1);
}

#[test]
fn broken_images_fail_a_relation() {
    let g = &corpus()[1].1;
    let ring = LeavittSkewRing::build(g, q()).unwrap();
    let mut images = phi_images(&ring).unwrap();
    // Swapping f and f* breaks s(f)f = f.
    std::mem::swap(&mut images.edges[0], &mut images.ghosts[0]);
    let (_, failure) = images.check_relations(g).unwrap();
    assert!(failure.unwrap().starts_with("(2)"));
    let mut images = phi_images(&ring).unwrap();
    images.vertices[0] = vector::zeros(q(), ring.dim());
    let (_, failure) = images.check_relations(g).unwrap();
    assert!(failure.is_some());
}

#[test]
fn oracle_is_matrix_units() {
    let g = &corpus()[2].1;
    let o = PathPairAlgebra::build(g, q()).unwrap();
    assert_eq!(o.algebra.dim(), 9);
    assert_eq!(o.algebra.wedderburn_blocks().unwrap().block_dims(), [9]);
    assert_eq!(o.algebra.labels()[0], "v3·(v3)*");
}

#[test]
fn characterization_of_corpus() {
    for (name, g) in corpus() {
        let c = lpa_characterization(&g, q()).unwrap();
        let s = c.algebra.as_ref().unwrap();
        assert!(c.consistent(), "{name}: {c:?}");
        let sizes = paths_into_sinks(&g);
        assert_eq!(s.matrix_sizes, sizes, "{name}");
        assert_eq!(s.radical_dim, 0);
        let lattice = c.lattice_trivial().unwrap();
        assert_eq!(lattice, s.blocks.len() == 1, "{name}");
    }
}

#[test]
fn characterization_examples() {
    let c = lpa_characterization(&corpus()[2].1, q()).unwrap();
    let s = c.algebra.unwrap();
    assert_eq!((s.dim, s.blocks.clone()), (9, vec![9]));
    assert_eq!(c.verdict, "unital and semisimple: M_3(K)");

    let two = graph(&["v", "w"], &[]);
    let s = lpa_characterization(&two, q()).unwrap().algebra.unwrap();
    assert_eq!((s.dim, s.blocks), (2, vec![1, 1]));

    let looped = graph(&["v"], &[("l", "v", "v")]);
    let c = lpa_characterization(&looped, q()).unwrap();
    assert!(!c.acyclic);
    assert!(c.algebra.is_none());
    assert_eq!(c.verdict, NOT_ARTINIAN);
    assert!(c.consistent());
    assert!(matches!(
        LeavittSkewRing::build(&looped, q()),
        Err(Error::Unsupported(_))
    ));
    assert!(matches!(
        PathPairAlgebra::build(&looped, q()),
        Err(Error::Unsupported(_))
    ));
}
