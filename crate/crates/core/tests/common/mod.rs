//! Fixtures and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use grpd_core::algebra::StructureAlgebra;
use grpd_core::exactlin::vector;
use grpd_core::groupoid::FiniteGroupoid;
use grpd_core::leavitt::{DirectedGraph, Vertex};
use grpd_core::paction::PartialAction;
use grpd_core::{FieldSpec, Matrix, Subspace};

pub fn q() -> FieldSpec {
    FieldSpec::rationals()
}

pub fn fp(p: u32) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

/// `K^n` with coordinatewise product.
pub fn split(f: FieldSpec, n: usize) -> StructureAlgebra {
    let k = StructureAlgebra::base_field(f);
    let factors: Vec<&StructureAlgebra> = std::iter::repeat(&k).take(n).collect();
    StructureAlgebra::direct_product(&factors).unwrap()
}

pub fn coords(f: FieldSpec, n: usize, idx: &[usize]) -> Subspace {
    Subspace::span(f, n, idx.iter().map(|&i| vector::unit(f, n, i)).collect()).unwrap()
}

/// Permutation matrix sending `e_j` to `e_{images[j]}`.
pub fn perm(f: FieldSpec, n: usize, images: &[usize]) -> Matrix {
    let mut m = Matrix::zeros(f, n, n);
    for (j, &i) in images.iter().enumerate() {
        m[(i, j)] = f.one();
    }
    m
}

pub fn trivial_group() -> FiniteGroupoid {
    FiniteGroupoid::from_group(&["1".to_string()], &[vec![0]]).unwrap()
}

/// `ℤ/2` swapping the factors of `K × K`.
pub fn swap(f: FieldSpec) -> PartialAction {
    PartialAction::global(
        FiniteGroupoid::cyclic(2).unwrap(),
        split(f, 2),
        vec![Subspace::full(f, 2)],
        vec![perm(f, 2, &[0, 1]), perm(f, 2, &[1, 0])],
    )
    .unwrap()
}

/// Every morphism acts as the identity on `K`.
pub fn trivial_action(f: FieldSpec, g: FiniteGroupoid) -> PartialAction {
    let maps = vec![Matrix::identity(f, 1); g.morphism_count()];
    PartialAction::global(
        g,
        StructureAlgebra::base_field(f),
        vec![Subspace::full(f, 1)],
        maps,
    )
    .unwrap()
}

/// `ℤ/2` on `ℚ` with `R_a = 0`.
pub fn vanishing() -> PartialAction {
    PartialAction::from_ambient_maps(
        FiniteGroupoid::cyclic(2).unwrap(),
        StructureAlgebra::base_field(q()),
        vec![Subspace::full(q(), 1)],
        vec![Subspace::full(q(), 1), Subspace::zero(q(), 1)],
        vec![Matrix::identity(q(), 1), Matrix::zeros(q(), 1, 1)],
    )
    .unwrap()
}

/// Pair groupoid on three objects shifting blocks of `(ℚ^k)³`; chosen
/// morphisms get a zero domain or a reversed block map.
pub fn pair_action(k: usize, zero: &[&str], twisted: &[&str]) -> PartialAction {
    let f = q();
    let g = FiniteGroupoid::pair_groupoid(3).unwrap();
    let n = 3 * k;
    let block = |i: usize| coords(f, n, &(i * k..(i + 1) * k).collect::<Vec<_>>());
    let components = (0..3).map(block).collect();
    let mut domains = Vec::new();
    let mut maps = Vec::new();
    for m in 0..g.morphism_count() {
        let (d, c) = (g.dom(m), g.cod(m));
        let id = g.morphism_id(m);
        let mut images: Vec<usize> = (0..n).collect();
        for t in 0..k {
            let t2 = if twisted.contains(&id) { k - 1 - t } else { t };
            images[d * k + t] = c * k + t2;
        }
        let mut mat = perm(f, n, &images);
        for i in (0..n).filter(|i| i / k != d) {
            for r in 0..n {
                mat[(r, i)] = f.zero();
            }
        }
        domains.push(if zero.contains(&id) {
            Subspace::zero(f, n)
        } else {
            block(c)
        });
        maps.push(mat);
    }
    PartialAction::from_ambient_maps(g, split(f, n), components, domains, maps).unwrap()
}

/// The pair action on `ℚ³` where only objects 1 and 2 still act on each other.
pub fn partial_pair() -> PartialAction {
    pair_action(1, &["(0,2)", "(2,0)", "(0,1)", "(1,0)"], &[])
}

pub fn graph(vertices: &[&str], edges: &[(&str, &str, &str)]) -> DirectedGraph {
    DirectedGraph::from_triples(vertices, edges).unwrap()
}

pub fn graph_corpus() -> Vec<(&'static str, DirectedGraph)> {
    vec![
        ("single vertex", graph(&["v"], &[])),
        ("A2", graph(&["v", "w"], &[("f", "v", "w")])),
        (
            "A3",
            graph(
                &["v1", "v2", "v3"],
                &[("e1", "v1", "v2"), ("e2", "v2", "v3")],
            ),
        ),
        (
            "parallel edges",
            graph(&["v", "w"], &[("f", "v", "w"), ("g", "v", "w")]),
        ),
        (
            "binary tree",
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
        (
            "two components",
            graph(&["v", "w", "u"], &[("f", "v", "w")]),
        ),
        (
            "diamond",
            graph(
                &["s", "x", "y", "t"],
                &[
                    ("sx", "s", "x"),
                    ("sy", "s", "y"),
                    ("xt", "x", "t"),
                    ("yt", "y", "t"),
                ],
            ),
        ),
    ]
}

/// Number of paths ending at each sink, counted backwards along edges.
pub fn paths_into_sinks(g: &DirectedGraph) -> Vec<usize> {
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

/// Hereditary and saturated vertex sets, by checking every bitmask.
pub fn hereditary_saturated_masks(g: &DirectedGraph) -> Vec<u32> {
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = (0..g.edge_count())
        .map(|e| (g.source(e), g.range(e)))
        .collect();
    (0u32..1 << n)
        .filter(|&h| {
            let has = |v: usize| h & (1 << v) != 0;
            let hereditary = edges.iter().all(|&(s, r)| !has(s) || has(r));
            let saturated = (0..n).all(|v| {
                let out: Vec<usize> = edges.iter().filter(|e| e.0 == v).map(|e| e.1).collect();
                out.is_empty() || !out.iter().all(|&r| has(r)) || has(v)
            });
            hereditary && saturated
        })
        .collect()
}

/// `Σ_{A ∋ e, A ⊆ G} |A|` for a group of order `n`.
pub fn exel_dimension(n: usize) -> usize {
    (0u32..1 << n)
        .filter(|a| a & 1 == 1)
        .map(|a| a.count_ones() as usize)
        .sum()
}
