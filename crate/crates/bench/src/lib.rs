//! Inputs shared by the benchmarks.

use grpd_core::algebra::StructureAlgebra;
use grpd_core::groupoid::FiniteGroupoid;
use grpd_core::leavitt::DirectedGraph;
use grpd_core::FieldSpec;

pub fn rationals() -> FieldSpec {
    FieldSpec::rationals()
}

/// Path graph `v0 → v1 → … → v{n-1}`.
pub fn line_graph(n: usize) -> DirectedGraph {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let edges: Vec<(String, String, String)> = (1..n)
        .map(|i| (format!("e{i}"), names[i - 1].clone(), names[i].clone()))
        .collect();
    let v: Vec<&str> = names.iter().map(String::as_str).collect();
    let e: Vec<(&str, &str, &str)> = edges
        .iter()
        .map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str()))
        .collect();
    DirectedGraph::from_triples(&v, &e).expect("line graph")
}

pub fn pair_groupoid(n: usize) -> FiniteGroupoid {
    FiniteGroupoid::pair_groupoid(n).expect("pair groupoid")
}

pub fn octonions() -> StructureAlgebra {
    StructureAlgebra::cayley_dickson(rationals(), 3).expect("octonions")
}
