//! Finite directed graphs and their paths.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Edge = usize;

/// Largest vertex count for the exhaustive hereditary/saturated search.
const MAX_SUBSET_VERTICES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSpec {
    pub id: String,
    pub source: String,
    pub range: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedGraph {
    vertices: Vec<String>,
    edges: Vec<String>,
    source: Vec<Vertex>,
    range: Vec<Vertex>,
}

/// A finite path: a vertex followed by edges `μ₁…μₙ` with
/// `r(μᵢ) = s(μᵢ₊₁)`. With no edges it is the trivial path at `start`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: Vertex,
    pub edges: Vec<Edge>,
}

impl Path {
    pub fn trivial(v: Vertex) -> Self {
        Path {
            start: v,
            edges: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    /// Whether `self = prefix · η` for some path `η`.
    pub fn has_prefix(&self, prefix: &Path) -> bool {
        self.start == prefix.start && self.edges.starts_with(&prefix.edges)
    }

    /// Ordering key: length, then edges, then start vertex.
    pub(crate) fn key(&self) -> (usize, &[Edge], Vertex) {
        (self.edges.len(), &self.edges, self.start)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub sinks: Vec<Vertex>,
    /// Every cycle once, as an edge sequence starting at its smallest vertex.
    pub cycles: Vec<Vec<Edge>>,
    pub acyclic: bool,
    /// All finite paths when the graph is acyclic.
    pub paths: Option<Vec<Path>>,
}

impl DirectedGraph {
    pub fn new(vertices: Vec<String>, edges: Vec<EdgeSpec>) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::Parse(format!("duplicate vertex {v}")));
            }
        }
        let lookup = |v: &str| {
            index.get(v).copied().ok_or_else(|| Error::Lookup {
                kind: "vertex",
                id: v.to_string(),
            })
        };
        let mut seen = HashMap::new();
        let mut source = Vec::new();
        let mut range = Vec::new();
        for (k, e) in edges.iter().enumerate() {
            if seen.insert(e.id.clone(), k).is_some() {
                return Err(Error::Parse(format!("duplicate edge {}", e.id)));
            }
            source.push(lookup(&e.source)?);
            range.push(lookup(&e.range)?);
        }
        Ok(DirectedGraph {
            vertices,
            edges: edges.into_iter().map(|e| e.id).collect(),
            source,
            range,
        })
    }

    /// Builds from `(id, source, range)` triples.
    pub fn from_triples(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Result<Self> {
        Self::new(
            vertices.iter().map(|v| v.to_string()).collect(),
            edges
                .iter()
                .map(|&(id, s, r)| EdgeSpec {
                    id: id.into(),
                    source: s.into(),
                    range: r.into(),
                })
                .collect(),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_id(&self, v: Vertex) -> &str {
        &self.vertices[v]
    }

    pub fn edge_id(&self, e: Edge) -> &str {
        &self.edges[e]
    }

    pub fn vertex_index(&self, id: &str) -> Result<Vertex> {
        self.vertices
            .iter()
            .position(|v| v == id)
            .ok_or_else(|| Error::Lookup {
                kind: "vertex",
                id: id.to_string(),
            })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[String] {
        &self.edges
    }

    pub fn source(&self, e: Edge) -> Vertex {
        self.source[e]
    }

    pub fn range(&self, e: Edge) -> Vertex {
        self.range[e]
    }

    pub fn emitted(&self, v: Vertex) -> Vec<Edge> {
        (0..self.edges.len())
            .filter(|&e| self.source[e] == v)
            .collect()
    }

    pub fn is_sink(&self, v: Vertex) -> bool {
        !self.source.contains(&v)
    }

    pub fn sinks(&self) -> Vec<Vertex> {
        (0..self.vertices.len())
            .filter(|&v| self.is_sink(v))
            .collect()
    }

    pub fn path_range(&self, p: &Path) -> Vertex {
        p.edges.last().map_or(p.start, |&e| self.range[e])
    }

    /// Edge ids concatenated, or the vertex id for trivial paths.
    pub fn path_label(&self, p: &Path) -> String {
        if p.is_trivial() {
            self.vertices[p.start].clone()
        } else {
            p.edges
                .iter()
                .map(|&e| self.edges[e].as_str())
                .collect::<Vec<_>>()
                .join("")
        }
    }

    /// Every simple cycle exactly once, rooted at its smallest vertex.
    pub fn cycles(&self) -> Vec<Vec<Edge>> {
        let mut out = Vec::new();
        for root in 0..self.vertices.len() {
            let mut stack = Vec::new();
            let mut on_path = vec![false; self.vertices.len()];
            self.cycle_search(root, root, &mut stack, &mut on_path, &mut out);
        }
        out
    }

    fn cycle_search(
        &self,
        root: Vertex,
        v: Vertex,
        stack: &mut Vec<Edge>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<Edge>>,
    ) {
        on_path[v] = true;
        for e in self.emitted(v) {
            let w = self.range[e];
            if w == root {
                let mut c = stack.clone();
                c.push(e);
                out.push(c);
            } else if w > root && !on_path[w] {
                stack.push(e);
                self.cycle_search(root, w, stack, on_path, out);
                stack.pop();
            }
        }
        on_path[v] = false;
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm.
        let n = self.vertices.len();
        let mut indegree = vec![0usize; n];
        for &r in &self.range {
            indegree[r] += 1;
        }
        let mut queue: Vec<Vertex> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for e in self.emitted(v) {
                let w = self.range[e];
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    queue.push(w);
                }
            }
        }
        seen == n
    }

    /// All finite paths, trivial ones included, ordered by length, then
    /// edge sequence, then start vertex. Errors on cyclic graphs.
    pub fn paths(&self) -> Result<Vec<Path>> {
        if !self.is_acyclic() {
            return Err(Error::Unsupported(
                "graph has a cycle, so infinitely many paths".into(),
            ));
        }
        let mut out: Vec<Path> = (0..self.vertices.len()).map(Path::trivial).collect();
        let mut frontier = out.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for e in self.emitted(self.path_range(p)) {
                    let mut q = p.clone();
                    q.edges.push(e);
                    next.push(q);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out.sort_by(|a, b| a.key().cmp(&b.key()));
        Ok(out)
    }

    /// Number of paths (trivial included) ending at each sink.
    pub fn sink_path_counts(&self) -> Result<Vec<(Vertex, usize)>> {
        let paths = self.paths()?;
        Ok(self
            .sinks()
            .into_iter()
            .map(|v| (v, paths.iter().filter(|p| self.path_range(p) == v).count()))
            .collect())
    }

    pub fn analyze(&self) -> GraphReport {
        let acyclic = self.is_acyclic();
        GraphReport {
            vertex_count: self.vertices.len(),
            edge_count: self.edges.len(),
            sinks: self.sinks(),
            cycles: self.cycles(),
            acyclic,
            paths: self.paths().ok(),
        }
    }

    pub fn is_hereditary(&self, h: &[bool]) -> bool {
        (0..self.edges.len()).all(|e| !h[self.source[e]] || h[self.range[e]])
    }

    /// Hereditary, and every regular vertex whose edges all land in `h` is in `h`.
    pub fn is_hereditary_saturated(&self, h: &[bool]) -> bool {
        if !self.is_hereditary(h) {
            return false;
        }
        (0..self.vertices.len()).all(|v| {
            let out = self.emitted(v);
            out.is_empty() || h[v] || !out.iter().all(|&e| h[self.range[e]])
        })
    }

    /// All hereditary saturated subsets, by exhaustive search, each sorted;
    /// listed by size and then lexicographically.
    pub fn hereditary_saturated_subsets(&self) -> Result<Vec<Vec<Vertex>>> {
        let n = self.vertices.len();
        if n > MAX_SUBSET_VERTICES {
            return Err(Error::Unsupported(format!(
                "exhaustive subset search over {n} vertices (at most {MAX_SUBSET_VERTICES})"
            )));
        }
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let h: Vec<bool> = (0..n).map(|v| mask & (1 << v) != 0).collect();
            if self.is_hereditary_saturated(&h) {
                out.push((0..n).filter(|&v| h[v]).collect::<Vec<_>>());
            }
        }
        out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        Ok(out)
    }
}

impl fmt::Display for DirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} vertices, {} edges",
            self.vertices.len(),
            self.edges.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn line(n: usize) -> DirectedGraph {
        let vs: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let es: Vec<EdgeSpec> = (1..n)
            .map(|i| EdgeSpec {
                id: format!("e{i}"),
                source: format!("v{i}"),
                range: format!("v{}", i + 1),
            })
            .collect();
        DirectedGraph::new(vs, es).unwrap()
    }

    #[test]
    fn single_vertex() {
        let g = DirectedGraph::from_triples(&["v"], &[]).unwrap();
        let r = g.analyze();
        assert_eq!(r.sinks, vec![0]);
        assert!(r.acyclic);
        assert_eq!(r.paths.unwrap(), vec![Path::trivial(0)]);
        assert_eq!(
            g.hereditary_saturated_subsets().unwrap(),
            vec![vec![], vec![0]]
        );
    }

    #[test]
    fn line_graph_paths() {
        let g = line(3);
        let r = g.analyze();
        assert_eq!(r.sinks, vec![2]);
        assert_eq!(r.paths.as_ref().unwrap().len(), 6);
        assert!(r.cycles.is_empty());
        assert_eq!(g.sink_path_counts().unwrap(), vec![(2, 3)]);
    }

    #[test]
    fn loops_and_cycles() {
        let g = DirectedGraph::from_triples(&["v"], &[("l", "v", "v")]).unwrap();
        let r = g.analyze();
        assert!(!r.acyclic);
        assert_eq!(r.cycles, vec![vec![0]]);
        assert!(r.paths.is_none());
        let tri = DirectedGraph::from_triples(
            &["a", "b", "c"],
            &[
                ("x", "a", "b"),
                ("y", "b", "c"),
                ("z", "c", "a"),
                ("w", "b", "a"),
            ],
        )
        .unwrap();
        let mut cycles = tri.cycles();
        cycles.sort();
        assert_eq!(cycles, vec![vec![0, 1, 2], vec![0, 3]]);
    }

    #[test]
    fn hereditary_saturated_examples() {
        let a2 = DirectedGraph::from_triples(&["v", "w"], &[("f", "v", "w")]).unwrap();
        assert_eq!(
            a2.hereditary_saturated_subsets().unwrap(),
            vec![vec![], vec![0, 1]]
        );
        let parallel =
            DirectedGraph::from_triples(&["v", "w"], &[("f", "v", "w"), ("g", "v", "w")]).unwrap();
        assert_eq!(
            parallel.hereditary_saturated_subsets().unwrap(),
            vec![vec![], vec![0, 1]]
        );
        // {w} is hereditary, but saturation pulls in v.
        let h = [false, true];
        assert!(a2.is_hereditary(&h));
        assert!(!a2.is_hereditary_saturated(&h));
        // A vertex outside every edge stays free to leave out.
        let split = DirectedGraph::from_triples(&["v", "w", "u"], &[("f", "v", "w")]).unwrap();
        assert_eq!(
            split.hereditary_saturated_subsets().unwrap(),
            vec![vec![], vec![2], vec![0, 1], vec![0, 1, 2]]
        );
    }

    #[test]
    fn bad_input() {
        assert!(DirectedGraph::from_triples(&["v"], &[("f", "v", "u")]).is_err());
        assert!(DirectedGraph::from_triples(&["v", "v"], &[]).is_err());
    }
}
