//! The set `X` of sink-ending paths with the partial action `θ` of the free
//! group on the edges.

use std::collections::HashMap;

use super::graph::{DirectedGraph, Edge, Path, Vertex};
use crate::error::{Error, Result};

/// A letter of the free group: an edge or its inverse.
pub type Letter = (Edge, bool);

/// `a b⁻¹` with `r(a) = r(b)` and no cancellation at the junction. A trivial
/// side is the vertex `r` of the other side; both trivial is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    pub a: Path,
    pub b: Path,
}

impl ReducedWord {
    pub fn is_identity(&self) -> bool {
        self.a.is_trivial() && self.b.is_trivial()
    }

    pub fn inverse(&self) -> ReducedWord {
        ReducedWord {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// Letters of `a` followed by those of `b⁻¹`.
    pub fn letters(&self) -> Vec<Letter> {
        self.a
            .edges
            .iter()
            .map(|&e| (e, false))
            .chain(self.b.edges.iter().rev().map(|&e| (e, true)))
            .collect()
    }

    pub fn label(&self, g: &DirectedGraph) -> String {
        if self.is_identity() {
            return "1".into();
        }
        let mut parts = Vec::new();
        if !self.a.is_trivial() {
            parts.push(g.path_label(&self.a));
        }
        if !self.b.is_trivial() {
            parts.push(format!("({})^-1", g.path_label(&self.b)));
        }
        parts.join("")
    }

    fn key(&self) -> (usize, &[Edge], usize, &[Edge]) {
        (self.a.len(), &self.a.edges, self.b.len(), &self.b.edges)
    }
}

/// Free reduction of a letter sequence.
pub fn reduce(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        match out.last() {
            Some(&(e, inv)) if e == l.0 && inv != l.1 => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

/// `X`, the nonempty `X_g`, the maps `θ_g : X_{g⁻¹} → X_g`, and the sets
/// `X_v = {ξ : s(ξ) = v}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XSpace {
    pub points: Vec<Path>,
    /// Words with `X_g ≠ ∅`, identity first, then by `(|a|, a, |b|, b)`.
    pub words: Vec<ReducedWord>,
    /// Sorted point indices of each `X_g`.
    pub members: Vec<Vec<usize>>,
    pub vertex_sets: Vec<Vec<usize>>,
    /// `theta[g][ξ]` is `θ_g(ξ)` for `ξ ∈ X_{g⁻¹}`.
    theta: Vec<Vec<Option<usize>>>,
    inverse: Vec<usize>,
    index: HashMap<Vec<Letter>, usize>,
}

impl XSpace {
    /// Errors on graphs with a cycle: infinite paths would belong to `X`.
    pub fn new(g: &DirectedGraph) -> Result<Self> {
        let paths = g.paths()?;
        let points: Vec<Path> = paths
            .iter()
            .filter(|p| g.is_sink(g.path_range(p)))
            .cloned()
            .collect();
        let point_index: HashMap<&Path, usize> =
            points.iter().enumerate().map(|(i, p)| (p, i)).collect();

        let mut words = vec![ReducedWord {
            a: Path::trivial(0),
            b: Path::trivial(0),
        }];
        for a in paths.iter().filter(|p| !p.is_trivial()) {
            let r = g.path_range(a);
            words.push(ReducedWord {
                a: a.clone(),
                b: Path::trivial(r),
            });
            words.push(ReducedWord {
                a: Path::trivial(r),
                b: a.clone(),
            });
            for b in paths.iter().filter(|p| !p.is_trivial()) {
                if g.path_range(b) == r && a.edges.last() != b.edges.last() {
                    words.push(ReducedWord {
                        a: a.clone(),
                        b: b.clone(),
                    });
                }
            }
        }
        words.sort_by(|x, y| x.key().cmp(&y.key()));
        words.dedup();

        let in_domain = |w: &ReducedWord, p: &Path| w.is_identity() || p.has_prefix(&w.a);
        let mut kept = Vec::new();
        let mut members = Vec::new();
        for w in words {
            let m: Vec<usize> = (0..points.len())
                .filter(|&i| in_domain(&w, &points[i]))
                .collect();
            if !m.is_empty() {
                kept.push(w);
                members.push(m);
            }
        }
        let index: HashMap<Vec<Letter>, usize> = kept
            .iter()
            .enumerate()
            .map(|(i, w)| (w.letters(), i))
            .collect();
        let inverse = kept
            .iter()
            .map(|w| {
                index.get(&w.inverse().letters()).copied().ok_or_else(|| {
                    Error::Precondition("support is not closed under inverses".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;

        let mut theta = Vec::new();
        for (k, w) in kept.iter().enumerate() {
            let mut map = vec![None; points.len()];
            for &i in &members[inverse[k]] {
                let xi = &points[i];
                let image = if w.is_identity() {
                    xi.clone()
                } else {
                    let mut edges = w.a.edges.clone();
                    edges.extend_from_slice(&xi.edges[w.b.len()..]);
                    Path {
                        start: w.a.start,
                        edges,
                    }
                };
                map[i] = Some(*point_index.get(&image).ok_or_else(|| {
                    Error::Precondition(format!("θ leaves X at {}", g.path_label(&image)))
                })?);
            }
            theta.push(map);
        }
        let vertex_sets = (0..g.vertex_count())
            .map(|v: Vertex| {
                (0..points.len())
                    .filter(|&i| points[i].start == v)
                    .collect()
            })
            .collect();
        Ok(XSpace {
            points,
            words: kept,
            members,
            vertex_sets,
            theta,
            inverse,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Index of the word with these (reduced) letters, if its `X_g` is nonempty.
    pub fn word_index(&self, letters: &[Letter]) -> Option<usize> {
        self.index.get(letters).copied()
    }

    pub fn inverse_of(&self, g: usize) -> usize {
        self.inverse[g]
    }

    /// Index of the product `gh`, if it has nonempty `X_{gh}`.
    pub fn product(&self, g: usize, h: usize) -> Option<usize> {
        let letters = reduce(
            self.words[g]
                .letters()
                .into_iter()
                .chain(self.words[h].letters()),
        );
        self.word_index(&letters)
    }

    /// `θ_g(ξ)` for `ξ ∈ X_{g⁻¹}`.
    pub fn theta(&self, g: usize, xi: usize) -> Option<usize> {
        self.theta[g][xi]
    }

    /// Indicator of `X_g` as a 0/1 vector over `X`.
    pub fn indicator(&self, g: usize) -> Vec<bool> {
        let mut v = vec![false; self.len()];
        for &i in &self.members[g] {
            v[i] = true;
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> DirectedGraph {
        DirectedGraph::from_triples(&["v", "w"], &[("f", "v", "w")]).unwrap()
    }

    fn a3() -> DirectedGraph {
        DirectedGraph::from_triples(
            &["v1", "v2", "v3"],
            &[("e1", "v1", "v2"), ("e2", "v2", "v3")],
        )
        .unwrap()
    }

    fn labels(g: &DirectedGraph, x: &XSpace, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| g.path_label(&x.points[i])).collect()
    }

    #[test]
    fn single_vertex() {
        let g = DirectedGraph::from_triples(&["v"], &[]).unwrap();
        let x = XSpace::new(&g).unwrap();
        assert_eq!(x.len(), 1);
        assert_eq!(x.words.len(), 1);
        assert!(x.words[0].is_identity());
        assert_eq!(x.theta(0, 0), Some(0));
    }

    #[test]
    fn a2_sets_and_maps() {
        let g = a2();
        let x = XSpace::new(&g).unwrap();
        assert_eq!(labels(&g, &x, &[0, 1]), ["w", "f"]);
        let f = x.word_index(&[(0, false)]).unwrap();
        let fi = x.word_index(&[(0, true)]).unwrap();
        assert_eq!(labels(&g, &x, &x.members[f]), ["f"]);
        assert_eq!(labels(&g, &x, &x.members[fi]), ["w"]);
        // θ_f prepends f; θ_{f⁻¹}(f) is the sink w.
        assert_eq!(x.theta(f, 0), Some(1));
        assert_eq!(x.theta(fi, 1), Some(0));
        assert_eq!(x.words[f].label(&g), "f");
        assert_eq!(x.words[fi].label(&g), "(f)^-1");
    }

    #[test]
    fn a3_tail_clause() {
        let g = a3();
        let x = XSpace::new(&g).unwrap();
        assert_eq!(
            labels(&g, &x, &(0..x.len()).collect::<Vec<_>>()),
            ["v3", "e2", "e1e2"]
        );
        let e1i = x.word_index(&[(0, true)]).unwrap();
        assert_eq!(labels(&g, &x, &x.members[e1i]), ["e2"]);
        let src = x.members[x.inverse_of(e1i)].clone();
        assert_eq!(labels(&g, &x, &src), ["e1e2"]);
        assert_eq!(x.theta(e1i, src[0]), Some(1));
    }

    #[test]
    fn theta_inverse_law() {
        let parallel =
            DirectedGraph::from_triples(&["v", "w"], &[("f", "v", "w"), ("g", "v", "w")]).unwrap();
        for g in [a2(), a3(), parallel] {
            let x = XSpace::new(&g).unwrap();
            for k in 0..x.words.len() {
                let ki = x.inverse_of(k);
                for &xi in &x.members[ki] {
                    let y = x.theta(k, xi).unwrap();
                    assert!(x.members[k].contains(&y));
                    assert_eq!(x.theta(ki, y), Some(xi));
                }
            }
        }
    }

    #[test]
    fn mixed_words_in_parallel_edges() {
        let g =
            DirectedGraph::from_triples(&["v", "w"], &[("f", "v", "w"), ("g", "v", "w")]).unwrap();
        let x = XSpace::new(&g).unwrap();
        let fg = x.word_index(&[(0, false), (1, true)]).unwrap();
        assert_eq!(x.words[fg].label(&g), "f(g)^-1");
        assert_eq!(labels(&g, &x, &x.members[fg]), ["f"]);
        // f f⁻¹ cancels, so it is not a reduced word of its own.
        assert!(x.word_index(&[(0, false), (0, true)]).is_none());
        assert_eq!(
            x.product(fg, x.inverse_of(fg)),
            x.word_index(&reduce([(0, false), (0, true)]))
        );
    }

    #[test]
    fn cyclic_graphs_are_rejected() {
        let g = DirectedGraph::from_triples(&["v"], &[("l", "v", "v")]).unwrap();
        assert!(matches!(XSpace::new(&g), Err(Error::Unsupported(_))));
    }
}
