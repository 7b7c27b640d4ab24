//! Leavitt path algebras of finite acyclic graphs, built as a partial skew
//! group ring `D(X) ⋆ 𝔽` and checked against a path-pair model.

mod graph;
mod xspace;

pub use graph::{DirectedGraph, Edge, EdgeSpec, GraphReport, Path, Vertex};
pub use xspace::{reduce, Letter, ReducedWord, XSpace};

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{vector, EchelonBuilder, FieldSpec, Matrix, Scalar, Subspace};

/// `D(X) ⋆ 𝔽` over the words with `D_g ≠ 0`. Basis: words in order, then
/// the RREF basis of `D_g ⊆ K^X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeavittSkewRing {
    pub algebra: StructureAlgebra,
    pub graph: DirectedGraph,
    pub xspace: XSpace,
    /// `D_g` per word of `xspace.words`.
    pub domains: Vec<Subspace>,
    /// Word index of each basis vector.
    pub degrees: Vec<usize>,
    offsets: Vec<usize>,
}

fn indicator(field: FieldSpec, n: usize, set: &[usize]) -> Vec<Scalar> {
    let mut v = vector::zeros(field, n);
    for &i in set {
        v[i] = field.one();
    }
    v
}

fn pointwise(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x * y).collect()
}

impl LeavittSkewRing {
    pub fn build(graph: &DirectedGraph, field: FieldSpec) -> Result<Self> {
        let xs = XSpace::new(graph)?;
        let n = xs.len();
        let mut seeds: Vec<Vec<Scalar>> =
            xs.members.iter().map(|m| indicator(field, n, m)).collect();
        seeds.extend(xs.vertex_sets.iter().map(|m| indicator(field, n, m)));
        let mut span = EchelonBuilder::new(field, n);
        for s in &seeds {
            span.insert(s)?;
        }
        // Close under pointwise products.
        loop {
            let basis = span.clone().finish().basis().to_vec();
            let mut grew = false;
            for x in &basis {
                for y in &basis {
                    grew |= span.insert(&pointwise(x, y))?;
                }
            }
            if !grew {
                break;
            }
        }
        let d_e = span.finish();
        let domains = (0..xs.words.len())
            .map(|g| {
                let one = indicator(field, n, &xs.members[g]);
                Subspace::span(
                    field,
                    n,
                    d_e.basis().iter().map(|d| pointwise(&one, d)).collect(),
                )
            })
            .collect::<Result<Vec<_>>>()?;

        let mut offsets = Vec::new();
        let mut owner = Vec::new();
        let mut labels = Vec::new();
        for (g, d) in domains.iter().enumerate() {
            offsets.push(owner.len());
            for i in 0..d.dim() {
                owner.push((g, i));
                labels.push(format!("d{i}δ[{}]", xs.words[g].label(graph)));
            }
        }
        let dim = owner.len();
        let mut failure = None;
        let algebra = StructureAlgebra::from_fn(field, dim, |p, q| {
            let mut out = vector::zeros(field, dim);
            let ((g, i), (h, j)) = (owner[p], owner[q]);
            let value = skew_product(&xs, g, &domains[g].basis()[i], &domains[h].basis()[j]);
            match xs.product(g, h) {
                Some(gh) => match domains[gh].coordinates(&value).expect("length") {
                    Some(c) => {
                        for (k, x) in c.into_iter().enumerate() {
                            out[offsets[gh] + k] = x;
                        }
                    }
                    None => failure = Some((g, h)),
                },
                None if vector::is_zero(&value) => {}
                None => failure = Some((g, h)),
            }
            out
        })?;
        if let Some((g, h)) = failure {
            return Err(Error::Precondition(format!(
                "product of degrees {} and {} leaves its component",
                xs.words[g].label(graph),
                xs.words[h].label(graph)
            )));
        }
        let algebra = algebra.with_labels(labels)?;
        let degrees = owner.iter().map(|&(g, _)| g).collect();
        let mut ring = LeavittSkewRing {
            algebra,
            graph: graph.clone(),
            xspace: xs,
            domains,
            degrees,
            offsets,
        };
        let unit = ring.element(0, &indicator(field, n, &(0..n).collect::<Vec<_>>()))?;
        ring.algebra = match ring.algebra.clone().with_unit(unit) {
            Ok(a) => a,
            Err(_) => ring.algebra.clone().detect_unit(),
        };
        Ok(ring)
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `f δ_g` for `f ∈ D_g` given pointwise on `X`.
    pub fn element(&self, g: usize, f: &[Scalar]) -> Result<Vec<Scalar>> {
        let c = self.domains[g].coordinates(f)?.ok_or_else(|| {
            Error::Precondition(format!(
                "function lies outside D_{}",
                self.xspace.words[g].label(&self.graph)
            ))
        })?;
        let mut out = vector::zeros(self.field(), self.dim());
        for (i, x) in c.into_iter().enumerate() {
            out[self.offsets[g] + i] = x;
        }
        Ok(out)
    }

    fn letter_element(&self, letter: Letter) -> Result<Vec<Scalar>> {
        match self.xspace.word_index(&[letter]) {
            Some(g) => {
                let one = indicator(self.field(), self.xspace.len(), &self.xspace.members[g]);
                self.element(g, &one)
            }
            None => Ok(vector::zeros(self.field(), self.dim())),
        }
    }

    /// `φ(v) = 1_v δ_e`.
    pub fn vertex(&self, v: Vertex) -> Result<Vec<Scalar>> {
        let one = indicator(self.field(), self.xspace.len(), &self.xspace.vertex_sets[v]);
        self.element(0, &one)
    }

    /// `φ(f) = 1_f δ_f`.
    pub fn edge(&self, e: Edge) -> Result<Vec<Scalar>> {
        self.letter_element((e, false))
    }

    /// `φ(f*) = 1_{f⁻¹} δ_{f⁻¹}`.
    pub fn ghost(&self, e: Edge) -> Result<Vec<Scalar>> {
        self.letter_element((e, true))
    }

    pub fn degree_range(&self, g: usize) -> std::ops::Range<usize> {
        self.offsets[g]..self.offsets[g] + self.domains[g].dim()
    }

    /// Products of homogeneous basis vectors land in the degree of the
    /// product word, or vanish when that word has empty `X_{gh}`.
    pub fn grading_ok(&self) -> bool {
        let a = &self.algebra;
        (0..a.dim()).all(|p| {
            (0..a.dim()).all(|q| {
                let prod = a.basis_product(p, q);
                match self.xspace.product(self.degrees[p], self.degrees[q]) {
                    Some(gh) => prod.iter().all(|(k, _)| self.degrees[*k] == gh),
                    None => prod.is_empty(),
                }
            })
        })
    }

    /// `α_g(1_{g⁻¹} 1_h) = 1_g 1_{gh}` pointwise on `X` for all words `g, h`,
    /// with `1_{gh} = 0` off the support. Returns the first failing pair.
    pub fn alpha_identity_failure(&self) -> Option<(usize, usize)> {
        let xs = &self.xspace;
        let (f, n) = (self.field(), xs.len());
        for g in 0..xs.words.len() {
            let gi = xs.inverse_of(g);
            for h in 0..xs.words.len() {
                let arg = pointwise(
                    &indicator(f, n, &xs.members[gi]),
                    &indicator(f, n, &xs.members[h]),
                );
                let lhs = alpha(xs, g, &arg);
                let gh = match xs.product(g, h) {
                    Some(k) => indicator(f, n, &xs.members[k]),
                    None => vector::zeros(f, n),
                };
                if lhs != pointwise(&indicator(f, n, &xs.members[g]), &gh) {
                    return Some((g, h));
                }
            }
        }
        None
    }
}

/// `α_g(f) = f ∘ θ_{g⁻¹}` on `X_g` and zero elsewhere.
fn alpha(xs: &XSpace, g: usize, f: &[Scalar]) -> Vec<Scalar> {
    let gi = xs.inverse_of(g);
    let mut out = f.to_vec();
    for x in out.iter_mut() {
        *x = x.field().zero();
    }
    for &eta in &xs.members[g] {
        let xi = xs.theta(gi, eta).expect("θ_{g⁻¹} defined on X_g");
        out[eta] = f[xi].clone();
    }
    out
}

/// `(u δ_g)(w δ_h) = α_g(α_{g⁻¹}(u) w) δ_{gh}`, returning the coefficient.
fn skew_product(xs: &XSpace, g: usize, u: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
    let back = alpha(xs, xs.inverse_of(g), u);
    alpha(xs, g, &pointwise(&back, w))
}

/// Path-pair model with basis `μν*`, `r(μ) = r(ν)` a sink, and
/// `(μν*)(στ*) = δ_{ν,σ} μτ*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathPairAlgebra {
    pub algebra: StructureAlgebra,
    pub pairs: Vec<(Path, Path)>,
}

impl PathPairAlgebra {
    pub fn build(graph: &DirectedGraph, field: FieldSpec) -> Result<Self> {
        let paths = graph.paths()?;
        let mut pairs = Vec::new();
        for s in graph.sinks() {
            let into: Vec<&Path> = paths.iter().filter(|p| graph.path_range(p) == s).collect();
            for mu in &into {
                for nu in &into {
                    pairs.push(((*mu).clone(), (*nu).clone()));
                }
            }
        }
        let dim = pairs.len();
        let index: std::collections::HashMap<(&Path, &Path), usize> = pairs
            .iter()
            .enumerate()
            .map(|(i, (m, n))| ((m, n), i))
            .collect();
        let algebra = StructureAlgebra::from_sparse_fn(field, dim, |i, j| {
            let ((mu, nu), (sigma, tau)) = (&pairs[i], &pairs[j]);
            if nu == sigma {
                vec![(index[&(mu, tau)], field.one())]
            } else {
                Vec::new()
            }
        })?;
        let labels = pairs
            .iter()
            .map(|(m, n)| format!("{}·({})*", graph.path_label(m), graph.path_label(n)))
            .collect();
        let unit = {
            let mut u = vector::zeros(field, dim);
            for (i, (m, n)) in pairs.iter().enumerate() {
                if m == n {
                    u[i] = field.one();
                }
            }
            u
        };
        let algebra = algebra.with_labels(labels)?.with_unit(unit)?;
        Ok(PathPairAlgebra { algebra, pairs })
    }
}

/// Outcome of comparing the two models through `φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiReport {
    pub skew_dim: usize,
    pub oracle_dim: usize,
    /// Relation instances checked on the generator images.
    pub relations_checked: usize,
    pub first_failure: Option<String>,
    /// The generator images generate the whole skew ring.
    pub generates: bool,
    /// `μν* ↦ φ(μ)φ(ν)*` is a bijective, multiplicative map from the oracle.
    pub basis_map_bijective: bool,
    pub basis_map_multiplicative: bool,
}

impl PhiReport {
    pub fn passed(&self) -> bool {
        self.skew_dim == self.oracle_dim
            && self.first_failure.is_none()
            && self.generates
            && self.basis_map_bijective
            && self.basis_map_multiplicative
    }
}

/// Generator images for checking relations (1)–(4).
pub struct GeneratorImages<'a> {
    pub algebra: &'a StructureAlgebra,
    pub vertices: Vec<Vec<Scalar>>,
    pub edges: Vec<Vec<Scalar>>,
    pub ghosts: Vec<Vec<Scalar>>,
}

impl GeneratorImages<'_> {
    /// Checks the Leavitt relations on the images: orthogonal idempotent
    /// vertices, `s(f)f = f r(f) = f`, `r(f)f* = f* s(f) = f*`,
    /// `f*f' = δ_{f,f'} r(f)` and `v = Σ_{s(f)=v} ff*` at non-sinks.
    /// Returns the number of instances checked and the first failure.
    pub fn check_relations(&self, graph: &DirectedGraph) -> Result<(usize, Option<String>)> {
        let a = self.algebra;
        let zero = vector::zeros(a.field(), a.dim());
        let mut checked = 0;
        let mut check = |ok: bool, what: String| -> Option<String> {
            checked += 1;
            (!ok).then_some(what)
        };
        let vname = |v: Vertex| graph.vertex_id(v).to_string();
        let ename = |e: Edge| graph.edge_id(e).to_string();
        for v in 0..graph.vertex_count() {
            for w in 0..graph.vertex_count() {
                let p = a.multiply(&self.vertices[v], &self.vertices[w])?;
                let expect = if v == w { &self.vertices[v] } else { &zero };
                if let Some(f) = check(&p == expect, format!("(1) {}·{}", vname(v), vname(w))) {
                    return Ok((checked, Some(f)));
                }
            }
        }
        for e in 0..graph.edge_count() {
            let (s, r) = (graph.source(e), graph.range(e));
            let cases = [
                (
                    a.multiply(&self.vertices[s], &self.edges[e])?,
                    &self.edges[e],
                    "s(f)f",
                ),
                (
                    a.multiply(&self.edges[e], &self.vertices[r])?,
                    &self.edges[e],
                    "f r(f)",
                ),
                (
                    a.multiply(&self.vertices[r], &self.ghosts[e])?,
                    &self.ghosts[e],
                    "r(f)f*",
                ),
                (
                    a.multiply(&self.ghosts[e], &self.vertices[s])?,
                    &self.ghosts[e],
                    "f* s(f)",
                ),
            ];
            for (lhs, rhs, name) in cases {
                if let Some(f) = check(&lhs == rhs, format!("(2) {name} at {}", ename(e))) {
                    return Ok((checked, Some(f)));
                }
            }
        }
        for e in 0..graph.edge_count() {
            for e2 in 0..graph.edge_count() {
                let p = a.multiply(&self.ghosts[e], &self.edges[e2])?;
                let expect = if e == e2 {
                    &self.vertices[graph.range(e)]
                } else {
                    &zero
                };
                if let Some(f) = check(&p == expect, format!("(3) {}*·{}", ename(e), ename(e2))) {
                    return Ok((checked, Some(f)));
                }
            }
        }
        for v in 0..graph.vertex_count() {
            if graph.is_sink(v) {
                continue;
            }
            let mut sum = zero.clone();
            for e in graph.emitted(v) {
                sum = vector::add(&sum, &a.multiply(&self.edges[e], &self.ghosts[e])?);
            }
            if let Some(f) = check(sum == self.vertices[v], format!("(4) at {}", vname(v))) {
                return Ok((checked, Some(f)));
            }
        }
        Ok((checked, None))
    }

    fn path(&self, p: &Path) -> Result<Vec<Scalar>> {
        let mut x = self.vertices[p.start].clone();
        for &e in &p.edges {
            x = self.algebra.multiply(&x, &self.edges[e])?;
        }
        Ok(x)
    }

    fn ghost_path(&self, graph: &DirectedGraph, p: &Path) -> Result<Vec<Scalar>> {
        let mut x = self.vertices[graph.path_range(p)].clone();
        for &e in p.edges.iter().rev() {
            x = self.algebra.multiply(&x, &self.ghosts[e])?;
        }
        Ok(x)
    }
}

/// The images of `v, f, f*` under `φ` in the skew ring.
pub fn phi_images(ring: &LeavittSkewRing) -> Result<GeneratorImages<'_>> {
    let g = &ring.graph;
    Ok(GeneratorImages {
        algebra: &ring.algebra,
        vertices: (0..g.vertex_count())
            .map(|v| ring.vertex(v))
            .collect::<Result<_>>()?,
        edges: (0..g.edge_count())
            .map(|e| ring.edge(e))
            .collect::<Result<_>>()?,
        ghosts: (0..g.edge_count())
            .map(|e| ring.ghost(e))
            .collect::<Result<_>>()?,
    })
}

fn generated_dim(a: &StructureAlgebra, gens: &[Vec<Scalar>]) -> Result<usize> {
    let mut span = EchelonBuilder::new(a.field(), a.dim());
    for x in gens {
        span.insert(x)?;
    }
    loop {
        let basis = span.clone().finish().basis().to_vec();
        let mut grew = false;
        for x in &basis {
            for y in gens {
                grew |= span.insert(&a.multiply(x, y)?)?;
            }
        }
        if !grew {
            return Ok(span.dim());
        }
    }
}

/// Builds both models and checks `φ`: relations (1)–(4) on the images,
/// equal dimensions, generation, and that `μν* ↦ φ(μ)φ(ν)*` is an algebra
/// isomorphism from the path-pair model.
pub fn phi_isomorphism_check(graph: &DirectedGraph, field: FieldSpec) -> Result<PhiReport> {
    let ring = LeavittSkewRing::build(graph, field)?;
    let oracle = PathPairAlgebra::build(graph, field)?;
    let images = phi_images(&ring)?;
    let (relations_checked, first_failure) = images.check_relations(graph)?;
    let mut gens = images.vertices.clone();
    gens.extend(images.edges.iter().cloned());
    gens.extend(images.ghosts.iter().cloned());
    let generates = generated_dim(&ring.algebra, &gens)? == ring.dim();

    let cols = oracle
        .pairs
        .iter()
        .map(|(mu, nu)| {
            let l = images.path(mu)?;
            let r = images.ghost_path(graph, nu)?;
            ring.algebra.multiply(&l, &r)
        })
        .collect::<Result<Vec<_>>>()?;
    let bijective = cols.len() == ring.dim()
        && (cols.is_empty()
            || Matrix::from_columns(field, ring.dim(), &cols)?.rank() == ring.dim());
    let mut multiplicative = true;
    'outer: for i in 0..cols.len() {
        for j in 0..cols.len() {
            let prod = oracle.algebra.basis_product_dense(i, j);
            let lhs = vector::combine(field, ring.dim(), &prod, &cols);
            if lhs != ring.algebra.multiply(&cols[i], &cols[j])? {
                multiplicative = false;
                break 'outer;
            }
        }
    }
    Ok(PhiReport {
        skew_dim: ring.dim(),
        oracle_dim: oracle.algebra.dim(),
        relations_checked,
        first_failure,
        generates,
        basis_map_bijective: bijective,
        basis_map_multiplicative: multiplicative,
    })
}

/// Algebra-side facts for an acyclic graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeavittSummary {
    pub dim: usize,
    pub unital: bool,
    pub semisimple: bool,
    pub radical_dim: usize,
    /// Sorted Wedderburn block dimensions.
    pub blocks: Vec<usize>,
    /// Sorted `n_v²` over sinks `v`, `n_v` the number of paths into `v`.
    pub expected_blocks: Vec<usize>,
    pub matrix_sizes: Vec<usize>,
}

impl LeavittSummary {
    pub fn blocks_match(&self) -> bool {
        self.blocks == self.expected_blocks
            && self.dim == self.expected_blocks.iter().sum::<usize>()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeavittCharacterization {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub sinks: Vec<Vertex>,
    pub cycles: Vec<Vec<Edge>>,
    pub acyclic: bool,
    pub hereditary_saturated: Option<Vec<Vec<Vertex>>>,
    pub algebra: Option<LeavittSummary>,
    pub verdict: String,
}

impl LeavittCharacterization {
    /// Only `∅` and `E⁰` are hereditary and saturated.
    pub fn lattice_trivial(&self) -> Option<bool> {
        let hs = self.hereditary_saturated.as_ref()?;
        let full: Vec<Vertex> = (0..self.vertex_count).collect();
        Some(hs.iter().all(|h| h.is_empty() || *h == full))
    }

    /// The assertions that apply: blocks match path counts, unital and
    /// semisimple, and a single block under a trivial lattice.
    pub fn consistent(&self) -> bool {
        match &self.algebra {
            None => !self.acyclic,
            Some(s) => {
                s.unital
                    && s.semisimple
                    && s.blocks_match()
                    && (self.lattice_trivial() != Some(true) || s.blocks.len() == 1)
            }
        }
    }
}

pub const NOT_ARTINIAN: &str = "not artinian (finite and acyclic required)";

/// Cyclic graphs are classified without building anything; acyclic graphs
/// get the algebra, its radical and Wedderburn blocks.
pub fn lpa_characterization(
    graph: &DirectedGraph,
    field: FieldSpec,
) -> Result<LeavittCharacterization> {
    let cycles = graph.cycles();
    let acyclic = graph.is_acyclic();
    let hereditary_saturated = graph.hereditary_saturated_subsets().ok();
    let mut out = LeavittCharacterization {
        vertex_count: graph.vertex_count(),
        edge_count: graph.edge_count(),
        sinks: graph.sinks(),
        cycles,
        acyclic,
        hereditary_saturated,
        algebra: None,
        verdict: NOT_ARTINIAN.into(),
    };
    if !acyclic {
        return Ok(out);
    }
    let ring = LeavittSkewRing::build(graph, field)?;
    let a = &ring.algebra;
    let rad = a.jacobson_radical()?;
    let unital = a.unit().is_some();
    let semisimple = unital && rad.is_zero();
    let blocks = if semisimple {
        a.wedderburn_blocks()?.block_dims()
    } else {
        Vec::new()
    };
    let mut sizes: Vec<usize> = graph
        .sink_path_counts()?
        .into_iter()
        .map(|(_, n)| n)
        .collect();
    sizes.sort_unstable();
    let mut expected: Vec<usize> = sizes.iter().map(|n| n * n).collect();
    expected.sort_unstable();
    let summary = LeavittSummary {
        dim: a.dim(),
        unital,
        semisimple,
        radical_dim: rad.dim(),
        blocks,
        expected_blocks: expected,
        matrix_sizes: sizes.clone(),
    };
    out.verdict = if semisimple {
        let parts: Vec<String> = sizes.iter().map(|n| format!("M_{n}(K)")).collect();
        format!("unital and semisimple: {}", parts.join(" ⊕ "))
    } else {
        "acyclic but not semisimple".into()
    };
    out.algebra = Some(summary);
    Ok(out)
}

#[cfg(test)]
mod tests;
