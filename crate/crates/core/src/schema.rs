//! JSON documents for groupoids, algebras, partial actions, graphs and
//! analysis reports. Coefficients are written as strings (`"p/q"` over ℚ,
//! residues over 𝔽_p); integers are accepted on input.

use serde::{Deserialize, Serialize};

use crate::algebra::{AnalysisReport, Semisimplicity, StructureAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{vector, FieldSpec, Matrix, Scalar, Subspace};
use crate::groupoid::{FiniteGroupoid, MorphismSpec};
use crate::leavitt::{DirectedGraph, EdgeSpec};
use crate::paction::PartialAction;

/// Parses a document, reporting the line and column of schema mismatches.
pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Text(String),
    Integer(i64),
}

impl Coefficient {
    pub fn parse(&self, field: FieldSpec) -> Result<Scalar> {
        match self {
            Coefficient::Text(s) => field.parse(s),
            Coefficient::Integer(n) => Ok(field.from_i64(*n)),
        }
    }
}

impl From<&Scalar> for Coefficient {
    fn from(s: &Scalar) -> Self {
        Coefficient::Text(s.to_string())
    }
}

fn parse_vector(field: FieldSpec, n: usize, v: &[Coefficient]) -> Result<Vec<Scalar>> {
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    v.iter().map(|c| c.parse(field)).collect()
}

fn emit_vector(v: &[Scalar]) -> Vec<Coefficient> {
    v.iter().map(Coefficient::from).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDoc {
    #[serde(rename = "char")]
    pub characteristic: u32,
}

impl FieldDoc {
    pub fn field(&self) -> Result<FieldSpec> {
        FieldSpec::new(self.characteristic)
    }
}

impl From<FieldSpec> for FieldDoc {
    fn from(f: FieldSpec) -> Self {
        FieldDoc {
            characteristic: f.characteristic(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDoc {
    pub id: String,
    pub dom: String,
    pub cod: String,
    pub inv: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidDoc {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    #[serde(default)]
    pub compose: Vec<(String, String, String)>,
}

impl GroupoidDoc {
    /// The groupoid without checking the axioms; see [`FiniteGroupoid::validate`].
    pub fn to_unchecked(&self) -> Result<FiniteGroupoid> {
        FiniteGroupoid::from_parts(
            self.objects.clone(),
            self.morphisms
                .iter()
                .map(|m| MorphismSpec {
                    id: m.id.clone(),
                    dom: m.dom.clone(),
                    cod: m.cod.clone(),
                    inv: m.inv.clone(),
                })
                .collect(),
            self.compose.clone(),
        )
    }

    pub fn to_groupoid(&self) -> Result<FiniteGroupoid> {
        let g = self.to_unchecked()?;
        let v = g.validate();
        if v.is_empty() {
            Ok(g)
        } else {
            Err(Error::InvalidGroupoid(
                v.iter().map(ToString::to_string).collect(),
            ))
        }
    }
}

impl From<&FiniteGroupoid> for GroupoidDoc {
    fn from(g: &FiniteGroupoid) -> Self {
        let (objects, morphisms, compose) = g.to_parts();
        GroupoidDoc {
            objects,
            morphisms: morphisms
                .into_iter()
                .map(|m| MorphismDoc {
                    id: m.id,
                    dom: m.dom,
                    cod: m.cod,
                    inv: m.inv,
                })
                .collect(),
            compose,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub field: FieldDoc,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    /// `(i, j, coordinates of bᵢbⱼ)`; unlisted products are zero.
    #[serde(default)]
    pub table: Vec<(usize, usize, Vec<Coefficient>)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<Coefficient>>,
}

impl AlgebraDoc {
    pub fn to_algebra(&self) -> Result<StructureAlgebra> {
        let f = self.field.field()?;
        let n = self.dim;
        let mut entries = Vec::new();
        for (i, j, v) in &self.table {
            if *i >= n || *j >= n {
                return Err(Error::Parse(format!("table entry ({i}, {j}) out of range")));
            }
            entries.push((*i, *j, parse_vector(f, n, v)?));
        }
        let mut a = StructureAlgebra::from_entries(f, n, entries)?;
        if let Some(b) = &self.basis {
            a = a.with_labels(b.clone())?;
        }
        Ok(match &self.unit {
            Some(u) => a.with_unit(parse_vector(f, n, u)?)?,
            None => a.detect_unit(),
        })
    }
}

impl From<&StructureAlgebra> for AlgebraDoc {
    fn from(a: &StructureAlgebra) -> Self {
        let default: Vec<String> = (0..a.dim()).map(|i| format!("b{i}")).collect();
        AlgebraDoc {
            field: a.field().into(),
            dim: a.dim(),
            basis: (a.labels() != default.as_slice()).then(|| a.labels().to_vec()),
            table: a
                .nonzero_products()
                .into_iter()
                .map(|(i, j, v)| (i, j, emit_vector(&v)))
                .collect(),
            unit: a.unit().map(emit_vector),
        }
    }
}

/// Either a path to another document or the document itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Source<T> {
    Path(String),
    Inline(T),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDoc {
    pub object: String,
    pub basis: Vec<Vec<Coefficient>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapDoc {
    pub morphism: String,
    /// Basis of `R_g`; defaults to the component at the codomain.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<Vec<Vec<Coefficient>>>,
    /// Rows of an ambient `n × n` matrix whose restriction to `R_{g⁻¹}` is `α_g`.
    pub matrix: Vec<Vec<Coefficient>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionDoc {
    pub groupoid: Source<GroupoidDoc>,
    pub algebra: Source<AlgebraDoc>,
    pub components: Vec<ComponentDoc>,
    pub maps: Vec<MapDoc>,
}

fn parse_span(f: FieldSpec, n: usize, vs: &[Vec<Coefficient>]) -> Result<Subspace> {
    let vs = vs
        .iter()
        .map(|v| parse_vector(f, n, v))
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(f, n, vs)
}

impl ActionDoc {
    /// Builds the action once the referenced documents are resolved.
    pub fn to_action(
        &self,
        groupoid: FiniteGroupoid,
        ambient: StructureAlgebra,
    ) -> Result<PartialAction> {
        let (f, n) = (ambient.field(), ambient.dim());
        let mut components = vec![None; groupoid.object_count()];
        for c in &self.components {
            let e = groupoid.object_index(&c.object)?;
            if components[e].is_some() {
                return Err(Error::Parse(format!("object `{}` listed twice", c.object)));
            }
            components[e] = Some(parse_span(f, n, &c.basis)?);
        }
        let components = components
            .into_iter()
            .enumerate()
            .map(|(e, c)| {
                c.ok_or_else(|| {
                    Error::Parse(format!(
                        "no component for object `{}`",
                        groupoid.object_id(e)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut domains = vec![None; groupoid.morphism_count()];
        let mut maps = vec![None; groupoid.morphism_count()];
        for m in &self.maps {
            let g = groupoid.morphism_index(&m.morphism)?;
            if maps[g].is_some() {
                return Err(Error::Parse(format!(
                    "morphism `{}` listed twice",
                    m.morphism
                )));
            }
            domains[g] = Some(match &m.domain {
                Some(d) => parse_span(f, n, d)?,
                None => components[groupoid.cod(g)].clone(),
            });
            let rows = m
                .matrix
                .iter()
                .map(|r| parse_vector(f, n, r))
                .collect::<Result<Vec<_>>>()?;
            if rows.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: rows.len(),
                });
            }
            maps[g] = Some(Matrix::from_rows(f, n, rows)?);
        }
        let missing =
            |g: usize| Error::Parse(format!("no map for morphism `{}`", groupoid.morphism_id(g)));
        let domains = domains
            .into_iter()
            .enumerate()
            .map(|(g, d)| d.ok_or_else(|| missing(g)))
            .collect::<Result<Vec<_>>>()?;
        let maps = maps
            .into_iter()
            .enumerate()
            .map(|(g, d)| d.ok_or_else(|| missing(g)))
            .collect::<Result<Vec<_>>>()?;
        PartialAction::from_ambient_maps(groupoid, ambient, components, domains, maps)
    }

    /// Inline document for an action. Each `α_g` is extended by zero on the
    /// unit vectors at the free columns of `R_{g⁻¹}`.
    pub fn from_action(pa: &PartialAction) -> Result<Self> {
        let g = pa.groupoid();
        let a = pa.ambient();
        let (f, n) = (a.field(), a.dim());
        let emit_basis = |s: &Subspace| s.basis().iter().map(|v| emit_vector(v)).collect();
        let components = (0..g.object_count())
            .map(|e| ComponentDoc {
                object: g.object_id(e).to_string(),
                basis: emit_basis(pa.component(e)),
            })
            .collect();
        let mut maps = Vec::new();
        for m in 0..g.morphism_count() {
            let src = pa.domain(g.inverse(m));
            let mut inputs: Vec<Vec<Scalar>> = src.basis().to_vec();
            let mut outputs = Vec::new();
            for b in src.basis() {
                outputs.push(pa.apply(m, b)?);
            }
            for c in src.free_columns() {
                inputs.push(vector::unit(f, n, c));
                outputs.push(vector::zeros(f, n));
            }
            let matrix = if n == 0 {
                Matrix::zeros(f, 0, 0)
            } else {
                let b = Matrix::from_columns(f, n, &inputs)?;
                let inv = b.inverse().expect("basis plus free columns is invertible");
                Matrix::from_columns(f, n, &outputs)?.mul(&inv)?
            };
            let domain = pa.domain(m);
            maps.push(MapDoc {
                morphism: g.morphism_id(m).to_string(),
                domain: (domain != pa.component(g.cod(m))).then(|| emit_basis(domain)),
                matrix: matrix.row_vecs().iter().map(|r| emit_vector(r)).collect(),
            });
        }
        Ok(ActionDoc {
            groupoid: Source::Inline(g.into()),
            algebra: Source::Inline(a.into()),
            components,
            maps,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub id: String,
    pub s: String,
    pub r: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<EdgeDoc>,
}

impl GraphDoc {
    pub fn to_graph(&self) -> Result<DirectedGraph> {
        DirectedGraph::new(
            self.vertices.clone(),
            self.edges
                .iter()
                .map(|e| EdgeSpec {
                    id: e.id.clone(),
                    source: e.s.clone(),
                    range: e.r.clone(),
                })
                .collect(),
        )
    }
}

impl From<&DirectedGraph> for GraphDoc {
    fn from(g: &DirectedGraph) -> Self {
        GraphDoc {
            vertices: g.vertices().to_vec(),
            edges: (0..g.edge_count())
                .map(|e| EdgeDoc {
                    id: g.edge_id(e).to_string(),
                    s: g.vertex_id(g.source(e)).to_string(),
                    r: g.vertex_id(g.range(e)).to_string(),
                })
                .collect(),
        }
    }
}

/// `true`, `false` or `"undecided"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SemisimpleDoc {
    Known(bool),
    Other(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisDoc {
    pub dim: usize,
    pub unital: bool,
    pub associative: bool,
    pub alternative: bool,
    pub center_dim: usize,
    pub radical_dim: Option<usize>,
    pub semisimple: SemisimpleDoc,
    pub blocks: Option<Vec<usize>>,
    pub grading_ok: Option<bool>,
}

impl From<&AnalysisReport> for AnalysisDoc {
    fn from(r: &AnalysisReport) -> Self {
        AnalysisDoc {
            dim: r.dim,
            unital: r.unital,
            associative: r.associative,
            alternative: r.alternative,
            center_dim: r.center_dim,
            radical_dim: r.radical_dim,
            semisimple: match r.semisimple {
                Semisimplicity::Semisimple => SemisimpleDoc::Known(true),
                Semisimplicity::NotSemisimple => SemisimpleDoc::Known(false),
                Semisimplicity::Undecided => SemisimpleDoc::Other("undecided".into()),
            },
            blocks: r.blocks.clone(),
            grading_ok: r.grading_ok,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_trip<T>(doc: &T)
    where
        T: Serialize + for<'de> Deserialize<'de> + PartialEq + std::fmt::Debug,
    {
        let text = to_json(doc);
        let back: T = from_json(&text).unwrap();
        assert_eq!(&back, doc);
        assert_eq!(to_json(&back), text);
    }

    #[test]
    fn algebra_documents() {
        let q = FieldSpec::rationals();
        let m = StructureAlgebra::matrix_algebra(q, 2);
        let doc = AlgebraDoc::from(&m);
        round_trip(&doc);
        let back = doc.to_algebra().unwrap();
        assert_eq!(back.nonzero_products(), m.nonzero_products());
        assert_eq!(back.unit(), m.unit());
        assert_eq!(AlgebraDoc::from(&back), doc);
    }

    #[test]
    fn coefficients_accept_integers_and_fractions() {
        let text = r#"{"field":{"char":0},"dim":1,"table":[[0,0,["1/2"]]]}"#;
        let a = from_json::<AlgebraDoc>(text).unwrap().to_algebra().unwrap();
        let half = FieldSpec::rationals().from_ratio(1, 2).unwrap();
        assert_eq!(a.basis_product_dense(0, 0), vec![half]);
        let text = r#"{"field":{"char":3},"dim":1,"table":[[0,0,[4]]],"unit":["1"]}"#;
        let a = from_json::<AlgebraDoc>(text).unwrap().to_algebra().unwrap();
        assert!(a.basis_product_dense(0, 0)[0].is_one());
        assert_eq!(
            AlgebraDoc::from(&a).table[0].2,
            [Coefficient::Text("1".into())]
        );
    }

    #[test]
    fn malformed_documents() {
        assert!(matches!(from_json::<AlgebraDoc>("{"), Err(Error::Parse(_))));
        let err = from_json::<GraphDoc>(r#"{"vertices":[1]}"#).unwrap_err();
        assert!(err.to_string().contains("line 1"));
        let bad_field = r#"{"field":{"char":4},"dim":0}"#;
        let doc: AlgebraDoc = from_json(bad_field).unwrap();
        assert!(matches!(doc.to_algebra(), Err(Error::InvalidField(_))));
        let out_of_range = r#"{"field":{"char":0},"dim":1,"table":[[0,1,["1"]]]}"#;
        let doc: AlgebraDoc = from_json(out_of_range).unwrap();
        assert!(doc.to_algebra().is_err());
    }

    #[test]
    fn groupoid_documents() {
        let g = FiniteGroupoid::pair_groupoid(2).unwrap();
        let doc = GroupoidDoc::from(&g);
        round_trip(&doc);
        assert_eq!(doc.to_groupoid().unwrap(), g);
    }

    #[test]
    fn graph_documents() {
        let text = r#"{"vertices":["v","w"],"edges":[{"id":"f","s":"v","r":"w"}]}"#;
        let doc: GraphDoc = from_json(text).unwrap();
        round_trip(&doc);
        let g = doc.to_graph().unwrap();
        assert_eq!(GraphDoc::from(&g), doc);
        let bad: GraphDoc =
            from_json(r#"{"vertices":["v"],"edges":[{"id":"f","s":"v","r":"x"}]}"#).unwrap();
        assert!(matches!(bad.to_graph(), Err(Error::Lookup { .. })));
    }

    #[test]
    fn action_documents() {
        let q = FieldSpec::rationals();
        let g = FiniteGroupoid::cyclic(2).unwrap();
        let a = StructureAlgebra::direct_product(&[
            &StructureAlgebra::base_field(q),
            &StructureAlgebra::base_field(q),
        ])
        .unwrap();
        let swap = Matrix::from_i64_rows(q, &[&[0, 1], &[1, 0]]);
        let pa = PartialAction::global(
            g.clone(),
            a.clone(),
            vec![Subspace::full(q, 2)],
            vec![Matrix::identity(q, 2), swap],
        )
        .unwrap();
        let doc = ActionDoc::from_action(&pa).unwrap();
        round_trip(&doc);
        let back = doc.to_action(g, a).unwrap();
        assert_eq!(back, pa);
        assert_eq!(ActionDoc::from_action(&back).unwrap(), doc);
    }

    #[test]
    fn analysis_documents() {
        let q = FieldSpec::rationals();
        let r = StructureAlgebra::truncated_polynomial(q, 2)
            .analyze()
            .unwrap();
        let doc = AnalysisDoc::from(&r);
        assert_eq!(doc.semisimple, SemisimpleDoc::Known(false));
        assert_eq!(doc.radical_dim, Some(1));
        round_trip(&doc);
        let oct = StructureAlgebra::cayley_dickson(q, 3)
            .unwrap()
            .analyze()
            .unwrap();
        let text = to_json(&AnalysisDoc::from(&oct));
        assert!(text.contains("\"semisimple\": \"undecided\""));
    }
}
