use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use grpd_core::algebra::StructureAlgebra;
use grpd_core::groupoid::FiniteGroupoid;
use grpd_core::leavitt::{lpa_characterization, phi_isomorphism_check, DirectedGraph};
use grpd_core::paction::PartialAction;
use grpd_core::schema::{
    from_json, to_json, ActionDoc, AlgebraDoc, AnalysisDoc, GraphDoc, GroupoidDoc, Source,
};
use grpd_core::skewring::{
    build_groupoid_ring, build_partial_group_algebra, build_skew_groupoid_ring, maschke_check,
    matrix_units_isomorphism,
};
use grpd_core::FieldSpec;
use serde::de::DeserializeOwned;
use serde_json::Value;

use crate::report::Report;

pub type Outcome = anyhow::Result<Report>;

fn read<T: DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    from_json(&text).with_context(|| format!("in {}", path.display()))
}

fn resolve<T: DeserializeOwned + Clone>(src: &Source<T>, base: &Path) -> anyhow::Result<T> {
    match src {
        Source::Inline(doc) => Ok(doc.clone()),
        Source::Path(p) => read(&base.join(p)),
    }
}

fn load_algebra(path: &Path) -> anyhow::Result<StructureAlgebra> {
    let doc: AlgebraDoc = read(path)?;
    doc.to_algebra()
        .with_context(|| format!("in {}", path.display()))
}

fn load_groupoid(path: &Path) -> anyhow::Result<FiniteGroupoid> {
    let doc: GroupoidDoc = read(path)?;
    Ok(doc.to_groupoid()?)
}

/// Reads an action document and the groupoid and algebra it references,
/// without checking the action axioms.
pub fn load_action(path: &Path) -> anyhow::Result<PartialAction> {
    let doc: ActionDoc = read(path)?;
    let base = path.parent().unwrap_or(Path::new("."));
    let g = resolve(&doc.groupoid, base)?.to_groupoid()?;
    let a = resolve(&doc.algebra, base)?.to_algebra()?;
    doc.to_action(g, a)
        .with_context(|| format!("in {}", path.display()))
}

fn load_graph(path: &Path) -> anyhow::Result<DirectedGraph> {
    let doc: GraphDoc = read(path)?;
    Ok(doc.to_graph()?)
}

fn dump(path: Option<&PathBuf>, text: String) -> anyhow::Result<()> {
    if let Some(p) = path {
        fs::write(p, text).with_context(|| format!("cannot write {}", p.display()))?;
    }
    Ok(())
}

fn analysis_fields(r: &mut Report, a: &StructureAlgebra) -> anyhow::Result<()> {
    let doc = AnalysisDoc::from(&a.analyze()?);
    if let Value::Object(map) = serde_json::to_value(&doc)? {
        for key in [
            "dim",
            "unital",
            "associative",
            "alternative",
            "center_dim",
            "radical_dim",
            "semisimple",
            "blocks",
            "grading_ok",
        ] {
            r.field(key, map[key].clone());
        }
    }
    Ok(())
}

fn ids(g: &FiniteGroupoid, ms: impl IntoIterator<Item = usize>) -> Vec<String> {
    ms.into_iter()
        .map(|m| g.morphism_id(m).to_string())
        .collect()
}

pub fn check_groupoid(path: &Path) -> Outcome {
    let doc: GroupoidDoc = read(path)?;
    let g = doc.to_unchecked()?;
    let mut r = Report::new();
    r.field("objects", g.object_count())
        .field("morphisms", g.morphism_count());
    let violations = g.validate();
    if violations.is_empty() {
        let fm = g.finite_mor_report();
        r.field("components", g.connected_components().len());
        let orders: Vec<String> = fm
            .isotropy_orders
            .iter()
            .map(|(e, n)| format!("{e}:{n}"))
            .collect();
        r.field("isotropy_orders", orders)
            .field("hom_sets_match_isotropy", fm.counting_identity_holds());
    }
    for v in violations {
        r.violation(v);
    }
    Ok(r)
}

pub fn check_action(path: &Path) -> Outcome {
    let pa = load_action(path)?;
    let g = pa.groupoid();
    let mut r = Report::new();
    r.field("objects", g.object_count())
        .field("morphisms", g.morphism_count())
        .field("ambient_dim", pa.ambient().dim());
    let violations = pa.validate();
    if violations.is_empty() {
        let ft = pa.finite_type();
        r.field("unital", pa.is_unital())
            .field("global", pa.is_global())
            .field("support", ids(g, pa.support()))
            .field("finite_type", ft.holds());
        let fixed = pa.fixed_ring()?;
        r.field("fixed_ring_dim", fixed.dim());
    }
    for v in violations {
        r.violation(v);
    }
    Ok(r)
}

pub fn build_skew(path: &Path, dump_to: Option<&PathBuf>) -> Outcome {
    let pa = load_action(path)?;
    let ring = build_skew_groupoid_ring(&pa)?;
    let mut r = Report::new();
    analysis_fields(&mut r, &ring.algebra)?;
    dump(dump_to, to_json(&AlgebraDoc::from(&ring.algebra)))?;
    Ok(r)
}

pub fn analyze(path: &Path) -> Outcome {
    let a = load_algebra(path)?;
    let mut r = Report::new();
    analysis_fields(&mut r, &a)?;
    Ok(r)
}

pub fn groupoid_ring(
    path: &Path,
    coeffs: &[PathBuf],
    field: FieldSpec,
    dump_to: Option<&PathBuf>,
) -> Outcome {
    let g = load_groupoid(path)?;
    let n = g.connected_components().len();
    let coefficients = if coeffs.is_empty() {
        vec![StructureAlgebra::base_field(field); n]
    } else {
        coeffs
            .iter()
            .map(|p| load_algebra(p))
            .collect::<anyhow::Result<Vec<_>>>()?
    };
    if coefficients.len() != n {
        bail!(
            "{n} connected components but {} coefficient rings",
            coefficients.len()
        );
    }
    let ring = build_groupoid_ring(&g, &coefficients)?;
    let mut r = Report::new();
    r.field("components", n);
    analysis_fields(&mut r, &ring.algebra)?;
    dump(dump_to, to_json(&AlgebraDoc::from(&ring.algebra)))?;
    Ok(r)
}

pub fn matrix_ring(
    n: usize,
    coeff: Option<&PathBuf>,
    field: FieldSpec,
    dump_to: Option<&PathBuf>,
) -> Outcome {
    let t = match coeff {
        Some(p) => load_algebra(p)?,
        None => StructureAlgebra::base_field(field),
    };
    let g = FiniteGroupoid::pair_groupoid(n)?;
    let ring = build_groupoid_ring(&g, std::slice::from_ref(&t))?;
    let units = matrix_units_isomorphism(&ring.algebra, n, &t);
    let mut r = Report::new();
    r.field("n", n).field("coefficient_dim", t.dim());
    analysis_fields(&mut r, &ring.algebra)?;
    r.field("matrix_unit_products", units.products_checked);
    if let Some(c) = units.counterexample {
        r.violation(format!("matrix units: {c}"));
    }
    dump(dump_to, to_json(&AlgebraDoc::from(&ring.algebra)))?;
    Ok(r)
}

pub fn partial_group_algebra(
    path: Option<&PathBuf>,
    cyclic: Option<usize>,
    field: FieldSpec,
    dump_to: Option<&PathBuf>,
) -> Outcome {
    let g = match (path, cyclic) {
        (Some(p), None) => load_groupoid(p)?,
        (None, Some(n)) => FiniteGroupoid::cyclic(n)?,
        _ => bail!("give exactly one of a group file or --cyclic"),
    };
    let (a, table) = build_partial_group_algebra(&g, field)?;
    let mut r = Report::new();
    r.field("group_order", g.morphism_count())
        .field("semigroup_size", table.len());
    analysis_fields(&mut r, &a)?;
    dump(dump_to, to_json(&AlgebraDoc::from(&a)))?;
    Ok(r)
}

pub fn leavitt(path: &Path, field: FieldSpec, dump_to: Option<&PathBuf>) -> Outcome {
    let g = load_graph(path)?;
    let c = lpa_characterization(&g, field)?;
    let vname = |v: usize| g.vertex_id(v).to_string();
    let mut r = Report::new();
    r.field("vertices", c.vertex_count)
        .field("edges", c.edge_count)
        .field(
            "sinks",
            c.sinks.iter().map(|&v| vname(v)).collect::<Vec<_>>(),
        )
        .field("acyclic", c.acyclic);
    let cycles: Vec<String> = c
        .cycles
        .iter()
        .map(|cy| {
            cy.iter()
                .map(|&e| g.edge_id(e))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    r.field("cycles", cycles);
    if let Some(hs) = &c.hereditary_saturated {
        let sets: Vec<String> = hs
            .iter()
            .map(|h| {
                format!(
                    "{{{}}}",
                    h.iter().map(|&v| vname(v)).collect::<Vec<_>>().join(",")
                )
            })
            .collect();
        r.field("hereditary_saturated", sets);
    }
    r.field("verdict", c.verdict.clone());
    if let Some(s) = &c.algebra {
        r.field("dim", s.dim)
            .field("unital", s.unital)
            .field("semisimple", s.semisimple)
            .field("blocks", s.blocks.clone())
            .field("matrix_sizes", s.matrix_sizes.clone());
        if !c.consistent() {
            r.violation("block structure disagrees with sink path counts");
        }
        let phi = phi_isomorphism_check(&g, field)?;
        r.field("oracle_dim", phi.oracle_dim)
            .field("relations_checked", phi.relations_checked)
            .field("phi_isomorphism", phi.passed());
        if let Some(f) = phi.first_failure {
            r.violation(format!("relation {f}"));
        } else if !phi.passed() {
            r.violation("φ is not an isomorphism");
        }
        if dump_to.is_some() {
            let ring = grpd_core::leavitt::LeavittSkewRing::build(&g, field)?;
            dump(dump_to, to_json(&AlgebraDoc::from(&ring.algebra)))?;
        }
    }
    Ok(r)
}

pub fn globalize(path: &Path, dump_to: Option<&PathBuf>) -> Outcome {
    let pa = load_action(path)?;
    let glob = pa.globalize()?;
    let mut r = Report::new();
    r.field("ambient_dim", pa.ambient().dim())
        .field("globalization_dim", glob.action.ambient().dim());
    let violations = pa.verify_globalization(&glob);
    let eq = pa.finite_type_equivalence()?;
    r.field("finite_type", eq.finite_type)
        .field("globalization_unital", eq.globalization_unital)
        .field("witnesses_generate", eq.witnesses_generate)
        .field("equivalence_holds", eq.agree());
    for v in violations {
        r.violation(v);
    }
    if !eq.agree() {
        r.violation("finite-type characterizations disagree");
    }
    dump(dump_to, to_json(&ActionDoc::from_action(&glob.action)?))?;
    Ok(r)
}

pub fn maschke(path: &Path) -> Outcome {
    let pa = load_action(path)?;
    let m = maschke_check(&pa)?;
    let g = pa.groupoid();
    let mut r = Report::new();
    r.field("park_criterion", m.park_criterion.holds())
        .field("ambient_semisimple", m.ambient_semisimple);
    let orders: Vec<String> = m
        .isotropy_orders
        .iter()
        .map(|o| format!("{}:{}", g.object_id(o.object), o.order))
        .collect();
    r.field("isotropy_orders", orders)
        .field("orders_invertible", m.orders_invertible)
        .field("trace_invertible", m.trace_invertible)
        .field("skew_semisimple", m.skew_semisimple)
        .field("isotropy_rule", m.isotropy_rule.to_string())
        .field("trace_rule", m.trace_rule.to_string());
    for (name, status) in [("isotropy", m.isotropy_rule), ("trace", m.trace_rule)] {
        if status == grpd_core::skewring::ImplicationStatus::Violated {
            r.violation(format!("{name} rule violated"));
        }
    }
    Ok(r)
}
