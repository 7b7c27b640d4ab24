//! Partial skew groupoid rings and the algebras built from them.

mod maschke;
mod partial_group;
mod quotient;

pub use maschke::{
    maschke_check, maschke_split, r_projection, verify_split, GradedModule, ImplicationStatus,
    MaschkeReport, ObjectOrder, ParkCriterion, SplitCheck,
};
pub use partial_group::{build_partial_group_algebra, SemigroupTable};

use crate::algebra::{Grading, StructureAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{vector, Matrix, Scalar, Subspace};
use crate::groupoid::{FiniteGroupoid, Mor};
use crate::paction::PartialAction;

/// `R ⋆_α G` with basis `{(g, v)}`: morphisms in index order, then the RREF
/// basis of `R_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewRing {
    pub algebra: StructureAlgebra,
    pub action: PartialAction,
    offsets: Vec<usize>,
}

impl SkewRing {
    /// `r δ_g` for `r ∈ R_g`, as a vector in the skew ring.
    pub fn element(&self, g: Mor, r: &[Scalar]) -> Result<Vec<Scalar>> {
        let c = self.action.domain(g).coordinates(r)?.ok_or_else(|| {
            Error::Precondition(format!(
                "coefficient lies outside R_{}",
                self.action.groupoid().morphism_id(g)
            ))
        })?;
        let mut out = vector::zeros(self.algebra.field(), self.algebra.dim());
        for (i, x) in c.into_iter().enumerate() {
            out[self.offsets[g] + i] = x;
        }
        Ok(out)
    }

    /// `x = Σ_e x_e ↦ Σ_e x_e δ_e`, the embedding of `R`.
    pub fn embed_coefficient(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        let pa = &self.action;
        let g = pa.groupoid();
        let all: Vec<Vec<Scalar>> = (0..g.object_count())
            .flat_map(|e| pa.component(e).basis().to_vec())
            .collect();
        let a = pa.ambient();
        let frame = crate::exactlin::Frame::new(a.field(), a.dim(), all)?;
        let c = frame.coordinates(x)?.ok_or_else(|| {
            Error::Precondition("components do not span the coefficient ring".into())
        })?;
        let mut out = vector::zeros(a.field(), self.algebra.dim());
        let mut k = 0;
        for e in 0..g.object_count() {
            let i = g.identity(e);
            let xe = pa
                .component(e)
                .from_coordinates(&c[k..k + pa.component(e).dim()])?;
            k += pa.component(e).dim();
            out = vector::add(&out, &self.element(i, &xe)?);
        }
        Ok(out)
    }

    /// `Σ_e 1_{R_e} δ_e` when every component is unital.
    pub fn unit_formula(&self) -> Option<Vec<Scalar>> {
        let pa = &self.action;
        let g = pa.groupoid();
        let mut out = vector::zeros(self.algebra.field(), self.algebra.dim());
        for e in 0..g.object_count() {
            let u = pa.component_unit(e)?;
            out = vector::add(&out, &self.element(g.identity(e), &u).ok()?);
        }
        Some(out)
    }

    /// Index range of the basis vectors of degree `g`.
    pub fn degree_range(&self, g: Mor) -> std::ops::Range<usize> {
        self.offsets[g]..self.offsets[g] + self.action.domain(g).dim()
    }
}

/// Builds `R ⋆_α G` with `(r δ_g)(r' δ_h) = α_g(α_{g⁻¹}(r)·r') δ_{gh}` when
/// `d(g) = c(h)` and `0` otherwise.
pub fn build_skew_groupoid_ring(pa: &PartialAction) -> Result<SkewRing> {
    let violations = pa.validate();
    if !violations.is_empty() {
        return Err(Error::InvalidAction(
            violations.iter().map(ToString::to_string).collect(),
        ));
    }
    let g = pa.groupoid();
    let a = pa.ambient();
    let f = a.field();
    let mut offsets = Vec::new();
    let mut owner = Vec::new();
    let mut labels = Vec::new();
    let mut dim = 0;
    for m in 0..g.morphism_count() {
        offsets.push(dim);
        let d = pa.domain(m).dim();
        for i in 0..d {
            owner.push((m, i));
            labels.push(format!("r{i}δ[{}]", g.morphism_id(m)));
        }
        dim += d;
    }
    let mut failure = None;
    let algebra = StructureAlgebra::from_fn(f, dim, |p, q| {
        let mut out = vector::zeros(f, dim);
        let ((gm, i), (h, j)) = (owner[p], owner[q]);
        let Some(gh) = g.compose(gm, h) else {
            return out;
        };
        let r = &pa.domain(gm).basis()[i];
        let s = &pa.domain(h).basis()[j];
        let back = pa.apply(g.inverse(gm), r).expect("r ∈ R_g");
        let prod = a.mul(&back, s);
        let value = match pa.apply(gm, &prod) {
            Ok(v) => v,
            Err(_) => {
                failure = Some((gm, h));
                return out;
            }
        };
        match pa.domain(gh).coordinates(&value).expect("length") {
            Some(c) => {
                for (k, x) in c.into_iter().enumerate() {
                    out[offsets[gh] + k] = x;
                }
            }
            None => failure = Some((gm, h)),
        }
        out
    })?;
    if let Some((gm, h)) = failure {
        return Err(Error::Precondition(format!(
            "product of degrees {} and {} leaves R_{}",
            g.morphism_id(gm),
            g.morphism_id(h),
            g.morphism_id(g.compose(gm, h).expect("composable"))
        )));
    }
    let degrees = owner.iter().map(|&(m, _)| m).collect();
    let algebra = algebra.with_labels(labels)?.with_grading(Grading {
        groupoid: g.clone(),
        degrees,
    })?;
    let mut ring = SkewRing {
        algebra,
        action: pa.clone(),
        offsets,
    };
    ring.algebra = match ring.unit_formula() {
        Some(u) => match ring.algebra.clone().with_unit(u) {
            Ok(a) => a,
            Err(_) => ring.algebra.clone().detect_unit(),
        },
        None => ring.algebra.clone().detect_unit(),
    };
    Ok(ring)
}

/// The global action on `⊕_e T_e` behind the groupoid ring: object `e`
/// carries a copy of the coefficient ring of its connected component and
/// every `α_g` is the identity copy `T_{d(g)} → T_{c(g)}`.
pub fn groupoid_ring_action(
    g: &FiniteGroupoid,
    coefficients: &[StructureAlgebra],
) -> Result<PartialAction> {
    let comps = g.connected_components();
    if coefficients.len() != comps.len() {
        return Err(Error::DimensionMismatch {
            expected: comps.len(),
            found: coefficients.len(),
        });
    }
    let field = coefficients[0].field();
    for c in coefficients {
        if c.field() != field {
            return Err(Error::FieldMismatch(
                field.to_string(),
                c.field().to_string(),
            ));
        }
        if c.unit().is_none() && c.find_unit().is_none() {
            return Err(Error::Precondition(
                "groupoid ring coefficients must be unital".into(),
            ));
        }
    }
    let comp_of = g.component_of();
    let per_object: Vec<&StructureAlgebra> = (0..g.object_count())
        .map(|e| &coefficients[comp_of[e]])
        .collect();
    let ambient = StructureAlgebra::direct_product(&per_object)?;
    let n = ambient.dim();
    let mut offsets = Vec::new();
    let mut off = 0;
    for a in &per_object {
        offsets.push(off);
        off += a.dim();
    }
    let components = (0..g.object_count())
        .map(|e| {
            let vs = (0..per_object[e].dim())
                .map(|i| vector::unit(field, n, offsets[e] + i))
                .collect();
            Subspace::span(field, n, vs)
        })
        .collect::<Result<Vec<_>>>()?;
    let maps = (0..g.morphism_count())
        .map(|m| {
            let (d, c) = (g.dom(m), g.cod(m));
            let mut mat = Matrix::zeros(field, n, n);
            for i in 0..per_object[d].dim() {
                mat[(offsets[c] + i, offsets[d] + i)] = field.one();
            }
            mat
        })
        .collect();
    PartialAction::global(g.clone(), ambient, components, maps)
}

/// Groupoid ring `R[G]` with one coefficient ring per connected component,
/// in the order of [`FiniteGroupoid::connected_components`].
pub fn build_groupoid_ring(
    g: &FiniteGroupoid,
    coefficients: &[StructureAlgebra],
) -> Result<SkewRing> {
    build_skew_groupoid_ring(&groupoid_ring_action(g, coefficients)?)
}

/// Group algebra `K[G]` of a one-object groupoid.
pub fn group_algebra(g: &FiniteGroupoid, field: crate::exactlin::FieldSpec) -> Result<SkewRing> {
    if g.object_count() != 1 {
        return Err(Error::NotAGroup(format!("{} objects", g.object_count())));
    }
    build_groupoid_ring(g, &[StructureAlgebra::base_field(field)])
}

/// Outcome of matching a pair-groupoid ring against `M_n(T)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixUnits {
    /// `units[i][j][k]` is the basis vector standing for `E_ij ⊗ b_k`.
    pub units: Option<Vec<Vec<Vec<Vec<Scalar>>>>>,
    /// The first failing relation, if any.
    pub counterexample: Option<String>,
    pub products_checked: usize,
}

/// Identifies a ring built from the pair groupoid on `n` objects with
/// coefficients `t` with the generalized matrix ring `M_n(T)`, checking
/// `(E_ij⊗a)(E_kl⊗b) = δ_jk E_il⊗ab` on all basis pairs.
pub fn matrix_units_isomorphism(
    a: &StructureAlgebra,
    n: usize,
    t: &StructureAlgebra,
) -> MatrixUnits {
    let fail = |msg: String| MatrixUnits {
        units: None,
        counterexample: Some(msg),
        products_checked: 0,
    };
    let Some(grading) = a.grading() else {
        return fail("algebra carries no grading".into());
    };
    let g = &grading.groupoid;
    let k = t.dim();
    if a.dim() != n * n * k {
        return fail(format!("dimension {} ≠ {}·{}²", a.dim(), k, n));
    }
    let mut units = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let Ok(m) = g.morphism_index(&format!("({i},{j})")) else {
                return fail(format!("no morphism ({i},{j})"));
            };
            let idx: Vec<usize> = (0..a.dim()).filter(|&p| grading.degrees[p] == m).collect();
            if idx.len() != k {
                return fail(format!("degree ({i},{j}) has {} basis vectors", idx.len()));
            }
            units[i][j] = idx.into_iter().map(|p| a.basis_vector(p)).collect();
        }
    }
    let lift = |i: usize, l: usize, v: &[Scalar]| -> Vec<Scalar> {
        vector::combine(a.field(), a.dim(), v, &units[i][l])
    };
    let mut checked = 0;
    for i in 0..n {
        for j in 0..n {
            for p in 0..k {
                for kk in 0..n {
                    for l in 0..n {
                        for q in 0..k {
                            let lhs = a.mul(&units[i][j][p], &units[kk][l][q]);
                            let rhs = if j == kk {
                                lift(i, l, &t.basis_product_dense(p, q))
                            } else {
                                vector::zeros(a.field(), a.dim())
                            };
                            checked += 1;
                            if lhs != rhs {
                                return MatrixUnits {
                                    units: None,
                                    counterexample: Some(format!("(E{i}{j}⊗b{p})(E{kk}{l}⊗b{q})")),
                                    products_checked: checked,
                                };
                            }
                        }
                    }
                }
            }
        }
    }
    MatrixUnits {
        units: Some(units),
        counterexample: None,
        products_checked: checked,
    }
}
