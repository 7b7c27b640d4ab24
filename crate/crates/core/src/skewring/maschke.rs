//! Semisimplicity criteria for skew groupoid rings and the averaging
//! projection for modules over them.

use std::fmt;

use super::{build_skew_groupoid_ring, SkewRing};
use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{vector, Matrix, Scalar, Subspace};
use crate::groupoid::Obj;
use crate::paction::PartialAction;

/// Status of an implication `premises ⇒ conclusion` on one instance.
/// Converses are never claimed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ImplicationStatus {
    Confirmed,
    PremisesUnmet,
    /// Premises hold but the conclusion fails.
    Violated,
}

impl ImplicationStatus {
    fn of(premises: bool, conclusion: bool) -> Self {
        match (premises, conclusion) {
            (false, _) => ImplicationStatus::PremisesUnmet,
            (true, true) => ImplicationStatus::Confirmed,
            (true, false) => ImplicationStatus::Violated,
        }
    }
}

impl fmt::Display for ImplicationStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ImplicationStatus::Confirmed => "confirmed",
            ImplicationStatus::PremisesUnmet => "premises unmet",
            ImplicationStatus::Violated => "violated",
        })
    }
}

/// Ingredients of the artinian criterion: finitely many nonzero `R_g` and
/// an artinian coefficient ring. Both hold for every finite input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParkCriterion {
    pub finite_support: bool,
    pub artinian_coefficients: bool,
    pub statement: &'static str,
}

impl ParkCriterion {
    pub fn holds(&self) -> bool {
        self.finite_support && self.artinian_coefficients
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectOrder {
    pub object: Obj,
    pub order: usize,
    pub invertible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaschkeReport {
    pub park_criterion: ParkCriterion,
    pub ambient_semisimple: bool,
    pub isotropy_orders: Vec<ObjectOrder>,
    pub orders_invertible: bool,
    /// `tr_α(1_R)`, absent when `R` or some `R_g` lacks an identity.
    pub trace_of_unit: Option<Vec<Scalar>>,
    pub trace_invertible: bool,
    pub skew_semisimple: bool,
    /// Semisimple `R` with invertible isotropy orders ⇒ semisimple skew ring.
    pub isotropy_rule: ImplicationStatus,
    /// Semisimple `R` with invertible `tr_α(1_R)` ⇒ semisimple skew ring.
    pub trace_rule: ImplicationStatus,
}

/// Two-sided inverse of `x` in a unital algebra.
pub(crate) fn inverse_element(a: &StructureAlgebra, x: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    let Some(one) = a.unit().map(<[Scalar]>::to_vec).or_else(|| a.find_unit()) else {
        return Ok(None);
    };
    let Some(l) = a.left_multiplication(x)?.solve(&one)? else {
        return Ok(None);
    };
    Ok((a.mul(&l, x) == one).then_some(l))
}

/// Runs both semisimplicity criteria on `pa` and compares them with a
/// direct computation on the skew ring.
pub fn maschke_check(pa: &PartialAction) -> Result<MaschkeReport> {
    let a = pa.ambient();
    if !a.is_associative() {
        return Err(Error::Unsupported(
            "semisimplicity criteria need an associative coefficient ring".into(),
        ));
    }
    let ring = build_skew_groupoid_ring(pa)?;
    let g = pa.groupoid();
    let p = a.field().characteristic() as usize;
    let isotropy_orders: Vec<ObjectOrder> = (0..g.object_count())
        .map(|e| {
            let order = g.isotropy(e).len();
            ObjectOrder {
                object: e,
                order,
                invertible: p == 0 || order % p != 0,
            }
        })
        .collect();
    let orders_invertible = isotropy_orders.iter().all(|o| o.invertible);
    let ambient_semisimple = a.is_semisimple()?;
    let unit = a.unit().map(<[Scalar]>::to_vec).or_else(|| a.find_unit());
    let trace_of_unit = match unit {
        Some(u) if pa.is_unital() => Some(pa.trace_map(&u)?),
        _ => None,
    };
    let trace_invertible = match &trace_of_unit {
        Some(t) => inverse_element(a, t)?.is_some(),
        None => false,
    };
    let skew_semisimple = ring.algebra.is_semisimple()?;
    Ok(MaschkeReport {
        park_criterion: ParkCriterion {
            finite_support: true,
            artinian_coefficients: true,
            statement: "a partial skew groupoid ring with finitely many nonzero R_g over an artinian R is artinian",
        },
        ambient_semisimple,
        isotropy_orders,
        orders_invertible,
        trace_of_unit,
        trace_invertible,
        skew_semisimple,
        isotropy_rule: ImplicationStatus::of(ambient_semisimple && orders_invertible, skew_semisimple),
        trace_rule: ImplicationStatus::of(ambient_semisimple && trace_invertible, skew_semisimple),
    })
}

/// A left module of dimension `dim`; `action[k]` is the matrix of the
/// `k`-th algebra basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedModule {
    pub dim: usize,
    pub action: Vec<Matrix>,
}

impl GradedModule {
    pub fn new(algebra: &StructureAlgebra, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: action.len(),
            });
        }
        if let Some(m) = action.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: m.rows().max(m.cols()),
            });
        }
        Ok(GradedModule { dim, action })
    }

    /// `A` acting on itself by left multiplication.
    pub fn regular(algebra: &StructureAlgebra) -> Result<Self> {
        let action = (0..algebra.dim())
            .map(|k| algebra.left_multiplication(&algebra.basis_vector(k)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(algebra, algebra.dim(), action)
    }

    /// Matrix of an arbitrary algebra element.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        let field = self
            .action
            .first()
            .map_or(crate::exactlin::FieldSpec::rationals(), Matrix::field);
        let mut m = Matrix::zeros(field, self.dim, self.dim);
        for (c, a) in x.iter().zip(&self.action) {
            if !c.is_zero() {
                m = m.add(&a.scale(c)).expect("square of equal size");
            }
        }
        m
    }

    /// `(ab)·v = a·(b·v)` on basis elements.
    pub fn respects_product(&self, algebra: &StructureAlgebra) -> bool {
        (0..algebra.dim()).all(|i| {
            (0..algebra.dim()).all(|j| {
                self.act(&algebra.basis_product_dense(i, j))
                    == self.action[i].mul(&self.action[j]).expect("square")
            })
        })
    }

    pub fn is_submodule(&self, w: &Subspace) -> Result<bool> {
        for a in &self.action {
            if !w.image(a)?.is_subspace_of(w)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The four properties of a splitting map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitCheck {
    pub module_map: bool,
    pub idempotent: bool,
    pub image_is_w: bool,
    pub identity_on_w: bool,
}

impl SplitCheck {
    pub fn all(&self) -> bool {
        self.module_map && self.idempotent && self.image_is_w && self.identity_on_w
    }
}

fn coefficient_actions(ring: &SkewRing, v: &GradedModule) -> Result<Vec<Matrix>> {
    let a = ring.action.ambient();
    (0..a.dim())
        .map(|j| Ok(v.act(&ring.embed_coefficient(&a.basis_vector(j))?)))
        .collect()
}

/// A projection `V → W` commuting with the action of `R`, if one exists.
pub fn r_projection(ring: &SkewRing, v: &GradedModule, w: &Subspace) -> Result<Option<Matrix>> {
    let m = v.dim;
    let f = ring.algebra.field();
    let idx = |i: usize, j: usize| i * m + j;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs = Vec::new();
    for ar in coefficient_actions(ring, v)? {
        // (XA − AX)[i][j] = Σ_k X[i][k]A[k][j] − A[i][k]X[k][j]
        for i in 0..m {
            for j in 0..m {
                let mut row = vector::zeros(f, m * m);
                for k in 0..m {
                    row[idx(i, k)] += &ar[(k, j)];
                    row[idx(k, j)] -= &ar[(i, k)];
                }
                rows.push(row);
                rhs.push(f.zero());
            }
        }
    }
    for b in w.basis() {
        for i in 0..m {
            let mut row = vector::zeros(f, m * m);
            for k in 0..m {
                row[idx(i, k)] = b[k].clone();
            }
            rows.push(row);
            rhs.push(b[i].clone());
        }
    }
    for n in w.annihilator().basis() {
        for j in 0..m {
            let mut row = vector::zeros(f, m * m);
            for i in 0..m {
                row[idx(i, j)] = n[i].clone();
            }
            rows.push(row);
            rhs.push(f.zero());
        }
    }
    let Some(x) = Matrix::from_rows(f, m * m, rows)?.solve(&rhs)? else {
        return Ok(None);
    };
    Ok(Some(Matrix::from_rows(
        f,
        m,
        x.chunks(m).map(<[Scalar]>::to_vec).collect(),
    )?))
}

/// The averaged map `ψ(v) = l Σ_g 1_{g⁻¹}δ_{g⁻¹} π(1_g δ_g v)` with
/// `l = tr_α(1_R)⁻¹`, a module projection onto `W`.
pub fn maschke_split(
    ring: &SkewRing,
    v: &GradedModule,
    w: &Subspace,
    pi: &Matrix,
) -> Result<Matrix> {
    let pa = &ring.action;
    let a = pa.ambient();
    let m = v.dim;
    if !v.respects_product(&ring.algebra) {
        return Err(Error::Precondition(
            "module action does not respect the product".into(),
        ));
    }
    if w.ambient_dim() != m || pi.rows() != m || pi.cols() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: w.ambient_dim(),
        });
    }
    if !v.is_submodule(w)? {
        return Err(Error::Precondition("W is not a submodule".into()));
    }
    let onto = (0..m).all(|j| w.contains(&pi.column(j)).unwrap_or(false));
    let fixes = w
        .basis()
        .iter()
        .all(|b| pi.mul_vec(b).ok().as_ref() == Some(b));
    if !onto || !fixes {
        return Err(Error::Precondition("π is not a projection onto W".into()));
    }
    for ar in coefficient_actions(ring, v)? {
        if pi.mul(&ar)? != ar.mul(pi)? {
            return Err(Error::Precondition("π is not R-linear".into()));
        }
    }
    let unit = a
        .unit()
        .map(<[Scalar]>::to_vec)
        .or_else(|| a.find_unit())
        .ok_or_else(|| Error::Precondition("coefficient ring has no identity".into()))?;
    let t = pa.trace_map(&unit)?;
    let l = inverse_element(a, &t)?
        .ok_or_else(|| Error::Precondition("tr(1) is not invertible".into()))?;
    let g = pa.groupoid();
    let mut sum = Matrix::zeros(a.field(), m, m);
    for k in 0..g.morphism_count() {
        let ki = g.inverse(k);
        let (Some(uk), Some(uki)) = (pa.domain_unit(k), pa.domain_unit(ki)) else {
            return Err(Error::Unsupported("partial action is not unital".into()));
        };
        let right = v.act(&ring.element(k, &uk)?);
        let left = v.act(&ring.element(ki, &uki)?);
        sum = sum.add(&left.mul(pi)?.mul(&right)?)?;
    }
    v.act(&ring.embed_coefficient(&l)?).mul(&sum)
}

/// Checks that `psi` is a module map and a projection onto `W`.
pub fn verify_split(v: &GradedModule, w: &Subspace, psi: &Matrix) -> Result<SplitCheck> {
    let module_map = v.action.iter().all(|a| psi.mul(a).ok() == a.mul(psi).ok());
    let idempotent = psi.mul(psi)? == *psi;
    let image_is_w = &Subspace::span(
        psi.field(),
        v.dim,
        (0..v.dim).map(|j| psi.column(j)).collect(),
    )? == w;
    let identity_on_w = w
        .basis()
        .iter()
        .all(|b| psi.mul_vec(b).ok().as_ref() == Some(b));
    Ok(SplitCheck {
        module_map,
        idempotent,
        image_is_w,
        identity_on_w,
    })
}
