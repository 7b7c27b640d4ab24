//! Partial actions of finite groupoids on algebras decomposed along objects.

mod globalize;
mod trace;

pub use globalize::{
    FiniteTypeEquivalence, Globalization, GlobalizationAxiom, GlobalizationViolation,
};

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{Side, StructureAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};
use crate::groupoid::{FiniteGroupoid, Mor, Obj};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ActionAxiom {
    /// `α_e = id` on `R_e`, and `R_e` is the domain of the identity.
    P1,
    /// `α_h⁻¹(R_h ∩ R_{g⁻¹}) ⊆ R_{(gh)⁻¹}`.
    P2,
    /// `α_g ∘ α_h = α_{gh}` on `α_h⁻¹(R_h ∩ R_{g⁻¹})`.
    P3,
    /// `R = ⊕_e R_e`.
    P4,
    /// `R_e ⊴ R` and `R_g ⊴ R_{c(g)}`.
    Ideal,
    Multiplicative,
    Bijective,
}

impl fmt::Display for ActionAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ActionAxiom::P1 => "P1",
            ActionAxiom::P2 => "P2",
            ActionAxiom::P3 => "P3",
            ActionAxiom::P4 => "P4",
            ActionAxiom::Ideal => "ideal",
            ActionAxiom::Multiplicative => "multiplicative",
            ActionAxiom::Bijective => "bijective",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionViolation {
    pub axiom: ActionAxiom,
    pub witness: String,
}

impl fmt::Display for ActionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.axiom, self.witness)
    }
}

/// Finite-type test per object: the generating set from `G(−,e)` and
/// whether `R_{c(g)} = Σᵢ R_{g gᵢ}` holds for every `g ∈ G(e,−)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTypeObject {
    pub object: Obj,
    pub holds: bool,
    /// Greedily minimized generators when the condition holds, else all of `G(−,e)`.
    pub witnesses: Vec<Mor>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTypeReport {
    pub objects: Vec<FiniteTypeObject>,
}

impl FiniteTypeReport {
    pub fn holds(&self) -> bool {
        self.objects.iter().all(|o| o.holds)
    }
}

/// A partial action `α = {α_g : R_{g⁻¹} → R_g}`. Each `α_g` is stored as a
/// matrix from RREF coordinates of `R_{g⁻¹}` to RREF coordinates of `R_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialAction {
    groupoid: FiniteGroupoid,
    ambient: StructureAlgebra,
    components: Vec<Subspace>,
    domains: Vec<Subspace>,
    maps: Vec<Matrix>,
}

impl PartialAction {
    /// Checks shapes only; the axioms are checked by [`validate`](Self::validate).
    pub fn new(
        groupoid: FiniteGroupoid,
        ambient: StructureAlgebra,
        components: Vec<Subspace>,
        domains: Vec<Subspace>,
        maps: Vec<Matrix>,
    ) -> Result<Self> {
        let n = ambient.dim();
        let f = ambient.field();
        if components.len() != groupoid.object_count() {
            return Err(Error::DimensionMismatch {
                expected: groupoid.object_count(),
                found: components.len(),
            });
        }
        let m = groupoid.morphism_count();
        if domains.len() != m || maps.len() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: domains.len().min(maps.len()),
            });
        }
        for s in components.iter().chain(&domains) {
            if s.ambient_dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: s.ambient_dim(),
                });
            }
            if s.field() != f {
                return Err(Error::FieldMismatch(f.to_string(), s.field().to_string()));
            }
        }
        for g in 0..m {
            let (rows, cols) = (domains[g].dim(), domains[groupoid.inverse(g)].dim());
            if maps[g].rows() != rows || maps[g].cols() != cols {
                return Err(Error::Precondition(format!(
                    "map of {} is {}×{}, expected {rows}×{cols}",
                    groupoid.morphism_id(g),
                    maps[g].rows(),
                    maps[g].cols()
                )));
            }
            if maps[g].field() != f {
                return Err(Error::FieldMismatch(
                    f.to_string(),
                    maps[g].field().to_string(),
                ));
            }
        }
        Ok(PartialAction {
            groupoid,
            ambient,
            components,
            domains,
            maps,
        })
    }

    /// Like [`new`](Self::new) but with each `α_g` given by an `n × n` matrix
    /// on the ambient space, restricted to `R_{g⁻¹}`.
    pub fn from_ambient_maps(
        groupoid: FiniteGroupoid,
        ambient: StructureAlgebra,
        components: Vec<Subspace>,
        domains: Vec<Subspace>,
        ambient_maps: Vec<Matrix>,
    ) -> Result<Self> {
        if domains.len() != groupoid.morphism_count() || ambient_maps.len() != domains.len() {
            return Err(Error::DimensionMismatch {
                expected: groupoid.morphism_count(),
                found: domains.len().min(ambient_maps.len()),
            });
        }
        let mut maps = Vec::new();
        for g in 0..groupoid.morphism_count() {
            let source = &domains[groupoid.inverse(g)];
            let target = &domains[g];
            maps.push(
                restrict_map(&ambient_maps[g], source, target).map_err(|e| match e {
                    Error::Precondition(m) => {
                        Error::Precondition(format!("{}: {m}", groupoid.morphism_id(g)))
                    }
                    e => e,
                })?,
            );
        }
        Self::new(groupoid, ambient, components, domains, maps)
    }

    /// A global action: `R_g = R_{c(g)}` with `α_g` given on the ambient space.
    pub fn global(
        groupoid: FiniteGroupoid,
        ambient: StructureAlgebra,
        components: Vec<Subspace>,
        ambient_maps: Vec<Matrix>,
    ) -> Result<Self> {
        if components.len() != groupoid.object_count() {
            return Err(Error::DimensionMismatch {
                expected: groupoid.object_count(),
                found: components.len(),
            });
        }
        let domains = (0..groupoid.morphism_count())
            .map(|g| components[groupoid.cod(g)].clone())
            .collect();
        Self::from_ambient_maps(groupoid, ambient, components, domains, ambient_maps)
    }

    pub fn groupoid(&self) -> &FiniteGroupoid {
        &self.groupoid
    }

    pub fn ambient(&self) -> &StructureAlgebra {
        &self.ambient
    }

    pub fn component(&self, e: Obj) -> &Subspace {
        &self.components[e]
    }

    pub fn components(&self) -> &[Subspace] {
        &self.components
    }

    pub fn domain(&self, g: Mor) -> &Subspace {
        &self.domains[g]
    }

    pub fn domains(&self) -> &[Subspace] {
        &self.domains
    }

    pub fn map(&self, g: Mor) -> &Matrix {
        &self.maps[g]
    }

    /// `α_g(x)` for `x ∈ R_{g⁻¹}`.
    pub fn apply(&self, g: Mor, x: &[Scalar]) -> Result<Vec<Scalar>> {
        let source = &self.domains[self.groupoid.inverse(g)];
        let c = source.coordinates(x)?.ok_or_else(|| {
            Error::Precondition(format!(
                "vector is outside the domain of α_{}",
                self.groupoid.morphism_id(g)
            ))
        })?;
        self.domains[g].from_coordinates(&self.maps[g].mul_vec(&c)?)
    }

    /// `α_g⁻¹(y)` for `y ∈ R_g`; `None` if `α_g` is not invertible there.
    pub fn apply_inverse(&self, g: Mor, y: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        let c = self.domains[g].coordinates(y)?.ok_or_else(|| {
            Error::Precondition(format!(
                "vector is outside the image of α_{}",
                self.groupoid.morphism_id(g)
            ))
        })?;
        let source = &self.domains[self.groupoid.inverse(g)];
        match self.maps[g].solve(&c)? {
            Some(x) => Ok(Some(source.from_coordinates(&x)?)),
            None => Ok(None),
        }
    }

    /// `α_g(S)` for a subspace `S ⊆ R_{g⁻¹}`.
    pub fn image(&self, g: Mor, s: &Subspace) -> Result<Subspace> {
        let vs = s
            .basis()
            .iter()
            .map(|x| self.apply(g, x))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(self.ambient.field(), self.ambient.dim(), vs)
    }

    fn is_bijective(&self, g: Mor) -> bool {
        let m = &self.maps[g];
        m.rows() == m.cols() && m.rank() == m.rows()
    }

    /// Checks (P1)–(P4), ideal-ness and that each `α_g` is a multiplicative
    /// bijection. Empty iff all hold.
    pub fn validate(&self) -> Vec<ActionViolation> {
        let mut out = Vec::new();
        let g = &self.groupoid;
        let a = &self.ambient;
        let id = |m: Mor| g.morphism_id(m).to_string();
        let mut push = |axiom, witness: String| out.push(ActionViolation { axiom, witness });

        for e in 0..g.object_count() {
            let i = g.identity(e);
            if self.domains[i] != self.components[e] {
                push(
                    ActionAxiom::P1,
                    format!("R_{} ≠ R_{}", id(i), g.object_id(e)),
                );
            } else if self.maps[i] != Matrix::identity(a.field(), self.domains[i].dim()) {
                push(ActionAxiom::P1, format!("α_{} is not the identity", id(i)));
            }
            if !a
                .is_ideal(&self.components[e], Side::TwoSided)
                .unwrap_or(false)
            {
                push(
                    ActionAxiom::Ideal,
                    format!("R_{} is not an ideal of R", g.object_id(e)),
                );
            }
        }

        let total: usize = self.components.iter().map(Subspace::dim).sum();
        let sum = self
            .components
            .iter()
            .try_fold(Subspace::zero(a.field(), a.dim()), |acc, c| acc.sum(c))
            .expect("matching dimensions");
        if total != a.dim() || !sum.is_full() {
            push(
                ActionAxiom::P4,
                format!(
                    "components have total dimension {total} and span {} of {}",
                    sum.dim(),
                    a.dim()
                ),
            );
        }

        for m in 0..g.morphism_count() {
            let rg = &self.domains[m];
            let rc = &self.components[g.cod(m)];
            if !rg.is_subspace_of(rc).unwrap_or(false) || !is_ideal_in(a, rg, rc) {
                push(
                    ActionAxiom::Ideal,
                    format!("R_{} is not an ideal of R_{}", id(m), g.object_id(g.cod(m))),
                );
            }
            if !self.is_bijective(m) {
                push(
                    ActionAxiom::Bijective,
                    format!("α_{} is not bijective", id(m)),
                );
            }
            let src = &self.domains[g.inverse(m)];
            'mult: for x in src.basis() {
                for y in src.basis() {
                    let xy = a.mul(x, y);
                    if !src.contains(&xy).unwrap_or(false) {
                        continue;
                    }
                    let lhs = self.apply(m, &xy).expect("in domain");
                    let rhs = a.mul(
                        &self.apply(m, x).expect("in domain"),
                        &self.apply(m, y).expect("in domain"),
                    );
                    if lhs != rhs {
                        push(
                            ActionAxiom::Multiplicative,
                            format!("α_{}(xy) ≠ α_{}(x)α_{}(y)", id(m), id(m), id(m)),
                        );
                        break 'mult;
                    }
                }
            }
        }

        for (gm, h) in g.composable_pairs().collect::<Vec<_>>() {
            let Some(gh) = g.compose(gm, h) else { continue };
            if !self.is_bijective(h) {
                continue;
            }
            let meet = self.domains[h]
                .intersect(&self.domains[g.inverse(gm)])
                .expect("matching dimensions");
            let pre: Vec<Vec<Scalar>> = meet
                .basis()
                .iter()
                .map(|y| {
                    self.apply_inverse(h, y)
                        .expect("in R_h")
                        .expect("bijective")
                })
                .collect();
            let s = Subspace::span(a.field(), a.dim(), pre).expect("ambient length");
            let target = &self.domains[g.inverse(gh)];
            if !s.is_subspace_of(target).expect("matching dimensions") {
                push(
                    ActionAxiom::P2,
                    format!(
                        "α_{}⁻¹(R_{} ∩ R_{}⁻¹) ⊄ R_({})⁻¹",
                        id(h),
                        id(h),
                        id(gm),
                        id(gh)
                    ),
                );
                continue;
            }
            for x in s.basis() {
                let via = self
                    .apply(gm, &self.apply(h, x).expect("in domain"))
                    .expect("in domain");
                let direct = self.apply(gh, x).expect("in domain");
                if via != direct {
                    push(
                        ActionAxiom::P3,
                        format!("α_{}∘α_{} ≠ α_{}", id(gm), id(h), id(gh)),
                    );
                    break;
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Identity of `R_g` as a subalgebra (`0` when `R_g = 0`).
    pub fn domain_unit(&self, g: Mor) -> Option<Vec<Scalar>> {
        self.ambient
            .unit_of_subspace(&self.domains[g])
            .ok()
            .flatten()
    }

    pub fn component_unit(&self, e: Obj) -> Option<Vec<Scalar>> {
        self.ambient
            .unit_of_subspace(&self.components[e])
            .ok()
            .flatten()
    }

    /// Every nonzero `R_g` has an identity.
    pub fn is_unital(&self) -> bool {
        (0..self.groupoid.morphism_count()).all(|g| self.domain_unit(g).is_some())
    }

    /// `R_g = R_{c(g)}` for every morphism.
    pub fn is_global(&self) -> bool {
        (0..self.groupoid.morphism_count())
            .all(|g| self.domains[g] == self.components[self.groupoid.cod(g)])
    }

    /// Morphisms with nonzero `R_g`, in index order.
    pub fn support(&self) -> Vec<Mor> {
        (0..self.groupoid.morphism_count())
            .filter(|&g| !self.domains[g].is_zero())
            .collect()
    }

    /// Restriction to the full subgroupoid on objects with `R_e ≠ 0`. Also
    /// returns the original index of each kept morphism.
    pub fn restrict_to_g_sharp(&self) -> Result<(PartialAction, Vec<Mor>)> {
        let objects: Vec<Obj> = (0..self.groupoid.object_count())
            .filter(|&e| !self.components[e].is_zero())
            .collect();
        if objects.is_empty() {
            return Err(Error::EmptyInput("every component is zero".into()));
        }
        let (sub, kept) = self.groupoid.full_subgroupoid(&objects)?;
        let action = PartialAction::new(
            sub,
            self.ambient.clone(),
            objects
                .iter()
                .map(|&e| self.components[e].clone())
                .collect(),
            kept.iter().map(|&g| self.domains[g].clone()).collect(),
            kept.iter().map(|&g| self.maps[g].clone()).collect(),
        )?;
        Ok((action, kept))
    }

    fn generated_by(&self, g: Mor, gens: &[Mor]) -> bool {
        let target = &self.components[self.groupoid.cod(g)];
        let mut acc = Subspace::zero(self.ambient.field(), self.ambient.dim());
        for &k in gens {
            if let Some(gk) = self.groupoid.compose(g, k) {
                acc = acc.sum(&self.domains[gk]).expect("matching dimensions");
            }
        }
        &acc == target
    }

    /// Finite-type test using all of `G(−,e)` as generators, with witnesses
    /// minimized greedily afterwards.
    pub fn finite_type(&self) -> FiniteTypeReport {
        let g = &self.groupoid;
        let mut objects = Vec::new();
        for e in 0..g.object_count() {
            let all = g.into_object(e);
            let outs = g.out_of_object(e);
            let check = |gens: &[Mor]| outs.iter().all(|&m| self.generated_by(m, gens));
            let holds = check(&all);
            let mut witnesses = all.clone();
            if holds {
                for k in all {
                    let trial: Vec<Mor> = witnesses.iter().copied().filter(|&x| x != k).collect();
                    if check(&trial) {
                        witnesses = trial;
                    }
                }
            }
            objects.push(FiniteTypeObject {
                object: e,
                holds,
                witnesses,
            });
        }
        FiniteTypeReport { objects }
    }

    pub fn is_finite_type(&self) -> bool {
        self.finite_type().holds()
    }

    /// `α_g(A ∩ R_{g⁻¹}) ⊆ A ∩ R_g` for every `g`.
    pub fn is_invariant_subring(&self, a: &Subspace) -> Result<bool> {
        if !self.ambient.is_subalgebra(a)? {
            return Err(Error::Precondition("subspace is not a subring".into()));
        }
        for g in 0..self.groupoid.morphism_count() {
            let src = a.intersect(&self.domains[self.groupoid.inverse(g)])?;
            let tgt = a.intersect(&self.domains[g])?;
            if !self.image(g, &src)?.is_subspace_of(&tgt)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Restriction to a two-sided ideal `I ⊴ R`: the ambient becomes `I`
    /// (on the RREF basis of `I`), `R'_e = I ∩ R_e`,
    /// `R'_g = I ∩ α_g(I ∩ R_{g⁻¹})`, and `α'_g` is the restriction of `α_g`.
    pub fn restrict_to_ideal(&self, ideal: &Subspace) -> Result<PartialAction> {
        let a = &self.ambient;
        if !a.is_ideal(ideal, Side::TwoSided)? {
            return Err(Error::Precondition(
                "restriction target is not a two-sided ideal".into(),
            ));
        }
        let sub = a.subalgebra(ideal)?;
        let g = &self.groupoid;
        let to_sub = |s: &Subspace| -> Result<Subspace> {
            let vs = s
                .basis()
                .iter()
                .map(|v| Ok(ideal.coordinates(v)?.expect("inside the ideal")))
                .collect::<Result<Vec<_>>>()?;
            Subspace::span(a.field(), ideal.dim(), vs)
        };
        let components = self
            .components
            .iter()
            .map(|c| to_sub(&c.intersect(ideal)?))
            .collect::<Result<Vec<_>>>()?;
        let mut big_domains = Vec::new();
        for m in 0..g.morphism_count() {
            let src = ideal.intersect(&self.domains[g.inverse(m)])?;
            big_domains.push(ideal.intersect(&self.image(m, &src)?)?);
        }
        let mut maps = Vec::new();
        for m in 0..g.morphism_count() {
            let src = &big_domains[g.inverse(m)];
            let tgt = &big_domains[m];
            let cols = src
                .basis()
                .iter()
                .map(|x| {
                    let y = self.apply(m, x)?;
                    let ys = ideal.coordinates(&y)?.expect("inside the ideal");
                    let t = to_sub(tgt)?;
                    t.coordinates(&ys)?.ok_or_else(|| {
                        Error::Precondition(format!(
                            "α_{} does not restrict to the ideal",
                            g.morphism_id(m)
                        ))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            maps.push(if cols.is_empty() {
                Matrix::zeros(a.field(), tgt.dim(), 0)
            } else {
                Matrix::from_columns(a.field(), tgt.dim(), &cols)?
            });
        }
        let domains = big_domains.iter().map(to_sub).collect::<Result<Vec<_>>>()?;
        PartialAction::new(g.clone(), sub, components, domains, maps)
    }

    /// `x·1_g`, with `1_g = 0` for zero domains. Errors if `R_g` is nonzero
    /// without an identity.
    pub(crate) fn times_domain_unit(&self, x: &[Scalar], g: Mor) -> Result<Vec<Scalar>> {
        let u = self.domain_unit(g).ok_or_else(|| {
            Error::Unsupported(format!(
                "R_{} has no identity",
                self.groupoid.morphism_id(g)
            ))
        })?;
        Ok(self.ambient.mul(x, &u))
    }

    /// Builder-style replacement of one morphism's data, for constructing
    /// variants of an action.
    pub fn with_morphism_data(mut self, g: Mor, domain: Subspace, map: Matrix) -> Result<Self> {
        if g >= self.domains.len() {
            return Err(Error::Lookup {
                kind: "morphism",
                id: g.to_string(),
            });
        }
        self.domains[g] = domain;
        self.maps[g] = map;
        Self::new(
            self.groupoid,
            self.ambient,
            self.components,
            self.domains,
            self.maps,
        )
    }

    /// Distinct axiom classes among `violations`.
    pub fn violation_classes(violations: &[ActionViolation]) -> BTreeSet<ActionAxiom> {
        violations.iter().map(|v| v.axiom).collect()
    }
}

fn is_ideal_in(a: &StructureAlgebra, i: &Subspace, r: &Subspace) -> bool {
    for x in i.basis() {
        for y in r.basis() {
            if !i.contains(&a.mul(x, y)).unwrap_or(false)
                || !i.contains(&a.mul(y, x)).unwrap_or(false)
            {
                return false;
            }
        }
    }
    true
}

/// Restricts an ambient linear map to `source → target`, in RREF coordinates.
pub(crate) fn restrict_map(m: &Matrix, source: &Subspace, target: &Subspace) -> Result<Matrix> {
    let f = m.field();
    let cols = source
        .basis()
        .iter()
        .map(|x| {
            let y = m.mul_vec(x)?;
            target
                .coordinates(&y)?
                .ok_or_else(|| Error::Precondition("map leaves its codomain".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    if cols.is_empty() {
        return Ok(Matrix::zeros(f, target.dim(), 0));
    }
    Matrix::from_columns(f, target.dim(), &cols)
}
