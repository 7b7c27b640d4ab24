//! Globalization of unital partial actions and a verifier for candidate
//! globalizations.

use std::fmt;

use super::PartialAction;
use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{vector, EchelonBuilder, Frame, Matrix, Scalar, Subspace};
use crate::groupoid::{Mor, Obj};

/// A global action `β` on `T` with `T = ⊕_e T_e`, and an algebra
/// monomorphism `ψ : R → T` given as a `dim T × dim R` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Globalization {
    pub action: PartialAction,
    pub psi: Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GlobalizationAxiom {
    /// `β` is not a valid global action on matching data.
    NotGlobal,
    /// `ψ` is not an injective ring map carrying `R_e` into `T_e`.
    Embedding,
    /// `ψ(R_e)` is an ideal of `T_e`.
    Ideal,
    /// `ψ(R_g) = ψ(R_{c(g)}) ∩ β_g(ψ(R_{d(g)}))`.
    Intersection,
    /// `β_g(ψ(x)) = ψ(α_g(x))` on `R_{g⁻¹}`.
    Equivariance,
    /// `T_e = Σ_{c(h)=e} β_h(ψ(R_{d(h)}))`.
    Generation,
}

impl fmt::Display for GlobalizationAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GlobalizationAxiom::NotGlobal => "not-global",
            GlobalizationAxiom::Embedding => "embedding",
            GlobalizationAxiom::Ideal => "(i) ideal",
            GlobalizationAxiom::Intersection => "(ii) intersection",
            GlobalizationAxiom::Equivariance => "(iii) equivariance",
            GlobalizationAxiom::Generation => "(iv) generation",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalizationViolation {
    pub axiom: GlobalizationAxiom,
    pub witness: String,
}

impl fmt::Display for GlobalizationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.axiom, self.witness)
    }
}

/// The three conditions that agree for unital partial actions: finite
/// type, unital `T_e`, and `T_e` generated by the finite-type witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTypeEquivalence {
    pub finite_type: bool,
    pub globalization_unital: bool,
    pub witnesses_generate: bool,
}

impl FiniteTypeEquivalence {
    pub fn agree(&self) -> bool {
        self.finite_type == self.globalization_unital
            && self.globalization_unital == self.witnesses_generate
    }
}

/// Product space `F_e = Π_{c(h)=e} R_{d(h)}` in concatenated RREF
/// coordinates.
struct Slots {
    morphisms: Vec<Mor>,
    offsets: Vec<usize>,
    dim: usize,
}

impl Slots {
    fn position(&self, h: Mor) -> usize {
        self.morphisms
            .iter()
            .position(|&k| k == h)
            .expect("slot exists")
    }
}

struct Builder<'a> {
    pa: &'a PartialAction,
    slots: Vec<Slots>,
}

impl<'a> Builder<'a> {
    fn new(pa: &'a PartialAction) -> Self {
        let g = pa.groupoid();
        let slots = (0..g.object_count())
            .map(|e| {
                let morphisms = g.into_object(e);
                let mut offsets = Vec::new();
                let mut dim = 0;
                for &h in &morphisms {
                    offsets.push(dim);
                    dim += pa.component(g.dom(h)).dim();
                }
                Slots {
                    morphisms,
                    offsets,
                    dim,
                }
            })
            .collect();
        Builder { pa, slots }
    }

    /// `ψ_e(r)(h) = α_{h⁻¹}(r·1_h)`.
    fn psi(&self, e: Obj, r: &[Scalar]) -> Result<Vec<Scalar>> {
        let g = self.pa.groupoid();
        let s = &self.slots[e];
        let mut out = vector::zeros(self.pa.ambient().field(), s.dim);
        for (k, &h) in s.morphisms.iter().enumerate() {
            let y = self
                .pa
                .apply(g.inverse(h), &self.pa.times_domain_unit(r, h)?)?;
            let c = self
                .pa
                .component(g.dom(h))
                .coordinates(&y)?
                .expect("lands in R_d(h)");
            for (i, x) in c.into_iter().enumerate() {
                out[s.offsets[k] + i] = x;
            }
        }
        Ok(out)
    }

    /// `(β_g f)(h) = f(g⁻¹h)` for `f ∈ F_{d(g)}`.
    fn beta(&self, gm: Mor, f: &[Scalar]) -> Vec<Scalar> {
        let g = self.pa.groupoid();
        let src = &self.slots[g.dom(gm)];
        let tgt = &self.slots[g.cod(gm)];
        let mut out = vector::zeros(self.pa.ambient().field(), tgt.dim);
        let gi = g.inverse(gm);
        for (k, &h) in tgt.morphisms.iter().enumerate() {
            let j = src.position(g.compose(gi, h).expect("composable"));
            let len = self.pa.component(g.dom(h)).dim();
            out[tgt.offsets[k]..tgt.offsets[k] + len]
                .clone_from_slice(&f[src.offsets[j]..src.offsets[j] + len]);
        }
        out
    }

    /// Componentwise product in `F_e`.
    fn product(&self, e: Obj, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let g = self.pa.groupoid();
        let a = self.pa.ambient();
        let s = &self.slots[e];
        let mut out = vector::zeros(a.field(), s.dim);
        for (k, &h) in s.morphisms.iter().enumerate() {
            let c = self.pa.component(g.dom(h));
            let r = s.offsets[k]..s.offsets[k] + c.dim();
            let u = c.from_coordinates(&x[r.clone()]).expect("slot length");
            let v = c.from_coordinates(&y[r.clone()]).expect("slot length");
            let p = c
                .coordinates(&a.mul(&u, &v))
                .expect("length")
                .expect("component is a subalgebra");
            out[r].clone_from_slice(&p);
        }
        out
    }

    /// Basis of `T_e`: `ψ_e` of the basis of `R_e`, then completion vectors
    /// from the translates `β_h(ψ(R_{d(h)}))`.
    fn frame(&self, e: Obj) -> Result<Frame> {
        let g = self.pa.groupoid();
        let f = self.pa.ambient().field();
        let mut builder = EchelonBuilder::new(f, self.slots[e].dim);
        let mut vectors = Vec::new();
        for r in self.pa.component(e).basis() {
            let v = self.psi(e, r)?;
            builder.insert(&v)?;
            vectors.push(v);
        }
        for &h in &self.slots[e].morphisms {
            let d = g.dom(h);
            for r in self.pa.component(d).basis() {
                let v = self.beta(h, &self.psi(d, r)?);
                if builder.insert(&v)? {
                    vectors.push(v);
                }
            }
        }
        Frame::new(f, self.slots[e].dim, vectors)
    }
}

impl PartialAction {
    /// Builds the globalization of a valid unital partial action. `ψ`
    /// maps the RREF basis of each `R_e` to the first basis vectors of `T_e`.
    pub fn globalize(&self) -> Result<Globalization> {
        let violations = self.validate();
        if !violations.is_empty() {
            return Err(Error::InvalidAction(
                violations.iter().map(ToString::to_string).collect(),
            ));
        }
        if !self.is_unital() {
            return Err(Error::Unsupported(
                "globalization needs a unital partial action".into(),
            ));
        }
        let b = Builder::new(self);
        let g = self.groupoid();
        let a = self.ambient();
        let f = a.field();
        let frames = (0..g.object_count())
            .map(|e| b.frame(e))
            .collect::<Result<Vec<_>>>()?;
        let mut offsets = Vec::new();
        let mut total = 0;
        for fr in &frames {
            offsets.push(total);
            total += fr.len();
        }
        let block = |e: Obj| offsets[e]..offsets[e] + frames[e].len();
        let mut owner = Vec::new();
        for (e, fr) in frames.iter().enumerate() {
            owner.extend(std::iter::repeat(e).take(fr.len()));
        }

        let mut failure = None;
        let t = StructureAlgebra::from_fn(f, total, |i, j| {
            let mut out = vector::zeros(f, total);
            let e = owner[i];
            if owner[j] != e {
                return out;
            }
            let fr = &frames[e];
            let p = b.product(
                e,
                &fr.vectors()[i - offsets[e]],
                &fr.vectors()[j - offsets[e]],
            );
            match fr.coordinates(&p).expect("slot length") {
                Some(c) => {
                    for (k, x) in c.into_iter().enumerate() {
                        out[offsets[e] + k] = x;
                    }
                }
                None => failure = Some(e),
            }
            out
        })?;
        if let Some(e) = failure {
            return Err(Error::Precondition(format!(
                "translates over {} are not closed under products",
                g.object_id(e)
            )));
        }
        let t = t.detect_unit();

        let components: Vec<Subspace> = (0..g.object_count())
            .map(|e| {
                Subspace::span(
                    f,
                    total,
                    block(e).map(|i| vector::unit(f, total, i)).collect(),
                )
            })
            .collect::<Result<_>>()?;
        let mut maps = Vec::new();
        for m in 0..g.morphism_count() {
            let (d, c) = (g.dom(m), g.cod(m));
            let cols = frames[d]
                .vectors()
                .iter()
                .map(|v| {
                    frames[c]
                        .coordinates(&b.beta(m, v))
                        .expect("slot length")
                        .ok_or_else(|| Error::Precondition("translate leaves T".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            maps.push(if cols.is_empty() {
                Matrix::zeros(f, frames[c].len(), 0)
            } else {
                Matrix::from_columns(f, frames[c].len(), &cols)?
            });
        }
        let domains = (0..g.morphism_count())
            .map(|m| components[g.cod(m)].clone())
            .collect();
        let action = PartialAction::new(g.clone(), t, components, domains, maps)?;

        // R = ⊕ R_e, so coordinates over the concatenated component bases
        // are RREF coordinates in each R_e.
        let all: Vec<Vec<Scalar>> = (0..g.object_count())
            .flat_map(|e| self.component(e).basis().to_vec())
            .collect();
        let decomposition = Frame::new(f, a.dim(), all)?;
        let mut psi = Matrix::zeros(f, total, a.dim());
        for j in 0..a.dim() {
            let c = decomposition
                .coordinates(&a.basis_vector(j))?
                .expect("components span R");
            let mut k = 0;
            for e in 0..g.object_count() {
                for i in 0..self.component(e).dim() {
                    psi[(offsets[e] + i, j)] = c[k].clone();
                    k += 1;
                }
            }
        }
        Ok(Globalization { action, psi })
    }

    /// Checks a candidate globalization of `self`.
    pub fn verify_globalization(&self, glob: &Globalization) -> Vec<GlobalizationViolation> {
        let mut out = Vec::new();
        let mut push = |axiom, witness: String| out.push(GlobalizationViolation { axiom, witness });
        let g = self.groupoid();
        let beta = &glob.action;
        let a = self.ambient();
        let t = beta.ambient();
        if beta.groupoid() != g {
            push(GlobalizationAxiom::NotGlobal, "groupoids differ".into());
            return out;
        }
        if !beta.is_global() || !beta.is_valid() {
            push(
                GlobalizationAxiom::NotGlobal,
                "β is not a global action".into(),
            );
            return out;
        }
        let psi = &glob.psi;
        if psi.rows() != t.dim() || psi.cols() != a.dim() || psi.field() != a.field() {
            push(
                GlobalizationAxiom::Embedding,
                "ψ has the wrong shape".into(),
            );
            return out;
        }
        let apply = |x: &[Scalar]| psi.mul_vec(x).expect("shape checked");
        let image = |s: &Subspace| {
            Subspace::span(
                t.field(),
                t.dim(),
                s.basis().iter().map(|x| apply(x)).collect(),
            )
            .expect("length")
        };
        if psi.rank() != a.dim() {
            push(GlobalizationAxiom::Embedding, "ψ is not injective".into());
        }
        'mult: for i in 0..a.dim() {
            for j in 0..a.dim() {
                let (x, y) = (a.basis_vector(i), a.basis_vector(j));
                if apply(&a.mul(&x, &y)) != t.mul(&apply(&x), &apply(&y)) {
                    push(
                        GlobalizationAxiom::Embedding,
                        format!("ψ(b{i}·b{j}) ≠ ψ(b{i})ψ(b{j})"),
                    );
                    break 'mult;
                }
            }
        }
        let psi_r: Vec<Subspace> = (0..g.object_count())
            .map(|e| image(self.component(e)))
            .collect();
        for e in 0..g.object_count() {
            if !psi_r[e].is_subspace_of(beta.component(e)).expect("length") {
                push(
                    GlobalizationAxiom::Embedding,
                    format!("ψ(R_{0}) ⊄ T_{0}", g.object_id(e)),
                );
                continue;
            }
            let te = beta.component(e);
            let ok = psi_r[e].basis().iter().all(|x| {
                te.basis().iter().all(|y| {
                    psi_r[e].contains(&t.mul(x, y)).expect("length")
                        && psi_r[e].contains(&t.mul(y, x)).expect("length")
                })
            });
            if !ok {
                push(
                    GlobalizationAxiom::Ideal,
                    format!("ψ(R_{0}) is not an ideal of T_{0}", g.object_id(e)),
                );
            }
        }
        for m in 0..g.morphism_count() {
            let moved = beta.image(m, &psi_r[g.dom(m)]).expect("inside T_d(g)");
            let meet = psi_r[g.cod(m)].intersect(&moved).expect("length");
            if image(self.domain(m)) != meet {
                push(
                    GlobalizationAxiom::Intersection,
                    format!("ψ(R_{}) ≠ ψ(R_c) ∩ β(ψ(R_d))", g.morphism_id(m)),
                );
            }
            for x in self.domain(g.inverse(m)).basis() {
                let lhs = beta.apply(m, &apply(x));
                let rhs = apply(&self.apply(m, x).expect("in domain"));
                if lhs.as_ref() != Ok(&rhs) {
                    push(
                        GlobalizationAxiom::Equivariance,
                        format!("β_{0}ψ ≠ ψα_{0}", g.morphism_id(m)),
                    );
                    break;
                }
            }
        }
        for e in 0..g.object_count() {
            let mut acc = Subspace::zero(t.field(), t.dim());
            for h in g.into_object(e) {
                let moved = beta.image(h, &psi_r[g.dom(h)]).expect("inside T_d(h)");
                acc = acc.sum(&moved).expect("length");
            }
            if &acc != beta.component(e) {
                push(
                    GlobalizationAxiom::Generation,
                    format!("translates do not span T_{}", g.object_id(e)),
                );
            }
        }
        out
    }

    /// Compares finite type, unitality of the globalization components and
    /// generation of `T_e` by the finite-type witnesses.
    pub fn finite_type_equivalence(&self) -> Result<FiniteTypeEquivalence> {
        let glob = self.globalize()?;
        let report = self.finite_type();
        let beta = &glob.action;
        let t = beta.ambient();
        let g = self.groupoid();
        let globalization_unital = (0..g.object_count()).all(|e| beta.component_unit(e).is_some());
        let mut witnesses_generate = true;
        for obj in &report.objects {
            let e = obj.object;
            let mut acc = Subspace::zero(t.field(), t.dim());
            for &h in &obj.witnesses {
                let src = Subspace::span(
                    t.field(),
                    t.dim(),
                    self.component(g.dom(h))
                        .basis()
                        .iter()
                        .map(|x| glob.psi.mul_vec(x).expect("shape"))
                        .collect(),
                )?;
                acc = acc.sum(&beta.image(h, &src)?)?;
            }
            witnesses_generate &= &acc == beta.component(e);
        }
        Ok(FiniteTypeEquivalence {
            finite_type: report.holds(),
            globalization_unital,
            witnesses_generate,
        })
    }
}

impl Globalization {
    /// `ψ(x)` for `x ∈ R`.
    pub fn embed(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        self.psi.mul_vec(x)
    }
}
