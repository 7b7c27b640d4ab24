//! Trace map and invariants of a unital partial action.

use super::PartialAction;
use crate::error::Result;
use crate::exactlin::{vector, Matrix, Scalar, Subspace};

impl PartialAction {
    /// `tr(x) = Σ_g α_g(x·1_{g⁻¹})`. Needs every `R_g` unital.
    pub fn trace_map(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        let g = self.groupoid();
        let a = self.ambient();
        let mut acc = vector::zeros(a.field(), a.dim());
        for m in 0..g.morphism_count() {
            let y = self.times_domain_unit(x, g.inverse(m))?;
            acc = vector::add(&acc, &self.apply(m, &y)?);
        }
        Ok(acc)
    }

    /// Matrix of the trace map on the ambient basis.
    pub fn trace_matrix(&self) -> Result<Matrix> {
        let a = self.ambient();
        let cols = (0..a.dim())
            .map(|j| self.trace_map(&a.basis_vector(j)))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(a.field(), a.dim(), &cols)
    }

    /// `R^α = {x : α_g(x·1_{g⁻¹}) = x·1_g for all g}`.
    pub fn fixed_ring(&self) -> Result<Subspace> {
        let g = self.groupoid();
        let a = self.ambient();
        let n = a.dim();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for m in 0..g.morphism_count() {
            let images = (0..n)
                .map(|j| {
                    let e = a.basis_vector(j);
                    let moved = self.apply(m, &self.times_domain_unit(&e, g.inverse(m))?)?;
                    Ok(vector::sub(&moved, &self.times_domain_unit(&e, m)?))
                })
                .collect::<Result<Vec<_>>>()?;
            for i in 0..n {
                rows.push(images.iter().map(|v| v[i].clone()).collect());
            }
        }
        if rows.is_empty() {
            return Ok(Subspace::full(a.field(), n));
        }
        Ok(Matrix::from_rows(a.field(), n, rows)?.kernel())
    }
}
