//! Quotients by two-sided ideals.

use crate::algebra::{Side, StructureAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};

impl StructureAlgebra {
    /// `A / I` on the cosets of the unit vectors at the free columns of `I`.
    pub fn quotient_by_ideal(&self, ideal: &Subspace) -> Result<StructureAlgebra> {
        if !self.is_ideal(ideal, Side::TwoSided)? {
            return Err(Error::Precondition("quotient by a non-ideal".into()));
        }
        let free = ideal.free_columns();
        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let r = ideal.reduce(v).expect("length");
            free.iter().map(|&c| r[c].clone()).collect()
        };
        let out = StructureAlgebra::from_fn(self.field(), free.len(), |i, j| {
            project(&self.basis_product_dense(free[i], free[j]))
        })?;
        let labels = free.iter().map(|&c| self.labels()[c].clone()).collect();
        let out = out.with_labels(labels)?;
        Ok(match self.unit() {
            Some(u) => {
                let u = project(u);
                out.clone()
                    .with_unit(u)
                    .unwrap_or_else(|_| out.detect_unit())
            }
            None => out.detect_unit(),
        })
    }

    /// Matrix of the natural projection `A → A / I`.
    pub fn quotient_projection(&self, ideal: &Subspace) -> Result<Matrix> {
        let free = ideal.free_columns();
        let cols = (0..self.dim())
            .map(|j| {
                let r = ideal.reduce(&self.basis_vector(j))?;
                Ok(free.iter().map(|&c| r[c].clone()).collect())
            })
            .collect::<Result<Vec<Vec<Scalar>>>>()?;
        if cols.is_empty() {
            return Ok(Matrix::zeros(self.field(), free.len(), 0));
        }
        Matrix::from_columns(self.field(), free.len(), &cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::FieldSpec;

    fn projection_is_multiplicative(a: &StructureAlgebra, i: &Subspace) {
        let b = a.quotient_by_ideal(i).unwrap();
        let p = a.quotient_projection(i).unwrap();
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                let lhs = p.mul_vec(&a.basis_product_dense(x, y)).unwrap();
                let px = p.mul_vec(&a.basis_vector(x)).unwrap();
                let py = p.mul_vec(&a.basis_vector(y)).unwrap();
                assert_eq!(lhs, b.multiply(&px, &py).unwrap());
            }
        }
    }

    #[test]
    fn trivial_quotients() {
        let q = FieldSpec::rationals();
        let m = StructureAlgebra::matrix_algebra(q, 2);
        let same = m.quotient_by_ideal(&Subspace::zero(q, 4)).unwrap();
        assert_eq!(same.dim(), 4);
        assert_eq!(same.nonzero_products(), m.nonzero_products());
        assert_eq!(m.quotient_by_ideal(&Subspace::full(q, 4)).unwrap().dim(), 0);
        projection_is_multiplicative(&m, &Subspace::zero(q, 4));
    }

    #[test]
    fn dual_numbers_mod_radical() {
        let q = FieldSpec::rationals();
        let a = StructureAlgebra::truncated_polynomial(q, 2);
        let rad = a.jacobson_radical().unwrap();
        let b = a.quotient_by_ideal(&rad).unwrap();
        assert_eq!(b.dim(), 1);
        assert!(b.is_semisimple().unwrap());
        projection_is_multiplicative(&a, &rad);
    }

    #[test]
    fn upper_triangular_mod_radical_is_split() {
        let q = FieldSpec::rationals();
        let a = StructureAlgebra::upper_triangular(q, 3);
        let rad = a.jacobson_radical().unwrap();
        let b = a.quotient_by_ideal(&rad).unwrap();
        assert_eq!(b.dim(), 3);
        assert!(b.jacobson_radical().unwrap().is_zero());
        projection_is_multiplicative(&a, &rad);
    }

    #[test]
    fn non_ideal_is_rejected() {
        let q = FieldSpec::rationals();
        let m = StructureAlgebra::matrix_algebra(q, 2);
        let e11 = Subspace::span(q, 4, vec![m.basis_vector(0)]).unwrap();
        assert!(matches!(
            m.quotient_by_ideal(&e11),
            Err(Error::Precondition(_))
        ));
    }
}
