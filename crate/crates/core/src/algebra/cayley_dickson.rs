//! Cayley–Dickson doubling.

use super::StructureAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{vector, FieldSpec, Scalar};

impl StructureAlgebra {
    /// Conjugate of `x` under the attached involution.
    pub fn conjugate(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        let inv = self
            .involution()
            .ok_or_else(|| Error::Unsupported("algebra has no conjugation".into()))?;
        Ok(vector::combine(self.field(), self.dim(), x, inv))
    }

    /// `A ⊕ A` with `(a,b)(c,d) = (ac − d̄b, da + bc̄)` and conjugation
    /// `(a,b)‾ = (ā, −b)`.
    pub fn cayley_dickson_double(&self) -> Result<StructureAlgebra> {
        let unit = self
            .unit()
            .ok_or_else(|| Error::Unsupported("doubling needs a unital algebra".into()))?
            .to_vec();
        let bar: Vec<Vec<Scalar>> = self
            .involution()
            .ok_or_else(|| Error::Unsupported("doubling needs a conjugation involution".into()))?
            .to_vec();
        let n = self.dim();
        let f = self.field();
        let e = |i: usize| self.basis_vector(i);
        let embed = |v: Vec<Scalar>, second: bool| {
            let mut out = vector::zeros(f, 2 * n);
            let off = if second { n } else { 0 };
            for (k, c) in v.into_iter().enumerate() {
                out[off + k] = c;
            }
            out
        };
        let doubled = StructureAlgebra::from_fn(f, 2 * n, |i, j| match (i < n, j < n) {
            (true, true) => embed(self.mul(&e(i), &e(j)), false),
            (true, false) => embed(self.mul(&e(j - n), &e(i)), true),
            (false, true) => embed(self.mul(&e(i - n), &bar[j]), true),
            (false, false) => {
                let p = self.mul(&bar[j - n], &e(i - n));
                embed(p.iter().map(|x| -x).collect(), false)
            }
        })?;
        let involution = (0..2 * n)
            .map(|i| {
                if i < n {
                    embed(bar[i].clone(), false)
                } else {
                    embed(vector::scale(&-f.one(), &e(i - n)), true)
                }
            })
            .collect();
        let mut out = doubled.with_involution(involution)?;
        out.unit = Some(embed(unit, false));
        out.labels = (0..2 * n).map(|i| format!("e{i}")).collect();
        Ok(out)
    }

    /// `steps` successive doublings of the base field: dimensions
    /// 2, 4, 8, 16 give the complex-like field, quaternions, octonions and
    /// sedenions.
    pub fn cayley_dickson(field: FieldSpec, steps: usize) -> Result<StructureAlgebra> {
        let mut a = StructureAlgebra::base_field(field);
        for _ in 0..steps {
            a = a.cayley_dickson_double()?;
        }
        Ok(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent recursive product on nested coordinate vectors.
    fn cd_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        if a.len() == 1 {
            return vec![a[0] * b[0]];
        }
        let h = a.len() / 2;
        let (a1, a2) = a.split_at(h);
        let (c1, c2) = b.split_at(h);
        let neg = |v: Vec<i64>| v.into_iter().map(|x| -x).collect::<Vec<_>>();
        let add =
            |x: Vec<i64>, y: Vec<i64>| x.iter().zip(&y).map(|(p, q)| p + q).collect::<Vec<_>>();
        let first = add(cd_mul(a1, c1), neg(cd_mul(&cd_conj(c2), a2)));
        let second = add(cd_mul(c2, a1), cd_mul(a2, &cd_conj(c1)));
        first.into_iter().chain(second).collect()
    }

    fn cd_conj(a: &[i64]) -> Vec<i64> {
        if a.len() == 1 {
            return a.to_vec();
        }
        let h = a.len() / 2;
        cd_conj(&a[..h])
            .into_iter()
            .chain(a[h..].iter().map(|x| -x))
            .collect()
    }

    #[test]
    fn matches_recursive_oracle() {
        let q = FieldSpec::rationals();
        for steps in 1..=4 {
            let a = StructureAlgebra::cayley_dickson(q, steps).unwrap();
            let n = a.dim();
            assert_eq!(n, 1 << steps);
            for i in 0..n {
                for j in 0..n {
                    let mut x = vec![0; n];
                    let mut y = vec![0; n];
                    x[i] = 1;
                    y[j] = 1;
                    let expected = vector::from_i64(q, &cd_mul(&x, &y));
                    assert_eq!(
                        a.basis_product_dense(i, j),
                        expected,
                        "e{i}·e{j} in dim {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn imaginary_units_anticommute_in_octonions() {
        let q = FieldSpec::rationals();
        let o = StructureAlgebra::cayley_dickson(q, 3).unwrap();
        let e1 = o.basis_vector(1);
        let e2 = o.basis_vector(2);
        let a = o.mul(&e1, &e2);
        let b = o.mul(&e2, &e1);
        assert!(!vector::is_zero(&a));
        assert_eq!(a, vector::scale(&-q.one(), &b));
    }

    #[test]
    fn doubling_requires_involution() {
        let q = FieldSpec::rationals();
        let m = StructureAlgebra::matrix_algebra(q, 2);
        assert!(matches!(
            m.cayley_dickson_double(),
            Err(Error::Unsupported(_))
        ));
    }
}
