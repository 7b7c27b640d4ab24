//! Jacobson radical of finite-dimensional associative algebras.
//!
//! Characteristic 0 uses the kernel of the trace form `tr(L_{xy})`. In
//! characteristic `p` the trace form is only reliable for `p > dim`, so the
//! radical is computed by the iterated trace functionals
//! `gᵢ(x) = (Tr(x̂^{pⁱ}) mod p^{i+1}) / pⁱ` on integer lifts, for
//! `i = 0, …, ⌊log_p N⌋`, which coincides with the trace form when `p > N`.

use super::StructureAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{vector, EchelonBuilder, Matrix, Scalar, Subspace};

impl StructureAlgebra {
    /// The unitization `K·1 ⊕ A`, with `1` as basis vector 0.
    pub fn unitization(&self) -> StructureAlgebra {
        let n = self.dim();
        let f = self.field();
        let mut u = StructureAlgebra::from_sparse_fn(f, n + 1, |i, j| match (i, j) {
            (0, 0) => vec![(0, f.one())],
            (0, j) => vec![(j, f.one())],
            (i, 0) => vec![(i, f.one())],
            (i, j) => self
                .basis_product(i - 1, j - 1)
                .iter()
                .map(|(k, c)| (k + 1, c.clone()))
                .collect(),
        })
        .expect("indices are in range");
        u.unit = Some(vector::unit(f, n + 1, 0));
        u.labels = std::iter::once("1".to_string())
            .chain(self.labels().iter().cloned())
            .collect();
        u
    }

    /// The Jacobson radical. Non-unital algebras are handled through their
    /// unitization, whose radical is the same.
    pub fn jacobson_radical(&self) -> Result<Subspace> {
        if !self.is_associative() {
            return Err(Error::Unsupported(
                "Jacobson radical requires an associative algebra".into(),
            ));
        }
        let n = self.dim();
        if n == 0 {
            return Ok(Subspace::zero(self.field(), 0));
        }
        if self.find_unit().is_none() {
            let u = self.unitization();
            let r = u.unital_radical()?;
            let vs = r.basis().iter().map(|v| v[1..].to_vec()).collect();
            return Subspace::span(self.field(), n, vs);
        }
        self.unital_radical()
    }

    fn unital_radical(&self) -> Result<Subspace> {
        let candidate = if self.field().is_rational() {
            self.trace_form_kernel()
        } else {
            self.modular_radical()?
        };
        self.largest_ideal_within(&candidate)
    }

    /// Kernel of `T(bᵢ, bⱼ) = tr(L_{bᵢbⱼ}) = Σ_m c_{ij}^m tr(L_{b_m})`.
    fn trace_form_kernel(&self) -> Subspace {
        let n = self.dim();
        let f = self.field();
        let traces: Vec<Scalar> = (0..n).map(|m| self.coefficient_trace(m)).collect();
        let rows: Vec<Vec<Scalar>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| {
                        let mut t = f.zero();
                        for (m, c) in self.basis_product(i, j) {
                            t += &(c * &traces[*m]);
                        }
                        t
                    })
                    .collect()
            })
            .collect();
        Matrix::from_rows(f, n, rows).expect("square").kernel()
    }

    /// `tr(L_{b_m}) = Σⱼ c_{mj}^j`.
    fn coefficient_trace(&self, m: usize) -> Scalar {
        let mut t = self.field().zero();
        for j in 0..self.dim() {
            t += &self.coefficient(m, j, j);
        }
        t
    }

    fn modular_radical(&self) -> Result<Subspace> {
        let f = self.field();
        let n = self.dim();
        let p = f.characteristic() as u64;
        let mut levels = 0u32;
        while (p as u128).pow(levels + 1) <= n as u128 {
            levels += 1;
        }
        let lifts: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let l = self
                    .left_multiplication(&self.basis_vector(i))
                    .expect("basis length");
                lift(&l)
            })
            .collect();
        let mut current = Subspace::full(f, n);
        for i in 0..=levels {
            if current.is_zero() {
                break;
            }
            let modulus = p.pow(i + 1);
            let step = p.pow(i);
            let exponent = p.pow(i);
            let basis = current.basis().to_vec();
            let mut constraints = EchelonBuilder::new(f, basis.len());
            for j in 0..n {
                let row: Vec<Scalar> = basis
                    .iter()
                    .map(|u| {
                        let xy = self.mul(u, &self.basis_vector(j));
                        let m = combine_lifts(&lifts, &xy, p);
                        let t = int_matrix_power_trace(&m, exponent, modulus);
                        debug_assert_eq!(t % step, 0, "trace functional is not p-divisible");
                        f.from_i64(((t / step) % p) as i64)
                    })
                    .collect();
                constraints.insert(&row)?;
            }
            let coeffs = constraints.finish().annihilator();
            let vs = coeffs
                .basis()
                .iter()
                .map(|c| current.from_coordinates(c))
                .collect::<Result<Vec<_>>>()?;
            current = Subspace::span(f, n, vs)?;
        }
        Ok(current)
    }
}

/// Entries of an 𝔽_p matrix as residues in `[0, p)`, row-major.
fn lift(m: &Matrix) -> Vec<u64> {
    (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .map(|(i, j)| m[(i, j)].as_residue().expect("modular entry") as u64)
        .collect()
}

/// Canonical integer lift of `L_x` for `x = Σ xᵢ bᵢ`, entries in `[0, p)`.
fn combine_lifts(lifts: &[Vec<u64>], x: &[Scalar], p: u64) -> Vec<u64> {
    let len = lifts.first().map_or(0, Vec::len);
    let mut out = vec![0u64; len];
    for (xi, l) in x.iter().zip(lifts) {
        let c = xi.as_residue().expect("modular coefficient") as u64;
        if c == 0 {
            continue;
        }
        for (o, &e) in out.iter_mut().zip(l) {
            *o = (*o + c * e) % p;
        }
    }
    out
}

/// `Tr(M^e) mod modulus` for a square integer matrix given row-major.
fn int_matrix_power_trace(m: &[u64], mut e: u64, modulus: u64) -> u64 {
    let n = (m.len() as f64).sqrt() as usize;
    debug_assert_eq!(n * n, m.len());
    let mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
        let mut c = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = a[i * n + k] as u128;
                if aik == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = c[i * n + j] as u128 + aik * b[k * n + j] as u128;
                    c[i * n + j] = (v % modulus as u128) as u64;
                }
            }
        }
        c
    };
    let mut acc: Vec<u64> = (0..n * n)
        .map(|t| u64::from(t / n == t % n) % modulus)
        .collect();
    let mut base = m.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    (0..n).fold(0u64, |t, i| (t + acc[i * n + i]) % modulus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::FieldSpec;

    fn group_algebra(field: FieldSpec, n: usize) -> StructureAlgebra {
        StructureAlgebra::from_sparse_fn(field, n, |i, j| vec![((i + j) % n, field.one())])
            .unwrap()
            .detect_unit()
    }

    /// x ∈ rad(A) iff y·x is nilpotent for every y; enumerates all of A.
    fn brute_force_radical(a: &StructureAlgebra) -> Subspace {
        let f = a.field();
        let p = f.characteristic() as usize;
        let n = a.dim();
        let elements: Vec<Vec<Scalar>> = (0..p.pow(n as u32))
            .map(|mut t| {
                (0..n)
                    .map(|_| {
                        let d = t % p;
                        t /= p;
                        f.from_i64(d as i64)
                    })
                    .collect()
            })
            .collect();
        let nilpotent = |z: &Vec<Scalar>| vector::is_zero(&a.power(z, n + 1));
        let members: Vec<Vec<Scalar>> = elements
            .iter()
            .filter(|x| elements.iter().all(|y| nilpotent(&a.mul(y, x))))
            .cloned()
            .collect();
        Subspace::span(f, n, members).unwrap()
    }

    #[test]
    fn rational_examples() {
        let q = FieldSpec::rationals();
        assert!(StructureAlgebra::matrix_algebra(q, 2)
            .jacobson_radical()
            .unwrap()
            .is_zero());
        let x = StructureAlgebra::truncated_polynomial(q, 2);
        let r = x.jacobson_radical().unwrap();
        assert_eq!(
            r,
            Subspace::span(q, 2, vec![vector::from_i64(q, &[0, 1])]).unwrap()
        );
        assert!(group_algebra(q, 2).jacobson_radical().unwrap().is_zero());
    }

    #[test]
    fn non_unital_algebras_use_the_unitization() {
        let q = FieldSpec::rationals();
        let z = StructureAlgebra::zero_algebra(q, 2);
        assert!(z.jacobson_radical().unwrap().is_full());
    }

    #[test]
    fn non_associative_input_is_unsupported() {
        let q = FieldSpec::rationals();
        // b0·b0 = b1, everything else zero except b1·b0 = b0: (b0 b0) b0 ≠ b0 (b0 b0).
        let a = StructureAlgebra::from_entries(
            q,
            2,
            vec![
                (0, 0, vector::from_i64(q, &[0, 1])),
                (1, 0, vector::from_i64(q, &[1, 0])),
            ],
        )
        .unwrap();
        assert!(matches!(a.jacobson_radical(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn modular_matches_brute_force() {
        for (p, n) in [(2u32, 2usize), (2, 4), (3, 3), (3, 2), (5, 3)] {
            let f = FieldSpec::prime(p).unwrap();
            let a = group_algebra(f, n);
            assert_eq!(
                a.jacobson_radical().unwrap(),
                brute_force_radical(&a),
                "F_{p}[Z/{n}]"
            );
        }
        let f2 = FieldSpec::prime(2).unwrap();
        for a in [
            StructureAlgebra::upper_triangular(f2, 2),
            StructureAlgebra::truncated_polynomial(f2, 3),
            StructureAlgebra::matrix_algebra(f2, 2),
        ] {
            assert_eq!(a.jacobson_radical().unwrap(), brute_force_radical(&a));
        }
    }
}
