use std::fmt;

use super::matrix::Matrix;
use super::scalar::{FieldSpec, Scalar};
use super::vector;
use crate::error::{Error, Result};

/// A subspace of `K^n`, stored by its reduced row-echelon basis. Two subspaces
/// are equal exactly when their RREF bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| vector::unit(field, ambient_dim, i))
            .collect();
        Subspace {
            field,
            ambient_dim,
            basis,
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of arbitrary vectors of length `ambient_dim`.
    pub fn span(field: FieldSpec, ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self> {
        if vectors.is_empty() {
            return Ok(Self::zero(field, ambient_dim));
        }
        let m = Matrix::from_rows(field, ambient_dim, vectors)?;
        let red = m.rref();
        let basis = (0..red.rank).map(|i| red.matrix.row(i).to_vec()).collect();
        Ok(Subspace {
            field,
            ambient_dim,
            basis,
            pivots: red.pivots,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    /// RREF basis rows.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Standard coordinates not used as pivots; the corresponding unit vectors
    /// span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient_dim)
            .filter(|c| self.pivots.binary_search(c).is_err())
            .collect()
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: n,
            });
        }
        Ok(())
    }

    /// `v` minus its component along this subspace, with respect to the
    /// complement spanned by the free columns. Zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_len(v.len())?;
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            vector::add_scaled(&mut r, &-&c, row);
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(vector::is_zero(&self.reduce(v)?))
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// `Σ cᵢ bᵢ` over the RREF basis.
    pub fn from_coordinates(&self, coords: &[Scalar]) -> Result<Vec<Scalar>> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: coords.len(),
            });
        }
        Ok(vector::combine(
            self.field,
            self.ambient_dim,
            coords,
            &self.basis,
        ))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient_dim)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.ambient_dim, rows)
    }

    /// Adds vectors to the span.
    pub fn extend(&self, vectors: Vec<Vec<Scalar>>) -> Result<Subspace> {
        let mut rows = self.basis.clone();
        for v in vectors {
            self.check_len(v.len())?;
            if !vector::is_zero(&v) {
                rows.push(v);
            }
        }
        Subspace::span(self.field, self.ambient_dim, rows)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient_dim)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient_dim));
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        if self.is_full() {
            return Ok(other.clone());
        }
        // Columns a₁..a_k, -b₁..-b_l; kernel vectors (λ, μ) give Σ λᵢ aᵢ = Σ μⱼ bⱼ.
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().map(|b| b.iter().map(|x| -x).collect()));
        let m = Matrix::from_columns(self.field, self.ambient_dim, &cols)?;
        let k = self.dim();
        let vectors = m
            .kernel()
            .basis()
            .iter()
            .map(|lm| vector::combine(self.field, self.ambient_dim, &lm[..k], &self.basis))
            .collect();
        Subspace::span(self.field, self.ambient_dim, vectors)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_len(other.ambient_dim)?;
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The annihilator `{x : ⟨b, x⟩ = 0 for every basis row b}`.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.field, self.ambient_dim);
        }
        Matrix::from_rows(self.field, self.ambient_dim, self.basis.clone())
            .expect("basis rows have ambient length")
            .kernel()
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, map: &Matrix) -> Result<Subspace> {
        let vs = self
            .basis
            .iter()
            .map(|b| map.mul_vec(b))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(self.field, map.rows(), vs)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|b| {
                let xs: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("({})", xs.join(","))
            })
            .collect();
        write!(
            f,
            "span{{{}}} ⊆ {}^{}",
            rows.join(", "),
            self.field,
            self.ambient_dim
        )
    }
}

/// Incrementally grows a spanning set kept in row-echelon form. Cheaper than
/// repeated [`Subspace::span`] calls when vectors arrive one at a time.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    field: FieldSpec,
    ambient_dim: usize,
    /// Rows with leading entry 1, sorted by pivot.
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl EchelonBuilder {
    pub fn new(field: FieldSpec, ambient_dim: usize) -> Self {
        EchelonBuilder {
            field,
            ambient_dim,
            rows: Vec::new(),
        }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        EchelonBuilder {
            field: s.field,
            ambient_dim: s.ambient_dim,
            rows: s
                .pivots
                .iter()
                .copied()
                .zip(s.basis.iter().cloned())
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient_dim
    }

    fn reduce(&self, v: &mut [Scalar]) {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let c = -&v[*p];
                vector::add_scaled(v, &c, row);
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        let mut r = v.to_vec();
        self.reduce(&mut r);
        Ok(vector::is_zero(&r))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        if self.is_full() {
            return Ok(false);
        }
        let mut r = v.to_vec();
        self.reduce(&mut r);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = r[p].inv().expect("nonzero pivot");
        let r = vector::scale(&inv, &r);
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, r));
        Ok(true)
    }

    pub fn finish(self) -> Subspace {
        if self.rows.is_empty() {
            return Subspace::zero(self.field, self.ambient_dim);
        }
        Subspace::span(
            self.field,
            self.ambient_dim,
            self.rows.into_iter().map(|(_, r)| r).collect(),
        )
        .expect("rows have ambient length")
    }
}
