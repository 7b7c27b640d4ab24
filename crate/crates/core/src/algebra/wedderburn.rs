//! Splitting a semisimple algebra into simple blocks by central idempotents.

use std::collections::VecDeque;

use super::StructureAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{poly, vector, Matrix, Scalar, Subspace};

/// Central idempotents and the two-sided ideals they cut out. When `split`
/// is false, some centre factor has no base-field splitting and the
/// corresponding block may be a sum of simple algebras
/// (irreducible-over-field).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedderburnDecomposition {
    pub idempotents: Vec<Vec<Scalar>>,
    pub blocks: Vec<Subspace>,
    /// Per block: whether its centre is one-dimensional.
    pub block_split: Vec<bool>,
}

impl WedderburnDecomposition {
    pub fn split(&self) -> bool {
        self.block_split.iter().all(|&b| b)
    }

    /// Block dimensions in increasing order.
    pub fn block_dims(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.blocks.iter().map(Subspace::dim).collect();
        d.sort_unstable();
        d
    }
}

impl StructureAlgebra {
    /// Minimal polynomial of `z` inside `eA`, with `e` acting as the unit.
    /// Coefficients lowest degree first; monic.
    pub fn minimal_polynomial(&self, z: &[Scalar], e: &[Scalar]) -> Result<Vec<Scalar>> {
        let f = self.field();
        let n = self.dim();
        let mut powers = vec![e.to_vec()];
        loop {
            let next = self.mul(z, powers.last().expect("nonempty"));
            let m = Matrix::from_columns(f, n, &powers)?;
            if let Some(c) = m.solve(&next)? {
                let mut p: Vec<Scalar> = c.iter().map(|x| -x).collect();
                p.push(f.one());
                return Ok(p);
            }
            if powers.len() > n {
                return Err(Error::Precondition(
                    "element has no minimal polynomial over e".into(),
                ));
            }
            powers.push(next);
        }
    }

    /// `p(z)` computed in `eA` with `e` as the unit.
    fn eval_poly(&self, p: &[Scalar], z: &[Scalar], e: &[Scalar]) -> Vec<Scalar> {
        let mut acc = vector::zeros(self.field(), self.dim());
        for c in p.iter().rev() {
            acc = self.mul(z, &acc);
            vector::add_scaled(&mut acc, c, e);
        }
        acc
    }

    /// Attempts to split the central idempotent `e` using `z ∈ eZ`:
    /// for each base-field root λ of the minimal polynomial `m`,
    /// `e_λ = h(z)/h(λ)` with `h = m/(x−λ)`; any remainder `e − Σ e_λ`
    /// is kept as its own piece.
    fn split_with(&self, e: &[Scalar], z: &[Scalar]) -> Result<Option<Vec<Vec<Scalar>>>> {
        let mp = self.minimal_polynomial(z, e)?;
        if poly::degree(&mp).unwrap_or(0) < 2 {
            return Ok(None);
        }
        let roots = poly::roots(self.field(), &mp).unwrap_or_default();
        if roots.is_empty() {
            return Ok(None);
        }
        let mut pieces = Vec::new();
        let mut rest = e.to_vec();
        for r in &roots {
            let h = poly::div_linear(&mp, r);
            let scale = poly::eval(&h, r)
                .inv()
                .expect("minimal polynomial of a semisimple centre is squarefree");
            let idem = vector::scale(&scale, &self.eval_poly(&h, z, e));
            rest = vector::sub(&rest, &idem);
            pieces.push(idem);
        }
        if !vector::is_zero(&rest) {
            pieces.push(rest);
        }
        Ok((pieces.len() >= 2).then_some(pieces))
    }

    /// Simple blocks of a semisimple algebra, found by splitting the centre
    /// with base-field roots of minimal polynomials.
    pub fn wedderburn_blocks(&self) -> Result<WedderburnDecomposition> {
        if !self.is_semisimple()? {
            return Err(Error::Precondition("algebra is not semisimple".into()));
        }
        let f = self.field();
        let unit = self.find_unit().expect("semisimple algebras are unital");
        let center = self.center();
        let mut pending = VecDeque::from([unit]);
        let mut done: Vec<(Vec<Scalar>, bool)> = Vec::new();
        while let Some(e) = pending.pop_front() {
            let ez = Subspace::span(
                f,
                self.dim(),
                center.basis().iter().map(|z| self.mul(&e, z)).collect(),
            )?;
            if ez.dim() <= 1 {
                done.push((e, true));
                continue;
            }
            let mut candidates: Vec<Vec<Scalar>> = ez.basis().to_vec();
            let base = ez.basis();
            for i in 0..base.len() {
                for j in i + 1..base.len() {
                    for c in 1..=3 {
                        let mut v = base[i].clone();
                        vector::add_scaled(&mut v, &f.from_i64(c), &base[j]);
                        candidates.push(v);
                    }
                }
            }
            let mut split = None;
            for z in &candidates {
                if let Some(pieces) = self.split_with(&e, z)? {
                    split = Some(pieces);
                    break;
                }
            }
            match split {
                Some(pieces) => pending.extend(pieces),
                None => done.push((e, false)),
            }
        }
        let mut idempotents = Vec::new();
        let mut blocks = Vec::new();
        let mut block_split = Vec::new();
        for (e, ok) in done {
            let vs = (0..self.dim())
                .map(|i| self.mul(&e, &self.basis_vector(i)))
                .collect();
            blocks.push(Subspace::span(f, self.dim(), vs)?);
            idempotents.push(e);
            block_split.push(ok);
        }
        Ok(WedderburnDecomposition {
            idempotents,
            blocks,
            block_split,
        })
    }
}
