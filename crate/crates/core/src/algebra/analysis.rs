//! Summary report over an algebra.

use std::fmt;

use super::StructureAlgebra;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Semisimplicity {
    Semisimple,
    NotSemisimple,
    /// Non-associative input: semisimplicity is not decided.
    Undecided,
}

impl fmt::Display for Semisimplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Semisimplicity::Semisimple => "true",
            Semisimplicity::NotSemisimple => "false",
            Semisimplicity::Undecided => "undecided",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub dim: usize,
    pub unital: bool,
    pub associative: bool,
    pub alternative: bool,
    pub commutative: bool,
    pub center_dim: usize,
    /// `None` for non-associative algebras.
    pub radical_dim: Option<usize>,
    pub semisimple: Semisimplicity,
    /// Sorted block dimensions, present when semisimple.
    pub blocks: Option<Vec<usize>>,
    /// Whether every block has a one-dimensional centre.
    pub blocks_split: Option<bool>,
    pub grading_ok: Option<bool>,
}

impl StructureAlgebra {
    /// Unital, associative and with zero radical. Errors on non-associative
    /// input.
    pub fn is_semisimple(&self) -> Result<bool> {
        let rad = self.jacobson_radical()?;
        Ok(rad.is_zero() && (self.unit().is_some() || self.find_unit().is_some()))
    }

    pub fn analyze(&self) -> Result<AnalysisReport> {
        let associative = self.is_associative();
        let alternative = associative || self.is_alternative();
        let unital = self.unit().is_some() || self.find_unit().is_some();
        let (radical_dim, semisimple) = if associative {
            let r = self.jacobson_radical()?;
            let s = if r.is_zero() && unital {
                Semisimplicity::Semisimple
            } else {
                Semisimplicity::NotSemisimple
            };
            (Some(r.dim()), s)
        } else {
            (None, Semisimplicity::Undecided)
        };
        let (blocks, blocks_split) = if semisimple == Semisimplicity::Semisimple {
            let w = self.wedderburn_blocks()?;
            (Some(w.block_dims()), Some(w.split()))
        } else {
            (None, None)
        };
        Ok(AnalysisReport {
            dim: self.dim(),
            unital,
            associative,
            alternative,
            commutative: self.is_commutative(),
            center_dim: self.center().dim(),
            radical_dim,
            semisimple,
            blocks,
            blocks_split,
            grading_ok: self.grading_ok(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::FieldSpec;

    #[test]
    fn reports() {
        let q = FieldSpec::rationals();
        let m = StructureAlgebra::matrix_algebra(q, 3).analyze().unwrap();
        assert_eq!(m.semisimple, Semisimplicity::Semisimple);
        assert_eq!(m.blocks, Some(vec![9]));
        assert_eq!(m.center_dim, 1);

        let x = StructureAlgebra::truncated_polynomial(q, 2)
            .analyze()
            .unwrap();
        assert_eq!(x.semisimple, Semisimplicity::NotSemisimple);
        assert_eq!(x.radical_dim, Some(1));

        let o = StructureAlgebra::cayley_dickson(q, 3)
            .unwrap()
            .analyze()
            .unwrap();
        assert!(!o.associative && o.alternative);
        assert_eq!(o.semisimple, Semisimplicity::Undecided);
        assert_eq!(o.center_dim, 1);
    }

    #[test]
    fn small_characteristic_group_algebra() {
        let f2 = FieldSpec::prime(2).unwrap();
        let a = StructureAlgebra::from_sparse_fn(f2, 2, |i, j| vec![((i + j) % 2, f2.one())])
            .unwrap()
            .detect_unit();
        assert!(!a.is_semisimple().unwrap());
    }
}
