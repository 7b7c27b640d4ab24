use super::matrix::Matrix;
use super::scalar::{FieldSpec, Scalar};
use super::vector;
use crate::error::{Error, Result};

/// An ordered, linearly independent family of vectors with fast coordinate
/// extraction. Unlike [`Subspace`](super::Subspace), the basis is kept
/// exactly as given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    field: FieldSpec,
    ambient_dim: usize,
    vectors: Vec<Vec<Scalar>>,
    /// Rows of the ambient space on which the family restricts to an
    /// invertible square matrix.
    rows: Vec<usize>,
    inverse: Matrix,
}

impl Frame {
    pub fn new(field: FieldSpec, ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self> {
        let k = vectors.len();
        if k == 0 {
            return Ok(Frame {
                field,
                ambient_dim,
                vectors,
                rows: Vec::new(),
                inverse: Matrix::zeros(field, 0, 0),
            });
        }
        let rows_matrix = Matrix::from_rows(field, ambient_dim, vectors.clone())?;
        let red = rows_matrix.rref();
        if red.rank < k {
            return Err(Error::Precondition(
                "frame vectors are linearly dependent".into(),
            ));
        }
        let rows = red.pivots.clone();
        let square: Vec<Vec<Scalar>> = vectors
            .iter()
            .map(|v| rows.iter().map(|&r| v[r].clone()).collect())
            .collect();
        // square[i][j] = vᵢ[rⱼ]; coordinates c solve Σ cᵢ vᵢ[rⱼ] = w[rⱼ].
        let inverse = Matrix::from_rows(field, k, square)?
            .transpose()
            .inverse()
            .expect("pivot rows give an invertible minor");
        Ok(Frame {
            field,
            ambient_dim,
            vectors,
            rows,
            inverse,
        })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<Scalar>] {
        &self.vectors
    }

    /// Coordinates of `w` in the frame, or `None` if `w` is outside its span.
    pub fn coordinates(&self, w: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if w.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: w.len(),
            });
        }
        if self.vectors.is_empty() {
            return Ok(vector::is_zero(w).then(Vec::new));
        }
        let sub: Vec<Scalar> = self.rows.iter().map(|&r| w[r].clone()).collect();
        let c = self.inverse.mul_vec(&sub)?;
        if self.combine(&c) != w {
            return Ok(None);
        }
        Ok(Some(c))
    }

    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        vector::combine(self.field, self.ambient_dim, coords, &self.vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinates_in_a_skewed_basis() {
        let q = FieldSpec::rationals();
        let f = Frame::new(
            q,
            3,
            vec![
                vector::from_i64(q, &[1, 1, 0]),
                vector::from_i64(q, &[0, 1, 1]),
            ],
        )
        .unwrap();
        let w = vector::from_i64(q, &[2, 5, 3]);
        assert_eq!(
            f.coordinates(&w).unwrap(),
            Some(vector::from_i64(q, &[2, 3]))
        );
        assert_eq!(
            f.coordinates(&vector::from_i64(q, &[1, 0, 0])).unwrap(),
            None
        );
        assert!(Frame::new(
            q,
            2,
            vec![vector::from_i64(q, &[1, 2]), vector::from_i64(q, &[2, 4])]
        )
        .is_err());
    }
}
