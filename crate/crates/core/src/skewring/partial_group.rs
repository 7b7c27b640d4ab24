//! Partial group algebras through Exel's semigroup.

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::FieldSpec;
use crate::groupoid::{FiniteGroupoid, Mor};

/// Largest group order accepted; the semigroup has `Σ_{A∋e} |A|` elements.
const MAX_ORDER: usize = 8;

/// Elements `(A, g)` with `{e, g} ⊆ A ⊆ G` and product
/// `(A, g)(B, h) = (A ∪ gB, gh)`. Subsets are bitmasks over group elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupTable {
    pub elements: Vec<(u32, Mor)>,
    pub product: Vec<Vec<usize>>,
    labels: Vec<String>,
}

impl SemigroupTable {
    pub fn new(group: &FiniteGroupoid) -> Result<Self> {
        if group.object_count() != 1 {
            return Err(Error::NotAGroup(format!(
                "{} objects",
                group.object_count()
            )));
        }
        let n = group.morphism_count();
        if n > MAX_ORDER {
            return Err(Error::Unsupported(format!(
                "partial group algebra of a group of order {n} (at most {MAX_ORDER})"
            )));
        }
        let e = group.identity(0);
        let mut elements = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask & (1 << e) == 0 {
                continue;
            }
            for g in 0..n {
                if mask & (1 << g) != 0 {
                    elements.push((mask, g));
                }
            }
        }
        let index = |x: (u32, Mor)| elements.iter().position(|&y| y == x).expect("closed");
        let translate = |g: Mor, b: u32| {
            (0..n).filter(|&h| b & (1 << h) != 0).fold(0u32, |acc, h| {
                acc | 1 << group.compose(g, h).expect("group")
            })
        };
        let product = elements
            .iter()
            .map(|&(a, g)| {
                elements
                    .iter()
                    .map(|&(b, h)| {
                        index((a | translate(g, b), group.compose(g, h).expect("group")))
                    })
                    .collect()
            })
            .collect();
        let labels = elements
            .iter()
            .map(|&(a, g)| {
                let set: Vec<&str> = (0..n)
                    .filter(|&h| a & (1 << h) != 0)
                    .map(|h| group.morphism_id(h))
                    .collect();
                format!("({{{}}},{})", set.join(","), group.morphism_id(g))
            })
            .collect();
        Ok(SemigroupTable {
            elements,
            product,
            labels,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Exhaustive check over all triples.
    pub fn is_associative(&self) -> bool {
        let p = &self.product;
        (0..self.len()).all(|x| {
            (0..self.len()).all(|y| (0..self.len()).all(|z| p[p[x][y]][z] == p[x][p[y][z]]))
        })
    }

    /// The semigroup algebra over `field`.
    pub fn algebra(&self, field: FieldSpec) -> Result<StructureAlgebra> {
        StructureAlgebra::from_sparse_fn(field, self.len(), |i, j| {
            vec![(self.product[i][j], field.one())]
        })?
        .with_labels(self.labels.clone())
        .map(StructureAlgebra::detect_unit)
    }
}

/// `K_par[G]` as the semigroup algebra of Exel's semigroup.
pub fn build_partial_group_algebra(
    group: &FiniteGroupoid,
    field: FieldSpec,
) -> Result<(StructureAlgebra, SemigroupTable)> {
    let table = SemigroupTable::new(group)?;
    Ok((table.algebra(field)?, table))
}
