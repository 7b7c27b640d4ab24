//! Finite-dimensional, possibly non-associative algebras given by structure
//! constants.

mod analysis;
mod cayley_dickson;
mod radical;
mod wedderburn;

pub use analysis::{AnalysisReport, Semisimplicity};
pub use wedderburn::WedderburnDecomposition;

use crate::error::{Error, Result};
use crate::exactlin::{vector, EchelonBuilder, FieldSpec, Matrix, Scalar, Subspace};
use crate::groupoid::{FiniteGroupoid, Mor};

/// One structure-constant entry: `bᵢ·bⱼ = Σ c_k b_k` stored as `(k, c_k)`
/// with nonzero coefficients in increasing `k`.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Side for ideal closures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// Degree of each basis vector in a groupoid grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub groupoid: FiniteGroupoid,
    pub degrees: Vec<Mor>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureAlgebra {
    field: FieldSpec,
    dim: usize,
    table: Vec<SparseVec>,
    unit: Option<Vec<Scalar>>,
    labels: Vec<String>,
    grading: Option<Grading>,
    /// Images of the basis under a conjugation involution.
    involution: Option<Vec<Vec<Scalar>>>,
}

fn sparsify(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

impl StructureAlgebra {
    /// Builds from a dense product rule: `f(i, j)` is the coordinate vector
    /// of `bᵢ·bⱼ`.
    pub fn from_fn(
        field: FieldSpec,
        dim: usize,
        mut f: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> Result<Self> {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                if v.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: v.len(),
                    });
                }
                table.push(sparsify(&v));
            }
        }
        Ok(Self::with_table(field, dim, table))
    }

    /// Builds from a sparse product rule; repeated indices are summed.
    pub fn from_sparse_fn(
        field: FieldSpec,
        dim: usize,
        mut f: impl FnMut(usize, usize) -> Vec<(usize, Scalar)>,
    ) -> Result<Self> {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let mut v = vector::zeros(field, dim);
                for (k, c) in f(i, j) {
                    if k >= dim {
                        return Err(Error::DimensionMismatch {
                            expected: dim,
                            found: k + 1,
                        });
                    }
                    v[k] += &c;
                }
                table.push(sparsify(&v));
            }
        }
        Ok(Self::with_table(field, dim, table))
    }

    /// Builds from listed products; unlisted pairs multiply to zero.
    pub fn from_entries(
        field: FieldSpec,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, Vec<Scalar>)>,
    ) -> Result<Self> {
        let mut dense: Vec<Option<Vec<Scalar>>> = vec![None; dim * dim];
        for (i, j, v) in entries {
            if i >= dim || j >= dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: i.max(j) + 1,
                });
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
            if dense[i * dim + j].is_some() {
                return Err(Error::Parse(format!("product ({i}, {j}) listed twice")));
            }
            dense[i * dim + j] = Some(v);
        }
        let table = dense
            .into_iter()
            .map(|v| v.map(|v| sparsify(&v)).unwrap_or_default())
            .collect();
        Ok(Self::with_table(field, dim, table))
    }

    fn with_table(field: FieldSpec, dim: usize, table: Vec<SparseVec>) -> Self {
        StructureAlgebra {
            field,
            dim,
            table,
            unit: None,
            labels: (0..dim).map(|i| format!("b{i}")).collect(),
            grading: None,
            involution: None,
        }
    }

    /// The algebra with all products zero.
    pub fn zero_algebra(field: FieldSpec, dim: usize) -> Self {
        Self::with_table(field, dim, vec![Vec::new(); dim * dim])
    }

    /// The base field as a one-dimensional algebra, with the identity as
    /// conjugation.
    pub fn base_field(field: FieldSpec) -> Self {
        let mut a = Self::with_table(field, 1, vec![vec![(0, field.one())]]);
        a.unit = Some(vec![field.one()]);
        a.labels = vec!["1".into()];
        a.involution = Some(vec![vec![field.one()]]);
        a
    }

    /// `M_n(K)` on matrix units `E_ij`, ordered row-major.
    pub fn matrix_algebra(field: FieldSpec, n: usize) -> Self {
        let dim = n * n;
        let table = (0..dim)
            .flat_map(|a| (0..dim).map(move |b| (a, b)))
            .map(|(a, b)| {
                let (i, j) = (a / n, a % n);
                let (k, l) = (b / n, b % n);
                if j == k {
                    vec![(i * n + l, field.one())]
                } else {
                    Vec::new()
                }
            })
            .collect();
        let mut m = Self::with_table(field, dim, table);
        let mut unit = vector::zeros(field, dim);
        for i in 0..n {
            unit[i * n + i] = field.one();
        }
        m.unit = Some(unit);
        m.labels = (0..dim)
            .map(|a| format!("E{}{}", a / n + 1, a % n + 1))
            .collect();
        m
    }

    /// `K[x]/(xⁿ)` on the basis `1, x, …, x^{n-1}`.
    pub fn truncated_polynomial(field: FieldSpec, n: usize) -> Self {
        let table = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| {
                if i + j < n {
                    vec![(i + j, field.one())]
                } else {
                    Vec::new()
                }
            })
            .collect();
        let mut a = Self::with_table(field, n, table);
        if n > 0 {
            a.unit = Some(vector::unit(field, n, 0));
        }
        a.labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        a
    }

    /// Upper-triangular `n × n` matrices on the units `E_ij`, `i ≤ j`.
    pub fn upper_triangular(field: FieldSpec, n: usize) -> Self {
        let units: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let index =
            |i: usize, j: usize| units.iter().position(|&u| u == (i, j)).expect("upper unit");
        let dim = units.len();
        let mut table = Vec::with_capacity(dim * dim);
        for &(i, j) in &units {
            for &(k, l) in &units {
                table.push(if j == k {
                    vec![(index(i, l), field.one())]
                } else {
                    Vec::new()
                });
            }
        }
        let mut a = Self::with_table(field, dim, table);
        let mut unit = vector::zeros(field, dim);
        for i in 0..n {
            unit[index(i, i)] = field.one();
        }
        a.unit = Some(unit);
        a.labels = units
            .iter()
            .map(|&(i, j)| format!("E{}{}", i + 1, j + 1))
            .collect();
        a
    }

    /// Direct product `A₁ × … × A_k` with concatenated bases.
    pub fn direct_product(factors: &[&StructureAlgebra]) -> Result<Self> {
        let field = factors
            .first()
            .map(|a| a.field)
            .ok_or_else(|| Error::EmptyInput("direct product of no algebras".into()))?;
        if let Some(a) = factors.iter().find(|a| a.field != field) {
            return Err(Error::FieldMismatch(field.to_string(), a.field.to_string()));
        }
        let dim: usize = factors.iter().map(|a| a.dim).sum();
        let mut offsets = Vec::new();
        let mut off = 0;
        for a in factors {
            offsets.push(off);
            off += a.dim;
        }
        let owner: Vec<(usize, usize)> = factors
            .iter()
            .enumerate()
            .flat_map(|(f, a)| (0..a.dim).map(move |i| (f, i)))
            .collect();
        let mut table = Vec::with_capacity(dim * dim);
        for &(fa, i) in &owner {
            for &(fb, j) in &owner {
                if fa != fb {
                    table.push(Vec::new());
                } else {
                    let o = offsets[fa];
                    table.push(
                        factors[fa]
                            .basis_product(i, j)
                            .iter()
                            .map(|(k, c)| (k + o, c.clone()))
                            .collect(),
                    );
                }
            }
        }
        let mut out = Self::with_table(field, dim, table);
        if factors.iter().all(|a| a.unit.is_some()) {
            out.unit = Some(
                factors
                    .iter()
                    .flat_map(|a| a.unit.clone().unwrap())
                    .collect(),
            );
        }
        out.labels = factors
            .iter()
            .enumerate()
            .flat_map(|(f, a)| a.labels.iter().map(move |l| format!("{l}[{f}]")))
            .collect();
        Ok(out)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    /// Records `unit` after checking that it is a two-sided identity.
    pub fn with_unit(mut self, unit: Vec<Scalar>) -> Result<Self> {
        self.check_len(unit.len())?;
        for j in 0..self.dim {
            let b = vector::unit(self.field, self.dim, j);
            if self.mul(&unit, &b) != b || self.mul(&b, &unit) != b {
                return Err(Error::Precondition(format!(
                    "given unit does not fix basis vector {}",
                    self.labels[j]
                )));
            }
        }
        self.unit = Some(unit);
        Ok(self)
    }

    /// Records the unit found by [`find_unit`](Self::find_unit), if any.
    pub fn detect_unit(mut self) -> Self {
        self.unit = self.find_unit();
        self
    }

    pub fn with_grading(mut self, grading: Grading) -> Result<Self> {
        if grading.degrees.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: grading.degrees.len(),
            });
        }
        if let Some(&g) = grading
            .degrees
            .iter()
            .find(|&&g| g >= grading.groupoid.morphism_count())
        {
            return Err(Error::Lookup {
                kind: "morphism",
                id: g.to_string(),
            });
        }
        self.grading = Some(grading);
        Ok(self)
    }

    /// Attaches a conjugation; `images[i]` is the conjugate of `bᵢ`.
    pub fn with_involution(mut self, images: Vec<Vec<Scalar>>) -> Result<Self> {
        if images.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: images.len(),
            });
        }
        for v in &images {
            self.check_len(v.len())?;
        }
        self.involution = Some(images);
        Ok(self)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> Option<&[Scalar]> {
        self.unit.as_deref()
    }

    pub fn grading(&self) -> Option<&Grading> {
        self.grading.as_ref()
    }

    pub fn involution(&self) -> Option<&[Vec<Scalar>]> {
        self.involution.as_deref()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        vector::unit(self.field, self.dim, i)
    }

    /// Nonzero coordinates of `bᵢ·bⱼ`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim + j]
    }

    pub fn basis_product_dense(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut v = vector::zeros(self.field, self.dim);
        for (k, c) in self.basis_product(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: n,
            });
        }
        Ok(())
    }

    /// Bilinear product; errors on length mismatch.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        Ok(self.mul(x, y))
    }

    /// Bilinear product on vectors already known to have length `dim`.
    pub(crate) fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zeros(self.field, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let entries = self.basis_product(i, j);
                if entries.is_empty() {
                    continue;
                }
                let c = xi * yj;
                for (k, s) in entries {
                    out[*k] += &(&c * s);
                }
            }
        }
        out
    }

    /// `bᵢ·y`.
    fn mul_basis_left(&self, i: usize, y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zeros(self.field, self.dim);
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            for (k, s) in self.basis_product(i, j) {
                out[*k] += &(yj * s);
            }
        }
        out
    }

    /// `x·bⱼ`.
    fn mul_basis_right(&self, x: &[Scalar], j: usize) -> Vec<Scalar> {
        let mut out = vector::zeros(self.field, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (k, s) in self.basis_product(i, j) {
                out[*k] += &(xi * s);
            }
        }
        out
    }

    /// Matrix of `y ↦ x·y` acting on column vectors.
    pub fn left_multiplication(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_len(x.len())?;
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul_basis_right(x, j)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `y ↦ y·x` acting on column vectors.
    pub fn right_multiplication(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_len(x.len())?;
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|i| self.mul_basis_left(i, x)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// `xⁿ` with left-normed products `x(x(…x))`, `n ≥ 1`.
    pub fn power(&self, x: &[Scalar], n: usize) -> Vec<Scalar> {
        let mut acc = x.to_vec();
        for _ in 1..n {
            acc = self.mul(x, &acc);
        }
        acc
    }

    /// The two-sided identity, found by solving `u·bⱼ = bⱼ = bⱼ·u`.
    pub fn find_unit(&self) -> Option<Vec<Scalar>> {
        let n = self.dim;
        if n == 0 {
            return Some(Vec::new());
        }
        let mut rows = Vec::with_capacity(2 * n * n);
        let mut rhs = Vec::with_capacity(2 * n * n);
        for j in 0..n {
            for m in 0..n {
                let target = if j == m {
                    self.field.one()
                } else {
                    self.field.zero()
                };
                let left: Vec<Scalar> = (0..n).map(|k| self.coefficient(k, j, m)).collect();
                let right: Vec<Scalar> = (0..n).map(|k| self.coefficient(j, k, m)).collect();
                rows.push(left);
                rhs.push(target.clone());
                rows.push(right);
                rhs.push(target);
            }
        }
        let m = Matrix::from_rows(self.field, n, rows).ok()?;
        m.solve(&rhs).ok().flatten()
    }

    /// Identity element of the subalgebra on `s`, if it has one. The zero
    /// subspace has identity `0`.
    pub fn unit_of_subspace(&self, s: &Subspace) -> Result<Option<Vec<Scalar>>> {
        self.check_len(s.ambient_dim())?;
        let basis = s.basis();
        let k = basis.len();
        if k == 0 {
            return Ok(Some(vector::zeros(self.field, self.dim)));
        }
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for x in basis {
            let lefts: Vec<Vec<Scalar>> = basis.iter().map(|u| self.mul(u, x)).collect();
            let rights: Vec<Vec<Scalar>> = basis.iter().map(|u| self.mul(x, u)).collect();
            for images in [&lefts, &rights] {
                for m in 0..self.dim {
                    rows.push(images.iter().map(|v| v[m].clone()).collect());
                    rhs.push(x[m].clone());
                }
            }
        }
        let m = Matrix::from_rows(self.field, k, rows)?;
        Ok(m.solve(&rhs)?
            .map(|c| s.from_coordinates(&c).expect("coordinate length")))
    }

    /// Coefficient of `b_m` in `bᵢ·bⱼ`.
    pub fn coefficient(&self, i: usize, j: usize, m: usize) -> Scalar {
        self.basis_product(i, j)
            .iter()
            .find(|(k, _)| *k == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    /// `(bᵢbⱼ)b_k − bᵢ(bⱼb_k)`.
    pub fn basis_associator(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let ij = self.basis_product_dense(i, j);
        let jk = self.basis_product_dense(j, k);
        let left = self.mul_basis_right(&ij, k);
        let right = self.mul_basis_left(i, &jk);
        vector::sub(&left, &right)
    }

    /// `(xy)z − x(yz)`.
    pub fn associator(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vec<Scalar>> {
        let xy = self.multiply(x, y)?;
        let yz = self.multiply(y, z)?;
        Ok(vector::sub(&self.mul(&xy, z), &self.mul(x, &yz)))
    }

    /// First basis triple whose associator is nonzero.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !vector::is_zero(&self.basis_associator(i, j, k)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Whether the associator is alternating: on basis triples,
    /// `A(i,j,k) = −A(j,i,k)`, `A(i,j,k) = −A(i,k,j)`, and `A` vanishes when
    /// two adjacent arguments coincide (needed in characteristic 2).
    pub fn is_alternative(&self) -> bool {
        let n = self.dim;
        let assoc: Vec<Vec<Scalar>> = (0..n * n * n)
            .map(|t| self.basis_associator(t / (n * n), (t / n) % n, t % n))
            .collect();
        let at = |i: usize, j: usize, k: usize| &assoc[(i * n + j) * n + k];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let a = at(i, j, k);
                    if vector::add(a, at(j, i, k)).iter().any(|c| !c.is_zero())
                        || vector::add(a, at(i, k, j)).iter().any(|c| !c.is_zero())
                    {
                        return false;
                    }
                }
                if !vector::is_zero(at(i, i, j)) || !vector::is_zero(at(j, i, i)) {
                    return false;
                }
            }
        }
        true
    }

    /// Elements that commute and associate with everything. For associative
    /// algebras only commutation conditions are imposed.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut constraints = EchelonBuilder::new(self.field, n);
        // Each condition is linear in x = Σ x_k b_k: row m of condition
        // collects the b_m-coefficient contributed by each b_k.
        let mut add_condition = |f: &dyn Fn(usize) -> Vec<Scalar>| {
            if constraints.is_full() {
                return;
            }
            let images: Vec<Vec<Scalar>> = (0..n).map(f).collect();
            for m in 0..n {
                let row: Vec<Scalar> = (0..n).map(|k| images[k][m].clone()).collect();
                constraints.insert(&row).expect("row length is dim");
            }
        };
        for r in 0..n {
            add_condition(&|k| {
                vector::sub(
                    &self.basis_product_dense(k, r),
                    &self.basis_product_dense(r, k),
                )
            });
        }
        if !self.is_associative() {
            for r in 0..n {
                for s in 0..n {
                    add_condition(&|k| self.basis_associator(k, r, s));
                    add_condition(&|k| self.basis_associator(r, k, s));
                    add_condition(&|k| self.basis_associator(r, s, k));
                }
            }
        }
        constraints.finish().annihilator()
    }

    /// Smallest subspace containing `seed` and closed under multiplication by
    /// basis vectors on the given side(s).
    pub fn ideal_closure(&self, seed: &Subspace, side: Side) -> Result<Subspace> {
        self.check_len(seed.ambient_dim())?;
        let mut acc = EchelonBuilder::from_subspace(seed);
        let mut queue: Vec<Vec<Scalar>> = seed.basis().to_vec();
        while let Some(v) = queue.pop() {
            if acc.is_full() {
                break;
            }
            for b in 0..self.dim {
                if matches!(side, Side::Left | Side::TwoSided) {
                    let w = self.mul_basis_left(b, &v);
                    if acc.insert(&w)? {
                        queue.push(w);
                    }
                }
                if matches!(side, Side::Right | Side::TwoSided) {
                    let w = self.mul_basis_right(&v, b);
                    if acc.insert(&w)? {
                        queue.push(w);
                    }
                }
            }
        }
        Ok(acc.finish())
    }

    pub fn is_ideal(&self, s: &Subspace, side: Side) -> Result<bool> {
        self.check_len(s.ambient_dim())?;
        for v in s.basis() {
            for b in 0..self.dim {
                if matches!(side, Side::Left | Side::TwoSided)
                    && !s.contains(&self.mul_basis_left(b, v))?
                {
                    return Ok(false);
                }
                if matches!(side, Side::Right | Side::TwoSided)
                    && !s.contains(&self.mul_basis_right(v, b))?
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        self.check_len(s.ambient_dim())?;
        for x in s.basis() {
            for y in s.basis() {
                if !s.contains(&self.mul(x, y))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Largest two-sided ideal contained in `s`:
    /// iterate `S ↦ {x ∈ S : bx, xb ∈ S for every basis b}`.
    pub fn largest_ideal_within(&self, s: &Subspace) -> Result<Subspace> {
        self.check_len(s.ambient_dim())?;
        let mut cur = s.clone();
        loop {
            if cur.is_zero() {
                return Ok(cur);
            }
            // x = Σ cᵢ uᵢ over cur's basis; require b·x and x·b to reduce to zero modulo cur.
            let mut constraints = EchelonBuilder::new(self.field, cur.dim());
            for b in 0..self.dim {
                let lefts: Vec<Vec<Scalar>> = cur
                    .basis()
                    .iter()
                    .map(|u| cur.reduce(&self.mul_basis_left(b, u)))
                    .collect::<Result<_>>()?;
                let rights: Vec<Vec<Scalar>> = cur
                    .basis()
                    .iter()
                    .map(|u| cur.reduce(&self.mul_basis_right(u, b)))
                    .collect::<Result<_>>()?;
                for images in [lefts, rights] {
                    for m in 0..self.dim {
                        let row: Vec<Scalar> = images.iter().map(|v| v[m].clone()).collect();
                        constraints.insert(&row)?;
                    }
                }
            }
            let coeffs = constraints.finish().annihilator();
            if coeffs.dim() == cur.dim() {
                return Ok(cur);
            }
            let vs = coeffs
                .basis()
                .iter()
                .map(|c| cur.from_coordinates(c))
                .collect::<Result<Vec<_>>>()?;
            cur = Subspace::span(self.field, self.dim, vs)?;
        }
    }

    /// The subalgebra on `s`, with basis the RREF basis of `s`. The unit is
    /// detected afresh; grading and involution are dropped.
    pub fn subalgebra(&self, s: &Subspace) -> Result<StructureAlgebra> {
        if !self.is_subalgebra(s)? {
            return Err(Error::Precondition(
                "subspace is not closed under multiplication".into(),
            ));
        }
        let basis = s.basis();
        let k = basis.len();
        let sub = StructureAlgebra::from_fn(self.field, k, |i, j| {
            s.coordinates(&self.mul(&basis[i], &basis[j]))
                .expect("lengths match")
                .expect("closed under products")
        })?;
        Ok(sub.detect_unit())
    }

    /// Checks the grading law: degree-g times degree-h lies in degree gh when
    /// `d(g) = c(h)` and vanishes otherwise. `None` when ungraded.
    pub fn grading_ok(&self) -> Option<bool> {
        let gr = self.grading.as_ref()?;
        let g = &gr.groupoid;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let prod = self.basis_product(i, j);
                let ok = match g.compose(gr.degrees[i], gr.degrees[j]) {
                    None => prod.is_empty(),
                    Some(gh) => prod.iter().all(|(k, _)| gr.degrees[*k] == gh),
                };
                if !ok {
                    return Some(false);
                }
            }
        }
        Some(true)
    }

    /// Nilpotency index of a subspace under products: the least `k` with
    /// `S^k = 0`, searched up to `dim + 1`. Powers are spans of products of
    /// basis vectors of `S^{k-1}` with basis vectors of `S`.
    pub fn nilpotency_index(&self, s: &Subspace) -> Result<Option<usize>> {
        self.check_len(s.ambient_dim())?;
        let mut cur = s.clone();
        for k in 1..=self.dim + 1 {
            if cur.is_zero() {
                return Ok(Some(k));
            }
            let mut next = EchelonBuilder::new(self.field, self.dim);
            for x in cur.basis() {
                for y in s.basis() {
                    next.insert(&self.mul(x, y))?;
                }
            }
            cur = next.finish();
        }
        Ok(None)
    }

    /// Structure constants as `(i, j, dense product)` for nonzero products.
    pub fn nonzero_products(&self) -> Vec<(usize, usize, Vec<Scalar>)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if !self.basis_product(i, j).is_empty() {
                    out.push((i, j, self.basis_product_dense(i, j)));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn v(xs: &[i64]) -> Vec<Scalar> {
        vector::from_i64(q(), xs)
    }

    #[test]
    fn matrix_units_multiply() {
        let m = StructureAlgebra::matrix_algebra(q(), 2);
        assert_eq!(
            m.multiply(&v(&[1, 0, 0, 0]), &v(&[0, 1, 0, 0])).unwrap(),
            v(&[0, 1, 0, 0])
        );
        assert_eq!(
            m.multiply(&v(&[0, 1, 0, 0]), &v(&[1, 0, 0, 0])).unwrap(),
            v(&[0, 0, 0, 0])
        );
        assert!(m.multiply(&v(&[1]), &v(&[1, 0, 0, 0])).is_err());
    }

    #[test]
    fn unit_detection() {
        let m = StructureAlgebra::matrix_algebra(q(), 2);
        assert_eq!(m.find_unit(), Some(v(&[1, 0, 0, 1])));
        assert_eq!(StructureAlgebra::zero_algebra(q(), 1).find_unit(), None);
        let x = StructureAlgebra::truncated_polynomial(q(), 3);
        assert_eq!(x.find_unit().as_deref(), x.unit());
    }

    #[test]
    fn center_of_matrix_algebra_is_scalars() {
        let m = StructureAlgebra::matrix_algebra(q(), 2);
        let z = m.center();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&v(&[1, 0, 0, 1])).unwrap());
        let c = StructureAlgebra::truncated_polynomial(q(), 3);
        assert!(c.center().is_full());
    }

    #[test]
    fn ideal_closures() {
        let p = StructureAlgebra::direct_product(&[
            &StructureAlgebra::base_field(q()),
            &StructureAlgebra::base_field(q()),
        ])
        .unwrap();
        let full = Subspace::full(q(), 2);
        assert_eq!(p.ideal_closure(&full, Side::TwoSided).unwrap(), full);
        let zero = Subspace::zero(q(), 2);
        assert_eq!(p.ideal_closure(&zero, Side::TwoSided).unwrap(), zero);
        let first = Subspace::span(q(), 2, vec![v(&[1, 0])]).unwrap();
        assert_eq!(p.ideal_closure(&first, Side::TwoSided).unwrap(), first);

        let m = StructureAlgebra::matrix_algebra(q(), 2);
        let e11 = Subspace::span(q(), 4, vec![v(&[1, 0, 0, 0])]).unwrap();
        assert_eq!(m.ideal_closure(&e11, Side::Left).unwrap().dim(), 2);
        assert_eq!(m.ideal_closure(&e11, Side::Right).unwrap().dim(), 2);
        assert!(m.ideal_closure(&e11, Side::TwoSided).unwrap().is_full());
    }

    #[test]
    fn largest_ideal_inside_subspace() {
        let t = StructureAlgebra::upper_triangular(q(), 2);
        // Basis E11, E12, E22; the identity is not in any proper ideal.
        let s = Subspace::span(q(), 3, vec![v(&[0, 1, 0]), v(&[1, 0, 1])]).unwrap();
        let i = t.largest_ideal_within(&s).unwrap();
        assert_eq!(i, Subspace::span(q(), 3, vec![v(&[0, 1, 0])]).unwrap());
    }

    #[test]
    fn subalgebra_of_diagonal() {
        let m = StructureAlgebra::matrix_algebra(q(), 2);
        let diag = Subspace::span(q(), 4, vec![v(&[1, 0, 0, 0]), v(&[0, 0, 0, 1])]).unwrap();
        let d = m.subalgebra(&diag).unwrap();
        assert_eq!(d.dim(), 2);
        assert!(d.is_commutative());
        assert_eq!(d.unit(), Some(&v(&[1, 1])[..]));
        let off = Subspace::span(q(), 4, vec![v(&[0, 1, 0, 0]), v(&[0, 0, 1, 0])]).unwrap();
        assert!(m.subalgebra(&off).is_err());
    }

    #[test]
    fn nilpotency() {
        let x = StructureAlgebra::truncated_polynomial(q(), 3);
        let rad = Subspace::span(q(), 3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(x.nilpotency_index(&rad).unwrap(), Some(3));
        assert_eq!(x.nilpotency_index(&Subspace::full(q(), 3)).unwrap(), None);
    }
}
