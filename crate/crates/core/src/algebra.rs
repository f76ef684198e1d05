//! Finite-dimensional associative unital algebras given by structure
//! constants `b_i b_j = Σ_k c[i][j][k] b_k`.

use std::fmt;
use std::ops::Deref;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldDesc, Scalar};
use crate::linalg::{self, CoordinateSolver, Matrix, Subspace};

/// Which side a multiplication acts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Right,
    Left,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Right => Side::Left,
            Side::Left => Side::Right,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Right => "right",
            Side::Left => "left",
        })
    }
}

/// A coordinate vector of an algebra element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Element(Vec<Scalar>);

impl Element {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Element(coords)
    }

    pub fn into_vec(self) -> Vec<Scalar> {
        self.0
    }
}

impl Deref for Element {
    type Target = [Scalar];

    fn deref(&self) -> &[Scalar] {
        &self.0
    }
}

impl From<Vec<Scalar>> for Element {
    fn from(v: Vec<Scalar>) -> Self {
        Element(v)
    }
}

/// A product `generator · multiplier` (or `multiplier · generator`) that
/// leaves a subspace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub side: Side,
    /// Index of the algebra basis element used as multiplier.
    pub multiplier: usize,
    /// Index of the subspace basis row.
    pub generator: usize,
    pub generator_vector: Element,
    pub product: Element,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: FieldDesc,
    dim: usize,
    unit: Vec<Scalar>,
    /// Dense `c[i][j][k]` at `(i * n + j) * n + k`.
    table: Vec<Scalar>,
    /// Nonzero entries of `b_i b_j` at `i * n + j`.
    products: Vec<Vec<(usize, Scalar)>>,
    names: Vec<String>,
}

impl Algebra {
    /// Validates and builds an algebra. `constants` is the flattened tensor
    /// `c[i][j][k]`; empty `names` gives the default labels `b0, b1, ...`.
    pub fn build(
        field: FieldDesc,
        dim: usize,
        unit: Vec<Scalar>,
        constants: Vec<Scalar>,
        names: Vec<String>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::BadShape("dimension must be at least 1".into()));
        }
        if unit.len() != dim {
            return Err(Error::BadShape(format!(
                "unit has {} coordinates, expected {dim}",
                unit.len()
            )));
        }
        if constants.len() != dim * dim * dim {
            return Err(Error::BadShape(format!(
                "table has {} entries, expected {}",
                constants.len(),
                dim * dim * dim
            )));
        }
        let names = if names.is_empty() {
            (0..dim).map(|i| format!("b{i}")).collect()
        } else if names.len() != dim {
            return Err(Error::BadShape(format!(
                "{} names for dimension {dim}",
                names.len()
            )));
        } else {
            names
        };
        for x in unit.iter().chain(&constants) {
            field.check(x)?;
        }
        let alg = Algebra::assemble(field, dim, unit, constants, names);
        alg.validate()?;
        Ok(alg)
    }

    fn assemble(
        field: FieldDesc,
        dim: usize,
        unit: Vec<Scalar>,
        table: Vec<Scalar>,
        names: Vec<String>,
    ) -> Self {
        let products = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter(|&k| !field.is_zero(&table[ij * dim + k]))
                    .map(|k| (k, table[ij * dim + k].clone()))
                    .collect()
            })
            .collect();
        Algebra {
            field,
            dim,
            unit,
            table,
            products,
            names,
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            let e = self.basis_element(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(Error::UnitLawFails { index: i });
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let left = self.mul_by_basis(&ij, k, Side::Right);
                    let jk = self.basis_product(j, k);
                    let right = self.mul_by_basis(&jk, i, Side::Left);
                    if left != right {
                        return Err(Error::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Replaces the basis labels.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::BadShape(format!(
                "{} names for dimension {}",
                names.len(),
                self.dim
            )));
        }
        self.names = names;
        Ok(self)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.table[(i * self.dim + j) * self.dim + k]
    }

    /// The flattened tensor `c[i][j][k]`.
    pub fn constants(&self) -> &[Scalar] {
        &self.table
    }

    pub fn zero_element(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis_element(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_element();
        v[i] = self.field.one();
        v
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut v = self.zero_element();
        for (k, c) in &self.products[i * self.dim + j] {
            v[*k] = c.clone();
        }
        v
    }

    /// `u · b_k` (side `Right`) or `b_k · u` (side `Left`).
    pub fn mul_by_basis(&self, u: &[Scalar], k: usize, side: Side) -> Vec<Scalar> {
        let f = self.field;
        let n = self.dim;
        let mut out = self.zero_element();
        for (i, ui) in u.iter().enumerate() {
            if f.is_zero(ui) {
                continue;
            }
            let idx = match side {
                Side::Right => i * n + k,
                Side::Left => k * n + i,
            };
            for (t, c) in &self.products[idx] {
                out[*t] = f.mul_add(&out[*t], ui, c);
            }
        }
        out
    }

    /// Bilinear product through the structure tensor. Panics on length
    /// mismatch; see [`Algebra::multiply`] for the checked form.
    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        assert!(u.len() == self.dim && v.len() == self.dim, "element length");
        let f = self.field;
        let n = self.dim;
        let mut out = self.zero_element();
        for (i, ui) in u.iter().enumerate() {
            if f.is_zero(ui) {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if f.is_zero(vj) {
                    continue;
                }
                let c = f.mul(ui, vj);
                for (k, s) in &self.products[i * n + j] {
                    out[*k] = f.mul_add(&out[*k], &c, s);
                }
            }
        }
        out
    }

    pub fn multiply(&self, u: &Element, v: &Element) -> Result<Element> {
        for w in [u, v] {
            if w.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: w.len(),
                });
            }
        }
        Ok(Element(self.mul(u, v)))
    }

    pub fn commutator(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        linalg::sub_vec(self.field, &self.mul(u, v), &self.mul(v, u))
    }

    /// Matrix of `x ↦ a x` (side `Left`) or `x ↦ x a` (side `Right`);
    /// column `j` is the image of `b_j`.
    pub fn multiplication_matrix(&self, a: &[Scalar], side: Side) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(self.field, n, n);
        for j in 0..n {
            let col = match side {
                Side::Left => self.mul_by_basis(a, j, Side::Right),
                Side::Right => self.mul_by_basis(a, j, Side::Left),
            };
            for (i, x) in col.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    /// First basis pair `(i, j)`, `i < j`, with `b_i b_j ≠ b_j b_i`.
    pub fn noncommuting_pair(&self) -> Option<(usize, usize)> {
        (0..self.dim)
            .flat_map(|i| (i + 1..self.dim).map(move |j| (i, j)))
            .find(|&(i, j)| self.basis_product(i, j) != self.basis_product(j, i))
    }

    pub fn is_commutative(&self) -> bool {
        self.noncommuting_pair().is_none()
    }

    /// First violation of closure of `s` under multiplication by basis
    /// elements on `side`, scanning subspace rows then basis indices.
    pub fn closure_violation(&self, s: &Subspace, side: Side) -> Option<Violation> {
        for (g, row) in s.basis().iter().enumerate() {
            for k in 0..self.dim {
                let prod = self.mul_by_basis(row, k, side);
                if !s.contains(&prod) {
                    return Some(Violation {
                        side,
                        multiplier: k,
                        generator: g,
                        generator_vector: Element(row.clone()),
                        product: Element(prod),
                    });
                }
            }
        }
        None
    }

    /// `span{ s b : s ∈ S, b ∈ A }` (side `Right`) or `span{ b s }`.
    pub fn subspace_times_algebra(&self, s: &Subspace, side: Side) -> Subspace {
        let mut out = Subspace::zero(self.field, self.dim);
        for row in s.basis() {
            for k in 0..self.dim {
                out.insert(&self.mul_by_basis(row, k, side));
            }
        }
        out
    }

    /// `span{ s t : s ∈ S, t ∈ T }`.
    pub fn subspace_product(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let mut out = Subspace::zero(self.field, self.dim);
        for u in s.basis() {
            for v in t.basis() {
                out.insert(&self.mul(u, v));
            }
        }
        out
    }

    /// The principal one-sided ideal `aA` (side `Right`) or `Aa`.
    pub fn principal(&self, a: &[Scalar], side: Side) -> Subspace {
        let mut out = Subspace::zero(self.field, self.dim);
        for k in 0..self.dim {
            out.insert(&self.mul_by_basis(a, k, side));
        }
        out
    }

    /// Number of elements (finite fields only).
    pub fn element_count(&self) -> Result<u64> {
        self.field.vector_count(self.dim)
    }

    /// All `p^n` elements in the fixed enumeration order: index `i` maps to
    /// the base-`p` digits of `i`, least significant digit in coordinate 0.
    pub fn elements(&self) -> Result<ElementStream> {
        let total = self.element_count()?;
        Ok(ElementStream {
            field: self.field,
            dim: self.dim,
            next: 0,
            total,
        })
    }

    pub fn element_at(&self, index: u64) -> Vec<Scalar> {
        linalg::vector_at(self.field, self.dim, index)
    }

    /// Human-readable linear combination of basis labels.
    pub fn format_element(&self, v: &[Scalar]) -> String {
        let f = self.field;
        let terms: Vec<String> = v
            .iter()
            .zip(&self.names)
            .filter(|(c, _)| !f.is_zero(c))
            .map(|(c, name)| {
                if f.is_one(c) {
                    name.clone()
                } else {
                    format!("{c}*{name}")
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    pub fn format_subspace(&self, s: &Subspace) -> String {
        let rows: Vec<String> = s.basis().iter().map(|v| self.format_element(v)).collect();
        format!("span{{{}}}", rows.join(", "))
    }

    /// Parses `0`, `Ec + Ef`, `2*Ea + -1*Eb`, `-Eb` or a coordinate tuple
    /// `(1,0,2)`.
    pub fn parse_element(&self, text: &str) -> Result<Vec<Scalar>> {
        let f = self.field;
        let t = text.trim();
        let bad = |msg: String| Error::Usage(format!("element `{text}`: {msg}"));
        if let Some(inner) = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
            let coords = inner
                .split(',')
                .map(|c| f.parse(c))
                .collect::<Result<Vec<_>>>()?;
            if coords.len() != self.dim {
                return Err(bad(format!("expected {} coordinates", self.dim)));
            }
            return Ok(coords);
        }
        let mut out = self.zero_element();
        if t == "0" {
            return Ok(out);
        }
        for term in t.split('+') {
            let term = term.trim();
            let (coef, name) = match term.rsplit_once('*') {
                Some((c, n)) => (f.parse(c)?, n.trim()),
                None => match term.strip_prefix('-') {
                    Some(n) => (f.from_i64(-1), n.trim()),
                    None => (f.one(), term),
                },
            };
            let idx = self
                .index_of(name)
                .ok_or_else(|| bad(format!("unknown basis label `{name}`")))?;
            out[idx] = f.add(&out[idx], &coef);
        }
        Ok(out)
    }

    /// `A / I` for a proper two-sided ideal `I`, on coset representatives
    /// supported on the non-pivot coordinates of `I`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(Algebra, Projection)> {
        if ideal.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch {
                left: self.dim,
                right: ideal.ambient_dim(),
            });
        }
        if self.closure_violation(ideal, Side::Right).is_some()
            || self.closure_violation(ideal, Side::Left).is_some()
        {
            return Err(Error::NotAnIdeal("two-sided"));
        }
        if ideal.is_full() {
            return Err(Error::ImproperIdeal);
        }
        let proj = Projection {
            ideal: ideal.clone(),
            complement: ideal.complement_coordinates(),
        };
        let m = proj.complement.len();
        let mut table = Vec::with_capacity(m * m * m);
        for &c in &proj.complement {
            for &d in &proj.complement {
                table.extend(proj.apply(&self.basis_product(c, d)));
            }
        }
        let names = proj
            .complement
            .iter()
            .map(|&c| self.names[c].clone())
            .collect();
        let unit = proj.apply(&self.unit);
        let q = Algebra::build(self.field, m, unit, table, names)?;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = proj.apply(&self.basis_product(i, j));
                let rhs = q.mul(
                    &proj.apply(&self.basis_element(i)),
                    &proj.apply(&self.basis_element(j)),
                );
                if lhs != rhs {
                    return Err(Error::CertificateFailed(format!(
                        "projection not multiplicative on basis pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok((q, proj))
    }
}

/// The quotient map `A → A/I` in coset-representative coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    ideal: Subspace,
    complement: Vec<usize>,
}

impl Projection {
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.ideal.reduce(v);
        self.complement.iter().map(|&c| r[c].clone()).collect()
    }

    /// The coset representative supported on the complement coordinates.
    pub fn lift(&self, q: &[Scalar]) -> Vec<Scalar> {
        let f = self.ideal.field();
        let mut v = vec![f.zero(); self.ideal.ambient_dim()];
        for (&c, x) in self.complement.iter().zip(q) {
            v[c] = x.clone();
        }
        v
    }

    /// Preimage of a subspace of the quotient: `I + lift(T)`.
    pub fn preimage(&self, t: &Subspace) -> Subspace {
        let mut out = self.ideal.clone();
        for row in t.basis() {
            out.insert(&self.lift(row));
        }
        out
    }

    pub fn kernel(&self) -> &Subspace {
        &self.ideal
    }

    pub fn complement_coordinates(&self) -> &[usize] {
        &self.complement
    }
}

/// Deterministic stream over all elements of an algebra over `F_p`.
#[derive(Clone, Debug)]
pub struct ElementStream {
    field: FieldDesc,
    dim: usize,
    next: u64,
    total: u64,
}

impl Iterator for ElementStream {
    type Item = Vec<Scalar>;

    fn next(&mut self) -> Option<Vec<Scalar>> {
        (self.next < self.total).then(|| {
            self.next += 1;
            linalg::vector_at(self.field, self.dim, self.next - 1)
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for ElementStream {}

/// Coordinate of `b_i x^deg` in `A[x]/(x^m)`.
pub fn truncated_index(base_dim: usize, i: usize, deg: usize) -> usize {
    deg * base_dim + i
}

/// `A[x]/(x^m)`, basis `b_i x^j` at coordinate `j * n + i`.
pub fn truncated_polynomial_algebra(a: &Algebra, m: usize) -> Result<Algebra> {
    if m < 2 {
        return Err(Error::BadShape("truncation order must be at least 2".into()));
    }
    let n = a.dim;
    let big = n * m;
    let f = a.field;
    let mut table = vec![f.zero(); big * big * big];
    for j in 0..m {
        for l in 0..m - j {
            for i in 0..n {
                for k in 0..n {
                    let row = truncated_index(n, i, j);
                    let col = truncated_index(n, k, l);
                    for (t, c) in &a.products[i * n + k] {
                        table[(row * big + col) * big + truncated_index(n, *t, j + l)] =
                            c.clone();
                    }
                }
            }
        }
    }
    let mut unit = vec![f.zero(); big];
    unit[..n].clone_from_slice(&a.unit);
    let names = (0..m)
        .flat_map(|j| {
            a.names.iter().map(move |name| match j {
                0 => name.clone(),
                1 => format!("{name}x"),
                _ => format!("{name}x^{j}"),
            })
        })
        .collect();
    Algebra::build(f, big, unit, table, names)
}

/// Basis matrices realizing an algebra as a subalgebra of `M_k(F)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRepresentation {
    pub size: usize,
    pub basis: Vec<Matrix>,
    /// For each basis matrix, the index of the input matrix it came from;
    /// `None` for products added during closure.
    pub source: Vec<Option<usize>>,
}

impl MatrixRepresentation {
    pub fn to_matrix(&self, v: &[Scalar]) -> Matrix {
        let f = self.basis[0].field();
        let mut flat = vec![f.zero(); self.size * self.size];
        for (c, m) in v.iter().zip(&self.basis) {
            linalg::axpy(f, &mut flat, c, m.entries());
        }
        let rows = flat.chunks(self.size).map(|r| r.to_vec()).collect();
        Matrix::from_rows(f, self.size, rows).expect("square")
    }
}

/// The subalgebra of `M_size(F)` spanned by `matrices`. Inputs dependent on
/// earlier ones are skipped. Without `autoclose` every basis product must lie
/// in the span; with it, products are added until the span is closed.
pub fn from_matrix_basis(
    field: FieldDesc,
    size: usize,
    matrices: &[Matrix],
    autoclose: bool,
) -> Result<(Algebra, MatrixRepresentation)> {
    let ambient = size * size;
    let mut span = Subspace::zero(field, ambient);
    let mut basis: Vec<Matrix> = Vec::new();
    let mut source = Vec::new();
    for (idx, m) in matrices.iter().enumerate() {
        if m.rows() != size || m.cols() != size {
            return Err(Error::BadShape(format!(
                "matrix {idx} is {}x{}, expected {size}x{size}",
                m.rows(),
                m.cols()
            )));
        }
        if m.field() != field {
            return Err(Error::MixedFields);
        }
        if span.insert(m.entries()) {
            basis.push(m.clone());
            source.push(Some(idx));
        }
    }
    if basis.is_empty() {
        return Err(Error::NoUnit);
    }
    loop {
        let mut grew = false;
        let count = basis.len();
        'pairs: for i in 0..count {
            for j in 0..count {
                let prod = basis[i].mul(&basis[j])?;
                if span.contains(prod.entries()) {
                    continue;
                }
                if !autoclose {
                    return Err(Error::NotClosed { i, j });
                }
                span.insert(prod.entries());
                basis.push(prod);
                source.push(None);
                grew = true;
                if basis.len() == ambient {
                    break 'pairs;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let gens: Vec<Vec<Scalar>> = basis.iter().map(Matrix::vectorize).collect();
    let solver = CoordinateSolver::new(field, ambient, &gens)?;
    let unit = solver
        .solve(Matrix::identity(field, size).entries())
        .ok_or(Error::NoUnit)?;
    let n = basis.len();
    let mut table = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            let prod = basis[i].mul(&basis[j])?;
            let coords = solver
                .solve(prod.entries())
                .ok_or(Error::NotClosed { i, j })?;
            table.extend(coords);
        }
    }
    let alg = Algebra::build(field, n, unit, table, Vec::new())?;
    Ok((
        alg,
        MatrixRepresentation {
            size,
            basis,
            source,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldDesc {
        FieldDesc::prime(2).unwrap()
    }

    fn dual_numbers(f: FieldDesc) -> Algebra {
        // b0 = 1, b1 = t, t^2 = 0
        let mut t = vec![f.zero(); 8];
        t[0] = f.one(); // b0 b0 -> b0
        t[2 + 1] = f.one(); // b0 b1 -> b1
        t[4 + 1] = f.one(); // b1 b0 -> b1
        Algebra::build(f, 2, vec![f.one(), f.zero()], t, vec!["1".into(), "t".into()]).unwrap()
    }

    #[test]
    fn build_examples() {
        let f = f2();
        let field_alg = Algebra::build(f, 1, vec![f.one()], vec![f.one()], vec![]).unwrap();
        assert_eq!(field_alg.names(), ["b0"]);
        assert!(matches!(
            Algebra::build(f, 1, vec![f.zero()], vec![f.one()], vec![]),
            Err(Error::UnitLawFails { index: 0 })
        ));
        assert!(dual_numbers(f).is_commutative());
        assert!(matches!(
            Algebra::build(f, 2, vec![f.one()], vec![f.zero(); 8], vec![]),
            Err(Error::BadShape(_))
        ));
    }

    #[test]
    fn non_associative_rejected() {
        // e0 unit, e1 e1 = e2, e2 e1 = e0 but e1 e2 = 0: (e1 e1) e1 = e0 ≠ e1 (e1 e1) = 0.
        let f = f2();
        let n = 3;
        let mut t = vec![f.zero(); 27];
        let mut set = |i: usize, j: usize, k: usize| t[(i * n + j) * n + k] = f.one();
        for i in 0..3 {
            set(0, i, i);
            set(i, 0, i);
        }
        set(1, 1, 2);
        set(2, 1, 0);
        let unit = vec![f.one(), f.zero(), f.zero()];
        assert!(matches!(
            Algebra::build(f, 3, unit, t, vec![]),
            Err(Error::NotAssociative { i: 1, j: 1, k: 1 })
        ));
    }

    #[test]
    fn matrix_basis_examples() {
        let f = f2();
        let e12 = Matrix::from_ints(f, &[[0, 1], [0, 0]]);
        let (a, rep) = from_matrix_basis(f, 2, &[Matrix::identity(f, 2), e12.clone()], false).unwrap();
        assert_eq!(a.dim(), 2);
        assert!(linalg::is_zero_vec(f, &a.mul(&a.basis_element(1), &a.basis_element(1))));
        assert_eq!(rep.to_matrix(a.unit()), Matrix::identity(f, 2));
        assert!(matches!(
            from_matrix_basis(f, 2, &[e12.clone()], true),
            Err(Error::NoUnit)
        ));
        let e21 = Matrix::from_ints(f, &[[0, 0], [1, 0]]);
        assert!(matches!(
            from_matrix_basis(f, 2, &[Matrix::identity(f, 2), e12.clone(), e21.clone()], false),
            Err(Error::NotClosed { .. })
        ));
        let (full, _) = from_matrix_basis(f, 2, &[Matrix::identity(f, 2), e12, e21], true).unwrap();
        assert_eq!(full.dim(), 4);
    }

    #[test]
    fn enumeration() {
        let f = f2();
        let a = dual_numbers(f);
        let all: Vec<_> = a.elements().unwrap().collect();
        let ints = |v: [i64; 2]| v.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        assert_eq!(all, vec![ints([0, 0]), ints([1, 0]), ints([0, 1]), ints([1, 1])]);
        let q = dual_numbers(FieldDesc::rationals());
        assert!(matches!(q.elements(), Err(Error::InfiniteField)));
    }

    #[test]
    fn truncation() {
        let f = f2();
        let a = dual_numbers(f);
        let r = truncated_polynomial_algebra(&a, 2).unwrap();
        assert_eq!(r.dim(), 4);
        let x = r.basis_element(truncated_index(2, 0, 1));
        assert!(linalg::is_zero_vec(f, &r.mul(&x, &x)));
        assert!(r.is_commutative());
        assert!(truncated_polynomial_algebra(&a, 1).is_err());
    }

    #[test]
    fn quotient_by_zero_is_copy() {
        let f = f2();
        let a = dual_numbers(f);
        let (q, proj) = a.quotient(&Subspace::zero(f, 2)).unwrap();
        assert_eq!(q, a);
        assert_eq!(proj.apply(&a.basis_element(1)), a.basis_element(1));
        assert!(matches!(a.quotient(&Subspace::full(f, 2)), Err(Error::ImproperIdeal)));
    }

    #[test]
    fn element_text() {
        let f = FieldDesc::prime(3).unwrap();
        let a = dual_numbers(f);
        let v = a.parse_element("2*1 + t").unwrap();
        assert_eq!(a.format_element(&v), "2*1 + t");
        assert_eq!(a.parse_element("-t").unwrap(), a.parse_element("2*t").unwrap());
        assert_eq!(a.parse_element("(0,1)").unwrap(), a.basis_element(1));
        assert!(a.parse_element("s").is_err());
        assert_eq!(a.format_element(&a.zero_element()), "0");
    }

    #[test]
    fn multiply_checks_length() {
        let f = f2();
        let a = dual_numbers(f);
        let short = Element::new(vec![f.one()]);
        let ok = Element::new(a.unit().to_vec());
        assert!(matches!(
            a.multiply(&short, &ok),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        ));
        assert_eq!(a.multiply(&ok, &ok).unwrap(), ok);
    }
}
