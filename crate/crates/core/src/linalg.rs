//! Dense exact linear algebra: Gauss-Jordan elimination, kernels and the
//! lattice of subspaces of `F^n`.
//!
//! Vectors are plain `[Scalar]` slices. A [`Subspace`] keeps its basis in
//! reduced row echelon form, so two subspaces are equal exactly when their
//! representations are.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::{FieldDesc, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldDesc,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldDesc, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldDesc, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows, all of length `cols`.
    pub fn from_rows(field: FieldDesc, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n_rows = rows.len();
        let mut entries = Vec::with_capacity(n_rows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for x in &row {
                field.check(x)?;
            }
            entries.extend(row);
        }
        Ok(Matrix {
            field,
            rows: n_rows,
            cols,
            entries,
        })
    }

    /// Integer-entry convenience constructor; entries are reduced into `field`.
    pub fn from_ints<R: AsRef<[i64]>>(field: FieldDesc, rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let data = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(field, cols, data).expect("rectangular integer matrix")
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.mul_add(out.get(i, j), a, other.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.mul_add(&acc, a, b))
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| self.field.is_zero(x))
    }

    pub fn trace(&self) -> Scalar {
        let f = self.field;
        (0..self.rows.min(self.cols)).fold(f.zero(), |acc, i| f.add(&acc, self.get(i, i)))
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Row-major vectorization.
    pub fn vectorize(&self) -> Vec<Scalar> {
        self.entries.clone()
    }
}

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    /// Nonzero rows of the reduced row echelon form.
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Reduced row echelon form with first-nonzero pivoting in row order.
pub fn rref(m: &Matrix) -> Echelon {
    let f = m.field;
    let mut rows = m.row_vecs();
    let pivots = eliminate(f, &mut rows, m.cols);
    rows.truncate(pivots.len());
    let rank = pivots.len();
    Echelon {
        matrix: Matrix::from_rows(f, m.cols, rows).expect("shape preserved"),
        rank,
        pivots,
    }
}

/// In-place Gauss-Jordan on `rows`; returns pivot columns. The first
/// `pivots.len()` rows hold the reduced basis afterwards, the rest are zero.
fn eliminate(f: FieldDesc, rows: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(src) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, src);
        let inv = f.inv(&rows[r][c]).expect("pivot is nonzero");
        if !f.is_one(&inv) {
            for x in rows[r].iter_mut() {
                *x = f.mul(x, &inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || f.is_zero(&row[c]) {
                continue;
            }
            let factor = f.neg(&row[c]);
            axpy(f, row, &factor, &pivot_row);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// `acc += a * x`.
pub fn axpy(f: FieldDesc, acc: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    if f.is_zero(a) {
        return;
    }
    for (y, xi) in acc.iter_mut().zip(x) {
        if !f.is_zero(xi) {
            *y = f.mul_add(y, a, xi);
        }
    }
}

pub fn is_zero_vec(f: FieldDesc, v: &[Scalar]) -> bool {
    v.iter().all(|x| f.is_zero(x))
}

pub fn scale_vec(f: FieldDesc, a: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| f.mul(a, x)).collect()
}

pub fn add_vec(f: FieldDesc, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    u.iter().zip(v).map(|(a, b)| f.add(a, b)).collect()
}

pub fn sub_vec(f: FieldDesc, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    u.iter().zip(v).map(|(a, b)| f.sub(a, b)).collect()
}

/// The `index`-th vector of `F_p^dim`: base-p digits of `index`, least
/// significant digit in coordinate 0.
pub fn vector_at(f: FieldDesc, dim: usize, mut index: u64) -> Vec<Scalar> {
    let p = f.modulus().expect("enumeration needs a prime field") as u64;
    (0..dim)
        .map(|_| {
            let d = index % p;
            index /= p;
            f.digit(d)
        })
        .collect()
}

/// `{v : m v = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let f = m.field;
    let ech = rref(m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let mut vectors = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![f.zero(); m.cols];
        v[free] = f.one();
        for (i, &p) in ech.pivots.iter().enumerate() {
            v[p] = f.neg(ech.matrix.get(i, free));
        }
        vectors.push(v);
    }
    Subspace::from_rows(f, m.cols, vectors)
}

/// A subspace of `F^n` with a canonical RREF basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldDesc,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldDesc, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldDesc, ambient: usize) -> Self {
        Subspace::from_rows(field, ambient, Matrix::identity(field, ambient).row_vecs())
    }

    /// Span of `vectors`, each of length `ambient`.
    pub fn span<V: AsRef<[Scalar]>>(
        field: FieldDesc,
        ambient: usize,
        vectors: impl IntoIterator<Item = V>,
    ) -> Result<Self> {
        let mut rows = Vec::new();
        for v in vectors {
            let v = v.as_ref();
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
            rows.push(v.to_vec());
        }
        Ok(Subspace::from_rows(field, ambient, rows))
    }

    fn from_rows(field: FieldDesc, ambient: usize, mut rows: Vec<Vec<Scalar>>) -> Self {
        let pivots = eliminate(field, &mut rows, ambient);
        rows.truncate(pivots.len());
        Subspace {
            field,
            ambient,
            basis: rows,
            pivots,
        }
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient, self.basis.clone()).expect("basis shape")
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; the unit vectors on them span a
    /// complement.
    pub fn complement_coordinates(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Residue of `v` modulo the subspace: zero in every pivot coordinate.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector length");
        let f = self.field;
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !f.is_zero(&out[p]) {
                let factor = f.neg(&out[p]);
                axpy(f, &mut out, &factor, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(self.field, &self.reduce(v))
    }

    /// Coefficients of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.contains(v)
            .then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// `Σ coeffs[k] * basis[k]`.
    pub fn combine(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut out = vec![f.zero(); self.ambient];
        for (c, row) in coeffs.iter().zip(&self.basis) {
            axpy(f, &mut out, c, row);
        }
        out
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let f = self.field;
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&r[p]).expect("nonzero");
        for x in r.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for row in self.basis.iter_mut() {
            if !f.is_zero(&row[p]) {
                let factor = f.neg(&row[p]);
                axpy(f, row, &factor, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, r);
        true
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for v in &other.basis {
            out.insert(v);
        }
        Ok(out)
    }

    /// Intersection via the kernel of the relation system `Σ α u = Σ β v`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let f = self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(f, self.ambient));
        }
        let r = self.dim();
        let s = other.dim();
        let mut system = Matrix::zeros(f, self.ambient, r + s);
        for i in 0..self.ambient {
            for (k, u) in self.basis.iter().enumerate() {
                system.set(i, k, u[i].clone());
            }
            for (k, v) in other.basis.iter().enumerate() {
                system.set(i, r + k, f.neg(&v[i]));
            }
        }
        let rel = kernel(&system);
        let vectors = rel.basis.iter().map(|c| self.combine(&c[..r]));
        Ok(Subspace::from_rows(f, self.ambient, vectors.collect()))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    /// Number of vectors in the subspace (finite fields only).
    pub fn element_count(&self) -> Result<u64> {
        self.field.vector_count(self.dim())
    }

    /// The `index`-th element: the basis combined with coefficient vector
    /// `vector_at(index)`.
    pub fn element_at(&self, index: u64) -> Vec<Scalar> {
        self.combine(&vector_at(self.field, self.dim(), index))
    }

    /// Number of cosets `F^n / self` (finite fields only).
    pub fn coset_count(&self) -> Result<u64> {
        self.field.vector_count(self.ambient - self.dim())
    }

    /// The `index`-th coset representative, supported on the complement
    /// coordinates. Index 0 is the zero coset.
    pub fn coset_rep_at(&self, index: u64) -> Vec<Scalar> {
        let free = self.complement_coordinates();
        let digits = vector_at(self.field, free.len(), index);
        let mut v = vec![self.field.zero(); self.ambient];
        for (c, d) in free.into_iter().zip(digits) {
            v[c] = d;
        }
        v
    }
}

/// Reports show a subspace as its canonical basis rows.
impl serde::Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Subspace", 2)?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("basis", &self.basis)?;
        st.end()
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    /// Lexicographic on the canonical basis rows.
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient
            .cmp(&other.ambient)
            .then_with(|| self.basis.cmp(&other.basis))
    }
}

/// Solves for coordinates with respect to a fixed list of independent
/// generators (not necessarily in echelon form).
#[derive(Clone, Debug)]
pub struct CoordinateSolver {
    field: FieldDesc,
    ambient: usize,
    span: Subspace,
    /// `span.basis[k] = Σ_i transform[k][i] * generator_i`.
    transform: Vec<Vec<Scalar>>,
}

impl CoordinateSolver {
    /// Fails with `BadShape` if the generators are dependent.
    pub fn new(field: FieldDesc, ambient: usize, generators: &[Vec<Scalar>]) -> Result<Self> {
        let r = generators.len();
        let mut rows = Vec::with_capacity(r);
        for (i, g) in generators.iter().enumerate() {
            if g.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: g.len(),
                });
            }
            let mut row = g.clone();
            row.extend((0..r).map(|j| if i == j { field.one() } else { field.zero() }));
            rows.push(row);
        }
        let pivots = eliminate(field, &mut rows, ambient + r);
        if pivots.iter().filter(|&&p| p < ambient).count() < r {
            return Err(Error::BadShape("generators are linearly dependent".into()));
        }
        let basis: Vec<Vec<Scalar>> = rows.iter().map(|row| row[..ambient].to_vec()).collect();
        let transform = rows.iter().map(|row| row[ambient..].to_vec()).collect();
        Ok(CoordinateSolver {
            field,
            ambient,
            span: Subspace {
                field,
                ambient,
                basis,
                pivots,
            },
            transform,
        })
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    /// Coefficients `c` with `v = Σ c_i generator_i`, if `v` is in the span.
    pub fn solve(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let f = self.field;
        let ech = self.span.coordinates(v)?;
        let mut out = vec![f.zero(); self.transform.len()];
        for (c, t) in ech.iter().zip(&self.transform) {
            axpy(f, &mut out, c, t);
        }
        Some(out)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
}
