//! Constructors for the flagship 7-dimensional algebra and for the control
//! algebras used throughout the test suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{from_matrix_basis, Algebra, MatrixRepresentation};
use crate::error::{Error, Result};
use crate::field::{FieldDesc, Scalar};
use crate::linalg::{Matrix, Subspace};

/// Basis labels of the flagship algebra, in coordinate order.
pub const FLAGSHIP_NAMES: [&str; 7] = ["U", "Ea", "Eb", "Ec", "Ed", "Ee", "Ef"];

/// Parameter letters of a generic flagship element, one per coordinate.
pub const FLAGSHIP_LETTERS: [&str; 7] = ["alpha", "a", "b", "c", "d", "e", "f"];

/// Coordinate indices of the flagship basis.
pub mod basis {
    pub const U: usize = 0;
    pub const EA: usize = 1;
    pub const EB: usize = 2;
    pub const EC: usize = 3;
    pub const ED: usize = 4;
    pub const EE: usize = 5;
    pub const EF: usize = 6;
}

/// Positions (1-indexed row, column) of the entry equal to the parameter in
/// the generic 7x7 matrix
///
/// ```text
/// α a b c d e f
/// 0 α 0 b 0 0 d
/// 0 0 α 0 0 0 e
/// 0 0 0 α 0 0 0
/// 0 0 0 0 α 0 a
/// 0 0 0 0 0 α b
/// 0 0 0 0 0 0 α
/// ```
///
/// Setting one parameter to 1 and the rest to 0 gives the basis matrix.
const FLAGSHIP_PATTERNS: [&[(usize, usize)]; 7] = [
    &[(1, 1), (2, 2), (3, 3), (4, 4), (5, 5), (6, 6), (7, 7)],
    &[(1, 2), (5, 7)],
    &[(1, 3), (2, 4), (6, 7)],
    &[(1, 4)],
    &[(1, 5), (2, 7)],
    &[(1, 6), (3, 7)],
    &[(1, 7)],
];

/// The flagship algebra with its distinguished one-sided ideals.
#[derive(Clone, Debug)]
pub struct Flagship {
    pub algebra: Algebra,
    pub representation: MatrixRepresentation,
    /// `span{Eb, Ef}`: matrices with only the `b` and `f` parameters.
    pub ideal_i: Subspace,
    /// `span{Ea, Ef}`: matrices with only the `a` and `f` parameters.
    pub ideal_j: Subspace,
    /// `span{Ec}`.
    pub ideal_c: Subspace,
}

impl Flagship {
    /// The linear witness map `a ↦ a_a·Ed + a_b·Ee` as an integer matrix
    /// acting on coordinate columns.
    pub fn diagonal_witness_map() -> Vec<Vec<i64>> {
        let mut w = vec![vec![0; 7]; 7];
        w[basis::ED][basis::EA] = 1;
        w[basis::EE][basis::EB] = 1;
        w
    }

    /// Looks up one of the named subspaces `I`, `J`, `C`.
    pub fn named_ideal(&self, name: &str) -> Option<&Subspace> {
        match name {
            "I" => Some(&self.ideal_i),
            "J" => Some(&self.ideal_j),
            "C" => Some(&self.ideal_c),
            _ => None,
        }
    }
}

pub fn flagship_matrices(field: FieldDesc) -> Vec<Matrix> {
    FLAGSHIP_PATTERNS
        .iter()
        .map(|cells| {
            let mut m = Matrix::zeros(field, 7, 7);
            for &(r, c) in cells.iter() {
                m.set(r - 1, c - 1, field.one());
            }
            m
        })
        .collect()
}

pub fn flagship(field: FieldDesc) -> Flagship {
    let (alg, rep) = from_matrix_basis(field, 7, &flagship_matrices(field), false)
        .expect("flagship generators span a unital subalgebra");
    let algebra = alg
        .with_names(FLAGSHIP_NAMES.iter().map(|s| s.to_string()).collect())
        .expect("seven names");
    let coord_span = |idx: &[usize]| {
        Subspace::span(field, 7, idx.iter().map(|&i| algebra.basis_element(i))).expect("length 7")
    };
    Flagship {
        ideal_i: coord_span(&[basis::EB, basis::EF]),
        ideal_j: coord_span(&[basis::EA, basis::EF]),
        ideal_c: coord_span(&[basis::EC]),
        algebra,
        representation: rep,
    }
}

/// The field itself as a 1-dimensional algebra.
pub fn field_algebra(field: FieldDesc) -> Algebra {
    Algebra::build(field, 1, vec![field.one()], vec![field.one()], vec!["1".into()])
        .expect("the field is an algebra")
}

/// `F[t]/(t^2)`.
pub fn dual_numbers(field: FieldDesc) -> Algebra {
    let mut table = vec![field.zero(); 8];
    table[0] = field.one();
    table[3] = field.one();
    table[5] = field.one();
    Algebra::build(
        field,
        2,
        vec![field.one(), field.zero()],
        table,
        vec!["1".into(), "t".into()],
    )
    .expect("dual numbers")
}

fn matrix_unit_algebra(k: usize, field: FieldDesc, upper_only: bool) -> Algebra {
    let units: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .filter(|&(i, j)| !upper_only || i <= j)
        .collect();
    let n = units.len();
    let index = |i: usize, j: usize| units.iter().position(|&u| u == (i, j));
    let mut table = vec![field.zero(); n * n * n];
    for (a, &(i, j)) in units.iter().enumerate() {
        for (b, &(j2, l)) in units.iter().enumerate() {
            if j == j2 {
                let c = index(i, l).expect("closed under products");
                table[(a * n + b) * n + c] = field.one();
            }
        }
    }
    let mut unit = vec![field.zero(); n];
    for i in 0..k {
        unit[index(i, i).expect("diagonal unit")] = field.one();
    }
    let names = units
        .iter()
        .map(|&(i, j)| format!("E{}{}", i + 1, j + 1))
        .collect();
    Algebra::build(field, n, unit, table, names).expect("matrix units")
}

/// `M_k(F)` on the matrix units `E_ij`, row-major.
pub fn full_matrix(k: usize, field: FieldDesc) -> Algebra {
    assert!(k >= 1, "matrix size must be positive");
    matrix_unit_algebra(k, field, false)
}

/// Upper triangular `k x k` matrices on the units `E_ij`, `i <= j`.
pub fn upper_triangular(k: usize, field: FieldDesc) -> Algebra {
    assert!(k >= 1, "matrix size must be positive");
    matrix_unit_algebra(k, field, true)
}

/// Identifier of the pseudo-random scheme behind [`random_subalgebra`]:
/// `ChaCha8Rng::seed_from_u64(seed)`, then each generator's entries drawn
/// row-major with `gen_range(0..p)`.
pub const RANDOM_SCHEME: &str = "chacha8-seed_from_u64/rowmajor-uniform/v1";

#[derive(Clone, Debug, Serialize)]
pub struct RandomSubalgebra {
    #[serde(skip)]
    pub algebra: Algebra,
    #[serde(skip)]
    pub representation: MatrixRepresentation,
    pub matrix_size: usize,
    pub prime: u32,
    pub generator_count: usize,
    pub seed: u64,
    pub scheme: &'static str,
    pub dim: usize,
}

/// The subalgebra of `M_k(F_p)` generated by the identity and
/// `generator_count` uniformly random matrices.
pub fn random_subalgebra(
    k: usize,
    field: FieldDesc,
    generator_count: usize,
    seed: u64,
) -> Result<RandomSubalgebra> {
    let p = field.modulus().ok_or(Error::InfiniteField)?;
    if k == 0 {
        return Err(Error::BadShape("matrix size must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mats = vec![Matrix::identity(field, k)];
    for _ in 0..generator_count {
        let rows = (0..k)
            .map(|_| (0..k).map(|_| Scalar::Residue(rng.gen_range(0..p))).collect())
            .collect();
        mats.push(Matrix::from_rows(field, k, rows)?);
    }
    let (algebra, representation) = from_matrix_basis(field, k, &mats, true)?;
    Ok(RandomSubalgebra {
        dim: algebra.dim(),
        algebra,
        representation,
        matrix_size: k,
        prime: p,
        generator_count,
        seed,
        scheme: RANDOM_SCHEME,
    })
}

#[cfg(test)]
mod tests {
    use super::basis::*;
    use super::*;
    use crate::linalg::is_zero_vec;

    /// Independent route: multiply the 7x7 patterns as plain integer
    /// matrices and read the result back as a parameter vector.
    fn pattern_product(x: usize, y: usize) -> [i64; 7] {
        let dense = |idx: usize| {
            let mut m = [[0i64; 7]; 7];
            for &(r, c) in FLAGSHIP_PATTERNS[idx] {
                m[r - 1][c - 1] = 1;
            }
            m
        };
        let (a, b) = (dense(x), dense(y));
        let mut prod = [[0i64; 7]; 7];
        for i in 0..7 {
            for k in 0..7 {
                for j in 0..7 {
                    prod[i][j] += a[i][k] * b[k][j];
                }
            }
        }
        // the first row of a generic element lists (α, a, b, c, d, e, f)
        prod[0]
    }

    #[test]
    fn flagship_table_matches_integer_matrices() {
        for field in [2u64, 3, 5] {
            let f = FieldDesc::prime(field).unwrap();
            let fl = flagship(f);
            let a = &fl.algebra;
            for x in 0..7 {
                for y in 0..7 {
                    let want: Vec<Scalar> = pattern_product(x, y).iter().map(|&v| f.from_i64(v)).collect();
                    assert_eq!(a.basis_product(x, y), want, "{x}·{y} over F{field}");
                }
            }
        }
    }

    #[test]
    fn flagship_radical_products() {
        let fl = flagship(FieldDesc::prime(2).unwrap());
        let a = &fl.algebra;
        let e = |i| a.basis_element(i);
        assert_eq!(a.mul(&e(EA), &e(EB)), e(EC));
        assert!(is_zero_vec(a.field(), &a.mul(&e(EB), &e(EA))));
        let mut nonzero = Vec::new();
        for x in EA..=EF {
            for y in EA..=EF {
                let p = a.mul(&e(x), &e(y));
                if !is_zero_vec(a.field(), &p) {
                    nonzero.push((FLAGSHIP_NAMES[x], FLAGSHIP_NAMES[y], a.format_element(&p)));
                }
            }
        }
        assert_eq!(
            nonzero,
            vec![
                ("Ea", "Eb", "Ec".to_string()),
                ("Ea", "Ed", "Ef".to_string()),
                ("Eb", "Ee", "Ef".to_string()),
                ("Ed", "Ea", "Ef".to_string()),
                ("Ee", "Eb", "Ef".to_string()),
            ]
        );
        assert_eq!(a.noncommuting_pair(), Some((EA, EB)));
        assert_eq!(a.element_count().unwrap(), 128);
    }

    #[test]
    fn flagship_over_rationals() {
        let fl = flagship(FieldDesc::rationals());
        assert_eq!(fl.algebra.dim(), 7);
        assert_eq!(fl.representation.to_matrix(fl.algebra.unit()), Matrix::identity(FieldDesc::rationals(), 7));
    }

    #[test]
    fn matrix_algebras() {
        let f = FieldDesc::prime(2).unwrap();
        assert_eq!(full_matrix(2, f).dim(), 4);
        assert!(!full_matrix(2, f).is_commutative());
        assert_eq!(upper_triangular(3, f).dim(), 6);
        assert_eq!(full_matrix(1, f).dim(), 1);
        assert!(full_matrix(1, f).is_commutative());
    }

    #[test]
    fn random_subalgebras_are_seed_stable() {
        let f = FieldDesc::prime(3).unwrap();
        let a = random_subalgebra(3, f, 2, 42).unwrap();
        let b = random_subalgebra(3, f, 2, 42).unwrap();
        assert_eq!(a.algebra, b.algebra);
        assert_eq!(a.representation, b.representation);
        let scalars = random_subalgebra(3, f, 0, 7).unwrap();
        assert_eq!(scalars.dim, 1);
        for seed in 0..20 {
            let r = random_subalgebra(2, f, 2, seed).unwrap();
            assert!(r.dim <= 4);
        }
        assert!(matches!(
            random_subalgebra(2, FieldDesc::rationals(), 1, 0),
            Err(Error::InfiniteField)
        ));
    }
}
