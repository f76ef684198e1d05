//! JSON algebra files: a field, basis names, and either a structure-constant
//! table or a list of basis matrices. Scalars are written as strings.

use serde::{Deserialize, Serialize};

use crate::algebra::{from_matrix_basis, Algebra, MatrixRepresentation};
use crate::catalog;
use crate::error::{Error, Result};
use crate::field::{FieldDesc, Scalar};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: FieldDesc,
    #[serde(default)]
    pub names: Vec<String>,
    pub presentation: Presentation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Presentation {
    StructureConstants {
        dim: usize,
        unit: Vec<String>,
        /// `table[i][j][k]` is the `b_k` coordinate of `b_i b_j`.
        table: Vec<Vec<Vec<String>>>,
    },
    MatrixBasis {
        size: usize,
        matrices: Vec<Vec<Vec<String>>>,
        #[serde(default)]
        autoclose: bool,
    },
}

fn bad(path: String, msg: impl std::fmt::Display) -> Error {
    Error::SpecFile(format!("{path}: {msg}"))
}

fn scalar(f: FieldDesc, path: impl Fn() -> String, text: &str) -> Result<Scalar> {
    f.parse(text).map_err(|e| bad(path(), e))
}

fn parse_matrix(f: FieldDesc, size: usize, idx: usize, rows: &[Vec<String>]) -> Result<Matrix> {
    if rows.len() != size {
        return Err(bad(
            format!("presentation.matrices[{idx}]"),
            format!("{} rows, expected {size}", rows.len()),
        ));
    }
    let mut parsed = Vec::with_capacity(size);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != size {
            return Err(bad(
                format!("presentation.matrices[{idx}][{r}]"),
                format!("{} entries, expected {size}", row.len()),
            ));
        }
        let vals = row
            .iter()
            .enumerate()
            .map(|(c, t)| scalar(f, || format!("presentation.matrices[{idx}][{r}][{c}]"), t))
            .collect::<Result<Vec<_>>>()?;
        parsed.push(vals);
    }
    Matrix::from_rows(f, size, parsed)
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::SpecFile(e.to_string()))
    }

    /// Pretty JSON with a trailing newline; stable byte for byte.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }

    pub fn read(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
    }

    /// Validates and builds the algebra, with the matrix embedding when the
    /// file gives one.
    pub fn build(&self) -> Result<(Algebra, Option<MatrixRepresentation>)> {
        let f = self.field;
        let (alg, rep) = match &self.presentation {
            Presentation::StructureConstants { dim, unit, table } => {
                let n = *dim;
                if unit.len() != n {
                    return Err(bad("presentation.unit".into(), format!("{} entries, expected {n}", unit.len())));
                }
                let unit = unit
                    .iter()
                    .enumerate()
                    .map(|(i, t)| scalar(f, || format!("presentation.unit[{i}]"), t))
                    .collect::<Result<Vec<_>>>()?;
                if table.len() != n {
                    return Err(bad("presentation.table".into(), format!("{} slices, expected {n}", table.len())));
                }
                let mut constants = Vec::with_capacity(n * n * n);
                for (i, slice) in table.iter().enumerate() {
                    if slice.len() != n {
                        return Err(bad(format!("presentation.table[{i}]"), format!("{} rows, expected {n}", slice.len())));
                    }
                    for (j, row) in slice.iter().enumerate() {
                        if row.len() != n {
                            return Err(bad(format!("presentation.table[{i}][{j}]"), format!("{} entries, expected {n}", row.len())));
                        }
                        for (k, t) in row.iter().enumerate() {
                            constants.push(scalar(f, || format!("presentation.table[{i}][{j}][{k}]"), t)?);
                        }
                    }
                }
                (Algebra::build(f, n, unit, constants, Vec::new())?, None)
            }
            Presentation::MatrixBasis { size, matrices, autoclose } => {
                let ms = matrices
                    .iter()
                    .enumerate()
                    .map(|(idx, m)| parse_matrix(f, *size, idx, m))
                    .collect::<Result<Vec<_>>>()?;
                let (alg, rep) = from_matrix_basis(f, *size, &ms, *autoclose)?;
                (alg, Some(rep))
            }
        };
        if self.names.is_empty() {
            return Ok((alg, rep));
        }
        if self.names.len() != alg.dim() {
            return Err(bad(
                "names".into(),
                format!("{} names for an algebra of dimension {}", self.names.len(), alg.dim()),
            ));
        }
        Ok((alg.with_names(self.names.clone())?, rep))
    }

    /// Structure-constant presentation of an algebra.
    pub fn from_algebra(a: &Algebra) -> Self {
        let f = a.field();
        let n = a.dim();
        let table = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| f.format(a.constant(i, j, k))).collect())
                    .collect()
            })
            .collect();
        AlgebraFile {
            field: f,
            names: a.names().to_vec(),
            presentation: Presentation::StructureConstants {
                dim: n,
                unit: a.unit().iter().map(|x| f.format(x)).collect(),
                table,
            },
        }
    }

    /// Matrix-basis presentation of the flagship algebra.
    pub fn flagship(f: FieldDesc) -> Self {
        let matrices = catalog::flagship_matrices(f)
            .iter()
            .map(|m| {
                (0..m.rows())
                    .map(|r| m.row(r).iter().map(|x| f.format(x)).collect())
                    .collect()
            })
            .collect();
        AlgebraFile {
            field: f,
            names: catalog::FLAGSHIP_NAMES.iter().map(|s| s.to_string()).collect(),
            presentation: Presentation::MatrixBasis {
                size: 7,
                matrices,
                autoclose: false,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flagship_round_trip() {
        for f in [FieldDesc::prime(2).unwrap(), FieldDesc::prime(5).unwrap(), FieldDesc::rationals()] {
            let file = AlgebraFile::flagship(f);
            let text = file.to_json();
            let back = AlgebraFile::from_json(&text).unwrap();
            assert_eq!(back, file);
            assert_eq!(back.to_json(), text);
            let (alg, rep) = back.build().unwrap();
            assert_eq!(alg, catalog::flagship(f).algebra);
            assert_eq!(rep.unwrap().basis.len(), 7);
        }
    }

    #[test]
    fn structure_constant_round_trip() {
        let q = FieldDesc::rationals();
        let a = catalog::upper_triangular(2, q);
        let file = AlgebraFile::from_algebra(&a);
        let (b, rep) = AlgebraFile::from_json(&file.to_json()).unwrap().build().unwrap();
        assert_eq!(a, b);
        assert!(rep.is_none());
    }

    #[test]
    fn rational_scalars_survive() {
        let text = r#"{"field":{"kind":"Q"},"presentation":{"kind":"structure_constants","dim":1,"unit":["1"],"table":[[["1"]]]}}"#;
        let file = AlgebraFile::from_json(text).unwrap();
        let (a, _) = file.build().unwrap();
        assert_eq!(a.names(), ["b0"]);
        let again = AlgebraFile::from_algebra(&a);
        assert_eq!(again.presentation, file.presentation);
    }

    #[test]
    fn errors_name_the_field() {
        let bad_scalar = r#"{"field":{"kind":"Fp","p":3},"presentation":{"kind":"structure_constants","dim":1,"unit":["1"],"table":[[["x"]]]}}"#;
        let e = AlgebraFile::from_json(bad_scalar).unwrap().build().unwrap_err();
        assert!(e.to_string().contains("presentation.table[0][0][0]"), "{e}");

        let missing = r#"{"field":{"kind":"Fp","p":3},"presentation":{"kind":"structure_constants","unit":["1"],"table":[[["1"]]]}}"#;
        let e = AlgebraFile::from_json(missing).unwrap_err();
        assert!(e.to_string().contains("dim"), "{e}");

        let composite = r#"{"field":{"kind":"Fp","p":4},"presentation":{"kind":"structure_constants","dim":1,"unit":["1"],"table":[[["1"]]]}}"#;
        assert!(AlgebraFile::from_json(composite).is_err());

        let unknown = r#"{"field":{"kind":"Q"},"colour":1,"presentation":{"kind":"structure_constants","dim":1,"unit":["1"],"table":[[["1"]]]}}"#;
        let e = AlgebraFile::from_json(unknown).unwrap_err();
        assert!(e.to_string().contains("colour"), "{e}");

        let names = r#"{"field":{"kind":"Q"},"names":["x","y"],"presentation":{"kind":"structure_constants","dim":1,"unit":["1"],"table":[[["1"]]]}}"#;
        let e = AlgebraFile::from_json(names).unwrap().build().unwrap_err();
        assert!(e.to_string().contains("names"), "{e}");

        let no_unit = r#"{"field":{"kind":"Fp","p":2},"presentation":{"kind":"matrix_basis","size":2,"matrices":[[["0","1"],["0","0"]]],"autoclose":true}}"#;
        assert!(matches!(AlgebraFile::from_json(no_unit).unwrap().build(), Err(Error::NoUnit)));
    }
}
