//! Algebras from JSON: a structure-constant table and a matrix basis with closure.

use ringlab::algebra_file::AlgebraFile;
use ringlab::central::center;
use ringlab::ideals::jacobson_radical;

const QUATERNION_LIKE: &str = r#"{
  "field": {"kind": "Fp", "p": 3},
  "names": ["1", "i", "j", "k"],
  "presentation": {
    "kind": "structure_constants",
    "dim": 4,
    "unit": ["1", "0", "0", "0"],
    "table": [
      [["1","0","0","0"], ["0","1","0","0"], ["0","0","1","0"], ["0","0","0","1"]],
      [["0","1","0","0"], ["-1","0","0","0"], ["0","0","0","1"], ["0","0","-1","0"]],
      [["0","0","1","0"], ["0","0","0","-1"], ["-1","0","0","0"], ["0","1","0","0"]],
      [["0","0","0","1"], ["0","0","1","0"], ["0","-1","0","0"], ["-1","0","0","0"]]
    ]
  }
}"#;

// one nilpotent Jordan block; closure adds its square
const JORDAN: &str = r#"{
  "field": {"kind": "Q"},
  "presentation": {
    "kind": "matrix_basis",
    "size": 3,
    "matrices": [
      [["1","0","0"], ["0","1","0"], ["0","0","1"]],
      [["0","1","0"], ["0","0","1"], ["0","0","0"]]
    ],
    "autoclose": true
  }
}"#;

fn main() -> ringlab::Result<()> {
    for text in [QUATERNION_LIKE, JORDAN] {
        let file = AlgebraFile::from_json(text)?;
        let (a, rep) = file.build()?;
        println!("dim {} over {}, basis {}", a.dim(), a.field(), a.names().join(", "));
        println!("  center  {}", a.format_subspace(&center(&a)));
        println!("  radical {}", a.format_subspace(&jacobson_radical(&a)?.radical));
        if let Some(rep) = rep {
            println!("  {} basis matrices of size {}", rep.basis.len(), rep.size);
        }
        // canonical form: structure constants survive a round trip
        let again = AlgebraFile::from_json(&AlgebraFile::from_algebra(&a).to_json())?.build()?.0;
        assert_eq!(again, a);
    }
    Ok(())
}
