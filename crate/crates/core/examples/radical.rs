//! Jacobson radicals with their certificates, and the two algorithms side by side.

use ringlab::algebra::truncated_polynomial_algebra;
use ringlab::catalog;
use ringlab::ideals::{jacobson_radical, radical_element_filter, radical_trace_form};
use ringlab::FieldDesc;

fn main() -> ringlab::Result<()> {
    let f2 = FieldDesc::prime(2)?;
    let f5 = FieldDesc::prime(5)?;
    let cases = [
        ("flagship F2", catalog::flagship(f2).algebra),
        ("flagship Q", catalog::flagship(FieldDesc::rationals()).algebra),
        ("UT3(F2)", catalog::upper_triangular(3, f2)),
        ("M2(F5)", catalog::full_matrix(2, f5)),
        ("UT2(F2)[x]/(x^2)", truncated_polynomial_algebra(&catalog::upper_triangular(2, f2), 2)?),
    ];
    for (name, a) in &cases {
        let c = jacobson_radical(a)?;
        println!(
            "{name:<17} J = {}  index {}  dim A/J = {}  via {:?}",
            a.format_subspace(&c.radical),
            c.nilpotency_index,
            c.quotient_dim,
            c.method
        );
    }

    // p > dim: both methods apply and must agree
    let a = catalog::upper_triangular(2, f5);
    let tf = radical_trace_form(&a);
    let ef = radical_element_filter(&a)?;
    println!("\nUT2(F5): trace form {} / element filter {}", a.format_subspace(&tf), a.format_subspace(&ef));
    assert_eq!(tf, ef);
    Ok(())
}
