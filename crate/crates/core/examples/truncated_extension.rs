//! Maximal right ideals and central essentiality of A[x]/(x^m).

use ringlab::catalog;
use ringlab::ideals;
use ringlab::suites::{truncated_central_essential_check, truncated_maximal_ideal_check};
use ringlab::FieldDesc;

fn main() -> ringlab::Result<()> {
    let f2 = FieldDesc::prime(2)?;
    let fl = catalog::flagship(f2);
    let rad = ideals::jacobson_radical(&fl.algebra)?.radical;
    print!("{}", truncated_maximal_ideal_check(&fl.algebra, &rad, 2, "flagship F2")?.render_text());

    let m2 = catalog::full_matrix(2, f2);
    let m = ideals::maximal_right_ideals(&m2)?.remove(0).subspace;
    println!();
    print!("{}", truncated_maximal_ideal_check(&m2, &m, 3, "M2(F2)")?.render_text());

    println!();
    print!("{}", truncated_central_essential_check(&fl.algebra, 2, "flagship F2")?.render_text());
    Ok(())
}
