//! Quotient commutativity and central socle sheets on a few small algebras.

use ringlab::catalog;
use ringlab::suites::{central_socle_check, quotient_commutativity_check};
use ringlab::FieldDesc;

fn main() -> ringlab::Result<()> {
    let f2 = FieldDesc::prime(2)?;
    let cases = [
        ("flagship F2", catalog::flagship(f2).algebra),
        ("UT2(F2)", catalog::upper_triangular(2, f2)),
        ("F2[t]/(t^2)", catalog::dual_numbers(f2)),
    ];
    for (label, a) in &cases {
        print!("{}", quotient_commutativity_check(a, label)?.render_text());
        println!();
        print!("{}", central_socle_check(a, label)?.render_text());
        println!();
    }
    Ok(())
}
