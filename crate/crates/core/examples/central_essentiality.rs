//! Exhaustive and randomized central-essentiality checks.

use ringlab::catalog;
use ringlab::central::{check_centrally_essential, CeMode};
use ringlab::suites::describe_ce;
use ringlab::FieldDesc;

fn main() -> ringlab::Result<()> {
    let f2 = FieldDesc::prime(2)?;
    let f3 = FieldDesc::prime(3)?;
    let cases = [
        ("flagship over F2", catalog::flagship(f2).algebra),
        ("flagship over F3", catalog::flagship(f3).algebra),
        ("M2(F2)", catalog::full_matrix(2, f2)),
        ("UT2(F3)", catalog::upper_triangular(2, f3)),
        ("F3[t]/(t^2)", catalog::dual_numbers(f3)),
    ];
    for (name, a) in &cases {
        let report = check_centrally_essential(a, CeMode::Exhaustive)?;
        report.revalidate(a)?;
        println!("{name:<18} {}", describe_ce(a, &report));
        if let Some(w) = report.witnesses.first() {
            println!(
                "{:<18} e.g. ({}) · ({}) = {}",
                "",
                a.format_element(&w.element),
                a.format_element(&w.x),
                a.format_element(&w.y)
            );
        }
    }

    // over Q only random falsification is possible
    let q = catalog::flagship(FieldDesc::rationals()).algebra;
    let r = check_centrally_essential(&q, CeMode::Random { trials: 200, seed: 7 })?;
    println!("flagship over Q    {}", describe_ce(&q, &r));
    Ok(())
}
