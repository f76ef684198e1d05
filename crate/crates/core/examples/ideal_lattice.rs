//! One-sided ideals: sidedness, closures, maximal and minimal right ideals, socles.

use ringlab::catalog;
use ringlab::ideals::{self, IdealKind};
use ringlab::suites::describe_sidedness;
use ringlab::{FieldDesc, Side};

fn main() -> ringlab::Result<()> {
    let f2 = FieldDesc::prime(2)?;
    let fl = catalog::flagship(f2);
    let a = &fl.algebra;
    for name in ["I", "J", "C"] {
        let s = fl.named_ideal(name).unwrap();
        let sided = ideals::sidedness(a, s);
        println!("{name} = {}: {}", a.format_subspace(s), describe_sidedness(a, &sided));
    }

    let ea = a.parse_element("Ea")?;
    for kind in [IdealKind::Right, IdealKind::Left, IdealKind::TwoSided] {
        let s = ideals::ideal_closure(a, &[ea.clone()], kind)?;
        println!("{kind:?} ideal generated by Ea: {}", a.format_subspace(&s.subspace));
    }

    let ut = catalog::upper_triangular(3, f2);
    println!("\nUT3(F2)");
    for m in ideals::maximal_right_ideals(&ut)? {
        println!("  maximal {}  two-sided: {}", ut.format_subspace(&m.subspace), m.is_two_sided());
    }
    for m in ideals::minimal_right_ideals(&ut)? {
        println!("  minimal {}  two-sided: {}", ut.format_subspace(&m.subspace), m.is_two_sided());
    }
    println!("  right socle {}", ut.format_subspace(&ideals::socle(&ut, Side::Right)?));
    println!("  left socle  {}", ut.format_subspace(&ideals::socle(&ut, Side::Left)?));
    let qi = ideals::is_quasi_invariant(&ut, Side::Right)?;
    println!("  right quasi-invariant: {}", qi.quasi_invariant);
    Ok(())
}
