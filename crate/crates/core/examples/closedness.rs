//! Essential extensions, closed one-sided ideals and ∩-complements in the flagship algebra.

use ringlab::catalog;
use ringlab::ideals;
use ringlab::{FieldDesc, Side};

fn main() -> ringlab::Result<()> {
    let fl = catalog::flagship(FieldDesc::prime(2)?);
    let a = &fl.algebra;
    let (i, j, c) = (&fl.ideal_i, &fl.ideal_j, &fl.ideal_c);

    for (name, s, side) in [("I", i, Side::Right), ("J", j, Side::Left), ("C", c, Side::Right)] {
        let v = ideals::is_closed(a, s, side)?;
        match (&v.extension, &v.complement) {
            (Some(e), _) => println!(
                "{name} ({side}): not closed, essential in {} (u = {})",
                a.format_subspace(&e.module),
                a.format_element(&e.u)
            ),
            (None, Some(k)) => println!("{name} ({side}): closed, complement of {}", a.format_subspace(k)),
            (None, None) => println!("{name} ({side}): closed"),
        }
    }

    // the extension by Ee is essential too
    let ee = a.parse_element("Ee")?;
    let ext = ideals::extend(a, i, &ee, Side::Right);
    let v = ideals::is_essential(a, i, &ext, Side::Right)?;
    println!("I essential in I + Ee·A = {}: {}", a.format_subspace(&ext), v.essential);

    for (k, kn, x, xn, side) in [(c, "C", i, "I", Side::Right), (i, "I", c, "C", Side::Right), (c, "C", j, "J", Side::Left)] {
        let v = ideals::intersection_complement_check(a, k, x, side)?;
        println!("{kn} is a ∩-complement of {xn} ({side}): {}", v.is_complement);
    }
    Ok(())
}
