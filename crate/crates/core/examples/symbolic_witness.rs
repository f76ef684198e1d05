//! Integer-polynomial certificate for the diagonal witness map over Q, and the
//! piecewise witness that also works in every characteristic.

use ringlab::catalog::{self, Flagship};
use ringlab::symbolic::{self, PiecewiseWitness};
use ringlab::FieldDesc;

fn main() -> ringlab::Result<()> {
    let q = catalog::flagship(FieldDesc::rationals()).algebra;
    for (basis, poly) in q.names().iter().zip(symbolic::generic_commutator(&q, "u", "v")?) {
        if !poly.is_zero() {
            println!("[u, v] at {basis}: {poly}");
        }
    }

    let cert = symbolic::witness_certificate_check(&q, &Flagship::diagonal_witness_map(), &[2, 3, 5, 7])?;
    println!("\nnon-central part vanishes: {}", cert.noncentral_vanishes);
    for c in &cert.central_coordinates {
        println!("  {}: {}", c.basis, c.poly);
    }
    for v in &cert.vanishing {
        println!("  F{}: {} non-central zeros {:?}", v.prime, v.count, v.points.first());
    }

    let pw = PiecewiseWitness::flagship();
    let pc = symbolic::piecewise_certificate_check(&q, &pw)?;
    println!("\npiecewise certificate valid: {}", pc.valid);
    for p in [2, 3, 5] {
        let a = catalog::flagship(FieldDesc::prime(p)?).algebra;
        let s = symbolic::piecewise_witness_sweep(&a, &pw)?;
        let l = symbolic::linear_witness_sweep(&a, &Flagship::diagonal_witness_map())?;
        println!("F{p}: piecewise failures {}, diagonal failures {}", s.failures, l.failures);
    }
    Ok(())
}
