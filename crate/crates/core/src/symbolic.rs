//! Field-independent certificates: products of generic elements and
//! witness maps checked as integer polynomial identities.
//!
//! An algebra with integral structure constants defines an algebra over
//! every prime field by reduction. An identity of integer polynomials in the
//! generic coordinates specializes to every such field, so a single
//! computation here covers ℚ and all `F_p` at once.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, Element};
use crate::catalog::{FLAGSHIP_LETTERS, FLAGSHIP_NAMES};
use crate::central;
use crate::error::{Error, Result};
use crate::field::{FieldDesc, Scalar};
use crate::linalg::{self, Subspace};
use crate::poly::MultiPoly;

/// Points listed per prime in a vanishing report.
const MAX_LISTED_POINTS: usize = 16;
/// Largest point set searched for vanishing.
const MAX_SEARCH_POINTS: u64 = 1 << 20;

/// Structure constants lifted to integers. Prime-field constants lift to
/// their representative in `[0, p)`; rational constants must be integers.
#[derive(Clone, Debug)]
struct IntegerTable {
    n: usize,
    c: Vec<BigInt>,
}

impl IntegerTable {
    fn of(a: &Algebra) -> Result<Self> {
        let f = a.field();
        let c = a
            .constants()
            .iter()
            .map(|x| f.to_integer(x).ok_or(Error::NonIntegralConstants))
            .collect::<Result<_>>()?;
        Ok(IntegerTable { n: a.dim(), c })
    }

    fn get(&self, i: usize, j: usize, k: usize) -> &BigInt {
        &self.c[(i * self.n + j) * self.n + k]
    }

    fn commutes_with_all(&self, z: &[BigInt]) -> bool {
        let n = self.n;
        (0..n).all(|j| {
            (0..n).all(|k| {
                (0..n)
                    .map(|i| &z[i] * (self.get(i, j, k) - self.get(j, i, k)))
                    .sum::<BigInt>()
                    .is_zero()
            })
        })
    }

    fn product(&self, x: &[MultiPoly], y: &[MultiPoly]) -> Vec<MultiPoly> {
        let n = self.n;
        let mut out = vec![MultiPoly::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = x[i].mul(&y[j]);
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        *slot = slot.add(&xy.scale(c));
                    }
                }
            }
        }
        out
    }
}

/// Lowercase coordinate letters used for generic elements: the flagship
/// uses its parameter letters, other algebras their basis names.
pub fn coordinate_letters(a: &Algebra) -> Vec<String> {
    if a.names().iter().map(String::as_str).eq(FLAGSHIP_NAMES) {
        FLAGSHIP_LETTERS.iter().map(|s| s.to_string()).collect()
    } else {
        a.names().to_vec()
    }
}

fn generic(vars: &[String]) -> Vec<MultiPoly> {
    vars.iter()
        .map(|v| MultiPoly::zero_in(vars).add(&MultiPoly::var(v)))
        .collect()
}

fn prefixed(prefix: &str, letters: &[String]) -> Vec<String> {
    letters.iter().map(|l| format!("{prefix}_{l}")).collect()
}

/// Coordinates of `(Σ u_i b_i)(Σ v_j b_j)`: the bilinear polynomials
/// `Σ c[i][j][k] u_i v_j`.
pub fn generic_product(a: &Algebra, u: &str, v: &str) -> Result<Vec<MultiPoly>> {
    let t = IntegerTable::of(a)?;
    let letters = coordinate_letters(a);
    let (uv, vv) = (prefixed(u, &letters), prefixed(v, &letters));
    let order: Vec<String> = uv.iter().chain(&vv).cloned().collect();
    let x = generic(&uv);
    let y = generic(&vv);
    Ok(t.product(&x, &y)
        .into_iter()
        .map(|p| MultiPoly::zero_in(&order).add(&p))
        .collect())
}

/// Coordinates of `uv - vu` for generic `u`, `v`.
pub fn generic_commutator(a: &Algebra, u: &str, v: &str) -> Result<Vec<MultiPoly>> {
    let uv = generic_product(a, u, v)?;
    let t = IntegerTable::of(a)?;
    let letters = coordinate_letters(a);
    let x = generic(&prefixed(u, &letters));
    let y = generic(&prefixed(v, &letters));
    let vu = t.product(&y, &x);
    Ok(uv.iter().zip(&vu).map(|(p, q)| p.sub(q)).collect())
}

/// The center over ℚ of the integer lift, with the functionals cutting it
/// out (scaled to integer coefficients).
struct CenterShape {
    center: Subspace,
    annihilator: Vec<Vec<BigInt>>,
}

fn rational_lift(a: &Algebra, t: &IntegerTable) -> Result<Algebra> {
    let q = FieldDesc::rationals();
    let f = a.field();
    let unit = a
        .unit()
        .iter()
        .map(|x| {
            f.to_integer(x)
                .map(|v| q.from_bigint(&v))
                .ok_or(Error::NonIntegralConstants)
        })
        .collect::<Result<Vec<_>>>()?;
    let constants = t.c.iter().map(|x| q.from_bigint(x)).collect();
    Algebra::build(q, t.n, unit, constants, a.names().to_vec())
}

fn integral_row(q: FieldDesc, v: &[Scalar]) -> Vec<BigInt> {
    let denoms = v.iter().map(|x| match x {
        Scalar::Rational(r) => r.denom().clone(),
        Scalar::Residue(_) => BigInt::one(),
    });
    let l = denoms.fold(BigInt::one(), |acc, d| num_integer::Integer::lcm(&acc, &d));
    v.iter()
        .map(|x| {
            let scaled = q.mul(x, &q.from_bigint(&l));
            q.to_integer(&scaled).expect("cleared denominators")
        })
        .collect()
}

fn center_shape(a: &Algebra, t: &IntegerTable) -> Result<CenterShape> {
    let lift = rational_lift(a, t)?;
    let center = central::center(&lift);
    let q = lift.field();
    let annihilator = if center.is_zero() {
        (0..t.n)
            .map(|i| (0..t.n).map(|j| BigInt::from(u8::from(i == j))).collect())
            .collect()
    } else {
        linalg::kernel(&center.basis_matrix())
            .basis()
            .iter()
            .map(|v| integral_row(q, v))
            .collect()
    };
    Ok(CenterShape { center, annihilator })
}

fn apply_functional(phi: &[BigInt], coords: &[MultiPoly]) -> MultiPoly {
    phi.iter()
        .zip(coords)
        .filter(|(c, _)| !c.is_zero())
        .fold(MultiPoly::zero(), |acc, (c, p)| acc.add(&p.scale(c)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledPoly {
    pub basis: String,
    pub poly: MultiPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub prime: u64,
    /// Variables the search ranged over, in order.
    pub variables: Vec<String>,
    pub points_searched: u64,
    /// Points with non-central element and zero product.
    pub count: u64,
    pub points: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessCertificate {
    pub variables: Vec<String>,
    /// `W(x)` as coordinate polynomials.
    pub witness: Vec<LabeledPoly>,
    /// Coordinates of `x · W(x)`.
    pub product: Vec<LabeledPoly>,
    /// The functionals vanishing on the center, applied to the product.
    pub noncentral_residues: Vec<MultiPoly>,
    pub noncentral_vanishes: bool,
    /// Product coordinates along the center's canonical basis, labelled by
    /// pivot.
    pub central_coordinates: Vec<LabeledPoly>,
    /// A central coordinate equal to `Σ φ(x)²` over the functionals `φ`
    /// vanishing on the center. Over an ordered field such as ℚ it is
    /// nonzero at every non-central `x`.
    pub sum_of_squares_coordinate: Option<String>,
    pub vanishing: Vec<VanishingReport>,
}

impl WitnessCertificate {
    /// Primes with a point where the witness product is zero although the
    /// element is not central.
    pub fn failing_primes(&self) -> Vec<u64> {
        self.vanishing.iter().filter(|v| v.count > 0).map(|v| v.prime).collect()
    }

    pub fn central_coordinate(&self, basis: &str) -> Option<&MultiPoly> {
        self.central_coordinates
            .iter()
            .find(|c| c.basis == basis)
            .map(|c| &c.poly)
    }
}

/// Checks a linear witness map `W` (rows index output coordinates, columns
/// input coordinates): each column must be central, and `x · W(x)` is
/// expanded for a generic `x`. Vanishing of the central part at non-central
/// points is searched over `F_p` for each of `primes`.
pub fn witness_certificate_check(
    a: &Algebra,
    w: &[Vec<i64>],
    primes: &[u64],
) -> Result<WitnessCertificate> {
    let t = IntegerTable::of(a)?;
    let n = t.n;
    if w.len() != n || w.iter().any(|r| r.len() != n) {
        return Err(Error::BadShape(format!("witness map must be {n}x{n}")));
    }
    for col in 0..n {
        let z: Vec<BigInt> = (0..n).map(|r| BigInt::from(w[r][col])).collect();
        if !t.commutes_with_all(&z) {
            return Err(Error::WitnessNotCentral { column: col });
        }
    }
    let shape = center_shape(a, &t)?;
    let vars = coordinate_letters(a);
    let x = generic(&vars);
    let wx: Vec<MultiPoly> = (0..n)
        .map(|r| {
            (0..n).fold(MultiPoly::zero_in(&vars), |acc, c| {
                acc.add(&x[c].scale(&BigInt::from(w[r][c])))
            })
        })
        .collect();
    let product = t.product(&x, &wx);
    let noncentral_residues: Vec<MultiPoly> = shape
        .annihilator
        .iter()
        .map(|phi| apply_functional(phi, &product))
        .collect();
    let noncentral_vanishes = noncentral_residues.iter().all(MultiPoly::is_zero);
    let central_coordinates: Vec<LabeledPoly> = shape
        .center
        .pivots()
        .iter()
        .map(|&k| LabeledPoly {
            basis: a.names()[k].clone(),
            poly: MultiPoly::zero_in(&vars).add(&product[k]),
        })
        .collect();
    let element_noncentral: Vec<MultiPoly> = shape
        .annihilator
        .iter()
        .map(|phi| apply_functional(phi, &x))
        .collect();
    let squares = element_noncentral
        .iter()
        .fold(MultiPoly::zero_in(&vars), |acc, q| acc.add(&q.mul(q)));
    let sum_of_squares_coordinate = central_coordinates
        .iter()
        .find(|c| !squares.is_zero() && c.poly == squares)
        .map(|c| c.basis.clone());
    let vanishing = primes
        .iter()
        .map(|&p| vanishing_points(&vars, &central_coordinates, &element_noncentral, p))
        .collect::<Result<_>>()?;
    let labeled = |ps: Vec<MultiPoly>| {
        ps.into_iter()
            .enumerate()
            .map(|(k, poly)| LabeledPoly {
                basis: a.names()[k].clone(),
                poly: MultiPoly::zero_in(&vars).add(&poly),
            })
            .collect()
    };
    Ok(WitnessCertificate {
        variables: vars.clone(),
        witness: labeled(wx),
        product: labeled(product),
        noncentral_residues,
        noncentral_vanishes,
        central_coordinates,
        sum_of_squares_coordinate,
        vanishing,
    })
}

fn vanishing_points(
    vars: &[String],
    central: &[LabeledPoly],
    element_noncentral: &[MultiPoly],
    p: u64,
) -> Result<VanishingReport> {
    let searched: Vec<String> = vars
        .iter()
        .filter(|v| {
            central
                .iter()
                .map(|c| &c.poly)
                .chain(element_noncentral)
                .any(|q| q.occurring().contains(&v.as_str()))
        })
        .cloned()
        .collect();
    let total = (p as u128).pow(searched.len() as u32);
    if total > MAX_SEARCH_POINTS as u128 {
        return Err(Error::TooLarge {
            what: format!("vanishing search over F{p}"),
            limit: MAX_SEARCH_POINTS,
        });
    }
    let total = total as u64;
    let digits = |mut idx: u64| {
        let mut d = vec![0; searched.len()];
        for slot in d.iter_mut() {
            *slot = idx % p;
            idx /= p;
        }
        d
    };
    let hits: Vec<u64> = (0..total)
        .into_par_iter()
        .filter(|&idx| {
            let d = digits(idx);
            let pt = |name: &str| searched.iter().position(|s| s == name).map(|i| d[i]);
            element_noncentral.iter().any(|q| q.eval_mod(p, &pt) != 0)
                && central.iter().all(|c| c.poly.eval_mod(p, &pt) == 0)
        })
        .collect();
    Ok(VanishingReport {
        prime: p,
        variables: searched.clone(),
        points_searched: total,
        count: hits.len() as u64,
        points: hits.iter().take(MAX_LISTED_POINTS).map(|&i| digits(i)).collect(),
    })
}

/// A case-split witness: for the first branch whose guard coordinate is
/// nonzero, multiply by that branch's central element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PiecewiseWitness {
    pub branches: Vec<Branch>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Branch {
    pub guard: usize,
    pub witness: Vec<i64>,
}

impl PiecewiseWitness {
    /// `Ed` when the `a` coordinate is nonzero, else `Ee` (guarded by `b`).
    pub fn flagship() -> Self {
        use crate::catalog::basis::*;
        let unit = |k: usize| (0..7).map(|i| i64::from(i == k)).collect();
        PiecewiseWitness {
            branches: vec![
                Branch { guard: EA, witness: unit(ED) },
                Branch { guard: EB, witness: unit(EE) },
            ],
        }
    }

    /// Branch index for a concrete element, if any guard is nonzero.
    pub fn select(&self, f: FieldDesc, x: &[Scalar]) -> Option<usize> {
        self.branches.iter().position(|b| !f.is_zero(&x[b.guard]))
    }

    pub fn witness_in(&self, f: FieldDesc, branch: usize) -> Vec<Scalar> {
        self.branches[branch].witness.iter().map(|&c| f.from_i64(c)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchCertificate {
    pub guard: String,
    pub witness: String,
    /// `x · z` with earlier guards set to zero.
    pub product: Vec<LabeledPoly>,
    pub noncentral_vanishes: bool,
    /// A central coordinate equal to `±guard`, which is then nonzero in
    /// every characteristic on this branch.
    pub nonzero_coordinate: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PiecewiseCertificate {
    pub branches: Vec<BranchCertificate>,
    /// Every element with all guards zero is central.
    pub covers_noncentral: bool,
    /// First non-guard coordinate whose basis element is not central.
    pub uncovered: Option<String>,
    pub valid: bool,
}

pub fn piecewise_certificate_check(a: &Algebra, pw: &PiecewiseWitness) -> Result<PiecewiseCertificate> {
    let t = IntegerTable::of(a)?;
    let n = t.n;
    for (i, b) in pw.branches.iter().enumerate() {
        if b.witness.len() != n || b.guard >= n {
            return Err(Error::BadShape(format!("branch {i} does not fit dimension {n}")));
        }
        let z: Vec<BigInt> = b.witness.iter().map(|&c| BigInt::from(c)).collect();
        if !t.commutes_with_all(&z) {
            return Err(Error::WitnessNotCentral { column: i });
        }
    }
    let shape = center_shape(a, &t)?;
    let vars = coordinate_letters(a);
    let x = generic(&vars);
    let mut branches = Vec::new();
    for (i, b) in pw.branches.iter().enumerate() {
        let z: Vec<MultiPoly> = b.witness.iter().map(|&c| MultiPoly::constant(c)).collect();
        let product: Vec<MultiPoly> = t
            .product(&x, &z)
            .into_iter()
            .map(|p| {
                pw.branches[..i]
                    .iter()
                    .fold(MultiPoly::zero_in(&vars).add(&p), |q, prev| {
                        q.substitute(&vars[prev.guard], &BigInt::zero())
                    })
            })
            .collect();
        let noncentral_vanishes = shape
            .annihilator
            .iter()
            .all(|phi| apply_functional(phi, &product).is_zero());
        let nonzero_coordinate = shape
            .center
            .pivots()
            .iter()
            .find(|&&k| {
                product[k]
                    .as_multiple_of(&vars[b.guard])
                    .is_some_and(|c| c.abs().is_one())
            })
            .map(|&k| a.names()[k].clone());
        branches.push(BranchCertificate {
            guard: vars[b.guard].clone(),
            witness: a.format_element(&pw.witness_in(a.field(), i)),
            product: product
                .into_iter()
                .enumerate()
                .map(|(k, poly)| LabeledPoly { basis: a.names()[k].clone(), poly })
                .collect(),
            noncentral_vanishes,
            nonzero_coordinate,
        });
    }
    let guards: Vec<usize> = pw.branches.iter().map(|b| b.guard).collect();
    let uncovered = (0..n)
        .filter(|k| !guards.contains(k))
        .find(|&k| {
            let e: Vec<BigInt> = (0..n).map(|i| BigInt::from(u8::from(i == k))).collect();
            !t.commutes_with_all(&e)
        })
        .map(|k| a.names()[k].clone());
    let covers_noncentral = uncovered.is_none();
    let valid = covers_noncentral
        && branches
            .iter()
            .all(|b| b.noncentral_vanishes && b.nonzero_coordinate.is_some());
    Ok(PiecewiseCertificate {
        branches,
        covers_noncentral,
        uncovered,
        valid,
    })
}

/// Result of applying a witness rule to every non-central element of a
/// finite algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessSweep {
    pub field: FieldDesc,
    pub noncentral_checked: u64,
    pub failures: u64,
    /// First non-central element, in enumeration order, whose product with
    /// its witness is zero or not central.
    pub first_failure: Option<Element>,
}

type WitnessRule<'a> = dyn Fn(&[Scalar]) -> Option<Vec<Scalar>> + Sync + 'a;

fn sweep(a: &Algebra, rule: &WitnessRule<'_>) -> Result<WitnessSweep> {
    let f = a.field();
    let z = central::center(a);
    let total = a.element_count()?;
    let outcomes: Vec<(bool, bool)> = (1..total)
        .into_par_iter()
        .map(|idx| {
            let x = a.element_at(idx);
            if z.contains(&x) {
                return (false, false);
            }
            let ok = rule(&x).is_some_and(|w| {
                let y = a.mul(&x, &w);
                z.contains(&w) && z.contains(&y) && !linalg::is_zero_vec(f, &y)
            });
            (true, !ok)
        })
        .collect();
    let noncentral_checked = outcomes.iter().filter(|o| o.0).count() as u64;
    let failures = outcomes.iter().filter(|o| o.1).count() as u64;
    let first_failure = outcomes
        .iter()
        .position(|o| o.1)
        .map(|i| Element::new(a.element_at(i as u64 + 1)));
    Ok(WitnessSweep {
        field: f,
        noncentral_checked,
        failures,
        first_failure,
    })
}

/// Applies a linear witness map to every non-central element.
pub fn linear_witness_sweep(a: &Algebra, w: &[Vec<i64>]) -> Result<WitnessSweep> {
    let f = a.field();
    let n = a.dim();
    let rule = |x: &[Scalar]| {
        Some(
            (0..n)
                .map(|r| {
                    (0..n).fold(f.zero(), |acc, c| f.mul_add(&acc, &f.from_i64(w[r][c]), &x[c]))
                })
                .collect(),
        )
    };
    sweep(a, &rule)
}

/// Applies a piecewise witness to every non-central element.
pub fn piecewise_witness_sweep(a: &Algebra, pw: &PiecewiseWitness) -> Result<WitnessSweep> {
    let f = a.field();
    let rule = |x: &[Scalar]| pw.select(f, x).map(|b| pw.witness_in(f, b));
    sweep(a, &rule)
}
