//! One- and two-sided ideals: generation, sidedness, the Jacobson radical,
//! maximal and minimal one-sided ideals, the socle, and the essential /
//! closed / complement relations between right (or left) ideals.
//!
//! Everything that quantifies over elements needs a finite field. Sweeps over
//! `u ∉ I` run over coset representatives of `I`: for a one-sided ideal `I`
//! the module `I + uA` only depends on the coset `u + I`.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, Element, Side, Violation};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{self, Matrix, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealKind {
    Right,
    Left,
    TwoSided,
}

impl From<Side> for IdealKind {
    fn from(side: Side) -> Self {
        match side {
            Side::Right => IdealKind::Right,
            Side::Left => IdealKind::Left,
        }
    }
}

/// A subspace with its sidedness verdicts and, for each failed side, the
/// first product that leaves it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SidedIdeal {
    pub subspace: Subspace,
    pub is_right: bool,
    pub is_left: bool,
    pub right_violation: Option<Violation>,
    pub left_violation: Option<Violation>,
}

impl SidedIdeal {
    pub fn is_two_sided(&self) -> bool {
        self.is_right && self.is_left
    }

    pub fn is_side(&self, side: Side) -> bool {
        match side {
            Side::Right => self.is_right,
            Side::Left => self.is_left,
        }
    }

    pub fn violation(&self, side: Side) -> Option<&Violation> {
        match side {
            Side::Right => self.right_violation.as_ref(),
            Side::Left => self.left_violation.as_ref(),
        }
    }
}

pub fn sidedness(a: &Algebra, s: &Subspace) -> SidedIdeal {
    let right_violation = a.closure_violation(s, Side::Right);
    let left_violation = a.closure_violation(s, Side::Left);
    SidedIdeal {
        subspace: s.clone(),
        is_right: right_violation.is_none(),
        is_left: left_violation.is_none(),
        right_violation,
        left_violation,
    }
}

/// Smallest subspace containing `generators` and closed under the requested
/// multiplications by basis elements.
pub fn ideal_closure<V: AsRef<[Scalar]>>(
    a: &Algebra,
    generators: &[V],
    kind: IdealKind,
) -> Result<SidedIdeal> {
    let mut s = Subspace::span(a.field(), a.dim(), generators)?;
    let sides: &[Side] = match kind {
        IdealKind::Right => &[Side::Right],
        IdealKind::Left => &[Side::Left],
        IdealKind::TwoSided => &[Side::Right, Side::Left],
    };
    let mut frontier: Vec<Vec<Scalar>> = s.basis().to_vec();
    while let Some(v) = frontier.pop() {
        for &side in sides {
            for k in 0..a.dim() {
                let p = a.mul_by_basis(&v, k, side);
                if s.insert(&p) {
                    frontier.push(p);
                }
            }
        }
    }
    Ok(sidedness(a, &s))
}

fn require_finite(a: &Algebra) -> Result<()> {
    if a.field().is_finite() {
        Ok(())
    } else {
        Err(Error::InfiniteField)
    }
}

fn require_side(a: &Algebra, s: &Subspace, side: Side) -> Result<()> {
    if s.ambient_dim() != a.dim() {
        return Err(Error::AmbientMismatch {
            left: a.dim(),
            right: s.ambient_dim(),
        });
    }
    match a.closure_violation(s, side) {
        None => Ok(()),
        Some(_) => Err(Error::NotAnIdeal(match side {
            Side::Right => "right",
            Side::Left => "left",
        })),
    }
}

// ---------------------------------------------------------------------------
// Jacobson radical
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RadicalMethod {
    /// Radical of `(x, y) ↦ tr(L_x L_y)`; exact in characteristic 0 or
    /// characteristic above the dimension.
    TraceForm,
    /// Element sweep over a finite algebra.
    ElementFilter,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadicalCertificate {
    pub radical: Subspace,
    pub method: RadicalMethod,
    /// Least `k` with `J^k = 0` (1 for `J = 0`).
    pub nilpotency_index: usize,
    pub quotient_dim: usize,
    /// Dimension of the radical of `A/J`, recomputed; always 0.
    pub quotient_radical_dim: usize,
}

/// `J(A)` via the trace form of the left regular representation. Only
/// meaningful in characteristic 0 or characteristic `> dim A`.
pub fn radical_trace_form(a: &Algebra) -> Subspace {
    let f = a.field();
    let n = a.dim();
    // tr(L_{b_l}) = Σ_k c[l][k][k]
    let traces: Vec<Scalar> = (0..n)
        .map(|l| (0..n).fold(f.zero(), |acc, k| f.add(&acc, a.constant(l, k, k))))
        .collect();
    let mut gram = Matrix::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            let g = (0..n).fold(f.zero(), |acc, l| f.mul_add(&acc, a.constant(i, j, l), &traces[l]));
            gram.set(i, j, g);
        }
    }
    linalg::kernel(&gram.transpose())
}

fn is_nilpotent_element(a: &Algebra, x: &[Scalar]) -> bool {
    let f = a.field();
    let mut power = x.to_vec();
    for _ in 1..a.dim() {
        if linalg::is_zero_vec(f, &power) {
            return true;
        }
        power = a.mul(&power, x);
    }
    linalg::is_zero_vec(f, &power)
}

/// Least `k` with `S^k = 0`, or `None` if the powers of `S` stabilize at a
/// nonzero subspace.
pub fn nilpotency_index(a: &Algebra, s: &Subspace) -> Option<usize> {
    let mut power = s.clone();
    let mut k = 1;
    while !power.is_zero() {
        let next = a.subspace_product(&power, s);
        if next == power {
            return None;
        }
        power = next;
        k += 1;
    }
    Some(k)
}

/// `J(A)` over a finite field as the set of `x` with `xA` nilpotent (the
/// quasi-regular elements: `1 - xa` is a unit for every `a`).
///
/// Elements failing the cheap necessary tests (`x` and every `x b_i`
/// nilpotent) are dropped first; the survivors are confirmed exactly by
/// growing a nilpotent right ideal `S ⊆ J` and testing `S + xA`.
pub fn radical_element_filter(a: &Algebra) -> Result<Subspace> {
    let total = a.element_count()?;
    let n = a.dim();
    let candidates: Vec<u64> = (1..total)
        .into_par_iter()
        .filter(|&idx| {
            let x = a.element_at(idx);
            is_nilpotent_element(a, &x)
                && (0..n).all(|k| is_nilpotent_element(a, &a.mul_by_basis(&x, k, Side::Right)))
        })
        .collect();
    let mut acc = Subspace::zero(a.field(), n);
    for idx in candidates {
        let x = a.element_at(idx);
        if acc.contains(&x) {
            continue;
        }
        let grown = acc.sum(&a.principal(&x, Side::Right))?;
        if nilpotency_index(a, &grown).is_some() {
            acc = grown;
        }
    }
    Ok(acc)
}

fn radical_unvalidated(a: &Algebra) -> Result<(Subspace, RadicalMethod)> {
    let p = a.field().characteristic() as usize;
    if p == 0 || p > a.dim() {
        Ok((radical_trace_form(a), RadicalMethod::TraceForm))
    } else {
        Ok((radical_element_filter(a)?, RadicalMethod::ElementFilter))
    }
}

/// The Jacobson radical with a validated certificate: two-sided, nilpotent
/// of index at most `dim A`, and `J(A/J) = 0`.
pub fn jacobson_radical(a: &Algebra) -> Result<RadicalCertificate> {
    let (radical, method) = radical_unvalidated(a)?;
    let fail = |msg: &str| Error::RadicalUncertified(msg.to_string());
    if a.closure_violation(&radical, Side::Right).is_some()
        || a.closure_violation(&radical, Side::Left).is_some()
    {
        return Err(fail("radical is not two-sided"));
    }
    let nilpotency_index = nilpotency_index(a, &radical).ok_or_else(|| fail("radical is not nilpotent"))?;
    if nilpotency_index > a.dim().max(1) {
        return Err(fail("nilpotency index exceeds the dimension"));
    }
    let (quotient, _) = a.quotient(&radical).map_err(|e| match e {
        Error::ImproperIdeal => fail("radical is the whole algebra"),
        other => other,
    })?;
    let (qrad, _) = radical_unvalidated(&quotient)?;
    if !qrad.is_zero() {
        return Err(fail("quotient by the radical is not semisimple"));
    }
    Ok(RadicalCertificate {
        quotient_dim: quotient.dim(),
        radical,
        method,
        nilpotency_index,
        quotient_radical_dim: 0,
    })
}

// ---------------------------------------------------------------------------
// Maximal and minimal one-sided ideals
// ---------------------------------------------------------------------------

/// All maximal right (or left) ideals, sorted by canonical basis.
///
/// Computed in `S = A/J(A)`: every one-sided ideal of a semisimple algebra is
/// principal, so the principal ideals `sS` include all maximal ones; their
/// preimages are the maximal ideals of `A`.
pub fn maximal_one_sided_ideals(a: &Algebra, side: Side) -> Result<Vec<SidedIdeal>> {
    require_finite(a)?;
    let cert = jacobson_radical(a)?;
    let (s, proj) = a.quotient(&cert.radical)?;
    let total = s.element_count()?;
    let principal: BTreeSet<Subspace> = (0..total)
        .into_par_iter()
        .map(|idx| s.principal(&s.element_at(idx), side))
        .filter(|p| !p.is_full())
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    let mut by_dim: Vec<&Subspace> = principal.iter().collect();
    by_dim.sort_by(|x, y| y.dim().cmp(&x.dim()).then_with(|| x.cmp(y)));
    let mut maximal: Vec<&Subspace> = Vec::new();
    for p in by_dim {
        if !maximal.iter().any(|m| p.is_subspace_of(m)) {
            maximal.push(p);
        }
    }
    let mut out: Vec<Subspace> = maximal.into_iter().map(|m| proj.preimage(m)).collect();
    out.sort();
    Ok(out.iter().map(|m| sidedness(a, m)).collect())
}

pub fn maximal_right_ideals(a: &Algebra) -> Result<Vec<SidedIdeal>> {
    maximal_one_sided_ideals(a, Side::Right)
}

/// All minimal right (or left) ideals, sorted by canonical basis. A minimal
/// one-sided ideal is generated by any of its nonzero elements, so it is
/// enough to look at the principal ideals `aA`.
pub fn minimal_one_sided_ideals(a: &Algebra, side: Side) -> Result<Vec<SidedIdeal>> {
    require_finite(a)?;
    let total = a.element_count()?;
    let principal: HashSet<Subspace> = (1..total)
        .into_par_iter()
        .map(|idx| a.principal(&a.element_at(idx), side))
        .collect();
    let mut by_dim: Vec<Subspace> = principal.into_iter().collect();
    by_dim.sort_by(|x, y| x.dim().cmp(&y.dim()).then_with(|| x.cmp(y)));
    let mut minimal: Vec<Subspace> = Vec::new();
    for p in by_dim {
        if !minimal.iter().any(|m| m.is_subspace_of(&p)) {
            minimal.push(p);
        }
    }
    minimal.sort();
    Ok(minimal.iter().map(|m| sidedness(a, m)).collect())
}

pub fn minimal_right_ideals(a: &Algebra) -> Result<Vec<SidedIdeal>> {
    minimal_one_sided_ideals(a, Side::Right)
}

/// Sum of all minimal right (or left) ideals.
pub fn socle(a: &Algebra, side: Side) -> Result<Subspace> {
    let mut out = Subspace::zero(a.field(), a.dim());
    for m in minimal_one_sided_ideals(a, side)? {
        out = out.sum(&m.subspace)?;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Essential extensions, closed ideals, complements
// ---------------------------------------------------------------------------

fn meets(x: &Subspace, y: &Subspace) -> bool {
    let mut joined = x.clone();
    let grew = y.basis().iter().filter(|v| joined.insert(v)).count();
    grew < y.dim()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EssentialVerdict {
    pub essential: bool,
    /// A nonzero `m ∈ M` whose cyclic submodule meets `N` only in zero.
    pub witness: Option<Element>,
    pub elements_checked: u64,
}

/// Whether `N ⊆ M` is essential as right (left) modules: every nonzero
/// cyclic submodule `mA` of `M` meets `N`.
pub fn is_essential(a: &Algebra, n: &Subspace, m: &Subspace, side: Side) -> Result<EssentialVerdict> {
    require_finite(a)?;
    require_side(a, n, side)?;
    require_side(a, m, side)?;
    if !n.is_subspace_of(m) {
        return Err(Error::NotNested);
    }
    let total = m.element_count()?;
    let witness = (1..total).into_par_iter().find_first(|&idx| {
        let v = m.element_at(idx);
        !n.contains(&v) && !meets(n, &a.principal(&v, side))
    });
    Ok(EssentialVerdict {
        essential: witness.is_none(),
        witness: witness.map(|idx| Element::new(m.element_at(idx))),
        elements_checked: witness.unwrap_or(total - 1),
    })
}

/// `I + uA` (right) or `I + Au` (left).
pub fn extend(a: &Algebra, i: &Subspace, u: &[Scalar], side: Side) -> Subspace {
    i.sum(&a.principal(u, side)).expect("same ambient")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extension {
    pub u: Element,
    pub module: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedVerdict {
    pub closed: bool,
    /// On not closed: `u ∉ I` with `I` essential in the proper extension
    /// `I + uA`.
    pub extension: Option<Extension>,
    /// On closed: a `∩`-complement `K` of `I` such that `I` is in turn a
    /// `∩`-complement of `K`.
    pub complement: Option<Subspace>,
}

/// `I` is closed iff it has no proper essential extension. If `I ⊊ Y` is
/// essential, so is `I ⊆ I + uA` for any `u ∈ Y \ I`; hence it suffices to
/// test the extensions `I + uA`.
pub fn is_closed(a: &Algebra, i: &Subspace, side: Side) -> Result<ClosedVerdict> {
    require_finite(a)?;
    require_side(a, i, side)?;
    let mut seen = HashSet::new();
    for idx in 1..i.coset_count()? {
        let u = i.coset_rep_at(idx);
        let y = extend(a, i, &u, side);
        if !seen.insert(y.clone()) {
            continue;
        }
        if is_essential(a, i, &y, side)?.essential {
            return Ok(ClosedVerdict {
                closed: false,
                extension: Some(Extension {
                    u: Element::new(u),
                    module: y,
                }),
                complement: None,
            });
        }
    }
    let k = complement_of(a, i, side)?;
    if !intersection_complement_check(a, i, &k, side)?.is_complement {
        return Err(Error::CertificateFailed(
            "closed ideal is not a complement of its complement".into(),
        ));
    }
    Ok(ClosedVerdict {
        closed: true,
        extension: None,
        complement: Some(k),
    })
}

/// A `∩`-complement of `x`: greedily add `uA` in enumeration order while
/// the sum still meets `x` trivially. One pass is maximal.
pub fn complement_of(a: &Algebra, x: &Subspace, side: Side) -> Result<Subspace> {
    require_finite(a)?;
    require_side(a, x, side)?;
    let mut k = Subspace::zero(a.field(), a.dim());
    for idx in 1..a.element_count()? {
        let u = a.element_at(idx);
        if k.contains(&u) {
            continue;
        }
        let grown = extend(a, &k, &u, side);
        if !meets(&grown, x) {
            k = grown;
        }
    }
    Ok(k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementVerdict {
    pub is_complement: bool,
    /// Nonzero element of `K ∩ X`, when they meet.
    pub meets: Option<Element>,
    /// `u ∉ K` with `(K + uA) ∩ X = 0`, when `K` is not maximal.
    pub extension: Option<Element>,
}

/// Whether `K` is a `∩`-complement of `X`: `K ∩ X = 0` and every `K + uA`
/// with `u ∉ K` meets `X`. A true verdict certifies `K` closed.
pub fn intersection_complement_check(
    a: &Algebra,
    k: &Subspace,
    x: &Subspace,
    side: Side,
) -> Result<ComplementVerdict> {
    require_finite(a)?;
    require_side(a, k, side)?;
    require_side(a, x, side)?;
    let cap = k.intersect(x)?;
    if !cap.is_zero() {
        return Ok(ComplementVerdict {
            is_complement: false,
            meets: Some(Element::new(cap.basis()[0].clone())),
            extension: None,
        });
    }
    let mut seen = HashSet::new();
    for idx in 1..k.coset_count()? {
        let u = k.coset_rep_at(idx);
        let y = extend(a, k, &u, side);
        if !seen.insert(y.clone()) {
            continue;
        }
        if !meets(&y, x) {
            return Ok(ComplementVerdict {
                is_complement: false,
                meets: None,
                extension: Some(Element::new(u)),
            });
        }
    }
    Ok(ComplementVerdict {
        is_complement: true,
        meets: None,
        extension: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiInvariance {
    pub side: Side,
    pub quasi_invariant: bool,
    pub maximal_count: usize,
    /// A maximal ideal of the given side that is not two-sided.
    pub witness: Option<SidedIdeal>,
}

/// Right (left) quasi-invariance: every maximal right (left) ideal is
/// two-sided.
pub fn is_quasi_invariant(a: &Algebra, side: Side) -> Result<QuasiInvariance> {
    let maximal = maximal_one_sided_ideals(a, side)?;
    let witness = maximal.iter().find(|m| !m.is_two_sided()).cloned();
    Ok(QuasiInvariance {
        side,
        quasi_invariant: witness.is_none(),
        maximal_count: maximal.len(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, basis::*};
    use crate::field::FieldDesc;

    fn f2() -> FieldDesc {
        FieldDesc::prime(2).unwrap()
    }

    fn span(a: &Algebra, idx: &[usize]) -> Subspace {
        Subspace::span(a.field(), a.dim(), idx.iter().map(|&i| a.basis_element(i))).unwrap()
    }

    /// Oracle: `x ∈ J` iff `L_{1 - xa}` is invertible for every `a`.
    fn quasi_regular_elements(a: &Algebra) -> Vec<Vec<Scalar>> {
        let f = a.field();
        let all: Vec<_> = a.elements().unwrap().collect();
        all.iter()
            .filter(|x| {
                all.iter().all(|y| {
                    let one_minus = linalg::sub_vec(f, a.unit(), &a.mul(x, y));
                    a.multiplication_matrix(&one_minus, Side::Left).is_invertible()
                })
            })
            .cloned()
            .collect()
    }

    #[test]
    fn closure_examples() {
        let fl = catalog::flagship(f2());
        let a = &fl.algebra;
        let r = ideal_closure(a, &[a.basis_element(EE)], IdealKind::Right).unwrap();
        assert_eq!(r.subspace, span(a, &[EE, EF]));
        let r = ideal_closure(a, &[a.basis_element(EB)], IdealKind::Right).unwrap();
        assert_eq!(r.subspace, span(a, &[EB, EF]));
        for kind in [IdealKind::Right, IdealKind::Left, IdealKind::TwoSided] {
            assert!(ideal_closure(a, &[a.unit()], kind).unwrap().subspace.is_full());
        }
    }

    #[test]
    fn flagship_sidedness() {
        let fl = catalog::flagship(f2());
        let a = &fl.algebra;
        let i = sidedness(a, &fl.ideal_i);
        assert!(i.is_right && !i.is_left);
        let v = i.left_violation.unwrap();
        assert_eq!((v.multiplier, a.format_element(&v.generator_vector), a.format_element(&v.product)), (EA, "Eb".into(), "Ec".into()));
        let j = sidedness(a, &fl.ideal_j);
        assert!(j.is_left && !j.is_right);
        let v = j.right_violation.unwrap();
        assert_eq!((a.format_element(&v.generator_vector), v.multiplier, a.format_element(&v.product)), ("Ea".into(), EB, "Ec".into()));
        assert!(sidedness(a, &fl.ideal_c).is_two_sided());
    }

    #[test]
    fn radical_examples() {
        let f = f2();
        let fl = catalog::flagship(f);
        let cert = jacobson_radical(&fl.algebra).unwrap();
        assert_eq!(cert.radical, span(&fl.algebra, &[EA, EB, EC, ED, EE, EF]));
        assert_eq!(cert.nilpotency_index, 3);
        assert_eq!(cert.quotient_dim, 1);
        assert_eq!(cert.method, RadicalMethod::ElementFilter);

        let field = catalog::field_algebra(f);
        assert!(jacobson_radical(&field).unwrap().radical.is_zero());
        assert_eq!(jacobson_radical(&field).unwrap().nilpotency_index, 1);

        let ut2 = catalog::upper_triangular(2, f);
        let e12 = ut2.index_of("E12").unwrap();
        assert_eq!(jacobson_radical(&ut2).unwrap().radical, span(&ut2, &[e12]));
        assert!(jacobson_radical(&catalog::full_matrix(2, f)).unwrap().radical.is_zero());
    }

    #[test]
    fn element_filter_matches_quasi_regular_oracle() {
        for p in [2u64, 3] {
            let f = FieldDesc::prime(p).unwrap();
            let mut algebras = vec![
                catalog::upper_triangular(2, f),
                catalog::full_matrix(2, f),
                catalog::dual_numbers(f),
            ];
            if p == 2 {
                algebras.push(catalog::flagship(f).algebra);
                algebras.push(catalog::upper_triangular(3, f));
            }
            for a in algebras {
                let oracle = quasi_regular_elements(&a);
                let j = radical_element_filter(&a).unwrap();
                assert_eq!(j.element_count().unwrap() as usize, oracle.len());
                assert!(oracle.iter().all(|x| j.contains(x)));
            }
        }
    }

    #[test]
    fn trace_form_over_rationals() {
        let q = FieldDesc::rationals();
        let fl = catalog::flagship(q);
        let cert = jacobson_radical(&fl.algebra).unwrap();
        assert_eq!(cert.method, RadicalMethod::TraceForm);
        assert_eq!(cert.radical.dim(), 6);
        let ut3 = catalog::upper_triangular(3, q);
        assert_eq!(jacobson_radical(&ut3).unwrap().radical.dim(), 3);
    }

    #[test]
    fn maximal_right_ideal_examples() {
        let f = f2();
        let fl = catalog::flagship(f);
        let max = maximal_right_ideals(&fl.algebra).unwrap();
        assert_eq!(max.len(), 1);
        assert_eq!(max[0].subspace, span(&fl.algebra, &[EA, EB, EC, ED, EE, EF]));
        assert_eq!(maximal_right_ideals(&catalog::full_matrix(2, f)).unwrap().len(), 3);
        let field_max = maximal_right_ideals(&catalog::field_algebra(f)).unwrap();
        assert_eq!(field_max.len(), 1);
        assert!(field_max[0].subspace.is_zero());
    }

    #[test]
    fn radical_is_intersection_of_maximal_ideals() {
        let f = f2();
        for a in [
            catalog::flagship(f).algebra,
            catalog::full_matrix(2, f),
            catalog::upper_triangular(3, f),
            catalog::dual_numbers(FieldDesc::prime(3).unwrap()),
        ] {
            let max = maximal_right_ideals(&a).unwrap();
            let mut cap = Subspace::full(a.field(), a.dim());
            for m in &max {
                cap = cap.intersect(&m.subspace).unwrap();
                // nothing strictly between M and A
                for idx in 1..m.subspace.coset_count().unwrap() {
                    let u = m.subspace.coset_rep_at(idx);
                    assert!(extend(&a, &m.subspace, &u, Side::Right).is_full());
                }
            }
            assert_eq!(cap, jacobson_radical(&a).unwrap().radical);
        }
    }

    #[test]
    fn minimal_right_ideal_examples() {
        let f = f2();
        let fl = catalog::flagship(f);
        let a = &fl.algebra;
        let mins = minimal_right_ideals(a).unwrap();
        let got: Vec<String> = mins.iter().map(|m| a.format_subspace(&m.subspace)).collect();
        let mut want = vec!["span{Ec}", "span{Ef}", "span{Ec + Ef}"];
        want.sort_by_key(|s| {
            let v = a.parse_element(&s[5..s.len() - 1]).unwrap();
            Subspace::span(f, 7, [v]).unwrap()
        });
        assert_eq!(got, want);
        assert_eq!(socle(a, Side::Right).unwrap(), span(a, &[EC, EF]));
        for m in &mins {
            for idx in 1..m.subspace.element_count().unwrap() {
                assert_eq!(a.principal(&m.subspace.element_at(idx), Side::Right), m.subspace);
            }
        }
        assert!(socle(&catalog::full_matrix(2, f), Side::Right).unwrap().is_full());
    }

    #[test]
    fn essential_examples() {
        let fl = catalog::flagship(f2());
        let a = &fl.algebra;
        let v = is_essential(a, &span(a, &[EF]), &fl.ideal_i, Side::Right).unwrap();
        assert!(v.essential);
        let v = is_essential(a, &fl.ideal_c, &Subspace::full(a.field(), 7), Side::Right).unwrap();
        assert!(!v.essential);
        let w = v.witness.unwrap();
        assert!(!meets(&fl.ideal_c, &a.principal(&w, Side::Right)));
        assert!(is_essential(a, &fl.ideal_i, &fl.ideal_i, Side::Right).unwrap().essential);
        assert!(matches!(
            is_essential(a, &fl.ideal_i, &fl.ideal_c, Side::Right),
            Err(Error::NotNested)
        ));
        assert!(matches!(
            is_essential(a, &fl.ideal_i, &fl.ideal_i, Side::Left),
            Err(Error::NotAnIdeal("left"))
        ));
    }

    #[test]
    fn closedness_of_flagship_ideals() {
        let fl = catalog::flagship(f2());
        let a = &fl.algebra;
        let v = is_closed(a, &fl.ideal_i, Side::Right).unwrap();
        assert!(!v.closed);
        let ext = v.extension.unwrap();
        assert!(ext.module.dim() > fl.ideal_i.dim());
        assert!(is_essential(a, &fl.ideal_i, &ext.module, Side::Right).unwrap().essential);
        // the extension by Ee works as well
        let by_ee = extend(a, &fl.ideal_i, &a.basis_element(EE), Side::Right);
        assert_eq!(by_ee, span(a, &[EB, EE, EF]));
        assert!(is_essential(a, &fl.ideal_i, &by_ee, Side::Right).unwrap().essential);

        let c = is_closed(a, &fl.ideal_c, Side::Right).unwrap();
        assert!(c.closed);
        let k = c.complement.unwrap();
        assert!(intersection_complement_check(a, &fl.ideal_c, &k, Side::Right).unwrap().is_complement);
        assert!(is_closed(a, &Subspace::full(a.field(), 7), Side::Right).unwrap().closed);
    }

    #[test]
    fn complement_examples() {
        let fl = catalog::flagship(f2());
        let a = &fl.algebra;
        assert!(intersection_complement_check(a, &fl.ideal_c, &fl.ideal_i, Side::Right).unwrap().is_complement);
        assert!(intersection_complement_check(a, &fl.ideal_c, &fl.ideal_j, Side::Left).unwrap().is_complement);
        let v = intersection_complement_check(a, &fl.ideal_i, &fl.ideal_c, Side::Right).unwrap();
        assert!(!v.is_complement);
        let u = v.extension.unwrap();
        assert!(!meets(&extend(a, &fl.ideal_i, &u, Side::Right), &fl.ideal_c));
        let zero = Subspace::zero(a.field(), 7);
        let full = Subspace::full(a.field(), 7);
        assert!(intersection_complement_check(a, &zero, &full, Side::Right).unwrap().is_complement);
        assert!(!intersection_complement_check(a, &zero, &fl.ideal_c, Side::Right).unwrap().is_complement);
    }

    #[test]
    fn quasi_invariance_examples() {
        let f = f2();
        let fl = catalog::flagship(f);
        for side in [Side::Right, Side::Left] {
            assert!(is_quasi_invariant(&fl.algebra, side).unwrap().quasi_invariant);
        }
        let m2 = is_quasi_invariant(&catalog::full_matrix(2, f), Side::Right).unwrap();
        assert!(!m2.quasi_invariant);
        assert!(!m2.witness.unwrap().is_left);
        assert!(is_quasi_invariant(&catalog::dual_numbers(f), Side::Right).unwrap().quasi_invariant);
    }

    #[test]
    fn finite_field_required() {
        let q = catalog::flagship(FieldDesc::rationals());
        assert!(matches!(maximal_right_ideals(&q.algebra), Err(Error::InfiniteField)));
        assert!(matches!(minimal_right_ideals(&q.algebra), Err(Error::InfiniteField)));
        assert!(matches!(is_closed(&q.algebra, &q.ideal_i, Side::Right), Err(Error::InfiniteField)));
    }
}
