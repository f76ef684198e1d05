//! Verdict sheets: each row states a claim, the computed verdict, the
//! evidence behind it, and whether the two agree. A disagreement is data,
//! not an error; only a failed internal re-check is an error.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{truncated_index, truncated_polynomial_algebra, Algebra, Side};
use crate::catalog::{self, basis::*, Flagship};
use crate::central::{self, CeMode, CeOptions, CeReport, CeVerdict};
use crate::error::{Error, Result};
use crate::field::{FieldDesc, Scalar};
use crate::ideals::{self, SidedIdeal};
use crate::linalg::{self, Subspace};
use crate::symbolic::{self, PiecewiseWitness};

/// Element-count guard for the truncated central-essential check.
pub const TRUNCATED_CE_LIMIT: u64 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerdictRow {
    pub claim_id: String,
    pub claim: String,
    pub verdict: String,
    pub evidence: String,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub data: Value,
    /// `None` for informational rows.
    pub agrees_with_claim: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerdictSheet {
    pub title: String,
    pub algebra: String,
    pub rows: Vec<VerdictRow>,
}

impl VerdictSheet {
    fn new(title: &str, algebra: &str) -> Self {
        VerdictSheet {
            title: title.into(),
            algebra: algebra.into(),
            rows: Vec::new(),
        }
    }

    fn push(
        &mut self,
        id: &str,
        claim: &str,
        verdict: impl Into<String>,
        evidence: impl Into<String>,
        agrees: Option<bool>,
    ) -> &mut VerdictRow {
        self.rows.push(VerdictRow {
            claim_id: id.into(),
            claim: claim.into(),
            verdict: verdict.into(),
            evidence: evidence.into(),
            data: Value::Null,
            agrees_with_claim: agrees,
        });
        self.rows.last_mut().expect("just pushed")
    }

    pub fn row(&self, id: &str) -> Option<&VerdictRow> {
        self.rows.iter().find(|r| r.claim_id == id)
    }

    /// Ids of rows whose verdict contradicts their claim.
    pub fn disagreements(&self) -> Vec<&str> {
        self.rows
            .iter()
            .filter(|r| r.agrees_with_claim == Some(false))
            .map(|r| r.claim_id.as_str())
            .collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }

    /// Aligned plain-text table.
    pub fn render_text(&self) -> String {
        let header = ["claim_id", "verdict", "agrees", "evidence"];
        let cells: Vec<[String; 4]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.claim_id.clone(),
                    r.verdict.clone(),
                    match r.agrees_with_claim {
                        Some(true) => "yes".into(),
                        Some(false) => "NO".into(),
                        None => "-".into(),
                    },
                    r.evidence.clone(),
                ]
            })
            .collect();
        let width = |c: usize| {
            cells
                .iter()
                .map(|r| r[c].chars().count())
                .chain([header[c].len()])
                .max()
                .unwrap_or(0)
        };
        let widths = [width(0), width(1), width(2)];
        let mut out = String::new();
        writeln!(out, "{} [{}]", self.title, self.algebra).unwrap();
        let line = |out: &mut String, r: [&str; 4]| {
            let mut s = String::new();
            for c in 0..3 {
                let pad = widths[c] - r[c].chars().count();
                write!(s, "{}{}  ", r[c], " ".repeat(pad)).unwrap();
            }
            s.push_str(r[3]);
            writeln!(out, "{}", s.trim_end()).unwrap();
        };
        line(&mut out, header);
        for r in &cells {
            line(&mut out, [&r[0], &r[1], &r[2], &r[3]]);
        }
        for r in &self.rows {
            writeln!(out, "  {}: {}", r.claim_id, r.claim).unwrap();
        }
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn require_prime(a: &Algebra) -> Result<()> {
    a.field().modulus().map(|_| ()).ok_or(Error::InfiniteField)
}

/// `"Ea·Eb = Ec"` for a sidedness violation, in the order the product is
/// taken.
pub fn describe_violation(a: &Algebra, v: &crate::algebra::Violation) -> String {
    let mut g = a.format_element(&v.generator_vector);
    if g.contains(' ') {
        g = format!("({g})");
    }
    let m = &a.names()[v.multiplier];
    let p = a.format_element(&v.product);
    match v.side {
        Side::Right => format!("{g}·{m} = {p}"),
        Side::Left => format!("{m}·{g} = {p}"),
    }
}

/// `"right ideal: yes; left ideal: no (witness Ea·Eb = Ec)"`.
pub fn describe_sidedness(a: &Algebra, s: &SidedIdeal) -> String {
    let part = |side: Side, label: &str| match s.violation(side) {
        None => format!("{label} ideal: yes"),
        Some(v) => format!("{label} ideal: no (witness {})", describe_violation(a, v)),
    };
    format!("{}; {}", part(Side::Right, "right"), part(Side::Left, "left"))
}

/// `"centrally_essential (exhaustive, 127 non-zero elements checked)"`.
pub fn describe_ce(a: &Algebra, r: &CeReport) -> String {
    match (r.mode, &r.counterexample) {
        ("exhaustive", None) => format!("{} (exhaustive, {} non-zero elements checked)", r.verdict, r.nonzero_checked),
        (_, Some(c)) => format!("{} ({}, counterexample {})", r.verdict, r.mode, a.format_element(&c.element)),
        (mode, None) => format!(
            "{} ({mode}, {} trials, seed {})",
            r.verdict,
            r.trials.unwrap_or(0),
            r.seed.unwrap_or(0)
        ),
    }
}

fn exhaustive_ce(a: &Algebra, record_witnesses: bool) -> Result<CeReport> {
    let r = central::check_centrally_essential_with(a, CeMode::Exhaustive, CeOptions { record_witnesses })?;
    r.revalidate(a)?;
    Ok(r)
}

fn ideal_list(a: &Algebra, ids: &[SidedIdeal]) -> String {
    ids.iter()
        .map(|m| a.format_subspace(&m.subspace))
        .collect::<Vec<_>>()
        .join(", ")
}

// ---------------------------------------------------------------------------
// A/J(A) centrally essential ⇒ A/J(A) commutative and A quasi-invariant
// ---------------------------------------------------------------------------

pub fn quotient_commutativity_check(a: &Algebra, label: &str) -> Result<VerdictSheet> {
    require_prime(a)?;
    let mut sheet = VerdictSheet::new("semisimple quotient: central essentiality forces commutativity", label);
    let cert = ideals::jacobson_radical(a)?;
    let (q, _) = a.quotient(&cert.radical)?;
    sheet.push(
        "radical",
        "J(A) is computed with a validated certificate",
        a.format_subspace(&cert.radical),
        format!(
            "dim {}, nilpotency index {}, dim A/J = {}",
            cert.radical.dim(),
            cert.nilpotency_index,
            cert.quotient_dim
        ),
        None,
    );
    let ce = exhaustive_ce(&q, false)?;
    let premise = ce.verdict == CeVerdict::CentrallyEssential;
    sheet.push("quotient_ce", "A/J(A) is centrally essential (premise)", ce.verdict.to_string(), describe_ce(&q, &ce), None);
    let pair = q.noncommuting_pair();
    let commutative = pair.is_none();
    sheet.push(
        "quotient_commutative",
        "A/J(A) is commutative",
        yes_no(commutative),
        match pair {
            None => "all basis pairs commute".into(),
            Some((i, j)) => format!("{}·{} ≠ {}·{}", q.names()[i], q.names()[j], q.names()[j], q.names()[i]),
        },
        premise.then_some(commutative),
    );
    let mut qi = true;
    for side in [Side::Right, Side::Left] {
        let v = ideals::is_quasi_invariant(a, side)?;
        qi &= v.quasi_invariant;
        sheet.push(
            &format!("{side}_quasi_invariant"),
            &format!("every maximal {side} ideal of A is two-sided"),
            yes_no(v.quasi_invariant),
            match &v.witness {
                None => format!("{} maximal {side} ideals, all two-sided", v.maximal_count),
                Some(w) => format!(
                    "{} is maximal but {}",
                    a.format_subspace(&w.subspace),
                    describe_sidedness(a, w)
                ),
            },
            premise.then_some(v.quasi_invariant),
        );
    }
    let holds = commutative && qi;
    sheet.push(
        "implication",
        "A/J(A) centrally essential implies A/J(A) commutative and A quasi-invariant on both sides",
        match (premise, holds) {
            (false, _) => "vacuous",
            (true, true) => "holds",
            (true, false) => "fails",
        },
        if premise { "premise holds; conclusions checked above" } else { "premise fails" },
        Some(!premise || holds),
    );
    Ok(sheet)
}

// ---------------------------------------------------------------------------
// Minimal right ideals and the socle lie in the center
// ---------------------------------------------------------------------------

pub fn central_socle_check(a: &Algebra, label: &str) -> Result<VerdictSheet> {
    require_prime(a)?;
    let mut sheet = VerdictSheet::new("minimal right ideals and the socle are central", label);
    let ce = exhaustive_ce(a, false)?;
    let is_ce = ce.verdict == CeVerdict::CentrallyEssential;
    sheet.push("ce", "A is centrally essential (premise)", ce.verdict.to_string(), describe_ce(a, &ce), None);
    let cert = ideals::jacobson_radical(a)?;
    let (q, _) = a.quotient(&cert.radical)?;
    let commutative = q.is_commutative();
    sheet.push("quotient_commutative", "A/J(A) is commutative (premise)", yes_no(commutative), format!("dim A/J = {}", q.dim()), None);
    let premise = is_ce && commutative;

    let z = central::center(a);
    let mins = ideals::minimal_right_ideals(a)?;
    let central_all = mins.iter().all(|m| m.subspace.is_subspace_of(&z));
    let two_sided_all = mins.iter().all(SidedIdeal::is_two_sided);
    let socle = ideals::socle(a, Side::Right)?;
    let socle_central = socle.is_subspace_of(&z);
    let bad_central = mins.iter().find(|m| !m.subspace.is_subspace_of(&z));
    let bad_sided = mins.iter().find(|m| !m.is_two_sided());
    sheet
        .push(
            "minimal_central",
            "every minimal right ideal lies in Z(A)",
            yes_no(central_all),
            match bad_central {
                None => format!("{} minimal right ideals: {}", mins.len(), ideal_list(a, &mins)),
                Some(m) => format!("{} is not central", a.format_subspace(&m.subspace)),
            },
            premise.then_some(central_all),
        )
        .data = json!({ "minimal_right_ideals": mins.iter().map(|m| &m.subspace).collect::<Vec<_>>() });
    sheet.push(
        "minimal_two_sided",
        "every minimal right ideal is two-sided",
        yes_no(two_sided_all),
        match bad_sided {
            None => "checked on all basis products".into(),
            Some(m) => format!("{}: {}", a.format_subspace(&m.subspace), describe_sidedness(a, m)),
        },
        premise.then_some(two_sided_all),
    );
    sheet.push(
        "socle_central",
        "the right socle lies in Z(A)",
        yes_no(socle_central),
        format!("socle {} against center {}", a.format_subspace(&socle), a.format_subspace(&z)),
        premise.then_some(socle_central),
    );
    let holds = central_all && two_sided_all && socle_central;
    sheet.push(
        "implication",
        "A centrally essential with A/J(A) commutative implies minimal right ideals and the socle are central",
        match (premise, holds) {
            (false, _) => "vacuous",
            (true, true) => "holds",
            (true, false) => "fails",
        },
        if premise { "premise holds; conclusions checked above" } else { "premise fails" },
        Some(!premise || holds),
    );
    Ok(sheet)
}

// ---------------------------------------------------------------------------
// Maximal right ideals of A[x]/(x^m)
// ---------------------------------------------------------------------------

/// Errors with `NotMaximal` unless `m_ideal` is a maximal right ideal.
pub fn verify_maximal_right_ideal(a: &Algebra, m_ideal: &Subspace) -> Result<()> {
    require_prime(a)?;
    if m_ideal.ambient_dim() != a.dim() || m_ideal.is_full() || a.closure_violation(m_ideal, Side::Right).is_some() {
        return Err(Error::NotMaximal);
    }
    for idx in 1..m_ideal.coset_count()? {
        let u = m_ideal.coset_rep_at(idx);
        if !ideals::extend(a, m_ideal, &u, Side::Right).is_full() {
            return Err(Error::NotMaximal);
        }
    }
    Ok(())
}

/// `{f ∈ A[x]/(x^m) : f_0 ∈ M}`.
pub fn constant_term_preimage(a: &Algebra, r: &Algebra, m_ideal: &Subspace, m: usize) -> Subspace {
    let f = a.field();
    let n = a.dim();
    let mut out = Subspace::zero(f, r.dim());
    for row in m_ideal.basis() {
        let mut v = vec![f.zero(); r.dim()];
        v[..n].clone_from_slice(row);
        out.insert(&v);
    }
    for deg in 1..m {
        for i in 0..n {
            out.insert(&r.basis_element(truncated_index(n, i, deg)));
        }
    }
    out
}

pub fn truncated_maximal_ideal_check(a: &Algebra, m_ideal: &Subspace, m: usize, label: &str) -> Result<VerdictSheet> {
    verify_maximal_right_ideal(a, m_ideal)?;
    let n = a.dim();
    let r = truncated_polynomial_algebra(a, m)?;
    let mbar = constant_term_preimage(a, &r, m_ideal, m);
    let mut sheet = VerdictSheet::new("maximal right ideals of A[x]/(x^m) from those of A", label);
    sheet.push(
        "input",
        "M is a maximal right ideal of A",
        "yes",
        format!("{}; M + uA = A for all {} cosets u ∉ M", a.format_subspace(m_ideal), m_ideal.coset_count()? - 1),
        None,
    );
    let codim_a = n - m_ideal.dim();
    let codim_r = r.dim() - mbar.dim();
    let mut maximal = codim_a == codim_r && r.closure_violation(&mbar, Side::Right).is_none();
    let cosets = mbar.coset_count()?;
    let mut bad_u = None;
    if maximal {
        for idx in 1..cosets {
            let u = mbar.coset_rep_at(idx);
            if !ideals::extend(&r, &mbar, &u, Side::Right).is_full() {
                maximal = false;
                bad_u = Some(r.format_element(&u));
                break;
            }
        }
    }
    sheet.push(
        "extension_maximal",
        "M[x] + xR, the ideal of f with f_0 ∈ M, is a maximal right ideal of R = A[x]/(x^m)",
        yes_no(maximal),
        match bad_u {
            None => format!(
                "dim {} in dim {}; codimension {} in both; M̄ + uR = R for all {} cosets u ∉ M̄",
                mbar.dim(),
                r.dim(),
                codim_a,
                cosets - 1
            ),
            Some(u) => format!("M̄ + ({u})R is proper"),
        },
        Some(maximal),
    );
    let sa = ideals::sidedness(a, m_ideal);
    let sr = ideals::sidedness(&r, &mbar);
    let same = sa.is_two_sided() == sr.is_two_sided();
    sheet.push(
        "two_sided_iff",
        "M̄ is two-sided exactly when M is",
        format!("M two-sided: {}; M̄ two-sided: {}", yes_no(sa.is_two_sided()), yes_no(sr.is_two_sided())),
        match sr.left_violation.as_ref() {
            None => "both closed under left multiplication".into(),
            Some(v) => format!("M̄ fails: {}", describe_violation(&r, v)),
        },
        Some(same),
    );
    if sa.is_two_sided() && sr.is_two_sided() {
        let (qa, pa) = a.quotient(m_ideal)?;
        let (qr, pr) = r.quotient(&mbar)?;
        let f = a.field();
        // constant-term map on the coset-representative basis of R/M̄
        let image: Vec<Vec<Scalar>> = (0..qr.dim())
            .map(|i| pa.apply(&pr.lift(&qr.basis_element(i))[..n]))
            .collect();
        let bijective = qr.dim() == qa.dim() && Subspace::span(f, qa.dim(), &image)?.is_full();
        let phi = |v: &[Scalar]| {
            let mut out = vec![f.zero(); qa.dim()];
            for (c, img) in v.iter().zip(&image) {
                linalg::axpy(f, &mut out, c, img);
            }
            out
        };
        let mut multiplicative = true;
        for i in 0..qr.dim() {
            for j in 0..qr.dim() {
                let lhs = phi(&qr.basis_product(i, j));
                let rhs = qa.mul(&image[i], &image[j]);
                multiplicative &= lhs == rhs;
            }
        }
        let unit = phi(qr.unit()) == qa.unit();
        let iso = bijective && multiplicative && unit;
        sheet.push(
            "constant_term_isomorphism",
            "f + M̄ ↦ f_0 + M is a ring isomorphism R/M̄ → A/M",
            yes_no(iso),
            format!(
                "dim {} on both sides; bijective: {}; multiplicative on all {} basis pairs: {}; unital: {}",
                qr.dim(),
                yes_no(bijective),
                qr.dim() * qr.dim(),
                yes_no(multiplicative),
                yes_no(unit)
            ),
            Some(iso),
        );
    }
    Ok(sheet)
}

// ---------------------------------------------------------------------------
// A centrally essential ⇒ A[x]/(x^m) centrally essential
// ---------------------------------------------------------------------------

fn enumeration_index(f: FieldDesc, v: &[Scalar]) -> u64 {
    let p = u64::from(f.modulus().expect("prime field"));
    v.iter().rev().fold(0, |acc, x| match x {
        Scalar::Residue(r) => acc * p + u64::from(*r),
        Scalar::Rational(_) => unreachable!("prime field"),
    })
}

pub fn truncated_central_essential_check(a: &Algebra, m: usize, label: &str) -> Result<VerdictSheet> {
    require_prime(a)?;
    let p = u64::from(a.field().modulus().expect("prime"));
    let exponent = (a.dim() * m) as u32;
    if (p as u128).checked_pow(exponent).is_none_or(|c| c > TRUNCATED_CE_LIMIT as u128) {
        return Err(Error::TooLarge {
            what: format!("A[x]/(x^{m}) over F{p} with {} coordinates", a.dim() * m),
            limit: TRUNCATED_CE_LIMIT,
        });
    }
    let f = a.field();
    let n = a.dim();
    let r = truncated_polynomial_algebra(a, m)?;
    let mut sheet = VerdictSheet::new("central essentiality passes to A[x]/(x^m)", label);
    let ce_a = exhaustive_ce(a, true)?;
    let premise = ce_a.verdict == CeVerdict::CentrallyEssential;
    sheet.push("base_ce", "A is centrally essential (premise)", ce_a.verdict.to_string(), describe_ce(a, &ce_a), None);
    let ce_r = exhaustive_ce(&r, false)?;
    let conclusion = ce_r.verdict == CeVerdict::CentrallyEssential;
    sheet.push(
        "extension_ce",
        "A[x]/(x^m) is centrally essential",
        ce_r.verdict.to_string(),
        describe_ce(&r, &ce_r),
        premise.then_some(conclusion),
    );
    if premise {
        let witness_for: HashMap<u64, Vec<Scalar>> =
            ce_a.witnesses.iter().map(|w| (w.index, w.x.to_vec())).collect();
        let za = central::center(a);
        let zr = central::center(&r);
        use rayon::prelude::*;
        let total = r.element_count()?;
        let results: Vec<(bool, bool)> = (1..total)
            .into_par_iter()
            .map(|idx| {
                let g = r.element_at(idx);
                if zr.contains(&g) {
                    return (false, false);
                }
                let t = (0..m)
                    .find(|&d| !linalg::is_zero_vec(f, &g[d * n..(d + 1) * n]))
                    .expect("nonzero");
                let lead = &g[t * n..(t + 1) * n];
                let z = if za.contains(lead) {
                    a.unit().to_vec()
                } else {
                    match witness_for.get(&enumeration_index(f, lead)) {
                        Some(x) => x.clone(),
                        None => return (true, true),
                    }
                };
                let mut w = vec![f.zero(); r.dim()];
                let shift = m - 1 - t;
                w[shift * n..(shift + 1) * n].clone_from_slice(&z);
                let y = r.mul(&g, &w);
                let ok = zr.contains(&w) && zr.contains(&y) && !linalg::is_zero_vec(f, &y);
                (true, !ok)
            })
            .collect();
        let checked = results.iter().filter(|x| x.0).count();
        let failures = results.iter().filter(|x| x.1).count();
        sheet.push(
            "degree_shift_witnesses",
            "for f with lowest nonzero coefficient a_t, z·x^(m-1-t) with z a central witness for a_t gives a nonzero central product",
            if failures == 0 { "all valid" } else { "failures" },
            format!("{checked} non-central elements of A[x]/(x^{m}) checked, {failures} failures"),
            Some(failures == 0),
        );
    }
    sheet.push(
        "implication",
        "A centrally essential implies A[x]/(x^m) centrally essential",
        match (premise, conclusion) {
            (false, _) => "vacuous",
            (true, true) => "holds",
            (true, false) => "fails",
        },
        format!("{} elements in A[x]/(x^{m})", r.element_count()?),
        Some(!premise || conclusion),
    );
    Ok(sheet)
}

// ---------------------------------------------------------------------------
// The 7-dimensional flagship algebra
// ---------------------------------------------------------------------------

fn closed_row(sheet: &mut VerdictSheet, fl: &Flagship, name: &str, side: Side, alt_u: usize) -> Result<()> {
    let a = &fl.algebra;
    let s = fl.named_ideal(name).expect("named");
    let id = format!("closed_{}", name.to_lowercase());
    let claim = format!("{name} = {} is closed as a {side} ideal", a.format_subspace(s));
    if !a.field().is_finite() {
        sheet.push(&id, &claim, "not computed", "closedness is decided over finite fields only", None);
        return Ok(());
    }
    let v = ideals::is_closed(a, s, side)?;
    match &v.extension {
        Some(ext) => {
            let check = ideals::is_essential(a, s, &ext.module, side)?;
            if !check.essential || ext.module.dim() <= s.dim() {
                return Err(Error::CertificateFailed(format!("essential extension of {name} does not re-check")));
            }
            let alt = ideals::extend(a, s, &a.basis_element(alt_u), side);
            let alt_ok = alt.dim() > s.dim() && ideals::is_essential(a, s, &alt, side)?.essential;
            let prod = match side {
                Side::Right => format!("{name} + ({})𝒜", a.format_element(&ext.u)),
                Side::Left => format!("{name} + 𝒜({})", a.format_element(&ext.u)),
            };
            let alt_name = &a.names()[alt_u];
            let alt_prod = match side {
                Side::Right => format!("{name} + {alt_name}𝒜"),
                Side::Left => format!("{name} + 𝒜{alt_name}"),
            };
            sheet
                .push(
                    &id,
                    &claim,
                    "not closed",
                    if alt == ext.module {
                        format!("{name} is essential in the proper extension {prod} = {}", a.format_subspace(&ext.module))
                    } else {
                        format!(
                            "{name} is essential in the proper extension {prod} = {}; also essential in {alt_prod} = {}: {}",
                            a.format_subspace(&ext.module),
                            a.format_subspace(&alt),
                            yes_no(alt_ok)
                        )
                    },
                    Some(false),
                )
                .data = json!({ "u": ext.u, "extension": ext.module, "alternative_extension": alt });
        }
        None => {
            let k = v.complement.expect("closed verdict carries a complement");
            sheet.push(
                &id,
                &claim,
                "closed",
                format!("no essential extension I + u𝒜; ∩-complement certificate {}", a.format_subspace(&k)),
                Some(true),
            );
        }
    }
    Ok(())
}

fn complement_row(sheet: &mut VerdictSheet, fl: &Flagship, k: &str, x: &str, side: Side, agrees: bool) -> Result<()> {
    let a = &fl.algebra;
    let ks = fl.named_ideal(k).expect("named");
    let xs = fl.named_ideal(x).expect("named");
    let id = format!("complement_{}_of_{}", k.to_lowercase(), x.to_lowercase());
    let claim = format!("{k} is a ∩-complement of {x} as {side} ideals");
    if !a.field().is_finite() {
        sheet.push(&id, &claim, "not computed", "requires a finite field", None);
        return Ok(());
    }
    let v = ideals::intersection_complement_check(a, ks, xs, side)?;
    let evidence = match (&v.meets, &v.extension) {
        (Some(m), _) => format!("{k} ∩ {x} contains {}", a.format_element(m)),
        (None, Some(u)) => {
            let ext = ideals::extend(a, ks, u, side);
            if !ext.intersect(xs)?.is_zero() {
                return Err(Error::CertificateFailed(format!("extension of {k} meets {x}")));
            }
            format!(
                "{k} ∩ {x} = 0 but u = {} gives {} with trivial intersection",
                a.format_element(u),
                a.format_subspace(&ext)
            )
        }
        (None, None) => format!("{k} ∩ {x} = 0 and every {k} + u𝒜 (u ∉ {k}) meets {x}; {k} is therefore closed"),
    };
    sheet.push(
        &id,
        &claim,
        yes_no(v.is_complement),
        evidence,
        agrees.then_some(v.is_complement),
    );
    Ok(())
}

/// The full sheet for the flagship algebra over `field`.
pub fn flagship_sheet(field: FieldDesc) -> Result<VerdictSheet> {
    let fl = catalog::flagship(field);
    let a = &fl.algebra;
    let mut sheet = VerdictSheet::new("7-dimensional counterexample algebra", &format!("flagship over {field}"));

    // noncommutativity
    let pair = a.noncommuting_pair();
    let evidence = match pair {
        Some((i, j)) => format!(
            "{}·{} = {}, {}·{} = {}",
            a.names()[i],
            a.names()[j],
            a.format_element(&a.basis_product(i, j)),
            a.names()[j],
            a.names()[i],
            a.format_element(&a.basis_product(j, i))
        ),
        None => "all basis pairs commute".into(),
    };
    sheet.push(
        "noncommutative",
        "the algebra is not commutative",
        if pair.is_some() { "not commutative" } else { "commutative" },
        evidence,
        Some(pair.is_some()),
    );

    // center
    let z = central::center(a);
    let expected = Subspace::span(field, 7, [U, EC, ED, EE, EF].map(|i| a.basis_element(i)))?;
    sheet.push(
        "center",
        "Z = span{U, Ec, Ed, Ee, Ef}",
        a.format_subspace(&z),
        format!("dim {}; kernel of the commutator system with all basis elements", z.dim()),
        Some(z == expected),
    );

    // radical, maximal right ideals, quasi-invariance
    let cert = ideals::jacobson_radical(a)?;
    let rad_expected = Subspace::span(field, 7, [EA, EB, EC, ED, EE, EF].map(|i| a.basis_element(i)))?;
    sheet.push(
        "radical",
        "J = span{Ea, Eb, Ec, Ed, Ee, Ef}, J^3 = 0 ≠ J^2, and the quotient by J is the field",
        a.format_subspace(&cert.radical),
        format!(
            "{:?} method; nilpotency index {}; quotient dim {}; radical of the quotient recomputed as 0",
            cert.method, cert.nilpotency_index, cert.quotient_dim
        ),
        Some(cert.radical == rad_expected && cert.nilpotency_index == 3 && cert.quotient_dim == 1),
    );
    if field.is_finite() {
        let max = ideals::maximal_right_ideals(a)?;
        sheet.push(
            "maximal_right_ideals",
            "the unique maximal right ideal is J",
            ideal_list(a, &max),
            format!("{} maximal right ideals", max.len()),
            Some(max.len() == 1 && max[0].subspace == cert.radical),
        );
        for side in [Side::Right, Side::Left] {
            let q = ideals::is_quasi_invariant(a, side)?;
            sheet.push(
                &format!("{side}_quasi_invariant"),
                &format!("every maximal {side} ideal is two-sided"),
                yes_no(q.quasi_invariant),
                format!("{} maximal {side} ideals", q.maximal_count),
                Some(q.quasi_invariant),
            );
        }
    }

    // central essentiality
    let piecewise = PiecewiseWitness::flagship();
    let pcert = symbolic::piecewise_certificate_check(a, &piecewise)?;
    if field.is_finite() {
        let r = exhaustive_ce(a, true)?;
        sheet
            .push(
                "centrally_essential",
                "the algebra is centrally essential",
                describe_ce(a, &r),
                format!(
                    "{} non-central elements, each with a re-validated central witness",
                    r.noncentral_checked
                ),
                Some(r.verdict == CeVerdict::CentrallyEssential),
            )
            .data = json!({ "witness_count": r.witnesses.len(), "center_dim": r.center_dim });
    } else {
        let r = central::check_centrally_essential(a, CeMode::Random { trials: 500, seed: 0 })?;
        r.revalidate(a)?;
        let ok = pcert.valid && r.verdict != CeVerdict::NotCentrallyEssential;
        sheet.push(
            "centrally_essential",
            "the algebra is centrally essential",
            if ok { "centrally_essential (symbolic certificate)" } else { "not certified" },
            format!(
                "piecewise witness certificate valid: {}; random falsification: {}",
                yes_no(pcert.valid),
                describe_ce(a, &r)
            ),
            Some(ok),
        );
    }

    // the linear witness x ↦ a·Ed + b·Ee
    let w = Flagship::diagonal_witness_map();
    let wc = symbolic::witness_certificate_check(a, &w, &[2, 3, 5])?;
    let central_part: Vec<String> = wc
        .central_coordinates
        .iter()
        .filter(|c| !c.poly.is_zero())
        .map(|c| format!("{}: {}", c.basis, c.poly))
        .collect();
    let mut zeros = Vec::new();
    for v in &wc.vanishing {
        match v.points.first() {
            Some(pt) => {
                let coords: Vec<String> = pt.iter().map(u64::to_string).collect();
                zeros.push(format!(
                    "F{}: {} zero(s), first ({}) = ({})",
                    v.prime,
                    v.count,
                    v.variables.join(", "),
                    coords.join(", ")
                ));
            }
            None => zeros.push(format!("F{}: none", v.prime)),
        }
    }
    let (agrees, sweep_note) = match field.modulus() {
        Some(_) => {
            let s = symbolic::linear_witness_sweep(a, &w)?;
            let note = match &s.first_failure {
                Some(e) => format!(
                    "; over {field} {} of {} non-central elements get a zero product, first {}",
                    s.failures,
                    s.noncentral_checked,
                    a.format_element(e)
                ),
                None => format!("; over {field} all {} non-central elements pass", s.noncentral_checked),
            };
            (s.failures == 0, note)
        }
        None => (
            wc.noncentral_vanishes && wc.sum_of_squares_coordinate.is_some(),
            format!(
                "; over Q the {} coordinate is a sum of squares of the non-central coordinates",
                wc.sum_of_squares_coordinate.as_deref().unwrap_or("(none)")
            ),
        ),
    };
    sheet
        .push(
            "linear_witness",
            "the central witness a·Ed + b·Ee gives a nonzero central product with every non-central element",
            format!(
                "non-central part {}; central part ({})",
                if wc.noncentral_vanishes { "vanishes identically" } else { "does not vanish" },
                central_part.join(", ")
            ),
            format!("zero products at non-central points: {}{sweep_note}", zeros.join("; ")),
            Some(agrees),
        )
        .data = serde_json::to_value(&wc).expect("plain data");

    let sweep = match field.modulus() {
        Some(_) => Some(symbolic::piecewise_witness_sweep(a, &piecewise)?),
        None => None,
    };
    let piecewise_ok = pcert.valid && sweep.as_ref().is_none_or(|s| s.failures == 0);
    let branches: Vec<String> = pcert
        .branches
        .iter()
        .map(|b| {
            format!(
                "{} ≠ 0: x·{} has {} coordinate ±{}",
                b.guard,
                b.witness,
                b.nonzero_coordinate.as_deref().unwrap_or("(none)"),
                b.guard
            )
        })
        .collect();
    sheet.push(
        "piecewise_witness",
        "Ed when a ≠ 0, otherwise Ee, gives a nonzero central product with every non-central element",
        if piecewise_ok { "valid" } else { "invalid" },
        format!(
            "{}; elements with a = b = 0 are central: {}{}",
            branches.join("; "),
            yes_no(pcert.covers_noncentral),
            match &sweep {
                Some(s) => format!("; sweep over {field}: {} non-central elements, {} failures", s.noncentral_checked, s.failures),
                None => String::new(),
            }
        ),
        Some(piecewise_ok),
    );

    // sidedness
    for (name, claim) in [
        ("I", "I = span{Eb, Ef} is a right ideal but not a left ideal"),
        ("J", "J = span{Ea, Ef} is a left ideal but not a right ideal"),
        ("C", "C = span{Ec} is a two-sided ideal"),
    ] {
        let s = ideals::sidedness(a, fl.named_ideal(name).expect("named"));
        let ok = match name {
            "I" => s.is_right && !s.is_left,
            "J" => s.is_left && !s.is_right,
            _ => s.is_two_sided(),
        };
        sheet
            .push(
                &format!("sidedness_{}", name.to_lowercase()),
                claim,
                describe_sidedness(a, &s),
                "every subspace basis row times every algebra basis element",
                Some(ok),
            )
            .data = serde_json::to_value(&s).expect("plain data");
    }

    // complements, both directions
    complement_row(&mut sheet, &fl, "C", "I", Side::Right, true)?;
    complement_row(&mut sheet, &fl, "C", "J", Side::Left, true)?;
    complement_row(&mut sheet, &fl, "I", "C", Side::Right, false)?;
    complement_row(&mut sheet, &fl, "J", "C", Side::Left, false)?;

    // closedness
    closed_row(&mut sheet, &fl, "I", Side::Right, EE)?;
    closed_row(&mut sheet, &fl, "J", Side::Left, EE)?;
    if field.is_finite() {
        let c = ideals::is_closed(a, &fl.ideal_c, Side::Right)?;
        sheet.push(
            "closed_c",
            "C = span{Ec} is closed as a right ideal",
            if c.closed { "closed" } else { "not closed" },
            match (&c.complement, &c.extension) {
                (Some(k), _) => format!("no essential extension; it is a ∩-complement of {}", a.format_subspace(k)),
                (None, Some(e)) => format!("essential in {}", a.format_subspace(&e.module)),
                _ => String::new(),
            },
            None,
        );
    }
    Ok(sheet)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldDesc {
        FieldDesc::prime(2).unwrap()
    }

    #[test]
    fn descriptions() {
        let fl = catalog::flagship(f2());
        let a = &fl.algebra;
        assert_eq!(
            describe_sidedness(a, &ideals::sidedness(a, &fl.ideal_i)),
            "right ideal: yes; left ideal: no (witness Ea·Eb = Ec)"
        );
        assert_eq!(
            describe_sidedness(a, &ideals::sidedness(a, &fl.ideal_j)),
            "right ideal: no (witness Ea·Eb = Ec); left ideal: yes"
        );
        let r = central::check_centrally_essential(a, CeMode::Exhaustive).unwrap();
        assert_eq!(describe_ce(a, &r), "centrally_essential (exhaustive, 127 non-zero elements checked)");
        let m2 = catalog::full_matrix(2, f2());
        let r = central::check_centrally_essential(&m2, CeMode::Exhaustive).unwrap();
        assert_eq!(describe_ce(&m2, &r), "not_centrally_essential (exhaustive, counterexample E11)");
    }

    #[test]
    fn remark_suites_on_controls() {
        let f = f2();
        let fl = catalog::flagship(f);
        let s = quotient_commutativity_check(&fl.algebra, "flagship").unwrap();
        assert_eq!(s.row("implication").unwrap().verdict, "holds");
        assert!(s.disagreements().is_empty());
        let s = central_socle_check(&fl.algebra, "flagship").unwrap();
        assert_eq!(s.row("implication").unwrap().verdict, "holds");

        let m2 = catalog::full_matrix(2, f);
        assert_eq!(quotient_commutativity_check(&m2, "M2").unwrap().row("implication").unwrap().verdict, "vacuous");
        assert_eq!(central_socle_check(&m2, "M2").unwrap().row("implication").unwrap().verdict, "vacuous");

        let dual = catalog::dual_numbers(f);
        assert_eq!(quotient_commutativity_check(&dual, "dual").unwrap().row("implication").unwrap().verdict, "holds");
        assert_eq!(central_socle_check(&dual, "dual").unwrap().row("implication").unwrap().verdict, "holds");
    }

    #[test]
    fn truncated_maximal_ideals() {
        let f = f2();
        let fl = catalog::flagship(f);
        let j = ideals::jacobson_radical(&fl.algebra).unwrap().radical;
        let s = truncated_maximal_ideal_check(&fl.algebra, &j, 2, "flagship").unwrap();
        assert!(s.disagreements().is_empty(), "{}", s.render_text());
        assert!(s.row("extension_maximal").unwrap().evidence.starts_with("dim 13 in dim 14"));
        assert_eq!(s.row("constant_term_isomorphism").unwrap().agrees_with_claim, Some(true));

        let m2 = catalog::full_matrix(2, f);
        let m = &ideals::maximal_right_ideals(&m2).unwrap()[0].subspace;
        let s = truncated_maximal_ideal_check(&m2, m, 2, "M2").unwrap();
        assert!(s.disagreements().is_empty());
        assert!(s.row("two_sided_iff").unwrap().verdict.ends_with("M̄ two-sided: no"));
        assert!(s.row("constant_term_isomorphism").is_none());

        let field = catalog::field_algebra(f);
        let zero = Subspace::zero(f, 1);
        let s = truncated_maximal_ideal_check(&field, &zero, 2, "F2").unwrap();
        assert!(s.disagreements().is_empty());
        assert_eq!(s.row("constant_term_isomorphism").unwrap().agrees_with_claim, Some(true));

        assert!(matches!(
            truncated_maximal_ideal_check(&fl.algebra, &fl.ideal_i, 2, "x"),
            Err(Error::NotMaximal)
        ));
    }

    #[test]
    fn truncated_central_essential() {
        let f = f2();
        let dual = catalog::dual_numbers(f);
        let s = truncated_central_essential_check(&dual, 2, "dual").unwrap();
        assert_eq!(s.row("implication").unwrap().verdict, "holds");
        let m2 = catalog::full_matrix(2, f);
        let s = truncated_central_essential_check(&m2, 2, "M2").unwrap();
        assert_eq!(s.row("implication").unwrap().verdict, "vacuous");
        assert!(s.row("extension_ce").unwrap().verdict.starts_with("not_centrally_essential"));
        let big = catalog::full_matrix(3, FieldDesc::prime(3).unwrap());
        assert!(matches!(truncated_central_essential_check(&big, 2, "M3"), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn flagship_sheet_over_f2() {
        let s = flagship_sheet(f2()).unwrap();
        let mut bad = s.disagreements();
        bad.sort();
        assert_eq!(bad, ["closed_i", "closed_j", "linear_witness"]);
        assert_eq!(s.row("sidedness_i").unwrap().verdict, "right ideal: yes; left ideal: no (witness Ea·Eb = Ec)");
        assert_eq!(s.row("complement_i_of_c").unwrap().verdict, "no");
        assert_eq!(s.row("complement_c_of_i").unwrap().verdict, "yes");
        assert!(s.row("closed_i").unwrap().evidence.contains("span{Eb, Ee, Ef}"));
        assert!(s.row("linear_witness").unwrap().evidence.contains("F2: 1 zero(s), first (alpha, a, b) = (0, 1, 1)"));
        let text = s.render_text();
        assert!(text.contains("closed_i"));
        let json: Value = serde_json::from_str(&s.to_json()).unwrap();
        assert_eq!(json["rows"][0]["agrees_with_claim"], Value::Bool(true));
    }

    #[test]
    fn flagship_sheet_over_rationals() {
        let s = flagship_sheet(FieldDesc::rationals()).unwrap();
        assert!(s.disagreements().is_empty(), "{}", s.render_text());
        let lw = s.row("linear_witness").unwrap();
        assert_eq!(lw.verdict, "non-central part vanishes identically; central part (Ed: alpha*a, Ee: alpha*b, Ef: a^2 + b^2)");
        assert_eq!(s.row("centrally_essential").unwrap().verdict, "centrally_essential (symbolic certificate)");
    }
}
