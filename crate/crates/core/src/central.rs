//! The center of an algebra and the centrally-essential decision procedure.
//!
//! `A` is centrally essential when every non-central `a` admits nonzero
//! central `x`, `y` with `ax = y`, i.e. when the subspace `a·Z` meets `Z`
//! nontrivially. Over a finite field this is decided by sweeping all
//! elements; over the rationals only random falsification is attempted.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{self, kernel, vector_at, Matrix, Subspace};

/// Elements processed per parallel block of the exhaustive sweep.
const BLOCK: u64 = 1 << 12;

/// `Z(A)`: the common kernel of `x ↦ x b_i - b_i x`.
pub fn center(a: &Algebra) -> Subspace {
    let n = a.dim();
    let f = a.field();
    let mut system = Matrix::zeros(f, n * n, n);
    for i in 0..n {
        for j in 0..n {
            // column j: b_j b_i - b_i b_j
            let c = linalg::sub_vec(f, &a.basis_product(j, i), &a.basis_product(i, j));
            for (k, x) in c.into_iter().enumerate() {
                system.set(i * n + k, j, x);
            }
        }
    }
    kernel(&system)
}

pub fn is_central(a: &Algebra, u: &[Scalar]) -> bool {
    center(a).contains(u)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CeVerdict {
    CentrallyEssential,
    NotCentrallyEssential,
    InconclusiveRandom,
}

impl std::fmt::Display for CeVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CeVerdict::CentrallyEssential => "centrally_essential",
            CeVerdict::NotCentrallyEssential => "not_centrally_essential",
            CeVerdict::InconclusiveRandom => "inconclusive_random",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CeMode {
    /// Every element of a finite algebra, in enumeration order.
    Exhaustive,
    /// Random elements with coordinates in `[-2, 2]`.
    Random { trials: usize, seed: u64 },
}

/// For a non-central `element`: central `x ≠ 0` with `element · x = y`
/// central and nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CeWitness {
    pub index: u64,
    pub element: Element,
    pub x: Element,
    pub y: Element,
}

/// A non-central element whose `a·Z` meets `Z` only in zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CeCounterexample {
    /// Enumeration index (exhaustive mode) or trial number (random mode).
    pub index: u64,
    pub element: Element,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CeReport {
    pub verdict: CeVerdict,
    pub mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub center_dim: usize,
    /// Nonzero elements examined before the sweep ended.
    pub nonzero_checked: u64,
    pub noncentral_checked: u64,
    pub witnesses: Vec<CeWitness>,
    pub counterexample: Option<CeCounterexample>,
}

#[derive(Clone, Copy, Debug)]
pub struct CeOptions {
    /// Keep the per-element witness table (exhaustive mode).
    pub record_witnesses: bool,
}

impl Default for CeOptions {
    fn default() -> Self {
        CeOptions {
            record_witnesses: true,
        }
    }
}

/// Precomputed data for testing `a·Z ∩ Z ≠ 0` quickly.
struct CenterProbe<'a> {
    alg: &'a Algebra,
    center: Subspace,
    /// `basis_times_center[i][k] = b_i z_k`.
    basis_times_center: Vec<Vec<Vec<Scalar>>>,
}

enum Probe {
    Central,
    Meets(Option<(Vec<Scalar>, Vec<Scalar>)>),
    Disjoint,
}

impl<'a> CenterProbe<'a> {
    fn new(alg: &'a Algebra) -> Self {
        let center = center(alg);
        let basis_times_center = (0..alg.dim())
            .map(|i| {
                let b = alg.basis_element(i);
                center.basis().iter().map(|z| alg.mul(&b, z)).collect()
            })
            .collect();
        CenterProbe {
            alg,
            center,
            basis_times_center,
        }
    }

    /// Rows `a z_k`.
    fn image_rows(&self, a: &[Scalar]) -> Vec<Vec<Scalar>> {
        let f = self.alg.field();
        let mut rows = vec![self.alg.zero_element(); self.center.dim()];
        for (ai, prods) in a.iter().zip(&self.basis_times_center) {
            if f.is_zero(ai) {
                continue;
            }
            for (row, p) in rows.iter_mut().zip(prods) {
                linalg::axpy(f, row, ai, p);
            }
        }
        rows
    }

    fn meets_center(&self, rows: &[Vec<Scalar>]) -> bool {
        let f = self.alg.field();
        let image = Subspace::span(f, self.alg.dim(), rows).expect("image rows");
        let mut joined = self.center.clone();
        let grew = rows.iter().filter(|r| joined.insert(r)).count();
        grew < image.dim()
    }

    fn probe(&self, a: &[Scalar], want_witness: bool) -> Probe {
        if self.center.contains(a) {
            return Probe::Central;
        }
        let rows = self.image_rows(a);
        if !self.meets_center(&rows) {
            return Probe::Disjoint;
        }
        if !want_witness {
            return Probe::Meets(None);
        }
        Probe::Meets(Some(self.first_witness(&rows)))
    }

    /// First coefficient vector `c` (enumeration order over `F_p^{dim Z}`)
    /// whose `z = Σ c_k z_k` gives `a z ∈ Z \ {0}`.
    fn first_witness(&self, rows: &[Vec<Scalar>]) -> (Vec<Scalar>, Vec<Scalar>) {
        let f = self.alg.field();
        let c = self.center.dim();
        let total = f.vector_count(c).expect("finite field");
        for idx in 1..total {
            let coeffs = vector_at(f, c, idx);
            let mut y = self.alg.zero_element();
            for (k, row) in coeffs.iter().zip(rows) {
                linalg::axpy(f, &mut y, k, row);
            }
            if !linalg::is_zero_vec(f, &y) && self.center.contains(&y) {
                return (self.center.combine(&coeffs), y);
            }
        }
        unreachable!("a·Z meets Z, so some central multiple lands in Z")
    }
}

pub fn check_centrally_essential(a: &Algebra, mode: CeMode) -> Result<CeReport> {
    check_centrally_essential_with(a, mode, CeOptions::default())
}

pub fn check_centrally_essential_with(
    a: &Algebra,
    mode: CeMode,
    opts: CeOptions,
) -> Result<CeReport> {
    match mode {
        CeMode::Exhaustive => exhaustive(a, opts),
        CeMode::Random { trials, seed } => random(a, trials, seed),
    }
}

fn exhaustive(a: &Algebra, opts: CeOptions) -> Result<CeReport> {
    let total = a.element_count()?;
    let probe = CenterProbe::new(a);
    let mut report = CeReport {
        verdict: CeVerdict::CentrallyEssential,
        mode: "exhaustive",
        trials: None,
        seed: None,
        center_dim: probe.center.dim(),
        nonzero_checked: 0,
        noncentral_checked: 0,
        witnesses: Vec::new(),
        counterexample: None,
    };
    if probe.center.is_full() {
        report.nonzero_checked = total - 1;
        return Ok(report);
    }
    let mut start = 1;
    while start < total {
        let end = total.min(start + BLOCK);
        let outcomes: Vec<(u64, Probe)> = (start..end)
            .into_par_iter()
            .map(|idx| (idx, probe.probe(&a.element_at(idx), opts.record_witnesses)))
            .collect();
        for (idx, outcome) in outcomes {
            report.nonzero_checked += 1;
            match outcome {
                Probe::Central => {}
                Probe::Meets(w) => {
                    report.noncentral_checked += 1;
                    if let Some((x, y)) = w {
                        report.witnesses.push(CeWitness {
                            index: idx,
                            element: Element::new(a.element_at(idx)),
                            x: Element::new(x),
                            y: Element::new(y),
                        });
                    }
                }
                Probe::Disjoint => {
                    report.noncentral_checked += 1;
                    report.verdict = CeVerdict::NotCentrallyEssential;
                    report.counterexample = Some(CeCounterexample {
                        index: idx,
                        element: Element::new(a.element_at(idx)),
                    });
                    return Ok(report);
                }
            }
        }
        start = end;
    }
    Ok(report)
}

fn random(a: &Algebra, trials: usize, seed: u64) -> Result<CeReport> {
    let f = a.field();
    let probe = CenterProbe::new(a);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = CeReport {
        verdict: CeVerdict::InconclusiveRandom,
        mode: "random",
        trials: Some(trials),
        seed: Some(seed),
        center_dim: probe.center.dim(),
        nonzero_checked: 0,
        noncentral_checked: 0,
        witnesses: Vec::new(),
        counterexample: None,
    };
    for t in 0..trials {
        let v: Vec<Scalar> = (0..a.dim())
            .map(|_| f.from_i64(rng.gen_range(-2..=2)))
            .collect();
        if linalg::is_zero_vec(f, &v) {
            continue;
        }
        report.nonzero_checked += 1;
        match probe.probe(&v, false) {
            Probe::Central => {}
            Probe::Meets(_) => report.noncentral_checked += 1,
            Probe::Disjoint => {
                report.noncentral_checked += 1;
                report.verdict = CeVerdict::NotCentrallyEssential;
                report.counterexample = Some(CeCounterexample {
                    index: t as u64,
                    element: Element::new(v),
                });
                return Ok(report);
            }
        }
    }
    Ok(report)
}

impl CeReport {
    /// Re-checks every witness and the counterexample against `a`.
    pub fn revalidate(&self, a: &Algebra) -> Result<()> {
        let f = a.field();
        let z = center(a);
        let fail = |msg: String| Err(Error::CertificateFailed(msg));
        for w in &self.witnesses {
            if z.contains(&w.element) {
                return fail(format!("witness element {} is central", w.index));
            }
            if linalg::is_zero_vec(f, &w.x) || !z.contains(&w.x) {
                return fail(format!("x for element {} is not nonzero central", w.index));
            }
            if a.mul(&w.element, &w.x) != *w.y {
                return fail(format!("a·x ≠ y for element {}", w.index));
            }
            if linalg::is_zero_vec(f, &w.y) || !z.contains(&w.y) {
                return fail(format!("y for element {} is not nonzero central", w.index));
            }
        }
        if let Some(c) = &self.counterexample {
            if z.contains(&c.element) {
                return fail("counterexample is central".into());
            }
            let image = Subspace::span(f, a.dim(), z.basis().iter().map(|zb| a.mul(&c.element, zb)))?;
            if !image.intersect(&z)?.is_zero() {
                return fail("counterexample's a·Z meets Z".into());
            }
        }
        Ok(())
    }
}

/// The module formulation: `Z_Z ⊆ A_Z` is essential iff every nonzero
/// `a` (central or not) has `a·Z ∩ Z ≠ 0`. Brute force over all elements.
pub fn essential_over_center(a: &Algebra) -> Result<bool> {
    let f = a.field();
    let z = center(a);
    let total = a.element_count()?;
    Ok((1..total).into_par_iter().all(|idx| {
        let v = a.element_at(idx);
        let image = Subspace::span(f, a.dim(), z.basis().iter().map(|zb| a.mul(&v, zb)))
            .expect("image rows");
        !image.intersect(&z).expect("same ambient").is_zero()
    }))
}
