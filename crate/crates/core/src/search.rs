//! Random search for a centrally essential algebra with a minimal right
//! ideal that is not two-sided.
//!
//! Each sample is a random unital subalgebra of `M_k(F_p)`. Sample `i`
//! draws its parameters from ChaCha8 seeded with the run seed on stream
//! `i`, so samples are independent of each other and of thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, Side};
use crate::catalog::{self, RANDOM_SCHEME};
use crate::central::{self, CeMode, CeOptions, CeVerdict};
use crate::error::Result;
use crate::field::FieldDesc;
use crate::ideals;
use crate::linalg::Subspace;

/// Element-count guard per sample.
pub const SAMPLE_ELEMENT_LIMIT: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    /// Matrix sizes `k` to draw from.
    pub matrix_sizes: Vec<usize>,
    pub primes: Vec<u32>,
    pub samples: usize,
    pub seed: u64,
    /// Random generators per sample, drawn from `1..=max_generators`.
    pub max_generators: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            matrix_sizes: vec![2, 3, 4],
            primes: vec![2, 3],
            samples: 500,
            seed: 0,
            max_generators: 2,
        }
    }
}

/// What the search learns about one algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Examination {
    pub dim: usize,
    pub centrally_essential: bool,
    pub center_dim: usize,
    /// The remaining fields are filled for centrally essential algebras.
    pub quotient_commutative: Option<bool>,
    pub minimal_right_ideals: Option<usize>,
    pub all_minimal_two_sided: Option<bool>,
    pub all_minimal_central: Option<bool>,
    pub socle_central: Option<bool>,
    /// A minimal right ideal that is not two-sided.
    pub counterexample_ideal: Option<Subspace>,
}

impl Examination {
    pub fn is_counterexample(&self) -> bool {
        self.counterexample_ideal.is_some()
    }
}

pub fn examine_algebra(a: &Algebra) -> Result<Examination> {
    let ce = central::check_centrally_essential_with(a, CeMode::Exhaustive, CeOptions { record_witnesses: false })?;
    ce.revalidate(a)?;
    let mut ex = Examination {
        dim: a.dim(),
        centrally_essential: ce.verdict == CeVerdict::CentrallyEssential,
        center_dim: ce.center_dim,
        quotient_commutative: None,
        minimal_right_ideals: None,
        all_minimal_two_sided: None,
        all_minimal_central: None,
        socle_central: None,
        counterexample_ideal: None,
    };
    if !ex.centrally_essential {
        return Ok(ex);
    }
    let rad = ideals::jacobson_radical(a)?;
    let (q, _) = a.quotient(&rad.radical)?;
    ex.quotient_commutative = Some(q.is_commutative());
    let z = central::center(a);
    let mins = ideals::minimal_right_ideals(a)?;
    ex.minimal_right_ideals = Some(mins.len());
    ex.all_minimal_two_sided = Some(mins.iter().all(|m| m.is_two_sided()));
    ex.all_minimal_central = Some(mins.iter().all(|m| m.subspace.is_subspace_of(&z)));
    ex.socle_central = Some(ideals::socle(a, Side::Right)?.is_subspace_of(&z));
    ex.counterexample_ideal = mins.into_iter().find(|m| !m.is_two_sided()).map(|m| m.subspace);
    Ok(ex)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleRecord {
    pub index: usize,
    pub prime: u32,
    pub matrix_size: usize,
    pub generator_count: usize,
    pub seed: u64,
    pub dim: usize,
    /// Set when `p^dim` exceeds the element limit.
    pub skipped: bool,
    pub examination: Option<Examination>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchFindings {
    pub config: SearchConfig,
    pub scheme: &'static str,
    pub sampled: usize,
    pub skipped: usize,
    pub examined: usize,
    pub centrally_essential: usize,
    pub ce_noncommutative: usize,
    pub ce_all_minimal_central: usize,
    pub ce_socle_central: usize,
    pub counterexamples: Vec<SampleRecord>,
    pub samples: Vec<SampleRecord>,
}

impl SearchFindings {
    pub fn render_text(&self) -> String {
        let c = &self.config;
        let mut out = format!(
            "search: {} samples, seed {}, matrix sizes {:?}, primes {:?}, scheme {}\n",
            c.samples, c.seed, c.matrix_sizes, c.primes, self.scheme
        );
        out += &format!(
            "examined {} (skipped {} above {} elements)\ncentrally essential {} (non-commutative {})\n",
            self.examined, self.skipped, SAMPLE_ELEMENT_LIMIT, self.centrally_essential, self.ce_noncommutative
        );
        out += &format!(
            "all minimal right ideals central: {} of {}\nsocle inside center: {} of {}\ncounterexamples: {}\n",
            self.ce_all_minimal_central,
            self.centrally_essential,
            self.ce_socle_central,
            self.centrally_essential,
            self.counterexamples.len()
        );
        for r in &self.counterexamples {
            out += &format!("  sample {} (k={}, p={}, seed {})\n", r.index, r.matrix_size, r.prime, r.seed);
        }
        out
    }
}

fn draw(config: &SearchConfig, index: usize) -> (usize, u32, usize, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index as u64);
    let k = config.matrix_sizes[rng.gen_range(0..config.matrix_sizes.len())];
    let p = config.primes[rng.gen_range(0..config.primes.len())];
    let gens = rng.gen_range(1..=config.max_generators.max(1));
    (k, p, gens, rng.gen())
}

fn run_sample(config: &SearchConfig, index: usize) -> Result<SampleRecord> {
    let (k, p, gens, seed) = draw(config, index);
    let field = FieldDesc::prime(u64::from(p))?;
    let sub = catalog::random_subalgebra(k, field, gens, seed)?;
    let too_big = field.vector_count(sub.dim).map_or(true, |c| c > SAMPLE_ELEMENT_LIMIT);
    let examination = if too_big { None } else { Some(examine_algebra(&sub.algebra)?) };
    Ok(SampleRecord {
        index,
        prime: p,
        matrix_size: k,
        generator_count: gens,
        seed,
        dim: sub.dim,
        skipped: too_big,
        examination,
    })
}

pub fn search_noncentral_minimal_ideals(config: &SearchConfig) -> Result<SearchFindings> {
    let samples = (0..config.samples)
        .into_par_iter()
        .map(|i| run_sample(config, i))
        .collect::<Result<Vec<_>>>()?;
    let ce: Vec<&Examination> = samples
        .iter()
        .filter_map(|s| s.examination.as_ref())
        .filter(|e| e.centrally_essential)
        .collect();
    Ok(SearchFindings {
        config: config.clone(),
        scheme: RANDOM_SCHEME,
        sampled: samples.len(),
        skipped: samples.iter().filter(|s| s.skipped).count(),
        examined: samples.iter().filter(|s| !s.skipped).count(),
        centrally_essential: ce.len(),
        ce_noncommutative: ce.iter().filter(|e| e.center_dim < e.dim).count(),
        ce_all_minimal_central: ce.iter().filter(|e| e.all_minimal_central == Some(true)).count(),
        ce_socle_central: ce.iter().filter(|e| e.socle_central == Some(true)).count(),
        counterexamples: samples
            .iter()
            .filter(|s| s.examination.as_ref().is_some_and(Examination::is_counterexample))
            .cloned()
            .collect(),
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flagship_examination() {
        let a = catalog::flagship(FieldDesc::prime(2).unwrap()).algebra;
        let ex = examine_algebra(&a).unwrap();
        assert!(ex.centrally_essential);
        assert_eq!(ex.minimal_right_ideals, Some(3));
        assert_eq!(ex.all_minimal_two_sided, Some(true));
        assert_eq!(ex.all_minimal_central, Some(true));
        assert_eq!(ex.socle_central, Some(true));
        assert!(!ex.is_counterexample());
    }

    #[test]
    fn non_ce_is_not_examined_further() {
        let ex = examine_algebra(&catalog::full_matrix(2, FieldDesc::prime(2).unwrap())).unwrap();
        assert!(!ex.centrally_essential);
        assert_eq!(ex.minimal_right_ideals, None);
    }

    #[test]
    fn small_search_is_reproducible() {
        let config = SearchConfig {
            matrix_sizes: vec![2, 3],
            samples: 24,
            seed: 11,
            ..SearchConfig::default()
        };
        let a = search_noncentral_minimal_ideals(&config).unwrap();
        let b = search_noncentral_minimal_ideals(&config).unwrap();
        assert_eq!(a, b);
        assert!(a.counterexamples.is_empty());
        assert_eq!(a.sampled, 24);
        assert_eq!(a.ce_socle_central, a.centrally_essential);
    }
}
