//! Seeded search over random subalgebras of small matrix algebras.
//!
//! `cargo run --release --example random_search -- 200 5` runs 200 samples with seed 5.

use ringlab::search::{search_noncentral_minimal_ideals, SearchConfig};

fn main() -> ringlab::Result<()> {
    let mut args = std::env::args().skip(1);
    let samples = args.next().and_then(|s| s.parse().ok()).unwrap_or(100);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    let config = SearchConfig { samples, seed, ..SearchConfig::default() };
    let findings = search_noncentral_minimal_ideals(&config)?;
    print!("{}", findings.render_text());

    let largest = findings
        .samples
        .iter()
        .filter(|s| s.examination.as_ref().is_some_and(|e| e.centrally_essential))
        .max_by_key(|s| s.dim);
    if let Some(s) = largest {
        println!("largest CE sample: #{} in M{}(F{}), dim {}", s.index, s.matrix_size, s.prime, s.dim);
    }
    Ok(())
}
