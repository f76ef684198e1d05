//! Command-line front end. Every verb maps onto one library operation; the
//! algebra is a built-in name such as `paper@F2` or a JSON algebra file.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{truncated_polynomial_algebra, Algebra, Side};
use crate::algebra_file::AlgebraFile;
use crate::catalog::{self, Flagship};
use crate::central::{self, CeMode};
use crate::error::{Error, Result};
use crate::field::FieldDesc;
use crate::ideals::{self, IdealKind};
use crate::linalg::Subspace;
use crate::search::{self, SearchConfig};
use crate::suites::{self, describe_ce, describe_sidedness, VerdictSheet};

/// Witness tables longer than this are elided unless `--full-witnesses`.
const WITNESS_PREVIEW: usize = 16;

#[derive(Parser, Debug)]
#[command(name = "ringlab", version, about = "Exact analysis of finite-dimensional associative algebras")]
struct Cli {
    /// Worker threads; affects running time only.
    #[arg(long, env = "RINGLAB_THREADS", global = true)]
    threads: Option<usize>,
    /// Write the JSON report to this path (`-` for standard output).
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Target {
    /// Built-in name (paper@F2, paper@F3, paper@F5, paper@Q, M2@F2, UT2@F2,
    /// UT3@F2, F@F2, dual@F2, ...) or path to a JSON algebra file.
    algebra: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Right,
    Left,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Right => Side::Right,
            SideArg::Left => Side::Left,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Right,
    Left,
    TwoSided,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build and validate an algebra.
    Validate(Target),
    /// Dimension, basis, unit and nonzero basis products.
    Info(Target),
    /// The center.
    Center(Target),
    /// The Jacobson radical with its certificate.
    Radical(Target),
    /// Decide central essentiality.
    Ce {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: ModeArg,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Keep the whole witness table in the JSON report.
        #[arg(long)]
        full_witnesses: bool,
    },
    /// Sidedness of a subspace, closure of generators, or the lists of
    /// maximal and minimal right ideals.
    Ideals {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        subspace: Option<String>,
        #[arg(long, conflicts_with = "subspace")]
        generators: Option<String>,
        #[arg(long, value_enum, default_value = "right")]
        kind: KindArg,
    },
    /// Whether N is essential in M.
    Essential {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        sub: String,
        #[arg(long)]
        sup: String,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
    },
    /// Whether a one-sided ideal is closed.
    Closed {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        subspace: String,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
    },
    /// Whether K is a ∩-complement of X.
    Complement {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        k: String,
        #[arg(long)]
        of: String,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
    },
    /// Whether every maximal one-sided ideal is two-sided.
    QuasiInvariant {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
    },
    /// Quotient by a two-sided ideal (default: the radical).
    Quotient {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value = "radical")]
        subspace: String,
        /// Write the quotient as a JSON algebra file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The truncated polynomial algebra A[x]/(x^m).
    Truncate {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verdict sheet for the 7-dimensional counterexample algebra.
    VerifyPaper(Target),
    /// Maximal right ideals of A[x]/(x^m) built from one of A.
    Lemma21 {
        #[command(flatten)]
        target: Target,
        /// Maximal right ideal of A (default: the first one found).
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
    /// Central essentiality of A[x]/(x^m).
    Lemma22 {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
    /// Quotient commutativity and central socle sheets.
    Remarks(Target),
    /// Random search for a non-two-sided minimal right ideal in a centrally
    /// essential algebra.
    #[command(name = "search-oq15")]
    SearchOq15 {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        primes: Vec<u32>,
        #[arg(long, default_value_t = 2)]
        max_generators: usize,
    },
    /// Print a built-in algebra as a JSON algebra file.
    ExportExample {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A loaded algebra, with the flagship bundle when it is one.
struct Loaded {
    algebra: Algebra,
    flagship: Option<Flagship>,
    file: AlgebraFile,
}

fn parse_field(text: &str) -> Result<FieldDesc> {
    text.parse()
        .map_err(|e: Error| Error::Usage(format!("field `{text}`: {e}")))
}

fn builtin(name: &str) -> Result<Option<Loaded>> {
    let Some((kind, field)) = name.split_once('@') else {
        return Ok(None);
    };
    let f = parse_field(field)?;
    let sized = |prefix: &str| -> Result<Option<usize>> {
        match kind.strip_prefix(prefix) {
            Some(k) => k
                .parse::<usize>()
                .ok()
                .filter(|&k| (1..=6).contains(&k))
                .map(Some)
                .ok_or_else(|| Error::Usage(format!("algebra `{name}`: size must be 1..6"))),
            None => Ok(None),
        }
    };
    let plain = |a: Algebra| Loaded {
        file: AlgebraFile::from_algebra(&a),
        algebra: a,
        flagship: None,
    };
    let loaded = if kind == "paper" {
        let fl = catalog::flagship(f);
        Loaded {
            algebra: fl.algebra.clone(),
            file: AlgebraFile::flagship(f),
            flagship: Some(fl),
        }
    } else if kind == "F" {
        plain(catalog::field_algebra(f))
    } else if kind == "dual" {
        plain(catalog::dual_numbers(f))
    } else if let Some(k) = sized("UT")? {
        plain(catalog::upper_triangular(k, f))
    } else if let Some(k) = sized("M")? {
        plain(catalog::full_matrix(k, f))
    } else {
        return Err(Error::Usage(format!("unknown built-in algebra `{name}`")));
    };
    Ok(Some(loaded))
}

fn load(target: &Target) -> Result<Loaded> {
    let path = Path::new(&target.algebra);
    if !path.exists() {
        if let Some(l) = builtin(&target.algebra)? {
            return Ok(l);
        }
        return Err(Error::Usage(format!("no such file or built-in algebra `{}`", target.algebra)));
    }
    let file = AlgebraFile::read(path)?;
    let (algebra, _) = file.build()?;
    Ok(Loaded {
        algebra,
        flagship: None,
        file,
    })
}

/// Splits on commas outside parentheses.
fn split_top(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out.into_iter().map(str::trim).filter(|s| !s.is_empty()).collect()
}

fn parse_elements(a: &Algebra, text: &str) -> Result<Vec<Vec<crate::field::Scalar>>> {
    let t = text.trim();
    let inner = t
        .strip_prefix("span{")
        .and_then(|s| s.strip_suffix('}'))
        .unwrap_or(t);
    split_top(inner).into_iter().map(|e| a.parse_element(e)).collect()
}

/// `I`, `J`, `C` (flagship), `radical`, `center`, `zero`, `all`, or a list
/// of elements such as `span{Eb, Ef}`.
fn parse_subspace(l: &Loaded, text: &str) -> Result<Subspace> {
    let a = &l.algebra;
    if let Some(s) = l.flagship.as_ref().and_then(|fl| fl.named_ideal(text.trim())) {
        return Ok(s.clone());
    }
    match text.trim() {
        "radical" => return Ok(ideals::jacobson_radical(a)?.radical),
        "center" => return Ok(central::center(a)),
        "zero" => return Ok(Subspace::zero(a.field(), a.dim())),
        "all" => return Ok(Subspace::full(a.field(), a.dim())),
        _ => {}
    }
    Subspace::span(a.field(), a.dim(), parse_elements(a, text)?)
}

struct Report {
    text: String,
    json: Value,
}

fn report(text: impl Into<String>, json: impl Serialize) -> Result<Report> {
    Ok(Report {
        text: text.into(),
        json: serde_json::to_value(json)?,
    })
}

fn sheets(list: &[VerdictSheet]) -> Result<Report> {
    let text = list.iter().map(VerdictSheet::render_text).collect::<Vec<_>>().join("\n");
    if list.len() == 1 {
        report(text, &list[0])
    } else {
        report(text, list)
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents)?;
    Ok(())
}

fn dispatch(cmd: Command) -> Result<Report> {
    match cmd {
        Command::Validate(t) => {
            let l = load(&t)?;
            let a = &l.algebra;
            let n = a.dim();
            report(
                format!(
                    "valid: dimension {n} over {}, associativity checked on {} basis triples, unit laws on {n} basis elements",
                    a.field(),
                    n * n * n
                ),
                json!({ "valid": true, "field": a.field(), "dim": n, "names": a.names(), "algebra": l.file }),
            )
        }
        Command::Info(t) => {
            let l = load(&t)?;
            let a = &l.algebra;
            let n = a.dim();
            let mut text = format!(
                "field {}\ndimension {n}\nbasis {}\nunit {}\n",
                a.field(),
                a.names().join(", "),
                a.format_element(a.unit())
            );
            let unit_idx = (0..n).find(|&i| a.basis_element(i) == a.unit());
            let mut products = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if Some(i) == unit_idx || Some(j) == unit_idx {
                        continue;
                    }
                    let p = a.basis_product(i, j);
                    if !crate::linalg::is_zero_vec(a.field(), &p) {
                        products.push(format!("{}·{} = {}", a.names()[i], a.names()[j], a.format_element(&p)));
                    }
                }
            }
            text += &format!("nonzero products{}:\n", if unit_idx.is_some() { " (unit omitted)" } else { "" });
            for p in &products {
                text += &format!("  {p}\n");
            }
            if products.is_empty() {
                text += "  none\n";
            }
            let pair = a.noncommuting_pair();
            text += &match pair {
                None => "commutative: yes".to_string(),
                Some((i, j)) => format!("commutative: no ({}·{} ≠ {}·{})", a.names()[i], a.names()[j], a.names()[j], a.names()[i]),
            };
            report(
                text,
                json!({ "field": a.field(), "dim": n, "names": a.names(), "unit": a.unit(), "products": products,
                        "noncommuting_pair": pair.map(|(i, j)| [&a.names()[i], &a.names()[j]]) }),
            )
        }
        Command::Center(t) => {
            let l = load(&t)?;
            let z = central::center(&l.algebra);
            report(
                format!("center: {} (dim {})", l.algebra.format_subspace(&z), z.dim()),
                json!({ "center": z }),
            )
        }
        Command::Radical(t) => {
            let l = load(&t)?;
            let a = &l.algebra;
            let c = ideals::jacobson_radical(a)?;
            report(
                format!(
                    "radical: {} (dim {})\nnilpotency index {}\nquotient dimension {}\nmethod {}",
                    a.format_subspace(&c.radical),
                    c.radical.dim(),
                    c.nilpotency_index,
                    c.quotient_dim,
                    serde_json::to_value(c.method)?.as_str().unwrap_or_default()
                ),
                &c,
            )
        }
        Command::Ce {
            target,
            mode,
            trials,
            seed,
            full_witnesses,
        } => {
            let l = load(&target)?;
            let a = &l.algebra;
            let mode = match mode {
                ModeArg::Exhaustive => CeMode::Exhaustive,
                ModeArg::Random => CeMode::Random { trials, seed },
            };
            let r = central::check_centrally_essential(a, mode)?;
            r.revalidate(a)?;
            let mut json = serde_json::to_value(&r)?;
            if !full_witnesses && r.witnesses.len() > WITNESS_PREVIEW {
                json["witnesses"] = serde_json::to_value(&r.witnesses[..WITNESS_PREVIEW])?;
                json["witnesses_elided"] = json!(r.witnesses.len() - WITNESS_PREVIEW);
            }
            Ok(Report {
                text: describe_ce(a, &r),
                json,
            })
        }
        Command::Ideals {
            target,
            subspace,
            generators,
            kind,
        } => {
            let l = load(&target)?;
            let a = &l.algebra;
            if let Some(text) = subspace {
                let s = ideals::sidedness(a, &parse_subspace(&l, &text)?);
                return report(describe_sidedness(a, &s), &s);
            }
            if let Some(text) = generators {
                let kind = match kind {
                    KindArg::Right => IdealKind::Right,
                    KindArg::Left => IdealKind::Left,
                    KindArg::TwoSided => IdealKind::TwoSided,
                };
                let s = ideals::ideal_closure(a, &parse_elements(a, &text)?, kind)?;
                return report(
                    format!("{}\n{}", a.format_subspace(&s.subspace), describe_sidedness(a, &s)),
                    &s,
                );
            }
            let max = ideals::maximal_right_ideals(a)?;
            let min = ideals::minimal_right_ideals(a)?;
            let soc_r = ideals::socle(a, Side::Right)?;
            let soc_l = ideals::socle(a, Side::Left)?;
            let mut text = format!("maximal right ideals ({}):\n", max.len());
            for m in &max {
                text += &format!("  {}  [{}]\n", a.format_subspace(&m.subspace), if m.is_two_sided() { "two-sided" } else { "right only" });
            }
            text += &format!("minimal right ideals ({}):\n", min.len());
            for m in &min {
                text += &format!("  {}  [{}]\n", a.format_subspace(&m.subspace), if m.is_two_sided() { "two-sided" } else { "right only" });
            }
            text += &format!("right socle {}\nleft socle {}", a.format_subspace(&soc_r), a.format_subspace(&soc_l));
            report(text, json!({ "maximal_right_ideals": max, "minimal_right_ideals": min, "right_socle": soc_r, "left_socle": soc_l }))
        }
        Command::Essential { target, sub, sup, side } => {
            let l = load(&target)?;
            let a = &l.algebra;
            let v = ideals::is_essential(a, &parse_subspace(&l, &sub)?, &parse_subspace(&l, &sup)?, side.into())?;
            let text = match &v.witness {
                None => format!("essential: yes ({} elements checked)", v.elements_checked),
                Some(m) => format!(
                    "essential: no (witness {}, whose cyclic submodule meets the smaller ideal only in 0)",
                    a.format_element(m)
                ),
            };
            report(text, &v)
        }
        Command::Closed { target, subspace, side } => {
            let l = load(&target)?;
            let a = &l.algebra;
            let s = parse_subspace(&l, &subspace)?;
            let v = ideals::is_closed(a, &s, side.into())?;
            let text = match (&v.extension, &v.complement) {
                (Some(e), _) => format!(
                    "closed: no (essential in the proper extension by u = {}: {})",
                    a.format_element(&e.u),
                    a.format_subspace(&e.module)
                ),
                (None, Some(k)) => format!("closed: yes (∩-complement of {})", a.format_subspace(k)),
                (None, None) => "closed: yes".into(),
            };
            report(text, &v)
        }
        Command::Complement { target, k, of, side } => {
            let l = load(&target)?;
            let a = &l.algebra;
            let ks = parse_subspace(&l, &k)?;
            let v = ideals::intersection_complement_check(a, &ks, &parse_subspace(&l, &of)?, side.into())?;
            let text = match (&v.meets, &v.extension) {
                (Some(m), _) => format!("complement: no (intersection contains {})", a.format_element(m)),
                (None, Some(u)) => format!("complement: no (not maximal: u = {} extends it with zero intersection)", a.format_element(u)),
                (None, None) => "complement: yes".into(),
            };
            report(text, &v)
        }
        Command::QuasiInvariant { target, side } => {
            let l = load(&target)?;
            let a = &l.algebra;
            let side: Side = side.into();
            let v = ideals::is_quasi_invariant(a, side)?;
            let text = match &v.witness {
                None => format!("{side} quasi-invariant: yes ({} maximal {side} ideals, all two-sided)", v.maximal_count),
                Some(w) => format!(
                    "{side} quasi-invariant: no ({} is maximal; {})",
                    a.format_subspace(&w.subspace),
                    describe_sidedness(a, w)
                ),
            };
            report(text, &v)
        }
        Command::Quotient { target, subspace, out } => {
            let l = load(&target)?;
            let a = &l.algebra;
            let (q, _) = a.quotient(&parse_subspace(&l, &subspace)?)?;
            let file = AlgebraFile::from_algebra(&q);
            if let Some(p) = &out {
                write_file(p, &file.to_json())?;
            }
            report(
                format!(
                    "quotient: dimension {}, basis {}, commutative: {}",
                    q.dim(),
                    q.names().join(", "),
                    if q.is_commutative() { "yes" } else { "no" }
                ),
                &file,
            )
        }
        Command::Truncate { target, m, out } => {
            let l = load(&target)?;
            let r = truncated_polynomial_algebra(&l.algebra, m)?;
            let file = AlgebraFile::from_algebra(&r);
            if let Some(p) = &out {
                write_file(p, &file.to_json())?;
            }
            report(format!("A[x]/(x^{m}): dimension {}", r.dim()), &file)
        }
        Command::VerifyPaper(t) => {
            let l = load(&t)?;
            if l.flagship.is_none() {
                return Err(Error::Usage("verify-paper expects paper@<field>".into()));
            }
            sheets(&[suites::flagship_sheet(l.algebra.field())?])
        }
        Command::Lemma21 { target, ideal, m } => {
            let l = load(&target)?;
            let a = &l.algebra;
            let mi = match ideal {
                Some(text) => parse_subspace(&l, &text)?,
                None => ideals::maximal_right_ideals(a)?
                    .into_iter()
                    .next()
                    .map(|m| m.subspace)
                    .ok_or(Error::NotMaximal)?,
            };
            sheets(&[suites::truncated_maximal_ideal_check(a, &mi, m, &target.algebra)?])
        }
        Command::Lemma22 { target, m } => {
            let l = load(&target)?;
            sheets(&[suites::truncated_central_essential_check(&l.algebra, m, &target.algebra)?])
        }
        Command::Remarks(t) => {
            let l = load(&t)?;
            sheets(&[
                suites::quotient_commutativity_check(&l.algebra, &t.algebra)?,
                suites::central_socle_check(&l.algebra, &t.algebra)?,
            ])
        }
        Command::SearchOq15 {
            seed,
            samples,
            sizes,
            primes,
            max_generators,
        } => {
            for &p in &primes {
                FieldDesc::prime(u64::from(p)).map_err(|e| Error::Usage(format!("--primes: {e}")))?;
            }
            if sizes.iter().any(|&k| k == 0 || k > 6) {
                return Err(Error::Usage("--sizes: matrix sizes must be 1..6".into()));
            }
            let config = SearchConfig {
                matrix_sizes: sizes,
                primes,
                samples,
                seed,
                max_generators,
            };
            let f = search::search_noncentral_minimal_ideals(&config)?;
            report(f.render_text(), &f)
        }
        Command::ExportExample { target, out } => {
            let l = load(&target)?;
            let text = l.file.to_json();
            if let Some(p) = &out {
                write_file(p, &text)?;
                return report(format!("wrote {}", p.display()), &l.file);
            }
            Ok(Report {
                text: text.trim_end().to_string(),
                json: serde_json::to_value(&l.file)?,
            })
        }
    }
}

/// Runs the command line and returns the process exit status: 0 on
/// success, 1 on usage or input errors, 2 when an internal certificate
/// fails to re-check.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        builder = builder.num_threads(n);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: thread pool: {e}");
            return 1;
        }
    };
    let result = pool.install(|| dispatch(cli.command));
    let outcome = result.and_then(|r| {
        match cli.json.as_deref() {
            Some(p) if p == Path::new("-") => {
                writeln!(out, "{}", serde_json::to_string_pretty(&r.json)?)?;
            }
            Some(p) => {
                write_file(p, &(serde_json::to_string_pretty(&r.json)? + "\n"))?;
                writeln!(out, "{}", r.text)?;
            }
            None => writeln!(out, "{}", r.text)?,
        }
        Ok(())
    });
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_internal() {
                2
            } else {
                1
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("ringlab").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn documented_outputs() {
        let (code, out, _) = run_str(&["ce", "paper@F2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "centrally_essential (exhaustive, 127 non-zero elements checked)\n");
        let (code, out, _) = run_str(&["ideals", "paper@F2", "--subspace", "I"]);
        assert_eq!(code, 0);
        assert_eq!(out, "right ideal: yes; left ideal: no (witness Ea·Eb = Ec)\n");
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run_str(&["frobnicate"]).0, 1);
        assert_eq!(run_str(&["ce", "paper@F2", "--bogus"]).0, 1);
        let (code, _, err) = run_str(&["ce", "paper@F4"]);
        assert_eq!(code, 1);
        assert!(err.contains("F4"), "{err}");
        assert_eq!(run_str(&["ce", "nothing-here"]).0, 1);
        assert_eq!(run_str(&["ce", "paper@Q"]).0, 1);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn subspace_syntax() {
        let (_, out, _) = run_str(&["ideals", "paper@F2", "--subspace", "span{Eb, Ef}"]);
        assert_eq!(out, "right ideal: yes; left ideal: no (witness Ea·Eb = Ec)\n");
        let (_, out, _) = run_str(&["ideals", "paper@F2", "--generators", "Ee"]);
        assert!(out.starts_with("span{Ee, Ef}"), "{out}");
        let (_, out, _) = run_str(&["closed", "paper@F2", "--subspace", "C"]);
        assert!(out.starts_with("closed: yes"), "{out}");
        let (_, out, _) = run_str(&["complement", "paper@F2", "--k", "C", "--of", "I"]);
        assert_eq!(out, "complement: yes\n");
    }
}
