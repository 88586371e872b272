//! Command-line front end. Every subcommand is a thin wrapper over the
//! library; outputs are plain text and deterministic.
//!
//! Exit codes: 0 success (or membership "true"), 1 verification failure or
//! membership "false", 2 malformed input or usage error.

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};
use qperfect::codec::{point_from_dots, CodeFile, Construction, PartitionFile};
use qperfect::components::component_basis;
use qperfect::embed::{build_embedding, EmbeddingSpec};
use qperfect::geometry::PointOrdering;
use qperfect::hamming::HammingCode;
use qperfect::partition::{build_partition, PartLabel, PartitionSpec};
use qperfect::verify;
use qperfect::{create_field, El, FieldSpec, Word};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Enumeration guard shared by the write-out paths.
const ENUM_CAP: u64 = 2_000_000;

#[derive(Parser)]
#[command(name = "qperfect", version, about = "Embed 1-error-correcting codes into 1-perfect codes")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the point ordering and incidence counts of PG(m-1, q).
    Geometry {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: usize,
        /// List the points as index: dotted-coordinates.
        #[arg(long)]
        points: bool,
        /// List the lines as sorted point-index rows.
        #[arg(long)]
        lines: bool,
        /// List the planes as sorted point-index rows.
        #[arg(long)]
        planes: bool,
    },
    /// Print the dimension and echelon basis of the component R_delta.
    Components {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: usize,
        /// The point delta in dotted form, e.g. 1.1.1
        #[arg(long)]
        delta: String,
    },
    /// Embed the code in IN into a 1-perfect code of length (q^m-1)/(q-1).
    Embed {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: usize,
        /// Input code file (words of length m-1).
        #[arg(long)]
        code: PathBuf,
        /// Output path: the embedded code, or its description when not
        /// enumerable.
        #[arg(long)]
        out: PathBuf,
        /// Write the description file even when enumeration would fit.
        #[arg(long)]
        oracle_only: bool,
    },
    /// Lift a partition of F^s to a partition of F^n into 1-perfect codes.
    EmbedPartition {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        s: usize,
        /// Input partition file (classes of F^s).
        #[arg(long)]
        partition: PathBuf,
        /// Output path: the lifted partition, or its description when not
        /// enumerable.
        #[arg(long)]
        out: PathBuf,
        /// Write the description file even when enumeration would fit.
        #[arg(long)]
        oracle_only: bool,
    },
    /// Run a verifier; exit 0 on pass, 1 on fail with the witness printed.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Print the part label owning a word, under a partition construction.
    Classify {
        /// Construction file (spec=partition).
        #[arg(long)]
        spec: PathBuf,
        /// Word of length n, symbols separated by spaces.
        #[arg(long)]
        word: String,
    },
    /// Membership query: exit 0 and print true, or exit 1 and print false.
    Contains {
        /// Construction file (spec=embed or spec=partition).
        #[arg(long)]
        spec: PathBuf,
        /// Word of length n, symbols separated by spaces.
        #[arg(long)]
        word: String,
        /// Part label (required for partition constructions), e.g. P1 or
        /// O0.0.0
        #[arg(long)]
        part: Option<String>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Check that a code is 1-perfect: every word of the space is covered
    /// by exactly one radius-1 ball.
    Perfect {
        /// Explicit code file.
        #[arg(long)]
        code: Option<PathBuf>,
        /// Construction file (spec=embed) checked as an oracle.
        #[arg(long)]
        construction: Option<PathBuf>,
        /// Sample this many seeded words instead of scanning the space.
        #[arg(long, value_name = "TRIALS")]
        sampled: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check that a code has minimum distance >= 3.
    #[command(name = "1code")]
    OneCode {
        #[arg(long)]
        code: PathBuf,
    },
    /// Check that parts tile their space and each part is 1-perfect.
    Partition {
        /// Explicit partition file.
        #[arg(long)]
        partition: Option<PathBuf>,
        /// Construction file (spec=partition) checked as an oracle.
        #[arg(long)]
        construction: Option<PathBuf>,
        /// Sample this many seeded words instead of scanning the space.
        #[arg(long, value_name = "TRIALS")]
        sampled: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    // Die quietly when the reading end of a pipe closes, like any filter;
    // the runtime's default turns EPIPE into a panic.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.cmd {
        Cmd::Geometry { q, m, points, lines, planes } => geometry(q, m, points, lines, planes),
        Cmd::Components { q, m, delta } => components(q, m, &delta),
        Cmd::Embed { q, m, code, out, oracle_only } => embed(q, m, &code, &out, oracle_only),
        Cmd::EmbedPartition { q, s, partition, out, oracle_only } => {
            embed_partition(q, s, &partition, &out, oracle_only)
        }
        Cmd::Verify { what } => match what {
            VerifyCmd::Perfect { code, construction, sampled, seed } => {
                verify_perfect(code.as_deref(), construction.as_deref(), sampled, seed)
            }
            VerifyCmd::OneCode { code } => verify_one_code(&code),
            VerifyCmd::Partition { partition, construction, sampled, seed } => {
                verify_partition(partition.as_deref(), construction.as_deref(), sampled, seed)
            }
        },
        Cmd::Classify { spec, word } => classify(&spec, &word),
        Cmd::Contains { spec, word, part } => contains(&spec, &word, part.as_deref()),
    }
}

fn parse_spaced_word(f: &FieldSpec, text: &str) -> anyhow::Result<Word> {
    let symbols = text
        .split_whitespace()
        .map(|t| {
            t.parse::<El>()
                .map_err(|_| anyhow!("bad symbol {t:?} in --word"))
        })
        .collect::<anyhow::Result<Vec<El>>>()?;
    Ok(Word::new(f, symbols)?)
}

/// Gaussian binomial [m over k]_q: the number of k-dimensional subspaces of
/// F^m, i.e. points (k=1), lines (k=2), planes (k=3) of the geometry.
fn subspace_count(q: u64, m: usize, k: usize) -> u128 {
    let q = q as u128;
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= q.pow((m - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

fn geometry(q: u64, m: usize, points: bool, lines: bool, planes: bool) -> anyhow::Result<bool> {
    let f = create_field(q)?;
    let ordering = PointOrdering::enumerate(&f, m)?;
    println!(
        "q={q} m={m} n={} points={} lines={} planes={}",
        ordering.n(),
        subspace_count(q, m, 1),
        subspace_count(q, m, 2),
        subspace_count(q, m, 3)
    );
    if points {
        for (i, p) in ordering.points().iter().enumerate() {
            println!("{i}: {p}");
        }
    }
    if lines {
        for l in ordering.all_lines(&f)? {
            println!("{}", join_indices(l.point_indices()));
        }
    }
    if planes {
        for p in ordering.all_planes(&f)? {
            println!("{}", join_indices(p.point_indices()));
        }
    }
    Ok(true)
}

fn join_indices(indices: &[usize]) -> String {
    indices
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn components(q: u64, m: usize, delta: &str) -> anyhow::Result<bool> {
    let f = create_field(q)?;
    let h = HammingCode::new(f.clone(), m)?;
    let point = point_from_dots(&f, delta)?;
    let basis = component_basis(&h, &point)?;
    println!("q={q} m={m} n={} delta={point}", h.n());
    println!("dim={}", basis.dim());
    for row in basis.rows() {
        println!("{row}");
    }
    Ok(true)
}

fn load_code_checked(path: &Path, q: u64, len: usize, flag: &str) -> anyhow::Result<CodeFile> {
    let file = CodeFile::load(path).with_context(|| format!("reading {}", path.display()))?;
    if u64::from(file.field.q()) != q {
        bail!("--q is {q} but {} declares q={}", path.display(), file.field.q());
    }
    if file.n != len {
        bail!(
            "{flag} expects words of length {len}, but {} declares n={}",
            path.display(),
            file.n
        );
    }
    Ok(file)
}

fn embed(q: u64, m: usize, code: &Path, out: &Path, oracle_only: bool) -> anyhow::Result<bool> {
    if m < 2 {
        bail!("--m must be at least 2");
    }
    let file = load_code_checked(code, q, m - 1, "--code")?;
    let spec = build_embedding(&file.field, &file.words, m)?;
    println!("q={q} m={m} n={}", spec.n());
    println!("code words: {}", spec.original_code().len());
    let total = Word::space_size(spec.q(), spec.n() - m);
    match total {
        Some(t) => println!("embedded words: {t}"),
        None => println!("embedded words: {}^{}", q, spec.n() - m),
    }
    if !oracle_only && matches!(total, Some(t) if t <= ENUM_CAP) {
        let words = spec.enumerate(ENUM_CAP)?;
        let out_file = CodeFile::new(file.field.clone(), spec.n(), words)?;
        out_file.save(out)?;
        println!("wrote {} ({} words)", out.display(), out_file.words.len());
    } else {
        let description = Construction::Embed {
            field: file.field.clone(),
            m,
            code: file.words.clone(),
        };
        std::fs::write(out, description.to_text())?;
        println!("wrote {} (description)", out.display());
    }
    let recovered = spec.shorten()?;
    if recovered == spec.original_code() {
        println!("shorten: OK");
        Ok(true)
    } else {
        println!("shorten: MISMATCH");
        Ok(false)
    }
}

fn embed_partition(
    q: u64,
    s: usize,
    partition: &Path,
    out: &Path,
    oracle_only: bool,
) -> anyhow::Result<bool> {
    let file =
        PartitionFile::load(partition).with_context(|| format!("reading {}", partition.display()))?;
    if u64::from(file.field.q()) != q {
        bail!(
            "--q is {q} but {} declares q={}",
            partition.display(),
            file.field.q()
        );
    }
    if file.n != s {
        bail!(
            "--s is {s} but {} declares n={}",
            partition.display(),
            file.n
        );
    }
    let classes: Vec<Vec<Word>> = file.parts.iter().map(|(_, ws)| ws.clone()).collect();
    let spec = build_partition(&file.field, &classes, s)?;
    println!("q={q} s={s} n={}", spec.n());
    println!("parts={}", spec.labels().len());

    let mut all_ok = true;
    for j in 1..=spec.k() {
        let recovered = spec.shorten_part(&PartLabel::P(j))?;
        if recovered == spec.codes()[j - 1] {
            println!("P{j} shorten: OK");
        } else {
            println!("P{j} shorten: MISMATCH");
            all_ok = false;
        }
    }

    let total = Word::space_size(spec.q(), spec.n());
    if !oracle_only && matches!(total, Some(t) if t <= ENUM_CAP) {
        let parts = spec
            .labels()
            .iter()
            .map(|label| Ok((label.to_string(), spec.enumerate_part(label, ENUM_CAP)?)))
            .collect::<qperfect::Result<Vec<_>>>()?;
        let out_file = PartitionFile { field: file.field.clone(), n: spec.n(), parts };
        out_file.save(out)?;
        println!("wrote {} ({} parts)", out.display(), out_file.parts.len());
    } else {
        let description = Construction::Partition { field: file.field.clone(), s, classes };
        std::fs::write(out, description.to_text())?;
        println!("wrote {} (description)", out.display());
    }
    Ok(all_ok)
}

fn report_outcome(report: &verify::VerificationReport) -> bool {
    if report.pass {
        match &report.mode {
            verify::Mode::Exhaustive => println!(
                "PASS (exhaustive: {} words scanned, {} checks)",
                report.words_scanned, report.balls_checked
            ),
            verify::Mode::Sampled { seed, trials } => {
                println!("PASS (sampled: seed={seed} trials={trials})")
            }
        }
        true
    } else {
        match &report.witness {
            Some(verify::Witness::Word(w)) => println!("FAIL witness: {w}"),
            Some(verify::Witness::Pair(a, b)) => println!("FAIL witness pair: {a} / {b}"),
            None => println!("FAIL"),
        }
        false
    }
}

fn load_embed_construction(path: &Path) -> anyhow::Result<EmbeddingSpec> {
    match Construction::load(path).with_context(|| format!("reading {}", path.display()))? {
        Construction::Embed { field, m, code } => Ok(build_embedding(&field, &code, m)?),
        Construction::Partition { .. } => {
            bail!(
                "{} is a partition construction; use `verify partition --construction`",
                path.display()
            )
        }
    }
}

fn load_partition_construction(path: &Path) -> anyhow::Result<PartitionSpec> {
    match Construction::load(path).with_context(|| format!("reading {}", path.display()))? {
        Construction::Partition { field, s, classes } => {
            Ok(build_partition(&field, &classes, s)?)
        }
        Construction::Embed { .. } => {
            bail!(
                "{} is an embed construction; use `verify perfect --construction`",
                path.display()
            )
        }
    }
}

fn verify_perfect(
    code: Option<&Path>,
    construction: Option<&Path>,
    sampled: Option<u64>,
    seed: u64,
) -> anyhow::Result<bool> {
    let report = match (code, construction) {
        (Some(path), None) => {
            let file = CodeFile::load(path).with_context(|| format!("reading {}", path.display()))?;
            let member = |w: &Word| Ok(file.words.binary_search(w).is_ok());
            match sampled {
                Some(trials) => {
                    verify::is_perfect_sampled(&file.field, file.n, member, trials, seed)?
                }
                None => verify::is_perfect_exhaustive(&file.field, file.n, member, ENUM_CAP)?,
            }
        }
        (None, Some(path)) => {
            let spec = load_embed_construction(path)?;
            let member = |w: &Word| spec.contains(w);
            match sampled {
                Some(trials) => {
                    verify::is_perfect_sampled(spec.field(), spec.n(), member, trials, seed)?
                }
                None => verify::is_perfect_exhaustive(spec.field(), spec.n(), member, ENUM_CAP)?,
            }
        }
        _ => bail!("give exactly one of --code or --construction"),
    };
    Ok(report_outcome(&report))
}

fn verify_one_code(code: &Path) -> anyhow::Result<bool> {
    let file = CodeFile::load(code).with_context(|| format!("reading {}", code.display()))?;
    let report = verify::is_one_code(&file.field, &file.words)?;
    Ok(report_outcome(&report))
}

fn verify_partition(
    partition: Option<&Path>,
    construction: Option<&Path>,
    sampled: Option<u64>,
    seed: u64,
) -> anyhow::Result<bool> {
    match (partition, construction) {
        (Some(path), None) => {
            let file = PartitionFile::load(path)
                .with_context(|| format!("reading {}", path.display()))?;
            // Parsing already rejects duplicate words, so coverage reduces
            // to counting.
            let total: u64 = file.parts.iter().map(|(_, ws)| ws.len() as u64).sum();
            match Word::space_size(file.field.q(), file.n) {
                Some(size) if size == total => {}
                Some(size) => {
                    println!("FAIL parts hold {total} of {size} words");
                    return Ok(false);
                }
                None => bail!("space q^{} is too large to verify explicitly", file.n),
            }
            let mut pass = true;
            for (name, words) in &file.parts {
                let member = |w: &Word| Ok(words.binary_search(w).is_ok());
                let report = match sampled {
                    Some(trials) => {
                        verify::is_perfect_sampled(&file.field, file.n, member, trials, seed)?
                    }
                    None => verify::is_perfect_exhaustive(&file.field, file.n, member, ENUM_CAP)?,
                };
                print!("part {name}: ");
                pass &= report_outcome(&report);
            }
            Ok(pass)
        }
        (None, Some(path)) => {
            let spec = load_partition_construction(path)?;
            let report = match sampled {
                Some(trials) => verify::is_partition_sampled(
                    spec.field(),
                    spec.n(),
                    spec.labels(),
                    |w| spec.classify(w),
                    |l, w| spec.part_contains(l, w),
                    trials,
                    seed,
                )?,
                None => verify::is_partition_exhaustive(
                    spec.field(),
                    spec.n(),
                    spec.labels(),
                    |w| spec.classify(w),
                    |l, w| spec.part_contains(l, w),
                    ENUM_CAP,
                )?,
            };
            print!("tiling: ");
            let mut pass = report_outcome(&report);
            for label in spec.labels() {
                let member = |w: &Word| spec.part_contains(label, w);
                let part_report = match sampled {
                    Some(trials) => {
                        verify::is_perfect_sampled(spec.field(), spec.n(), member, trials, seed)?
                    }
                    None => {
                        verify::is_perfect_exhaustive(spec.field(), spec.n(), member, ENUM_CAP)?
                    }
                };
                print!("part {label}: ");
                pass &= report_outcome(&part_report);
            }
            Ok(pass)
        }
        _ => bail!("give exactly one of --partition or --construction"),
    }
}

fn classify(spec: &Path, word: &str) -> anyhow::Result<bool> {
    let partition = load_partition_construction(spec)?;
    let w = parse_spaced_word(partition.field(), word)?;
    println!("{}", partition.classify(&w)?);
    Ok(true)
}

fn contains(spec: &Path, word: &str, part: Option<&str>) -> anyhow::Result<bool> {
    let construction =
        Construction::load(spec).with_context(|| format!("reading {}", spec.display()))?;
    let member = match construction {
        Construction::Embed { field, m, code } => {
            if part.is_some() {
                bail!("--part only applies to partition constructions");
            }
            let e = build_embedding(&field, &code, m)?;
            let w = parse_spaced_word(&field, word)?;
            e.contains(&w)?
        }
        Construction::Partition { field, s, classes } => {
            let label_text =
                part.ok_or_else(|| anyhow!("partition constructions need --part, e.g. --part P1"))?;
            let p = build_partition(&field, &classes, s)?;
            let label = PartLabel::parse(label_text)?;
            let w = parse_spaced_word(&field, word)?;
            p.part_contains(&label, &w)?
        }
    };
    println!("{member}");
    Ok(member)
}
