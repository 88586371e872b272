//! Verifiers for the three properties everything else rests on: a set of
//! words has minimum distance >= 3, a membership oracle describes a
//! 1-perfect code, and a partition oracle tiles its space.
//!
//! Failures are data, not errors: each check returns a
//! [`VerificationReport`] whose witness pins down the first offending word
//! or pair. Errors are reserved for malformed inputs and blown caps.
//!
//! Exhaustive checks walk words in rank order (the big-endian radix-q rank,
//! which coincides with lexicographic order), so a reported witness is the
//! lexicographically least failure. Sampled checks draw words from
//! `ChaCha12Rng::seed_from_u64(seed)`, one symbol at a time, so a report is
//! reproducible from its seed.

use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::hamming::HammingCode;
use crate::word::Word;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// How a verification run traversed the space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled { seed: u64, trials: u64 },
}

/// The first failure a check found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A word covered by the wrong number of balls, or classified
    /// inconsistently.
    Word(Word),
    /// Two words that are too close together.
    Pair(Word, Word),
}

/// Outcome of one verification run. `words_scanned` counts membership
/// queries against the oracle under test; `balls_checked` counts the
/// higher-level units verified (covering balls, word pairs, or per-part
/// classifications). On failure both report the work done up to and
/// including the witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub pass: bool,
    pub witness: Option<Witness>,
    pub mode: Mode,
    pub words_scanned: u64,
    pub balls_checked: u64,
}

impl VerificationReport {
    fn passed(mode: Mode, words_scanned: u64, balls_checked: u64) -> Self {
        VerificationReport { pass: true, witness: None, mode, words_scanned, balls_checked }
    }

    fn failed(mode: Mode, witness: Witness, words_scanned: u64, balls_checked: u64) -> Self {
        VerificationReport {
            pass: false,
            witness: Some(witness),
            mode,
            words_scanned,
            balls_checked,
        }
    }
}

/// Checks that the words pairwise keep distance >= 3. The empty set and
/// singletons pass vacuously. All words must share one length.
pub fn is_one_code(f: &FieldSpec, words: &[Word]) -> Result<VerificationReport> {
    let len = words.first().map_or(0, Word::len);
    for w in words {
        w.expect_shape(f, len)?;
    }
    let mut pairs = 0u64;
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            pairs += 1;
            if words[i].distance(&words[j]) < 3 {
                return Ok(VerificationReport::failed(
                    Mode::Exhaustive,
                    Witness::Pair(words[i].clone(), words[j].clone()),
                    words.len() as u64,
                    pairs,
                ));
            }
        }
    }
    Ok(VerificationReport::passed(Mode::Exhaustive, words.len() as u64, pairs))
}

fn space_checked(f: &FieldSpec, n: usize, cap: u64) -> Result<u64> {
    match Word::space_size(f.q(), n) {
        Some(c) if c <= cap => Ok(c),
        other => Err(Error::CapExceeded {
            required: other.map_or(u128::MAX, u128::from),
            cap,
        }),
    }
}

/// Checks that the oracle describes a 1-perfect code of length n: every
/// word of F^n lies in exactly one radius-1 ball around a member. Walks all
/// q^n words twice (membership bitmap, then ball counts); q^n must stay
/// within `cap`.
pub fn is_perfect_exhaustive<F>(
    f: &FieldSpec,
    n: usize,
    mut member: F,
    cap: u64,
) -> Result<VerificationReport>
where
    F: FnMut(&Word) -> Result<bool>,
{
    let size = space_checked(f, n, cap)?;
    let q = f.q() as u64;
    let mut bitmap = vec![false; size as usize];
    let mut w = Word::zero(f, n);
    for r in 0..size {
        w.set_from_rank(r);
        bitmap[r as usize] = member(&w)?;
    }
    // pows[i] is the rank weight of coordinate i.
    let mut pows = vec![1u64; n];
    for i in (0..n.saturating_sub(1)).rev() {
        pows[i] = pows[i + 1] * q;
    }
    for r in 0..size {
        w.set_from_rank(r);
        let mut covered = u64::from(bitmap[r as usize]);
        'ball: for i in 0..n {
            let d = w.get(i) as i64;
            for v in 0..q as i64 {
                if v == d {
                    continue;
                }
                let neighbor = (r as i64 + (v - d) * pows[i] as i64) as usize;
                covered += u64::from(bitmap[neighbor]);
                if covered > 1 {
                    break 'ball;
                }
            }
        }
        if covered != 1 {
            return Ok(VerificationReport::failed(
                Mode::Exhaustive,
                Witness::Word(w.clone()),
                size,
                r + 1,
            ));
        }
    }
    Ok(VerificationReport::passed(Mode::Exhaustive, size, size))
}

fn sample_word(f: &FieldSpec, n: usize, rng: &mut ChaCha12Rng) -> Word {
    let mut w = Word::zero(f, n);
    for i in 0..n {
        w.set(i, rng.random_range(0..f.q()) as crate::gf::El);
    }
    w
}

/// Spot-checks 1-perfection: for `trials` seeded random words, queries the
/// oracle across the whole radius-1 ball and demands exactly one member.
/// Each trial costs n(q - 1) + 1 oracle calls.
pub fn is_perfect_sampled<F>(
    f: &FieldSpec,
    n: usize,
    mut member: F,
    trials: u64,
    seed: u64,
) -> Result<VerificationReport>
where
    F: FnMut(&Word) -> Result<bool>,
{
    if trials == 0 {
        return Err(Error::Precondition("sampled verification needs trials >= 1".into()));
    }
    let mode = Mode::Sampled { seed, trials };
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut queries = 0u64;
    for t in 0..trials {
        let w = sample_word(f, n, &mut rng);
        let mut covered = 0u64;
        queries += 1;
        if member(&w)? {
            covered += 1;
        }
        let mut probe = w.clone();
        'ball: for i in 0..n {
            let d = probe.get(i);
            for v in 0..f.q() as crate::gf::El {
                if v == d {
                    continue;
                }
                probe.set(i, v);
                queries += 1;
                if member(&probe)? {
                    covered += 1;
                    if covered > 1 {
                        break 'ball;
                    }
                }
            }
            probe.set(i, d);
        }
        if covered != 1 {
            return Ok(VerificationReport::failed(mode, Witness::Word(w), queries, t + 1));
        }
    }
    Ok(VerificationReport::passed(mode, queries, trials))
}

fn partition_word_ok<L, C, P>(
    labels: &[L],
    classify: &mut C,
    contains: &mut P,
    w: &Word,
) -> Result<bool>
where
    L: PartialEq,
    C: FnMut(&Word) -> Result<L>,
    P: FnMut(&L, &Word) -> Result<bool>,
{
    let label = classify(w)?;
    if !contains(&label, w)? {
        return Ok(false);
    }
    for other in labels {
        if *other != label && contains(other, w)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that a labelled family of parts tiles F^n: every word belongs to
/// its classified part and to no other label in the list. Cost is q^n words
/// times |labels| membership tests each.
pub fn is_partition_exhaustive<L, C, P>(
    f: &FieldSpec,
    n: usize,
    labels: &[L],
    mut classify: C,
    mut contains: P,
    cap: u64,
) -> Result<VerificationReport>
where
    L: PartialEq,
    C: FnMut(&Word) -> Result<L>,
    P: FnMut(&L, &Word) -> Result<bool>,
{
    let size = space_checked(f, n, cap)?;
    let tests_per_word = labels.len() as u64;
    let mut w = Word::zero(f, n);
    for r in 0..size {
        w.set_from_rank(r);
        if !partition_word_ok(labels, &mut classify, &mut contains, &w)? {
            return Ok(VerificationReport::failed(
                Mode::Exhaustive,
                Witness::Word(w.clone()),
                (r + 1) * tests_per_word,
                r + 1,
            ));
        }
    }
    Ok(VerificationReport::passed(Mode::Exhaustive, size * tests_per_word, size))
}

/// Spot-checks the tiling on seeded random words.
pub fn is_partition_sampled<L, C, P>(
    f: &FieldSpec,
    n: usize,
    labels: &[L],
    mut classify: C,
    mut contains: P,
    trials: u64,
    seed: u64,
) -> Result<VerificationReport>
where
    L: PartialEq,
    C: FnMut(&Word) -> Result<L>,
    P: FnMut(&L, &Word) -> Result<bool>,
{
    if trials == 0 {
        return Err(Error::Precondition("sampled verification needs trials >= 1".into()));
    }
    let mode = Mode::Sampled { seed, trials };
    let tests_per_word = labels.len() as u64;
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    for t in 0..trials {
        let w = sample_word(f, n, &mut rng);
        if !partition_word_ok(labels, &mut classify, &mut contains, &w)? {
            return Ok(VerificationReport::failed(
                mode,
                Witness::Word(w),
                (t + 1) * tests_per_word,
                t + 1,
            ));
        }
    }
    Ok(VerificationReport::passed(mode, trials * tests_per_word, trials))
}

/// Independent recount of the weight-3 codewords, for checking the
/// line-based enumeration. Scans every word of the space when q^n fits the
/// cap, otherwise falls back to scanning 3-element supports. Output is
/// sorted.
pub fn brute_force_weight3(h: &HammingCode, cap: u64) -> Result<Vec<Word>> {
    match Word::space_size(h.q(), h.n()) {
        Some(c) if c <= cap => brute_force_weight3_full_scan(h, cap),
        _ => brute_force_weight3_supports(h, cap),
    }
}

/// Weight-3 codewords by scanning all q^n words.
pub fn brute_force_weight3_full_scan(h: &HammingCode, cap: u64) -> Result<Vec<Word>> {
    let f = h.field();
    let size = space_checked(f, h.n(), cap)?;
    let mut out = Vec::new();
    let mut w = Word::zero(f, h.n());
    for r in 0..size {
        w.set_from_rank(r);
        if w.weight() == 3 && h.syndrome_u(&w).is_zero() {
            out.push(w.clone());
        }
    }
    out.sort();
    Ok(out)
}

/// Weight-3 codewords by scanning the C(n, 3) * (q - 1)^3 words of weight
/// exactly 3.
pub fn brute_force_weight3_supports(h: &HammingCode, cap: u64) -> Result<Vec<Word>> {
    let f = h.field();
    let n = h.n() as u128;
    let nonzero = (f.q() - 1) as u128;
    let work = n * (n - 1) * (n - 2) / 6 * nonzero.pow(3);
    if work > cap as u128 {
        return Err(Error::CapExceeded { required: work, cap });
    }
    let mut out = Vec::new();
    let mut w = Word::zero(f, h.n());
    for a in 0..h.n() {
        for b in a + 1..h.n() {
            for c in b + 1..h.n() {
                for va in 1..f.q() as crate::gf::El {
                    for vb in 1..f.q() as crate::gf::El {
                        for vc in 1..f.q() as crate::gf::El {
                            w.set(a, va);
                            w.set(b, vb);
                            w.set(c, vc);
                            if h.syndrome_u(&w).is_zero() {
                                out.push(w.clone());
                            }
                        }
                    }
                }
                w.set(a, 0);
                w.set(b, 0);
                w.set(c, 0);
            }
        }
    }
    out.sort();
    Ok(out)
}
