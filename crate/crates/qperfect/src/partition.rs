//! Lifting a partition of F^s into 1-codes to a partition of F^n into
//! 1-perfect codes, n = (q^(s+1) - 1)/(q - 1).
//!
//! Each class C_j is anchored at its lexicographically least word y_j and
//! embedded as P(C_j - y_j) inside the Hamming code of length n, then
//! translated by the word for alpha_j = (0, y_j). The translates are the
//! "code" parts P_1 .. P_k. Every word x of F^s also names a "swap" part
//! O_x: the words of syndrome (1, x) that the owning translate did not take,
//! together with the coset its embedding cut out of the syndrome-alpha_j
//! layer. Every remaining syndrome alpha (not starting with 1, not an
//! anchor) names a plain Hamming translate H_alpha. That accounts for all
//! q^(s+1) syndromes, so the parts tile F^n, and each part is 1-perfect.
//!
//! Classification is constant-time in the part count: compute the syndrome,
//! branch on its first symbol, and test at most one coset membership.

use crate::embed::{build_embedding, EmbeddingSpec, SwitchedComponent};
use crate::error::{Error, Result};
use crate::gf::{El, FieldSpec};
use crate::hamming::{enumerate_span_translated, HammingCode, DEFAULT_ENUM_CAP};
use crate::word::Word;
use std::collections::HashMap;
use std::fmt;

/// Name of one part. `P(j)` is the 1-based translate of the j-th input
/// class, `O(x)` the swap part for x in F^s, `H(alpha)` a plain translate
/// with syndrome alpha in F^(s+1). The derived order (P before O before H,
/// each kind lexicographic) is the order `labels()` reports.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PartLabel {
    P(usize),
    O(Vec<El>),
    H(Vec<El>),
}

fn write_symbols(fm: &mut fmt::Formatter<'_>, symbols: &[El]) -> fmt::Result {
    for (i, s) in symbols.iter().enumerate() {
        if i > 0 {
            write!(fm, ".")?;
        }
        write!(fm, "{s}")?;
    }
    Ok(())
}

impl fmt::Display for PartLabel {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartLabel::P(j) => write!(fm, "P{j}"),
            PartLabel::O(x) => {
                write!(fm, "O")?;
                write_symbols(fm, x)
            }
            PartLabel::H(a) => {
                write!(fm, "H")?;
                write_symbols(fm, a)
            }
        }
    }
}

impl PartLabel {
    /// Parses "P3", "O0.1.2", "H0.1.0.1". Shape checks against a concrete
    /// partition happen later, when the label is used.
    pub fn parse(text: &str) -> Result<PartLabel> {
        let bad = || Error::UnknownLabel(text.to_string());
        let rest = text.get(1..).ok_or_else(bad)?;
        match text.as_bytes().first() {
            Some(b'P') => Ok(PartLabel::P(rest.parse().map_err(|_| bad())?)),
            Some(b'O') | Some(b'H') => {
                let symbols = rest
                    .split('.')
                    .map(|t| t.parse::<El>().map_err(|_| bad()))
                    .collect::<Result<Vec<El>>>()?;
                if text.starts_with('O') {
                    Ok(PartLabel::O(symbols))
                } else {
                    Ok(PartLabel::H(symbols))
                }
            }
            _ => Err(bad()),
        }
    }
}

/// A partition of F^n into q^(s+1) 1-perfect codes, held as oracles.
#[derive(Debug, Clone)]
pub struct PartitionSpec {
    hamming: HammingCode,
    codes: Vec<Vec<Word>>,
    anchors: Vec<Word>,
    anchor_alphas: Vec<Word>,
    anchor_words: Vec<Word>,
    embedded: Vec<EmbeddingSpec>,
    owners: HashMap<Word, usize>,
    anchor_index: HashMap<Word, usize>,
    labels: Vec<PartLabel>,
}

/// Validates that `codes` partitions F^s into classes of minimum distance
/// >= 3 and builds the lifted partition. Class order is preserved: the j-th
/// input class becomes part P(j+1) with its words sorted.
pub fn build_partition(field: &FieldSpec, codes: &[Vec<Word>], s: usize) -> Result<PartitionSpec> {
    if s == 0 {
        return Err(Error::Precondition("partition needs s >= 1".into()));
    }
    if codes.is_empty() {
        return Err(Error::NotPartition { reason: "no classes given".into() });
    }
    let mut owners = HashMap::new();
    for (j, code) in codes.iter().enumerate() {
        if code.is_empty() {
            return Err(Error::NotPartition { reason: format!("class {} is empty", j + 1) });
        }
        for w in code {
            w.expect_shape(field, s)?;
            if let Some(&other) = owners.get(w) {
                return Err(Error::NotPartition {
                    reason: format!(
                        "word {w} appears in classes {} and {}",
                        other + 1,
                        j + 1
                    ),
                });
            }
            owners.insert(w.clone(), j);
        }
        for a in 0..code.len() {
            for b in a + 1..code.len() {
                let d = code[a].distance(&code[b]);
                if d < 3 {
                    return Err(Error::NotPartition {
                        reason: format!(
                            "class {} has words {} and {} at distance {d}",
                            j + 1,
                            code[a],
                            code[b]
                        ),
                    });
                }
            }
        }
    }
    let total = owners.len() as u64;
    match Word::space_size(field.q(), s) {
        Some(sz) if sz == total => {}
        Some(sz) => {
            let mut reason = format!("classes hold {total} of {sz} words");
            if sz <= DEFAULT_ENUM_CAP {
                for r in 0..sz {
                    let w = Word::from_rank(field, s, r);
                    if !owners.contains_key(&w) {
                        reason = format!("word {w} is not covered by any class");
                        break;
                    }
                }
            }
            return Err(Error::NotPartition { reason });
        }
        None => {
            return Err(Error::NotPartition {
                reason: format!("space size q^{s} overflows; got {total} words"),
            })
        }
    }

    let m = s + 1;
    let hamming = HammingCode::new(field.clone(), m)?;
    let mut sorted_codes = Vec::with_capacity(codes.len());
    let mut anchors = Vec::with_capacity(codes.len());
    let mut anchor_alphas = Vec::with_capacity(codes.len());
    let mut anchor_words = Vec::with_capacity(codes.len());
    let mut embedded = Vec::with_capacity(codes.len());
    let mut anchor_index = HashMap::with_capacity(codes.len());
    for (j, code) in codes.iter().enumerate() {
        let mut sorted = code.clone();
        sorted.sort();
        let anchor = sorted[0].clone();
        let recentred: Vec<Word> = sorted.iter().map(|w| w.sub(field, &anchor)).collect();
        embedded.push(build_embedding(field, &recentred, m)?);
        let mut alpha = Vec::with_capacity(m);
        alpha.push(0);
        alpha.extend_from_slice(anchor.symbols());
        let alpha = Word::new(field, alpha)?;
        anchor_words.push(hamming.extend(&alpha)?);
        anchor_alphas.push(alpha);
        anchor_index.insert(anchor.clone(), j);
        anchors.push(anchor);
        sorted_codes.push(sorted);
    }

    let syndromes = match Word::space_size(field.q(), m) {
        Some(c) if c <= DEFAULT_ENUM_CAP => c,
        other => {
            return Err(Error::CapExceeded {
                required: other.map_or(u128::MAX, u128::from),
                cap: DEFAULT_ENUM_CAP,
            })
        }
    };
    let mut labels = Vec::with_capacity(syndromes as usize);
    labels.extend((1..=codes.len()).map(PartLabel::P));
    let per_layer = Word::space_size(field.q(), s).unwrap();
    for r in 0..per_layer {
        labels.push(PartLabel::O(Word::from_rank(field, s, r).symbols().to_vec()));
    }
    for r in 0..syndromes {
        let alpha = Word::from_rank(field, m, r);
        let anchored = alpha.get(0) == 0 && anchor_index.contains_key(&tail(field, &alpha));
        if alpha.get(0) != 1 && !anchored {
            labels.push(PartLabel::H(alpha.symbols().to_vec()));
        }
    }
    debug_assert_eq!(labels.len() as u64, syndromes);

    Ok(PartitionSpec {
        hamming,
        codes: sorted_codes,
        anchors,
        anchor_alphas,
        anchor_words,
        embedded,
        owners,
        anchor_index,
        labels,
    })
}

fn tail(f: &FieldSpec, alpha: &Word) -> Word {
    Word::new(f, alpha.symbols()[1..].to_vec()).expect("tail of a checked word")
}

/// A label resolved against a concrete partition.
enum Resolved<'a> {
    Code(usize),
    Swap {
        j: usize,
        x: Word,
        comp: &'a SwitchedComponent,
    },
    Plain(Word),
}

impl PartitionSpec {
    pub fn field(&self) -> &FieldSpec {
        self.hamming.field()
    }

    pub fn q(&self) -> u32 {
        self.hamming.q()
    }

    pub fn s(&self) -> usize {
        self.hamming.m() - 1
    }

    pub fn m(&self) -> usize {
        self.hamming.m()
    }

    pub fn n(&self) -> usize {
        self.hamming.n()
    }

    pub fn k(&self) -> usize {
        self.codes.len()
    }

    pub fn hamming(&self) -> &HammingCode {
        &self.hamming
    }

    /// The input classes, each sorted.
    pub fn codes(&self) -> &[Vec<Word>] {
        &self.codes
    }

    /// The anchor y_j of each class: its lexicographically least word.
    pub fn anchors(&self) -> &[Word] {
        &self.anchors
    }

    pub fn embedded(&self, j: usize) -> Option<&EmbeddingSpec> {
        self.embedded.get(j)
    }

    /// All q^(s+1) part labels: P(1)..P(k), then O(x) for x lexicographic,
    /// then the plain translates for the remaining syndromes lexicographic.
    pub fn labels(&self) -> &[PartLabel] {
        &self.labels
    }

    /// The class whose anchor syndrome (0, y_j) equals `alpha`, if any.
    /// Higher leading coordinates never match; those cosets stay whole.
    fn anchor_class(&self, alpha: &Word) -> Option<usize> {
        if alpha.get(0) != 0 {
            return None;
        }
        self.anchor_index.get(&tail(self.field(), alpha)).copied()
    }

    fn swap_component(&self, x: &Word) -> (usize, &SwitchedComponent) {
        let j = *self.owners.get(x).expect("owners cover the space");
        let shifted = x.sub(self.field(), &self.anchors[j]);
        let mut coords = Vec::with_capacity(self.m());
        coords.push(1);
        coords.extend_from_slice(shifted.symbols());
        let delta = Word::from_symbols_unchecked(self.q(), coords);
        let comp = self.embedded[j]
            .component_by_delta(&delta)
            .expect("every class word is a component of its embedding");
        (j, comp)
    }

    fn resolve(&self, label: &PartLabel) -> Result<Resolved<'_>> {
        let bad = || Error::UnknownLabel(label.to_string());
        match label {
            PartLabel::P(j) => {
                if *j >= 1 && *j <= self.k() {
                    Ok(Resolved::Code(j - 1))
                } else {
                    Err(bad())
                }
            }
            PartLabel::O(symbols) => {
                if symbols.len() != self.s() {
                    return Err(bad());
                }
                let x = Word::new(self.field(), symbols.clone()).map_err(|_| bad())?;
                let (j, comp) = self.swap_component(&x);
                Ok(Resolved::Swap { j, x, comp })
            }
            PartLabel::H(symbols) => {
                if symbols.len() != self.m() {
                    return Err(bad());
                }
                let alpha = Word::new(self.field(), symbols.clone()).map_err(|_| bad())?;
                if alpha.get(0) == 1 || self.anchor_class(&alpha).is_some() {
                    return Err(bad());
                }
                Ok(Resolved::Plain(alpha))
            }
        }
    }

    /// The unique part holding `w`, decided from the syndrome.
    pub fn classify(&self, w: &Word) -> Result<PartLabel> {
        let f = self.field();
        let syn = self.hamming.syndrome(w)?;
        if syn.get(0) == 1 {
            let x = tail(f, &syn);
            let (j, comp) = self.swap_component(&x);
            let shifted = w.sub(f, &self.anchor_words[j]).sub(f, comp.added_rep());
            if comp.basis().member_u(f, &shifted) {
                Ok(PartLabel::P(j + 1))
            } else {
                Ok(PartLabel::O(x.symbols().to_vec()))
            }
        } else if let Some(j) = self.anchor_class(&syn) {
            let codeword = w.sub(f, &self.anchor_words[j]);
            match self.embedded[j].removed_hit(&codeword) {
                Some(i) => {
                    let x = self.embedded[j].components()[i]
                        .original_word()
                        .add(f, &self.anchors[j]);
                    Ok(PartLabel::O(x.symbols().to_vec()))
                }
                None => Ok(PartLabel::P(j + 1)),
            }
        } else {
            Ok(PartLabel::H(syn.symbols().to_vec()))
        }
    }

    /// Direct membership test against one named part, without classifying.
    pub fn part_contains(&self, label: &PartLabel, w: &Word) -> Result<bool> {
        let f = self.field();
        w.expect_shape(f, self.n())?;
        match self.resolve(label)? {
            Resolved::Code(j) => self.embedded[j].contains(&w.sub(f, &self.anchor_words[j])),
            Resolved::Swap { j, x, comp } => {
                let syn = self.hamming.syndrome(w)?;
                let shifted = w.sub(f, &self.anchor_words[j]);
                if syn.get(0) == 1 && tail(f, &syn) == x {
                    Ok(!comp.basis().member_u(f, &shifted.sub(f, comp.added_rep())))
                } else if syn == self.anchor_alphas[j] {
                    Ok(comp.basis().member_u(f, &shifted.sub(f, comp.removed_rep())))
                } else {
                    Ok(false)
                }
            }
            Resolved::Plain(alpha) => Ok(self.hamming.syndrome(w)? == alpha),
        }
    }

    /// Materializes one part, q^(n - s - 1) words, in deterministic order.
    pub fn enumerate_part(&self, label: &PartLabel, cap: u64) -> Result<Vec<Word>> {
        let f = self.field();
        match self.resolve(label)? {
            Resolved::Code(j) => {
                let base = self.embedded[j].enumerate(cap)?;
                Ok(base
                    .into_iter()
                    .map(|w| w.add(f, &self.anchor_words[j]))
                    .collect())
            }
            Resolved::Swap { j, x, comp } => {
                let mut layer = Vec::with_capacity(self.m());
                layer.push(1);
                layer.extend_from_slice(x.symbols());
                let layer = self.hamming.extend(&Word::new(f, layer)?)?;
                let taken_rep = self.anchor_words[j].add(f, comp.added_rep());
                let mut out = Vec::new();
                for h in self.hamming.enumerate_codewords(cap)? {
                    let w = h.add(f, &layer);
                    if !comp.basis().member_u(f, &w.sub(f, &taken_rep)) {
                        out.push(w);
                    }
                }
                let cut_rep = self.anchor_words[j].add(f, comp.removed_rep());
                out.extend(enumerate_span_translated(
                    f,
                    comp.basis().rows(),
                    Some(&cut_rep),
                    self.n(),
                    cap,
                )?);
                Ok(out)
            }
            Resolved::Plain(alpha) => {
                let t = self.hamming.extend(&alpha)?;
                Ok(self
                    .hamming
                    .enumerate_codewords(cap)?
                    .into_iter()
                    .map(|h| h.add(f, &t))
                    .collect())
            }
        }
    }

    /// Recovers {x : (1, x, 0...) in the part}; for P(j) this is the j-th
    /// input class.
    pub fn shorten_part(&self, label: &PartLabel) -> Result<Vec<Word>> {
        self.resolve(label)?;
        let f = self.field();
        let count = match Word::space_size(f.q(), self.s()) {
            Some(c) if c <= DEFAULT_ENUM_CAP => c,
            other => {
                return Err(Error::CapExceeded {
                    required: other.map_or(u128::MAX, u128::from),
                    cap: DEFAULT_ENUM_CAP,
                })
            }
        };
        let mut out = Vec::new();
        for r in 0..count {
            let x = Word::from_rank(f, self.s(), r);
            let mut coords = Vec::with_capacity(self.m());
            coords.push(1);
            coords.extend_from_slice(x.symbols());
            let w = self.hamming.extend(&Word::new(f, coords)?)?;
            if self.part_contains(label, &w)? {
                out.push(x);
            }
        }
        Ok(out)
    }
}
