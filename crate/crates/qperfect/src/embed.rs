//! Embedding a 1-code into a 1-perfect code.
//!
//! Given a code C of length m-1 with minimum distance >= 3 over GF(q), every
//! word x of C names a projective point delta = (1, x). The embedded code
//! P(C) is the Hamming code of length n = (q^m - 1)/(q - 1) with, for each
//! such delta, the coset R_delta + (delta_bar - e^delta) removed and the
//! coset R_delta + delta_bar glued in. The removed cosets sit inside the
//! Hamming code and are pairwise disjoint because distinct delta start with 1
//! and are at distance >= 3; each added coset is the removed one pushed one
//! step along the delta coordinate, which preserves 1-perfection. Shortening
//! P(C) at the first coordinate (value 1) and the last n - m (value 0)
//! recovers exactly C.
//!
//! Membership in P(C) is decided from the syndrome alone: syndrome 0 means
//! "Hamming codeword, accept unless some removed coset holds it", syndrome
//! (1, x) with x in C means "accept exactly the added coset", anything else
//! is out.

use crate::components::{component_basis, SubspaceBasis};
use crate::error::{Error, Result};
use crate::geometry::ProjPoint;
use crate::gf::FieldSpec;
use crate::hamming::{enumerate_span_translated, HammingCode, DEFAULT_ENUM_CAP};
use crate::word::Word;
use std::collections::HashMap;

/// One switched component: the point delta = (1, x), its subspace R_delta,
/// and the two coset representatives.
#[derive(Debug, Clone)]
pub struct SwitchedComponent {
    original: Word,
    delta: ProjPoint,
    basis: SubspaceBasis,
    removed_rep: Word,
    added_rep: Word,
}

impl SwitchedComponent {
    /// The word x of C this component switches for.
    pub fn original_word(&self) -> &Word {
        &self.original
    }

    pub fn delta(&self) -> &ProjPoint {
        &self.delta
    }

    pub fn basis(&self) -> &SubspaceBasis {
        &self.basis
    }

    /// delta_bar - e^delta, representative of the coset cut from the Hamming
    /// code.
    pub fn removed_rep(&self) -> &Word {
        &self.removed_rep
    }

    /// delta_bar, representative of the coset glued in at syndrome delta.
    pub fn added_rep(&self) -> &Word {
        &self.added_rep
    }
}

/// The embedded 1-perfect code P(C), held as an oracle: the ambient Hamming
/// code plus one switched component per word of C.
#[derive(Debug, Clone)]
pub struct EmbeddingSpec {
    hamming: HammingCode,
    original: Vec<Word>,
    components: Vec<SwitchedComponent>,
    by_syndrome: HashMap<Word, usize>,
}

/// Builds P(C) for a code C of length m-1. The words may arrive in any
/// order; they are validated as a 1-code (witness indices refer to the input
/// order) and processed sorted.
pub fn build_embedding(field: &FieldSpec, code: &[Word], m: usize) -> Result<EmbeddingSpec> {
    if m < 2 {
        return Err(Error::Precondition("embedding needs m >= 2".into()));
    }
    for w in code {
        w.expect_shape(field, m - 1)?;
    }
    for i in 0..code.len() {
        for j in i + 1..code.len() {
            let d = code[i].distance(&code[j]);
            if d < 3 {
                return Err(Error::NotOneCode { first: i, second: j, distance: d });
            }
        }
    }
    let hamming = HammingCode::new(field.clone(), m)?;
    let f = hamming.field().clone();
    let mut sorted = code.to_vec();
    sorted.sort();

    let mut components = Vec::with_capacity(sorted.len());
    let mut by_syndrome = HashMap::with_capacity(sorted.len());
    for x in &sorted {
        let mut coords = Vec::with_capacity(m);
        coords.push(1);
        coords.extend_from_slice(x.symbols());
        let delta = ProjPoint::new(&f, Word::new(&f, coords)?)?;
        let basis = component_basis(&hamming, &delta)?;
        let added_rep = hamming.extend(delta.coords())?;
        let removed_rep = added_rep.sub(&f, &hamming.unit(&delta, 1)?);
        by_syndrome.insert(delta.coords().clone(), components.len());
        components.push(SwitchedComponent {
            original: x.clone(),
            delta,
            basis,
            removed_rep,
            added_rep,
        });
    }

    let spec = EmbeddingSpec { hamming, original: sorted, components, by_syndrome };
    // The construction guarantees pairwise disjoint removed cosets; re-check
    // while assertions are on.
    #[cfg(debug_assertions)]
    for (i, a) in spec.components.iter().enumerate() {
        for b in &spec.components[i + 1..] {
            let joint = a.basis.join(&f, &b.basis).expect("same ambient space");
            let diff = a.removed_rep.sub(&f, &b.removed_rep);
            debug_assert!(
                !joint.member_u(&f, &diff),
                "removed components for {} and {} overlap",
                a.delta,
                b.delta
            );
        }
    }
    Ok(spec)
}

impl EmbeddingSpec {
    pub fn hamming(&self) -> &HammingCode {
        &self.hamming
    }

    pub fn field(&self) -> &FieldSpec {
        self.hamming.field()
    }

    pub fn q(&self) -> u32 {
        self.hamming.q()
    }

    pub fn m(&self) -> usize {
        self.hamming.m()
    }

    pub fn n(&self) -> usize {
        self.hamming.n()
    }

    /// The original code C, sorted.
    pub fn original_code(&self) -> &[Word] {
        &self.original
    }

    pub fn components(&self) -> &[SwitchedComponent] {
        &self.components
    }

    /// Membership in P(C) by syndrome dispatch.
    pub fn contains(&self, w: &Word) -> Result<bool> {
        let f = self.field();
        let s = self.hamming.syndrome(w)?;
        if s.is_zero() {
            // A Hamming codeword survives unless a removed coset claims it.
            return Ok(self.removed_hit(w).is_none());
        }
        match self.by_syndrome.get(&s) {
            Some(&i) => {
                let c = &self.components[i];
                Ok(c.basis.member_u(f, &w.sub(f, &c.added_rep)))
            }
            None => Ok(false),
        }
    }

    /// The switched component whose point has these homogeneous coordinates.
    pub fn component_by_delta(&self, delta_coords: &Word) -> Option<&SwitchedComponent> {
        self.by_syndrome.get(delta_coords).map(|&i| &self.components[i])
    }

    /// Index of the component whose removed coset contains this Hamming
    /// codeword, if any. Disjointness makes the index unique.
    pub(crate) fn removed_hit(&self, codeword: &Word) -> Option<usize> {
        let f = self.field();
        self.components
            .iter()
            .position(|c| c.basis.member_u(f, &codeword.sub(f, &c.removed_rep)))
    }

    /// Materializes all q^(n-m) words of P(C) in deterministic order: the
    /// surviving Hamming codewords first, then the added cosets in component
    /// order.
    pub fn enumerate(&self, cap: u64) -> Result<Vec<Word>> {
        let f = self.field();
        let mut out = Vec::new();
        for w in self.hamming.enumerate_codewords(cap)? {
            if self.removed_hit(&w).is_none() {
                out.push(w);
            }
        }
        for c in &self.components {
            let coset = enumerate_span_translated(
                f,
                c.basis.rows(),
                Some(&c.added_rep),
                self.n(),
                cap,
            )?;
            out.extend(coset);
        }
        Ok(out)
    }

    /// Recovers {x : (1, x, 0...) in P(C)}; equal to C by construction.
    pub fn shorten(&self) -> Result<Vec<Word>> {
        let f = self.field();
        let m = self.m();
        let count = match Word::space_size(f.q(), m - 1) {
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
            let x = Word::from_rank(f, m - 1, r);
            let mut coords = Vec::with_capacity(m);
            coords.push(1);
            coords.extend_from_slice(x.symbols());
            let w = self.hamming.extend(&Word::new(f, coords)?)?;
            if self.contains(&w)? {
                out.push(x);
            }
        }
        Ok(out)
    }
}
