//! The q-ary Hamming code of length n = (q^m - 1)/(q - 1).
//!
//! The parity-check matrix is implicit: its column at coordinate i *is* the
//! i-th projective point of the fixed [`PointOrdering`]. A word w belongs to
//! the code exactly when its syndrome sum_i w_i * alpha_i vanishes in F^m.
//! Since every nonzero syndrome s factors uniquely as lambda * delta with
//! delta a projective point, single-error decoding reads the error position
//! and value straight off the syndrome.
//!
//! Weight-3 codewords ("triples") are in bijection with pairs of a line of
//! the geometry, three of its points, and a nonzero scaling; they generate
//! the switching components used by the embedding construction.

use crate::error::{Error, Result};
use crate::geometry::{PointOrdering, ProjPoint};
use crate::gf::{El, FieldSpec};
use crate::linalg;
use crate::word::Word;

/// Default ceiling on materialized codeword enumerations.
pub const DEFAULT_ENUM_CAP: u64 = 2_000_000;

/// A weight-3 codeword of the Hamming code.
pub type Triple = Word;

#[derive(Debug, Clone)]
pub struct HammingCode {
    field: FieldSpec,
    ordering: PointOrdering,
}

/// Outcome of single-error decoding: the corrected codeword plus the error
/// location (as a projective point) and value when one was applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoding {
    pub codeword: Word,
    pub error_point: Option<ProjPoint>,
    pub error_value: Option<El>,
}

impl HammingCode {
    pub fn new(field: FieldSpec, m: usize) -> Result<HammingCode> {
        if m < 2 {
            return Err(Error::Precondition(
                "hamming code needs m >= 2 check symbols".into(),
            ));
        }
        let ordering = PointOrdering::enumerate(&field, m)?;
        Ok(HammingCode { field, ordering })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn ordering(&self) -> &PointOrdering {
        &self.ordering
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn m(&self) -> usize {
        self.ordering.m()
    }

    pub fn n(&self) -> usize {
        self.ordering.n()
    }

    /// sum_i w_i * alpha_i over the point columns, an element of F^m.
    pub fn syndrome(&self, w: &Word) -> Result<Word> {
        w.expect_shape(&self.field, self.n())?;
        Ok(self.syndrome_u(w))
    }

    pub(crate) fn syndrome_u(&self, w: &Word) -> Word {
        let f = &self.field;
        let mut s = Word::zero(f, self.m());
        for (i, &c) in w.symbols().iter().enumerate() {
            if c != 0 {
                s.add_scaled(f, c, self.ordering.point(i).coords());
            }
        }
        s
    }

    pub fn contains(&self, w: &Word) -> Result<bool> {
        Ok(self.syndrome(w)?.is_zero())
    }

    /// Corrects at most one symbol error: a nonzero syndrome s = lambda*delta
    /// means subtract lambda at the delta coordinate.
    pub fn decode(&self, w: &Word) -> Result<Decoding> {
        let s = self.syndrome(w)?;
        if s.is_zero() {
            return Ok(Decoding { codeword: w.clone(), error_point: None, error_value: None });
        }
        let f = &self.field;
        let lambda = s.symbols().iter().copied().find(|&x| x != 0).unwrap();
        let delta = ProjPoint::normalize(f, &s)?;
        let idx = self.ordering.index_of(&delta)?;
        let mut codeword = w.clone();
        codeword.set(idx, f.sub_u(codeword.get(idx), lambda));
        Ok(Decoding { codeword, error_point: Some(delta), error_value: Some(lambda) })
    }

    /// The word (alpha, 0^(n-m)): the m-tuple alpha laid over the basis
    /// coordinates. Its syndrome is alpha itself.
    pub fn extend(&self, alpha: &Word) -> Result<Word> {
        alpha.expect_shape(&self.field, self.m())?;
        let mut w = Word::zero(&self.field, self.n());
        for (i, &s) in alpha.symbols().iter().enumerate() {
            w.set(i, s);
        }
        Ok(w)
    }

    /// The unit word lambda * e^(delta), nonzero only at delta's coordinate.
    pub fn unit(&self, delta: &ProjPoint, lambda: El) -> Result<Word> {
        let idx = self.ordering.index_of(delta)?;
        self.field.check_element(lambda as u64)?;
        let mut w = Word::zero(&self.field, self.n());
        w.set(idx, lambda);
        Ok(w)
    }

    /// Canonical echelon basis of the code (the kernel of the check map),
    /// with n - m rows.
    pub fn kernel_basis(&self) -> Vec<Word> {
        let f = &self.field;
        let rows: Vec<Vec<El>> = (0..self.m())
            .map(|r| {
                (0..self.n())
                    .map(|i| self.ordering.point(i).symbols()[r])
                    .collect()
            })
            .collect();
        linalg::null_space(f, &rows, self.n())
            .into_iter()
            .map(|v| Word::from_symbols_unchecked(f.q(), v))
            .collect()
    }

    /// Materializes all q^(n-m) codewords in deterministic order. Errors when
    /// that count exceeds the cap.
    pub fn enumerate_codewords(&self, cap: u64) -> Result<Vec<Word>> {
        let basis = self.kernel_basis();
        enumerate_span_translated(&self.field, &basis, None, self.n(), cap)
    }

    /// All weight-3 codewords, generated line by line: for each line and each
    /// choice of 3 of its points there are q-1 codewords, the nonzero kernel
    /// vectors of the corresponding 3-column system.
    pub fn triples(&self) -> Result<Vec<Triple>> {
        let mut out = Vec::new();
        for line in self.ordering.all_lines(&self.field)? {
            let pts = line.point_indices();
            for a in 0..pts.len() {
                for b in a + 1..pts.len() {
                    for c in b + 1..pts.len() {
                        self.push_support_triples(&mut out, [pts[a], pts[b], pts[c]])?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// The triples through delta whose coefficient at delta is 1: each line
    /// through delta contributes one per pair of its other points.
    pub fn triples_through(&self, delta: &ProjPoint) -> Result<Vec<Triple>> {
        let di = self.ordering.index_of(delta)?;
        let mut out = Vec::new();
        for line in self.ordering.lines_through_point(&self.field, delta)? {
            let others: Vec<usize> = line
                .point_indices()
                .iter()
                .copied()
                .filter(|&i| i != di)
                .collect();
            for a in 0..others.len() {
                for b in a + 1..others.len() {
                    let mut found = Vec::new();
                    self.push_support_triples(&mut found, [di, others[a], others[b]])?;
                    // Exactly one scaling has coefficient 1 at delta.
                    let mut kept: Vec<Triple> = found
                        .into_iter()
                        .filter(|t| t.get(di) == 1)
                        .collect();
                    debug_assert_eq!(kept.len(), 1);
                    out.append(&mut kept);
                }
            }
        }
        Ok(out)
    }

    /// Appends the q-1 weight-3 codewords supported exactly on the three
    /// given (collinear) coordinates.
    fn push_support_triples(&self, out: &mut Vec<Triple>, support: [usize; 3]) -> Result<()> {
        let f = &self.field;
        let cols: Vec<Vec<El>> = support
            .iter()
            .map(|&i| self.ordering.point(i).symbols().to_vec())
            .collect();
        // Rows of the m x 3 system, one per check equation.
        let rows: Vec<Vec<El>> = (0..self.m())
            .map(|r| cols.iter().map(|c| c[r]).collect())
            .collect();
        let kernel = linalg::null_space(f, &rows, 3);
        if kernel.len() != 1 {
            return Err(Error::Precondition(format!(
                "support {support:?} is not a collinear coordinate triple"
            )));
        }
        let base = &kernel[0];
        debug_assert!(base.iter().all(|&x| x != 0));
        for lambda in 1..self.q() {
            let mut w = Word::zero(f, self.n());
            for (&i, &c) in support.iter().zip(base) {
                w.set(i, f.mul_u(lambda as El, c));
            }
            out.push(w);
        }
        Ok(())
    }
}

/// Enumerates {translation + sum of scaled basis rows} in odometer order over
/// the coefficients. With an independent basis the output is duplicate-free;
/// rows are emitted in a deterministic order fixed by the basis order.
pub(crate) fn enumerate_span_translated(
    f: &FieldSpec,
    basis: &[Word],
    translation: Option<&Word>,
    n: usize,
    cap: u64,
) -> Result<Vec<Word>> {
    let count = Word::space_size(f.q(), basis.len());
    match count {
        Some(c) if c <= cap => {}
        _ => {
            return Err(Error::CapExceeded {
                required: count.map_or(u128::MAX, u128::from),
                cap,
            })
        }
    }
    let start = match translation {
        Some(t) => t.clone(),
        None => Word::zero(f, n),
    };
    let mut out = Vec::with_capacity(count.unwrap() as usize);
    let mut stack = vec![start];
    for row in basis {
        let mut next = Vec::with_capacity(stack.len() * f.q() as usize);
        for w in &stack {
            for lambda in 0..f.q() {
                let mut v = w.clone();
                if lambda != 0 {
                    v.add_scaled(f, lambda as El, row);
                }
                next.push(v);
            }
        }
        stack = next;
    }
    out.append(&mut stack);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::create_field;
    use std::collections::HashSet;

    fn code(q: u64, m: usize) -> HammingCode {
        HammingCode::new(create_field(q).unwrap(), m).unwrap()
    }

    fn word(h: &HammingCode, symbols: &[El]) -> Word {
        Word::new(h.field(), symbols.to_vec()).unwrap()
    }

    #[test]
    fn syndrome_examples() {
        let h = code(3, 2);
        let w = word(&h, &[2, 2, 1, 0]);
        assert!(h.syndrome(&w).unwrap().is_zero());
        assert!(h.contains(&w).unwrap());

        let h2 = code(2, 3);
        // Coordinates (1,1,1), (1,0,0), (0,1,1) sum to zero.
        let mut w = Word::zero(h2.field(), 7);
        for p in [[1, 1, 1], [1, 0, 0], [0, 1, 1]] {
            let pt = ProjPoint::new(h2.field(), word(&h2, &p)).unwrap();
            let i = h2.ordering().index_of(&pt).unwrap();
            w.set(i, 1);
        }
        assert!(h2.contains(&w).unwrap());
    }

    #[test]
    fn syndrome_is_linear() {
        let h = code(4, 2);
        let f = h.field();
        for ra in 0..512u64 {
            let a = Word::from_rank(f, 5, ra * 2 + 1);
            let b = Word::from_rank(f, 5, (ra * 7 + 3) % 1024);
            let lhs = h.syndrome(&a.add(f, &b)).unwrap();
            let rhs = h.syndrome(&a).unwrap().add(f, &h.syndrome(&b).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn decode_corrects_single_errors() {
        for (q, m) in [(2u64, 3usize), (3, 2), (3, 3), (4, 2)] {
            let h = code(q, m);
            let f = h.field();
            let codewords = h.enumerate_codewords(DEFAULT_ENUM_CAP).unwrap();
            let step = (codewords.len() / 50).max(1);
            for c in codewords.iter().step_by(step) {
                let d = h.decode(c).unwrap();
                assert_eq!(&d.codeword, c);
                assert_eq!(d.error_point, None);
                for i in (0..h.n()).step_by(3.min(h.n())) {
                    for lambda in 1..q as El {
                        let mut corrupted = c.clone();
                        corrupted.set(i, f.add_u(corrupted.get(i), lambda));
                        let d = h.decode(&corrupted).unwrap();
                        assert_eq!(&d.codeword, c, "q={q} m={m}");
                        let pt = d.error_point.unwrap();
                        assert_eq!(h.ordering().index_of(&pt).unwrap(), i);
                        assert_eq!(d.error_value.unwrap(), lambda);
                    }
                }
            }
        }
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(code(2, 3).enumerate_codewords(1 << 20).unwrap().len(), 16);
        assert_eq!(code(3, 2).enumerate_codewords(1 << 20).unwrap().len(), 9);
        assert_eq!(code(2, 4).enumerate_codewords(1 << 20).unwrap().len(), 2048);
    }

    #[test]
    fn enumerate_respects_cap() {
        let h = code(2, 4);
        assert!(matches!(
            h.enumerate_codewords(100),
            Err(Error::CapExceeded { required: 2048, cap: 100 })
        ));
    }

    #[test]
    fn enumerated_words_are_distinct_codewords() {
        let h = code(3, 3);
        let all = h.enumerate_codewords(DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(all.len(), 3usize.pow(10));
        let distinct: HashSet<&Word> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        for w in all.iter().step_by(1000) {
            assert!(h.contains(w).unwrap());
        }
    }

    #[test]
    fn extend_and_unit_have_the_expected_syndromes() {
        let h = code(3, 3);
        let f = h.field();
        for r in 0..27 {
            let alpha = Word::from_rank(f, 3, r);
            let w = h.extend(&alpha).unwrap();
            assert_eq!(h.syndrome(&w).unwrap(), alpha);
        }
        for i in [0usize, 4, 12] {
            let delta = h.ordering().point(i).clone();
            for lambda in 1..3 {
                let e = h.unit(&delta, lambda).unwrap();
                let s = h.syndrome(&e).unwrap();
                assert_eq!(s, delta.coords().scaled(f, lambda));
            }
        }
    }

    #[test]
    fn triple_counts() {
        let h = code(2, 3);
        let t = h.triples().unwrap();
        assert_eq!(t.len(), 7);
        let delta = ProjPoint::new(h.field(), word(&h, &[1, 1, 1])).unwrap();
        assert_eq!(h.triples_through(&delta).unwrap().len(), 3);

        let h3 = code(3, 2);
        let t3 = h3.triples().unwrap();
        assert_eq!(t3.len(), 8);
        let delta = ProjPoint::new(h3.field(), word(&h3, &[1, 1])).unwrap();
        let through = h3.triples_through(&delta).unwrap();
        assert_eq!(through.len(), 3);
        // The triple supported on pi1, pi2, delta with coefficient 1 at delta.
        assert!(through.iter().any(|t| t.symbols() == &[2, 2, 1, 0]));
    }

    #[test]
    fn triples_are_weight3_codewords_on_lines() {
        for (q, m) in [(2u64, 4usize), (3, 3), (4, 2), (4, 3)] {
            let h = code(q, m);
            let triples = h.triples().unwrap();
            let lines = h.ordering().all_lines(h.field()).unwrap();
            let line_count = lines.len();
            let qi = q as usize;
            let per_line = qi.saturating_sub(1) * (qi + 1) * qi * (qi - 1) / 6;
            assert_eq!(triples.len(), line_count * per_line, "q={q} m={m}");
            let distinct: HashSet<&Word> = triples.iter().collect();
            assert_eq!(distinct.len(), triples.len());
            for t in &triples {
                assert_eq!(t.weight(), 3);
                assert!(h.contains(t).unwrap());
                let support = t.support();
                assert!(lines
                    .iter()
                    .any(|l| support.iter().all(|&i| l.contains_index(i))));
            }
        }
    }

    #[test]
    fn triples_through_have_unit_coefficient() {
        for (q, m) in [(2u64, 3usize), (3, 2), (3, 3), (4, 2)] {
            let h = code(q, m);
            let lines_per_point = ((q as usize).pow(m as u32 - 1) - 1) / (q as usize - 1);
            let per_point = lines_per_point * (q as usize) * (q as usize - 1) / 2;
            for di in 0..h.n() {
                let delta = h.ordering().point(di).clone();
                let through = h.triples_through(&delta).unwrap();
                assert_eq!(through.len(), per_point);
                for t in &through {
                    assert_eq!(t.get(di), 1);
                    assert_eq!(t.weight(), 3);
                    assert!(h.contains(t).unwrap());
                }
            }
        }
    }
}
