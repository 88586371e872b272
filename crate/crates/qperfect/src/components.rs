//! Switching components of the Hamming code.
//!
//! For a projective point delta, R_delta is the span of the weight-3
//! codewords whose coefficient at delta equals 1. Cosets of R_delta can be
//! cut out of the Hamming code and glued back shifted by a multiple of the
//! unit vector at delta without changing the neighborhood they cover; that
//! switch is what turns a Hamming code into other 1-perfect codes. The
//! functions here build component bases, decide coset disjointness
//! algebraically, and check the two summation identities that force every
//! member of R_delta to balance along lines and planes through delta.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::geometry::{Line, Plane, ProjPoint};
use crate::gf::{El, FieldSpec};
use crate::hamming::HammingCode;
use crate::word::Word;

/// Default memory cap for materialized neighborhoods.
pub const DEFAULT_NEIGHBORHOOD_CAP: u64 = 2_000_000;

/// A subspace of F^n in reduced row echelon form: pivot columns strictly
/// increase, each pivot entry is 1 and is the only nonzero entry in its
/// column. The reduced form is unique per subspace, so equal spans compare
/// equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    q: u32,
    n: usize,
    rows: Vec<Word>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn empty(f: &FieldSpec, n: usize) -> SubspaceBasis {
        SubspaceBasis { q: f.q(), n, rows: Vec::new(), pivots: Vec::new() }
    }

    /// Canonical basis of the span of the given words.
    pub fn from_spanning(f: &FieldSpec, n: usize, words: &[Word]) -> Result<SubspaceBasis> {
        let mut basis = SubspaceBasis::empty(f, n);
        for w in words {
            w.expect_shape(f, n)?;
            basis.insert(f, w.clone());
        }
        Ok(basis)
    }

    /// Row-reduces `w` against the basis and absorbs any nonzero remainder.
    fn insert(&mut self, f: &FieldSpec, mut w: Word) {
        self.reduce_in_place(f, &mut w);
        let Some(pivot) = w.symbols().iter().position(|&s| s != 0) else {
            return;
        };
        let scale = f.inv_u(w.get(pivot));
        let row = w.scaled(f, scale);
        // Clear the new pivot column from existing rows, keep order by pivot.
        for r in self.rows.iter_mut() {
            let c = r.get(pivot);
            if c != 0 {
                r.add_scaled(f, f.neg_u(c), &row);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, row);
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Word] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn reduce_in_place(&self, f: &FieldSpec, w: &mut Word) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w.get(p);
            if c != 0 {
                w.add_scaled(f, f.neg_u(c), row);
            }
        }
    }

    pub(crate) fn member_u(&self, f: &FieldSpec, w: &Word) -> bool {
        let mut copy = w.clone();
        self.reduce_in_place(f, &mut copy);
        copy.is_zero()
    }

    /// Subspace membership by reduction against the echelon rows.
    pub fn member(&self, f: &FieldSpec, w: &Word) -> Result<bool> {
        w.expect_shape(f, self.n)?;
        if f.q() != self.q {
            return Err(Error::FieldMismatch { expected: self.q, actual: f.q() });
        }
        Ok(self.member_u(f, w))
    }

    /// Canonical basis of the sum of two subspaces of the same space.
    pub fn join(&self, f: &FieldSpec, other: &SubspaceBasis) -> Result<SubspaceBasis> {
        if self.n != other.n || self.q != other.q {
            return Err(Error::LengthMismatch { expected: self.n, actual: other.n });
        }
        let mut joint = self.clone();
        for row in &other.rows {
            joint.insert(f, row.clone());
        }
        Ok(joint)
    }

    /// Every element of the subspace, in odometer order over the basis.
    pub fn enumerate(&self, f: &FieldSpec, cap: u64) -> Result<Vec<Word>> {
        crate::hamming::enumerate_span_translated(f, &self.rows, None, self.n, cap)
    }
}

/// A coset rep + subspace pair; w belongs iff w - rep is in the subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coset {
    pub basis: SubspaceBasis,
    pub rep: Word,
}

impl Coset {
    pub fn new(f: &FieldSpec, basis: SubspaceBasis, rep: Word) -> Result<Coset> {
        rep.expect_shape(f, basis.n())?;
        Ok(Coset { basis, rep })
    }

    pub fn member(&self, f: &FieldSpec, w: &Word) -> Result<bool> {
        w.expect_shape(f, self.basis.n())?;
        Ok(self.basis.member_u(f, &w.sub(f, &self.rep)))
    }
}

/// A linear map F^m -> F given by coefficients: l(alpha) = sum lambda_i
/// alpha_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFunctional {
    lambda: Word,
}

impl LinearFunctional {
    pub fn new(f: &FieldSpec, lambda: Word) -> Result<LinearFunctional> {
        if lambda.q() != f.q() {
            return Err(Error::FieldMismatch { expected: f.q(), actual: lambda.q() });
        }
        Ok(LinearFunctional { lambda })
    }

    pub fn coefficients(&self) -> &Word {
        &self.lambda
    }

    pub fn eval(&self, f: &FieldSpec, point: &ProjPoint) -> El {
        self.eval_coords(f, point.symbols())
    }

    pub fn eval_coords(&self, f: &FieldSpec, coords: &[El]) -> El {
        debug_assert_eq!(coords.len(), self.lambda.len());
        let mut acc = 0 as El;
        for (&l, &c) in self.lambda.symbols().iter().zip(coords) {
            acc = f.add_u(acc, f.mul_u(l, c));
        }
        acc
    }

    /// Basis of the functionals vanishing on all given points: the null space
    /// of the matrix whose rows are the points, so m - rank(points) entries.
    pub fn annihilator(f: &FieldSpec, m: usize, points: &[&ProjPoint]) -> Result<Vec<LinearFunctional>> {
        let mut rows = Vec::with_capacity(points.len());
        for p in points {
            if p.dim() != m {
                return Err(Error::LengthMismatch { expected: m, actual: p.dim() });
            }
            rows.push(p.symbols().to_vec());
        }
        Ok(crate::linalg::null_space(f, &rows, m)
            .into_iter()
            .map(|v| LinearFunctional { lambda: Word::from_symbols_unchecked(f.q(), v) })
            .collect())
    }
}

/// R_delta: the span of the weight-3 codewords with unit coefficient at
/// delta.
pub fn component_basis(h: &HammingCode, delta: &ProjPoint) -> Result<SubspaceBasis> {
    let triples = h.triples_through(delta)?;
    SubspaceBasis::from_spanning(h.field(), h.n(), &triples)
}

/// Canonical basis of R_delta + R_kappa.
pub fn joint_span(f: &FieldSpec, a: &SubspaceBasis, b: &SubspaceBasis) -> Result<SubspaceBasis> {
    a.join(f, b)
}

/// Decides whether R_delta + rep1 and R_kappa + rep2 are disjoint: they
/// intersect exactly when rep1 - rep2 falls in the joint span.
pub fn cosets_disjoint(
    h: &HammingCode,
    delta: &ProjPoint,
    rep1: &Word,
    kappa: &ProjPoint,
    rep2: &Word,
) -> Result<bool> {
    let f = h.field();
    rep1.expect_shape(f, h.n())?;
    rep2.expect_shape(f, h.n())?;
    let r_delta = component_basis(h, delta)?;
    let r_kappa = component_basis(h, kappa)?;
    let joint = joint_span(f, &r_delta, &r_kappa)?;
    Ok(!joint.member_u(f, &rep1.sub(f, rep2)))
}

/// For l vanishing at delta and a line through delta, members c of R_delta
/// satisfy sum over the line's coordinates of c_alpha * l(alpha) = 0.
/// Errors (rather than returning false) when the hypotheses do not hold.
pub fn check_line_relation(
    h: &HammingCode,
    delta: &ProjPoint,
    c: &Word,
    l: &LinearFunctional,
    line: &Line,
) -> Result<bool> {
    let f = h.field();
    c.expect_shape(f, h.n())?;
    if l.eval(f, delta) != 0 {
        return Err(Error::Precondition(
            "functional does not vanish at delta".into(),
        ));
    }
    let di = h.ordering().index_of(delta)?;
    if !line.contains_index(di) {
        return Err(Error::Precondition("line does not pass through delta".into()));
    }
    Ok(weighted_sum(h, c, l, line.point_indices()) == 0)
}

/// Plane counterpart: l vanishes at both delta and kappa, the plane contains
/// both, and members of the joint span balance over the plane's coordinates.
pub fn check_plane_relation(
    h: &HammingCode,
    delta: &ProjPoint,
    kappa: &ProjPoint,
    c: &Word,
    l: &LinearFunctional,
    plane: &Plane,
) -> Result<bool> {
    let f = h.field();
    c.expect_shape(f, h.n())?;
    if l.eval(f, delta) != 0 || l.eval(f, kappa) != 0 {
        return Err(Error::Precondition(
            "functional does not vanish at both points".into(),
        ));
    }
    let di = h.ordering().index_of(delta)?;
    let ki = h.ordering().index_of(kappa)?;
    if !plane.contains_index(di) || !plane.contains_index(ki) {
        return Err(Error::Precondition(
            "plane does not contain both points".into(),
        ));
    }
    Ok(weighted_sum(h, c, l, plane.point_indices()) == 0)
}

fn weighted_sum(h: &HammingCode, c: &Word, l: &LinearFunctional, indices: &[usize]) -> El {
    let f = h.field();
    let mut acc = 0 as El;
    for &i in indices {
        let ci = c.get(i);
        if ci != 0 {
            let li = l.eval(f, h.ordering().point(i));
            acc = f.add_u(acc, f.mul_u(ci, li));
        }
    }
    acc
}

/// The words at distance <= 1 from the given set (the set plus its boundary).
/// Errors when the result could exceed the cap.
pub fn neighborhood(f: &FieldSpec, n: usize, words: &[Word], cap: u64) -> Result<HashSet<Word>> {
    let ball = 1 + n as u128 * (f.q() as u128 - 1);
    if words.len() as u128 * ball > cap as u128 {
        return Err(Error::CapExceeded { required: words.len() as u128 * ball, cap });
    }
    let mut out = HashSet::new();
    for w in words {
        w.expect_shape(f, n)?;
        out.insert(w.clone());
        for i in 0..n {
            let orig = w.get(i);
            for v in 0..f.q() as El {
                if v != orig {
                    let mut nb = w.clone();
                    nb.set(i, v);
                    out.insert(nb);
                }
            }
        }
    }
    Ok(out)
}

/// Membership in the switched code (H \ R_delta) + (R_delta + mu*e^(delta)),
/// which is again 1-perfect. With mu = 0 this is the Hamming code itself.
pub fn switched_code_member(
    h: &HammingCode,
    delta: &ProjPoint,
    mu: El,
    w: &Word,
) -> Result<bool> {
    let basis = component_basis(h, delta)?;
    switched_member_with_basis(h, &basis, delta, mu, w)
}

/// Same decision with a caller-provided R_delta, for tight loops.
pub fn switched_member_with_basis(
    h: &HammingCode,
    basis: &SubspaceBasis,
    delta: &ProjPoint,
    mu: El,
    w: &Word,
) -> Result<bool> {
    let f = h.field();
    f.check_element(mu as u64)?;
    let s = h.syndrome(w)?;
    if mu == 0 {
        return Ok(s.is_zero());
    }
    if s.is_zero() {
        // Codewords survive unless they sat in the removed component.
        return Ok(!basis.member_u(f, w));
    }
    // The reinstated coset lives at syndrome mu * delta.
    if s != delta.coords().scaled(f, mu) {
        return Ok(false);
    }
    let shifted = w.sub(f, &h.unit(delta, mu)?);
    Ok(basis.member_u(f, &shifted))
}
