//! Points, lines and planes of the projective geometry PG(m-1, q).
//!
//! A point is the canonical representative of a 1-dimensional subspace of
//! F_q^m: the unique scalar multiple whose first nonzero coordinate is 1.
//! There are n = (q^m - 1)/(q - 1) points, and this n is exactly the length
//! of the Hamming code built on top of the geometry, with one codeword
//! coordinate per point.
//!
//! The coordinate order is fixed once and for all by [`PointOrdering`]: the
//! natural basis vectors come first (positions 0..m), the remaining points
//! follow in lexicographic order of their coordinate tuples. Everything
//! downstream (syndromes, component bases, enumeration order, file output)
//! inherits its determinism from this ordering.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::gf::{El, FieldSpec};
use crate::linalg;
use crate::word::Word;

/// A projective point: an m-tuple over GF(q) whose first nonzero symbol is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: Word,
}

impl ProjPoint {
    /// Scales a nonzero vector so its first nonzero coordinate becomes 1.
    pub fn normalize(f: &FieldSpec, v: &Word) -> Result<ProjPoint> {
        if v.q() != f.q() {
            return Err(Error::FieldMismatch { expected: f.q(), actual: v.q() });
        }
        let first = v
            .symbols()
            .iter()
            .position(|&s| s != 0)
            .ok_or(Error::ZeroVector)?;
        let scale = f.inv_u(v.get(first));
        Ok(ProjPoint { coords: v.scaled(f, scale) })
    }

    /// Accepts coordinates that are already in canonical form.
    pub fn new(f: &FieldSpec, coords: Word) -> Result<ProjPoint> {
        let p = Self::normalize(f, &coords)?;
        if p.coords != coords {
            return Err(Error::Precondition(format!(
                "point ({coords}) is not normalized"
            )));
        }
        Ok(p)
    }

    /// The i-th natural basis vector of F^m, which is its own normal form.
    pub fn basis(f: &FieldSpec, m: usize, i: usize) -> ProjPoint {
        debug_assert!(i < m);
        let mut w = Word::zero(f, m);
        w.set(i, 1);
        ProjPoint { coords: w }
    }

    pub fn coords(&self) -> &Word {
        &self.coords
    }

    pub fn symbols(&self) -> &[El] {
        self.coords.symbols()
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Hamming distance between coordinate tuples.
    pub fn distance(&self, other: &ProjPoint) -> usize {
        self.coords.distance(&other.coords)
    }
}

impl std::fmt::Display for ProjPoint {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.symbols().iter().map(|s| s.to_string()).collect();
        write!(out, "{}", parts.join("."))
    }
}

/// A line: the q+1 points of a 2-dimensional subspace, stored as sorted
/// indices into a [`PointOrdering`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line {
    indices: Vec<usize>,
}

/// A plane: the q^2+q+1 points of a 3-dimensional subspace, same storage.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Plane {
    indices: Vec<usize>,
}

impl Line {
    pub fn point_indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }
}

impl Plane {
    pub fn point_indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }
}

/// All points of PG(m-1, q) in the crate's fixed coordinate order.
#[derive(Debug, Clone)]
pub struct PointOrdering {
    q: u32,
    m: usize,
    points: Vec<ProjPoint>,
    index: HashMap<Word, usize>,
}

impl PointOrdering {
    /// Enumerates the geometry. Positions 0..m hold the natural basis in
    /// order; the remaining points follow lexicographically.
    pub fn enumerate(f: &FieldSpec, m: usize) -> Result<PointOrdering> {
        if m < 1 {
            return Err(Error::Precondition("m must be at least 1".into()));
        }
        let q = f.q();
        let mut points: Vec<ProjPoint> = (0..m).map(|i| ProjPoint::basis(f, m, i)).collect();
        let mut rest = Vec::new();
        // Canonical forms: for each leading position, a 1 there and anything
        // after it. Basis points are exactly those with all-zero tails.
        for lead in 0..m {
            let tail_len = m - lead - 1;
            let tail_count = Word::space_size(q, tail_len).expect("tiny space");
            for t in 0..tail_count {
                if t == 0 {
                    continue;
                }
                let mut w = Word::zero(f, m);
                w.set(lead, 1);
                let tail = Word::from_rank(f, tail_len, t);
                for (k, &s) in tail.symbols().iter().enumerate() {
                    w.set(lead + 1 + k, s);
                }
                rest.push(ProjPoint { coords: w });
            }
        }
        rest.sort();
        points.extend(rest);
        let index = points
            .iter()
            .enumerate()
            .map(|(i, p)| (p.coords.clone(), i))
            .collect();
        Ok(PointOrdering { q, m, points, index })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of points, n = (q^m - 1)/(q - 1).
    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &ProjPoint {
        &self.points[i]
    }

    pub fn index_of(&self, p: &ProjPoint) -> Result<usize> {
        self.index.get(p.coords()).copied().ok_or(Error::UnknownPoint)
    }

    /// The unique line through two distinct points: all normalized
    /// combinations a*p1 + b*p2.
    pub fn line_through(&self, f: &FieldSpec, p1: &ProjPoint, p2: &ProjPoint) -> Result<Line> {
        if p1 == p2 {
            return Err(Error::EqualPoints);
        }
        let (i1, i2) = (self.index_of(p1)?, self.index_of(p2)?);
        let mut indices = vec![i1, i2];
        // Distinct points of the line beyond p1, p2: p1 + b*p2 for b != 0.
        for b in 1..self.q {
            let mut v = p1.coords().clone();
            v.add_scaled(f, b as El, p2.coords());
            let p = ProjPoint::normalize(f, &v)?;
            indices.push(self.index_of(&p)?);
        }
        indices.sort_unstable();
        indices.dedup();
        debug_assert_eq!(indices.len(), self.q as usize + 1);
        Ok(Line { indices })
    }

    /// The unique plane through three linearly independent points.
    pub fn plane_through(
        &self,
        f: &FieldSpec,
        p1: &ProjPoint,
        p2: &ProjPoint,
        p3: &ProjPoint,
    ) -> Result<Plane> {
        if p1 == p2 || p1 == p3 || p2 == p3 {
            return Err(Error::EqualPoints);
        }
        for p in [p1, p2, p3] {
            self.index_of(p)?;
        }
        let rows: Vec<Vec<El>> = [p1, p2, p3]
            .iter()
            .map(|p| p.symbols().to_vec())
            .collect();
        if linalg::rank(f, &rows) != 3 {
            return Err(Error::DependentPoints);
        }
        let mut indices = Vec::with_capacity((self.q * self.q + self.q + 1) as usize);
        for a in 0..self.q {
            for b in 0..self.q {
                for c in 0..self.q {
                    if a == 0 && b == 0 && c == 0 {
                        continue;
                    }
                    let mut v = p1.coords().scaled(f, a as El);
                    v.add_scaled(f, b as El, p2.coords());
                    v.add_scaled(f, c as El, p3.coords());
                    let p = ProjPoint::normalize(f, &v)?;
                    indices.push(self.index_of(&p)?);
                }
            }
        }
        indices.sort_unstable();
        indices.dedup();
        debug_assert_eq!(indices.len(), (self.q * self.q + self.q + 1) as usize);
        Ok(Plane { indices })
    }

    /// Every line through p, deduplicated; there are (q^(m-1)-1)/(q-1).
    pub fn lines_through_point(&self, f: &FieldSpec, p: &ProjPoint) -> Result<Vec<Line>> {
        let pi = self.index_of(p)?;
        let mut seen = vec![false; self.n()];
        seen[pi] = true;
        let mut lines = Vec::new();
        for i in 0..self.n() {
            if seen[i] {
                continue;
            }
            let line = self.line_through(f, p, &self.points[i])?;
            for &j in line.point_indices() {
                seen[j] = true;
            }
            lines.push(line);
        }
        Ok(lines)
    }

    /// All distinct lines of the geometry.
    pub fn all_lines(&self, f: &FieldSpec) -> Result<Vec<Line>> {
        let mut lines = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for i in 0..self.n() {
            for line in self.lines_through_point(f, &self.points[i])? {
                // Emit each line at its smallest point index.
                if line.point_indices()[0] == i && seen.insert(line.indices.clone()) {
                    lines.push(line);
                }
            }
        }
        Ok(lines)
    }

    /// All distinct planes containing both given points (empty when m < 3).
    pub fn planes_through_pair(
        &self,
        f: &FieldSpec,
        p1: &ProjPoint,
        p2: &ProjPoint,
    ) -> Result<Vec<Plane>> {
        if p1 == p2 {
            return Err(Error::EqualPoints);
        }
        if self.m < 3 {
            return Ok(Vec::new());
        }
        let line = self.line_through(f, p1, p2)?;
        let mut planes = Vec::new();
        let mut covered = vec![false; self.n()];
        for &i in line.point_indices() {
            covered[i] = true;
        }
        // Planes through a line partition the off-line points.
        for i in 0..self.n() {
            if covered[i] {
                continue;
            }
            let plane = self.plane_through(f, p1, p2, &self.points[i])?;
            for &j in plane.point_indices() {
                covered[j] = true;
            }
            planes.push(plane);
        }
        Ok(planes)
    }

    /// All distinct planes of the geometry.
    pub fn all_planes(&self, f: &FieldSpec) -> Result<Vec<Plane>> {
        let mut planes = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                for plane in self.planes_through_pair(f, &self.points[i], &self.points[j])? {
                    if seen.insert(plane.indices.clone()) {
                        planes.push(plane);
                    }
                }
            }
        }
        Ok(planes)
    }
}
