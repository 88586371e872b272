//! Exact arithmetic in the finite field GF(q).
//!
//! The field order is a runtime value: any prime q <= 65536 is accepted, and
//! six prime powers (4, 8, 9, 16, 25, 27) are supported through fixed
//! irreducible polynomials so that element encodings are stable across runs.
//! An element of GF(p^k) with polynomial representation c_0 + c_1 x + ... +
//! c_{k-1} x^{k-1} is encoded as the integer c_0 + c_1 p + ... + c_{k-1}
//! p^{k-1}; prime-field elements are plain residues. All public entry points
//! range-check their arguments.
//!
//! For small orders every binary operation is a table lookup; the tables are
//! built once at construction and, in builds with debug assertions, checked
//! against the field axioms on the spot.

use crate::error::{Error, Result};

/// A field element, always in `0..q`.
pub type El = u16;

/// Largest prime order accepted.
pub const MAX_PRIME_ORDER: u64 = 65536;

/// Orders at or below this get full add/mul lookup tables.
const TABLE_LIMIT: u32 = 256;

/// The supported extension fields with their fixed irreducible polynomials
/// (coefficients low degree first, including the leading 1).
const EXTENSION_FIELDS: &[(u32, u32, u32, &[El])] = &[
    (4, 2, 2, &[1, 1, 1]),
    (8, 2, 3, &[1, 1, 0, 1]),
    (9, 3, 2, &[2, 2, 1]),
    (16, 2, 4, &[1, 1, 0, 0, 1]),
    (25, 5, 2, &[2, 4, 1]),
    (27, 3, 3, &[1, 2, 0, 1]),
];

/// Runtime description of GF(q): order, characteristic, and operation tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    q: u32,
    p: u32,
    k: u32,
    irreducible: Option<Vec<El>>,
    add_t: Option<Vec<El>>,
    mul_t: Option<Vec<El>>,
    neg_t: Vec<El>,
    inv_t: Vec<El>,
}

/// Builds GF(q). Errors unless q is a prime <= 65536 or one of the supported
/// prime powers.
pub fn create_field(q: u64) -> Result<FieldSpec> {
    FieldSpec::new(q)
}

impl FieldSpec {
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 || q > MAX_PRIME_ORDER {
            return Err(Error::UnsupportedOrder { q });
        }
        let q32 = q as u32;
        let spec = if is_prime(q32) {
            Self::prime_field(q32)
        } else if let Some(&(_, p, k, poly)) = EXTENSION_FIELDS.iter().find(|e| e.0 == q32) {
            Self::extension_field(q32, p, k, poly)
        } else {
            return Err(Error::UnsupportedOrder { q });
        };
        #[cfg(debug_assertions)]
        if spec.q <= 27 {
            spec.verify_axioms().expect("field construction broke an axiom");
        }
        Ok(spec)
    }

    fn prime_field(q: u32) -> Self {
        let mut inv_t = vec![0 as El; q as usize];
        if q > 1 {
            inv_t[1] = 1;
            // inv[i] = -(q/i) * inv[q mod i], the standard O(q) recurrence.
            for i in 2..q as u64 {
                let qi = q as u64;
                inv_t[i as usize] = ((qi - qi / i) * inv_t[(qi % i) as usize] as u64 % qi) as El;
            }
        }
        let neg_t = (0..q).map(|a| ((q - a) % q) as El).collect();
        let (add_t, mul_t) = if q <= TABLE_LIMIT {
            let qi = q as u64;
            let add = (0..qi * qi)
                .map(|i| ((i / qi + i % qi) % qi) as El)
                .collect();
            let mul = (0..qi * qi)
                .map(|i| ((i / qi) * (i % qi) % qi) as El)
                .collect();
            (Some(add), Some(mul))
        } else {
            (None, None)
        };
        FieldSpec { q, p: q, k: 1, irreducible: None, add_t, mul_t, neg_t, inv_t }
    }

    fn extension_field(q: u32, p: u32, k: u32, poly: &[El]) -> Self {
        let qi = q as usize;
        let to_poly = |a: u32| -> Vec<u32> {
            let mut digits = Vec::with_capacity(k as usize);
            let mut rest = a;
            for _ in 0..k {
                digits.push(rest % p);
                rest /= p;
            }
            digits
        };
        let from_poly = |digits: &[u32]| -> El {
            digits.iter().rev().fold(0u32, |acc, &d| acc * p + d) as El
        };

        let mut add_t = vec![0 as El; qi * qi];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (to_poly(a), to_poly(b));
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add_t[(a * q + b) as usize] = from_poly(&sum);
            }
        }

        // Polynomial product followed by reduction mod the irreducible.
        let mut mul_t = vec![0 as El; qi * qi];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (to_poly(a), to_poly(b));
                let deg = 2 * (k as usize - 1);
                let mut prod = vec![0u32; deg + 1];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for d in (k as usize..=deg).rev() {
                    let c = prod[d];
                    if c != 0 {
                        prod[d] = 0;
                        // x^k = -(poly - x^k), subtract c * x^(d-k) * lower part.
                        for (i, &pc) in poly[..k as usize].iter().enumerate() {
                            let idx = d - k as usize + i;
                            prod[idx] = (prod[idx] + c * (p - pc as u32 % p) % p) % p;
                        }
                    }
                }
                mul_t[(a * q + b) as usize] = from_poly(&prod[..k as usize]);
            }
        }

        let neg_t = (0..q)
            .map(|a| {
                let neg: Vec<u32> = to_poly(a).iter().map(|&d| (p - d) % p).collect();
                from_poly(&neg)
            })
            .collect();

        let mut inv_t = vec![0 as El; qi];
        for a in 1..q {
            for b in 1..q {
                if mul_t[(a * q + b) as usize] == 1 {
                    inv_t[a as usize] = b as El;
                    break;
                }
            }
        }

        FieldSpec {
            q,
            p,
            k,
            irreducible: Some(poly.to_vec()),
            add_t: Some(add_t),
            mul_t: Some(mul_t),
            neg_t,
            inv_t,
        }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// The fixed irreducible polynomial, low degree first; `None` for primes.
    pub fn irreducible(&self) -> Option<&[El]> {
        self.irreducible.as_deref()
    }

    pub fn check_element(&self, a: u64) -> Result<El> {
        if a < self.q as u64 {
            Ok(a as El)
        } else {
            Err(Error::ElementOutOfRange { value: a, q: self.q })
        }
    }

    fn checked(&self, a: El) -> Result<El> {
        self.check_element(a as u64)
    }

    pub fn add(&self, a: El, b: El) -> Result<El> {
        Ok(self.add_u(self.checked(a)?, self.checked(b)?))
    }

    pub fn sub(&self, a: El, b: El) -> Result<El> {
        Ok(self.sub_u(self.checked(a)?, self.checked(b)?))
    }

    pub fn neg(&self, a: El) -> Result<El> {
        Ok(self.neg_u(self.checked(a)?))
    }

    pub fn mul(&self, a: El, b: El) -> Result<El> {
        Ok(self.mul_u(self.checked(a)?, self.checked(b)?))
    }

    pub fn inv(&self, a: El) -> Result<El> {
        let a = self.checked(a)?;
        if a == 0 {
            return Err(Error::DivisionByZero { q: self.q });
        }
        Ok(self.inv_t[a as usize])
    }

    pub fn div(&self, a: El, b: El) -> Result<El> {
        Ok(self.mul_u(self.checked(a)?, self.inv(b)?))
    }

    #[inline]
    pub(crate) fn add_u(&self, a: El, b: El) -> El {
        debug_assert!((a as u32) < self.q && (b as u32) < self.q);
        match &self.add_t {
            Some(t) => t[a as usize * self.q as usize + b as usize],
            None => ((a as u32 + b as u32) % self.q) as El,
        }
    }

    #[inline]
    pub(crate) fn sub_u(&self, a: El, b: El) -> El {
        self.add_u(a, self.neg_u(b))
    }

    #[inline]
    pub(crate) fn neg_u(&self, a: El) -> El {
        debug_assert!((a as u32) < self.q);
        self.neg_t[a as usize]
    }

    #[inline]
    pub(crate) fn mul_u(&self, a: El, b: El) -> El {
        debug_assert!((a as u32) < self.q && (b as u32) < self.q);
        match &self.mul_t {
            Some(t) => t[a as usize * self.q as usize + b as usize],
            None => (a as u64 * b as u64 % self.q as u64) as El,
        }
    }

    #[inline]
    pub(crate) fn inv_u(&self, a: El) -> El {
        debug_assert!(a != 0 && (a as u32) < self.q);
        self.inv_t[a as usize]
    }

    /// All elements of the field in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = El> + '_ {
        (0..self.q).map(|a| a as El)
    }

    /// Checks the field axioms over the operation tables: commutativity,
    /// associativity, identities, inverses, distributivity, absence of zero
    /// divisors, and (for q <= 27) that the multiplicative group is cyclic of
    /// order q-1. Exhaustive for q <= 27; larger primes get exhaustive unary
    /// checks and a fixed grid of triples.
    pub fn verify_axioms(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Precondition(msg));
        let q = self.q;
        for a in 0..q as u64 {
            let a = a as El;
            if self.add_u(a, 0) != a || self.mul_u(a, 1) != a {
                return fail(format!("identity failed at {a}"));
            }
            if self.add_u(a, self.neg_u(a)) != 0 {
                return fail(format!("additive inverse failed at {a}"));
            }
            if a != 0 {
                if self.mul_u(a, 0) != 0 {
                    return fail(format!("absorption failed at {a}"));
                }
                let b = self.inv_t[a as usize];
                if b == 0 || self.mul_u(a, b) != 1 {
                    return fail(format!("multiplicative inverse failed at {a}"));
                }
            }
        }
        let step = if q <= 27 { 1 } else { (q / 25).max(1) };
        let sample: Vec<El> = (0..q).step_by(step as usize).map(|a| a as El).collect();
        for &a in &sample {
            for &b in &sample {
                if self.add_u(a, b) != self.add_u(b, a) || self.mul_u(a, b) != self.mul_u(b, a) {
                    return fail(format!("commutativity failed at ({a},{b})"));
                }
                if a != 0 && b != 0 && self.mul_u(a, b) == 0 {
                    return fail(format!("zero divisors at ({a},{b})"));
                }
                for &c in &sample {
                    if self.add_u(self.add_u(a, b), c) != self.add_u(a, self.add_u(b, c)) {
                        return fail(format!("add associativity failed at ({a},{b},{c})"));
                    }
                    if self.mul_u(self.mul_u(a, b), c) != self.mul_u(a, self.mul_u(b, c)) {
                        return fail(format!("mul associativity failed at ({a},{b},{c})"));
                    }
                    if self.mul_u(a, self.add_u(b, c))
                        != self.add_u(self.mul_u(a, b), self.mul_u(a, c))
                    {
                        return fail(format!("distributivity failed at ({a},{b},{c})"));
                    }
                }
            }
        }
        if q <= 27 {
            let mut max_order = 0u32;
            for a in 1..q as u64 {
                let a = a as El;
                let mut pow = a;
                let mut ord = 1;
                while pow != 1 {
                    pow = self.mul_u(pow, a);
                    ord += 1;
                    if ord > q {
                        return fail(format!("element {a} generates no finite order"));
                    }
                }
                max_order = max_order.max(ord);
            }
            if max_order != q - 1 {
                return fail(format!(
                    "multiplicative group is not cyclic: max order {max_order} != {}",
                    q - 1
                ));
            }
        }
        Ok(())
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
