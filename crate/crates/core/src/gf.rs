//! Arithmetic in GF(p^e).
//!
//! An element is stored as its encoded value: the polynomial
//! `c_0 + c_1 x + ... + c_{e-1} x^{e-1}` over GF(p) maps to `sum c_i p^i`.
//! Under this encoding 0 and 1 are the additive and multiplicative
//! identities. The [`FieldSpec`] travels alongside elements rather than
//! inside them.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Fields up to this order get full operation tables.
pub const TABLE_LIMIT: u32 = 256;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 20;

/// An element of GF(q) by its encoded value in `0..q`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// A finite field GF(p^e) with a fixed monic irreducible modulus.
///
/// Cloning is cheap: the operation tables are shared.
#[derive(Clone)]
pub struct FieldSpec {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<Arc<Tables>>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .finish()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, e)` with `q = p^e`.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrimePower(q));
    }
    Ok((p, e))
}

/// Builds GF(p^e). Without an explicit modulus the lexicographically least
/// monic irreducible of degree `e` is used, comparing `c_0` first.
pub fn field_make(p: u64, e: u32, modulus: Option<&[u32]>) -> Result<FieldSpec> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if e == 0 {
        return Err(Error::BadRange("extension degree must be at least 1"));
    }
    let q = p
        .checked_pow(e)
        .filter(|&q| q <= MAX_ORDER)
        .ok_or(Error::FieldTooLarge(p.saturating_pow(e)))?;
    let p = p as u32;
    let modulus = match modulus {
        Some(m) => {
            let degree = m.len().saturating_sub(1);
            if m.len() != e as usize + 1 || m[e as usize] != 1 {
                return Err(Error::DegreeMismatch {
                    expected: e as usize,
                    got: degree,
                });
            }
            if let Some(&bad) = m.iter().find(|&&c| c >= p) {
                return Err(Error::InvalidElement { value: bad, q: p });
            }
            if !is_irreducible(m, p) {
                return Err(Error::Reducible);
            }
            m.to_vec()
        }
        None => least_irreducible(p, e as usize),
    };
    let mut field = FieldSpec {
        p,
        e,
        q: q as u32,
        modulus,
        tables: None,
    };
    if field.q <= TABLE_LIMIT {
        field.tables = Some(Arc::new(field.build_tables()));
    }
    Ok(field)
}

/// GF(q) from its order alone, with the default modulus.
pub fn field_of_order(q: u64) -> Result<FieldSpec> {
    let (p, e) = prime_power(q)?;
    field_make(p, e, None)
}

impl FieldSpec {
    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.e
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients `[c_0, ..., c_e]`, low degree first; `c_e = 1`.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value < self.q {
            Ok(FieldElement(value))
        } else {
            Err(Error::InvalidElement { value, q: self.q })
        }
    }

    /// All `q` elements in increasing encoded order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.q).map(FieldElement)
    }

    /// The nonzero elements in increasing encoded order.
    pub fn units(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (1..self.q).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.tables {
            Some(t) => FieldElement(t.add[(a.0 * self.q + b.0) as usize] as u32),
            None => self.add_slow(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        match &self.tables {
            Some(t) => FieldElement(t.neg[a.0 as usize] as u32),
            None => self.neg_slow(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.tables {
            Some(t) => FieldElement(t.mul[(a.0 * self.q + b.0) as usize] as u32),
            None => self.mul_slow(a, b),
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.tables {
            Some(t) => FieldElement(t.inv[a.0 as usize] as u32),
            None => self.pow(a, u64::from(self.q) - 2),
        })
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, mut n: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    fn digits(&self, a: FieldElement) -> Vec<u32> {
        let mut v = a.0;
        (0..self.e)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    fn encode(&self, digits: &[u32]) -> FieldElement {
        FieldElement(digits.iter().rev().fold(0, |acc, &d| acc * self.p + d))
    }

    fn add_slow(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (x, y) = (self.digits(a), self.digits(b));
        let sum: Vec<u32> = x.iter().zip(&y).map(|(&s, &t)| (s + t) % self.p).collect();
        self.encode(&sum)
    }

    fn neg_slow(&self, a: FieldElement) -> FieldElement {
        let x: Vec<u32> = self
            .digits(a)
            .into_iter()
            .map(|d| (self.p - d) % self.p)
            .collect();
        self.encode(&x)
    }

    fn mul_slow(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = u64::from(self.p);
        let (x, y) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * self.e as usize];
        for (i, &s) in x.iter().enumerate() {
            for (j, &t) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u64::from(s) * u64::from(t)) % p;
            }
        }
        let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
        let mut r = poly_rem(&prod, &self.modulus, self.p);
        r.resize(self.e as usize, 0);
        self.encode(&r)
    }

    fn build_tables(&self) -> Tables {
        let q = self.q as usize;
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q {
            let fa = FieldElement(a as u32);
            neg[a] = self.neg_slow(fa).0 as u8;
            for b in 0..q {
                let fb = FieldElement(b as u32);
                add[a * q + b] = self.add_slow(fa, fb).0 as u8;
                let m = self.mul_slow(fa, fb).0 as u8;
                mul[a * q + b] = m;
                if m == 1 {
                    inv[a] = b as u8;
                }
            }
        }
        Tables { add, mul, neg, inv }
    }
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p).
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    let mut r: Vec<u32> = a.to_vec();
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let sub = (u64::from(lead) * u64::from(c) % u64::from(p)) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
    }
    r
}

/// Monic polynomials of `degree` over GF(p), lexicographic in `(c_0, ..., c_{d-1})`.
fn monic_polys(p: u32, degree: usize) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(degree as u32);
    (0..count).map(move |mut idx| {
        let mut poly = vec![0u32; degree + 1];
        for slot in poly[..degree].iter_mut().rev() {
            *slot = (idx % u64::from(p)) as u32;
            idx /= u64::from(p);
        }
        poly[degree] = 1;
        poly
    })
}

fn is_irreducible(m: &[u32], p: u32) -> bool {
    let e = m.len() - 1;
    if e <= 1 {
        return true;
    }
    (1..=e / 2).all(|d| monic_polys(p, d).all(|f| poly_rem(m, &f, p).iter().any(|&c| c != 0)))
}

fn least_irreducible(p: u32, e: usize) -> Vec<u32> {
    monic_polys(p, e)
        .find(|m| is_irreducible(m, p))
        .expect("irreducible polynomials exist in every degree")
}
