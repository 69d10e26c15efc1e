//! Finite fields built as chains of simple extensions, and the two-level
//! tower `F_p ⊂ F_q ⊂ F_Q` that every other module works over.
//!
//! Elements are stored as packed integers. A field `K = P[z]/(M)` over a
//! parent `P` encodes `c_0 + c_1 z + ... + c_{k-1} z^{k-1}` as
//! `Σ c_i · |P|^i`, so the parent's elements are exactly the packed values
//! below `|P|` and every prime-subfield element `a` is the integer `a`.
//! Since `|P|` is a power of `p`, the base-`p` digits of a packed value are
//! its absolute coordinates over `F_p`, which makes addition digit-wise at
//! every level.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{PolyRing, UniPoly};

/// Default cap on the size of the top field of a tower.
pub const DEFAULT_DESK_CAP: u64 = 1 << 20;

/// Environment variable that overrides the desk-scale caps.
pub const CAP_ENV: &str = "FNC_FORGE_CAP";

// Largest relative degree a single extension step may have.
const MAX_REL: usize = 64;

/// A field element as its packed-integer encoding.
#[derive(
    Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Elem(pub u64);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite field, either prime or a simple extension of another `GaloisField`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisField {
    p: u64,
    order: u64,
    abs_degree: u32,
    parent: Option<Arc<GaloisField>>,
    /// Monic modulus over the parent, low-to-high; empty for a prime field.
    modulus: Vec<Elem>,
    rel_degree: usize,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in ascending order (trial division).
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Reads the desk cap from `FNC_FORGE_CAP`, falling back to `default`.
pub fn desk_cap(default: u64) -> u64 {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<u64>().ok())
        .unwrap_or(default)
}

impl GaloisField {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<GaloisField> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(Error::TooLarge {
                what: "characteristic",
                size: p as u128,
                cap: 1 << 31,
            });
        }
        Ok(GaloisField {
            p,
            order: p,
            abs_degree: 1,
            parent: None,
            modulus: Vec::new(),
            rel_degree: 1,
        })
    }

    /// Extension of degree `degree` over `self` using the monic irreducible
    /// whose packed encoding is smallest.
    pub fn extension(&self, degree: usize) -> Result<GaloisField> {
        let modulus = minimal_irreducible(self, degree)?;
        self.extension_with_modulus(modulus)
    }

    /// Extension over `self` by an explicit monic modulus; irreducibility is checked.
    pub fn extension_with_modulus(&self, modulus: UniPoly) -> Result<GaloisField> {
        let degree = modulus
            .degree()
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::PreconditionFailed("modulus must have degree >= 1".into()))?;
        if degree > MAX_REL {
            return Err(Error::TooLarge {
                what: "relative degree",
                size: degree as u128,
                cap: MAX_REL as u128,
            });
        }
        if modulus.lc() != Elem::ONE {
            return Err(Error::PreconditionFailed("modulus must be monic".into()));
        }
        let order = checked_pow(self.order, degree as u32).filter(|&o| o < 1 << 63).ok_or(
            Error::TooLarge {
                what: "field order",
                size: (self.order as u128).saturating_pow(degree as u32),
                cap: 1 << 63,
            },
        )?;
        if !PolyRing::new(self).is_irreducible(&modulus) {
            return Err(Error::PreconditionFailed("modulus is reducible".into()));
        }
        Ok(GaloisField {
            p: self.p,
            order,
            abs_degree: self.abs_degree * degree as u32,
            parent: Some(Arc::new(self.clone())),
            modulus: modulus.coeffs().to_vec(),
            rel_degree: degree,
        })
    }

    #[inline]
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Number of elements.
    #[inline]
    pub fn order(&self) -> u64 {
        self.order
    }

    /// `e` with `order = p^e`.
    #[inline]
    pub fn abs_degree(&self) -> u32 {
        self.abs_degree
    }

    /// Degree over the parent (1 for a prime field).
    #[inline]
    pub fn rel_degree(&self) -> usize {
        self.rel_degree
    }

    pub fn parent(&self) -> Option<&GaloisField> {
        self.parent.as_deref()
    }

    /// Order of the parent, or `p` for a prime field.
    pub fn parent_order(&self) -> u64 {
        self.parent.as_ref().map_or(self.p, |p| p.order)
    }

    pub fn modulus(&self) -> UniPoly {
        UniPoly::from_coeffs(self.modulus.clone())
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (1..self.order).map(Elem)
    }

    #[inline]
    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.order
    }

    pub fn check(&self, a: Elem) -> Result<Elem> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::OutOfRange(a.0))
        }
    }

    /// The image of the integer `n` in the prime subfield.
    pub fn scalar(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.p as i64) as u64)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if self.abs_degree == 1 {
            let s = a.0 + b.0;
            return Elem(if s >= self.p { s - self.p } else { s });
        }
        let p = self.p;
        let (mut x, mut y) = (a.0, b.0);
        let (mut out, mut place) = (0u64, 1u64);
        while x != 0 || y != 0 {
            let d = x % p + y % p;
            out += if d >= p { d - p } else { d } * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        Elem(out)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        if self.abs_degree == 1 {
            return Elem(if a.0 == 0 { 0 } else { self.p - a.0 });
        }
        let p = self.p;
        let mut x = a.0;
        let (mut out, mut place) = (0u64, 1u64);
        while x != 0 {
            let d = x % p;
            out += if d == 0 { 0 } else { p - d } * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        Elem(out)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let parent = match &self.parent {
            None => return Elem(a.0 * b.0 % self.p),
            Some(parent) => parent,
        };
        let k = self.rel_degree;
        if k == 1 {
            // modulus x + c: elements are parent elements
            return parent.mul(a, b);
        }
        let po = parent.order;
        let mut ac = [Elem::ZERO; MAX_REL];
        let mut bc = [Elem::ZERO; MAX_REL];
        decode_into(a.0, po, &mut ac[..k]);
        decode_into(b.0, po, &mut bc[..k]);
        let mut prod = [Elem::ZERO; 2 * MAX_REL];
        for i in 0..k {
            if ac[i].is_zero() {
                continue;
            }
            for j in 0..k {
                if bc[j].is_zero() {
                    continue;
                }
                prod[i + j] = parent.add(prod[i + j], parent.mul(ac[i], bc[j]));
            }
        }
        for i in (k..2 * k - 1).rev() {
            let c = prod[i];
            if c.is_zero() {
                continue;
            }
            prod[i] = Elem::ZERO;
            for j in 0..k {
                if !self.modulus[j].is_zero() {
                    prod[i - k + j] = parent.sub(prod[i - k + j], parent.mul(c, self.modulus[j]));
                }
            }
        }
        Elem(encode(&prod[..k], po))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.order - 2))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^p`.
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.p)
    }

    /// The unique `b` with `b^p = a`.
    pub fn pth_root(&self, a: Elem) -> Elem {
        // inverse Frobenius is a ↦ a^(p^(e-1))
        let mut b = a;
        for _ in 1..self.abs_degree {
            b = self.frobenius(b);
        }
        b
    }

    /// Coordinates over the parent (length `rel_degree`).
    pub fn coords(&self, a: Elem) -> Vec<Elem> {
        let mut out = vec![Elem::ZERO; self.rel_degree];
        if self.parent.is_none() {
            out[0] = a;
        } else {
            decode_into(a.0, self.parent_order(), &mut out);
        }
        out
    }

    pub fn from_coords(&self, coords: &[Elem]) -> Result<Elem> {
        if coords.len() != self.rel_degree {
            return Err(Error::PreconditionFailed(format!(
                "expected {} coordinates, got {}",
                self.rel_degree,
                coords.len()
            )));
        }
        let po = self.parent_order();
        if coords.iter().any(|c| c.0 >= po) {
            return Err(Error::OutOfRange(coords.iter().map(|c| c.0).max().unwrap_or(0)));
        }
        Ok(Elem(encode(coords, po)))
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Elem) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut ord = self.order - 1;
        for r in prime_factors(self.order - 1) {
            while ord % r == 0 && self.pow(a, ord / r) == Elem::ONE {
                ord /= r;
            }
        }
        Ok(ord)
    }

    /// Smallest packed element generating the multiplicative group.
    pub fn generator(&self) -> Result<Elem> {
        if self.order > 1 << 40 {
            return Err(Error::TooLarge {
                what: "generator search",
                size: self.order as u128,
                cap: 1 << 40,
            });
        }
        if self.order == 2 {
            return Ok(Elem::ONE);
        }
        let factors = prime_factors(self.order - 1);
        self.nonzero_elements()
            .find(|&a| factors.iter().all(|&r| self.pow(a, (self.order - 1) / r) != Elem::ONE))
            .ok_or(Error::PreconditionFailed("no generator found".into()))
    }
}

fn decode_into(mut a: u64, base: u64, out: &mut [Elem]) {
    for c in out.iter_mut() {
        *c = Elem(a % base);
        a /= base;
    }
}

fn encode(coords: &[Elem], base: u64) -> u64 {
    coords.iter().rev().fold(0u64, |acc, c| acc * base + c.0)
}

pub(crate) fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc = 1u64;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Monic irreducible of the given degree over `field` with the smallest
/// packed encoding (lower coefficients read as base-`|field|` digits, low first).
pub fn minimal_irreducible(field: &GaloisField, degree: usize) -> Result<UniPoly> {
    if degree == 0 {
        return Err(Error::PreconditionFailed("degree must be positive".into()));
    }
    let ring = PolyRing::new(field);
    let q = field.order();
    let mut digits = vec![Elem::ZERO; degree];
    loop {
        let mut coeffs = digits.clone();
        coeffs.push(Elem::ONE);
        let cand = UniPoly::from_coeffs(coeffs);
        let has_root = degree > 1 && (digits[0].is_zero() || ring.has_root_in_field(&cand));
        if !has_root && ring.is_irreducible(&cand) {
            return Ok(cand);
        }
        // increment the little-endian digit counter
        let mut i = 0;
        loop {
            if i == degree {
                return Err(Error::PreconditionFailed(format!(
                    "no irreducible polynomial of degree {degree}"
                )));
            }
            digits[i].0 += 1;
            if digits[i].0 < q {
                break;
            }
            digits[i] = Elem::ZERO;
            i += 1;
        }
    }
}

/// Which level of a [`FieldTower`] an element lives in.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Base,
    Top,
}

/// `F_p ⊂ F_q ⊂ F_Q` with `q = p^s` and `Q = q^k`; the top field is built over the base field.
#[derive(Clone, Debug)]
pub struct FieldTower {
    p: u64,
    s: u32,
    k: u32,
    prime: GaloisField,
    base: GaloisField,
    top: GaloisField,
}

/// Parsed form of the field spec strings `p`, `p^s` and `p^s:k`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub s: u32,
    pub k: u32,
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad field spec {text:?}; expected p^s or p^s:k"));
        let text = text.trim();
        let (head, k) = match text.split_once(':') {
            Some((h, k)) => (h, k.trim().parse::<u32>().map_err(|_| bad())?),
            None => (text, 1),
        };
        let (p, s) = match head.split_once('^') {
            Some((p, s)) => (
                p.trim().parse::<u64>().map_err(|_| bad())?,
                s.trim().parse::<u32>().map_err(|_| bad())?,
            ),
            None => (head.trim().parse::<u64>().map_err(|_| bad())?, 1),
        };
        if s == 0 || k == 0 {
            return Err(bad());
        }
        Ok(FieldSpec { p, s, k })
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}:{}", self.p, self.s, self.k)
    }
}

impl FieldTower {
    /// Builds the tower with the default desk cap (overridable through `FNC_FORGE_CAP`).
    pub fn build(p: u64, s: u32, k: u32) -> Result<FieldTower> {
        Self::build_with_cap(p, s, k, desk_cap(DEFAULT_DESK_CAP))
    }

    pub fn from_spec(spec: FieldSpec) -> Result<FieldTower> {
        Self::build(spec.p, spec.s, spec.k)
    }

    pub fn build_with_cap(p: u64, s: u32, k: u32, cap: u64) -> Result<FieldTower> {
        let prime = GaloisField::prime(p)?;
        if s == 0 || k == 0 {
            return Err(Error::PreconditionFailed("s and k must be positive".into()));
        }
        let size = (p as u128).checked_pow(s * k).unwrap_or(u128::MAX);
        if size > cap as u128 {
            return Err(Error::TooLarge { what: "p^(s*k)", size, cap: cap as u128 });
        }
        let base = prime.extension(s as usize)?;
        let top = base.extension(k as usize)?;
        Ok(FieldTower { p, s, k, prime, base, top })
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec { p: self.p, s: self.s, k: self.k }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `q = p^s`.
    pub fn q(&self) -> u64 {
        self.base.order()
    }

    /// `Q = q^k`.
    pub fn big_q(&self) -> u64 {
        self.top.order()
    }

    pub fn prime_field(&self) -> &GaloisField {
        &self.prime
    }

    pub fn base(&self) -> &GaloisField {
        &self.base
    }

    pub fn top(&self) -> &GaloisField {
        &self.top
    }

    pub fn level(&self, level: Level) -> &GaloisField {
        match level {
            Level::Base => &self.base,
            Level::Top => &self.top,
        }
    }

    pub fn base_modulus(&self) -> UniPoly {
        self.base.modulus()
    }

    pub fn top_modulus(&self) -> UniPoly {
        self.top.modulus()
    }

    /// `e^q` for a top-level element.
    pub fn frobenius_q(&self, e: Elem) -> Result<Elem> {
        self.top.check(e)?;
        Ok(self.top.pow(e, self.q()))
    }

    pub fn in_base_subfield(&self, e: Elem) -> Result<bool> {
        Ok(self.frobenius_q(e)? == e)
    }

    /// `(Σ e^{q^i}, Π e^{q^i})` over `i < k`.
    pub fn trace_norm_to_base(&self, e: Elem) -> Result<(Elem, Elem)> {
        self.top.check(e)?;
        let top = &self.top;
        let (mut tr, mut nm, mut conj) = (Elem::ZERO, Elem::ONE, e);
        for _ in 0..self.k {
            tr = top.add(tr, conj);
            nm = top.mul(nm, conj);
            conj = top.pow(conj, self.q());
        }
        Ok((tr, nm))
    }

    /// Number of top elements with trace `u` and norm `v`.
    pub fn fiber_count(&self, u: Elem, v: Elem) -> Result<u64> {
        self.base.check(u)?;
        self.base.check(v)?;
        let mut count = 0;
        for e in self.top.elements() {
            if self.trace_norm_to_base(e)? == (u, v) {
                count += 1;
            }
        }
        Ok(count)
    }

    /// The whole `(u, v)` table in one pass, indexed `[u][v]`.
    pub fn fiber_table(&self) -> Result<Vec<Vec<u64>>> {
        let q = self.q() as usize;
        let mut table = vec![vec![0u64; q]; q];
        for e in self.top.elements() {
            let (u, v) = self.trace_norm_to_base(e)?;
            table[u.0 as usize][v.0 as usize] += 1;
        }
        Ok(table)
    }
}

/// Parses an element literal: a packed integer, `g`, or `g^i` for the field's generator.
pub fn parse_elem(field: &GaloisField, text: &str) -> Result<Elem> {
    let text = text.trim();
    if let Some(rest) = text.strip_prefix('g') {
        let g = field.generator()?;
        let rest = rest.trim();
        if rest.is_empty() {
            return Ok(g);
        }
        let exp = rest
            .strip_prefix('^')
            .and_then(|e| e.trim().parse::<u64>().ok())
            .ok_or_else(|| Error::Parse(format!("bad element literal {text:?}")))?;
        return Ok(field.pow(g, exp));
    }
    let v = text
        .parse::<u64>()
        .map_err(|_| Error::Parse(format!("bad element literal {text:?}")))?;
    field.check(Elem(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> FieldTower {
        FieldTower::build(2, 1, 2).unwrap()
    }

    #[test]
    fn f4_modulus_and_omega_squared() {
        let t = f4();
        assert_eq!(t.top_modulus().coeffs(), &[Elem(1), Elem(1), Elem(1)]);
        // ω = 2, ω^2 = ω + 1 = 3
        assert_eq!(t.top().mul(Elem(2), Elem(2)), Elem(3));
    }

    #[test]
    fn degenerate_tower() {
        let t = FieldTower::build(3, 1, 1).unwrap();
        assert_eq!(t.q(), 3);
        assert_eq!(t.big_q(), 3);
        assert_eq!(t.top().mul(Elem(2), Elem(2)), Elem(1));
    }

    #[test]
    fn f125_base_modulus_is_x3_plus_x_plus_1() {
        let t = FieldTower::build(5, 3, 1).unwrap();
        assert_eq!(t.base_modulus().coeffs(), &[Elem(1), Elem(1), Elem(0), Elem(1)]);
    }

    #[test]
    fn errors() {
        assert_eq!(FieldTower::build(4, 1, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(FieldTower::build_with_cap(2, 5, 5, 1 << 20), Err(Error::TooLarge { .. })));
        assert_eq!(f4().top().inv(Elem::ZERO), Err(Error::DivisionByZero));
        assert_eq!(f4().frobenius_q(Elem(4)), Err(Error::OutOfRange(4)));
    }

    #[test]
    fn frobenius_examples() {
        let t = f4();
        assert_eq!(t.frobenius_q(Elem(2)).unwrap(), Elem(3));
        assert!(!t.in_base_subfield(Elem(2)).unwrap());
        assert!(t.in_base_subfield(Elem(0)).unwrap());
        let t = FieldTower::build(2, 1, 3).unwrap();
        for e in t.top().elements() {
            let mut x = e;
            for _ in 0..3 {
                x = t.frobenius_q(x).unwrap();
            }
            assert_eq!(x, e);
        }
    }

    #[test]
    fn subfield_membership_is_packed_prefix() {
        let t = FieldTower::build(3, 1, 2).unwrap();
        let inside: Vec<_> = t.top().elements().filter(|&e| t.in_base_subfield(e).unwrap()).collect();
        assert_eq!(inside.len() as u64, t.q());
        assert!(inside.iter().all(|e| e.0 < t.q()));
    }

    #[test]
    fn trace_norm_examples() {
        let t = f4();
        assert_eq!(t.trace_norm_to_base(Elem::ZERO).unwrap(), (Elem::ZERO, Elem::ZERO));
        assert_eq!(t.trace_norm_to_base(Elem::ONE).unwrap(), (Elem::ZERO, Elem::ONE));
        assert_eq!(t.trace_norm_to_base(Elem(2)).unwrap().0, Elem::ONE);
        assert_eq!(t.fiber_count(Elem(1), Elem(1)).unwrap(), 2);
        let t3 = FieldTower::build(3, 1, 2).unwrap();
        assert_eq!(t3.trace_norm_to_base(Elem::ONE).unwrap(), (Elem(2), Elem::ONE));
    }

    #[test]
    fn spec_strings() {
        assert_eq!("2^1:3".parse::<FieldSpec>().unwrap(), FieldSpec { p: 2, s: 1, k: 3 });
        assert_eq!("5^3".parse::<FieldSpec>().unwrap(), FieldSpec { p: 5, s: 3, k: 1 });
        assert_eq!("7".parse::<FieldSpec>().unwrap(), FieldSpec { p: 7, s: 1, k: 1 });
        assert!("2^0".parse::<FieldSpec>().is_err());
        assert!("x".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn element_literals() {
        let t = FieldTower::build(3, 1, 2).unwrap();
        let top = t.top();
        let g = top.generator().unwrap();
        assert_eq!(top.element_order(g).unwrap(), 8);
        assert_eq!(parse_elem(top, "g^0").unwrap(), Elem::ONE);
        assert_eq!(parse_elem(top, "g^2").unwrap(), top.mul(g, g));
        assert_eq!(parse_elem(top, "5").unwrap(), Elem(5));
        assert!(parse_elem(top, "9").is_err());
    }

    #[test]
    fn rebuild_is_identical() {
        let a = FieldTower::build(3, 2, 2).unwrap();
        let b = FieldTower::build(3, 2, 2).unwrap();
        assert_eq!(a.top(), b.top());
    }
}
