//! Dense univariate polynomials over a [`GaloisField`].
//!
//! A [`UniPoly`] is only a normalized coefficient vector; arithmetic goes
//! through a [`PolyRing`], which borrows the coefficient field.

mod parse;
mod roots;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, GaloisField};

pub use parse::{parse_bipoly, parse_elem_list, parse_unipoly};
pub use roots::{RootEntry, RootProfile, DEFAULT_ROOT_CAP};

const KARATSUBA_THRESHOLD: usize = 64;

/// Coefficients low-to-high with no trailing zeros; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Elem>", into = "Vec<Elem>")]
pub struct UniPoly(Vec<Elem>);

impl From<Vec<Elem>> for UniPoly {
    fn from(v: Vec<Elem>) -> Self {
        UniPoly::from_coeffs(v)
    }
}

impl From<UniPoly> for Vec<Elem> {
    fn from(p: UniPoly) -> Self {
        p.0
    }
}

impl UniPoly {
    pub fn zero() -> UniPoly {
        UniPoly(Vec::new())
    }

    pub fn one() -> UniPoly {
        UniPoly(vec![Elem::ONE])
    }

    pub fn x() -> UniPoly {
        UniPoly(vec![Elem::ZERO, Elem::ONE])
    }

    pub fn constant(c: Elem) -> UniPoly {
        UniPoly::from_coeffs(vec![c])
    }

    /// `c·x^e`.
    pub fn monomial(c: Elem, e: usize) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Elem::ZERO; e + 1];
        v[e] = c;
        UniPoly(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<Elem>) -> UniPoly {
        while coeffs.last() == Some(&Elem::ZERO) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn from_u64s(coeffs: &[u64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| Elem(c)).collect())
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<Elem> {
        self.0
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg0(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.0 == [Elem::ONE]
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> Elem {
        self.0.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.0.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// Exponents carrying a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i)
    }

    /// Largest packed coefficient, for checking which field level the polynomial lives in.
    pub fn max_coeff(&self) -> u64 {
        self.0.iter().map(|c| c.0).max().unwrap_or(0)
    }

    pub fn as_u64s(&self) -> Vec<u64> {
        self.0.iter().map(|c| c.0).collect()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c.0)?;
        }
        write!(f, "]")
    }
}

/// Human-readable form such as `x^3 + 2*x + 1`.
pub fn pretty(f: &UniPoly, var: &str) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut terms = Vec::new();
    for i in f.support().collect::<Vec<_>>().into_iter().rev() {
        let c = f.coeff(i).0;
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        terms.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    terms.join(" + ")
}

/// Report from exhaustive evaluation over the whole field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueSetReport {
    pub values: Vec<Elem>,
    pub size: usize,
    /// `⌊(|F|−1)/deg f⌋ + 1`; absent for constants.
    pub lower_bound: Option<u64>,
    pub is_mvsp: Option<bool>,
    /// Every value lies in the parent field (the `F_q` of a tower).
    pub values_in_base: bool,
}

/// Polynomial arithmetic over a borrowed coefficient field.
#[derive(Copy, Clone, Debug)]
pub struct PolyRing<'a> {
    field: &'a GaloisField,
}

impl<'a> PolyRing<'a> {
    pub fn new(field: &'a GaloisField) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &'a GaloisField {
        self.field
    }

    /// Checks every coefficient belongs to the field.
    pub fn check(&self, f: &UniPoly) -> Result<()> {
        match f.coeffs().iter().find(|c| !self.field.contains(**c)) {
            Some(c) => Err(Error::OutOfRange(c.0)),
            None => Ok(()),
        }
    }

    /// `x^q − x` for `q = |F|`.
    pub fn x_q_minus_x(&self) -> UniPoly {
        self.x_pow_minus_x(self.field.order() as usize)
    }

    pub fn x_pow_minus_x(&self, e: usize) -> UniPoly {
        let mut v = vec![Elem::ZERO; e + 1];
        v[e] = Elem::ONE;
        v[1] = self.field.add(v[1], self.field.neg(Elem::ONE));
        UniPoly::from_coeffs(v)
    }

    /// `x − a`.
    pub fn linear(&self, a: Elem) -> UniPoly {
        UniPoly::from_coeffs(vec![self.field.neg(a), Elem::ONE])
    }

    pub fn add(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        let (long, short) = if a.0.len() >= b.0.len() { (a, b) } else { (b, a) };
        let mut v = long.0.clone();
        for (i, c) in short.0.iter().enumerate() {
            v[i] = self.field.add(v[i], *c);
        }
        UniPoly::from_coeffs(v)
    }

    pub fn neg(&self, a: &UniPoly) -> UniPoly {
        UniPoly(a.0.iter().map(|c| self.field.neg(*c)).collect())
    }

    pub fn sub(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, c: Elem, a: &UniPoly) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(a.0.iter().map(|x| self.field.mul(c, *x)).collect())
    }

    /// `f + c`.
    pub fn add_const(&self, f: &UniPoly, c: Elem) -> UniPoly {
        self.add(f, &UniPoly::constant(c))
    }

    /// Multiplies by `x^e`.
    pub fn shift(&self, a: &UniPoly, e: usize) -> UniPoly {
        if a.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Elem::ZERO; e];
        v.extend_from_slice(&a.0);
        UniPoly(v)
    }

    pub fn mul(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        if a.is_zero() || b.is_zero() {
            return UniPoly::zero();
        }
        if a.0.len().min(b.0.len()) > KARATSUBA_THRESHOLD {
            UniPoly::from_coeffs(self.karatsuba(&a.0, &b.0))
        } else {
            self.mul_schoolbook(a, b)
        }
    }

    pub fn mul_schoolbook(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        if a.is_zero() || b.is_zero() {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(self.school(&a.0, &b.0))
    }

    fn school(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let f = self.field;
        let mut out = vec![Elem::ZERO; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] = f.add(out[i + j], f.mul(*x, *y));
                }
            }
        }
        out
    }

    fn add_into(&self, acc: &mut [Elem], src: &[Elem]) {
        for (a, s) in acc.iter_mut().zip(src) {
            *a = self.field.add(*a, *s);
        }
    }

    fn sub_into(&self, acc: &mut [Elem], src: &[Elem]) {
        for (a, s) in acc.iter_mut().zip(src) {
            *a = self.field.sub(*a, *s);
        }
    }

    fn karatsuba(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        if a.len().min(b.len()) <= KARATSUBA_THRESHOLD {
            return self.school(a, b);
        }
        let half = a.len().max(b.len()) / 2;
        let (a0, a1) = a.split_at(half.min(a.len()));
        let (b0, b1) = b.split_at(half.min(b.len()));
        let z0 = self.karatsuba(a0, b0);
        let z2 = self.karatsuba(a1, b1);
        let mut sa = a0.to_vec();
        sa.resize(a0.len().max(a1.len()), Elem::ZERO);
        self.add_into(&mut sa, a1);
        let mut sb = b0.to_vec();
        sb.resize(b0.len().max(b1.len()), Elem::ZERO);
        self.add_into(&mut sb, b1);
        let mut z1 = self.karatsuba(&sa, &sb);
        self.sub_into(&mut z1, &z0);
        self.sub_into(&mut z1, &z2);
        let mut out = vec![Elem::ZERO; a.len() + b.len() - 1];
        self.add_into(&mut out, &z0);
        self.add_into(&mut out[half..], &z1);
        self.add_into(&mut out[2 * half..], &z2);
        out
    }

    pub fn pow(&self, a: &UniPoly, mut e: u64) -> UniPoly {
        let mut acc = UniPoly::one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn divrem(&self, a: &UniPoly, b: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let f = self.field;
        let inv = f.inv(b.lc())?;
        let mut r = a.0.clone();
        if r.len() <= db {
            return Ok((UniPoly::zero(), a.clone()));
        }
        let mut q = vec![Elem::ZERO; r.len() - db];
        for i in (db..r.len()).rev() {
            let c = r[i];
            if c.is_zero() {
                continue;
            }
            let t = f.mul(c, inv);
            q[i - db] = t;
            for (j, bc) in b.0.iter().enumerate() {
                if !bc.is_zero() {
                    r[i - db + j] = f.sub(r[i - db + j], f.mul(t, *bc));
                }
            }
        }
        r.truncate(db);
        Ok((UniPoly::from_coeffs(q), UniPoly::from_coeffs(r)))
    }

    pub fn rem(&self, a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
        Ok(self.divrem(a, b)?.1)
    }

    /// Quotient when `b` divides `a` exactly.
    pub fn exact_div(&self, a: &UniPoly, b: &UniPoly) -> Option<UniPoly> {
        match self.divrem(a, b) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, d: &UniPoly, a: &UniPoly) -> bool {
        self.exact_div(a, d).is_some()
    }

    pub fn monic(&self, a: &UniPoly) -> UniPoly {
        if a.is_zero() {
            return UniPoly::zero();
        }
        let inv = self.field.inv(a.lc()).expect("nonzero leading coefficient");
        self.scale(inv, a)
    }

    pub fn gcd(&self, a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.rem(&x, &y)?;
            x = y;
            y = r;
        }
        Ok(self.monic(&x))
    }

    pub fn derivative(&self, a: &UniPoly) -> UniPoly {
        let f = self.field;
        UniPoly::from_coeffs(
            a.0.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| f.mul(f.scalar((i as u64 % f.characteristic()) as i64), *c))
                .collect(),
        )
    }

    /// `T(F)` by Horner's rule.
    pub fn compose(&self, t: &UniPoly, g: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in t.0.iter().rev() {
            acc = self.add_const(&self.mul(&acc, g), *c);
        }
        acc
    }

    pub fn eval(&self, a: &UniPoly, x: Elem) -> Elem {
        let f = self.field;
        a.0.iter().rev().fold(Elem::ZERO, |acc, c| f.add(f.mul(acc, x), *c))
    }

    /// `a^e mod m`.
    pub fn pow_mod(&self, a: &UniPoly, mut e: u64, m: &UniPoly) -> Result<UniPoly> {
        let mut acc = self.rem(&UniPoly::one(), m)?;
        let mut base = self.rem(a, m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &base), m)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.rem(&self.mul(&base, &base), m)?;
            }
        }
        Ok(acc)
    }

    pub fn mul_mod(&self, a: &UniPoly, b: &UniPoly, m: &UniPoly) -> Result<UniPoly> {
        self.rem(&self.mul(a, b), m)
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(&self, f: &UniPoly) -> bool {
        let n = match f.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        let q = self.field.order();
        let x = UniPoly::x();
        // x^{q^i} mod f for i = 0..=n
        let mut powers = vec![self.rem(&x, f).expect("nonzero modulus")];
        for i in 0..n {
            let next = self.pow_mod(&powers[i], q, f).expect("nonzero modulus");
            powers.push(next);
        }
        if powers[n] != self.rem(&x, f).expect("nonzero modulus") {
            return false;
        }
        crate::field::prime_factors(n as u64).into_iter().all(|r| {
            let h = self.sub(&powers[n / r as usize], &x);
            self.gcd(&h, f).map(|g| g.is_one()).unwrap_or(false)
        })
    }

    /// Whether `f` has a root in the coefficient field.
    pub fn has_root_in_field(&self, f: &UniPoly) -> bool {
        match f.degree() {
            None => true,
            Some(0) => false,
            Some(_) => {
                if f.coeff(0).is_zero() {
                    return true;
                }
                let xq = self.pow_mod(&UniPoly::x(), self.field.order(), f).expect("nonzero");
                let h = self.sub(&xq, &UniPoly::x());
                h.is_zero() || !self.gcd(&h, f).expect("nonzero").is_one()
            }
        }
    }

    /// Distinct roots in the coefficient field by exhaustive evaluation, ascending.
    pub fn rational_roots(&self, f: &UniPoly) -> Vec<Elem> {
        self.field.elements().filter(|&a| self.eval(f, a).is_zero()).collect()
    }

    /// Exhaustive value set over the coefficient field.
    pub fn value_set(&self, f: &UniPoly) -> ValueSetReport {
        let values: BTreeSet<Elem> = self.field.elements().map(|a| self.eval(f, a)).collect();
        let values: Vec<Elem> = values.into_iter().collect();
        let size = values.len();
        let lower_bound = match f.degree() {
            Some(d) if d >= 1 => Some((self.field.order() - 1) / d as u64 + 1),
            _ => None,
        };
        let values_in_base = values.iter().all(|v| v.0 < self.field.parent_order());
        ValueSetReport {
            size,
            is_mvsp: lower_bound.map(|lb| lb == size as u64),
            lower_bound,
            values,
            values_in_base,
        }
    }

    /// `a` with `a^p = f`, when `f ∈ F[x^p]`.
    pub fn pth_power_root(&self, f: &UniPoly) -> Option<UniPoly> {
        let p = self.field.characteristic() as usize;
        if f.support().any(|i| i % p != 0) {
            return None;
        }
        let n = f.0.len().div_ceil(p);
        let mut v = vec![Elem::ZERO; n];
        for i in f.support() {
            v[i / p] = self.field.pth_root(f.0[i]);
        }
        Some(UniPoly::from_coeffs(v))
    }

    /// Largest `n` with `d^n | f`, and the cofactor.
    pub fn strip_power(&self, f: &UniPoly, d: &UniPoly) -> (usize, UniPoly) {
        let mut n = 0;
        let mut cur = f.clone();
        if d.is_constant() || f.is_zero() {
            return (0, cur);
        }
        while let Some(q) = self.exact_div(&cur, d) {
            cur = q;
            n += 1;
        }
        (n, cur)
    }

    /// Squarefree decomposition: pairwise coprime monic squarefree factors
    /// with multiplicities, ascending, so `f = lc · Π a_i^{m_i}`.
    pub fn squarefree_decomposition(&self, f: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
        if f.is_zero() {
            return Err(Error::ConstantInput);
        }
        let mut out = self.sff_monic(&self.monic(f))?;
        out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.coeffs().cmp(b.0.coeffs())));
        Ok(out)
    }

    fn sff_monic(&self, f: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
        let p = self.field.characteristic() as usize;
        let mut out = Vec::new();
        if f.is_constant() {
            return Ok(out);
        }
        let df = self.derivative(f);
        if df.is_zero() {
            let root = self.pth_power_root(f).expect("derivative zero");
            for (g, m) in self.sff_monic(&root)? {
                out.push((g, m * p));
            }
            return Ok(out);
        }
        let mut c = self.gcd(f, &df)?;
        let mut w = self.exact_div(f, &c).expect("gcd divides");
        let mut i = 1;
        while !w.is_constant() {
            let y = self.gcd(&w, &c)?;
            let z = self.exact_div(&w, &y).expect("gcd divides");
            if !z.is_constant() {
                out.push((z, i));
            }
            i += 1;
            c = self.exact_div(&c, &y).expect("gcd divides");
            w = y;
        }
        if !c.is_constant() {
            let root = self.pth_power_root(&c).expect("remaining cofactor is a p-th power");
            for (g, m) in self.sff_monic(&self.monic(&root))? {
                out.push((g, m * p));
            }
        }
        Ok(out)
    }

    /// `(c, h)` with `f = c·h^ℓ`, `h` monic, when every multiplicity is divisible
    /// by `ℓ` and the leading coefficient is an `ℓ`-th power.
    pub fn lth_power_test(&self, f: &UniPoly, l: u64) -> Result<Option<(Elem, UniPoly)>> {
        if l < 2 {
            return Err(Error::PreconditionFailed("l must be at least 2".into()));
        }
        if f.is_zero() {
            return Ok(Some((Elem::ZERO, UniPoly::one())));
        }
        let c = f.lc();
        let order = self.field.order();
        let g = gcd_u64(l, order - 1);
        if self.field.pow(c, (order - 1) / g) != Elem::ONE {
            return Ok(None);
        }
        let mut h = UniPoly::one();
        for (factor, m) in self.squarefree_decomposition(f)? {
            if m as u64 % l != 0 {
                return Ok(None);
            }
            h = self.mul(&h, &self.pow(&factor, m as u64 / l));
        }
        Ok(Some((c, h)))
    }

    /// Roots of `f` over extensions of degree up to `cap`.
    pub fn root_multiplicities(&self, f: &UniPoly, cap: usize) -> Result<RootProfile> {
        roots::root_multiplicities(self, f, cap)
    }
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldTower;

    fn p(c: &[u64]) -> UniPoly {
        UniPoly::from_u64s(c)
    }

    #[test]
    fn divrem_examples() {
        let f2 = GaloisField::prime(2).unwrap();
        let r = PolyRing::new(&f2);
        assert_eq!(r.divrem(&p(&[0, 1, 1]), &p(&[1, 1])).unwrap(), (p(&[0, 1]), UniPoly::zero()));
        let f3 = GaloisField::prime(3).unwrap();
        let r = PolyRing::new(&f3);
        // x^3 - x = (x - 1)(x^2 + x)
        assert_eq!(r.divrem(&p(&[0, 2, 0, 1]), &p(&[2, 1])).unwrap(), (p(&[0, 1, 1]), UniPoly::zero()));
        assert_eq!(r.divrem(&p(&[1]), &UniPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn derivative_examples() {
        let f3 = GaloisField::prime(3).unwrap();
        let r = PolyRing::new(&f3);
        // x^4 - x^2 -> x^3 + x
        assert_eq!(r.derivative(&p(&[0, 0, 2, 0, 1])), p(&[0, 1, 0, 1]));
        assert!(r.derivative(&p(&[0, 0, 0, 1])).is_zero());
        assert!(r.derivative(&p(&[2])).is_zero());
    }

    #[test]
    fn compose_example() {
        let t = FieldTower::build(2, 1, 2).unwrap();
        let r = PolyRing::new(t.top());
        let h = p(&[0, 1, 1]);
        assert_eq!(r.compose(&h, &h), p(&[0, 1, 0, 0, 1]));
        assert_eq!(r.compose(&UniPoly::x(), &h), h);
        assert_eq!(r.compose(&p(&[3]), &h), p(&[3]));
    }

    #[test]
    fn value_set_examples() {
        let t = FieldTower::build(2, 1, 2).unwrap();
        let r = PolyRing::new(t.top());
        let v = r.value_set(&p(&[0, 1, 1]));
        assert_eq!(v.values, vec![Elem(0), Elem(1)]);
        assert_eq!(v.is_mvsp, Some(true));
        assert!(v.values_in_base);
        let f3 = GaloisField::prime(3).unwrap();
        let r = PolyRing::new(&f3);
        let v = r.value_set(&p(&[0, 0, 2, 0, 1]));
        assert_eq!(v.values, vec![Elem(0)]);
        assert_eq!(v.is_mvsp, Some(true));
        let v = r.value_set(&p(&[2]));
        assert_eq!((v.size, v.is_mvsp), (1, None));
    }

    #[test]
    fn pth_root_examples() {
        let f3 = GaloisField::prime(3).unwrap();
        let r = PolyRing::new(&f3);
        let a = p(&[0, 1, 0, 1]);
        assert_eq!(r.pth_power_root(&r.pow(&a, 3)).unwrap(), a);
        let f2 = GaloisField::prime(2).unwrap();
        assert!(PolyRing::new(&f2).pth_power_root(&p(&[0, 1, 1])).is_none());
    }

    #[test]
    fn gcd_examples() {
        let f3 = GaloisField::prime(3).unwrap();
        let r = PolyRing::new(&f3);
        let a = p(&[0, 0, 2, 0, 1]);
        let b = p(&[0, 2, 0, 1]);
        assert_eq!(r.gcd(&a, &b).unwrap(), b);
        assert_eq!(r.gcd(&p(&[0, 2]), &UniPoly::zero()).unwrap(), p(&[0, 1]));
        assert_eq!(r.gcd(&UniPoly::zero(), &UniPoly::zero()), Err(Error::BothZero));
    }

    #[test]
    fn lth_power_examples() {
        let f5 = GaloisField::prime(5).unwrap();
        let r = PolyRing::new(&f5);
        let xm1 = p(&[4, 1]);
        let f = r.pow(&xm1, 4);
        assert_eq!(r.lth_power_test(&f, 2).unwrap(), Some((Elem::ONE, r.pow(&xm1, 2))));
        assert_eq!(r.lth_power_test(&p(&[0, 1, 1]), 2).unwrap(), None);
        assert_eq!(r.lth_power_test(&p(&[0, 0, 2]), 2).unwrap(), None);
        assert!(r.lth_power_test(&p(&[0, 0, 4]), 2).unwrap().is_some());
    }

    #[test]
    fn squarefree_char_p() {
        let f3 = GaloisField::prime(3).unwrap();
        let r = PolyRing::new(&f3);
        // x^3 (x+1)^2 (x+2)^4
        let f = r.mul(&r.mul(&r.pow(&UniPoly::x(), 3), &r.pow(&p(&[1, 1]), 2)), &r.pow(&p(&[2, 1]), 4));
        let sff = r.squarefree_decomposition(&f).unwrap();
        assert_eq!(sff, vec![(p(&[1, 1]), 2), (UniPoly::x(), 3), (p(&[2, 1]), 4)]);
    }

    #[test]
    fn karatsuba_matches_schoolbook() {
        let t = FieldTower::build(3, 2, 1).unwrap();
        let r = PolyRing::new(t.top());
        let a = UniPoly::from_coeffs((0..150).map(|i| Elem((i * 7 + 3) % 9)).collect());
        let b = UniPoly::from_coeffs((0..97).map(|i| Elem((i * i + 1) % 9)).collect());
        assert_eq!(r.mul(&a, &b), r.mul_schoolbook(&a, &b));
    }

    #[test]
    fn irreducibility_matches_root_scan_for_small_degrees() {
        let f5 = GaloisField::prime(5).unwrap();
        let r = PolyRing::new(&f5);
        for c0 in 0..5 {
            for c1 in 0..5 {
                for c2 in 0..5 {
                    let f = p(&[c0, c1, c2, 1]);
                    assert_eq!(r.is_irreducible(&f), r.rational_roots(&f).is_empty());
                }
            }
        }
    }
}
