//! Sparse bivariate polynomials and exact division in `(F[x])[y]`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, GaloisField};
use crate::poly::{PolyRing, UniPoly};

/// `x^x · y^y`; ordered by `y` first, then `x`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    pub y: usize,
    pub x: usize,
}

impl Monomial {
    pub fn new(x: usize, y: usize) -> Self {
        Monomial { y, x }
    }

    pub fn degree(&self) -> usize {
        self.x + self.y
    }
}

/// Sparse polynomial in `x, y`; no zero coefficients are stored. Serializes as
/// a list of `[i, j, c]` triples for the term `c·x^i·y^j`.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(from = "Vec<[u64; 3]>", into = "Vec<[u64; 3]>")]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Elem>,
}

impl From<Vec<[u64; 3]>> for BiPoly {
    // later triples with the same monomial overwrite earlier ones
    fn from(v: Vec<[u64; 3]>) -> Self {
        let terms = v
            .into_iter()
            .filter(|t| t[2] != 0)
            .map(|[i, j, c]| (Monomial::new(i as usize, j as usize), Elem(c)))
            .collect();
        BiPoly { terms }
    }
}

impl From<BiPoly> for Vec<[u64; 3]> {
    fn from(p: BiPoly) -> Self {
        p.terms.into_iter().map(|(m, c)| [m.x as u64, m.y as u64, c.0]).collect()
    }
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly::default()
    }

    pub fn constant(c: Elem) -> BiPoly {
        BiPoly::monomial(c, 0, 0)
    }

    pub fn monomial(c: Elem, x: usize, y: usize) -> BiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(x, y), c);
        }
        BiPoly { terms }
    }

    pub fn x() -> BiPoly {
        BiPoly::monomial(Elem::ONE, 1, 0)
    }

    pub fn y() -> BiPoly {
        BiPoly::monomial(Elem::ONE, 0, 1)
    }

    pub fn from_x(f: &UniPoly) -> BiPoly {
        BiPoly { terms: f.support().map(|i| (Monomial::new(i, 0), f.coeff(i))).collect() }
    }

    pub fn from_y(g: &UniPoly) -> BiPoly {
        BiPoly { terms: g.support().map(|j| (Monomial::new(0, j), g.coeff(j))).collect() }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, Elem)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x: usize, y: usize) -> Elem {
        self.terms.get(&Monomial::new(x, y)).copied().unwrap_or(Elem::ZERO)
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.x).max()
    }

    pub fn deg_y(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.y).max()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn uses_x(&self) -> bool {
        self.terms.keys().any(|m| m.x > 0)
    }

    pub fn uses_y(&self) -> bool {
        self.terms.keys().any(|m| m.y > 0)
    }

    pub fn swap_xy(&self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(m, c)| (Monomial::new(m.y, m.x), *c)).collect() }
    }

    /// The polynomial in `x` alone, if `y` does not occur.
    pub fn to_x_poly(&self) -> Option<UniPoly> {
        if self.uses_y() {
            return None;
        }
        let mut v = vec![Elem::ZERO; self.deg_x().map_or(0, |d| d + 1)];
        for (m, c) in self.terms() {
            v[m.x] = c;
        }
        Some(UniPoly::from_coeffs(v))
    }

    /// Coefficients of `y^j` as polynomials in `x`, indexed by `j`.
    pub fn y_coeffs(&self) -> Vec<UniPoly> {
        let dy = match self.deg_y() {
            None => return Vec::new(),
            Some(d) => d,
        };
        let mut rows: Vec<Vec<Elem>> = vec![Vec::new(); dy + 1];
        for (m, c) in self.terms() {
            let row = &mut rows[m.y];
            if row.len() <= m.x {
                row.resize(m.x + 1, Elem::ZERO);
            }
            row[m.x] = c;
        }
        rows.into_iter().map(UniPoly::from_coeffs).collect()
    }

    pub fn from_y_coeffs(rows: &[UniPoly]) -> BiPoly {
        let mut terms = BTreeMap::new();
        for (j, row) in rows.iter().enumerate() {
            for i in row.support() {
                terms.insert(Monomial::new(i, j), row.coeff(i));
            }
        }
        BiPoly { terms }
    }
}

/// Arithmetic on [`BiPoly`] over a borrowed field.
#[derive(Copy, Clone, Debug)]
pub struct BiRing<'a> {
    field: &'a GaloisField,
}

impl<'a> BiRing<'a> {
    pub fn new(field: &'a GaloisField) -> Self {
        BiRing { field }
    }

    pub fn field(&self) -> &'a GaloisField {
        self.field
    }

    fn accumulate(&self, terms: &mut BTreeMap<Monomial, Elem>, m: Monomial, c: Elem) {
        if c.is_zero() {
            return;
        }
        let slot = terms.entry(m).or_insert(Elem::ZERO);
        *slot = self.field.add(*slot, c);
        if slot.is_zero() {
            terms.remove(&m);
        }
    }

    pub fn add(&self, a: &BiPoly, b: &BiPoly) -> BiPoly {
        let mut terms = a.terms.clone();
        for (m, c) in b.terms() {
            self.accumulate(&mut terms, m, c);
        }
        BiPoly { terms }
    }

    pub fn neg(&self, a: &BiPoly) -> BiPoly {
        BiPoly { terms: a.terms.iter().map(|(m, c)| (*m, self.field.neg(*c))).collect() }
    }

    pub fn sub(&self, a: &BiPoly, b: &BiPoly) -> BiPoly {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, c: Elem, a: &BiPoly) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly { terms: a.terms.iter().map(|(m, x)| (*m, self.field.mul(c, *x))).collect() }
    }

    pub fn mul(&self, a: &BiPoly, b: &BiPoly) -> BiPoly {
        let mut terms = BTreeMap::new();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                self.accumulate(
                    &mut terms,
                    Monomial::new(ma.x + mb.x, ma.y + mb.y),
                    self.field.mul(ca, cb),
                );
            }
        }
        BiPoly { terms }
    }

    pub fn pow(&self, a: &BiPoly, mut e: u64) -> BiPoly {
        let mut acc = BiPoly::constant(Elem::ONE);
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

    /// `f(x) − g(y)`.
    pub fn separated(&self, f: &UniPoly, g: &UniPoly) -> BiPoly {
        self.sub(&BiPoly::from_x(f), &BiPoly::from_y(g))
    }

    pub fn partial_x(&self, a: &BiPoly) -> BiPoly {
        let mut terms = BTreeMap::new();
        for (m, c) in a.terms() {
            if m.x > 0 {
                let k = self.field.scalar((m.x as u64 % self.field.characteristic()) as i64);
                self.accumulate(&mut terms, Monomial::new(m.x - 1, m.y), self.field.mul(k, c));
            }
        }
        BiPoly { terms }
    }

    pub fn partial_y(&self, a: &BiPoly) -> BiPoly {
        self.partial_x(&a.swap_xy()).swap_xy()
    }

    /// `(x^q − x)·∂F/∂x + (y^q − y)·∂F/∂y`.
    pub fn frobenius_form(&self, a: &BiPoly, q: u64) -> BiPoly {
        let q = q as usize;
        let minus_one = self.field.neg(Elem::ONE);
        let xq = self.add(&BiPoly::monomial(Elem::ONE, q, 0), &BiPoly::monomial(minus_one, 1, 0));
        let yq = self.add(&BiPoly::monomial(Elem::ONE, 0, q), &BiPoly::monomial(minus_one, 0, 1));
        self.add(&self.mul(&xq, &self.partial_x(a)), &self.mul(&yq, &self.partial_y(a)))
    }

    pub fn eval(&self, a: &BiPoly, x: Elem, y: Elem) -> Elem {
        let f = self.field;
        a.terms().fold(Elem::ZERO, |acc, (m, c)| {
            f.add(acc, f.mul(c, f.mul(f.pow(x, m.x as u64), f.pow(y, m.y as u64))))
        })
    }

    /// Homogenization to degree `d` evaluated at `(X : Y : Z)`.
    pub fn eval_homogeneous(&self, a: &BiPoly, d: usize, x: Elem, y: Elem, z: Elem) -> Elem {
        let f = self.field;
        a.terms().fold(Elem::ZERO, |acc, (m, c)| {
            let t = f.mul(f.pow(x, m.x as u64), f.pow(y, m.y as u64));
            f.add(acc, f.mul(c, f.mul(t, f.pow(z, (d - m.degree()) as u64))))
        })
    }

    /// Terms of maximal total degree.
    pub fn top_form(&self, a: &BiPoly) -> BiPoly {
        let d = a.total_degree().unwrap_or(0);
        BiPoly { terms: a.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (*m, *c)).collect() }
    }

    /// Quotient `D / F` if `F` divides `D` exactly.
    ///
    /// Division runs in `(F[x])[y]` when the leading `y`-coefficient of `F` is a
    /// nonzero constant, otherwise in `(F[y])[x]`.
    pub fn divides(&self, d: &BiPoly, f: &BiPoly) -> Result<Option<BiPoly>> {
        if self.unit_y_leader(f) {
            return Ok(self.divide_y_outer(d, f));
        }
        let (ds, fs) = (d.swap_xy(), f.swap_xy());
        if self.unit_y_leader(&fs) {
            return Ok(self.divide_y_outer(&ds, &fs).map(|q| q.swap_xy()));
        }
        Err(Error::NonUnitLeader)
    }

    fn unit_y_leader(&self, f: &BiPoly) -> bool {
        match f.y_coeffs().last() {
            Some(lead) => lead.degree() == Some(0),
            None => false,
        }
    }

    fn divide_y_outer(&self, d: &BiPoly, f: &BiPoly) -> Option<BiPoly> {
        let ring = PolyRing::new(self.field);
        let fr = f.y_coeffs();
        let df = fr.len() - 1;
        let inv = self.field.inv(fr[df].lc()).expect("unit leader");
        let mut r = d.y_coeffs();
        if r.len() <= df {
            return if d.is_zero() { Some(BiPoly::zero()) } else { None };
        }
        let mut q = vec![UniPoly::zero(); r.len() - df];
        for j in (df..r.len()).rev() {
            if r[j].is_zero() {
                continue;
            }
            let t = ring.scale(inv, &r[j]);
            for (i, fc) in fr.iter().enumerate() {
                if !fc.is_zero() {
                    r[j - df + i] = ring.sub(&r[j - df + i], &ring.mul(&t, fc));
                }
            }
            q[j - df] = t;
        }
        if r.iter().all(|c| c.is_zero()) {
            Some(BiPoly::from_y_coeffs(&q))
        } else {
            None
        }
    }
}
