//! The family `W` of MVSPs over `F_{q^k}` whose value set is exactly `F_q`,
//! built as the `F_q`-span of trace images `T_k(c·x^e) mod (x^{q^k} − x)`.

use crate::error::{Error, Result};
use crate::field::{Elem, FieldTower};
use crate::poly::{PolyRing, UniPoly};

/// Largest span `q^{2^k}` that [`w_span`] will list.
pub const W_ENUM_CAP: u64 = 1 << 20;

fn reduce_exp(a: u64, big_q: u64) -> u64 {
    if a == 0 {
        0
    } else {
        (a - 1) % (big_q - 1) + 1
    }
}

/// `T_k(H) mod (x^Q − x)` with `T_k(x) = Σ_{i<k} x^{q^i}`.
pub fn trace_image(tower: &FieldTower, h: &UniPoly) -> UniPoly {
    let top = tower.top();
    let (q, big_q) = (tower.q(), tower.big_q());
    let mut out = vec![Elem::ZERO; big_q as usize];
    for e in h.support() {
        let mut c = h.coeff(e);
        let mut exp = reduce_exp(e as u64, big_q);
        for _ in 0..tower.k() {
            let slot = &mut out[exp as usize];
            *slot = top.add(*slot, c);
            c = top.pow(c, q);
            exp = reduce_exp(exp * q, big_q);
        }
    }
    UniPoly::from_coeffs(out)
}

struct Echelon<'a> {
    tower: &'a FieldTower,
    rows: Vec<(usize, Vec<Elem>)>,
}

impl<'a> Echelon<'a> {
    fn coords(&self, f: &UniPoly) -> Vec<Elem> {
        let k = self.tower.k() as usize;
        let mut v = vec![Elem::ZERO; self.tower.big_q() as usize * k];
        for e in f.support() {
            for (j, c) in self.tower.top().coords(f.coeff(e)).into_iter().enumerate() {
                v[e * k + j] = c;
            }
        }
        v
    }

    /// Adds `f` if it is independent of the rows so far.
    fn insert(&mut self, f: &UniPoly) -> bool {
        let base = self.tower.base();
        let mut v = self.coords(f);
        for (piv, row) in &self.rows {
            let c = v[*piv];
            if c.is_zero() {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                *x = base.sub(*x, base.mul(c, *r));
            }
        }
        match v.iter().position(|c| !c.is_zero()) {
            None => false,
            Some(piv) => {
                let inv = base.inv(v[piv]).expect("nonzero pivot");
                let row = v.into_iter().map(|x| base.mul(x, inv)).collect();
                self.rows.push((piv, row));
                true
            }
        }
    }
}

/// Dimension of the `F_q`-span of `polys` (coefficients in the top field).
pub fn span_rank(tower: &FieldTower, polys: &[UniPoly]) -> usize {
    let mut ech = Echelon { tower, rows: Vec::new() };
    polys.iter().filter(|f| ech.insert(f)).count()
}

/// An `F_q`-basis of `W ∪ F_q`, of size `2^k`.
///
/// Spanning set: `T_k(c·x^e)` for `e` a sum over a subset of `{1, q, …, q^{k−1}}`
/// and `c` over the packed `F_q`-basis `{1, z, …, z^{k−1}}` of the top field.
/// The empty subset contributes the constant `1`, which is kept as the first member.
pub fn w_basis(tower: &FieldTower) -> Vec<UniPoly> {
    let (q, k) = (tower.q(), tower.k());
    let mut ech = Echelon { tower, rows: Vec::new() };
    let mut basis = Vec::new();
    if ech.insert(&UniPoly::one()) {
        basis.push(UniPoly::one());
    }
    for mask in 0u32..(1 << k) {
        let e: u64 = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| q.pow(i)).sum();
        for j in 0..k {
            let h = UniPoly::monomial(Elem(q.pow(j)), e as usize);
            let f = trace_image(tower, &h);
            if !f.is_zero() && ech.insert(&f) {
                basis.push(f);
            }
        }
    }
    debug_assert_eq!(basis.len(), 1 << k);
    basis
}

/// Every `F_q`-combination of [`w_basis`], constants included, in counter order.
pub fn w_span(tower: &FieldTower) -> Result<Vec<UniPoly>> {
    let basis = w_basis(tower);
    let q = tower.q();
    let size = (q as u128).checked_pow(basis.len() as u32).unwrap_or(u128::MAX);
    if size > W_ENUM_CAP as u128 {
        return Err(Error::TooLarge { what: "W span", size, cap: W_ENUM_CAP as u128 });
    }
    let ring = PolyRing::new(tower.top());
    let mut out = Vec::with_capacity(size as usize);
    let mut digits = vec![0u64; basis.len()];
    for _ in 0..size {
        let f = digits
            .iter()
            .zip(&basis)
            .fold(UniPoly::zero(), |acc, (&d, b)| ring.add(&acc, &ring.scale(Elem(d), b)));
        out.push(f);
        for d in digits.iter_mut() {
            *d += 1;
            if *d < q {
                break;
            }
            *d = 0;
        }
    }
    Ok(out)
}

/// `W`: the span without its `q` constants.
pub fn w_enumerate(tower: &FieldTower) -> Result<Vec<UniPoly>> {
    Ok(w_span(tower)?.into_iter().filter(|f| !f.is_constant()).collect())
}

/// Degree at most `(Q − 1)/(q − 1)`, every value in `F_q`, and value set all of `F_q`.
pub fn w_membership(tower: &FieldTower, f: &UniPoly) -> Result<bool> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let ring = PolyRing::new(tower.top());
    ring.check(f)?;
    let (q, big_q) = (tower.q(), tower.big_q());
    if f.deg0() as u64 > (big_q - 1) / (q - 1) {
        return Ok(false);
    }
    let vs = ring.value_set(f);
    for v in &vs.values {
        if !tower.in_base_subfield(*v)? {
            return Ok(false);
        }
    }
    Ok(vs.size as u64 == q)
}
