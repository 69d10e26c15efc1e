//! Search for the `(v, m, k, N, ω)` decomposition of an MVSP with at least three values.

use serde::{Deserialize, Serialize};

use super::ordered_values;
use crate::error::{Error, Result};
use crate::field::{Elem, GaloisField};
use crate::poly::{PolyRing, UniPoly};

/// `v | p^k − 1`, `1 + vr = p^{mk}`, `L_0 ∤ N`, and `L_0'` is a `p^{mk}`-th power.
pub const COND_A: u8 = 1;
/// `F = L_0^v · N^{p^{mk}} + γ_0`.
pub const COND_B: u8 = 2;
/// `Π_{i≥1}(x − γ_i + γ_0) = Σ ω_i x^{(p^{ki} − 1)/v}` with `ω_0 ≠ 0`, `ω_m = 1`.
pub const COND_C: u8 = 4;
/// `Σ ω_i L_0^{p^{ki}} N^{p^{mk}(p^{ki} − 1)/v} = −ω_0 (x^q − x) L_0'`.
pub const COND_D: u8 = 8;
const ALL: u8 = COND_A | COND_B | COND_C | COND_D;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MillsStructure {
    pub gamma: Vec<Elem>,
    #[serde(rename = "L")]
    pub l_polys: Vec<UniPoly>,
    pub l: Vec<usize>,
    pub v: u64,
    pub m: u32,
    pub kk: u32,
    #[serde(rename = "Npoly")]
    pub n_poly: Option<UniPoly>,
    pub omega: Vec<Elem>,
    pub verified: u8,
}

impl MillsStructure {
    pub fn fully_verified(&self) -> bool {
        self.verified == ALL
    }
}

fn ceil_log(base: u64, x: u128) -> u32 {
    let mut e = 0;
    let mut acc = 1u128;
    while acc < x {
        acc *= base as u128;
        e += 1;
    }
    e
}

pub fn mills_structure(field: &GaloisField, f: &UniPoly) -> Result<MillsStructure> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let ring = PolyRing::new(field);
    let vs = ring.value_set(f);
    if vs.is_mvsp != Some(true) {
        return Err(Error::NotMvsp);
    }
    let r = vs.size as u64 - 1;
    if r <= 1 {
        return Err(Error::TooFewValues(r as usize));
    }
    let ordered = ordered_values(field, f)?;
    let gamma: Vec<Elem> = ordered.iter().map(|(g, _)| *g).collect();
    let l_polys: Vec<UniPoly> = ordered.iter().map(|(_, l)| l.clone()).collect();
    let l: Vec<usize> = l_polys.iter().map(|p| p.deg0()).collect();

    let p = field.characteristic();
    let deg = f.deg0() as u128;
    let bound = field.abs_degree() * ceil_log(p, 1 + (field.order() as u128 - 1) * r as u128);
    let mut best: Option<MillsStructure> = None;
    let mut pmk: u128 = 1;
    for mk in 1..=bound {
        pmk *= p as u128;
        // F − γ_0 = L_0^v · (…) with deg L_0 ≥ 1 forces v ≤ deg F
        if pmk - 1 > r as u128 * deg {
            break;
        }
        if (pmk - 1) % r as u128 != 0 {
            continue;
        }
        let v = ((pmk - 1) / r as u128) as u64;
        for kk in (1..=mk).filter(|kk| mk % kk == 0) {
            if (p.pow(kk) - 1) % v != 0 {
                continue;
            }
            let cand = verify(field, f, &gamma, &l_polys, &l, v, mk / kk, kk);
            if cand.fully_verified() {
                return Ok(cand);
            }
            let better = best
                .as_ref()
                .map_or(true, |b| cand.verified.count_ones() > b.verified.count_ones());
            if better {
                best = Some(cand);
            }
        }
    }
    best.ok_or(Error::NoDecomposition)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    field: &GaloisField,
    f: &UniPoly,
    gamma: &[Elem],
    l_polys: &[UniPoly],
    l: &[usize],
    v: u64,
    m: u32,
    kk: u32,
) -> MillsStructure {
    let ring = PolyRing::new(field);
    let p = field.characteristic();
    let mk = m * kk;
    let pmk = p.pow(mk);
    let l0 = &l_polys[0];
    let dl0 = ring.derivative(l0);
    let mut verified = 0u8;

    // (b): divide out L_0^v, then take mk successive p-th roots
    let f0 = ring.add_const(f, field.neg(gamma[0]));
    let n_poly = ring.exact_div(&f0, &ring.pow(l0, v)).and_then(|mut rest| {
        for _ in 0..mk {
            rest = ring.pth_power_root(&rest)?;
        }
        Some(rest)
    });
    if let Some(n) = &n_poly {
        if ring.mul(&ring.pow(l0, v), &ring.pow(n, pmk)) == f0 {
            verified |= COND_B;
        }
    }

    // (a)
    let l0_nmid_n = n_poly.as_ref().map_or(false, |n| !ring.divides(l0, n));
    let dl0_power = dl0.support().all(|e| e as u64 % pmk == 0);
    let r = gamma.len() as u64 - 1;
    if (p.pow(kk) - 1) % v == 0 && 1 + v * r == pmk && l0_nmid_n && dl0_power {
        verified |= COND_A;
    }

    // (c)
    let shifted = gamma[1..].iter().fold(UniPoly::one(), |acc, &g| {
        ring.mul(&acc, &ring.linear(field.sub(g, gamma[0])))
    });
    let exps: Vec<usize> = (0..=m).map(|i| ((p.pow(kk * i) - 1) / v) as usize).collect();
    let omega: Vec<Elem> = exps.iter().map(|&e| shifted.coeff(e)).collect();
    let rebuilt = exps
        .iter()
        .zip(&omega)
        .fold(UniPoly::zero(), |acc, (&e, &w)| ring.add(&acc, &UniPoly::monomial(w, e)));
    let c_ok = rebuilt == shifted && !omega[0].is_zero() && omega[m as usize] == Elem::ONE;
    if c_ok {
        verified |= COND_C;
    }

    // (d)
    if let (true, Some(n)) = (c_ok, &n_poly) {
        let mut lhs = UniPoly::zero();
        for (i, &w) in omega.iter().enumerate() {
            let pki = p.pow(kk * i as u32);
            let term = ring.mul(&ring.pow(l0, pki), &ring.pow(n, pmk * ((pki - 1) / v)));
            lhs = ring.add(&lhs, &ring.scale(w, &term));
        }
        let rhs = ring.scale(field.neg(omega[0]), &ring.mul(&ring.x_q_minus_x(), &dl0));
        if lhs == rhs {
            verified |= COND_D;
        }
    }

    MillsStructure {
        gamma: gamma.to_vec(),
        l_polys: l_polys.to_vec(),
        l: l.to_vec(),
        v,
        m,
        kk,
        n_poly,
        omega,
        verified,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldTower;

    #[test]
    fn norm_polynomial_over_f9() {
        let t = FieldTower::build(3, 1, 2).unwrap();
        let s = mills_structure(t.top(), &UniPoly::monomial(Elem::ONE, 4)).unwrap();
        assert!(s.fully_verified(), "{s:?}");
        assert_eq!((s.gamma[0], s.v, s.m * s.kk), (Elem::ZERO, 4, 2));
        assert_eq!(s.n_poly, Some(UniPoly::one()));
    }

    #[test]
    fn trace_polynomial_over_f9() {
        let t = FieldTower::build(3, 1, 2).unwrap();
        // x^3 + x: value set F_3, r = 2, 1 + 2v = 3 gives v = 1, mk = 1
        let s = mills_structure(t.top(), &UniPoly::from_u64s(&[0, 1, 0, 1])).unwrap();
        assert!(s.fully_verified(), "{s:?}");
        assert_eq!((s.v, s.m, s.kk), (1, 1, 1));
    }

    #[test]
    fn preconditions() {
        let f5 = GaloisField::prime(5).unwrap();
        assert_eq!(mills_structure(&f5, &UniPoly::x()).map(|s| s.v), Ok(1));
        let f3 = GaloisField::prime(3).unwrap();
        assert!(mills_structure(&f3, &UniPoly::x()).unwrap().fully_verified());
        let f2 = GaloisField::prime(2).unwrap();
        assert_eq!(mills_structure(&f2, &UniPoly::x()), Err(Error::TooFewValues(1)));
        assert_eq!(mills_structure(&f5, &UniPoly::from_u64s(&[0, 0, 0, 0, 1, 1])), Err(Error::NotMvsp));
        assert_eq!(mills_structure(&f5, &UniPoly::from_u64s(&[2])), Err(Error::ConstantInput));
    }
}
