//! Censuses of nonclassical curves `y^n = f(x)`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{hvh_check, super_stats, CurveStats, HvhReport};
use crate::error::{Error, Result};
use crate::field::{desk_cap, Elem, FieldTower, GaloisField};
use crate::mvsp::{two_value_split, type_a_enumerate, w_enumerate};
use crate::poly::{pretty, PolyRing, UniPoly};
use crate::superelliptic::{corollary_checks, garcia_test, kummer_irreducible, CorollaryReport, Irreducibility, SuperCurve};

/// Default cap on the number of candidate `(n, f)` pairs in a census.
pub const CENSUS_CAP: u64 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CensusMode {
    /// Every `f` of degree at most `n`; only for `q ≤ 7`.
    Exhaustive,
    /// `f` drawn from `W`, type A/B, two-value splits, `(x^q − x)^n a^p` forms and binomials.
    Constructive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusLimits {
    /// Exponents to try; every divisor of `q − 1` by default.
    pub n_values: Option<Vec<u64>>,
    pub max_degree: Option<usize>,
    pub cap: u64,
}

impl Default for CensusLimits {
    fn default() -> Self {
        CensusLimits { n_values: None, max_degree: None, cap: CENSUS_CAP }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub q: u64,
    pub n: u64,
    pub f: UniPoly,
    pub f_text: String,
    pub stats: CurveStats,
    pub checks: CorollaryReport,
    pub irreducibility: Irreducibility,
    pub hvh: Option<HvhReport>,
}

fn exponents(field: &GaloisField, limits: &CensusLimits) -> Vec<u64> {
    let q1 = field.order() - 1;
    let all: Vec<u64> = (1..=q1).filter(|n| q1 % n == 0).collect();
    match &limits.n_values {
        Some(v) => all.into_iter().filter(|n| v.contains(n)).collect(),
        None => all,
    }
}

fn record(field: &GaloisField, c: SuperCurve) -> Result<CensusRecord> {
    let irreducibility = kummer_irreducible(field, &c)?;
    let hvh = match irreducibility {
        Irreducibility::AbsIrreducible => Some(hvh_check(field, &c)?),
        _ => None,
    };
    Ok(CensusRecord {
        q: field.order(),
        n: c.n(),
        f_text: pretty(c.f(), "x"),
        stats: super_stats(field, &c, Some(1))?,
        checks: corollary_checks(field, &c)?,
        irreducibility,
        hvh,
        f: c.f().clone(),
    })
}

/// Cheap necessary condition: every value of `f` is `0` or an `n`-th power.
fn values_fit(field: &GaloisField, f: &UniPoly, n: u64) -> bool {
    let ring = PolyRing::new(field);
    let e = (field.order() - 1) / n;
    field.elements().all(|x| {
        let v = ring.eval(f, x);
        v.is_zero() || field.pow(v, e) == Elem::ONE
    })
}

fn hit(field: &GaloisField, n: u64, f: &UniPoly) -> Option<SuperCurve> {
    if f.is_constant() || f.deg0() as u64 > n || !values_fit(field, f, n) {
        return None;
    }
    let c = SuperCurve::new(field, n, f.clone()).ok()?;
    garcia_test(field, &c).then_some(c)
}

fn nth_poly(q: u64, d: usize, idx: u64) -> UniPoly {
    // idx enumerates the q^d lower coefficients and q − 1 leading ones
    let mut coeffs = Vec::with_capacity(d + 1);
    let mut t = idx;
    for _ in 0..d {
        coeffs.push(Elem(t % q));
        t /= q;
    }
    coeffs.push(Elem(t + 1));
    UniPoly::from_coeffs(coeffs)
}

fn exhaustive(field: &GaloisField, limits: &CensusLimits) -> Result<Vec<SuperCurve>> {
    let q = field.order();
    if q > 7 {
        return Err(Error::TooLarge { what: "exhaustive census field", size: q as u128, cap: 7 });
    }
    let mut jobs: Vec<(u64, usize, u64)> = Vec::new();
    let mut total: u128 = 0;
    for n in exponents(field, limits) {
        let top = limits.max_degree.map_or(n as usize, |m| m.min(n as usize));
        for d in 1..=top {
            let count = (q - 1) as u128 * (q as u128).pow(d as u32);
            total += count;
            jobs.push((n, d, count as u64));
        }
    }
    let cap = desk_cap(limits.cap) as u128;
    if total > cap {
        return Err(Error::TooLarge { what: "exhaustive census", size: total, cap });
    }
    let mut out = Vec::new();
    for (n, d, count) in jobs {
        let hits: Vec<SuperCurve> = (0..count)
            .into_par_iter()
            .filter_map(|i| hit(field, n, &nth_poly(q, d, i)))
            .collect();
        out.extend(hits);
    }
    Ok(out)
}

fn constructive_candidates(tower: &FieldTower) -> Result<BTreeSet<Vec<Elem>>> {
    let field = tower.top();
    let ring = PolyRing::new(field);
    let q = field.order();
    let mut cands: BTreeSet<Vec<Elem>> = BTreeSet::new();
    let mut add = |f: UniPoly| {
        if !f.is_constant() {
            cands.insert(f.into_coeffs());
        }
    };
    if tower.k() > 1 {
        for f in w_enumerate(tower)? {
            add(f);
        }
    }
    if q < 20 {
        for m in type_a_enumerate(field)? {
            add(ring.sub(&UniPoly::one(), &m.f));
            add(m.f);
        }
    }
    if q <= 9 {
        for mask in 1u64..(1 << q) - 1 {
            let s: Vec<Elem> = (0..q).filter(|i| mask >> i & 1 == 1).map(Elem).collect();
            add(two_value_split(field, &s)?);
        }
    }
    let xq = ring.x_q_minus_x();
    for n in 1..=2 {
        for a in [UniPoly::one(), UniPoly::x()] {
            add(ring.mul(&ring.pow(&xq, n), &ring.pow(&a, field.characteristic())));
        }
    }
    for d in 1..q as usize {
        for a in field.nonzero_elements() {
            for b in field.elements() {
                add(ring.add_const(&UniPoly::monomial(a, d), b));
            }
        }
    }
    Ok(cands)
}

/// Every `(n, f)` passing `garcia_test`, sorted by `n`, then degree, then coefficients.
pub fn census_superelliptic(tower: &FieldTower, mode: CensusMode, limits: &CensusLimits) -> Result<Vec<CensusRecord>> {
    let field = tower.top();
    let curves = match mode {
        CensusMode::Exhaustive => exhaustive(field, limits)?,
        CensusMode::Constructive => {
            let cands: Vec<UniPoly> = constructive_candidates(tower)?.into_iter().map(UniPoly::from_coeffs).collect();
            let pairs: Vec<(u64, &UniPoly)> = exponents(field, limits)
                .into_iter()
                .flat_map(|n| cands.iter().map(move |f| (n, f)))
                .filter(|(_, f)| limits.max_degree.map_or(true, |m| f.deg0() <= m))
                .collect();
            let cap = desk_cap(limits.cap);
            if pairs.len() as u64 > cap {
                return Err(Error::TooLarge { what: "constructive census", size: pairs.len() as u128, cap: cap as u128 });
            }
            pairs.into_par_iter().filter_map(|(n, f)| hit(field, n, f)).collect()
        }
    };
    let mut records: Vec<CensusRecord> = curves.into_par_iter().map(|c| record(field, c)).collect::<Result<_>>()?;
    records.sort_by(|a, b| (a.n, a.f.deg0(), a.f.coeffs()).cmp(&(b.n, b.f.deg0(), b.f.coeffs())));
    Ok(records)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialHit {
    pub n: u64,
    pub d: u64,
    pub a: Elem,
    pub b: Elem,
}

/// All `y^n = a·x^d + b` with `a, b ≠ 0`, `n | q − 1`, `d < q`, passing `garcia_test`.
pub fn binomial_census(field: &GaloisField) -> Vec<BinomialHit> {
    let q = field.order();
    let jobs: Vec<(u64, u64)> =
        (1..q).filter(|n| (q - 1) % n == 0).flat_map(|n| (1..q).map(move |d| (n, d))).collect();
    jobs.into_par_iter()
        .flat_map_iter(|(n, d)| {
            let mut hits = Vec::new();
            for a in field.nonzero_elements() {
                for b in field.nonzero_elements() {
                    let f = UniPoly::from_coeffs({
                        let mut v = vec![Elem::ZERO; d as usize + 1];
                        v[0] = b;
                        v[d as usize] = a;
                        v
                    });
                    if let Ok(c) = SuperCurve::new(field, n, f) {
                        if garcia_test(field, &c) {
                            hits.push(BinomialHit { n, d, a, b });
                        }
                    }
                }
            }
            hits
        })
        .collect()
}
