//! Curves `y^n = f(x)`: the closed-form Frobenius nonclassicality test, degree
//! reduction by a projective change of coordinates, the consequences every
//! nonclassical `f` must satisfy, the Kummer genus, and irreducibility verdicts.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, GaloisField};
use crate::poly::{gcd_u64, PolyRing, UniPoly};
use crate::sepcurves::SepCurve;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperCurve {
    n: u64,
    f: UniPoly,
}

impl SuperCurve {
    pub fn new(field: &GaloisField, n: u64, f: UniPoly) -> Result<SuperCurve> {
        let ring = PolyRing::new(field);
        ring.check(&f)?;
        if n == 0 {
            return Err(Error::InvalidCurve("n must be positive".into()));
        }
        if f.is_constant() {
            return Err(Error::InvalidCurve("f must be nonconstant".into()));
        }
        if n % field.characteristic() == 0 && ring.derivative(&f).is_zero() {
            return Err(Error::InvalidCurve("y^n - f(x) lies in F[x^p, y^p]".into()));
        }
        Ok(SuperCurve { n, f })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn f(&self) -> &UniPoly {
        &self.f
    }

    pub fn d(&self) -> usize {
        self.f.deg0()
    }

    /// `f(x) = y^n` as a separated curve.
    pub fn as_sep(&self, field: &GaloisField) -> Result<SepCurve> {
        SepCurve::new(field, self.f.clone(), UniPoly::monomial(Elem::ONE, self.n as usize))
    }
}

/// `n | q − 1` and `n·f·(f^{(q−1)/n} − 1) = (x^q − x)·f'`.
pub fn garcia_test(field: &GaloisField, c: &SuperCurve) -> bool {
    let q = field.order();
    let n = c.n;
    if (q - 1) % n != 0 {
        return false;
    }
    let ring = PolyRing::new(field);
    let df = ring.derivative(&c.f);
    if df.is_zero() {
        return false;
    }
    // compare degrees before expanding the power
    let e = (q - 1) / n;
    if c.d() as u64 * (e + 1) != q + df.deg0() as u64 {
        return false;
    }
    let nf = ring.scale(field.scalar((n % field.characteristic()) as i64), &c.f);
    let lhs = ring.mul(&nf, &ring.add_const(&ring.pow(&c.f, e), field.neg(Elem::ONE)));
    lhs == ring.mul(&ring.x_q_minus_x(), &df)
}

/// Moves the root `x0` (of multiplicity `k ≥ 0`) to the origin, homogenizes
/// to degree `n`, swaps `x` and `z`, and dehomogenizes: the result has degree `n − k`.
pub fn reduce_degree(field: &GaloisField, c: &SuperCurve, x0: Elem) -> Result<SuperCurve> {
    if field.check(x0).is_err() {
        return Err(Error::NotARootProfile(x0.0));
    }
    if c.d() as u64 > c.n {
        return Err(Error::DegreeTooHigh { deg: c.d(), n: c.n });
    }
    let ring = PolyRing::new(field);
    let h = ring.compose(&c.f, &UniPoly::from_coeffs(vec![x0, Elem::ONE]));
    let n = c.n as usize;
    let mut g = vec![Elem::ZERO; n + 1];
    for i in h.support() {
        g[n - i] = h.coeff(i);
    }
    SuperCurve::new(field, c.n, UniPoly::from_coeffs(g))
}

/// The six consequences of `garcia_test` holding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryReport {
    /// `p ∤ n` and `f' ≠ 0`.
    pub i: bool,
    /// `nq/(n+q−1) ≤ deg f ≤ n`, upper bound attained iff `p ∤ deg f`,
    /// lower bound attained iff `f'` is constant.
    pub ii: bool,
    /// A root is in `F_q` iff `p` does not divide its multiplicity.
    pub iii: bool,
    /// `f` has an `F_q`-root; a simple root forces `n ≡ 1 mod p`.
    pub iv: bool,
    /// `n ≡ 1 mod p` iff `f'' = 0`.
    pub v: bool,
    /// An `F_q`-root of multiplicity `0 < k < deg f` has `k ≤ (n−1)/|V_f|` and `k ≡ n mod p`.
    pub vi: bool,
}

impl CorollaryReport {
    pub fn all_pass(&self) -> bool {
        self.i && self.ii && self.iii && self.iv && self.v && self.vi
    }
}

pub fn corollary_checks(field: &GaloisField, c: &SuperCurve) -> Result<CorollaryReport> {
    if !garcia_test(field, c) {
        return Err(Error::PreconditionFailed("garcia_test does not hold".into()));
    }
    let ring = PolyRing::new(field);
    let (p, q, n) = (field.characteristic(), field.order(), c.n);
    let f = &c.f;
    let d = c.d() as u64;
    let df = ring.derivative(f);
    let xq = ring.x_q_minus_x();

    let i = n % p != 0 && !df.is_zero();

    let lower_ok = d * (n + q - 1) >= n * q;
    let lower_attained = d * (n + q - 1) == n * q;
    let ii = lower_ok && d <= n && ((d == n) == (d % p != 0)) && (lower_attained == df.is_constant());

    let classes = ring.squarefree_decomposition(f)?;
    let mut iii = true;
    for (h, k) in &classes {
        let rational_part = ring.gcd(h, &xq)?;
        iii &= if *k as u64 % p == 0 { rational_part.is_one() } else { rational_part == *h };
    }

    let has_root = !ring.gcd(f, &xq)?.is_one();
    let has_simple = classes.iter().any(|(_, k)| *k == 1);
    let iv = has_root && (!has_simple || n % p == 1 % p);

    let v = (n % p == 1 % p) == ring.derivative(&df).is_zero();

    let vf = ring.value_set(f).size as u64;
    let mut vi = true;
    for a in ring.rational_roots(f) {
        let (k, _) = ring.strip_power(f, &ring.linear(a));
        let k = k as u64;
        if k > 0 && k < d {
            vi &= k * vf <= n - 1 && k % p == n % p;
        }
    }
    Ok(CorollaryReport { i, ii, iii, iv, v, vi })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Place {
    /// `count` conjugate roots of `f` sharing one multiplicity.
    Finite,
    Infinity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ramification {
    pub place: Place,
    /// Number of places of `F(x)` (over the algebraic closure) in this class.
    pub count: usize,
    /// Valuation of `f`, reduced mod `n` at infinity.
    pub valuation: u64,
    /// `gcd(n, valuation)`: the number of places above each.
    pub gcd: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusReport {
    pub genus: u64,
    pub ramification: Vec<Ramification>,
    pub smooth_plane: bool,
}

/// Plane smoothness of the closure of `y^n = f(x)`, for `p ∤ n`.
pub fn smooth_plane(field: &GaloisField, c: &SuperCurve) -> Result<bool> {
    let ring = PolyRing::new(field);
    let (n, d) = (c.n, c.d() as u64);
    let affine = n == 1 || ring.gcd(&c.f, &ring.derivative(&c.f))?.is_constant();
    Ok(affine && d + 1 >= n && d <= n + 1)
}

/// Genus of `y^n = f(x)` from the ramification of the Kummer cover of the `x`-line.
pub fn kummer_genus(field: &GaloisField, c: &SuperCurve) -> Result<GenusReport> {
    let n = c.n;
    if n % field.characteristic() == 0 {
        return Err(Error::CharDividesN);
    }
    let ring = PolyRing::new(field);
    let classes = ring.squarefree_decomposition(&c.f)?;
    let total_gcd = classes.iter().fold(n, |g, (_, k)| gcd_u64(g, *k as u64));
    if total_gcd > 1 {
        return Err(Error::Reducible);
    }
    let mut ramification: Vec<Ramification> = classes
        .iter()
        .map(|(h, k)| Ramification {
            place: Place::Finite,
            count: h.deg0(),
            valuation: *k as u64,
            gcd: gcd_u64(n, *k as u64),
        })
        .collect();
    let v_inf = (n - c.d() as u64 % n) % n;
    ramification.push(Ramification { place: Place::Infinity, count: 1, valuation: v_inf, gcd: gcd_u64(n, v_inf) });

    // 2g − 2 = −2n + Σ count·(n − gcd)
    let sum: u64 = ramification.iter().map(|r| r.count as u64 * (n - r.gcd)).sum();
    let twice = sum as i128 - 2 * n as i128 + 2;
    debug_assert!(twice >= 0 && twice % 2 == 0);
    Ok(GenusReport { genus: (twice / 2) as u64, ramification, smooth_plane: smooth_plane(field, c)? })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Irreducibility {
    AbsIrreducible,
    RationalFactors,
    Unknown,
}

/// A point with `y ≠ 0` on `y^n = f(x)` over `F_q`, when `n | q − 1`.
pub fn has_point_off_axis(field: &GaloisField, c: &SuperCurve) -> bool {
    let ring = PolyRing::new(field);
    let e = (field.order() - 1) / gcd_u64(c.n, field.order() - 1);
    field.elements().any(|x| {
        let v = ring.eval(&c.f, x);
        !v.is_zero() && field.pow(v, e) == Elem::ONE
    })
}

pub fn kummer_irreducible(field: &GaloisField, c: &SuperCurve) -> Result<Irreducibility> {
    let ring = PolyRing::new(field);
    let classes = ring.squarefree_decomposition(&c.f)?;
    let g = classes.iter().fold(c.n, |g, (_, k)| gcd_u64(g, *k as u64));
    if g == 1 {
        return Ok(Irreducibility::AbsIrreducible);
    }
    if (field.order() - 1) % c.n == 0 && has_point_off_axis(field, c) {
        return Ok(Irreducibility::RationalFactors);
    }
    Ok(Irreducibility::Unknown)
}
