//! Minimal value set polynomials.
//!
//! Every function here treats its polynomial as living over the field it is
//! handed, so `x^q − x` always means `q = |F|`.

mod structure;
mod twovalue;
mod w;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, GaloisField};
use crate::poly::{PolyRing, UniPoly, DEFAULT_ROOT_CAP};

pub use structure::{mills_structure, MillsStructure, COND_A, COND_B, COND_C, COND_D};
pub use twovalue::{
    is_type_a, is_type_b, lagrange_two_value, theta_of_type, two_value_split, type_a_enumerate,
    vf1_decompose, TypeAMember,
};
pub use w::{span_rank, trace_image, w_basis, w_enumerate, w_membership, w_span, W_ENUM_CAP};

/// `(T, θ)` with `T(F) = θ·(x^q − x)·F'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MillsCertificate {
    pub t: UniPoly,
    pub theta: Option<Elem>,
    pub holds: bool,
}

/// `T = Π_{γ ∈ V}(x − γ)`.
pub fn value_polynomial(field: &GaloisField, values: &[Elem]) -> UniPoly {
    let ring = PolyRing::new(field);
    values.iter().fold(UniPoly::one(), |acc, &g| ring.mul(&acc, &ring.linear(g)))
}

pub fn is_mvsp(field: &GaloisField, f: &UniPoly) -> Result<bool> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    Ok(PolyRing::new(field).value_set(f).is_mvsp == Some(true))
}

/// Checks `T(F) = θ(x^q − x)F'` with `T` built from the value set and `θ`
/// read off the leading coefficients.
pub fn mills_criterion(field: &GaloisField, f: &UniPoly) -> Result<MillsCertificate> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let ring = PolyRing::new(field);
    let vs = ring.value_set(f);
    let t = value_polynomial(field, &vs.values);
    let theta = solve_theta(field, &t, f);
    Ok(MillsCertificate { t, holds: theta.is_some(), theta })
}

/// The unique `θ` with `T(F) = θ(x^q − x)F'`, if the identity holds at all.
pub fn solve_theta(field: &GaloisField, t: &UniPoly, f: &UniPoly) -> Option<Elem> {
    let ring = PolyRing::new(field);
    let df = ring.derivative(f);
    if df.is_zero() {
        return None;
    }
    let lhs = ring.compose(t, f);
    let rhs = ring.mul(&ring.x_q_minus_x(), &df);
    if lhs.degree() != rhs.degree() {
        return None;
    }
    let theta = field.div(lhs.lc(), rhs.lc()).ok()?;
    (ring.scale(theta, &rhs) == lhs).then_some(theta)
}

/// `θ` with `T(F) = θ(x^q − x)F'` for a given `T`, also checking `θ ≠ 0`.
pub fn identity_holds(field: &GaloisField, t: &UniPoly, f: &UniPoly, theta: Elem) -> bool {
    let ring = PolyRing::new(field);
    !theta.is_zero()
        && ring.compose(t, f) == ring.scale(theta, &ring.mul(&ring.x_q_minus_x(), &ring.derivative(f)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootObservation {
    pub gamma: Elem,
    pub root: Elem,
    pub ext_degree: usize,
    pub multiplicity: usize,
    pub rational: bool,
}

/// Consistency checks that must hold whenever the Mills identity does.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityReport {
    pub theta: Elem,
    /// Values ordered so that `γ_0` minimizes `deg gcd(F − γ, x^q − x)`.
    pub gamma: Vec<Elem>,
    pub roots: Vec<RootObservation>,
    /// Non-rational roots of every `F − γ_i` have multiplicity divisible by `p`.
    pub nonrational_divisible: bool,
    /// Each rational root of `F − γ_i` with multiplicity `k` has `T'(γ_i) = −θk`.
    pub rational_slope: bool,
    /// `F' ≠ 0` and, when `r > 0`, some `γ_i` has `T'(γ_i) = −θ`.
    pub slope_exists: bool,
    /// When `r > 0`: `F'' = 0` iff `T'` is constant.
    pub second_derivative: bool,
    /// `r > 1` only: rational multiplicities of `F − γ_i` (`i ≥ 1`) are `1 mod p`.
    pub non_minimal_one_mod_p: Option<bool>,
    /// `r > 1` only: `T'(γ_i) = −θ` for every `i ≥ 1`.
    pub non_minimal_slope: Option<bool>,
}

impl MultiplicityReport {
    pub fn all_pass(&self) -> bool {
        self.nonrational_divisible
            && self.rational_slope
            && self.slope_exists
            && self.second_derivative
            && self.non_minimal_one_mod_p.unwrap_or(true)
            && self.non_minimal_slope.unwrap_or(true)
    }
}

/// Value set ordered by `deg gcd(F − γ, x^q − x)`, ties by packed value, with those degrees.
pub fn ordered_values(field: &GaloisField, f: &UniPoly) -> Result<Vec<(Elem, UniPoly)>> {
    let ring = PolyRing::new(field);
    let xq = ring.x_q_minus_x();
    let mut out = Vec::new();
    for g in ring.value_set(f).values {
        let l = ring.gcd(&ring.add_const(f, field.neg(g)), &xq)?;
        out.push((g, l));
    }
    out.sort_by_key(|(g, l)| (l.deg0(), *g));
    Ok(out)
}

pub fn lemma_multiplicity_report(field: &GaloisField, f: &UniPoly) -> Result<MultiplicityReport> {
    let cert = mills_criterion(field, f)?;
    let theta = match (cert.holds, cert.theta) {
        (true, Some(t)) => t,
        _ => return Err(Error::PreconditionFailed("Mills identity does not hold".into())),
    };
    let ring = PolyRing::new(field);
    let p = field.characteristic();
    let dt = ring.derivative(&cert.t);
    let neg_theta = field.neg(theta);
    let ordered = ordered_values(field, f)?;
    let gamma: Vec<Elem> = ordered.iter().map(|(g, _)| *g).collect();
    let r = gamma.len() - 1;

    let mut roots = Vec::new();
    let mut nonrational_divisible = true;
    let mut rational_slope = true;
    let mut one_mod_p = true;
    for (i, &g) in gamma.iter().enumerate() {
        let prof = ring.root_multiplicities(&ring.add_const(f, field.neg(g)), DEFAULT_ROOT_CAP)?;
        let slope = ring.eval(&dt, g);
        for e in &prof.entries {
            if e.rational {
                let k = field.scalar((e.multiplicity as u64 % p) as i64);
                rational_slope &= slope == field.mul(neg_theta, k);
                if i > 0 {
                    one_mod_p &= e.multiplicity as u64 % p == 1;
                }
            } else {
                nonrational_divisible &= e.multiplicity as u64 % p == 0;
            }
            roots.push(RootObservation {
                gamma: g,
                root: e.root,
                ext_degree: e.ext_degree,
                multiplicity: e.multiplicity,
                rational: e.rational,
            });
        }
    }
    let df = ring.derivative(f);
    let slope_exists = !df.is_zero() && (r == 0 || gamma.iter().any(|&g| ring.eval(&dt, g) == neg_theta));
    let second_derivative = r == 0 || (ring.derivative(&df).is_zero() == dt.is_constant());
    let non_minimal_slope = gamma[1..].iter().all(|&g| ring.eval(&dt, g) == neg_theta);
    Ok(MultiplicityReport {
        theta,
        gamma,
        roots,
        nonrational_divisible,
        rational_slope,
        slope_exists,
        second_derivative,
        non_minimal_one_mod_p: (r > 1).then_some(one_mod_p),
        non_minimal_slope: (r > 1).then_some(non_minimal_slope),
    })
}

/// First `(a, b)` (a outer, ascending packed order) with `g = f(ax + b)`.
pub fn affine_equivalent(field: &GaloisField, f: &UniPoly, g: &UniPoly) -> Option<(Elem, Elem)> {
    if f.degree() != g.degree() {
        return None;
    }
    let ring = PolyRing::new(field);
    let d = f.deg0() as u64;
    for a in field.nonzero_elements() {
        if field.mul(f.lc(), field.pow(a, d)) != g.lc() {
            continue;
        }
        for b in field.elements() {
            let sub = UniPoly::from_coeffs(vec![b, a]);
            if ring.compose(f, &sub) == *g {
                return Some((a, b));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldTower;

    fn p(c: &[u64]) -> UniPoly {
        UniPoly::from_u64s(c)
    }

    #[test]
    fn is_mvsp_examples() {
        let f5 = GaloisField::prime(5).unwrap();
        assert!(is_mvsp(&f5, &UniPoly::x()).unwrap());
        assert!(is_mvsp(&f5, &p(&[0, 0, 1])).unwrap());
        assert!(is_mvsp(&f5, &p(&[0, 1, 1])).unwrap());
        assert_eq!(is_mvsp(&f5, &p(&[3])), Err(Error::ConstantInput));
    }

    #[test]
    fn mills_examples() {
        let t = FieldTower::build(2, 1, 2).unwrap();
        let c = mills_criterion(t.top(), &p(&[0, 1, 1])).unwrap();
        assert_eq!((c.t, c.theta, c.holds), (p(&[0, 1, 1]), Some(Elem::ONE), true));
        let f3 = GaloisField::prime(3).unwrap();
        let c = mills_criterion(&f3, &p(&[0, 0, 2, 0, 1])).unwrap();
        assert!(!c.holds);
        let f7 = GaloisField::prime(7).unwrap();
        let c = mills_criterion(&f7, &UniPoly::x()).unwrap();
        assert_eq!(c.theta, Some(Elem::ONE));
        assert_eq!(c.t, PolyRing::new(&f7).x_q_minus_x());
    }

    #[test]
    fn lemma_report_hermitian_and_norm() {
        let t = FieldTower::build(2, 1, 2).unwrap();
        let rep = lemma_multiplicity_report(t.top(), &p(&[0, 1, 1])).unwrap();
        assert!(rep.all_pass());
        assert_eq!(rep.theta, Elem::ONE);
        // x^{q+1} over F_{q^2}, q = 3: root 0 of multiplicity 4
        let t = FieldTower::build(3, 1, 2).unwrap();
        let rep = lemma_multiplicity_report(t.top(), &UniPoly::monomial(Elem::ONE, 4)).unwrap();
        assert!(rep.all_pass(), "{rep:?}");
        let zero = rep.roots.iter().find(|r| r.gamma == Elem::ZERO).unwrap();
        assert_eq!(zero.multiplicity, 4);
    }

    #[test]
    fn affine_equivalence_examples() {
        let f5 = GaloisField::prime(5).unwrap();
        let f = p(&[0, 0, 1]);
        assert_eq!(affine_equivalent(&f5, &f, &f), Some((Elem(1), Elem(0))));
        assert_eq!(affine_equivalent(&f5, &f, &p(&[1, 2, 1])), Some((Elem(1), Elem(1))));
        assert_eq!(affine_equivalent(&f5, &f, &p(&[0, 0, 0, 1])), None);
    }
}
