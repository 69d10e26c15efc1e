//! MVSPs with one or two values: the `−g'h` split, type A/B, and the
//! `(x^q − x)^n a(x)^p` form.

use serde::{Deserialize, Serialize};

use super::value_polynomial;
use crate::error::{Error, Result};
use crate::field::{Elem, GaloisField};
use crate::poly::{PolyRing, UniPoly};

/// Subset enumeration cap for [`type_a_enumerate`].
const SUBSET_CAP: u64 = 1 << 20;

fn check_subset(field: &GaloisField, s: &[Elem]) -> Result<Vec<Elem>> {
    let mut set = s.to_vec();
    set.sort();
    set.dedup();
    if set.len() != s.len() || set.is_empty() || set.len() as u64 >= field.order() {
        return Err(Error::BadSubset);
    }
    for a in &set {
        field.check(*a)?;
    }
    Ok(set)
}

/// `f = −g'h` with `g = Π_{a∈S}(x − a)` and `gh = x^q − x`; equals 1 exactly on `S`.
pub fn two_value_split(field: &GaloisField, s: &[Elem]) -> Result<UniPoly> {
    let s = check_subset(field, s)?;
    let ring = PolyRing::new(field);
    let g = value_polynomial(field, &s);
    let h = ring.exact_div(&ring.x_q_minus_x(), &g).expect("g divides x^q - x");
    Ok(ring.neg(&ring.mul(&ring.derivative(&g), &h)))
}

/// `Σ_{a∈S} (1 − (x − a)^{q−1})`.
pub fn lagrange_two_value(field: &GaloisField, s: &[Elem]) -> Result<UniPoly> {
    let s = check_subset(field, s)?;
    let ring = PolyRing::new(field);
    let q1 = field.order() - 1;
    Ok(s.iter().fold(UniPoly::zero(), |acc, &a| {
        let term = ring.sub(&UniPoly::one(), &ring.pow(&ring.linear(a), q1));
        ring.add(&acc, &term)
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeAMember {
    /// The roots of `g`.
    pub subset: Vec<Elem>,
    pub g: UniPoly,
    pub f: UniPoly,
}

/// All `(g'/g)(x − x^q)` with `g` a monic proper divisor of `x^q − x` and `g'' = 0`,
/// in ascending subset-bitmask order.
pub fn type_a_enumerate(field: &GaloisField) -> Result<Vec<TypeAMember>> {
    let q = field.order();
    if q >= 64 || (1u64 << q) > SUBSET_CAP {
        return Err(Error::TooLarge { what: "subsets of F_q", size: 1u128 << q.min(127), cap: SUBSET_CAP as u128 });
    }
    let ring = PolyRing::new(field);
    let mut out = Vec::new();
    for mask in 1u64..(1 << q) - 1 {
        let subset: Vec<Elem> = (0..q).filter(|i| mask >> i & 1 == 1).map(Elem).collect();
        let g = value_polynomial(field, &subset);
        if !ring.derivative(&ring.derivative(&g)).is_zero() {
            continue;
        }
        let f = two_value_split(field, &subset)?;
        out.push(TypeAMember { subset, g, f });
    }
    Ok(out)
}

/// The witness `g` when `f` is of type A.
pub fn is_type_a(field: &GaloisField, f: &UniPoly) -> Option<UniPoly> {
    let ring = PolyRing::new(field);
    let vs = ring.value_set(f);
    if vs.values != [Elem::ZERO, Elem::ONE] {
        return None;
    }
    let subset: Vec<Elem> = field.elements().filter(|&a| ring.eval(f, a) == Elem::ONE).collect();
    let g = value_polynomial(field, &subset);
    if !ring.derivative(&ring.derivative(&g)).is_zero() {
        return None;
    }
    (two_value_split(field, &subset).ok()? == *f).then_some(g)
}

/// The type-A witness of `1 − f`.
pub fn is_type_b(field: &GaloisField, f: &UniPoly) -> Option<UniPoly> {
    let ring = PolyRing::new(field);
    is_type_a(field, &ring.sub(&UniPoly::one(), f))
}

/// `θ ∈ {+1, −1}` with `f(f − 1) = θ(x^q − x)f'`, trying `+1` first.
pub fn theta_of_type(field: &GaloisField, f: &UniPoly) -> Result<Option<i8>> {
    let ring = PolyRing::new(field);
    let vs = ring.value_set(f);
    if vs.values != [Elem::ZERO, Elem::ONE] {
        return Err(Error::BadValueSet(format!(
            "expected {{0, 1}}, got {:?}",
            vs.values.iter().map(|v| v.0).collect::<Vec<_>>()
        )));
    }
    let lhs = ring.mul(f, &ring.add_const(f, field.neg(Elem::ONE)));
    let rhs = ring.mul(&ring.x_q_minus_x(), &ring.derivative(f));
    if lhs == rhs {
        Ok(Some(1))
    } else if lhs == ring.neg(&rhs) {
        Ok(Some(-1))
    } else {
        Ok(None)
    }
}

/// For `|V_f| = 1`: `(n, a)` with `f − α = (x^q − x)^n a^p` and `x^q − x ∤ a^p`.
pub fn vf1_decompose(field: &GaloisField, f: &UniPoly) -> Result<Option<(usize, UniPoly)>> {
    let ring = PolyRing::new(field);
    let vs = ring.value_set(f);
    if vs.size != 1 || f.is_constant() {
        return Err(Error::BadValueSet(format!("expected a single value, got {}", vs.size)));
    }
    let u = ring.add_const(f, field.neg(vs.values[0]));
    let (n, rest) = ring.strip_power(&u, &ring.x_q_minus_x());
    Ok(ring.pth_power_root(&rest).map(|a| (n, a)))
}
