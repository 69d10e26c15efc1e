//! Rational points on plane projective closures.

use crate::bipoly::{BiPoly, BiRing};
use crate::error::{Error, Result};
use crate::field::{desk_cap, Elem, GaloisField};
use crate::poly::{PolyRing, UniPoly};

/// Default bound on `q^2 + q + 1` for point scans.
pub const POINT_CAP: u64 = 1 << 22;

pub type Point = [Elem; 3];

pub(crate) fn plane_size(field: &GaloisField) -> Result<u64> {
    let q = field.order() as u128;
    let size = q * q + q + 1;
    let cap = desk_cap(POINT_CAP) as u128;
    if size > cap {
        return Err(Error::TooLarge { what: "PG(2,q)", size, cap });
    }
    Ok(size as u64)
}

/// Canonical representatives `(1:y:z)`, `(0:1:z)`, `(0:0:1)` in index order.
pub fn pg2_point(q: u64, idx: u64) -> Point {
    if idx < q * q {
        [Elem::ONE, Elem(idx / q), Elem(idx % q)]
    } else if idx < q * q + q {
        [Elem::ZERO, Elem::ONE, Elem(idx - q * q)]
    } else {
        [Elem::ZERO, Elem::ZERO, Elem::ONE]
    }
}

/// Scales a nonzero triple so its first nonzero coordinate is 1.
pub fn normalize(field: &GaloisField, p: Point) -> Option<Point> {
    let lead = p.iter().copied().find(|c| !c.is_zero())?;
    let inv = field.inv(lead).ok()?;
    Some(p.map(|c| field.mul(c, inv)))
}

/// Position of a normalized point in [`pg2_point`] order.
pub fn pg2_index(q: u64, p: &Point) -> u64 {
    if p[0] == Elem::ONE {
        p[1].0 * q + p[2].0
    } else if p[1] == Elem::ONE {
        q * q + p[2].0
    } else {
        q * q + q
    }
}

/// Every point of the closure of `F = 0`, in canonical order.
pub fn projective_points(field: &GaloisField, f: &BiPoly) -> Result<Vec<Point>> {
    let size = plane_size(field)?;
    let q = field.order();
    let ring = BiRing::new(field);
    let d = f.total_degree().unwrap_or(0);
    Ok((0..size)
        .map(|i| pg2_point(q, i))
        .filter(|p| ring.eval_homogeneous(f, d, p[0], p[1], p[2]).is_zero())
        .collect())
}

pub fn count_points_projective(field: &GaloisField, f: &BiPoly) -> Result<u64> {
    Ok(projective_points(field, f)?.len() as u64)
}

/// Affine zeros, scanning `x` and evaluating the `y`-coefficients once per `x`.
pub fn count_points_affine(field: &GaloisField, f: &BiPoly) -> u64 {
    let ring = PolyRing::new(field);
    let rows = f.y_coeffs();
    let mut n = 0;
    for x in field.elements() {
        let g = UniPoly::from_coeffs(rows.iter().map(|r| ring.eval(r, x)).collect());
        if g.is_zero() {
            n += field.order();
        } else {
            n += field.elements().filter(|&y| ring.eval(&g, y).is_zero()).count() as u64;
        }
    }
    n
}

/// Zeros of the top-degree form on the line `z = 0`.
pub fn count_points_at_infinity(field: &GaloisField, f: &BiPoly) -> u64 {
    let ring = BiRing::new(field);
    let top = ring.top_form(f);
    let d = top.total_degree().unwrap_or(0);
    let finite = field
        .elements()
        .filter(|&y| ring.eval_homogeneous(&top, d, Elem::ONE, y, Elem::ZERO).is_zero())
        .count() as u64;
    finite + ring.eval_homogeneous(&top, d, Elem::ZERO, Elem::ONE, Elem::ZERO).is_zero() as u64
}

/// `f(x) = g(y)` counted through value histograms, plus the points at infinity.
pub fn count_points_separated(field: &GaloisField, f: &UniPoly, g: &UniPoly) -> u64 {
    let ring = PolyRing::new(field);
    let q = field.order() as usize;
    let mut hist = vec![0u64; q];
    for y in field.elements() {
        hist[ring.eval(g, y).0 as usize] += 1;
    }
    let affine: u64 = field.elements().map(|x| hist[ring.eval(f, x).0 as usize]).sum();
    affine + count_points_at_infinity(field, &BiRing::new(field).separated(f, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldTower;
    use crate::poly::parse_bipoly;

    #[test]
    fn index_round_trip() {
        let q = 5;
        for i in 0..q * q + q + 1 {
            assert_eq!(pg2_index(q, &pg2_point(q, i)), i);
        }
    }

    #[test]
    fn hermitian_and_gs() {
        let f4 = FieldTower::build(2, 1, 2).unwrap();
        let h = parse_bipoly(f4.top(), "y^3 - x^2 - x").unwrap();
        assert_eq!(count_points_projective(f4.top(), &h).unwrap(), 9);
        let f8 = FieldTower::build(2, 1, 3).unwrap();
        let gs = parse_bipoly(f8.top(), "y^4+y^2+y - x^3 - x^5 - x^6").unwrap();
        assert_eq!(count_points_projective(f8.top(), &gs).unwrap(), 33);
        assert_eq!(count_points_affine(f8.top(), &gs) + count_points_at_infinity(f8.top(), &gs), 33);
    }

    #[test]
    fn line_and_conic() {
        let f7 = GaloisField::prime(7).unwrap();
        let line = parse_bipoly(&f7, "x + 2y + 3").unwrap();
        assert_eq!(count_points_projective(&f7, &line).unwrap(), 8);
        let conic = parse_bipoly(&f7, "x^2 + y^2 - 1").unwrap();
        assert_eq!(count_points_projective(&f7, &conic).unwrap(), 8);
    }
}
