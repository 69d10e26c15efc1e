//! Point counts, bounds, arcs, nonclassical-curve censuses and the
//! verification suite that ties the library's claims together.

mod arc;
mod points;
mod run;
mod suite;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{prime_factors, GaloisField};
use crate::superelliptic::{garcia_test, kummer_genus, kummer_irreducible, smooth_plane, Irreducibility, SuperCurve};

pub use arc::{arc_completeness, ArcReport};
pub use points::{
    count_points_affine, count_points_at_infinity, count_points_projective, count_points_separated, normalize,
    pg2_index, pg2_point, projective_points, Point, POINT_CAP,
};
pub use run::{
    binomial_census, census_superelliptic, BinomialHit, CensusLimits, CensusMode, CensusRecord, CENSUS_CAP,
};
pub use suite::{verify_paper_suite, SuiteConfig, SuiteItem, SuiteReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveStats {
    #[serde(rename = "N")]
    pub n_points: u64,
    pub d: u64,
    pub genus: Option<u64>,
    pub nu: Option<u64>,
    pub sv_bound_value: Option<i64>,
    pub hv_value: i64,
    pub smooth_plane: Option<bool>,
}

/// `⌊(ν(2g − 2) + (q + 2)d) / 2⌋`, with `ν` either 1 or a power of the characteristic.
pub fn sv_bound(d: u64, genus: u64, q: u64, nu: u64) -> Result<i64> {
    let p = prime_factors(q).first().copied().unwrap_or(0);
    let mut ok = nu == 1;
    if !ok && p > 1 {
        let mut t = nu;
        while t > 1 && t % p == 0 {
            t /= p;
        }
        ok = t == 1 && nu > 1;
    }
    if !ok {
        return Err(Error::BadNu(nu));
    }
    let num = nu as i128 * (2 * genus as i128 - 2) + (q as i128 + 2) * d as i128;
    Ok(num.div_euclid(2) as i64)
}

/// `d(q − d + 2)`.
pub fn hv_value(d: u64, q: u64) -> i64 {
    d as i64 * (q as i64 - d as i64 + 2)
}

/// Point count, plane degree, genus when defined, and bound values for `y^n = f(x)`.
pub fn super_stats(field: &GaloisField, c: &SuperCurve, nu: Option<u64>) -> Result<CurveStats> {
    let q = field.order();
    let sep = c.as_sep(field)?;
    let n_points = count_points_separated(field, sep.f(), sep.g());
    let d = c.n().max(c.d() as u64);
    let genus = match kummer_genus(field, c) {
        Ok(g) => Some(g.genus),
        Err(Error::CharDividesN) | Err(Error::Reducible) => None,
        Err(e) => return Err(e),
    };
    let smooth = if c.n() % field.characteristic() != 0 { Some(smooth_plane(field, c)?) } else { None };
    let sv_bound_value = match (genus, nu) {
        (Some(g), Some(nu)) => Some(sv_bound(d, g, q, nu)?),
        _ => None,
    };
    Ok(CurveStats { n_points, d, genus, nu, sv_bound_value, hv_value: hv_value(c.n(), q), smooth_plane: smooth })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HvhReport {
    #[serde(rename = "N")]
    pub n_points: u64,
    /// `n(q − n + 2)`.
    pub bound: i64,
    pub smooth_plane: bool,
    /// `N ≥ bound`, with equality exactly for smooth plane models.
    pub holds: bool,
}

pub fn hvh_check(field: &GaloisField, c: &SuperCurve) -> Result<HvhReport> {
    if !garcia_test(field, c) {
        return Err(Error::PreconditionFailed("garcia_test does not hold".into()));
    }
    if kummer_irreducible(field, c)? != Irreducibility::AbsIrreducible {
        return Err(Error::PreconditionFailed("curve not known to be absolutely irreducible".into()));
    }
    let sep = c.as_sep(field)?;
    let n_points = count_points_separated(field, sep.f(), sep.g());
    let bound = hv_value(c.n(), field.order());
    let smooth = smooth_plane(field, c)?;
    let holds = n_points as i64 >= bound && ((n_points as i64 == bound) == smooth);
    Ok(HvhReport { n_points, bound, smooth_plane: smooth, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldTower;
    use crate::poly::parse_unipoly;

    #[test]
    fn sv_examples() {
        assert_eq!(sv_bound(62, 1830, 125, 1).unwrap(), 5766);
        assert_eq!(sv_bound(3, 1, 4, 2).unwrap(), 9);
        assert_eq!(sv_bound(1, 0, 7, 1).unwrap(), 3);
        assert_eq!(sv_bound(3, 1, 4, 3), Err(Error::BadNu(3)));
        assert_eq!(sv_bound(3, 1, 9, 9).unwrap(), 16);
    }

    #[test]
    fn hermitian_stats() {
        let t = FieldTower::build(2, 1, 2).unwrap();
        let c = SuperCurve::new(t.top(), 3, parse_unipoly(t.top(), "x^2+x").unwrap()).unwrap();
        let s = super_stats(t.top(), &c, Some(2)).unwrap();
        assert_eq!((s.n_points, s.d, s.genus, s.sv_bound_value, s.hv_value), (9, 3, Some(1), Some(9), 9));
        let h = hvh_check(t.top(), &c).unwrap();
        assert!(h.holds && h.smooth_plane);
    }
}
