//! `(N, d)`-arcs in `PG(2, q)`.

use serde::{Deserialize, Serialize};

use super::points::{normalize, pg2_index, pg2_point, plane_size, Point};
use crate::error::{Error, Result};
use crate::field::{Elem, GaloisField};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcReport {
    pub points: Vec<Point>,
    pub d: u64,
    /// At most `d` points on every line and exactly `d` on some line.
    pub is_arc: bool,
    /// No point outside the set can be added without putting `d + 1` points on a line.
    pub is_complete: bool,
    pub witness: Option<Point>,
    /// `Σ_lines |line ∩ points|`.
    pub incidences: u64,
    pub max_line: u64,
}

fn dot(field: &GaloisField, a: &Point, b: &Point) -> Elem {
    (0..3).fold(Elem::ZERO, |acc, i| field.add(acc, field.mul(a[i], b[i])))
}

/// The `q + 1` lines through `p`, as indices into the dual plane.
fn lines_through(field: &GaloisField, p: &Point) -> Vec<u64> {
    let q = field.order();
    // two independent solutions of a·p = 0
    let basis: [Point; 2] = if !p[0].is_zero() {
        let inv = field.inv(p[0]).expect("nonzero");
        [
            [field.neg(field.mul(p[1], inv)), Elem::ONE, Elem::ZERO],
            [field.neg(field.mul(p[2], inv)), Elem::ZERO, Elem::ONE],
        ]
    } else if !p[1].is_zero() {
        let inv = field.inv(p[1]).expect("nonzero");
        [[Elem::ONE, Elem::ZERO, Elem::ZERO], [Elem::ZERO, field.neg(field.mul(p[2], inv)), Elem::ONE]]
    } else {
        [[Elem::ONE, Elem::ZERO, Elem::ZERO], [Elem::ZERO, Elem::ONE, Elem::ZERO]]
    };
    let comb = |s: Elem, t: Elem| -> Point {
        [0, 1, 2].map(|i| field.add(field.mul(s, basis[0][i]), field.mul(t, basis[1][i])))
    };
    let mut out: Vec<u64> = field
        .elements()
        .map(|t| comb(Elem::ONE, t))
        .chain(std::iter::once(comb(Elem::ZERO, Elem::ONE)))
        .map(|l| pg2_index(q, &normalize(field, l).expect("independent basis")))
        .collect();
    out.sort_unstable();
    out
}

pub fn arc_completeness(field: &GaloisField, points: &[Point], d: u64) -> Result<ArcReport> {
    let size = plane_size(field)?;
    let q = field.order();
    let mut member = vec![false; size as usize];
    let mut pts = Vec::with_capacity(points.len());
    for p in points {
        for c in p {
            field.check(*c)?;
        }
        let np = normalize(field, *p).ok_or_else(|| Error::PreconditionFailed("zero triple".into()))?;
        let idx = pg2_index(q, &np) as usize;
        if member[idx] {
            return Err(Error::PreconditionFailed(format!("repeated point {np:?}")));
        }
        member[idx] = true;
        pts.push(np);
    }
    pts.sort_by_key(|p| pg2_index(q, p));

    let mut line_count = vec![0u64; size as usize];
    for p in &pts {
        for l in lines_through(field, p) {
            line_count[l as usize] += 1;
        }
    }
    debug_assert!(pts.iter().all(|p| {
        lines_through(field, p).iter().all(|&l| dot(field, &pg2_point(q, l), p).is_zero())
    }));
    let incidences: u64 = line_count.iter().sum();
    let max_line = line_count.iter().copied().max().unwrap_or(0);
    let is_arc = max_line == d && !pts.is_empty();
    let witness = (0..size).filter(|&i| !member[i as usize]).map(|i| pg2_point(q, i)).find(|p| {
        lines_through(field, p).iter().all(|&l| line_count[l as usize] < d)
    });
    Ok(ArcReport { points: pts, d, is_arc, is_complete: witness.is_none(), witness, incidences, max_line })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_line() {
        let f5 = GaloisField::prime(5).unwrap();
        // z = 0
        let pts: Vec<Point> = (0..31).map(|i| pg2_point(5, i)).filter(|p| p[2].is_zero()).collect();
        assert_eq!(pts.len(), 6);
        let r = arc_completeness(&f5, &pts, 6).unwrap();
        assert!(r.is_arc && !r.is_complete);
        assert_eq!(r.incidences, 6 * 6);
    }

    #[test]
    fn empty_and_repeats() {
        let f3 = GaloisField::prime(3).unwrap();
        let r = arc_completeness(&f3, &[], 2).unwrap();
        assert!(!r.is_arc && r.witness.is_some());
        let p = pg2_point(3, 4);
        assert!(arc_completeness(&f3, &[p, p], 2).is_err());
    }

    #[test]
    fn conic_is_complete_oval() {
        // an irreducible conic over F_q, q odd, is a complete (q+1, 2)-arc
        let f5 = GaloisField::prime(5).unwrap();
        let pts: Vec<Point> = (0..31)
            .map(|i| pg2_point(5, i))
            .filter(|p| {
                let v = f5.sub(f5.add(f5.mul(p[0], p[0]), f5.mul(p[1], p[1])), f5.mul(p[2], p[2]));
                v.is_zero()
            })
            .collect();
        assert_eq!(pts.len(), 6);
        let r = arc_completeness(&f5, &pts, 2).unwrap();
        assert!(r.is_arc && r.is_complete, "{r:?}");
    }
}
