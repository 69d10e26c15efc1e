//! Root extraction over bounded extensions: squarefree decomposition, then
//! distinct-degree factorization, then trace splitting inside the extension
//! where each factor's roots live.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{PolyRing, UniPoly};
use crate::error::{Error, Result};
use crate::field::{Elem, GaloisField};

/// Default extension-degree cap: `lcm(1, 2, 3, 4)`.
pub const DEFAULT_ROOT_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEntry {
    /// Packed element of the degree-`ext_degree` extension of the coefficient field.
    pub root: Elem,
    pub ext_degree: usize,
    pub multiplicity: usize,
    /// The root lies in the coefficient field itself.
    pub rational: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootProfile {
    pub constant: Elem,
    pub entries: Vec<RootEntry>,
}

impl RootProfile {
    /// Sum of multiplicities.
    pub fn degree(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn rational(&self) -> impl Iterator<Item = &RootEntry> {
        self.entries.iter().filter(|e| e.rational)
    }

    /// `constant · Π (x − root)^multiplicity`, computed inside each extension
    /// and pulled back to the coefficient field.
    pub fn reconstruct(&self, field: &GaloisField) -> Result<UniPoly> {
        let ring = PolyRing::new(field);
        let mut by_degree: BTreeMap<usize, Vec<&RootEntry>> = BTreeMap::new();
        for e in &self.entries {
            by_degree.entry(e.ext_degree).or_default().push(e);
        }
        let mut acc = UniPoly::constant(self.constant);
        for (m, group) in by_degree {
            let ext = if m == 1 { field.clone() } else { field.extension(m)? };
            let er = PolyRing::new(&ext);
            let mut part = UniPoly::one();
            for e in group {
                part = er.mul(&part, &er.pow(&er.linear(e.root), e.multiplicity as u64));
            }
            ring.check(&part)?;
            acc = ring.mul(&acc, &part);
        }
        Ok(acc)
    }
}

pub(super) fn root_multiplicities(ring: &PolyRing<'_>, f: &UniPoly, cap: usize) -> Result<RootProfile> {
    if f.is_zero() {
        return Err(Error::PreconditionFailed("zero polynomial has no root profile".into()));
    }
    let field = ring.field();
    let mut entries = Vec::new();
    let mut extensions: BTreeMap<usize, GaloisField> = BTreeMap::new();
    for (part, mult) in ring.squarefree_decomposition(f)? {
        for (block, m) in distinct_degree(ring, &part)? {
            if m > cap {
                return Err(Error::CapExceeded { degree: m, cap });
            }
            let roots = if m == 1 {
                split_linear(field, &block)
            } else {
                if !extensions.contains_key(&m) {
                    let ext = field.extension(m).map_err(|e| match e {
                        Error::TooLarge { .. } => Error::CapExceeded { degree: m, cap },
                        other => other,
                    })?;
                    extensions.insert(m, ext);
                }
                split_linear(&extensions[&m], &block)
            };
            entries.extend(roots.into_iter().map(|root| RootEntry {
                root,
                ext_degree: m,
                multiplicity: mult,
                rational: m == 1,
            }));
        }
    }
    entries.sort_by_key(|e| (e.ext_degree, e.root));
    Ok(RootProfile { constant: f.lc(), entries })
}

/// Splits a monic squarefree polynomial into blocks whose irreducible factors
/// all share the same degree.
pub(super) fn distinct_degree(ring: &PolyRing<'_>, g: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    let q = ring.field().order();
    let x = UniPoly::x();
    let mut out = Vec::new();
    let mut rest = ring.monic(g);
    if rest.is_constant() {
        return Ok(out);
    }
    let mut h = ring.rem(&x, &rest)?;
    let mut m = 0;
    while rest.deg0() >= 2 * (m + 1) {
        m += 1;
        h = ring.pow_mod(&h, q, &rest)?;
        let d = ring.gcd(&ring.sub(&h, &x), &rest)?;
        if !d.is_one() {
            rest = ring.exact_div(&rest, &d).expect("gcd divides");
            h = ring.rem(&h, &rest)?;
            out.push((d, m));
        }
    }
    if !rest.is_constant() {
        let d = rest.deg0();
        out.push((rest, d));
    }
    Ok(out)
}

/// Roots of a monic squarefree polynomial that splits into linear factors over `field`.
fn split_linear(field: &GaloisField, h: &UniPoly) -> Vec<Elem> {
    let mut roots = Vec::new();
    split_rec(&PolyRing::new(field), &PolyRing::new(field).monic(h), 0, &mut roots);
    roots.sort();
    roots
}

fn split_rec(ring: &PolyRing<'_>, h: &UniPoly, j: u32, roots: &mut Vec<Elem>) {
    let field = ring.field();
    match h.degree() {
        None | Some(0) => return,
        Some(1) => {
            roots.push(field.neg(h.coeff(0)));
            return;
        }
        _ => {}
    }
    assert!(j < field.abs_degree(), "polynomial does not split into distinct linear factors");
    let p = field.characteristic();
    // absolute trace of β·x modulo h, β the j-th packed basis vector
    let beta = Elem(p.pow(j));
    let mut t = ring.rem(&ring.scale(beta, &UniPoly::x()), h).expect("nonzero");
    let mut w = t.clone();
    for _ in 1..field.abs_degree() {
        t = ring.pow_mod(&t, p, h).expect("nonzero");
        w = ring.add(&w, &t);
    }
    for c in 0..p {
        let g = ring.gcd(h, &ring.sub(&w, &UniPoly::constant(Elem(c)))).expect("h nonzero");
        if !g.is_constant() {
            split_rec(ring, &g, j + 1, roots);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldTower;

    #[test]
    fn simple_roots() {
        let f5 = GaloisField::prime(5).unwrap();
        let r = PolyRing::new(&f5);
        let prof = r.root_multiplicities(&UniPoly::from_u64s(&[0, 4, 1]), DEFAULT_ROOT_CAP).unwrap();
        let got: Vec<_> = prof.entries.iter().map(|e| (e.root, e.multiplicity, e.rational)).collect();
        assert_eq!(got, vec![(Elem(0), 1, true), (Elem(1), 1, true)]);
    }

    #[test]
    fn f2_example_with_quadratic_roots() {
        let f2 = GaloisField::prime(2).unwrap();
        let r = PolyRing::new(&f2);
        let f = r.mul(&UniPoly::from_u64s(&[0, 1, 1]), &r.pow(&UniPoly::from_u64s(&[1, 1, 1]), 2));
        let prof = r.root_multiplicities(&f, DEFAULT_ROOT_CAP).unwrap();
        let got: Vec<_> = prof
            .entries
            .iter()
            .map(|e| (e.root.0, e.ext_degree, e.multiplicity, e.rational))
            .collect();
        assert_eq!(got, vec![(0, 1, 1, true), (1, 1, 1, true), (2, 2, 2, false), (3, 2, 2, false)]);
        assert_eq!(prof.reconstruct(&f2).unwrap(), f);
    }

    #[test]
    fn cap_is_enforced() {
        let f2 = GaloisField::prime(2).unwrap();
        let r = PolyRing::new(&f2);
        // x^3 + x + 1 is irreducible over F_2
        let f = UniPoly::from_u64s(&[1, 1, 0, 1]);
        assert_eq!(r.root_multiplicities(&f, 2), Err(Error::CapExceeded { degree: 3, cap: 2 }));
        assert_eq!(r.root_multiplicities(&f, 3).unwrap().entries.len(), 3);
    }

    #[test]
    fn reconstruct_over_extension_field() {
        let t = FieldTower::build(3, 2, 1).unwrap();
        let r = PolyRing::new(t.top());
        let f = UniPoly::from_u64s(&[5, 0, 7, 1, 0, 3, 2]);
        let prof = r.root_multiplicities(&f, DEFAULT_ROOT_CAP).unwrap();
        assert_eq!(prof.degree(), 6);
        assert_eq!(prof.reconstruct(t.top()).unwrap(), f);
    }
}
