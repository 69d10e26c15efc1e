use std::sync::OnceLock;

use fnc_forge::census::{
    arc_completeness, count_points_affine, count_points_at_infinity, count_points_projective, count_points_separated,
    pg2_point, sv_bound,
};
use fnc_forge::sepcurves::{fnc_all_components, fnc_cross_check, frobenius_form};
use fnc_forge::superelliptic::{garcia_test, kummer_genus, kummer_irreducible, reduce_degree, smooth_plane};
use fnc_forge::{BiPoly, BiRing, Elem, FieldTower, GaloisField, Irreducibility, PolyRing, SepCurve, SuperCurve, UniPoly};
use proptest::prelude::*;

fn f4() -> &'static GaloisField {
    static T: OnceLock<FieldTower> = OnceLock::new();
    T.get_or_init(|| FieldTower::build(2, 1, 2).unwrap()).top()
}

fn prime(p: u64) -> GaloisField {
    GaloisField::prime(p).unwrap()
}

fn poly(q: u64, max_deg: usize) -> impl Strategy<Value = UniPoly> {
    (prop::collection::vec(0..q, 1..=max_deg), 1..q).prop_map(|(mut c, lead)| {
        c.push(lead);
        UniPoly::from_u64s(&c)
    })
}

fn bipoly(q: u64) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0usize..4, 0usize..4, 0..q), 0..6).prop_map(|terms| {
        terms.into_iter().fold(BiPoly::zero(), |acc, (i, j, c)| {
            let mut out = acc.clone();
            if c != 0 {
                out = BiRing::new(f4()).add(&acc, &BiPoly::monomial(Elem(c), i, j));
            }
            out
        })
    })
}

/// Every MVSP of degree at most 3 over `F_5`, so that nonclassical pairs are not vanishingly rare.
fn f5_mvsps() -> &'static Vec<UniPoly> {
    static M: OnceLock<Vec<UniPoly>> = OnceLock::new();
    M.get_or_init(|| {
        let k = prime(5);
        let ring = PolyRing::new(&k);
        let mut out = Vec::new();
        for d in 1..=3u32 {
            for idx in 0..4 * 5u64.pow(d) {
                let mut c: Vec<u64> = (0..d).map(|i| idx / 5u64.pow(i) % 5).collect();
                c.push(idx / 5u64.pow(d) + 1);
                let f = UniPoly::from_u64s(&c);
                if ring.value_set(&f).is_mvsp == Some(true) {
                    out.push(f);
                }
            }
        }
        out
    })
}

fn f5_side() -> impl Strategy<Value = UniPoly> {
    prop_oneof![poly(5, 4), (0..f5_mvsps().len()).prop_map(|i| f5_mvsps()[i].clone())]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn frobenius_form_is_a_derivation(a in bipoly(4), b in bipoly(4)) {
        let k = f4();
        let r = BiRing::new(k);
        let phi = |f: &BiPoly| frobenius_form(k, f, 4);
        prop_assert_eq!(phi(&r.add(&a, &b)), r.add(&phi(&a), &phi(&b)));
        prop_assert_eq!(phi(&r.mul(&a, &b)), r.add(&r.mul(&a, &phi(&b)), &r.mul(&b, &phi(&a))));
    }

    #[test]
    fn fnc_is_symmetric(f in f5_side(), g in f5_side()) {
        let k = prime(5);
        if let Ok(c) = SepCurve::new(&k, f, g) {
            prop_assert_eq!(fnc_all_components(&k, &c).unwrap(), fnc_all_components(&k, &c.swapped()).unwrap());
        }
    }

    #[test]
    fn fnc_forces_equal_minimal_value_sets(f in f5_side(), g in f5_side()) {
        let k = prime(5);
        let ring = PolyRing::new(&k);
        if let Ok(c) = SepCurve::new(&k, f.clone(), g.clone()) {
            if fnc_all_components(&k, &c).unwrap() {
                let (vf, vg) = (ring.value_set(&f), ring.value_set(&g));
                prop_assert_eq!(vf.is_mvsp, Some(true));
                prop_assert_eq!(vg.is_mvsp, Some(true));
                prop_assert_eq!(vf.values, vg.values);
            }
        }
    }

    #[test]
    fn point_count_routes_agree(f in poly(7, 5), g in poly(7, 5)) {
        let k = prime(7);
        let bi = BiRing::new(&k).separated(&f, &g);
        let n = count_points_projective(&k, &bi).unwrap();
        prop_assert_eq!(n, count_points_affine(&k, &bi) + count_points_at_infinity(&k, &bi));
        prop_assert_eq!(n, count_points_separated(&k, &f, &g));
    }

    #[test]
    fn point_count_routes_agree_on_general_curves(a in bipoly(4)) {
        let k = f4();
        prop_assume!(a.total_degree().unwrap_or(0) > 0);
        let n = count_points_projective(k, &a).unwrap();
        prop_assert_eq!(n, count_points_affine(k, &a) + count_points_at_infinity(k, &a));
    }

    #[test]
    fn reduce_degree_keeps_points_and_verdict(n_idx in 0usize..3, f in poly(5, 4), x0 in 0u64..5) {
        let k = prime(5);
        let n = [1u64, 2, 4][n_idx];
        prop_assume!(f.deg0() as u64 <= n);
        let c = SuperCurve::new(&k, n, f).unwrap();
        let count = |c: &SuperCurve| {
            let d = c.n().max(c.d() as u64) as usize;
            // homogenize at the same degree on both sides
            let r = BiRing::new(&k);
            let bi = r.sub(&BiPoly::monomial(Elem::ONE, 0, c.n() as usize), &BiPoly::from_x(c.f()));
            let pts = (0..31).map(|i| pg2_point(5, i)).filter(|p| r.eval_homogeneous(&bi, d, p[0], p[1], p[2]).is_zero());
            pts.count()
        };
        let r = reduce_degree(&k, &c, Elem(x0));
        if let Ok(rc) = r {
            prop_assert_eq!(count(&c), count(&rc));
            prop_assert_eq!(garcia_test(&k, &c), garcia_test(&k, &rc));
        }
    }

    #[test]
    fn genus_at_most_plane_genus(n_idx in 0usize..4, f in poly(7, 6)) {
        let k = prime(7);
        let n = [2u64, 3, 6, 1][n_idx];
        prop_assume!(f.deg0() as u64 <= n);
        let c = SuperCurve::new(&k, n, f).unwrap();
        prop_assume!(kummer_irreducible(&k, &c).unwrap() == Irreducibility::AbsIrreducible);
        let g = kummer_genus(&k, &c).unwrap().genus;
        let d = n.max(c.d() as u64);
        let plane = ((d as i64 - 1) * (d as i64 - 2) / 2) as u64;
        prop_assert!(g <= plane);
        prop_assert_eq!(g == plane, smooth_plane(&k, &c).unwrap());
    }

    #[test]
    fn classical_smooth_curves_meet_the_nu_one_bound(n_idx in 0usize..3, f in poly(7, 6)) {
        let k = prime(7);
        let n = [2u64, 3, 6][n_idx];
        prop_assume!(f.deg0() as u64 <= n);
        let c = SuperCurve::new(&k, n, f.clone()).unwrap();
        prop_assume!(!garcia_test(&k, &c) && smooth_plane(&k, &c).unwrap());
        prop_assume!(kummer_irreducible(&k, &c).unwrap() == Irreducibility::AbsIrreducible);
        let g = kummer_genus(&k, &c).unwrap().genus;
        let d = n.max(c.d() as u64);
        let pts = count_points_separated(&k, &f, &UniPoly::monomial(Elem::ONE, n as usize));
        prop_assert!(pts as i64 <= sv_bound(d, g, 7, 1).unwrap());
    }

    #[test]
    fn arc_incidences_double_count(idx in prop::collection::btree_set(0u64..57, 0..20), d in 1u64..9) {
        let k = prime(7);
        let pts: Vec<_> = idx.iter().map(|&i| pg2_point(7, i)).collect();
        let r = arc_completeness(&k, &pts, d).unwrap();
        prop_assert_eq!(r.incidences, pts.len() as u64 * 8);
        prop_assert!(r.max_line <= pts.len() as u64);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, ..ProptestConfig::default() })]

    #[test]
    fn two_fnc_routes_agree(f in f5_side(), g in f5_side()) {
        let k = prime(5);
        if let Ok(c) = SepCurve::new(&k, f, g) {
            let r = fnc_cross_check(&k, &c).unwrap();
            prop_assert!(r.method_agreement);
            prop_assert_eq!(r.divisibility_verdict, r.mills_verdict);
        }
    }
}
