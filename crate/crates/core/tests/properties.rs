use std::sync::Arc;

use num_traits::One;
use proptest::prelude::*;

use casimir_lab::oplab::{self, GroupSpec, IrrepSpec, MetricParam, RationalPoly};
use casimir_lab::rational::{format_rational, parse_rational, q, Q};
use casimir_lab::reps::{self, RepLabel};
use casimir_lab::rootsys::{Family, RootSystem, RootSystemType};
use casimir_lab::weights::{self, LatticeChoice};

fn sys(f: Family, r: usize) -> Arc<RootSystem> {
    Arc::new(RootSystem::new(RootSystemType::new(f, r).unwrap(), Q::one()).unwrap())
}

fn rank2() -> impl Strategy<Value = Arc<RootSystem>> {
    prop_oneof![Just(Family::A), Just(Family::B), Just(Family::C), Just(Family::G)].prop_map(|f| sys(f, 2))
}

fn poly(max_deg: usize) -> impl Strategy<Value = RationalPoly> {
    prop::collection::vec((-9i64..=9, 1i64..=4), 1..=max_deg + 1)
        .prop_map(|c| RationalPoly::new(c.into_iter().map(|(n, d)| q(n, d)).collect()))
        .prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_round_trip(n in -10_000i64..10_000, d in 1i64..500) {
        let x = q(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn weyl_dim_is_character_degree(rs in rank2(), a in 0i64..5, b in 0i64..5) {
        let rep = RepLabel::from_fw(&rs, LatticeChoice::Weight, &[a, b]).unwrap();
        let total: u64 = reps::weight_multiplicities(&rep).values().sum();
        prop_assert_eq!(reps::weyl_dim(&rep), total);
    }

    #[test]
    fn weyl_group_preserves_shifted_norm(rs in rank2(), a in -6i64..6, b in -6i64..6) {
        let x = [a, b];
        let n = rs.norm_sq_fw(&x);
        for i in 0..2 {
            let mut y = x;
            rs.reflect_fw(i, &mut y);
            prop_assert_eq!(rs.norm_sq_fw(&y), n.clone());
        }
    }

    #[test]
    fn tensor_dimensions_multiply(rs in rank2(), a in 0i64..3, b in 0i64..3, c in 0i64..3, d in 0i64..3) {
        let x = RepLabel::from_fw(&rs, LatticeChoice::Weight, &[a, b]).unwrap();
        let y = RepLabel::from_fw(&rs, LatticeChoice::Weight, &[c, d]).unwrap();
        let t = reps::tensor_decompose(&x, &y).unwrap();
        prop_assert!(t.is_nonnegative());
        prop_assert_eq!(t.dimension(&rs) as u64, reps::weyl_dim(&x) * reps::weyl_dim(&y));
    }

    #[test]
    fn sphere_members_share_the_radius(rs in rank2(), a in 0i64..6, b in 0i64..6) {
        let w = weights::Weight::new(&rs, LatticeChoice::Weight, vec![a, b]).unwrap();
        let cls = weights::sphere_set(&rs, LatticeChoice::Weight, &w.a_sq(&rs));
        prop_assert!(cls.dominant_members.contains(&w));
        for m in &cls.sphere_members {
            prop_assert_eq!(m.a_sq(&rs), cls.a_sq.clone());
        }
    }

    #[test]
    fn resultant_is_multiplicative(f in poly(3), g in poly(3), h in poly(3)) {
        let lhs = oplab::resultant(&(f.clone() * g.clone()), &h).unwrap();
        let rhs = oplab::resultant(&f, &h).unwrap() * oplab::resultant(&g, &h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn positive_metrics_give_real_spectra(
        d in prop::collection::vec(1i64..20, 3),
        off in prop::collection::vec(-3i64..=3, 3),
        m in 0u32..4,
    ) {
        let k = MetricParam::from_entries(3, &[
            (0, 0, q(d[0] + 10, 1)), (1, 1, q(d[1] + 10, 1)), (2, 2, q(d[2] + 10, 1)),
            (0, 1, q(off[0], 1)), (0, 2, q(off[1], 1)), (1, 2, q(off[2], 1)),
        ]).unwrap();
        let g = GroupSpec::new(1, 0).unwrap();
        let op = oplab::build_operator(&g, &IrrepSpec::spin(m), &k).unwrap();
        prop_assert!(op.is_self_adjoint());
        let p = oplab::char_poly(&op).unwrap();
        prop_assert_eq!(p.degree(), Some(m as usize + 1));
        let distinct: usize = p.square_free_decomposition().unwrap().iter().map(|(f, _)| f.degree().unwrap()).sum();
        prop_assert_eq!(p.count_real_roots(), distinct);
    }
}
