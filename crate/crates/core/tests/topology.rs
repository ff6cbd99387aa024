mod common;

use common::*;
use nullspace_core::numerics::Rational;
use nullspace_core::region::Region;
use nullspace_core::topology::{
    absorbs_null, closure_of, family_check, interior_of, is_closed, is_open, is_pseudo_open, open_ball,
    oracle_point_check, BallSpec, FamilyClass, Kind, OracleMode,
};
use proptest::prelude::*;

fn kind() -> impl Strategy<Value = Kind> {
    prop::sample::select(Kind::ALL.to_vec())
}

fn ballspec() -> impl Strategy<Value = BallSpec> {
    (interval(), (1i64..=8, 1i64..=2)).prop_map(|(c, (n, d))| BallSpec::new(c, Rational::new(n, d)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn compiled_operators_match_the_ball_definitions(rs in rects(), k in kind()) {
        let a = region(&rs);
        let (int, pint, cl) = (interior_of(&a, k, false), interior_of(&a, k, true), closure_of(&a, k));
        for p in probes(&[&rs]) {
            let x = interval_at(&p);
            prop_assert_eq!(int.member(&x), oracle_point_check(&a, &x, OracleMode::Interior, k), "int {} at {}", k, x);
            prop_assert_eq!(pint.member(&x), oracle_point_check(&a, &x, OracleMode::PseudoInterior, k), "pint {} at {}", k, x);
            prop_assert_eq!(cl.member(&x), oracle_point_check(&a, &x, OracleMode::Closure, k), "cl {} at {}", k, x);
        }
    }

    #[test]
    fn interior_and_closure_bracket_the_set(rs in rects(), k in kind()) {
        let a = region(&rs);
        let (int, cl) = (interior_of(&a, k, false), closure_of(&a, k));
        prop_assert!(int.is_subset(&a) && a.is_subset(&cl));
        prop_assert!(int.is_subset(&interior_of(&a, k, true)));
        prop_assert!(is_open(&int, k) && is_closed(&cl, k));
    }

    #[test]
    fn plain_closure_is_dual_to_plain_interior(rs in rects()) {
        let a = region(&rs);
        let dual = interior_of(&a.complement(), Kind::Plain, false).complement();
        prop_assert_eq!(closure_of(&a, Kind::Plain), dual);
    }

    #[test]
    fn the_four_closures_coincide(rs in rects()) {
        let a = region(&rs);
        let c = closure_of(&a, Kind::Plain);
        for k in Kind::ALL {
            prop_assert_eq!(&closure_of(&a, k), &c);
        }
    }

    #[test]
    fn balls_are_open_of_every_kind(s in ballspec()) {
        let b = open_ball(&s);
        for k in Kind::ALL {
            prop_assert!(is_open(&b, k) && is_pseudo_open(&b, k));
        }
        prop_assert!(absorbs_null(&b));
    }

    #[test]
    fn open_families_close_under_the_lattice_operations(specs in prop::collection::vec(ballspec(), 1..4)) {
        let mut fam: Vec<Region> = specs.iter().map(open_ball).collect();
        fam.push(Region::empty());
        for class in FamilyClass::ALL {
            let rep = family_check(&fam, class);
            prop_assert!(rep.passed(), "{} fails on balls", class);
        }
    }
}

#[test]
fn the_restricted_family_rejects_a_low_box() {
    use nullspace_core::numerics::Piece;
    use nullspace_core::region::Rect;
    let q = Rational::from_integer;
    let b = Region::from_rect(Rect::new(Piece::closed(q(0), q(1)), Piece::closed(q(0), q(1))).unwrap());
    let rep = family_check(&[b], FamilyClass::TauIITilde);
    assert!(!rep.passed());
}
