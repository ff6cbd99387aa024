mod common;

use common::*;
use nullspace_core::numerics::{MSet, Piece, Rational};
use proptest::prelude::*;

fn raw(ps: &[Piece], x: &Rational) -> bool {
    ps.iter().any(|p| p.contains(x))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn normal_form_is_pointwise_and_unique(ps in mset_pieces()) {
        let s = mset(&ps);
        for x in line_probes(&[&ps]) {
            prop_assert_eq!(s.contains(&x), raw(&ps, &x), "at {}", x);
        }
        prop_assert_eq!(MSet::normalize(s.pieces().to_vec()).unwrap(), s.clone());
        let mut rev = ps.clone();
        rev.reverse();
        prop_assert_eq!(mset(&rev), s);
    }

    #[test]
    fn boolean_laws(xs in mset_pieces(), ys in mset_pieces(), zs in mset_pieces()) {
        let (a, b, c) = (mset(&xs), mset(&ys), mset(&zs));
        prop_assert_eq!(a.union(&b), b.union(&a));
        prop_assert_eq!(a.intersect(&b), b.intersect(&a));
        prop_assert_eq!(a.union(&b.intersect(&c)), a.union(&b).intersect(&a.union(&c)));
        prop_assert_eq!(a.union(&b).complement(), a.complement().intersect(&b.complement()));
        prop_assert_eq!(a.complement().complement(), a.clone());
        prop_assert_eq!(a.difference(&b), a.intersect(&b.complement()));
        prop_assert_eq!(a.is_subset(&b), a.union(&b) == b);
        for x in line_probes(&[&xs, &ys]) {
            prop_assert_eq!(a.union(&b).contains(&x), raw(&xs, &x) || raw(&ys, &x));
            prop_assert_eq!(a.intersect(&b).contains(&x), raw(&xs, &x) && raw(&ys, &x));
        }
    }

    #[test]
    fn interior_and_closure(xs in mset_pieces()) {
        let a = mset(&xs);
        let (int, cl) = (a.interior(), a.closure());
        prop_assert!(int.is_subset(&a) && a.is_subset(&cl));
        prop_assert_eq!(int.interior(), int.clone());
        prop_assert_eq!(cl.closure(), cl.clone());
        prop_assert_eq!(a.complement().closure().complement(), int);
        prop_assert!(cl.pieces().iter().all(|p| p.lo.is_finite() == p.lo_closed && p.hi.is_finite() == p.hi_closed));
    }

    #[test]
    fn shift_and_scale(xs in mset_pieces(), by in rat(), alpha in nonzero()) {
        let a = mset(&xs);
        for x in line_probes(&[&xs]) {
            prop_assert_eq!(a.shift(&by).contains(&(&x + &by)), a.contains(&x));
            prop_assert_eq!(a.scale(&alpha).contains(&(&x * &alpha)), a.contains(&x));
        }
    }

    #[test]
    fn upward_is_the_smallest_upper_set(xs in mset_pieces()) {
        let a = mset(&xs);
        let up = a.upward();
        prop_assert!(a.is_subset(&up));
        prop_assert_eq!(up.upward(), up.clone());
        for x in line_probes(&[&xs]) {
            let below = a.intersect(&MSet::from_piece(Piece::new(
                nullspace_core::ExtReal::NegInf, false, x.clone().into(), true).unwrap()));
            prop_assert_eq!(up.contains(&x), !below.is_empty(), "at {}", x);
        }
    }
}
