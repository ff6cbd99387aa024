//! JSON round trips and agreement between the parallel and serial audit.

use nullspace::formats::*;
use nullspace::runner::run_suite_parallel;
use nullspace_core::audit::run_suite;
use nullspace_core::numerics::{ExtReal, MSet, Piece, Rational};
use nullspace_core::region::{Rect, Region};
use nullspace_core::{GridIntervalFunction, Interval};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

fn nonneg() -> impl Strategy<Value = Rational> {
    (0i64..=20, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

fn interval() -> impl Strategy<Value = Interval> {
    (rat(), nonneg()).prop_map(|(m, r)| Interval::from_midrad(&m, &r).unwrap())
}

fn m_piece() -> impl Strategy<Value = Piece> {
    (prop::option::of(rat()), prop::option::of(rat()), any::<bool>(), any::<bool>()).prop_filter_map(
        "valid piece",
        |(a, b, lc, hc)| {
            let lo = a.map_or(ExtReal::NegInf, ExtReal::Finite);
            let hi = b.map_or(ExtReal::PosInf, ExtReal::Finite);
            let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
            Piece::new(lo.clone(), lc && lo.is_finite(), hi.clone(), hc && hi.is_finite()).ok()
        },
    )
}

fn r_piece() -> impl Strategy<Value = Piece> {
    (nonneg(), prop::option::of(nonneg()), any::<bool>(), any::<bool>()).prop_filter_map(
        "valid radius piece",
        |(a, b, lc, hc)| match b {
            None => Some(Piece::from(a, lc)),
            Some(b) => {
                let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                Piece::new(lo.into(), lc, hi.into(), hc).ok()
            }
        },
    )
}

fn region() -> impl Strategy<Value = Region> {
    prop::collection::vec((m_piece(), r_piece()), 0..4)
        .prop_map(|bs| Region::from_rects(bs.into_iter().map(|(m, r)| Rect::new(m, r).unwrap()).collect()))
}

proptest! {
    #[test]
    fn intervals_round_trip(x in interval()) {
        let text = serde_json::to_string(&interval_json(&x)).unwrap();
        let back: IntervalJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(interval_from(&back).unwrap(), x);
    }

    #[test]
    fn msets_round_trip(ps in prop::collection::vec(m_piece(), 0..5)) {
        let s = MSet::normalize(ps).unwrap();
        let j = mset_json(&s);
        let back = mset_from(&serde_json::from_str(&to_pretty(&j)).unwrap()).unwrap();
        prop_assert_eq!(mset_json(&back), j);
        prop_assert_eq!(back, s);
    }

    #[test]
    fn regions_round_trip(a in region()) {
        let j = region_json(&a);
        let back = read_region(&to_pretty(&j)).unwrap();
        prop_assert_eq!(region_json(&back), j);
        prop_assert_eq!(back, a);
    }

    #[test]
    fn grid_functions_round_trip(vs in prop::collection::vec(interval(), 1..6)) {
        let grid: Vec<String> = (0..vs.len()).map(|i| format!("t{i}")).collect();
        let f = GridIntervalFunction::new(grid, vs).unwrap();
        let j = gridfn_json(&f);
        let back: GridFnJson = serde_json::from_str(&to_pretty(&j)).unwrap();
        prop_assert_eq!(gridfn_from(&back).unwrap(), f);
    }
}

#[test]
fn malformed_inputs_are_rejected() {
    assert!(matches!(read_region("[{"), Err(FormatError::Json(_))));
    assert!(matches!(
        read_region(r#"[{"m":["0","shut","1","open"],"r":["0","closed","1","closed"]}]"#),
        Err(FormatError::Flag(_))
    ));
    assert!(matches!(
        read_region(r#"[{"m":["0","closed","1","open"],"r":["-1","closed","1","closed"]}]"#),
        Err(FormatError::Value(_))
    ));
    assert!(read_region(r#"[{"m":["0.5","closed","1","open"],"r":["0","closed","1","closed"]}]"#).is_err());
}

#[test]
fn audit_report_round_trips() {
    let j = audit_json(&run_suite(7, 2));
    let back: AuditReportJson = serde_json::from_str(&to_pretty(&j)).unwrap();
    assert_eq!(back, j);
}

#[test]
fn parallel_runner_matches_serial() {
    for seed in [0, 42] {
        assert_eq!(run_suite_parallel(seed, 5), run_suite(seed, 5));
    }
}
