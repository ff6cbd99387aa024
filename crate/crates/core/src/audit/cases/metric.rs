//! The midpoint pseudo-metric and the interval-valued function space.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{ensure, iv, law, q};
use crate::audit::case::{AuditCase, Case, Expected::*, Verdict};
use crate::audit::gen::Gen;
use crate::function_space::GridIntervalFunction;
use crate::interval::{LawId, LawSample};
use crate::interval::{metric_d, Interval, OmegaElement};
use crate::numerics::Rational;

fn near_pair(g: &mut Gen) -> (Interval, Interval) {
    let x = g.interval();
    let y = if g.coin() { g.same_midpoint(&x) } else { g.interval() };
    (x, y)
}

fn ivs(v: &[&Interval]) -> Vec<Interval> {
    v.iter().map(|x| (*x).clone()).collect()
}

fn on(intervals: Vec<Interval>) -> LawSample {
    LawSample { intervals, ..Default::default() }
}

type ZeroSum = (Interval, Interval, Interval, Interval, Vec<Rational>, Vec<Rational>);

fn zero_sum(g: &mut Gen) -> ZeroSum {
    let betas = if g.chance(1, 4) { Vec::new() } else { g.alphas_zero_sum() };
    (g.interval(), g.interval(), g.interval(), g.interval(), g.alphas_zero_sum(), betas)
}

fn zero_sum_law(id: LawId, (x, y, a, b, al, be): &ZeroSum) -> Verdict {
    let mut intervals = ivs(&[x, y, a]);
    if !be.is_empty() {
        intervals.push(b.clone());
    }
    law(id, LawSample { intervals, alphas: al.clone(), betas: be.clone(), ..Default::default() })
}

fn null_law(id: LawId, (x, y, w1, w2): &(Interval, Interval, OmegaElement, OmegaElement)) -> Verdict {
    law(id, LawSample { intervals: ivs(&[x, y]), omegas: vec![w1.clone(), w2.clone()], ..Default::default() })
}

fn fold(base: &Interval, a: &Interval, coeffs: &[Rational]) -> Interval {
    coeffs.iter().fold(base.clone(), |acc, c| acc.add(&a.scale(c)))
}

/// A function together with partners on the same grid; the second shares
/// its midpoints with the first half of the time.
fn gridfuns(g: &mut Gen) -> (GridIntervalFunction, GridIntervalFunction, GridIntervalFunction) {
    let n = g.grid_size();
    let f = g.gridfun(n);
    let h = if g.coin() {
        let vals = f.values().iter().map(|v| g.same_midpoint(v)).collect();
        GridIntervalFunction::on_default_grid(vals).expect("nonempty grid")
    } else {
        g.gridfun(n)
    };
    (f, h, g.gridfun(n))
}

fn grid(vals: &[(i64, i64)]) -> GridIntervalFunction {
    GridIntervalFunction::on_default_grid(vals.iter().map(|&(a, b)| iv(a, b)).collect()).expect("nonempty grid")
}

fn dic(f: &GridIntervalFunction, g: &GridIntervalFunction) -> Result<Rational, alloc::string::String> {
    f.d_ic(g).map_err(|e| format!("{e}"))
}

pub(super) fn cases() -> Vec<Box<dyn AuditCase>> {
    vec![
        Case::new("D4.1.i", "d(x,y) = 0 exactly when x and y are null-equal", Pass, near_pair, |(x, y)| {
            law(LawId::MetricNullIdentity, on(ivs(&[x, y])))
        })
        .boxed(),
        Case::new(
            "D4.1.i-prime-fails",
            "d(x,y) = 0 does not force x = y",
            Pass,
            |g| g.interval(),
            |x| {
                let y = x.add(&iv(-1, 1));
                ensure(metric_d(x, &y).is_zero() && *x != y, || format!("{x} and {y}"))?;
                law(LawId::MetricStrictIdentity, on(vec![x.clone(), y.clone()]))
                    .err()
                    .map(|_| ())
                    .ok_or_else(|| format!("strict identity unexpectedly holds on {x}, {y}"))
            },
        )
        .boxed(),
        Case::new("D4.1.ii", "d is symmetric", Pass, near_pair, |(x, y)| {
            law(LawId::MetricSymmetry, on(ivs(&[x, y])))
        })
        .boxed(),
        Case::new(
            "D4.1.iii",
            "triangle inequality",
            Pass,
            |g| (g.interval(), g.interval(), g.interval()),
            |(x, y, z)| law(LawId::MetricTriangle, on(ivs(&[x, y, z]))),
        )
        .boxed(),
        Case::new(
            "D4.1.iv",
            "null inequalities",
            Pass,
            |g| (g.interval(), g.interval(), g.omega(), g.omega()),
            |s| null_law(LawId::NullInequalities, s),
        )
        .boxed(),
        Case::new(
            "D4.1.iv-prime",
            "null equalities",
            Pass,
            |g| (g.interval(), g.interval(), g.omega(), g.omega()),
            |s| null_law(LawId::NullEqualities, s),
        )
        .boxed(),
        Case::new("D4.1.v", "zero-sum inequalities", Pass, zero_sum, |s| {
            zero_sum_law(LawId::ZeroSumInequalities, s)
        })
        .boxed(),
        Case::new("D4.1.v-prime", "zero-sum equalities", Pass, zero_sum, |s| {
            zero_sum_law(LawId::ZeroSumEqualities, s)
        })
        .boxed(),
        Case::new(
            "R4.1",
            "each null element is a - a, so zero-sum conditions cover the null ones",
            Pass,
            |g| (g.interval(), g.interval()),
            |(x, a)| {
                let lhs = fold(x, a, &[Rational::one(), -Rational::one()]);
                let rhs = x.add(&a.sub(a));
                ensure(lhs == rhs, || format!("{lhs} vs {rhs}"))?;
                let w = OmegaElement::of(a);
                ensure(w.to_interval() == a.sub(a), || format!("{a} - {a} is not null"))
            },
        )
        .boxed(),
        Case::new(
            "E4.1.witness",
            "d([a,b],[c,d]) = 0 gives [a,b] + [c-d,d-c] = [c,d] + [c-b,b-c]",
            Pass,
            near_pair,
            |(x, y)| {
                let (b, c, d) = (x.hi(), y.lo(), y.hi());
                ensure(b >= c, || format!("{x} lies left of {y}"))?;
                let w1 = Interval::new(c - d, d - c).map_err(|e| format!("{e}"))?;
                let w2 = Interval::new(c - b, b - c).map_err(|e| format!("{e}"))?;
                ensure(x.add(&w1) == y.add(&w2), || format!("{x} + {w1} != {y} + {w2}"))
            },
        )
        .when(|(x, y)| metric_d(x, y).is_zero())
        .witnesses(|| vec![(iv(0, 2), iv(-1, 3))])
        .boxed(),
        Case::new(
            "E4.1.zero-sum-fold",
            "a1[c,d] + ... + an[c,d] = [e,f] with e + f = 0 when the coefficients sum to zero",
            Pass,
            |g| (g.interval(), g.alphas_zero_sum()),
            |(a, al)| {
                let s = fold(&crate::interval::Interval::zero(), a, al);
                ensure((s.lo() + s.hi()).is_zero(), || format!("sum is {s}"))
            },
        )
        .boxed(),
        Case::new(
            "D4.2.translation-invariance",
            "d(x+z, y+z) = d(x,y)",
            Pass,
            |g| (g.interval(), g.interval(), g.interval()),
            |(x, y, z)| law(LawId::TranslationInvariance, on(ivs(&[x, y, z]))),
        )
        .boxed(),
        Case::new(
            "D4.2.absolute-homogeneity",
            "d(ax, ay) = |a| d(x,y)",
            Pass,
            |g| (g.interval(), g.interval(), g.scalar()),
            |(x, y, a)| {
                law(LawId::AbsoluteHomogeneity, LawSample { intervals: ivs(&[x, y]), scalars: vec![a.clone()], ..Default::default() })
            },
        )
        .boxed(),
        Case::new(
            "E4.2.ic-i",
            "for functions, the sup distance vanishes exactly on null-equal pairs",
            Pass,
            gridfuns,
            |(f, h, _)| {
                let zero = dic(f, h)?.is_zero();
                let eq = f.omega_equal(h).map_err(|e| format!("{e}"))?;
                ensure(zero == eq, || format!("d = 0 is {zero} but null-equal is {eq}"))
            },
        )
        .boxed(),
        Case::new("E4.2.ic-ii", "the function distance is symmetric", Pass, gridfuns, |(f, h, _)| {
            let (a, b) = (dic(f, h)?, dic(h, f)?);
            ensure(a == b, || format!("{a} vs {b}"))
        })
        .boxed(),
        Case::new("E4.2.ic-iii", "the function distance obeys the triangle inequality", Pass, gridfuns, |(f, h, k)| {
            let (fh, fk, kh) = (dic(f, h)?, dic(f, k)?, dic(k, h)?);
            ensure(fh <= &fk + &kh, || format!("{fh} > {fk} + {kh}"))
        })
        .boxed(),
        Case::new(
            "E4.2.ic-v-prime",
            "the function distance obeys the zero-sum equalities",
            Pass,
            |g| {
                let (f, h, a) = gridfuns(g);
                (f, h, a, g.alphas_zero_sum())
            },
            |(f, h, a, al)| {
                let shifted = al.iter().fold(f.clone(), |acc, c| acc.f_add(&a.f_scale(c)).expect("same grid"));
                let base = dic(f, h)?;
                let (d1, d2) = (dic(&shifted, h)?, dic(h, &shifted)?);
                ensure(d1 == base && d2 == base, || format!("{d1}, {d2} vs {base}"))
            },
        )
        .boxed(),
        Case::new(
            "E4.2.ic-omega",
            "null functions are closed under addition and scaling, and F - F is null",
            Pass,
            |g| {
                let (f, h, _) = gridfuns(g);
                (f, h, g.scalar())
            },
            |(f, h, a)| {
                let ff = f.f_add(&f.f_scale(&-Rational::one())).map_err(|e| format!("{e}"))?;
                let hh = h.f_add(&h.f_scale(&-Rational::one())).map_err(|e| format!("{e}"))?;
                ensure(ff.is_in_omega(), || "F - F is not null".into())?;
                let s = ff.f_add(&hh).map_err(|e| format!("{e}"))?;
                ensure(s.is_in_omega() && ff.f_scale(a).is_in_omega(), || "null functions are not a cone".into())
            },
        )
        .boxed(),
        Case::new(
            "E4.2.ic-axioms",
            "functions inherit commutativity, associativity and positive distributivity",
            Pass,
            |g| {
                let (f, h, k) = gridfuns(g);
                (f, h, k, g.positive(), g.positive())
            },
            |(f, h, k, a, b)| {
                let add = |x: &GridIntervalFunction, y: &GridIntervalFunction| x.f_add(y).expect("same grid");
                ensure(add(f, h) == add(h, f), || "addition not commutative".into())?;
                ensure(add(&add(f, h), k) == add(f, &add(h, k)), || "addition not associative".into())?;
                ensure(add(f, h).f_scale(a) == add(&f.f_scale(a), &h.f_scale(a)), || "a(F+G) != aF + aG".into())?;
                ensure(f.f_scale(&(a + b)) == add(&f.f_scale(a), &f.f_scale(b)), || "(a+b)F != aF + bF".into())?;
                ensure(f.f_scale(b).f_scale(a) == f.f_scale(&(a * b)), || "a(bF) != (ab)F".into())
            },
        )
        .boxed(),
        Case::new(
            "E4.2.ic-operations",
            "sums and multiples of functions keep the continuity bounds",
            Pass,
            |g| {
                let (f, h, _) = gridfuns(g);
                let n = f.values().len() as u64;
                (f, h, g.scalar(), g.below(n) as usize, g.below(n) as usize)
            },
            |(f, h, a, i, j)| {
                let d = |u: &GridIntervalFunction| metric_d(&u.values()[*i], &u.values()[*j]);
                let sum = f.f_add(h).map_err(|e| format!("{e}"))?;
                ensure(d(&sum) <= d(f) + d(h), || format!("sum moves {} > {} + {}", d(&sum), d(f), d(h)))?;
                let sc = f.f_scale(a);
                ensure(d(&sc) == a.abs() * d(f), || format!("{a}F moves {}", d(&sc)))
            },
        )
        .when(|(f, _, _, i, j)| *i < f.values().len() && *j < f.values().len())
        .witnesses(|| vec![(grid(&[(0, 1), (2, 4)]), grid(&[(1, 1), (-1, 3)]), q(-2), 0, 1)])
        .boxed(),
    ]
}
