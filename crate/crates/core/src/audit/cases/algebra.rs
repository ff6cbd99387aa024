//! Vector-space laws, Ω-equality, generalized inverses and decompositions.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{ensure, iv, law, q};
use crate::audit::case::{AuditCase, Case, Expected::*};
use crate::audit::gen::Gen;
use crate::interval::{LawId, LawSample};
use crate::interval::{
    is_generalized_inverse, is_omega_equal, linear_combination, null_decompose, omega_equal,
    owns_self_decomposition_wrt, self_decompose, Interval, OmegaElement,
};
use crate::numerics::Rational;
use crate::topology::omega_region;

fn ivs(v: &[&Interval]) -> Vec<Interval> {
    v.iter().map(|x| (*x).clone()).collect()
}

fn sample(intervals: Vec<Interval>, scalars: Vec<Rational>) -> LawSample {
    LawSample { intervals, scalars, ..Default::default() }
}

fn two(g: &mut Gen) -> (Interval, Interval) {
    (g.interval(), g.interval())
}

fn three(g: &mut Gen) -> (Interval, Interval, Interval) {
    (g.interval(), g.interval(), g.interval())
}

/// `x` and a partner that shares its midpoint half of the time.
fn near_pair(g: &mut Gen) -> (Interval, Interval) {
    let x = g.interval();
    let y = if g.coin() { g.same_midpoint(&x) } else { g.interval() };
    (x, y)
}

fn x_a_b(g: &mut Gen) -> (Interval, Rational, Rational) {
    (g.interval(), g.scalar(), g.scalar())
}

fn sum_all(xs: &[Interval]) -> Interval {
    xs.iter().skip(1).fold(xs[0].clone(), |acc, x| acc.add(x))
}

fn fold_combo(x: &Interval, alphas: &[Rational]) -> Interval {
    alphas.iter().skip(1).fold(x.scale(&alphas[0]), |acc, a| acc.add(&x.scale(a)))
}

fn scalars(g: &mut Gen) -> Vec<Rational> {
    let n = 1 + g.below(8) as usize;
    (0..n).map(|_| g.scalar()).collect()
}

pub(super) fn cases() -> Vec<Box<dyn AuditCase>> {
    vec![
        Case::new("D2.1.i", "scalar identity 1x = x", Pass, |g| g.interval(), |x| {
            law(LawId::Identity, sample(vec![x.clone()], vec![]))
        })
        .boxed(),
        Case::new(
            "D2.1.ii",
            "equal elements stay equal after adding z or scaling by a",
            Pass,
            |g| {
                let x = g.interval();
                let y = if g.coin() { x.clone() } else { g.interval() };
                (x, y, g.interval(), g.scalar())
            },
            |(x, y, z, a)| law(LawId::Substitution, sample(ivs(&[x, y, z]), vec![a.clone()])),
        )
        .when(|(x, y, _, _)| x == y)
        .witnesses(|| vec![(iv(1, 3), iv(1, 3), iv(-1, 2), q(2))])
        .boxed(),
        Case::new("D2.1.iii.comm", "vector addition is commutative", Pass, two, |(x, y)| {
            law(LawId::AddCommutative, sample(ivs(&[x, y]), vec![]))
        })
        .boxed(),
        Case::new("D2.1.iii.assoc", "vector addition is associative", Pass, three, |(x, y, z)| {
            law(LawId::AddAssociative, sample(ivs(&[x, y, z]), vec![]))
        })
        .boxed(),
        Case::new(
            "L2.vector-distributive",
            "a(x+y) = ax + ay for every scalar",
            Pass,
            |g| (g.interval(), g.interval(), g.scalar()),
            |(x, y, a)| law(LawId::VectorDistributive, sample(ivs(&[x, y]), vec![a.clone()])),
        )
        .boxed(),
        Case::new(
            "L2.positive-vector-distributive",
            "a(x+y) = ax + ay for positive scalars",
            Pass,
            |g| (g.interval(), g.interval(), g.positive()),
            |(x, y, a)| law(LawId::PositiveVectorDistributive, sample(ivs(&[x, y]), vec![a.clone()])),
        )
        .boxed(),
        Case::new("L2.scalar-associative", "a(bx) = (ab)x for all scalars", Pass, x_a_b, |(x, a, b)| {
            law(LawId::ScalarAssociative, sample(vec![x.clone()], vec![a.clone(), b.clone()]))
        })
        .boxed(),
        Case::new(
            "L2.positive-scalar-associative",
            "a(bx) = (ab)x for positive scalars",
            Pass,
            |g| (g.interval(), g.positive(), g.positive()),
            |(x, a, b)| law(LawId::PositiveScalarAssociative, sample(vec![x.clone()], vec![a.clone(), b.clone()])),
        )
        .boxed(),
        Case::new(
            "L2.3-general-distributivity",
            "(a+b)x = ax + bx for all scalars is claimed to fail for closed intervals",
            Fail,
            x_a_b,
            |(x, a, b)| law(LawId::ScalarDistributive, sample(vec![x.clone()], vec![a.clone(), b.clone()])),
        )
        .witnesses(|| vec![(iv(1, 3), q(1), q(-1))])
        .boxed(),
        Case::new(
            "L2.3-positive-distributivity",
            "(a+b)x = ax + bx for positive a, b",
            Pass,
            |g| (g.interval(), g.positive(), g.positive()),
            |(x, a, b)| law(LawId::PositiveScalarDistributive, sample(vec![x.clone()], vec![a.clone(), b.clone()])),
        )
        .boxed(),
        Case::new(
            "L2.3-negative-distributivity",
            "(a+b)x = ax + bx for negative a, b",
            Pass,
            |g| (g.interval(), g.negative(), g.negative()),
            |(x, a, b)| law(LawId::NegativeScalarDistributive, sample(vec![x.clone()], vec![a.clone(), b.clone()])),
        )
        .boxed(),
        Case::new(
            "L2.same-sign-distributivity",
            "(a+b)x = ax + bx whenever ab > 0",
            Pass,
            |g| {
                let (a, b) = (g.positive(), g.positive());
                if g.coin() {
                    (g.interval(), a, b)
                } else {
                    (g.interval(), -a, -b)
                }
            },
            |(x, a, b)| law(LawId::ScalarDistributive, sample(vec![x.clone()], vec![a.clone(), b.clone()])),
        )
        .when(|(_, a, b)| (a * b).is_positive())
        .witnesses(|| vec![(iv(1, 3), q(1), q(2))])
        .boxed(),
        Case::new(
            "E2.1.no-inverse",
            "a non-degenerate interval has no additive inverse",
            Pass,
            two,
            |(x, y)| {
                ensure(x.add(y) != Interval::zero() && x.add(&-x) != Interval::zero(), || {
                    format!("{x} + {y} = {}", x.add(y))
                })
            },
        )
        .when(|(x, _)| !x.is_degenerate())
        .witnesses(|| vec![(iv(1, 3), iv(-3, -1))])
        .boxed(),
        Case::new(
            "E2.2.null-set",
            "x - x = [-(b-a), b-a] and every [-k,k] arises this way",
            Pass,
            |g| (g.interval(), g.omega()),
            |(x, w)| {
                let d = x.sub(x);
                let k = x.hi() - x.lo();
                ensure(d.is_in_omega() && d == OmegaElement::new(k).unwrap().to_interval(), || {
                    format!("{x} - {x} = {d}")
                })?;
                let half = Interval::new(Rational::zero(), w.k().clone()).unwrap();
                ensure(half.sub(&half) == w.to_interval(), || format!("{half} - {half} != {w}"))
            },
        )
        .boxed(),
        Case::new(
            "R2.1",
            "with a zero element, conditions (a) and (b) reduce to (c)",
            Pass,
            |g| {
                let x = g.interval();
                let w = g.omega();
                let y = match g.below(4) {
                    0 => x.clone(),
                    1 => x.add(&w.to_interval()),
                    2 => g.same_midpoint(&x),
                    _ => g.interval(),
                };
                (x, y, w)
            },
            |(x, y, w)| {
                let wi = w.to_interval();
                let ab = x == y || *x == y.add(&wi) || x.add(&wi) == *y;
                if ab {
                    ensure(is_omega_equal(x, y), || format!("{x}, {y} satisfy (a)/(b) but not (c)"))?;
                }
                match omega_equal(x, y) {
                    Some(wit) => ensure(x.add(&wit.omega1.to_interval()) == y.add(&wit.omega2.to_interval()), || {
                        format!("witnesses {} {} do not match", wit.omega1, wit.omega2)
                    }),
                    None => ensure(x.midpoint() != y.midpoint(), || format!("{x} {y} share a midpoint")),
                }
            },
        )
        .boxed(),
        Case::new(
            "P2.1.i",
            "x + z = y + z implies x and y are null-equal",
            Pass,
            |g| {
                let x = g.interval();
                let y = if g.coin() { x.clone() } else { g.interval() };
                (x, y, g.interval())
            },
            |(x, y, _)| ensure(is_omega_equal(x, y), || format!("{x} vs {y}")),
        )
        .when(|(x, y, z)| x.add(z) == y.add(z))
        .witnesses(|| vec![(iv(1, 3), iv(1, 3), iv(0, 1))])
        .boxed(),
        Case::new(
            "P2.1.ii",
            "x - y in the null set implies x and y are null-equal",
            Pass,
            near_pair,
            |(x, y)| ensure(is_omega_equal(x, y), || format!("{x} vs {y}")),
        )
        .when(|(x, y)| x.sub(y).is_in_omega())
        .witnesses(|| vec![(iv(1, 3), iv(0, 4))])
        .boxed(),
        Case::new(
            "P2.1.iii",
            "null-equal x, y admit w = y - y with x - y + w in the null set",
            Pass,
            near_pair,
            |(x, y)| {
                let w = y.sub(y);
                ensure(x.sub(y).add(&w).is_in_omega(), || format!("{x} - {y} + {w} not null"))
            },
        )
        .when(|(x, y)| is_omega_equal(x, y))
        .witnesses(|| vec![(iv(1, 3), iv(0, 4))])
        .boxed(),
        Case::new(
            "P2.2.sum",
            "-(x1 + ... + xn) is null-equal to (-x1) + ... + (-xn)",
            Pass,
            |g| {
                let n = 1 + g.below(5) as usize;
                (0..n).map(|_| g.interval()).collect::<Vec<_>>()
            },
            |xs| {
                let lhs = -&sum_all(xs);
                let negs: Vec<Interval> = xs.iter().map(|x| -x).collect();
                let rhs = sum_all(&negs);
                ensure(is_omega_equal(&lhs, &rhs), || format!("{lhs} vs {rhs}"))
            },
        )
        .when(|xs| !xs.is_empty())
        .witnesses(|| vec![vec![iv(1, 3), iv(-2, 5)]])
        .boxed(),
        Case::new("P2.2.diff", "-(x - y) is null-equal to (-x) + y", Pass, two, |(x, y)| {
            let (lhs, rhs) = (-&x.sub(y), (-x).add(y));
            ensure(is_omega_equal(&lhs, &rhs), || format!("{lhs} vs {rhs}"))
        })
        .boxed(),
        Case::new(
            "P2.3",
            "two generalized inverses of x are null-equal",
            Pass,
            |g| {
                let x = g.interval();
                let neg = -&x;
                let y = g.same_midpoint(&neg);
                let z = if g.chance(3, 4) { g.same_midpoint(&neg) } else { g.interval() };
                (x, y, z)
            },
            |(_, y, z)| ensure(is_omega_equal(y, z), || format!("{y} vs {z}")),
        )
        .when(|(x, y, z)| is_generalized_inverse(x, y) && is_generalized_inverse(x, z))
        .witnesses(|| vec![(iv(1, 3), iv(-3, -1), iv(-4, 0))])
        .boxed(),
        Case::new(
            "C2.1",
            "-1x is a generalized inverse and every generalized inverse is null-equal to it",
            Pass,
            |g| {
                let x = g.interval();
                let y = if g.chance(3, 4) { g.same_midpoint(&-&x) } else { g.interval() };
                (x, y)
            },
            |(x, y)| {
                let m = x.scale(&q(-1));
                ensure(is_generalized_inverse(x, &m), || format!("-1{x} is not an inverse"))?;
                if is_generalized_inverse(x, y) {
                    ensure(is_omega_equal(y, &m), || format!("{y} vs {m}"))?;
                }
                Ok(())
            },
        )
        .boxed(),
        Case::new(
            "R2.2.subspace",
            "for the subspace of null elements, Y + w is inside Y and Y + (w - w) inside Y + w",
            Pass,
            |g| (g.omega(), g.omega(), g.scalar()),
            |(w, v, a)| {
                let omega = omega_region();
                let wi = w.to_interval();
                let shifted = omega.translate(&wi);
                ensure(shifted.is_subset(&omega), || format!("O + {w} leaves O"))?;
                ensure(omega.translate(&wi.sub(&wi)).is_subset(&shifted), || format!("O + ({w} - {w}) not in O + {w}"))?;
                ensure(wi.add(&v.to_interval()).is_in_omega() && wi.scale(a).is_in_omega(), || {
                    format!("null set not closed under {w} + {v} or {a}{w}")
                })
            },
        )
        .boxed(),
        Case::new(
            "R2.3.collapse",
            "a1x + ... + anx equals the grouped form a+x + a-x + 0x + ... + 0x",
            Pass,
            |g| (g.interval(), scalars(g)),
            |(x, alphas)| {
                let lc = linear_combination(x, alphas).map_err(|e| format!("{e}"))?;
                ensure(lc.agree(), || format!("folded {} vs collapsed {}", lc.folded, lc.collapsed))
            },
        )
        .when(|(_, a)| !a.is_empty())
        .witnesses(|| vec![(iv(1, 3), vec![q(2), q(-1), q(0)])])
        .boxed(),
        Case::new(
            "R2.3.zero-multiple",
            "0x is the zero element here, so 0x = 0x + 0x lies in the null set",
            Pass,
            |g| g.interval(),
            |x| {
                let z = x.scale(&Rational::zero());
                ensure(z == Interval::zero() && z.add(&z) == z && z.is_in_omega(), || format!("0{x} = {z}"))
            },
        )
        .boxed(),
        Case::new(
            "P2.4.span",
            "span of {x, y} is closed under addition and scaling",
            Pass,
            |g| (g.interval(), g.interval(), scalars(g), scalars(g), g.scalar()),
            |(x, y, al, be, c)| {
                let u = fold_combo(x, al).add(&fold_combo(y, be));
                let scaled_al: Vec<Rational> = al.iter().map(|a| c * a).collect();
                let scaled_be: Vec<Rational> = be.iter().map(|b| c * b).collect();
                let cu = fold_combo(x, &scaled_al).add(&fold_combo(y, &scaled_be));
                ensure(u.scale(c) == cu, || format!("{c}({u}) = {} but the rescaled combination is {cu}", u.scale(c)))?;
                let mut al2 = al.clone();
                al2.extend(al.iter().cloned());
                let uu = fold_combo(x, &al2).add(&fold_combo(y, be)).add(&fold_combo(y, be));
                ensure(u.add(&u) == uu, || format!("{u} + {u} is not the concatenated combination {uu}"))
            },
        )
        .when(|(_, _, al, be, _)| !al.is_empty() && !be.is_empty())
        .witnesses(|| vec![(iv(1, 3), iv(0, 1), vec![q(1), q(-2)], vec![q(3)], q(-1))])
        .boxed(),
        Case::new(
            "D3.1.null-decomposition",
            "every interval is x = xbar + w with w null",
            Pass,
            |g| (g.interval(), g.fraction()),
            |(x, t)| {
                let k = t * &x.radius();
                let (bar, w) = null_decompose(x, &k).map_err(|e| format!("{e}"))?;
                ensure(bar.add(&w.to_interval()) == *x, || format!("{bar} + {w} != {x}"))
            },
        )
        .boxed(),
        Case::new(
            "E3.1.null-decomposition",
            "[a,b] = [a+k, b-k] + [-k,k] for 0 <= k < (b-a)/2",
            Pass,
            |g| (g.interval(), g.fraction()),
            |(x, t)| {
                let k = t * &x.radius();
                let bar = Interval::new(x.lo() + &k, x.hi() - &k).map_err(|e| format!("{e}"))?;
                let w = OmegaElement::new(k).map_err(|e| format!("{e}"))?;
                ensure(bar.add(&w.to_interval()) == *x, || format!("{bar} + {w} != {x}"))
            },
        )
        .when(|(x, t)| t * &x.radius() < x.radius() || x.is_degenerate())
        .witnesses(|| vec![(iv(1, 5), Rational::new(1, 2))])
        .boxed(),
        Case::new(
            "R3.1",
            "X + O is inside X, and with null decomposition X = X + O",
            Pass,
            |g| g.interval(),
            |x| {
                let whole = crate::region::Region::whole();
                ensure(whole.upward_closure() == whole, || "X + O != X".into())?;
                let (bar, w) = null_decompose(x, &x.radius()).map_err(|e| format!("{e}"))?;
                ensure(bar.add(&w.to_interval()) == *x, || format!("{x} has no decomposition"))
            },
        )
        .boxed(),
        Case::new(
            "D3.2.self-decomposition-model",
            "w = w' + w0 is solvable in the null set exactly when k >= k0",
            Pass,
            |g| {
                let w0 = g.omega();
                let w = if g.coin() { w0.add(&g.omega()) } else { g.omega() };
                (w, w0)
            },
            |(w, w0)| {
                match self_decompose(w, w0) {
                    Ok(wp) => ensure(wp.add(w0) == *w, || format!("{wp} + {w0} != {w}"))?,
                    Err(_) => ensure(w.k() < w0.k(), || format!("{w} should split against {w0}"))?,
                }
                let small = OmegaElement::new(w0.k().half()).unwrap();
                let owns = self_decompose(&small, w0).is_ok();
                ensure(owns == owns_self_decomposition_wrt(w0), || format!("decomposition against {w0} misreported"))
            },
        )
        .boxed(),
        Case::new(
            "E3.2.omega-sum",
            "every [-k,k] with k > 0 is a sum of two null elements, so O + O = O",
            Pass,
            |g| (g.omega(), g.omega(), g.fraction()),
            |(w1, w2, t)| {
                ensure(w1.add(w2).to_interval().is_in_omega(), || format!("{w1} + {w2} not null"))?;
                let k1 = t * w1.k();
                let k2 = w1.k() - &k1;
                let (a, b) = (OmegaElement::new(k1).unwrap(), OmegaElement::new(k2).unwrap());
                ensure(a.add(&b) == *w1, || format!("{a} + {b} != {w1}"))
            },
        )
        .boxed(),
        Case::new(
            "E3.2.owns-self-decomposition",
            "the null set is claimed to split against every fixed w0",
            Fail,
            |g| (g.omega(), g.omega()),
            |(w, w0)| match self_decompose(w, w0) {
                Ok(_) => Ok(()),
                Err(e) => Err(format!("{e}")),
            },
        )
        .witnesses(|| vec![(OmegaElement::new(q(1)).unwrap(), OmegaElement::new(q(2)).unwrap())])
        .boxed(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_ids_are_unique() {
        let c = cases();
        let mut ids: Vec<&str> = c.iter().map(|c| c.id()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), c.len());
    }
}
