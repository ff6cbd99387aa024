//! SVG pictures of regions in the `(m, r)` half-plane, `r` pointing up.
//!
//! Boxes are translucent rectangles. Closed edges are solid, open edges
//! dashed, and edges lost to clipping (infinite ends, radii past `r_max`)
//! are not drawn. Clipping only affects the picture.

use std::fmt::Write;

use nullspace_core::numerics::{ExtReal, Piece, Rational};
use nullspace_core::region::Region;

pub const DEFAULT_R_MAX: i64 = 10;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 40.0;

struct View {
    m0: f64,
    m1: f64,
    r1: f64,
}

impl View {
    fn x(&self, m: f64) -> f64 {
        MARGIN + (m - self.m0) / (self.m1 - self.m0) * (WIDTH - 2.0 * MARGIN)
    }

    fn y(&self, r: f64) -> f64 {
        HEIGHT - MARGIN - r / self.r1 * (HEIGHT - 2.0 * MARGIN)
    }

    /// Clipped end of a piece, and whether that end is a real edge.
    fn end(&self, e: &ExtReal, lo: f64, hi: f64) -> (f64, bool) {
        match e {
            ExtReal::NegInf => (lo, false),
            ExtReal::PosInf => (hi, false),
            ExtReal::Finite(q) => {
                let v = q.to_f64();
                if v > hi {
                    (hi, false)
                } else {
                    (v, true)
                }
            }
        }
    }
}

fn view(a: &Region, r_max: &Rational) -> View {
    let bps = a.breakpoints();
    let (lo, hi) = match (bps.first(), bps.last()) {
        (Some(l), Some(h)) => (l.to_f64(), h.to_f64()),
        _ => (-5.0, 5.0),
    };
    let pad = ((hi - lo) * 0.15).max(1.0);
    View { m0: lo - pad, m1: hi + pad, r1: r_max.to_f64().max(f64::MIN_POSITIVE) }
}

fn line(out: &mut String, (x1, y1): (f64, f64), (x2, y2): (f64, f64), closed: bool) {
    let dash = if closed { "" } else { r#" stroke-dasharray="6 4""# };
    let _ = writeln!(
        out,
        r##"  <line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="#1f4e79" stroke-width="1.5"{dash}/>"##
    );
}

fn edge_span(v: &View, p: &Piece, lo: f64, hi: f64) -> ((f64, bool, bool), (f64, bool, bool)) {
    let (a, a_real) = v.end(&p.lo, lo, hi);
    let (b, b_real) = v.end(&p.hi, lo, hi);
    ((a, a_real, p.lo_closed), (b, b_real, p.hi_closed))
}

/// Renders `a` with radii clipped at `r_max`.
pub fn render(a: &Region, r_max: &Rational) -> String {
    let v = view(a, r_max);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"  <rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let (ax0, ax1, ay) = (v.x(v.m0), v.x(v.m1), v.y(0.0));
    let _ = writeln!(out, r#"  <line x1="{ax0:.2}" y1="{ay:.2}" x2="{ax1:.2}" y2="{ay:.2}" stroke="black"/>"#);
    if v.m0 < 0.0 && 0.0 < v.m1 {
        let (x, top) = (v.x(0.0), v.y(v.r1));
        let _ = writeln!(out, r#"  <line x1="{x:.2}" y1="{ay:.2}" x2="{x:.2}" y2="{top:.2}" stroke="gray"/>"#);
    }
    let _ = writeln!(
        out,
        r#"  <text x="{:.2}" y="{:.2}" font-size="12">m</text>"#,
        ax1 + 6.0,
        ay + 4.0
    );
    let _ = writeln!(out, r#"  <text x="{:.2}" y="{:.2}" font-size="12">r = {r_max}</text>"#, ax0, v.y(v.r1) - 6.0);
    for b in a.rects() {
        let ((m0, m0_real, m0_closed), (m1, m1_real, m1_closed)) = edge_span(&v, &b.m, v.m0, v.m1);
        let ((r0, r0_real, r0_closed), (r1, r1_real, r1_closed)) = edge_span(&v, &b.r, 0.0, v.r1);
        if r0 >= v.r1 {
            continue;
        }
        let (x0, x1, y0, y1) = (v.x(m0), v.x(m1), v.y(r0), v.y(r1));
        let _ = writeln!(
            out,
            r##"  <rect x="{x0:.2}" y="{y1:.2}" width="{:.2}" height="{:.2}" fill="#4a90d9" fill-opacity="0.3" stroke="none"/>"##,
            x1 - x0,
            y0 - y1
        );
        if m0_real {
            line(&mut out, (x0, y0), (x0, y1), m0_closed);
        }
        if m1_real && m1 != m0 {
            line(&mut out, (x1, y0), (x1, y1), m1_closed);
        }
        if r0_real {
            line(&mut out, (x0, y0), (x1, y0), r0_closed);
        }
        if r1_real && r1 != r0 {
            line(&mut out, (x0, y1), (x1, y1), r1_closed);
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use nullspace_core::region::Rect;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn open_edges_are_dashed_and_clipped_edges_dropped() {
        let a = Region::from_rect(Rect::new(Piece::open(q(0), q(2)), Piece::from(q(1), true)).unwrap());
        let svg = render(&a, &q(DEFAULT_R_MAX));
        assert_eq!(svg.matches("stroke-dasharray").count(), 2);
        assert_eq!(svg.matches("#1f4e79").count(), 3);
        assert_eq!(svg, render(&a, &q(DEFAULT_R_MAX)));
    }
}
