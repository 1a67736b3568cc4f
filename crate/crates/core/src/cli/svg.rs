//! Static SVG drawing of a diagram. Lines of constant `x` run vertically.

use std::fmt::Write;

use num_traits::{One, ToPrimitive};

use crate::honeycomb::Diagram;
use crate::plane::{Length, PlanePoint};
use crate::rational::{format_q, Q};

/// Screen position, `y` pointing up, unit lattice steps of length 1.
fn screen(p: &PlanePoint) -> (f64, f64) {
    let f = |v: &Q| v.to_f64().unwrap_or(0.0);
    (f(p.x()) * 3f64.sqrt() / 2.0, (f(p.y()) - f(p.z())) / 2.0)
}

/// Distance along the unit vector `d` from `p` to the edge of the box.
fn exit_distance(p: (f64, f64), d: (f64, f64), lo: (f64, f64), hi: (f64, f64)) -> f64 {
    let along = |pos: f64, dir: f64, lo: f64, hi: f64| {
        if dir > 1e-12 {
            (hi - pos) / dir
        } else if dir < -1e-12 {
            (lo - pos) / dir
        } else {
            f64::INFINITY
        }
    };
    along(p.0, d.0, lo.0, hi.0).min(along(p.1, d.1, lo.1, hi.1)).max(0.0)
}

/// One `path` per canonical segment, one `circle` per vertex, and a label
/// on every segment of multiplicity above 1. Rays stop `margin` units past
/// the furthest vertex.
pub fn render_svg(d: &Diagram, margin: f64) -> String {
    let pts: Vec<(f64, f64)> = d.vertices().iter().map(|v| screen(&v.location)).collect();
    let (mut lo, mut hi) = ((0.0f64, 0.0f64), (0.0f64, 0.0f64));
    if let Some(&first) = pts.first() {
        lo = first;
        hi = first;
        for &(x, y) in &pts {
            lo = (lo.0.min(x), lo.1.min(y));
            hi = (hi.0.max(x), hi.1.max(y));
        }
    }
    lo = (lo.0 - margin, lo.1 - margin);
    hi = (hi.0 + margin, hi.1 + margin);
    let scale = 40.0;
    let pad = 10.0;
    let to_svg = |(x, y): (f64, f64)| ((x - lo.0) * scale + pad, (hi.1 - y) * scale + pad);
    let width = (hi.0 - lo.0) * scale + 2.0 * pad;
    let height = (hi.1 - lo.1) * scale + 2.0 * pad;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    );
    let _ = writeln!(s, r#"<g class="segments" stroke="black" fill="none">"#);
    let mut labels = Vec::new();
    for seg in d.segments() {
        let a = screen(&seg.base);
        let b = match &seg.length {
            Length::Finite(l) => screen(&seg.base.step(seg.direction, l)),
            Length::Infinite => {
                let u = screen(&seg.base.step(seg.direction, &Q::one()));
                let dir = (u.0 - a.0, u.1 - a.1);
                let t = exit_distance(a, dir, lo, hi);
                (a.0 + dir.0 * t, a.1 + dir.1 * t)
            }
        };
        let (pa, pb) = (to_svg(a), to_svg(b));
        let width = 1.5 * seg.multiplicity.to_f64().unwrap_or(1.0);
        let _ = writeln!(
            s,
            r#"<path d="M {:.2} {:.2} L {:.2} {:.2}" stroke-width="{width:.2}"/>"#,
            pa.0, pa.1, pb.0, pb.1
        );
        if seg.multiplicity > Q::one() {
            labels.push((((pa.0 + pb.0) / 2.0, (pa.1 + pb.1) / 2.0), format_q(&seg.multiplicity)));
        }
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g class="vertices">"#);
    for (v, &p) in d.vertices().iter().zip(&pts) {
        let (x, y) = to_svg(p);
        let fill = if v.kind.is_y() { "black" } else { "red" };
        let _ = writeln!(s, r#"<circle class="{}" cx="{x:.2}" cy="{y:.2}" r="3" fill="{fill}"/>"#, v.kind.name());
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g class="labels" font-size="12" fill="blue">"#);
    for ((x, y), text) in labels {
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">{text}</text>"#, x + 3.0, y - 3.0);
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    s
}
