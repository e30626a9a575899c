//! SVG drawing of a triangulated point set.

use std::fmt::Write;

use concyclic::circle_model::CirclePointSet;
use concyclic::triangulation::Triangulation;

const SIZE: f64 = 480.0;
const MARGIN: f64 = 24.0;

/// Circle, one mark per point, the polygon chords and the diagonals.
pub fn render(p: &CirclePointSet, t: &Triangulation, labels: &[String]) -> String {
    let n = p.len();
    let [cx, cy] = p.center();
    let r = p.radius();
    let scale = (SIZE / 2.0 - MARGIN) / r;
    let map = |q: [f64; 2]| {
        (SIZE / 2.0 + (q[0] - cx) * scale, SIZE / 2.0 - (q[1] - cy) * scale)
    };
    let pts: Vec<(f64, f64)> = (0..n).map(|i| map(p.point(i))).collect();

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        s,
        r##"  <circle class="circumcircle" cx="{c:.3}" cy="{c:.3}" r="{rr:.3}" fill="none" stroke="#bbb"/>"##,
        c = SIZE / 2.0,
        rr = r * scale
    );
    for i in 0..n {
        let (a, b) = (pts[i], pts[(i + 1) % n]);
        let _ = writeln!(
            s,
            r##"  <line class="chord" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#333"/>"##,
            a.0, a.1, b.0, b.1
        );
    }
    for d in t.diagonals() {
        let (a, b) = (pts[d.lo()], pts[d.hi()]);
        let _ = writeln!(
            s,
            r##"  <line class="diagonal" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#c33"/>"##,
            a.0, a.1, b.0, b.1
        );
    }
    for (i, &(x, y)) in pts.iter().enumerate() {
        let _ = writeln!(s, r#"  <circle class="point" cx="{x:.3}" cy="{y:.3}" r="3"/>"#);
        let _ = writeln!(
            s,
            r#"  <text x="{:.3}" y="{:.3}" font-size="11">{}</text>"#,
            x + 5.0,
            y - 5.0,
            escape(&labels[i])
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
