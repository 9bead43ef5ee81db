//! Plain SVG drawings of frameworks.

use std::fmt::Write;

use crate::c3::TreePartition;
use crate::graph::Graph;

pub const SIZE: f64 = 800.0;
pub const MARGIN: f64 = 0.05 * SIZE;

/// Stroke class for each tree of a partition.
pub const TREE_CLASSES: [&str; 3] = ["t0", "t1", "t2"];

const STYLE: &str = ".bar{stroke:#222;stroke-width:2;stroke-linecap:round}\
.t0{stroke-width:5}\
.t1{stroke-dasharray:10 6}\
.t2{stroke-width:1}\
.joint{fill:#fff;stroke:#222;stroke-width:2}\
.label{font:12px sans-serif;fill:#555}";

/// Draw `g` at `points`; with a partition, bars carry their tree's class.
pub fn render_svg(g: &Graph, points: &[[f64; 2]], partition: Option<&TreePartition>) -> String {
    let to_screen = fit(points);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, "<style>{STYLE}</style>");
    for &(u, v) in g.edges() {
        let [x1, y1] = to_screen(points[u]);
        let [x2, y2] = to_screen(points[v]);
        let class = match partition.and_then(|tp| tp.tree_of(u, v)) {
            Some(i) => format!("bar {}", TREE_CLASSES[i]),
            None => "bar".to_string(),
        };
        let _ = writeln!(
            out,
            r#"<line class="{class}" data-edge="{u} {v}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#
        );
    }
    for (v, &p) in points.iter().enumerate() {
        let [x, y] = to_screen(p);
        let _ = writeln!(out, r#"<circle class="joint" cx="{x:.3}" cy="{y:.3}" r="6"/>"#);
        let _ = writeln!(
            out,
            r#"<text class="label" x="{:.3}" y="{:.3}">{v}</text>"#,
            x + 8.0,
            y - 8.0
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Uniform scale into the viewBox minus the margin, y pointing up.
fn fit(points: &[[f64; 2]]) -> impl Fn([f64; 2]) -> [f64; 2] {
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in points {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    if points.is_empty() {
        lo = [0.0; 2];
        hi = [1.0; 2];
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-12);
    let s = (SIZE - 2.0 * MARGIN) / span;
    let off = [
        MARGIN + (SIZE - 2.0 * MARGIN - s * (hi[0] - lo[0])) / 2.0,
        MARGIN + (SIZE - 2.0 * MARGIN - s * (hi[1] - lo[1])) / 2.0,
    ];
    move |p| [off[0] + s * (p[0] - lo[0]), SIZE - (off[1] + s * (p[1] - lo[1]))]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_counts() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let svg = render_svg(&g, &[[0.0, 0.0], [1.0, 0.0], [0.5, 0.8]], None);
        assert_eq!(svg.matches("<circle").count(), 3);
        assert_eq!(svg.matches("<line").count(), 3);
    }

    #[test]
    fn points_stay_inside_margin() {
        let pts = [[-3.0, 2.0], [5.0, -1.0], [0.0, 0.0]];
        let f = fit(&pts);
        for p in pts {
            let [x, y] = f(p);
            assert!((MARGIN - 1e-9..=SIZE - MARGIN + 1e-9).contains(&x));
            assert!((MARGIN - 1e-9..=SIZE - MARGIN + 1e-9).contains(&y));
        }
    }
}
