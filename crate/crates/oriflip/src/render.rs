//! SVG rendering of a crease pattern with its MV assignment, in the
//! usual diagram style: mountains as solid bold strokes, valleys dashed.
//!
//! Output is deterministic byte for byte. Coordinates come from the exact
//! vertex positions, scaled by a fixed factor and printed with fixed
//! precision, so identical inputs always serialize identically and the
//! files diff cleanly.

use crate::pattern::{CreasePattern, EdgeId, FaceId, Mv, MvAssignment};
use std::fmt::Write;

#[derive(Clone, Copy, Debug, Default)]
pub struct RenderOptions {
    /// Draw each face's numeric id at its centroid.
    pub face_labels: bool,
}

// drawing units per pattern unit; edge lengths are O(1) in every family,
// so stroke widths and label sizes below are absolute
const SCALE: f64 = 100.0;
const MOUNTAIN_WIDTH: f64 = 3.0;
const VALLEY_WIDTH: f64 = 1.2;

fn coord(p: &CreasePattern, e: EdgeId) -> ((f64, f64), (f64, f64)) {
    let (a, b) = p.edges[e.0].ends;
    (project(p, a), project(p, b))
}

// SVG y grows downward, the plane's grows upward
fn project(p: &CreasePattern, v: crate::pattern::VertexId) -> (f64, f64) {
    let (x, y) = p.pos(v);
    (x.to_f64() * SCALE, -y.to_f64() * SCALE)
}

fn fmt_num(x: f64) -> String {
    // fixed precision keeps output stable; snap negative zero so that
    // -0.00 never appears
    let r = (x * 100.0).round() / 100.0;
    let r = if r == 0.0 { 0.0 } else { r };
    format!("{r:.2}")
}

pub fn render_svg(p: &CreasePattern, mu: &MvAssignment, options: RenderOptions) -> String {
    let mut min = (f64::INFINITY, f64::INFINITY);
    let mut max = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for i in 0..p.vertex_count() {
        let (x, y) = project(p, crate::pattern::VertexId(i));
        min = (min.0.min(x), min.1.min(y));
        max = (max.0.max(x), max.1.max(y));
    }
    let margin = 0.05 * (max.0 - min.0).max(max.1 - min.1);

    let mut mountains = String::new();
    let mut valleys = String::new();
    for i in 0..p.edge_count() {
        let e = EdgeId(i);
        let ((x1, y1), (x2, y2)) = coord(p, e);
        let d = match mu.get(e) {
            Mv::Mountain => &mut mountains,
            Mv::Valley => &mut valleys,
        };
        if !d.is_empty() {
            d.push(' ');
        }
        write!(
            d,
            "M{},{} L{},{}",
            fmt_num(x1),
            fmt_num(y1),
            fmt_num(x2),
            fmt_num(y2)
        )
        .unwrap();
    }

    let mut svg = String::new();
    writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        fmt_num(min.0 - margin),
        fmt_num(min.1 - margin),
        fmt_num(max.0 - min.0 + 2.0 * margin),
        fmt_num(max.1 - min.1 + 2.0 * margin)
    )
    .unwrap();
    writeln!(svg, "  <g fill=\"none\" stroke=\"#000\" stroke-linecap=\"round\">").unwrap();
    if !mountains.is_empty() {
        writeln!(
            svg,
            "    <path class=\"mountain\" stroke-width=\"{MOUNTAIN_WIDTH}\" d=\"{mountains}\"/>"
        )
        .unwrap();
    }
    if !valleys.is_empty() {
        writeln!(
            svg,
            "    <path class=\"valley\" stroke-width=\"{VALLEY_WIDTH}\" stroke-dasharray=\"7 6\" d=\"{valleys}\"/>"
        )
        .unwrap();
    }
    writeln!(svg, "  </g>").unwrap();
    if options.face_labels {
        writeln!(
            svg,
            "  <g font-family=\"monospace\" font-size=\"16\" text-anchor=\"middle\" fill=\"#777\">"
        )
        .unwrap();
        for i in 0..p.face_count() {
            let (cx, cy) = p.face_centroid(FaceId(i));
            writeln!(
                svg,
                "    <text x=\"{}\" y=\"{}\">{i}</text>",
                fmt_num(cx.to_f64() * SCALE),
                fmt_num(-cy.to_f64() * SCALE)
            )
            .unwrap();
        }
        writeln!(svg, "  </g>").unwrap();
    }
    writeln!(svg, "</svg>").unwrap();
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{square, triangle, EdgeKind};

    fn segments(svg: &str, class: &str) -> usize {
        svg.lines()
            .find(|l| l.contains(&format!("class=\"{class}\"")))
            .map(|l| l.matches('L').count())
            .unwrap_or(0)
    }

    #[test]
    fn one_face_pattern_renders_4_segments() {
        let p = square::build_square_grid(1, 1).unwrap();
        let mu = square::canonical_mv(&p);
        let svg = render_svg(&p, &mu, RenderOptions::default());
        assert_eq!(segments(&svg, "mountain") + segments(&svg, "valley"), 4);
        assert!(svg.starts_with("<svg "));
        assert!(svg.contains("version=\"1.1\""));
    }

    #[test]
    fn canonical_triangle_draws_exactly_minus30_edges_bold() {
        let p = triangle::build_triangle_region(2, 3).unwrap();
        let mu = triangle::canonical_mv(&p);
        let svg = render_svg(&p, &mu, RenderOptions::default());
        let m_edges = p
            .edges
            .iter()
            .filter(|e| e.kind == EdgeKind::Minus30)
            .count();
        assert_eq!(segments(&svg, "mountain"), m_edges);
        assert_eq!(segments(&svg, "valley"), p.edge_count() - m_edges);
    }

    #[test]
    fn identical_inputs_give_byte_identical_svg() {
        let p = triangle::build_hex_star(1).unwrap();
        let mu = triangle::canonical_mv(&p);
        let a = render_svg(&p, &mu, RenderOptions { face_labels: true });
        let b = render_svg(&p, &mu, RenderOptions { face_labels: true });
        assert_eq!(a, b);
        assert!(a.contains("<text"));
    }

    #[test]
    fn viewbox_pads_the_bounding_box_by_5_percent() {
        // 2x3 grid: x in [0,300], y in [-200,0] after scaling, so the
        // margin is 5% of 300 on every side
        let p = square::build_square_grid(2, 3).unwrap();
        let mu = square::canonical_mv(&p);
        let svg = render_svg(&p, &mu, RenderOptions::default());
        assert!(svg.contains("viewBox=\"-15.00 -15.00 330.00 230.00\""), "{svg}");
    }

    #[test]
    fn no_negative_zero_in_output() {
        let p = triangle::build_hex_star(1).unwrap();
        let mu = triangle::canonical_mv(&p);
        let svg = render_svg(&p, &mu, RenderOptions { face_labels: true });
        assert!(!svg.contains("-0.00"));
    }
}
