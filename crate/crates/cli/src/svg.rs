//! SVG 1.1 rendering of mosaics.
//!
//! Each non-blank tile becomes one `<g class="glyph KIND">` element. Crossings
//! draw the under strand with a gap around the centre. Connection points
//! without a partner are marked with a red circle on the tile edge, so broken
//! boards still render.

use std::fmt::Write;

use knot_mosaic::tile::Over;
use knot_mosaic::{Edge, Mosaic, Tile};

/// Fixed rendering parameters. Changing any value bumps `version`, which is
/// written into every SVG so golden files can be regenerated deliberately.
pub struct Style {
    pub version: u32,
    pub tile: f64,
    pub margin: f64,
    pub stroke: f64,
    /// Half the length of the gap cut from an under strand.
    pub gap: f64,
    pub grid_stroke: f64,
    pub marker_radius: f64,
}

pub const STYLE: Style = Style { version: 1, tile: 40.0, margin: 8.0, stroke: 4.0, gap: 8.0, grid_stroke: 0.5, marker_radius: 4.0 };

fn glyph_class(t: Tile) -> &'static str {
    match t {
        Tile::Blank => "blank",
        Tile::Arc(_) => "arc",
        Tile::LineH | Tile::LineV => "line",
        Tile::DoubleArc(_) => "double-arc",
        Tile::Crossing(_) => "crossing",
    }
}

fn fmt_num(v: f64) -> String {
    let s = format!("{v:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

struct Cell {
    x: f64,
    y: f64,
    s: f64,
}

impl Cell {
    fn mid(&self, e: Edge) -> (f64, f64) {
        let h = self.s / 2.0;
        match e {
            Edge::N => (self.x + h, self.y),
            Edge::S => (self.x + h, self.y + self.s),
            Edge::W => (self.x, self.y + h),
            Edge::E => (self.x + self.s, self.y + h),
        }
    }

    fn corner(&self, a: Edge, b: Edge) -> (f64, f64) {
        let has = |e| a == e || b == e;
        let x = if has(Edge::E) { self.x + self.s } else { self.x };
        let y = if has(Edge::S) { self.y + self.s } else { self.y };
        (x, y)
    }

    /// Quarter circle joining the midpoints of two adjacent edges.
    fn arc(&self, a: Edge, b: Edge) -> String {
        let (x1, y1) = self.mid(a);
        let (x2, y2) = self.mid(b);
        let (cx, cy) = self.corner(a, b);
        let cross = (x1 - cx) * (y2 - cy) - (y1 - cy) * (x2 - cx);
        let sweep = u8::from(cross > 0.0);
        let r = fmt_num(self.s / 2.0);
        format!(
            "<path d=\"M {} {} A {r} {r} 0 0 {sweep} {} {}\"/>",
            fmt_num(x1),
            fmt_num(y1),
            fmt_num(x2),
            fmt_num(y2)
        )
    }

    fn segment(&self, (x1, y1): (f64, f64), (x2, y2): (f64, f64)) -> String {
        format!("<path d=\"M {} {} L {} {}\"/>", fmt_num(x1), fmt_num(y1), fmt_num(x2), fmt_num(y2))
    }

    fn line(&self, a: Edge, b: Edge) -> String {
        self.segment(self.mid(a), self.mid(b))
    }

    /// A straight strand with a gap of `2 * gap` around the tile centre.
    fn broken_line(&self, a: Edge, b: Edge, gap: f64) -> String {
        let (cx, cy) = (self.x + self.s / 2.0, self.y + self.s / 2.0);
        let toward = |(px, py): (f64, f64)| {
            let (dx, dy) = (px - cx, py - cy);
            let len = (dx * dx + dy * dy).sqrt();
            (cx + dx / len * gap, cy + dy / len * gap)
        };
        let (pa, pb) = (self.mid(a), self.mid(b));
        format!("{}{}", self.segment(pa, toward(pa)), self.segment(toward(pb), pb))
    }
}

fn glyph(t: Tile, cell: &Cell, style: &Style) -> String {
    match t {
        Tile::Blank => String::new(),
        Tile::Arc(c) => {
            let (a, b) = c.edges();
            cell.arc(a, b)
        }
        Tile::LineH => cell.line(Edge::W, Edge::E),
        Tile::LineV => cell.line(Edge::N, Edge::S),
        Tile::DoubleArc(_) => {
            let (pairs, n) = t.pairs();
            pairs[..n].iter().map(|&(a, b)| cell.arc(a, b)).collect()
        }
        Tile::Crossing(Over::Vertical) => {
            format!("{}{}", cell.broken_line(Edge::W, Edge::E, style.gap), cell.line(Edge::N, Edge::S))
        }
        Tile::Crossing(Over::Horizontal) => {
            format!("{}{}", cell.broken_line(Edge::N, Edge::S, style.gap), cell.line(Edge::W, Edge::E))
        }
    }
}

/// Renders `m` with the default [`STYLE`].
pub fn render_svg(m: &Mosaic) -> String {
    render_with(m, &STYLE)
}

pub fn render_with(m: &Mosaic, style: &Style) -> String {
    let s = style.tile;
    let width = m.cols() as f64 * s + 2.0 * style.margin;
    let height = m.rows() as f64 * s + 2.0 * style.margin;
    let mut out = String::new();
    let _ = writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\" data-style-version=\"{}\">",
        style.version,
        w = fmt_num(width),
        h = fmt_num(height),
    );
    let _ = writeln!(out, "<rect width=\"{}\" height=\"{}\" fill=\"white\"/>", fmt_num(width), fmt_num(height));

    let _ = writeln!(out, "<g class=\"grid\" stroke=\"#c8c8c8\" stroke-width=\"{}\" fill=\"none\">", fmt_num(style.grid_stroke));
    for r in 0..=m.rows() {
        let y = style.margin + r as f64 * s;
        let _ = writeln!(out, "<path d=\"M {} {} H {}\"/>", fmt_num(style.margin), fmt_num(y), fmt_num(width - style.margin));
    }
    for c in 0..=m.cols() {
        let x = style.margin + c as f64 * s;
        let _ = writeln!(out, "<path d=\"M {} {} V {}\"/>", fmt_num(x), fmt_num(style.margin), fmt_num(height - style.margin));
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(
        out,
        "<g class=\"strands\" stroke=\"black\" stroke-width=\"{}\" stroke-linecap=\"butt\" fill=\"none\">",
        fmt_num(style.stroke)
    );
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let t = m.get(r, c);
            if t.is_blank() {
                continue;
            }
            let cell = Cell { x: style.margin + c as f64 * s, y: style.margin + r as f64 * s, s };
            let _ = writeln!(
                out,
                "<g class=\"glyph {}\" data-row=\"{r}\" data-col=\"{c}\" data-code=\"{}\">{}</g>",
                glyph_class(t),
                t.code(),
                glyph(t, &cell, style)
            );
        }
    }
    let _ = writeln!(out, "</g>");

    let mismatches = m.mismatched_edges();
    if !mismatches.is_empty() {
        let _ = writeln!(out, "<g class=\"mismatches\" fill=\"red\" stroke=\"none\">");
        for (r, c, e) in mismatches {
            let cell = Cell { x: style.margin + c as f64 * s, y: style.margin + r as f64 * s, s };
            let (x, y) = cell.mid(e);
            let _ = writeln!(
                out,
                "<circle class=\"mismatch\" data-row=\"{r}\" data-col=\"{c}\" data-edge=\"{e}\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
                fmt_num(x),
                fmt_num(y),
                fmt_num(style.marker_radius)
            );
        }
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(svg: &str, needle: &str) -> usize {
        svg.matches(needle).count()
    }

    #[test]
    fn unknot_has_four_arcs() {
        let svg = render_svg(&Mosaic::parse("2 2\n2 1\n3 4").unwrap());
        assert_eq!(count(&svg, "class=\"glyph arc\""), 4);
        assert_eq!(count(&svg, "class=\"mismatch\""), 0);
        assert!(svg.contains("data-style-version=\"1\""));
    }

    #[test]
    fn broken_edge_is_marked() {
        let svg = render_svg(&Mosaic::parse("2 2\n2 1\n3 0").unwrap());
        assert_eq!(count(&svg, "class=\"glyph arc\""), 3);
        assert!(svg.contains("class=\"mismatch\" data-row=\"0\" data-col=\"1\" data-edge=\"S\""));
        assert!(svg.contains("class=\"mismatch\" data-row=\"1\" data-col=\"0\" data-edge=\"E\""));
    }

    #[test]
    fn crossing_under_strand_has_gap() {
        let svg = render_svg(&Mosaic::parse("1 1\n9").unwrap());
        // Two halves of the horizontal under strand plus the vertical over strand.
        let glyph = svg.lines().find(|l| l.contains("glyph crossing")).unwrap();
        assert_eq!(count(glyph, "<path"), 3);
        assert!(glyph.contains("M 8 28 L 20 28"));
        assert!(glyph.contains("M 28 8 L 28 48"));
    }

    #[test]
    fn arcs_bow_toward_their_corner() {
        let svg = render_svg(&Mosaic::parse("1 1\n1").unwrap());
        // SW arc: from the south midpoint to the west midpoint, centred on the SW corner.
        assert!(svg.contains("M 28 48 A 20 20 0 0 0 8 28"), "{svg}");
    }
}
