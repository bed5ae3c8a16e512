use std::fmt::Write as _;

use super::gd::{cell_label, GeneralizedDyckPath};
use super::rect::RectPath;

const UNIT: f64 = 24.0;
const MARGIN: f64 = 12.0;

/// Something that can be drawn on a lattice grid.
pub trait LatticeDrawing {
    /// Grid width and height in lattice units.
    fn extent(&self) -> (u64, u64);
    /// Path vertices from the origin.
    fn path_vertices(&self) -> Vec<(u64, u64)>;
    /// `(x, y, text)` written in the unit cell with lower-left corner `(x, y)`.
    fn cell_labels(&self) -> Vec<(u64, u64, String)> {
        Vec::new()
    }

    /// Standalone SVG document of a single path.
    fn to_svg(&self, labels: bool) -> String {
        let (w, h) = self.extent();
        let width = w as f64 * UNIT + 2.0 * MARGIN;
        let height = h as f64 * UNIT + 2.0 * MARGIN;
        let mut out = header(width, height);
        draw_panel(&mut out, self, MARGIN, MARGIN, labels);
        out.push_str("</svg>\n");
        out
    }
}

impl LatticeDrawing for RectPath {
    fn extent(&self) -> (u64, u64) {
        (self.t(), self.s())
    }

    fn path_vertices(&self) -> Vec<(u64, u64)> {
        self.vertices()
    }
}

impl LatticeDrawing for GeneralizedDyckPath {
    fn extent(&self) -> (u64, u64) {
        (self.n(), self.n())
    }

    fn path_vertices(&self) -> Vec<(u64, u64)> {
        self.vertices()
    }

    fn cell_labels(&self) -> Vec<(u64, u64, String)> {
        let (n, k) = (self.n(), self.k());
        (0..n).flat_map(|x| (0..n).filter_map(move |y| cell_label(n, k, x, y).map(|l| (x, y, l.to_string())))).collect()
    }
}

fn header(width: f64, height: f64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    )
}

fn draw_panel<D: LatticeDrawing + ?Sized>(out: &mut String, d: &D, ox: f64, oy: f64, labels: bool) {
    let (w, h) = d.extent();
    // lattice (x, y) -> svg coordinates with y growing upward
    let px = |x: f64| ox + x * UNIT;
    let py = |y: f64| oy + (h as f64 - y) * UNIT;
    let _ = writeln!(out, "<g>");
    for x in 0..=w {
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#ccc\" stroke-width=\"1\"/>",
            px(x as f64),
            py(0.0),
            px(x as f64),
            py(h as f64)
        );
    }
    for y in 0..=h {
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#ccc\" stroke-width=\"1\"/>",
            px(0.0),
            py(y as f64),
            px(w as f64),
            py(y as f64)
        );
    }
    let _ = writeln!(
        out,
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>",
        px(0.0),
        py(0.0),
        px(w as f64),
        py(h as f64)
    );
    if labels {
        for (x, y, text) in d.cell_labels() {
            let _ = writeln!(
                out,
                "<text x=\"{}\" y=\"{}\" font-size=\"10\" text-anchor=\"middle\" font-family=\"sans-serif\">{text}</text>",
                px(x as f64 + 0.5),
                py(y as f64 + 0.5) + 3.5
            );
        }
    }
    let points: Vec<String> =
        d.path_vertices().iter().map(|&(x, y)| format!("{},{}", px(x as f64), py(y as f64))).collect();
    let _ = writeln!(
        out,
        "<polyline points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"2.5\" stroke-linejoin=\"round\"/>",
        points.join(" ")
    );
    let _ = writeln!(out, "</g>");
}

/// All paths drawn side by side in a near-square grid of panels.
pub fn panels_svg<D: LatticeDrawing>(items: &[D], labels: bool) -> String {
    let cols = (items.len() as f64).sqrt().ceil().max(1.0) as usize;
    let rows = items.len().div_ceil(cols).max(1);
    let (w, h) = items.first().map_or((1, 1), LatticeDrawing::extent);
    let cell_w = w as f64 * UNIT + 2.0 * MARGIN;
    let cell_h = h as f64 * UNIT + 2.0 * MARGIN;
    let mut out = header(cols as f64 * cell_w, rows as f64 * cell_h);
    for (i, d) in items.iter().enumerate() {
        let (r, c) = (i / cols, i % cols);
        draw_panel(&mut out, d, c as f64 * cell_w + MARGIN, r as f64 * cell_h + MARGIN, labels);
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{enumerate_gd, enumerate_rect_paths, GdStep};

    #[test]
    fn single_path_document() {
        let p = GeneralizedDyckPath::new(4, 3, vec![GdStep::Diagonal(1), GdStep::North, GdStep::East]).unwrap();
        let svg = p.to_svg(true);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<polyline").count(), 1);
        // T_{4,3} has three labeled cells
        assert_eq!(svg.matches("<text").count(), 3);
        assert_eq!(p.to_svg(false).matches("<text").count(), 0);
    }

    #[test]
    fn panel_grid() {
        let paths = enumerate_gd(4, 3, 100).unwrap();
        let svg = panels_svg(&paths, false);
        assert_eq!(svg.matches("<polyline").count(), 8);
        let rect = enumerate_rect_paths(3, 5, 100).unwrap();
        assert_eq!(panels_svg(&rect, false).matches("<polyline").count(), 7);
        assert!(panels_svg::<RectPath>(&[], false).contains("</svg>"));
    }
}
