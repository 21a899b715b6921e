//! SVG pictures of lattice curves over a colored grid.

use std::fmt::Write as _;
use std::path::Path;

use windlab_core::invariant::Coloring;
use windlab_core::winding::curve_points;
use windlab_core::{winding_oracle, InvariantSpec, Word};

#[derive(Debug, Clone)]
pub struct RenderConfig {
    /// Side of one grid cell in pixels, at least 4.
    pub cell_px: u32,
    /// Empty cells added around the curve's bounding box.
    pub pad_cells: u32,
    pub show_winding_numbers: bool,
    pub coloring: Option<InvariantSpec>,
}

impl Default for RenderConfig {
    fn default() -> RenderConfig {
        RenderConfig {
            cell_px: 24,
            pad_cells: 1,
            show_winding_numbers: true,
            coloring: None,
        }
    }
}

const DARK: &str = "#9e9e9e";
const LIGHT: &str = "#e8e8e8";

struct Frame {
    min_x: i64,
    max_y: i64,
    cols: i64,
    rows: i64,
    cell: i64,
}

impl Frame {
    fn px(&self, x: i64) -> i64 {
        (x - self.min_x) * self.cell
    }

    fn py(&self, y: i64) -> i64 {
        (self.max_y - y) * self.cell
    }
}

/// Deterministic SVG 1.1 document for the curve of `w`.
///
/// Panics if `cfg.cell_px < 4`.
pub fn render_svg(w: &Word, cfg: &RenderConfig) -> String {
    assert!(cfg.cell_px >= 4, "cell_px must be at least 4");
    let path = curve_points(w);
    let (x0, y0, x1, y1) = path.bounding_box();
    let pad = cfg.pad_cells as i64;
    let f = Frame {
        min_x: x0 - pad,
        max_y: y1 + pad,
        cols: x1 - x0 + 2 * pad,
        rows: y1 - y0 + 2 * pad,
        cell: cfg.cell_px as i64,
    };
    let (width, height) = (f.cols * f.cell, f.rows * f.cell);
    let font = (f.cell * 5 / 12).max(3);
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        s,
        r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="black"/></marker></defs>"#
    );
    let _ = writeln!(
        s,
        r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#
    );

    if let Some(spec) = &cfg.coloring {
        let _ = writeln!(s, r#"<g id="coloring">"#);
        for j in (f.max_y - f.rows)..f.max_y {
            for i in f.min_x..(f.min_x + f.cols) {
                let (x, y) = (f.px(i), f.py(j + 1));
                match spec.coloring() {
                    Coloring::Two(_) => {
                        let fill = if spec.weight(i, j) > 0 { DARK } else { LIGHT };
                        let _ = writeln!(
                            s,
                            r#"<rect x="{x}" y="{y}" width="{c}" height="{c}" fill="{fill}"/>"#,
                            c = f.cell
                        );
                    }
                    Coloring::PGood(_) => {
                        let _ = writeln!(
                            s,
                            r##"<text x="{}" y="{}" font-size="{}" fill="#777" font-family="monospace">{}</text>"##,
                            x + 2,
                            y + font,
                            font * 2 / 3,
                            spec.weight(i, j)
                        );
                    }
                }
            }
        }
        let _ = writeln!(s, "</g>");
    }

    let _ = writeln!(s, r##"<g id="grid" stroke="#bbbbbb" stroke-width="1">"##);
    for c in 0..=f.cols {
        let x = c * f.cell;
        let _ = writeln!(s, r#"<line x1="{x}" y1="0" x2="{x}" y2="{height}"/>"#);
    }
    for r in 0..=f.rows {
        let y = r * f.cell;
        let _ = writeln!(s, r#"<line x1="0" y1="{y}" x2="{width}" y2="{y}"/>"#);
    }
    let _ = writeln!(s, "</g>");

    if cfg.show_winding_numbers {
        if let Ok(p) = winding_oracle(w) {
            let _ = writeln!(
                s,
                r#"<g id="winding" font-family="sans-serif" font-size="{font}" text-anchor="middle">"#
            );
            for ((i, j), c) in p.terms() {
                let cx = f.px(i) + f.cell / 2;
                let cy = f.py(j) - f.cell / 2 + font / 3;
                let _ = writeln!(s, r#"<text x="{cx}" y="{cy}">{c}</text>"#);
            }
            let _ = writeln!(s, "</g>");
        }
    }

    if !w.is_empty() {
        let points: Vec<String> = path
            .vertices()
            .iter()
            .map(|&(x, y)| format!("{},{}", f.px(x), f.py(y)))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline points="{}" fill="none" stroke="black" stroke-width="2" marker-end="url(#arrow)"/>"#,
            points.join(" ")
        );
    }
    s.push_str("</svg>\n");
    s
}

pub fn write_svg(path: &Path, w: &Word, cfg: &RenderConfig) -> std::io::Result<()> {
    std::fs::write(path, render_svg(w, cfg))
        .map_err(|e| std::io::Error::new(e.kind(), format!("writing {}: {e}", path.display())))
}
