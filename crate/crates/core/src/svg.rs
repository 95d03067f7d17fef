//! Standalone SVG 1.1 pictures of regions and tilings.

use std::fmt::Write;

use crate::count::first_tiling;
use crate::lattice::{LatticePoint, LozengeKind, LozengePos, Region, UnitTriangle};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderOptions {
    /// Pixels per unit edge.
    pub scale: f64,
    /// Overlay the first tiling in backtracking order.
    pub tiling: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            scale: 40.0,
            tiling: false,
        }
    }
}

const MARGIN: f64 = 10.0;
const SQRT3_2: f64 = 0.866_025_403_784_438_6;

fn fill(kind: LozengeKind) -> &'static str {
    match kind {
        LozengeKind::Left => "#8fb3d9",
        LozengeKind::Right => "#e6b36e",
        LozengeKind::Vertical => "#a3cf8a",
    }
}

struct Frame {
    scale: f64,
    min_x: f64,
    max_y: f64,
}

impl Frame {
    fn xy(&self, p: LatticePoint) -> (f64, f64) {
        let x = p.col as f64 + p.row as f64 / 2.0;
        let y = p.row as f64 * SQRT3_2;
        (
            MARGIN + (x - self.min_x) * self.scale,
            MARGIN + (self.max_y - y) * self.scale,
        )
    }

    fn path(&self, pts: &[LatticePoint]) -> String {
        let mut d = String::new();
        for (i, p) in pts.iter().enumerate() {
            let (x, y) = self.xy(*p);
            let _ = write!(d, "{}{x:.2},{y:.2} ", if i == 0 { "M" } else { "L" });
        }
        d.push('Z');
        d
    }
}

/// Corners of a lozenge in cyclic order: far, shared, far, shared.
fn lozenge_outline(l: &LozengePos) -> [LatticePoint; 4] {
    let a = l.up().corners();
    let b = l.down().corners();
    let shared: Vec<LatticePoint> = a.iter().copied().filter(|p| b.contains(p)).collect();
    let far_a = a
        .iter()
        .copied()
        .find(|p| !b.contains(p))
        .expect("lozenge halves share an edge");
    let far_b = b
        .iter()
        .copied()
        .find(|p| !a.contains(p))
        .expect("lozenge halves share an edge");
    [far_a, shared[0], far_b, shared[1]]
}

/// Renders `r`. With `opts.tiling`, an untileable region gets a
/// "no tilings" note instead of an overlay.
pub fn render_svg(r: &Region, opts: &RenderOptions) -> String {
    let tiling = if opts.tiling {
        Some(first_tiling(r))
    } else {
        None
    };
    render_with(r, tiling.as_ref().map(|t| t.as_deref()), opts.scale)
}

fn render_with(r: &Region, tiling: Option<Option<&[LozengePos]>>, scale: f64) -> String {
    let points: Vec<(f64, f64)> = r
        .triangles()
        .flat_map(UnitTriangle::corners)
        .map(|p| (p.col as f64 + p.row as f64 / 2.0, p.row as f64 * SQRT3_2))
        .collect();
    let fold = |f: fn(f64, f64) -> f64, init: f64, sel: fn(&(f64, f64)) -> f64| {
        points.iter().map(sel).fold(init, f)
    };
    let (min_x, max_x) = (
        fold(f64::min, f64::INFINITY, |p| p.0),
        fold(f64::max, f64::NEG_INFINITY, |p| p.0),
    );
    let (min_y, max_y) = (
        fold(f64::min, f64::INFINITY, |p| p.1),
        fold(f64::max, f64::NEG_INFINITY, |p| p.1),
    );
    let (min_x, max_x, min_y, max_y) = if points.is_empty() {
        (0.0, 1.0, 0.0, 1.0)
    } else {
        (min_x, max_x, min_y, max_y)
    };
    let frame = Frame {
        scale,
        min_x,
        max_y,
    };
    let width = 2.0 * MARGIN + (max_x - min_x) * scale;
    let mut height = 2.0 * MARGIN + (max_y - min_y) * scale;
    let note = matches!(tiling, Some(None));
    if note {
        height += 24.0;
    }

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    );
    let _ = writeln!(s, r##"<g id="triangles" stroke="#555" stroke-width="1">"##);
    for t in r.triangles() {
        let class = if t.is_up() { "up" } else { "down" };
        let _ = writeln!(
            s,
            r##"<path class="{class}" fill="#f4f4f4" d="{}"/>"##,
            frame.path(&t.corners())
        );
    }
    let _ = writeln!(s, "</g>");

    if let Some(Some(lozenges)) = tiling {
        let _ = writeln!(s, r##"<g id="tiling" stroke="#222" stroke-width="1.5">"##);
        for l in lozenges {
            let _ = writeln!(
                s,
                r#"<path class="{:?}" fill="{}" d="{}"/>"#,
                l.kind(),
                fill(l.kind()),
                frame.path(&lozenge_outline(l))
            );
        }
        let _ = writeln!(s, "</g>");
    }

    if r.is_weighted() {
        let _ = writeln!(s, r##"<g id="weights" fill="#555" fill-opacity="0.45">"##);
        for pos in r.weights().keys() {
            let [a, _, b, _] = lozenge_outline(pos);
            let (ax, ay) = frame.xy(a);
            let (bx, by) = frame.xy(b);
            let (cx, cy) = ((ax + bx) / 2.0, (ay + by) / 2.0);
            let angle = (by - ay).atan2(bx - ax).to_degrees();
            let _ = writeln!(
                s,
                r#"<ellipse cx="{cx:.2}" cy="{cy:.2}" rx="{:.2}" ry="{:.2}" transform="rotate({angle:.2} {cx:.2} {cy:.2})"/>"#,
                0.6 * scale,
                0.2 * scale
            );
        }
        let _ = writeln!(s, "</g>");
    }

    if note {
        let _ = writeln!(
            s,
            r#"<text x="{MARGIN:.2}" y="{:.2}" font-family="sans-serif" font-size="14">no tilings</text>"#,
            height - MARGIN
        );
    }
    s.push_str("</svg>\n");
    s
}
