//! SVG rendering of rescaled planar disk systems.

use crate::error::Error;
use crate::geometry::{ensure_planar_system, DiskSystem, Point2, Scale};
use std::fmt::Write as _;

/// Renders the system rescaled by `scale` as a standalone SVG document:
/// one outlined circle per disk, a dot per center, and — when given — a
/// cross-hair marker on the witness point. Geometry coordinates are used
/// directly; a flip transform puts the y-axis upward as on paper.
pub fn render_system_svg(
    system: &DiskSystem,
    scale: Scale,
    witness: Option<Point2>,
) -> Result<String, Error> {
    ensure_planar_system(system)?;
    assert!(
        scale.is_finite() && scale >= 0.0,
        "render scale must be finite and nonnegative, got {scale}"
    );
    let mut min_x = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    for d in system.disks() {
        let r = scale * d.radius();
        min_x = min_x.min(d.center()[0] - r);
        max_x = max_x.max(d.center()[0] + r);
        min_y = min_y.min(d.center()[1] - r);
        max_y = max_y.max(d.center()[1] + r);
    }
    if let Some(w) = witness {
        min_x = min_x.min(w[0]);
        max_x = max_x.max(w[0]);
        min_y = min_y.min(w[1]);
        max_y = max_y.max(w[1]);
    }
    let pad = 0.05 * ((max_x - min_x).max(max_y - min_y)).max(1.0);
    min_x -= pad;
    max_x += pad;
    min_y -= pad;
    max_y += pad;
    let width = max_x - min_x;
    let height = max_y - min_y;
    let stroke = 0.004 * width.max(height);
    let dot = 1.5 * stroke;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="640" height="{:.0}" viewBox="{} {} {} {}">"#,
        640.0 * height / width,
        min_x,
        -max_y,
        width,
        height
    );
    let _ = writeln!(out, r#"<g transform="scale(1 -1)">"#);
    for d in system.disks() {
        let _ = writeln!(
            out,
            r##"<circle class="disk" cx="{}" cy="{}" r="{}" fill="none" stroke="#336" stroke-width="{stroke}"/>"##,
            d.center()[0],
            d.center()[1],
            scale * d.radius()
        );
    }
    for d in system.disks() {
        let _ = writeln!(
            out,
            r##"<circle class="center" cx="{}" cy="{}" r="{dot}" fill="#336"/>"##,
            d.center()[0],
            d.center()[1]
        );
    }
    if let Some(w) = witness {
        let _ = writeln!(
            out,
            r##"<circle class="witness" cx="{}" cy="{}" r="{}" fill="#c22"/>"##,
            w[0],
            w[1],
            1.2 * dot
        );
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    Ok(out)
}
