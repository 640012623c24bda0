//! Minimal line-chart renderer. Produces a standalone SVG document with one
//! 800×600 panel per [`Panel`], stacked vertically.

use std::fmt::Write;

use crate::format;

pub const PANEL_WIDTH: f64 = 800.0;
pub const PANEL_HEIGHT: f64 = 600.0;

const MARGIN_LEFT: f64 = 90.0;
const MARGIN_RIGHT: f64 = 30.0;
const MARGIN_TOP: f64 = 50.0;
const MARGIN_BOTTOM: f64 = 70.0;

const COLORS: [&str; 6] = ["#000000", "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e"];
const DASHES: [&str; 4] = ["", "2,4", "8,4,2,4", "6,3"];

pub struct Series {
    pub label: String,
    /// Free-form tag written to `data-key`, used to find curves again.
    pub key: String,
    pub points: Vec<(f64, f64)>,
}

pub struct Panel {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub series: Vec<Series>,
    /// x positions of dashed vertical boundary markers
    pub markers: Vec<(f64, String)>,
}

/// "Nice" tick positions covering `[lo, hi]`.
pub fn ticks(lo: f64, hi: f64, target: usize) -> Vec<f64> {
    let span = nice(hi - lo, false);
    let step = nice(span / (target.max(2) - 1) as f64, true);
    let start = (lo / step).floor() * step;
    let end = (hi / step).ceil() * step;
    let n = ((end - start) / step).round() as usize;
    (0..=n)
        .map(|k| {
            let t = start + k as f64 * step;
            // snap tiny residues such as 1e-17 to zero
            if t.abs() < step * 1e-9 { 0.0 } else { t }
        })
        .collect()
}

fn nice(x: f64, round: bool) -> f64 {
    let exp = x.log10().floor();
    let f = x / 10f64.powf(exp);
    let nf = if round {
        match f {
            f if f < 1.5 => 1.0,
            f if f < 3.0 => 2.0,
            f if f < 7.0 => 5.0,
            _ => 10.0,
        }
    } else {
        match f {
            f if f <= 1.0 => 1.0,
            f if f <= 2.0 => 2.0,
            f if f <= 5.0 => 5.0,
            _ => 10.0,
        }
    };
    nf * 10f64.powf(exp)
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if !lo.is_finite() {
        return (0.0, 1.0);
    }
    if hi - lo <= 1e-12 * (1.0 + lo.abs()) {
        let pad = if lo == 0.0 { 1.0 } else { 0.1 * lo.abs() };
        return (lo - pad, hi + pad);
    }
    (lo, hi)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render(panels: &[Panel]) -> String {
    let height = PANEL_HEIGHT * panels.len() as f64;
    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="14">"#,
        w = PANEL_WIDTH,
        h = height
    )
    .unwrap();
    writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    for (i, panel) in panels.iter().enumerate() {
        render_panel(&mut svg, panel, i as f64 * PANEL_HEIGHT);
    }
    svg.push_str("</svg>\n");
    svg
}

fn render_panel(svg: &mut String, panel: &Panel, y0: f64) {
    let all = || panel.series.iter().flat_map(|s| s.points.iter());
    let (xmin, xmax) = bounds(all().map(|p| p.0).chain(panel.markers.iter().map(|m| m.0)));
    let (ymin, ymax) = bounds(all().map(|p| p.1));
    let xt = ticks(xmin, xmax, 6);
    let yt = ticks(ymin, ymax, 6);
    let (xlo, xhi) = (xt[0], *xt.last().unwrap());
    let (ylo, yhi) = (yt[0], *yt.last().unwrap());

    let left = MARGIN_LEFT;
    let right = PANEL_WIDTH - MARGIN_RIGHT;
    let top = y0 + MARGIN_TOP;
    let bottom = y0 + PANEL_HEIGHT - MARGIN_BOTTOM;
    let px = |x: f64| left + (x - xlo) / (xhi - xlo) * (right - left);
    let py = |y: f64| bottom - (y - ylo) / (yhi - ylo) * (bottom - top);

    writeln!(svg, r#"<g class="panel">"#).unwrap();
    writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-size="18">{}</text>"#,
        PANEL_WIDTH / 2.0,
        y0 + 30.0,
        escape(&panel.title)
    )
    .unwrap();

    for &t in &xt {
        let x = px(t);
        writeln!(svg, r##"<line class="grid" x1="{x:.2}" y1="{top:.2}" x2="{x:.2}" y2="{bottom:.2}" stroke="#dddddd"/>"##).unwrap();
        writeln!(
            svg,
            r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            bottom + 20.0,
            format::sig(t, 4)
        )
        .unwrap();
    }
    for &t in &yt {
        let y = py(t);
        writeln!(svg, r##"<line class="grid" x1="{left:.2}" y1="{y:.2}" x2="{right:.2}" y2="{y:.2}" stroke="#dddddd"/>"##).unwrap();
        writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            left - 8.0,
            y + 5.0,
            format::sig(t, 4)
        )
        .unwrap();
    }
    writeln!(
        svg,
        r#"<rect class="axis" x="{left:.2}" y="{top:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="black"/>"#,
        right - left,
        bottom - top
    )
    .unwrap();
    writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
        (left + right) / 2.0,
        bottom + 50.0,
        escape(&panel.x_label)
    )
    .unwrap();
    let (lx, ly) = (25.0, (top + bottom) / 2.0);
    writeln!(
        svg,
        r#"<text x="{lx:.2}" y="{ly:.2}" text-anchor="middle" transform="rotate(-90 {lx:.2} {ly:.2})">{}</text>"#,
        escape(&panel.y_label)
    )
    .unwrap();

    for (x, label) in &panel.markers {
        let x = px(*x);
        writeln!(
            svg,
            r##"<line class="marker" x1="{x:.2}" y1="{top:.2}" x2="{x:.2}" y2="{bottom:.2}" stroke="#7f7f7f" stroke-dasharray="5,5"/>"##
        )
        .unwrap();
        writeln!(svg, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, x + 5.0, top + 18.0, escape(label)).unwrap();
    }

    for (k, series) in panel.series.iter().enumerate() {
        let color = COLORS[k % COLORS.len()];
        let dash = DASHES[k % DASHES.len()];
        let points: Vec<String> = series
            .points
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
            .collect();
        let dash_attr = if dash.is_empty() {
            String::new()
        } else {
            format!(r#" stroke-dasharray="{dash}""#)
        };
        writeln!(
            svg,
            r#"<polyline class="curve" data-key="{}" points="{}" fill="none" stroke="{color}" stroke-width="2"{dash_attr}/>"#,
            escape(&series.key),
            points.join(" ")
        )
        .unwrap();

        let ly = top + 20.0 + 22.0 * k as f64;
        let lx = right - 170.0;
        writeln!(
            svg,
            r#"<line class="legend" x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="2"{dash_attr}/>"#,
            lx + 30.0
        )
        .unwrap();
        writeln!(svg, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, lx + 38.0, ly + 5.0, escape(&series.label)).unwrap();
    }
    writeln!(svg, "</g>").unwrap();
}
