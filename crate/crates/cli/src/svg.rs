//! Minimal standalone SVG 1.1 line plots: axes, polylines, optional
//! vertical tick marks (used for sign-change locations). No styling
//! contract beyond well-formed SVG.

use std::fmt::Write as _;

pub struct Series<'a> {
    pub name: &'a str,
    pub color: &'a str,
    pub points: Vec<(f64, f64)>,
}

const W: f64 = 800.0;
const H: f64 = 500.0;
const MARGIN: f64 = 60.0;

pub fn render(title: &str, series: &[Series<'_>], marks: &[f64]) -> String {
    let finite = series
        .iter()
        .flat_map(|s| s.points.iter())
        .filter(|(x, y)| x.is_finite() && y.is_finite());
    let (mut x_min, mut x_max) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y_min, mut y_max) = (f64::INFINITY, f64::NEG_INFINITY);
    for (x, y) in finite {
        x_min = x_min.min(*x);
        x_max = x_max.max(*x);
        y_min = y_min.min(*y);
        y_max = y_max.max(*y);
    }
    if !x_min.is_finite() {
        x_min = 0.0;
        x_max = 1.0;
        y_min = 0.0;
        y_max = 1.0;
    }
    if x_max == x_min {
        x_max = x_min + 1.0;
    }
    if y_max == y_min {
        y_max = y_min + 1.0;
    }
    let sx = |x: f64| MARGIN + (x - x_min) / (x_max - x_min) * (W - 2.0 * MARGIN);
    let sy = |y: f64| H - MARGIN - (y - y_min) / (y_max - y_min) * (H - 2.0 * MARGIN);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#
    );
    let _ = writeln!(
        out,
        r#"  <text x="{}" y="24" font-size="16" text-anchor="middle">{}</text>"#,
        W / 2.0,
        xml_escape(title)
    );
    // axes
    let _ = writeln!(
        out,
        r#"  <line x1="{m}" y1="{b}" x2="{r}" y2="{b}" stroke="black"/>"#,
        m = MARGIN,
        b = H - MARGIN,
        r = W - MARGIN
    );
    let _ = writeln!(
        out,
        r#"  <line x1="{m}" y1="{t}" x2="{m}" y2="{b}" stroke="black"/>"#,
        m = MARGIN,
        t = MARGIN,
        b = H - MARGIN
    );
    // extreme labels
    let _ = writeln!(
        out,
        r#"  <text x="{}" y="{}" font-size="11">{:.4e}</text>"#,
        4.0,
        MARGIN + 4.0,
        y_max
    );
    let _ = writeln!(
        out,
        r#"  <text x="{}" y="{}" font-size="11">{:.4e}</text>"#,
        4.0,
        H - MARGIN,
        y_min
    );
    let _ = writeln!(
        out,
        r#"  <text x="{}" y="{}" font-size="11">{}</text>"#,
        MARGIN,
        H - MARGIN + 16.0,
        x_min
    );
    let _ = writeln!(
        out,
        r#"  <text x="{}" y="{}" font-size="11" text-anchor="end">{}</text>"#,
        W - MARGIN,
        H - MARGIN + 16.0,
        x_max
    );
    // zero line when it is inside the range
    if y_min < 0.0 && y_max > 0.0 {
        let zy = sy(0.0);
        let _ = writeln!(
            out,
            r#"  <line x1="{m}" y1="{zy}" x2="{r}" y2="{zy}" stroke="gray" stroke-dasharray="4 4"/>"#,
            m = MARGIN,
            r = W - MARGIN
        );
    }
    for mark in marks {
        if !mark.is_finite() {
            continue;
        }
        let mx = sx(*mark);
        let _ = writeln!(
            out,
            r#"  <line x1="{mx}" y1="{t}" x2="{mx}" y2="{b}" stroke="green" stroke-dasharray="2 3"/>"#,
            t = MARGIN,
            b = H - MARGIN
        );
    }
    for s in series {
        let pts: Vec<String> = s
            .points
            .iter()
            .filter(|(x, y)| x.is_finite() && y.is_finite())
            .map(|(x, y)| format!("{:.2},{:.2}", sx(*x), sy(*y)))
            .collect();
        let _ = writeln!(
            out,
            r#"  <polyline fill="none" stroke="{}" stroke-width="1.5" points="{}"/>"#,
            s.color,
            pts.join(" ")
        );
    }
    // legend
    let mut ly = MARGIN + 10.0;
    for s in series {
        let _ = writeln!(
            out,
            r#"  <text x="{}" y="{}" font-size="12" fill="{}">{}</text>"#,
            W - MARGIN - 150.0,
            ly,
            s.color,
            xml_escape(s.name)
        );
        ly += 16.0;
    }
    let _ = writeln!(out, "</svg>");
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn produces_wellformed_document() {
        let s = Series {
            name: "f",
            color: "red",
            points: (0..50).map(|i| (i as f64, (i as f64 * 0.3).sin())).collect(),
        };
        let doc = render("test <plot>", &[s], &[10.0, 20.0]);
        assert!(doc.starts_with("<?xml"));
        assert!(doc.contains(r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1""#));
        assert!(doc.contains("polyline"));
        assert!(doc.contains("&lt;plot&gt;"));
        assert!(doc.trim_end().ends_with("</svg>"));
        // balanced tag count
        assert_eq!(doc.matches("<svg").count(), 1);
        assert_eq!(doc.matches("</svg>").count(), 1);
    }

    #[test]
    fn empty_series_is_still_wellformed() {
        let doc = render("empty", &[], &[]);
        assert!(doc.contains("</svg>"));
    }
}
