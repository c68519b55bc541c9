//! Minimal SVG line chart of the quotient columns of a curve.

use std::fmt::Write;

use wulff_core::FamilyCurve;

const W: f64 = 640.0;
const H: f64 = 400.0;
const PAD: f64 = 50.0;
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

/// One polyline per quotient column; each column is normalized by its value
/// at the last grid point so that columns of different magnitude share the
/// vertical axis.
pub fn render(curve: &FamilyCurve) -> String {
    let lambdas = curve.lambdas();
    let series: Vec<(String, Vec<f64>)> = curve
        .columns
        .iter()
        .map(|q| {
            let v = curve.series(*q).unwrap();
            let last = *v.last().unwrap();
            (q.to_string(), v.iter().map(|x| x / last).collect())
        })
        .collect();
    let (x0, x1) = (lambdas[0], *lambdas.last().unwrap());
    let (mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY);
    for (_, v) in &series {
        for y in v {
            y0 = y0.min(*y);
            y1 = y1.max(*y);
        }
    }
    if y1 - y0 < 1e-12 {
        y0 -= 0.5;
        y1 += 0.5;
    }
    let xspan = if x1 > x0 { x1 - x0 } else { 1.0 };
    let px = |x: f64| PAD + (x - x0) / xspan * (W - 2.0 * PAD);
    let py = |y: f64| H - PAD - (y - y0) / (y1 - y0) * (H - 2.0 * PAD);

    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#).unwrap();
    writeln!(s, r#"<rect width="{W}" height="{H}" fill="white"/>"#).unwrap();
    writeln!(
        s,
        r#"<g stroke="black" stroke-width="1"><line x1="{PAD}" y1="{b}" x2="{r}" y2="{b}"/><line x1="{PAD}" y1="{PAD}" x2="{PAD}" y2="{b}"/></g>"#,
        b = H - PAD,
        r = W - PAD
    )
    .unwrap();
    writeln!(s, r#"<g font-family="sans-serif" font-size="11">"#).unwrap();
    writeln!(s, r#"<text x="{}" y="{}" text-anchor="middle">λ</text>"#, W / 2.0, H - 12.0).unwrap();
    for (x, anchor) in [(x0, "start"), (x1, "end")] {
        writeln!(s, r#"<text x="{}" y="{}" text-anchor="{anchor}">{x:.4}</text>"#, px(x), H - PAD + 16.0).unwrap();
    }
    for y in [y0, y1] {
        writeln!(s, r#"<text x="{}" y="{}" text-anchor="end">{y:.4}</text>"#, PAD - 4.0, py(y) + 4.0).unwrap();
    }
    for (k, (name, _)) in series.iter().enumerate() {
        let c = COLORS[k % COLORS.len()];
        writeln!(s, r#"<text x="{}" y="{}" fill="{c}">{name} / final value</text>"#, W - PAD - 110.0, PAD + 14.0 * k as f64).unwrap();
    }
    writeln!(s, "</g>").unwrap();
    for (k, (_, v)) in series.iter().enumerate() {
        let pts: Vec<String> = lambdas.iter().zip(v).map(|(x, y)| format!("{:.2},{:.2}", px(*x), py(*y))).collect();
        writeln!(
            s,
            r#"<polyline fill="none" stroke="{}" stroke-width="1.5" points="{}"/>"#,
            COLORS[k % COLORS.len()],
            pts.join(" ")
        )
        .unwrap();
    }
    writeln!(s, "</svg>").unwrap();
    s
}
