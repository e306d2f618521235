//! Log-log NCP plot rendered straight to SVG.

use std::fmt::Write;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 160.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 60.0;
/// Sub-bins per decade of `k` when thinning curves.
pub const BINS_PER_DECADE: f64 = 10.0;
const COLORS: [&str; 7] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf",
];

/// Keeps the lowest point of each log-spaced bin of `k`.
pub fn bin_minimum(series: &[(usize, f64)]) -> Vec<(usize, f64)> {
    let mut out: Vec<(i64, usize, f64)> = Vec::new();
    for &(k, phi) in series {
        if k == 0 || !(phi > 0.0) {
            continue;
        }
        let bin = ((k as f64).log10() * BINS_PER_DECADE + 1e-9).floor() as i64;
        match out.last_mut() {
            Some(last) if last.0 == bin => {
                if phi < last.2 {
                    *last = (bin, k, phi);
                }
            }
            _ => out.push((bin, k, phi)),
        }
    }
    out.into_iter().map(|(_, k, phi)| (k, phi)).collect()
}

/// One polyline per named curve over log-log axes, with decade gridlines, a
/// legend, and an optional dashed horizontal line for the lower bound.
pub fn render(curves: &[(String, Vec<(usize, f64)>)], bound: Option<f64>) -> String {
    let binned: Vec<(&str, Vec<(usize, f64)>)> = curves
        .iter()
        .map(|(name, s)| (name.as_str(), bin_minimum(s)))
        .collect();
    let max_k = binned
        .iter()
        .flat_map(|(_, s)| s.iter().map(|p| p.0))
        .max()
        .unwrap_or(10)
        .max(10);
    let mut min_phi = binned
        .iter()
        .flat_map(|(_, s)| s.iter().map(|p| p.1))
        .fold(1.0f64, f64::min);
    if let Some(b) = bound.filter(|b| *b > 0.0) {
        min_phi = min_phi.min(b);
    }
    let x_dec = (max_k as f64).log10().ceil().max(1.0);
    let y_lo = min_phi.log10().floor().min(-1.0);
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let px = |k: f64| LEFT + k.log10() / x_dec * plot_w;
    let py = |phi: f64| TOP + (0.0 - phi.log10()) / (0.0 - y_lo) * plot_h;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" width="{WIDTH}" height="{HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        s,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    for d in 0..=x_dec as i64 {
        let x = px(10f64.powi(d as i32));
        let _ = writeln!(
            s,
            r##"<line x1="{x:.2}" y1="{TOP}" x2="{x:.2}" y2="{:.2}" stroke="#dddddd"/><text x="{x:.2}" y="{:.2}" text-anchor="middle">1e{d}</text>"##,
            TOP + plot_h,
            TOP + plot_h + 18.0
        );
    }
    for d in (y_lo as i64)..=0 {
        let y = py(10f64.powi(d as i32));
        let _ = writeln!(
            s,
            r##"<line x1="{LEFT}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#dddddd"/><text x="{:.2}" y="{:.2}" text-anchor="end">1e{d}</text>"##,
            LEFT + plot_w,
            LEFT - 6.0,
            y + 4.0
        );
    }
    let _ = writeln!(
        s,
        r##"<rect x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>"##
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">k (nodes in cluster)</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 15.0
    );
    let _ = writeln!(
        s,
        r#"<text x="20" y="{:.2}" text-anchor="middle" transform="rotate(-90 20 {:.2})">Φ (conductance)</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0
    );
    if let Some(b) = bound.filter(|b| *b > 0.0) {
        let y = py(b);
        let _ = writeln!(
            s,
            r##"<line x1="{LEFT}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#444444" stroke-dasharray="6,4"/>"##,
            LEFT + plot_w
        );
    }
    for (i, (name, pts)) in binned.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        if !pts.is_empty() {
            let path: Vec<String> = pts
                .iter()
                .map(|&(k, phi)| format!("{:.2},{:.2}", px(k as f64), py(phi)))
                .collect();
            let _ = writeln!(
                s,
                r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#,
                path.join(" ")
            );
        }
        let ly = TOP + 20.0 + 20.0 * i as f64;
        let lx = WIDTH - RIGHT + 15.0;
        let _ = writeln!(
            s,
            r#"<line x1="{lx}" y1="{ly}" x2="{:.2}" y2="{ly}" stroke="{color}" stroke-width="2"/><text x="{:.2}" y="{:.2}">{name}</text>"#,
            lx + 25.0,
            lx + 30.0,
            ly + 4.0
        );
    }
    if bound.is_some() {
        let ly = TOP + 20.0 + 20.0 * binned.len() as f64;
        let lx = WIDTH - RIGHT + 15.0;
        let _ = writeln!(
            s,
            r##"<line x1="{lx}" y1="{ly}" x2="{:.2}" y2="{ly}" stroke="#444444" stroke-dasharray="6,4"/><text x="{:.2}" y="{:.2}">spectral bound</text>"##,
            lx + 25.0,
            lx + 30.0,
            ly + 4.0
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bins_keep_minimum() {
        let s: Vec<(usize, f64)> = (1..=100).map(|k| (k, 1.0 / k as f64)).collect();
        let b = bin_minimum(&s);
        // k = 1 alone, then bins of ~26% width
        assert_eq!(b[0], (1, 1.0));
        assert!(b.len() <= 21);
        assert_eq!(*b.last().unwrap(), (100, 0.01));
        assert!(b.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn render_has_curves_and_legend() {
        let svg = render(
            &[
                ("spectral".into(), vec![(1, 1.0), (10, 0.1)]),
                ("flow".into(), vec![(1, 1.0), (100, 0.01)]),
            ],
            Some(0.005),
        );
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert!(svg.contains(">spectral<") && svg.contains(">flow<"));
        assert!(svg.contains("stroke-dasharray"));
        assert!(svg.contains(r#"viewBox="0 0 800 600""#));
    }
}
