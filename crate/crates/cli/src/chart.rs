//! Static SVG line charts.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 56.0;
const COLORS: &[&str] = &["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

impl Series {
    pub fn new(label: impl Into<String>, points: Vec<(f64, f64)>) -> Self {
        Self {
            label: label.into(),
            points,
        }
    }
}

struct Axis {
    lo: f64,
    hi: f64,
    log: bool,
}

impl Axis {
    fn fit(values: impl Iterator<Item = f64> + Clone) -> Self {
        let lo = values.clone().fold(f64::INFINITY, f64::min);
        let hi = values.fold(f64::NEG_INFINITY, f64::max);
        let log = lo > 0.0 && hi / lo > 1e3;
        let (mut lo, mut hi) = if log { (lo.log10(), hi.log10()) } else { (lo, hi) };
        if hi - lo < 1e-12 {
            lo -= 0.5;
            hi += 0.5;
        }
        Self { lo, hi, log }
    }

    fn frac(&self, v: f64) -> f64 {
        let v = if self.log { v.log10() } else { v };
        (v - self.lo) / (self.hi - self.lo)
    }

    fn label(&self, end: f64) -> String {
        if self.log {
            format!("1e{end:.1}")
        } else {
            format!("{end:.4}")
        }
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render(series: &[Series], title: &str, timestamp: Option<u64>) -> anyhow::Result<String> {
    if series.is_empty() || series.iter().all(|s| s.points.is_empty()) {
        bail!("a chart needs at least one non-empty series");
    }
    if series
        .iter()
        .flat_map(|s| &s.points)
        .any(|(x, y)| !x.is_finite() || !y.is_finite())
    {
        bail!("chart values must be finite");
    }
    let pts = || series.iter().flat_map(|s| s.points.iter());
    let xa = Axis::fit(pts().map(|p| p.0));
    let ya = Axis::fit(pts().map(|p| p.1));
    let (pw, ph) = (WIDTH - 2.0 * MARGIN, HEIGHT - 2.0 * MARGIN);

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    )?;
    if let Some(t) = timestamp {
        writeln!(svg, "<!-- generated at unix time {t} -->")?;
    }
    writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#)?;
    writeln!(
        svg,
        r#"<text x="{}" y="24" font-family="sans-serif" font-size="14" text-anchor="middle">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    )?;
    writeln!(
        svg,
        r#"<rect x="{MARGIN}" y="{MARGIN}" width="{pw}" height="{ph}" fill="none" stroke="black"/>"#
    )?;
    let bottom = HEIGHT - MARGIN;
    for (x, anchor, v) in [(MARGIN, "start", xa.lo), (WIDTH - MARGIN, "end", xa.hi)] {
        writeln!(
            svg,
            r#"<text x="{x}" y="{}" font-family="sans-serif" font-size="11" text-anchor="{anchor}">{}</text>"#,
            bottom + 16.0,
            xa.label(v)
        )?;
    }
    for (y, v) in [(bottom, ya.lo), (MARGIN + 10.0, ya.hi)] {
        writeln!(
            svg,
            r#"<text x="{}" y="{y}" font-family="sans-serif" font-size="11" text-anchor="end">{}</text>"#,
            MARGIN - 4.0,
            ya.label(v)
        )?;
    }
    for (i, s) in series.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let coords: Vec<String> = s
            .points
            .iter()
            .map(|&(x, y)| {
                format!(
                    "{:.2},{:.2}",
                    MARGIN + xa.frac(x) * pw,
                    bottom - ya.frac(y) * ph
                )
            })
            .collect();
        writeln!(
            svg,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#,
            coords.join(" ")
        )?;
        writeln!(
            svg,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="11" fill="{color}">{}</text>"#,
            MARGIN + 8.0,
            MARGIN + 16.0 + 14.0 * i as f64,
            escape(&s.label)
        )?;
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Writes a standalone SVG; log axes are used for positive coordinates
/// spanning more than three decades.
pub fn emit_chart(series: &[Series], title: &str, path: &Path, deterministic: bool) -> anyhow::Result<()> {
    let stamp = if deterministic {
        None
    } else {
        Some(SystemTime::now().duration_since(UNIX_EPOCH)?.as_secs())
    };
    let svg = render(series, title, stamp)?;
    fs::write(path, svg).with_context(|| format!("writing {}", path.display()))
}
