//! Minimal static SVG scatter for scan results: log-likelihood against the
//! fraction of incompatible genotypes, with optional quartile whiskers from
//! bootstrap replicates.
//!
//! Output is plain string assembly with fixed-precision coordinates, so a
//! given input always renders to identical bytes.

use std::fmt::Write as _;

use crate::select::BootstrapSummary;

#[derive(Debug, Clone, Copy)]
pub struct ScanPoint {
    /// Fraction of incompatible genotype mass (x axis).
    pub x: f64,
    /// Mixture log-likelihood (y axis).
    pub y: f64,
    pub whiskers: Option<BootstrapSummary>,
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN_LEFT: f64 = 80.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 24.0;
const MARGIN_BOTTOM: f64 = 56.0;

/// Renders the scan scatter. Points with non-finite coordinates are
/// dropped (a −∞ log-likelihood carries no plottable information).
pub fn scan_scatter_svg(points: &[ScanPoint]) -> String {
    let finite: Vec<&ScanPoint> =
        points.iter().filter(|p| p.x.is_finite() && p.y.is_finite()).collect();

    let (x_lo, x_hi) = pad_range(axis_range(
        finite.iter().map(|p| p.x),
        finite.iter().map(|p| p.x),
        (0.0, 1.0),
    ));
    let (y_lo, y_hi) = pad_range(axis_range(
        finite.iter().map(|p| p.whiskers.map_or(p.y, |w| w.min)),
        finite.iter().map(|p| p.whiskers.map_or(p.y, |w| w.max)),
        (0.0, 1.0),
    ));

    let x_of = |x: f64| {
        MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * (WIDTH - MARGIN_LEFT - MARGIN_RIGHT)
    };
    let y_of = |y: f64| {
        HEIGHT - MARGIN_BOTTOM - (y - y_lo) / (y_hi - y_lo) * (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM)
    };

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    s.push_str("<!-- cbn scan scatter, format 1 -->\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    );
    let _ = writeln!(s, "  <rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>");

    // Axes.
    let x0 = fmt(MARGIN_LEFT);
    let x1 = fmt(WIDTH - MARGIN_RIGHT);
    let y0 = fmt(HEIGHT - MARGIN_BOTTOM);
    let y1 = fmt(MARGIN_TOP);
    let _ = writeln!(
        s,
        "  <line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\" stroke=\"black\"/>"
    );
    let _ = writeln!(
        s,
        "  <line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{y1}\" stroke=\"black\"/>"
    );

    // Ticks and labels.
    for i in 0..=4 {
        let t = i as f64 / 4.0;
        let xv = x_lo + t * (x_hi - x_lo);
        let xp = fmt(x_of(xv));
        let _ = writeln!(
            s,
            "  <line x1=\"{xp}\" y1=\"{y0}\" x2=\"{xp}\" y2=\"{}\" stroke=\"black\"/>",
            fmt(HEIGHT - MARGIN_BOTTOM + 5.0)
        );
        let _ = writeln!(
            s,
            "  <text x=\"{xp}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{}</text>",
            fmt(HEIGHT - MARGIN_BOTTOM + 20.0),
            label(xv)
        );
        let yv = y_lo + t * (y_hi - y_lo);
        let yp = fmt(y_of(yv));
        let _ = writeln!(
            s,
            "  <line x1=\"{}\" y1=\"{yp}\" x2=\"{x0}\" y2=\"{yp}\" stroke=\"black\"/>",
            fmt(MARGIN_LEFT - 5.0)
        );
        let _ = writeln!(
            s,
            "  <text x=\"{}\" y=\"{yp}\" font-size=\"12\" text-anchor=\"end\" dy=\"4\">{}</text>",
            fmt(MARGIN_LEFT - 9.0),
            label(yv)
        );
    }
    let _ = writeln!(
        s,
        "  <text x=\"{}\" y=\"{}\" font-size=\"13\" text-anchor=\"middle\">fraction of incompatible genotypes</text>",
        fmt((MARGIN_LEFT + WIDTH - MARGIN_RIGHT) / 2.0),
        fmt(HEIGHT - 12.0)
    );
    let _ = writeln!(
        s,
        "  <text x=\"16\" y=\"{}\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 {})\">log-likelihood</text>",
        fmt((MARGIN_TOP + HEIGHT - MARGIN_BOTTOM) / 2.0),
        fmt((MARGIN_TOP + HEIGHT - MARGIN_BOTTOM) / 2.0)
    );

    // Whiskers below, points on top.
    for p in &finite {
        if let Some(w) = p.whiskers {
            let xp = fmt(x_of(p.x));
            let _ = writeln!(
                s,
                "  <line x1=\"{xp}\" y1=\"{}\" x2=\"{xp}\" y2=\"{}\" stroke=\"gray\" stroke-width=\"1\"/>",
                fmt(y_of(w.min)),
                fmt(y_of(w.max))
            );
            let _ = writeln!(
                s,
                "  <line x1=\"{xp}\" y1=\"{}\" x2=\"{xp}\" y2=\"{}\" stroke=\"gray\" stroke-width=\"4\"/>",
                fmt(y_of(w.q1)),
                fmt(y_of(w.q3))
            );
            for cap in [w.min, w.median, w.max] {
                let _ = writeln!(
                    s,
                    "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"gray\"/>",
                    fmt(x_of(p.x) - 4.0),
                    fmt(y_of(cap)),
                    fmt(x_of(p.x) + 4.0),
                    fmt(y_of(cap))
                );
            }
        }
    }
    for p in &finite {
        let _ = writeln!(
            s,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"black\"/>",
            fmt(x_of(p.x)),
            fmt(y_of(p.y))
        );
    }
    s.push_str("</svg>\n");
    s
}

fn axis_range(
    lows: impl Iterator<Item = f64>,
    highs: impl Iterator<Item = f64>,
    fallback: (f64, f64),
) -> (f64, f64) {
    let lo = lows.fold(f64::INFINITY, f64::min);
    let hi = highs.fold(f64::NEG_INFINITY, f64::max);
    if lo.is_finite() && hi.is_finite() {
        (lo, hi)
    } else {
        fallback
    }
}

fn pad_range((lo, hi): (f64, f64)) -> (f64, f64) {
    let span = hi - lo;
    let pad = if span > 0.0 { span * 0.08 } else { 1.0 };
    (lo - pad, hi + pad)
}

fn fmt(v: f64) -> String {
    format!("{v:.2}")
}

fn label(v: f64) -> String {
    format!("{v:.3}")
}
