//! CSV and SVG emitters for sampled boundary curves.

use std::fmt::Write as _;

use num_complex::Complex64;
use varregion::polygon::BoundaryCurve;

use crate::number::{parse_f64, render_f64};
use crate::CliError;

pub const CSV_HEADER: &str = "t,re,im";

pub fn curve_to_csv(curve: &BoundaryCurve) -> String {
    let mut out = String::with_capacity(48 * (curve.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for &(t, w) in &curve.samples {
        let _ = writeln!(out, "{},{},{}", render_f64(t), render_f64(w.re), render_f64(w.im));
    }
    out
}

pub fn csv_to_samples(text: &str) -> Result<Vec<(f64, Complex64)>, CliError> {
    let mut lines = text.lines();
    if lines.next() != Some(CSV_HEADER) {
        return Err(CliError::Parse(format!("CSV header must be {CSV_HEADER:?}")));
    }
    lines
        .filter(|l| !l.is_empty())
        .map(|l| {
            let cols: Vec<&str> = l.split(',').collect();
            if cols.len() != 3 {
                return Err(CliError::Parse(format!("expected 3 columns: {l:?}")));
            }
            Ok((parse_f64(cols[0])?, Complex64::new(parse_f64(cols[1])?, parse_f64(cols[2])?)))
        })
        .collect()
}

/// Static SVG: the curve as one polyline, optional extra segments, and a
/// viewBox fitted to all points with a 5% margin. The imaginary axis points up.
pub fn curve_to_svg(curve: &BoundaryCurve, segments: &[(Complex64, Complex64)]) -> String {
    let pts: Vec<Complex64> = curve
        .points()
        .chain(segments.iter().flat_map(|&(a, b)| [a, b]))
        .collect();
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for w in &pts {
        xmin = xmin.min(w.re);
        xmax = xmax.max(w.re);
        ymin = ymin.min(-w.im);
        ymax = ymax.max(-w.im);
    }
    let (w, h) = ((xmax - xmin).max(1e-12), (ymax - ymin).max(1e-12));
    let (mx, my) = (0.05 * w, 0.05 * h);
    let stroke = 0.002 * w.max(h);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        render_f64(xmin - mx),
        render_f64(ymin - my),
        render_f64(w + 2.0 * mx),
        render_f64(h + 2.0 * my)
    );
    out.push_str(&format!(r#"<polyline fill="none" stroke="black" stroke-width="{}" points=""#, render_f64(stroke)));
    // closed curves repeat their first vertex
    let first = curve.samples.first().map(|s| s.1).filter(|_| curve.closed);
    for (k, p) in curve.points().chain(first).enumerate() {
        if k > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{},{}", render_f64(p.re), render_f64(-p.im));
    }
    out.push_str("\"/>\n");
    for &(a, b) in segments {
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="red" stroke-width="{}"/>"#,
            render_f64(a.re),
            render_f64(-a.im),
            render_f64(b.re),
            render_f64(-b.im),
            render_f64(stroke)
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trip_is_bit_exact() {
        let samples: Vec<(f64, Complex64)> =
            (0..50).map(|k| (k as f64 * 0.1, Complex64::new((k as f64).sin() / 3.0, 1e-30 * k as f64))).collect();
        let curve = BoundaryCurve::new(samples.clone(), vec![], false);
        let back = csv_to_samples(&curve_to_csv(&curve)).unwrap();
        assert_eq!(back.len(), samples.len());
        for (a, b) in back.iter().zip(&samples) {
            assert_eq!(a.0.to_bits(), b.0.to_bits());
            assert_eq!(a.1.re.to_bits(), b.1.re.to_bits());
            assert_eq!(a.1.im.to_bits(), b.1.im.to_bits());
        }
        assert!(csv_to_samples("x,y\n").is_err());
    }

    #[test]
    fn svg_has_single_polyline() {
        let curve = BoundaryCurve::new(vec![(0.0, Complex64::new(0.0, 0.0)), (1.0, Complex64::new(1.0, 2.0))], vec![], false);
        let svg = curve_to_svg(&curve, &[]);
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert!(svg.contains(r#"viewBox="-0.0500000000 -2.10000000 1.10000000 2.20000000""#), "{svg}");
    }
}
