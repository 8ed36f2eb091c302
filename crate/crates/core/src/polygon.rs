//! Planar polyline utilities: sampled boundary curves, point-in-polygon,
//! convex hulls and Hausdorff distances. Points are `Complex64` throughout.

use num_complex::Complex64;

/// A sampled parametric boundary: strictly increasing parameter values with
/// the corresponding points, plus the parameters at which the defining
/// formula switches.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryCurve {
    pub samples: Vec<(f64, Complex64)>,
    pub breakpoints: Vec<f64>,
    /// Whether the last sample connects back to the first.
    pub closed: bool,
}

impl BoundaryCurve {
    pub fn new(samples: Vec<(f64, Complex64)>, breakpoints: Vec<f64>, closed: bool) -> Self {
        debug_assert!(samples.windows(2).all(|w| w[0].0 < w[1].0), "parameter must increase");
        BoundaryCurve { samples, breakpoints, closed }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.samples.iter().map(|&(_, w)| w)
    }

    pub fn vertices(&self) -> Vec<Complex64> {
        self.points().collect()
    }

    /// Applies `f` to every point, keeping parameters.
    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> BoundaryCurve {
        BoundaryCurve {
            samples: self.samples.iter().map(|&(t, w)| (t, f(w))).collect(),
            breakpoints: self.breakpoints.clone(),
            closed: self.closed,
        }
    }

    /// Largest value of `Re w + b Im w` over the samples, with its parameter.
    pub fn max_linear(&self, b: f64) -> Option<(f64, f64)> {
        self.samples
            .iter()
            .map(|&(t, w)| (t, w.re + b * w.im))
            .max_by(|x, y| x.1.total_cmp(&y.1))
    }

    /// Distance from `p` to the polyline (including the closing edge when closed).
    pub fn distance_to(&self, p: Complex64) -> f64 {
        polyline_distance(&self.vertices(), p, self.closed)
    }
}

/// Distance from `p` to the segment `[a, b]`.
pub fn segment_distance(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let s = (((p - a) * ab.conj()).re / len2).clamp(0.0, 1.0);
    (p - (a + ab * s)).norm()
}

pub fn polyline_distance(vertices: &[Complex64], p: Complex64, closed: bool) -> f64 {
    match vertices.len() {
        0 => f64::INFINITY,
        1 => (p - vertices[0]).norm(),
        n => {
            let open = vertices
                .windows(2)
                .map(|w| segment_distance(p, w[0], w[1]))
                .fold(f64::INFINITY, f64::min);
            if closed {
                open.min(segment_distance(p, vertices[n - 1], vertices[0]))
            } else {
                open
            }
        }
    }
}

/// Winding number of a closed polygon around `p` (nonzero iff strictly inside
/// for a simple polygon). Points on an edge give an unspecified answer; pair
/// with [`polyline_distance`] for a tolerant test.
pub fn winding_number(vertices: &[Complex64], p: Complex64) -> i32 {
    let n = vertices.len();
    let mut wn = 0;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        let cross = (b.re - a.re) * (p.im - a.im) - (p.re - a.re) * (b.im - a.im);
        if a.im <= p.im {
            if b.im > p.im && cross > 0.0 {
                wn += 1;
            }
        } else if b.im <= p.im && cross < 0.0 {
            wn -= 1;
        }
    }
    wn
}

/// Closed polygon membership with boundary slack `tol`.
pub fn polygon_contains(vertices: &[Complex64], p: Complex64, tol: f64) -> bool {
    winding_number(vertices, p) != 0 || polyline_distance(vertices, p, true) <= tol
}

fn cross(o: Complex64, a: Complex64, b: Complex64) -> f64 {
    (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
}

/// Convex hull by Andrew's monotone chain, counter-clockwise, without
/// collinear points.
pub fn convex_hull(points: &[Complex64]) -> Vec<Complex64> {
    let mut pts: Vec<Complex64> = points.iter().copied().filter(|p| p.re.is_finite() && p.im.is_finite()).collect();
    pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<Complex64> = Vec::with_capacity(2 * pts.len());
    for &p in pts.iter() {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

/// Symmetric Hausdorff distance between two closed polygons, measured from the
/// vertices of each to the edges of the other. Exact for polygons when the
/// vertices are dense relative to the distance being resolved.
pub fn hausdorff_closed(a: &[Complex64], b: &[Complex64]) -> f64 {
    let directed = |from: &[Complex64], to: &[Complex64]| {
        from.iter()
            .map(|&p| polyline_distance(to, p, true))
            .fold(0.0, f64::max)
    };
    directed(a, b).max(directed(b, a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn unit_square() -> Vec<Complex64> {
        vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(0.0, 1.0)]
    }

    #[test]
    fn square_membership() {
        let sq = unit_square();
        assert!(polygon_contains(&sq, c(0.5, 0.5), 0.0));
        assert!(!polygon_contains(&sq, c(1.5, 0.5), 0.0));
        assert!(polygon_contains(&sq, c(1.0 + 1e-10, 0.5), 1e-9));
        assert!(!polygon_contains(&sq, c(1.0 + 1e-8, 0.5), 1e-9));
    }

    #[test]
    fn nonconvex_membership() {
        // U shape: the notch is outside
        let u = vec![c(0.0, 0.0), c(3.0, 0.0), c(3.0, 3.0), c(2.0, 3.0), c(2.0, 1.0), c(1.0, 1.0), c(1.0, 3.0), c(0.0, 3.0)];
        assert!(!polygon_contains(&u, c(1.5, 2.0), 1e-12));
        assert!(polygon_contains(&u, c(0.5, 2.0), 1e-12));
        assert!(polygon_contains(&u, c(2.5, 2.5), 1e-12));
    }

    #[test]
    fn hull_of_square_with_interior() {
        let mut pts = unit_square();
        pts.push(c(0.5, 0.5));
        pts.push(c(0.5, 0.0));
        let h = convex_hull(&pts);
        assert_eq!(h.len(), 4);
        assert!(!h.contains(&c(0.5, 0.5)));
    }

    #[test]
    fn segment_distance_cases() {
        assert!((segment_distance(c(0.5, 1.0), c(0.0, 0.0), c(1.0, 0.0)) - 1.0).abs() < 1e-15);
        assert!((segment_distance(c(2.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)) - 1.0).abs() < 1e-15);
        assert!((segment_distance(c(3.0, 4.0), c(0.0, 0.0), c(0.0, 0.0)) - 5.0).abs() < 1e-15);
    }

    #[test]
    fn hausdorff_of_scaled_square() {
        let a = unit_square();
        let b: Vec<_> = a.iter().map(|&p| (p - c(0.5, 0.5)) * 1.2 + c(0.5, 0.5)).collect();
        assert!((hausdorff_closed(&a, &b) - 0.1 * 2f64.sqrt()).abs() < 1e-12);
    }
}
