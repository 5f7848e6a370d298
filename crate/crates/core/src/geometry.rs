//! Planar helpers on complex numbers: convex hulls, point-to-polygon
//! distances and Hausdorff distances between convex polygons.

use num_complex::Complex64;

fn cross(o: Complex64, a: Complex64, b: Complex64) -> f64 {
    (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
}

/// Counterclockwise convex hull (Andrew's monotone chain). Collinear and
/// duplicate points are dropped; degenerate inputs give one or two vertices.
pub fn convex_hull(points: &[Complex64]) -> Vec<Complex64> {
    let mut pts: Vec<Complex64> = points.to_vec();
    pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut hull: Vec<Complex64> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

pub fn dist_to_segment(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = (((p - a) * ab.conj()).re / len2).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Distance from `p` to a convex polygon given by its counterclockwise
/// vertices; zero inside.
pub fn dist_to_convex_polygon(p: Complex64, poly: &[Complex64]) -> f64 {
    match poly.len() {
        0 => f64::INFINITY,
        1 => (p - poly[0]).norm(),
        2 => dist_to_segment(p, poly[0], poly[1]),
        n => {
            let inside = (0..n).all(|i| cross(poly[i], poly[(i + 1) % n], p) >= 0.0);
            if inside {
                return 0.0;
            }
            (0..n)
                .map(|i| dist_to_segment(p, poly[i], poly[(i + 1) % n]))
                .fold(f64::INFINITY, f64::min)
        }
    }
}

/// Hausdorff distance between two convex polygons (vertex lists, CCW). For
/// convex sets the directed distance is attained at a vertex.
pub fn hausdorff_convex(a: &[Complex64], b: &[Complex64]) -> f64 {
    let directed = |x: &[Complex64], y: &[Complex64]| {
        x.iter()
            .map(|&p| dist_to_convex_polygon(p, y))
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

    #[test]
    fn hull_of_square_with_interior_points() {
        let pts = [c(0., 0.), c(1., 0.), c(1., 1.), c(0., 1.), c(0.5, 0.5), c(0.5, 0.0)];
        let h = convex_hull(&pts);
        assert_eq!(h.len(), 4);
        assert_eq!(h[0], c(0., 0.));
        assert_eq!(h[1], c(1., 0.));
    }

    #[test]
    fn degenerate_hulls() {
        assert_eq!(convex_hull(&[c(1., 1.); 5]).len(), 1);
        let seg = convex_hull(&[c(0., 0.), c(0.5, 0.), c(1., 0.)]);
        assert_eq!(seg.len(), 2);
        assert!((dist_to_convex_polygon(c(0.5, 1.0), &seg) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn polygon_distance() {
        let sq = [c(0., 0.), c(1., 0.), c(1., 1.), c(0., 1.)];
        assert_eq!(dist_to_convex_polygon(c(0.5, 0.5), &sq), 0.0);
        assert!((dist_to_convex_polygon(c(2.0, 0.5), &sq) - 1.0).abs() < 1e-15);
        assert!((dist_to_convex_polygon(c(2.0, 2.0), &sq) - 2f64.sqrt()).abs() < 1e-15);
        let shifted: Vec<Complex64> = sq.iter().map(|z| z + c(0.25, 0.0)).collect();
        assert!((hausdorff_convex(&sq, &shifted) - 0.25).abs() < 1e-15);
    }
}
