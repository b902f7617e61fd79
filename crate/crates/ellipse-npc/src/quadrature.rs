//! Polygonal quadrature: signed area and area centroid of closed sampled curves.

use std::fmt;

use crate::point::Point2;
use crate::scalar::{lit, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub enum QuadratureError {
    /// Fewer than three samples cannot bound an area.
    InsufficientSamples,
}

impl fmt::Display for QuadratureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InsufficientSamples => write!(f, "need at least 3 samples"),
        }
    }
}

impl std::error::Error for QuadratureError {}

/// Signed area of the closed polyline (first sample implicitly joined to the
/// last). Positive for counterclockwise orientation. For a smooth closed
/// curve sampled uniformly in parameter this converges at O(n^-2).
pub fn shoelace_area<S: Scalar>(samples: &[Point2<S>]) -> Result<S, QuadratureError> {
    if samples.len() < 3 {
        return Err(QuadratureError::InsufficientSamples);
    }
    let mut acc = S::zero();
    for (i, p) in samples.iter().enumerate() {
        let q = samples[(i + 1) % samples.len()];
        acc = acc + p.cross(q);
    }
    Ok(acc * lit(0.5))
}

/// Area centroid of the closed polyline (Green-theorem quadrature). The
/// result is orientation-independent; fails on (near-)zero enclosed area.
pub fn polygon_centroid<S: Scalar>(samples: &[Point2<S>]) -> Result<Point2<S>, QuadratureError> {
    if samples.len() < 3 {
        return Err(QuadratureError::InsufficientSamples);
    }
    let mut area2 = S::zero();
    let mut cx = S::zero();
    let mut cy = S::zero();
    for (i, p) in samples.iter().enumerate() {
        let q = samples[(i + 1) % samples.len()];
        let w = p.cross(q);
        area2 = area2 + w;
        cx = cx + (p.x + q.x) * w;
        cy = cy + (p.y + q.y) * w;
    }
    if area2 == S::zero() {
        return Err(QuadratureError::InsufficientSamples);
    }
    let k = S::one() / (lit::<S>(3.0) * area2);
    Ok(Point2::new(cx * k, cy * k))
}

/// Uniform-parameter samples of a closed curve over one period `[0, period)`.
pub fn sample_closed<S: Scalar, F: Fn(S) -> Point2<S>>(f: F, period: S, n: usize) -> Vec<Point2<S>> {
    let step = period / lit(n as f64);
    (0..n).map(|k| f(step * lit(k as f64))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::two;

    #[test]
    fn unit_square_orientations() {
        let ccw = [
            Point2::new(0.0f64, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ];
        assert!((shoelace_area(&ccw).unwrap() - 1.0).abs() < 1e-15);
        let cw: Vec<_> = ccw.iter().rev().copied().collect();
        assert!((shoelace_area(&cw).unwrap() + 1.0).abs() < 1e-15);
    }

    #[test]
    fn too_few_samples() {
        let pts = [Point2::new(0.0f64, 0.0), Point2::new(1.0, 0.0)];
        assert_eq!(shoelace_area(&pts), Err(QuadratureError::InsufficientSamples));
    }

    #[test]
    fn ellipse_area_convergence() {
        let f = |t: f64| Point2::new(2.0 * t.cos(), t.sin());
        let exact = 2.0 * std::f64::consts::PI;
        let a1 = shoelace_area(&sample_closed(f, two::<f64>() * std::f64::consts::PI, 10_000)).unwrap();
        assert!((a1 - exact).abs() / exact < 1e-6);
        // halving the step shrinks the error by ~4x
        let coarse = shoelace_area(&sample_closed(f, 2.0 * std::f64::consts::PI, 1_000)).unwrap();
        let fine = shoelace_area(&sample_closed(f, 2.0 * std::f64::consts::PI, 2_000)).unwrap();
        let ratio = (coarse - exact).abs() / (fine - exact).abs();
        assert!(ratio > 3.5 && ratio < 4.5, "ratio {ratio}");
    }

    #[test]
    fn centroid_of_shifted_ellipse() {
        let f = |t: f64| Point2::new(3.0 + 2.0 * t.cos(), -1.0 + t.sin());
        let c = polygon_centroid(&sample_closed(f, 2.0 * std::f64::consts::PI, 20_000)).unwrap();
        assert!(c.dist(Point2::new(3.0, -1.0)) < 1e-8);
    }
}
