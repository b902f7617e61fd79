//! Circles and the three-point construction.

use std::fmt;

use crate::conic::ConicImplicit;
use crate::point::{orient2, Point2};
use crate::scalar::{half, two, Scalar};
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle<S> {
    pub center: Point2<S>,
    pub radius: S,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CircleError {
    /// The three points are collinear within tolerance.
    CollinearPoints,
}

impl fmt::Display for CircleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::CollinearPoints => write!(f, "points are collinear; no finite circle"),
        }
    }
}

impl std::error::Error for CircleError {}

impl<S: Scalar> Circle<S> {
    pub fn new(center: Point2<S>, radius: S) -> Self {
        assert!(radius >= S::zero(), "radius must be nonnegative");
        Self { center, radius }
    }

    /// Circle through three non-collinear points (perpendicular-bisector
    /// intersection, via the standard determinant form).
    pub fn through(p1: Point2<S>, p2: Point2<S>, p3: Point2<S>, tol: &Tolerance<S>) -> Result<Self, CircleError> {
        let d = two::<S>() * orient2(p1, p2, p3);
        let scale = p1.dist(p2).max(p2.dist(p3)).max(p3.dist(p1));
        if tol.is_zero(d, scale * scale) {
            return Err(CircleError::CollinearPoints);
        }
        let s1 = p1.dot(p1);
        let s2 = p2.dot(p2);
        let s3 = p3.dot(p3);
        let ux = (s1 * (p2.y - p3.y) + s2 * (p3.y - p1.y) + s3 * (p1.y - p2.y)) / d;
        let uy = (s1 * (p3.x - p2.x) + s2 * (p1.x - p3.x) + s3 * (p2.x - p1.x)) / d;
        let center = Point2::new(ux, uy);
        Ok(Self::new(center, center.dist(p1)))
    }

    /// Signed "power of a point" style implicit value: |p - c|^2 - r^2.
    #[inline]
    pub fn implicit(&self, p: Point2<S>) -> S {
        let d = p - self.center;
        d.dot(d) - self.radius * self.radius
    }

    /// Lossless conversion to the 6-coefficient implicit conic.
    pub fn to_conic(&self) -> ConicImplicit<S> {
        ConicImplicit::new([
            S::one(),
            S::zero(),
            S::one(),
            -two::<S>() * self.center.x,
            -two::<S>() * self.center.y,
            self.center.dot(self.center) - self.radius * self.radius,
        ])
    }

    pub fn contains(&self, p: Point2<S>, tol: &Tolerance<S>) -> bool {
        tol.is_zero(self.implicit(p), self.radius * self.radius + half::<S>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_three_points() {
        let tol = Tolerance::default();
        let c = Circle::through(
            Point2::new(1.0f64, 0.0),
            Point2::new(0.0, 1.0),
            Point2::new(-1.0, 0.0),
            &tol,
        )
        .unwrap();
        assert!(c.center.dist(Point2::origin()) < 1e-14);
        assert!((c.radius - 1.0).abs() < 1e-14);
    }

    #[test]
    fn bisector_intersection() {
        let tol = Tolerance::default();
        let c = Circle::through(
            Point2::new(0.0f64, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(1.0, 1.0),
            &tol,
        )
        .unwrap();
        assert!(c.center.dist(Point2::new(1.0, 0.0)) < 1e-14);
        assert!((c.radius - 1.0).abs() < 1e-14);
    }

    #[test]
    fn collinear_is_an_error() {
        let tol = Tolerance::default();
        let r = Circle::through(
            Point2::new(0.0f64, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(2.0, 0.0),
            &tol,
        );
        assert_eq!(r, Err(CircleError::CollinearPoints));
    }

    #[test]
    fn conic_roundtrip() {
        let c = Circle::new(Point2::new(0.5f64, -1.5), 2.0);
        let conic = c.to_conic();
        let p = Point2::new(0.5 + 2.0, -1.5);
        assert!(conic.eval(p).abs() < 1e-14);
        assert!(c.implicit(p).abs() < 1e-14);
    }
}
