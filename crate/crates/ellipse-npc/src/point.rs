//! Plain 2D points/vectors.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::scalar::Scalar;

/// A point (or vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Point2<S> {
    #[inline]
    pub fn new(x: S, y: S) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn origin() -> Self {
        Self::new(S::zero(), S::zero())
    }

    #[inline]
    pub fn dot(self, o: Self) -> S {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the cross product; twice the signed area of (0, self, o).
    #[inline]
    pub fn cross(self, o: Self) -> S {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm(self) -> S {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn dist(self, o: Self) -> S {
        (self - o).norm()
    }

    #[inline]
    pub fn scale(self, k: S) -> Self {
        Self::new(k * self.x, k * self.y)
    }

    #[inline]
    pub fn midpoint(self, o: Self) -> Self {
        (self + o).scale(crate::scalar::half())
    }

    /// Counterclockwise rotation by `angle` about the origin.
    #[inline]
    pub fn rotated(self, angle: S) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    /// Counterclockwise rotation by `angle` about `center`.
    #[inline]
    pub fn rotated_about(self, center: Self, angle: S) -> Self {
        center + (self - center).rotated(angle)
    }

    /// Reflection through `center` (point reflection).
    #[inline]
    pub fn reflected_through(self, center: Self) -> Self {
        center.scale(crate::scalar::two()) - self
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl<S: Scalar> Add for Point2<S> {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}

impl<S: Scalar> Sub for Point2<S> {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }
}

impl<S: Scalar> Neg for Point2<S> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl<S: Scalar> Mul<S> for Point2<S> {
    type Output = Self;
    #[inline]
    fn mul(self, k: S) -> Self {
        self.scale(k)
    }
}

impl<S: Scalar> Div<S> for Point2<S> {
    type Output = Self;
    #[inline]
    fn div(self, k: S) -> Self {
        Self::new(self.x / k, self.y / k)
    }
}

/// Twice the signed area of the triangle `p q r` (positive when counterclockwise).
#[inline]
pub fn orient2<S: Scalar>(p: Point2<S>, q: Point2<S>, r: Point2<S>) -> S {
    (q - p).cross(r - p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_and_reflection() {
        let p = Point2::new(1.0f64, 0.0);
        let q = p.rotated(std::f64::consts::FRAC_PI_2);
        assert!((q.x).abs() < 1e-15 && (q.y - 1.0).abs() < 1e-15);
        let r = p.reflected_through(Point2::origin());
        assert_eq!(r, Point2::new(-1.0, 0.0));
    }

    #[test]
    fn orientation_sign() {
        let a = Point2::new(0.0f64, 0.0);
        let b = Point2::new(1.0, 0.0);
        let c = Point2::new(0.0, 1.0);
        assert!(orient2(a, b, c) > 0.0);
        assert!(orient2(a, c, b) < 0.0);
    }
}
