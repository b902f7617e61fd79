//! The central ellipse, its parametrization and its evolute.

use crate::point::Point2;
use crate::scalar::{half, lit, two, Scalar};
use crate::tolerance::Tolerance;

/// Axis-aligned ellipse centered at the origin with semi-axes `a >= b > 0`,
/// `a` along x. Every formula in this crate references this frame; callers
/// with a general ellipse transform into it first.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ellipse<S> {
    a: S,
    b: S,
    /// Derived: c^2 = a^2 - b^2 (half focal length squared). Never set directly.
    c2: S,
}

impl<S: Scalar> Ellipse<S> {
    /// Requires `a >= b > 0`.
    pub fn new(a: S, b: S) -> Self {
        assert!(b > S::zero() && a >= b, "ellipse semi-axes must satisfy a >= b > 0");
        Self { a, b, c2: a * a - b * b }
    }

    #[inline]
    pub fn a(&self) -> S {
        self.a
    }

    #[inline]
    pub fn b(&self) -> S {
        self.b
    }

    /// c^2 = a^2 - b^2.
    #[inline]
    pub fn c2(&self) -> S {
        self.c2
    }

    /// Degenerate circle case a = b (the deltoid family collapses to a point).
    #[inline]
    pub fn is_circular(&self) -> bool {
        self.c2 == S::zero()
    }

    /// Boundary point (a cos t, b sin t).
    #[inline]
    pub fn point(&self, t: S) -> Point2<S> {
        let (s, c) = t.sin_cos();
        Point2::new(self.a * c, self.b * s)
    }

    /// Implicit value x^2/a^2 + y^2/b^2 - 1 (zero on the boundary).
    #[inline]
    pub fn implicit(&self, p: Point2<S>) -> S {
        (p.x / self.a) * (p.x / self.a) + (p.y / self.b) * (p.y / self.b) - S::one()
    }

    /// Inward-unnormalized normal direction at a boundary point `p`:
    /// the gradient direction (p.x/a^2, p.y/b^2).
    #[inline]
    pub fn normal_dir(&self, p: Point2<S>) -> Point2<S> {
        Point2::new(p.x / (self.a * self.a), p.y / (self.b * self.b))
    }

    /// Evolute point (c^2 cos^3 t / a, -c^2 sin^3 t / b): the center of
    /// curvature for the boundary point at parameter t. Collapses to the
    /// origin when a = b.
    #[inline]
    pub fn evolute_point(&self, t: S) -> Point2<S> {
        let (s, c) = t.sin_cos();
        Point2::new(self.c2 * c * c * c / self.a, -self.c2 * s * s * s / self.b)
    }

    /// Area enclosed by the evolute: 3 pi c^4 / (8 a b).
    pub fn evolute_area(&self) -> S {
        lit::<S>(3.0) * S::PI() * self.c2 * self.c2 / (lit::<S>(8.0) * self.a * self.b)
    }

    /// Area of the ellipse itself.
    pub fn area(&self) -> S {
        S::PI() * self.a * self.b
    }

    /// Whether `p` is inside (-1), on (0) or outside (+1) the boundary, with
    /// the boundary band defined by `tol` on the implicit value.
    pub fn side(&self, p: Point2<S>, tol: &Tolerance<S>) -> std::cmp::Ordering {
        let v = self.implicit(p);
        if tol.is_zero(v, S::one()) {
            std::cmp::Ordering::Equal
        } else if v < S::zero() {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    }

    /// Parameter of the boundary point nearest in angle: atan2(y/b, x/a).
    /// Exact for points on the boundary.
    #[inline]
    pub fn param_of(&self, p: Point2<S>) -> S {
        (p.y / self.b).atan2(p.x / self.a)
    }

    /// Winding-number test against the sampled evolute curve: is `p` strictly
    /// inside the evolute? Uses a dense polygonal approximation, which is
    /// adequate away from the evolute boundary itself. Samples are phase-
    /// shifted by half a step so none lands exactly on the axes.
    pub fn inside_evolute(&self, p: Point2<S>, samples: usize) -> bool {
        let mut winding = 0i32;
        let n = samples.max(64);
        let step = two::<S>() * S::PI() / lit(n as f64);
        let at = |k: usize| self.evolute_point(step * (lit::<S>(k as f64) + half::<S>()));
        let mut prev = at(n - 1);
        for k in 0..n {
            let cur = at(k);
            // standard crossing-count winding rule
            if (prev.y <= p.y) != (cur.y <= p.y) {
                let t = (p.y - prev.y) / (cur.y - prev.y);
                let x = prev.x + t * (cur.x - prev.x);
                if x > p.x {
                    winding += if cur.y > prev.y { 1 } else { -1 };
                }
            }
            prev = cur;
        }
        winding != 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e() -> Ellipse<f64> {
        Ellipse::new(2.0, 1.0)
    }

    #[test]
    fn boundary_points_at_vertices() {
        let e = e();
        let p = e.point(0.0);
        assert!(p.dist(Point2::new(2.0, 0.0)) < 1e-15);
        let q = e.point(std::f64::consts::FRAC_PI_2);
        assert!(q.dist(Point2::new(0.0, 1.0)) < 1e-15);
    }

    #[test]
    fn quarter_turn_point_satisfies_implicit() {
        let e = e();
        let p = e.point(std::f64::consts::FRAC_PI_4);
        assert!((p.x - std::f64::consts::SQRT_2).abs() < 1e-15);
        assert!((p.y - std::f64::consts::SQRT_2 / 2.0).abs() < 1e-15);
        assert!(e.implicit(p).abs() < 1e-15);
    }

    #[test]
    fn evolute_at_axes() {
        let e = e();
        assert!(e.evolute_point(0.0).dist(Point2::new(1.5, 0.0)) < 1e-15);
        assert!(e.evolute_point(std::f64::consts::FRAC_PI_2).dist(Point2::new(0.0, -3.0)) < 1e-14);
        let circle = Ellipse::new(1.0, 1.0);
        assert_eq!(circle.evolute_point(0.7), Point2::origin());
    }

    #[test]
    fn evolute_area_closed_form() {
        let e = e();
        // c^4 = 9 -> 27 pi / 16
        assert!((e.evolute_area() - 27.0 * std::f64::consts::PI / 16.0).abs() < 1e-12);
        assert_eq!(Ellipse::new(1.0, 1.0).evolute_area(), 0.0);
    }

    #[test]
    fn inside_evolute_winding() {
        let e = e();
        assert!(e.inside_evolute(Point2::origin(), 512));
        assert!(!e.inside_evolute(Point2::new(1.9, 0.0), 512));
        // evolute reaches (0, +-3): a tall thin region near the y-axis
        assert!(e.inside_evolute(Point2::new(0.0, 2.0), 512));
    }

    #[test]
    #[should_panic]
    fn rejects_bad_axes() {
        let _ = Ellipse::new(1.0, 2.0);
    }
}
