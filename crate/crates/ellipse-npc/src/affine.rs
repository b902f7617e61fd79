//! Affine maps of the plane: linear part plus translation.

use crate::point::Point2;
use crate::scalar::Scalar;

/// `p -> m * p + t` with `m` a 2x2 matrix in row-major order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineMap<S> {
    pub m: [[S; 2]; 2],
    pub t: Point2<S>,
}

impl<S: Scalar> AffineMap<S> {
    pub fn new(m: [[S; 2]; 2], t: Point2<S>) -> Self {
        Self { m, t }
    }

    pub fn identity() -> Self {
        Self::new([[S::one(), S::zero()], [S::zero(), S::one()]], Point2::origin())
    }

    /// Counterclockwise rotation about the origin.
    pub fn rotation(angle: S) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new([[c, -s], [s, c]], Point2::origin())
    }

    /// Axis-aligned scaling.
    pub fn scaling(kx: S, ky: S) -> Self {
        Self::new([[kx, S::zero()], [S::zero(), ky]], Point2::origin())
    }

    pub fn translation(t: Point2<S>) -> Self {
        let mut id = Self::identity();
        id.t = t;
        id
    }

    #[inline]
    pub fn apply(&self, p: Point2<S>) -> Point2<S> {
        Point2::new(
            self.m[0][0] * p.x + self.m[0][1] * p.y + self.t.x,
            self.m[1][0] * p.x + self.m[1][1] * p.y + self.t.y,
        )
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let a = &self.m;
        let b = &other.m;
        let m = [
            [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
        ];
        let t = self.apply(other.t);
        Self::new(m, t)
    }

    /// Determinant of the linear part (area scale factor, signed).
    #[inline]
    pub fn det(&self) -> S {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_matches_sequential_apply() {
        let f = AffineMap::rotation(0.7f64).compose(&AffineMap::translation(Point2::new(1.0, -2.0)));
        let g = AffineMap::scaling(2.0, 3.0);
        let p = Point2::new(0.3, 0.9);
        let lhs = f.compose(&g).apply(p);
        let rhs = f.apply(g.apply(p));
        assert!(lhs.dist(rhs) < 1e-13);
    }

    #[test]
    fn determinant_multiplies() {
        let f = AffineMap::scaling(2.0f64, 3.0);
        let g = AffineMap::rotation(1.1);
        assert!((f.compose(&g).det() - 6.0).abs() < 1e-13);
    }
}
