//! Implicit conics `A x^2 + B xy + C y^2 + D x + E y + F = 0`.

use std::fmt;

use crate::point::Point2;
use crate::scalar::{half, lit, two, Scalar};
use crate::tolerance::Tolerance;

/// Coefficients `[A, B, C, D, E, F]` of `Ax^2 + Bxy + Cy^2 + Dx + Ey + F`.
///
/// Evaluation is plain polynomial arithmetic; all residual checks scale by the
/// largest monomial magnitude at the evaluation point so that "vanishes" means
/// the same thing across wildly different coefficient scales.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConicImplicit<S> {
    pub coeffs: [S; 6],
}

#[derive(Debug, Clone, PartialEq)]
pub enum ConicError {
    /// Not enough constraints or a degenerate configuration.
    Degenerate,
}

impl fmt::Display for ConicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Degenerate => write!(f, "degenerate conic"),
        }
    }
}

impl std::error::Error for ConicError {}

impl<S: Scalar> ConicImplicit<S> {
    pub fn new(coeffs: [S; 6]) -> Self {
        assert!(
            coeffs[..5].iter().any(|c| *c != S::zero()),
            "conic needs a nonzero non-constant coefficient"
        );
        Self { coeffs }
    }

    /// Axis-aligned ellipse with the given center and semi-axes.
    pub fn axis_aligned_ellipse(center: Point2<S>, rx: S, ry: S) -> Self {
        // (x-cx)^2/rx^2 + (y-cy)^2/ry^2 - 1, multiplied by rx^2 ry^2
        let rx2 = rx * rx;
        let ry2 = ry * ry;
        Self::new([
            ry2,
            S::zero(),
            rx2,
            -two::<S>() * ry2 * center.x,
            -two::<S>() * rx2 * center.y,
            ry2 * center.x * center.x + rx2 * center.y * center.y - rx2 * ry2,
        ])
    }

    #[inline]
    pub fn eval(&self, p: Point2<S>) -> S {
        let [a, b, c, d, e, f] = self.coeffs;
        a * p.x * p.x + b * p.x * p.y + c * p.y * p.y + d * p.x + e * p.y + f
    }

    /// Largest monomial magnitude at `p`; the natural scale for residuals.
    pub fn eval_scale(&self, p: Point2<S>) -> S {
        let [a, b, c, d, e, f] = self.coeffs;
        let terms = [
            a * p.x * p.x,
            b * p.x * p.y,
            c * p.y * p.y,
            d * p.x,
            e * p.y,
            f,
        ];
        terms.iter().fold(S::zero(), |m, t| m.max(t.abs()))
    }

    /// Residual divided by the monomial scale at `p`.
    pub fn scaled_residual(&self, p: Point2<S>) -> S {
        let s = self.eval_scale(p);
        if s == S::zero() {
            S::zero()
        } else {
            (self.eval(p) / s).abs()
        }
    }

    pub fn passes_through(&self, p: Point2<S>, tol: &Tolerance<S>) -> bool {
        tol.is_zero(self.eval(p), self.eval_scale(p))
    }

    /// Gradient of the implicit function at `p` (normal direction to the curve).
    pub fn gradient(&self, p: Point2<S>) -> Point2<S> {
        let [a, b, c, d, e, _] = self.coeffs;
        Point2::new(
            two::<S>() * a * p.x + b * p.y + d,
            b * p.x + two::<S>() * c * p.y + e,
        )
    }

    /// Center of a central conic (where both partial derivatives vanish).
    pub fn center(&self) -> Result<Point2<S>, ConicError> {
        let [a, b, c, d, e, _] = self.coeffs;
        let det = lit::<S>(4.0) * a * c - b * b;
        let scale = (a.abs() + b.abs() + c.abs()).powi(2);
        if det.abs() <= scale * lit(1e-14) {
            return Err(ConicError::Degenerate);
        }
        // solve [2a b; b 2c] [x y]^T = -[d e]^T
        let x = (-d * two::<S>() * c + e * b) / det;
        let y = (-e * two::<S>() * a + d * b) / det;
        Ok(Point2::new(x, y))
    }

    /// Determinant of the full 3x3 symmetric matrix of the conic.
    pub fn matrix_det(&self) -> S {
        let [a, b, c, d, e, f] = self.coeffs;
        let b2 = b * half::<S>();
        let d2 = d * half::<S>();
        let e2 = e * half::<S>();
        a * (c * f - e2 * e2) - b2 * (b2 * f - e2 * d2) + d2 * (b2 * e2 - c * d2)
    }

    /// Enclosed area of an ellipse-type conic: pi |det(M3)| / (AC - B^2/4)^(3/2).
    /// Rejects non-ellipses and imaginary ellipses.
    pub fn ellipse_area(&self) -> Result<S, ConicError> {
        let [a, b, c, ..] = self.coeffs;
        let minor = a * c - b * b * lit(0.25);
        if minor <= S::zero() {
            return Err(ConicError::Degenerate);
        }
        let det = self.matrix_det();
        // real (non-imaginary, non-degenerate) ellipse requires det/(A+C) < 0
        if det == S::zero() || det / (a + c) >= S::zero() {
            return Err(ConicError::Degenerate);
        }
        Ok(S::PI() * det.abs() / minor.powf(lit(1.5)))
    }

    /// Semi-axes of an axis-aligned central conic (B = 0), as (along-x, along-y).
    pub fn axis_aligned_semi_axes(&self) -> Result<(S, S), ConicError> {
        let [a, b, c, ..] = self.coeffs;
        let scale = a.abs().max(c.abs());
        if b.abs() > scale * lit(1e-10) {
            return Err(ConicError::Degenerate);
        }
        let ctr = self.center()?;
        // a (x-cx)^2 + c (y-cy)^2 = k
        let k = a * ctr.x * ctr.x + c * ctr.y * ctr.y - self.coeffs[5];
        if a * k <= S::zero() || c * k <= S::zero() {
            return Err(ConicError::Degenerate);
        }
        Ok(((k / a).sqrt(), (k / c).sqrt()))
    }

    /// Normalize so the largest coefficient magnitude is one (returns a copy).
    pub fn normalized(&self) -> Self {
        let m = self.coeffs.iter().fold(S::zero(), |m, c| m.max(c.abs()));
        let mut out = *self;
        for c in &mut out.coeffs {
            *c = *c / m;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ellipse_area_formula() {
        let e = ConicImplicit::axis_aligned_ellipse(Point2::new(0.0f64, 0.0), 2.0, 1.0);
        assert!((e.ellipse_area().unwrap() - 2.0 * std::f64::consts::PI).abs() < 1e-12);
        let shifted = ConicImplicit::axis_aligned_ellipse(Point2::new(3.0f64, -1.0), 2.0, 1.0);
        assert!((shifted.ellipse_area().unwrap() - 2.0 * std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn center_and_axes() {
        let e = ConicImplicit::axis_aligned_ellipse(Point2::new(3.0f64, -1.0), 2.0, 0.5);
        let c = e.center().unwrap();
        assert!(c.dist(Point2::new(3.0, -1.0)) < 1e-12);
        let (rx, ry) = e.axis_aligned_semi_axes().unwrap();
        assert!((rx - 2.0).abs() < 1e-12 && (ry - 0.5).abs() < 1e-12);
    }

    #[test]
    fn scaled_residual_is_dimensionless() {
        let e = ConicImplicit::axis_aligned_ellipse(Point2::new(0.0f64, 0.0), 2.0, 1.0);
        let mut big = e;
        for c in &mut big.coeffs {
            *c *= 1e12;
        }
        let p = Point2::new(2.0, 0.0);
        assert!(big.scaled_residual(p) < 1e-12);
        let q = Point2::new(20.0, 0.0);
        assert!(big.scaled_residual(q) > 0.5);
    }
}
