//! Negative pedal curves of the ellipse: the family of lines through P(t)
//! perpendicular to P(t) - pole, its envelope in closed form, an independent
//! finite-difference envelope oracle, the boundary-pole deltoid, the
//! canonical 3-cusp hypocycloid with its affine decomposition, and the
//! rotated-line variant.

use std::fmt;

use crate::affine::AffineMap;
use crate::ellipse::Ellipse;
use crate::point::Point2;
use crate::scalar::{half, lit, two, Scalar};
use crate::tolerance::Tolerance;

/// Where a pole sits relative to the ellipse boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PoleClass<S> {
    Interior,
    /// Boundary poles carry their parameter exactly; it is never recovered
    /// numerically once known.
    Boundary(S),
    Exterior,
}

/// A pole for the negative pedal construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pole<S> {
    pub position: Point2<S>,
    pub class: PoleClass<S>,
}

impl<S: Scalar> Pole<S> {
    /// Boundary pole at parameter `u` (position derived, parameter exact).
    pub fn boundary(e: &Ellipse<S>, u: S) -> Self {
        Self { position: e.point(u), class: PoleClass::Boundary(u) }
    }

    /// Classify an arbitrary point against the boundary band of `tol`.
    pub fn classify(e: &Ellipse<S>, p: Point2<S>, tol: &Tolerance<S>) -> Self {
        let class = match e.side(p, tol) {
            std::cmp::Ordering::Less => PoleClass::Interior,
            std::cmp::Ordering::Equal => PoleClass::Boundary(e.param_of(p)),
            std::cmp::Ordering::Greater => PoleClass::Exterior,
        };
        Self { position: p, class }
    }
}

/// Oriented line `n . p + d = 0` with unit normal `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineEq<S> {
    pub nx: S,
    pub ny: S,
    pub d: S,
}

impl<S: Scalar> LineEq<S> {
    /// Line through `p` with (not necessarily unit) normal `n`.
    pub fn through_with_normal(p: Point2<S>, n: Point2<S>) -> Self {
        let len = n.norm();
        let nx = n.x / len;
        let ny = n.y / len;
        Self { nx, ny, d: -(nx * p.x + ny * p.y) }
    }

    /// Line through two points.
    pub fn through(p: Point2<S>, q: Point2<S>) -> Self {
        Self::through_with_normal(p, Point2::new(q.y - p.y, p.x - q.x))
    }

    #[inline]
    pub fn signed_distance(&self, p: Point2<S>) -> S {
        self.nx * p.x + self.ny * p.y + self.d
    }

    /// Unit direction vector along the line.
    #[inline]
    pub fn direction(&self) -> Point2<S> {
        Point2::new(-self.ny, self.nx)
    }

    /// Intersection point of two lines; `None` when parallel within `tol`.
    pub fn intersect(&self, other: &Self, tol: &Tolerance<S>) -> Option<Point2<S>> {
        let det = self.nx * other.ny - self.ny * other.nx;
        if tol.is_zero(det, S::one()) {
            return None;
        }
        Some(Point2::new(
            (-self.d * other.ny + other.d * self.ny) / det,
            (-self.nx * other.d + other.nx * self.d) / det,
        ))
    }

    /// Rotate the line about a point it passes through (CCW by `angle`).
    pub fn rotated_about(&self, pivot: Point2<S>, angle: S) -> Self {
        let n = Point2::new(self.nx, self.ny).rotated(angle);
        let keep = self.signed_distance(pivot);
        // preserve the signed distance from the pivot
        Self { nx: n.x, ny: n.y, d: keep - (n.x * pivot.x + n.y * pivot.y) }
    }

    /// Foot of the perpendicular from `p`.
    pub fn project(&self, p: Point2<S>) -> Point2<S> {
        let d = self.signed_distance(p);
        Point2::new(p.x - d * self.nx, p.y - d * self.ny)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum EnvelopeError {
    /// P(t) coincides with the pole: the line direction is undefined.
    DegenerateDirection,
    /// The envelope denominator w = ab - b x0 cos t - a y0 sin t vanishes
    /// (for boundary poles exactly at t = u).
    WVanishes,
    /// The two neighboring lines of the numeric oracle are parallel.
    ParallelLines,
}

impl fmt::Display for EnvelopeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DegenerateDirection => write!(f, "pedal line undefined: P(t) equals the pole"),
            Self::WVanishes => write!(f, "envelope denominator vanishes at this parameter"),
            Self::ParallelLines => write!(f, "neighboring lines are parallel"),
        }
    }
}

impl std::error::Error for EnvelopeError {}

/// The family member L(t): the line through P(t) perpendicular to P(t) - pole.
pub fn npc_line<S: Scalar>(
    e: &Ellipse<S>,
    pole: &Pole<S>,
    t: S,
    tol: &Tolerance<S>,
) -> Result<LineEq<S>, EnvelopeError> {
    let p = e.point(t);
    let n = p - pole.position;
    if tol.is_zero(n.norm(), e.a()) {
        return Err(EnvelopeError::DegenerateDirection);
    }
    Ok(LineEq::through_with_normal(p, n))
}

/// Envelope denominator w(t) = ab - b x0 cos t - a y0 sin t.
fn envelope_w<S: Scalar>(e: &Ellipse<S>, pole: Point2<S>, t: S) -> S {
    let (st, ct) = t.sin_cos();
    e.a() * e.b() - e.b() * pole.x * ct - e.a() * pole.y * st
}

/// Closed-form envelope point of the line family, from solving
/// L(t) = L'(t) = 0 by Cramer's rule. The 2x2 determinant is exactly w(t).
pub fn npc_envelope_point<S: Scalar>(
    e: &Ellipse<S>,
    pole: &Pole<S>,
    t: S,
    tol: &Tolerance<S>,
) -> Result<Point2<S>, EnvelopeError> {
    let (a, b) = (e.a(), e.b());
    let (x0, y0) = (pole.position.x, pole.position.y);
    let (st, ct) = t.sin_cos();
    let w = envelope_w(e, pole.position, t);
    if tol.is_zero(w, a * b) {
        return Err(EnvelopeError::WVanishes);
    }
    let g = a * a * ct * ct + b * b * st * st - a * x0 * ct - b * y0 * st;
    let gp = -e.c2() * (two::<S>() * t).sin() + a * x0 * st - b * y0 * ct;
    let x = (g * b * ct + gp * (y0 - b * st)) / w;
    let y = (-gp * (x0 - a * ct) + g * a * st) / w;
    Ok(Point2::new(x, y))
}

/// Independent envelope oracle: intersection of the neighboring lines
/// L(t-h) and L(t+h). Converges to the closed form at O(h^2).
pub fn npc_envelope_numeric<S: Scalar>(
    e: &Ellipse<S>,
    pole: &Pole<S>,
    t: S,
    h: S,
    tol: &Tolerance<S>,
) -> Result<Point2<S>, EnvelopeError> {
    let l1 = npc_line(e, pole, t - h, tol)?;
    let l2 = npc_line(e, pole, t + h, tol)?;
    l1.intersect(&l2, tol).ok_or(EnvelopeError::ParallelLines)
}

/// Boundary-pole envelope in closed form: the 3-cusp deltoid. Regular for
/// every t, including t = u where the raw envelope formula degenerates.
/// For a = b every parameter maps to the single point -M.
pub fn deltoid_point<S: Scalar>(e: &Ellipse<S>, u: S, t: S) -> Point2<S> {
    let (a, b, c2) = (e.a(), e.b(), e.c2());
    let (st, ct) = t.sin_cos();
    let (stu, ctu) = (t + u).sin_cos();
    let (su, cu) = u.sin_cos();
    Point2::new(
        (c2 * (S::one() + ctu) * ct - a * a * cu) / a,
        (c2 * ct * stu - c2 * st - a * a * su) / b,
    )
}

/// The canonical 3-cusp hypocycloid S(t) = 2(cos t, -sin t) + (cos 2t, sin 2t).
/// Cusps at t = 0, 2pi/3, 4pi/3; traversal is clockwise (signed area -2pi).
pub fn steiner_hypocycloid<S: Scalar>(t: S) -> Point2<S> {
    let (st, ct) = t.sin_cos();
    let (s2, c2) = (two::<S>() * t).sin_cos();
    Point2::new(two::<S>() * ct + c2, -two::<S>() * st + s2)
}

/// Affine map carrying the canonical hypocycloid onto the boundary-pole
/// deltoid: rotation by u/3 (counterclockwise), homothety by c^2/2, axis
/// scaling (1/a, 1/b), then translation by the deltoid centroid. Satisfies
///
///   apply(map, steiner_hypocycloid(t + u/3)) = deltoid_point(e, u, t)
///
/// pointwise, and |det| of the linear part is c^4 / (4ab).
pub fn affine_decomposition<S: Scalar>(e: &Ellipse<S>, u: S) -> AffineMap<S> {
    let third = S::one() / lit::<S>(3.0);
    let rot = AffineMap::rotation(u * third);
    let homothety = AffineMap::scaling(e.c2() * half::<S>(), e.c2() * half::<S>());
    let axes = AffineMap::scaling(S::one() / e.a(), S::one() / e.b());
    let translate = AffineMap::translation(deltoid_centroid(e, u));
    translate.compose(&axes.compose(&homothety.compose(&rot)))
}

/// Closed-form centroid of the boundary-pole deltoid:
/// (-(a^2+b^2) cos u / (2a), -(a^2+b^2) sin u / (2b)).
pub fn deltoid_centroid<S: Scalar>(e: &Ellipse<S>, u: S) -> Point2<S> {
    let k = (e.a() * e.a() + e.b() * e.b()) * half::<S>();
    let (su, cu) = u.sin_cos();
    Point2::new(-k * cu / e.a(), -k * su / e.b())
}

/// Envelope of the pedal lines rotated about P(t) by the signed angle
/// `theta` (CCW positive): the similarity image of the deltoid under
/// rotation about M through `theta` composed with homothety of factor
/// cos(theta) centered at M. At theta = +-pi/2 the curve collapses to M.
pub fn rotated_npc_point<S: Scalar>(e: &Ellipse<S>, u: S, theta: S, t: S) -> Point2<S> {
    let m = e.point(u);
    let d = deltoid_point(e, u, t);
    m + (d - m).rotated(theta).scale(theta.cos())
}

/// The rotated family member itself (oracle path for `rotated_npc_point`).
pub fn rotated_npc_line<S: Scalar>(
    e: &Ellipse<S>,
    u: S,
    theta: S,
    t: S,
    tol: &Tolerance<S>,
) -> Result<LineEq<S>, EnvelopeError> {
    let pole = Pole::boundary(e, u);
    let line = npc_line(e, &pole, t, tol)?;
    Ok(line.rotated_about(e.point(t), theta))
}

/// Classification of an arbitrary pole (dispatch between the deltoid case
/// and the interior/exterior variants).
pub fn classify_pole<S: Scalar>(e: &Ellipse<S>, p: Point2<S>, tol: &Tolerance<S>) -> PoleClass<S> {
    Pole::classify(e, p, tol).class
}

/// Numeric signed area of the sampled envelope for a pole with a closed
/// envelope (interior poles always qualify: the denominator w never
/// vanishes there). Exterior poles produce an unbounded two-branch curve
/// and report `WVanishes`. This is an exploration probe, not a closed form.
pub fn npc_signed_area_numeric<S: Scalar>(
    e: &Ellipse<S>,
    pole: &Pole<S>,
    n: usize,
    tol: &Tolerance<S>,
) -> Result<S, EnvelopeError> {
    assert!(n >= 64, "need a reasonable sample count");
    // min over t of w(t) is ab(1 - rho); the envelope is bounded iff rho < 1
    let rho = (pole.position.x / e.a()).hypot(pole.position.y / e.b());
    if rho >= S::one() - tol.margin(S::one()) {
        return Err(EnvelopeError::WVanishes);
    }
    let step = two::<S>() * S::PI() / lit(n as f64);
    let mut samples = Vec::with_capacity(n);
    for k in 0..n {
        samples.push(npc_envelope_point(e, pole, step * lit(k as f64), tol)?);
    }
    Ok(crate::quadrature::shoelace_area(&samples).expect("n >= 64"))
}
