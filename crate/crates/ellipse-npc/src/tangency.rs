//! Tangency and intersection structure of the deltoid against its ellipse:
//! the normal-pedal hyperbola, the tangency cubic Q, the transversal
//! quadratic J, the evolute-crossing threshold, and the assembled report.

use std::fmt;

use crate::conic::ConicImplicit;
use crate::ellipse::Ellipse;
use crate::envelope::deltoid_point;
use crate::point::Point2;
use crate::poly::RealPolynomial;
use crate::scalar::{lit, two, Scalar};
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, PartialEq)]
pub enum TangencyError {
    /// The hyperbola construction needs a pole away from the center.
    DegeneratePole,
    /// a = b: the whole tangency structure collapses.
    Degenerate,
    /// The evolute stays strictly inside the ellipse (a^2 <= 2 b^2).
    NoCrossings,
}

impl fmt::Display for TangencyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            Self::DegeneratePole => "pole at the center has no normal hyperbola",
            Self::Degenerate => "circular ellipse",
            Self::NoCrossings => "evolute does not cross the ellipse (a^2 <= 2 b^2)",
        };
        write!(f, "{msg}")
    }
}

impl std::error::Error for TangencyError {}

/// Where the pole sits relative to the evolute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvoluteRegime {
    OutsideEvolute,
    InsideEvolute,
    OnEvolute,
}

/// Tangencies and transversal crossings of the deltoid with the ellipse.
#[derive(Debug, Clone, PartialEq)]
pub struct TangencyReport<S> {
    pub regime: EvoluteRegime,
    /// Points where the deltoid is tangent to the ellipse (1 outside the
    /// evolute, 3 inside; a merged pair on the boundary).
    pub tangency_points: Vec<Point2<S>>,
    /// Transversal crossing points.
    pub transversal_points: Vec<Point2<S>>,
    /// All boundary contacts: tangencies followed by transversal crossings.
    pub intersection_points: Vec<Point2<S>>,
    /// Set when two tangency abscissae merge (pole on the evolute:
    /// four-point contact).
    pub merged_contact: bool,
}

/// Conic whose ellipse intersections are the feet of the normals through `m`:
/// `<(x, y) - m, (y/b^2, -x/a^2)> = 0`, i.e. c^2 xy + b^2 m_y x - a^2 m_x y = 0.
/// Passes through `m` and the center; asymptotes are axis-parallel.
pub fn apollonius_hyperbola<S: Scalar>(
    e: &Ellipse<S>,
    m: Point2<S>,
    tol: &Tolerance<S>,
) -> Result<ConicImplicit<S>, TangencyError> {
    if tol.is_zero(m.norm(), e.a()) {
        return Err(TangencyError::DegeneratePole);
    }
    Ok(ConicImplicit::new([
        S::zero(),
        e.c2(),
        S::zero(),
        e.b() * e.b() * m.y,
        -(e.a() * e.a()) * m.x,
        S::zero(),
    ]))
}

/// The hyperbola degenerates to an axis-parallel line pair when the pole
/// sits on a symmetry axis.
pub fn apollonius_is_degenerate<S: Scalar>(
    e: &Ellipse<S>,
    m: Point2<S>,
    tol: &Tolerance<S>,
) -> bool {
    tol.is_zero(m.x * m.y, e.a() * e.b())
}

/// Cubic in x whose real roots in [-a, a] are the x-coordinates of the
/// tangency points: c^4 x^3 - c^2 Mx (a^2+b^2) x^2 - a^4 (a^2-2b^2) x + a^6 Mx.
pub fn tangency_cubic<S: Scalar>(e: &Ellipse<S>, mx: S) -> Result<RealPolynomial<S>, TangencyError> {
    if e.is_circular() {
        return Err(TangencyError::Degenerate);
    }
    let (a, b, c2) = (e.a(), e.b(), e.c2());
    let a2 = a * a;
    let b2 = b * b;
    Ok(RealPolynomial::new(vec![
        a2 * a2 * a2 * mx,
        -a2 * a2 * (a2 - two::<S>() * b2),
        -c2 * mx * (a2 + b2),
        c2 * c2,
    ]))
}

/// Discriminant of the tangency cubic, as a function of the pole abscissa.
/// On the geometric domain |mx| < a its sign is positive exactly when the
/// cubic has three real roots, flipping at the evolute-crossing threshold.
pub fn tangency_cubic_discriminant<S: Scalar>(e: &Ellipse<S>, mx: S) -> Result<S, TangencyError> {
    let q = tangency_cubic(e, mx)?;
    let [d, c, b, a] = [q.coeffs[0], q.coeffs[1], q.coeffs[2], q.coeffs[3]];
    // standard cubic discriminant of a x^3 + b x^2 + c x + d
    Ok(lit::<S>(18.0) * a * b * c * d - lit::<S>(4.0) * b * b * b * d + b * b * c * c
        - lit::<S>(4.0) * a * c * c * c
        - lit::<S>(27.0) * a * a * d * d)
}

/// Quadratic whose roots are the pre-image abscissae of the transversal
/// crossings: (a^2+b^2)^2 x^2 - 2 Mx c^2 (a^2+b^2) x - 4 a^4 b^2 + Mx^2 (a^2+b^2)^2.
pub fn intersection_quadratic<S: Scalar>(e: &Ellipse<S>, mx: S) -> RealPolynomial<S> {
    let (a, b, c2) = (e.a(), e.b(), e.c2());
    let sum = a * a + b * b;
    RealPolynomial::new(vec![
        -lit::<S>(4.0) * a.powi(4) * b * b + mx * mx * sum * sum,
        -two::<S>() * mx * c2 * sum,
        sum * sum,
    ])
}

/// Closed-form roots of the transversal quadratic:
/// [c^2 Mx +- 2ab sqrt(a^2 - Mx^2)] / (a^2 + b^2); real with |root| <= a
/// whenever |Mx| <= a.
pub fn intersection_quadratic_roots<S: Scalar>(e: &Ellipse<S>, mx: S) -> Vec<S> {
    let (a, b, c2) = (e.a(), e.b(), e.c2());
    let sum = a * a + b * b;
    let disc = a * a - mx * mx;
    if disc < S::zero() {
        return vec![];
    }
    let s = two::<S>() * a * b * disc.sqrt();
    if s == S::zero() {
        vec![c2 * mx / sum]
    } else {
        vec![(c2 * mx - s) / sum, (c2 * mx + s) / sum]
    }
}

/// Crossing threshold of the evolute with the ellipse: the four points
/// (+-x*, +-y*). Defined only when a^2 > 2 b^2.
pub fn evolute_crossings<S: Scalar>(e: &Ellipse<S>) -> Result<(S, S), TangencyError> {
    let (a, b) = (e.a(), e.b());
    let a2 = a * a;
    let b2 = b * b;
    if a2 <= two::<S>() * b2 {
        return Err(TangencyError::NoCrossings);
    }
    let quart = a2 * a2 - b2 * b2;
    let sum = a2 + b2;
    let p32 = |v: S| v * v.sqrt();
    let xs = a2 * quart.sqrt() * p32(a2 - two::<S>() * b2) / (quart * sum);
    let ys = b2 * quart.sqrt() * p32(two::<S>() * a2 - b2) / (quart * sum);
    Ok((xs, ys))
}

/// Regime of the boundary pole at parameter `u` against the evolute,
/// decided by |Mx| against the crossing threshold (with a tolerance band);
/// when the evolute never leaves the ellipse every boundary pole is outside.
pub fn evolute_regime<S: Scalar>(e: &Ellipse<S>, u: S, tol: &Tolerance<S>) -> EvoluteRegime {
    let mx = e.point(u).x.abs();
    match evolute_crossings(e) {
        Err(_) => EvoluteRegime::OutsideEvolute,
        Ok((xs, _)) => {
            if tol.is_zero(mx - xs, e.a()) {
                EvoluteRegime::OnEvolute
            } else if mx < xs {
                EvoluteRegime::InsideEvolute
            } else {
                EvoluteRegime::OutsideEvolute
            }
        }
    }
}

/// Evaluation-only transcription of the quartic that, together with the
/// ellipse, carries all boundary contacts of the deltoid: it vanishes at
/// the pre-image points (x, y) = (a cos t, b sin t) of every parameter t
/// with deltoid_point(u, t) on the ellipse.
pub fn contact_quartic_eval<S: Scalar>(e: &Ellipse<S>, u: S, p: Point2<S>) -> S {
    let (a, b, c2) = (e.a(), e.b(), e.c2());
    let m = e.point(u);
    let (mx, my) = (m.x, m.y);
    let a2 = a * a;
    let b2 = b * b;
    let sum = a2 + b2;
    let quartic_sum = a2 * a2 + b2 * b2;
    let (x, y) = (p.x, p.y);
    let two_ = two::<S>();
    let three = lit::<S>(3.0);
    let four = lit::<S>(4.0);
    b2 * (a2 - two_ * mx * mx) * sum * c2 * c2 * x.powi(4)
        + two_ * a2 * mx * my * sum * c2 * c2 * x.powi(3) * y
        + two_ * a2 * b2 * mx * c2 * quartic_sum * x.powi(3)
        - two_ * a2 * a2 * my * c2 * quartic_sum * x * x * y
        + (-a2 * a2 * b2 * sum * (three * a2 * a2 - four * a2 * b2 + two_ * b2 * b2)
            + a2 * b2 * c2 * mx * mx * (three * a2 - b2) * sum)
            * x
            * x
        - two_ * a2.powi(3) * mx * my * c2 * sum * x * y
        - two_ * b2 * mx * a2.powi(3) * (a2 * a2 - a2 * b2 + b2 * b2) * x
        + two_ * a2.powi(6) * my * y
        + a2.powi(4) * b2 * (two_ * a2 * a2 - sum * mx * mx)
}

/// Distance from `p` to the deltoid of the frame at `u`: dense scan over `n`
/// samples, then golden-section polish of every candidate local minimum
/// (tangential and transversal passes of the curve can come very close to
/// each other, so polishing only the best grid sample is not enough).
pub fn nearest_deltoid_distance<S: Scalar>(e: &Ellipse<S>, u: S, p: Point2<S>, n: usize) -> S {
    let tau = two::<S>() * S::PI();
    let step = tau / lit(n as f64);
    let d: Vec<S> = (0..n)
        .map(|k| deltoid_point(e, u, step * lit(k as f64)).dist(p))
        .collect();
    let grid_best = d.iter().fold(S::infinity(), |m, v| m.min(*v));
    let cutoff = grid_best * lit(10.0) + step * lit(4.0);
    let mut best = S::infinity();
    for k in 0..n {
        let prev = d[(k + n - 1) % n];
        let next = d[(k + 1) % n];
        if d[k] <= prev && d[k] <= next && d[k] <= cutoff {
            let t = step * lit(k as f64);
            let polished = crate::loci::golden_min(
                |t| deltoid_point(e, u, t).dist(p),
                t - step,
                t + step,
            );
            best = best.min(deltoid_point(e, u, polished).dist(p));
        }
    }
    best
}

/// Assemble the full boundary-contact report for the pole at parameter `u`.
///
/// Tangency points come from the cubic's real roots in [-a, a], with the
/// y-branch selected by the normal-through-pole condition. Transversal
/// points come from the quadratic's roots: each root is a pre-image
/// abscissa, the matching branch is the one whose deltoid image lands on
/// the ellipse, and the reported point is that image.
pub fn deltoid_ellipse_intersections<S: Scalar>(
    e: &Ellipse<S>,
    u: S,
    tol: &Tolerance<S>,
) -> Result<TangencyReport<S>, TangencyError> {
    if e.is_circular() {
        return Err(TangencyError::Degenerate);
    }
    let m = e.point(u);
    let a = e.a();
    let cubic = tangency_cubic(e, m.x)?;
    let band = a * lit::<S>(1e-9);
    let roots = cubic
        .real_roots_flat(Some((-a - band, a + band)), tol)
        .map_err(|_| TangencyError::Degenerate)?;

    // merged tangency: the two smallest root gaps collapse
    let mut merged_contact = false;
    for w in roots.windows(2) {
        if (w[1] - w[0]).abs() < lit::<S>(1e-6) * a {
            merged_contact = true;
        }
    }

    let mut tangency_points: Vec<Point2<S>> = vec![];
    for r in &roots {
        let x = (*r).max(-a).min(a);
        let y2 = e.b() * e.b() * (S::one() - (x / a) * (x / a));
        let y0 = y2.max(S::zero()).sqrt();
        // pick the branch whose ellipse normal passes through the pole
        let mut best: Option<(S, Point2<S>)> = None;
        for y in [y0, -y0] {
            let q = Point2::new(x, y);
            if q.dist(m) < lit::<S>(1e-9) * a {
                continue; // the pole itself is not a tangency
            }
            let n = e.normal_dir(q);
            let resid = (m - q).cross(n).abs();
            if best.map(|(b, _)| resid < b).unwrap_or(true) {
                best = Some((resid, q));
            }
        }
        if let Some((resid, q)) = best {
            if resid <= lit::<S>(1e-7) * a
                && tangency_points.iter().all(|p| p.dist(q) > lit::<S>(1e-8) * a)
            {
                tangency_points.push(q);
            }
        }
    }

    let mut transversal_points: Vec<Point2<S>> = vec![];
    for j in intersection_quadratic_roots(e, m.x) {
        let x = j.max(-a).min(a);
        let y2 = e.b() * e.b() * (S::one() - (x / a) * (x / a));
        let y0 = y2.max(S::zero()).sqrt();
        for y in [y0, -y0] {
            let t = e.param_of(Point2::new(x, y));
            let img = deltoid_point(e, u, t);
            if e.implicit(img).abs() <= lit::<S>(1e-7)
                && transversal_points.iter().all(|p| p.dist(img) > lit::<S>(1e-8) * a)
            {
                transversal_points.push(img);
            }
        }
    }

    let mut intersection_points = tangency_points.clone();
    intersection_points.extend(transversal_points.iter().copied());
    Ok(TangencyReport {
        regime: evolute_regime(e, u, tol),
        tangency_points,
        transversal_points,
        intersection_points,
        merged_contact,
    })
}
