//! Everything attached to one boundary pole: cusp parameters, cusps, their
//! pre-images, osculating-circle centers, the area centroid, the five-point
//! circle, and the osculating circles themselves.

use std::fmt;

use crate::circle::Circle;
use crate::ellipse::Ellipse;
use crate::envelope::{deltoid_centroid, deltoid_point};
use crate::point::Point2;
use crate::quadrature::{polygon_centroid, sample_closed};
use crate::scalar::{half, lit, two, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub enum DeltoidError {
    /// a = b: the deltoid collapses to a point and the derived circles are
    /// undefined.
    Degenerate,
}

impl fmt::Display for DeltoidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Degenerate => write!(f, "circular ellipse: deltoid degenerates to a point"),
        }
    }
}

impl std::error::Error for DeltoidError {}

/// The full configuration derived from one boundary pole at parameter `u`.
///
/// Index conventions: `t_cusp[i] = -u/3 - i*2pi/3`; `cusps[i]`, `preimages[i]`
/// and `osc_centers[i]` are aligned with it, and every cross-triangle
/// construction (homothety, perspectivity, orthology) relies on this shared
/// order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltoidFrame<S> {
    pub ellipse: Ellipse<S>,
    pub u: S,
    pub t_cusp: [S; 3],
    /// Cusps of the deltoid (deltoid_point at the cusp parameters).
    pub cusps: [Point2<S>; 3],
    /// Points on the ellipse whose pedal line touches the deltoid at a cusp.
    pub preimages: [Point2<S>; 3],
    /// Centers of the circles osculating the ellipse at the pre-images;
    /// midpoints of the pole and the cusps.
    pub osc_centers: [Point2<S>; 3],
    /// Area centroid of the deltoid.
    pub c2: Point2<S>,
    /// The pole itself.
    pub m: Point2<S>,
    /// Set when a = b and every derived point collapses.
    pub degenerate: bool,
}

impl<S: Scalar> DeltoidFrame<S> {
    /// Build the frame from closed forms. The cusp/midpoint identity
    /// `cusps[i] = 2*osc_centers[i] - m` is asserted at construction; it is
    /// exact mathematics and only float noise separates the two routes.
    pub fn build(e: &Ellipse<S>, u: S) -> Self {
        let third = S::one() / lit::<S>(3.0);
        let tau = two::<S>() * S::PI() * third;
        let t_cusp = [-u * third, -u * third - tau, -u * third - tau - tau];
        let cusps = t_cusp.map(|t| deltoid_point(e, u, t));
        let preimages = t_cusp.map(|t| e.point(t));
        let osc_centers = t_cusp.map(|t| e.evolute_point(t));
        let m = e.point(u);
        let c2 = deltoid_centroid(e, u);
        let degenerate = e.is_circular();
        if !degenerate {
            let check = e.a() * e.a() * S::epsilon().sqrt();
            for i in 0..3 {
                let reconstructed = osc_centers[i].scale(two()) - m;
                assert!(
                    cusps[i].dist(reconstructed) <= check,
                    "cusp/osculating-center midpoint identity violated at i={i}"
                );
            }
        }
        Self { ellipse: *e, u, t_cusp, cusps, preimages, osc_centers, c2, m, degenerate }
    }

    /// Uniform samples of the deltoid over one period.
    pub fn sample(&self, n: usize) -> Vec<Point2<S>> {
        let e = self.ellipse;
        let u = self.u;
        sample_closed(move |t| deltoid_point(&e, u, t), two::<S>() * S::PI(), n)
    }
}

/// Closed-form deltoid area c^4 pi / (2ab), independent of the pole.
pub fn deltoid_area<S: Scalar>(e: &Ellipse<S>) -> S {
    e.c2() * e.c2() * S::PI() / (two::<S>() * e.a() * e.b())
}

/// Area centroid by Green-theorem quadrature over `n` uniform samples
/// (n >= 1000). Converges to the closed form `deltoid_centroid` at O(n^-2).
/// For a = b the curve has no interior; returns the collapse point -M.
pub fn deltoid_centroid_numeric<S: Scalar>(e: &Ellipse<S>, u: S, n: usize) -> Point2<S> {
    assert!(n >= 1000, "need at least 1000 samples");
    if e.is_circular() {
        return -e.point(u);
    }
    let samples = sample_closed(|t| deltoid_point(e, u, t), two::<S>() * S::PI(), n);
    polygon_centroid(&samples).expect("non-degenerate deltoid has an area")
}

/// The circle through the pole M, the centroid C2 and the three pre-images.
/// M C2 is a diameter, so the center is their midpoint.
pub fn circle_k<S: Scalar>(e: &Ellipse<S>, u: S) -> Result<Circle<S>, DeltoidError> {
    if e.is_circular() {
        return Err(DeltoidError::Degenerate);
    }
    let m = e.point(u);
    let c2 = deltoid_centroid(e, u);
    let center = m.midpoint(c2);
    Ok(Circle::new(center, m.dist(c2) * half::<S>()))
}

/// The circle through M, `preimages[i]` and `cusps[i]`; it osculates the
/// ellipse at the pre-image (its center sits on the evolute), and M-cusp is
/// one of its diameters.
pub fn osculating_circle<S: Scalar>(
    e: &Ellipse<S>,
    u: S,
    i: usize,
) -> Result<Circle<S>, DeltoidError> {
    assert!(i < 3, "cusp index in 0..3");
    if e.is_circular() {
        return Err(DeltoidError::Degenerate);
    }
    let frame = DeltoidFrame::build(e, u);
    let center = frame.osc_centers[i];
    Ok(Circle::new(center, center.dist(frame.preimages[i])))
}

/// The same frame carried through the rotated-line construction: cusps and
/// centroid of the rotated envelope, via the similarity centered at M.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotatedFrame<S> {
    pub theta: S,
    pub cusps: [Point2<S>; 3],
    pub c2: Point2<S>,
    /// Area of the rotated envelope: cos^2(theta) times the deltoid area.
    pub area: S,
}

pub fn rotated_frame<S: Scalar>(e: &Ellipse<S>, u: S, theta: S) -> RotatedFrame<S> {
    let frame = DeltoidFrame::build(e, u);
    let m = frame.m;
    let k = theta.cos();
    let map = |p: Point2<S>| m + (p - m).rotated(theta).scale(k);
    RotatedFrame {
        theta,
        cusps: frame.cusps.map(map),
        c2: map(frame.c2),
        area: k * k * deltoid_area(e),
    }
}
