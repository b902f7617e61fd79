//! Triangles, their Steiner conics, and the pairwise relations used by the
//! three deltoid triads: perspectivity, orthology, perspectrix, Euler line,
//! radical axes.

use std::fmt;

use crate::circle::{Circle, CircleError};
use crate::conic::ConicImplicit;
use crate::deltoid::{DeltoidError, DeltoidFrame};
use crate::ellipse::Ellipse;
use crate::envelope::LineEq;
use crate::point::{orient2, Point2};
use crate::poly::cubic_roots_closed_form;
use crate::scalar::{half, lit, two, Scalar};
use crate::tolerance::Tolerance;

/// Vertices index-aligned with the deltoid frame order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle<S> {
    pub v: [Point2<S>; 3],
}

#[derive(Debug, Clone, PartialEq)]
pub enum TriadError {
    DegenerateTriangle,
    /// Vertex-correspondence lines do not concur within tolerance.
    NotPerspective,
    /// Vertex-correspondence lines are pairwise parallel.
    ParallelCevians,
    /// Orthology perpendiculars do not concur within tolerance.
    NotOrthologic,
    /// All corresponding sides parallel: perspectrix at infinity.
    SidesParallel,
    /// Equilateral triangle: Euler line undefined.
    EquilateralDegenerate,
    /// Radical axis undefined for concentric circles.
    ConcentricCircles,
}

impl fmt::Display for TriadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            Self::DegenerateTriangle => "degenerate triangle",
            Self::NotPerspective => "triangles are not perspective",
            Self::ParallelCevians => "vertex-correspondence lines are parallel",
            Self::NotOrthologic => "triangles are not orthologic",
            Self::SidesParallel => "corresponding sides are parallel (perspectrix at infinity)",
            Self::EquilateralDegenerate => "equilateral triangle has no Euler line",
            Self::ConcentricCircles => "concentric circles have no radical axis",
        };
        write!(f, "{msg}")
    }
}

impl std::error::Error for TriadError {}

impl<S: Scalar> Triangle<S> {
    pub fn new(v: [Point2<S>; 3]) -> Self {
        Self { v }
    }

    /// The pre-image triangle of a deltoid frame.
    pub fn preimages(frame: &DeltoidFrame<S>) -> Self {
        Self::new(frame.preimages)
    }

    /// The cusp triangle of a deltoid frame.
    pub fn cusps(frame: &DeltoidFrame<S>) -> Self {
        Self::new(frame.cusps)
    }

    /// The osculating-center triangle of a deltoid frame.
    pub fn osc_centers(frame: &DeltoidFrame<S>) -> Self {
        Self::new(frame.osc_centers)
    }

    #[inline]
    pub fn signed_area(&self) -> S {
        orient2(self.v[0], self.v[1], self.v[2]) * half::<S>()
    }

    #[inline]
    pub fn area(&self) -> S {
        self.signed_area().abs()
    }

    /// Squared side lengths opposite each vertex.
    pub fn side_sq(&self) -> [S; 3] {
        [
            self.v[1].dist(self.v[2]).powi(2),
            self.v[2].dist(self.v[0]).powi(2),
            self.v[0].dist(self.v[1]).powi(2),
        ]
    }

    pub fn side_lengths(&self) -> [S; 3] {
        self.side_sq().map(|s| s.sqrt())
    }

    pub fn perimeter_scale(&self) -> S {
        let l = self.side_lengths();
        l[0].max(l[1]).max(l[2])
    }

    pub fn is_degenerate(&self, tol: &Tolerance<S>) -> bool {
        let s = self.perimeter_scale();
        tol.is_zero(self.signed_area(), s * s)
    }

    pub fn centroid(&self) -> Point2<S> {
        (self.v[0] + self.v[1] + self.v[2]).scale(S::one() / lit::<S>(3.0))
    }

    /// Side line opposite vertex `i`.
    pub fn side_line(&self, i: usize) -> LineEq<S> {
        LineEq::through(self.v[(i + 1) % 3], self.v[(i + 2) % 3])
    }

    /// Circumcircle through the three vertices.
    pub fn circumcircle(&self, tol: &Tolerance<S>) -> Result<Circle<S>, CircleError> {
        Circle::through(self.v[0], self.v[1], self.v[2], tol)
    }

    /// Normalized barycentric coordinate functions as affine-linear forms:
    /// row i holds (p, q, r) with lambda_i(x, y) = p x + q y + r.
    fn barycentric_forms(&self) -> Result<[[S; 3]; 3], TriadError> {
        let d = orient2(self.v[0], self.v[1], self.v[2]);
        if d == S::zero() {
            return Err(TriadError::DegenerateTriangle);
        }
        let mut rows = [[S::zero(); 3]; 3];
        for i in 0..3 {
            let b = self.v[(i + 1) % 3];
            let c = self.v[(i + 2) % 3];
            // lambda_i = orient2(p, b, c) / d, linear in p
            rows[i] = [
                (b.y - c.y) / d,
                (c.x - b.x) / d,
                (b.x * c.y - c.x * b.y) / d,
            ];
        }
        Ok(rows)
    }

    /// Steiner circumellipse: the conic through the vertices centered at the
    /// centroid (sum of pairwise products of barycentrics vanishes).
    pub fn steiner_circumellipse(&self) -> Result<ConicImplicit<S>, TriadError> {
        let l = self.barycentric_forms()?;
        let mut coeffs = [S::zero(); 6];
        for i in 0..3 {
            let j = (i + 1) % 3;
            accumulate_product(&mut coeffs, &l[i], &l[j], S::one());
        }
        Ok(ConicImplicit::new(coeffs))
    }

    /// Steiner inellipse: centered at the centroid, tangent to each side at
    /// its midpoint (sum of squares minus twice the pairwise products).
    pub fn steiner_inellipse(&self) -> Result<ConicImplicit<S>, TriadError> {
        let l = self.barycentric_forms()?;
        let mut coeffs = [S::zero(); 6];
        for i in 0..3 {
            accumulate_product(&mut coeffs, &l[i], &l[i], S::one());
            let j = (i + 1) % 3;
            accumulate_product(&mut coeffs, &l[i], &l[j], -two::<S>());
        }
        Ok(ConicImplicit::new(coeffs))
    }
}

/// coeffs += k * (a.x + b.y + c)(d.x + e.y + f) accumulated into conic layout.
fn accumulate_product<S: Scalar>(coeffs: &mut [S; 6], l1: &[S; 3], l2: &[S; 3], k: S) {
    coeffs[0] = coeffs[0] + k * l1[0] * l2[0];
    coeffs[1] = coeffs[1] + k * (l1[0] * l2[1] + l1[1] * l2[0]);
    coeffs[2] = coeffs[2] + k * l1[1] * l2[1];
    coeffs[3] = coeffs[3] + k * (l1[0] * l2[2] + l1[2] * l2[0]);
    coeffs[4] = coeffs[4] + k * (l1[1] * l2[2] + l1[2] * l2[1]);
    coeffs[5] = coeffs[5] + k * l1[2] * l2[2];
}

/// Circumcircle of the cusp triangle of the frame at `u`.
pub fn cusp_circumcircle<S: Scalar>(
    e: &Ellipse<S>,
    u: S,
    tol: &Tolerance<S>,
) -> Result<Circle<S>, DeltoidError> {
    if e.is_circular() {
        return Err(DeltoidError::Degenerate);
    }
    let frame = DeltoidFrame::build(e, u);
    Triangle::cusps(&frame)
        .circumcircle(tol)
        .map_err(|_| DeltoidError::Degenerate)
}

/// Smallest singular value of the stacked 3x3 homogeneous line system
/// (rows are normalized lines (nx, ny, d)). Scale-invariant concurrency
/// measure: three lines concur iff the smallest singular value vanishes.
///
/// Computed as |det A| / (sigma_1 sigma_2): the eigenvalue route alone loses
/// half the precision near concurrency, while the determinant cancels
/// cleanly there.
pub fn concurrency_sigma_min<S: Scalar>(lines: &[LineEq<S>; 3]) -> S {
    let rows = lines.map(|l| [l.nx, l.ny, l.d]);
    let det_a = rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
        - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
        + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]);
    // Gram matrix G = A A^T (same nonzero spectrum as A^T A)
    let mut g = [[S::zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            g[i][j] = rows[i][0] * rows[j][0] + rows[i][1] * rows[j][1] + rows[i][2] * rows[j][2];
        }
    }
    let tr = g[0][0] + g[1][1] + g[2][2];
    let m2 = g[0][0] * g[1][1] - g[0][1] * g[1][0] + g[0][0] * g[2][2] - g[0][2] * g[2][0]
        + g[1][1] * g[2][2] - g[1][2] * g[2][1];
    let det_g = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
        - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
        + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    let mut eigs = cubic_roots_closed_form(det_g, -m2, tr, -S::one());
    eigs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let (s1s2_sq, lam_min) = match eigs.as_slice() {
        [l0, _, l2] => ((eigs[1] * *l2).max(S::zero()), l0.max(S::zero())),
        _ => (S::zero(), S::zero()),
    };
    let s1s2 = s1s2_sq.sqrt();
    if s1s2 <= S::epsilon() {
        return lam_min.sqrt();
    }
    det_a.abs() / s1s2
}

/// Common point of three nearly concurrent lines: intersection of the two
/// best-conditioned ones.
fn concurrent_point<S: Scalar>(lines: &[LineEq<S>; 3], tol: &Tolerance<S>) -> Option<Point2<S>> {
    let pairs = [(0usize, 1usize), (0, 2), (1, 2)];
    let mut best: Option<(S, Point2<S>)> = None;
    for (i, j) in pairs {
        let det = (lines[i].nx * lines[j].ny - lines[i].ny * lines[j].nx).abs();
        if let Some(p) = lines[i].intersect(&lines[j], tol) {
            if best.map(|(d, _)| det > d).unwrap_or(true) {
                best = Some((det, p));
            }
        }
    }
    best.map(|(_, p)| p)
}

/// Perspector of two index-aligned triangles: common point of the three
/// vertex-correspondence lines.
pub fn perspector<S: Scalar>(
    t1: &Triangle<S>,
    t2: &Triangle<S>,
    tol: &Tolerance<S>,
) -> Result<Point2<S>, TriadError> {
    let mut lines = [LineEq { nx: S::zero(), ny: S::zero(), d: S::zero() }; 3];
    for i in 0..3 {
        if t1.v[i].dist(t2.v[i]) == S::zero() {
            return Err(TriadError::DegenerateTriangle);
        }
        lines[i] = LineEq::through(t1.v[i], t2.v[i]);
    }
    let scale = t1.perimeter_scale().max(t2.perimeter_scale());
    let p = concurrent_point(&lines, tol).ok_or(TriadError::ParallelCevians)?;
    if concurrency_sigma_min(&lines) > tol.margin(scale) {
        return Err(TriadError::NotPerspective);
    }
    Ok(p)
}

/// Orthology centers of two index-aligned triangles.
///
/// First center: common point of the perpendiculars from each vertex of `t1`
/// to the opposite side of `t2`. Second center: the symmetric role.
pub fn orthology_centers<S: Scalar>(
    t1: &Triangle<S>,
    t2: &Triangle<S>,
    tol: &Tolerance<S>,
) -> Result<(Point2<S>, Point2<S>), TriadError> {
    let first = orthology_one_way(t1, t2, tol)?;
    let second = orthology_one_way(t2, t1, tol)?;
    Ok((first, second))
}

fn orthology_one_way<S: Scalar>(
    from: &Triangle<S>,
    onto: &Triangle<S>,
    tol: &Tolerance<S>,
) -> Result<Point2<S>, TriadError> {
    let mut lines = [LineEq { nx: S::zero(), ny: S::zero(), d: S::zero() }; 3];
    for i in 0..3 {
        let side = onto.side_line(i);
        // perpendicular from from.v[i] to the side: its normal is the side's direction
        let dir = side.direction();
        lines[i] = LineEq::through_with_normal(from.v[i], dir);
    }
    let scale = from.perimeter_scale().max(onto.perimeter_scale());
    if concurrency_sigma_min(&lines) > tol.margin(scale) {
        return Err(TriadError::NotOrthologic);
    }
    concurrent_point(&lines, tol).ok_or(TriadError::NotOrthologic)
}

/// Perspectrix of two perspective triangles: the line through the
/// intersections of corresponding side lines.
pub fn perspectrix<S: Scalar>(
    t1: &Triangle<S>,
    t2: &Triangle<S>,
    tol: &Tolerance<S>,
) -> Result<LineEq<S>, TriadError> {
    let mut pts: Vec<Point2<S>> = vec![];
    let mut parallel_dirs: Vec<Point2<S>> = vec![];
    for i in 0..3 {
        let l1 = t1.side_line(i);
        let l2 = t2.side_line(i);
        match l1.intersect(&l2, tol) {
            Some(p) => pts.push(p),
            None => parallel_dirs.push(l1.direction()),
        }
    }
    match pts.len() {
        0 | 1 => Err(TriadError::SidesParallel),
        2 => {
            let line = LineEq::through(pts[0], pts[1]);
            // the remaining intersection is at infinity in the parallel
            // sides' direction; the perspectrix must run that way
            let dir = line.direction();
            if parallel_dirs.iter().any(|d| d.cross(dir).abs() > tol.margin(S::one())) {
                return Err(TriadError::NotPerspective);
            }
            Ok(line)
        }
        _ => {
            let scale = pts.iter().fold(S::one(), |m, p| m.max(p.norm()));
            let resid = orient2(pts[0], pts[1], pts[2]);
            if !tol.is_zero(resid, scale * scale) {
                return Err(TriadError::NotPerspective);
            }
            // pick the most distant pair for a well-conditioned line
            let d01 = pts[0].dist(pts[1]);
            let d02 = pts[0].dist(pts[2]);
            let d12 = pts[1].dist(pts[2]);
            let line = if d01 >= d02 && d01 >= d12 {
                LineEq::through(pts[0], pts[1])
            } else if d02 >= d12 {
                LineEq::through(pts[0], pts[2])
            } else {
                LineEq::through(pts[1], pts[2])
            };
            Ok(line)
        }
    }
}

/// Euler line: through the centroid and the circumcenter.
pub fn euler_line<S: Scalar>(t: &Triangle<S>, tol: &Tolerance<S>) -> Result<LineEq<S>, TriadError> {
    let g = t.centroid();
    let o = t
        .circumcircle(tol)
        .map_err(|_| TriadError::DegenerateTriangle)?
        .center;
    if tol.is_zero(g.dist(o), t.perimeter_scale()) {
        return Err(TriadError::EquilateralDegenerate);
    }
    Ok(LineEq::through(g, o))
}

/// Radical axis of two circles: locus of equal power, perpendicular to the
/// center line.
pub fn radical_axis<S: Scalar>(
    c1: &Circle<S>,
    c2: &Circle<S>,
    tol: &Tolerance<S>,
) -> Result<LineEq<S>, TriadError> {
    let d = c2.center - c1.center;
    let scale = c1.radius.max(c2.radius).max(S::one());
    if tol.is_zero(d.norm(), scale) {
        return Err(TriadError::ConcentricCircles);
    }
    // c1.implicit(p) - c2.implicit(p) = 0 is linear: 2 d . p + const = 0
    let k = c1.center.dot(c1.center) - c1.radius * c1.radius
        - (c2.center.dot(c2.center) - c2.radius * c2.radius);
    let n = d.scale(two());
    let len = n.norm();
    Ok(LineEq { nx: n.x / len, ny: n.y / len, d: k / len })
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = std::f64::consts::PI;

    fn tol() -> Tolerance<f64> {
        Tolerance::default()
    }

    fn e() -> Ellipse<f64> {
        Ellipse::new(2.0, 1.0)
    }

    fn frame(u: f64) -> DeltoidFrame<f64> {
        DeltoidFrame::build(&e(), u)
    }

    #[test]
    fn triangle_areas_match_closed_forms() {
        let sq3 = 3.0f64.sqrt();
        for u in [0.0, 0.77, 2.9, 5.1] {
            let f = frame(u);
            let t = Triangle::preimages(&f).area();
            let tp = Triangle::cusps(&f).area();
            let tpp = Triangle::osc_centers(&f).area();
            let c4 = 9.0; // (a^2 - b^2)^2 at a=2, b=1
            assert!((t - 3.0 * sq3 * 2.0 / 4.0).abs() < 1e-12);
            assert!((tp - 27.0 * sq3 * c4 / (16.0 * 2.0)).abs() < 1e-11);
            assert!((tpp - tp / 4.0).abs() < 1e-11);
        }
    }

    #[test]
    fn steiner_circumellipse_of_preimages_is_the_ellipse() {
        let f = frame(0.9);
        let conic = Triangle::preimages(&f).steiner_circumellipse().unwrap();
        let reference = ConicImplicit::axis_aligned_ellipse(Point2::origin(), 2.0, 1.0);
        let a = conic.normalized();
        let b = reference.normalized();
        let sign = if (a.coeffs[0] > 0.0) == (b.coeffs[0] > 0.0) { 1.0 } else { -1.0 };
        for i in 0..6 {
            assert!((a.coeffs[i] - sign * b.coeffs[i]).abs() < 1e-10, "coeff {i}");
        }
    }

    #[test]
    fn cusp_steiner_ellipse_axes() {
        // semi-axes 3c^2/(2a) along x and 3c^2/(2b) along y
        let f = frame(1.3);
        let conic = Triangle::cusps(&f).steiner_circumellipse().unwrap();
        let (rx, ry) = conic.axis_aligned_semi_axes().unwrap();
        assert!((rx - 2.25).abs() < 1e-10);
        assert!((ry - 4.5).abs() < 1e-10);
        // double-checked against the enclosed-area route
        let area = conic.ellipse_area().unwrap();
        assert!((area - PI * 2.25 * 4.5).abs() < 1e-8);
        // and the osc-center triangle carries the half-scale copy
        let half = Triangle::osc_centers(&f).steiner_circumellipse().unwrap();
        let (hx, hy) = half.axis_aligned_semi_axes().unwrap();
        assert!((hx - 1.125).abs() < 1e-10 && (hy - 2.25).abs() < 1e-10);
    }

    #[test]
    fn inellipse_of_preimages_is_half_the_ellipse() {
        let f = frame(2.1);
        let conic = Triangle::preimages(&f).steiner_inellipse().unwrap();
        let (rx, ry) = conic.axis_aligned_semi_axes().unwrap();
        assert!((rx - 1.0).abs() < 1e-10 && (ry - 0.5).abs() < 1e-10);
        // tangency at side midpoints
        let t = Triangle::preimages(&f);
        for i in 0..3 {
            let mid = t.v[(i + 1) % 3].midpoint(t.v[(i + 2) % 3]);
            assert!(conic.scaled_residual(mid) < 1e-10);
        }
    }

    #[test]
    fn inellipse_of_equilateral_is_incircle() {
        let t = Triangle::new([
            Point2::new(1.0f64, 0.0),
            Point2::new(-0.5, 3.0f64.sqrt() / 2.0),
            Point2::new(-0.5, -(3.0f64.sqrt()) / 2.0),
        ]);
        let conic = t.steiner_inellipse().unwrap();
        let (rx, ry) = conic.axis_aligned_semi_axes().unwrap();
        assert!((rx - 0.5).abs() < 1e-12 && (ry - 0.5).abs() < 1e-12);
    }

    #[test]
    fn cusp_circumcircle_matches_three_point_construction() {
        let tol = tol();
        for j in 0..64 {
            let u = 2.0 * PI * j as f64 / 64.0;
            let f = frame(u);
            let k = cusp_circumcircle(&e(), u, &tol).unwrap();
            for c in f.cusps {
                assert!(k.implicit(c).abs() < 1e-9);
            }
            // distinct from the five-point circle
            let k5 = crate::deltoid::circle_k(&e(), u).unwrap();
            assert!(k.center.dist(k5.center) > 1e-3);
        }
    }

    #[test]
    fn perspectors_of_the_triads() {
        let tol = tol();
        for u in [0.37, 1.23, 4.9] {
            let f = frame(u);
            let t = Triangle::preimages(&f);
            let tp = Triangle::cusps(&f);
            let tpp = Triangle::osc_centers(&f);
            let p1 = perspector(&t, &tp, &tol).unwrap();
            assert!(p1.dist(f.c2) < 1e-9);
            let p3 = perspector(&tp, &tpp, &tol).unwrap();
            assert!(p3.dist(f.m) < 1e-9);
        }
    }

    #[test]
    fn non_perspective_pair_is_rejected() {
        let t1 = Triangle::new([
            Point2::new(0.0f64, 0.0),
            Point2::new(4.0, 0.0),
            Point2::new(1.0, 3.0),
        ]);
        let t2 = Triangle::new([
            Point2::new(0.3, 1.7),
            Point2::new(5.0, 2.1),
            Point2::new(-1.0, -2.0),
        ]);
        assert_eq!(perspector(&t1, &t2, &tol()), Err(TriadError::NotPerspective));
    }

    #[test]
    fn pedal_antipedal_pair_is_not_orthologic() {
        // reference triangle and point
        let t = Triangle::new([
            Point2::new(0.0f64, 0.0),
            Point2::new(4.0, 0.2),
            Point2::new(1.2, 3.1),
        ]);
        let z = Point2::new(1.4, 0.9);
        // pedal triangle: feet of perpendiculars from z to the sides
        let pedal = Triangle::new([
            t.side_line(0).project(z),
            t.side_line(1).project(z),
            t.side_line(2).project(z),
        ]);
        // antipedal triangle: intersections of perpendiculars to z-vertex
        // lines erected at the vertices
        let perp_at = |v: Point2<f64>| LineEq::through_with_normal(v, v - z);
        let l0 = perp_at(t.v[0]);
        let l1 = perp_at(t.v[1]);
        let l2 = perp_at(t.v[2]);
        let anti = Triangle::new([
            l1.intersect(&l2, &tol()).unwrap(),
            l2.intersect(&l0, &tol()).unwrap(),
            l0.intersect(&l1, &tol()).unwrap(),
        ]);
        // both are orthologic to the reference (centers include z)...
        assert!(orthology_centers(&t, &pedal, &tol()).is_ok());
        assert!(orthology_centers(&t, &anti, &tol()).is_ok());
        // ...but not to each other
        assert_eq!(orthology_centers(&pedal, &anti, &tol()), Err(TriadError::NotOrthologic));
    }

    #[test]
    fn homothetic_triangles_have_no_finite_perspectrix() {
        let t1 = Triangle::new([
            Point2::new(0.0f64, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(0.5, 1.5),
        ]);
        let scale = |p: Point2<f64>| Point2::new(3.0 + 2.0 * p.x, -1.0 + 2.0 * p.y);
        let t2 = Triangle::new([scale(t1.v[0]), scale(t1.v[1]), scale(t1.v[2])]);
        assert_eq!(perspectrix(&t1, &t2, &tol()), Err(TriadError::SidesParallel));
    }

    #[test]
    fn euler_line_contains_the_classical_centers() {
        let t = Triangle::new([
            Point2::new(0.1f64, -0.2),
            Point2::new(3.9, 0.4),
            Point2::new(1.0, 2.8),
        ]);
        let l = euler_line(&t, &tol()).unwrap();
        let g = t.centroid();
        let o = t.circumcircle(&tol()).unwrap().center;
        // orthocenter via reflection relation H = 3G - 2O
        let h = g.scale(3.0) - o.scale(2.0);
        for p in [g, o, h] {
            assert!(l.signed_distance(p).abs() < 1e-10);
        }
        // nine-point center (midpoint of O and H) sits on it too
        assert!(l.signed_distance(o.midpoint(h)).abs() < 1e-10);
        // isoceles triangle on the x-axis: Euler line is the symmetry axis
        let iso = Triangle::new([
            Point2::new(-1.0f64, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 2.0),
        ]);
        let l = euler_line(&iso, &tol()).unwrap();
        assert!(l.direction().x.abs() < 1e-12);
    }

    #[test]
    fn radical_axis_cases() {
        let tol = tol();
        let c1 = Circle::new(Point2::new(-1.0f64, 0.0), 1.0);
        let c2 = Circle::new(Point2::new(1.0, 0.0), 1.0);
        let l = radical_axis(&c1, &c2, &tol).unwrap();
        assert!(l.signed_distance(Point2::new(0.0, 5.0)).abs() < 1e-12);
        assert!(l.signed_distance(Point2::new(0.0, -3.0)).abs() < 1e-12);
        let c3 = Circle::new(Point2::new(-1.0, 0.0), 2.0);
        assert_eq!(radical_axis(&c1, &c3, &tol), Err(TriadError::ConcentricCircles));
    }

    #[test]
    fn cusp_triangle_sides_meet_osculating_circle_intersections() {
        // each extended side of the cusp triangle passes through the second
        // intersection of two osculating circles and is perpendicular to
        // their radical axis
        let tol = tol();
        let u = 0.8;
        let f = frame(u);
        let tp = Triangle::cusps(&f);
        let k2 = crate::deltoid::osculating_circle(&e(), u, 1).unwrap();
        let k3 = crate::deltoid::osculating_circle(&e(), u, 2).unwrap();
        let axis = radical_axis(&k2, &k3, &tol).unwrap();
        // second intersection of K2 and K3: reflect M across the center line
        let center_line = LineEq::through(k2.center, k3.center);
        let m1 = center_line.project(f.m).scale(2.0) - f.m;
        // the radical axis is the common chord: both intersections sit on it
        assert!(axis.signed_distance(f.m).abs() < 1e-10);
        assert!(axis.signed_distance(m1).abs() < 1e-10);
        assert!(k2.implicit(m1).abs() < 1e-10);
        assert!(k3.implicit(m1).abs() < 1e-10);
        let side = tp.side_line(0); // opposite cusp 1: through cusps 2 and 3
        assert!(side.signed_distance(m1).abs() < 1e-9);
        let dot = side.direction().dot(axis.direction());
        assert!(dot.abs() < 1e-10, "side not perpendicular to radical axis");
    }
}
