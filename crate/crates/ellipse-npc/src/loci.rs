//! Global loci over revolutions of the pole: the cusp locus (parametric and
//! implicit sextic), the centroid locus, and their crossings of the ellipse.

use crate::conic::ConicImplicit;
use crate::deltoid::DeltoidError;
use crate::ellipse::Ellipse;
use crate::envelope::deltoid_centroid;
use crate::point::Point2;
use crate::scalar::{half, lit, two, Scalar};

/// Bivariate polynomial of total degree <= 6 stored as monomials
/// `(i, j, coeff)` for `coeff * x^i y^j`.
#[derive(Debug, Clone, PartialEq)]
pub struct ImplicitPoly2<S> {
    pub monomials: Vec<(u32, u32, S)>,
}

impl<S: Scalar> ImplicitPoly2<S> {
    pub fn new(monomials: Vec<(u32, u32, S)>) -> Self {
        assert!(
            monomials.iter().all(|(i, j, _)| i + j <= 6),
            "total degree must stay <= 6"
        );
        Self { monomials }
    }

    pub fn eval(&self, p: Point2<S>) -> S {
        self.monomials
            .iter()
            .fold(S::zero(), |acc, &(i, j, c)| acc + c * p.x.powi(i as i32) * p.y.powi(j as i32))
    }

    /// Largest monomial magnitude at `p`: the residual scale.
    pub fn eval_scale(&self, p: Point2<S>) -> S {
        self.monomials
            .iter()
            .fold(S::zero(), |m, &(i, j, c)| m.max((c * p.x.powi(i as i32) * p.y.powi(j as i32)).abs()))
    }

    /// Residual divided by the largest monomial magnitude at the point.
    pub fn scaled_residual(&self, p: Point2<S>) -> S {
        let s = self.eval_scale(p);
        if s == S::zero() {
            self.eval(p).abs()
        } else {
            (self.eval(p) / s).abs()
        }
    }
}

/// Parametric locus of the deltoid cusps: period 6 pi; the branch at
/// `u + 2 pi k` is the k-th cusp of the frame at pole parameter `u`.
pub fn cusp_locus_point<S: Scalar>(e: &Ellipse<S>, u: S) -> Point2<S> {
    let third = S::one() / lit::<S>(3.0);
    let k1 = lit::<S>(1.5) * e.c2();
    let k2 = (e.a() * e.a() + e.b() * e.b()) * half::<S>();
    let (s3, c3) = (u * third).sin_cos();
    let (su, cu) = u.sin_cos();
    Point2::new(
        (k1 * c3 - k2 * cu) / e.a(),
        (k1 * s3 - k2 * su) / e.b(),
    )
}

/// Degree-6 implicit equation of the cusp locus.
pub fn cusp_locus_implicit<S: Scalar>(e: &Ellipse<S>) -> Result<ImplicitPoly2<S>, DeltoidError> {
    if e.is_circular() {
        return Err(DeltoidError::Degenerate);
    }
    let a2 = e.a() * e.a();
    let b2 = e.b() * e.b();
    let four = lit::<S>(4.0);
    let twelve = lit::<S>(12.0);
    let three = lit::<S>(3.0);
    let q = a2 * a2 - a2 * b2 + b2 * b2;
    let sum = a2 + b2;
    let m2ab = two::<S>() * a2 - b2;
    let a2mb = a2 - two::<S>() * b2;
    Ok(ImplicitPoly2::new(vec![
        (6, 0, -four * a2 * a2 * a2),
        (0, 6, -four * b2 * b2 * b2),
        // -12 a^2 b^2 x^2 y^2 (a^2 x^2 + b^2 y^2)
        (4, 2, -twelve * a2 * a2 * b2),
        (2, 4, -twelve * a2 * b2 * b2),
        (4, 0, twelve * a2 * a2 * q),
        (0, 4, twelve * b2 * b2 * q),
        (2, 2, two::<S>() * twelve * a2 * b2 * q),
        (2, 0, -three * a2 * m2ab * sum * (two::<S>() * a2 * a2 - lit::<S>(5.0) * a2 * b2 + lit::<S>(5.0) * b2 * b2)),
        (0, 2, three * b2 * a2mb * sum * (lit::<S>(5.0) * a2 * a2 - lit::<S>(5.0) * a2 * b2 + two::<S>() * b2 * b2)),
        (0, 0, m2ab * m2ab * a2mb * a2mb * sum * sum),
    ]))
}

/// Elliptic locus of the deltoid centroid: axis-aligned with semi-axes
/// ((a^2+b^2)/(2a), (a^2+b^2)/(2b)).
pub fn c2_locus<S: Scalar>(e: &Ellipse<S>) -> ConicImplicit<S> {
    let k = (e.a() * e.a() + e.b() * e.b()) * half::<S>();
    ConicImplicit::axis_aligned_ellipse(Point2::origin(), k / e.a(), k / e.b())
}

/// The four boundary points where the centroid locus crosses the ellipse.
pub fn c2_crossings<S: Scalar>(e: &Ellipse<S>) -> Result<[Point2<S>; 4], DeltoidError> {
    if e.is_circular() {
        return Err(DeltoidError::Degenerate);
    }
    let (a, b) = (e.a(), e.b());
    let sum = a * a + b * b;
    let wx = a * (a * a + lit::<S>(3.0) * b * b).sqrt() / (two::<S>() * sum.sqrt());
    let wy = b * (lit::<S>(3.0) * a * a + b * b).sqrt() / (two::<S>() * sum.sqrt());
    Ok(sign_quadruple(wx, wy))
}

/// The four boundary points where a cusp coincides with its pre-image.
pub fn cusp_crossings<S: Scalar>(e: &Ellipse<S>) -> Result<[Point2<S>; 4], DeltoidError> {
    if e.is_circular() {
        return Err(DeltoidError::Degenerate);
    }
    let (a, b) = (e.a(), e.b());
    let den = (a * a + b * b).sqrt();
    Ok(sign_quadruple(a * a / den, b * b / den))
}

fn sign_quadruple<S: Scalar>(x: S, y: S) -> [Point2<S>; 4] {
    [
        Point2::new(x, y),
        Point2::new(x, -y),
        Point2::new(-x, y),
        Point2::new(-x, -y),
    ]
}

/// Parameters in `[0, span)` where `f` changes sign, polished by bisection.
pub fn sign_change_params<S: Scalar, F: Fn(S) -> S>(f: F, span: S, n: usize) -> Vec<S> {
    let step = span / lit(n as f64);
    let mut out = vec![];
    let mut prev = f(S::zero());
    for k in 1..=n {
        let u = step * lit(k as f64);
        let cur = f(u);
        if prev == S::zero() {
            out.push(u - step);
        } else if prev * cur < S::zero() {
            let (mut lo, mut hi) = (u - step, u);
            let mut flo = prev;
            for _ in 0..80 {
                let mid = (lo + hi) * half::<S>();
                let fm = f(mid);
                if fm == S::zero() {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if (flo > S::zero()) != (fm > S::zero()) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            out.push((lo + hi) * half::<S>());
        }
        prev = cur;
    }
    out
}

/// Pole parameters in `[0, 2 pi)` where the centroid crosses the ellipse.
pub fn c2_crossing_params<S: Scalar>(e: &Ellipse<S>) -> Vec<S> {
    sign_change_params(
        |u| e.implicit(deltoid_centroid(e, u)),
        two::<S>() * S::PI(),
        2048,
    )
}

/// Locus parameters in `[0, 6 pi)` where the cusp branch crosses the ellipse
/// (4 per traversal; each of the three cusps contributes one traversal per
/// three pole revolutions).
///
/// The crossing is a high-order contact (the implicit value along the locus
/// vanishes to third order), so the sign-change bracket is polished by
/// minimizing the cusp-to-preimage distance, which stays well conditioned.
pub fn cusp_crossing_params<S: Scalar>(e: &Ellipse<S>) -> Vec<S> {
    let raw = sign_change_params(
        |u| e.implicit(cusp_locus_point(e, u)),
        lit::<S>(6.0) * S::PI(),
        6144,
    );
    let third = S::one() / lit::<S>(3.0);
    let dist = |v: S| cusp_locus_point(e, v).dist(e.point(-v * third));
    let mut out: Vec<S> = vec![];
    for v in raw {
        let polished = golden_min(dist, v - lit(1e-3), v + lit(1e-3));
        if out.iter().all(|w| (*w - polished).abs() > lit(1e-3)) {
            out.push(polished);
        }
    }
    out
}

/// Golden-section minimizer on [lo, hi].
pub(crate) fn golden_min<S: Scalar, F: Fn(S) -> S>(f: F, mut lo: S, mut hi: S) -> S {
    let ratio = lit::<S>(0.381_966_011_250_105);
    for _ in 0..100 {
        let m1 = lo + (hi - lo) * ratio;
        let m2 = hi - (hi - lo) * ratio;
        if f(m1) < f(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    (lo + hi) * half::<S>()
}

/// Self-intersections of the cusp locus by dense sampling, local
/// Gauss-Newton refinement on parameter pairs, and point clustering.
/// A diagnostic: approximate by construction, calibrated on the aspect
/// ratios used in tests.
pub fn cusp_locus_self_intersections<S: Scalar>(e: &Ellipse<S>, n: usize) -> Vec<Point2<S>> {
    let period = lit::<S>(6.0) * S::PI();
    let step = period / lit(n as f64);
    let pts: Vec<Point2<S>> = (0..n).map(|k| cusp_locus_point(e, step * lit(k as f64))).collect();
    let scale = e.a().max(e.b());
    let coarse = scale * lit::<S>(0.02);
    let min_sep = lit::<S>(0.5);
    let mut found: Vec<Point2<S>> = vec![];
    for i in 0..n {
        for j in (i + 2)..n {
            let wrap = ((j - i) as f64).min((n - (j - i)) as f64);
            if lit::<S>(wrap) * step < min_sep {
                continue;
            }
            if pts[i].dist(pts[j]) > coarse {
                continue;
            }
            let u0 = step * lit(i as f64);
            let v0 = step * lit(j as f64);
            if let Some(p) = refine_pair(e, u0, v0, period, min_sep) {
                if found.iter().all(|q| q.dist(p) > lit::<S>(1e-4) * scale) {
                    found.push(p);
                }
            }
        }
    }
    found
}

/// Gauss-Newton on |C(u) - C(v)|^2; forward differences for the Jacobian.
fn refine_pair<S: Scalar>(e: &Ellipse<S>, mut u: S, mut v: S, period: S, min_sep: S) -> Option<Point2<S>> {
    let h = lit::<S>(1e-7);
    let target = lit::<S>(1e-9) * e.a();
    for _ in 0..80 {
        let pu = cusp_locus_point(e, u);
        let pv = cusp_locus_point(e, v);
        let r = pu - pv;
        let du = (cusp_locus_point(e, u + h) - pu).scale(S::one() / h);
        let dv = (cusp_locus_point(e, v + h) - pv).scale(S::one() / h);
        // solve [du, -dv] [su, sv]^T = -r
        let det = du.x * (-dv.y) - (-dv.x) * du.y;
        if det.abs() < lit::<S>(1e-14) {
            return None;
        }
        let su = (-r.x * (-dv.y) - (-dv.x) * (-r.y)) / det;
        let sv = (du.x * (-r.y) - (-r.x) * du.y) / det;
        u = u + su;
        v = v + sv;
        if cusp_locus_point(e, u).dist(cusp_locus_point(e, v)) < target {
            break;
        }
    }
    let sep = (u - v).abs();
    let sep = sep.min((period - sep).abs());
    let ok = cusp_locus_point(e, u).dist(cusp_locus_point(e, v)) < lit::<S>(1e-6) * e.a() && sep > min_sep;
    if ok {
        Some(cusp_locus_point(e, u))
    } else {
        None
    }
}

/// Nearest pre-image index and distance of a point, given the pole parameter:
/// used to confirm coincidence events at crossings.
pub fn nearest_preimage<S: Scalar>(e: &Ellipse<S>, u: S, p: Point2<S>) -> (usize, S) {
    let third = S::one() / lit::<S>(3.0);
    let tau = two::<S>() * S::PI() * third;
    let mut best = (0usize, S::infinity());
    for i in 0..3 {
        let d = p.dist(e.point(-u * third - tau * lit(i as f64)));
        if d < best.1 {
            best = (i, d);
        }
    }
    best
}

/// Exteriority margin of the centroid locus against the 90-degree-rotated
/// copy of the ellipse: the minimum radial ratio over a sampled sweep
/// (>= 1, equality only for a = b).
pub fn c2_locus_exteriority_margin<S: Scalar>(e: &Ellipse<S>, samples: usize) -> S {
    let k = (e.a() * e.a() + e.b() * e.b()) * half::<S>();
    let (rx, ry) = (k / e.a(), k / e.b());
    let mut min_ratio = S::infinity();
    for i in 0..samples {
        let t = two::<S>() * S::PI() * lit(i as f64) / lit(samples as f64);
        let (st, ct) = t.sin_cos();
        let p = Point2::new(rx * ct, ry * st);
        let ang = p.y.atan2(p.x);
        let (sa, ca) = ang.sin_cos();
        // rotated ellipse: semi-axis b along x, a along y
        let rot_r = S::one() / ((ca / e.b()).powi(2) + (sa / e.a()).powi(2)).sqrt();
        min_ratio = min_ratio.min(p.norm() / rot_r);
    }
    min_ratio
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = std::f64::consts::PI;

    fn e() -> Ellipse<f64> {
        Ellipse::new(2.0, 1.0)
    }

    #[test]
    fn locus_starts_at_first_cusp() {
        assert!(cusp_locus_point(&e(), 0.0).dist(Point2::new(1.0, 0.0)) < 1e-14);
        // period 6 pi
        let p = cusp_locus_point(&e(), 1.234);
        let q = cusp_locus_point(&e(), 1.234 + 6.0 * PI);
        assert!(p.dist(q) < 1e-12);
    }

    #[test]
    fn branches_cover_the_frame_cusps() {
        let e = e();
        for u in [0.3, 2.8, 5.9] {
            let f = crate::deltoid::DeltoidFrame::build(&e, u);
            for (k, cusp) in f.cusps.iter().enumerate() {
                let branch = cusp_locus_point(&e, u + 2.0 * PI * k as f64);
                assert!(branch.dist(*cusp) < 1e-10, "u={u} k={k}");
            }
        }
    }

    #[test]
    fn sextic_vanishes_on_locus_only() {
        let e = e();
        let sextic = cusp_locus_implicit(&e).unwrap();
        for k in 0..200 {
            let u = 6.0 * PI * k as f64 / 200.0;
            let res = sextic.scaled_residual(cusp_locus_point(&e, u));
            assert!(res < 1e-8, "u={u}: residual {res}");
        }
        assert!(sextic.scaled_residual(Point2::new(20.0, 0.0)) > 1e-3);
        assert_eq!(cusp_locus_implicit(&Ellipse::new(1.0, 1.0)), Err(DeltoidError::Degenerate));
    }

    #[test]
    fn sextic_passes_origin_at_sqrt2_ratio() {
        let e = Ellipse::new(2.0f64.sqrt(), 1.0);
        let sextic = cusp_locus_implicit(&e).unwrap();
        // constant term vanishes exactly when a^2 = 2 b^2
        assert!(sextic.eval(Point2::origin()).abs() < 1e-10);
    }

    #[test]
    fn crossing_points_land_on_the_ellipse() {
        let e = e();
        // frozen first-quadrant values at a=2, b=1:
        // W = (sqrt(7)/sqrt(5), sqrt(13)/(2 sqrt(5)))
        let w0 = c2_crossings(&e).unwrap()[0];
        assert!((w0.x - (7.0f64 / 5.0).sqrt()).abs() < 1e-14);
        assert!((w0.y - 13.0f64.sqrt() / (2.0 * 5.0f64.sqrt())).abs() < 1e-14);
        for w in c2_crossings(&e).unwrap() {
            assert!(e.implicit(w).abs() < 1e-12);
        }
        let z = cusp_crossings(&e).unwrap();
        for p in z {
            assert!(e.implicit(p).abs() < 1e-12);
        }
        // z formula at a=2, b=1: (4, 1)/sqrt(5)
        assert!(z[0].dist(Point2::new(4.0 / 5.0f64.sqrt(), 1.0 / 5.0f64.sqrt())) < 1e-12);
        // W and Z never coincide for a > b
        for ratio in [1.1, 1.7, 2.4, 3.0] {
            let e = Ellipse::new(ratio, 1.0);
            for w in c2_crossings(&e).unwrap() {
                for z in cusp_crossings(&e).unwrap() {
                    assert!(w.dist(z) > 1e-3, "ratio {ratio}");
                }
            }
        }
    }

    #[test]
    fn crossing_counts() {
        let e = e();
        assert_eq!(c2_crossing_params(&e).len(), 4);
        // one locus traversal crosses 4 times; three cusps -> 12 events
        // per three pole revolutions
        assert_eq!(cusp_crossing_params(&e).len(), 4);
    }

    #[test]
    fn coincidence_at_crossings() {
        let e = e();
        for u in c2_crossing_params(&e) {
            let c2 = deltoid_centroid(&e, u);
            let (_, d) = nearest_preimage(&e, u, c2);
            assert!(d < 1e-7, "u={u}: nearest preimage {d}");
        }
        for v in cusp_crossing_params(&e) {
            let cusp = cusp_locus_point(&e, v);
            // the branch at locus parameter v is a cusp of the frame at
            // pole parameter v (mod 2 pi), aligned with preimage index 0
            let pre = e.point(-v / 3.0);
            assert!(cusp.dist(pre) < 1e-7, "v={v}");
        }
    }

    #[test]
    fn centroid_locus_geometry() {
        let e = e();
        let conic = c2_locus(&e);
        let (rx, ry) = conic.axis_aligned_semi_axes().unwrap();
        assert!((rx - 1.25).abs() < 1e-12 && (ry - 2.5).abs() < 1e-12);
        for u in [0.3, 1.9, 4.4] {
            assert!(conic.scaled_residual(deltoid_centroid(&e, u)) < 1e-13);
        }
        assert!(c2_locus_exteriority_margin(&e, 720) >= 1.0);
        // circle: locus coincides with the rotated copy
        let margin = c2_locus_exteriority_margin(&Ellipse::new(1.5, 1.5), 720);
        assert!(f64::abs(margin - 1.0) < 1e-12);
    }

    #[test]
    fn self_intersection_counts_at_calibrated_ratios() {
        for (ratio, expect) in [(1.27, 4usize), (2.0f64.sqrt(), 3), (1.56, 2)] {
            let e = Ellipse::new(ratio, 1.0);
            let n = cusp_locus_self_intersections(&e, 1200).len();
            assert_eq!(n, expect, "a/b = {ratio}");
        }
    }
}
