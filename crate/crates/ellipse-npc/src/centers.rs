//! Catalogued triangle centers via an embedded table of first-barycentric
//! coordinates, as polynomial functions of the squared side lengths
//! (cyclically permuted). Only the indices this crate needs are included;
//! each entry is cross-checked in tests against an independent Euclidean
//! construction (altitudes, equal distances, midpoint/reflection/complement
//! relations, conic membership).

use std::fmt;

use crate::deltoid::{DeltoidError, DeltoidFrame};
use crate::ellipse::Ellipse;
use crate::point::Point2;
use crate::scalar::Scalar;
use crate::tolerance::Tolerance;
use crate::triangle::Triangle;

/// Supported Kimberling indices.
pub const SUPPORTED_CENTERS: [u16; 21] = [
    1, 2, 3, 4, 5, 20, 76, 98, 99, 114, 115, 148, 230, 376, 382, 548, 550, 598, 620, 671, 2482,
];

/// A validated Kimberling center index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CenterIndex(u16);

#[derive(Debug, Clone, PartialEq)]
pub enum CenterError {
    UnsupportedCenter(u16),
    DegenerateTriangle,
}

impl fmt::Display for CenterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UnsupportedCenter(k) => write!(f, "center X{k} is not in the embedded table"),
            Self::DegenerateTriangle => write!(f, "degenerate triangle"),
        }
    }
}

impl std::error::Error for CenterError {}

impl CenterIndex {
    pub fn new(k: u16) -> Result<Self, CenterError> {
        if SUPPORTED_CENTERS.contains(&k) {
            Ok(Self(k))
        } else {
            Err(CenterError::UnsupportedCenter(k))
        }
    }

    pub fn get(&self) -> u16 {
        self.0
    }
}

/// First barycentric coordinate as a function of the squared side lengths
/// `(x; y, z)` = (side opposite the vertex, then the other two, cyclically).
fn first_barycentric<S: Scalar>(k: u16, x: S, y: S, z: S) -> S {
    let two = crate::scalar::two::<S>();
    let three = crate::scalar::lit::<S>(3.0);
    // shared building blocks
    let f3 = |x: S, y: S, z: S| x * (y + z - x);
    let f4 = |x: S, y: S, z: S| (x + y - z) * (z + x - y);
    let f99 = |x: S, y: S, z: S| (z - x) * (x - y);
    // g vanishes on the circumcircle-direction of the Tarry point
    let g = |x: S, y: S, z: S| y * y + z * z - x * (y + z);
    // sigma_3 = sum of f3 cyclically = 16 * area^2 (Heron)
    let sigma3 = two * (x * y + y * z + z * x) - (x * x + y * y + z * z);
    // sigma_99 = sum of f99 cyclically
    let sigma99 = (x * y + y * z + z * x) - (x * x + y * y + z * z);
    match k {
        1 => x.sqrt(),
        2 => S::one(),
        3 => f3(x, y, z),
        4 => f4(x, y, z),
        5 => x * (y + z) - (y - z) * (y - z),
        20 => three * x * x - two * x * (y + z) - (y - z) * (y - z),
        76 => y * z,
        98 => g(y, z, x) * g(z, x, y),
        99 => f99(x, y, z),
        // complement of X98
        114 => g(x, y, z) * (g(y, z, x) + g(z, x, y)),
        115 => (y - z) * (y - z),
        // anticomplement of X99
        148 => x * x - x * (y + z) + three * y * z - y * y - z * z,
        230 => two * x * x + y * y + z * z - x * y - x * z - two * y * z,
        // reflection of X2 in X3
        376 => three * two * f3(x, y, z) - sigma3,
        // reflection of X3 in X4
        382 => two * f4(x, y, z) - f3(x, y, z),
        // midpoint of X5 and X20
        548 => crate::scalar::lit::<S>(5.0) * f3(x, y, z) - f4(x, y, z),
        // midpoint of X3 and X20
        550 => three * f3(x, y, z) - f4(x, y, z),
        598 => {
            crate::scalar::lit::<S>(4.0) * x * x + two * x * (y + z)
                - two * (y * y + z * z)
                + crate::scalar::lit::<S>(5.0) * y * z
        }
        // complement of X115
        620 => sigma99 + f99(x, y, z),
        // antipode of X99 on the Steiner circumellipse
        671 => (z + x - two * y) * (x + y - two * z),
        // complement of X671
        2482 => sigma99 + three * f99(x, y, z),
        _ => unreachable!("index validated by CenterIndex"),
    }
}

/// The named center of `t` in Cartesian coordinates.
pub fn triangle_center<S: Scalar>(
    t: &Triangle<S>,
    k: CenterIndex,
    tol: &Tolerance<S>,
) -> Result<Point2<S>, CenterError> {
    if t.is_degenerate(tol) {
        return Err(CenterError::DegenerateTriangle);
    }
    let [x, y, z] = t.side_sq();
    let w = [
        first_barycentric(k.0, x, y, z),
        first_barycentric(k.0, y, z, x),
        first_barycentric(k.0, z, x, y),
    ];
    let sum = w[0] + w[1] + w[2];
    if sum == S::zero() || !sum.is_finite() {
        return Err(CenterError::DegenerateTriangle);
    }
    let p = t.v[0].scale(w[0]) + t.v[1].scale(w[1]) + t.v[2].scale(w[2]);
    Ok(p.scale(S::one() / sum))
}

/// Convenience wrapper validating the raw index.
pub fn center<S: Scalar>(t: &Triangle<S>, k: u16, tol: &Tolerance<S>) -> Result<Point2<S>, CenterError> {
    triangle_center(t, CenterIndex::new(k)?, tol)
}

/// Which partner triangle a coincidence row refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Partner {
    /// The cusp triangle.
    Cusps,
    /// The osculating-center triangle.
    OscCenters,
}

/// The catalogued center coincidences between the pre-image triangle and the
/// cusp / osculating-center triangles: (center of T, partner, center of partner).
pub const COINCIDENCE_PAIRS: [(u16, Partner, u16); 10] = [
    (3, Partner::OscCenters, 2),
    (4, Partner::OscCenters, 671),
    (5, Partner::OscCenters, 115),
    (20, Partner::OscCenters, 99),
    (76, Partner::OscCenters, 598),
    (98, Partner::Cusps, 2),
    (114, Partner::Cusps, 230),
    (382, Partner::OscCenters, 148),
    (548, Partner::OscCenters, 620),
    (550, Partner::OscCenters, 2482),
];

/// One verified coincidence row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoincidenceRow<S> {
    pub t_center: u16,
    pub partner: Partner,
    pub partner_center: u16,
    pub distance: S,
    pub pass: bool,
}

/// Evaluate every catalogued coincidence at the frame for pole parameter `u`.
pub fn coincidence_table_check<S: Scalar>(
    e: &Ellipse<S>,
    u: S,
    tol: &Tolerance<S>,
) -> Result<Vec<CoincidenceRow<S>>, DeltoidError> {
    if e.is_circular() {
        return Err(DeltoidError::Degenerate);
    }
    let frame = DeltoidFrame::build(e, u);
    let t = Triangle::preimages(&frame);
    let tp = Triangle::cusps(&frame);
    let tpp = Triangle::osc_centers(&frame);
    let scale = e.a();
    // degeneracy detection stays pinned; `tol` only grades the rows
    let geom_tol = Tolerance::new(crate::scalar::lit(1e-12), crate::scalar::lit(1e-12));
    let mut rows = Vec::with_capacity(COINCIDENCE_PAIRS.len());
    for (kt, partner, kp) in COINCIDENCE_PAIRS {
        let lhs = center(&t, kt, &geom_tol).expect("preimage triangle is non-degenerate");
        let other = match partner {
            Partner::Cusps => &tp,
            Partner::OscCenters => &tpp,
        };
        let rhs = center(other, kp, &geom_tol).expect("triad triangles are non-degenerate");
        let distance = lhs.dist(rhs);
        rows.push(CoincidenceRow {
            t_center: kt,
            partner,
            partner_center: kp,
            distance,
            pass: tol.is_zero(distance, scale),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::LineEq;

    fn tol() -> Tolerance<f64> {
        Tolerance::default()
    }

    fn scalene() -> Triangle<f64> {
        Triangle::new([
            Point2::new(0.2, 0.1),
            Point2::new(4.3, 0.7),
            Point2::new(1.1, 3.9),
        ])
    }

    #[test]
    fn unsupported_index_is_rejected() {
        assert_eq!(CenterIndex::new(6).unwrap_err(), CenterError::UnsupportedCenter(6));
        assert!(CenterIndex::new(2482).is_ok());
    }

    #[test]
    fn degenerate_triangle_is_rejected() {
        let t = Triangle::new([
            Point2::new(0.0f64, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(2.0, 0.0),
        ]);
        assert_eq!(center(&t, 2, &tol()), Err(CenterError::DegenerateTriangle));
    }

    #[test]
    fn equilateral_centers_coincide() {
        let t = Triangle::new([
            Point2::new(1.0f64, 0.0),
            Point2::new(-0.5, 3.0f64.sqrt() / 2.0),
            Point2::new(-0.5, -(3.0f64.sqrt()) / 2.0),
        ]);
        let g = center(&t, 2, &tol()).unwrap();
        for k in [3u16, 4] {
            assert!(center(&t, k, &tol()).unwrap().dist(g) < 1e-13);
        }
    }

    #[test]
    fn incenter_is_equidistant_from_sides() {
        let t = scalene();
        let i = center(&t, 1, &tol()).unwrap();
        let d: Vec<f64> = (0..3).map(|k| t.side_line(k).signed_distance(i).abs()).collect();
        assert!((d[0] - d[1]).abs() < 1e-12 && (d[1] - d[2]).abs() < 1e-12);
    }

    #[test]
    fn circumcenter_and_orthocenter() {
        let t = scalene();
        let o = center(&t, 3, &tol()).unwrap();
        let r: Vec<f64> = t.v.iter().map(|v| v.dist(o)).collect();
        assert!((r[0] - r[1]).abs() < 1e-12 && (r[1] - r[2]).abs() < 1e-12);
        let h = center(&t, 4, &tol()).unwrap();
        for i in 0..3 {
            let side = t.v[(i + 2) % 3] - t.v[(i + 1) % 3];
            assert!((h - t.v[i]).dot(side).abs() < 1e-10);
        }
    }

    #[test]
    fn affine_relation_cross_checks() {
        let t = scalene();
        let tol = tol();
        let x = |k: u16| center(&t, k, &tol).unwrap();
        let x2 = x(2);
        let x3 = x(3);
        let x4 = x(4);
        let x5 = x(5);
        let x98 = x(98);
        let x99 = x(99);
        // nine-point center is the O-H midpoint
        assert!(x5.dist(x3.midpoint(x4)) < 1e-11);
        // reflections and complements
        assert!(x(20).dist(x4.reflected_through(x3)) < 1e-10);
        assert!(x98.dist(x99.reflected_through(x3)) < 1e-10);
        assert!(x(114).dist(x2.scale(3.0).midpoint(-x98)) < 1e-10);
        assert!(x(115).dist(x2.scale(3.0).midpoint(-x99)) < 1e-10);
        assert!(x(148).dist(x2.scale(3.0) - x99.scale(2.0)) < 1e-10);
        assert!(x(376).dist(x2.reflected_through(x3)) < 1e-10);
        assert!(x(382).dist(x3.reflected_through(x4)) < 1e-10);
        assert!(x(548).dist(x5.midpoint(x(20))) < 1e-10);
        assert!(x(550).dist(x3.midpoint(x(20))) < 1e-10);
        assert!(x(620).dist((x2.scale(3.0) + x99).scale(0.25)) < 1e-10);
        assert!(x(671).dist(x99.reflected_through(x2)) < 1e-10);
        assert!(x(2482).dist(x2.midpoint(x99)) < 1e-10);
    }

    #[test]
    fn steiner_and_tarry_points_sit_on_their_conics() {
        let t = scalene();
        let tol = tol();
        let o = center(&t, 3, &tol).unwrap();
        let r = t.v[0].dist(o);
        let x99 = center(&t, 99, &tol).unwrap();
        let x98 = center(&t, 98, &tol).unwrap();
        assert!((x99.dist(o) - r).abs() < 1e-11, "Steiner point on circumcircle");
        assert!((x98.dist(o) - r).abs() < 1e-11, "Tarry point on circumcircle");
        let se = t.steiner_circumellipse().unwrap();
        assert!(se.scaled_residual(x99) < 1e-11, "Steiner point on Steiner ellipse");
        let x671 = center(&t, 671, &tol).unwrap();
        assert!(se.scaled_residual(x671) < 1e-11, "X671 on Steiner ellipse");
        // X114 and X115 sit on the nine-point circle
        let x5 = center(&t, 5, &tol).unwrap();
        for k in [114u16, 115] {
            let p = center(&t, k, &tol).unwrap();
            assert!((p.dist(x5) - r / 2.0).abs() < 1e-11, "X{k} on nine-point circle");
        }
        // X230 lies on the orthic axis: reuse the radical axis of the
        // circumcircle and nine-point circle, which is that line
        let ninept = crate::circle::Circle::new(x5, r / 2.0);
        let circ = crate::circle::Circle::new(o, r);
        let orthic_axis = crate::triangle::radical_axis(&circ, &ninept, &tol).unwrap();
        let x230 = center(&t, 230, &tol).unwrap();
        assert!(orthic_axis.signed_distance(x230).abs() < 1e-10, "X230 on orthic axis");
        // X598 lies on the Kiepert hyperbola through the vertices, centroid
        // and orthocenter; verify via the five-point conic residual
        let x598 = center(&t, 598, &tol).unwrap();
        let kiepert = conic_through_five(
            [t.v[0], t.v[1], t.v[2], center(&t, 2, &tol).unwrap(), center(&t, 4, &tol).unwrap()],
        );
        assert!(kiepert.scaled_residual(x598) < 1e-9, "X598 on Kiepert hyperbola");
    }

    /// Five-point conic by solving the 5x6 homogeneous system (test helper).
    fn conic_through_five(p: [Point2<f64>; 5]) -> crate::conic::ConicImplicit<f64> {
        // Gaussian elimination with partial pivoting on the 5x6 system
        let mut m = [[0.0f64; 6]; 5];
        for (r, q) in p.iter().enumerate() {
            m[r] = [q.x * q.x, q.x * q.y, q.y * q.y, q.x, q.y, 1.0];
        }
        let mut piv_cols = vec![];
        let mut row = 0;
        for col in 0..6 {
            let mut best = row;
            for r in row..5 {
                if m[r][col].abs() > m[best][col].abs() {
                    best = r;
                }
            }
            if row < 5 && m[best][col].abs() > 1e-12 {
                m.swap(row, best);
                let d = m[row][col];
                for c in 0..6 {
                    m[row][c] /= d;
                }
                for r in 0..5 {
                    if r != row {
                        let f = m[r][col];
                        for c in 0..6 {
                            m[r][c] -= f * m[row][c];
                        }
                    }
                }
                piv_cols.push(col);
                row += 1;
            }
        }
        // free column -> null vector
        let free = (0..6).find(|c| !piv_cols.contains(c)).unwrap();
        let mut coeffs = [0.0f64; 6];
        coeffs[free] = 1.0;
        for (r, &pc) in piv_cols.iter().enumerate() {
            coeffs[pc] = -m[r][free];
        }
        crate::conic::ConicImplicit::new(coeffs)
    }

    #[test]
    fn isotomic_construction_matches_x76() {
        // cevians through X76 hit the sides at the isotomic points of the
        // symmedian cevians; verify via the defining reflection property
        let t = scalene();
        let tol = tol();
        let x76 = center(&t, 76, &tol).unwrap();
        // symmedian point barycentrics (a^2 : b^2 : c^2)
        let [x, y, z] = t.side_sq();
        let s = x + y + z;
        let k = t.v[0].scale(x / s) + t.v[1].scale(y / s) + t.v[2].scale(z / s);
        for i in 0..3 {
            let b = t.v[(i + 1) % 3];
            let c = t.v[(i + 2) % 3];
            let side = LineEq::through(b, c);
            let foot76 = side
                .intersect(&LineEq::through(t.v[i], x76), &tol)
                .unwrap();
            let foot_k = side.intersect(&LineEq::through(t.v[i], k), &tol).unwrap();
            // isotomic: the two feet are mirror images about the side midpoint
            let mid = b.midpoint(c);
            assert!(foot76.dist(foot_k.reflected_through(mid)) < 1e-9);
        }
    }

    #[test]
    fn preimage_triangle_classical_centers() {
        let e = Ellipse::new(2.0f64, 1.0);
        let tol = tol();
        for u in [0.37, 1.9, 3.3, 5.2] {
            let frame = DeltoidFrame::build(&e, u);
            let t = Triangle::preimages(&frame);
            let x2 = center(&t, 2, &tol).unwrap();
            assert!(x2.dist(Point2::origin()) < 1e-12, "centroid pinned at the center");
            let x3 = center(&t, 3, &tol).unwrap();
            let expect = Point2::new(3.0 / 4.0 * u.cos() / 2.0, -(3.0 / 4.0) * u.sin() / 1.0);
            assert!(x3.dist(expect) < 1e-12, "circumcenter closed form");
            let x99 = center(&t, 99, &tol).unwrap();
            assert!(x99.dist(frame.m) < 1e-11, "pole is the Steiner point");
            let x98 = center(&t, 98, &tol).unwrap();
            assert!(x98.dist(frame.c2) < 1e-11, "centroid of cusps is the Tarry point");
        }
    }

    #[test]
    fn cusp_triangle_steiner_point_closed_form() {
        // the Steiner point of the cusp triangle sits at
        // ((a^2-2b^2) cos u / a, -(2a^2-b^2) sin u / b), on both its
        // circumcircle and its Steiner circumellipse
        let e = Ellipse::new(2.0f64, 1.0);
        let tol = tol();
        for u in [0.41, 1.7, 3.9, 5.5] {
            let frame = DeltoidFrame::build(&e, u);
            let tp = Triangle::cusps(&frame);
            let x99p = center(&tp, 99, &tol).unwrap();
            let expect = Point2::new(
                (4.0 - 2.0) / 2.0 * u.cos(),
                -(2.0 * 4.0 - 1.0) / 1.0 * u.sin(),
            );
            assert!(x99p.dist(expect) < 1e-10, "u={u}");
            let circ = tp.circumcircle(&tol).unwrap();
            assert!(circ.implicit(x99p).abs() < 1e-9);
            let se = tp.steiner_circumellipse().unwrap();
            assert!(se.scaled_residual(x99p) < 1e-10);
        }
    }

    #[test]
    fn coincidence_rows_pass_at_default_tolerance() {
        let e = Ellipse::new(2.0f64, 1.0);
        let rows = coincidence_table_check(&e, 0.81, &Tolerance::new(1e-8, 1e-8)).unwrap();
        assert_eq!(rows.len(), 10);
        for row in rows {
            assert!(row.pass, "X{} row failed: distance {}", row.t_center, row.distance);
        }
    }
}
