//! Property-based invariants over randomized ellipses, poles and parameters.

use ellipse_npc::*;
use proptest::prelude::*;

const TAU: f64 = std::f64::consts::TAU;

fn ellipse_and_excess() -> impl Strategy<Value = Ellipsef> {
    // a = b + excess keeps a > b bounded away from degeneracy
    (0.3f64..1.5, 0.05f64..2.0).prop_map(|(b, excess)| Ellipse::new(b + excess, b))
}

fn tol() -> Tolerancef {
    Tolerance::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn boundary_points_satisfy_the_implicit_equation(
        e in ellipse_and_excess(),
        t in -10.0f64..10.0,
    ) {
        prop_assert!(e.implicit(e.point(t)).abs() < 1e-13);
    }

    #[test]
    fn affine_composition_is_application_order(
        angle1 in -3.0f64..3.0,
        angle2 in -3.0f64..3.0,
        kx in 0.2f64..3.0,
        ky in 0.2f64..3.0,
        tx in -2.0f64..2.0,
        ty in -2.0f64..2.0,
        px in -3.0f64..3.0,
        py in -3.0f64..3.0,
    ) {
        let f = AffineMap::rotation(angle1).compose(&AffineMap::translation(Point2::new(tx, ty)));
        let g = AffineMap::scaling(kx, ky).compose(&AffineMap::rotation(angle2));
        let p = Point2::new(px, py);
        prop_assert!(f.compose(&g).apply(p).dist(f.apply(g.apply(p))) < 1e-13);
    }

    #[test]
    fn factored_cubics_are_recovered(
        r0 in -10.0f64..10.0,
        offset1 in 0.1f64..5.0,
        offset2 in 0.1f64..5.0,
    ) {
        // well-separated roots drawn in [-10, 10+..]
        let (r1, r2) = (r0 + offset1, r0 + offset1 + offset2);
        let p = RealPolynomial::new(vec![
            -r0 * r1 * r2,
            r0 * r1 + r1 * r2 + r2 * r0,
            -(r0 + r1 + r2),
            1.0,
        ]);
        let roots = p.real_roots_flat(None, &tol()).unwrap();
        prop_assert_eq!(roots.len(), 3);
        for (found, want) in roots.iter().zip([r0, r1, r2]) {
            prop_assert!((found - want).abs() < 1e-9, "{} vs {}", found, want);
        }
    }

    #[test]
    fn deltoid_points_sit_on_their_pedal_line(
        e in ellipse_and_excess(),
        u in 0.0f64..TAU,
        t in 0.0f64..TAU,
    ) {
        // skip the singular parameter where the pedal line degenerates
        let gap = (t - u).rem_euclid(TAU).min(TAU - (t - u).rem_euclid(TAU));
        prop_assume!(gap > 0.05);
        let pole = Pole::boundary(&e, u);
        let line = npc_line(&e, &pole, t, &tol()).unwrap();
        prop_assert!(line.signed_distance(deltoid_point(&e, u, t)).abs() < 1e-10);
    }

    #[test]
    fn deltoid_area_is_pole_independent(
        e in ellipse_and_excess(),
        u in 0.0f64..TAU,
    ) {
        let exact = deltoid_area(&e);
        let samples = sample_closed(|t| deltoid_point(&e, u, t), TAU, 20_000);
        let numeric = shoelace_area(&samples).unwrap().abs();
        prop_assert!((numeric - exact).abs() <= 1e-6 * exact.max(1e-3));
    }

    #[test]
    fn frame_identities_hold_everywhere(
        e in ellipse_and_excess(),
        u in 0.0f64..TAU,
    ) {
        let f = DeltoidFrame::build(&e, u);
        let k = circle_k(&e, u).unwrap();
        for i in 0..3 {
            // homothety about the pole
            let expect = f.m + (f.osc_centers[i] - f.m).scale(2.0);
            prop_assert!(f.cusps[i].dist(expect) < 1e-10 * e.a().max(1.0));
            // concyclic pre-images
            prop_assert!(k.implicit(f.preimages[i]).abs() < 1e-9 * e.a().powi(2));
        }
        prop_assert!(k.implicit(f.c2).abs() < 1e-9 * e.a().powi(2));
    }

    #[test]
    fn boundary_pole_classification_roundtrips(
        e in ellipse_and_excess(),
        u in -std::f64::consts::PI..std::f64::consts::PI,
    ) {
        match classify_pole(&e, e.point(u), &tol()) {
            PoleClass::Boundary(v) => {
                let gap = (v - u).rem_euclid(TAU).min(TAU - (v - u).rem_euclid(TAU));
                prop_assert!(gap < 1e-9);
            }
            other => prop_assert!(false, "expected boundary, got {:?}", other),
        }
    }

    #[test]
    fn crossing_points_stay_on_the_ellipse(e in ellipse_and_excess()) {
        for w in c2_crossings(&e).unwrap() {
            prop_assert!(e.implicit(w).abs() < 1e-12);
        }
        for z in cusp_crossings(&e).unwrap() {
            prop_assert!(e.implicit(z).abs() < 1e-12);
        }
    }

    #[test]
    fn shoelace_sign_flips_with_orientation(
        n in 3usize..40,
        seed in 0u64..1000,
    ) {
        // random star polygon around the origin
        let mut pts = vec![];
        for k in 0..n {
            let r = 1.0 + 0.5 * ((seed as f64 + k as f64 * 7.3).sin());
            let t = TAU * k as f64 / n as f64;
            pts.push(Point2::new(r * t.cos(), r * t.sin()));
        }
        let fwd = shoelace_area(&pts).unwrap();
        let rev: Vec<_> = pts.iter().rev().copied().collect();
        let bwd = shoelace_area(&rev).unwrap();
        prop_assert!((fwd + bwd).abs() < 1e-12 * fwd.abs().max(1.0));
    }

    #[test]
    fn transversal_quadratic_roots_stay_inside(
        e in ellipse_and_excess(),
        s in -1.0f64..1.0,
    ) {
        let mx = s * e.a();
        for r in intersection_quadratic_roots(&e, mx) {
            prop_assert!(r.abs() <= e.a() * (1.0 + 1e-12));
            let q = intersection_quadratic(&e, mx);
            prop_assert!(q.eval(r).abs() <= 1e-9 * q.eval_scale(r));
        }
    }
}

#[test]
fn generic_scalar_instantiates_at_f32() {
    let e32 = Ellipse::<f32>::new(2.0, 1.0);
    let p = deltoid_point(&e32, 0.0, 0.0);
    assert!(p.dist(Point2::new(1.0f32, 0.0)) < 1e-5);
    let e64 = Ellipsef::new(2.0, 1.0);
    let q = deltoid_point(&e64, 0.7, 1.9);
    let q32 = deltoid_point(&e32, 0.7f32, 1.9);
    assert!((q.x - q32.x as f64).abs() < 1e-4 && (q.y - q32.y as f64).abs() < 1e-4);
    assert!((deltoid_area(&e32) - deltoid_area(&e64) as f32).abs() < 1e-3);
}
