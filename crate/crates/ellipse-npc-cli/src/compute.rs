//! `compute`: emit the full derived configuration for one pole as JSON, or
//! parametric curve samples as CSV.

use ellipse_npc::*;
use serde::Serialize;

use crate::config::RunConfig;
use crate::output::Csv;

const TAU: f64 = std::f64::consts::TAU;

#[derive(Serialize)]
pub struct CircleDoc {
    pub center: [f64; 2],
    pub radius: f64,
}

impl From<Circlef> for CircleDoc {
    fn from(c: Circlef) -> Self {
        Self { center: [c.center.x, c.center.y], radius: c.radius }
    }
}

#[derive(Serialize)]
pub struct TriangleDoc {
    pub vertices: [[f64; 2]; 3],
    pub area: f64,
}

fn tri_doc(t: &Trianglef) -> TriangleDoc {
    TriangleDoc {
        vertices: t.v.map(|p| [p.x, p.y]),
        area: t.area(),
    }
}

#[derive(Serialize)]
pub struct ConicDoc {
    pub coefficients: [f64; 6],
    pub semi_axes: Option<[f64; 2]>,
}

fn conic_doc(c: &Conicf) -> ConicDoc {
    ConicDoc {
        coefficients: c.normalized().coeffs,
        semi_axes: c.axis_aligned_semi_axes().ok().map(|(x, y)| [x, y]),
    }
}

#[derive(Serialize)]
pub struct TangencyDoc {
    pub regime: String,
    pub evolute_crossing_x: Option<f64>,
    pub evolute_crossing_y: Option<f64>,
    pub tangency_points: Vec<[f64; 2]>,
    pub transversal_points: Vec<[f64; 2]>,
    pub merged_contact: bool,
}

#[derive(Serialize)]
pub struct RotatedDoc {
    pub theta: f64,
    pub area: f64,
    pub area_factor: f64,
    pub c2_star: [f64; 2],
    pub cusps_star: [[f64; 2]; 3],
}

#[derive(Serialize)]
pub struct ComputeDoc {
    pub schema: u32,
    pub a: f64,
    pub b: f64,
    pub u: f64,
    pub degenerate: bool,
    pub m: [f64; 2],
    pub c2: [f64; 2],
    pub t_cusp: [f64; 3],
    pub cusps: [[f64; 2]; 3],
    pub preimages: [[f64; 2]; 3],
    pub osc_centers: [[f64; 2]; 3],
    pub deltoid_area: f64,
    pub circle_k: Option<CircleDoc>,
    pub osculating_circles: Option<Vec<CircleDoc>>,
    pub cusp_circumcircle: Option<CircleDoc>,
    pub triangles: Option<[TriangleDoc; 3]>,
    pub cusp_steiner_ellipse: Option<ConicDoc>,
    pub preimage_steiner_inellipse: Option<ConicDoc>,
    pub c2_locus: ConicDoc,
    /// Coarse polyline of the cusp locus over its full period.
    pub cusp_locus_samples: Vec<[f64; 2]>,
    pub w_points: Option<Vec<[f64; 2]>>,
    pub z_points: Option<Vec<[f64; 2]>>,
    pub tangency: Option<TangencyDoc>,
    pub rotated: Option<RotatedDoc>,
}

pub fn compute_doc(cfg: &RunConfig) -> ComputeDoc {
    let e = cfg.ellipse();
    let frame = DeltoidFrame::build(&e, cfg.u);
    let degenerate = frame.degenerate;
    let pt = |p: Point2f| [p.x, p.y];

    let triangles = (!degenerate).then(|| {
        [
            tri_doc(&Triangle::preimages(&frame)),
            tri_doc(&Triangle::cusps(&frame)),
            tri_doc(&Triangle::osc_centers(&frame)),
        ]
    });

    let tangency = deltoid_ellipse_intersections(&e, cfg.u, &cfg.tol).ok().map(|rep| {
        let (xs, ys) = match evolute_crossings(&e) {
            Ok((x, y)) => (Some(x), Some(y)),
            Err(_) => (None, None),
        };
        TangencyDoc {
            regime: format!("{:?}", rep.regime),
            evolute_crossing_x: xs,
            evolute_crossing_y: ys,
            tangency_points: rep.tangency_points.iter().map(|p| pt(*p)).collect(),
            transversal_points: rep.transversal_points.iter().map(|p| pt(*p)).collect(),
            merged_contact: rep.merged_contact,
        }
    });

    let rotated = cfg.theta.map(|theta| {
        let rf = rotated_frame(&e, cfg.u, theta);
        RotatedDoc {
            theta,
            area: rf.area,
            area_factor: theta.cos().powi(2),
            c2_star: pt(rf.c2),
            cusps_star: rf.cusps.map(pt),
        }
    });

    ComputeDoc {
        schema: 1,
        a: cfg.a,
        b: cfg.b,
        u: cfg.u,
        degenerate,
        m: pt(frame.m),
        c2: pt(frame.c2),
        t_cusp: frame.t_cusp,
        cusps: frame.cusps.map(pt),
        preimages: frame.preimages.map(pt),
        osc_centers: frame.osc_centers.map(pt),
        deltoid_area: deltoid_area(&e),
        circle_k: circle_k(&e, cfg.u).ok().map(Into::into),
        osculating_circles: (!degenerate).then(|| {
            (0..3)
                .map(|i| osculating_circle(&e, cfg.u, i).unwrap().into())
                .collect()
        }),
        cusp_circumcircle: cusp_circumcircle(&e, cfg.u, &cfg.tol).ok().map(Into::into),
        cusp_steiner_ellipse: (!degenerate)
            .then(|| Triangle::cusps(&frame).steiner_circumellipse().ok().map(|c| conic_doc(&c)))
            .flatten(),
        preimage_steiner_inellipse: (!degenerate)
            .then(|| Triangle::preimages(&frame).steiner_inellipse().ok().map(|c| conic_doc(&c)))
            .flatten(),
        c2_locus: conic_doc(&c2_locus(&e)),
        cusp_locus_samples: (0..240)
            .map(|k| pt(cusp_locus_point(&e, 6.0 * std::f64::consts::PI * k as f64 / 240.0)))
            .collect(),
        w_points: c2_crossings(&e).ok().map(|ws| ws.iter().map(|p| pt(*p)).collect()),
        z_points: cusp_crossings(&e).ok().map(|zs| zs.iter().map(|p| pt(*p)).collect()),
        tangency,
        triangles,
        rotated,
    }
}

/// Parametric samples of the main curves, one row per parameter value.
/// The cusp-locus columns run over the locus parameter 3t, covering its
/// full period while t covers one revolution.
pub fn compute_csv(cfg: &RunConfig) -> Vec<u8> {
    let e = cfg.ellipse();
    let mut header = vec![
        "t", "ellipse_x", "ellipse_y", "deltoid_x", "deltoid_y", "evolute_x", "evolute_y",
        "cusp_locus_x", "cusp_locus_y",
    ];
    if cfg.theta.is_some() {
        header.push("rotated_x");
        header.push("rotated_y");
    }
    let mut csv = Csv::new(&header);
    let n = cfg.samples;
    for k in 0..n {
        let t = TAU * k as f64 / n as f64;
        let p = e.point(t);
        let d = deltoid_point(&e, cfg.u, t);
        let ev = e.evolute_point(t);
        let lc = cusp_locus_point(&e, 3.0 * t);
        let mut row = vec![t, p.x, p.y, d.x, d.y, ev.x, ev.y, lc.x, lc.y];
        if let Some(theta) = cfg.theta {
            let r = rotated_npc_point(&e, cfg.u, theta, t);
            row.push(r.x);
            row.push(r.y);
        }
        csv.row(&row);
    }
    csv.into_bytes()
}
