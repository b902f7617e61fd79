//! `sweep`: per-pole (or per-rotation-angle) rows of the key scalars, fanned
//! out across worker threads and merged deterministically by index.

use ellipse_npc::*;
use rayon::prelude::*;

use crate::config::RunConfig;
use crate::output::Csv;

const TAU: f64 = std::f64::consts::TAU;

pub fn sweep_csv(cfg: &RunConfig) -> Vec<u8> {
    match cfg.theta {
        Some(_) => theta_sweep(cfg),
        None => pole_sweep(cfg),
    }
}

/// One revolution of the pole: invariants row by row.
fn pole_sweep(cfg: &RunConfig) -> Vec<u8> {
    let e = cfg.ellipse();
    let n = cfg.sweep;
    let samples = cfg.samples.clamp(1_000, 20_000);
    let rows: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|k| {
            let u = TAU * k as f64 / n as f64;
            let frame = DeltoidFrame::build(&e, u);
            let area_num = shoelace_area(&sample_closed(|t| deltoid_point(&e, u, t), TAU, samples))
                .unwrap()
                .abs();
            let t = Triangle::preimages(&frame);
            let tp = Triangle::cusps(&frame);
            let tpp = Triangle::osc_centers(&frame);
            let concyclic = match circle_k(&e, u) {
                Ok(kc) => [frame.m, frame.c2, frame.preimages[0], frame.preimages[1], frame.preimages[2]]
                    .iter()
                    .map(|p| kc.implicit(*p).abs())
                    .fold(0.0f64, f64::max),
                Err(_) => 0.0,
            };
            let caustic = (0..3)
                .map(|i| {
                    let l = t.side_line(i);
                    ((cfg.a / 2.0 * l.nx).powi(2) + (cfg.b / 2.0 * l.ny).powi(2) - l.d * l.d).abs()
                })
                .fold(0.0f64, f64::max);
            let c2_side = e.implicit(frame.c2).signum();
            vec![
                u,
                area_num,
                t.area(),
                tp.area(),
                tpp.area(),
                concyclic,
                caustic,
                c2_side,
            ]
        })
        .collect();
    let mut csv = Csv::new(&[
        "u",
        "deltoid_area_numeric",
        "area_preimage_triangle",
        "area_cusp_triangle",
        "area_center_triangle",
        "concyclic_residual",
        "caustic_tangency_residual",
        "c2_outside_ellipse_sign",
    ]);
    for row in rows {
        csv.row(&row);
    }
    csv.into_bytes()
}

/// Sweep of the line-rotation angle at fixed pole: traced area against the
/// cos^2 law.
fn theta_sweep(cfg: &RunConfig) -> Vec<u8> {
    let e = cfg.ellipse();
    let n = cfg.sweep;
    let samples = cfg.samples.clamp(1_000, 20_000);
    let half_pi = std::f64::consts::FRAC_PI_2;
    let rows: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|k| {
            let theta = -half_pi + TAU / 2.0 * (k as f64 + 0.5) / n as f64;
            let traced = shoelace_area(&sample_closed(
                |t| rotated_npc_point(&e, cfg.u, theta, t),
                TAU,
                samples,
            ))
            .unwrap()
            .abs();
            let predicted = theta.cos().powi(2) * deltoid_area(&e);
            vec![theta, traced, predicted]
        })
        .collect();
    let mut csv = Csv::new(&["theta", "traced_area", "predicted_area"]);
    for row in rows {
        csv.row(&row);
    }
    csv.into_bytes()
}
