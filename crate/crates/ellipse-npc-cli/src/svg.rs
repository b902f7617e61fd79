//! Standalone SVG figures with deterministic bytes: absolute coordinates
//! only, fixed float formatting, fixed element order, viewBox fitted to the
//! drawn geometry with a 5% margin.

use ellipse_npc::*;

use crate::config::RunConfig;

const TAU: f64 = std::f64::consts::TAU;

pub const FIGURES: [&str; 6] = [
    "main",
    "preimg-tri",
    "osculating",
    "cusp-loci",
    "deltoid-tangs",
    "npc-rot",
];

struct Layer {
    kind: LayerKind,
    color: &'static str,
    width: f64,
    dashed: bool,
    label: String,
}

enum LayerKind {
    Path { points: Vec<Point2f>, closed: bool },
    Markers { points: Vec<Point2f>, radius: f64 },
}

pub struct Figure {
    layers: Vec<Layer>,
}

impl Figure {
    fn new() -> Self {
        Self { layers: vec![] }
    }

    fn curve(&mut self, label: &str, color: &'static str, points: Vec<Point2f>, closed: bool) {
        self.layers.push(Layer {
            kind: LayerKind::Path { points, closed },
            color,
            width: 0.02,
            dashed: false,
            label: label.to_string(),
        });
    }

    fn dashed(&mut self, label: &str, color: &'static str, points: Vec<Point2f>, closed: bool) {
        self.layers.push(Layer {
            kind: LayerKind::Path { points, closed },
            color,
            width: 0.015,
            dashed: true,
            label: label.to_string(),
        });
    }

    fn markers(&mut self, label: &str, color: &'static str, points: Vec<Point2f>) {
        self.layers.push(Layer {
            kind: LayerKind::Markers { points, radius: 0.045 },
            color,
            width: 0.0,
            dashed: false,
            label: label.to_string(),
        });
    }

    fn segment(&mut self, label: &str, color: &'static str, p: Point2f, q: Point2f) {
        self.curve(label, color, vec![p, q], false);
    }

    fn bbox(&self) -> (Point2f, Point2f) {
        let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for layer in &self.layers {
            let pts = match &layer.kind {
                LayerKind::Path { points, .. } => points,
                LayerKind::Markers { points, .. } => points,
            };
            for p in pts {
                lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
                hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
            }
        }
        (lo, hi)
    }

    /// Render to SVG 1.1 bytes. The y-axis is flipped by emitting
    /// pre-transformed absolute coordinates (no `transform` attributes).
    pub fn to_svg(&self) -> Vec<u8> {
        let (lo, hi) = self.bbox();
        let span_x = (hi.x - lo.x).max(1e-9);
        let span_y = (hi.y - lo.y).max(1e-9);
        let margin = 0.05 * span_x.max(span_y);
        let min_x = lo.x - margin;
        let width = span_x + 2.0 * margin;
        // flipped y: svg_y = -y, so the box top is -hi.y - margin
        let min_y = -hi.y - margin;
        let height = span_y + 2.0 * margin;

        let f = |v: f64| {
            let v = if v == 0.0 { 0.0 } else { v };
            format!("{v:.6}")
        };
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        out.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" height=\"640\" viewBox=\"{} {} {} {}\">\n",
            f(min_x), f(min_y), f(width), f(height)
        ));
        out.push_str(&format!(
            "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n",
            f(min_x), f(min_y), f(width), f(height)
        ));
        for layer in &self.layers {
            match &layer.kind {
                LayerKind::Path { points, closed } => {
                    if points.len() < 2 {
                        continue;
                    }
                    let mut d = String::new();
                    for (i, p) in points.iter().enumerate() {
                        d.push_str(if i == 0 { "M" } else { "L" });
                        d.push_str(&format!("{},{} ", f(p.x), f(-p.y)));
                    }
                    if *closed {
                        d.push('Z');
                    }
                    let dash = if layer.dashed { " stroke-dasharray=\"0.06,0.04\"" } else { "" };
                    out.push_str(&format!(
                        "<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\"{}/>\n",
                        d.trim_end(),
                        layer.color,
                        f(layer.width),
                        dash
                    ));
                }
                LayerKind::Markers { points, radius } => {
                    for p in points {
                        out.push_str(&format!(
                            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>\n",
                            f(p.x),
                            f(-p.y),
                            f(*radius),
                            layer.color
                        ));
                    }
                }
            }
        }
        // legend: one text entry per distinct label, stacked top-left
        let text_h = 0.05 * span_y.max(span_x);
        let mut seen: Vec<&str> = vec![];
        for layer in &self.layers {
            if seen.contains(&layer.label.as_str()) {
                continue;
            }
            seen.push(&layer.label);
            let y = min_y + margin * 0.5 + text_h * seen.len() as f64;
            out.push_str(&format!(
                "<text x=\"{}\" y=\"{}\" font-size=\"{}\" font-family=\"monospace\" fill=\"{}\">{}</text>\n",
                f(min_x + margin * 0.5),
                f(y),
                f(text_h * 0.8),
                layer.color,
                layer.label
            ));
        }
        out.push_str("</svg>\n");
        out.into_bytes()
    }
}

fn sample_curve(f: impl Fn(f64) -> Point2f, span: f64, n: usize) -> Vec<Point2f> {
    (0..=n).map(|k| f(span * k as f64 / n as f64)).collect()
}

fn circle_points(c: &Circlef, n: usize) -> Vec<Point2f> {
    (0..=n)
        .map(|k| {
            let t = TAU * k as f64 / n as f64;
            Point2::new(c.center.x + c.radius * t.cos(), c.center.y + c.radius * t.sin())
        })
        .collect()
}

fn conic_ellipse_points(c: &Conicf, n: usize) -> Vec<Point2f> {
    let center = c.center().expect("central conic");
    let (rx, ry) = c.axis_aligned_semi_axes().expect("axis-aligned ellipse");
    (0..=n)
        .map(|k| {
            let t = TAU * k as f64 / n as f64;
            Point2::new(center.x + rx * t.cos(), center.y + ry * t.sin())
        })
        .collect()
}

pub fn render_figure(name: &str, cfg: &RunConfig) -> Result<Vec<u8>, String> {
    let e = cfg.ellipse();
    let frame = DeltoidFrame::build(&e, cfg.u);
    let n = cfg.samples.clamp(256, 8192);
    let mut fig = Figure::new();
    let ellipse_pts = sample_curve(|t| e.point(t), TAU, n);
    let deltoid_pts = sample_curve(|t| deltoid_point(&e, cfg.u, t), TAU, n);

    match name {
        "main" => {
            fig.curve("ellipse", "#222222", ellipse_pts, true);
            fig.curve("deltoid", "#7b2d8b", deltoid_pts, true);
            for i in 0..3 {
                fig.segment("cusp tangent", "#888888", frame.preimages[i], frame.c2);
                fig.segment("cusp tangent", "#888888", frame.c2, frame.cusps[i]);
            }
            fig.markers("cusps", "#7b2d8b", frame.cusps.to_vec());
            fig.markers("pole", "#d62728", vec![frame.m]);
            fig.markers("centroid", "#1f77b4", vec![frame.c2]);
        }
        "preimg-tri" => {
            fig.curve("ellipse", "#222222", ellipse_pts, true);
            fig.curve("deltoid", "#7b2d8b", deltoid_pts, true);
            let t = Triangle::preimages(&frame);
            fig.curve("preimage triangle", "#e07b00", t.v.to_vec(), true);
            let inell = ConicImplicit::axis_aligned_ellipse(Point2::origin(), cfg.a / 2.0, cfg.b / 2.0);
            fig.dashed("caustic (half-size)", "#e07b00", conic_ellipse_points(&inell, n / 2), true);
            if let Ok(k) = circle_k(&e, cfg.u) {
                fig.curve("five-point circle", "#2ca02c", circle_points(&k, n / 2), true);
            }
            fig.markers("pole", "#d62728", vec![frame.m]);
            fig.markers("centroid", "#1f77b4", vec![frame.c2]);
            fig.markers("preimages", "#e07b00", frame.preimages.to_vec());
        }
        "osculating" => {
            fig.curve("ellipse", "#222222", ellipse_pts, true);
            fig.curve("deltoid", "#7b2d8b", deltoid_pts, true);
            for i in 0..3 {
                if let Ok(k) = osculating_circle(&e, cfg.u, i) {
                    fig.dashed("osculating circle", "#2ca02c", circle_points(&k, n / 2), true);
                }
            }
            fig.curve("center triangle", "#444444", frame.osc_centers.to_vec(), true);
            fig.markers("pole", "#d62728", vec![frame.m]);
            fig.markers("preimages", "#e07b00", frame.preimages.to_vec());
            fig.markers("centers", "#2ca02c", frame.osc_centers.to_vec());
        }
        "cusp-loci" => {
            fig.curve("ellipse", "#222222", ellipse_pts, true);
            let locus = sample_curve(|v| cusp_locus_point(&e, v), 6.0 * std::f64::consts::PI, 3 * n);
            fig.dashed("cusp locus", "#7b2d8b", locus, true);
            fig.dashed("centroid locus", "#1f77b4", conic_ellipse_points(&c2_locus(&e), n / 2), true);
            if let Ok(w) = c2_crossings(&e) {
                fig.markers("W crossings", "#1f77b4", w.to_vec());
            }
            if let Ok(z) = cusp_crossings(&e) {
                fig.markers("Z crossings", "#7b2d8b", z.to_vec());
            }
        }
        "deltoid-tangs" => {
            fig.curve("ellipse", "#222222", ellipse_pts, true);
            fig.curve("deltoid", "#7b2d8b", deltoid_pts, true);
            fig.dashed("evolute", "#9467bd", sample_curve(|t| e.evolute_point(t), TAU, n), true);
            // normal-feet hyperbola branches: y = -b^2 My x / (c^2 x - a^2 Mx)
            let m = frame.m;
            if !apollonius_is_degenerate(&e, m, &cfg.tol) {
                let asymptote = e.a() * e.a() * m.x / e.c2();
                let xr = 1.6 * e.a();
                for (label, lo, hi) in [
                    ("normal hyperbola", -xr, asymptote - 0.02 * e.a()),
                    ("normal hyperbola", asymptote + 0.02 * e.a(), xr),
                ] {
                    if hi <= lo {
                        continue;
                    }
                    let branch: Vec<Point2f> = (0..=n / 2)
                        .map(|k| {
                            let x = lo + (hi - lo) * k as f64 / (n / 2) as f64;
                            let y = -e.b() * e.b() * m.y * x / (e.c2() * x - e.a() * e.a() * m.x);
                            Point2::new(x, y)
                        })
                        .filter(|p| p.y.abs() < 3.0 * e.a())
                        .collect();
                    fig.dashed(label, "#8c8c00", branch, false);
                }
            }
            if let Ok(rep) = deltoid_ellipse_intersections(&e, cfg.u, &cfg.tol) {
                fig.markers("tangencies", "#d62728", rep.tangency_points);
                fig.markers("crossings", "#1f77b4", rep.transversal_points);
            }
            fig.markers("pole", "#d62728", vec![frame.m]);
        }
        "npc-rot" => {
            let theta = cfg.theta.unwrap_or(std::f64::consts::FRAC_PI_4);
            fig.curve("ellipse", "#222222", ellipse_pts, true);
            fig.curve("deltoid", "#7b2d8b", deltoid_pts, true);
            let rotated = sample_curve(|t| rotated_npc_point(&e, cfg.u, theta, t), TAU, n);
            fig.curve("rotated envelope", "#8c8c00", rotated, true);
            for i in 0..3 {
                if let Ok(k) = osculating_circle(&e, cfg.u, i) {
                    fig.dashed("osculating circle", "#2ca02c", circle_points(&k, n / 2), true);
                }
            }
            let rf = rotated_frame(&e, cfg.u, theta);
            fig.markers("pole", "#d62728", vec![frame.m]);
            fig.markers("centroid", "#1f77b4", vec![frame.c2]);
            fig.markers("rotated centroid", "#8c8c00", vec![rf.c2]);
        }
        other => return Err(format!("unknown figure '{other}' (expected one of {FIGURES:?})")),
    }
    Ok(fig.to_svg())
}
