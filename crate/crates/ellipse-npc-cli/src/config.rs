//! Shared run configuration and validation.

use clap::Args;
use ellipse_npc::{Ellipsef, Tolerancef};

#[derive(Debug, Clone, Args)]
pub struct CommonOpts {
    /// Major semi-axis.
    #[arg(long, default_value_t = 2.0)]
    pub a: f64,
    /// Minor semi-axis.
    #[arg(long, default_value_t = 1.0)]
    pub b: f64,
    /// Pole parameter on the boundary (radians).
    #[arg(long)]
    pub u: Option<f64>,
    /// Rotation of the pedal lines about their boundary point (radians).
    #[arg(long)]
    pub theta: Option<f64>,
    /// Curve samples for quadrature and rendering.
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
    /// Number of pole values in sweeps.
    #[arg(long, default_value_t = 256)]
    pub sweep: usize,
    /// Absolute tolerance.
    #[arg(long = "tol-abs", default_value_t = 1e-9)]
    pub tol_abs: f64,
    /// Relative tolerance.
    #[arg(long = "tol-rel", default_value_t = 1e-9)]
    pub tol_rel: f64,
    /// Output path ("-" for stdout).
    #[arg(long, default_value = "-")]
    pub out: String,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
}

pub struct RunConfig {
    pub a: f64,
    pub b: f64,
    pub u: f64,
    pub theta: Option<f64>,
    pub samples: usize,
    pub sweep: usize,
    pub tol: Tolerancef,
    pub out: String,
    pub seed: u64,
}

/// Validation failure: reported as a usage error (exit code 2).
#[derive(Debug)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "invalid configuration: {}", self.0)
    }
}

impl CommonOpts {
    pub fn validate(&self) -> Result<RunConfig, ConfigError> {
        if !(self.b > 0.0 && self.a >= self.b) {
            return Err(ConfigError(format!(
                "semi-axes must satisfy a >= b > 0 (got a={}, b={})",
                self.a, self.b
            )));
        }
        if self.samples < 64 {
            return Err(ConfigError(format!("samples must be >= 64 (got {})", self.samples)));
        }
        if self.sweep < 1 {
            return Err(ConfigError("sweep must be >= 1".into()));
        }
        if !(self.tol_abs > 0.0 && self.tol_rel > 0.0) {
            return Err(ConfigError("tolerances must be positive".into()));
        }
        for (name, v) in [("a", self.a), ("b", self.b)] {
            if !v.is_finite() {
                return Err(ConfigError(format!("{name} must be finite")));
            }
        }
        Ok(RunConfig {
            a: self.a,
            b: self.b,
            u: self.u.unwrap_or(0.0),
            theta: self.theta,
            samples: self.samples,
            sweep: self.sweep,
            tol: Tolerancef::new(self.tol_abs, self.tol_rel),
            out: self.out.clone(),
            seed: self.seed,
        })
    }
}

impl RunConfig {
    pub fn ellipse(&self) -> Ellipsef {
        Ellipsef::new(self.a, self.b)
    }
}
