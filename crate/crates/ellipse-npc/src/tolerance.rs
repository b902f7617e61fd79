//! Comparison policy: a single explicit tolerance threaded through every check.

use crate::scalar::{lit, Scalar};

/// Mixed absolute/relative comparison tolerance.
///
/// Two values compare equal when `|x - y| <= abs_eps + rel_eps * max(|x|, |y|)`.
/// No operation in this crate consults a hidden global epsilon; callers pass a
/// `Tolerance` (or take `Tolerance::default()`) so invariance tests can tighten
/// or loosen strictness explicitly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance<S> {
    pub abs_eps: S,
    pub rel_eps: S,
}

impl<S: Scalar> Default for Tolerance<S> {
    fn default() -> Self {
        Self {
            abs_eps: lit(1e-9),
            rel_eps: lit(1e-9),
        }
    }
}

impl<S: Scalar> Tolerance<S> {
    pub fn new(abs_eps: S, rel_eps: S) -> Self {
        assert!(abs_eps > S::zero() && rel_eps > S::zero(), "tolerances must be positive");
        Self { abs_eps, rel_eps }
    }

    /// Margin allowed when comparing against a quantity of magnitude `scale`.
    #[inline]
    pub fn margin(&self, scale: S) -> S {
        self.abs_eps + self.rel_eps * scale.abs()
    }

    #[inline]
    pub fn close(&self, x: S, y: S) -> bool {
        (x - y).abs() <= self.margin(x.abs().max(y.abs()))
    }

    /// Is `x` negligible at the given scale?
    #[inline]
    pub fn is_zero(&self, x: S, scale: S) -> bool {
        x.abs() <= self.margin(scale)
    }
}
