//! Univariate real polynomials with robust real-root extraction.
//!
//! Strategy: Sturm-chain sign counting isolates roots of the squarefree part
//! on a bounded interval, bisection brackets each one, Newton polishes it, and
//! multiplicities are recovered from derivative residuals. A closed-form
//! trigonometric/Cardano cubic solver is kept as an independent cross-check
//! path for the cubics that show up near double-root thresholds.

use std::fmt;

use crate::scalar::{half, lit, two, Scalar};
use crate::tolerance::Tolerance;

/// Coefficients in ascending degree order: `coeffs[k]` multiplies `x^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct RealPolynomial<S> {
    pub coeffs: Vec<S>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum PolyError {
    /// The zero polynomial has no meaningful root set.
    DegenerateInput,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DegenerateInput => write!(f, "zero polynomial"),
        }
    }
}

impl std::error::Error for PolyError {}

/// A real root together with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root<S> {
    pub value: S,
    pub multiplicity: usize,
}

impl<S: Scalar> RealPolynomial<S> {
    pub fn new(coeffs: Vec<S>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    fn trim(&mut self) {
        while let Some(c) = self.coeffs.last() {
            if *c == S::zero() {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    /// Drop leading coefficients that are negligible relative to the largest.
    fn trim_relative(&mut self, rel: S) {
        let m = self.coeffs.iter().fold(S::zero(), |m, c| m.max(c.abs()));
        while let Some(c) = self.coeffs.last() {
            if c.abs() <= m * rel {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + *c;
        }
        acc
    }

    /// Sum of |c_k x^k|: the natural residual scale at `x`.
    pub fn eval_scale(&self, x: S) -> S {
        let mut acc = S::zero();
        let mut xp = S::one();
        for c in &self.coeffs {
            acc = acc + (*c * xp).abs();
            xp = xp * x;
        }
        acc.max(S::one())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| *c * lit(k as f64))
            .collect();
        Self::new(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + *a * *b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: S) -> Self {
        Self::new(self.coeffs.iter().map(|c| *c * k).collect())
    }

    /// Euclidean division: returns (quotient, remainder).
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dn = d.coeffs.len();
        if rem.len() < dn {
            return (Self::zero(), Self::new(rem));
        }
        let mut quo = vec![S::zero(); rem.len() - dn + 1];
        let lead = *d.coeffs.last().unwrap();
        for k in (0..quo.len()).rev() {
            let q = rem[k + dn - 1] / lead;
            quo[k] = q;
            for j in 0..dn {
                rem[k + j] = rem[k + j] - q * d.coeffs[j];
            }
        }
        rem.truncate(dn - 1);
        (Self::new(quo), Self::new(rem))
    }

    /// Cauchy bound: all real roots lie in [-r, r].
    pub fn root_bound(&self) -> S {
        let lead = self.coeffs.last().copied().unwrap_or(S::one()).abs();
        let m = self.coeffs[..self.coeffs.len().saturating_sub(1)]
            .iter()
            .fold(S::zero(), |m, c| m.max(c.abs()));
        S::one() + m / lead
    }

    /// All real roots (with multiplicity) in `interval` (defaults to the
    /// Cauchy bound), ascending. Each root is polished so that
    /// `|p(r)| <= tol.abs_eps * scale(p, r)`.
    pub fn real_roots(
        &self,
        interval: Option<(S, S)>,
        tol: &Tolerance<S>,
    ) -> Result<Vec<Root<S>>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::DegenerateInput);
        }
        let mut p = self.clone();
        p.trim_relative(lit(1e-13));
        if p.degree() == 0 {
            return Ok(vec![]);
        }

        // squarefree part via the Sturm/Euclid chain
        let chain = sturm_chain(&p);
        let squarefree = match chain.last() {
            Some(g) if g.degree() >= 1 => {
                let (q, _r) = p.div_rem(g);
                q
            }
            _ => p.clone(),
        };
        let chain_sf = sturm_chain(&squarefree);

        let bound = squarefree.root_bound();
        let (mut lo, mut hi) = interval.unwrap_or((-bound, bound));
        lo = lo.max(-bound - S::one());
        hi = hi.min(bound + S::one());
        if lo >= hi {
            return Ok(vec![]);
        }

        let mut intervals = vec![(lo, hi)];
        let mut isolated: Vec<(S, S)> = vec![];
        let mut guard = 0usize;
        while let Some((a, b)) = intervals.pop() {
            guard += 1;
            if guard > 4096 {
                // pathological clustering: accept the tiny interval as-is
                isolated.push((a, b));
                continue;
            }
            let n = sturm_count(&chain_sf, a, b);
            if n == 0 {
                continue;
            }
            if n == 1 || (b - a) <= tol.abs_eps {
                isolated.push((a, b));
                if n > 1 {
                    // unresolvably close roots of the squarefree part
                    for _ in 1..n {
                        isolated.push((a, b));
                    }
                }
                continue;
            }
            let mid = (a + b) * half::<S>();
            intervals.push((a, mid));
            intervals.push((mid, b));
        }
        isolated.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());

        let mut out: Vec<Root<S>> = vec![];
        for (a, b) in isolated {
            let r = refine_root(&squarefree, a, b, tol);
            let m = multiplicity_at(&p, r, tol);
            // dedupe refinements that converged to the same point
            if let Some(last) = out.last() {
                if tol.is_zero(last.value - r, r.abs().max(S::one())) {
                    continue;
                }
            }
            out.push(Root { value: r, multiplicity: m });
        }
        Ok(out)
    }

    /// Flat list of roots, one entry per multiplicity, ascending.
    pub fn real_roots_flat(
        &self,
        interval: Option<(S, S)>,
        tol: &Tolerance<S>,
    ) -> Result<Vec<S>, PolyError> {
        let roots = self.real_roots(interval, tol)?;
        let mut flat = vec![];
        for r in roots {
            for _ in 0..r.multiplicity {
                flat.push(r.value);
            }
        }
        Ok(flat)
    }
}

fn sturm_chain<S: Scalar>(p: &RealPolynomial<S>) -> Vec<RealPolynomial<S>> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() || chain[n - 1].degree() == 0 {
            if chain[n - 1].is_zero() {
                chain.pop();
            }
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        let mut next = r.scale(-S::one());
        next.trim_relative(lit(1e-12));
        if next.is_zero() {
            break;
        }
        // rescale to unit leading magnitude: Sturm only needs signs
        let lead = next.coeffs.last().unwrap().abs();
        chain.push(next.scale(S::one() / lead));
    }
    chain
}

fn sign_changes<S: Scalar>(chain: &[RealPolynomial<S>], x: S) -> usize {
    let mut changes = 0;
    let mut prev = S::zero();
    for p in chain {
        let v = p.eval(x);
        if v == S::zero() {
            continue;
        }
        if prev != S::zero() && (prev > S::zero()) != (v > S::zero()) {
            changes += 1;
        }
        prev = v;
    }
    changes
}

/// Number of distinct real roots in (a, b] by Sturm's theorem.
fn sturm_count<S: Scalar>(chain: &[RealPolynomial<S>], a: S, b: S) -> usize {
    sign_changes(chain, a).saturating_sub(sign_changes(chain, b))
}

/// Bisection to a small bracket, then guarded Newton.
fn refine_root<S: Scalar>(p: &RealPolynomial<S>, mut a: S, mut b: S, tol: &Tolerance<S>) -> S {
    let dp = p.derivative();
    let mut fa = p.eval(a);
    if fa == S::zero() {
        return a;
    }
    if p.eval(b) == S::zero() {
        return b;
    }
    for _ in 0..128 {
        let mid = (a + b) * half::<S>();
        if mid == a || mid == b {
            break;
        }
        let fm = p.eval(mid);
        if fm == S::zero() {
            return mid;
        }
        if (fa > S::zero()) != (fm > S::zero()) {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
        if (b - a).abs() <= tol.abs_eps * (a.abs().max(b.abs()).max(S::one())) {
            break;
        }
    }
    let mut x = (a + b) * half::<S>();
    for _ in 0..32 {
        let f = p.eval(x);
        let d = dp.eval(x);
        if d == S::zero() {
            break;
        }
        let step = f / d;
        let nx = x - step;
        if nx < a || nx > b {
            break;
        }
        x = nx;
        if step.abs() <= x.abs().max(S::one()) * S::epsilon() {
            break;
        }
    }
    x
}

/// Multiplicity from derivative residuals: smallest k with a non-vanishing
/// k-th derivative at `r`.
fn multiplicity_at<S: Scalar>(p: &RealPolynomial<S>, r: S, tol: &Tolerance<S>) -> usize {
    let mut q = p.clone();
    let mut m = 0usize;
    for _ in 0..=p.degree() {
        let scale = q.eval_scale(r);
        // derivative residual threshold: looser than the root residual since
        // polishing targets p itself, not its derivatives
        if q.eval(r).abs() > scale * tol.abs_eps.sqrt() {
            break;
        }
        m += 1;
        q = q.derivative();
        if q.is_zero() {
            break;
        }
    }
    m.max(1)
}

/// Real roots of `c3 x^3 + c2 x^2 + c1 x + c0` by the closed-form
/// trigonometric (three-real-root) / Cardano (one-real-root) method.
/// Independent of the Sturm path; used as a cross-check.
pub fn cubic_roots_closed_form<S: Scalar>(c0: S, c1: S, c2: S, c3: S) -> Vec<S> {
    assert!(c3 != S::zero(), "not a cubic");
    let a = c2 / c3;
    let b = c1 / c3;
    let c = c0 / c3;
    // depressed cubic t^3 + p t + q with x = t - a/3
    let third = S::one() / lit::<S>(3.0);
    let p = b - a * a * third;
    let q = two::<S>() * a * a * a / lit(27.0) - a * b * third + c;
    let shift = -a * third;
    let disc = -(lit::<S>(4.0) * p * p * p + lit::<S>(27.0) * q * q);
    let mut roots = if disc > S::zero() {
        // three distinct real roots: trigonometric form
        let m = two::<S>() * (-p * third).sqrt();
        let arg = (lit::<S>(3.0) * q / (p * m)).max(-S::one()).min(S::one());
        let theta = arg.acos() * third;
        let tau = two::<S>() * S::PI() * third;
        vec![
            m * theta.cos() + shift,
            m * (theta - tau).cos() + shift,
            m * (theta + tau).cos() + shift,
        ]
    } else if p == S::zero() && q == S::zero() {
        vec![shift, shift, shift]
    } else {
        // one real root (or a double root on the boundary): Cardano
        let d = (q * q * lit::<S>(0.25) + p * p * p / lit(27.0)).max(S::zero()).sqrt();
        let u = cbrt(-q * half::<S>() + d);
        let v = cbrt(-q * half::<S>() - d);
        let mut rs = vec![u + v + shift];
        if disc == S::zero() && (u + v) != S::zero() {
            // double root at -t/2
            rs.push(-(u + v) * half::<S>() + shift);
            rs.push(-(u + v) * half::<S>() + shift);
        }
        rs
    };
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    roots
}

fn cbrt<S: Scalar>(x: S) -> S {
    let third = S::one() / lit::<S>(3.0);
    if x < S::zero() {
        -(-x).powf(third)
    } else {
        x.powf(third)
    }
}
