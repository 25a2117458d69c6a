use crate::error::{Error, Result};
use num_complex::Complex64;
use std::ops::{Add, Mul, Sub};

/// Maximum number of Simpson panels a single integration may visit.
pub const DEFAULT_PANEL_BUDGET: usize = 1 << 20;

const INITIAL_PANELS: usize = 8;

trait Integrand: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {
    fn zero() -> Self;
    fn magnitude(self) -> f64;
}

impl Integrand for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(self) -> f64 {
        self.abs()
    }
}

impl Integrand for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn magnitude(self) -> f64 {
        self.norm()
    }
}

struct Panel<T> {
    a: f64,
    b: f64,
    fa: T,
    fm: T,
    fb: T,
    whole: T,
    tol: f64,
}

fn simpson<T: Integrand>(a: f64, b: f64, fa: T, fm: T, fb: T) -> T {
    (fa + fm * 4.0 + fb) * ((b - a) / 6.0)
}

fn adaptive_simpson<T, F>(f: F, a: f64, b: f64, tol: f64, budget: usize) -> Result<T>
where
    T: Integrand,
    F: Fn(f64) -> T,
{
    if !(a < b) || !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "integration needs a < b and tol > 0 (a={a}, b={b}, tol={tol})"
        )));
    }
    let width = (b - a) / INITIAL_PANELS as f64;
    let mut stack = Vec::with_capacity(64);
    for i in (0..INITIAL_PANELS).rev() {
        let lo = a + width * i as f64;
        let hi = if i + 1 == INITIAL_PANELS { b } else { lo + width };
        let (fa, fm, fb) = (f(lo), f(0.5 * (lo + hi)), f(hi));
        stack.push(Panel {
            a: lo,
            b: hi,
            fa,
            fm,
            fb,
            whole: simpson(lo, hi, fa, fm, fb),
            tol: tol / INITIAL_PANELS as f64,
        });
    }

    let mut total = T::zero();
    let mut visited = 0usize;
    while let Some(p) = stack.pop() {
        visited += 1;
        if visited > budget {
            return Err(Error::QuadratureDiverged { a, b, panels: budget });
        }
        let m = 0.5 * (p.a + p.b);
        let (lm, rm) = (0.5 * (p.a + m), 0.5 * (m + p.b));
        let (flm, frm) = (f(lm), f(rm));
        let left = simpson(p.a, m, p.fa, flm, p.fm);
        let right = simpson(m, p.b, p.fm, frm, p.fb);
        let delta = left + right - p.whole;
        // Rounding floor: below this the estimate is noise.
        let floor = 32.0 * f64::EPSILON * (left + right).magnitude();
        if delta.magnitude() <= 15.0 * p.tol.max(floor) {
            total = total + left + right + delta * (1.0 / 15.0);
        } else {
            let tol = 0.5 * p.tol;
            stack.push(Panel {
                a: m,
                b: p.b,
                fa: p.fm,
                fm: frm,
                fb: p.fb,
                whole: right,
                tol,
            });
            stack.push(Panel {
                a: p.a,
                b: m,
                fa: p.fa,
                fm: flm,
                fb: p.fm,
                whole: left,
                tol,
            });
        }
    }
    Ok(total)
}

/// Adaptive composite Simpson rule on `[a, b]` with absolute error target
/// `tol` and the default panel budget.
pub fn integrate_real(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    adaptive_simpson(f, a, b, tol, DEFAULT_PANEL_BUDGET)
}

pub fn integrate_real_with_budget(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, budget: usize) -> Result<f64> {
    adaptive_simpson(f, a, b, tol, budget)
}

/// Complex-valued version of [`integrate_real`]; the error target applies to
/// the modulus of the panel error estimate.
pub fn integrate_complex(f: impl Fn(f64) -> Complex64, a: f64, b: f64, tol: f64) -> Result<Complex64> {
    adaptive_simpson(f, a, b, tol, DEFAULT_PANEL_BUDGET)
}

/// Gauss-Hermite nodes and weights for the weight `e^{-x^2}` on the real line.
#[derive(Debug, Clone)]
pub struct GaussHermiteRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussHermiteRule {
    /// Roots of the degree-`n` Hermite polynomial: sign changes of the
    /// orthonormal Hermite function on a grid finer than the root spacing,
    /// refined by Newton steps kept inside their brackets.
    ///
    /// # Panics
    /// If `n` is zero or large enough for the Gaussian factor to underflow
    /// (above about 700).
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Hermite rule needs at least one node");
        let nf = n as f64;
        let edge = (2.0 * nf + 1.0).sqrt();
        let h = 1.0 / (8.0 * edge);
        let mut positive = Vec::with_capacity(n / 2);
        let mut weights_pos = Vec::with_capacity(n / 2);
        // skip the origin so odd degrees do not report their zero root twice
        let mut lo = h / 2.0;
        let mut f_lo = hermite_function(n, lo).0;
        while lo < edge + 1.0 {
            let hi = lo + h;
            let f_hi = hermite_function(n, hi).0;
            if f_lo == 0.0 || f_lo.signum() != f_hi.signum() {
                let z = refine(n, lo, hi);
                let (_, prev) = hermite_function(n, z);
                positive.push(z);
                let ratio = (-z * z / 2.0).exp() / prev;
                weights_pos.push(ratio * ratio / nf);
            }
            lo = hi;
            f_lo = f_hi;
        }
        assert_eq!(
            positive.len(),
            n / 2,
            "found {} positive Hermite roots, expected {}",
            positive.len(),
            n / 2
        );

        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for (&z, &w) in positive.iter().zip(&weights_pos).rev() {
            nodes.push(z);
            weights.push(w);
        }
        if n % 2 == 1 {
            let (_, prev) = hermite_function(n, 0.0);
            nodes.push(0.0);
            weights.push(1.0 / (nf * prev * prev));
        }
        for (&z, &w) in positive.iter().zip(&weights_pos) {
            nodes.push(-z);
            weights.push(w);
        }
        Self { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Nodes and weights rescaled to the normalized Gaussian measure
    /// `sqrt(c / 2 pi) e^{-c x^2 / 2} dx`, so the weights sum to one.
    pub fn scaled_to_precision(&self, c: f64) -> Vec<(f64, f64)> {
        let scale = (2.0 / c).sqrt();
        let norm = std::f64::consts::PI.sqrt().recip();
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| (x * scale, w * norm))
            .collect()
    }
}

// (psi_n(z), psi_{n-1}(z)) for the orthonormal Hermite functions
// psi_k = p_k e^{-z^2 / 2}, with p_k orthonormal under e^{-z^2}.
fn hermite_function(n: usize, z: f64) -> (f64, f64) {
    const PI_M4: f64 = 0.751_125_544_464_942_5; // pi^{-1/4}
    let (mut p1, mut p2) = (PI_M4 * (-z * z / 2.0).exp(), 0.0);
    for j in 0..n {
        let p3 = p2;
        p2 = p1;
        let jf = j as f64;
        p1 = z * (2.0 / (jf + 1.0)).sqrt() * p2 - (jf / (jf + 1.0)).sqrt() * p3;
    }
    (p1, p2)
}

// Root of psi_n in [lo, hi] where it changes sign.
fn refine(n: usize, mut lo: f64, mut hi: f64) -> f64 {
    let sign_lo = hermite_function(n, lo).0.signum();
    let mut z = 0.5 * (lo + hi);
    for _ in 0..100 {
        let (f, prev) = hermite_function(n, z);
        if f == 0.0 {
            return z;
        }
        if f.signum() == sign_lo {
            lo = z;
        } else {
            hi = z;
        }
        // p_n' = sqrt(2n) p_{n-1}; the Gaussian factor cancels in the ratio
        let newton = z - f / ((2.0 * n as f64).sqrt() * prev);
        let next = if newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if (next - z).abs() <= 1e-16 * z.abs().max(1.0) {
            return next;
        }
        z = next;
    }
    z
}
