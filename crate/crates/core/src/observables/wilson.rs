use super::{gaussian_weights, MatrixSize};
use crate::exact::{to_f64, PowerSeries, Rational};
use num_bigint::BigInt;
use num_complex::Complex64;

/// `I(t, N) = exp(-t^2 / 2N) * sum_{q<N} c_q (-t^2)^q` with exact `c_q`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianPolynomial {
    size: MatrixSize,
    coeffs: Vec<Rational>,
    coeffs_f64: Vec<f64>,
}

impl GaussianPolynomial {
    pub fn matrix_size(&self) -> MatrixSize {
        self.size
    }

    /// `c_q` for `q = 0 .. N-1`.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The rate `1 / (2N)` of the Gaussian prefactor `exp(-rate * t^2)`.
    pub fn gaussian_rate(&self) -> Rational {
        Rational::new(1.into(), BigInt::from(2 * self.size.get() as u64))
    }

    /// Exact-coefficient Horner evaluation while its worst-case rounding
    /// error stays below `1e-14`; past that the sum cancels badly and the
    /// Laguerre recurrence takes over.
    pub fn eval(&self, t: Complex64) -> Complex64 {
        let damping = (-(t * t).re / (2.0 * self.size.as_f64())).exp();
        if damping * self.polynomial_bound(t.norm()) * f64::EPSILON <= 1e-14 {
            self.eval_polynomial(t)
        } else {
            self.eval_laguerre(t)
        }
    }

    pub fn eval_real(&self, t: f64) -> f64 {
        self.eval(Complex64::new(t, 0.0)).re
    }

    /// Horner evaluation of the polynomial times the Gaussian.
    pub fn eval_polynomial(&self, t: Complex64) -> Complex64 {
        let u = -t * t;
        let poly = self
            .coeffs_f64
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * u + c);
        (u / self.size.as_f64() / 2.0).exp() * poly
    }

    /// The same function as `e^{-x/2} L^{(1)}_{N-1}(x) / N`, `x = t^2 / N`,
    /// by the Laguerre three-term recurrence, rescaled to avoid overflow.
    pub fn eval_laguerre(&self, t: Complex64) -> Complex64 {
        const BIG: f64 = 1e200;
        let nf = self.size.as_f64();
        let x = t * t / nf;
        let (mut prev, mut cur) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
        let mut log_scale = 0.0;
        for k in 0..self.size.get() as usize - 1 {
            // (k+1) L_{k+1} = (2k + 2 - x) L_k - (k + 1) L_{k-1}, alpha = 1
            let kf = k as f64;
            let next = ((2.0 * kf + 2.0 - x) * cur - (kf + 1.0) * prev) / (kf + 1.0);
            prev = cur;
            cur = next;
            if cur.norm() > BIG {
                prev /= BIG;
                cur /= BIG;
                log_scale += BIG.ln();
            }
        }
        (-x / 2.0 + log_scale).exp() * cur / nf
    }

    /// Upper bound on `|sum c_q (-t^2)^q|` over `[0, t_max]`.
    pub fn polynomial_bound(&self, t_max: f64) -> f64 {
        let s = t_max * t_max;
        self.coeffs_f64.iter().rev().fold(0.0, |acc, &c| acc * s + c)
    }

    /// Smallest `T` on a 1/8 grid with `exp(-T^2/2N) * polynomial_bound(T) < eps`.
    pub fn truncation(&self, eps: f64) -> f64 {
        let two_n = 2.0 * self.size.as_f64();
        let mut t = 0.125;
        while (-t * t / two_n).exp() * self.polynomial_bound(t) >= eps {
            t += 0.125;
        }
        t
    }

    /// Exact Taylor coefficients of `I(t, N)` in the variable `u = -t^2`,
    /// i.e. `a_l` with `I = sum_l a_l (-t^2)^l`, for `l = 0 ..= l_max`.
    pub fn taylor_coefficients(&self, l_max: usize) -> Vec<Rational> {
        let gaussian = PowerSeries::exponential(&self.gaussian_rate(), l_max);
        let poly = PowerSeries::new(self.coeffs.clone(), l_max);
        (&gaussian * &poly).coeffs().to_vec()
    }
}

/// Exact Wilson loop expectation at matrix size `n`.
pub fn wilson_loop(n: MatrixSize) -> GaussianPolynomial {
    let coeffs = gaussian_weights(n);
    let coeffs_f64 = coeffs.iter().map(to_f64).collect();
    GaussianPolynomial {
        size: n,
        coeffs,
        coeffs_f64,
    }
}

pub fn wilson_eval(w: &GaussianPolynomial, t: Complex64) -> Complex64 {
    w.eval(t)
}

/// Partial sum of the infinite-N limit `sum_q (-t^2)^q / ((q+1)! q!)`.
pub fn wilson_limit_partial(t: Complex64, q_max: usize) -> Complex64 {
    let u = -t * t;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for q in 1..=q_max {
        term = term * u / ((q * (q + 1)) as f64);
        sum += term;
    }
    sum
}

/// `exp(-Re(t^2) / 2N) * exp(2|t|)`, an upper bound on `|I(t, N)|`.
pub fn wilson_bound(n: MatrixSize, t: Complex64) -> f64 {
    (-(t * t).re / (2.0 * n.as_f64())).exp() * (2.0 * t.norm()).exp()
}
