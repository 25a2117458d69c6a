use super::{gaussian_weights, wilson_loop, MatrixSize};
use crate::error::Result;
use crate::exact::{integrate_real, to_f64, Rational};
use num_bigint::BigInt;
use std::f64::consts::PI;

/// Finite-N spectral density
/// `rho_N(x) = sqrt(N / 2pi) e^{-N x^2 / 2} sum_q d_q N^q He_{2q}(sqrt(N) x)`.
///
/// This is the Gaussian-derivative form `sum_q d_q (d/dx)^{2q}` of the
/// normalized Gaussian, rewritten with
/// `(d/dx)^{2q} e^{-N x^2/2} = N^q He_{2q}(sqrt(N) x) e^{-N x^2/2}`.
/// Largest `N` at which [`DensityExpansion::eval`] uses the expansion; its
/// error there stays below `1e-12`.
pub const EXPANSION_MAX_N: u32 = 12;

#[derive(Debug, Clone, PartialEq)]
pub struct DensityExpansion {
    size: MatrixSize,
    coeffs: Vec<Rational>,
    // d_q N^q, the factor multiplying He_{2q}
    hermite_weights: Vec<f64>,
}

impl DensityExpansion {
    pub fn matrix_size(&self) -> MatrixSize {
        self.size
    }

    /// `d_q` for `q = 0 .. N-1`.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `rho_N(lambda)`: the expansion for `N <= EXPANSION_MAX_N`, otherwise
    /// [`density_hermite_functions`]. The expansion alternates in sign and
    /// loses about one digit per unit of `N / 2` beyond that.
    pub fn eval(&self, lambda: f64) -> f64 {
        if self.size.get() <= EXPANSION_MAX_N {
            self.eval_expansion(lambda)
        } else {
            density_hermite_functions(self.size, lambda)
        }
    }

    /// The expansion alone, whatever its rounding error.
    pub fn eval_expansion(&self, lambda: f64) -> f64 {
        let n = self.size.as_f64();
        let x = n.sqrt() * lambda;
        // Walk the Hermite recurrence once and pick off the even orders.
        let mut sum = self.hermite_weights[0];
        let (mut prev, mut cur) = (1.0, x);
        for k in 1..2 * self.hermite_weights.len() - 1 {
            let next = x * cur - k as f64 * prev;
            prev = cur;
            cur = next;
            if (k + 1) % 2 == 0 {
                sum += self.hermite_weights[k.div_ceil(2)] * cur;
            }
        }
        (n / (2.0 * PI)).sqrt() * (-0.5 * x * x).exp() * sum
    }
}

/// `rho_N(lambda) = sqrt(1 / 2N) sum_{k<N} psi_k(y)^2` with `y = sqrt(N/2) lambda`
/// and `psi_k` the orthonormal Hermite functions, summed by their three-term
/// recurrence. Equal to the expansion; stable for every `N` (until
/// `e^{-y^2/2}` underflows far in the tail, where it returns 0).
pub fn density_hermite_functions(n: MatrixSize, lambda: f64) -> f64 {
    const PI_M4: f64 = 0.751_125_544_464_942_5; // pi^{-1/4}
    let nf = n.as_f64();
    let y = (nf / 2.0).sqrt() * lambda;
    let mut cur = PI_M4 * (-y * y / 2.0).exp();
    let mut prev = 0.0;
    let mut sum = cur * cur;
    for k in 1..n.get() as usize {
        let kf = k as f64;
        let next = (2.0 / kf).sqrt() * y * cur - ((kf - 1.0) / kf).sqrt() * prev;
        prev = cur;
        cur = next;
        sum += cur * cur;
    }
    sum / (2.0 * nf).sqrt()
}

pub fn density(n: MatrixSize) -> DensityExpansion {
    let coeffs = gaussian_weights(n);
    let big_n = BigInt::from(n.get());
    let mut n_pow = Rational::from_integer(1.into());
    let hermite_weights = coeffs
        .iter()
        .map(|d| {
            let w = to_f64(&(d * &n_pow));
            n_pow *= Rational::from_integer(big_n.clone());
            w
        })
        .collect();
    DensityExpansion {
        size: n,
        coeffs,
        hermite_weights,
    }
}

pub fn density_eval(d: &DensityExpansion, lambda: f64) -> f64 {
    d.eval(lambda)
}

/// Semicircle `sqrt(4 - x^2) / 2pi` on `[-2, 2]`.
pub fn wigner_density(lambda: f64) -> f64 {
    if lambda.abs() <= 2.0 {
        (4.0 - lambda * lambda).sqrt() / (2.0 * PI)
    } else {
        0.0
    }
}

/// `rho_N(x)` through the Fourier route `(1/2pi) int e^{-ixt} I(t, N) dt`,
/// truncated where the Gaussian tail of `I` drops below `1e-12`.
pub fn density_fourier_check(n: MatrixSize, lambda: f64) -> Result<f64> {
    let w = wilson_loop(n);
    let t_max = w.truncation(1e-12);
    // I(t, N) is real and even in t.
    let half = integrate_real(|t| (lambda * t).cos() * w.eval_real(t), 0.0, t_max, 1e-12)?;
    Ok(half / PI)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{hermite_eval, rational};
    use approx::assert_abs_diff_eq;
    use num_traits::Zero;

    fn size(n: u32) -> MatrixSize {
        MatrixSize::new(n).unwrap()
    }

    // Polynomial in x with rational coefficients, lowest degree first.
    type Poly = Vec<Rational>;

    // (d/dx)[p(x) e^{-N x^2/2}] = (p' - N x p) e^{-N x^2/2}
    fn differentiate_gaussian(p: &Poly, n: i64) -> Poly {
        let mut out = vec![Rational::zero(); p.len() + 1];
        for (k, c) in p.iter().enumerate() {
            if k > 0 {
                out[k - 1] += c * rational(k as i64, 1);
            }
            out[k + 1] -= c * rational(n, 1);
        }
        out
    }

    // N^q He_{2q}(sqrt(N) x) expanded in x; only even powers survive so the
    // coefficients are rational.
    fn scaled_hermite(q: usize, n: i64) -> Poly {
        // He_m coefficients from the recurrence, in powers of its argument y
        let mut prev: Poly = vec![rational(1, 1)];
        let mut cur: Poly = vec![rational(0, 1), rational(1, 1)];
        let m = 2 * q;
        let he = if m == 0 {
            prev.clone()
        } else {
            for k in 1..m {
                let mut next = vec![Rational::zero(); cur.len() + 1];
                for (i, c) in cur.iter().enumerate() {
                    next[i + 1] += c;
                }
                for (i, c) in prev.iter().enumerate() {
                    next[i] -= c * rational(k as i64, 1);
                }
                prev = cur;
                cur = next;
            }
            cur
        };
        // y = sqrt(N) x, y^{2j} = N^j x^{2j}; odd powers vanish for even m
        let mut out = vec![Rational::zero(); he.len()];
        for (i, c) in he.iter().enumerate() {
            if i % 2 == 1 {
                assert!(c.is_zero());
                continue;
            }
            out[i] = c * crate::exact::pow_rational(&rational(n, 1), (i / 2 + q) as u32);
        }
        out
    }

    fn trim(mut p: Poly) -> Poly {
        while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        p
    }

    #[test]
    fn gaussian_derivatives_are_scaled_hermite() {
        for n in 1..=5i64 {
            let mut p: Poly = vec![rational(1, 1)];
            for q in 0..=3usize {
                assert_eq!(trim(p.clone()), trim(scaled_hermite(q, n)), "q={q} N={n}");
                p = differentiate_gaussian(&differentiate_gaussian(&p, n), n);
            }
        }
    }

    #[test]
    fn n1_is_standard_normal() {
        let d = density(size(1));
        for &x in &[-2.0, -0.3, 0.0, 1.7] {
            let want = (-x * x / 2.0f64).exp() / (2.0 * PI).sqrt();
            assert_abs_diff_eq!(density_eval(&d, x), want, epsilon = 1e-15);
        }
        assert_abs_diff_eq!(density_eval(&d, 0.0), 0.398_942_280_401_432_7, epsilon = 1e-15);
    }

    #[test]
    fn eval_matches_direct_hermite_sum() {
        let n = 6;
        let d = density(size(n));
        let x = 0.7;
        let y = (n as f64).sqrt() * x;
        let direct: f64 = (0..n as usize)
            .map(|q| to_f64(&d.coefficients()[q]) * (n as f64).powi(q as i32) * hermite_eval(2 * q, y))
            .sum::<f64>()
            * (n as f64 / (2.0 * PI)).sqrt()
            * (-y * y / 2.0).exp();
        assert_abs_diff_eq!(d.eval(x), direct, epsilon = 1e-14);
    }

    #[test]
    fn symmetric_in_lambda() {
        for n in [1, 2, 5, 16] {
            let d = density(size(n));
            for i in 0..50 {
                let x = 0.09 * i as f64;
                assert!((d.eval(x) - d.eval(-x)).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn normalized_for_n2() {
        let d = density(size(2));
        let mass = integrate_real(|x| d.eval(x), -12.0, 12.0, 1e-11).unwrap();
        assert_abs_diff_eq!(mass, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn hermite_function_route_agrees() {
        for n in 1..=EXPANSION_MAX_N {
            let d = density(size(n));
            for i in 0..=60 {
                let x = -6.0 + 0.2 * i as f64;
                let a = d.eval_expansion(x);
                let b = density_hermite_functions(size(n), x);
                assert!((a - b).abs() <= 1e-12, "N={n} x={x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn small_n_uses_expansion() {
        for n in 1..=EXPANSION_MAX_N {
            let d = density(size(n));
            for i in 0..=60 {
                let x = -6.0 + 0.2 * i as f64;
                assert_eq!(d.eval(x), d.eval_expansion(x), "N={n} x={x}");
            }
        }
    }

    #[test]
    fn large_n_stays_accurate() {
        for n in [40, 100, 300] {
            let d = density(size(n));
            let mass = integrate_real(|x| d.eval(x), -4.0, 4.0, 1e-10).unwrap();
            assert_abs_diff_eq!(mass, 1.0, epsilon = 1e-8);
            assert!(d.eval(0.0) > 0.3 && d.eval(0.0) < 0.33);
        }
    }

    #[test]
    fn tail_is_tiny() {
        let v = density(size(3)).eval(5.0);
        assert!(v > 0.0 && v < 1e-6, "{v}");
    }

    #[test]
    fn wigner_values() {
        assert_abs_diff_eq!(wigner_density(0.0), 1.0 / PI, epsilon = 1e-15);
        assert_eq!(wigner_density(2.0), 0.0);
        assert_eq!(wigner_density(-2.0), 0.0);
        assert_eq!(wigner_density(3.0), 0.0);
        let mass = integrate_real(wigner_density, -2.0, 2.0, 1e-12).unwrap();
        assert_abs_diff_eq!(mass, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn fourier_route_at_origin() {
        let v = density_fourier_check(size(1), 0.0).unwrap();
        assert_abs_diff_eq!(v, 1.0 / (2.0 * PI).sqrt(), epsilon = 1e-8);
        let v2 = density_fourier_check(size(2), 0.0).unwrap();
        assert_abs_diff_eq!(v2, density(size(2)).eval(0.0), epsilon = 1e-8);
    }
}
