use super::{wilson_loop, MatrixSize};
use crate::error::{Error, Result};
use crate::exact::{integrate_complex, GaussHermiteRule};
use num_complex::Complex64;

/// Nodes per axis; at `N = 1, z = 1` the product rule is within 2e-10 of the
/// Laplace route here and doubling the count moves it by less than that.
pub const DEFAULT_HERMITE_NODES: usize = 240;

/// `omega_N(z) = <Tr (z - iH)^{-1}> / N` from the two-variable Gaussian
/// integral
///
/// ```text
/// int [dA][dD] e^{-N A^2/2 - N D^2/2} [ (z-D)^N / (z-iA)^{N+1}
///                                     + (N+1)/N (z-D)^{N-1} / (z-iA)^{N+2} ]
/// ```
///
/// evaluated with a Gauss-Hermite product rule of `nodes` points per axis,
/// matched to the weight `e^{-N x^2 / 2}`. Each term factorizes into an `A`
/// sum times a `D` sum, so the product rule is applied term by term.
pub fn resolvent_quadrature(n: MatrixSize, z: Complex64, nodes: usize) -> Result<Complex64> {
    if !(z.re >= 1.0) {
        return Err(Error::ResolventDomain(z.re));
    }
    if nodes == 0 {
        return Err(Error::InvalidArgument("quadrature needs at least one node".into()));
    }
    let big_n = n.get();
    let rule = GaussHermiteRule::new(nodes).scaled_to_precision(n.as_f64());
    let i = Complex64::new(0.0, 1.0);

    let mut d_top = Complex64::new(0.0, 0.0); // E[(z - D)^N]
    let mut d_low = Complex64::new(0.0, 0.0); // E[(z - D)^{N-1}]
    let mut a_first = Complex64::new(0.0, 0.0); // E[(z - iA)^{-(N+1)}]
    let mut a_second = Complex64::new(0.0, 0.0); // E[(z - iA)^{-(N+2)}]
    for &(x, w) in &rule {
        let zd = z - x;
        let low = zd.powu(big_n - 1);
        d_low += low * w;
        d_top += low * zd * w;

        let inv = (z - i * x).inv();
        let first = inv.powu(big_n + 1);
        a_first += first * w;
        a_second += first * inv * w;
    }
    let ratio = (big_n as f64 + 1.0) / big_n as f64;
    Ok(d_top * a_first + d_low * a_second * ratio)
}

/// `omega_N(z)` as the Laplace transform `int_0^inf e^{-zt} I(t, N) dt`,
/// truncated where the Gaussian tail of `I` drops below `1e-12`.
pub fn resolvent_laplace(n: MatrixSize, z: Complex64) -> Result<Complex64> {
    if !(z.re > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "Laplace transform needs Re z > 0, got {}",
            z.re
        )));
    }
    let w = wilson_loop(n);
    let t_max = w.truncation(1e-12);
    integrate_complex(|t| (-z * t).exp() * w.eval_real(t), 0.0, t_max, 1e-12)
}
