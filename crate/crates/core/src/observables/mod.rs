//! Closed-form finite-N observables and their quadrature cross-checks.

mod density;
mod moments;
mod resolvent;
mod wilson;

pub use density::{
    density, density_eval, density_fourier_check, density_hermite_functions, wigner_density, DensityExpansion,
    EXPANSION_MAX_N,
};
pub use moments::{moment_exact, moment_genus_expansion, MomentTable};
pub use resolvent::{resolvent_laplace, resolvent_quadrature, DEFAULT_HERMITE_NODES};
pub use wilson::{wilson_bound, wilson_eval, wilson_limit_partial, wilson_loop, GaussianPolynomial};

use crate::error::{Error, Result};
use crate::exact::Rational;
use num_bigint::BigInt;
use std::fmt;
use std::num::NonZeroU32;

/// Side length `N` of the Hermitian matrix; never zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixSize(NonZeroU32);

impl MatrixSize {
    pub fn new(n: u32) -> Result<Self> {
        NonZeroU32::new(n).map(Self).ok_or(Error::InvalidMatrixSize)
    }

    pub fn get(self) -> u32 {
        self.0.get()
    }

    pub fn as_f64(self) -> f64 {
        self.0.get() as f64
    }
}

impl TryFrom<u32> for MatrixSize {
    type Error = Error;
    fn try_from(n: u32) -> Result<Self> {
        Self::new(n)
    }
}

impl fmt::Display for MatrixSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `binom(N, q+1) / (N^{q+1} q!)` for `q = 0 .. N-1`: the weights of the
/// Gaussian-times-polynomial form shared by the Wilson loop and the density.
pub(crate) fn gaussian_weights(n: MatrixSize) -> Vec<Rational> {
    let n = n.get() as u64;
    let big_n = BigInt::from(n);
    let mut binom = big_n.clone(); // binom(N, 1)
    let mut denom = big_n.clone(); // N^1 * 0!
    let mut out = Vec::with_capacity(n as usize);
    for q in 0..n {
        out.push(Rational::new(binom.clone(), denom.clone()));
        // advance to q + 1
        binom = binom * BigInt::from(n - q - 1) / BigInt::from(q + 2);
        denom = denom * &big_n * BigInt::from(q + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{binomial, factorial};
    use num_traits::{One, Signed};

    #[test]
    fn zero_size_rejected() {
        assert_eq!(MatrixSize::new(0), Err(Error::InvalidMatrixSize));
        assert_eq!(MatrixSize::new(3).unwrap().get(), 3);
    }

    #[test]
    fn weights_match_direct_formula() {
        for n in 1..=64u32 {
            let w = gaussian_weights(MatrixSize::new(n).unwrap());
            assert_eq!(w.len(), n as usize);
            assert!(w[0].is_one());
            for (q, c) in w.iter().enumerate() {
                let direct = Rational::new(
                    binomial(n as u64, q as i64 + 1),
                    BigInt::from(n).pow(q as u32 + 1) * factorial(q as u64),
                );
                assert_eq!(*c, direct);
                assert!(c.is_positive());
            }
        }
    }
}
