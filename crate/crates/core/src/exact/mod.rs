//! Exact arithmetic and shared numerical utilities.
//!
//! Everything that feeds an exact identity lives here as arbitrary-precision
//! integers or reduced rationals. The float helpers (Hermite recurrence,
//! quadrature) are the only lossy pieces and are kept separate.

mod hermite;
mod partitions;
mod quadrature;
mod series;

pub use hermite::hermite_eval;
pub use partitions::{enumerate_partition_terms, PartitionTerm};
pub use quadrature::{
    integrate_complex, integrate_real, integrate_real_with_budget, GaussHermiteRule, DEFAULT_PANEL_BUDGET,
};
pub use series::PowerSeries;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Reduced fraction of arbitrary-precision integers. Always in lowest terms
/// with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int_rational(value: impl Into<BigInt>) -> Rational {
    Rational::from_integer(value.into())
}

/// Nearest `f64` to an exact rational.
pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or_else(|| {
        // Only reached for magnitudes outside the f64 range.
        if value.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `n!!` with the conventions `(-1)!! = 0!! = 1`.
///
/// # Panics
/// If `n < -1`.
pub fn double_factorial(n: i64) -> BigInt {
    assert!(n >= -1, "double factorial undefined for {n}");
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= BigInt::from(k);
        k -= 2;
    }
    acc
}

/// Catalan number `binom(2l, l) / (l + 1)`.
pub fn catalan(l: u64) -> BigInt {
    binomial(2 * l, l as i64) / BigInt::from(l + 1)
}

/// `base^exp` for a non-negative integer exponent.
pub fn pow_rational(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}
