use super::Rational;
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Sub};

/// Formal power series with rational coefficients, truncated after
/// `x^{max_degree}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Series from the leading coefficients; anything past `max_degree` is
    /// dropped and missing terms are zero.
    pub fn new(mut coeffs: Vec<Rational>, max_degree: usize) -> Self {
        coeffs.resize(max_degree + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn constant(c: Rational, max_degree: usize) -> Self {
        Self::new(vec![c], max_degree)
    }

    pub fn one(max_degree: usize) -> Self {
        Self::constant(Rational::one(), max_degree)
    }

    /// `1 / (1 - a x)` as `sum_k a^k x^k`.
    pub fn geometric(a: &Rational, max_degree: usize) -> Self {
        let mut coeffs = Vec::with_capacity(max_degree + 1);
        let mut term = Rational::one();
        for _ in 0..=max_degree {
            coeffs.push(term.clone());
            term *= a;
        }
        Self { coeffs }
    }

    /// `exp(a x) = sum_k a^k x^k / k!`.
    pub fn exponential(a: &Rational, max_degree: usize) -> Self {
        let mut coeffs = Vec::with_capacity(max_degree + 1);
        let mut term = Rational::one();
        for k in 0..=max_degree {
            coeffs.push(term.clone());
            term = term * a / Rational::from_integer((k as u64 + 1).into());
        }
        Self { coeffs }
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.max_degree());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let deg = self.max_degree().min(rhs.max_degree());
        PowerSeries {
            coeffs: (0..=deg).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let deg = self.max_degree().min(rhs.max_degree());
        PowerSeries {
            coeffs: (0..=deg).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let deg = self.max_degree().min(rhs.max_degree());
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(deg + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(deg + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }
}
