use super::{gaussian_weights, MatrixSize};
use crate::exact::{enumerate_partition_terms, factorial, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `<Tr H^{2l} / N>` exactly:
/// `sum_{q <= min(l, N-1)} c_q (2l)! / (2^{l-q} (l-q)!) N^{-(l-q)}`
/// with `c_q = binom(N, q+1) / (N^{q+1} q!)`.
pub fn moment_exact(n: MatrixSize, l: usize) -> Rational {
    let weights = gaussian_weights(n);
    moment_from_weights(&weights, n, l)
}

fn moment_from_weights(weights: &[Rational], n: MatrixSize, l: usize) -> Rational {
    let big_n = BigInt::from(n.get());
    let two_l_fact = factorial(2 * l as u64);
    let mut sum = Rational::zero();
    for (q, c) in weights.iter().enumerate().take(l + 1) {
        let rest = (l - q) as u32;
        let denom = (BigInt::one() << rest) * factorial(rest as u64) * big_n.pow(rest);
        sum += c * Rational::new(two_l_fact.clone(), denom);
    }
    sum
}

/// Coefficients of `N^{-2g}` in `<Tr H^{2l} / N>` for
/// `g = 0 ..= min(g_max, l / 2)`:
/// `(2l)! / l! * 4^{-g} * sum over partition terms of prod 1 / (k_q! (2q+1)^{k_q})`.
pub fn moment_genus_expansion(l: usize, g_max: usize) -> Vec<Rational> {
    let prefactor = Rational::new(factorial(2 * l as u64), factorial(l as u64));
    (0..=g_max.min(l / 2))
        .map(|g| {
            let sum = enumerate_partition_terms(l as u64, g as u64)
                .iter()
                .fold(Rational::zero(), |acc, t| acc + t.weight());
            &prefactor * sum / Rational::from_integer(BigInt::one() << (2 * g))
        })
        .collect()
}

/// Even moments `m_{2l}` for `l = 0 ..= l_max` at a fixed matrix size.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentTable {
    size: MatrixSize,
    values: Vec<Rational>,
}

impl MomentTable {
    pub fn new(n: MatrixSize, l_max: usize) -> Self {
        let weights = gaussian_weights(n);
        let values = (0..=l_max).map(|l| moment_from_weights(&weights, n, l)).collect();
        Self { size: n, values }
    }

    pub fn matrix_size(&self) -> MatrixSize {
        self.size
    }

    /// `m_{2l}`
    pub fn get(&self, l: usize) -> Option<&Rational> {
        self.values.get(l)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{catalan, double_factorial, rational};
    use num_traits::Signed;

    fn size(n: u32) -> MatrixSize {
        MatrixSize::new(n).unwrap()
    }

    #[test]
    fn scalar_case_is_double_factorial() {
        for l in 0..=10 {
            assert_eq!(
                moment_exact(size(1), l),
                Rational::from_integer(double_factorial(2 * l as i64 - 1))
            );
        }
        assert_eq!(moment_exact(size(1), 3), rational(15, 1));
    }

    #[test]
    fn fourth_moment_n2() {
        assert_eq!(moment_exact(size(2), 2), rational(9, 4));
    }

    #[test]
    fn zeroth_moment_is_one() {
        for n in 1..=10 {
            assert!(moment_exact(size(n), 0).is_one());
        }
    }

    #[test]
    fn approaches_catalan() {
        let five = Rational::from_integer(catalan(3));
        let mut prev_gap: Option<Rational> = None;
        for n in [10, 100, 1000] {
            let gap = (moment_exact(size(n), 3) - &five).abs();
            if let Some(p) = &prev_gap {
                assert!(&gap < p);
            }
            prev_gap = Some(gap);
        }
        assert!(prev_gap.unwrap() < rational(1, 10_000));
    }

    #[test]
    fn genus_expansion_small_cases() {
        assert_eq!(moment_genus_expansion(1, 10), vec![rational(1, 1)]);
        assert_eq!(moment_genus_expansion(2, 10), vec![rational(2, 1), rational(1, 1)]);
        assert_eq!(moment_genus_expansion(3, 10), vec![rational(5, 1), rational(10, 1)]);
        assert_eq!(moment_genus_expansion(4, 0), vec![rational(14, 1)]);
    }

    #[test]
    fn genus_expansion_reassembles_moment() {
        for l in 1..=8 {
            let coeffs = moment_genus_expansion(l, l);
            for n in 1..=8u32 {
                let inv_n2 = rational(1, (n * n) as i64);
                let mut power = Rational::one();
                let mut sum = Rational::zero();
                for c in &coeffs {
                    assert!(!c.is_negative());
                    sum += c * &power;
                    power *= &inv_n2;
                }
                assert_eq!(sum, moment_exact(size(n), l), "l={l} N={n}");
            }
        }
    }

    #[test]
    fn table_agrees_with_single_moments() {
        let t = MomentTable::new(size(5), 6);
        for l in 0..=6 {
            assert_eq!(t.get(l).unwrap(), &moment_exact(size(5), l));
            assert!(t.get(l).unwrap().is_positive());
        }
        assert!(t.get(7).is_none());
    }
}
