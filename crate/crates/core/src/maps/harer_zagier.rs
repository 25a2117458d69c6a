use super::rosette::{pairing_total, rosette_count_formula};
use crate::exact::{PowerSeries, Rational};
use crate::observables::MatrixSize;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficients of `x^{p+1}`, `p = 1 ..= p_max`, in
/// `f(x, N) = (1/2) ((1 + x/N) / (1 - x/N))^N - 1/2 - x`,
/// expanded as an exact truncated power series.
///
/// # Panics
/// If the constant or linear coefficient fails to vanish.
pub fn harer_zagier_closed(n: MatrixSize, p_max: usize) -> Vec<Rational> {
    let degree = p_max + 1;
    let inv_n = Rational::new(BigInt::one(), BigInt::from(n.get()));
    let one_plus = PowerSeries::new(vec![Rational::one(), inv_n.clone()], degree);
    let ratio = &one_plus * &PowerSeries::geometric(&inv_n, degree);
    let half = Rational::new(1.into(), 2.into());
    let shift = PowerSeries::new(vec![half.clone(), Rational::one()], degree);
    let f = &ratio.pow(n.get()).scale(&half) - &shift;
    assert!(f.coeff(0).is_zero(), "constant term {} does not vanish", f.coeff(0));
    assert!(f.coeff(1).is_zero(), "linear term {} does not vanish", f.coeff(1));
    (2..=degree).map(|k| f.coeff(k)).collect()
}

/// The same coefficients rebuilt from rosette counts:
/// `sum_g C_g(p) N^{-2g} / (2p - 1)!!`.
pub fn harer_zagier_from_counts(n: MatrixSize, p_max: usize) -> Vec<Rational> {
    let inv_n2 = Rational::new(BigInt::one(), BigInt::from(n.get()).pow(2));
    (1..=p_max)
        .map(|p| {
            let mut power = Rational::one();
            let mut sum = Rational::zero();
            for g in 0..=p / 2 {
                sum += &power * Rational::from_integer(rosette_count_formula(p, g));
                power *= &inv_n2;
            }
            sum / Rational::from_integer(pairing_total(p))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;
    use crate::maps::rosette::rosette_census;

    fn size(n: u32) -> MatrixSize {
        MatrixSize::new(n).unwrap()
    }

    #[test]
    fn n1_all_ones() {
        assert!(harer_zagier_closed(size(1), 9).iter().all(|c| c.is_one()));
    }

    #[test]
    fn n2_second_coefficient() {
        assert_eq!(harer_zagier_closed(size(2), 2)[1], rational(3, 4));
    }

    #[test]
    fn closed_form_matches_census() {
        for n in 1..=5 {
            let closed = harer_zagier_closed(size(n), 7);
            assert_eq!(closed, harer_zagier_from_counts(size(n), 7));
            for (i, c) in closed.iter().enumerate() {
                let p = i + 1;
                let census = rosette_census(p).unwrap();
                let rebuilt = super::super::rosette::weigh_by_genus(&census.counts, size(n))
                    / Rational::from_integer(pairing_total(p));
                assert_eq!(*c, rebuilt, "N={n} p={p}");
            }
        }
    }
}
