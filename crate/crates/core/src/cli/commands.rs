use super::record::{Cell, OutputRecord};
use crate::error::{Error, Result};
use crate::exact::{catalan, double_factorial, to_f64};
use crate::maps::{
    harer_zagier_closed, harer_zagier_from_counts, rosette_census, rosette_count_formula, PAIRING_BUDGET,
};
use crate::montecarlo::{estimate_wilson_grid, zscore, MIN_SAMPLES};
use crate::observables::{density, density_eval, moment_exact, wigner_density, wilson_eval, wilson_loop, MatrixSize};
use num_bigint::BigInt;
use num_complex::Complex64;

/// Seed used by `sample` when none is given.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// `steps + 1` evenly spaced points from `lo` to `hi`.
fn grid(lo: f64, hi: f64, steps: usize) -> Result<Vec<f64>> {
    if steps == 0 {
        return Err(Error::InvalidArgument("steps must be at least 1".into()));
    }
    if !(lo <= hi) {
        return Err(Error::InvalidArgument(format!("empty range [{lo}, {hi}]")));
    }
    Ok((0..=steps).map(|k| lo + (hi - lo) * k as f64 / steps as f64).collect())
}

pub fn cmd_wilson(n: MatrixSize, t_min: f64, t_max: f64, steps: usize) -> Result<OutputRecord> {
    let w = wilson_loop(n);
    let mut r = OutputRecord::new("wilson", &["t", "I"])
        .param("N", n)
        .param("t_min", t_min)
        .param("t_max", t_max)
        .param("steps", steps);
    for t in grid(t_min, t_max, steps)? {
        r.push(vec![
            Cell::Float(t),
            Cell::Float(wilson_eval(&w, Complex64::new(t, 0.0)).re),
        ]);
    }
    let coeffs: Vec<String> = w
        .coefficients()
        .iter()
        .map(|c| Cell::rational(c.clone()).to_string())
        .collect();
    r.summarize("coefficients", coeffs.join(" "));
    Ok(r)
}

pub fn cmd_density(n: MatrixSize, lambda_min: f64, lambda_max: f64, steps: usize) -> Result<OutputRecord> {
    let d = density(n);
    let mut r = OutputRecord::new("density", &["lambda", "rho_N", "rho_inf"])
        .param("N", n)
        .param("lambda_min", lambda_min)
        .param("lambda_max", lambda_max)
        .param("steps", steps);
    for x in grid(lambda_min, lambda_max, steps)? {
        r.push(vec![
            Cell::Float(x),
            Cell::Float(density_eval(&d, x)),
            Cell::Float(wigner_density(x)),
        ]);
    }
    Ok(r)
}

pub fn cmd_moments(n: MatrixSize, l_max: usize) -> Result<OutputRecord> {
    let mut r = OutputRecord::new("moments", &["l", "m_2l", "m_2l_float", "catalan"])
        .param("N", n)
        .param("l_max", l_max);
    for l in 0..=l_max {
        let m = moment_exact(n, l);
        let f = to_f64(&m);
        r.push(vec![
            Cell::int(l as u64),
            Cell::rational(m),
            Cell::Float(f),
            Cell::Int(catalan(l as u64)),
        ]);
    }
    Ok(r)
}

/// `C_g(l)` by exhaustive census when `l` is within the pairing budget,
/// otherwise by the closed formula. `genus` restricts the table to one row.
pub fn cmd_rosettes(l: usize, genus: Option<usize>) -> Result<OutputRecord> {
    if l == 0 {
        return Err(Error::InvalidArgument("l must be at least 1".into()));
    }
    let counts: Vec<BigInt> = if l <= PAIRING_BUDGET {
        rosette_census(l)?.counts.iter().map(|&c| BigInt::from(c)).collect()
    } else {
        (0..=l / 2).map(|g| rosette_count_formula(l, g)).collect()
    };
    let mut r = OutputRecord::new("rosettes", &["g", "C_g"]).param("l", l);
    if let Some(g) = genus {
        r = r.param("g", g);
    }
    for (g, c) in counts.iter().enumerate() {
        if genus.is_none_or(|only| only == g) {
            r.push(vec![Cell::int(g as u64), Cell::Int(c.clone())]);
        }
    }
    let total: BigInt = counts.iter().sum();
    r.summarize("route", if l <= PAIRING_BUDGET { "census" } else { "formula" });
    r.summarize("total", &total);
    r.summarize("double_factorial", double_factorial(2 * l as i64 - 1));
    Ok(r)
}

pub fn cmd_harer_zagier(n: MatrixSize, p_max: usize) -> Result<OutputRecord> {
    if p_max == 0 {
        return Err(Error::InvalidArgument("p_max must be at least 1".into()));
    }
    let closed = harer_zagier_closed(n, p_max);
    let counts = harer_zagier_from_counts(n, p_max);
    let mut r = OutputRecord::new("harer-zagier", &["p", "closed_form", "from_counts"])
        .param("N", n)
        .param("p_max", p_max);
    for (p, (a, b)) in closed.into_iter().zip(counts).enumerate() {
        r.push(vec![Cell::int(p as u64 + 1), Cell::rational(a), Cell::rational(b)]);
    }
    Ok(r)
}

/// Default Wilson grid for `sample`: `0, 0.5, ..., 4`.
pub fn default_sample_times() -> Vec<f64> {
    (0..=8).map(|k| 0.5 * k as f64).collect()
}

pub fn cmd_sample(n: MatrixSize, samples: usize, seed: u64, ts: &[f64]) -> Result<OutputRecord> {
    if samples < MIN_SAMPLES {
        return Err(Error::InvalidArgument(format!("need at least {MIN_SAMPLES} samples")));
    }
    let w = wilson_loop(n);
    let times: Vec<f64> = if ts.is_empty() {
        default_sample_times()
    } else {
        ts.to_vec()
    };
    let mut r = OutputRecord::new("sample", &["t", "mean", "std_error", "exact", "z"])
        .param("N", n)
        .param("samples", samples)
        .param("seed", seed)
        .param(
            "t",
            times.iter().map(|t| format!("{t:?}")).collect::<Vec<_>>().join(" "),
        );
    for est in estimate_wilson_grid(n, &times, samples, seed)? {
        let exact = wilson_eval(&w, Complex64::new(est.t, 0.0)).re;
        // a zero standard error only happens at t = 0, where the mean is exact
        let z = match zscore(&est.re, exact) {
            Ok(z) => z,
            Err(_) if (est.re.mean - exact).abs() <= 1e-12 => 0.0,
            Err(_) => f64::INFINITY,
        };
        r.push(vec![
            Cell::Float(est.t),
            Cell::Float(est.re.mean),
            Cell::Float(est.re.std_error),
            Cell::Float(exact),
            Cell::Float(z),
        ]);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;

    fn size(n: u32) -> MatrixSize {
        MatrixSize::new(n).unwrap()
    }

    #[test]
    fn wilson_rows() {
        let r = cmd_wilson(size(1), 0.0, 2.0, 4).unwrap();
        assert_eq!(r.rows[0], vec![Cell::Float(0.0), Cell::Float(1.0)]);
        let r = cmd_wilson(size(3), 0.0, 1.0, 1).unwrap();
        assert_eq!(r.summary["coefficients"], "1 1/3 1/54");
        let r = cmd_wilson(size(2), 2.0, 2.0, 1).unwrap();
        assert!(r.rows[0][1].as_f64().unwrap().abs() < 1e-15);
        assert!(cmd_wilson(size(2), 0.0, 1.0, 0).is_err());
    }

    #[test]
    fn density_rows() {
        let r = cmd_density(size(1), -1.0, 1.0, 2).unwrap();
        let mid = &r.rows[1];
        assert!((mid[1].as_f64().unwrap() - 0.398_942_280_401_432_7).abs() < 1e-15);
        assert!((mid[2].as_f64().unwrap() - std::f64::consts::FRAC_1_PI).abs() < 1e-15);
        assert_eq!(r.rows[0][1], r.rows[2][1]);
    }

    #[test]
    fn moment_rows() {
        let r = cmd_moments(size(2), 3).unwrap();
        assert_eq!(r.rows[0][1], Cell::int(1));
        assert_eq!(r.rows[2][1], Cell::rational(rational(9, 4)));
        let r = cmd_moments(size(1), 4).unwrap();
        assert_eq!(r.rows[4][1], Cell::int(105));
    }

    #[test]
    fn rosette_rows() {
        let r = cmd_rosettes(3, None).unwrap();
        assert_eq!(
            r.rows,
            vec![vec![Cell::int(0), Cell::int(5)], vec![Cell::int(1), Cell::int(10)]]
        );
        assert_eq!(r.summary["total"], r.summary["double_factorial"]);
        let r = cmd_rosettes(12, Some(0)).unwrap();
        assert_eq!(r.rows, vec![vec![Cell::int(0), Cell::Int(catalan(12))]]);
        assert_eq!(r.summary["total"], r.summary["double_factorial"]);
    }

    #[test]
    fn harer_zagier_rows() {
        let r = cmd_harer_zagier(size(2), 3).unwrap();
        assert_eq!(r.rows[1][1], Cell::rational(rational(3, 4)));
        assert!(r.rows.iter().all(|row| row[1] == row[2]));
    }

    #[test]
    fn sample_rows() {
        let r = cmd_sample(size(3), 200, 5, &[0.0, 1.0]).unwrap();
        assert_eq!(r.rows[0][1], Cell::Float(1.0));
        assert_eq!(r.rows[0][4], Cell::Float(0.0));
        assert_eq!(r, cmd_sample(size(3), 200, 5, &[0.0, 1.0]).unwrap());
    }
}
