use super::record::{Cell, OutputRecord};
use crate::error::{Error, Result};
use crate::exact::{double_factorial, integrate_real, to_f64};
use crate::maps::{
    certify_normalization, harer_zagier_closed, harer_zagier_from_counts, moment_wick, rosette_census,
    rosette_count_formula, verify_bijection, verify_initial_identity,
};
use crate::observables::{
    density, density_eval, density_fourier_check, moment_exact, wilson_bound, wilson_eval, wilson_loop, MatrixSize,
};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::One;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Display;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Wick,
    Best,
    Initial,
    Hz,
    Density,
    Bound,
}

impl Suite {
    const EACH: [Suite; 6] = [
        Suite::Wick,
        Suite::Best,
        Suite::Initial,
        Suite::Hz,
        Suite::Density,
        Suite::Bound,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Wick => "wick",
            Suite::Best => "best",
            Suite::Initial => "initial",
            Suite::Hz => "hz",
            Suite::Density => "density",
            Suite::Bound => "bound",
        }
    }

    /// Default `(l_max, N_max)`; flags may only lower these.
    pub fn limits(self) -> (usize, u32) {
        match self {
            Suite::All => (7, 16),
            Suite::Wick => (7, 6),
            Suite::Best => (3, 3),
            Suite::Initial => (4, 6),
            Suite::Hz => (7, 5),
            Suite::Density => (4, 8),
            Suite::Bound => (0, 16),
        }
    }
}

/// Optional lowered budgets from the command line.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub l_max: Option<usize>,
    pub n_max: Option<u32>,
}

impl Budget {
    fn resolve(self, suite: Suite) -> (usize, u32) {
        let (l, n) = suite.limits();
        (self.l_max.map_or(l, |v| v.min(l)), self.n_max.map_or(n, |v| v.min(n)))
    }

    fn check(self) -> Result<()> {
        let (l, n) = Suite::All.limits();
        if self.l_max.is_some_and(|v| v > l) || self.n_max.is_some_and(|v| v > n) {
            return Err(Error::InvalidArgument(format!(
                "budgets can be lowered but not raised past l_max {l}, N {n}"
            )));
        }
        if self.n_max == Some(0) {
            return Err(Error::InvalidMatrixSize);
        }
        Ok(())
    }
}

struct Report {
    record: OutputRecord,
    failures: usize,
}

impl Report {
    fn check(
        &mut self,
        suite: Suite,
        operation: &str,
        inputs: impl Display,
        expected: impl Display,
        actual: impl Display,
        passed: bool,
    ) {
        if !passed {
            self.failures += 1;
        }
        self.record.push(vec![
            Cell::text(suite.name()),
            Cell::text(operation),
            Cell::text(inputs.to_string()),
            Cell::text(expected.to_string()),
            Cell::text(actual.to_string()),
            Cell::text(if passed { "pass" } else { "FAIL" }),
        ]);
    }
}

fn size(n: u32) -> MatrixSize {
    MatrixSize::new(n).expect("suite sizes start at 1")
}

/// Runs `suite` and returns its report table and whether every check passed.
pub fn cmd_verify(suite: Suite, budget: Budget) -> Result<(OutputRecord, bool)> {
    budget.check()?;
    let mut record = OutputRecord::new(
        "verify",
        &["suite", "operation", "inputs", "expected", "actual", "status"],
    )
    .param("suite", suite.name());
    if let Some(l) = budget.l_max {
        record = record.param("l_max", l);
    }
    if let Some(n) = budget.n_max {
        record = record.param("N", n);
    }
    let mut report = Report { record, failures: 0 };
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    for s in suites {
        let (l_max, n_max) = budget.resolve(s);
        match s {
            Suite::Wick => wick(&mut report, l_max, n_max)?,
            Suite::Best => best(&mut report, n_max as usize, l_max)?,
            Suite::Initial => initial(&mut report, l_max, n_max)?,
            Suite::Hz => hz(&mut report, l_max, n_max),
            Suite::Density => density_suite(&mut report, l_max, n_max)?,
            Suite::Bound => bound(&mut report, n_max),
            Suite::All => unreachable!("expanded above"),
        }
    }
    let Report { mut record, failures } = report;
    record.summarize("checks", record.rows.len());
    record.summarize("failures", failures);
    Ok((record, failures == 0))
}

fn wick(r: &mut Report, l_max: usize, n_max: u32) -> Result<()> {
    for l in 1..=l_max {
        let census = rosette_census(l)?;
        let total = BigInt::from(census.total());
        let df = double_factorial(2 * l as i64 - 1);
        r.check(
            Suite::Wick,
            "rosette_census",
            format!("l={l}"),
            &df,
            &total,
            total == df,
        );
        for (g, &c) in census.counts.iter().enumerate() {
            let formula = rosette_count_formula(l, g);
            r.check(
                Suite::Wick,
                "rosette_count_formula",
                format!("l={l} g={g}"),
                c,
                &formula,
                formula == BigInt::from(c),
            );
        }
        for n in 1..=n_max {
            let wick = moment_wick(size(n), l)?;
            let exact = moment_exact(size(n), l);
            r.check(
                Suite::Wick,
                "moment_wick",
                format!("N={n} l={l}"),
                &exact,
                &wick,
                wick == exact,
            );
        }
    }
    Ok(())
}

fn best(r: &mut Report, max_vertices: usize, max_edges: usize) -> Result<()> {
    let rep = verify_bijection(max_vertices, max_edges)?;
    let inputs = format!("vertices<={max_vertices} edges<={max_edges}");
    let actual = match rep.mismatches.first() {
        Some(m) => format!("{} mismatches, first: {m}", rep.mismatches.len()),
        None => format!("{} graphs, {} triples, {} cycles", rep.graphs, rep.triples, rep.cycles),
    };
    r.check(
        Suite::Best,
        "best_forward/best_inverse",
        inputs,
        "identity round trips",
        actual,
        rep.holds(),
    );
    Ok(())
}

fn initial(r: &mut Report, l_max: usize, n_max: u32) -> Result<()> {
    for l in 1..=l_max {
        for n in 1..=n_max {
            let rep = verify_initial_identity(l, size(n))?;
            let actual = match rep.first_failure() {
                Some(q) => format!("lhs {} rhs {}, first failing q={q}", rep.lhs, rep.rhs),
                None => format!("{}", rep.lhs),
            };
            r.check(
                Suite::Initial,
                "verify_initial_identity",
                format!("N={n} l={l}"),
                &rep.rhs,
                actual,
                rep.holds(),
            );
        }
    }
    let edges = l_max.min(3);
    let (checked, bad) = certify_normalization(edges + 1, edges)?;
    let actual = match bad.first() {
        Some(m) => format!("{} mismatches, first {:?}: {}", bad.len(), m.graph, m.detail),
        None => format!("{checked} graphs agree"),
    };
    r.check(
        Suite::Initial,
        "eulerian_count_normalized",
        format!("edges<={edges}"),
        "derivative oracle",
        actual,
        bad.is_empty(),
    );
    Ok(())
}

fn hz(r: &mut Report, p_max: usize, n_max: u32) {
    for n in 1..=n_max {
        let closed = harer_zagier_closed(size(n), p_max);
        let counts = harer_zagier_from_counts(size(n), p_max);
        for (p, (a, b)) in closed.iter().zip(&counts).enumerate() {
            r.check(
                Suite::Hz,
                "harer_zagier_closed",
                format!("N={n} p={}", p + 1),
                b,
                a,
                a == b,
            );
        }
        if n == 1 {
            let ones = closed.iter().all(One::is_one);
            r.check(Suite::Hz, "harer_zagier_closed", "N=1", "all ones", ones, ones);
        }
    }
}

fn density_suite(r: &mut Report, l_max: usize, n_max: u32) -> Result<()> {
    const RANGE: f64 = 12.0;
    for n in 1..=n_max {
        let d = density(size(n));
        let mass = integrate_real(|x| density_eval(&d, x), -RANGE, RANGE, 1e-12)?;
        r.check(
            Suite::Density,
            "density normalization",
            format!("N={n}"),
            1.0,
            mass,
            (mass - 1.0).abs() <= 1e-9,
        );
        for l in 1..=l_max {
            let m = integrate_real(|x| x.powi(2 * l as i32) * density_eval(&d, x), -RANGE, RANGE, 1e-12)?;
            let exact = to_f64(&moment_exact(size(n), l));
            r.check(
                Suite::Density,
                "density moment",
                format!("N={n} l={l}"),
                exact,
                m,
                (m - exact).abs() <= 1e-7,
            );
        }
        for k in 0..5 {
            let x = -2.5 + 1.25 * k as f64;
            let f = density_fourier_check(size(n), x)?;
            let e = density_eval(&d, x);
            r.check(
                Suite::Density,
                "density_fourier_check",
                format!("N={n} lambda={x}"),
                e,
                f,
                (f - e).abs() <= 1e-8,
            );
        }
    }
    Ok(())
}

fn bound(r: &mut Report, n_max: u32) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut unit = move || (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
    for n in 1..=n_max {
        let w = wilson_loop(size(n));
        let mut worst = 0.0f64;
        for _ in 0..500 {
            let t = Complex64::new(12.0 * unit() - 6.0, 6.0 * unit() - 3.0);
            worst = worst.max(wilson_eval(&w, t).norm() / wilson_bound(size(n), t));
        }
        r.check(
            Suite::Bound,
            "wilson_bound",
            format!("N={n} 500 points"),
            "ratio <= 1",
            worst,
            worst <= 1.0,
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        for suite in [Suite::Hz, Suite::Bound] {
            let (rec, ok) = cmd_verify(suite, Budget::default()).unwrap();
            assert!(ok, "{rec:?}");
        }
        let (_, ok) = cmd_verify(
            Suite::Wick,
            Budget {
                l_max: Some(4),
                n_max: Some(3),
            },
        )
        .unwrap();
        assert!(ok);
    }

    #[test]
    fn budgets_cannot_grow() {
        assert!(cmd_verify(
            Suite::Wick,
            Budget {
                l_max: Some(9),
                n_max: None
            }
        )
        .is_err());
        assert!(cmd_verify(
            Suite::Wick,
            Budget {
                l_max: None,
                n_max: Some(0)
            }
        )
        .is_err());
    }
}
