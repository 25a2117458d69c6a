//! Browser bindings for the demo page in `www/`.
//!
//! Curves come back as flat `Float64Array`s of fixed-width records so the
//! page can plot them without any parsing.

// `!(x > 0.0)` style guards are meant to reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use gue_core::exact::{double_factorial, Rational};
use gue_core::maps::rosette_count_formula;
use gue_core::observables::{
    density, density_eval, moment_exact, wigner_density, wilson_eval, wilson_limit_partial, wilson_loop, MatrixSize,
};
use num_complex::Complex64;
use wasm_bindgen::prelude::*;

/// Largest matrix size the page offers.
pub const MAX_N: u32 = 200;
/// Largest half-order for the genus table.
pub const MAX_L: usize = 40;
const MAX_STEPS: usize = 20_000;

fn matrix_size(n: u32) -> Result<MatrixSize, String> {
    if n > MAX_N {
        return Err(format!("N must be at most {MAX_N}"));
    }
    MatrixSize::new(n).map_err(|e| e.to_string())
}

fn grid(lo: f64, hi: f64, steps: usize) -> Result<impl Iterator<Item = f64>, String> {
    if steps == 0 || steps > MAX_STEPS {
        return Err(format!("steps must be between 1 and {MAX_STEPS}"));
    }
    if !(lo < hi) {
        return Err(format!("empty range [{lo}, {hi}]"));
    }
    Ok((0..=steps).map(move |k| lo + (hi - lo) * k as f64 / steps as f64))
}

/// `[lambda, rho_N(lambda), semicircle(lambda)]` per grid point.
pub fn density_points(n: u32, lambda_min: f64, lambda_max: f64, steps: usize) -> Result<Vec<f64>, String> {
    let d = density(matrix_size(n)?);
    Ok(grid(lambda_min, lambda_max, steps)?
        .flat_map(|x| [x, density_eval(&d, x), wigner_density(x)])
        .collect())
}

/// Largest time on the Wilson plot. The limit series loses digits like
/// `e^{2t}`, which still leaves about nine at this point.
pub const MAX_T: f64 = 10.0;

/// `[t, I(t, N), I(t, infinity)]` per grid point on `[0, t_max]`.
pub fn wilson_points(n: u32, t_max: f64, steps: usize) -> Result<Vec<f64>, String> {
    if !(t_max > 0.0 && t_max <= MAX_T) {
        return Err(format!("t_max must lie in (0, {MAX_T}]"));
    }
    let w = wilson_loop(matrix_size(n)?);
    Ok(grid(0.0, t_max, steps)?
        .flat_map(|t| {
            let z = Complex64::new(t, 0.0);
            [t, wilson_eval(&w, z).re, wilson_limit_partial(z, 120).re]
        })
        .collect())
}

/// Tab-separated table of `g`, `C_g(l)` and the share `C_g(l) / (2l-1)!!`,
/// followed by the exact moment at `n`.
pub fn genus_rows(l: usize, n: u32) -> Result<String, String> {
    if l == 0 || l > MAX_L {
        return Err(format!("l must be between 1 and {MAX_L}"));
    }
    let size = matrix_size(n)?;
    let total = double_factorial(2 * l as i64 - 1);
    let mut out = String::from("g\tC_g(l)\tshare\n");
    for g in 0..=l / 2 {
        let c = rosette_count_formula(l, g);
        let share = Rational::new(c.clone(), total.clone());
        out.push_str(&format!("{g}\t{c}\t{:.6}\n", gue_core::exact::to_f64(&share)));
    }
    let m = moment_exact(size, l);
    out.push_str(&format!(
        "total\t{total}\t1\nm_{}(N={n})\t{m}\t{:.12}\n",
        2 * l,
        gue_core::exact::to_f64(&m)
    ));
    Ok(out)
}

#[wasm_bindgen]
pub fn density_curve(n: u32, lambda_min: f64, lambda_max: f64, steps: usize) -> Result<Vec<f64>, JsValue> {
    density_points(n, lambda_min, lambda_max, steps).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn wilson_curve(n: u32, t_max: f64, steps: usize) -> Result<Vec<f64>, JsValue> {
    wilson_points(n, t_max, steps).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn genus_table(l: usize, n: u32) -> Result<String, JsValue> {
    genus_rows(l, n).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn density_records() {
        let v = density_points(1, -1.0, 1.0, 2).unwrap();
        assert_eq!(v.len(), 9);
        assert!((v[4] - 0.398_942_280_401_432_7).abs() < 1e-15);
        assert!((v[5] - std::f64::consts::FRAC_1_PI).abs() < 1e-15);
        assert_eq!(v[1], v[7]);
    }

    #[test]
    fn wilson_records() {
        let v = wilson_points(2, 2.0, 1).unwrap();
        assert_eq!(&v[..2], &[0.0, 1.0]);
        assert!(v[4].abs() < 1e-15);
        let big = wilson_points(150, 3.0, 30).unwrap();
        for rec in big.chunks(3) {
            assert!((rec[1] - rec[2]).abs() < 0.05, "{rec:?}");
        }
    }

    #[test]
    fn large_n_curves_are_sane() {
        let d = density_points(MAX_N, -2.5, 2.5, 500).unwrap();
        let mass: f64 = d.chunks(3).map(|r| r[1]).sum::<f64>() * 0.01;
        assert!((mass - 1.0).abs() < 1e-3, "{mass}");
        assert!(d.chunks(3).all(|r| r[1] >= 0.0));
        let w = wilson_points(MAX_N, MAX_T, 200).unwrap();
        for rec in w.chunks(3) {
            assert!(rec[1].abs() <= 1.0 && rec[2].abs() <= 1.0, "{rec:?}");
            assert!((rec[1] - rec[2]).abs() < 0.02, "{rec:?}");
        }
    }

    #[test]
    fn genus_table_rows() {
        let t = genus_rows(2, 2).unwrap();
        assert!(t.contains("0\t2\t"));
        assert!(t.contains("1\t1\t"));
        assert!(t.contains("m_4(N=2)\t9/4"));
    }

    #[test]
    fn bad_inputs() {
        assert!(density_points(0, -1.0, 1.0, 10).is_err());
        assert!(density_points(MAX_N + 1, -1.0, 1.0, 10).is_err());
        assert!(density_points(3, 1.0, -1.0, 10).is_err());
        assert!(wilson_points(3, -1.0, 10).is_err());
        assert!(wilson_points(3, MAX_T + 1.0, 10).is_err());
        assert!(genus_rows(0, 2).is_err());
        assert!(genus_rows(MAX_L + 1, 2).is_err());
    }
}
