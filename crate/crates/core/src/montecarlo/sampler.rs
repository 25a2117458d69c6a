use crate::error::{Error, Result};
use crate::observables::MatrixSize;
use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

/// Dense Hermitian matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianSample {
    size: MatrixSize,
    entries: Vec<Complex64>,
}

impl HermitianSample {
    /// Checks that `entries` holds `N^2` values with a real diagonal and
    /// conjugate symmetry.
    pub fn from_entries(size: MatrixSize, entries: Vec<Complex64>) -> Result<Self> {
        let n = size.get() as usize;
        if entries.len() != n * n {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        for a in 0..n {
            for b in a..n {
                if entries[a * n + b] != entries[b * n + a].conj() {
                    return Err(Error::InvalidArgument(format!(
                        "entries ({a}, {b}) and ({b}, {a}) are not conjugate"
                    )));
                }
            }
        }
        Ok(Self { size, entries })
    }

    /// Real diagonal matrix.
    pub fn diagonal(values: &[f64]) -> Result<Self> {
        let size = MatrixSize::new(values.len() as u32)?;
        let n = values.len();
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for (i, &v) in values.iter().enumerate() {
            entries[i * n + i] = Complex64::new(v, 0.0);
        }
        Ok(Self { size, entries })
    }

    pub fn matrix_size(&self) -> MatrixSize {
        self.size
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn get(&self, a: usize, b: usize) -> Complex64 {
        self.entries[a * self.size.get() as usize + b]
    }

    pub fn trace(&self) -> f64 {
        let n = self.size.get() as usize;
        (0..n).map(|i| self.entries[i * n + i].re).sum()
    }

    /// `Tr H^2 = sum_ab |H_ab|^2`.
    pub fn trace_squared(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `U H U*` for a unitary `u` given row-major; the result is
    /// re-symmetrized to absorb rounding.
    pub fn conjugate_by(&self, u: &[Complex64]) -> Result<Self> {
        let n = self.size.get() as usize;
        if u.len() != n * n {
            return Err(Error::InvalidArgument("unitary has the wrong shape".into()));
        }
        let mut uh = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for k in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for j in 0..n {
                    acc += u[i * n + j] * self.entries[j * n + k];
                }
                uh[i * n + k] = acc;
            }
        }
        let mut out = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for k in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for j in 0..n {
                    acc += uh[i * n + j] * u[k * n + j].conj();
                }
                out[i * n + k] = acc;
            }
        }
        for a in 0..n {
            out[a * n + a].im = 0.0;
            for b in a + 1..n {
                let avg = (out[a * n + b] + out[b * n + a].conj()) * 0.5;
                out[a * n + b] = avg;
                out[b * n + a] = avg.conj();
            }
        }
        Ok(Self {
            size: self.size,
            entries: out,
        })
    }
}

/// Sample `0` of the stream for `seed`; see [`sample_gue_indexed`].
pub fn sample_gue(n: MatrixSize, seed: u64) -> HermitianSample {
    sample_gue_indexed(n, seed, 0)
}

/// GUE matrix with weight `exp(-N Tr H^2 / 2)`: `H_aa ~ N(0, 1/N)` and
/// `Re H_ab, Im H_ab ~ N(0, 1/(2N))` for `a < b`.
///
/// Entry `(a, b)`, `a <= b`, of sample `index` is drawn from ChaCha8 keyed by
/// `seed`, stream `index`, at word offset `4 (a N + b)`, so it depends only on
/// `(seed, index, a, b)`.
pub fn sample_gue_indexed(n: MatrixSize, seed: u64, index: u64) -> HermitianSample {
    let size = n.get() as usize;
    let diag_sd = (1.0 / n.as_f64()).sqrt();
    let off_sd = (0.5 / n.as_f64()).sqrt();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut entries = vec![Complex64::new(0.0, 0.0); size * size];
    for a in 0..size {
        for b in a..size {
            rng.set_word_pos(4 * (a * size + b) as u128);
            let (x, y) = box_muller(&mut rng);
            if a == b {
                entries[a * size + a] = Complex64::new(diag_sd * x, 0.0);
            } else {
                let z = Complex64::new(off_sd * x, off_sd * y);
                entries[a * size + b] = z;
                entries[b * size + a] = z.conj();
            }
        }
    }
    HermitianSample { size: n, entries }
}

// Uniform on (0, 1] from the top 53 bits.
fn unit(rng: &mut impl RngCore) -> f64 {
    ((rng.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn box_muller(rng: &mut impl RngCore) -> (f64, f64) {
    let r = (-2.0 * unit(rng).ln()).sqrt();
    let theta = TAU * unit(rng);
    (r * theta.cos(), r * theta.sin())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn size(n: u32) -> MatrixSize {
        MatrixSize::new(n).unwrap()
    }

    #[test]
    fn hermitian_by_construction() {
        for seed in 0..20 {
            let h = sample_gue_indexed(size(5), seed, seed * 7);
            assert!(HermitianSample::from_entries(h.matrix_size(), h.entries().to_vec()).is_ok());
        }
    }

    #[test]
    fn deterministic_and_counter_based() {
        assert_eq!(sample_gue(size(4), 9), sample_gue(size(4), 9));
        assert_ne!(sample_gue_indexed(size(4), 9, 0), sample_gue_indexed(size(4), 9, 1));
        // entry (a, b) does not depend on the matrix size beyond its offset
        let small = sample_gue_indexed(size(3), 5, 2);
        let again = sample_gue_indexed(size(3), 5, 2);
        assert_eq!(small.get(1, 2), again.get(1, 2));
    }

    #[test]
    fn variance_convention() {
        // <Tr H^2> = N^2 / N = N, per-entry second moments 1/N
        let n = size(4);
        let samples = 20_000;
        let mut diag = 0.0;
        let mut off = 0.0;
        for s in 0..samples {
            let h = sample_gue_indexed(n, 1, s);
            diag += h.get(0, 0).re.powi(2);
            off += h.get(0, 1).norm_sqr();
        }
        let (diag, off) = (diag / samples as f64, off / samples as f64);
        assert!((diag - 0.25).abs() < 0.01, "{diag}");
        assert!((off - 0.25).abs() < 0.01, "{off}");
    }

    #[test]
    fn non_hermitian_rejected() {
        let bad = vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(2.0, 0.0),
            Complex64::new(0.0, 0.0),
        ];
        assert!(HermitianSample::from_entries(size(2), bad).is_err());
        assert!(HermitianSample::from_entries(size(2), vec![]).is_err());
    }
}
