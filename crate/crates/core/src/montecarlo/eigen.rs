use super::sampler::HermitianSample;
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Sweep cap for [`hermitian_eigenvalues`].
pub const MAX_SWEEPS: usize = 40;
/// Default off-diagonal Frobenius tolerance.
pub const EIGEN_TOLERANCE: f64 = 1e-12;

/// Ascending eigenvalues by cyclic complex Jacobi rotations, iterated until
/// the off-diagonal Frobenius norm drops below `tol`.
pub fn hermitian_eigenvalues(h: &HermitianSample, tol: f64) -> Result<Vec<f64>> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let n = h.matrix_size().get() as usize;
    let mut a = h.entries().to_vec();
    let mut sweeps = 0;
    loop {
        let off = off_norm(&a, n);
        if off < tol {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::EigenNotConverged { sweeps, off_norm: off });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

fn off_norm(a: &[Complex64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

// Zeroes a_pq with G = diag(1, e^{-i phi}) R(c, s) acting on columns p, q,
// where a_pq = |a_pq| e^{i phi}; then A <- G* A G.
fn rotate(a: &mut [Complex64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq / mag; // e^{i phi}
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let gpp = Complex64::new(c, 0.0);
    let gpq = Complex64::new(s, 0.0);
    let gqp = -phase.conj() * s;
    let gqq = phase.conj() * c;
    // columns
    for k in 0..n {
        let xp = a[k * n + p];
        let xq = a[k * n + q];
        a[k * n + p] = xp * gpp + xq * gqp;
        a[k * n + q] = xp * gpq + xq * gqq;
    }
    // rows, with G*
    for k in 0..n {
        let xp = a[p * n + k];
        let xq = a[q * n + k];
        a[p * n + k] = gpp.conj() * xp + gqp.conj() * xq;
        a[q * n + k] = gpq.conj() * xp + gqq.conj() * xq;
    }
    a[p * n + q] = Complex64::new(0.0, 0.0);
    a[q * n + p] = Complex64::new(0.0, 0.0);
    a[p * n + p].im = 0.0;
    a[q * n + q].im = 0.0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::montecarlo::sampler::sample_gue_indexed;
    use crate::observables::MatrixSize;

    #[test]
    fn trivial_matrices() {
        let zero = HermitianSample::diagonal(&[0.0; 3]).unwrap();
        assert_eq!(hermitian_eigenvalues(&zero, 1e-12).unwrap(), vec![0.0; 3]);
        let d = HermitianSample::diagonal(&[1.0, -1.0]).unwrap();
        assert_eq!(hermitian_eigenvalues(&d, 1e-12).unwrap(), vec![-1.0, 1.0]);
        assert!(hermitian_eigenvalues(&d, 0.0).is_err());
    }

    #[test]
    fn two_by_two_closed_form() {
        // [[1, i], [-i, 1]] has eigenvalues 0 and 2
        let h = HermitianSample::from_entries(
            MatrixSize::new(2).unwrap(),
            vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(0.0, -1.0),
                Complex64::new(1.0, 0.0),
            ],
        )
        .unwrap();
        let e = hermitian_eigenvalues(&h, 1e-14).unwrap();
        assert!(e[0].abs() < 1e-14 && (e[1] - 2.0).abs() < 1e-14, "{e:?}");
    }

    #[test]
    fn trace_identities() {
        for n in [1, 2, 5, 16, 32] {
            let size = MatrixSize::new(n).unwrap();
            for s in 0..4 {
                let h = sample_gue_indexed(size, 3, s);
                let e = hermitian_eigenvalues(&h, EIGEN_TOLERANCE).unwrap();
                assert!((e.iter().sum::<f64>() - h.trace()).abs() < 1e-10);
                let sq: f64 = e.iter().map(|x| x * x).sum();
                assert!((sq - h.trace_squared()).abs() < 1e-9 * h.trace_squared().max(1.0));
                assert!(e.windows(2).all(|w| w[0] <= w[1]));
            }
        }
    }

    #[test]
    fn unitary_invariance() {
        let size = MatrixSize::new(6).unwrap();
        let h = sample_gue_indexed(size, 11, 0);
        // unitary from a few Jacobi-style rotations applied to the identity
        let n = 6;
        let mut u = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            u[i * n + i] = Complex64::new(1.0, 0.0);
        }
        for (p, q, theta, phi) in [(0, 3, 0.7, 0.4), (1, 5, -1.1, 2.0), (2, 4, 0.3, -0.9), (0, 1, 1.3, 0.1)] {
            let (c, s) = (f64::cos(theta), f64::sin(theta));
            let e = Complex64::from_polar(1.0, phi);
            for k in 0..n {
                let (xp, xq) = (u[k * n + p], u[k * n + q]);
                u[k * n + p] = xp * c - xq * e.conj() * s;
                u[k * n + q] = xp * e * s + xq * c;
            }
        }
        let g = h.conjugate_by(&u).unwrap();
        let a = hermitian_eigenvalues(&h, EIGEN_TOLERANCE).unwrap();
        let b = hermitian_eigenvalues(&g, EIGEN_TOLERANCE).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-8);
        }
    }
}
