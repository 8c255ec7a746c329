//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.

use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 50;
const RELATIVE_OFF_TOL: f64 = 1e-14;

/// Eigenvalues of the symmetric `n x n` row-major matrix `a`, unsorted.
///
/// Rotations sweep the pairs `(p, q)`, `p < q`, in row-major order until the
/// off-diagonal Frobenius mass drops below `1e-14` times the Frobenius norm
/// of the input. The sweep order is fixed, so results are reproducible.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n, "matrix must be n x n");
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let tol = RELATIVE_OFF_TOL * norm;
    for _ in 0..=MAX_SWEEPS {
        let off = off_diagonal_norm(&a, n);
        if off <= tol {
            return Ok((0..n).map(|i| a[i * n + i]).collect());
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
    }
    Err(Error::NoConvergence(MAX_SWEEPS))
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[i * n + j] * a[i * n + j];
            }
        }
    }
    sum.sqrt()
}

/// One rotation zeroing `a[p][q]`.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta == 0.0 {
        1.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<f64>) -> Vec<f64> {
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }

    #[test]
    fn two_by_two() {
        let ev = sorted(symmetric_eigenvalues(vec![2.0, 1.0, 1.0, 2.0], 2).unwrap());
        assert!((ev[0] - 3.0).abs() < 1e-14 && (ev[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn zero_and_empty_matrices() {
        assert_eq!(symmetric_eigenvalues(vec![0.0; 9], 3).unwrap(), vec![0.0; 3]);
        assert!(symmetric_eigenvalues(Vec::new(), 0).unwrap().is_empty());
    }

    #[test]
    fn tridiagonal_toeplitz() {
        // eigenvalues of the path adjacency: 2 cos(k pi / (n + 1))
        let n = 12;
        let mut a = vec![0.0; n * n];
        for i in 1..n {
            a[i * n + i - 1] = 1.0;
            a[(i - 1) * n + i] = 1.0;
        }
        let ev = sorted(symmetric_eigenvalues(a, n).unwrap());
        for (k, &e) in ev.iter().enumerate() {
            let expect = 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n + 1) as f64).cos();
            assert!((e - expect).abs() < 1e-13, "{e} vs {expect}");
        }
    }

    #[test]
    fn dense_symmetric_trace_and_frobenius() {
        let n = 30;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..=i {
                let x = ((i * 31 + j * 17) % 11) as f64 - 5.0;
                a[i * n + j] = x;
                a[j * n + i] = x;
            }
        }
        let trace: f64 = (0..n).map(|i| a[i * n + i]).sum();
        let fro2: f64 = a.iter().map(|x| x * x).sum();
        let ev = symmetric_eigenvalues(a, n).unwrap();
        assert!((ev.iter().sum::<f64>() - trace).abs() < 1e-10);
        assert!((ev.iter().map(|x| x * x).sum::<f64>() - fro2).abs() < 1e-8);
    }
}
