//! Small dense symmetric matrices: cyclic Jacobi eigenvalues in `f64` and an
//! exact positive-semidefiniteness test over the integers.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Row-major square matrix of `f64`.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        DenseMatrix {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m.data[i * dim + j] = f(i, j);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let n = self.dim;
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += self.get(i, j).powi(2);
                }
            }
        }
        s.sqrt()
    }
}

pub const JACOBI_OFF_DIAGONAL_TOL: f64 = 1e-13;
const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
///
/// Sweeps stop once the off-diagonal Frobenius norm drops below
/// `1e-13 * max(1, ||A||)`.
pub fn symmetric_eigenvalues(a: &DenseMatrix) -> Vec<f64> {
    let n = a.dim;
    let mut m = a.clone();
    let threshold = JACOBI_OFF_DIAGONAL_TOL * m.frobenius_norm().max(1.0);
    for _ in 0..JACOBI_MAX_SWEEPS {
        if m.off_diagonal_norm() < threshold {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = m.get(p, p);
                let aqq = m.get(q, q);
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = m.get(k, p);
                    let akq = m.get(k, q);
                    m.set(k, p, c * akp - s * akq);
                    m.set(k, q, s * akp + c * akq);
                }
                for k in 0..n {
                    let apk = m.get(p, k);
                    let aqk = m.get(q, k);
                    m.set(p, k, c * apk - s * aqk);
                    m.set(q, k, s * apk + c * aqk);
                }
                m.set(p, q, 0.0);
                m.set(q, p, 0.0);
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| m.get(i, i)).collect();
    eig.sort_by(f64::total_cmp);
    eig
}

/// Smallest eigenvalue; `+inf` for the empty matrix.
pub fn smallest_eigenvalue(a: &DenseMatrix) -> f64 {
    symmetric_eigenvalues(a)
        .first()
        .copied()
        .unwrap_or(f64::INFINITY)
}

/// Exact test that an integer symmetric matrix is positive semidefinite.
///
/// Fraction-free symmetric elimination (Bareiss): after `k` pivots every
/// remaining entry is a `(k+1)`-minor of the input, so each division is
/// exact and all arithmetic stays in the integers. A
/// negative pivot means an indefinite direction; a zero pivot is allowed
/// only when its whole remaining row vanishes, in which case the row is
/// dropped. Pivots are taken in the order given by `order`.
pub fn is_psd_exact(matrix: &[Vec<BigInt>], order: &[usize]) -> bool {
    let n = matrix.len();
    debug_assert_eq!(order.len(), n);
    let mut a: Vec<Vec<BigInt>> = order
        .iter()
        .map(|&i| order.iter().map(|&j| matrix[i][j].clone()).collect())
        .collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut prev = BigInt::from(1);
    while let Some(&k) = active.first() {
        let pivot = a[k][k].clone();
        let rest: Vec<usize> = active[1..].to_vec();
        if pivot.is_negative() {
            return false;
        }
        if pivot.is_zero() {
            if rest.iter().any(|&j| !a[k][j].is_zero()) {
                return false;
            }
            active = rest;
            continue;
        }
        for (ii, &i) in rest.iter().enumerate() {
            for &j in &rest[ii..] {
                let v = (&pivot * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v.clone();
                a[j][i] = v;
            }
        }
        prev = pivot;
        active = rest;
    }
    true
}
