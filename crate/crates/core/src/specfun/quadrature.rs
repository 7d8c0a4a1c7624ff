//! Gauss–Jacobi quadrature.
//!
//! Nodes come from the eigenvalues of the symmetric Jacobi matrix
//! (Golub–Welsch), are polished by Newton steps on the orthonormal
//! recurrence, and the weights are the Christoffel numbers
//! 1 / Σ_j p̃_j(x_i)².

use nalgebra::DMatrix;

use super::jacobi::jacobi_norm_sq;
use super::sum::compensated_sum;
use super::JacobiIndex;
use crate::error::{Error, Result};

/// Nodes and weights for ∫_{-1}^{1} f(x) (1−x)^α (1+x)^β dx.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub alpha: f64,
    pub beta: f64,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    /// Σ w_i f(x_i), compensated.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        compensated_sum(self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)))
    }
}

/// Recurrence coefficients of the orthonormal Jacobi polynomials:
/// x p̃_j = b_{j+1} p̃_{j+1} + a_j p̃_j + b_j p̃_{j−1}.
fn recurrence(size: usize, alpha: f64, beta: f64) -> (Vec<f64>, Vec<f64>) {
    let ab = alpha + beta;
    let diag = (0..size)
        .map(|j| {
            let s = 2.0 * j as f64 + ab;
            if j == 0 {
                (beta - alpha) / (ab + 2.0)
            } else {
                (beta * beta - alpha * alpha) / (s * (s + 2.0))
            }
        })
        .collect();
    // off[j] couples p̃_{j-1} and p̃_j, j = 1..=size
    let off = (0..=size)
        .map(|j| {
            if j == 0 {
                return 0.0;
            }
            let k = j as f64;
            let s = 2.0 * k + ab;
            if j == 1 {
                (4.0 * (1.0 + alpha) * (1.0 + beta) / ((ab + 2.0).powi(2) * (ab + 3.0))).sqrt()
            } else {
                (4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0)))
                    .sqrt()
            }
        })
        .collect();
    (diag, off)
}

/// p̃_0..p̃_{size} at x; returns (values up to size−1, p̃_size, p̃'_size).
fn orthonormal_values(x: f64, diag: &[f64], off: &[f64], mu0: f64) -> (Vec<f64>, f64, f64) {
    let size = diag.len();
    let mut vals = Vec::with_capacity(size);
    let (mut prev, mut cur) = (0.0, 1.0 / mu0.sqrt());
    let (mut dprev, mut dcur) = (0.0, 0.0);
    for j in 0..size {
        vals.push(cur);
        let next = ((x - diag[j]) * cur - off[j] * prev) / off[j + 1];
        let dnext = (cur + (x - diag[j]) * dcur - off[j] * dprev) / off[j + 1];
        prev = cur;
        cur = next;
        dprev = dcur;
        dcur = dnext;
    }
    (vals, cur, dcur)
}

/// Gauss–Jacobi rule with `size` nodes; exact for degree ≤ 2·size − 1.
pub fn gauss_jacobi_rule(size: usize, alpha: f64, beta: f64) -> Result<QuadratureRule> {
    JacobiIndex::new(0, alpha, beta)?;
    if size == 0 {
        return Err(Error::InvalidParameter("quadrature size must be positive".into()));
    }
    let mu0 = jacobi_norm_sq(JacobiIndex {
        degree: 0,
        alpha,
        beta,
    });
    let (diag, off) = recurrence(size, alpha, beta);

    let mut jm = DMatrix::<f64>::zeros(size, size);
    for i in 0..size {
        jm[(i, i)] = diag[i];
        if i + 1 < size {
            jm[(i, i + 1)] = off[i + 1];
            jm[(i + 1, i)] = off[i + 1];
        }
    }
    let eig = jm
        .try_symmetric_eigen(1e-14, 10_000)
        .ok_or_else(|| Error::Convergence(format!("size={size} alpha={alpha} beta={beta}")))?;
    let mut nodes: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    nodes.sort_by(|a, b| a.total_cmp(b));

    let mut weights = Vec::with_capacity(size);
    for x in nodes.iter_mut() {
        for _ in 0..3 {
            let (_, p, dp) = orthonormal_values(*x, &diag, &off, mu0);
            if dp == 0.0 {
                break;
            }
            let step = p / dp;
            *x -= step;
            if step.abs() < 1e-16 {
                break;
            }
        }
        if !(x.abs() < 1.0) {
            return Err(Error::Convergence(format!("node {x} left (-1, 1)")));
        }
        let (vals, _, _) = orthonormal_values(*x, &diag, &off, mu0);
        let w = 1.0 / compensated_sum(vals.iter().map(|v| v * v));
        if !(w > 0.0 && w.is_finite()) {
            return Err(Error::Convergence(format!("weight {w} at node {x}")));
        }
        weights.push(w);
    }
    Ok(QuadratureRule {
        alpha,
        beta,
        nodes,
        weights,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::jacobi_p_unchecked;

    #[test]
    fn single_node_legendre() {
        let r = gauss_jacobi_rule(1, 0.0, 0.0).unwrap();
        assert!(r.nodes[0].abs() < 1e-15);
        assert!((r.weights[0] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn weight_one_minus_x() {
        for size in 2..6 {
            let r = gauss_jacobi_rule(size, 1.0, 0.0).unwrap();
            assert!((r.integrate(|_| 1.0) - 2.0).abs() < 1e-14);
        }
    }

    #[test]
    fn jacobi_norm_by_quadrature() {
        // P_2^{(1,0)} expanded by hand: ((α+1)_2/2!) 2F1(-2, 4; 2; (1-x)/2)
        let brute = |x: f64| {
            let t = (1.0 - x) / 2.0;
            3.0 * (1.0 - 4.0 * t + 10.0 / 3.0 * t * t)
        };
        for x in [-0.9, -0.2, 0.4, 0.8] {
            assert!((brute(x) - jacobi_p_unchecked(2, 1.0, 0.0, x)).abs() < 1e-14);
        }
        let r = gauss_jacobi_rule(3, 1.0, 0.0).unwrap();
        let v = r.integrate(|x| brute(x).powi(2));
        assert!((v - 2.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn moments_match_beta_integrals() {
        // ∫ (1−x)^α (1+x)^β x^0 = μ0; ∫ (1+x) w = 2^{α+β+2} B(α+1, β+2)
        for &(a, b) in &[(0.0, 0.0), (2.0, 0.0), (0.5, -0.5), (-0.7, 3.0)] {
            let r = gauss_jacobi_rule(8, a, b).unwrap();
            let first = r.integrate(|x| 1.0 + x);
            let expect = jacobi_norm_sq(JacobiIndex {
                degree: 0,
                alpha: a,
                beta: b,
            }) * 2.0 * (b + 1.0)
                / (a + b + 2.0);
            assert!((first - expect).abs() < 1e-13 * expect, "a={a} b={b}");
        }
    }

    #[test]
    fn exactness_degree() {
        // ∫ (1−x)^2 x^{2N−1}... use monomials against the Legendre rule
        let r = gauss_jacobi_rule(5, 0.0, 0.0).unwrap();
        for d in 0..10 {
            let v = r.integrate(|x| x.powi(d));
            let exact = if d % 2 == 0 { 2.0 / (d as f64 + 1.0) } else { 0.0 };
            assert!((v - exact).abs() < 1e-14, "degree {d}");
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(gauss_jacobi_rule(0, 0.0, 0.0).is_err());
        assert!(gauss_jacobi_rule(3, -1.0, 0.0).is_err());
    }
}
