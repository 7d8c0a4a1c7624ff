use super::gamma::gamma_ratio;
use crate::error::{Error, Result};

/// Degree and weight exponents of a Jacobi polynomial P_k^{(α,β)}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiIndex {
    pub degree: usize,
    pub alpha: f64,
    pub beta: f64,
}

impl JacobiIndex {
    pub fn new(degree: usize, alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > -1.0) {
            return Err(Error::Domain {
                what: "alpha",
                value: alpha,
                domain: "alpha > -1",
            });
        }
        if !(beta > -1.0) {
            return Err(Error::Domain {
                what: "beta",
                value: beta,
                domain: "beta > -1",
            });
        }
        Ok(Self {
            degree,
            alpha,
            beta,
        })
    }
}

/// P_k^{(α,β)}(x) by the three-term recurrence, for x ∈ [−1, 1].
pub fn jacobi_p(idx: JacobiIndex, x: f64) -> Result<f64> {
    if !(x.abs() <= 1.0 + 1e-12) {
        return Err(Error::Domain {
            what: "x",
            value: x,
            domain: "[-1, 1]",
        });
    }
    Ok(jacobi_p_unchecked(idx.degree, idx.alpha, idx.beta, x))
}

/// Recurrence evaluation without the domain check.
pub fn jacobi_p_unchecked(k: usize, alpha: f64, beta: f64, x: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let ab = alpha + beta;
    let mut prev = 1.0;
    let mut cur = (alpha + 1.0) + (ab + 2.0) * (x - 1.0) / 2.0;
    for deg in 2..=k {
        let n = deg as f64;
        let s = 2.0 * n + ab;
        let c1 = 2.0 * n * (n + ab) * (s - 2.0);
        let c2 = (s - 1.0) * (s * (s - 2.0) * x + alpha * alpha - beta * beta);
        let c3 = 2.0 * (n + alpha - 1.0) * (n + beta - 1.0) * s;
        let next = (c2 * cur - c3 * prev) / c1;
        prev = cur;
        cur = next;
    }
    cur
}

/// P_k^{(α,β)}(1) = (α+1)_k / k!.
pub fn jacobi_p_at_one(idx: JacobiIndex) -> f64 {
    (1..=idx.degree).fold(1.0, |acc, j| acc * (idx.alpha + j as f64) / j as f64)
}

/// Squared norm h_k = ∫ [P_k^{(α,β)}]² (1−x)^α (1+x)^β dx.
pub fn jacobi_norm_sq(idx: JacobiIndex) -> f64 {
    let (a, b) = (idx.alpha, idx.beta);
    let k = idx.degree as f64;
    let ab = a + b;
    let pow2 = 2f64.powf(ab + 1.0);
    if idx.degree == 0 {
        // avoids the Γ(α+β+1)/(α+β+1) form, singular at α+β = −1
        return pow2 * gamma_ratio(&[a + 1.0, b + 1.0], &[ab + 2.0]);
    }
    pow2 * gamma_ratio(&[k + a + 1.0, k + b + 1.0], &[k + ab + 1.0, k + 1.0]) / (2.0 * k + ab + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(k: usize, a: f64, b: f64) -> JacobiIndex {
        JacobiIndex::new(k, a, b).unwrap()
    }

    #[test]
    fn degree_zero_is_one() {
        for &(a, b, x) in &[(0.0, 0.0, 0.3), (2.5, -0.5, -1.0), (4.0, 1.0, 0.99)] {
            assert_eq!(jacobi_p(idx(0, a, b), x).unwrap(), 1.0);
        }
    }

    #[test]
    fn degree_one_closed_form() {
        let v = jacobi_p(idx(1, 0.0, 1.0), 0.5).unwrap();
        assert!((v - 0.25).abs() < 1e-15);
    }

    #[test]
    fn symmetry_swaps_parameters() {
        let lhs = jacobi_p(idx(2, 0.0, 1.0), -0.3).unwrap();
        let rhs = jacobi_p(idx(2, 1.0, 0.0), 0.3).unwrap();
        assert!((lhs - rhs).abs() < 1e-15);
    }

    #[test]
    fn legendre_values() {
        // P_3(x) = (5x³ − 3x)/2
        let x: f64 = 0.37;
        let expect = (5.0 * x.powi(3) - 3.0 * x) / 2.0;
        assert!((jacobi_p(idx(3, 0.0, 0.0), x).unwrap() - expect).abs() < 1e-15);
    }

    #[test]
    fn value_at_one() {
        assert_eq!(jacobi_p_at_one(idx(0, 1.0, 0.0)), 1.0);
        assert!((jacobi_p_at_one(idx(3, 1.0, 0.0)) - 4.0).abs() < 1e-15);
        assert!((jacobi_p_at_one(idx(2, 1.0, 5.0)) - 3.0).abs() < 1e-15);
    }

    #[test]
    fn recurrence_agrees_with_value_at_one() {
        for k in 0..=20 {
            for &(a, b) in &[(0.0, 0.0), (1.0, 3.0), (2.0, 0.0), (0.5, 1.5), (4.0, 2.0)] {
                let i = idx(k, a, b);
                let r = jacobi_p(i, 1.0).unwrap();
                let e = jacobi_p_at_one(i);
                assert!((r - e).abs() <= 1e-13 * e.abs(), "k={k} a={a} b={b}");
            }
        }
    }

    #[test]
    fn domain_is_enforced() {
        assert!(jacobi_p(idx(2, 0.0, 0.0), 1.0 + 1e-13).is_ok());
        assert!(matches!(
            jacobi_p(idx(2, 0.0, 0.0), 1.1),
            Err(Error::Domain { .. })
        ));
        assert!(JacobiIndex::new(1, -1.0, 0.0).is_err());
        assert!(JacobiIndex::new(1, 0.0, -1.5).is_err());
    }

    #[test]
    fn norm_closed_forms() {
        // Legendre: 2/(2k+1); (α,β) = (1,0): 4/(2k+2)
        for k in 0..6 {
            let h = jacobi_norm_sq(idx(k, 0.0, 0.0));
            assert!((h - 2.0 / (2.0 * k as f64 + 1.0)).abs() < 1e-14);
            let h = jacobi_norm_sq(idx(k, 1.0, 0.0));
            assert!((h - 4.0 / (2.0 * k as f64 + 2.0)).abs() < 1e-14);
        }
    }
}
