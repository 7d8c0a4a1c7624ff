//! Jacobi product linearization
//!
//! t^μ [P_m^{(α₁,β)}(1−2t)]² = Σ_k c_k P_k^{(α,β)}(1−2t)
//!
//! against the Kampé de Fériet closed form for c_k, k ≤ μ. The left side is
//! projected exactly in rational arithmetic, so the oracle has no rounding.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::specfun::{kdf_f2222, KdFParams};

type Poly = Vec<BigRational>;

fn rat(x: f64) -> Result<BigRational> {
    BigRational::from_float(x).ok_or(Error::Domain {
        what: "linearization parameter",
        value: x,
        domain: "finite",
    })
}

fn int(k: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

fn rising(a: &BigRational, k: usize) -> BigRational {
    (0..k).fold(BigRational::one(), |acc, j| acc * (a + int(j)))
}

/// Coefficients in t of P_k^{(a,b)}(1−2t).
fn jacobi_in_t(k: usize, a: &BigRational, b: &BigRational) -> Poly {
    let one = BigRational::one();
    let lead = rising(&(a + &one), k) / rising(&one, k);
    let apb = a + b + &one + int(k);
    let mut out = Vec::with_capacity(k + 1);
    let mut term = lead;
    for j in 0..=k {
        out.push(term.clone());
        if j < k {
            // (−k)_j (k+a+b+1)_j / ((a+1)_j j!)
            let jj = int(j);
            term = term * (int(j) - int(k)) * (&apb + &jj) / ((a + &one + &jj) * (&jj + &one));
        }
    }
    out
}

fn mul(p: &Poly, q: &Poly) -> Poly {
    let mut out = vec![BigRational::zero(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// Exact coefficients of `p` in the basis P_k^{(a,b)}(1−2t), k = 0..=deg p.
fn project(mut p: Poly, a: &BigRational, b: &BigRational) -> Vec<BigRational> {
    let deg = p.len() - 1;
    let mut coeffs = vec![BigRational::zero(); deg + 1];
    for k in (0..=deg).rev() {
        let q = jacobi_in_t(k, a, b);
        let c = &p[k] / &q[k];
        for (i, qi) in q.iter().enumerate() {
            p[i] -= &c * qi;
        }
        coeffs[k] = c;
    }
    coeffs
}

#[derive(Clone, Debug, Serialize)]
pub struct LinearizationRow {
    pub k: usize,
    /// Exact projection coefficient, rounded once.
    pub projection: f64,
    /// Closed form; `None` when its Kampé de Fériet parameters are degenerate.
    pub formula: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LinearizationReport {
    pub max_residual_low: f64,
    pub residual_tail: f64,
    pub rows: Vec<LinearizationRow>,
}

fn formula_coefficient(alpha1: f64, beta: f64, alpha: f64, mu: usize, m: usize, k: usize) -> Result<f64> {
    let (muf, mf, kf) = (mu as f64, m as f64, k as f64);
    let rise = |a: f64, n: usize| (0..n).fold(1.0, |acc, j| acc * (a + j as f64));
    let binom = rise(alpha1 + 1.0, m) / rise(1.0, m);
    let pre = rise(alpha + 1.0, mu) * binom * binom * (alpha + beta + 2.0 * kf + 1.0) * rise(-muf, k)
        / (rise(alpha + 1.0, k) * rise(alpha + beta + kf + 1.0, mu + 1));
    let upper = alpha1 + beta + mf + 1.0;
    let kdf = kdf_f2222(&KdFParams::new(
        [muf + 1.0, alpha + muf + 1.0],
        [-mf, upper, -mf, upper],
        [muf - kf + 1.0, alpha + beta + muf + 2.0 + kf],
        [alpha1 + 1.0, alpha1 + 1.0],
    )?)?;
    Ok(pre * kdf)
}

pub fn linearization_check(alpha1: f64, beta: f64, alpha: f64, mu: usize, m: usize) -> Result<LinearizationReport> {
    for (what, v) in [("alpha1", alpha1), ("beta", beta), ("alpha", alpha)] {
        if !(v > -1.0) {
            return Err(Error::Domain {
                what,
                value: v,
                domain: "> -1",
            });
        }
    }
    let (a1, b, a) = (rat(alpha1)?, rat(beta)?, rat(alpha)?);
    let pm = jacobi_in_t(m, &a1, &b);
    let mut lhs = vec![BigRational::zero(); mu];
    lhs.extend(mul(&pm, &pm));
    let coeffs = project(lhs, &a, &b);

    let mut rows = Vec::with_capacity(coeffs.len());
    let mut max_low = 0.0f64;
    let mut tail = BigRational::zero();
    for (k, c) in coeffs.iter().enumerate() {
        let projection = c.to_f64().unwrap_or(f64::NAN);
        let formula = formula_coefficient(alpha1, beta, alpha, mu, m, k).ok();
        if k <= mu {
            let r = formula.map_or(f64::INFINITY, |f| (f - projection).abs());
            max_low = max_low.max(r);
        } else {
            tail += c.abs();
        }
        rows.push(LinearizationRow { k, projection, formula });
    }
    Ok(LinearizationReport {
        max_residual_low: max_low,
        residual_tail: tail.to_f64().unwrap_or(f64::NAN),
        rows,
    })
}
