//! The Berezin transform B_m^ν and its variational weight W.
//!
//! Three realisations of W are kept side by side and never merged:
//!
//! * [`w_formula`]: the closed ₄F₃ expression, evaluated at R_n(Λ_k) = k;
//! * [`w_oracle`]: Gauss–Jacobi projection of the Berezin kernel on the
//!   spectral functions ψ_n(k; ·), treated as ground truth for the
//!   expansion B = Σ_k W_k ψ_n(k; ·);
//! * [`weierstrass_w`]: the infinite product for n = 1, m = 0.
//!
//! [`berezin_multiplier`] is the eigenvalue of B on the k-th eigenspace of
//! Δ_FS, i.e. the expansion coefficient against the true projection kernel.

mod linearization;
mod transform;
mod weierstrass;
mod wtable;

pub use linearization::{linearization_check, LinearizationReport, LinearizationRow};
pub use transform::{
    berezin_apply, spectral_synthesis, IntegrationMethod, Observable, TransformValue,
};
pub use weierstrass::{berezin_closed_form_n1, weierstrass_w, weierstrass_w_limit, weierstrass_w_telescoped};
pub use wtable::{build_wtable, build_wtable_to, WRow, WTable};

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{radial_integral_with_order, ChordValue};
use crate::specfun::gamma::gamma_ratio;
use crate::specfun::{hyp_pfq_dd, jacobi_p_at_one, jacobi_p_unchecked, DoubleDouble, JacobiIndex};
use crate::spectra::{norm_const_c, LevelParams};

/// B(x) = (c / P_m(1)) ((1+x)/2)^{2ν} [P_m^{(n−1,2ν)}(x)]², equal to K(x)²/𝒩.
pub fn berezin_kernel(p: LevelParams, x: ChordValue) -> f64 {
    let j = p.jacobi();
    let pm = jacobi_p_unchecked(j.degree, j.alpha, j.beta, x.value());
    norm_const_c(p) / jacobi_p_at_one(j) * x.cos_sq().powi(p.two_nu as i32) * pm * pm
}

/// R_n(Λ) = (√(n²+Λ) − n)/2, the inverse of k ↦ 4k(k+n).
pub fn r_inverse(n: usize, lambda: f64) -> Result<f64> {
    if !(lambda >= 0.0) {
        return Err(Error::Domain {
            what: "Lambda",
            value: lambda,
            domain: "Lambda >= 0",
        });
    }
    let nf = n as f64;
    Ok(((nf * nf + lambda).sqrt() - nf) / 2.0)
}

/// γ = (2m+2ν+n)(m+2ν+1)_{n−1} ((2ν+m)!)² (n−1)! / ((n)_m m!).
pub fn gamma_factor(p: LevelParams) -> f64 {
    let (n, tn, m) = (p.n as f64, p.two_nu as f64, p.m as f64);
    let rising = |a: f64, k: usize| (0..k).fold(1.0, |acc, j| acc * (a + j as f64));
    (2.0 * m + tn + n) * rising(m + tn + 1.0, p.n - 1) * gamma_ratio(&[tn + m + 1.0, tn + m + 1.0, n], &[m + 1.0])
        / rising(n, p.m)
}

/// W at the eigenvalue Λ_k = 4k(k+n), i.e. with R_n(Λ_k) = k.
///
/// For k > 2ν the prefactor 1/Γ(2ν−k+1) is zero and the value is exactly 0.
pub fn w_formula(p: LevelParams, k: usize) -> Result<f64> {
    w_formula_at(p, k as f64)
}

/// W(Λ) for any Λ ≥ 0.
pub fn w_formula_lambda(p: LevelParams, lambda: f64) -> Result<f64> {
    w_formula_at(p, r_inverse(p.n, lambda)?)
}

fn w_formula_at(p: LevelParams, r: f64) -> Result<f64> {
    let (n, tn, m) = (p.n as f64, p.two_nu as f64, p.m as f64);
    let pre = gamma_factor(p)
        * gamma_ratio(&[r + 1.0], &[n + r, tn - r + 1.0, n + r + tn + 1.0]);
    if pre == 0.0 {
        return Ok(0.0);
    }
    let lower_s = [tn - r + 1.0, n + tn + r + 1.0];
    let mut acc = DoubleDouble::ZERO;
    let mut weight = DoubleDouble::ONE;
    for s in 0..=p.m {
        let sf = s as f64;
        if s > 0 {
            let den = lower_s[0] + sf - 1.0;
            if den == 0.0 {
                return Err(Error::DegenerateDenominator {
                    parameter: lower_s[0],
                    index: s,
                });
            }
            weight = weight
                * DoubleDouble::from(-m + sf - 1.0)
                * DoubleDouble::from(tn + sf)
                * DoubleDouble::from(tn + m + n + sf - 1.0)
                / (DoubleDouble::from(sf)
                    * DoubleDouble::from(den)
                    * DoubleDouble::from(lower_s[1] + sf - 1.0));
        }
        if weight.is_zero() {
            break;
        }
        let f43 = hyp_pfq_dd(
            &[-m, tn + 1.0 + sf, tn + 1.0 + sf, tn + m + n],
            &[tn - r + 1.0 + sf, n + tn + 1.0 + r + sf, tn + 1.0],
            1.0,
        )?;
        acc += weight * f43;
    }
    let v = pre * acc.to_f64();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow(format!("w_formula {p} at R = {r}")))
    }
}

/// Gauss–Jacobi size that integrates B · P_k exactly against (1−x)^{n−1}.
pub fn oracle_order(p: LevelParams, k: usize) -> usize {
    (p.two_nu + 2 * p.m + k) / 2 + 2
}

fn psi_jacobi(n: usize, k: usize) -> JacobiIndex {
    JacobiIndex {
        degree: k,
        alpha: n as f64 - 1.0,
        beta: 0.0,
    }
}

/// Coefficient of ψ_n(k; ·) in the expansion of the Berezin kernel.
pub fn w_oracle(p: LevelParams, k: usize) -> f64 {
    let (n, kf) = (p.n as f64, k as f64);
    let pk1 = jacobi_p_at_one(psi_jacobi(p.n, k));
    let inv_norm = pk1 * PI.powi(p.n as i32) * gamma_ratio(&[kf + 1.0], &[n + kf]) / (2.0 * kf + n);
    let proj = (2.0 * kf + n) / 2f64.powi(p.n as i32);
    let rule = crate::specfun::gauss_jacobi_rule(oracle_order(p, k), n - 1.0, 0.0)
        .expect("Jacobi weights with alpha = n-1 >= 0 are valid");
    let integral = rule.integrate(|x| {
        berezin_kernel(p, ChordValue::new(x).expect("quadrature nodes lie in (-1, 1)"))
            * jacobi_p_unchecked(k, n - 1.0, 0.0, x)
    });
    inv_norm * proj * integral
}

/// Eigenvalue of B_m^ν on the k-th eigenspace of Δ_FS:
/// ∫ B(cos 2d(0,w)) P_k(cos 2d(0,w)) dμ_n(w) / P_k(1).
pub fn berezin_multiplier(p: LevelParams, k: usize) -> f64 {
    let order = oracle_order(p, k);
    let pk1 = jacobi_p_at_one(psi_jacobi(p.n, k));
    let n1 = p.n as f64 - 1.0;
    radial_integral_with_order(p.n, order, |x| {
        berezin_kernel(p, ChordValue::new(x).expect("node in (-1, 1)")) * jacobi_p_unchecked(k, n1, 0.0, x)
    })
    .expect("valid radial rule")
        / pk1
}
