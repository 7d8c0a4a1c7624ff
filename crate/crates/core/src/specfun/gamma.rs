//! Gamma-function helpers with sign tracking.

use std::f64::consts::PI;

/// True when `x` is 0, −1, −2, … up to a tolerance of 1e−12.
pub fn is_nonpositive_integer(x: f64) -> bool {
    x <= 1e-12 && (x - x.round()).abs() < 1e-12
}

/// `ln|Γ(x)|` together with the sign of `Γ(x)`.
///
/// At the poles (nonpositive integers) the sign is `0` and the logarithm is `+∞`.
pub fn ln_gamma_signed(x: f64) -> (f64, f64) {
    if is_nonpositive_integer(x) {
        return (f64::INFINITY, 0.0);
    }
    if x >= 0.5 {
        return (statrs::function::gamma::ln_gamma(x), 1.0);
    }
    // reflection: Γ(x)Γ(1−x) = π / sin(πx), with Γ(1−x) > 0 here
    let s = (PI * x).sin();
    let ln = (PI / s.abs()).ln() - statrs::function::gamma::ln_gamma(1.0 - x);
    (ln, s.signum())
}

/// Γ(x); exact products for small positive integers.
pub fn gamma(x: f64) -> f64 {
    if x > 0.0 && x.fract() == 0.0 && x <= 171.0 {
        return factorial(x as u32 - 1);
    }
    let (ln, sign) = ln_gamma_signed(x);
    if sign == 0.0 {
        return f64::NAN;
    }
    sign * ln.exp()
}

/// 1/Γ(x), exactly zero at the poles.
pub fn recip_gamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    1.0 / gamma(x)
}

pub fn factorial(k: u32) -> f64 {
    (2..=k).fold(1.0, |acc, j| acc * j as f64)
}

/// ∏Γ(num_i) / ∏Γ(den_j) through log-gamma differences.
///
/// Returns exactly 0 when any denominator argument sits on a pole; a pole in
/// the numerator yields `±∞` (or NaN if it is cancelled by a denominator pole).
pub fn gamma_ratio(num: &[f64], den: &[f64]) -> f64 {
    if den.iter().any(|&d| is_nonpositive_integer(d)) {
        return 0.0;
    }
    // direct products are exact for integer arguments; fall back to logs on overflow
    let small = |x: &f64| x.abs() <= 170.0;
    if num.iter().all(small) && den.iter().all(small) {
        let mut v: f64 = 1.0;
        let (mut i, mut j) = (0, 0);
        while i < num.len() || j < den.len() {
            if i < num.len() && (v.abs() <= 1.0 || j == den.len()) {
                v *= gamma(num[i]);
                i += 1;
            } else {
                v /= gamma(den[j]);
                j += 1;
            }
        }
        if v.is_finite() && v != 0.0 {
            return v;
        }
    }
    let mut ln = 0.0;
    let mut sign = 1.0;
    for &d in den {
        let (l, s) = ln_gamma_signed(d);
        if s == 0.0 {
            return 0.0;
        }
        ln -= l;
        sign *= s;
    }
    for &a in num {
        let (l, s) = ln_gamma_signed(a);
        if s == 0.0 {
            return f64::INFINITY * sign;
        }
        ln += l;
        sign *= s;
    }
    sign * ln.exp()
}
