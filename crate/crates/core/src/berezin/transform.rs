use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::berezin_kernel;
use crate::error::{Error, Result};
use crate::geometry::{cos2_fs, mc_mean, radial_integral_with_order, volume, ChordValue, ProjectivePoint};
use crate::specfun::gauss_jacobi_rule;
use crate::spectra::{spectral_function_psi, LevelParams};

/// Σ_k coeffs[k] ψ_n(k; x).
pub fn spectral_synthesis(n: usize, coeffs: &BTreeMap<usize, f64>, x: ChordValue) -> f64 {
    coeffs
        .iter()
        .map(|(&k, &c)| c * spectral_function_psi(n, k, x))
        .sum()
}

type Profile = Box<dyn Fn(f64) -> f64 + Send + Sync>;
type Field = Box<dyn Fn(&ProjectivePoint) -> f64 + Send + Sync>;

/// A bounded real function on CP^n.
pub enum Observable {
    Constant(f64),
    /// g(cos 2d_FS(center, ·)).
    Zonal { center: ProjectivePoint, profile: Profile },
    General(Field),
}

impl Observable {
    pub fn zonal(center: ProjectivePoint, profile: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Observable::Zonal {
            center,
            profile: Box::new(profile),
        }
    }

    pub fn general(f: impl Fn(&ProjectivePoint) -> f64 + Send + Sync + 'static) -> Self {
        Observable::General(Box::new(f))
    }

    /// The chord variable cos 2d_FS(center, ·).
    pub fn chord(center: ProjectivePoint) -> Self {
        Self::zonal(center, |x| x)
    }

    /// ψ_n(k; ·, center).
    pub fn psi(k: usize, center: ProjectivePoint) -> Self {
        let n = center.dim();
        Self::zonal(center, move |x| {
            spectral_function_psi(n, k, ChordValue::new(x).expect("chord values are clamped"))
        })
    }

    pub fn eval(&self, w: &ProjectivePoint) -> Result<f64> {
        Ok(match self {
            Observable::Constant(c) => *c,
            Observable::Zonal { center, profile } => profile(cos2_fs(center, w)?.value()),
            Observable::General(f) => f(w),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum IntegrationMethod {
    /// Gauss–Jacobi in the chord variable; needs an observable that is
    /// zonal about the evaluation point.
    Radial { order: usize },
    MonteCarlo { seed: u64, count: usize },
    /// Product Gauss–Legendre × trapezoid rule on CP¹ only.
    Tensor { order: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TransformValue {
    pub value: f64,
    pub std_error: Option<f64>,
}

/// B_m^ν[f](z) = ∫ B(cos 2d_FS(z, w)) f(w) dμ_n(w).
pub fn berezin_apply(p: LevelParams, f: &Observable, z: &ProjectivePoint, method: IntegrationMethod) -> Result<TransformValue> {
    if z.dim() != p.n {
        return Err(Error::DimensionMismatch {
            left: p.n,
            right: z.dim(),
        });
    }
    match method {
        IntegrationMethod::Radial { order } => {
            let scale: &(dyn Fn(f64) -> f64 + Sync) = match f {
                Observable::Constant(c) => &move |_| *c,
                Observable::Zonal { center, profile } => {
                    if cos2_fs(center, z)?.value() < 1.0 - 1e-12 {
                        return Err(Error::MethodMismatch(
                            "radial integration needs an observable centred at the evaluation point".into(),
                        ));
                    }
                    profile.as_ref()
                }
                Observable::General(_) => {
                    return Err(Error::MethodMismatch(
                        "radial integration needs a zonal observable".into(),
                    ))
                }
            };
            let value = radial_integral_with_order(p.n, order, |x| {
                berezin_kernel(p, ChordValue::new(x).expect("node in (-1, 1)")) * scale(x)
            })?;
            Ok(TransformValue { value, std_error: None })
        }
        IntegrationMethod::MonteCarlo { seed, count } => {
            let est = mc_mean(p.n, seed, count, |w| {
                let x = cos2_fs(z, w).expect("dimensions checked");
                berezin_kernel(p, x) * f.eval(w).expect("dimensions checked")
            })?
            .scaled(volume(p.n));
            Ok(TransformValue {
                value: est.mean,
                std_error: Some(est.std_error),
            })
        }
        IntegrationMethod::Tensor { order } => {
            if p.n != 1 {
                return Err(Error::MethodMismatch("tensor quadrature is only provided for n = 1".into()));
            }
            if let Observable::Zonal { center, .. } = f {
                if center.dim() != 1 {
                    return Err(Error::DimensionMismatch { left: 1, right: center.dim() });
                }
            }
            let value = tensor_integral_cp1(order, |w| {
                let x = cos2_fs(z, w).expect("dimensions checked");
                berezin_kernel(p, x) * f.eval(w).expect("dimensions checked")
            })?;
            Ok(TransformValue { value, std_error: None })
        }
    }
}

/// ∫_{CP¹} f dμ₁ with u = |w|²/(1+|w|²), so that dμ₁ = ½ du dθ.
fn tensor_integral_cp1(order: usize, f: impl Fn(&ProjectivePoint) -> f64) -> Result<f64> {
    let rule = gauss_jacobi_rule(order, 0.0, 0.0)?;
    let angles = 2 * order;
    let mut acc = crate::specfun::CompensatedSum::new();
    for (&xi, &wi) in rule.nodes.iter().zip(&rule.weights) {
        let u = 0.5 * (1.0 + xi);
        let r = (u / (1.0 - u)).sqrt();
        for j in 0..angles {
            let th = 2.0 * PI * j as f64 / angles as f64;
            let w = ProjectivePoint::new(vec![Complex64::from_polar(r, th)])?;
            acc.add(wi * f(&w));
        }
    }
    // ½ (Legendre Jacobian ½) (trapezoid 2π/M)
    Ok(acc.value() * 0.25 * 2.0 * PI / angles as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::berezin::{berezin_multiplier, w_oracle};
    use crate::geometry::DEFAULT_RADIAL_ORDER;
    use crate::spectra::projection_kernel;

    const RADIAL: IntegrationMethod = IntegrationMethod::Radial {
        order: DEFAULT_RADIAL_ORDER,
    };

    fn lp(n: usize, tn: usize, m: usize) -> LevelParams {
        LevelParams::new(n, tn, m).unwrap()
    }

    /// Chart point from (re, im) pairs.
    fn point(c: &[f64]) -> ProjectivePoint {
        ProjectivePoint::new(c.chunks(2).map(|p| Complex64::new(p[0], p[1])).collect()).unwrap()
    }

    #[test]
    fn synthesis_examples() {
        let mut c = BTreeMap::new();
        assert_eq!(spectral_synthesis(2, &c, ChordValue::new(0.3).unwrap()), 0.0);
        c.insert(0, 1.0);
        for n in 1..4 {
            let want = crate::specfun::gamma::gamma(n as f64 + 1.0) / PI.powi(n as i32);
            let got = spectral_synthesis(n, &c, ChordValue::new(-0.4).unwrap());
            assert!((got - want).abs() < 1e-14);
        }
    }

    #[test]
    fn synthesis_reconstructs_kernel() {
        for p in [lp(1, 1, 1), lp(2, 2, 1), lp(3, 1, 2), lp(1, 0, 1)] {
            let coeffs: BTreeMap<usize, f64> = (0..=p.two_nu + 2 * p.m + 1).map(|k| (k, w_oracle(p, k))).collect();
            for i in 0..=100 {
                let x = ChordValue::new(-1.0 + 0.02 * i as f64).unwrap();
                let d = spectral_synthesis(p.n, &coeffs, x) - berezin_kernel(p, x);
                assert!(d.abs() < 1e-9, "{p} {}: {d}", x.value());
            }
        }
    }

    #[test]
    fn constants_are_preserved() {
        for p in [lp(1, 0, 0), lp(2, 3, 2), lp(3, 4, 4)] {
            let n = p.n;
            let z = point(&vec![0.3; 2 * n]);
            let v = berezin_apply(p, &Observable::Constant(1.0), &z, RADIAL).unwrap();
            assert!((v.value - 1.0).abs() < 1e-10);
            assert!(v.std_error.is_none());
        }
    }

    #[test]
    fn chord_at_the_pole() {
        let z = ProjectivePoint::origin(1);
        let v = berezin_apply(lp(1, 1, 0), &Observable::chord(z.clone()), &z, RADIAL).unwrap();
        assert!((v.value - 1.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn radial_requires_matching_centre() {
        let p = lp(1, 1, 0);
        let z = point(&[0.5, 0.0]);
        let f = Observable::chord(ProjectivePoint::origin(1));
        assert!(matches!(berezin_apply(p, &f, &z, RADIAL), Err(Error::MethodMismatch(_))));
        let g = Observable::general(|w| w.norm_sq().min(1.0));
        assert!(matches!(berezin_apply(p, &g, &z, RADIAL), Err(Error::MethodMismatch(_))));
        assert!(berezin_apply(p, &g, &point(&[0.0; 4]), RADIAL).is_err());
    }

    #[test]
    fn tensor_rule_matches_radial() {
        let p = lp(1, 2, 1);
        let z = ProjectivePoint::origin(1);
        let t = IntegrationMethod::Tensor { order: 40 };
        let one = berezin_apply(p, &Observable::Constant(1.0), &z, t).unwrap();
        assert!((one.value - 1.0).abs() < 1e-12);
        let f = Observable::chord(z.clone());
        let a = berezin_apply(p, &f, &z, t).unwrap().value;
        let b = berezin_apply(p, &f, &z, RADIAL).unwrap().value;
        assert!((a - b).abs() < 1e-12);
        assert!(berezin_apply(lp(2, 0, 0), &Observable::Constant(1.0), &ProjectivePoint::origin(2), t).is_err());
    }

    #[test]
    fn tensor_rule_on_off_centre_spherical_functions() {
        // B acts on P_k(cos 2d(·, w0)) by the multiplier, for any z
        let p = lp(1, 1, 1);
        let w0 = point(&[0.4, -0.2]);
        let z = point(&[-0.3, 0.7]);
        for k in 0..4 {
            let f = Observable::zonal(w0.clone(), move |x| projection_kernel(1, k, ChordValue::new(x).unwrap()));
            let got = berezin_apply(p, &f, &z, IntegrationMethod::Tensor { order: 48 }).unwrap().value;
            let want = berezin_multiplier(p, k) * f.eval(&z).unwrap();
            assert!((got - want).abs() < 1e-11, "k={k}: {got} {want}");
        }
    }

    #[test]
    fn monte_carlo_is_reproducible() {
        let p = lp(2, 1, 1);
        let z = point(&[0.1, 0.2, -0.3, 0.0]);
        let f = Observable::chord(ProjectivePoint::origin(2));
        let mc = IntegrationMethod::MonteCarlo { seed: 3, count: 20_000 };
        let a = berezin_apply(p, &f, &z, mc).unwrap();
        let b = berezin_apply(p, &f, &z, mc).unwrap();
        assert_eq!(a, b);
        assert!(a.std_error.unwrap() > 0.0);
    }
}
