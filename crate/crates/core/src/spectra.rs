//! Spectral data of the magnetic Laplacian Δ_ν and of the Fubini–Study
//! Laplacian Δ_FS = Δ_0 on CP^n.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{cos2_fs, ChordValue, ProjectivePoint};
use crate::specfun::gamma::gamma_ratio;
use crate::specfun::{hyp_2f1_terminating, jacobi_p_at_one, jacobi_p_unchecked, JacobiIndex};

/// (n, 2ν, m): complex dimension, twice the field strength, Landau level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LevelParams {
    pub n: usize,
    pub two_nu: usize,
    pub m: usize,
}

impl LevelParams {
    pub fn new(n: usize, two_nu: usize, m: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("complex dimension n must be >= 1".into()));
        }
        Ok(Self { n, two_nu, m })
    }

    pub fn nu(&self) -> f64 {
        self.two_nu as f64 / 2.0
    }

    /// λ = 2(m+ν) + n.
    pub fn lambda(&self) -> f64 {
        (2 * self.m + self.two_nu + self.n) as f64
    }

    /// Jacobi index of P_m^{(n−1, 2ν)}.
    pub fn jacobi(&self) -> JacobiIndex {
        JacobiIndex {
            degree: self.m,
            alpha: self.n as f64 - 1.0,
            beta: self.two_nu as f64,
        }
    }
}

impl std::fmt::Display for LevelParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(n={}, 2nu={}, m={})", self.n, self.two_nu, self.m)
    }
}

/// Eigenvalue index of −Δ_FS; the eigenvalue is Λ_k = 4k(k+n).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralIndex {
    pub k: usize,
    pub eigenvalue: f64,
}

impl SpectralIndex {
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            k,
            eigenvalue: laplacian_eigenvalue(n, k),
        }
    }
}

/// Λ_k = 4k(k+n).
pub fn laplacian_eigenvalue(n: usize, k: usize) -> f64 {
    4.0 * (k * (k + n)) as f64
}

fn binomial(n: u64, k: u64) -> u128 {
    (1..=k as u128).fold(1u128, |acc, j| acc * (n as u128 - k as u128 + j) / j)
}

/// Dimension of the spherical harmonics of bidegree (p, q) on S^{2n−1}.
///
/// Only defined for n ≥ 2, the formula involves (n−2)!.
pub fn dim_spherical(n: usize, p: usize, q: usize) -> Result<u128> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "dim_spherical is undefined for n = 1 (needs (n-2)!)".into(),
        ));
    }
    let (n, p, q) = (n as u64, p as u64, q as u64);
    let total = (p + q + n - 1) as u128 * binomial(p + n - 2, p) * binomial(q + n - 2, q);
    Ok(total / (n - 1) as u128)
}

/// Dimension of the generalized Bergman space A_m^ν(CP^n).
pub fn dim_level(p: LevelParams) -> Result<u64> {
    let (n, tn, m) = (p.n as f64, p.two_nu as f64, p.m as f64);
    let v = (2.0 * m + n + tn) / n
        * gamma_ratio(&[m + n, m + n + tn], &[n, n, m + 1.0, m + tn + 1.0]);
    let r = v.round();
    if (v - r).abs() >= 1e-6 * r.max(1.0) || r < 1.0 {
        return Err(Error::NonIntegral(v));
    }
    Ok(r as u64)
}

/// c = (2m+2ν+n) Γ(m+n+2ν) / (π^n Γ(m+2ν+1)).
pub fn norm_const_c(p: LevelParams) -> f64 {
    let (n, tn, m) = (p.n as f64, p.two_nu as f64, p.m as f64);
    (2.0 * m + tn + n) * gamma_ratio(&[m + n + tn], &[m + tn + 1.0]) / PI.powi(p.n as i32)
}

/// Diagonal value 𝒩 = c (n)_m / m! of the reproducing kernel.
pub fn normalization_n(p: LevelParams) -> f64 {
    norm_const_c(p) * jacobi_p_at_one(p.jacobi())
}

/// K(x) = c ((1+x)/2)^ν P_m^{(n−1,2ν)}(x).
pub fn reproducing_kernel(p: LevelParams, x: ChordValue) -> f64 {
    let j = p.jacobi();
    norm_const_c(p)
        * x.cos_sq().powf(p.nu())
        * jacobi_p_unchecked(j.degree, j.alpha, j.beta, x.value())
}

/// ψ_n(k; x) = (2k+n)Γ(n+k)/(π^n k!) · P_k^{(n−1,0)}(x) / P_k^{(n−1,0)}(1).
pub fn spectral_function_psi(n: usize, k: usize, x: ChordValue) -> f64 {
    let idx = JacobiIndex {
        degree: k,
        alpha: n as f64 - 1.0,
        beta: 0.0,
    };
    psi_prefactor(n, k) * jacobi_p_unchecked(k, idx.alpha, 0.0, x.value()) / jacobi_p_at_one(idx)
}

fn psi_prefactor(n: usize, k: usize) -> f64 {
    let (nf, kf) = (n as f64, k as f64);
    (2.0 * kf + nf) * gamma_ratio(&[nf + kf], &[kf + 1.0]) / PI.powi(n as i32)
}

/// Kernel of the orthogonal projector onto the k-th eigenspace of Δ_FS:
/// (2k+n)Γ(n+k)/(π^n k!) · P_k^{(n−1,0)}(x).
///
/// Differs from [`spectral_function_psi`] by the factor P_k^{(n−1,0)}(1),
/// which is 1 only for n = 1 or k = 0. Its diagonal times the volume is the
/// eigenspace dimension.
pub fn projection_kernel(n: usize, k: usize, x: ChordValue) -> f64 {
    psi_prefactor(n, k) * jacobi_p_unchecked(k, n as f64 - 1.0, 0.0, x.value())
}

/// Dimension of the k-th eigenspace of Δ_FS on CP^n.
pub fn laplacian_eigenspace_dim(n: usize, k: usize) -> u128 {
    let (n, k) = (n as u64, k as u64);
    let c = binomial(n + k - 1, k);
    (2 * k + n) as u128 * c * c / n as u128
}

/// One (p, q)-term of the eigenfunction expansion:
/// (1+|z|²)^{−(m+ν)} ₂F₁(p−m, q−m−2ν; n+p+q; −|z|²) h(z, z̄),
/// with h = z₁^p z̄₂^q for n ≥ 2 and h = z^p z̄^q (p·q = 0) for n = 1.
pub fn eigenfunction_radial(
    lp: LevelParams,
    pdeg: usize,
    qdeg: usize,
    z: &ProjectivePoint,
) -> Result<Complex64> {
    if z.dim() != lp.n {
        return Err(Error::DimensionMismatch {
            left: z.dim(),
            right: lp.n,
        });
    }
    if pdeg > lp.m || qdeg > lp.m + lp.two_nu {
        return Err(Error::InvalidParameter(format!(
            "need 0 <= p <= m and 0 <= q <= m + 2nu, got p={pdeg} q={qdeg} for {lp}"
        )));
    }
    if lp.n == 1 && pdeg * qdeg != 0 {
        return Err(Error::InvalidParameter(
            "for n = 1 only z^p or conj(z)^q is harmonic (p*q must be 0)".into(),
        ));
    }
    let c = z.coords();
    let h = if lp.n == 1 {
        c[0].powu(pdeg as u32) * c[0].conj().powu(qdeg as u32)
    } else {
        c[0].powu(pdeg as u32) * c[1].conj().powu(qdeg as u32)
    };
    let r2 = z.norm_sq();
    let (m, tn) = (lp.m as f64, lp.two_nu as f64);
    let f = hyp_2f1_terminating(
        pdeg as f64 - m,
        qdeg as f64 - m - tn,
        (lp.n + pdeg + qdeg) as f64,
        -r2,
    )?;
    Ok(h * (f * (1.0 + r2).powf(-(m + lp.nu()))))
}

/// Δ_ν f(z) by central differences of step `h` on the 2n real coordinates.
///
/// Δ_ν = 4(1+|z|²)[Σ(δ_ij + z_i z̄_j)∂_i∂̄_j + ν Σ(z_j∂_j − z̄_j∂̄_j) − ν²] + 4ν².
pub fn apply_delta_nu_fd<F>(lp: LevelParams, f: F, z: &ProjectivePoint, h: f64) -> Complex64
where
    F: Fn(&[Complex64]) -> Complex64,
{
    let n = z.dim();
    let base = z.coords().to_vec();
    let nu = lp.nu();
    // real coordinate a ↦ (entry a/2, real part if a even)
    let shift = |pt: &mut [Complex64], a: usize, d: f64| {
        if a % 2 == 0 {
            pt[a / 2].re += d;
        } else {
            pt[a / 2].im += d;
        }
    };
    let eval = |moves: &[(usize, f64)]| {
        let mut pt = base.clone();
        for &(a, d) in moves {
            shift(&mut pt, a, d);
        }
        f(&pt)
    };
    let f0 = f(&base);
    let dim = 2 * n;
    let mut grad = vec![Complex64::new(0.0, 0.0); dim];
    let mut hess = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
    for a in 0..dim {
        let fp = eval(&[(a, h)]);
        let fm = eval(&[(a, -h)]);
        grad[a] = (fp - fm) / (2.0 * h);
        hess[a][a] = (fp - 2.0 * f0 + fm) / (h * h);
        for b in (a + 1)..dim {
            let v = (eval(&[(a, h), (b, h)]) - eval(&[(a, h), (b, -h)]) - eval(&[(a, -h), (b, h)])
                + eval(&[(a, -h), (b, -h)]))
                / (4.0 * h * h);
            hess[a][b] = v;
            hess[b][a] = v;
        }
    }
    let i = Complex64::new(0.0, 1.0);
    let dz = |j: usize| 0.5 * (grad[2 * j] - i * grad[2 * j + 1]);
    let dzbar = |j: usize| 0.5 * (grad[2 * j] + i * grad[2 * j + 1]);
    let ddbar = |a: usize, b: usize| {
        let (xa, ya, xb, yb) = (2 * a, 2 * a + 1, 2 * b, 2 * b + 1);
        0.25 * (hess[xa][xb] + hess[ya][yb] + i * (hess[xa][yb] - hess[ya][xb]))
    };
    let mut second = Complex64::new(0.0, 0.0);
    for a in 0..n {
        for b in 0..n {
            let metric = if a == b { 1.0 } else { 0.0 } + base[a] * base[b].conj();
            second += metric * ddbar(a, b);
        }
    }
    let mut first = Complex64::new(0.0, 0.0);
    for j in 0..n {
        first += base[j] * dz(j) - base[j].conj() * dzbar(j);
    }
    let r2 = z.norm_sq();
    4.0 * (1.0 + r2) * (second + nu * first - nu * nu * f0) + 4.0 * nu * nu * f0
}

/// w ↦ K(cos 2d_FS(w, center)).
pub fn kernel_section(lp: LevelParams, center: &ProjectivePoint) -> impl Fn(&[Complex64]) -> Complex64 + '_ {
    move |w| {
        let pt = ProjectivePoint::new(w.to_vec()).expect("finite point");
        let x = cos2_fs(&pt, center).expect("dimensions agree");
        Complex64::new(reproducing_kernel(lp, x), 0.0)
    }
}

/// n² − λ² + 4ν² with λ = 2(m+ν)+n, equal to −4m(m+n) when ν = 0.
pub fn expected_eigenvalue(lp: LevelParams) -> f64 {
    let n = lp.n as f64;
    let nu = lp.nu();
    n * n - lp.lambda().powi(2) + 4.0 * nu * nu
}

/// Result of [`eigenvalue_probe`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EigenProbe {
    pub e_hat: f64,
    pub spread: f64,
    pub used_points: usize,
}

/// FD step used by the probes: 1e−3 (1 + |z|).
pub fn default_step(z: &ProjectivePoint) -> f64 {
    1e-3 * (1.0 + z.norm_sq().sqrt())
}

/// Median and spread of Δ_ν F / F over sample points.
pub fn ratio_probe<F>(lp: LevelParams, f: F, points: &[ProjectivePoint]) -> Result<EigenProbe>
where
    F: Fn(&[Complex64]) -> Complex64,
{
    if points.len() < 3 {
        return Err(Error::InvalidParameter("eigenvalue_probe needs at least 3 points".into()));
    }
    let mut ratios = Vec::with_capacity(points.len());
    let scale = points
        .iter()
        .map(|z| f(z.coords()).norm())
        .fold(0.0, f64::max);
    for z in points {
        let fz = f(z.coords());
        if fz.norm() <= 1e-8 * scale {
            continue;
        }
        // Richardson over h and h/2: near nodes of f the O(h²) error of a
        // single stencil, divided by a small |f|, swamps the ratio
        let h = default_step(z);
        let coarse = apply_delta_nu_fd(lp, &f, z, h);
        let fine = apply_delta_nu_fd(lp, &f, z, 0.5 * h);
        let r = (4.0 * fine - coarse) / 3.0 / fz;
        ratios.push(r.re);
    }
    if ratios.is_empty() {
        return Err(Error::AllSamplesSkipped);
    }
    let mut sorted = ratios.clone();
    sorted.sort_by(|a, b| a.total_cmp(b));
    let mid = sorted.len() / 2;
    let e_hat = if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        0.5 * (sorted[mid - 1] + sorted[mid])
    };
    let denom = e_hat.abs().max(1.0);
    let spread = ratios.iter().map(|r| (r - e_hat).abs() / denom).fold(0.0, f64::max);
    Ok(EigenProbe {
        e_hat,
        spread,
        used_points: ratios.len(),
    })
}

/// Δ_ν K_section / K_section over the sample points, with the section
/// centred at the chart origin.
pub fn eigenvalue_probe(lp: LevelParams, points: &[ProjectivePoint]) -> Result<EigenProbe> {
    let center = ProjectivePoint::origin(lp.n);
    ratio_probe(lp, kernel_section(lp, &center), points)
}

/// Fixed chart points for finite-difference probes, |z| of order one.
pub fn probe_points(n: usize) -> Vec<ProjectivePoint> {
    const RAW: [[f64; 6]; 5] = [
        [0.3, -0.2, 0.5, 0.1, -0.4, 0.2],
        [-0.7, 0.4, 0.2, -0.3, 0.1, 0.6],
        [1.1, 0.6, -0.4, 0.8, 0.3, -0.5],
        [0.05, 0.9, 0.3, 0.3, -0.2, -0.1],
        [-1.3, -0.2, 0.6, 0.1, 0.7, 0.4],
    ];
    RAW.iter()
        .map(|r| {
            let z = (0..n).map(|j| Complex64::new(r[(2 * j) % 6], r[(2 * j + 1) % 6]));
            ProjectivePoint::new(z.collect()).expect("finite coordinates")
        })
        .collect()
}
