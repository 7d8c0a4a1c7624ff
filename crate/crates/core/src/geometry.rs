//! CP^n in the affine chart z ∈ C^n: Fubini–Study distance, the measure
//! dμ_n(w) = (1+|w|²)^{−(n+1)} dw, a sampler for its normalisation, and
//! exact radial reduction of biinvariant integrals.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::specfun::gamma::gamma;
use crate::specfun::{gauss_jacobi_rule, CompensatedSum};

/// Points handed to one RNG stream by the sampler.
pub const SAMPLE_CHUNK: usize = 4096;

/// Default Gauss–Jacobi size used by [`radial_integral`].
pub const DEFAULT_RADIAL_ORDER: usize = 48;

/// A point of CP^n given by its affine-chart coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectivePoint {
    z: Vec<Complex64>,
}

impl ProjectivePoint {
    pub fn new(z: Vec<Complex64>) -> Result<Self> {
        if z.is_empty() {
            return Err(Error::InvalidParameter("a point of CP^n needs n >= 1 coordinates".into()));
        }
        if z.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::InvalidParameter(format!("non-finite coordinate in {z:?}")));
        }
        Ok(Self { z })
    }

    /// The chart origin [1:0:…:0].
    pub fn origin(n: usize) -> Self {
        Self {
            z: vec![Complex64::new(0.0, 0.0); n],
        }
    }

    pub fn from_real(coords: &[f64]) -> Result<Self> {
        Self::new(coords.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn dim(&self) -> usize {
        self.z.len()
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.z
    }

    /// |z|².
    pub fn norm_sq(&self) -> f64 {
        self.z.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Homogeneous coordinates [1 : z].
    pub fn homogeneous(&self) -> Vec<Complex64> {
        std::iter::once(Complex64::new(1.0, 0.0))
            .chain(self.z.iter().copied())
            .collect()
    }
}

/// x = cos 2d_FS ∈ [−1, 1].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ChordValue(f64);

impl ChordValue {
    pub fn new(x: f64) -> Result<Self> {
        if !(x.abs() <= 1.0) {
            return Err(Error::Domain {
                what: "chord value",
                value: x,
                domain: "[-1, 1]",
            });
        }
        Ok(Self(x))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// cos² d_FS = (1+x)/2.
    pub fn cos_sq(self) -> f64 {
        (1.0 + self.0) / 2.0
    }

    /// d_FS ∈ [0, π/2].
    pub fn distance(self) -> f64 {
        self.cos_sq().sqrt().min(1.0).acos()
    }
}

fn check_dims(z: &ProjectivePoint, w: &ProjectivePoint) -> Result<()> {
    if z.dim() != w.dim() {
        return Err(Error::DimensionMismatch {
            left: z.dim(),
            right: w.dim(),
        });
    }
    Ok(())
}

/// cos 2d_FS(z, w) = 2|1+⟨z,w⟩|²/((1+|z|²)(1+|w|²)) − 1.
pub fn cos2_fs(z: &ProjectivePoint, w: &ProjectivePoint) -> Result<ChordValue> {
    check_dims(z, w)?;
    let inner: Complex64 = z
        .z
        .iter()
        .zip(&w.z)
        .map(|(a, b)| a * b.conj())
        .sum::<Complex64>()
        + 1.0;
    let x = 2.0 * inner.norm_sqr() / ((1.0 + z.norm_sq()) * (1.0 + w.norm_sq())) - 1.0;
    // rounding near coincident or antipodal points
    Ok(ChordValue(x.clamp(-1.0, 1.0)))
}

/// Fubini–Study distance in radians, in [0, π/2].
pub fn fs_distance(z: &ProjectivePoint, w: &ProjectivePoint) -> Result<f64> {
    Ok(cos2_fs(z, w)?.distance())
}

/// Density of dμ_n against Lebesgue measure on C^n.
pub fn mu_density(w: &ProjectivePoint) -> f64 {
    (1.0 + w.norm_sq()).powi(-(w.dim() as i32 + 1))
}

/// Total mass π^n / n! of dμ_n.
pub fn volume(n: usize) -> f64 {
    PI.powi(n as i32) / gamma(n as f64 + 1.0)
}

/// ∫_{CP^n} g(cos 2d_FS(z, w)) dμ_n(w), reduced to
/// (π^n/Γ(n)) 2^{−n} ∫_{−1}^{1} g(x)(1−x)^{n−1} dx.
pub fn radial_integral<G: Fn(f64) -> f64>(n: usize, g: G) -> Result<f64> {
    radial_integral_with_order(n, DEFAULT_RADIAL_ORDER, g)
}

/// As [`radial_integral`], with an explicit Gauss–Jacobi size.
pub fn radial_integral_with_order<G: Fn(f64) -> f64>(n: usize, order: usize, g: G) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter("dimension n must be >= 1".into()));
    }
    let rule = gauss_jacobi_rule(order, n as f64 - 1.0, 0.0)?;
    let scale = PI.powi(n as i32) / gamma(n as f64) * 0.5f64.powi(n as i32);
    Ok(scale * rule.integrate(g))
}

fn chunk_rng(seed: u64, chunk: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk as u64);
    rng
}

fn draw_point<R: Rng>(n: usize, rng: &mut R) -> Result<ProjectivePoint> {
    let mut u = vec![Complex64::new(0.0, 0.0); n + 1];
    for _ in 0..1000 {
        for c in u.iter_mut() {
            *c = Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
        }
        let total: f64 = u.iter().map(|c| c.norm_sqr()).sum();
        if u[0].norm_sqr() >= 1e-18 * total {
            let u0 = u[0];
            return Ok(ProjectivePoint {
                z: u[1..].iter().map(|c| c / u0).collect(),
            });
        }
    }
    Err(Error::ChartSingularity("1000 consecutive sampler rejections".into()))
}

fn chunk_points(n: usize, seed: u64, chunk: usize, len: usize) -> Result<Vec<ProjectivePoint>> {
    let mut rng = chunk_rng(seed, chunk);
    (0..len).map(|_| draw_point(n, &mut rng)).collect()
}

fn chunk_lengths(count: usize) -> impl IndexedParallelIterator<Item = (usize, usize)> {
    let chunks = count.div_ceil(SAMPLE_CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(move |c| (c, SAMPLE_CHUNK.min(count - c * SAMPLE_CHUNK)))
}

/// `count` i.i.d. points with law dμ_n / (π^n/n!).
///
/// Each block of [`SAMPLE_CHUNK`] points has its own ChaCha stream, so the
/// sequence depends only on `seed`, never on the worker count.
pub fn sample_fs(n: usize, seed: u64, count: usize) -> Result<Vec<ProjectivePoint>> {
    if n == 0 || count == 0 {
        return Err(Error::InvalidParameter("sample_fs needs n >= 1 and count >= 1".into()));
    }
    let blocks: Vec<Vec<ProjectivePoint>> = chunk_lengths(count)
        .map(|(c, len)| chunk_points(n, seed, c, len))
        .collect::<Result<_>>()?;
    Ok(blocks.into_iter().flatten().collect())
}

/// Sample mean with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub count: usize,
}

impl McEstimate {
    pub fn scaled(self, factor: f64) -> Self {
        Self {
            mean: self.mean * factor,
            std_error: self.std_error * factor.abs(),
            count: self.count,
        }
    }
}

/// Mean of `f` over `count` points of [`sample_fs`] without storing them.
pub fn mc_mean<F>(n: usize, seed: u64, count: usize, f: F) -> Result<McEstimate>
where
    F: Fn(&ProjectivePoint) -> f64 + Sync,
{
    if n == 0 || count < 2 {
        return Err(Error::InvalidParameter("mc_mean needs n >= 1 and count >= 2".into()));
    }
    let partials: Vec<(f64, f64)> = chunk_lengths(count)
        .map(|(c, len)| {
            let mut rng = chunk_rng(seed, c);
            let mut s = CompensatedSum::new();
            let mut s2 = CompensatedSum::new();
            for _ in 0..len {
                let v = f(&draw_point(n, &mut rng)?);
                s.add(v);
                s2.add(v * v);
            }
            Ok((s.value(), s2.value()))
        })
        .collect::<Result<_>>()?;
    let mut s = CompensatedSum::new();
    let mut s2 = CompensatedSum::new();
    for (a, b) in partials {
        s.add(a);
        s2.add(b);
    }
    let nf = count as f64;
    let mean = s.value() / nf;
    let var = ((s2.value() - nf * mean * mean) / (nf - 1.0)).max(0.0);
    Ok(McEstimate {
        mean,
        std_error: (var / nf).sqrt(),
        count,
    })
}

/// Action of an (n+1)×(n+1) unitary on [1 : z], returned to the chart.
pub fn apply_unitary(u: &DMatrix<Complex64>, z: &ProjectivePoint) -> Result<ProjectivePoint> {
    let dim = z.dim() + 1;
    if u.nrows() != dim || u.ncols() != dim {
        return Err(Error::DimensionMismatch {
            left: u.nrows(),
            right: dim,
        });
    }
    let defect = (u.adjoint() * u - DMatrix::<Complex64>::identity(dim, dim))
        .iter()
        .map(|c| c.norm())
        .fold(0.0, f64::max);
    if defect > 1e-12 {
        return Err(Error::InvalidParameter(format!("matrix is not unitary (defect {defect:e})")));
    }
    let h = u * nalgebra::DVector::from_vec(z.homogeneous());
    if h[0].norm() < 1e-12 {
        return Err(Error::ChartSingularity(format!("image of {:?}", z.coords())));
    }
    let h0 = h[0];
    ProjectivePoint::new(h.iter().skip(1).map(|c| c / h0).collect())
}

/// Haar-distributed unitary of size `dim` (QR of a complex Gaussian matrix
/// with the phases of R's diagonal divided out).
pub fn haar_unitary(dim: usize, seed: u64) -> DMatrix<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = DMatrix::<Complex64>::from_fn(dim, dim, |_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let qr = g.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..dim {
            q[(i, j)] *= phase;
        }
    }
    q
}
