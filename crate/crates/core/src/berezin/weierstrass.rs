use crate::specfun::gamma::gamma_ratio;

/// ∏_{p=1}^{P} (1 − k(k+1)/((p+2ν)(p+2ν+1))), summed directly.
pub fn weierstrass_w(two_nu: usize, k: usize, terms: u64) -> f64 {
    let a = two_nu as f64;
    let lam = (k * (k + 1)) as f64;
    (1..=terms).fold(1.0, |acc, p| {
        let p = p as f64;
        acc * (1.0 - lam / ((p + a) * (p + a + 1.0)))
    })
}

fn rising(a: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (a + j as f64))
}

/// Same partial product after telescoping the factors
/// (p+a−k)(p+a+1+k)/((p+a)(p+a+1)), a = 2ν. Fewer than k factors do not
/// telescope and are multiplied out.
pub fn weierstrass_w_telescoped(two_nu: usize, k: usize, terms: u64) -> f64 {
    if terms < k as u64 {
        return weierstrass_w(two_nu, k, terms);
    }
    let (a, p) = (two_nu as f64, terms as f64);
    rising(a - k as f64 + 1.0, k) * rising(p + a + 2.0, k)
        / (rising(p + a - k as f64 + 1.0, k) * rising(a + 2.0, k))
}

/// P → ∞ limit: (2ν−k+1)_k / (2ν+2)_k, zero for k > 2ν.
pub fn weierstrass_w_limit(two_nu: usize, k: usize) -> f64 {
    let a = two_nu as f64;
    rising(a - k as f64 + 1.0, k) / rising(a + 2.0, k)
}

/// γ / (Γ(2ν−k+1) Γ(k+2ν+2)) for n = 1, m = 0, where γ = (2ν+1)((2ν)!)².
pub fn berezin_closed_form_n1(two_nu: usize, k: usize) -> f64 {
    let a = two_nu as f64;
    let kf = k as f64;
    (a + 1.0) * gamma_ratio(&[a + 1.0, a + 1.0], &[a - kf + 1.0, kf + a + 2.0])
}
