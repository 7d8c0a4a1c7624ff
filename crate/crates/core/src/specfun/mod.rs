//! Classical special functions: Pochhammer symbols, Jacobi polynomials,
//! terminating hypergeometric series, the Kampé de Fériet double series
//! F^{2:2,2}_{2:1,1} at (1, 1), and Gauss–Jacobi quadrature.
//!
//! Every series here terminates, so each routine is an exact finite sum
//! accumulated left to right with compensated summation.

mod dd;
pub mod gamma;
mod hypergeometric;
mod jacobi;
mod quadrature;
mod sum;

pub use hypergeometric::{
    hyp_2f1_terminating, hyp_4f3_terminating, hyp_pfq_terminating, kdf_f2222,
    kdf_f2222_nested, termination_index, KdFParams,
};
pub use jacobi::{jacobi_norm_sq, jacobi_p, jacobi_p_at_one, jacobi_p_unchecked, JacobiIndex};
pub(crate) use hypergeometric::hyp_pfq_dd;
pub use quadrature::{gauss_jacobi_rule, QuadratureRule};
pub use dd::DoubleDouble;
pub use sum::{compensated_sum, CompensatedSum};

use crate::error::{Error, Result};

/// Rising factorial (a)_k = a(a+1)···(a+k−1), with (a)_0 = 1.
pub fn pochhammer(a: f64, k: usize) -> Result<f64> {
    let mut p = 1.0;
    for j in 0..k {
        p *= a + j as f64;
        if p == 0.0 {
            return Ok(0.0);
        }
    }
    if p.is_finite() {
        Ok(p)
    } else {
        Err(Error::Overflow(format!("({a})_{k}")))
    }
}
