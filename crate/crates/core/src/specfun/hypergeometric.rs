//! Terminating hypergeometric series.

use super::dd::DoubleDouble;
use super::gamma::is_nonpositive_integer;
use crate::error::{Error, Result};

fn dd(x: f64) -> DoubleDouble {
    DoubleDouble::from(x)
}

/// (a)_k in double-double.
fn pochhammer_dd(a: f64, k: usize) -> DoubleDouble {
    (0..k).fold(dd(1.0), |acc, j| acc * (a + j as f64))
}

fn finite(x: DoubleDouble, what: impl FnOnce() -> String) -> Result<f64> {
    let v = x.to_f64();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow(what()))
    }
}

/// Index of the last nonzero term of a series with the given upper
/// parameters, or `None` if none of them is a nonpositive integer.
pub fn termination_index(upper: &[f64]) -> Option<usize> {
    upper
        .iter()
        .filter(|&&u| is_nonpositive_integer(u))
        .map(|&u| (-u).round() as usize)
        .min()
}

/// First index `j < terms` at which `(lower)_{j+1}` picks up a zero factor.
fn first_denominator_zero(lower: f64, terms: usize) -> Option<usize> {
    if !is_nonpositive_integer(lower) {
        return None;
    }
    let j = (-lower).round() as usize;
    (j < terms).then_some(j + 1)
}

/// Terminating pFq: Σ_j ∏(a_i)_j / ∏(b_i)_j · x^j / j!.
///
/// Terms and the running sum are carried in double-double arithmetic.
pub fn hyp_pfq_terminating(upper: &[f64], lower: &[f64], x: f64) -> Result<f64> {
    let v = hyp_pfq_dd(upper, lower, x)?;
    finite(v, || format!("pFq{upper:?};{lower:?}"))
}

pub(crate) fn hyp_pfq_dd(upper: &[f64], lower: &[f64], x: f64) -> Result<DoubleDouble> {
    let last = termination_index(upper).ok_or_else(|| Error::NonTerminating(upper.to_vec()))?;
    for &b in lower {
        if let Some(index) = first_denominator_zero(b, last) {
            return Err(Error::DegenerateDenominator {
                parameter: b,
                index,
            });
        }
    }
    let mut acc = dd(1.0);
    let mut term = dd(1.0);
    for j in 0..last {
        let jf = j as f64;
        let num = upper.iter().fold(dd(x), |p, &a| p * (a + jf));
        let den = lower.iter().fold(dd(jf + 1.0), |p, &b| p * (b + jf));
        term = term * num / den;
        if term.is_zero() {
            break;
        }
        acc += term;
    }
    Ok(acc)
}

/// Terminating Gauss series ₂F₁(a, b; c; x).
pub fn hyp_2f1_terminating(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    hyp_pfq_terminating(&[a, b], &[c], x)
}

/// Terminating ₄F₃ with four upper and three lower parameters.
pub fn hyp_4f3_terminating(upper: [f64; 4], lower: [f64; 3], x: f64) -> Result<f64> {
    hyp_pfq_terminating(&upper, &lower, x)
}

/// Parameters of the Kampé de Fériet function
///
/// ```text
///  F^{2:2,2}_{2:1,1} [ a1, a2 : b1, b2 ; b3, b4 | 1, 1 ]
///                    [ c1, c2 :   d1   ;   d2   |      ]
/// ```
///
/// where (b1, b2) and d1 go with the `l` index, (b3, b4) and d2 with `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KdFParams {
    pub a: [f64; 2],
    pub b: [f64; 4],
    pub c: [f64; 2],
    pub d: [f64; 2],
}

impl KdFParams {
    pub fn new(a: [f64; 2], b: [f64; 4], c: [f64; 2], d: [f64; 2]) -> Result<Self> {
        let p = Self { a, b, c, d };
        p.bounds()?;
        Ok(p)
    }

    /// Last nonzero `l` and `s` indices.
    fn bounds(&self) -> Result<(usize, usize)> {
        let l = termination_index(&self.b[0..2])
            .ok_or_else(|| Error::NonTerminating(self.b[0..2].to_vec()))?;
        let s = termination_index(&self.b[2..4])
            .ok_or_else(|| Error::NonTerminating(self.b[2..4].to_vec()))?;
        Ok((l, s))
    }
}

/// Double sum over (l, s) of the Kampé de Fériet series at (1, 1).
pub fn kdf_f2222(p: &KdFParams) -> Result<f64> {
    let (lmax, smax) = p.bounds()?;
    for &c in &p.c {
        if let Some(index) = first_denominator_zero(c, lmax + smax) {
            return Err(Error::DegenerateDenominator { parameter: c, index });
        }
    }
    if let Some(index) = first_denominator_zero(p.d[0], lmax) {
        return Err(Error::DegenerateDenominator {
            parameter: p.d[0],
            index,
        });
    }
    if let Some(index) = first_denominator_zero(p.d[1], smax) {
        return Err(Error::DegenerateDenominator {
            parameter: p.d[1],
            index,
        });
    }
    let mut acc = dd(0.0);
    for s in 0..=smax {
        for l in 0..=lmax {
            let j = l + s;
            let num = pochhammer_dd(p.a[0], j)
                * pochhammer_dd(p.a[1], j)
                * pochhammer_dd(p.b[0], l)
                * pochhammer_dd(p.b[1], l)
                * pochhammer_dd(p.b[2], s)
                * pochhammer_dd(p.b[3], s);
            let den = pochhammer_dd(p.c[0], j)
                * pochhammer_dd(p.c[1], j)
                * pochhammer_dd(p.d[0], l)
                * pochhammer_dd(1.0, l)
                * pochhammer_dd(p.d[1], s)
                * pochhammer_dd(1.0, s);
            acc += num / den;
        }
    }
    finite(acc, || format!("{p:?}"))
}

/// The same series reorganised as an outer `s`-sum of ₄F₃ values, using
/// (a)_{l+s} = (a+s)_l (a)_s.
pub fn kdf_f2222_nested(p: &KdFParams) -> Result<f64> {
    let (_, smax) = p.bounds()?;
    for (&c, terms) in [(&p.c[0], smax), (&p.c[1], smax), (&p.d[1], smax)] {
        if let Some(index) = first_denominator_zero(c, terms) {
            return Err(Error::DegenerateDenominator { parameter: c, index });
        }
    }
    let mut acc = dd(0.0);
    for s in 0..=smax {
        let sf = s as f64;
        let num = pochhammer_dd(p.a[0], s)
            * pochhammer_dd(p.a[1], s)
            * pochhammer_dd(p.b[2], s)
            * pochhammer_dd(p.b[3], s);
        if num.is_zero() {
            continue;
        }
        let den = pochhammer_dd(p.c[0], s)
            * pochhammer_dd(p.c[1], s)
            * pochhammer_dd(p.d[1], s)
            * pochhammer_dd(1.0, s);
        let inner = hyp_pfq_dd(
            &[p.b[0], p.b[1], p.a[0] + sf, p.a[1] + sf],
            &[p.c[0] + sf, p.c[1] + sf, p.d[0]],
            1.0,
        )?;
        acc += num / den * inner;
    }
    finite(acc, || format!("{p:?}"))
}
