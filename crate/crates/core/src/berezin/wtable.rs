use rayon::prelude::*;
use serde::Serialize;

use super::{w_formula, w_oracle};
use crate::spectra::{laplacian_eigenvalue, LevelParams};

/// One row of a W-table. `w_formula` is `None` when the closed form hits a
/// degenerate denominator.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WRow {
    pub k: usize,
    pub lambda: f64,
    pub w_formula: Option<f64>,
    pub w_oracle: f64,
    pub residual: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WTable {
    pub params: LevelParams,
    pub rows: Vec<WRow>,
    /// max |w_oracle| over rows with k > 2ν. Zero if the expansion really stops at 2ν.
    pub termination_report: f64,
}

impl WTable {
    pub fn row(&self, k: usize) -> Option<&WRow> {
        self.rows.get(k)
    }

    pub fn max_residual(&self) -> f64 {
        self.rows
            .iter()
            .filter(|r| r.k <= self.params.two_nu)
            .filter_map(|r| r.residual)
            .fold(0.0, f64::max)
    }
}

/// Rows k = 0 ..= 2ν+2m+2.
pub fn build_wtable(p: LevelParams) -> WTable {
    build_wtable_to(p, p.two_nu + 2 * p.m + 2)
}

pub fn build_wtable_to(p: LevelParams, kmax: usize) -> WTable {
    let rows: Vec<WRow> = (0..=kmax)
        .into_par_iter()
        .map(|k| {
            let w_formula = w_formula(p, k).ok();
            let w_oracle = w_oracle(p, k);
            WRow {
                k,
                lambda: laplacian_eigenvalue(p.n, k),
                w_formula,
                w_oracle,
                residual: w_formula.map(|f| (f - w_oracle).abs()),
            }
        })
        .collect();
    let termination_report = rows
        .iter()
        .filter(|r| r.k > p.two_nu)
        .map(|r| r.w_oracle.abs())
        .fold(0.0, f64::max);
    WTable {
        params: p,
        rows,
        termination_report,
    }
}
