use serde::{Deserialize, Serialize};

use super::ErrorCurve;
use crate::error::{Error, Result};

/// Least-squares line `y = slope·x + intercept`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    pub max_residual: f64,
    pub points: usize,
}

/// Ordinary least squares on paired samples.
pub fn fit_line(xs: &[f64], ys: &[f64]) -> Result<LineFit> {
    if xs.len() != ys.len() {
        return Err(Error::ShapeMismatch(format!("{} abscissae, {} ordinates", xs.len(), ys.len())));
    }
    let n = xs.len();
    if n < 2 {
        return Err(Error::InvalidInput(format!("line fit needs 2 points, got {n}")));
    }
    if xs.iter().chain(ys).any(|v| !v.is_finite()) {
        return Err(Error::InvalidInput("non-finite sample in line fit".into()));
    }
    let mx = xs.iter().sum::<f64>() / n as f64;
    let my = ys.iter().sum::<f64>() / n as f64;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx <= f64::EPSILON * n as f64 * (1.0 + mx * mx) {
        return Err(Error::InvalidInput("degenerate abscissae in line fit".into()));
    }
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let max_residual = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (y - slope * x - intercept).abs())
        .fold(0.0, f64::max);
    Ok(LineFit { slope, intercept, max_residual, points: n })
}

/// Fit of `log2 y` against `log2 x`. Every sample must be positive.
pub fn fit_loglog(xs: &[f64], ys: &[f64]) -> Result<LineFit> {
    if xs.iter().chain(ys).any(|&v| v <= 0.0) {
        return Err(Error::InvalidInput("log-log fit needs positive samples".into()));
    }
    let lx: Vec<f64> = xs.iter().map(|v| v.log2()).collect();
    let ly: Vec<f64> = ys.iter().map(|v| v.log2()).collect();
    fit_line(&lx, &ly)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RateReport {
    pub slope: f64,
    pub intercept: f64,
    pub max_residual: f64,
    pub n_lo: usize,
    pub n_hi: usize,
    pub points: usize,
    /// `-β`, the rate achieved by thresholding up to the log factor.
    pub benchmark_exponent: Option<f64>,
    /// `-min(β, γ)`, the best rate any dictionary can reach on the class.
    pub optimal_exponent: Option<f64>,
}

/// Fits `log2 err2 = slope · log2 N + intercept` over the curve points with
/// `n_lo <= N <= n_hi`.
pub fn rate_fit(curve: &ErrorCurve, n_lo: usize, n_hi: usize) -> Result<RateReport> {
    if n_lo == 0 || n_lo >= n_hi {
        return Err(Error::InvalidInput(format!("degenerate fit range [{n_lo}, {n_hi}]")));
    }
    let selected: Vec<_> = curve
        .points
        .iter()
        .filter(|p| p.n >= n_lo && p.n <= n_hi)
        .collect();
    if selected.len() < 4 {
        return Err(Error::InvalidInput(format!(
            "fit range [{n_lo}, {n_hi}] holds {} points, need 4",
            selected.len()
        )));
    }
    if selected.iter().any(|p| p.err2 <= 0.0) {
        return Err(Error::InvalidInput("zero error inside the fit range".into()));
    }
    let xs: Vec<f64> = selected.iter().map(|p| p.n as f64).collect();
    let ys: Vec<f64> = selected.iter().map(|p| p.err2).collect();
    let fit = fit_loglog(&xs, &ys)?;
    let meta = &curve.meta;
    Ok(RateReport {
        slope: fit.slope,
        intercept: fit.intercept,
        max_residual: fit.max_residual,
        n_lo,
        n_hi,
        points: fit.points,
        benchmark_exponent: meta.beta.map(|b| -b),
        optimal_exponent: match (meta.beta, meta.gamma) {
            (Some(b), Some(g)) => Some(-b.min(g)),
            _ => None,
        },
    })
}
