//! N-term thresholding, weak-ℓp sparsity measures and rate fits.

mod fit;
mod nterm;
mod sparsity;

pub use fit::{fit_line, fit_loglog, rate_fit, LineFit, RateReport};
pub use nterm::{
    dyadic_ns, nterm_error_curve, ranked_moduli, ranked_positions, threshold_top_n, CurveMeta,
    CurvePoint, ErrorCurve,
};
pub use sparsity::{
    count_above, decreasing_moduli, weak_tail_constant, per_scale_weak_norms, tail_energies,
    weak_lp_norm, ScaleNorm,
};
