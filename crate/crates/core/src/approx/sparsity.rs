use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::transform::CoefficientSet;

/// Nonincreasing rearrangement of `|c|`.
pub fn decreasing_moduli(seq: &[f64]) -> Vec<f64> {
    let mut out: Vec<f64> = seq.iter().map(|v| v.abs()).collect();
    out.sort_unstable_by(|a, b| b.total_cmp(a));
    out
}

/// `‖c‖_{ωℓp} = sup_n n^{1/p} |c*_n|`.
pub fn weak_lp_norm(seq: &[f64], p: f64) -> Result<f64> {
    if !(p > 0.0 && p.is_finite()) {
        return Err(Error::InvalidInput(format!("weak-lp exponent must be positive, got {p}")));
    }
    Ok(decreasing_moduli(seq)
        .iter()
        .enumerate()
        .map(|(i, c)| ((i + 1) as f64).powf(1.0 / p) * c)
        .fold(0.0, f64::max))
}

/// `tail[N] = Σ_{m > N} |c*_m|²` for `N = 0..=len`, given a nonincreasing
/// sequence of moduli.
pub fn tail_energies(sorted: &[f64]) -> Vec<f64> {
    let mut tail = vec![0.0; sorted.len() + 1];
    for n in (0..sorted.len()).rev() {
        tail[n] = tail[n + 1] + sorted[n] * sorted[n];
    }
    tail
}

/// Constant `A² / (2k)` bounding `N^{2k} · Σ_{m>N}|c*_m|²` whenever
/// `‖c‖_{ωℓ_{2/(2k+1)}} ≤ A`.
pub fn weak_tail_constant(a: f64, k: f64) -> f64 {
    a * a / (2.0 * k)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScaleNorm {
    pub j: u32,
    pub count: usize,
    pub norm: f64,
}

/// `‖θ_j‖_{ωℓ_{2/(1+β)}}` for every scale, coarse (`j = 0`) and residual
/// (`j = j_max + 1`) included.
pub fn per_scale_weak_norms(c: &CoefficientSet, beta: f64) -> Result<Vec<ScaleNorm>> {
    if !(beta > 1.0 && beta <= 2.0) {
        return Err(Error::InvalidInput(format!("beta must lie in (1, 2], got {beta}")));
    }
    let p = 2.0 / (1.0 + beta);
    (0..=c.params.j_max + 1)
        .map(|j| {
            let moduli = c.scale_moduli(j);
            Ok(ScaleNorm { j, count: moduli.len(), norm: weak_lp_norm(&moduli, p)? })
        })
        .collect()
}

/// `#{μ at scale j : |θ_μ| > eps}`.
pub fn count_above(c: &CoefficientSet, eps: f64, j: u32) -> usize {
    c.blocks
        .iter()
        .filter(|b| c.scale_of(b.id) == j)
        .flat_map(|b| b.data.iter())
        .filter(|v| v.norm() > eps)
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weak_norm_examples() {
        assert_eq!(weak_lp_norm(&[3.0, 1.0, 2.0], 2.0).unwrap(), 3.0);
        assert_eq!(weak_lp_norm(&[0.0; 5], 0.7).unwrap(), 0.0);
        assert_eq!(weak_lp_norm(&[], 1.0).unwrap(), 0.0);
        let p = 0.8;
        let seq: Vec<f64> = (1..=100).map(|n| (n as f64).powf(-1.0 / p)).collect();
        assert!((weak_lp_norm(&seq, p).unwrap() - 1.0).abs() < 1e-12);
        assert!(weak_lp_norm(&seq, 0.0).is_err());
    }

    #[test]
    fn tails() {
        let t = tail_energies(&[3.0, 2.0, 1.0]);
        assert_eq!(t, vec![14.0, 5.0, 1.0, 0.0]);
    }
}
