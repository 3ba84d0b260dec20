use serde::{Deserialize, Serialize};

use crate::approx::fit_loglog;
use crate::error::{Error, Result};

/// Base bump `φ(t) = exp(1 - 1/(1 - u²))`, `u = 2t - 1`, supported in
/// `(0, 1)` with `φ(1/2) = 1`.
pub fn bump(t: f64) -> f64 {
    let u = 2.0 * t - 1.0;
    if u.abs() >= 1.0 {
        return 0.0;
    }
    (1.0 - 1.0 / (1.0 - u * u)).exp()
}

fn bump_derivatives(t: f64) -> (f64, f64) {
    let u = 2.0 * t - 1.0;
    if u.abs() >= 1.0 {
        return (0.0, 0.0);
    }
    let q = 1.0 - u * u;
    let g = (1.0 - 1.0 / q).exp();
    let d1 = g * (-2.0 * u / (q * q));
    let d2 = g * (6.0 * u.powi(4) - 2.0) / q.powi(4);
    (2.0 * d1, 4.0 * d2)
}

/// Sup norms of `φ`, `φ'`, `φ''` from dense sampling.
fn bump_sup_norms() -> (f64, f64, f64) {
    let n = 1 << 16;
    (0..=n).fold((0.0, 0.0, 0.0), |(a, b, c), i| {
        let t = i as f64 / n as f64;
        let (d1, d2) = bump_derivatives(t);
        (f64::max(a, bump(t)), f64::max(b, d1.abs()), f64::max(c, d2.abs()))
    })
}

/// Upper bound for `‖φ⊗φ‖_{C^β} = ‖ψ‖_∞ + Σ_i ‖∂_i ψ‖_∞ + max_i Höl(∂_i ψ, β-1)`.
/// The Hölder part uses `Höl(g, a) <= (2‖g‖_∞)^(1-a) ‖∇g‖_∞^a`.
fn base_cbeta_norm(beta: f64) -> f64 {
    let (p0, p1, p2) = bump_sup_norms();
    let a = beta - 1.0;
    let d = p1 * p0;
    let grad = (p2 * p0).hypot(p1 * p1);
    // 1% margin for the sampled suprema.
    1.01 * (p0 * p0 + 2.0 * d + (2.0 * d).powf(1.0 - a) * grad.powf(a))
}

/// `m_k` disjoint bumps `ψ_{i,k}(t) = k^{-β} ψ(k t - i)`, `ψ = A φ⊗φ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HypercubeFamily {
    pub beta: f64,
    pub k: usize,
    pub nu: f64,
    /// Amplitude `A` making `‖ψ‖_{C^β} <= ν`.
    pub amplitude: f64,
    /// `‖ψ‖_2`.
    pub base_norm: f64,
    pub m_k: usize,
    /// `δ_k = k^{-β-1} ‖ψ‖_2`.
    pub delta_k: f64,
}

/// `‖φ‖_2²` by the midpoint rule with `n` nodes.
fn bump_l2_sqr(n: usize) -> f64 {
    (0..n).map(|i| bump((i as f64 + 0.5) / n as f64).powi(2)).sum::<f64>() / n as f64
}

const QUADRATURE_NODES: usize = 1 << 14;

pub fn hypercube_family(beta: f64, k: usize, nu: f64) -> Result<HypercubeFamily> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    if !(beta > 1.0 && beta <= 2.0) {
        return Err(Error::InvalidInput(format!("beta must lie in (1, 2], got {beta}")));
    }
    if !(nu > 0.0 && nu.is_finite()) {
        return Err(Error::InvalidInput(format!("nu must be positive, got {nu}")));
    }
    let amplitude = nu / base_cbeta_norm(beta);
    let base_norm = amplitude * bump_l2_sqr(QUADRATURE_NODES);
    Ok(HypercubeFamily {
        beta,
        k,
        nu,
        amplitude,
        base_norm,
        m_k: k * k,
        delta_k: (k as f64).powf(-beta - 1.0) * base_norm,
    })
}

impl HypercubeFamily {
    /// `ψ_{i,k}(t)`.
    pub fn eval(&self, i: (usize, usize), t: [f64; 2]) -> f64 {
        let k = self.k as f64;
        self.amplitude
            * k.powf(-self.beta)
            * bump(k * t[0] - i.0 as f64)
            * bump(k * t[1] - i.1 as f64)
    }

    /// `⟨ψ_{i,k}, ψ_{i',k}⟩` by the tensor midpoint rule with `n` nodes per
    /// unit interval.
    pub fn inner(&self, a: (usize, usize), b: (usize, usize), n: usize) -> f64 {
        let k = self.k as f64;
        let axis = |p: usize, q: usize| {
            (0..n)
                .map(|s| {
                    let t = (s as f64 + 0.5) / n as f64;
                    bump(k * t - p as f64) * bump(k * t - q as f64)
                })
                .sum::<f64>()
                / n as f64
        };
        self.amplitude.powi(2) * k.powf(-2.0 * self.beta) * axis(a.0, b.0) * axis(a.1, b.1)
    }

    /// `‖ψ_{i,k}‖_2` by quadrature with `n` nodes per unit interval.
    pub fn norm(&self, i: (usize, usize), n: usize) -> f64 {
        self.inner(i, i, n).sqrt()
    }

    pub fn size(&self) -> FamilySize {
        FamilySize { k: self.k, m_k: self.m_k, delta_k: self.delta_k }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilySize {
    pub k: usize,
    pub m_k: usize,
    pub delta_k: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CopyVerdict {
    /// `δ_k` strictly decreasing along the sequence.
    pub decreasing: bool,
    /// Fitted `p` in `m_k ≈ C δ_k^{-p}`.
    pub p: f64,
    pub expected_p: Option<f64>,
    pub holds: bool,
}

/// Checks that a sequence of hypercube families embeds a copy of `ℓ_0^p`
/// and fits `p` from `log m_k` against `log(1/δ_k)`.
pub fn copy_of_lp_check(sizes: &[FamilySize], expected_p: Option<f64>) -> Result<CopyVerdict> {
    if sizes.len() < 3 {
        return Err(Error::InvalidInput(format!("need 3 family sizes, got {}", sizes.len())));
    }
    let decreasing = sizes.windows(2).all(|w| w[1].delta_k < w[0].delta_k);
    if !decreasing {
        return Ok(CopyVerdict { decreasing, p: f64::NAN, expected_p, holds: false });
    }
    let xs: Vec<f64> = sizes.iter().map(|s| 1.0 / s.delta_k).collect();
    let ys: Vec<f64> = sizes.iter().map(|s| s.m_k as f64).collect();
    let p = fit_loglog(&xs, &ys)?.slope;
    Ok(CopyVerdict { decreasing, p, expected_p, holds: p > 0.0 })
}

pub fn hypercube_csv(families: &[HypercubeFamily]) -> String {
    let mut out = String::from("k,m_k,delta_k\n");
    for f in families {
        out.push_str(&format!("{},{},{:e}\n", f.k, f.m_k, f.delta_k));
    }
    out
}
