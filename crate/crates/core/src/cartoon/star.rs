use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use super::holder::holder_seminorm;
use crate::error::{Error, Result};

/// Angular samples used for every class-membership check.
pub const CHECK_SAMPLES: usize = 4096;

/// Star-shaped domain `{center + r(cos η, sin η) : 0 <= r <= ρ(η)}` with
/// `ρ(η) = rho_base + Σ_n a_n cos(nη) + b_n sin(nη)`, `n = 1, 2, …`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StarDomain {
    pub center: [f64; 2],
    pub rho_base: f64,
    pub cos_coeffs: Vec<f64>,
    pub sin_coeffs: Vec<f64>,
    /// Upper bound on the radius, `< 1`.
    pub rho0: f64,
    /// Boundary smoothness `γ ∈ (1, 2]`.
    pub gamma: f64,
    /// Budget for `Höl(ρ', γ - 1)`.
    pub nu: f64,
}

impl StarDomain {
    pub fn disk(center: [f64; 2], radius: f64, gamma: f64, nu: f64) -> Self {
        StarDomain {
            center,
            rho_base: radius,
            cos_coeffs: Vec::new(),
            sin_coeffs: Vec::new(),
            rho0: radius.max(0.45).min(0.999),
            gamma,
            nu,
        }
    }

    fn terms(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        let n = self.cos_coeffs.len().max(self.sin_coeffs.len());
        (0..n).map(move |i| {
            (
                (i + 1) as f64,
                self.cos_coeffs.get(i).copied().unwrap_or(0.0),
                self.sin_coeffs.get(i).copied().unwrap_or(0.0),
            )
        })
    }

    /// `ρ(η)`.
    pub fn radius(&self, eta: f64) -> f64 {
        self.rho_base
            + self
                .terms()
                .map(|(n, a, b)| a * (n * eta).cos() + b * (n * eta).sin())
                .sum::<f64>()
    }

    /// `ρ'(η)`.
    pub fn radius_derivative(&self, eta: f64) -> f64 {
        self.terms()
            .map(|(n, a, b)| n * (-a * (n * eta).sin() + b * (n * eta).cos()))
            .sum()
    }

    /// `ρ''(η)`.
    pub fn radius_second_derivative(&self, eta: f64) -> f64 {
        self.terms()
            .map(|(n, a, b)| -n * n * (a * (n * eta).cos() + b * (n * eta).sin()))
            .sum()
    }

    /// Estimated `Höl(ρ', γ - 1)` on [`CHECK_SAMPLES`] equispaced angles (a lower bound).
    pub fn holder_estimate(&self) -> f64 {
        let h = 2.0 * PI / CHECK_SAMPLES as f64;
        let samples: Vec<f64> = (0..=CHECK_SAMPLES)
            .map(|i| self.radius_derivative(i as f64 * h))
            .collect();
        holder_seminorm(&samples, h, self.gamma - 1.0).expect("enough samples")
    }

    pub fn contains(&self, x: [f64; 2]) -> bool {
        let d = [x[0] - self.center[0], x[1] - self.center[1]];
        let r = d[0].hypot(d[1]);
        if r == 0.0 {
            return self.radius(0.0) >= 0.0;
        }
        r <= self.radius(d[1].atan2(d[0]))
    }

    /// `n` boundary points, equispaced in angle, translated by the centre.
    pub fn boundary_points(&self, n: usize) -> Vec<[f64; 2]> {
        (0..n)
            .map(|i| {
                let eta = 2.0 * PI * i as f64 / n as f64;
                let r = self.radius(eta);
                [self.center[0] + r * eta.cos(), self.center[1] + r * eta.sin()]
            })
            .collect()
    }

    /// Checks class membership: positive radius bounded by `rho0 < 1`,
    /// Hölder budget, and containment in the unit square.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidInput(msg));
        if !(self.gamma > 1.0 && self.gamma <= 2.0) {
            return bad(format!("gamma must lie in (1, 2], got {}", self.gamma));
        }
        if !(self.nu > 0.0) {
            return bad(format!("nu must be positive, got {}", self.nu));
        }
        if !(self.rho0 > 0.0 && self.rho0 < 1.0) {
            return bad(format!("rho0 must lie in (0, 1), got {}", self.rho0));
        }
        for i in 0..CHECK_SAMPLES {
            let rho = self.radius(2.0 * PI * i as f64 / CHECK_SAMPLES as f64);
            if !(rho > 0.0 && rho <= self.rho0) {
                return bad(format!("radius {rho} outside (0, {}]", self.rho0));
            }
        }
        let hol = self.holder_estimate();
        if hol > self.nu {
            return bad(format!("Höl(ρ', γ-1) ≈ {hol} exceeds nu = {}", self.nu));
        }
        for p in self.boundary_points(CHECK_SAMPLES) {
            if !(0.0..=1.0).contains(&p[0]) || !(0.0..=1.0).contains(&p[1]) {
                return bad(format!("boundary point {p:?} leaves the unit square"));
            }
        }
        Ok(())
    }
}

/// Random star domain centred at `(1/2, 1/2)`.
///
/// Draws eight trigonometric coefficient pairs with decay `n^(-γ-1.1)` from a
/// ChaCha20 stream seeded with `seed`, then rescales the perturbation so the
/// radius stays within `[rho_base/2, 3 rho_base/2]` and the Hölder estimate
/// stays below `ν/2`. If no rescaling passes validation, the disk is returned.
pub fn random_star_domain(gamma: f64, nu: f64, seed: u64) -> Result<StarDomain> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let rho_base = rng.gen_range(0.2..0.3);
    let mut cos_coeffs = Vec::new();
    let mut sin_coeffs = Vec::new();
    for n in 1..=8 {
        let decay = (n as f64).powf(-gamma - 1.1);
        cos_coeffs.push(rng.gen_range(-1.0..1.0) * decay);
        sin_coeffs.push(rng.gen_range(-1.0..1.0) * decay);
    }
    let disk = StarDomain::disk([0.5, 0.5], rho_base, gamma, nu);
    disk.validate()?;

    let raw = StarDomain {
        cos_coeffs,
        sin_coeffs,
        ..disk.clone()
    };
    let amplitude = (0..CHECK_SAMPLES)
        .map(|i| (raw.radius(2.0 * PI * i as f64 / CHECK_SAMPLES as f64) - rho_base).abs())
        .fold(0.0, f64::max);
    let hol = raw.holder_estimate();
    let mut scale = 1.0f64;
    if amplitude > 0.0 {
        scale = scale.min(0.5 * rho_base / amplitude);
    }
    if hol > 0.0 {
        scale = scale.min(0.5 * nu / hol);
    }
    for _ in 0..20 {
        let candidate = StarDomain {
            cos_coeffs: raw.cos_coeffs.iter().map(|c| c * scale).collect(),
            sin_coeffs: raw.sin_coeffs.iter().map(|c| c * scale).collect(),
            ..disk.clone()
        };
        if candidate.validate().is_ok() {
            return Ok(candidate);
        }
        scale *= 0.5;
    }
    Ok(disk)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_is_valid_and_round() {
        let d = StarDomain::disk([0.5, 0.5], 0.25, 2.0, 1.0);
        d.validate().unwrap();
        assert_eq!(d.holder_estimate(), 0.0);
        for p in d.boundary_points(17) {
            let r = (p[0] - 0.5).hypot(p[1] - 0.5);
            assert!((r - 0.25).abs() < 1e-12);
        }
        let pts = d.boundary_points(4);
        let expect = [[0.75, 0.5], [0.5, 0.75], [0.25, 0.5], [0.5, 0.25]];
        for (p, e) in pts.iter().zip(expect) {
            assert!((p[0] - e[0]).abs() < 1e-12 && (p[1] - e[1]).abs() < 1e-12);
        }
    }

    #[test]
    fn second_derivative_matches_holder_estimate() {
        let d = StarDomain {
            cos_coeffs: vec![0.0, 0.01],
            ..StarDomain::disk([0.5, 0.5], 0.3, 2.0, 1.0)
        };
        let sup = (0..10_000)
            .map(|i| d.radius_second_derivative(i as f64 * 2.0 * PI / 10_000.0).abs())
            .fold(0.0, f64::max);
        assert!((sup - 0.04).abs() < 1e-9);
        let est = d.holder_estimate();
        assert!(est <= 0.04 + 1e-12 && est > 0.04 * 0.999, "{est}");
    }

    #[test]
    fn boundary_points_follow_radius() {
        let d = random_star_domain(1.5, 2.0, 3).unwrap();
        for (i, p) in d.boundary_points(50).iter().enumerate() {
            let eta = 2.0 * PI * i as f64 / 50.0;
            let dist = (p[0] - d.center[0]).hypot(p[1] - d.center[1]);
            assert!((dist - d.radius(eta)).abs() < 1e-12);
        }
    }

    #[test]
    fn random_domains_are_deterministic_members() {
        for seed in 0..10 {
            let a = random_star_domain(2.0, 1.0, seed).unwrap();
            let b = random_star_domain(2.0, 1.0, seed).unwrap();
            assert_eq!(a, b);
            a.validate().unwrap();
            assert!(a.holder_estimate() <= 0.5 + 1e-12);
        }
        assert_ne!(
            random_star_domain(2.0, 1.0, 1).unwrap(),
            random_star_domain(2.0, 1.0, 2).unwrap()
        );
    }

    #[test]
    fn tiny_budget_still_yields_a_member() {
        let d = random_star_domain(1.2, 1e-9, 5).unwrap();
        d.validate().unwrap();
    }

    #[test]
    fn validation_rejects_violations() {
        let mut d = StarDomain::disk([0.5, 0.5], 0.25, 2.0, 1.0);
        d.cos_coeffs = vec![0.0, 0.0, 0.1];
        d.validate().unwrap();
        d.nu = 0.5; // sup |ρ''| = 0.9
        assert!(d.validate().is_err());
        let big = StarDomain::disk([0.9, 0.5], 0.3, 2.0, 1.0);
        assert!(big.validate().is_err());
        assert!(random_star_domain(2.5, 1.0, 0).is_err());
    }
}
