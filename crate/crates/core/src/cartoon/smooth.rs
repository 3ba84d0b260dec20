use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrigTerm {
    pub amplitude: f64,
    pub freq: [i32; 2],
    pub phase: f64,
}

/// Smooth part `c + Σ A cos(2π k·x + φ)`, a 1-periodic function on the unit
/// square.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SmoothField {
    pub constant: f64,
    pub terms: Vec<TrigTerm>,
    pub beta: f64,
    pub nu: f64,
}

impl SmoothField {
    pub fn constant(value: f64, beta: f64, nu: f64) -> Self {
        SmoothField {
            constant: value,
            terms: Vec::new(),
            beta,
            nu,
        }
    }

    pub fn eval(&self, x: [f64; 2]) -> f64 {
        self.constant
            + self
                .terms
                .iter()
                .map(|t| {
                    let arg = 2.0 * PI * (t.freq[0] as f64 * x[0] + t.freq[1] as f64 * x[1]);
                    t.amplitude * (arg + t.phase).cos()
                })
                .sum::<f64>()
    }

    /// `∂_axis f`.
    pub fn partial(&self, axis: usize, x: [f64; 2]) -> f64 {
        self.terms
            .iter()
            .map(|t| {
                let w = 2.0 * PI * t.freq[axis] as f64;
                let arg = 2.0 * PI * (t.freq[0] as f64 * x[0] + t.freq[1] as f64 * x[1]);
                -t.amplitude * w * (arg + t.phase).sin()
            })
            .sum()
    }

    /// Upper bound on `‖f‖_{C^β} = ‖f‖_∞ + Σ_i ‖∂_i f‖_∞ + max_i Höl(∂_i f, β-1)`.
    ///
    /// Each term is bounded separately; for the Hölder part,
    /// `|sin u - sin v| <= 2^(1-a) |u - v|^a` with `a = β - 1`.
    pub fn cbeta_norm_bound(&self) -> f64 {
        let a = self.beta - 1.0;
        let sup: f64 = self.constant.abs() + self.terms.iter().map(|t| t.amplitude.abs()).sum::<f64>();
        let mut grads = 0.0;
        let mut hol = [0.0f64; 2];
        for t in &self.terms {
            let k = (t.freq[0] as f64).hypot(t.freq[1] as f64);
            for (axis, h) in hol.iter_mut().enumerate() {
                let w = 2.0 * PI * (t.freq[axis] as f64).abs();
                grads += t.amplitude.abs() * w;
                *h += t.amplitude.abs() * w * 2f64.powf(1.0 - a) * (2.0 * PI * k).powf(a);
            }
        }
        sup + grads + hol[0].max(hol[1])
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.beta > 1.0 && self.beta <= 2.0) {
            return Err(Error::InvalidInput(format!(
                "beta must lie in (1, 2], got {}",
                self.beta
            )));
        }
        let norm = self.cbeta_norm_bound();
        if norm > self.nu * (1.0 + 1e-12) {
            return Err(Error::InvalidInput(format!(
                "C^β norm bound {norm} exceeds nu = {}",
                self.nu
            )));
        }
        Ok(())
    }

    /// Random low-frequency field with `C^β` bound at most `ν`: a constant
    /// level in `[ν/4, ν/2)` plus an oscillation whose bound is `ν/2`.
    pub fn random(beta: f64, nu: f64, seed: u64, n_terms: usize, max_freq: i32) -> Result<Self> {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let level = rng.gen_range(0.5..1.0);
        let terms = (0..n_terms)
            .map(|_| TrigTerm {
                amplitude: rng.gen_range(-1.0..1.0),
                freq: [
                    rng.gen_range(-max_freq..=max_freq),
                    rng.gen_range(-max_freq..=max_freq),
                ],
                phase: rng.gen_range(0.0..2.0 * PI),
            })
            .collect();
        // Half the budget goes to the constant level, half to the oscillation.
        let mut field = SmoothField {
            constant: 0.0,
            terms,
            beta,
            nu,
        };
        let norm = field.cbeta_norm_bound();
        if norm > 0.0 {
            let s = 0.5 * nu / norm;
            field.terms.iter_mut().for_each(|t| t.amplitude *= s);
        }
        field.constant = 0.5 * nu * level;
        field.validate()?;
        Ok(field)
    }
}
