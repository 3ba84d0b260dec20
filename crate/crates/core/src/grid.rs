//! Sampled images on the periodic unit square.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Whether a grid (or the grid a coefficient set came from) is real-valued.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ValueKind {
    Real,
    Complex,
}

/// `M × M` samples of a 1-periodic function at spacing `1/M`, row-major with
/// the first index along `x1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    size: usize,
    values: Vec<Complex64>,
}

impl Grid {
    pub fn zeros(size: usize) -> Self {
        Grid {
            size,
            values: vec![Complex64::new(0.0, 0.0); size * size],
        }
    }

    pub fn from_complex(size: usize, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != size * size {
            return Err(Error::ShapeMismatch(format!(
                "{} values for a {size}x{size} grid",
                values.len()
            )));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::InvalidInput("grid values must be finite".into()));
        }
        Ok(Grid { size, values })
    }

    pub fn from_real(size: usize, values: &[f64]) -> Result<Self> {
        Self::from_complex(size, values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    /// Samples `f(x1, x2)` at `(n1 / M, n2 / M)`.
    pub fn from_fn(size: usize, f: impl Fn(f64, f64) -> f64) -> Self {
        let h = 1.0 / size as f64;
        let values = (0..size * size)
            .map(|i| Complex64::new(f((i / size) as f64 * h, (i % size) as f64 * h), 0.0))
            .collect();
        Grid { size, values }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn get(&self, n1: usize, n2: usize) -> Complex64 {
        self.values[n1 * self.size + n2]
    }

    pub fn kind(&self) -> ValueKind {
        if self.values.iter().all(|v| v.im == 0.0) {
            ValueKind::Real
        } else {
            ValueKind::Complex
        }
    }

    pub fn real_parts(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.re).collect()
    }

    /// Drops imaginary parts.
    pub fn to_real(&self) -> Grid {
        Grid {
            size: self.size,
            values: self.values.iter().map(|v| Complex64::new(v.re, 0.0)).collect(),
        }
    }

    /// Plain `ℓ²` norm of the samples.
    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// `⟨self, other⟩ = Σ self · conj(other)`.
    pub fn inner(&self, other: &Grid) -> Complex64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b.conj())
            .sum()
    }

    pub fn distance(&self, other: &Grid) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Circular shift by `(s1, s2)` samples.
    pub fn shifted(&self, s1: usize, s2: usize) -> Grid {
        let m = self.size;
        let mut out = Grid::zeros(m);
        for n1 in 0..m {
            for n2 in 0..m {
                out.values[((n1 + s1) % m) * m + (n2 + s2) % m] = self.values[n1 * m + n2];
            }
        }
        out
    }

    /// Rotation by 90° about the grid centre: `(n1, n2) ↦ (M-1-n2, n1)`.
    pub fn rotated_quarter(&self) -> Grid {
        let m = self.size;
        let mut out = Grid::zeros(m);
        for n1 in 0..m {
            for n2 in 0..m {
                out.values[(m - 1 - n2) * m + n1] = self.values[n1 * m + n2];
            }
        }
        out
    }
}
