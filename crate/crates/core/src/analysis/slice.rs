use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::Grid;

/// Radial samples per unit frequency.
pub const SLICE_DENSITY: usize = 4;

/// `f̂(ξ) = M⁻¹ Σ_n f(n) e^{-2πi n·ξ/M}` at an arbitrary real frequency.
pub fn ndft(f: &Grid, xi: [f64; 2]) -> Complex64 {
    let m = f.size();
    let phase = |freq: f64| -> Vec<Complex64> {
        (0..m)
            .map(|n| Complex64::from_polar(1.0, -2.0 * PI * freq * n as f64 / m as f64))
            .collect()
    };
    let e1 = phase(xi[0]);
    let e2 = phase(xi[1]);
    let values = f.values();
    let mut acc = Complex64::default();
    for (n1, row) in values.chunks_exact(m).enumerate() {
        let inner: Complex64 = row.iter().zip(&e2).map(|(v, e)| v * e).sum();
        acc += inner * e1[n1];
    }
    acc / m as f64
}

/// `∫_{2^(j-1)}^{2^(j+1)} |f̂(λ cos η, λ sin η)|² dλ` by the trapezoid rule
/// on [`SLICE_DENSITY`] samples per unit of `λ`.
pub fn radial_slice_energy(f: &Grid, eta: f64, j: u32) -> Result<f64> {
    if j == 0 || !eta.is_finite() {
        return Err(Error::InvalidInput(format!("need j >= 1 and finite eta, got j={j}, eta={eta}")));
    }
    let lo = 2f64.powi(j as i32 - 1);
    let hi = 2f64.powi(j as i32 + 1);
    let steps = ((hi - lo) as usize) * SLICE_DENSITY;
    let h = (hi - lo) / steps as f64;
    let (c, s) = (eta.cos(), eta.sin());
    let samples: Vec<f64> = (0..=steps)
        .into_par_iter()
        .map(|i| {
            let lambda = lo + i as f64 * h;
            ndft(f, [lambda * c, lambda * s]).norm_sqr()
        })
        .collect();
    let inner: f64 = samples[1..steps].iter().sum();
    Ok(h * (inner + 0.5 * (samples[0] + samples[steps])))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SliceEnergy {
    pub eta: f64,
    pub j: u32,
    pub energy: f64,
}

/// `count` directions equispaced in `(-π/2, π/2]`.
pub fn slice_directions(count: usize) -> Vec<f64> {
    (1..=count).map(|i| -PI / 2.0 + PI * i as f64 / count as f64).collect()
}

pub fn slice_table(f: &Grid, etas: &[f64], j: u32) -> Result<Vec<SliceEnergy>> {
    etas.iter()
        .map(|&eta| Ok(SliceEnergy { eta, j, energy: radial_slice_energy(f, eta, j)? }))
        .collect()
}

pub fn slices_to_csv(rows: &[SliceEnergy]) -> String {
    let mut out = String::from("eta,j,energy\n");
    for r in rows {
        out.push_str(&format!("{},{},{:e}\n", r.eta, r.j, r.energy));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{gaussian_bump, straight_edge_image};
    use crate::transform::forward_spectrum;

    #[test]
    fn ndft_matches_fft_on_grid() {
        let f = straight_edge_image(32);
        let s = forward_spectrum(&f);
        for xi in [[0i64, 0], [3, -5], [-16, 7], [15, 15]] {
            let d = ndft(&f, [xi[0] as f64, xi[1] as f64]) - s.get(xi);
            assert!(d.norm() < 1e-12);
        }
    }

    #[test]
    fn constant_grid_gives_dirichlet_kernel() {
        // The sampled constant has f̂(λ, 0) = M⁻¹ Σ_n e^{-2πiλn/M} · M, a
        // Dirichlet kernel: zero at nonzero integers, nonzero in between.
        let m = 32;
        let f = Grid::from_fn(m, |_, _| 1.0);
        let dirichlet = |l: f64| {
            let x = PI * l / m as f64;
            ((m as f64 * x).sin() / x.sin()).powi(2)
        };
        for l in [1.0, 2.0, 5.0] {
            assert!(ndft(&f, [l, 0.0]).norm() < 1e-12);
        }
        for l in [1.5, 2.25, 7.75] {
            let v = ndft(&f, [l, 0.0]).norm_sqr();
            assert!((v - dirichlet(l)).abs() < 1e-9 * dirichlet(l));
        }
        let j = 2;
        let (lo, hi) = (2.0, 8.0);
        let steps = 6 * SLICE_DENSITY;
        let h = (hi - lo) / steps as f64;
        let oracle: f64 = (0..=steps)
            .map(|i| {
                let w = if i == 0 || i == steps { 0.5 } else { 1.0 };
                w * dirichlet(lo + i as f64 * h)
            })
            .sum::<f64>()
            * h;
        let e = radial_slice_energy(&f, 0.0, j).unwrap();
        assert!((e - oracle).abs() < 1e-9 * oracle);
        assert_eq!(radial_slice_energy(&Grid::zeros(m), 0.3, j).unwrap(), 0.0);
    }

    #[test]
    fn gaussian_is_isotropic() {
        let f = gaussian_bump(64, 0.06);
        let base = radial_slice_energy(&f, 0.0, 2).unwrap();
        for eta in slice_directions(6) {
            let e = radial_slice_energy(&f, eta, 2).unwrap();
            assert!((e - base).abs() < 0.01 * base, "{eta}: {e} vs {base}");
        }
    }

    #[test]
    fn quarter_rotation_symmetry() {
        let f = straight_edge_image(32).shifted(3, 7);
        let g = f.rotated_quarter();
        for &eta in &[0.1, 0.7, -1.2] {
            let a = radial_slice_energy(&f, eta, 3).unwrap();
            // The rotation maps direction η of f̂ to η + π/2 of ĝ.
            let b = radial_slice_energy(&g, eta + PI / 2.0, 3).unwrap();
            assert!((a - b).abs() <= 1e-10 * a);
        }
    }

    #[test]
    fn edge_anisotropy_grows_with_scale() {
        let f = straight_edge_image(64);
        let ratio = |j| {
            radial_slice_energy(&f, 0.0, j).unwrap() / radial_slice_energy(&f, PI / 4.0, j).unwrap()
        };
        let r: Vec<f64> = (2..=4).map(ratio).collect();
        assert!(r[0] > 1.0 && r.windows(2).all(|w| w[1] > w[0]), "{r:?}");
    }
}
