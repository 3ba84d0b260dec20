use serde::{Deserialize, Serialize};

use crate::approx::{fit_loglog, LineFit};
use crate::error::{Error, Result};
use crate::frame::WedgeIndex;
use crate::grid::Grid;
use crate::transform::{forward_spectrum, Frame};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WedgeEnergy {
    pub ell: usize,
    /// `ω_J = ℓ ω_j`.
    pub omega: f64,
    /// `ℓ_J = 1 + 2^((1-α)j) |sin ω_J|`.
    pub ell_j: f64,
    /// `Σ_ξ |f̂(ξ) χ_J(ξ)|²`.
    pub energy: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WedgeEnergyTable {
    pub j: u32,
    pub alpha: f64,
    /// `Σ |f̂(ξ)|²` over the support of the radial window of band `j`.
    pub band_energy: f64,
    pub wedges: Vec<WedgeEnergy>,
}

/// Energy of the windowed spectrum in every wedge of scale `j`.
pub fn wedge_energy_table(f: &Grid, frame: &Frame, j: u32) -> Result<WedgeEnergyTable> {
    let params = frame.params();
    if !params.scales().contains(&j) {
        return Err(Error::InvalidIndex(format!("scale {j} outside {:?}", params.scales())));
    }
    if f.size() != frame.size() {
        return Err(Error::ShapeMismatch(format!("grid {} vs frame {}", f.size(), frame.size())));
    }
    let spectrum = forward_spectrum(f);
    let windows = frame.windows();
    let band_energy = (0..spectrum.data().len())
        .filter(|&i| {
            let xi = windows.frequency(i);
            params.radial_window(j, (xi[0] as f64).hypot(xi[1] as f64)) > 0.0
        })
        .map(|i| spectrum.data()[i].norm_sqr())
        .sum();
    let aniso = 2f64.powf((1.0 - params.alpha) * j as f64);
    let wedges = (0..params.orientations(j))
        .map(|ell| {
            let index = WedgeIndex::new(j, ell);
            let energy = frame.wedge_extract(&spectrum, index)?.norm_sqr();
            let omega = params.orientation_angle(index);
            Ok(WedgeEnergy { ell, omega, ell_j: 1.0 + aniso * omega.sin().abs(), energy })
        })
        .collect::<Result<_>>()?;
    Ok(WedgeEnergyTable { j, alpha: params.alpha, band_energy, wedges })
}

impl WedgeEnergyTable {
    pub fn total(&self) -> f64 {
        self.wedges.iter().map(|w| w.energy).sum()
    }

    /// Energies averaged over `ℓ - 1, ℓ, ℓ + 1` (cyclically; each distinct
    /// neighbour counted once).
    pub fn smoothed(&self) -> Vec<f64> {
        let n = self.wedges.len();
        (0..n)
            .map(|l| {
                let mut idx = vec![(l + n - 1) % n, l, (l + 1) % n];
                idx.sort_unstable();
                idx.dedup();
                idx.iter().map(|&i| self.wedges[i].energy).sum::<f64>() / idx.len() as f64
            })
            .collect()
    }

    /// Whether the smoothed energies never increase with `ℓ_J`. Wedges with
    /// equal `ℓ_J` (to `1e-12`) are not compared.
    pub fn smoothed_nonincreasing(&self, rel_tol: f64) -> bool {
        let s = self.smoothed();
        let n = s.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                self.wedges[a].ell_j + 1e-12 >= self.wedges[b].ell_j || s[a] * (1.0 + rel_tol) >= s[b]
            })
        })
    }

    /// Log-log fit of smoothed energy against `ℓ_J`, dropping wedges whose
    /// `ℓ_J` is among the `exclude` smallest distinct values.
    pub fn decay_fit(&self, exclude: usize) -> Result<LineFit> {
        let mut levels: Vec<f64> = self.wedges.iter().map(|w| w.ell_j).collect();
        levels.sort_by(f64::total_cmp);
        levels.dedup_by(|a, b| (*a - *b).abs() <= 1e-12);
        let cutoff = match levels.get(exclude) {
            Some(&v) => v - 1e-12,
            None => return Err(Error::InvalidInput("no wedges left after exclusion".into())),
        };
        let s = self.smoothed();
        let (xs, ys): (Vec<f64>, Vec<f64>) = self
            .wedges
            .iter()
            .zip(&s)
            .filter(|(w, _)| w.ell_j >= cutoff)
            .map(|(w, e)| (w.ell_j, *e))
            .unzip();
        fit_loglog(&xs, &ys)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("j,ell,omega,ell_J,energy\n");
        for w in &self.wedges {
            out.push_str(&format!("{},{},{},{},{:e}\n", self.j, w.ell, w.omega, w.ell_j, w.energy));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::straight_edge_image;
    use crate::frame::FrameParams;

    fn frame() -> Frame {
        Frame::new(FrameParams::new(0.5, 64).unwrap()).unwrap()
    }

    #[test]
    fn disjoint_band_has_no_energy() {
        let frame = frame();
        // A pure frequency ξ = (2, 0) lies outside band 4 = [8, 32].
        let f = Grid::from_fn(64, |x1, _| (2.0 * std::f64::consts::PI * 2.0 * x1).cos());
        let t = wedge_energy_table(&f, &frame, 4).unwrap();
        assert!(t.wedges.iter().all(|w| w.energy < 1e-24));
        let t1 = wedge_energy_table(&f, &frame, 1).unwrap();
        assert!(t1.total() > 1.0);
    }

    #[test]
    fn wedge_energies_bounded_by_band() {
        let frame = frame();
        let f = straight_edge_image(64);
        for j in frame.params().scales() {
            let t = wedge_energy_table(&f, &frame, j).unwrap();
            assert!(t.total() <= t.band_energy + 1e-10);
            assert!(t.wedges.iter().all(|w| w.energy >= 0.0));
        }
    }

    #[test]
    fn translation_invariance() {
        let frame = frame();
        let f = straight_edge_image(64);
        let g = f.shifted(5, 11);
        let a = wedge_energy_table(&f, &frame, 3).unwrap();
        let b = wedge_energy_table(&g, &frame, 3).unwrap();
        for (x, y) in a.wedges.iter().zip(&b.wedges) {
            assert!((x.energy - y.energy).abs() <= 1e-10 * x.energy.max(1e-300));
        }
    }

    #[test]
    fn ell_j_geometry() {
        let frame = frame();
        let t = wedge_energy_table(&Grid::zeros(64), &frame, 4).unwrap();
        assert_eq!(t.wedges.len(), 4);
        assert_eq!(t.wedges[0].ell_j, 1.0);
        assert!((t.wedges[2].ell_j - 5.0).abs() < 1e-12);
    }
}
