use std::f64::consts::PI;

use super::params::{FrameParams, WedgeIndex};
use crate::error::{Error, Result};

/// Maximal tolerated deviation of the squared windows from a partition of unity.
pub const CALDERON_TOLERANCE: f64 = 1e-12;

/// Normalized window `χ_J` stored over its support.
#[derive(Clone, Debug)]
pub struct WedgeWindow {
    pub index: WedgeIndex,
    /// Integer frequencies, sorted lexicographically.
    pub points: Vec<[i64; 2]>,
    pub values: Vec<f64>,
}

impl WedgeWindow {
    pub fn value_at(&self, xi: [i64; 2]) -> f64 {
        self.points
            .binary_search(&xi)
            .map(|i| self.values[i])
            .unwrap_or(0.0)
    }
}

/// Tabulated windows on the centered integer frequency grid `{-M/2, …, M/2-1}²`.
///
/// Dense tables use row-major centered indexing, see [`WindowTables::index`].
#[derive(Clone, Debug)]
pub struct WindowTables {
    pub size: usize,
    pub psi: Vec<f64>,
    pub chi_coarse: Vec<f64>,
    pub chi_residual: Vec<f64>,
    pub wedges: Vec<WedgeWindow>,
}

impl WindowTables {
    /// Tabulates `Ψ`, `χ_0`, the residual window and every `χ_J`, then checks
    /// the discrete Calderón identity on the whole grid.
    pub fn tabulate(params: &FrameParams) -> Result<Self> {
        params.validate()?;
        let m = params.size;
        let half = (m / 2) as i64;
        let mut psi = vec![0.0; m * m];
        let mut chi_coarse = vec![0.0; m * m];
        let mut chi_residual = vec![0.0; m * m];

        for k1 in -half..half {
            for k2 in -half..half {
                let idx = Self::index_for(m, [k1, k2]);
                let r = (k1 as f64).hypot(k2 as f64);
                let w0 = params.radial_window(0, r);
                let wr = params.residual_window(r);
                chi_coarse[idx] = w0;
                chi_residual[idx] = wr;
                psi[idx] = w0 * w0 + wr * wr;
            }
        }

        let mut wedges: Vec<WedgeWindow> = params
            .wedge_indices()
            .into_iter()
            .map(|index| WedgeWindow {
                index,
                points: Vec::new(),
                values: Vec::new(),
            })
            .collect();
        let mut offset = 0;
        for j in params.scales() {
            let count = params.orientations(j);
            let outer = (1i64 << (j + 1)).min(half);
            for k1 in -outer..=outer {
                for k2 in -outer..=outer {
                    if k1 < -half || k2 < -half || k1 >= half || k2 >= half {
                        continue;
                    }
                    let r = (k1 as f64).hypot(k2 as f64);
                    let w = params.radial_window(j, r);
                    if w == 0.0 {
                        continue;
                    }
                    let theta = (k2 as f64).atan2(k1 as f64);
                    let idx = Self::index_for(m, [k1, k2]);
                    for ell in candidate_orientations(theta, count) {
                        let v = w * params.angular_window(j, ell, theta);
                        if v > 0.0 {
                            let wedge = &mut wedges[offset + ell];
                            wedge.points.push([k1, k2]);
                            wedge.values.push(v);
                            psi[idx] += v * v;
                        }
                    }
                }
            }
            offset += count;
        }

        for (idx, p) in psi.iter().enumerate() {
            if *p > 0.0 {
                let norm = p.sqrt();
                chi_coarse[idx] /= norm;
                chi_residual[idx] /= norm;
            }
        }
        for wedge in &mut wedges {
            for (xi, v) in wedge.points.iter().zip(wedge.values.iter_mut()) {
                *v /= psi[Self::index_for(m, *xi)].sqrt();
            }
            // scan order is already lexicographic in (k1, k2)
            debug_assert!(wedge.points.windows(2).all(|w| w[0] < w[1]));
        }

        let tables = WindowTables {
            size: m,
            psi,
            chi_coarse,
            chi_residual,
            wedges,
        };
        let deviation = tables.calderon_deviation();
        if deviation > CALDERON_TOLERANCE {
            return Err(Error::Construction(format!(
                "Calderón identity violated by {deviation:e}"
            )));
        }
        Ok(tables)
    }

    pub fn index_for(size: usize, xi: [i64; 2]) -> usize {
        let half = (size / 2) as i64;
        ((xi[0] + half) as usize) * size + (xi[1] + half) as usize
    }

    pub fn index(&self, xi: [i64; 2]) -> usize {
        Self::index_for(self.size, xi)
    }

    pub fn frequency(&self, idx: usize) -> [i64; 2] {
        let half = (self.size / 2) as i64;
        [
            (idx / self.size) as i64 - half,
            (idx % self.size) as i64 - half,
        ]
    }

    pub fn wedge(&self, index: WedgeIndex) -> Option<&WedgeWindow> {
        self.wedges.iter().find(|w| w.index == index)
    }

    /// Grid points where the coarse window is nonzero.
    pub fn coarse_support(&self) -> Vec<[i64; 2]> {
        self.dense_support(&self.chi_coarse)
    }

    pub fn residual_support(&self) -> Vec<[i64; 2]> {
        self.dense_support(&self.chi_residual)
    }

    fn dense_support(&self, table: &[f64]) -> Vec<[i64; 2]> {
        table
            .iter()
            .enumerate()
            .filter(|(_, v)| **v > 0.0)
            .map(|(i, _)| self.frequency(i))
            .collect()
    }

    /// Sum of all squared windows at each grid point.
    pub fn squared_sum(&self) -> Vec<f64> {
        let mut total: Vec<f64> = self
            .chi_coarse
            .iter()
            .zip(&self.chi_residual)
            .map(|(a, b)| a * a + b * b)
            .collect();
        for wedge in &self.wedges {
            for (xi, v) in wedge.points.iter().zip(&wedge.values) {
                total[self.index(*xi)] += v * v;
            }
        }
        total
    }

    /// `max_ξ |χ_0² + χ_res² + Σ_J χ_J² - 1|` over the whole grid.
    pub fn calderon_deviation(&self) -> f64 {
        self.squared_sum()
            .iter()
            .map(|s| (s - 1.0).abs())
            .fold(0.0, f64::max)
    }
}

/// Orientations whose angular window can be nonzero at direction `theta`.
///
/// Wedge `ℓ` is centred at `-ℓπ/L` modulo π and reaches 3/4 of the spacing to
/// either side, so only the nearest centre and one neighbour can contribute.
fn candidate_orientations(theta: f64, count: usize) -> impl Iterator<Item = usize> {
    let l = count as i64;
    let nearest = (-theta * count as f64 / PI).round() as i64;
    let mut out = [usize::MAX; 3];
    for (slot, d) in out.iter_mut().zip([-1i64, 0, 1]) {
        *slot = (nearest + d).rem_euclid(l) as usize;
    }
    out.sort_unstable();
    let mut last = usize::MAX;
    out.into_iter().filter(move |&e| {
        let fresh = e != last;
        last = e;
        fresh
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tables(alpha: f64, m: usize) -> (FrameParams, WindowTables) {
        let p = FrameParams::new(alpha, m).unwrap();
        let t = WindowTables::tabulate(&p).unwrap();
        (p, t)
    }

    #[test]
    fn calderon_identity_holds() {
        for &alpha in &[0.0, 0.5, 0.75, 1.0] {
            let (_, t) = tables(alpha, 64);
            assert!(t.calderon_deviation() <= CALDERON_TOLERANCE);
        }
    }

    #[test]
    fn psi_bounds_and_origin() {
        let (_, t) = tables(0.5, 64);
        assert_eq!(t.psi[t.index([0, 0])], 1.0);
        assert_eq!(t.chi_coarse[t.index([0, 0])], 1.0);
        for &p in &t.psi {
            assert!((1.0..=8.0).contains(&p), "Ψ = {p}");
        }
    }

    #[test]
    fn windows_are_bounded_and_antipodal() {
        let (_, t) = tables(0.6, 128);
        for w in &t.wedges {
            for (xi, v) in w.points.iter().zip(&w.values) {
                assert!(*v > 0.0 && *v <= 1.0);
                let mirrored = w.value_at([-xi[0], -xi[1]]);
                if -xi[0] < 64 && -xi[1] < 64 {
                    assert!((mirrored - v).abs() <= 1e-14);
                }
            }
        }
    }

    #[test]
    fn wedge_vanishes_outside_its_sector() {
        let (p, t) = tables(0.5, 128);
        let j = 4;
        let count = p.orientations(j);
        let omega = p.characteristic_angle(j);
        for w in t.wedges.iter().filter(|w| w.index.j == j) {
            let centre = -(w.index.ell as f64) * omega;
            for xi in &w.points {
                let r = (xi[0] as f64).hypot(xi[1] as f64);
                assert!(r > 8.0 && r < 32.0);
                let theta = (xi[1] as f64).atan2(xi[0] as f64);
                // distance to the centre direction modulo π
                let d = (theta - centre).rem_euclid(PI);
                let d = d.min(PI - d);
                assert!(d < 0.75 * PI / count as f64 + 1e-12);
            }
        }
    }

    #[test]
    fn candidates_cover_all_nonzero_orientations() {
        let p = FrameParams::new(0.25, 256).unwrap();
        let j = 6;
        let count = p.orientations(j);
        for i in 0..720 {
            let theta = -PI + i as f64 * PI / 360.0;
            let cands: Vec<usize> = candidate_orientations(theta, count).collect();
            for ell in 0..count {
                if p.angular_window(j, ell, theta) > 0.0 {
                    assert!(cands.contains(&ell), "θ={theta} ℓ={ell}");
                }
            }
        }
    }
}
