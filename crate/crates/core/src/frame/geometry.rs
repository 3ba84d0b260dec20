use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::cell::{smooth_numbers, CellLayout};
use super::params::{FrameParams, WedgeIndex};
use super::tables::WindowTables;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScaleGeometry {
    pub j: u32,
    pub orientations: usize,
    /// Characteristic angle `ω_j`.
    pub omega: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WedgeGeometry {
    pub index: WedgeIndex,
    /// Orientation `ω_J = ℓ ω_j`.
    pub omega: f64,
    /// Rotation by `ω_J`, row-major.
    pub rotation: [[f64; 2]; 2],
    /// Half side lengths `(2^(j-1), 2^(jα-1))` of the bounding rectangle in rotated coordinates.
    pub half_lengths: [f64; 2],
    pub cell: CellLayout,
    pub support_size: usize,
}

/// Scales, orientations and coefficient cell layouts of a frame.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FrameGeometry {
    pub params: FrameParams,
    pub scales: Vec<ScaleGeometry>,
    pub coarse: CellLayout,
    pub residual: CellLayout,
    pub wedges: Vec<WedgeGeometry>,
}

pub fn rotation(angle: f64) -> [[f64; 2]; 2] {
    let (s, c) = angle.sin_cos();
    [[c, -s], [s, c]]
}

impl FrameGeometry {
    pub fn build(params: &FrameParams) -> Result<Self> {
        let tables = WindowTables::tabulate(params)?;
        Self::from_tables(params, &tables)
    }

    /// Fits the coefficient cells to the tabulated supports.
    pub fn from_tables(params: &FrameParams, tables: &WindowTables) -> Result<Self> {
        let scales = params
            .scales()
            .map(|j| ScaleGeometry {
                j,
                orientations: params.orientations(j),
                omega: params.characteristic_angle(j),
            })
            .collect();

        let coarse_support = tables.coarse_support();
        let reach = coarse_support
            .iter()
            .map(|xi| xi[0].abs().max(xi[1].abs()))
            .max()
            .unwrap_or(0) as usize;
        let side = smooth_numbers(2 * reach + 1, usize::MAX).next().unwrap();
        let coarse = CellLayout::square(side);
        coarse.verify_injective(&coarse_support)?;

        let residual = CellLayout::square(params.size);

        let wedges = tables
            .wedges
            .iter()
            .map(|w| {
                let index = w.index;
                let j = index.j;
                let omega = params.orientation_angle(index);
                let min_rows = 1usize << (j + 1);
                let min_cols = 1usize << ((params.alpha * j as f64 - 1e-9).ceil().max(0.0) as u32 + 2);
                let cell = CellLayout::fit(&w.points, -omega, min_rows, min_cols)?;
                Ok(WedgeGeometry {
                    index,
                    omega,
                    rotation: rotation(omega),
                    half_lengths: [
                        2f64.powi(j as i32 - 1),
                        2f64.powf(j as f64 * params.alpha - 1.0),
                    ],
                    cell,
                    support_size: w.points.len(),
                })
            })
            .collect::<Result<Vec<_>>>()?;

        Ok(FrameGeometry {
            params: params.clone(),
            scales,
            coarse,
            residual,
            wedges,
        })
    }

    pub fn wedge(&self, index: WedgeIndex) -> Result<&WedgeGeometry> {
        self.wedges
            .iter()
            .find(|w| w.index == index)
            .ok_or_else(|| Error::InvalidIndex(format!("no wedge {index:?}")))
    }

    /// Total number of coefficients.
    pub fn coefficient_count(&self) -> usize {
        self.coarse.len() + self.residual.len() + self.wedges.iter().map(|w| w.cell.len()).sum::<usize>()
    }

    /// Hex SHA-256 of the canonical JSON encoding; identifies the frame in coefficient files.
    pub fn digest(&self) -> String {
        let bytes = serde_json::to_vec(self).expect("geometry serializes");
        hex::encode(Sha256::digest(&bytes))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_is_orthogonal() {
        for i in 0..16 {
            let r = rotation(i as f64 * 0.37);
            let det = r[0][0] * r[1][1] - r[0][1] * r[1][0];
            assert!((det - 1.0).abs() < 1e-14);
            let c0 = r[0][0] * r[0][0] + r[1][0] * r[1][0];
            let dot = r[0][0] * r[0][1] + r[1][0] * r[1][1];
            assert!((c0 - 1.0).abs() < 1e-14 && dot.abs() < 1e-14);
        }
        let r = rotation(std::f64::consts::FRAC_PI_2);
        let v = [r[0][0], r[1][0]];
        assert!(v[0].abs() < 1e-15 && (v[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn geometry_shapes_respect_lower_bounds() {
        let p = FrameParams::new(0.5, 128).unwrap();
        let g = FrameGeometry::build(&p).unwrap();
        assert_eq!(g.scales.len(), 5);
        for w in &g.wedges {
            let j = w.index.j;
            assert!(w.cell.rows >= 1 << j);
            assert!(w.cell.cols >= 1 << (0.5 * j as f64).ceil() as u32);
            assert!(w.cell.len() >= w.support_size);
        }
        assert_eq!(g.coarse, CellLayout::square(3));
    }

    #[test]
    fn digest_is_stable_and_discriminating() {
        let a = FrameGeometry::build(&FrameParams::new(0.5, 64).unwrap()).unwrap();
        let b = FrameGeometry::build(&FrameParams::new(0.5, 64).unwrap()).unwrap();
        let c = FrameGeometry::build(&FrameParams::new(0.6, 64).unwrap()).unwrap();
        assert_eq!(a.digest(), b.digest());
        assert_ne!(a.digest(), c.digest());
    }
}
