//! Discrete analysis and synthesis with the α-curvelet frame.
//!
//! `analyze` takes the unitary spectrum, multiplies by each window, folds the
//! windowed support into its cell and applies the cell's twisted DFT.
//! `synthesize` is the exact adjoint. Because the squared windows sum to one
//! and every fold is injective, the frame is Parseval: `synthesize ∘ analyze`
//! is the identity and coefficient energy equals image energy.

mod cell;
mod coeffs;
pub mod fft;

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;

pub use cell::CellPlan;
pub use coeffs::{BlockId, CoeffBlock, CoeffIndex, CoefficientSet, NORM_CONVENTION};
pub use fft::{forward_spectrum, inverse_spectrum, Spectrum};

use crate::error::{Error, Result};
use crate::frame::{CellLayout, FrameGeometry, FrameParams, WedgeIndex, WindowTables};
use crate::grid::{Grid, ValueKind};

struct Block {
    id: BlockId,
    plan: CellPlan,
    /// Centered spectrum index of each support point.
    spectrum_index: Vec<usize>,
    chi: Vec<f64>,
    cell_index: Vec<usize>,
}

/// Windowed spectrum restricted to one wedge support: `d_J(ξ) = f̂(ξ) χ_J(ξ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct WedgeData {
    pub index: WedgeIndex,
    pub points: Vec<[i64; 2]>,
    pub values: Vec<Complex64>,
}

impl WedgeData {
    pub fn norm_sqr(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum()
    }
}

/// A fully built frame: parameters, geometry, window tables and cell plans.
pub struct Frame {
    params: FrameParams,
    geometry: FrameGeometry,
    windows: WindowTables,
    digest: String,
    blocks: Vec<Block>,
}

impl Frame {
    pub fn new(params: FrameParams) -> Result<Self> {
        let windows = WindowTables::tabulate(&params)?;
        let geometry = FrameGeometry::from_tables(&params, &windows)?;
        let mut planner = FftPlanner::new();

        let dense_block = |id: BlockId, layout: CellLayout, table: &[f64], planner: &mut FftPlanner<f64>| {
            let mut spectrum_index = Vec::new();
            let mut chi = Vec::new();
            let mut cell_index = Vec::new();
            for (i, &v) in table.iter().enumerate() {
                if v > 0.0 {
                    spectrum_index.push(i);
                    chi.push(v);
                    cell_index.push(layout.flat_index(windows.frequency(i)));
                }
            }
            Block {
                id,
                plan: CellPlan::new(layout, planner),
                spectrum_index,
                chi,
                cell_index,
            }
        };

        let mut blocks = vec![
            dense_block(BlockId::Coarse, geometry.coarse, &windows.chi_coarse, &mut planner),
            dense_block(BlockId::Residual, geometry.residual, &windows.chi_residual, &mut planner),
        ];
        for (w, g) in windows.wedges.iter().zip(&geometry.wedges) {
            debug_assert_eq!(w.index, g.index);
            blocks.push(Block {
                id: BlockId::Wedge(w.index),
                plan: CellPlan::new(g.cell, &mut planner),
                spectrum_index: w.points.iter().map(|&xi| windows.index(xi)).collect(),
                chi: w.values.clone(),
                cell_index: w.points.iter().map(|&xi| g.cell.flat_index(xi)).collect(),
            });
        }

        let digest = geometry.digest();
        Ok(Frame {
            params,
            geometry,
            windows,
            digest,
            blocks,
        })
    }

    pub fn params(&self) -> &FrameParams {
        &self.params
    }

    pub fn geometry(&self) -> &FrameGeometry {
        &self.geometry
    }

    pub fn windows(&self) -> &WindowTables {
        &self.windows
    }

    pub fn digest(&self) -> &str {
        &self.digest
    }

    pub fn size(&self) -> usize {
        self.params.size
    }

    pub fn block_ids(&self) -> impl Iterator<Item = BlockId> + '_ {
        self.blocks.iter().map(|b| b.id)
    }

    pub fn layout(&self, id: BlockId) -> Result<CellLayout> {
        Ok(self.block(id)?.plan.layout)
    }

    fn block(&self, id: BlockId) -> Result<&Block> {
        self.blocks
            .iter()
            .find(|b| b.id == id)
            .ok_or_else(|| Error::InvalidIndex(format!("no block {id:?} in this frame")))
    }

    fn check_grid(&self, grid: &Grid) -> Result<()> {
        if grid.size() != self.size() {
            return Err(Error::ShapeMismatch(format!(
                "grid is {0}x{0}, frame expects {1}x{1}",
                grid.size(),
                self.size()
            )));
        }
        Ok(())
    }

    /// `f̂ · χ_J` over the support of wedge `J`.
    pub fn wedge_extract(&self, spectrum: &Spectrum, index: WedgeIndex) -> Result<WedgeData> {
        let window = self
            .windows
            .wedge(index)
            .ok_or_else(|| Error::InvalidIndex(format!("no wedge {index:?}")))?;
        Ok(WedgeData {
            index,
            points: window.points.clone(),
            values: window
                .points
                .iter()
                .zip(&window.values)
                .map(|(xi, chi)| spectrum.get(*xi) * chi)
                .collect(),
        })
    }

    /// Folds wedge data into its cell and applies the cell DFT.
    pub fn wedge_to_coeffs(&self, data: &WedgeData) -> Result<CoeffBlock> {
        let geometry = self.geometry.wedge(data.index)?;
        let block = self.block(BlockId::Wedge(data.index))?;
        let layout = geometry.cell;
        let mut cell = vec![Complex64::default(); layout.len()];
        let mut filled = vec![false; layout.len()];
        for (xi, v) in data.points.iter().zip(&data.values) {
            let c = layout.flat_index(*xi);
            if filled[c] {
                return Err(Error::Construction(format!(
                    "wedge {:?}: point {xi:?} does not inject into the {}x{} cell",
                    data.index, layout.rows, layout.cols
                )));
            }
            filled[c] = true;
            cell[c] = *v;
        }
        block.plan.analyze(&mut cell);
        Ok(CoeffBlock {
            id: block.id,
            rows: layout.rows,
            cols: layout.cols,
            data: cell,
        })
    }

    fn analyze_block(&self, block: &Block, spectrum: &Spectrum) -> CoeffBlock {
        let layout = block.plan.layout;
        let mut cell = vec![Complex64::default(); layout.len()];
        let data = spectrum.data();
        for ((&s, &chi), &c) in block.spectrum_index.iter().zip(&block.chi).zip(&block.cell_index) {
            cell[c] = data[s] * chi;
        }
        block.plan.analyze(&mut cell);
        CoeffBlock {
            id: block.id,
            rows: layout.rows,
            cols: layout.cols,
            data: cell,
        }
    }

    /// All coefficients `θ_μ = ⟨f, ψ_μ⟩`.
    pub fn analyze(&self, grid: &Grid) -> Result<CoefficientSet> {
        self.check_grid(grid)?;
        let spectrum = forward_spectrum(grid);
        Ok(self.analyze_spectrum(&spectrum, grid.kind()))
    }

    pub fn analyze_spectrum(&self, spectrum: &Spectrum, source: ValueKind) -> CoefficientSet {
        let blocks = self
            .blocks
            .par_iter()
            .map(|b| self.analyze_block(b, spectrum))
            .collect();
        CoefficientSet {
            params: self.params.clone(),
            digest: self.digest.clone(),
            source,
            blocks,
        }
    }

    /// Spectrum of the synthesized image, `Σ_J χ_J · unfold(cell_J⁻¹ c_J)`.
    pub fn synthesize_spectrum(&self, coeffs: &CoefficientSet) -> Result<Spectrum> {
        if coeffs.digest != self.digest {
            return Err(Error::DigestMismatch {
                expected: self.digest.clone(),
                found: coeffs.digest.clone(),
            });
        }
        if coeffs.blocks.len() != self.blocks.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} coefficient blocks, frame has {}",
                coeffs.blocks.len(),
                self.blocks.len()
            )));
        }
        for (b, c) in self.blocks.iter().zip(&coeffs.blocks) {
            let layout = b.plan.layout;
            if b.id != c.id || c.rows != layout.rows || c.cols != layout.cols || c.data.len() != layout.len() {
                return Err(Error::ShapeMismatch(format!(
                    "block {:?} is {}x{}, frame expects {:?} {}x{}",
                    c.id, c.rows, c.cols, b.id, layout.rows, layout.cols
                )));
            }
        }
        let contributions: Vec<Vec<Complex64>> = self
            .blocks
            .par_iter()
            .zip(&coeffs.blocks)
            .map(|(b, c)| {
                let mut cell = c.data.clone();
                b.plan.synthesize(&mut cell);
                b.cell_index
                    .iter()
                    .zip(&b.chi)
                    .map(|(&i, &chi)| cell[i] * chi)
                    .collect()
            })
            .collect();
        let mut spectrum = Spectrum::zeros(self.size());
        let data = spectrum.data_mut();
        for (b, contrib) in self.blocks.iter().zip(contributions) {
            for (&s, v) in b.spectrum_index.iter().zip(contrib) {
                data[s] += v;
            }
        }
        Ok(spectrum)
    }

    /// Adjoint of [`Frame::analyze`]; the inverse on its range.
    ///
    /// Coefficients of a real image synthesize to a real grid (imaginary
    /// roundoff is dropped).
    pub fn synthesize(&self, coeffs: &CoefficientSet) -> Result<Grid> {
        let grid = inverse_spectrum(&self.synthesize_spectrum(coeffs)?);
        Ok(match coeffs.source {
            ValueKind::Real => grid.to_real(),
            ValueKind::Complex => grid,
        })
    }

    /// All-zero coefficient set for this frame.
    pub fn zero_coefficients(&self, source: ValueKind) -> CoefficientSet {
        CoefficientSet {
            params: self.params.clone(),
            digest: self.digest.clone(),
            source,
            blocks: self
                .blocks
                .iter()
                .map(|b| CoeffBlock {
                    id: b.id,
                    rows: b.plan.layout.rows,
                    cols: b.plan.layout.cols,
                    data: vec![Complex64::default(); b.plan.layout.len()],
                })
                .collect(),
        }
    }

    /// The frame element `ψ_μ` (a unit coefficient at `μ`, synthesized).
    pub fn atom(&self, index: CoeffIndex) -> Result<Grid> {
        let mut coeffs = self.zero_coefficients(ValueKind::Complex);
        let block = coeffs
            .block_mut(index.block)
            .ok_or_else(|| Error::InvalidIndex(format!("no block {:?}", index.block)))?;
        let (k1, k2) = index.k;
        if k1 >= block.rows || k2 >= block.cols {
            return Err(Error::InvalidIndex(format!(
                "k = ({k1}, {k2}) outside {}x{} cell",
                block.rows, block.cols
            )));
        }
        block.data[k1 * block.cols + k2] = Complex64::new(1.0, 0.0);
        self.synthesize(&coeffs)
    }

    /// Position of `ψ_μ` on the unit torus.
    pub fn atom_position(&self, index: CoeffIndex) -> Result<[f64; 2]> {
        let layout = self.layout(index.block)?;
        Ok(layout.position(index.k.0, index.k.1))
    }
}
