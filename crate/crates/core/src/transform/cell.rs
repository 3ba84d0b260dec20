//! Twisted cell DFT.
//!
//! For a cell folded modulo the lattice generated by `(rows, q)` and
//! `(0, cols)`, the characters of the folded support are
//! `exp(2πi (k1 a0 / rows + k2 b0 / cols - k2 q a0 / (rows·cols)))`.
//! Applying them is a row DFT, a diagonal twiddle and a column DFT, so the
//! map stays unitary while each coefficient samples the band-passed image
//! at a point of the dual (sheared) lattice.

use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use super::fft::transpose;
use crate::frame::CellLayout;

pub struct CellPlan {
    pub layout: CellLayout,
    rows_inverse: Arc<dyn Fft<f64>>,
    rows_forward: Arc<dyn Fft<f64>>,
    cols_inverse: Arc<dyn Fft<f64>>,
    cols_forward: Arc<dyn Fft<f64>>,
    twiddle: Option<Vec<Complex64>>,
    scale: f64,
}

impl CellPlan {
    pub fn new(layout: CellLayout, planner: &mut FftPlanner<f64>) -> Self {
        let (rows, cols) = (layout.rows, layout.cols);
        let twiddle = (layout.shear != 0).then(|| {
            let period = (rows * cols) as i128;
            let q = layout.shear as i128;
            let mut tw = Vec::with_capacity(rows * cols);
            for a0 in 0..rows as i128 {
                for k2 in 0..cols as i128 {
                    let r = (k2 * q * a0).rem_euclid(period);
                    let angle = -2.0 * std::f64::consts::PI * r as f64 / period as f64;
                    tw.push(Complex64::from_polar(1.0, angle));
                }
            }
            tw
        });
        CellPlan {
            layout,
            rows_inverse: planner.plan_fft_inverse(rows),
            rows_forward: planner.plan_fft_forward(rows),
            cols_inverse: planner.plan_fft_inverse(cols),
            cols_forward: planner.plan_fft_forward(cols),
            twiddle,
            scale: 1.0 / ((rows * cols) as f64).sqrt(),
        }
    }

    /// Folded wedge data `(a0, b0)` to coefficients `(k1, k2)`, in place.
    pub fn analyze(&self, cell: &mut [Complex64]) {
        let (rows, cols) = (self.layout.rows, self.layout.cols);
        let mut scratch = vec![Complex64::default(); self.cols_inverse.get_inplace_scratch_len()];
        for row in cell.chunks_exact_mut(cols) {
            self.cols_inverse.process_with_scratch(row, &mut scratch);
        }
        if let Some(tw) = &self.twiddle {
            cell.iter_mut().zip(tw).for_each(|(v, t)| *v *= t);
        }
        let mut t = transpose(cell, rows, cols);
        scratch.resize(self.rows_inverse.get_inplace_scratch_len(), Complex64::default());
        for col in t.chunks_exact_mut(rows) {
            self.rows_inverse.process_with_scratch(col, &mut scratch);
        }
        let back = transpose(&t, cols, rows);
        for (dst, src) in cell.iter_mut().zip(back) {
            *dst = src * self.scale;
        }
    }

    /// Adjoint (and inverse) of [`CellPlan::analyze`], in place.
    pub fn synthesize(&self, cell: &mut [Complex64]) {
        let (rows, cols) = (self.layout.rows, self.layout.cols);
        let mut t = transpose(cell, rows, cols);
        let mut scratch = vec![Complex64::default(); self.rows_forward.get_inplace_scratch_len()];
        for col in t.chunks_exact_mut(rows) {
            self.rows_forward.process_with_scratch(col, &mut scratch);
        }
        let back = transpose(&t, cols, rows);
        cell.copy_from_slice(&back);
        if let Some(tw) = &self.twiddle {
            cell.iter_mut().zip(tw).for_each(|(v, t)| *v *= t.conj());
        }
        scratch.resize(self.cols_forward.get_inplace_scratch_len(), Complex64::default());
        for row in cell.chunks_exact_mut(cols) {
            self.cols_forward.process_with_scratch(row, &mut scratch);
        }
        cell.iter_mut().for_each(|v| *v *= self.scale);
    }
}
