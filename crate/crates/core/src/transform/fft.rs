//! Unitary 2D DFTs and the centered spectrum layout.

use num_complex::Complex64;
use rustfft::{FftDirection, FftPlanner};

use crate::error::{Error, Result};
use crate::grid::Grid;

/// Unitary spectrum `f̂(ξ) = M⁻¹ Σ_n f(n) e^{-2πi n·ξ/M}` on the centered
/// frequency grid `{-M/2, …, M/2-1}²`, stored row-major by `ξ + M/2`.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    size: usize,
    data: Vec<Complex64>,
}

impl Spectrum {
    pub fn zeros(size: usize) -> Self {
        Spectrum {
            size,
            data: vec![Complex64::new(0.0, 0.0); size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub fn index(&self, xi: [i64; 2]) -> usize {
        let h = (self.size / 2) as i64;
        ((xi[0] + h) as usize) * self.size + (xi[1] + h) as usize
    }

    pub fn get(&self, xi: [i64; 2]) -> Complex64 {
        self.data[self.index(xi)]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.data.iter().map(|v| v.norm_sqr()).sum()
    }
}

/// In-place 2D DFT of a row-major `rows × cols` buffer, unnormalized.
pub fn fft2(buf: &mut [Complex64], rows: usize, cols: usize, direction: FftDirection) {
    debug_assert_eq!(buf.len(), rows * cols);
    let mut planner = FftPlanner::new();
    let row_fft = planner.plan_fft(cols, direction);
    let mut scratch = vec![Complex64::default(); row_fft.get_inplace_scratch_len()];
    for row in buf.chunks_exact_mut(cols) {
        row_fft.process_with_scratch(row, &mut scratch);
    }
    let col_fft = planner.plan_fft(rows, direction);
    let mut transposed = transpose(buf, rows, cols);
    scratch.resize(col_fft.get_inplace_scratch_len(), Complex64::default());
    for col in transposed.chunks_exact_mut(rows) {
        col_fft.process_with_scratch(col, &mut scratch);
    }
    let back = transpose(&transposed, cols, rows);
    buf.copy_from_slice(&back);
}

pub fn transpose(buf: &[Complex64], rows: usize, cols: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::default(); rows * cols];
    for r in 0..rows {
        for c in 0..cols {
            out[c * rows + r] = buf[r * cols + c];
        }
    }
    out
}

/// Moves frequency `k mod M` at natural index to centered index `k + M/2`
/// (and back: the shift by `M/2` is an involution for even `M`).
fn center_shift(buf: &[Complex64], size: usize) -> Vec<Complex64> {
    let h = size / 2;
    let mut out = vec![Complex64::default(); size * size];
    for r in 0..size {
        let rr = (r + h) % size;
        for c in 0..size {
            out[rr * size + (c + h) % size] = buf[r * size + c];
        }
    }
    out
}

/// Unitary forward DFT with centered frequency indexing.
pub fn forward_spectrum(grid: &Grid) -> Spectrum {
    let m = grid.size();
    let mut buf = grid.values().to_vec();
    fft2(&mut buf, m, m, FftDirection::Forward);
    let scale = 1.0 / m as f64;
    buf.iter_mut().for_each(|v| *v *= scale);
    Spectrum {
        size: m,
        data: center_shift(&buf, m),
    }
}

/// Inverse of [`forward_spectrum`].
pub fn inverse_spectrum(spectrum: &Spectrum) -> Grid {
    let m = spectrum.size;
    let mut buf = center_shift(&spectrum.data, m);
    fft2(&mut buf, m, m, FftDirection::Inverse);
    let scale = 1.0 / m as f64;
    buf.iter_mut().for_each(|v| *v *= scale);
    Grid::from_complex(m, buf).expect("inverse DFT of a finite spectrum is finite")
}

impl Spectrum {
    pub fn from_data(size: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != size * size {
            return Err(Error::ShapeMismatch(format!(
                "{} values for a {size}x{size} spectrum",
                data.len()
            )));
        }
        Ok(Spectrum { size, data })
    }
}
