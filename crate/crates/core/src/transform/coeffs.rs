use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::{FrameParams, WedgeIndex};
use crate::grid::ValueKind;

/// Normalization tag: unitary spectrum and unitary cell DFTs, so no explicit
/// `2^(-j(1+α)/2)` factor appears.
pub const NORM_CONVENTION: &str = "unitary";

/// Identifies a coefficient block. The derived order (coarse, wedges by
/// `(j, ℓ)`, residual) is the scale-then-orientation order used to break ties.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "block", rename_all = "lowercase")]
pub enum BlockId {
    Coarse,
    Wedge(WedgeIndex),
    Residual,
}

/// Curvelet index `μ`: a block and a position `(k1, k2)` in its cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoeffIndex {
    pub block: BlockId,
    pub k: (usize, usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoeffBlock {
    pub id: BlockId,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Complex64>,
}

impl CoeffBlock {
    pub fn get(&self, k1: usize, k2: usize) -> Complex64 {
        self.data[k1 * self.cols + k2]
    }

    pub fn energy(&self) -> f64 {
        self.data.iter().map(|v| v.norm_sqr()).sum()
    }
}

/// All coefficients of one image: coarse block, residual block, then one
/// block per wedge in `(j, ℓ)` order.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientSet {
    pub params: FrameParams,
    pub digest: String,
    pub source: ValueKind,
    pub blocks: Vec<CoeffBlock>,
}

impl CoefficientSet {
    pub fn norm_convention(&self) -> &'static str {
        NORM_CONVENTION
    }

    pub fn block(&self, id: BlockId) -> Option<&CoeffBlock> {
        self.blocks.iter().find(|b| b.id == id)
    }

    pub fn block_mut(&mut self, id: BlockId) -> Option<&mut CoeffBlock> {
        self.blocks.iter_mut().find(|b| b.id == id)
    }

    pub fn coarse(&self) -> &CoeffBlock {
        self.block(BlockId::Coarse).expect("coarse block present")
    }

    pub fn residual(&self) -> &CoeffBlock {
        self.block(BlockId::Residual).expect("residual block present")
    }

    pub fn wedge(&self, index: WedgeIndex) -> Option<&CoeffBlock> {
        self.block(BlockId::Wedge(index))
    }

    pub fn get(&self, index: CoeffIndex) -> Option<Complex64> {
        let b = self.block(index.block)?;
        (index.k.0 < b.rows && index.k.1 < b.cols).then(|| b.get(index.k.0, index.k.1))
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.data.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `Σ_μ |θ_μ|²`.
    pub fn energy(&self) -> f64 {
        self.blocks.iter().map(CoeffBlock::energy).sum()
    }

    /// Scale of a block: 0 for coarse, `j` for wedges, `j_max + 1` for the residual.
    pub fn scale_of(&self, id: BlockId) -> u32 {
        match id {
            BlockId::Coarse => 0,
            BlockId::Wedge(w) => w.j,
            BlockId::Residual => self.params.j_max + 1,
        }
    }

    /// Moduli of every coefficient at scale `j`.
    pub fn scale_moduli(&self, j: u32) -> Vec<f64> {
        self.blocks
            .iter()
            .filter(|b| self.scale_of(b.id) == j)
            .flat_map(|b| b.data.iter().map(|v| v.norm()))
            .collect()
    }

    /// Every coefficient with its index.
    pub fn entries(&self) -> impl Iterator<Item = (CoeffIndex, Complex64)> + '_ {
        self.blocks.iter().flat_map(|b| {
            b.data.iter().enumerate().map(move |(i, v)| {
                (
                    CoeffIndex {
                        block: b.id,
                        k: (i / b.cols, i % b.cols),
                    },
                    *v,
                )
            })
        })
    }

    pub fn zeros_like(&self) -> Self {
        let mut out = self.clone();
        out.blocks
            .iter_mut()
            .for_each(|b| b.data.iter_mut().for_each(|v| *v = Complex64::default()));
        out
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.digest != other.digest {
            return Err(Error::DigestMismatch {
                expected: self.digest.clone(),
                found: other.digest.clone(),
            });
        }
        Ok(())
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: Complex64, other: &Self, b: Complex64) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (dst, src) in out.blocks.iter_mut().zip(&other.blocks) {
            for (x, y) in dst.data.iter_mut().zip(&src.data) {
                *x = a * *x + b * y;
            }
        }
        if out.source == ValueKind::Real && other.source == ValueKind::Complex {
            out.source = ValueKind::Complex;
        }
        Ok(out)
    }

    /// `Σ_μ self_μ conj(other_μ)`.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        self.check_compatible(other)?;
        Ok(self
            .blocks
            .iter()
            .zip(&other.blocks)
            .flat_map(|(a, b)| a.data.iter().zip(&b.data).map(|(x, y)| x * y.conj()))
            .sum())
    }
}
